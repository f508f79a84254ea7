// Command-line front end: every library operation behind one binary.
//
// Exit codes: 0 = success / property holds; 1 = usage, parse, or input error;
// 2 = property violation or counterexample (orderly/classify verdicts, screen
// with --expect-pass, search with --fail-on-finding).

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "coinage/core.hpp"
#include "coinage/families.hpp"
#include "coinage/json_io.hpp"
#include "coinage/orderly.hpp"
#include "coinage/screen.hpp"
#include "coinage/search.hpp"

namespace {

using namespace coinage;

void apply_dp_guard_env() {
  const char* raw = std::getenv("COINAGE_DP_GUARD");
  if (raw == nullptr) return;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    fail(errc::parse_error, "COINAGE_DP_GUARD must be a positive integer");
  }
  set_dp_guard(value);
}

std::string coin_word(Coin n) { return n == 1 ? "coin" : "coins"; }

void print_payment_line(const Currency& currency, const char* label,
                        const Payment& payment) {
  std::cout << label << ": " << payment.count << ' ' << coin_word(payment.count);
  if (payment.count > 0) {
    std::cout << " (" << format_payment(currency, payment) << ')';
  }
  std::cout << '\n';
}

int run_pay(const std::string& currency_text, Coin amount,
            const std::string& mode, bool json) {
  const Currency currency = Currency::parse(currency_text);
  if (amount < 0) fail(errc::bad_parameter, "amount must be nonnegative");
  const bool want_greedy = mode != "optimal";
  const bool want_optimal = mode != "greedy";
  std::optional<Payment> greedy;
  std::optional<Payment> optimal;
  if (want_greedy) greedy = greedy_pay(currency, amount);
  if (want_optimal) optimal = opt_pay(currency, amount);
  if (json) {
    nlohmann::json j{{"amount", amount}, {"currency", currency.coins()}};
    if (greedy) j["greedy"] = payment_json(*greedy);
    if (optimal) j["optimal"] = payment_json(*optimal);
    std::cout << j.dump() << '\n';
  } else {
    if (greedy) print_payment_line(currency, "greedy", *greedy);
    if (optimal) print_payment_line(currency, "optimal", *optimal);
  }
  return 0;
}

int run_orderly(const std::string& currency_text, bool json) {
  const Currency currency = Currency::parse(currency_text);
  const OrderlinessVerdict verdict = is_orderly(currency);
  if (json) {
    std::cout << verdict_json(currency, verdict).dump() << '\n';
  } else if (verdict.orderly) {
    std::cout << "orderly\n";
  } else {
    const Counterexample& cex = *verdict.counterexample;
    std::cout << "counterexample " << cex.amount << ": greedy "
              << cex.greedy.count << " vs optimal " << cex.optimal.count
              << '\n';
  }
  return verdict.orderly ? 0 : 2;
}

int run_pattern(const std::string& currency_text, bool json) {
  const Currency currency = Currency::parse(currency_text);
  const PlusMinusPattern pattern = pm_pattern(currency);
  if (json) {
    std::cout << pattern_json(currency, pattern).dump() << '\n';
  } else {
    std::cout << pattern.str() << '\n';
  }
  return 0;
}

int run_screen(const std::string& currency_text, bool json, bool expect_pass) {
  const Currency currency = Currency::parse(currency_text);
  const ScreenReport report = screen_report(currency);
  if (json) {
    std::cout << screen_json(currency, report).dump() << '\n';
  } else {
    for (const auto& s : report.screeners) {
      std::cout << s.name << ": " << (s.passed ? "pass" : "FAIL");
      if (!s.passed) std::cout << ' ' << s.witness.dump();
      std::cout << '\n';
    }
    std::cout << "screen: " << (report.passed_all ? "pass" : "FAIL") << '\n';
  }
  return (!report.passed_all && expect_pass) ? 2 : 0;
}

int run_classify(const std::string& currency_text, const std::string& mode,
                 bool json) {
  const Currency currency = Currency::parse(currency_text);
  if (mode == "type4") {
    const Type4Report report = check_type4(currency);
    if (json) {
      std::cout << nlohmann::json{{"currency", currency.coins()},
                                  {"holds", report.holds},
                                  {"proved_case", report.proved_case},
                                  {"violations", report.violations}}
                       .dump()
                << '\n';
    } else if (report.holds) {
      std::cout << "holds" << (report.proved_case ? " (proved case)" : "")
                << '\n';
    } else {
      std::cout << "violations at l =";
      for (const int l : report.violations) std::cout << ' ' << l;
      std::cout << '\n';
    }
    return report.holds ? 0 : 2;
  }
  bool orderly = false;
  std::optional<FiveCoinCase> tag;
  switch (currency.size()) {
    case 3:
      orderly = classify_three(currency);
      break;
    case 4:
      orderly = classify_four(currency);
      break;
    case 5: {
      const FiveCoinClass cls = classify_five(currency);
      orderly = cls.orderly;
      tag = cls.tag;
      break;
    }
    default:
      fail(errc::wrong_length, "exact classification covers 3, 4, or 5 coins");
  }
  if (json) {
    nlohmann::json j{{"coins", currency.size()},
                     {"currency", currency.coins()},
                     {"orderly", orderly}};
    if (tag) j["tag"] = five_coin_case_name(*tag);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (orderly ? "orderly" : "disorderly");
    if (tag) std::cout << " (" << five_coin_case_name(*tag) << ')';
    std::cout << '\n';
  }
  return orderly ? 0 : 2;
}

int ambient_from(const std::optional<std::string>& currency_text,
                 const std::optional<int>& k) {
  if (k) return *k;
  if (currency_text) return Currency::parse(*currency_text).max_index();
  fail(errc::bad_parameter, "need --k or --currency to fix the ambient length");
}

int run_sub(const std::optional<std::string>& currency_text,
            const std::string& indices_text, const std::optional<int>& k,
            const std::string& mode, bool json) {
  if (mode == "extract") {
    if (!currency_text) {
      fail(errc::bad_parameter, "extract mode needs --currency");
    }
    const Currency currency = Currency::parse(*currency_text);
    const IndexSet P = IndexSet::parse(indices_text, currency.max_index());
    const Currency sub = subcurrency(currency, P);
    if (json) {
      std::cout << nlohmann::json{{"currency", currency.coins()},
                                  {"indices", P.indices()},
                                  {"subcurrency", sub.coins()}}
                       .dump()
                << '\n';
    } else {
      std::cout << sub.str() << '\n';
    }
    return 0;
  }
  const int ambient = ambient_from(currency_text, k);
  const IndexSet P = IndexSet::parse(indices_text, ambient);
  if (mode == "classify") {
    const HeredityClass cls = classify_index_set(P);
    if (json) {
      std::cout << nlohmann::json{{"ambient_k", P.ambient_k()},
                                  {"class", heredity_class_name(cls)},
                                  {"indices", P.indices()}}
                       .dump()
                << '\n';
    } else {
      std::cout << heredity_class_name(cls) << '\n';
    }
    return 0;
  }
  // witness
  const HeredityWitness witness = non_hereditary_witness(P);
  if (json) {
    std::cout << heredity_witness_json(witness).dump() << '\n';
  } else {
    std::cout << "index set: " << witness.index_set.str() << " (ambient k="
              << witness.index_set.ambient_k() << ")\n"
              << "currency: " << witness.currency.str() << '\n'
              << "subcurrency: " << witness.bad_subcurrency.str() << '\n'
              << "counterexample: " << witness.counterexample << '\n';
  }
  return 0;
}

int run_gen(const std::string& family, int l, const std::optional<int>& m,
            const std::optional<int>& p, const std::string& mode, bool json) {
  Currency currency = Currency::from_values({1});
  nlohmann::json j{{"family", family}, {"l", l}};
  if (family == "B") {
    currency = gen_B(l);
  } else if (family == "A") {
    if (!m || !p) fail(errc::bad_parameter, "family A needs --m and --p");
    currency = gen_A_family(l, *m, *p);
    j["m"] = *m;
    j["p"] = *p;
  } else {  // messy
    const MessyVariant variant =
        mode == "short" ? MessyVariant::short_tail : MessyVariant::long_tail;
    currency = gen_messy(l, variant);
    j["variant"] = mode;
  }
  if (json) {
    j["currency"] = currency.coins();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << currency.str() << '\n';
  }
  return 0;
}

int emit_search(const SearchOutcome& outcome, const std::string& out_path,
                bool fail_on_finding) {
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) fail(errc::bad_parameter, "cannot open output file " + out_path);
    write_findings_jsonl(file, outcome);
  } else {
    write_findings_jsonl(std::cout, outcome);
  }
  std::uint64_t violations = 0;
  for (const auto& f : outcome.findings) {
    if (f.kind != FindingKind::hunt_exhausted) ++violations;
  }
  std::cerr << "processed " << outcome.summary.processed << " currencies ("
            << outcome.summary.orderly << " orderly), "
            << outcome.summary.findings << " finding(s)\n";
  return (fail_on_finding && violations > 0) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"change-making combinatorics toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  const unsigned hw = std::thread::hardware_concurrency();
  const int default_jobs = hw > 0 ? static_cast<int>(hw) : 1;

  // pay
  std::string pay_currency;
  Coin pay_amount = 0;
  std::string pay_mode = "both";
  bool pay_json = false;
  auto* pay = app.add_subcommand("pay", "pay an amount greedily and/or optimally");
  pay->add_option("-c,--currency", pay_currency, "coins, e.g. 1,2,5")->required();
  pay->add_option("-a,--amount", pay_amount, "amount to pay")->required();
  pay->add_option("--mode", pay_mode, "greedy, optimal, or both")
      ->check(CLI::IsMember({"greedy", "optimal", "both"}));
  pay->add_flag("--json", pay_json, "JSON output");
  pay->callback([&] { exit_code = run_pay(pay_currency, pay_amount, pay_mode, pay_json); });

  // orderly
  std::string ord_currency;
  bool ord_json = false;
  auto* ord = app.add_subcommand("orderly", "decide whether greedy is always optimal");
  ord->add_option("-c,--currency", ord_currency, "coins")->required();
  ord->add_flag("--json", ord_json, "JSON output");
  ord->callback([&] { exit_code = run_orderly(ord_currency, ord_json); });

  // pattern
  std::string pat_currency;
  bool pat_json = false;
  auto* pat = app.add_subcommand("pattern", "per-prefix orderliness pattern");
  pat->add_option("-c,--currency", pat_currency, "coins")->required();
  pat->add_flag("--json", pat_json, "JSON output");
  pat->callback([&] { exit_code = run_pattern(pat_currency, pat_json); });

  // screen
  std::string scr_currency;
  bool scr_json = false;
  bool scr_expect_pass = false;
  auto* scr = app.add_subcommand("screen", "run the necessary-condition screeners");
  scr->add_option("-c,--currency", scr_currency, "coins")->required();
  scr->add_flag("--json", scr_json, "JSON output");
  scr->add_flag("--expect-pass", scr_expect_pass, "exit 2 on any violation");
  scr->callback([&] { exit_code = run_screen(scr_currency, scr_json, scr_expect_pass); });

  // classify
  std::string cls_currency;
  std::string cls_mode = "exact";
  bool cls_json = false;
  auto* cls = app.add_subcommand("classify",
                                 "exact 3/4/5-coin classifiers or the four-coin "
                                 "sub-currency probe");
  cls->add_option("-c,--currency", cls_currency, "coins")->required();
  cls->add_option("--mode", cls_mode, "exact or type4")
      ->check(CLI::IsMember({"exact", "type4"}));
  cls->add_flag("--json", cls_json, "JSON output");
  cls->callback([&] { exit_code = run_classify(cls_currency, cls_mode, cls_json); });

  // sub
  std::optional<std::string> sub_currency;
  std::string sub_indices;
  std::optional<int> sub_k;
  std::string sub_mode = "extract";
  bool sub_json = false;
  auto* sub = app.add_subcommand("sub", "index-set sub-currency operations");
  sub->add_option("-c,--currency", sub_currency, "coins (extract mode, or to fix k)");
  sub->add_option("--indices", sub_indices, "index set, e.g. 0,1,3")->required();
  sub->add_option("--k", sub_k, "ambient max index (classify/witness modes)");
  sub->add_option("--mode", sub_mode, "extract, classify, or witness")
      ->check(CLI::IsMember({"extract", "classify", "witness"}));
  sub->add_flag("--json", sub_json, "JSON output");
  sub->callback([&] {
    exit_code = run_sub(sub_currency, sub_indices, sub_k, sub_mode, sub_json);
  });

  // gen
  std::string gen_family;
  int gen_l = 0;
  std::optional<int> gen_m;
  std::optional<int> gen_p;
  std::string gen_mode = "long";
  bool gen_json = false;
  auto* gen = app.add_subcommand("gen", "generate a family representative");
  gen->add_option("--family", gen_family, "B, A, or messy")
      ->required()
      ->check(CLI::IsMember({"B", "A", "messy"}));
  gen->add_option("--l", gen_l, "family parameter l")->required();
  gen->add_option("--m", gen_m, "family A parameter m");
  gen->add_option("--p", gen_p, "family A parameter p");
  gen->add_option("--mode", gen_mode, "messy tail variant: long or short")
      ->check(CLI::IsMember({"long", "short"}));
  gen->add_flag("--json", gen_json, "JSON output");
  gen->callback([&] {
    exit_code = run_gen(gen_family, gen_l, gen_m, gen_p, gen_mode, gen_json);
  });

  // search
  auto* search = app.add_subcommand("search", "bounded exhaustive searches (JSONL)");
  search->require_subcommand(1);
  std::string se_pattern_text;
  int se_k = 0;
  Coin se_max_coin = 0;
  int se_l_max = 1;
  int se_jobs = default_jobs;
  std::string se_out;
  bool se_fail_on_finding = false;
  auto add_stream_opts = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", se_jobs, "worker count")->check(CLI::PositiveNumber);
    cmd->add_option("--out", se_out, "write JSONL here instead of stdout");
    cmd->add_flag("--fail-on-finding", se_fail_on_finding,
                  "exit 2 if any non-exhaustion finding appears");
  };

  auto* se_members = search->add_subcommand("pattern-members",
                                            "currencies realizing a +/- pattern");
  se_members->add_option("--pattern", se_pattern_text, "pattern, e.g. +++-+")->required();
  se_members->add_option("--max-coin", se_max_coin, "largest coin bound")->required();
  add_stream_opts(se_members);
  se_members->callback([&] {
    const PlusMinusPattern pattern = PlusMinusPattern::parse(se_pattern_text);
    exit_code = emit_search(search_pattern_members(pattern, se_max_coin, se_jobs),
                            se_out, se_fail_on_finding);
  });

  auto* se_sound = search->add_subcommand(
      "soundness", "screeners must pass on every orderly currency");
  se_sound->add_option("--k", se_k, "max coin index")->required();
  se_sound->add_option("--max-coin", se_max_coin, "largest coin bound")->required();
  add_stream_opts(se_sound);
  se_sound->callback([&] {
    exit_code = emit_search(search_screener_soundness({se_k, se_max_coin}, se_jobs),
                            se_out, se_fail_on_finding);
  });

  auto* se_a1 = search->add_subcommand(
      "hunt-a1", "orderly patterns should have an a_1=2 representative");
  se_a1->add_option("--k", se_k, "max coin index")->required();
  se_a1->add_option("--max-coin", se_max_coin, "largest coin bound")->required();
  add_stream_opts(se_a1);
  se_a1->callback([&] {
    exit_code = emit_search(search_hunt_a1_equals_2({se_k, se_max_coin}, se_jobs),
                            se_out, se_fail_on_finding);
  });

  auto* se_window = search->add_subcommand(
      "hunt-swindow", "differences inside high coin windows");
  se_window->add_option("--k", se_k, "max coin index (>= 3)")->required();
  se_window->add_option("--max-coin", se_max_coin, "largest coin bound")->required();
  add_stream_opts(se_window);
  se_window->callback([&] {
    exit_code = emit_search(search_hunt_s_window({se_k, se_max_coin}, se_jobs),
                            se_out, se_fail_on_finding);
  });

  auto* se_messy = search->add_subcommand(
      "hunt-messy", "member hunt for the conjecturally empty messy lengths");
  se_messy->add_option("--l-max", se_l_max, "test patterns with 3j+4 symbols, j <= l-max")
      ->required();
  se_messy->add_option("--max-coin", se_max_coin, "largest coin bound")->required();
  add_stream_opts(se_messy);
  se_messy->callback([&] {
    exit_code = emit_search(search_hunt_messy(se_l_max, se_max_coin, se_jobs),
                            se_out, se_fail_on_finding);
  });

  try {
    apply_dp_guard_env();
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const coinage::Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
