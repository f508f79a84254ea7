#include "coinage/json_io.hpp"

#include <string>
#include <vector>

namespace coinage {

nlohmann::json currency_json(const Currency& currency) {
  return nlohmann::json(currency.coins());
}

Currency currency_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(errc::parse_error, "currency JSON must be an array");
  std::vector<Coin> coins;
  coins.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_number_integer()) {
      fail(errc::parse_error, "currency JSON must hold integers");
    }
    coins.push_back(item.get<Coin>());
  }
  return Currency::from_values(coins);
}

nlohmann::json payment_json(const Payment& payment) {
  return {{"count", payment.count},
          {"multiplicities", payment.multiplicities},
          {"value", payment.value}};
}

nlohmann::json verdict_json(const Currency& currency,
                            const OrderlinessVerdict& verdict) {
  nlohmann::json j{{"currency", currency.coins()},
                   {"orderly", verdict.orderly}};
  if (verdict.counterexample) {
    const Counterexample& cex = *verdict.counterexample;
    j["counterexample"] = {{"amount", cex.amount},
                           {"greedy", cex.greedy.multiplicities},
                           {"optimal", cex.optimal.multiplicities}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

nlohmann::json pattern_json(const Currency& currency,
                            const PlusMinusPattern& pattern) {
  return {{"currency", currency.coins()}, {"pattern", pattern.str()}};
}

nlohmann::json screen_json(const Currency& currency, const ScreenReport& report) {
  nlohmann::json screeners = nlohmann::json::array();
  for (const auto& s : report.screeners) {
    screeners.push_back({{"name", s.name},
                         {"passed", s.passed},
                         {"witness", s.passed ? nlohmann::json() : s.witness}});
  }
  return {{"currency", currency.coins()},
          {"passed_all", report.passed_all},
          {"screeners", screeners}};
}

nlohmann::json heredity_witness_json(const HeredityWitness& witness) {
  return {{"index_set", witness.index_set.indices()},
          {"ambient_k", witness.index_set.ambient_k()},
          {"currency", witness.currency.coins()},
          {"bad_subcurrency", witness.bad_subcurrency.coins()},
          {"counterexample", witness.counterexample}};
}

nlohmann::json finding_json(const Finding& finding) {
  return {{"kind", finding_kind_name(finding.kind)},
          {"currency", finding.currency ? nlohmann::json(finding.currency->coins())
                                        : nlohmann::json()},
          {"detail", finding.detail},
          {"bound", {{"k", finding.bound.k}, {"max_coin", finding.bound.max_coin}}}};
}

nlohmann::json summary_json(const SearchSummary& summary) {
  return {{"kind", "hunt_exhausted"},
          {"processed", summary.processed},
          {"orderly", summary.orderly},
          {"findings", summary.findings}};
}

void write_findings_jsonl(std::ostream& out, const SearchOutcome& outcome) {
  for (const auto& finding : outcome.findings) {
    out << finding_json(finding).dump() << '\n';
  }
  out << summary_json(outcome.summary).dump() << '\n';
}

}  // namespace coinage
