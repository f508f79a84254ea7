// Races the serial reference sweeps against the task-parallel drivers on the
// same bounds, checks the outputs agree byte for byte, and prints timings.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "coinage/json_io.hpp"
#include "coinage/search.hpp"

namespace {

using namespace coinage;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string jsonl(const SearchOutcome& outcome) {
  std::ostringstream out;
  write_findings_jsonl(out, outcome);
  return out.str();
}

struct Row {
  std::string name;
  double serial_s = 0;
  double par1_s = 0;
  double parN_s = 0;
  bool match = true;
};

void print_row(const Row& row, int jobs) {
  std::cout << row.name << ": serial " << row.serial_s << "s, jobs=1 "
            << row.par1_s << "s, jobs=" << jobs << ' ' << row.parN_s << "s, "
            << (row.match ? "outputs match" : "OUTPUTS DIFFER") << '\n';
}

template <typename SerialFn, typename ParallelFn>
Row race(const std::string& name, SerialFn serial, ParallelFn parallel, int jobs) {
  Row row;
  row.name = name;
  auto t0 = Clock::now();
  const SearchOutcome ref = serial();
  row.serial_s = seconds_since(t0);
  t0 = Clock::now();
  const SearchOutcome one = parallel(1);
  row.par1_s = seconds_since(t0);
  t0 = Clock::now();
  const SearchOutcome many = parallel(jobs);
  row.parN_s = seconds_since(t0);
  const std::string ref_text = jsonl(ref);
  // The pattern sweeps prune, so their processed counts legitimately differ
  // from the flat reference; compare the finding lines only.
  const auto findings_only = [](const std::string& text) {
    return text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  };
  row.match = findings_only(ref_text) == findings_only(jsonl(one)) &&
              jsonl(one) == jsonl(many);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs parallel search timing"};
  int k = 4;
  Coin max_coin = 18;
  Coin members_max_coin = 20;
  int jobs = [] {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
  }();
  app.add_option("--k", k, "max coin index for the space sweeps");
  app.add_option("--max-coin", max_coin, "largest coin for the space sweeps");
  app.add_option("--members-max-coin", members_max_coin,
                 "largest coin for the pattern member sweep");
  app.add_option("--jobs", jobs, "parallel worker count");
  CLI11_PARSE(app, argc, argv);

  const SearchSpace space{k, max_coin};
  bool all_match = true;

  Row row = race(
      "soundness", [&] { return serial_ref::search_screener_soundness(space); },
      [&](int j) { return search_screener_soundness(space, j); }, jobs);
  print_row(row, jobs);
  all_match = all_match && row.match;

  row = race(
      "hunt-a1", [&] { return serial_ref::search_hunt_a1_equals_2(space); },
      [&](int j) { return search_hunt_a1_equals_2(space, j); }, jobs);
  print_row(row, jobs);
  all_match = all_match && row.match;

  if (k >= 3) {
    row = race(
        "hunt-swindow", [&] { return serial_ref::search_hunt_s_window(space); },
        [&](int j) { return search_hunt_s_window(space, j); }, jobs);
    print_row(row, jobs);
    all_match = all_match && row.match;
  }

  const PlusMinusPattern pattern = PlusMinusPattern::parse("+++-+");
  row = race(
      "pattern-members +++-+",
      [&] { return serial_ref::search_pattern_members(pattern, members_max_coin); },
      [&](int j) { return search_pattern_members(pattern, members_max_coin, j); },
      jobs);
  print_row(row, jobs);
  all_match = all_match && row.match;

  if (!all_match) {
    std::cerr << "mismatch between serial reference and parallel results\n";
    return 1;
  }
  return 0;
}
