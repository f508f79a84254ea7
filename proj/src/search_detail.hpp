#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coinage/orderly.hpp"
#include "coinage/screen.hpp"
#include "coinage/search.hpp"

namespace coinage::detail {

inline void check_space(const SearchSpace& space) {
  if (space.k < 0) fail(errc::bad_parameter, "coin index bound must be nonnegative");
  if (space.max_coin < 1) fail(errc::bad_parameter, "max_coin must be positive");
}

// Deterministic finding order: kind, then currency (absent first), then the
// serialized detail as a final tiebreak.
inline void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) {
                     if (a.kind != b.kind) {
                       return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                     }
                     static const std::vector<Coin> none;
                     const auto& ca = a.currency ? a.currency->coins() : none;
                     const auto& cb = b.currency ? b.currency->coins() : none;
                     if (ca != cb) {
                       return std::lexicographical_compare(ca.begin(), ca.end(),
                                                           cb.begin(), cb.end());
                     }
                     return a.detail.dump() < b.detail.dump();
                   });
}

inline void finalize(SearchOutcome& out) {
  sort_findings(out.findings);
  out.summary.findings = out.findings.size();
}

// Screener failures for one orderly currency. Shared by the parallel driver
// and the serial reference so both emit identical findings.
inline void append_soundness_findings(const Currency& currency,
                                      const SearchSpace& space,
                                      std::vector<Finding>& out) {
  const ScreenReport report = screen_report(currency);
  if (report.passed_all) return;
  for (const auto& s : report.screeners) {
    if (s.passed) continue;
    out.push_back({FindingKind::screener_violation,
                   currency,
                   {{"screener", s.name}, {"witness", s.witness}},
                   space});
  }
}

// Window breaches for one orderly currency: a difference strictly between
// a_{m-1} and a_m (m >= 3) that is not a_m minus a smaller coin.
inline void append_swindow_findings(const Currency& currency,
                                    const SearchSpace& space,
                                    std::vector<Finding>& out) {
  const std::vector<Coin> diffs = diff_set(currency);
  for (int m = 3; m <= currency.max_index(); ++m) {
    const Coin lo = currency[m - 1];
    const Coin hi = currency[m];
    std::vector<Coin> allowed;
    allowed.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) allowed.push_back(currency[m] - currency[i]);
    std::sort(allowed.begin(), allowed.end());
    for (const Coin d : diffs) {
      if (d <= lo || d >= hi) continue;
      if (std::binary_search(allowed.begin(), allowed.end(), d)) continue;
      out.push_back({FindingKind::conjecture_violation,
                     currency,
                     {{"m", m},
                      {"difference", d},
                      {"window", {lo, hi}},
                      {"allowed", allowed}},
                     space});
    }
  }
}

// Shared detail payload for the messy-pattern hunt, carrying both residue
// bookkeepings of the pattern's size.
inline nlohmann::json messy_detail(const std::string& pattern_text) {
  const auto coins = static_cast<long long>(pattern_text.size());
  return {{"pattern", pattern_text},
          {"coins", coins},
          {"coins_mod3", coins % 3},
          {"max_index", coins - 1},
          {"max_index_mod3", (coins - 1) % 3}};
}

// The hunted pattern with 3j + 4 symbols: "+++", all '-', final '+'.
inline PlusMinusPattern messy_pattern(int j) {
  const int coins = 3 * j + 4;
  std::string text = "+++";
  text.append(static_cast<std::size_t>(coins - 4), '-');
  text.push_back('+');
  return PlusMinusPattern::parse(text);
}

}  // namespace coinage::detail
