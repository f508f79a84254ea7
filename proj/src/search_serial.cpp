#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "coinage/orderly.hpp"
#include "coinage/search.hpp"
#include "search_detail.hpp"

namespace coinage::serial_ref {

SearchOutcome search_pattern_members(const PlusMinusPattern& pattern,
                                     Coin max_coin) {
  if (max_coin < 1) fail(errc::bad_parameter, "max_coin must be positive");
  const int k = static_cast<int>(pattern.size()) - 1;
  const SearchSpace space{k, max_coin};
  SearchOutcome out;
  enumerate(space, [&](const Currency& currency) {
    ++out.summary.processed;
    const PlusMinusPattern actual = pm_pattern(currency);
    if (actual.back() == '+') ++out.summary.orderly;
    if (actual == pattern) {
      out.findings.push_back({FindingKind::pattern_member,
                              currency,
                              {{"pattern", pattern.str()}},
                              space});
    }
  });
  detail::finalize(out);
  return out;
}

SearchOutcome search_screener_soundness(const SearchSpace& space) {
  detail::check_space(space);
  SearchOutcome out;
  enumerate(space, [&](const Currency& currency) {
    ++out.summary.processed;
    if (!is_orderly(currency).orderly) return;
    ++out.summary.orderly;
    detail::append_soundness_findings(currency, space, out.findings);
  });
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_a1_equals_2(const SearchSpace& space) {
  detail::check_space(space);
  struct PatternInfo {
    bool has_a1_2 = false;
    std::optional<Currency> representative;
    std::uint64_t count = 0;
  };
  std::map<std::string, PatternInfo> patterns;
  SearchOutcome out;
  enumerate(space, [&](const Currency& currency) {
    ++out.summary.processed;
    const PlusMinusPattern actual = pm_pattern(currency);
    if (actual.back() != '+') return;
    ++out.summary.orderly;
    if (currency.size() < 2) return;
    PatternInfo& info = patterns[actual.str()];
    ++info.count;
    if (currency[1] == 2) info.has_a1_2 = true;
    // Lexicographic enumeration: the first member seen is the smallest.
    if (!info.representative) info.representative = currency;
  });
  for (const auto& [text, info] : patterns) {
    if (info.has_a1_2) continue;
    out.findings.push_back({FindingKind::conjecture_violation,
                            info.representative,
                            {{"pattern", text},
                             {"realized", info.count},
                             {"a1_equals_2_found", false}},
                            space});
  }
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_s_window(const SearchSpace& space) {
  detail::check_space(space);
  if (space.k < 3) {
    fail(errc::too_few_coins, "window hunt needs at least four coins");
  }
  SearchOutcome out;
  enumerate(space, [&](const Currency& currency) {
    ++out.summary.processed;
    if (!is_orderly(currency).orderly) return;
    ++out.summary.orderly;
    detail::append_swindow_findings(currency, space, out.findings);
  });
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_messy(int l_max, Coin max_coin) {
  if (l_max < 1) fail(errc::bad_parameter, "l_max must be positive");
  if (max_coin < 1) fail(errc::bad_parameter, "max_coin must be positive");
  SearchOutcome out;
  for (int j = 1; j <= l_max; ++j) {
    const PlusMinusPattern pattern = detail::messy_pattern(j);
    const std::string text = pattern.str();
    const SearchSpace space{static_cast<int>(pattern.size()) - 1, max_coin};
    SearchOutcome sub = serial_ref::search_pattern_members(pattern, max_coin);
    out.summary.processed += sub.summary.processed;
    out.summary.orderly += sub.summary.orderly;
    const bool any_member = !sub.findings.empty();
    for (auto& finding : sub.findings) {
      finding.detail = detail::messy_detail(text);
      out.findings.push_back(std::move(finding));
    }
    if (!any_member) {
      nlohmann::json payload = detail::messy_detail(text);
      payload["members"] = 0;
      out.findings.push_back(
          {FindingKind::hunt_exhausted, std::nullopt, payload, space});
    }
  }
  detail::finalize(out);
  return out;
}

}  // namespace coinage::serial_ref
