#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "coinage/core.hpp"

namespace coinage {

// An amount the greedy algorithm overpays, with both payments attached.
struct Counterexample {
  Coin amount = 0;
  Payment greedy;
  Payment optimal;
};

struct OrderlinessVerdict {
  bool orderly = true;
  std::optional<Counterexample> counterexample;
};

// Scan ceiling for counterexamples: a_{k-1} + a_k (1 for the one-coin
// currency). If greedy is ever beaten, it is beaten at or below this amount,
// so scanning up to it decides orderliness outright.
Coin counterexample_bound(const Currency& currency);

// Least amount where the optimal payment beats greedy, or nullopt.
std::optional<Counterexample> smallest_counterexample(const Currency& currency);

// A currency is orderly when greedy is optimal for every amount.
OrderlinessVerdict is_orderly(const Currency& currency);

// Whether one_point_extend and extend_multiple re-verify their "prefix is
// orderly" precondition. Debug builds verify by default; release builds trust
// the caller.
enum class PrefixCheck { trusted, verified };

constexpr PrefixCheck default_prefix_check() noexcept {
#ifdef NDEBUG
  return PrefixCheck::trusted;
#else
  return PrefixCheck::verified;
#endif
}

// Given an orderly currency, decides in O(k) whether appending `next` keeps it
// orderly: with m = ceil(next / a_k), the extension is orderly exactly when
// the old currency pays m*a_k - next greedily with at most m-1 coins.
// Throws not_an_extension when next <= a_k, and prefix_not_orderly when
// verification is requested and the precondition fails.
bool one_point_extend(const Currency& prefix, Coin next,
                      PrefixCheck check = default_prefix_check());

struct TotalOrderliness {
  bool totally = true;
  // Index of the first coin whose prefix breaks orderliness, when not totally
  // orderly. Every prefix before it is orderly.
  std::optional<int> first_bad_prefix;
};

// Checks prefixes in increasing length via one_point_extend, stopping at the
// first failure (beyond it the fast test's precondition no longer holds).
TotalOrderliness is_totally_orderly(const Currency& currency);

// Sequence of '+'/'-' verdicts, one per prefix length; index l describes the
// prefix (a_0, ..., a_l). The first symbol is always '+'.
class PlusMinusPattern {
 public:
  // Parses "+++-+". Rejects other characters, empty input, and a leading '-'
  // (no currency has a disorderly one-coin prefix).
  static PlusMinusPattern parse(std::string_view text);

  const std::string& str() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  char back() const { return symbols_.back(); }

  friend bool operator==(const PlusMinusPattern&, const PlusMinusPattern&) = default;

 private:
  friend PlusMinusPattern pm_pattern(const Currency&);
  explicit PlusMinusPattern(std::string symbols) : symbols_(std::move(symbols)) {}
  std::string symbols_;
};

// Computes the pattern with a full orderliness verdict per prefix. (The fast
// extension test cannot be chained here: it needs an orderly base, and
// prefixes after the first '-' do not have one.)
PlusMinusPattern pm_pattern(const Currency& currency);

// A pattern is proper when it ends with '+' and, from length 3 on, starts
// with "+++". Only proper patterns can describe orderly currencies.
bool is_proper_pattern(const PlusMinusPattern& pattern);

}  // namespace coinage
