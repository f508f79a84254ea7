#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coinage/core.hpp"
#include "coinage/orderly.hpp"

namespace coinage {

// All currencies (1, a_1, ..., a_k) with a_k <= max_coin; there are
// C(max_coin - 1, k) of them.
struct SearchSpace {
  int k = 0;
  Coin max_coin = 1;
};

std::uint64_t space_size(const SearchSpace& space);

// Visits the space in lexicographic order.
void enumerate(const SearchSpace& space,
               const std::function<void(const Currency&)>& visit);

enum class FindingKind {
  pattern_member,
  screener_violation,
  conjecture_violation,
  hunt_exhausted,
};
const char* finding_kind_name(FindingKind kind) noexcept;

struct Finding {
  FindingKind kind = FindingKind::hunt_exhausted;
  std::optional<Currency> currency;
  nlohmann::json detail;
  SearchSpace bound;  // the space this finding was established within
};

struct SearchSummary {
  std::uint64_t processed = 0;  // currencies given a full verdict
  std::uint64_t orderly = 0;    // orderly ones among those
  std::uint64_t findings = 0;
};

// Findings sorted by (kind, currency, detail); the summary backs the terminal
// record of the JSONL stream. Identical for every jobs value: work splits
// into first-coin subtrees whose results merge in a fixed order.
struct SearchOutcome {
  std::vector<Finding> findings;
  SearchSummary summary;
};

// Currencies whose prefix verdicts spell exactly `pattern`. Walks prefixes
// depth-first and abandons a subtree at the first symbol mismatch, so only
// currencies whose proper prefixes all match are given a final verdict.
SearchOutcome search_pattern_members(const PlusMinusPattern& pattern,
                                     Coin max_coin, int jobs = 1);

// Convenience projection of the above to the member list.
std::vector<Currency> find_pattern_members(const PlusMinusPattern& pattern,
                                           Coin max_coin, int jobs = 1);

// Runs every applicable screener on every orderly currency in the space; any
// failure is a screener_violation finding (there should be none: passing is a
// consequence of orderliness).
SearchOutcome search_screener_soundness(const SearchSpace& space, int jobs = 1);

// Collects the +/- patterns (ending '+', i.e. of orderly currencies) realized
// over the space; a pattern realized by no currency with a_1 = 2 becomes a
// conjecture_violation carrying its lexicographically first representative.
// Patterns with '-' in the last position are out of scope: (1, 2, x) prefixes
// are always orderly, so such classes trivially lack a_1 = 2 members.
SearchOutcome search_hunt_a1_equals_2(const SearchSpace& space, int jobs = 1);

// For every orderly currency and every m >= 3, checks that each difference
// strictly between a_{m-1} and a_m is a_m minus some smaller coin. Breaches
// become conjecture_violation findings. Requires k >= 3.
SearchOutcome search_hunt_s_window(const SearchSpace& space, int jobs = 1);

// Searches the pattern "+++", all '-', final '+' at the lengths with no known
// members: coin counts 3j + 4 (j = 1 .. l_max), i.e. 7, 10, 13, ... Members
// come back as pattern_member findings (each would be news); a memberless
// pattern yields a per-pattern hunt_exhausted record. Both residue
// bookkeepings (coin count and max index, mod 3) ride along in the details.
SearchOutcome search_hunt_messy(int l_max, Coin max_coin, int jobs = 1);

// Straight-line reference implementations: flat lexicographic enumeration and
// a from-scratch pattern per currency, no pruning, no work splitting. Tests
// hold the parallel drivers to these; the bench tool races them.
namespace serial_ref {
SearchOutcome search_pattern_members(const PlusMinusPattern& pattern, Coin max_coin);
SearchOutcome search_screener_soundness(const SearchSpace& space);
SearchOutcome search_hunt_a1_equals_2(const SearchSpace& space);
SearchOutcome search_hunt_s_window(const SearchSpace& space);
SearchOutcome search_hunt_messy(int l_max, Coin max_coin);
}  // namespace serial_ref

}  // namespace coinage
