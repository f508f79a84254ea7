#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coinage/core.hpp"

namespace coinage {

// Membership in the amount set A(a) = union over m >= 1 of the integer
// windows [m*a - m, m*a]. Decided in O(1) through the complement: an x >= 2
// lies outside exactly when p*a + 1 <= x <= (p+1)*a - (p+2) for some p >= 0,
// and nothing below a - 1 is a member. Requires a >= 2.
bool in_A(Coin a, Coin x);

// Non-members of A(a) in [1, limit], ascending.
std::vector<Coin> A_nonmembers(Coin a, Coin limit);

// All pairwise coin differences, ascending and deduplicated. Needs at least
// two coins (single_coin otherwise).
std::vector<Coin> diff_set(const Currency& currency);

// One screener outcome. Screeners check conditions every orderly currency
// satisfies; a failure certifies disorder, a pass proves nothing. The witness
// pins down the first violated condition and is null on a pass.
struct ScreenerResult {
  std::string name;
  bool passed = true;
  nlohmann::json witness;  // null when passed
};

// No two coins differ by exactly 1 once a_1 >= 3 (trivially passes when
// a_1 < 3).
ScreenerResult screen_gap_not_one(const Currency& currency);

// Every consecutive gap is at least a_1 - 1.
ScreenerResult screen_gap_min(const Currency& currency);

// Every pairwise difference is a member of A(a_1). Needs k >= 1.
ScreenerResult screen_diffs_in_A(const Currency& currency);

// Difference windows below a_2, keyed on how a_2 compares with 2*a_1.
// Windows written (1, x) include 1 itself; windows between coins stay open.
//   always: diffs in (1, a_1) only a_1 - 1; diffs in (a_1, a_2) only
//           a_2 - a_1 or a_2 - 1
//   a_2 in {2*a_1 - 1, 2*a_1}: diffs in (1, a_2) within {a_1 - 1, a_1, a_2 - 1}
//   a_2 > 2*a_1: diffs in (1, a_2) are exactly {a_1 - 1, a_2 - a_1, a_2 - 1}
// Needs k >= 2 (too_few_coins otherwise).
ScreenerResult screen_s_window(const Currency& currency);

// After two consecutive more-than-doubling steps (a_{m-1} > 2*a_{m-2} and
// a_m > 2*a_{m-1}), every later gap is at least a_m - a_{m-1}. Needs k >= 2.
ScreenerResult screen_big_diff(const Currency& currency);

struct ScreenReport {
  std::vector<ScreenerResult> screeners;
  bool passed_all = true;
};

// Runs every screener applicable to the currency's length, in a fixed order.
ScreenReport screen_report(const Currency& currency);

// Exact decision for (1, a_1, a_2): orderly iff a_2 - a_1 is in A(a_1).
// wrong_length unless the currency has three coins.
bool classify_three(const Currency& currency);

// Exact decision for four coins: orderly iff totally orderly.
bool classify_four(const Currency& currency);

enum class FiveCoinCase { totally_orderly, special_family, disorderly };
const char* five_coin_case_name(FiveCoinCase tag) noexcept;

struct FiveCoinClass {
  bool orderly = false;
  FiveCoinCase tag = FiveCoinCase::disorderly;
};

// Exact decision for five coins: orderly iff totally orderly or of the shape
// (1, 2, a, a+1, 2a) with a >= 4 (the only orderly five-coin currencies with
// a disorderly prefix).
FiveCoinClass classify_five(const Currency& currency);

}  // namespace coinage
