#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coinage/core.hpp"
#include "coinage/orderly.hpp"

namespace coinage {

// A set of coin positions inside an ambient currency of max index k. Always
// contains 0 (a sub-currency must keep the coin 1), strictly increasing,
// every index within [0, k].
class IndexSet {
 public:
  static IndexSet from_indices(std::vector<int> indices, int ambient_k);
  // Parses "0,2,3" (spaces tolerated).
  static IndexSet parse(std::string_view text, int ambient_k);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int ambient_k() const noexcept { return ambient_k_; }
  bool is_full() const noexcept {
    return static_cast<int>(indices_.size()) == ambient_k_ + 1;
  }
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet(std::vector<int> indices, int ambient_k)
      : indices_(std::move(indices)), ambient_k_(ambient_k) {}
  std::vector<int> indices_;
  int ambient_k_;
};

// Heredity of an index set P: whether every orderly currency of the ambient
// length has an orderly sub-currency at P. The shapes below are the ones for
// which that holds (type4 only conjecturally); {0,1,2,3} fails in a way all
// other {0,1,2,l} shapes do not, so it gets its own tag.
enum class HeredityClass {
  type1,             // {0}
  type2,             // {0, l}
  type3,             // {0, 1, l}
  type4_conjectured, // {0, 1, 2, l}, l >= 4
  type5,             // the full index set
  degenerate_0123,   // exactly {0,1,2,3} inside a longer currency
  not_hereditary,
};
const char* heredity_class_name(HeredityClass tag) noexcept;

// (1, 2, ..., l-1, 2l-2, 2l-1, 4l-4) for l >= 3: orderly, and its pattern has
// a single '-', at position l (second to last).
Currency gen_B(int l);

// (1, 2, ..., l, p*l, (2p-1)*l, (3p-2)*l, ...) with m+1 coins total, for
// m > l >= 2 and p >= 2: totally orderly, and when p > m - l the largest coin
// needs exactly m - l + 1 copies of a_l to cover (ceil(a_m / a_l) = m-l+1).
// p = 1 would repeat the coin l (not_increasing).
Currency gen_A_family(int l, int m, int p);

// Appends mult * a_k (mult >= 2), which preserves orderliness. Verifies the
// base currency when asked.
Currency extend_multiple(const Currency& currency, Coin mult,
                         PrefixCheck check = default_prefix_check());

// Representatives whose pattern is "+++", then all '-', then a final '+'.
// Both variants start with the pairs (1,2), (4,5), ..., (3l-2, 3l-1); the
// long tail is 3l+1, 3l+4, ..., 6l-2 (3l coins total), the short tail is
// 3l+2, 3l+5, ..., 6l-4 (3l-1 coins). Patterns are pinned by tests, not
// assumed. Requires l >= 2.
enum class MessyVariant { long_tail, short_tail };
Currency gen_messy(int l, MessyVariant variant);

// Coins of `currency` at the positions in P. P's ambient length must match.
Currency subcurrency(const Currency& currency, const IndexSet& P);

HeredityClass classify_index_set(const IndexSet& P);

// Certificate that P is not hereditary: an orderly currency whose
// sub-currency at P is disorderly, with an amount where greedy overpays it.
struct HeredityWitness {
  IndexSet index_set;
  Currency currency;
  Currency bad_subcurrency;
  Coin counterexample = 0;
};

// Builds the certificate for a not_hereditary or degenerate_0123 index set
// (not_applicable otherwise). With r the longest run {0..r} inside P: r >= 3
// uses the B generator (its prefix through position r is disorderly); r <= 2
// uses the A-family on P's next two indices l < m with p = m - l + 1, whose
// sub-currency (1, ..., r+1, a_l, a_m) greedily overpays (m-l+1)*a_l. When
// the base is shorter than the ambient length it is padded with a ladder
// M, 2M, 3M, ... where M is the smallest multiple of the top coin beyond the
// counterexample, keeping the padding inert at that amount.
HeredityWitness non_hereditary_witness(const IndexSet& P);

// For each l in [4, k], whether the four-coin sub-currency (1, a_1, a_2, a_l)
// of an orderly currency stays orderly ({0,1,2,l} heredity probed pointwise).
// proved_case reports whether a_2 > 2*a_1 and a_3 > 2*a_2, the hypothesis
// under which the property is a theorem rather than a conjecture.
struct Type4Report {
  bool holds = true;
  std::vector<int> violations;  // offending l values
  bool proved_case = false;
};

// Requires k >= 4 (too_short) and an orderly input (prefix_not_orderly).
Type4Report check_type4(const Currency& currency);

}  // namespace coinage
