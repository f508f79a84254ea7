#include "coinage/families.hpp"

#include <charconv>

namespace coinage {

IndexSet IndexSet::from_indices(std::vector<int> indices, int ambient_k) {
  if (ambient_k < 0) fail(errc::bad_parameter, "ambient length must be nonnegative");
  if (indices.empty()) fail(errc::empty_input, "an index set needs at least one index");
  if (indices.front() != 0) fail(errc::missing_zero, "an index set must contain 0");
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1]) {
      fail(errc::not_increasing, std::to_string(indices[i - 1]) + " then " +
                                     std::to_string(indices[i]));
    }
  }
  if (indices.back() > ambient_k) {
    fail(errc::index_out_of_range, "index " + std::to_string(indices.back()) +
                                       " beyond ambient k=" + std::to_string(ambient_k));
  }
  return IndexSet(std::move(indices), ambient_k);
}

IndexSet IndexSet::parse(std::string_view text, int ambient_k) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (token.empty()) {
      if (indices.empty() && comma == text.size()) fail(errc::empty_input, "no indices given");
      fail(errc::parse_error, "empty index token");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(errc::parse_error, "bad index token '" + std::string(token) + "'");
    }
    if (value < 0) fail(errc::index_out_of_range, "negative index " + std::to_string(value));
    indices.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return from_indices(std::move(indices), ambient_k);
}

std::string IndexSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

const char* heredity_class_name(HeredityClass tag) noexcept {
  switch (tag) {
    case HeredityClass::type1: return "type1";
    case HeredityClass::type2: return "type2";
    case HeredityClass::type3: return "type3";
    case HeredityClass::type4_conjectured: return "type4_conjectured";
    case HeredityClass::type5: return "type5";
    case HeredityClass::degenerate_0123: return "degenerate_0123";
    case HeredityClass::not_hereditary: return "not_hereditary";
  }
  return "unknown";
}

Currency gen_B(int l) {
  if (l < 3) fail(errc::bad_parameter, "the B generator needs l >= 3");
  std::vector<Coin> coins;
  for (int v = 1; v <= l - 1; ++v) coins.push_back(v);
  coins.push_back(2 * static_cast<Coin>(l) - 2);
  coins.push_back(2 * static_cast<Coin>(l) - 1);
  coins.push_back(4 * static_cast<Coin>(l) - 4);
  return Currency::from_values(std::move(coins));
}

Currency gen_A_family(int l, int m, int p) {
  if (l < 2 || m <= l) fail(errc::bad_parameter, "the A family needs m > l >= 2");
  if (p < 1) fail(errc::bad_parameter, "the A family needs p >= 1");
  if (p == 1) fail(errc::not_increasing, "p = 1 repeats the coin l");
  std::vector<Coin> coins;
  for (int v = 1; v <= l; ++v) coins.push_back(v);
  for (int i = 0; i <= m - l; ++i) {
    coins.push_back((static_cast<Coin>(i + 1) * p - i) * l);
  }
  return Currency::from_values(std::move(coins));
}

Currency extend_multiple(const Currency& currency, Coin mult, PrefixCheck check) {
  if (mult < 2) fail(errc::bad_parameter, "the multiple must be at least 2");
  if (check == PrefixCheck::verified && !is_orderly(currency).orderly) {
    fail(errc::prefix_not_orderly, currency.str());
  }
  return currency.extended(mult * currency.largest());
}

Currency gen_messy(int l, MessyVariant variant) {
  if (l < 2) fail(errc::bad_parameter, "the messy generator needs l >= 2");
  std::vector<Coin> coins;
  for (int i = 0; i < l; ++i) {
    coins.push_back(3 * static_cast<Coin>(i) + 1);
    coins.push_back(3 * static_cast<Coin>(i) + 2);
  }
  const Coin start = variant == MessyVariant::long_tail ? 3 * static_cast<Coin>(l) + 1
                                                        : 3 * static_cast<Coin>(l) + 2;
  const Coin stop = variant == MessyVariant::long_tail ? 6 * static_cast<Coin>(l) - 2
                                                       : 6 * static_cast<Coin>(l) - 4;
  for (Coin v = start; v <= stop; v += 3) coins.push_back(v);
  return Currency::from_values(std::move(coins));
}

Currency subcurrency(const Currency& currency, const IndexSet& P) {
  if (P.ambient_k() != currency.max_index()) {
    fail(errc::index_out_of_range, "index set ambient k=" + std::to_string(P.ambient_k()) +
                                       " does not match currency " + currency.str());
  }
  std::vector<Coin> coins;
  coins.reserve(P.indices().size());
  for (int i : P.indices()) coins.push_back(currency[static_cast<std::size_t>(i)]);
  return Currency::from_values(std::move(coins));
}

HeredityClass classify_index_set(const IndexSet& P) {
  const auto& idx = P.indices();
  const std::size_t n = idx.size();
  // The full set first: {0,1,2,3} inside k=3 is the whole currency, hereditary
  // for free, and similarly for the small shapes.
  if (P.is_full()) return HeredityClass::type5;
  if (n == 1) return HeredityClass::type1;
  if (n == 2) return HeredityClass::type2;
  if (n == 3 && idx[1] == 1) return HeredityClass::type3;
  if (n == 4 && idx[1] == 1 && idx[2] == 2) {
    if (idx[3] == 3) return HeredityClass::degenerate_0123;
    return HeredityClass::type4_conjectured;  // l >= 4
  }
  return HeredityClass::not_hereditary;
}

HeredityWitness non_hereditary_witness(const IndexSet& P) {
  const HeredityClass tag = classify_index_set(P);
  if (tag != HeredityClass::not_hereditary && tag != HeredityClass::degenerate_0123) {
    fail(errc::not_applicable,
         "index set " + P.str() + " classifies as " + heredity_class_name(tag));
  }
  const auto& idx = P.indices();
  const int k = P.ambient_k();

  // Longest run {0, ..., r} contained in P.
  int r = 0;
  while (r + 1 < static_cast<int>(idx.size()) && idx[static_cast<std::size_t>(r + 1)] == r + 1) ++r;

  Currency base = Currency::from_values({1});
  Coin counterexample = 0;
  if (r >= 3) {
    // The B generator's prefix through position r is disorderly: twice its
    // second-largest coin greedily splits as (2r-1) + (r-1) + (r-2).
    base = gen_B(r);
    counterexample = 4 * static_cast<Coin>(r) - 4;
  } else {
    // P skips r+1, so its next two members l < m seed the A family. With
    // p = m - l + 1 the amount (m-l+1)*a_l greedily starts with a_m and then
    // crawls over coins <= r+1, overshooting the m-l+1 copies of a_l.
    const int l = idx[static_cast<std::size_t>(r + 1)];
    const int m = idx[static_cast<std::size_t>(r + 2)];
    const int p = m - l + 1;
    base = gen_A_family(l, m, p);
    counterexample = static_cast<Coin>(m - l + 1) * base[static_cast<std::size_t>(l)];
  }

  if (base.max_index() < k) {
    // Ladder padding M, 2M, 3M, ...: each rung passes the one-point test
    // because the previous rung and M itself are coins, and every rung
    // exceeds the counterexample, so the bad sub-currency stays bad.
    const Coin top = base.largest();
    Coin mult = counterexample / top + 1;
    if (mult < 2) mult = 2;
    const Coin step = mult * top;
    Coin rung = step;
    while (base.max_index() < k) {
      base = base.extended(rung);
      rung += step;
    }
  }

  Currency bad = subcurrency(base, P);
  return HeredityWitness{P, std::move(base), std::move(bad), counterexample};
}

Type4Report check_type4(const Currency& currency) {
  if (currency.max_index() < 4) fail(errc::too_short, currency.str());
  if (!is_orderly(currency).orderly) fail(errc::prefix_not_orderly, currency.str());
  Type4Report report;
  report.proved_case =
      currency[2] > 2 * currency[1] && currency[3] > 2 * currency[2];
  for (int l = 4; l <= currency.max_index(); ++l) {
    Currency probe = Currency::from_values(
        {1, currency[1], currency[2], currency[static_cast<std::size_t>(l)]});
    if (!is_orderly(probe).orderly) report.violations.push_back(l);
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace coinage
