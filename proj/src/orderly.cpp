#include "coinage/orderly.hpp"

namespace coinage {

Coin counterexample_bound(const Currency& currency) {
  const int k = currency.max_index();
  if (k == 0) return 1;
  return currency[k - 1] + currency[k];
}

std::optional<Counterexample> smallest_counterexample(const Currency& currency) {
  const Coin bound = counterexample_bound(currency);
  const auto opt = opt_table(currency, bound);
  // Greedy counts filled incrementally: greedy for c is one coin (the largest
  // fitting) plus greedy for the rest, and the largest fitting coin only moves
  // forward as c grows.
  std::vector<std::int32_t> grd(opt.size(), 0);
  std::size_t top = 0;
  for (Coin c = 1; c <= bound; ++c) {
    while (top + 1 < currency.size() && currency[top + 1] <= c) ++top;
    grd[static_cast<std::size_t>(c)] =
        grd[static_cast<std::size_t>(c - currency[top])] + 1;
    if (opt[static_cast<std::size_t>(c)] < grd[static_cast<std::size_t>(c)]) {
      return Counterexample{c, greedy_pay(currency, c), opt_pay(currency, c)};
    }
  }
  return std::nullopt;
}

OrderlinessVerdict is_orderly(const Currency& currency) {
  auto cex = smallest_counterexample(currency);
  if (cex) return OrderlinessVerdict{false, std::move(cex)};
  return OrderlinessVerdict{true, std::nullopt};
}

bool one_point_extend(const Currency& prefix, Coin next, PrefixCheck check) {
  if (next <= prefix.largest()) {
    fail(errc::not_an_extension,
         std::to_string(next) + " does not extend " + prefix.str());
  }
  if (check == PrefixCheck::verified && !is_orderly(prefix).orderly) {
    fail(errc::prefix_not_orderly, prefix.str());
  }
  const Coin top = prefix.largest();
  const Coin m = (next + top - 1) / top;
  return greedy_count(prefix, m * top - next) <= m - 1;
}

TotalOrderliness is_totally_orderly(const Currency& currency) {
  for (int l = 1; l <= currency.max_index(); ++l) {
    // The chain invariant keeps the previous prefix orderly, so the fast test
    // applies without re-verification.
    if (!one_point_extend(currency.prefix(l - 1), currency[l], PrefixCheck::trusted)) {
      return TotalOrderliness{false, l};
    }
  }
  return TotalOrderliness{true, std::nullopt};
}

PlusMinusPattern PlusMinusPattern::parse(std::string_view text) {
  if (text.empty()) fail(errc::parse_error, "empty pattern");
  for (char ch : text) {
    if (ch != '+' && ch != '-') {
      fail(errc::parse_error, std::string("bad pattern character '") + ch + "'");
    }
  }
  if (text.front() != '+') {
    fail(errc::parse_error, "a pattern starts with '+': the one-coin prefix is always orderly");
  }
  return PlusMinusPattern(std::string(text));
}

PlusMinusPattern pm_pattern(const Currency& currency) {
  std::string symbols(currency.size(), '+');
  for (int l = 1; l <= currency.max_index(); ++l) {
    if (!is_orderly(currency.prefix(l)).orderly) symbols[static_cast<std::size_t>(l)] = '-';
  }
  return PlusMinusPattern(std::move(symbols));
}

bool is_proper_pattern(const PlusMinusPattern& pattern) {
  if (pattern.back() != '+') return false;
  if (pattern.size() < 3) return true;
  return pattern[0] == '+' && pattern[1] == '+' && pattern[2] == '+';
}

}  // namespace coinage
