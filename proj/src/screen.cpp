#include "coinage/screen.hpp"

#include <algorithm>
#include <set>

#include "coinage/orderly.hpp"

namespace coinage {

bool in_A(Coin a, Coin x) {
  if (a < 2) fail(errc::bad_parameter, "the set needs a >= 2");
  if (x < 1) return false;
  if (x == 1) return a == 2;
  const Coin p = (x - 1) / a;
  return x > (p + 1) * a - (p + 2);
}

std::vector<Coin> A_nonmembers(Coin a, Coin limit) {
  std::vector<Coin> out;
  for (Coin x = 1; x <= limit; ++x) {
    if (!in_A(a, x)) out.push_back(x);
  }
  return out;
}

std::vector<Coin> diff_set(const Currency& currency) {
  if (currency.max_index() < 1) fail(errc::single_coin, currency.str());
  std::set<Coin> diffs;
  const auto& coins = currency.coins();
  for (std::size_t i = 0; i < coins.size(); ++i) {
    for (std::size_t j = i + 1; j < coins.size(); ++j) {
      diffs.insert(coins[j] - coins[i]);
    }
  }
  return std::vector<Coin>(diffs.begin(), diffs.end());
}

namespace {

// First pair (i, j), i < j, realizing difference d, in lexicographic order.
std::pair<int, int> first_pair_for_difference(const Currency& currency, Coin d) {
  for (std::size_t i = 0; i < currency.size(); ++i) {
    for (std::size_t j = i + 1; j < currency.size(); ++j) {
      if (currency[j] - currency[i] == d) {
        return {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return {-1, -1};
}

}  // namespace

ScreenerResult screen_gap_not_one(const Currency& currency) {
  ScreenerResult r{"gap_not_one", true, nullptr};
  if (currency.size() < 2 || currency[1] < 3) return r;
  for (int i = 1; i <= currency.max_index(); ++i) {
    if (currency[static_cast<std::size_t>(i)] - currency[static_cast<std::size_t>(i - 1)] == 1) {
      r.passed = false;
      r.witness = {{"i", i}, {"gap", 1}};
      return r;
    }
  }
  return r;
}

ScreenerResult screen_gap_min(const Currency& currency) {
  ScreenerResult r{"gap_min", true, nullptr};
  if (currency.size() < 2) return r;
  const Coin required = currency[1] - 1;
  for (int i = 1; i <= currency.max_index(); ++i) {
    const Coin gap = currency[static_cast<std::size_t>(i)] - currency[static_cast<std::size_t>(i - 1)];
    if (gap < required) {
      r.passed = false;
      r.witness = {{"i", i}, {"gap", gap}, {"required", required}};
      return r;
    }
  }
  return r;
}

ScreenerResult screen_diffs_in_A(const Currency& currency) {
  if (currency.max_index() < 1) fail(errc::single_coin, currency.str());
  ScreenerResult r{"diffs_in_A", true, nullptr};
  for (Coin d : diff_set(currency)) {
    if (!in_A(currency[1], d)) {
      auto [i, j] = first_pair_for_difference(currency, d);
      r.passed = false;
      r.witness = {{"difference", d}, {"i", i}, {"j", j}};
      return r;
    }
  }
  return r;
}

ScreenerResult screen_s_window(const Currency& currency) {
  if (currency.max_index() < 2) fail(errc::too_few_coins, currency.str());
  ScreenerResult r{"s_window", true, nullptr};
  const Coin a1 = currency[1];
  const Coin a2 = currency[2];
  const auto diffs = diff_set(currency);

  auto violate = [&](const char* which, Coin d, Coin lo, Coin hi,
                     std::vector<Coin> allowed) {
    r.passed = false;
    r.witness = {{"case", which},
                 {"difference", d},
                 {"window", {lo, hi}},
                 {"allowed", allowed}};
  };

  // Always-on windows: [1, a_1) admits only a_1 - 1, (a_1, a_2) admits only
  // a_2 - a_1 and a_2 - 1.
  for (Coin d : diffs) {
    if (d >= 1 && d < a1 && d != a1 - 1) {
      violate("a", d, 1, a1, {a1 - 1});
      return r;
    }
    if (d > a1 && d < a2 && d != a2 - a1 && d != a2 - 1) {
      violate("a", d, a1, a2, {a2 - a1, a2 - 1});
      return r;
    }
  }
  if (a2 == 2 * a1 - 1 || a2 == 2 * a1) {
    for (Coin d : diffs) {
      if (d >= 1 && d < a2 && d != a1 - 1 && d != a1 && d != a2 - 1) {
        violate("b", d, 1, a2, {a1 - 1, a1, a2 - 1});
        return r;
      }
    }
  } else if (a2 > 2 * a1) {
    const std::vector<Coin> required{a1 - 1, a2 - a1, a2 - 1};
    for (Coin d : diffs) {
      if (d >= 1 && d < a2 &&
          std::find(required.begin(), required.end(), d) == required.end()) {
        violate("c", d, 1, a2, required);
        return r;
      }
    }
    // Equality also needs each required value attained.
    for (Coin v : required) {
      if (!std::binary_search(diffs.begin(), diffs.end(), v)) {
        r.passed = false;
        r.witness = {{"case", "c"}, {"missing", v}, {"window", {1, a2}}};
        return r;
      }
    }
  }
  return r;
}

ScreenerResult screen_big_diff(const Currency& currency) {
  ScreenerResult r{"big_diff", true, nullptr};
  const int k = currency.max_index();
  for (int m = 2; m <= k; ++m) {
    if (currency[static_cast<std::size_t>(m - 1)] <= 2 * currency[static_cast<std::size_t>(m - 2)] ||
        currency[static_cast<std::size_t>(m)] <= 2 * currency[static_cast<std::size_t>(m - 1)]) {
      continue;
    }
    const Coin required =
        currency[static_cast<std::size_t>(m)] - currency[static_cast<std::size_t>(m - 1)];
    for (int t = m; t < k; ++t) {
      const Coin gap =
          currency[static_cast<std::size_t>(t + 1)] - currency[static_cast<std::size_t>(t)];
      if (gap < required) {
        r.passed = false;
        r.witness = {{"m", m}, {"t", t}, {"gap", gap}, {"required", required}};
        return r;
      }
    }
  }
  return r;
}

ScreenReport screen_report(const Currency& currency) {
  ScreenReport report;
  report.screeners.push_back(screen_gap_not_one(currency));
  report.screeners.push_back(screen_gap_min(currency));
  if (currency.max_index() >= 1) report.screeners.push_back(screen_diffs_in_A(currency));
  if (currency.max_index() >= 2) {
    report.screeners.push_back(screen_s_window(currency));
    report.screeners.push_back(screen_big_diff(currency));
  }
  for (const auto& s : report.screeners) report.passed_all = report.passed_all && s.passed;
  return report;
}

bool classify_three(const Currency& currency) {
  if (currency.max_index() != 2) fail(errc::wrong_length, currency.str());
  return in_A(currency[1], currency[2] - currency[1]);
}

bool classify_four(const Currency& currency) {
  if (currency.max_index() != 3) fail(errc::wrong_length, currency.str());
  return is_totally_orderly(currency).totally;
}

const char* five_coin_case_name(FiveCoinCase tag) noexcept {
  switch (tag) {
    case FiveCoinCase::totally_orderly: return "totally_orderly";
    case FiveCoinCase::special_family: return "special_family";
    case FiveCoinCase::disorderly: return "disorderly";
  }
  return "unknown";
}

FiveCoinClass classify_five(const Currency& currency) {
  if (currency.max_index() != 4) fail(errc::wrong_length, currency.str());
  if (is_totally_orderly(currency).totally) {
    return FiveCoinClass{true, FiveCoinCase::totally_orderly};
  }
  const Coin a = currency[2];
  if (currency[1] == 2 && a >= 4 && currency[3] == a + 1 && currency[4] == 2 * a) {
    return FiveCoinClass{true, FiveCoinCase::special_family};
  }
  return FiveCoinClass{false, FiveCoinCase::disorderly};
}

}  // namespace coinage
