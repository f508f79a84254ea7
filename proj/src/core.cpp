#include "coinage/core.hpp"

#include <atomic>
#include <charconv>
#include <limits>

namespace coinage {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "empty_input";
    case errc::first_coin_not_one: return "first_coin_not_one";
    case errc::not_strictly_increasing: return "not_strictly_increasing";
    case errc::non_positive_value: return "non_positive_value";
    case errc::bound_too_large: return "bound_too_large";
    case errc::not_an_extension: return "not_an_extension";
    case errc::prefix_not_orderly: return "prefix_not_orderly";
    case errc::single_coin: return "single_coin";
    case errc::too_few_coins: return "too_few_coins";
    case errc::wrong_length: return "wrong_length";
    case errc::bad_parameter: return "bad_parameter";
    case errc::not_increasing: return "not_increasing";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::missing_zero: return "missing_zero";
    case errc::not_applicable: return "not_applicable";
    case errc::too_short: return "too_short";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

void fail(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

Currency Currency::from_values(std::vector<Coin> values) {
  if (values.empty()) fail(errc::empty_input, "a currency needs at least one coin");
  for (Coin a : values) {
    if (a <= 0) fail(errc::non_positive_value, "coin " + std::to_string(a));
  }
  if (values.front() != 1) {
    fail(errc::first_coin_not_one, "smallest coin is " + std::to_string(values.front()));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      fail(errc::not_strictly_increasing,
           std::to_string(values[i - 1]) + " then " + std::to_string(values[i]));
    }
  }
  return Currency(std::move(values));
}

Currency Currency::parse(std::string_view text) {
  std::vector<Coin> values;
  std::size_t pos = 0;
  bool any_token = false;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string_view::npos && !any_token) {
        fail(errc::empty_input, "no coins given");
      }
      fail(errc::parse_error, "empty coin token");
    }
    any_token = true;
    Coin value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(errc::parse_error, "bad coin token '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return from_values(std::move(values));
}

Currency Currency::prefix(int l) const {
  if (l < 0 || l > max_index()) fail(errc::index_out_of_range, "prefix " + std::to_string(l));
  return Currency(std::vector<Coin>(coins_.begin(), coins_.begin() + l + 1));
}

Currency Currency::extended(Coin next) const {
  if (next <= largest()) {
    fail(errc::not_an_extension,
         std::to_string(next) + " does not exceed " + std::to_string(largest()));
  }
  std::vector<Coin> values = coins_;
  values.push_back(next);
  return Currency(std::move(values));
}

std::string Currency::str() const {
  std::string out;
  for (std::size_t i = 0; i < coins_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coins_[i]);
  }
  return out;
}

Payment make_payment(const Currency& currency, std::vector<Coin> multiplicities) {
  if (multiplicities.size() != currency.size()) {
    fail(errc::wrong_length, "multiplicity vector does not match the currency");
  }
  Payment p;
  p.multiplicities = std::move(multiplicities);
  for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
    if (p.multiplicities[i] < 0) fail(errc::bad_parameter, "negative multiplicity");
    p.value += p.multiplicities[i] * currency[i];
    p.count += p.multiplicities[i];
  }
  return p;
}

std::string format_payment(const Currency& currency, const Payment& payment) {
  std::string out;
  for (std::size_t i = payment.multiplicities.size(); i-- > 0;) {
    for (Coin n = 0; n < payment.multiplicities[i]; ++n) {
      if (!out.empty()) out += '+';
      out += std::to_string(currency[i]);
    }
  }
  return out;
}

namespace {
std::atomic<std::size_t> g_dp_guard{kDefaultDpGuard};
}

std::size_t dp_guard() noexcept { return g_dp_guard.load(std::memory_order_relaxed); }
void set_dp_guard(std::size_t entries) noexcept {
  g_dp_guard.store(entries, std::memory_order_relaxed);
}

Payment greedy_pay(const Currency& currency, Coin amount) {
  if (amount < 0) fail(errc::bad_parameter, "amount must be nonnegative");
  Payment p;
  p.multiplicities.assign(currency.size(), 0);
  p.value = amount;
  Coin rest = amount;
  for (std::size_t i = currency.size(); i-- > 0;) {
    p.multiplicities[i] = rest / currency[i];
    p.count += p.multiplicities[i];
    rest %= currency[i];
  }
  return p;
}

Coin greedy_count(const Currency& currency, Coin amount) {
  if (amount < 0) fail(errc::bad_parameter, "amount must be nonnegative");
  Coin total = 0;
  Coin rest = amount;
  for (std::size_t i = currency.size(); i-- > 0 && rest > 0;) {
    total += rest / currency[i];
    rest %= currency[i];
  }
  return total;
}

std::vector<std::int32_t> opt_table(const Currency& currency, Coin bound) {
  if (bound < 0) fail(errc::bad_parameter, "bound must be nonnegative");
  if (bound >= std::numeric_limits<std::int32_t>::max()) {
    fail(errc::bound_too_large, "bound " + std::to_string(bound) + " exceeds 32-bit counts");
  }
  const std::size_t entries = static_cast<std::size_t>(bound) + 1;
  if (entries > dp_guard()) {
    fail(errc::bound_too_large, std::to_string(entries) + " table entries exceed the guard of " +
                                    std::to_string(dp_guard()));
  }
  std::vector<std::int32_t> table(entries, 0);
  const auto& coins = currency.coins();
  for (Coin c = 1; c <= bound; ++c) {
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (Coin a : coins) {
      if (a > c) break;
      best = std::min(best, table[static_cast<std::size_t>(c - a)]);
    }
    table[static_cast<std::size_t>(c)] = best + 1;  // coin 1 always fits
  }
  return table;
}

Coin opt_count(const Currency& currency, Coin amount) {
  return opt_table(currency, amount)[static_cast<std::size_t>(amount)];
}

Payment opt_pay(const Currency& currency, Coin amount) {
  const auto table = opt_table(currency, amount);
  Payment p;
  p.multiplicities.assign(currency.size(), 0);
  p.value = amount;
  Coin rest = amount;
  while (rest > 0) {
    // Largest coin still on an optimal path wins, making the result unique.
    for (std::size_t i = currency.size(); i-- > 0;) {
      const Coin a = currency[i];
      if (a <= rest && table[static_cast<std::size_t>(rest - a)] ==
                           table[static_cast<std::size_t>(rest)] - 1) {
        ++p.multiplicities[i];
        ++p.count;
        rest -= a;
        break;
      }
    }
  }
  return p;
}

}  // namespace coinage
