#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coinage {

// Coin values and amounts. 64-bit throughout; the DP guard below bounds table
// sizes long before this width matters.
using Coin = std::int64_t;

enum class errc {
  empty_input,
  first_coin_not_one,
  not_strictly_increasing,
  non_positive_value,
  bound_too_large,
  not_an_extension,
  prefix_not_orderly,
  single_coin,
  too_few_coins,
  wrong_length,
  bad_parameter,
  not_increasing,
  index_out_of_range,
  missing_zero,
  not_applicable,
  too_short,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

// A currency is a strictly increasing list of positive coin values whose
// smallest coin is 1, so every amount is payable. There is no explicit
// sentinel for "no next coin"; extension takes the next value explicitly.
class Currency {
 public:
  // Validates and takes ownership. Throws Error on empty input, a value <= 0,
  // a first coin != 1, or values out of strictly increasing order.
  static Currency from_values(std::vector<Coin> values);

  // Parses "1,2,5,10" (spaces around tokens tolerated).
  static Currency parse(std::string_view text);

  const std::vector<Coin>& coins() const noexcept { return coins_; }
  std::size_t size() const noexcept { return coins_.size(); }
  // Largest coin index k; a currency has coins a_0 .. a_k.
  int max_index() const noexcept { return static_cast<int>(coins_.size()) - 1; }
  Coin operator[](std::size_t i) const { return coins_[i]; }
  Coin largest() const { return coins_.back(); }

  // The sub-currency (a_0, ..., a_l).
  Currency prefix(int l) const;
  // A copy with one more coin appended; next must exceed the current largest.
  Currency extended(Coin next) const;

  std::string str() const;

  friend bool operator==(const Currency&, const Currency&) = default;
  friend auto operator<=>(const Currency& a, const Currency& b) {
    return a.coins_ <=> b.coins_;
  }

 private:
  explicit Currency(std::vector<Coin> values) : coins_(std::move(values)) {}
  std::vector<Coin> coins_;
};

// A payment is a multiplicity vector aligned with a currency's coins.
struct Payment {
  std::vector<Coin> multiplicities;
  Coin value = 0;  // sum of multiplicity * coin
  Coin count = 0;  // sum of multiplicities
};

// Builds a Payment from raw multiplicities, recomputing value and count.
Payment make_payment(const Currency& currency, std::vector<Coin> multiplicities);

// "9+5+1" style rendering, largest coins first; empty string for value 0.
std::string format_payment(const Currency& currency, const Payment& payment);

// Guard on DP table size, counted in entries. The default (1e8) keeps the
// table in the hundreds of megabytes at worst; override per process.
inline constexpr std::size_t kDefaultDpGuard = 100'000'000;
std::size_t dp_guard() noexcept;
void set_dp_guard(std::size_t entries) noexcept;

// Greedy payment: repeatedly take the largest coin that fits. Total the
// multiplicities without building the vector via greedy_count.
Payment greedy_pay(const Currency& currency, Coin amount);
Coin greedy_count(const Currency& currency, Coin amount);

// Minimum coin counts for every amount in [0, bound]. table[c] is the least
// number of coins paying c exactly (coins may repeat). Throws bound_too_large
// when bound+1 exceeds the DP guard or the 32-bit entry type.
std::vector<std::int32_t> opt_table(const Currency& currency, Coin bound);

Coin opt_count(const Currency& currency, Coin amount);

// One optimal payment, reconstructed deterministically: at every step take the
// largest coin that still lies on an optimal path.
Payment opt_pay(const Currency& currency, Coin amount);

}  // namespace coinage
