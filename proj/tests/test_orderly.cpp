#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "coinage/orderly.hpp"
#include "oracles.hpp"

using namespace coinage;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::bad_parameter;
}

// Every currency with the given max index and coins <= max_coin.
void for_each_currency(int k, Coin max_coin,
                       const std::function<void(const Currency&)>& visit) {
  std::vector<Coin> coins{1};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k + 1) {
      visit(Currency::from_values(coins));
      return;
    }
    for (Coin next = coins.back() + 1; next <= max_coin; ++next) {
      coins.push_back(next);
      self(self, depth + 1);
      coins.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

TEST_CASE("counterexample scan ceiling") {
  CHECK(counterexample_bound(Currency::parse("1,2,4,5")) == 9);
  CHECK(counterexample_bound(Currency::parse("1")) == 1);
  CHECK(counterexample_bound(Currency::parse("1,5,9,16")) == 25);
}

TEST_CASE("smallest counterexamples, frozen") {
  const auto c1 = smallest_counterexample(Currency::parse("1,5,9,16"));
  REQUIRE(c1.has_value());
  CHECK(c1->amount == 18);
  CHECK(c1->greedy.count == 3);
  CHECK(c1->greedy.multiplicities == std::vector<Coin>{2, 0, 0, 1});
  CHECK(c1->optimal.count == 2);
  CHECK(c1->optimal.multiplicities == std::vector<Coin>{0, 0, 2, 0});

  CHECK_FALSE(smallest_counterexample(Currency::parse("1,2,5,10,20,50")).has_value());

  const auto c2 = smallest_counterexample(Currency::parse("1,2,4,5"));
  REQUIRE(c2.has_value());
  CHECK(c2->amount == 8);
  CHECK(c2->optimal.multiplicities == std::vector<Coin>{0, 0, 2, 0});  // 4+4

  const auto c3 = smallest_counterexample(Currency::parse("1,3,7,9"));
  REQUIRE(c3.has_value());
  CHECK(c3->amount == 14);
  CHECK(c3->greedy.count == 4);   // 9+3+1+1
  CHECK(c3->optimal.count == 2);  // 7+7

  const auto c4 = smallest_counterexample(Currency::parse("1,4,6"));
  REQUIRE(c4.has_value());
  CHECK(c4->amount == 8);

  const auto c5 = smallest_counterexample(Currency::parse("1,5,9,16,20"));
  REQUIRE(c5.has_value());
  CHECK(c5->amount == 18);
}

TEST_CASE("orderliness verdicts") {
  CHECK(is_orderly(Currency::parse("1,3,5,8,10,15")).orderly);
  CHECK(is_orderly(Currency::parse("1,2,4,5,8")).orderly);
  CHECK(is_orderly(Currency::parse("1")).orderly);
  CHECK_FALSE(is_orderly(Currency::parse("1,3,7,9")).orderly);
  const auto verdict = is_orderly(Currency::parse("1,3,7,9"));
  REQUIRE(verdict.counterexample.has_value());
  CHECK(verdict.counterexample->amount == 14);
}

TEST_CASE("counterexamples re-verify and are minimal") {
  for_each_currency(3, 12, [](const Currency& c) {
    const auto cex = smallest_counterexample(c);
    const auto table = opt_table(c, counterexample_bound(c));
    if (cex) {
      CAPTURE(c.str());
      CHECK(cex->greedy.value == cex->amount);
      CHECK(cex->optimal.value == cex->amount);
      CHECK(cex->optimal.count < cex->greedy.count);
      CHECK(cex->optimal.count ==
            table[static_cast<std::size_t>(cex->amount)]);
      for (Coin a = 1; a < cex->amount; ++a) {
        CHECK(table[static_cast<std::size_t>(a)] == greedy_count(c, a));
      }
    }
  });
}

TEST_CASE("scan ceiling is as good as scanning much further") {
  // The verdict from scanning to a_{k-1} + a_k matches scanning to 3 a_k.
  for_each_currency(2, 16, [](const Currency& c) {
    const auto cex = smallest_counterexample(c);
    const Coin far = 3 * c.largest();
    const auto table = opt_table(c, far);
    Coin first_bad = 0;
    for (Coin a = 1; a <= far && first_bad == 0; ++a) {
      if (table[static_cast<std::size_t>(a)] < greedy_count(c, a)) first_bad = a;
    }
    CAPTURE(c.str());
    CHECK((cex.has_value() ? cex->amount : 0) == first_bad);
  });
}

TEST_CASE("one-point extension test, frozen") {
  CHECK(one_point_extend(Currency::parse("1,2,5"), 10));
  CHECK_FALSE(one_point_extend(Currency::parse("1,2,4"), 5));
  CHECK(one_point_extend(Currency::parse("1,5,9"), 27));
  CHECK(code_of([] { one_point_extend(Currency::parse("1,2,5"), 5); }) ==
        errc::not_an_extension);
  CHECK(code_of([] { one_point_extend(Currency::parse("1,2,5"), 3); }) ==
        errc::not_an_extension);
  CHECK(code_of([] {
          one_point_extend(Currency::parse("1,3,7,9"), 20, PrefixCheck::verified);
        }) == errc::prefix_not_orderly);
}

TEST_CASE("one-point test agrees with the full verdict") {
  for_each_currency(2, 15, [](const Currency& c) {
    if (!is_orderly(c).orderly) return;
    for (Coin next = c.largest() + 1; next <= 3 * c.largest(); ++next) {
      CAPTURE(c.str());
      CAPTURE(next);
      CHECK(one_point_extend(c, next, PrefixCheck::verified) ==
            is_orderly(c.extended(next)).orderly);
    }
  });
}

TEST_CASE("total orderliness") {
  CHECK(is_totally_orderly(Currency::parse("1,2,5,10,20,50")).totally);
  CHECK(is_totally_orderly(Currency::parse("1")).totally);
  const auto t = is_totally_orderly(Currency::parse("1,2,4,5,8"));
  CHECK_FALSE(t.totally);
  REQUIRE(t.first_bad_prefix.has_value());
  CHECK(*t.first_bad_prefix == 3);
  // Agreement with the definition: every prefix orderly.
  for_each_currency(3, 14, [](const Currency& c) {
    bool all = true;
    int first_bad = -1;
    for (int l = 0; l <= c.max_index() && all; ++l) {
      if (!is_orderly(c.prefix(l)).orderly) {
        all = false;
        first_bad = l;
      }
    }
    const auto got = is_totally_orderly(c);
    CAPTURE(c.str());
    CHECK(got.totally == all);
    if (!all) {
      REQUIRE(got.first_bad_prefix.has_value());
      CHECK(*got.first_bad_prefix == first_bad);
    }
  });
}

TEST_CASE("patterns, frozen") {
  CHECK(pm_pattern(Currency::parse("1,2,4,5,8")).str() == "+++-+");
  CHECK(pm_pattern(Currency::parse("1,5,9,16")).str() == "+++-");
  CHECK(pm_pattern(Currency::parse("1")).str() == "+");
}

TEST_CASE("pattern prefixes are prefix patterns") {
  for_each_currency(3, 12, [](const Currency& c) {
    const auto full = pm_pattern(c);
    for (int l = 0; l <= c.max_index(); ++l) {
      const auto sub = pm_pattern(c.prefix(l));
      CAPTURE(c.str());
      CHECK(full.str().substr(0, static_cast<std::size_t>(l) + 1) == sub.str());
    }
  });
}

TEST_CASE("patterns of orderly currencies start with three pluses") {
  for_each_currency(3, 14, [](const Currency& c) {
    const auto pattern = pm_pattern(c);
    if (pattern.back() == '+') {
      CAPTURE(c.str());
      CHECK(is_proper_pattern(pattern));
    }
  });
}

TEST_CASE("pattern parsing and properness") {
  CHECK(PlusMinusPattern::parse("+++-+").str() == "+++-+");
  CHECK(PlusMinusPattern::parse("+").size() == 1);
  CHECK(PlusMinusPattern::parse("+-")[1] == '-');
  CHECK(PlusMinusPattern::parse("+-+").back() == '+');
  CHECK(PlusMinusPattern::parse("++") == PlusMinusPattern::parse("++"));
  CHECK(code_of([] { PlusMinusPattern::parse(""); }) == errc::parse_error);
  CHECK(code_of([] { PlusMinusPattern::parse("+x+"); }) == errc::parse_error);
  CHECK(code_of([] { PlusMinusPattern::parse("-++"); }) == errc::parse_error);

  CHECK(is_proper_pattern(PlusMinusPattern::parse("+++-+")));
  CHECK(is_proper_pattern(PlusMinusPattern::parse("+")));
  CHECK(is_proper_pattern(PlusMinusPattern::parse("++")));
  CHECK_FALSE(is_proper_pattern(PlusMinusPattern::parse("++-+")));
  CHECK_FALSE(is_proper_pattern(PlusMinusPattern::parse("+++-")));
  CHECK_FALSE(is_proper_pattern(PlusMinusPattern::parse("+-")));
}

TEST_CASE("verdicts agree with a from-scratch oracle on small currencies") {
  for_each_currency(2, 10, [](const Currency& c) {
    bool orderly = true;
    for (Coin amount = 1; amount <= 3 * c.largest() && orderly; ++amount) {
      if (oracle::brute_opt_count(c, amount) < greedy_count(c, amount)) {
        orderly = false;
      }
    }
    CAPTURE(c.str());
    CHECK(is_orderly(c).orderly == orderly);
  });
}
