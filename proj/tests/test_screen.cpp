#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "coinage/orderly.hpp"
#include "coinage/screen.hpp"
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

const ScreenerResult& result_named(const ScreenReport& report, const char* name) {
  for (const auto& s : report.screeners) {
    if (s.name == name) return s;
  }
  FAIL("no screener named ", name);
  return report.screeners.front();
}

}  // namespace

TEST_CASE("amount-set membership, frozen") {
  CHECK(A_nonmembers(5, 20) == std::vector<Coin>{1, 2, 3, 6, 7, 11});
  CHECK(A_nonmembers(3, 20) == std::vector<Coin>{1});
  CHECK(A_nonmembers(2, 10).empty());
  CHECK(in_A(2, 1));
  CHECK_FALSE(in_A(3, 1));
  CHECK_FALSE(in_A(5, 0));
  CHECK_FALSE(in_A(5, -4));
  CHECK(in_A(5, 4));
  CHECK(in_A(5, 5));
  CHECK_FALSE(in_A(5, 6));
  CHECK(code_of([] { in_A(1, 3); }) == errc::bad_parameter);
}

TEST_CASE("closed-form membership equals the definitional enumeration") {
  for (Coin a = 2; a <= 30; ++a) {
    for (Coin x = 1; x <= 200; ++x) {
      CAPTURE(a);
      CAPTURE(x);
      CHECK(in_A(a, x) == oracle::in_A_by_enumeration(a, x));
    }
  }
}

TEST_CASE("membership is closed under addition") {
  for (Coin a : {2, 3, 5, 8, 13, 20}) {
    std::vector<Coin> members;
    for (Coin x = 1; x <= 100; ++x) {
      if (in_A(a, x)) members.push_back(x);
    }
    for (Coin x : members) {
      for (Coin y : members) {
        CAPTURE(a);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(in_A(a, x + y));
      }
    }
  }
}

TEST_CASE("difference sets, frozen") {
  CHECK(diff_set(Currency::parse("1,3,5,8,10,15")) ==
        std::vector<Coin>{2, 3, 4, 5, 7, 9, 10, 12, 14});
  CHECK(diff_set(Currency::parse("1,3,7,12")) ==
        std::vector<Coin>{2, 4, 5, 6, 9, 11});
  CHECK(diff_set(Currency::parse("1,2,5")) == std::vector<Coin>{1, 3, 4});
  CHECK(code_of([] { diff_set(Currency::parse("1")); }) == errc::single_coin);
}

TEST_CASE("screen report runs the screeners the length supports") {
  const auto one = screen_report(Currency::parse("1"));
  REQUIRE(one.screeners.size() == 2);
  CHECK(one.screeners[0].name == "gap_not_one");
  CHECK(one.screeners[1].name == "gap_min");
  CHECK(one.passed_all);

  const auto two = screen_report(Currency::parse("1,4"));
  REQUIRE(two.screeners.size() == 3);
  CHECK(two.screeners[2].name == "diffs_in_A");

  const auto three = screen_report(Currency::parse("1,2,5"));
  REQUIRE(three.screeners.size() == 5);
  CHECK(three.screeners[3].name == "s_window");
  CHECK(three.screeners[4].name == "big_diff");
  CHECK(three.passed_all);
}

TEST_CASE("the known near-miss fails exactly the window screener") {
  const auto report = screen_report(Currency::parse("1,3,7,12"));
  CHECK_FALSE(report.passed_all);
  for (const auto& s : report.screeners) {
    CAPTURE(s.name);
    CHECK(s.passed == (s.name != "s_window"));
  }
  const auto& w = result_named(report, "s_window").witness;
  CHECK(w.at("difference") == 5);
  CHECK(w.at("window") == nlohmann::json({3, 7}));
  CHECK(w.at("allowed") == nlohmann::json({4, 6}));
}

TEST_CASE("individual screener failures carry witnesses") {
  // Adjacent coins with a_1 >= 3.
  const auto gap1 = screen_gap_not_one(Currency::parse("1,4,5"));
  CHECK_FALSE(gap1.passed);
  CHECK(gap1.witness.at("i") == 2);
  CHECK(gap1.witness.at("gap") == 1);
  CHECK(screen_gap_not_one(Currency::parse("1,2,3")).passed);

  // A gap smaller than a_1 - 1.
  const auto gmin = screen_gap_min(Currency::parse("1,5,7"));
  CHECK_FALSE(gmin.passed);
  CHECK(gmin.witness.at("i") == 2);
  CHECK(gmin.witness.at("gap") == 2);
  CHECK(gmin.witness.at("required") == 4);

  // A difference outside the amount set of a_1.
  const auto diffs = screen_diffs_in_A(Currency::parse("1,5,12"));
  CHECK_FALSE(diffs.passed);
  CHECK(diffs.witness.at("difference") == 7);
  CHECK(diffs.witness.at("i") == 1);
  CHECK(diffs.witness.at("j") == 2);

  // Small gap after two consecutive more-than-doubling steps.  The first
  // qualifying position is m = 2 (3 > 2 and 7 > 6), so the required gap is
  // a_2 - a_1 = 4 and the offending step is 17 - 15.
  const auto big = screen_big_diff(Currency::parse("1,3,7,15,17"));
  CHECK_FALSE(big.passed);
  CHECK(big.witness.at("m") == 2);
  CHECK(big.witness.at("t") == 3);
  CHECK(big.witness.at("gap") == 2);
  CHECK(big.witness.at("required") == 4);
  CHECK(screen_big_diff(Currency::parse("1,3,7,15,23")).passed);

  CHECK(code_of([] { screen_s_window(Currency::parse("1,2")); }) ==
        errc::too_few_coins);
}

TEST_CASE("window screener distinguishes its cases") {
  // a_2 = 2 a_1 - 1: window below a_2 admits {a_1 - 1, a_1, a_2 - 1}.
  const auto b = screen_s_window(Currency::parse("1,3,5,8,10,15"));
  CHECK(b.passed);
  // a_2 > 2 a_1 with the exact difference set: passes.
  CHECK(screen_s_window(Currency::parse("1,2,5")).passed);
  CHECK(screen_s_window(Currency::parse("1,3,8")).passed);
  // Difference 1 counts against windows written from 1.
  const auto with_one = screen_s_window(Currency::parse("1,4,5,9"));
  CHECK_FALSE(with_one.passed);
  CHECK(with_one.witness.at("difference") == 1);
  // In the a_2 = 2 a_1 - 1 regime the two always-on windows already subsume
  // the trio check, so violations still surface as case "a".
  const auto bv = screen_s_window(Currency::parse("1,4,7,9"));
  CHECK_FALSE(bv.passed);
  CHECK(bv.witness.at("case") == "a");
  CHECK(bv.witness.at("difference") == 2);
  // Case c violation: extra small difference when a_2 > 2 a_1.
  const auto cv = screen_s_window(Currency::parse("1,4,9,13"));
  CHECK_FALSE(cv.passed);
  CHECK(cv.witness.at("case") == "c");
  CHECK(cv.witness.at("difference") == 4);
}

TEST_CASE("screeners pass on every orderly currency in a small sweep") {
  std::vector<Coin> coins{1};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth > 0) {
      const Currency c = Currency::from_values(coins);
      if (is_orderly(c).orderly) {
        const auto report = screen_report(c);
        CAPTURE(c.str());
        CHECK(report.passed_all);
      }
    }
    if (depth == 4) return;
    for (Coin next = coins.back() + 1; next <= 16; ++next) {
      coins.push_back(next);
      self(self, depth + 1);
      coins.pop_back();
    }
  };
  rec(rec, 0);
}

TEST_CASE("three-coin classifier is exact") {
  CHECK(classify_three(Currency::parse("1,2,3")));
  CHECK(classify_three(Currency::parse("1,3,5")));
  CHECK(classify_three(Currency::parse("1,3,7")));
  CHECK_FALSE(classify_three(Currency::parse("1,4,6")));
  CHECK(code_of([] { classify_three(Currency::parse("1,2")); }) ==
        errc::wrong_length);
  for (Coin a1 = 2; a1 < 40; ++a1) {
    for (Coin a2 = a1 + 1; a2 <= 40; ++a2) {
      const Currency c = Currency::from_values({1, a1, a2});
      CAPTURE(c.str());
      CHECK(classify_three(c) == is_orderly(c).orderly);
    }
  }
}

TEST_CASE("four-coin classifier is exact") {
  CHECK_FALSE(classify_four(Currency::parse("1,2,4,5")));
  CHECK(classify_four(Currency::parse("1,2,5,10")));
  CHECK(code_of([] { classify_four(Currency::parse("1,2,5")); }) ==
        errc::wrong_length);
  std::vector<Coin> coins{1};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 4) {
      const Currency c = Currency::from_values(coins);
      CAPTURE(c.str());
      CHECK(classify_four(c) == is_orderly(c).orderly);
      return;
    }
    for (Coin next = coins.back() + 1; next <= 25; ++next) {
      coins.push_back(next);
      self(self, depth + 1);
      coins.pop_back();
    }
  };
  rec(rec, 1);
}

TEST_CASE("five-coin classifier is exact and names its case") {
  const auto special = classify_five(Currency::parse("1,2,4,5,8"));
  CHECK(special.orderly);
  CHECK(special.tag == FiveCoinCase::special_family);
  CHECK(five_coin_case_name(special.tag) == doctest::String("special_family"));

  const auto totally = classify_five(Currency::parse("1,2,5,10,20"));
  CHECK(totally.orderly);
  CHECK(totally.tag == FiveCoinCase::totally_orderly);

  const auto bad = classify_five(Currency::parse("1,2,4,5,9"));
  CHECK_FALSE(bad.orderly);
  CHECK(bad.tag == FiveCoinCase::disorderly);

  CHECK(code_of([] { classify_five(Currency::parse("1,2,5")); }) ==
        errc::wrong_length);

  std::vector<Coin> coins{1};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 5) {
      const Currency c = Currency::from_values(coins);
      const auto cls = classify_five(c);
      CAPTURE(c.str());
      CHECK(cls.orderly == is_orderly(c).orderly);
      if (cls.tag == FiveCoinCase::special_family) {
        const Coin a = c[2];
        CHECK(c[1] == 2);
        CHECK(a >= 4);
        CHECK(c[3] == a + 1);
        CHECK(c[4] == 2 * a);
        CHECK_FALSE(is_totally_orderly(c).totally);
      }
      return;
    }
    for (Coin next = coins.back() + 1; next <= 20; ++next) {
      coins.push_back(next);
      self(self, depth + 1);
      coins.pop_back();
    }
  };
  rec(rec, 1);
}
