#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frobmean/asymptotics.hpp"

using namespace frobmean;

TEST_CASE("item table") {
  CHECK(asymptotic_items().size() == 22);
  CHECK(find_item("c").main_coeff.value() == doctest::Approx(1.5 - 2 * std::numbers::ln2));
  CHECK(find_item("e").main_coeff.value() == doctest::Approx(std::numbers::pi / 4 - std::numbers::ln2 / 2));
  CHECK(find_item("k").main_coeff.value() == doctest::Approx(2 * std::numbers::ln2 - 4.0 / 3));
  CHECK(find_item("r").main_coeff.is_zero());
  CHECK_THROWS(find_item("q"));
}

TEST_CASE("item checks") {
  const auto a1 = item_check(find_item("a1"), 100);
  CHECK(a1.S == doctest::Approx(5050));
  CHECK(a1.main == doctest::Approx(5000));
  CHECK(a1.remainder_ratio == doctest::Approx(0.5));
  CHECK(item_check(find_item("s"), 10000).S < 2);
  CHECK_THROWS(item_check(find_item("c"), 9));
  // (d) has a remainder near -(17/480)/R, far below double resolution of S
  CHECK(item_check(find_item("d"), 1000).remainder_ratio == doctest::Approx(3.5416619e-11).epsilon(1e-6));
}

TEST_CASE("remainders stay bounded") {
  for (const auto& item : asymptotic_items()) {
    CAPTURE(item.id);
    const double r3 = item_check(item, 1000).remainder_ratio;
    const double r4 = item_check(item, 10000).remainder_ratio;
    CHECK(r4 <= 3 * r3);
  }
}

TEST_CASE("constant combination") {
  const auto c = const_combination();
  CHECK(std::fabs(c.value - c.target) < 1e-12);
  CHECK(c.target == doctest::Approx(0.8377580409572782));
}

TEST_CASE("s1 growth") {
  const std::vector<std::int64_t> ten{10};
  const double lb = std::log(10.0);
  CHECK(s1_growth_check(ten)[0] == doctest::Approx(52 / (10 * lb * lb)));
  CHECK_THROWS(s1_growth_check(std::vector<std::int64_t>{9}));
}
