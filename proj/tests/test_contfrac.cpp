#include <doctest.h>

#include <numeric>

#include "frobmean/contfrac.hpp"

using namespace frobmean;

TEST_CASE("regular expansion") {
  const auto e = rcf_expand(Rational(5, 8));
  CHECK(e.digits == std::vector<std::int64_t>{1, 1, 1, 2});
  CHECK(e.value() == Rational(5, 8));
  CHECK(s1(Rational(5, 8)) == 5);
  CHECK(s1(Rational(1, 2)) == 2);
  CHECK_THROWS(rcf_expand(Rational(1)));
  CHECK_THROWS(rcf_expand(Rational(0)));
  for (std::int64_t q = 2; q <= 40; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      const auto x = rcf_expand(Rational(p, q));
      CHECK(x.value() == Rational(p, q));
      CHECK(x.digits.back() >= 2);
    }
  }
}

TEST_CASE("negative expansion") {
  CHECK(ncf_expand(7, 3) == std::vector<std::int64_t>{3, 2, 2});
  CHECK(ncf_expand(5, 1) == std::vector<std::int64_t>{5});
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (std::int64_t l = 1; l < a; ++l) {
      if (std::gcd(a, l) != 1) continue;
      const auto d = ncf_expand(a, l);
      CHECK(ncf_value(d) == Rational(a, l));
      for (auto x : d) CHECK(x >= 2);
    }
  }
  CHECK_THROWS(ncf_expand(6, 4));
  CHECK_THROWS(ncf_expand(6, 6));
}

TEST_CASE("rodseth tables") {
  const RodsethTables t(5, 2);
  CHECK(t.m() == 2);
  CHECK(std::vector<std::int64_t>(t.digits().begin(), t.digits().end()) == std::vector<std::int64_t>{3, 2});
  std::vector<std::int64_t> q, s;
  for (int j = -1; j <= t.m(); ++j) {
    q.push_back(t.q(j));
    s.push_back(t.s(j));
  }
  CHECK(q == std::vector<std::int64_t>{0, 1, 3, 5});
  CHECK(s == std::vector<std::int64_t>{5, 2, 1, 0});
}

TEST_CASE("tables satisfy the determinant relation and the band is a partition") {
  for (std::int64_t a = 2; a <= 40; ++a) {
    for (std::int64_t l = 1; l < a; ++l) {
      if (std::gcd(a, l) != 1) continue;
      const RodsethTables t(a, l);
      CHECK(t.q(t.m()) == a);
      CHECK(t.s(-1) == a);
      for (int j = 0; j <= t.m(); ++j) CHECK(t.q(j) * t.s(j - 1) - t.q(j - 1) * t.s(j) == a);
      for (std::int64_t t2 = 0; t2 <= 12; ++t2) {
        for (std::int64_t t1 = 1; t1 <= 12; ++t1) {
          const int n = t.band(t1, t2);
          CHECK(t.s(n) * t1 <= t2 * t.q(n));
          if (n > 0) CHECK(t.s(n - 1) * t1 > t2 * t.q(n - 1));
          CHECK(t.band(Rational(t1), Rational(t2)) == n);
        }
      }
    }
  }
}
