#include "frobmean/asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "frobmean/contfrac.hpp"
#include "frobmean/summation.hpp"

namespace frobmean {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

Quad to_quad(const Rational& r) { return Quad(r.num()) / Quad(r.den()); }

Quad evaluate(const MainConstant& c) {
  static const Quad ln2 = log(Quad(2));
  static const Quad pi = boost::math::constants::pi<Quad>();
  return to_quad(c.rational) + to_quad(c.log2) * ln2 + to_quad(c.pi) * pi;
}

MainConstant K(Rational r, Rational l = {}, Rational p = {}) { return {r, l, p}; }

const std::vector<AsymptoticItem>& items() {
  static const std::vector<AsymptoticItem> table = [] {
    using R = Rational;
    std::vector<AsymptoticItem> t;
    for (int p = 1; p <= 3; ++p) {
      t.push_back({"a" + std::to_string(p), Summand::power, p, K(R(1, p + 1)), p + 1, p, false});
    }
    for (int p = 1; p <= 3; ++p) {
      t.push_back({"b" + std::to_string(p), Summand::power_log_ratio, p, K(R(1, (p + 1) * (p + 1))), p + 1, p, true});
    }
    t.push_back({"c", Summand::n_frac, 0, K(R(3, 2), R(-2)), 2, 1, false});
    t.push_back({"d", Summand::n2_frac_sq, 0, K(R(25, 3), R(-12)), 3, 2, false});
    t.push_back({"e", Summand::diff_over_sumsq, 0, K(R(0), R(-1, 2), R(1, 4)), 0, -1, false});
    t.push_back({"f", Summand::n2_log_mix, 0, K(R(5, 6), R(-1, 3), R(-1, 6)), 3, 2, true});
    t.push_back({"g", Summand::n2_diff_over_sumsq, 0, K(R(1, 2), R(1, 2), R(-1, 4)), 2, 1, false});
    t.push_back({"h", Summand::n3_frac, 0, K(R(17, 12), R(-2)), 4, 3, false});
    t.push_back({"i", Summand::n4_log_mix, 0, K(R(-3, 20), R(-1, 5), R(1, 10)), 5, 4, true});
    t.push_back({"j", Summand::n4_diff_over_sumsq, 0, K(R(-5, 12), R(-1, 2), R(1, 4)), 4, 3, false});
    t.push_back({"k", Summand::n2_frac, 0, K(R(-4, 3), R(2)), 3, 2, false});
    t.push_back({"l", Summand::n_frac_sq, 0, K(R(-11, 2), R(8)), 2, 1, false});
    t.push_back({"m", Summand::n_log_shift, 0, K(R(1, 4)), 2, 1, false});
    t.push_back({"n", Summand::n2_log_shift, 0, K(R(-5, 18), R(2, 3)), 3, 2, false});
    t.push_back({"o", Summand::inv_n2_log_sq, 0, K(R(0), R(-1), R(1, 2)), -1, -2, false});
    t.push_back({"p", Summand::frac_sq, 0, K(R(3), R(-4)), 1, 0, false});
    t.push_back({"r", Summand::n_log_quotient, 0, K(R(0)), 0, 2, false});
    t.push_back({"s", Summand::sum_over_sumsq, 0, K(R(0)), 0, 0, false});
    return t;
  }();
  return table;
}

Quad summand(const AsymptoticItem& item, const Quad& n, const Quad& R) {
  const Quad frac = (R - n) / (R + n);
  // log(1 + (R/n)(R-n)/(R+n)) with the argument near 0 as n approaches R.
  const auto log_mix = [&] { return Quad(log1p(R * (R - n) / (n * (R + n)))); };
  switch (item.summand) {
    case Summand::power: return pow(n, item.p);
    case Summand::power_log_ratio: return pow(n, item.p) * log(R / n);
    case Summand::n_frac: return n * frac;
    case Summand::n2_frac_sq: return n * n * frac * frac;
    case Summand::diff_over_sumsq: return (R - n) / (n * n + R * R);
    case Summand::n2_log_mix: return n * n * log_mix();
    case Summand::n2_diff_over_sumsq: return n * n * (R - n) / (R * R + n * n);
    case Summand::n3_frac: return n * n * n * frac;
    case Summand::n4_log_mix: return n * n * n * n * log_mix();
    case Summand::n4_diff_over_sumsq: return n * n * n * n * (R - n) / (R * R + n * n);
    case Summand::n2_frac: return n * n * frac;
    case Summand::n_frac_sq: return n * frac * frac;
    case Summand::n_log_shift: return n * log1p(n / R);
    case Summand::n2_log_shift: return n * n * log1p(n / R);
    case Summand::inv_n2_log_sq: return log1p((n / R) * (n / R)) / (n * n);
    case Summand::frac_sq: return frac * frac;
    // (R^2 + n^2)/(n(R + n)) = 1 + R(R - n)/(n(R + n))
    case Summand::n_log_quotient: return n * log_mix();
    case Summand::sum_over_sumsq: return (R + n) / (n * n + R * R);
  }
  throw std::logic_error("unhandled summand");
}

}  // namespace

double MainConstant::value() const { return static_cast<double>(evaluate(*this)); }

std::span<const AsymptoticItem> asymptotic_items() { return items(); }

const AsymptoticItem& find_item(const std::string& id) {
  for (const auto& item : items()) {
    if (item.id == id) return item;
  }
  throw std::invalid_argument("unknown asymptotic item '" + id + "'");
}

ItemReport item_check(const AsymptoticItem& item, std::int64_t R) {
  if (R < 10) throw std::invalid_argument("item_check needs R >= 10");
  const Quad r(R);
  BasicCompensatedSum<Quad> S;
  for (std::int64_t n = 1; n <= R; ++n) S += summand(item, Quad(n), r);
  const Quad main = evaluate(item.main_coeff) * pow(r, item.main_power);
  Quad scale = pow(r, item.remainder_order);
  if (item.log_factor) scale *= log(r);
  ItemReport rep;
  rep.S = static_cast<double>(S.value());
  rep.main = static_cast<double>(main);
  rep.remainder_ratio = static_cast<double>(abs(S.value() - main) / scale);
  return rep;
}

ConstCombination const_combination() {
  using std::numbers::ln2;
  using std::numbers::pi;
  ConstCombination c;
  c.addends[0] = 53.0 / 150;
  c.addends[1] = 19.0 / 75;
  c.addends[2] = 2 * pi / 15 - 0.4 * ln2 - 91.0 / 900;
  c.addends[3] = 11 * pi / 120 - 251.0 / 60 * ln2 + 14.0 / 5;
  c.addends[4] = pi / 24 + 55.0 / 12 * ln2 - 119.0 / 36;
  CompensatedSum sum;
  for (const double a : c.addends) sum += a;
  c.value = sum.value();
  c.target = 4 * pi / 15;
  return c;
}

std::vector<double> s1_growth_check(std::span<const std::int64_t> b_grid) {
  std::vector<double> ratios;
  ratios.reserve(b_grid.size());
  for (const std::int64_t b : b_grid) {
    if (b < 10) throw std::invalid_argument("s1 growth check needs b >= 10");
    std::int64_t total = 0;
    for (std::int64_t a = 1; a < b; ++a) total += s1(Rational(a, b));
    const double lb = std::log(static_cast<double>(b));
    ratios.push_back(static_cast<double>(total) / (static_cast<double>(b) * lb * lb));
  }
  return ratios;
}

}  // namespace frobmean
