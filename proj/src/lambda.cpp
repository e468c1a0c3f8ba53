#include "frobmean/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "frobmean/contfrac.hpp"
#include "frobmean/frobenius.hpp"
#include "frobmean/numtheory.hpp"
#include "frobmean/parallel.hpp"
#include "frobmean/summation.hpp"
#include "frobmean/surd.hpp"

namespace frobmean {

namespace {

void require_positive_alpha(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be a positive rational");
}

// w/x <= alpha and, off the diagonal, alpha (x - z) < w.
bool in_band(std::int64_t x, std::int64_t z, std::int64_t w, const Rational& alpha, DiagonalRule rule) {
  const i128 p = alpha.num();
  const i128 q = alpha.den();
  if (static_cast<i128>(w) * q > p * x) return false;
  if (x == z && rule == DiagonalRule::unbounded) return true;
  return p * (x - z) < static_cast<i128>(w) * q;
}

template <typename Accept>
Rational lambda_sum(std::int64_t a, const Rational& alpha, DiagonalRule rule, Accept accept) {
  if (a < 1) throw std::invalid_argument("lambda needs a >= 1");
  require_positive_alpha(alpha);
  i128 base = 0;
  i128 zsum = 0;
  for (std::int64_t x = 1; x <= a; ++x) {
    for (std::int64_t z = 1; z <= x; ++z) {
      for (std::int64_t w = 0; w <= (a - x) / z; ++w) {
        const std::int64_t rest = a - w * z;
        if (rest % x != 0) continue;
        const std::int64_t y = rest / x;
        if (!in_band(x, z, w, alpha, rule) || !accept(x, z, y, w)) continue;
        base += y + w;
        zsum += z;
      }
    }
  }
  return Rational::from_wide(base, 1) + alpha * Rational::from_wide(zsum, 1);
}

}  // namespace

Rational lambda_direct(std::int64_t a, const Rational& alpha, DiagonalRule rule) {
  return lambda_sum(a, alpha, rule, [](auto, auto, auto, auto) { return true; });
}

LambdaTable::LambdaTable(std::int64_t R, const Rational& alpha, DiagonalRule rule, unsigned workers)
    : R_(R), alpha_(alpha) {
  if (R < 1) throw std::invalid_argument("LambdaTable needs R >= 1");
  require_positive_alpha(alpha);
  const auto size = static_cast<std::size_t>(R) + 1;
  workers = std::max(1u, workers);
  std::vector<std::vector<std::int64_t>> base(workers), zw(workers);
  const i128 p = alpha.num();
  const i128 q = alpha.den();
  parallel_chunks(1, R + 1, workers, [&](unsigned w, std::int64_t lo, std::int64_t hi) {
    auto& b = base[w];
    auto& z = zw[w];
    b.assign(size, 0);
    z.assign(size, 0);
    for (std::int64_t n = lo; n < hi; ++n) {
      const auto q_hi = static_cast<std::int64_t>(p * n / q);
      for (std::int64_t k = 1; k <= n; ++k) {
        // alpha (n - k) < Q; on the diagonal the unbounded rule also admits Q = 0.
        std::int64_t q_lo = static_cast<std::int64_t>(p * (n - k) / q) + 1;
        if (n == k && rule == DiagonalRule::unbounded) q_lo = 0;
        for (std::int64_t Q = q_lo; Q <= q_hi; ++Q) {
          const std::int64_t rest = R - k * Q;
          if (rest < n) break;
          for (std::int64_t Qp = 1; Qp <= rest / n; ++Qp) {
            const std::int64_t a = n * Qp + k * Q;
            b[a] += Qp + Q;
            z[a] += k;
          }
        }
      }
    }
  });
  base_.assign(size, 0);
  z_weight_.assign(size, 0);
  for (unsigned w = 0; w < workers; ++w) {
    if (base[w].empty()) continue;
    for (std::size_t a = 0; a < size; ++a) {
      base_[a] += base[w][a];
      z_weight_[a] += zw[w][a];
    }
  }
}

Rational LambdaTable::value(std::int64_t a) const {
  if (a < 1 || a > R_) throw std::out_of_range("LambdaTable index out of range");
  return Rational(base_[a]) + alpha_ * Rational(z_weight_[a]);
}

Rational lambda_star(std::int64_t a, const Rational& alpha, LambdaStarMethod method, DiagonalRule rule) {
  if (method == LambdaStarMethod::direct) {
    return lambda_star_direct(a, alpha, StarCoprimality::z_with_x_w_with_y, rule);
  }
  if (a < 1) throw std::invalid_argument("lambda_star needs a >= 1");
  require_positive_alpha(alpha);
  Rational total;
  for (const std::int64_t d1 : divisors(a)) {
    const int m1 = mobius(d1);
    if (m1 == 0) continue;
    for (const std::int64_t d2 : divisors(a / d1)) {
      const int m2 = mobius(d2);
      if (m2 == 0) continue;
      total += Rational(m1 * m2 * d2) * lambda_direct(a / (d1 * d2), alpha * Rational(d1, d2), rule);
    }
  }
  return total;
}

Rational lambda_star_direct(std::int64_t a, const Rational& alpha, StarCoprimality coprimality,
                            DiagonalRule rule) {
  return lambda_sum(a, alpha, rule, [&](std::int64_t x, std::int64_t z, std::int64_t y, std::int64_t w) {
    switch (coprimality) {
      case StarCoprimality::z_with_x_w_with_y:
        return std::gcd(z, x) == 1 && std::gcd(w, y) == 1;
      case StarCoprimality::z_with_x_w_with_x:
        return std::gcd(z, x) == 1 && std::gcd(w, x) == 1;
      case StarCoprimality::z_with_a_w_with_a:
        return std::gcd(z, a) == 1 && std::gcd(w, a) == 1;
    }
    return false;
  });
}

Rational rho_star(std::int64_t a, const Rational& t1, const Rational& t2) {
  if (a < 1) throw std::invalid_argument("rho_star needs a >= 1");
  if (t1.sign() <= 0 || t2.sign() <= 0) throw std::invalid_argument("rho_star needs t1, t2 > 0");
  // rho_{1,1}(t1, t2) = t1 + t2, matching f(1, b, c) = b + c.
  if (a == 1) return t1 + t2;
  Rational total;
  for (std::int64_t l = 1; l < a; ++l) {
    if (std::gcd(l, a) != 1) continue;
    total += rho_eval(RodsethTables(a, l), t1, t2);
  }
  return total;
}

Rational rho_star(std::int64_t a, const Rational& alpha) { return rho_star(a, Rational(1), alpha); }

std::vector<Quadruple> brute_force_quadruples(std::int64_t a) {
  if (a < 1) throw std::invalid_argument("quadruples need a >= 1");
  std::vector<Quadruple> out;
  // v1 = 0 forces u1 = 1 and u2 = a.
  for (std::int64_t v2 = 0; v2 < a || (a == 1 && v2 == 0); ++v2) {
    if (std::gcd(a, v2) == 1) out.push_back({1, a, 0, v2});
  }
  for (std::int64_t u1 = 2; u1 <= a; ++u1) {
    for (std::int64_t v1 = 1; v1 < u1; ++v1) {
      if (std::gcd(u1, v1) != 1) continue;
      // u1 u2 = a + v1 v2 needs v1 v2 = -a (mod u1).
      const std::int64_t start = static_cast<std::int64_t>(
          (static_cast<i128>(u1 - a % u1) % u1) * mod_inverse(v1, u1) % u1);
      for (std::int64_t v2 = start; v2 * (u1 - v1) < a; v2 += u1) {
        const std::int64_t u2 = (a + v1 * v2) / u1;
        if (u2 > a || v2 >= u2 || std::gcd(u2, v2) != 1) continue;
        out.push_back({u1, u2, v1, v2});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quadruple> convergent_quadruples(std::int64_t a) {
  if (a < 2) throw std::invalid_argument("convergent quadruples need a >= 2");
  std::vector<Quadruple> out;
  for (std::int64_t l = 1; l < a; ++l) {
    if (std::gcd(l, a) != 1) continue;
    const RodsethTables t(a, l);
    for (int n = 0; n <= t.m(); ++n) out.push_back({t.q(n), t.s(n - 1), t.q(n - 1), t.s(n)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

BijectionReport quadruple_bijection_check(std::int64_t a) {
  const auto brute = brute_force_quadruples(a);
  if (a == 1) return {false, brute.size(), 0};
  const auto conv = convergent_quadruples(a);
  return {brute == conv, brute.size(), conv.size()};
}

bool in_base_region(const LatticeTuple& t, std::int64_t R, const Rational& alpha) {
  require_positive_alpha(alpha);
  const auto [n, k, qp, q] = t;
  if (k < 1 || k > n || qp < 1 || q < 0) return false;
  if (static_cast<i128>(n) * qp + static_cast<i128>(k) * q > R) return false;
  return alpha * Rational(n - k) < Rational(q) && Rational(q) <= alpha * Rational(n);
}

namespace {

struct RegionGeometry {
  RegionGeometry(std::int64_t R, const Rational& alpha)
      : R(R),
        alpha(alpha),
        D(narrow64(static_cast<i128>(R) * alpha.num() * alpha.den(), "radicand")),
        U1(QuadraticSurd::root(D, Rational(1, alpha.num()))),
        U2(QuadraticSurd::root(D, Rational(1, alpha.den()))) {}

  QuadraticSurd S(const Rational& r) const { return QuadraticSurd(r, D); }

  std::int64_t R;
  Rational alpha;
  std::int64_t D;
  QuadraticSurd U1;  // sqrt(R/alpha)
  QuadraticSurd U2;  // sqrt(R alpha)
};

int case_one(const RegionGeometry& g, const LatticeTuple& t) {
  const auto [n, k, qp, q] = t;
  const Rational N(n), K(k), Q(q), Qp(qp);
  if (!(g.S(N) <= g.U1) || k < 1 || k > n) return 0;
  const bool inner = g.alpha * (N - K) < Q && Q <= g.alpha * N && qp >= 1 && Qp <= (Rational(g.R) - K * Q) / N;
  return inner ? 1 : 0;
}

int cases_two_three(const RegionGeometry& g, const LatticeTuple& t) {
  const auto [n, k, qp, q] = t;
  const Rational N(n), K(k), Q(q), Qp(qp), R(g.R);
  const Rational& al = g.alpha;
  if (k < 1 || !(g.S(K) <= g.U1) || qp < 1) return 0;
  const bool low_q = al * (N - K) < Q;
  const Rational apex = R / (Qp + al * K);                  // n-coordinate of A
  const Rational corner = (R + al * K * K) / (Qp + al * K);  // n-coordinate of B
  const bool q_under_line = Q <= (R - N * Qp) / K;
  int count = 0;
  // Case 2
  if (g.S(Qp) <= g.U2 - al * K) {
    if (g.U1 < g.S(N) && N <= apex && low_q && Q <= al * N) ++count;
    if (apex < N && N <= corner && low_q && q_under_line) ++count;
  }
  // Case 3
  const QuadraticSurd edge = g.U2 - al * K;
  if (edge < g.S(Qp) && g.S(Qp) <= edge + al * K * K / g.U1) {
    if (g.U1 < g.S(N) && N <= corner && low_q && q_under_line) ++count;
  }
  return count;
}

int cases_four_five(const RegionGeometry& g, const LatticeTuple& t, FifthCaseReading reading) {
  const auto [n, k, qp, q] = t;
  const Rational N(n), K(k), Q(q), Qp(qp), R(g.R);
  const Rational& al = g.alpha;
  if (!(g.U1 < g.S(K)) || qp < 1 || q < 0 || !(g.S(Q) <= g.U2)) return 0;

  const QuadraticSurd split = g.U2 * (g.U2 - Q) / (g.U2 + Q);
  const Rational E = R / (Q + Qp);
  const Rational C = (R + Q * Q / al) / (Q + Qp);
  // k <= (R - n Q')/Q written without dividing by Q.
  const bool k_under_line = K * Q <= R - N * Qp;
  int count = 0;

  // Case 4
  if (g.S(Qp) <= split) {
    if (N <= E && k <= n) ++count;
    if (E < N && N <= C && k_under_line) ++count;
    if (g.U1 + Q / al < g.S(N) && N <= C && K <= N - Q / al) --count;
  }
  // Case 5
  const Rational& windowed = reading == FifthCaseReading::q_prime ? Qp : Q;
  if (split < g.S(windowed) && windowed <= g.U2 - Q) {
    if (N <= E && k <= n) ++count;
    if (E < N && g.S(N) <= (g.S(R) - g.U1 * Q) / Qp && k_under_line) ++count;
  }
  return count;
}

}  // namespace

int region_signed_membership(const LatticeTuple& t, std::int64_t R, const Rational& alpha,
                             FifthCaseReading reading) {
  require_positive_alpha(alpha);
  if (R < 1) throw std::invalid_argument("region needs R >= 1");
  const RegionGeometry g(R, alpha);
  if (t.n < 1) return 0;
  if (g.S(Rational(t.n)) <= g.U1) return case_one(g, t);
  // n > U1 from here on; the inner windows of cases 2-5 all require U1 < n.
  return cases_two_three(g, t) + cases_four_five(g, t, reading);
}

PartitionReport partition_scan(std::int64_t R, const Rational& alpha, unsigned workers,
                               FifthCaseReading reading) {
  const std::int64_t budget = 2 * R;
  workers = std::max(1u, workers);
  std::vector<PartitionReport> parts(workers);
  parallel_chunks(1, budget + 1, workers, [&](unsigned w, std::int64_t lo, std::int64_t hi) {
    auto& rep = parts[w];
    for (std::int64_t n = lo; n < hi; ++n) {
      for (std::int64_t k = 1; k <= n; ++k) {
        for (std::int64_t qp = 1; n * qp <= budget; ++qp) {
          for (std::int64_t q = 0; n * qp + k * q <= budget; ++q) {
            const LatticeTuple t{n, k, qp, q};
            const int expected = in_base_region(t, R, alpha) ? 1 : 0;
            ++rep.scanned;
            rep.in_region += expected;
            if (region_signed_membership(t, R, alpha, reading) != expected) ++rep.mismatches;
          }
        }
      }
    }
  });
  PartitionReport total;
  for (const auto& p : parts) {
    total.scanned += p.scanned;
    total.in_region += p.in_region;
    total.mismatches += p.mismatches;
  }
  return total;
}

LambdaMeanReport lambda_mean_check(std::int64_t R, std::int64_t delta, const Rational& alpha, DiagonalRule rule,
                                   unsigned workers) {
  if (delta < 1 || R < delta) throw std::invalid_argument("lambda_mean_check needs R >= delta >= 1");
  const LambdaTable table(R, alpha, rule, workers);
  i128 base = 0;
  i128 zsum = 0;
  for (std::int64_t a = delta; a <= R; a += delta) {
    base += table.base(a);
    zsum += table.z_weight(a);
  }
  LambdaMeanReport rep;
  rep.lhs = Rational::from_wide(base * delta, 1) + alpha * Rational::from_wide(zsum * delta, 1);
  rep.main = 4.0 * std::numbers::pi / 15.0 * std::pow(static_cast<double>(R), 2.5) * std::sqrt(alpha.to_double()) *
             totient_over_square_sum(delta).to_double();
  rep.rel_err = std::fabs(rep.lhs.to_double() - rep.main) / rep.main;
  return rep;
}

SigmaWeightedReport sigma_weighted_check(std::int64_t R, std::int64_t delta) {
  if (delta < 1 || R < delta) throw std::invalid_argument("sigma_weighted_check needs R >= delta >= 1");
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(R) + 1, 0);
  for (std::int64_t d = 1; d <= R; ++d) {
    for (std::int64_t m = d; m <= R; m += d) sigma[m] += d;
  }
  CompensatedSum lhs;
  // sigma_{-1}(a) a^{3/2} = sigma(a) sqrt(a)
  for (std::int64_t a = delta; a <= R; a += delta) {
    lhs += static_cast<double>(sigma[a]) * std::sqrt(static_cast<double>(a));
  }
  SigmaWeightedReport rep;
  rep.lhs = lhs.value();
  rep.main = std::numbers::pi * std::numbers::pi / 15.0 * std::pow(static_cast<double>(R), 2.5) /
             static_cast<double>(delta) * totient_over_square_sum(delta).to_double();
  rep.rel_err = std::fabs(rep.lhs - rep.main) / rep.main;
  return rep;
}

}  // namespace frobmean
