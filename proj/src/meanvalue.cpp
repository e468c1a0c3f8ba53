#include "frobmean/meanvalue.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "frobmean/frobenius.hpp"
#include "frobmean/numtheory.hpp"
#include "frobmean/parallel.hpp"
#include "frobmean/summation.hpp"

namespace frobmean {

namespace {

constexpr double kEightOverPi = 8.0 / std::numbers::pi;

double main_term(std::int64_t a, std::int64_t b, std::int64_t c) {
  const i128 product = static_cast<i128>(a) * b * c;
  return kEightOverPi * std::sqrt(static_cast<double>(product));
}

std::int64_t floor_bound(const Rational& x, std::int64_t N) {
  if (x.sign() <= 0) throw std::invalid_argument("box ratios must be positive");
  return (x * Rational(N)).floor();
}

struct Partial {
  i128 F = 0;
  CompensatedSum G;
  std::int64_t count = 0;
};

MeanValueReport finish(const BoxSpec& box, const std::vector<Partial>& parts) {
  MeanValueReport rep;
  rep.N = box.N;
  CompensatedSum G;
  for (const auto& p : parts) {
    if (p.F > 0 && rep.F > std::numeric_limits<i128>::max() - p.F) throw OverflowError("box sum F overflows 128 bits");
    rep.F += p.F;
    G += p.G;
    rep.triple_count += p.count;
  }
  rep.G = G.value();
  const double scale =
      (box.x1 * box.x2 * box.x3).to_double() * std::pow(static_cast<double>(box.N), 4.5);
  rep.E = (static_cast<double>(rep.F) - rep.G) / scale;
  return rep;
}

template <typename EvalFactory>
MeanValueReport scan_box(const BoxSpec& box, unsigned workers, EvalFactory make_eval) {
  const std::int64_t A = box.bound(1), B = box.bound(2), C = box.bound(3);
  workers = std::max(1u, workers);
  std::vector<Partial> parts(workers);
  // Interleave the a-range so each worker gets a similar mix of small and large a.
  parallel_chunks(0, workers, workers, [&](unsigned, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t w = lo; w < hi; ++w) {
      auto& part = parts[static_cast<std::size_t>(w)];
      for (std::int64_t a = 1 + w; a <= A; a += workers) {
        auto eval = make_eval(a);
        for (std::int64_t b = 1; b <= B; ++b) {
          const std::int64_t gab = std::gcd(a, b);
          for (std::int64_t c = 1; c <= C; ++c) {
            if (gab != 1 && std::gcd(gab, c) != 1) continue;
            part.F += eval(b, c);
            part.G += main_term(a, b, c);
            ++part.count;
          }
        }
      }
    }
  });
  return finish(box, parts);
}

}  // namespace

std::int64_t BoxSpec::bound(int i) const {
  if (N < 1) throw std::invalid_argument("box size N must be positive");
  const Rational& x = i == 1 ? x1 : i == 2 ? x2 : x3;
  const std::int64_t v = floor_bound(x, N);
  if (v < 1) throw std::invalid_argument("box bound floor(x N) must be at least 1");
  return v;
}

MeanValueReport box_sums(const BoxSpec& box, unsigned workers) {
  return scan_box(box, workers, [](std::int64_t a) {
    return [ev = FixedModulusEvaluator(a)](std::int64_t b, std::int64_t c) mutable { return ev.f(b, c); };
  });
}

MeanValueReport box_sums_oracle(const BoxSpec& box) {
  return scan_box(box, 1, [](std::int64_t a) {
    return [a](std::int64_t b, std::int64_t c) { return oracle_frobenius(GeneratorSet({a, b, c})).f; };
  });
}

FixedAReport fixed_a_error(std::int64_t a, const Rational& x1, const Rational& x2, unsigned workers) {
  if (a < 2) throw std::invalid_argument("fixed_a_error needs a >= 2");
  const std::int64_t B = floor_bound(x1, a), C = floor_bound(x2, a);
  if (B < 1 || C < 1) throw std::invalid_argument("empty (b, c) range");
  workers = std::max(1u, workers);
  std::vector<CompensatedSum> sums(workers);
  std::vector<std::int64_t> counts(workers, 0);
  parallel_chunks(1, B + 1, workers, [&](unsigned w, std::int64_t lo, std::int64_t hi) {
    FixedModulusEvaluator ev(a);
    for (std::int64_t b = lo; b < hi; ++b) {
      const std::int64_t gab = std::gcd(a, b);
      for (std::int64_t c = 1; c <= C; ++c) {
        if (gab != 1 && std::gcd(gab, c) != 1) continue;
        sums[w] += static_cast<double>(ev.f(b, c)) - main_term(a, b, c);
        ++counts[w];
      }
    }
  });
  CompensatedSum total;
  FixedAReport rep;
  for (unsigned w = 0; w < workers; ++w) {
    total += sums[w];
    rep.pair_count += counts[w];
  }
  rep.error = total.value() / (std::pow(static_cast<double>(a), 1.5) * static_cast<double>(rep.pair_count));
  return rep;
}

std::int64_t fixed_a_count_mobius(std::int64_t a, const Rational& x1, const Rational& x2) {
  const std::int64_t B = floor_bound(x1, a), C = floor_bound(x2, a);
  std::int64_t count = 0;
  for (const std::int64_t d : divisors(a)) count += mobius(d) * (B / d) * (C / d);
  return count;
}

DecayFit decay_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("decay fit needs at least two points");
  DecayFit fit;
  fit.points.assign(points.begin(), points.end());
  double sx = 0, sy = 0;
  for (const auto& [scale, mag] : points) {
    if (!(scale > 0)) throw std::invalid_argument("decay fit scales must be positive");
    if (mag == 0) throw DegenerateFitError("exact cancellation: |E| = 0 has no logarithm");
    sx += std::log(scale);
    sy += std::log(std::fabs(mag));
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [scale, mag] : points) {
    const double dx = std::log(scale) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(std::fabs(mag)) - my);
  }
  if (sxx == 0) throw std::invalid_argument("decay fit needs distinct scales");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

int adjacent_inversions(std::span<const double> magnitudes) {
  int inversions = 0;
  for (std::size_t i = 1; i < magnitudes.size(); ++i) {
    if (std::fabs(magnitudes[i]) >= std::fabs(magnitudes[i - 1])) ++inversions;
  }
  return inversions;
}

}  // namespace frobmean
