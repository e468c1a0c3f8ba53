#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frobmean/rational.hpp"

namespace frobmean {

/// Box a <= x1 N, b <= x2 N, c <= x3 N with inclusive bounds floor(x_i N).
struct BoxSpec {
  Rational x1{1}, x2{1}, x3{1};
  std::int64_t N = 1;

  /// floor(x_i N) computed exactly; throws if any bound is below 1.
  std::int64_t bound(int i) const;
};

struct MeanValueReport {
  i128 F = 0;
  double G = 0.0;
  /// (F - G) / (x1 x2 x3 N^{9/2})
  double E = 0.0;
  std::int64_t N = 0;
  std::int64_t triple_count = 0;
};

/// Exact sum of f and the (8/pi) sqrt(abc) sum over coprime triples in the box.
MeanValueReport box_sums(const BoxSpec& box, unsigned workers = 1);

/// Same sums with every f taken from the residue-class oracle.
MeanValueReport box_sums_oracle(const BoxSpec& box);

struct FixedAReport {
  double error = 0.0;
  /// |M_a|: pairs b <= x1 a, c <= x2 a with gcd(a, b, c) = 1.
  std::int64_t pair_count = 0;
};

/// Mean of f(a,b,c) - (8/pi) sqrt(abc) over M_a, divided by a^{3/2}.
FixedAReport fixed_a_error(std::int64_t a, const Rational& x1, const Rational& x2, unsigned workers = 1);

/// |M_a| by Möbius inversion over the divisors of a.
std::int64_t fixed_a_count_mobius(std::int64_t a, const Rational& x1, const Rational& x2);

/// All |E| were needed on a log scale but one of them is exactly zero.
class DegenerateFitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DecayFit {
  std::vector<std::pair<double, double>> points;
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares line through (log scale, log |E|).
DecayFit decay_fit(std::span<const std::pair<double, double>> points);

/// Number of adjacent pairs where |E| fails to decrease.
int adjacent_inversions(std::span<const double> magnitudes);

}  // namespace frobmean
