#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "frobmean/contfrac.hpp"
#include "frobmean/rational.hpp"

namespace frobmean {

/// The generators share a common factor, so infinitely many integers are unrepresentable.
class InfiniteGapsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-empty list of positive generators, as given (duplicates allowed).
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::int64_t> gens);

  std::span<const std::int64_t> gens() const { return gens_; }
  /// Sorted, duplicates removed.
  std::vector<std::int64_t> normalized() const;
  bool has_duplicates() const;
  std::int64_t gcd() const;
  /// Sum over the multiset as given.
  std::int64_t sum() const;

 private:
  std::vector<std::int64_t> gens_;
};

enum class Method { oracle, rodseth };
std::string_view to_string(Method m);

struct FrobeniusResult {
  std::int64_t g = 0;
  std::int64_t f = 0;
  Method method = Method::oracle;
  std::int64_t reduction_factor = 1;
  /// True when duplicate generators were dropped before computing g.
  bool deduplicated = false;
};

/// Largest integer that is not a non-negative combination of the generators (-1 if 1 is one).
std::int64_t oracle_g(const GeneratorSet& gens);
FrobeniusResult oracle_frobenius(const GeneratorSet& gens);

/// Inverse of b modulo a, for gcd(a, b) = 1.
std::int64_t mod_inverse(std::int64_t b, std::int64_t a);

/// The l in [1, a] with b*l = c (mod a).
std::int64_t find_multiplier(std::int64_t a, std::int64_t b, std::int64_t c);

Rational rho_eval(const RodsethTables& tables, const Rational& t1, const Rational& t2);
Rational rho_eval(std::int64_t a, std::int64_t l, const Rational& t1, const Rational& t2);
/// Integer arguments; the value is an integer in that case.
std::int64_t rho_eval(const RodsethTables& tables, std::int64_t t1, std::int64_t t2);

/// f and g of a triple via Johnson reduction and Rödseth's formula.
FrobeniusResult f_three(std::int64_t a, std::int64_t b, std::int64_t c);

/*
 * Rödseth evaluator for many (b, c) against one fixed a. Inverses modulo a
 * and convergent tables are built lazily and reused; not thread safe, give
 * each worker its own instance.
 */
class FixedModulusEvaluator {
 public:
  explicit FixedModulusEvaluator(std::int64_t a);

  std::int64_t a() const { return a_; }
  /// f(a, b, c) for gcd(a, b, c) = 1.
  std::int64_t f(std::int64_t b, std::int64_t c);

 private:
  const RodsethTables& tables_for(std::int64_t l);

  std::int64_t a_;
  std::vector<std::int64_t> inverse_;
  std::vector<std::optional<RodsethTables>> tables_;
};

}  // namespace frobmean
