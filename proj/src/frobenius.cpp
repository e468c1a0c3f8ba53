#include "frobmean/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace frobmean {

GeneratorSet::GeneratorSet(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generator set is empty");
  for (const auto g : gens_) {
    if (g < 1) throw std::invalid_argument("generators must be positive, got " + std::to_string(g));
  }
}

std::vector<std::int64_t> GeneratorSet::normalized() const {
  std::vector<std::int64_t> v = gens_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool GeneratorSet::has_duplicates() const { return normalized().size() != gens_.size(); }

std::int64_t GeneratorSet::gcd() const {
  std::int64_t g = 0;
  for (const auto x : gens_) g = std::gcd(g, x);
  return g;
}

std::int64_t GeneratorSet::sum() const {
  i128 s = 0;
  for (const auto x : gens_) s += x;
  return narrow64(s, "generator sum");
}

std::string_view to_string(Method m) { return m == Method::oracle ? "oracle" : "rodseth"; }

std::int64_t oracle_g(const GeneratorSet& gens) {
  if (gens.gcd() != 1) throw InfiniteGapsError("gcd != 1: infinite gaps");
  const auto v = gens.normalized();
  const std::int64_t m = v.front();
  if (m == 1) return -1;

  // Least representable value in each residue class mod m (Apéry set).
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kUnreached);
  using Entry = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    const auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (auto it = v.begin() + 1; it != v.end(); ++it) {
      const std::int64_t nr = (r + *it) % m;
      const std::int64_t nd = narrow64(static_cast<i128>(d) + *it, "oracle distance");
      if (nd < dist[nr]) {
        dist[nr] = nd;
        pq.emplace(nd, nr);
      }
    }
  }
  return *std::max_element(dist.begin(), dist.end()) - m;
}

FrobeniusResult oracle_frobenius(const GeneratorSet& gens) {
  FrobeniusResult r;
  r.g = oracle_g(gens);
  r.f = narrow64(static_cast<i128>(r.g) + gens.sum(), "f");
  r.method = Method::oracle;
  r.deduplicated = gens.has_duplicates();
  return r;
}

std::int64_t mod_inverse(std::int64_t b, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("modulus must be positive");
  if (a == 1) return 0;
  std::int64_t old_r = ((b % a) + a) % a, r = a;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("no inverse: gcd(a, b) != 1");
  return ((old_s % a) + a) % a;
}

std::int64_t find_multiplier(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("find_multiplier needs positive arguments");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("no inverse: gcd(a, b) != 1");
  const std::int64_t l = static_cast<std::int64_t>(static_cast<i128>(c % a) * mod_inverse(b, a) % a);
  return l == 0 ? a : l;
}

Rational rho_eval(const RodsethTables& t, const Rational& t1, const Rational& t2) {
  if (t1.sign() <= 0 || t2.sign() <= 0) throw std::invalid_argument("rho_eval needs t1, t2 > 0");
  const int n = t.band(t1, t2);
  return t1 * Rational(t.s(n - 1)) + t2 * Rational(t.q(n)) -
         std::min(t1 * Rational(t.s(n)), t2 * Rational(t.q(n - 1)));
}

Rational rho_eval(std::int64_t a, std::int64_t l, const Rational& t1, const Rational& t2) {
  return rho_eval(RodsethTables(a, l), t1, t2);
}

std::int64_t rho_eval(const RodsethTables& t, std::int64_t t1, std::int64_t t2) {
  const int n = t.band(t1, t2);
  const i128 v = static_cast<i128>(t1) * t.s(n - 1) + static_cast<i128>(t2) * t.q(n) -
                 std::min(static_cast<i128>(t1) * t.s(n), static_cast<i128>(t2) * t.q(n - 1));
  return narrow64(v, "rho");
}

namespace {

// f for pairwise-reduced inputs where a is coprime to b and c.
std::int64_t f_coprime_to_first(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 1 || b == 1 || c == 1) return a + b + c - 1;
  return rho_eval(RodsethTables(a, find_multiplier(a, b, c)), b, c);
}

}  // namespace

FrobeniusResult f_three(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("f_three needs positive arguments");
  if (std::gcd(std::gcd(a, b), c) != 1) throw InfiniteGapsError("gcd != 1: infinite gaps");
  FrobeniusResult r;
  r.method = Method::rodseth;
  const i128 sum = static_cast<i128>(a) + b + c;
  if (a == 1 || b == 1 || c == 1) {
    r.f = narrow64(sum - 1, "f");
    r.g = -1;
    return r;
  }
  // Johnson: f(d a, d b, c) = d f(a, b, c) whenever gcd(d, c) = 1.
  const std::int64_t d1 = std::gcd(a, b);
  a /= d1;
  b /= d1;
  const std::int64_t d2 = std::gcd(a, c);
  a /= d2;
  c /= d2;
  r.reduction_factor = d1 * d2;
  r.f = narrow64(static_cast<i128>(r.reduction_factor) * f_coprime_to_first(a, b, c), "f");
  r.g = narrow64(r.f - sum, "g");
  return r;
}

FixedModulusEvaluator::FixedModulusEvaluator(std::int64_t a) : a_(a) {
  if (a < 1) throw std::invalid_argument("modulus must be positive");
  inverse_.assign(static_cast<std::size_t>(a), 0);
  for (std::int64_t b = 1; b < a; ++b) {
    if (std::gcd(a, b) == 1) inverse_[b] = mod_inverse(b, a);
  }
  tables_.resize(static_cast<std::size_t>(a));
}

const RodsethTables& FixedModulusEvaluator::tables_for(std::int64_t l) {
  auto& slot = tables_[static_cast<std::size_t>(l)];
  if (!slot) slot.emplace(a_, l);
  return *slot;
}

std::int64_t FixedModulusEvaluator::f(std::int64_t b, std::int64_t c) {
  if (a_ == 1 || b == 1 || c == 1) return a_ + b + c - 1;
  if (std::gcd(a_, b) != 1 || std::gcd(a_, c) != 1) return f_three(a_, b, c).f;
  const std::int64_t l = static_cast<std::int64_t>(static_cast<i128>(c % a_) * inverse_[b % a_] % a_);
  return rho_eval(tables_for(l), b, c);
}

}  // namespace frobmean
