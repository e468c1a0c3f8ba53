#include "frobmean/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frobmean {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " requires a positive integer");
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require_positive(n, "factorize");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  int m = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

NumTheoryTables::NumTheoryTables(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("number-theory table limit must be >= 1");
  const auto size = static_cast<std::size_t>(limit) + 1;
  mu_.assign(size, 0);
  phi_.assign(size, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(size, false);
  mu_[1] = 1;
  phi_[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu_[i] = -1;
      phi_[i] = i - 1;
    }
    for (const std::int64_t p : primes) {
      if (p > limit / i) break;
      const std::int64_t ip = i * p;
      composite[ip] = true;
      if (i % p == 0) {
        mu_[ip] = 0;
        phi_[ip] = phi_[i] * p;
        break;
      }
      mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
      phi_[ip] = phi_[i] * (p - 1);
    }
  }
}

int NumTheoryTables::mu(std::int64_t n) const {
  require_positive(n, "mu");
  return n <= limit_ ? mu_[n] : mobius(n);
}

std::int64_t NumTheoryTables::phi(std::int64_t n) const {
  require_positive(n, "phi");
  return n <= limit_ ? phi_[n] : totient(n);
}

NumTheoryTables build_tables(std::int64_t limit) { return NumTheoryTables(limit); }

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational sigma_minus1(std::int64_t n) {
  // sum_{d|n} 1/d = sigma(n)/n
  std::int64_t sigma = 0;
  for (const std::int64_t d : divisors(n)) sigma += d;
  return Rational(sigma, n);
}

Rational heilbronn_lhs(std::int64_t a) {
  require_positive(a, "heilbronn_lhs");
  Rational total;
  for (const std::int64_t d1 : divisors(a)) {
    const int m1 = mobius(d1);
    if (m1 == 0) continue;
    for (const std::int64_t d2 : divisors(a / d1)) {
      const int m2 = mobius(d2);
      if (m2 == 0) continue;
      const std::int64_t d = d1 * d2;
      total += Rational(m1 * m2, d) * sigma_minus1(a / d);
    }
  }
  return total;
}

int delta_div(std::int64_t q, std::int64_t a) {
  require_positive(q, "delta_div");
  return a % q == 0 ? 1 : 0;
}

Rational totient_over_square_sum(std::int64_t delta) {
  Rational s;
  for (const std::int64_t t : divisors(delta)) s += Rational(totient(t), t * t);
  return s;
}

}  // namespace frobmean
