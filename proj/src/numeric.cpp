#include "centlab/numeric.hpp"

#include "centlab/errors.hpp"

namespace centlab {

bool is_prime(int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int d = 3; static_cast<std::int64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(int n) {
  if (n < 1) throw InvalidParameter("factorize: argument must be positive");
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<std::int64_t>(p) * p <= n; p += (p == 2 ? 1 : 2)) {
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

std::vector<int> prime_divisors_of(int n) {
  std::vector<int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw InvalidParameter("primitive root: modulus must be prime");
  if (p == 2) return 1;
  const auto primes = prime_divisors_of(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int f : primes) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantViolation("no primitive root found mod " + std::to_string(p));
}

int prime_power_base(int n) {
  if (n < 2) return 0;
  const auto f = factorize(n);
  return f.size() == 1 ? f[0].first : 0;
}

}  // namespace centlab
