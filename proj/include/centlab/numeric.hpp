#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace centlab {

bool is_prime(int n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> factorize(int n);

/// Distinct primes dividing n, ascending. Empty for n = 1.
std::vector<int> prime_divisors_of(int n);

/// Largest power of p dividing n.
int p_part(int n, int p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Smallest generator of the multiplicative group mod p (p prime).
int smallest_primitive_root(int p);

/// If n = p^k for a prime p and k >= 1, returns p; otherwise 0.
int prime_power_base(int n);

}  // namespace centlab
