#ifndef ACDKIT_NUMBER_THEORY_HPP
#define ACDKIT_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

namespace acdkit {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse of a modulo a prime m; a must be nonzero mod m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
/// Smallest primitive root modulo a prime p.
std::uint64_t primitive_root(std::uint64_t p);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);
/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace acdkit

#endif  // ACDKIT_NUMBER_THEORY_HPP
