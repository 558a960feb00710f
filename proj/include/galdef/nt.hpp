#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace galdef {

bool is_prime(std::uint64_t n);

// a^e mod m, m > 0
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// extended gcd: returns g and x, y with a*x + b*y = g
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

// inverse of a modulo m; throws invalid_parameters when gcd(a, m) != 1
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// multiplicative order of a modulo the prime p; requires a != 0 mod p
std::uint32_t mul_order(std::uint64_t a, std::uint64_t p);

// trial-division factorization, sorted by prime
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// sorted distinct prime divisors of n (empty for n = 1)
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace galdef
