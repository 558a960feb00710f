#include "galdef/nt.hpp"

#include "galdef/errors.hpp"

namespace galdef {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    a %= m;
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * a % m;
        a = (__uint128_t)a * a % m;
        e >>= 1;
    }
    return r;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t x, y;
    std::int64_t g = egcd((std::int64_t)(a % m), (std::int64_t)m, x, y);
    if (g != 1) throw invalid_parameters("inv_mod: not a unit modulo " + std::to_string(m));
    std::int64_t r = x % (std::int64_t)m;
    if (r < 0) r += (std::int64_t)m;
    return (std::uint64_t)r;
}

std::uint32_t mul_order(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw invalid_parameters("mul_order: argument divisible by modulus");
    std::uint64_t v = a;
    std::uint32_t k = 1;
    while (v != 1) {
        v = (__uint128_t)v * a % p;
        ++k;
        if (k > p) throw invariant_violation("mul_order: no order found; modulus not prime?");
    }
    return k;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        std::uint32_t e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

} // namespace galdef
