#pragma once

// Slow reference implementations, written independently of the library code
// paths so the fast versions have something honest to disagree with.

#include <cstdint>
#include <numeric>
#include <vector>

#include "galdef/matrix.hpp"

namespace oracle {

// plain trial division
inline bool is_prime_naive(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// rank by forward elimination only, no pivot normalization, no rref
inline std::uint32_t rank_naive(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
    std::uint32_t rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || m[k][c] % p == 0)
                continue;
            // scale row k by pivot and subtract multiple, avoiding inverses
            std::uint64_t pv = m[r][c] % p, kv = m[k][c] % p;
            for (std::size_t j = 0; j < cols; ++j)
                m[k][j] = static_cast<std::uint32_t>(
                    ((std::uint64_t)m[k][j] * pv % p + (p - kv) * (std::uint64_t)m[r][j] % p * 1) %
                    p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline std::uint32_t rank_naive(const galdef::FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> rows(m.rows, std::vector<std::uint32_t>(m.cols));
    for (std::uint32_t r = 0; r < m.rows; ++r)
        for (std::uint32_t c = 0; c < m.cols; ++c)
            rows[r][c] = m.at(r, c);
    return rank_naive(std::move(rows), m.mod);
}

// # P^1(Z/N) by direct orbit counting: pairs with gcd(a, b, N) = 1, one orbit
// per phi(N) unit multiples
inline std::uint64_t projective_line_count(std::uint64_t N) {
    if (N == 1)
        return 1;
    std::uint64_t pairs = 0;
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = 0; b < N; ++b)
            if (std::gcd(std::gcd(a, b), N) == 1)
                ++pairs;
    std::uint64_t phi = 0;
    for (std::uint64_t u = 0; u < N; ++u)
        if (std::gcd(u, N) == 1)
            ++phi;
    return pairs / phi;
}

// multiplicative order by repeated multiplication
inline std::uint32_t order_naive(std::uint64_t a, std::uint64_t p) {
    std::uint64_t x = a % p;
    std::uint32_t k = 1;
    while (x != 1) {
        x = x * (a % p) % p;
        ++k;
    }
    return k;
}

// H^n of a cyclic group of order n0 generated by a single matrix A over F_p,
// from the periodic resolution: H^0 = ker(A - 1), H^odd = ker(Nm)/im(A - 1),
// H^even = ker(A - 1)/im(Nm), with Nm = 1 + A + ... + A^(n0-1).
inline std::uint32_t cyclic_cohomology_dim(const galdef::FpMatrix& A, std::uint32_t n0,
                                           std::uint32_t degree) {
    using galdef::FpMatrix;
    std::uint32_t d = A.rows, p = A.mod;
    FpMatrix I = FpMatrix::identity(d, p);
    FpMatrix Nm(d, d, p);
    FpMatrix pw = I;
    for (std::uint32_t k = 0; k < n0; ++k) {
        Nm = Nm + pw;
        pw = pw * A;
    }
    FpMatrix AmI = A - I;
    std::uint32_t r_ami = rank_naive(AmI);
    std::uint32_t r_nm = rank_naive(Nm);
    if (degree == 0)
        return d - r_ami;
    if (degree % 2 == 1)
        return (d - r_nm) - r_ami;
    return (d - r_ami) - r_nm;
}

} // namespace oracle
