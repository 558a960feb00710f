#include "doctest.h"

#include "galdef/errors.hpp"
#include "galdef/matrix.hpp"
#include "galdef/nt.hpp"
#include "galdef/rng.hpp"
#include "oracles.hpp"

using namespace galdef;

TEST_SUITE_BEGIN("nt");

TEST_CASE("primality against trial division") {
    for (std::uint64_t n = 0; n < 2000; ++n)
        CHECK(is_prime(n) == oracle::is_prime_naive(n));
}

TEST_CASE("modular inverses multiply back to 1") {
    for (std::uint64_t m : {5ULL, 7ULL, 9ULL, 25ULL, 121ULL, 343ULL}) {
        for (std::uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                CHECK_THROWS_AS((void)inv_mod(a, m), invalid_parameters);
                continue;
            }
            CHECK(a * inv_mod(a, m) % m == 1);
        }
    }
}

TEST_CASE("pow_mod against repeated multiplication") {
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::uint64_t m = 2 + rng.below(1000);
        std::uint64_t a = rng.below(m);
        std::uint64_t e = rng.below(40);
        std::uint64_t slow = 1 % m;
        for (std::uint64_t k = 0; k < e; ++k)
            slow = slow * a % m;
        CHECK(pow_mod(a, e, m) == slow);
    }
}

TEST_CASE("multiplicative order") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 23ULL}) {
        for (std::uint64_t a = 1; a < p; ++a)
            CHECK(mul_order(a, p) == oracle::order_naive(a, p));
    }
}

TEST_CASE("factorize reassembles and reports primes") {
    SplitMix64 rng(12);
    for (int t = 0; t < 100; ++t) {
        std::uint64_t n = 1 + rng.below(1000000);
        std::uint64_t prod = 1;
        for (auto [p, e] : factorize(n)) {
            CHECK(oracle::is_prime_naive(p));
            for (std::uint32_t k = 0; k < e; ++k)
                prod *= p;
        }
        CHECK(prod == n);
    }
    CHECK(prime_divisors(156) == std::vector<std::uint64_t>{2, 3, 13});
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("matrix");

namespace {

FpMatrix random_matrix(std::uint32_t r, std::uint32_t c, std::uint32_t p, SplitMix64& rng) {
    FpMatrix m(r, c, p);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j)
            m.at(i, j) = static_cast<std::uint32_t>(rng.below(p));
    return m;
}

} // namespace

TEST_CASE("row_reduce rank against naive elimination") {
    SplitMix64 rng(21);
    for (int t = 0; t < 60; ++t) {
        std::uint32_t p = t % 2 ? 5 : 7;
        auto m = random_matrix(2 + t % 7, 2 + (t / 2) % 6, p, rng);
        auto rr = row_reduce(m);
        CHECK(rr.rank == oracle::rank_naive(m));
        CHECK(rr.rank + rr.kernel.size() == m.cols);
        for (const auto& k : rr.kernel) {
            auto img = m.apply(k);
            for (auto v : img)
                CHECK(v == 0);
        }
    }
}

TEST_CASE("solve_linear finds solutions and rejects inconsistencies") {
    SplitMix64 rng(22);
    for (int t = 0; t < 50; ++t) {
        std::uint32_t p = 5;
        auto A = random_matrix(4 + t % 3, 3 + t % 4, p, rng);
        std::vector<std::uint32_t> x(A.cols);
        for (auto& v : x)
            v = static_cast<std::uint32_t>(rng.below(p));
        auto b = A.apply(x);
        auto sol = solve_linear(A, b);
        REQUIRE(sol.has_value());
        CHECK(A.apply(*sol) == b);
    }
    FpMatrix zero(2, 2, 5);
    CHECK(!solve_linear(zero, {1, 0}).has_value());
}

TEST_CASE("streaming rank equals dense rank") {
    SplitMix64 rng(23);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(8, 5, 7, rng);
        StreamingRank sr(m.cols, m.mod);
        for (std::uint32_t r = 0; r < m.rows; ++r) {
            std::vector<std::uint32_t> row(m.cols);
            for (std::uint32_t c = 0; c < m.cols; ++c)
                row[c] = m.at(r, c);
            sr.add_row(std::move(row));
        }
        CHECK(sr.rank() == oracle::rank_naive(m));
    }
}

TEST_CASE("matrix inverse and pow") {
    SplitMix64 rng(24);
    FpMatrix I = FpMatrix::identity(3, 7);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(3, 3, 7, rng);
        auto rr = row_reduce(m);
        if (rr.rank < 3) {
            CHECK_THROWS_AS((void)m.inverse(), invalid_parameters);
            continue;
        }
        CHECK(m * m.inverse() == I);
        CHECK(m.pow(4) == m * m * m * m);
    }
}

TEST_CASE("chain ring solver handles non-unit pivots") {
    // 5x = 10 mod 25 has solutions despite the non-unit coefficient
    auto sol = solve_linear_zmod({{5}}, {10}, 5, 2);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] * 5 % 25 == 10);

    // 5x = 1 mod 25 does not
    CHECK(!solve_linear_zmod({{5}}, {1}, 5, 2).has_value());

    // mixed valuations across rows
    auto sol2 = solve_linear_zmod({{5, 1}, {0, 5}}, {7, 10}, 5, 2);
    REQUIRE(sol2.has_value());
    CHECK((5 * (*sol2)[0] + (*sol2)[1]) % 25 == 7);
    CHECK(5 * (*sol2)[1] % 25 == 10);
}

TEST_CASE("chain ring solver on random consistent systems") {
    SplitMix64 rng(25);
    for (int t = 0; t < 60; ++t) {
        std::uint32_t n = 2 + t % 4;
        std::uint64_t mod = 125;
        std::vector<std::vector<std::uint64_t>> A(n, std::vector<std::uint64_t>(n));
        std::vector<std::uint64_t> x(n);
        for (auto& row : A)
            for (auto& v : row)
                v = rng.below(mod);
        for (auto& v : x)
            v = rng.below(mod);
        std::vector<std::uint64_t> b(n, 0);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                b[i] = (b[i] + A[i][j] * x[j]) % mod;
        auto sol = solve_linear_zmod(A, b, 5, 3);
        REQUIRE(sol.has_value());
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (std::uint32_t j = 0; j < n; ++j)
                acc = (acc + A[i][j] * (*sol)[j]) % mod;
            CHECK(acc == b[i]);
        }
    }
}

TEST_SUITE_END();
