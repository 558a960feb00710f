#pragma once

#include <cstdint>
#include <string>

#include "galdef/errors.hpp"
#include "galdef/nt.hpp"

namespace galdef {

// Scalar in the prime field F_ell. Carries its modulus; mixed-modulus
// arithmetic throws.
struct FpScalar {
    std::uint32_t v = 0;
    std::uint32_t mod = 0;

    FpScalar() = default;
    FpScalar(std::int64_t value, std::uint32_t modulus) : mod(modulus) {
        if (modulus < 2) throw invalid_parameters("FpScalar: modulus must be >= 2");
        std::int64_t r = value % (std::int64_t)modulus;
        if (r < 0) r += modulus;
        v = (std::uint32_t)r;
    }

    static void check(const FpScalar& a, const FpScalar& b) {
        if (a.mod != b.mod) throw invalid_parameters("FpScalar: mixed moduli");
    }

    FpScalar operator+(const FpScalar& o) const { check(*this, o); return FpScalar((std::int64_t)v + o.v, mod); }
    FpScalar operator-(const FpScalar& o) const { check(*this, o); return FpScalar((std::int64_t)v - o.v, mod); }
    FpScalar operator*(const FpScalar& o) const { check(*this, o); return FpScalar((std::int64_t)v * o.v % mod, mod); }
    FpScalar operator-() const { return FpScalar(-(std::int64_t)v, mod); }
    bool operator==(const FpScalar& o) const { return v == o.v && mod == o.mod; }
    bool is_zero() const { return v == 0; }

    FpScalar inverse() const {
        if (v == 0) throw invalid_parameters("FpScalar: inverse of zero");
        return FpScalar((std::int64_t)inv_mod(v, mod), mod);
    }
};

// Scalar in Z/ell^K. Units are exactly the values not divisible by ell.
struct ZmodScalar {
    std::uint64_t v = 0;
    std::uint32_t ell = 0;
    std::uint32_t K = 1;
    std::uint64_t mod = 0; // ell^K

    ZmodScalar() = default;
    ZmodScalar(std::int64_t value, std::uint32_t ell_, std::uint32_t K_ = 2) : ell(ell_), K(K_) {
        if (!is_prime(ell_)) throw invalid_parameters("ZmodScalar: ell must be prime");
        if (K_ < 1) throw invalid_parameters("ZmodScalar: K must be >= 1");
        mod = 1;
        for (std::uint32_t i = 0; i < K_; ++i) mod *= ell_;
        std::int64_t r = value % (std::int64_t)mod;
        if (r < 0) r += (std::int64_t)mod;
        v = (std::uint64_t)r;
    }

    static void check(const ZmodScalar& a, const ZmodScalar& b) {
        if (a.mod != b.mod || a.ell != b.ell) throw invalid_parameters("ZmodScalar: mixed moduli");
    }

    ZmodScalar operator+(const ZmodScalar& o) const { check(*this, o); ZmodScalar r = *this; r.v = (v + o.v) % mod; return r; }
    ZmodScalar operator-(const ZmodScalar& o) const { check(*this, o); ZmodScalar r = *this; r.v = (v + mod - o.v) % mod; return r; }
    ZmodScalar operator*(const ZmodScalar& o) const { check(*this, o); ZmodScalar r = *this; r.v = (__uint128_t)v * o.v % mod; return r; }
    bool operator==(const ZmodScalar& o) const { return v == o.v && mod == o.mod; }

    bool is_unit() const { return v % ell != 0; }
};

// Multiplicative inverse in Z/ell^K; throws invalid_parameters ("not a unit")
// when ell divides the value.
ZmodScalar invert_unit(const ZmodScalar& z);

} // namespace galdef
