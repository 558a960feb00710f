#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galdef/errors.hpp"

namespace galdef {

// Element F^i tau^ip of the metacyclic group below, in normal form.
// gkey ties the element to the (ell, q) that produced it, so products
// across distinct groups are rejected.
struct TameElement {
    std::uint32_t i = 0;
    std::uint32_t ip = 0;
    std::uint64_t gkey = 0;

    bool operator==(const TameElement& o) const { return i == o.i && ip == o.ip && gkey == o.gkey; }
};

// The finite metacyclic group
//   < F, tau | tau^ell = 1, F^m = 1, F tau F^-1 = tau^q >,  m = ell * ord(q mod ell),
// with elements in normal form F^i tau^ip (i mod m, ip mod ell).
//
// Normal-form product:
//   (F^i1 tau^ip1) (F^i2 tau^ip2) = F^(i1+i2) tau^(ip1 * q^(-i2) + ip2),
// from tau^a F = F tau^(a q^-1).
class TameGroup {
  public:
    // ell > 3 prime; q is taken mod ell and must be nonzero there.
    // q = 1 mod ell is allowed and gives the abelian case with m = ell.
    TameGroup(std::uint32_t ell, std::uint64_t q);

    std::uint32_t ell() const { return ell_; }
    std::uint32_t q() const { return q_; }      // q mod ell
    std::uint32_t m() const { return m_; }      // order of F
    std::uint32_t ord_q() const { return ord_; }
    std::uint64_t order() const { return (std::uint64_t)m_ * ell_; }
    std::uint64_t key() const { return key_; }

    TameElement make(std::uint64_t i, std::uint64_t ip) const;
    TameElement identity() const { return make(0, 0); }
    TameElement frobenius() const { return make(1, 0); }
    TameElement tau() const { return make(0, 1); }

    TameElement mul(const TameElement& a, const TameElement& b) const;
    TameElement inverse(const TameElement& a) const;
    TameElement power(TameElement a, std::uint64_t e) const;

    // q^i and q^-i mod ell for i mod m
    std::uint32_t q_pow(std::uint32_t i) const { return qpow_[i % m_]; }
    std::uint32_t q_pow_neg(std::uint32_t i) const { return qpow_neg_[i % m_]; }

    // the cyclotomic-character value q^i of F^i tau^ip, mod ell
    std::uint32_t eps(const TameElement& g) const;

    // all m*ell elements, i ascending then ip ascending
    std::vector<TameElement> enumerate() const;

  private:
    void check_member(const TameElement& g) const;

    std::uint32_t ell_, q_, ord_, m_;
    std::uint64_t key_;
    std::vector<std::uint32_t> qpow_, qpow_neg_;
};

std::shared_ptr<const TameGroup> make_group(std::uint32_t ell, std::uint64_t q);

} // namespace galdef
