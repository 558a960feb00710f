#include "galdef/tame_group.hpp"

#include "galdef/nt.hpp"

namespace galdef {

TameGroup::TameGroup(std::uint32_t ell, std::uint64_t q) {
    if (ell <= 3 || !is_prime(ell))
        throw invalid_parameters("TameGroup: ell must be a prime > 3");
    if (q % ell == 0)
        throw invalid_parameters("TameGroup: q must be nonzero mod ell");
    ell_ = ell;
    q_ = (std::uint32_t)(q % ell);
    ord_ = mul_order(q_, ell_);
    m_ = ell_ * ord_;
    key_ = ((std::uint64_t)ell_ << 32) | q_;

    qpow_.resize(m_);
    qpow_neg_.resize(m_);
    std::uint32_t qinv = (std::uint32_t)inv_mod(q_, ell_);
    qpow_[0] = qpow_neg_[0] = 1;
    for (std::uint32_t i = 1; i < m_; ++i) {
        qpow_[i] = (std::uint32_t)((std::uint64_t)qpow_[i - 1] * q_ % ell_);
        qpow_neg_[i] = (std::uint32_t)((std::uint64_t)qpow_neg_[i - 1] * qinv % ell_);
    }
}

TameElement TameGroup::make(std::uint64_t i, std::uint64_t ip) const {
    return TameElement{(std::uint32_t)(i % m_), (std::uint32_t)(ip % ell_), key_};
}

void TameGroup::check_member(const TameElement& g) const {
    if (g.gkey != key_) throw invalid_parameters("TameGroup: element from a different group");
    if (g.i >= m_ || g.ip >= ell_) throw invalid_parameters("TameGroup: element out of range");
}

TameElement TameGroup::mul(const TameElement& a, const TameElement& b) const {
    check_member(a);
    check_member(b);
    std::uint32_t i = a.i + b.i;
    if (i >= m_) i -= m_;
    std::uint32_t ip = (std::uint32_t)(((std::uint64_t)a.ip * qpow_neg_[b.i] + b.ip) % ell_);
    return TameElement{i, ip, key_};
}

TameElement TameGroup::inverse(const TameElement& a) const {
    check_member(a);
    // (F^i tau^ip)^-1 = F^(-i) tau^(-ip q^i)
    std::uint32_t i = (m_ - a.i) % m_;
    std::uint32_t ip = (std::uint32_t)((std::uint64_t)(ell_ - a.ip) % ell_ * qpow_[a.i] % ell_);
    return TameElement{i, ip, key_};
}

TameElement TameGroup::power(TameElement a, std::uint64_t e) const {
    check_member(a);
    TameElement r = identity();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t TameGroup::eps(const TameElement& g) const {
    check_member(g);
    return qpow_[g.i];
}

std::vector<TameElement> TameGroup::enumerate() const {
    std::vector<TameElement> out;
    out.reserve(order());
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t ip = 0; ip < ell_; ++ip) out.push_back(TameElement{i, ip, key_});
    return out;
}

std::shared_ptr<const TameGroup> make_group(std::uint32_t ell, std::uint64_t q) {
    return std::make_shared<const TameGroup>(ell, q);
}

} // namespace galdef
