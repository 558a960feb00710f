#include "galdef/truncpoly.hpp"

#include <algorithm>

#include "galdef/errors.hpp"
#include "galdef/nt.hpp"

namespace galdef {

namespace {

// graded lex: degree first, then lexicographic on the exponent tuple
bool monomial_less(const std::array<std::uint8_t, 6>& a, const std::array<std::uint8_t, 6>& b) {
    std::uint32_t da = 0, db = 0;
    for (int i = 0; i < 6; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db;
    return a > b; // larger exponent on an earlier variable comes first
}

void gen_monomials(std::uint32_t nvars, std::uint32_t maxdeg, std::uint32_t var,
                   std::uint32_t used, std::array<std::uint8_t, 6>& cur,
                   std::vector<std::array<std::uint8_t, 6>>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e + used <= maxdeg; ++e) {
        cur[var] = static_cast<std::uint8_t>(e);
        gen_monomials(nvars, maxdeg, var + 1, used + e, cur, out);
    }
    cur[var] = 0;
}

} // namespace

std::shared_ptr<const TruncRing> TruncRing::make(std::uint32_t ell, std::uint32_t K,
                                                 std::uint32_t nvars, std::uint32_t max_degree) {
    if (!is_prime(ell))
        throw invalid_parameters("TruncRing: ell must be prime");
    if (K < 1 || K > 18)
        throw invalid_parameters("TruncRing: precision K out of range");
    if (nvars < 1 || nvars > 6)
        throw invalid_parameters("TruncRing: between 1 and 6 variables");
    if (max_degree < 1 || max_degree > 10)
        throw invalid_parameters("TruncRing: max_degree out of range");
    std::uint64_t modulus = 1;
    for (std::uint32_t i = 0; i < K; ++i) {
        if (modulus > (std::uint64_t(1) << 62) / ell)
            throw invalid_parameters("TruncRing: ell^K does not fit");
        modulus *= ell;
    }
    auto ring = std::shared_ptr<TruncRing>(new TruncRing());
    ring->ell_ = ell;
    ring->K_ = K;
    ring->nvars_ = nvars;
    ring->max_degree_ = max_degree;
    ring->modulus_ = modulus;
    std::array<std::uint8_t, 6> cur{};
    gen_monomials(nvars, max_degree, 0, 0, cur, ring->monomials_);
    std::sort(ring->monomials_.begin(), ring->monomials_.end(), monomial_less);
    for (std::uint32_t i = 0; i < ring->monomials_.size(); ++i) {
        const auto& m = ring->monomials_[i];
        std::uint32_t d = 0;
        for (int v = 0; v < 6; ++v)
            d += m[v];
        ring->degrees_.push_back(d);
        ring->index_.emplace(m, i);
    }
    return ring;
}

std::optional<std::uint32_t> TruncRing::index_of(const std::array<std::uint8_t, 6>& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> TruncRing::product_index(std::uint32_t i, std::uint32_t j) const {
    if (degrees_[i] + degrees_[j] > max_degree_)
        return std::nullopt;
    std::array<std::uint8_t, 6> e{};
    for (int v = 0; v < 6; ++v)
        e[v] = static_cast<std::uint8_t>(monomials_[i][v] + monomials_[j][v]);
    return index_of(e);
}

std::string TruncRing::monomial_name(std::uint32_t idx) const {
    const auto& m = monomials_[idx];
    std::string out;
    for (std::uint32_t v = 0; v < nvars_; ++v) {
        if (m[v] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "T" + std::to_string(v + 1);
        if (m[v] > 1)
            out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

TruncPoly::TruncPoly(std::shared_ptr<const TruncRing> ring)
    : ring_(std::move(ring)), c_(ring_->count(), 0) {}

TruncPoly TruncPoly::constant(std::shared_ptr<const TruncRing> ring, std::uint64_t v) {
    TruncPoly p(std::move(ring));
    p.c_[0] = v % p.ring_->modulus();
    return p;
}

TruncPoly TruncPoly::variable(std::shared_ptr<const TruncRing> ring, std::uint32_t i) {
    if (i >= ring->nvars())
        throw invalid_parameters("TruncPoly::variable: index out of range");
    TruncPoly p(ring);
    std::array<std::uint8_t, 6> e{};
    e[i] = 1;
    p.c_[*ring->index_of(e)] = 1;
    return p;
}

void TruncPoly::set_coeff(std::uint32_t idx, std::uint64_t v) {
    c_[idx] = v % ring_->modulus();
}

void TruncPoly::check_ring(const TruncPoly& o) const {
    if (ring_ != o.ring_)
        throw invalid_parameters("TruncPoly: mixed rings");
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
    check_ring(o);
    TruncPoly out(ring_);
    for (std::uint32_t i = 0; i < c_.size(); ++i)
        out.c_[i] = (c_[i] + o.c_[i]) % ring_->modulus();
    return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
    check_ring(o);
    TruncPoly out(ring_);
    for (std::uint32_t i = 0; i < c_.size(); ++i)
        out.c_[i] = (c_[i] + ring_->modulus() - o.c_[i]) % ring_->modulus();
    return out;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
    check_ring(o);
    TruncPoly out(ring_);
    const std::uint64_t mod = ring_->modulus();
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < c_.size(); ++j) {
            if (o.c_[j] == 0)
                continue;
            auto idx = ring_->product_index(i, j);
            if (!idx)
                continue;
            unsigned __int128 t = static_cast<unsigned __int128>(c_[i]) * o.c_[j] + out.c_[*idx];
            out.c_[*idx] = static_cast<std::uint64_t>(t % mod);
        }
    }
    return out;
}

TruncPoly TruncPoly::scaled(std::uint64_t v) const {
    TruncPoly out(ring_);
    const std::uint64_t mod = ring_->modulus();
    v %= mod;
    for (std::uint32_t i = 0; i < c_.size(); ++i)
        out.c_[i] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(c_[i]) * v % mod);
    return out;
}

bool TruncPoly::operator==(const TruncPoly& o) const { return ring_ == o.ring_ && c_ == o.c_; }

bool TruncPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

std::optional<std::uint32_t> TruncPoly::lowest_degree() const {
    std::optional<std::uint32_t> best;
    for (std::uint32_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && (!best || ring_->degree_of(i) < *best))
            best = ring_->degree_of(i);
    return best;
}

bool TruncPoly::is_unit() const { return c_[0] % ring_->ell() != 0; }

TruncPoly TruncPoly::inverse() const {
    if (!is_unit())
        throw invalid_parameters("TruncPoly::inverse: constant term is not a unit");
    TruncPoly x = TruncPoly::constant(ring_, inv_mod(c_[0], ring_->modulus()));
    TruncPoly one = TruncPoly::constant(ring_, 1);
    // 1 - u x0 has no constant term, so Newton doubling kills it in
    // log2(max_degree) + 1 rounds
    for (int round = 0; round < 12; ++round) {
        TruncPoly err = one - (*this) * x;
        if (err.is_zero())
            return x;
        x = x + x * err; // x (2 - u x)
    }
    if (((*this) * x) == one)
        return x;
    throw invariant_violation("TruncPoly::inverse: Newton iteration failed to converge");
}

std::map<std::string, std::uint64_t> TruncPoly::monomial_map() const {
    std::map<std::string, std::uint64_t> out;
    for (std::uint32_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            out.emplace(ring_->monomial_name(i), c_[i]);
    return out;
}

std::string TruncPoly::to_string() const {
    std::string out;
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        std::string name = ring_->monomial_name(i);
        if (name == "1")
            out += std::to_string(c_[i]);
        else if (c_[i] == 1)
            out += name;
        else
            out += std::to_string(c_[i]) + "*" + name;
    }
    return out.empty() ? "0" : out;
}

MatrixOverTrunc::MatrixOverTrunc(std::shared_ptr<const TruncRing> ring)
    : e{TruncPoly(ring), TruncPoly(ring), TruncPoly(ring), TruncPoly(ring)} {}

MatrixOverTrunc MatrixOverTrunc::identity(std::shared_ptr<const TruncRing> ring) {
    MatrixOverTrunc m(ring);
    m.e[0] = TruncPoly::constant(ring, 1);
    m.e[3] = TruncPoly::constant(ring, 1);
    return m;
}

MatrixOverTrunc MatrixOverTrunc::operator+(const MatrixOverTrunc& o) const {
    MatrixOverTrunc out(ring());
    for (int i = 0; i < 4; ++i)
        out.e[i] = e[i] + o.e[i];
    return out;
}

MatrixOverTrunc MatrixOverTrunc::operator-(const MatrixOverTrunc& o) const {
    MatrixOverTrunc out(ring());
    for (int i = 0; i < 4; ++i)
        out.e[i] = e[i] - o.e[i];
    return out;
}

MatrixOverTrunc MatrixOverTrunc::operator*(const MatrixOverTrunc& o) const {
    MatrixOverTrunc out(ring());
    out.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    out.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    out.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    out.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return out;
}

bool MatrixOverTrunc::operator==(const MatrixOverTrunc& o) const {
    for (int i = 0; i < 4; ++i)
        if (!(e[i] == o.e[i]))
            return false;
    return true;
}

TruncPoly MatrixOverTrunc::det() const { return e[0] * e[3] - e[1] * e[2]; }

MatrixOverTrunc MatrixOverTrunc::inverse() const {
    TruncPoly dinv = det().inverse();
    MatrixOverTrunc out(ring());
    out.e[0] = e[3] * dinv;
    out.e[1] = (TruncPoly(ring()) - e[1]) * dinv;
    out.e[2] = (TruncPoly(ring()) - e[2]) * dinv;
    out.e[3] = e[0] * dinv;
    return out;
}

MatrixOverTrunc MatrixOverTrunc::pow(std::uint64_t n) const {
    MatrixOverTrunc acc = identity(ring());
    MatrixOverTrunc base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

} // namespace galdef
