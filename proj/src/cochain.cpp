#include "galdef/cochain.hpp"

#include <algorithm>

namespace galdef {

namespace {

std::size_t table_size(const GroupView& view, const GaloisModule& module, std::uint32_t degree) {
    std::size_t n = view.size(), d = module.dim();
    switch (degree) {
        case 0: return d;
        case 1: return n * d;
        case 2: return n * n * d;
        default: throw invalid_parameters("Cochain: degree must be 0, 1 or 2");
    }
}

void check_compatible(const GroupView& view, const GaloisModule& module) {
    if (view.group().key() != module.group().key())
        throw invalid_parameters("Cochain: view and module over different groups");
}

} // namespace

Cochain Cochain::zero(std::shared_ptr<const GroupView> view,
                      std::shared_ptr<const GaloisModule> module, std::uint32_t degree) {
    check_compatible(*view, *module);
    Cochain c;
    c.degree = degree;
    c.values.assign(table_size(*view, *module, degree), 0);
    c.view = std::move(view);
    c.module = std::move(module);
    return c;
}

Cochain Cochain::random(std::shared_ptr<const GroupView> view,
                        std::shared_ptr<const GaloisModule> module, std::uint32_t degree,
                        SplitMix64& rng) {
    Cochain c = zero(std::move(view), std::move(module), degree);
    const std::uint32_t ell = c.module->ell();
    for (auto& v : c.values) v = (std::uint32_t)rng.below(ell);
    return c;
}

std::vector<std::uint32_t> Cochain::get1(std::uint32_t g) const {
    return {at1(g), at1(g) + dim()};
}
std::vector<std::uint32_t> Cochain::get2(std::uint32_t g, std::uint32_t h) const {
    return {at2(g, h), at2(g, h) + dim()};
}
void Cochain::set1(std::uint32_t g, const std::vector<std::uint32_t>& v) {
    std::copy(v.begin(), v.end(), at1(g));
}
void Cochain::set2(std::uint32_t g, std::uint32_t h, const std::vector<std::uint32_t>& v) {
    std::copy(v.begin(), v.end(), at2(g, h));
}

static void check_same_shape(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.view.get() != b.view.get() || a.values.size() != b.values.size() ||
        a.module->dim() != b.module->dim() || a.module->ell() != b.module->ell())
        throw invalid_parameters("Cochain: incompatible operands");
}

Cochain Cochain::operator+(const Cochain& o) const {
    check_same_shape(*this, o);
    Cochain r = *this;
    const std::uint32_t ell = module->ell();
    for (std::size_t k = 0; k < values.size(); ++k) r.values[k] = (values[k] + o.values[k]) % ell;
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    check_same_shape(*this, o);
    Cochain r = *this;
    const std::uint32_t ell = module->ell();
    for (std::size_t k = 0; k < values.size(); ++k)
        r.values[k] = (values[k] + ell - o.values[k]) % ell;
    return r;
}

Cochain Cochain::scaled(std::uint32_t factor) const {
    Cochain r = *this;
    const std::uint32_t ell = module->ell();
    factor %= ell;
    for (std::size_t k = 0; k < values.size(); ++k)
        r.values[k] = (std::uint32_t)((std::uint64_t)values[k] * factor % ell);
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    return degree == o.degree && view.get() == o.view.get() && values == o.values;
}

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<FpMatrix> action_table(const GroupView& view, const GaloisModule& module) {
    check_compatible(view, module);
    std::vector<FpMatrix> table;
    table.reserve(view.size());
    for (std::uint32_t k = 0; k < view.size(); ++k) table.push_back(module.action(view.element(k)));
    return table;
}

Cochain coboundary(const Cochain& c) {
    const GroupView& V = *c.view;
    const std::uint32_t n = V.size();
    const std::uint32_t d = c.dim();
    const std::uint32_t ell = c.module->ell();
    std::vector<FpMatrix> act = action_table(V, *c.module);

    if (c.degree == 0) {
        Cochain out = Cochain::zero(c.view, c.module, 1);
        std::vector<std::uint32_t> m = c.get1(0); // degree-0 table is one vector
        for (std::uint32_t g = 0; g < n; ++g) {
            std::vector<std::uint32_t> gm = act[g].apply(m);
            std::uint32_t* o = out.at1(g);
            for (std::uint32_t k = 0; k < d; ++k) o[k] = (gm[k] + ell - m[k]) % ell;
        }
        return out;
    }
    if (c.degree == 1) {
        Cochain out = Cochain::zero(c.view, c.module, 2);
        for (std::uint32_t g = 0; g < n; ++g) {
            const FpMatrix& A = act[g];
            for (std::uint32_t h = 0; h < n; ++h) {
                std::uint32_t gh = V.mul(g, h);
                const std::uint32_t* bh = c.at1(h);
                const std::uint32_t* bgh = c.at1(gh);
                const std::uint32_t* bg = c.at1(g);
                std::uint32_t* o = out.at2(g, h);
                for (std::uint32_t r = 0; r < d; ++r) {
                    std::uint64_t s = 0;
                    for (std::uint32_t k = 0; k < d; ++k) s += (std::uint64_t)A.at(r, k) * bh[k] % ell;
                    o[r] = (std::uint32_t)((s + 2ull * ell - bgh[r] + bg[r]) % ell);
                }
            }
        }
        return out;
    }
    throw invalid_parameters("coboundary: degree-2 input has no materialized target; use is_cocycle");
}

CocycleCheck is_cocycle(const Cochain& c, std::uint64_t triple_budget, std::uint64_t seed,
                        std::uint64_t samples) {
    CocycleCheck res;
    if (c.degree == 1) {
        Cochain d1 = coboundary(c);
        res.exhaustive = true;
        res.checked = (std::uint64_t)c.n() * c.n();
        if (!d1.is_zero()) {
            res.ok = false;
            for (std::uint32_t g = 0; g < c.n() && res.ok == false; ++g)
                for (std::uint32_t h = 0; h < c.n(); ++h) {
                    const std::uint32_t* v = d1.at2(g, h);
                    bool nz = false;
                    for (std::uint32_t k = 0; k < c.dim(); ++k) nz |= (v[k] != 0);
                    if (nz) { res.witness = {g, h, 0}; goto done1; }
                }
        done1:;
        }
        return res;
    }
    if (c.degree != 2) throw invalid_parameters("is_cocycle: degree must be 1 or 2");

    const GroupView& V = *c.view;
    const std::uint32_t n = V.size();
    const std::uint32_t d = c.dim();
    const std::uint32_t ell = c.module->ell();
    std::vector<FpMatrix> act = action_table(V, *c.module);

    auto defect_at = [&](std::uint32_t g, std::uint32_t h, std::uint32_t k) {
        std::uint32_t gh = V.mul(g, h), hk = V.mul(h, k);
        const FpMatrix& A = act[g];
        const std::uint32_t* u_hk = c.at2(h, k);
        const std::uint32_t* u_ghk = c.at2(gh, k);
        const std::uint32_t* u_ghk2 = c.at2(g, hk);
        const std::uint32_t* u_gh = c.at2(g, h);
        for (std::uint32_t r = 0; r < d; ++r) {
            std::uint64_t s = 0;
            for (std::uint32_t t = 0; t < d; ++t) s += (std::uint64_t)A.at(r, t) * u_hk[t] % ell;
            std::uint64_t v = (s + 3ull * ell - u_ghk[r] + u_ghk2[r] - u_gh[r]) % ell;
            if (v) return false;
        }
        return true;
    };

    std::uint64_t total = (std::uint64_t)n * n * n;
    if (total <= triple_budget) {
        res.exhaustive = true;
        res.checked = total;
        for (std::uint32_t g = 0; g < n; ++g)
            for (std::uint32_t h = 0; h < n; ++h)
                for (std::uint32_t k = 0; k < n; ++k)
                    if (!defect_at(g, h, k)) {
                        res.ok = false;
                        res.witness = {g, h, k};
                        return res;
                    }
        return res;
    }
    res.exhaustive = false;
    res.checked = samples;
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint32_t g = (std::uint32_t)rng.below(n);
        std::uint32_t h = (std::uint32_t)rng.below(n);
        std::uint32_t k = (std::uint32_t)rng.below(n);
        if (!defect_at(g, h, k)) {
            res.ok = false;
            res.witness = {g, h, k};
            return res;
        }
    }
    return res;
}

} // namespace galdef
