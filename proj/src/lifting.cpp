#include "galdef/lifting.hpp"

#include "galdef/errors.hpp"
#include "galdef/nt.hpp"

namespace galdef {

namespace {

FpMatrix diag2(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
    FpMatrix m(2, 2, mod);
    m.at(0, 0) = a % mod;
    m.at(1, 1) = b % mod;
    return m;
}

std::shared_ptr<const GaloisModule> ad_for(const GroupView& view, const ResidualFrobenius& frob) {
    return build_ad(view.group_ptr(), frob, false);
}

void check_group_match(const GroupView& view, const ResidualFrobenius& frob, const char* where) {
    if (view.group().ell() != frob.ell)
        throw invalid_parameters(std::string(where) + ": frobenius data and group use different ell");
}

} // namespace

FpMatrix rhobar_at(const TameGroup& group, const ResidualFrobenius& frob, const TameElement& g) {
    std::uint32_t ell = group.ell();
    std::uint32_t a = (std::uint32_t)pow_mod(frob.alpha, g.i, ell);
    std::uint32_t b = (std::uint32_t)pow_mod(frob.beta, g.i, ell);
    return diag2(a, b, ell);
}

void check_residual_hom(const TameGroup& group, const ResidualFrobenius& frob) {
    std::uint32_t ell = group.ell();
    if (pow_mod(frob.alpha, group.m(), ell) != 1 || pow_mod(frob.beta, group.m(), ell) != 1)
        throw invalid_parameters(
            "residual representation is not a homomorphism: diag(alpha,beta) has order not dividing m");
}

DualMatrix dual_mul(const DualMatrix& x, const DualMatrix& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}

DualNumberRep::DualNumberRep(std::shared_ptr<const GroupView> view_, ResidualFrobenius frob_,
                             Cochain b_)
    : view(std::move(view_)), frob(frob_), b(std::move(b_)) {
    check_group_match(*view, frob, "DualNumberRep");
    check_residual_hom(view->group(), frob);
    if (b.degree != 1) throw invalid_parameters("DualNumberRep: perturbation must be a 1-cochain");
    if (!b.module->has_matrix_basis())
        throw invalid_parameters("DualNumberRep: perturbation module needs a matrix basis");
    if (b.view.get() != view.get())
        throw invalid_parameters("DualNumberRep: perturbation lives on a different view");
}

FpMatrix DualNumberRep::base_at(std::uint32_t idx) const {
    return rhobar_at(view->group(), frob, view->element(idx));
}

DualMatrix DualNumberRep::eval(std::uint32_t idx) const {
    FpMatrix base = base_at(idx);
    FpMatrix pert = b.module->to_matrix(b.get1(idx));
    return {base, pert * base};
}

HomCheck is_homomorphism(const DualNumberRep& rep) {
    const GroupView& V = *rep.view;
    const std::uint32_t n = V.size();
    std::vector<DualMatrix> ev;
    ev.reserve(n);
    for (std::uint32_t g = 0; g < n; ++g) ev.push_back(rep.eval(g));
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t h = 0; h < n; ++h) {
            DualMatrix prod = dual_mul(ev[g], ev[h]);
            const DualMatrix& tgt = ev[V.mul(g, h)];
            if (!(prod.a == tgt.a) || !(prod.b == tgt.b)) return {false, {g, h}};
        }
    return {true, {0, 0}};
}

SetLift::SetLift(std::shared_ptr<const GroupView> view_, ResidualFrobenius frob_,
                 std::vector<FpMatrix> section_)
    : view(std::move(view_)), frob(frob_), section(std::move(section_)) {
    check_group_match(*view, frob, "SetLift");
    check_residual_hom(view->group(), frob);
    const std::uint32_t ell = frob.ell;
    ell2 = ell * ell;
    if (section.size() != view->size())
        throw invalid_parameters("SetLift: section size does not match the view");
    for (std::uint32_t g = 0; g < view->size(); ++g) {
        const FpMatrix& s = section[g];
        if (s.rows != 2 || s.cols != 2 || s.mod != ell2)
            throw invalid_parameters("SetLift: section values must be 2x2 over Z/ell^2");
        FpMatrix base = rhobar_at(view->group(), frob, view->element(g));
        for (std::uint32_t r = 0; r < 2; ++r)
            for (std::uint32_t c = 0; c < 2; ++c)
                if (s.at(r, c) % ell != base.at(r, c))
                    throw invalid_parameters("SetLift: section does not reduce to rhobar");
        std::uint64_t det =
            ((std::uint64_t)s.at(0, 0) * s.at(1, 1) + (std::uint64_t)ell2 * ell2 -
             (std::uint64_t)s.at(0, 1) * s.at(1, 0)) % ell2;
        if (det % ell == 0) throw invalid_parameters("SetLift: non-invertible section value");
    }
    if (!(section[view->identity_index()] == FpMatrix::identity(2, ell2)))
        throw invalid_parameters("SetLift: section at the identity must be the identity matrix");
}

std::uint32_t teichmuller(std::uint32_t x, std::uint32_t ell) {
    return (std::uint32_t)pow_mod(x, ell, ell * ell);
}

SetLift teichmuller_lift(std::shared_ptr<const GroupView> view, const ResidualFrobenius& frob) {
    check_residual_hom(view->group(), frob);
    const std::uint32_t ell = frob.ell;
    const std::uint32_t ell2 = ell * ell;
    std::uint32_t wa = teichmuller(frob.alpha, ell), wb = teichmuller(frob.beta, ell);
    std::vector<FpMatrix> sec;
    sec.reserve(view->size());
    for (std::uint32_t g = 0; g < view->size(); ++g) {
        std::uint32_t i = view->element(g).i;
        sec.push_back(diag2((std::uint32_t)pow_mod(wa, i, ell2), (std::uint32_t)pow_mod(wb, i, ell2), ell2));
    }
    return SetLift(view, frob, std::move(sec));
}

SetLift perturb_lift(const SetLift& lift, const Cochain& x) {
    if (x.degree != 1 || !x.module->has_matrix_basis())
        throw invalid_parameters("perturb_lift: need a 1-cochain with a matrix basis");
    if (x.view.get() != lift.view.get())
        throw invalid_parameters("perturb_lift: cochain lives on a different view");
    const std::uint32_t ell = lift.frob.ell, ell2 = lift.ell2;
    std::vector<FpMatrix> sec = lift.section;
    for (std::uint32_t g = 0; g < lift.view->size(); ++g) {
        if (g == lift.view->identity_index()) continue;
        FpMatrix X = x.module->to_matrix(x.get1(g));
        FpMatrix factor = FpMatrix::identity(2, ell2);
        for (std::uint32_t r = 0; r < 2; ++r)
            for (std::uint32_t c = 0; c < 2; ++c)
                factor.at(r, c) = (factor.at(r, c) + ell * X.at(r, c)) % ell2;
        sec[g] = factor * sec[g];
    }
    return SetLift(lift.view, lift.frob, std::move(sec));
}

FpMatrix inv2x2_mod(const FpMatrix& m) {
    if (m.rows != 2 || m.cols != 2) throw invalid_parameters("inv2x2_mod: need a 2x2 matrix");
    const std::uint32_t mod = m.mod;
    std::uint64_t det = ((std::uint64_t)m.at(0, 0) * m.at(1, 1) % mod + mod -
                         (std::uint64_t)m.at(0, 1) * m.at(1, 0) % mod) % mod;
    std::uint64_t dinv = inv_mod(det, mod);
    FpMatrix r(2, 2, mod);
    r.at(0, 0) = (std::uint32_t)(m.at(1, 1) * dinv % mod);
    r.at(1, 1) = (std::uint32_t)(m.at(0, 0) * dinv % mod);
    r.at(0, 1) = (std::uint32_t)((mod - m.at(0, 1)) * dinv % mod);
    r.at(1, 0) = (std::uint32_t)((mod - m.at(1, 0)) * dinv % mod);
    return r;
}

Cochain obstruction_cocycle(const SetLift& lift) {
    const GroupView& V = *lift.view;
    const std::uint32_t n = V.size();
    const std::uint32_t ell = lift.frob.ell, ell2 = lift.ell2;
    auto ad = ad_for(V, lift.frob);
    Cochain d = Cochain::zero(lift.view, ad, 2);

    std::vector<FpMatrix> inv;
    inv.reserve(n);
    for (std::uint32_t g = 0; g < n; ++g) inv.push_back(inv2x2_mod(lift.section[g]));

    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t h = 0; h < n; ++h) {
            FpMatrix c = lift.section[g] * lift.section[h] * inv[V.mul(g, h)];
            FpMatrix M(2, 2, ell);
            for (std::uint32_t r = 0; r < 2; ++r)
                for (std::uint32_t cc = 0; cc < 2; ++cc) {
                    std::uint32_t v = c.at(r, cc);
                    if (r == cc) v = (v + ell2 - 1) % ell2;
                    if (v % ell != 0)
                        throw invariant_violation(
                            "obstruction_cocycle: c(s,t) - 1 is not divisible by ell");
                    M.at(r, cc) = (v / ell) % ell;
                }
            d.set2(g, h, ad->from_matrix(M));
        }
    return d;
}

AdjustResult adjust_lift(const SetLift& lift) {
    Cochain d = obstruction_cocycle(lift);
    std::optional<Cochain> pre = is_coboundary(d);
    if (!pre) return {std::nullopt, CohomologyClass(std::move(d))};

    const GroupView& V = *lift.view;
    const std::uint32_t ell = lift.frob.ell, ell2 = lift.ell2;
    std::vector<FpMatrix> sec = lift.section;
    for (std::uint32_t g = 0; g < V.size(); ++g) {
        FpMatrix X = pre->module->to_matrix(pre->get1(g));
        FpMatrix factor = FpMatrix::identity(2, ell2);
        for (std::uint32_t r = 0; r < 2; ++r)
            for (std::uint32_t c = 0; c < 2; ++c)
                factor.at(r, c) = (factor.at(r, c) + (std::uint64_t)ell * (ell - X.at(r, c))) % ell2;
        sec[g] = factor * sec[g];
    }
    SetLift fixed(lift.view, lift.frob, std::move(sec));
    for (std::uint32_t g = 0; g < V.size(); ++g)
        for (std::uint32_t h = 0; h < V.size(); ++h)
            if (!(fixed.section[g] * fixed.section[h] == fixed.section[V.mul(g, h)]))
                throw invariant_violation("adjust_lift: corrected section failed the product check");
    return {std::move(fixed), std::nullopt};
}

DualNumberRep conjugate_dual(const DualNumberRep& rep, const FpMatrix& X) {
    // (1 + eps X) rho_eps (1 - eps X): shifts b(g) by X - Ad(rhobar(g)) X
    const GroupView& V = *rep.view;
    Cochain nb = rep.b;
    for (std::uint32_t g = 0; g < V.size(); ++g) {
        FpMatrix base = rep.base_at(g);
        FpMatrix shifted = rep.b.module->to_matrix(rep.b.get1(g)) + X - base * X * base.inverse();
        nb.set1(g, rep.b.module->from_matrix(shifted));
    }
    return DualNumberRep(rep.view, rep.frob, std::move(nb));
}

SetLift conjugate_lift(const SetLift& lift, const FpMatrix& X) {
    const std::uint32_t ell = lift.frob.ell, ell2 = lift.ell2;
    if (X.mod != ell) throw invalid_parameters("conjugate_lift: X must live over F_ell");
    FpMatrix u = FpMatrix::identity(2, ell2);
    for (std::uint32_t r = 0; r < 2; ++r)
        for (std::uint32_t c = 0; c < 2; ++c) u.at(r, c) = (u.at(r, c) + ell * X.at(r, c)) % ell2;
    FpMatrix uinv = inv2x2_mod(u);
    std::vector<FpMatrix> sec = lift.section;
    for (auto& s : sec) s = u * s * uinv;
    return SetLift(lift.view, lift.frob, std::move(sec));
}

} // namespace galdef
