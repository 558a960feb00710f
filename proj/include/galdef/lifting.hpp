#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "galdef/cohomology.hpp"

namespace galdef {

// rhobar(F^i tau^i') = diag(alpha, beta)^i over F_ell. Well defined exactly
// when alpha^m = beta^m = 1; callers that need a homomorphism validate via
// check_residual_hom.
FpMatrix rhobar_at(const TameGroup& group, const ResidualFrobenius& frob, const TameElement& g);

// throws invalid_parameters unless diag(alpha,beta) has order dividing m
void check_residual_hom(const TameGroup& group, const ResidualFrobenius& frob);

// a + eps*b over F_ell[eps]/(eps^2)
struct DualMatrix {
    FpMatrix a, b;
};

DualMatrix dual_mul(const DualMatrix& x, const DualMatrix& y);

// Perturbation of rhobar by a 1-cochain in the full adjoint:
// sigma |-> (I + eps b(sigma)) rhobar(sigma).
struct DualNumberRep {
    std::shared_ptr<const GroupView> view;
    ResidualFrobenius frob;
    Cochain b; // degree 1, values in ad (matrix basis required)

    DualNumberRep(std::shared_ptr<const GroupView> view, ResidualFrobenius frob, Cochain b);

    FpMatrix base_at(std::uint32_t idx) const;
    DualMatrix eval(std::uint32_t idx) const;
};

struct HomCheck {
    bool ok = true;
    std::array<std::uint32_t, 2> witness{0, 0};
};

// Direct multiplicative check of eval(g) eval(h) = eval(gh) over the dual
// numbers, all pairs; first failing pair reported. Equivalent to
// coboundary(b) = 0, but computed without the cochain machinery.
HomCheck is_homomorphism(const DualNumberRep& rep);

// Set-theoretic lift of rhobar to Z/ell^2: any section with section(e) = I
// that reduces to rhobar entrywise. Not required to be multiplicative.
struct SetLift {
    std::shared_ptr<const GroupView> view;
    ResidualFrobenius frob;
    std::uint32_t ell2 = 0;
    std::vector<FpMatrix> section; // per view element, 2x2 mod ell^2

    SetLift(std::shared_ptr<const GroupView> view, ResidualFrobenius frob,
            std::vector<FpMatrix> section);
};

// omega(x) = x^ell mod ell^2, the lift of x whose order matches its order
// mod ell
std::uint32_t teichmuller(std::uint32_t x, std::uint32_t ell);

// the multiplicative section diag(omega(alpha), omega(beta))^i
SetLift teichmuller_lift(std::shared_ptr<const GroupView> view, const ResidualFrobenius& frob);

// (1 + ell*x(sigma)) section(sigma); the value of x at the identity is
// ignored so the normalization section(e) = I survives
SetLift perturb_lift(const SetLift& lift, const Cochain& x);

// inverse of a 2x2 matrix over Z/m via the adjugate; det must be a unit
FpMatrix inv2x2_mod(const FpMatrix& m);

// c(s,t) = lift(s) lift(t) lift(st)^(-1) = 1 + ell*d(s,t); returns d as a
// degree-2 cochain valued in the full adjoint (conjugation action).
Cochain obstruction_cocycle(const SetLift& lift);

struct AdjustResult {
    std::optional<SetLift> corrected;           // present when the lift repairs
    std::optional<CohomologyClass> obstruction; // the nonzero class otherwise
};

// Kills the obstruction cocycle when it is a coboundary: with d = d1(x),
// sigma |-> (1 - ell*x(sigma)) lift(sigma) is multiplicative mod ell^2
// (verified over all pairs before returning).
AdjustResult adjust_lift(const SetLift& lift);

// strict-equivalence moves, used to exercise the class-level statements:
// conjugation by (I + eps X) resp. (I + ell X)
DualNumberRep conjugate_dual(const DualNumberRep& rep, const FpMatrix& X);
SetLift conjugate_lift(const SetLift& lift, const FpMatrix& X);

} // namespace galdef
