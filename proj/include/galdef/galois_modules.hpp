#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galdef/matrix.hpp"
#include "galdef/tame_group.hpp"

namespace galdef {

// Unramified diagonal Frobenius data: rhobar(F) = diag(alpha, beta),
// rhobar(tau) = 1, over F_ell.
struct ResidualFrobenius {
    std::uint32_t ell = 0;
    std::uint32_t alpha = 0;
    std::uint32_t beta = 0;

    ResidualFrobenius(std::uint32_t ell_, std::int64_t alpha_, std::int64_t beta_);

    FpMatrix frob_matrix() const; // diag(alpha, beta)
    // alpha/beta mod ell
    std::uint32_t ratio() const;
};

// A finite-dimensional F_ell module over a TameGroup, given by the action
// matrices of the generators F and tau. The constructor checks that the
// assignment respects the group presentation (tau^ell, F^m, the twist
// relation), so action(g) = actF^i * actTau^ip is well defined.
class GaloisModule {
  public:
    GaloisModule(std::shared_ptr<const TameGroup> group, FpMatrix act_frob, FpMatrix act_tau,
                 std::string label, std::vector<FpMatrix> matrix_basis = {});

    const TameGroup& group() const { return *group_; }
    std::shared_ptr<const TameGroup> group_ptr() const { return group_; }
    std::uint32_t dim() const { return dim_; }
    std::uint32_t ell() const { return group_->ell(); }
    const std::string& label() const { return label_; }

    const FpMatrix& act_frob() const { return actF_; }
    const FpMatrix& act_tau() const { return actT_; }

    FpMatrix action(const TameElement& g) const;
    std::vector<std::uint32_t> act(const TameElement& g, const std::vector<std::uint32_t>& v) const;

    // 2x2 matrix realizations of the basis vectors, when this module is a
    // space of matrices (ad and its pieces). Empty otherwise.
    const std::vector<FpMatrix>& matrix_basis() const { return basis_; }
    bool has_matrix_basis() const { return !basis_.empty(); }

    // coordinates -> 2x2 matrix and back (requires matrix_basis)
    FpMatrix to_matrix(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> from_matrix(const FpMatrix& mat) const;

  private:
    std::shared_ptr<const TameGroup> group_;
    std::uint32_t dim_;
    FpMatrix actF_, actT_;
    std::string label_;
    std::vector<FpMatrix> basis_;
    mutable std::vector<FpMatrix> frob_pows_, tau_pows_; // built on construction
};

// Trace-zero adjoint with basis e1 = diag(1,-1), e2 = upper, e3 = lower.
// F acts by conjugation by diag(alpha, beta): diag(1, alpha/beta, beta/alpha);
// tau acts trivially; `twisted` multiplies the action by the cyclotomic
// character (value q at F, 1 at tau).
std::shared_ptr<const GaloisModule> build_adjoint(std::shared_ptr<const TameGroup> group,
                                                  const ResidualFrobenius& frob, bool twisted);

// Full 2x2 adjoint, basis (id, e1, e2, e3).
std::shared_ptr<const GaloisModule> build_ad(std::shared_ptr<const TameGroup> group,
                                             const ResidualFrobenius& frob, bool twisted);

// One-dimensional modules: trivial, and mu_ell (= the cyclotomic character,
// F acting by q).
std::shared_ptr<const GaloisModule> trivial_module(std::shared_ptr<const TameGroup> group);
std::shared_ptr<const GaloisModule> mu_module(std::shared_ptr<const TameGroup> group);

// Basis of the simultaneous kernel of (action(F) - 1) and (action(tau) - 1).
std::vector<std::vector<std::uint32_t>> fixed_space(const GaloisModule& mod);

// Rank-one monomial lattice point: the formal monomial r^a zeta^c where
// r^ell = q and zeta is a primitive ell-th root of unity. a is an honest
// integer; c lives mod ell.
struct LatticePoint {
    std::int64_t a = 0;
    std::uint32_t c = 0;

    bool operator==(const LatticePoint& o) const { return a == o.a && c == o.c; }
};

// Group action on the lattice: F fixes r and sends zeta -> zeta^q;
// tau sends r -> zeta r and fixes zeta. In coordinates,
// F^i tau^ip : (a, c) -> (a, q^i (c + ip*a)).
LatticePoint lattice_act(const TameGroup& group, const TameElement& g, const LatticePoint& x);

} // namespace galdef
