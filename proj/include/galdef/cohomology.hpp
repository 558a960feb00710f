#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "galdef/cochain.hpp"

namespace galdef {

// Dense matrix of d^n : C^n -> C^(n+1) in the flat cochain bases
// (n = 0 or 1, or n = 2 for small views). Guarded against oversize builds.
FpMatrix coboundary_matrix(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                           std::uint64_t entry_budget = 40000000);

// dim H^n(view, module) for n = 0, 1, 2, by exact elimination on the dense
// differentials. Throws too_large beyond the entry budget.
std::uint32_t cohomology_dim(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                             std::uint64_t entry_budget = 40000000);

// Decides whether the cocycle c is a coboundary; returns a preimage when it
// is (free choices zeroed), nullopt when it is not. Degree 1 and 2.
//
// Degree 2 runs a generator-propagation solve: the unknown 1-cochain is an
// affine function of its values on the view's generators, every other value
// being forced by x(gh) = g.x(h) + x(g) - c(g,h); the full pair table then
// yields a small consistency system. Exact, O(|view|^2) time, never
// materializes the |view|^2 x |view| dense system.
//
// Throws invalid_parameters when c is not a cocycle (exhaustive check up to
// the triple budget, seeded sample beyond it).
std::optional<Cochain> is_coboundary(const Cochain& c, std::uint64_t triple_budget = 30000000,
                                     std::uint64_t seed = 1);

// A cohomology class held by a representative cocycle. Construction verifies
// the cocycle identity (budgeted as in is_cocycle).
struct CohomologyClass {
    Cochain rep;

    explicit CohomologyClass(Cochain representative, std::uint64_t triple_budget = 30000000,
                             std::uint64_t seed = 1);

    std::uint32_t degree() const { return rep.degree; }
    // (dim Z^n, dim B^n) of the ambient spaces; dense, so only for small views
    std::pair<std::uint32_t, std::uint32_t> ambient_dims(std::uint64_t entry_budget = 40000000) const;
};

// Trace pairing against an invariant 0-cochain m0 in the twisted adjoint:
// output(g, h) = tr(M0 * U(g, h)) as a mu_ell-valued 2-cochain. Requires the
// functional X -> tr(M0 X) to intertwine the u-module action with the
// cyclotomic character (checked on generators), which is what makes the
// output land in mu_ell and commute with the differentials.
Cochain cup_trace(const Cochain& m0, const Cochain& u);

// Produces a 2-cocycle u with values in the module of `like` (e.g. untwisted
// trace-zero adjoint) whose trace pairing against m0 is cohomologous to
// target (a class in mu_ell). Strategy: lift target through an equivariant
// section of the pairing functional when one exists; otherwise fall back to
// a dense joint solve on small views. Returns nullopt when no such class
// exists at this finite level.
std::optional<CohomologyClass> solve_dual_class(const Cochain& m0,
                                                const CohomologyClass& target,
                                                std::shared_ptr<const GaloisModule> u_module);

} // namespace galdef
