#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "galdef/cochain.hpp"

namespace galdef {

// The integral 2-cocycle {(i+j)/ell} - {i/ell} - {j/ell} built from the
// fractional-part 1-cochain i/ell. Always 0 or -1.
std::int32_t step2_connecting(std::uint32_t ell, std::int64_t i, std::int64_t j);

// Closed-form exponent i1' * i2 * q^(i1) mod ell for g1 = F^(i1) tau^(i1'),
// g2 = F^(i2) tau^(i2').
std::uint32_t explicit_b(const TameGroup& group, const TameElement& g1, const TameElement& g2);

// The same exponent as a mu_ell-valued 2-cochain on the full view.
Cochain explicit_b_cochain(std::shared_ptr<const GroupView> view);

// Everything the lattice construction produces, step by step: the
// fractional-part cochain, the connecting cocycle, the unramified-values
// cocycle C1, the splitting cochain gamma, and the mu_ell-valued B obtained
// by multiplying C with the coboundary of gamma (the orientation that
// clears the q^(1/ell) part; see exponent.values for the final table).
struct RecipeTrace {
    std::uint32_t ell = 0;
    std::uint32_t q = 0;
    std::shared_ptr<const GroupView> view;     // full view of the tame group
    std::vector<std::uint32_t> f1_numerator;   // f1(F^i) = <i>/ell for i in [0, m)
    std::vector<std::int32_t> wtilde;          // ell x ell, row-major, values in {0,-1}
    std::vector<std::int64_t> c1_a;            // ell x ell lattice a-coordinates of C1 = q^wtilde
    std::vector<std::int64_t> gamma_a;         // a-coordinate of gamma per view element
    std::vector<LatticePoint> B;               // n x n lattice values, row-major over view indices
    bool a_coordinate_zero = false;            // verified over every pair
    Cochain exponent;                          // c-coordinates of B, mu_ell-valued degree 2
};

// Runs the construction over Gamma(ell, q). Requires q != 0, +-1 mod ell;
// the excluded q^2 = 1 case would make the twisted class degenerate.
RecipeTrace run_recipe(std::uint32_t ell, std::uint64_t q);

struct RecipeComparison {
    bool uniform = false;
    std::uint32_t lambda = 0;                  // recipe exponent = lambda * explicit_b
    std::array<std::uint32_t, 2> mismatch{0, 0}; // first disagreeing pair (view indices)
    std::uint64_t pairs_checked = 0;
};

// Scans every pair for a single scalar lambda with
// recipe exponent = lambda * explicit_b; reports the first disagreement
// when no uniform scalar exists.
RecipeComparison compare_recipe_to_formula(std::uint32_t ell, std::uint64_t q);

} // namespace galdef
