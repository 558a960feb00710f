#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galdef/galois_modules.hpp"

namespace galdef {

struct StandingCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// ell odd prime not dividing N, and every p | N has p != 2 and p != 1 mod ell
StandingCheck check_standing(std::uint64_t N, std::uint32_t ell);

struct LevelRaiseH0 {
    std::uint32_t dim = 0;
    std::vector<std::string> generator_tags; // "e1","e2","e3" for coordinate lines
};

// dim of the invariant space of the twisted trace-zero adjoint at the
// level-raise prime, computed through fixed_space. Requires alpha/beta = q
// mod ell (the Frobenius eigenvalue ratio matching the cyclotomic value).
LevelRaiseH0 levelraise_h0(std::uint32_t ell, std::uint64_t q, std::uint32_t alpha,
                           std::uint32_t beta);

// H0(G_p, ad x cyclotomic) = 0 in the supercuspidal case iff p != 1 mod ell
bool supercuspidal_vanishes(std::uint64_t p, std::uint32_t ell);

// H0(G_p, ad x cyclotomic) != 0 in the principal series case iff p^4 = 1 mod ell
bool principal_series_nonzero(std::uint64_t p, std::uint32_t ell);

// Invariants of the twisted full adjoint in the Steinberg shape
// (F |-> diag(p,1), tau |-> unipotent), via fixed_space over the tame group
// at p. Equals #{x in {p, p^2} : x = 1 mod ell}.
std::uint32_t steinberg_h0(std::uint32_t ell, std::uint64_t p);

enum class EllInvariant { Vanishes, Inapplicable };

// Vanishing criterion at ell itself: needs all three of congruence prime,
// ell not dividing the modular degree, and a_ell a unit mod ell; gives no
// conclusion otherwise.
EllInvariant ell_invariant_vanishes(std::uint32_t a_ell_mod, std::uint64_t m_deg,
                                    std::uint32_t ell, bool is_congruence_prime);

enum class LocalTypeKind { Steinberg, Supercuspidal, PrincipalSeries, AtEll, LevelRaiseQ };

struct LocalType {
    LocalTypeKind kind = LocalTypeKind::Steinberg;
    std::uint64_t p = 0;          // the place (equals ell for AtEll)
    std::uint32_t alpha = 0;      // LevelRaiseQ
    std::uint32_t beta = 0;       // LevelRaiseQ
    std::uint32_t a_ell_mod = 0;  // AtEll
    std::uint64_t m_deg = 0;      // AtEll
    bool is_congruence = false;   // AtEll
};

struct ProblemInstance {
    std::uint64_t N = 1;
    std::uint32_t ell = 0;
    bool s_has_infinity = true;
    std::vector<std::uint64_t> s_primes;
    std::vector<LocalType> local_types;
    bool assume_global_h2_zero = false; // caller-asserted vanishing of the
                                        // unaugmented global H^2
};

enum class TriState { Yes, No, Unknown };

enum class Classification { Unobstructed, LocallyObstructed, GloballyObstructed, Unknown };

// Local invariant dimension as far as the criteria determine it: a known
// dimension, known nonvanishing with unknown dimension, or no conclusion.
struct LocalH0 {
    std::optional<std::uint32_t> dim;
    bool known_nonzero = false;
    std::string note;
};

struct ObstructionReport {
    StandingCheck standing;
    std::map<std::uint64_t, LocalH0> local_h0;
    TriState sha1_nonzero = TriState::Unknown;
    Classification classification = Classification::Unknown;
    std::vector<std::uint64_t> obstructed_primes;
    std::uint32_t hom_h2_dim_lower_bound = 0;
    std::string ring_descriptor;
    std::vector<std::string> generator_tags; // level-raise branch
    std::string module_note = "ad";          // coefficients used by the local terms
};

// Applies the matching local criterion at each declared place, then settles
// the classification: definite nonzero local invariants mean local
// obstructions; all-zero local invariants delegate to the sha1 input; a
// level-raise instance with the global-H2 assertion gets the one-relation
// ring descriptor.
ObstructionReport classify(const ProblemInstance& instance, TriState sha1_nonzero);

} // namespace galdef
