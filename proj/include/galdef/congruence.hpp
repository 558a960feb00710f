#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace galdef {

struct Newform {
    std::string label;
    std::uint64_t level = 0;
    std::uint32_t weight = 2;
    std::string orbit_id;
    std::vector<std::int64_t> an_int; // a_1, a_2, ... when rational; empty otherwise
    std::map<std::uint32_t, std::vector<std::uint32_t>> an_mod; // ell -> residues of a_n
    std::uint64_t modular_degree = 0; // 0 when absent

    bool has_rational_an() const { return !an_int.empty(); }
    // a_n mod ell from whichever table provides it
    std::optional<std::uint32_t> an_residue(std::uint32_t n, std::uint32_t ell) const;
    // how many leading a_n are available mod ell
    std::size_t coeff_count(std::uint32_t ell) const;
};

struct LoadResult {
    std::vector<Newform> forms;
    std::vector<std::string> warnings; // short-coefficient notices, one line each
};

// Reads a newform collection from JSON. Schema problems raise data_error with
// the offending field path; forms with fewer coefficients than the Sturm
// bound at their own level load fine but produce a warning.
LoadResult load_newforms(const std::string& path);

// floor(k * mu / 12) clamped to >= 1, mu the index of Gamma_0(N)
std::uint64_t sturm_bound(std::uint64_t N, std::uint32_t k);

enum class CongruenceStatus { Congruent, NotCongruent, NotComparable };

struct CongruenceResult {
    CongruenceStatus status = CongruenceStatus::NotComparable;
    std::uint32_t witness_n = 0;      // first mismatching index when NotCongruent
    std::uint64_t checked_up_to = 0;  // the bound actually used
    std::string reason;               // set when NotComparable
};

// a_n(f) = a_n(g) mod ell for all n up to the Sturm bound of the lcm level,
// restricted to n prime to (lcm level) * ell. Forms in the same Galois orbit
// or of different weights are NotComparable. Missing coefficients below the
// bound raise data_error.
CongruenceResult congruent_mod(const Newform& f, const Newform& g, std::uint32_t ell);

struct CongruenceFinding {
    std::uint32_t ell = 0;
    std::string f_label;
    std::string g_label;
    std::uint64_t level = 0;
    std::uint64_t checked_up_to = 0;
};

// Primes ell <= ell_max for which some pool member at the same level but in a
// different orbit is congruent to f mod ell. Sorted by (ell, partner label).
std::vector<CongruenceFinding> strict_congruence_primes(const Newform& f,
                                                        const std::vector<Newform>& pool,
                                                        std::uint32_t ell_max);

struct ArsPrimes {
    std::vector<std::uint64_t> full;    // prime divisors of N * m_deg
    std::vector<std::uint64_t> refined; // prime divisors of m_deg
};

// Candidate congruence primes read off the level and the modular degree.
ArsPrimes ars_congruence_primes(std::uint64_t N, std::uint64_t m_deg);

} // namespace galdef
