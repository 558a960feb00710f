#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galdef/truncpoly.hpp"

namespace galdef {

struct RelationIdeal {
    std::vector<TruncPoly> generators; // nonzero entries of the relation defect
};

// E = rhoF rhoTau rhoF^-1 (rhoTau^p)^-1 - 1 for the tame twist relation;
// the ideal is generated by the nonzero entries of E. rhoF and rhoTau must
// be invertible and p must be prime to ell.
RelationIdeal tame_relation_ideal(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                                  std::uint64_t p);

// constant terms mod ell look like [[p, *], [0, 1]] and [[1, *], [0, 1]]
bool steinberg_residual_shape(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                              std::uint64_t p);

struct UnitMatch {
    bool forward = false;  // g = u * target with u a unit
    bool backward = false; // target = v * g with v a unit
    std::optional<TruncPoly> unit;
};

// Truncated arithmetic makes the two directions inequivalent, so both are
// solved separately and reported.
UnitMatch match_up_to_unit(const TruncPoly& g, const TruncPoly& target);

// T1*T2 - T2 - p*T3*T4 + T4 with variables renamed through the permutation
// (identity when empty)
TruncPoly steinberg_target(std::shared_ptr<const TruncRing> ring, std::uint64_t p,
                           const std::vector<std::uint32_t>& relabeling = {});

struct SteinbergCandidate {
    std::string description;
    MatrixOverTrunc rhoF;
    MatrixOverTrunc rhoTau;
};

// The naive parametrization family: diagonal entries p*(1+Ta) and 1+Tc,
// upper-right corners Tb and Td, over all assignments of the four variables.
std::vector<SteinbergCandidate> steinberg_candidates(std::shared_ptr<const TruncRing> ring,
                                                     std::uint64_t p);

struct MatchReport {
    std::string candidate;
    std::vector<TruncPoly> generators;
    bool matched = false;
    bool matched_forward = false;
    bool matched_backward = false;
    std::vector<std::uint32_t> relabeling;
    std::optional<TruncPoly> unit;
};

// Relation ideal of the candidate pair compared against the one-relation
// target up to a unit, after the caller's relabeling of the target
// variables. matched is asserted only when a single generator matches in
// both directions.
MatchReport steinberg_match(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                            std::uint64_t p, const std::vector<std::uint32_t>& relabeling = {},
                            const std::string& description = "");

} // namespace galdef
