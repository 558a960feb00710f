#include "galdef/defring.hpp"

#include <algorithm>

#include "galdef/errors.hpp"
#include "galdef/matrix.hpp"
#include "galdef/nt.hpp"

namespace galdef {

RelationIdeal tame_relation_ideal(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                                  std::uint64_t p) {
    auto ring = rhoF.ring();
    if (ring != rhoTau.ring())
        throw invalid_parameters("tame_relation_ideal: mixed rings");
    if (p % ring->ell() == 0)
        throw invalid_parameters("tame_relation_ideal: p must be prime to ell");
    if (!rhoF.det().is_unit())
        throw invalid_parameters("tame_relation_ideal: rhoF is not invertible");
    if (!rhoTau.det().is_unit())
        throw invalid_parameters("tame_relation_ideal: rhoTau is not invertible");

    MatrixOverTrunc lhs = rhoF * rhoTau * rhoF.inverse();
    MatrixOverTrunc rhs_inv = rhoTau.pow(p).inverse();
    MatrixOverTrunc E = lhs * rhs_inv - MatrixOverTrunc::identity(ring);

    RelationIdeal out;
    for (int i = 0; i < 4; ++i)
        if (!E.e[i].is_zero())
            out.generators.push_back(E.e[i]);
    return out;
}

bool steinberg_residual_shape(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                              std::uint64_t p) {
    std::uint32_t ell = rhoF.ring()->ell();
    auto cmod = [&](const TruncPoly& f) { return f.constant_term() % ell; };
    return cmod(rhoF.e[0]) == p % ell && cmod(rhoF.e[2]) == 0 && cmod(rhoF.e[3]) == 1 &&
           cmod(rhoTau.e[0]) == 1 && cmod(rhoTau.e[2]) == 0 && cmod(rhoTau.e[3]) == 1;
}

namespace {

// solve u * t = g for u, as a linear system over Z/ell^K in u's coefficients
std::optional<TruncPoly> divide_by(const TruncPoly& g, const TruncPoly& t) {
    auto ring = g.ring();
    std::uint32_t n = ring->count();
    std::vector<std::vector<std::uint64_t>> A(n, std::vector<std::uint64_t>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) {
        if (t.coeff(i) == 0)
            continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            auto idx = ring->product_index(i, j);
            if (!idx)
                continue;
            A[*idx][j] = (A[*idx][j] + t.coeff(i)) % ring->modulus();
        }
    }
    std::vector<std::uint64_t> b(n);
    for (std::uint32_t i = 0; i < n; ++i)
        b[i] = g.coeff(i);
    auto sol = solve_linear_zmod(std::move(A), std::move(b), ring->ell(), ring->precision());
    if (!sol)
        return std::nullopt;
    TruncPoly u(ring);
    for (std::uint32_t i = 0; i < n; ++i)
        u.set_coeff(i, (*sol)[i]);
    return u;
}

} // namespace

UnitMatch match_up_to_unit(const TruncPoly& g, const TruncPoly& target) {
    if (g.ring() != target.ring())
        throw invalid_parameters("match_up_to_unit: mixed rings");
    UnitMatch out;
    if (auto u = divide_by(g, target); u && u->is_unit()) {
        out.forward = true;
        out.unit = *u;
    }
    if (auto v = divide_by(target, g); v && v->is_unit())
        out.backward = true;
    return out;
}

TruncPoly steinberg_target(std::shared_ptr<const TruncRing> ring, std::uint64_t p,
                           const std::vector<std::uint32_t>& relabeling) {
    if (ring->nvars() < 4)
        throw invalid_parameters("steinberg_target: needs at least 4 variables");
    std::vector<std::uint32_t> perm = relabeling;
    if (perm.empty())
        perm = {0, 1, 2, 3};
    if (perm.size() != 4)
        throw invalid_parameters("steinberg_target: relabeling must list 4 variables");
    for (std::uint32_t v : perm)
        if (v >= ring->nvars())
            throw invalid_parameters("steinberg_target: relabeling index out of range");
    auto T = [&](std::uint32_t k) { return TruncPoly::variable(ring, perm[k]); };
    TruncPoly pconst = TruncPoly::constant(ring, p % ring->modulus());
    return T(0) * T(1) - T(1) - pconst * T(2) * T(3) + T(3);
}

std::vector<SteinbergCandidate> steinberg_candidates(std::shared_ptr<const TruncRing> ring,
                                                     std::uint64_t p) {
    if (ring->nvars() < 4)
        throw invalid_parameters("steinberg_candidates: needs at least 4 variables");
    std::vector<SteinbergCandidate> out;
    std::vector<std::uint32_t> perm = {0, 1, 2, 3};
    TruncPoly one = TruncPoly::constant(ring, 1);
    TruncPoly pc = TruncPoly::constant(ring, p % ring->modulus());
    do {
        std::uint32_t a = perm[0], b = perm[1], c = perm[2], d = perm[3];
        MatrixOverTrunc F(ring), Tau(ring);
        F.e[0] = pc * (one + TruncPoly::variable(ring, a));
        F.e[1] = TruncPoly::variable(ring, b);
        F.e[3] = one + TruncPoly::variable(ring, c);
        Tau.e[0] = one;
        Tau.e[1] = TruncPoly::variable(ring, d);
        Tau.e[3] = one;
        std::string desc = "rhoF=[[p(1+T" + std::to_string(a + 1) + "),T" +
                           std::to_string(b + 1) + "],[0,1+T" + std::to_string(c + 1) +
                           "]], rhoTau=[[1,T" + std::to_string(d + 1) + "],[0,1]]";
        out.push_back({std::move(desc), std::move(F), std::move(Tau)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MatchReport steinberg_match(const MatrixOverTrunc& rhoF, const MatrixOverTrunc& rhoTau,
                            std::uint64_t p, const std::vector<std::uint32_t>& relabeling,
                            const std::string& description) {
    MatchReport rep;
    rep.candidate = description;
    rep.relabeling = relabeling.empty() ? std::vector<std::uint32_t>{0, 1, 2, 3} : relabeling;
    RelationIdeal ideal = tame_relation_ideal(rhoF, rhoTau, p);
    rep.generators = ideal.generators;
    if (ideal.generators.size() != 1)
        return rep;
    TruncPoly target = steinberg_target(rhoF.ring(), p, rep.relabeling);
    UnitMatch m = match_up_to_unit(ideal.generators[0], target);
    rep.matched_forward = m.forward;
    rep.matched_backward = m.backward;
    rep.matched = m.forward && m.backward;
    rep.unit = m.unit;
    return rep;
}

} // namespace galdef
