#include "galdef/obstruction.hpp"

#include <algorithm>
#include <set>

#include "galdef/errors.hpp"
#include "galdef/nt.hpp"

namespace galdef {

namespace {

void require_odd_prime(std::uint32_t ell, const char* where) {
    if (ell < 3 || !is_prime(ell))
        throw invalid_parameters(std::string(where) + ": ell must be an odd prime");
}

void require_place(std::uint64_t p, std::uint32_t ell, const char* where) {
    if (p < 5 || !is_prime(p))
        throw invalid_parameters(std::string(where) + ": p must be a prime >= 5");
    if (p % ell == 0)
        throw invalid_parameters(std::string(where) + ": p must differ from ell");
}

} // namespace

StandingCheck check_standing(std::uint64_t N, std::uint32_t ell) {
    if (N < 1)
        throw invalid_parameters("check_standing: N must be positive");
    if (!is_prime(ell))
        throw invalid_parameters("check_standing: ell must be prime");
    StandingCheck out;
    auto flag = [&](std::string msg) {
        out.ok = false;
        out.violations.push_back(std::move(msg));
    };
    if (ell == 2)
        flag("ell = 2 is excluded");
    if (N % ell == 0)
        flag("ell divides the level N");
    for (std::uint64_t p : prime_divisors(N)) {
        if (p == 2)
            flag("p = 2 divides N");
        else if (ell > 2 && p % ell == 1)
            flag("p = " + std::to_string(p) + " is 1 mod ell");
    }
    return out;
}

LevelRaiseH0 levelraise_h0(std::uint32_t ell, std::uint64_t q, std::uint32_t alpha,
                           std::uint32_t beta) {
    require_odd_prime(ell, "levelraise_h0");
    if (q % ell == 0)
        throw invalid_parameters("levelraise_h0: q must be nonzero mod ell");
    ResidualFrobenius frob(ell, alpha, beta);
    if (frob.ratio() != q % ell)
        throw invalid_parameters(
            "levelraise_h0: alpha/beta must equal q mod ell (eigenvalue ratio condition)");
    auto group = make_group(ell, q % ell);
    auto mod = build_adjoint(group, frob, /*twisted=*/true);
    auto basis = fixed_space(*mod);

    LevelRaiseH0 out;
    out.dim = static_cast<std::uint32_t>(basis.size());
    std::set<std::uint32_t> coords;
    for (const auto& v : basis)
        for (std::uint32_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                coords.insert(i);
    for (std::uint32_t i : coords)
        out.generator_tags.push_back("e" + std::to_string(i + 1));
    return out;
}

bool supercuspidal_vanishes(std::uint64_t p, std::uint32_t ell) {
    require_odd_prime(ell, "supercuspidal_vanishes");
    require_place(p, ell, "supercuspidal_vanishes");
    return p % ell != 1;
}

bool principal_series_nonzero(std::uint64_t p, std::uint32_t ell) {
    require_odd_prime(ell, "principal_series_nonzero");
    require_place(p, ell, "principal_series_nonzero");
    return pow_mod(p % ell, 4, ell) == 1;
}

std::uint32_t steinberg_h0(std::uint32_t ell, std::uint64_t p) {
    require_odd_prime(ell, "steinberg_h0");
    require_place(p, ell, "steinberg_h0");
    std::uint32_t q = static_cast<std::uint32_t>(p % ell);
    auto group = make_group(ell, q);

    // rhobar(F) = diag(p, 1), rhobar(tau) = [[1,1],[0,1]]; conjugation on
    // (id, e1, e2, e3) twisted by the cyclotomic character.
    std::uint32_t q2 = static_cast<std::uint32_t>((std::uint64_t(q) * q) % ell);
    FpMatrix actF(4, 4, ell);
    actF.set(0, 0, q);
    actF.set(1, 1, q);
    actF.set(2, 2, q2);
    actF.set(3, 3, 1);
    FpMatrix actT = FpMatrix::identity(4, ell);
    actT.set(2, 1, ell - 2); // e1 |-> e1 - 2 e2
    actT.set(1, 3, 1);       // e3 |-> e1 - e2 + e3
    actT.set(2, 3, ell - 1);

    FpMatrix id2 = FpMatrix::identity(2, ell);
    FpMatrix e1(2, 2, ell), e2(2, 2, ell), e3(2, 2, ell);
    e1.set(0, 0, 1);
    e1.set(1, 1, ell - 1);
    e2.set(0, 1, 1);
    e3.set(1, 0, 1);
    GaloisModule mod(group, actF, actT, "steinberg_ad_twisted", {id2, e1, e2, e3});

    return static_cast<std::uint32_t>(fixed_space(mod).size());
}

EllInvariant ell_invariant_vanishes(std::uint32_t a_ell_mod, std::uint64_t m_deg,
                                    std::uint32_t ell, bool is_congruence_prime) {
    require_odd_prime(ell, "ell_invariant_vanishes");
    if (is_congruence_prime && m_deg % ell != 0 && a_ell_mod % ell != 0)
        return EllInvariant::Vanishes;
    return EllInvariant::Inapplicable;
}

namespace {

void validate_instance(const ProblemInstance& inst) {
    if (inst.N < 1)
        throw invalid_parameters("classify: N must be positive");
    require_odd_prime(inst.ell, "classify");
    if (!inst.s_has_infinity)
        throw invalid_parameters("classify: the ramification set must contain infinity");
    auto in_s = [&](std::uint64_t p) {
        return std::find(inst.s_primes.begin(), inst.s_primes.end(), p) != inst.s_primes.end();
    };
    for (std::uint64_t p : prime_divisors(inst.N))
        if (!in_s(p))
            throw invalid_parameters("classify: the ramification set must contain every prime "
                                     "dividing N (missing " +
                                     std::to_string(p) + ")");
    if (!in_s(inst.ell))
        throw invalid_parameters("classify: the ramification set must contain ell");
    for (const auto& lt : inst.local_types) {
        if (lt.kind == LocalTypeKind::AtEll) {
            if (lt.p != inst.ell)
                throw invalid_parameters("classify: an at-ell local type must sit at p = ell");
        } else if (!in_s(lt.p)) {
            throw invalid_parameters("classify: local type at p = " + std::to_string(lt.p) +
                                     " outside the ramification set");
        }
    }
}

LocalH0 local_h0_of(const LocalType& lt, std::uint32_t ell) {
    LocalH0 out;
    switch (lt.kind) {
    case LocalTypeKind::Steinberg: {
        out.dim = steinberg_h0(ell, lt.p);
        out.note = "steinberg fixed space";
        break;
    }
    case LocalTypeKind::Supercuspidal: {
        if (supercuspidal_vanishes(lt.p, ell)) {
            out.dim = 0;
            out.note = "supercuspidal, p != 1 mod ell";
        } else {
            out.note = "supercuspidal with p = 1 mod ell: no conclusion";
        }
        break;
    }
    case LocalTypeKind::PrincipalSeries: {
        if (!principal_series_nonzero(lt.p, ell)) {
            out.dim = 0;
            out.note = "principal series, p^4 != 1 mod ell";
        } else {
            out.known_nonzero = true;
            out.note = "principal series with p^4 = 1 mod ell: nonzero, dimension depends "
                       "on the character pair";
        }
        break;
    }
    case LocalTypeKind::AtEll: {
        if (ell_invariant_vanishes(lt.a_ell_mod, lt.m_deg, ell, lt.is_congruence) ==
            EllInvariant::Vanishes) {
            out.dim = 0;
            out.note = "at ell: congruence prime, ell prime to degree, a_ell unit";
        } else {
            out.note = "at ell: criterion inapplicable";
        }
        break;
    }
    case LocalTypeKind::LevelRaiseQ: {
        auto h = levelraise_h0(ell, lt.p, lt.alpha, lt.beta);
        out.dim = h.dim;
        out.note = "level-raise fixed space";
        break;
    }
    }
    return out;
}

} // namespace

ObstructionReport classify(const ProblemInstance& inst, TriState sha1_nonzero) {
    validate_instance(inst);
    if (inst.assume_global_h2_zero && sha1_nonzero == TriState::Yes)
        throw invalid_parameters(
            "classify: sha1 nonzero contradicts the asserted vanishing of global H^2");
    ObstructionReport rep;
    rep.standing = check_standing(inst.N, inst.ell);
    rep.sha1_nonzero = sha1_nonzero;

    bool any_unknown = false;
    for (const auto& lt : inst.local_types) {
        LocalH0 h = local_h0_of(lt, inst.ell);
        if (h.dim.has_value()) {
            if (*h.dim > 0) {
                rep.hom_h2_dim_lower_bound += *h.dim;
                rep.obstructed_primes.push_back(lt.p);
            }
        } else if (h.known_nonzero) {
            rep.hom_h2_dim_lower_bound += 1;
            rep.obstructed_primes.push_back(lt.p);
        } else {
            any_unknown = true;
        }
        rep.local_h0.emplace(lt.p, std::move(h));
    }
    std::sort(rep.obstructed_primes.begin(), rep.obstructed_primes.end());
    rep.obstructed_primes.erase(
        std::unique(rep.obstructed_primes.begin(), rep.obstructed_primes.end()),
        rep.obstructed_primes.end());

    if (sha1_nonzero == TriState::Yes)
        rep.hom_h2_dim_lower_bound += 1;

    if (!rep.obstructed_primes.empty()) {
        rep.classification = Classification::LocallyObstructed;
    } else if (any_unknown || sha1_nonzero == TriState::Unknown) {
        rep.classification = Classification::Unknown;
    } else if (sha1_nonzero == TriState::Yes) {
        rep.classification = Classification::GloballyObstructed;
    } else {
        rep.classification = Classification::Unobstructed;
    }

    // One-relation presentation for the pure level-raise situation: a single
    // extra place q with q^2 != 1 mod ell and the global H^2 asserted zero.
    if (inst.assume_global_h2_zero && inst.local_types.size() == 1 &&
        inst.local_types[0].kind == LocalTypeKind::LevelRaiseQ) {
        const auto& lt = inst.local_types[0];
        std::uint64_t qm = lt.p % inst.ell;
        if (qm != 1 && qm != inst.ell - 1) {
            auto h = levelraise_h0(inst.ell, lt.p, lt.alpha, lt.beta);
            rep.generator_tags = h.generator_tags;
            rep.hom_h2_dim_lower_bound = h.dim;
            if (h.dim == 1) {
                rep.classification = Classification::LocallyObstructed;
                rep.ring_descriptor = "Z_ell[[T1,T2,T3,T]]/(T*(ell - Phi))";
            }
        }
    }
    return rep;
}

} // namespace galdef
