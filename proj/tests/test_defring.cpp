#include "doctest.h"

#include "galdef/defring.hpp"
#include "galdef/errors.hpp"
#include "galdef/rng.hpp"

using namespace galdef;

namespace {

TruncPoly random_poly(std::shared_ptr<const TruncRing> ring, SplitMix64& rng) {
    TruncPoly f(ring);
    for (std::uint32_t i = 0; i < ring->count(); ++i)
        f.set_coeff(i, rng.below(ring->modulus()));
    return f;
}

} // namespace

TEST_SUITE_BEGIN("truncpoly");

TEST_CASE("ring construction limits") {
    CHECK_NOTHROW((void)TruncRing::make(5, 2, 4, 2));
    CHECK_THROWS_AS((void)TruncRing::make(4, 2, 4, 2), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 0, 4, 2), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 30, 4, 2), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 2, 0, 2), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 2, 7, 2), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 2, 4, 0), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(5, 2, 4, 11), invalid_parameters);
    CHECK_THROWS_AS((void)TruncRing::make(23, 18, 1, 1), invalid_parameters); // 23^18 overflows
}

TEST_CASE("monomial table is graded and closed under products") {
    auto ring = TruncRing::make(5, 2, 3, 3);
    // degree never decreases along the table
    for (std::uint32_t i = 1; i < ring->count(); ++i)
        CHECK(ring->degree_of(i - 1) <= ring->degree_of(i));
    CHECK(ring->degree_of(0) == 0);
    CHECK(ring->monomial_name(0) == "1");
    // product indices agree with exponent arithmetic
    for (std::uint32_t i = 0; i < ring->count(); ++i)
        for (std::uint32_t j = 0; j < ring->count(); ++j) {
            std::array<std::uint8_t, 6> sum{};
            std::uint32_t deg = 0;
            for (int k = 0; k < 6; ++k) {
                sum[k] = ring->exponents(i)[k] + ring->exponents(j)[k];
                deg += sum[k];
            }
            auto idx = ring->product_index(i, j);
            if (deg > ring->max_degree()) {
                CHECK(!idx.has_value());
            } else {
                REQUIRE(idx.has_value());
                CHECK(ring->exponents(*idx) == sum);
            }
        }
}

TEST_CASE("arithmetic satisfies the ring axioms") {
    auto ring = TruncRing::make(5, 2, 3, 3);
    SplitMix64 rng(71);
    for (int t = 0; t < 15; ++t) {
        auto a = random_poly(ring, rng);
        auto b = random_poly(ring, rng);
        auto c = random_poly(ring, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(a * TruncPoly::constant(ring, 1) == a);
        CHECK((a * TruncPoly::constant(ring, 0)).is_zero());
    }
}

TEST_CASE("truncation drops monomials past the cap") {
    auto ring = TruncRing::make(5, 2, 2, 3);
    auto t1 = TruncPoly::variable(ring, 0);
    auto cube = t1 * t1 * t1;
    CHECK(!cube.is_zero());
    CHECK((cube * t1).is_zero());
    CHECK(cube.lowest_degree() == 3u);
    CHECK(!TruncPoly(ring).lowest_degree().has_value());
}

TEST_CASE("newton inversion") {
    auto ring = TruncRing::make(5, 2, 3, 4);
    SplitMix64 rng(72);
    for (int t = 0; t < 10; ++t) {
        auto u = random_poly(ring, rng);
        u.set_coeff(0, 1 + 5 * rng.below(5) + rng.below(4)); // unit constant term
        if (!u.is_unit())
            continue;
        auto v = u.inverse();
        CHECK(u * v == TruncPoly::constant(ring, 1));
    }
    // 1 + T1 inverts to the alternating geometric series
    auto one_t = TruncPoly::constant(ring, 1) + TruncPoly::variable(ring, 0);
    auto inv = one_t.inverse();
    CHECK(one_t * inv == TruncPoly::constant(ring, 1));

    CHECK_THROWS_AS((void)TruncPoly::variable(ring, 0).inverse(), invalid_parameters);
    CHECK_THROWS_AS((void)TruncPoly::constant(ring, 5).inverse(), invalid_parameters);
    CHECK_THROWS_AS((void)TruncPoly::constant(ring, 10).inverse(), invalid_parameters);
}

TEST_CASE("matrix inverse and powers") {
    auto ring = TruncRing::make(5, 2, 4, 2);
    auto I = MatrixOverTrunc::identity(ring);
    MatrixOverTrunc m(ring);
    m.e[0] = TruncPoly::constant(ring, 7) + TruncPoly::variable(ring, 0);
    m.e[1] = TruncPoly::variable(ring, 1);
    m.e[2] = TruncPoly::variable(ring, 2).scaled(5);
    m.e[3] = TruncPoly::constant(ring, 1) + TruncPoly::variable(ring, 3);
    CHECK(m * m.inverse() == I);
    CHECK(m.inverse() * m == I);
    CHECK(m.pow(0) == I);
    CHECK(m.pow(5) == m * m * m * m * m);

    MatrixOverTrunc sing(ring);
    sing.e[0] = TruncPoly::variable(ring, 0);
    CHECK_THROWS_AS((void)sing.inverse(), invalid_parameters);
}

TEST_CASE("monomial map keys by printable names") {
    auto ring = TruncRing::make(5, 2, 3, 3);
    auto f = TruncPoly::constant(ring, 3) + TruncPoly::variable(ring, 1).scaled(7);
    auto g = TruncPoly::variable(ring, 0) * TruncPoly::variable(ring, 0) *
             TruncPoly::variable(ring, 2);
    auto mm = (f + g).monomial_map();
    CHECK(mm.at("1") == 3);
    CHECK(mm.at("T2") == 7);
    CHECK(mm.at("T1^2*T3") == 1);
    CHECK(mm.size() == 3);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("defring");

namespace {

struct Pair {
    MatrixOverTrunc rhoF, rhoTau;

    explicit Pair(std::shared_ptr<const TruncRing> ring)
        : rhoF(MatrixOverTrunc::identity(ring)), rhoTau(MatrixOverTrunc::identity(ring)) {}
};

// the matching-diagonal pair: rhoF = [[p, T4], [0, 1]], rhoTau = [[1, T2], [0, 1]]
Pair matching_diagonal_pair(std::shared_ptr<const TruncRing> ring, std::uint64_t p) {
    Pair out(ring);
    out.rhoF.e[0] = TruncPoly::constant(ring, p);
    out.rhoF.e[1] = TruncPoly::variable(ring, 3);
    out.rhoTau.e[1] = TruncPoly::variable(ring, 1);
    return out;
}

} // namespace

TEST_CASE("relation ideal vanishes exactly when the relation holds") {
    auto ring = TruncRing::make(5, 2, 4, 3);
    const std::uint64_t p = 7;

    auto good = matching_diagonal_pair(ring, p);
    auto ideal = tame_relation_ideal(good.rhoF, good.rhoTau, p);
    CHECK(ideal.generators.empty());
    CHECK(steinberg_residual_shape(good.rhoF, good.rhoTau, p));

    auto cands = steinberg_candidates(ring, p);
    CHECK(cands.size() == 24);
    for (const auto& c : cands) {
        auto gens = tame_relation_ideal(c.rhoF, c.rhoTau, p).generators;
        // independent direct check: rhoF rhoTau = rhoTau^p rhoF
        bool holds = c.rhoF * c.rhoTau == c.rhoTau.pow(p) * c.rhoF;
        CHECK(gens.empty() == holds);
        CHECK(steinberg_residual_shape(c.rhoF, c.rhoTau, p));
        for (const auto& g : gens)
            CHECK(!g.is_zero());
    }

    // p must be prime to ell
    CHECK_THROWS_AS((void)tame_relation_ideal(good.rhoF, good.rhoTau, 15), invalid_parameters);

    MatrixOverTrunc sing(ring);
    sing.e[0] = TruncPoly::variable(ring, 0);
    CHECK_THROWS_AS((void)tame_relation_ideal(sing, good.rhoTau, p), invalid_parameters);
}

TEST_CASE("residual shape detector") {
    auto ring = TruncRing::make(5, 2, 4, 2);
    auto good = matching_diagonal_pair(ring, 7);
    CHECK(steinberg_residual_shape(good.rhoF, good.rhoTau, 7));
    CHECK(!steinberg_residual_shape(good.rhoF, good.rhoTau, 11)); // 11 != 7 mod 5... 11 = 1 mod 5
    auto bad = good;
    bad.rhoTau.e[2] = TruncPoly::constant(ring, 5); // lower-left entry 5 = 0 mod 5 is fine
    CHECK(steinberg_residual_shape(bad.rhoF, bad.rhoTau, 7));
    bad.rhoTau.e[2] = TruncPoly::constant(ring, 2);
    CHECK(!steinberg_residual_shape(bad.rhoF, bad.rhoTau, 7));
}

TEST_CASE("unit matching in both directions") {
    auto ring = TruncRing::make(5, 2, 4, 2);
    auto target = steinberg_target(ring, 7);

    auto self = match_up_to_unit(target, target);
    CHECK(self.forward);
    CHECK(self.backward);
    REQUIRE(self.unit.has_value());
    CHECK(self.unit->constant_term() == 1);

    auto scaled = match_up_to_unit(target.scaled(3), target);
    CHECK(scaled.forward);
    CHECK(scaled.backward);
    REQUIRE(scaled.unit.has_value());
    CHECK(scaled.unit->constant_term() == 3);

    // a unit polynomial factor, not just a scalar
    auto u = TruncPoly::constant(ring, 1) + TruncPoly::variable(ring, 0).scaled(2);
    auto poly_scaled = match_up_to_unit(target * u, target);
    CHECK(poly_scaled.forward);
    CHECK(poly_scaled.backward);

    // multiplying by a non-unit is not a match
    auto t1 = TruncPoly::variable(ring, 0);
    auto non = match_up_to_unit(target * t1, target);
    CHECK(!non.forward);
    CHECK(!non.backward);

    auto zero = match_up_to_unit(TruncPoly(ring), target);
    CHECK(!zero.forward);
    CHECK(!zero.backward);
}

TEST_CASE("steinberg target respects the relabeling") {
    auto ring = TruncRing::make(5, 2, 4, 2);
    auto t = steinberg_target(ring, 7);
    // T1*T2 - T2 - 7*T3*T4 + T4
    auto mm = t.monomial_map();
    CHECK(mm.at("T1*T2") == 1);
    CHECK(mm.at("T2") == 24);
    CHECK(mm.at("T3*T4") == 18); // -7 mod 25
    CHECK(mm.at("T4") == 1);

    auto t2 = steinberg_target(ring, 7, {1, 0, 3, 2});
    auto mm2 = t2.monomial_map();
    CHECK(mm2.at("T1*T2") == 1);
    CHECK(mm2.at("T1") == 24);
    CHECK(mm2.at("T3*T4") == 18);
    CHECK(mm2.at("T3") == 1);

    CHECK_THROWS_AS((void)steinberg_target(ring, 7, {0, 1, 2}), invalid_parameters);
    CHECK_THROWS_AS((void)steinberg_target(ring, 7, {0, 1, 2, 4}), invalid_parameters);
    auto small = TruncRing::make(5, 2, 3, 2);
    CHECK_THROWS_AS((void)steinberg_target(small, 7), invalid_parameters);
}

TEST_CASE("synthetic one-relation pair matches the target") {
    // rhoF = 1, rhoTau = [[1, T2], [0, 1]]: the relation collapses to
    // (1 - p) T2 = 0, a unit multiple of T2
    auto ring = TruncRing::make(5, 2, 4, 2);
    const std::uint64_t p = 7;
    Pair pair(ring);
    pair.rhoTau.e[1] = TruncPoly::variable(ring, 1);

    auto ideal = tame_relation_ideal(pair.rhoF, pair.rhoTau, p);
    REQUIRE(ideal.generators.size() == 1);
    auto mm = ideal.generators[0].monomial_map();
    CHECK(mm.size() == 1);
    CHECK(mm.at("T2") == (1 + 25 - 7) % 25);

    // target T2 after relabeling: swap the roles so the degree-1 part is T2
    // itself; the defect generator is a unit multiple of it exactly when the
    // other target variables are sent to zero... the plain target is not
    // matched, the single-variable comparison is
    auto direct = match_up_to_unit(ideal.generators[0], TruncPoly::variable(ring, 1));
    CHECK(direct.forward);
    CHECK(direct.backward);

    auto report = steinberg_match(pair.rhoF, pair.rhoTau, p);
    CHECK(report.generators.size() == 1);
    // the full steinberg target has two more monomials, so no unit match
    CHECK(!report.matched);
}

TEST_CASE("a pair whose defect is the target is matched") {
    // rhoF = [[p + target, 0], [0, 1]], rhoTau = [[1, 1], [0, 1]]: the
    // relation defect collapses to ((p + target) - p) * 1 = target
    auto ring = TruncRing::make(5, 2, 4, 2);
    const std::uint64_t p = 7;

    for (auto perm : {std::vector<std::uint32_t>{}, {1, 0, 3, 2}}) {
        auto target = steinberg_target(ring, p, perm);
        Pair pair(ring);
        pair.rhoF.e[0] = TruncPoly::constant(ring, p) + target;
        pair.rhoTau.e[1] = TruncPoly::constant(ring, 1);
        CHECK(steinberg_residual_shape(pair.rhoF, pair.rhoTau, p));

        auto rep = steinberg_match(pair.rhoF, pair.rhoTau, p, perm, "defect equals target");
        REQUIRE(rep.generators.size() == 1);
        CHECK(rep.generators[0] == target);
        CHECK(rep.matched);
        CHECK(rep.matched_forward);
        CHECK(rep.matched_backward);
        REQUIRE(rep.unit.has_value());
        CHECK(rep.unit->constant_term() == 1);
        auto expect_relab = perm.empty() ? std::vector<std::uint32_t>{0, 1, 2, 3} : perm;
        CHECK(rep.relabeling == expect_relab);

        // against the wrong relabeling the same defect must not match
        auto wrong = steinberg_match(pair.rhoF, pair.rhoTau, p,
                                     perm.empty() ? std::vector<std::uint32_t>{1, 0, 3, 2}
                                                  : std::vector<std::uint32_t>{},
                                     "defect vs relabeled target");
        CHECK(!wrong.matched);
    }
}

TEST_CASE("candidate family scan is honest and deterministic") {
    auto ring = TruncRing::make(5, 2, 4, 2);
    const std::uint64_t p = 7;
    auto cands = steinberg_candidates(ring, p);
    REQUIRE(cands.size() == 24);

    std::vector<std::string> first_run, second_run;
    for (int run = 0; run < 2; ++run) {
        auto& sink = run == 0 ? first_run : second_run;
        for (const auto& c : steinberg_candidates(ring, p)) {
            auto rep = steinberg_match(c.rhoF, c.rhoTau, p, {}, c.description);
            CHECK(rep.candidate == c.description);
            // the relation defect of this family starts in degree 2, the
            // target has a degree-1 part: a unit match is impossible
            CHECK(!rep.matched);
            for (const auto& g : rep.generators) {
                auto low = g.lowest_degree();
                REQUIRE(low.has_value());
                CHECK(*low >= 2);
            }
            sink.push_back(rep.candidate + (rep.matched ? "#y" : "#n") +
                           std::to_string(rep.generators.size()));
        }
    }
    CHECK(first_run == second_run);

    // the matching-diagonal pair reports an empty ideal and stays unmatched
    // without asserting anything false
    auto good = matching_diagonal_pair(ring, p);
    auto rep = steinberg_match(good.rhoF, good.rhoTau, p, {}, "matching diagonal");
    CHECK(rep.generators.empty());
    CHECK(!rep.matched);
}

TEST_SUITE_END();
