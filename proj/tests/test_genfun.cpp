#include <gtest/gtest.h>

#include "flagtutte/corpus.hpp"
#include "flagtutte/genfun.hpp"
#include "flagtutte/invariants.hpp"
#include "oracles.hpp"

using namespace flagtutte;

namespace {

AuxPolynomial one() { return AuxPolynomial::constant(1); }

EquivariantPolynomial series_of(int n, std::initializer_list<LatticeVector> pts) {
    EquivariantPolynomial e(n, {});
    for (const auto& w : pts) e.add(w, one());
    return e;
}

/// Vertex cones of the flag base polytope, one unit numerator each.
GenFun vertex_cones(const FlagMatroid& fm) {
    const int n = fm.size();
    GenFun g(n, {});
    for (const auto& b : flag_bases(fm))
        for (const auto& cell : triangulate_half_open(b.indicator(n), tangent_cone_generators(fm, b))) g.add(cell, one());
    return g;
}

/// The polytope as the intersection of its vertex cones.
bool in_polytope(const FlagMatroid& fm, const LatticeVector& w) {
    for (const auto& b : flag_bases(fm))
        if (!oracle::in_tangent_cone(fm, b, w - b.indicator(fm.size()))) return false;
    return true;
}

std::vector<CorpusFlag> small_flags(int max_n) {
    const auto ms = matroid_corpus(max_n);
    auto out = quotient_corpus(ms, max_n);
    for (const auto& m : ms) out.push_back({m.name, FlagMatroid::trusted({m.matroid})});
    for (const auto& t : three_step_corpus(ms, max_n)) out.push_back(t);
    return out;
}

}  // namespace

TEST(Brion, WorkedExample) {
    const FlagMatroid fm = flag({uniform(1, 3), uniform(2, 3)});
    const std::vector<std::pair<LatticeVector, LatticeVector>> moves = {
        {{2, 1, 0}, {1, 1, 0}}, {{2, 0, 1}, {1, 0, 1}}, {{1, 2, 0}, {0, 2, 0}},
        {{1, 0, 2}, {0, 0, 2}}, {{0, 2, 1}, {0, 2, 0}}, {{0, 1, 2}, {0, 0, 2}}};
    GenFun g(3, {});
    for (const auto& b : flag_bases(fm))
        for (const auto& [vertex, apex] : moves)
            if (vertex == b.indicator(3))
                for (const auto& cell : triangulate_half_open(apex, tangent_cone_generators(fm, b))) g.add(cell, one());
    const auto expect = series_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    EXPECT_EQ(support(g), expect);
    EXPECT_EQ(support(slice(g, {1, 0, 0}, 0)), series_of(3, {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
    EXPECT_TRUE(coefficient_at(g, {2, 0, 0}).is_zero());
    EXPECT_EQ(coefficient_at(g, {0, 2, 0}), one());
    EXPECT_EQ(evaluate_t1(g), AuxPolynomial::constant(5));
    EXPECT_EQ(oracle::evaluate_t1_cyclotomic(g, oracle::generic_small_weight(g)), AuxPolynomial::constant(5));
}

TEST(Brion, Trapezoid) {
    const auto s = brion_series({{{0, 2, 0}, {{0, -1, 1}, {1, -1, 0}}},
                                 {{0, 0, 2}, {{0, 1, -1}, {1, 0, -1}}},
                                 {{1, 1, 0}, {{-1, 1, 0}, {0, -1, 1}}},
                                 {{1, 0, 1}, {{-1, 0, 1}, {0, 1, -1}}}});
    EXPECT_EQ(s, series_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
}

TEST(Brion, SegmentAndPoint) {
    EXPECT_EQ(brion_series({{{0}, {{1}}}, {{3}, {{-1}}}}), series_of(1, {{0}, {1}, {2}, {3}}));
    EXPECT_EQ(brion_series({{{2, -1}, {}}}), series_of(2, {{2, -1}}));
}

TEST(Brion, FlagPolytopesAgainstInequalities) {
    for (const auto& f : small_flags(4)) {
        const int n = f.flag.size();
        const auto k = static_cast<long>(f.flag.length());
        EquivariantPolynomial expect(n, {});
        for (long s = 0; s <= k * n; ++s)
            for (const auto& w : oracle::box(n, 0, k, s))
                if (in_polytope(f.flag, w)) expect.add(w, one());
        const GenFun g = vertex_cones(f.flag);
        EXPECT_EQ(support(g), expect) << f.name;
        EXPECT_EQ(evaluate_t1(g), AuxPolynomial::constant(static_cast<long>(expect.size()))) << f.name;
    }
}

TEST(EvaluateT1, AgreesWithCyclotomicReduction) {
    for (const auto& f : small_flags(4)) {
        const GenFun g = kt_genfun(f.flag);
        EXPECT_EQ(evaluate_t1(g), oracle::evaluate_t1_cyclotomic(g, oracle::generic_small_weight(g))) << f.name;
    }
    const auto ms = matroid_corpus(4);
    for (const auto& q : quotient_corpus(ms, 4)) {
        const GenFun g = oracle::lv_cones(q.flag.front(), q.flag.back());
        EXPECT_EQ(evaluate_t1(g), oracle::evaluate_t1_cyclotomic(g, oracle::generic_small_weight(g, 11))) << q.name;
    }
}

TEST(EvaluateT1, MatchesSummedSupport) {
    for (const auto& f : small_flags(4)) {
        const GenFun g = kt_genfun(f.flag);
        EXPECT_EQ(evaluate_t1(g), support(g).at_one()) << f.name;
    }
}

TEST(EvaluateT1, PoleAndCancellation) {
    GenFun g(2, {"u"});
    const HalfOpenSimplicialCone c{{0, 0}, {{1, -1}}, {false}, 1};
    g.add(c, AuxPolynomial::variable("u", {"u"}));
    try {
        evaluate_t1(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonCancellingPole);
    }
    g.add(flip_cone(c, Direction::make({1, 0})), -AuxPolynomial::variable("u", {"u"}));
    EXPECT_TRUE(evaluate_t1(g).is_zero());
    EXPECT_TRUE(support(g).is_zero());
}

TEST(Support, IndependentOfDirection) {
    const std::vector<Direction> dirs = {Direction::make({1, 2, 3, 4}), Direction::make({3, -1, 2, 0}, {1, 0, 3, 2})};
    for (const auto& f : small_flags(4)) {
        if (f.flag.size() != 4) continue;
        const GenFun g = kt_genfun(f.flag);
        const auto base = support(g);
        for (const auto& d : dirs) EXPECT_EQ(support(g, d), base) << f.name;
    }
}

TEST(Coefficient, IndependentOfDirection) {
    const std::vector<Direction> dirs = {Direction::standard(3), Direction::make({-1, 2, 5}), Direction::make({0, 0, 1}, {2, 1, 0})};
    for (const auto& f : small_flags(3)) {
        if (f.flag.size() != 3) continue;
        const GenFun g = kt_genfun(f.flag);
        const auto series = support(g);
        const long k = static_cast<long>(f.flag.length());
        for (long s = 0; s <= 3 * k + 3; ++s)
            for (const auto& w : oracle::box(3, -1, k + 1, s)) {
                const auto expect = series.at(w).with_vars(g.vars());
                for (const auto& d : dirs) EXPECT_EQ(coefficient_at(g, w, d), expect) << f.name << " " << vector_string(w);
            }
    }
}

TEST(Support, CoordinatesBounded) {
    for (const auto& f : small_flags(4)) {
        const auto series = support(kt_genfun(f.flag));
        for (const auto& [w, c] : series.support())
            for (long x : w) {
                EXPECT_GE(x, 0) << f.name;
                EXPECT_LE(x, static_cast<long>(f.flag.length()) + 1) << f.name;
            }
    }
}

TEST(Slice, MatchesRestrictedSeries) {
    for (const auto& f : small_flags(3)) {
        const int n = f.flag.size();
        const GenFun g = vertex_cones(f.flag);
        const auto full = support(g);
        std::vector<Rational> zeta(static_cast<std::size_t>(n), 0);
        zeta[0] = 1;
        for (long b = 0; b <= static_cast<long>(f.flag.length()); ++b) {
            EquivariantPolynomial expect(n, {});
            for (const auto& [w, c] : full.support())
                if (w[0] == b) expect.add(w, c);
            // vertex cones with first coordinate below b must point upward
            bool ok = true;
            for (const auto& t : g.terms())
                for (const auto& r : t.cone.rays)
                    if (t.cone.apex[0] < b && r[0] < 0) ok = false;
            if (!ok) {
                EXPECT_THROW(slice(g, zeta, b), Error);
                continue;
            }
            EXPECT_EQ(support(slice(g, zeta, b)), expect) << f.name;
        }
    }
}

TEST(Slice, RejectsNonPointedTerm) {
    GenFun g(2, {});
    g.add(HalfOpenSimplicialCone{{0, 0}, {{-1, 1}}, {false}, 1}, one());
    try {
        slice(g, {1, 0}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
    }
    EXPECT_THROW(slice(g, {0, 0}, 0), Error);
}

TEST(Equivariant, JsonRoundTripAndAlgebra) {
    const auto e = kt_equivariant(flag({uniform(1, 3), uniform(2, 3)}));
    EXPECT_EQ(EquivariantPolynomial::from_json(e.to_json()), e);
    EXPECT_TRUE((e - e).is_zero());
    EXPECT_EQ((e + e).at_one(), e.at_one() * Rational(2));
    const auto pt = series_of(3, {{1, 0, 0}});
    EXPECT_EQ((pt * e).at_one().with_vars(e.vars()), e.at_one());
}
