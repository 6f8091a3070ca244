#include <gtest/gtest.h>

#include <set>

#include "flagtutte/cone.hpp"
#include "flagtutte/corpus.hpp"
#include "flagtutte/genfun.hpp"
#include "oracles.hpp"

using namespace flagtutte;

namespace {

FlagBasis fb(std::initializer_list<std::initializer_list<int>> chain) {
    FlagBasis b;
    for (auto c : chain) b.chain.push_back(from_elements(std::vector<int>(c)));
    return b;
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

HalfOpenSimplicialCone cone(LatticeVector apex, std::vector<LatticeVector> rays, std::vector<bool> open = {}) {
    if (open.empty()) open.assign(rays.size(), false);
    return {std::move(apex), std::move(rays), std::move(open), 1};
}

/// Number of cells containing w, with signs.
int cover(const std::vector<HalfOpenSimplicialCone>& cells, const LatticeVector& w) {
    int c = 0;
    for (const auto& cell : cells)
        if (cone_membership(cell, w)) c += cell.sign;
    return c;
}

}  // namespace

TEST(TangentCone, Examples) {
    const auto fm = flag({uniform(1, 3), uniform(2, 3)});
    EXPECT_EQ(as_set(tangent_cone_generators(fm, fb({{1}, {1, 2}}))),
              as_set({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
    EXPECT_TRUE(tangent_cone_generators(flag({uniform(1, 1)}), fb({{1}})).empty());
    EXPECT_EQ(as_set(tangent_cone_generators(flag({uniform(2, 4)}), fb({{1, 2}}))),
              as_set({{-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}, {0, -1, 0, 1}}));
    try {
        tangent_cone_generators(fm, fb({{1}, {2, 3}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotABasis);
    }
}

TEST(Triangulate, TriangleCone) {
    const auto cells = triangulate_half_open({0, 0, 0}, {{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(as_set(cells[0].rays), as_set({{-1, 1, 0}, {0, -1, 1}}));
    EXPECT_EQ(cells[0].open, (std::vector<bool>{false, false}));
}

TEST(Triangulate, SingleRay) {
    const auto cells = triangulate_half_open({0, 0}, {{-1, 1}});
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(cells[0].rays, (std::vector<LatticeVector>{{-1, 1}}));
}

TEST(Triangulate, SquareConeExactCover) {
    const std::vector<LatticeVector> gens = {{-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}, {0, -1, 0, 1}};
    const auto cells = triangulate_half_open(zero_vector(4), gens);
    ASSERT_EQ(cells.size(), 2u);
    int open_facets = 0;
    for (const auto& c : cells) {
        EXPECT_EQ(c.sign, 1);
        for (bool o : c.open) open_facets += o;
    }
    EXPECT_EQ(open_facets, 1);
    const FlagMatroid fm = flag({uniform(2, 4)});
    const FlagBasis b = fb({{1, 2}});
    for (const auto& w : oracle::box(4, -3, 3, 0))
        EXPECT_EQ(cover(cells, w), oracle::in_tangent_cone(fm, b, w) ? 1 : 0) << vector_string(w);
}

TEST(Triangulate, RejectsNonPointed) {
    try {
        triangulate_half_open({0, 0}, {{1, -1}, {-1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPointed);
    }
}

TEST(Triangulate, RejectsNonUnimodular) {
    try {
        triangulate_half_open({0, 0, 0}, {{1, 0, 0}, {1, 2, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
    }
}

TEST(Membership, Examples) {
    const auto c = cone({0, 0, 0}, {{-1, 1, 0}, {-1, 0, 1}});
    EXPECT_TRUE(cone_membership(c, {-2, 1, 1}));
    EXPECT_FALSE(cone_membership(c, {1, 0, 0}));
    EXPECT_FALSE(cone_membership(cone({0, 0, 0}, {{-1, 1, 0}}, {true}), {0, 0, 0}));
    EXPECT_TRUE(cone_membership(cone({0, 0, 0}, {{-1, 1, 0}}, {true}), {-1, 1, 0}));
}

TEST(Flip, Examples) {
    const auto c = cone({0, 0}, {{-1, 1}});
    const auto f = flip_cone(c, Direction::make({1, 0}));
    EXPECT_EQ(f.sign, -1);
    EXPECT_EQ(f.rays, (std::vector<LatticeVector>{{1, -1}}));
    EXPECT_EQ(f.open, (std::vector<bool>{true}));
    EXPECT_EQ(flip_cone(c, Direction::make({0, 1})), c);
}

TEST(Flip, TwoRaysAwayFromApex) {
    const auto c = cone({1, 1, 0}, {{-1, 1, 0}, {-1, 0, 1}});
    const auto f = flip_cone(c, Direction::make({1, 0, 0}));
    EXPECT_EQ(f.sign, 1);
    EXPECT_EQ(f.open, (std::vector<bool>{true, true}));
    int inside = 0;
    for (const auto& w : oracle::box(3, -2, 4, 2)) {
        if (!cone_membership(f, w)) continue;
        ++inside;
        EXPECT_GT(w[0], 1) << vector_string(w);
    }
    EXPECT_GT(inside, 0);
}

TEST(Flip, ZeroPairingRejected) {
    Direction d = Direction::make({1, 1});
    try {
        d.pairing_sign({0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroPairing);
    }
}

TEST(ConeJson, Shape) {
    const auto j = to_json(cone({0, 1}, {{1, -1}}, {true}));
    EXPECT_EQ(j.at("apex"), nlohmann::json({0, 1}));
    EXPECT_EQ(j.at("open"), nlohmann::json({true}));
    EXPECT_EQ(j.at("sign"), 1);
}

// Properties over tangent cones of small flag matroids.

class TangentCones : public ::testing::Test {
   protected:
    static std::vector<CorpusFlag> flags() {
        const auto ms = matroid_corpus(4);
        auto out = quotient_corpus(ms, 4);
        for (const auto& m : ms) out.push_back({m.name, FlagMatroid::trusted({m.matroid})});
        for (const auto& t : three_step_corpus(ms, 4)) out.push_back(t);
        return out;
    }
};

TEST_F(TangentCones, ContainAllBasisDifferences) {
    for (const auto& f : flags()) {
        const auto bases = flag_bases(f.flag);
        const int n = f.flag.size();
        for (const auto& b : bases) {
            const auto gens = tangent_cone_generators(f.flag, b);
            for (const auto& b2 : bases) {
                const LatticeVector d = b2.indicator(n) - b.indicator(n);
                EXPECT_TRUE(oracle::in_tangent_cone(f.flag, b, d)) << f.name;
                if (!is_zero(d)) EXPECT_TRUE(in_cone(gens, d, n)) << f.name;
            }
        }
    }
}

TEST_F(TangentCones, ExactCoverUnimodularCells) {
    for (const auto& f : flags()) {
        const int n = f.flag.size();
        const auto pts = oracle::box(n, -2, 2, 0);
        for (const auto& b : flag_bases(f.flag)) {
            const auto cells = triangulate_half_open(zero_vector(n), tangent_cone_generators(f.flag, b));
            for (const auto& c : cells) {
                EXPECT_EQ(c.sign, 1);
                if (!c.rays.empty()) EXPECT_EQ(maximal_minor_gcd(c.rays, n), 1) << f.name;
            }
            for (const auto& w : pts)
                ASSERT_EQ(cover(cells, w), oracle::in_tangent_cone(f.flag, b, w) ? 1 : 0) << f.name << " " << vector_string(w);
        }
    }
}

TEST_F(TangentCones, FlipPreservesValueAndSupport) {
    const std::vector<Direction> dirs = {Direction::standard(4), Direction::make({1, 0, 0, 0}),
                                        Direction::make({0, -1, 2, 1}, {3, 2, 1, 0})};
    for (const auto& f : flags()) {
        const int n = f.flag.size();
        if (n != 4) continue;
        for (const auto& b : flag_bases(f.flag))
            for (const auto& c : triangulate_half_open(b.indicator(n), tangent_cone_generators(f.flag, b)))
                for (const auto& d : dirs) {
                    const auto fl = flip_cone(c, d);
                    GenFun g(n, {});
                    g.add(c, AuxPolynomial::constant(1));
                    g.add(fl, AuxPolynomial::constant(-1));
                    const auto w = oracle::generic_small_weight(g);
                    EXPECT_EQ(oracle::evaluate_t1_cyclotomic(g, w), AuxPolynomial()) << f.name;
                    bool negated = false;
                    for (const auto& r : c.rays) negated |= d.pairing_sign(r) < 0;
                    if (!negated) continue;
                    const Rational level = dot(d.zeta, c.apex);
                    for (const auto& p : oracle::box(n, -1, 3, coordinate_sum(c.apex)))
                        if (dot(d.zeta, p) < level) EXPECT_FALSE(cone_membership(fl, p));
                }
    }
}
