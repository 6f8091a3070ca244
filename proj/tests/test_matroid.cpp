#include <gtest/gtest.h>

#include <algorithm>

#include "flagtutte/corpus.hpp"
#include "flagtutte/flag_matroid.hpp"
#include "flagtutte/matroid.hpp"
#include "oracles.hpp"

using namespace flagtutte;

namespace {

std::vector<Subset> S(std::initializer_list<std::initializer_list<int>> xs) {
    std::vector<Subset> out;
    for (auto x : xs) out.push_back(from_elements(std::vector<int>(x)));
    std::sort(out.begin(), out.end());
    return out;
}

Matroid path_pendant() { return Matroid::from_bases(3, 2, S({{1, 2}, {1, 3}})); }

}  // namespace

TEST(FromBases, UniformFromList) { EXPECT_EQ(Matroid::from_bases(2, 1, S({{1}, {2}})), uniform(1, 2)); }

TEST(FromBases, PathPendant) {
    const Matroid m = path_pendant();
    EXPECT_EQ(m.rank(), 2);
    EXPECT_TRUE(m.is_coloop(1));
    EXPECT_TRUE(oracle::exchange_axiom(m));
}

TEST(FromBases, LoopAllowed) {
    const Matroid m = Matroid::from_bases(3, 1, S({{1}, {3}}));
    EXPECT_TRUE(m.is_loop(2));
    EXPECT_EQ(m.loops(), element(2));
}

TEST(FromBases, RejectsBadFamilies) {
    EXPECT_THROW(Matroid::from_bases(4, 2, S({{1, 2}, {3, 4}})), Error);
    EXPECT_THROW(Matroid::from_bases(3, 1, S({{1}, {2, 3}})), Error);
    try {
        Matroid::from_bases(3, 1, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyBases);
    }
}

TEST(Uniform, Bases) {
    EXPECT_EQ(uniform(1, 3).bases(), S({{1}, {2}, {3}}));
    EXPECT_EQ(uniform(0, 4).bases(), std::vector<Subset>{0});
    EXPECT_EQ(uniform(2, 3).bases(), S({{1, 2}, {1, 3}, {2, 3}}));
    try {
        uniform(4, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidRank);
    }
}

TEST(FromMatrix, Examples) {
    EXPECT_EQ(from_matrix({{1, 0, 1}, {0, 1, 1}}), uniform(2, 3));
    EXPECT_EQ(from_matrix({{1, 1, 1}}), uniform(1, 3));
    const Matroid m = from_matrix({{1, 0, 0}, {0, 1, 0}});
    EXPECT_EQ(m.bases(), S({{1, 2}}));
    EXPECT_TRUE(m.is_loop(3));
    EXPECT_THROW(from_matrix({}), Error);
}

TEST(FromMatrix, RationalEntries) {
    // columns 1 and 3 are parallel: (1/2, 1) and (1, 2)
    const Matroid m = from_matrix({{Rational(1, 2), 0, 1}, {1, 1, 2}});
    EXPECT_FALSE(m.is_basis(from_elements({1, 3})));
    EXPECT_TRUE(m.is_basis(from_elements({1, 2})));
}

TEST(Graphic, Examples) {
    EXPECT_EQ(graphic(3, {{1, 2}, {2, 3}, {1, 3}}), uniform(2, 3));
    EXPECT_EQ(graphic(2, {{1, 2}, {1, 2}}), uniform(1, 2));
    EXPECT_EQ(graphic(1, {{1, 1}}), uniform(0, 1));
}

TEST(Rank, Examples) {
    EXPECT_EQ(uniform(2, 3).rank(element(1)), 1);
    EXPECT_EQ(uniform(2, 3).rank(full_set(3)), 2);
    EXPECT_EQ(uniform(0, 4).rank(from_elements({1, 2})), 0);
}

TEST(Dual, Examples) {
    EXPECT_EQ(dual(uniform(1, 3)), uniform(2, 3));
    EXPECT_EQ(dual(dual(path_pendant())), path_pendant());
    EXPECT_EQ(dual(uniform(0, 2)), uniform(2, 2));
}

TEST(Minor, Examples) {
    EXPECT_EQ(minor(uniform(2, 3), element(3), 0).matroid, uniform(2, 2));
    const auto c = minor(uniform(2, 3), 0, element(1));
    EXPECT_EQ(c.matroid, uniform(1, 2));
    EXPECT_EQ(c.labels, (std::vector<int>{2, 3}));
    EXPECT_EQ(minor(path_pendant(), 0, 0).matroid, path_pendant());
    try {
        minor(uniform(1, 2), full_set(2), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GroundSetExhausted);
    }
}

TEST(DirectSum, Examples) {
    const Matroid a = direct_sum(uniform(1, 1), uniform(0, 1));
    EXPECT_EQ(a.bases(), S({{1}}));
    EXPECT_TRUE(a.is_loop(2));
    const Matroid b = direct_sum(uniform(1, 2), uniform(1, 2));
    EXPECT_EQ(b.rank(), 2);
    EXPECT_EQ(b.bases().size(), 4u);
}

TEST(IsQuotient, Examples) {
    EXPECT_TRUE(is_quotient(uniform(1, 3), uniform(2, 3)));
    EXPECT_FALSE(is_quotient(uniform(2, 3), uniform(1, 3)));
    EXPECT_TRUE(is_quotient(path_pendant(), path_pendant()));
}

TEST(Flag, Validation) {
    EXPECT_NO_THROW(flag({uniform(1, 3), uniform(2, 3)}));
    EXPECT_NO_THROW(flag({path_pendant(), path_pendant()}));
    try {
        flag({uniform(2, 3), uniform(1, 3)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAQuotientChain);
    }
}

TEST(FlagBases, Examples) {
    EXPECT_EQ(flag_bases(flag({uniform(1, 3), uniform(2, 3)})).size(), 6u);
    const Matroid m = path_pendant();
    const auto fb = flag_bases(flag({m, m}));
    ASSERT_EQ(fb.size(), m.bases().size());
    for (const auto& b : fb) EXPECT_EQ(b.chain[0], b.chain[1]);
    const auto single = flag_bases(flag({uniform(1, 2)}));
    ASSERT_EQ(single.size(), 2u);
    EXPECT_EQ(single[0].chain, std::vector<Subset>{element(1)});
    EXPECT_EQ(single[1].chain, std::vector<Subset>{element(2)});
}

TEST(PseudoBases, Examples) {
    EXPECT_EQ(pseudo_bases(uniform(1, 3), uniform(2, 3)).size(), 6u);
    EXPECT_EQ(pseudo_bases(path_pendant(), path_pendant()), path_pendant().bases());
    EXPECT_EQ(pseudo_bases(uniform(0, 3), uniform(1, 3)), (std::vector<Subset>{0, element(1), element(2), element(3)}));
}

TEST(Higgs, Examples) {
    EXPECT_EQ(higgs_factorization(uniform(1, 3), uniform(2, 3)), (std::vector<Matroid>{uniform(2, 3), uniform(1, 3)}));
    EXPECT_EQ(higgs_factorization(uniform(1, 4), uniform(3, 4)),
              (std::vector<Matroid>{uniform(3, 4), uniform(2, 4), uniform(1, 4)}));
    EXPECT_EQ(higgs_factorization(path_pendant(), path_pendant()), std::vector<Matroid>{path_pendant()});
}

TEST(FaceBasis, Examples) {
    const auto fm = flag({uniform(1, 3), uniform(2, 3)});
    const auto b = face_basis(fm, {element(2)});
    EXPECT_EQ(b.chain, (std::vector<Subset>{element(2), from_elements({1, 2})}));
    EXPECT_TRUE(is_flag_basis(fm, face_basis(fm, {full_set(3)})));
    const Matroid m = path_pendant();
    const Subset s = from_elements({2, 3});
    const auto mm = face_basis(flag({m, m}), {s});
    EXPECT_EQ(card(mm.chain[0] & s), m.rank(s));
}

TEST(PolytopeMembership, Examples) {
    const auto fm = flag({uniform(1, 3), uniform(2, 3)});
    EXPECT_TRUE(polytope_membership(fm, {1, 1, 1}));
    EXPECT_TRUE(polytope_membership(fm, {2, 1, 0}));
    EXPECT_FALSE(polytope_membership(fm, {3, 0, 0}));
}

// Properties over the corpus.

class MatroidCorpus : public ::testing::Test {
   protected:
    static const std::vector<CorpusMatroid>& ms() {
        static const auto c = matroid_corpus();
        return c;
    }
};

TEST_F(MatroidCorpus, SizeAndDeterminism) {
    EXPECT_GE(ms().size(), 200u);
    const auto again = matroid_corpus();
    ASSERT_EQ(again.size(), ms().size());
    for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(again[i].matroid, ms()[i].matroid);
}

TEST_F(MatroidCorpus, ExchangeAxiomAndRank) {
    for (const auto& c : ms()) {
        EXPECT_TRUE(oracle::exchange_axiom(c.matroid)) << c.name;
        for (Subset s = 0; s <= full_set(c.matroid.size()); ++s)
            ASSERT_EQ(c.matroid.rank(s), oracle::rank(c.matroid, s)) << c.name;
    }
}

TEST_F(MatroidCorpus, DualInvolution) {
    for (const auto& c : ms()) EXPECT_EQ(dual(dual(c.matroid)), c.matroid) << c.name;
}

TEST_F(MatroidCorpus, ContractionDeletionQuotients) {
    for (const auto& c : ms()) {
        const Matroid& m = c.matroid;
        for (Subset s = 1; s < full_set(m.size()); s += 3) {
            const auto con = minor(m, 0, s), del = minor(m, s, 0);
            EXPECT_TRUE(is_quotient(con.matroid, del.matroid)) << c.name << " S=" << subset_string(s);
        }
    }
}

TEST_F(MatroidCorpus, QuotientLocalFormMatchesPairForm) {
    for (const auto& q : quotient_corpus(ms(), 5))
        EXPECT_TRUE(oracle::is_quotient_pairs(q.flag.front(), q.flag.back())) << q.name;
    // and a few non-quotients
    for (const auto& c : ms()) {
        const Matroid& m = c.matroid;
        if (m.size() > 5 || m.rank() == 0) continue;
        const Matroid t = truncation(m);
        EXPECT_EQ(is_quotient(m, t), oracle::is_quotient_pairs(m, t)) << c.name;
    }
}

TEST_F(MatroidCorpus, PseudoBasesOfIdentityQuotient) {
    for (const auto& c : ms()) EXPECT_EQ(pseudo_bases(c.matroid, c.matroid).size(), c.matroid.bases().size()) << c.name;
}

TEST_F(MatroidCorpus, PseudoBasesAgainstEnumeration) {
    for (const auto& q : quotient_corpus(ms(), 5))
        EXPECT_EQ(pseudo_bases(q.flag.front(), q.flag.back()), oracle::pseudo_bases(q.flag.front(), q.flag.back())) << q.name;
}

TEST_F(MatroidCorpus, HiggsLayers) {
    for (const auto& q : quotient_corpus(ms(), 5)) {
        const auto& m1 = q.flag.front();
        const auto& m2 = q.flag.back();
        const auto layers = higgs_factorization(m1, m2);
        ASSERT_EQ(static_cast<int>(layers.size()), m2.rank() - m1.rank() + 1) << q.name;
        EXPECT_EQ(layers.front(), m2);
        EXPECT_EQ(layers.back(), m1);
        for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
            EXPECT_EQ(layers[i].rank() - layers[i + 1].rank(), 1);
            EXPECT_TRUE(is_quotient(layers[i + 1], layers[i])) << q.name;
            EXPECT_TRUE(oracle::exchange_axiom(layers[i]));
        }
    }
}

TEST_F(MatroidCorpus, FaceBasisEqualities) {
    for (const auto& q : quotient_corpus(ms(), 5)) {
        const auto& fm = q.flag;
        const int n = fm.size();
        for (Subset a = 0; a <= full_set(n); a += 5) {
            for (Subset b = a; b <= full_set(n); b = (b + 1) | a) {
                if ((b & a) != a) continue;
                const auto fb = face_basis(fm, {a, b});
                ASSERT_TRUE(is_flag_basis(fm, fb)) << q.name;
                for (std::size_t i = 0; i < fm.length(); ++i) {
                    EXPECT_EQ(card(fb.chain[i] & a), fm[i].rank(a)) << q.name;
                    EXPECT_EQ(card(fb.chain[i] & b), fm[i].rank(b)) << q.name;
                }
                if (b == full_set(n)) break;
            }
        }
    }
}

TEST_F(MatroidCorpus, PolytopeMembershipOfVertices) {
    for (const auto& q : quotient_corpus(ms(), 5)) {
        const auto& fm = q.flag;
        int total = 0;
        for (int r : fm.rank_vector()) total += r;
        for (const auto& b : flag_bases(fm)) {
            EXPECT_TRUE(polytope_membership(fm, b.indicator(fm.size()))) << q.name;
            LatticeVector w = b.indicator(fm.size());
            w[0] += 1;
            if (coordinate_sum(w) != total) EXPECT_FALSE(polytope_membership(fm, w));
        }
    }
}
