#include <gtest/gtest.h>

#include <string>

#include "flagtutte/invariants.hpp"
#include "flagtutte/io.hpp"

using namespace flagtutte;

namespace {

std::string sample(const std::string& name) { return std::string(FLAGTUTTE_SAMPLES) + "/" + name; }

/// Error code and message of a failing parse.
std::pair<ErrorCode, std::string> parse_error(const std::string& text) {
    try {
        parse_input(text);
    } catch (const Error& e) {
        return {e.code(), e.what()};
    }
    return {ErrorCode::InternalAssertion, "no error"};
}

}  // namespace

TEST(Io, Samples) {
    const auto f = parse_input(sample("flag_u13_u23.json"));
    EXPECT_TRUE(f.is_flag);
    EXPECT_EQ(f.flag.length(), 2u);
    EXPECT_EQ(f.flag.front(), uniform(1, 3));
    EXPECT_EQ(f.flag.back(), uniform(2, 3));
    EXPECT_EQ(f.diagram, "flag");

    const auto u = parse_input(sample("uniform_1_2.json"));
    EXPECT_FALSE(u.is_flag);
    EXPECT_EQ(u.flag.front(), uniform(1, 2));

    EXPECT_EQ(parse_input(sample("flag_u24_u34_lvdiagram.json")).diagram, "lv");

    const auto k4 = parse_input(sample("k4_graphic.json")).flag.front();
    EXPECT_EQ(k4.size(), 6);
    EXPECT_EQ(k4.rank(), 3);
    EXPECT_EQ(k4.bases().size(), 16u);

    // over Q only six triples are dependent; {4,5,6} is a basis
    const auto nf = parse_input(sample("non_fano_matrix.json")).flag.front();
    EXPECT_EQ(nf.rank(), 3);
    EXPECT_EQ(nf.bases().size(), 29u);
    EXPECT_EQ(nf.rank(element(4) | element(5) | element(6)), 3);

    const auto b = parse_input(sample("flag_u14_u34.json")).flag;
    EXPECT_EQ(b.front(), uniform(1, 4));
    EXPECT_EQ(b.back(), uniform(3, 4));
}

TEST(Io, InlineJsonAndHash) {
    const std::string a = R"({"type": "uniform", "r": 1, "n": 2})";
    const std::string b = R"(  {"n": 2, "r": 1, "type": "uniform"})";
    EXPECT_EQ(parse_input(a).hash, parse_input(b).hash);
    EXPECT_EQ(parse_input(a).hash.size(), 16u);
    EXPECT_NE(parse_input(a).hash, parse_input(R"({"type": "uniform", "r": 2, "n": 2})").hash);
}

TEST(Io, MatrixWithRationals) {
    const auto m = parse_input(R"({"type": "matrix", "rows": [["1/2", 1, 0], ["-3/4", "2", 0]]})").flag.front();
    EXPECT_EQ(m.rank(), 2);
    EXPECT_TRUE(m.is_loop(3));
}

TEST(Io, RoundTrip) {
    const auto f = parse_input(sample("flag_u14_u34.json"));
    const auto again = input_from_json(to_json(f.flag));
    EXPECT_EQ(again.flag.front(), f.flag.front());
    EXPECT_EQ(again.flag.back(), f.flag.back());
    const Matroid k4 = parse_input(sample("k4_graphic.json")).flag.front();
    EXPECT_EQ(matroid_from_json(to_json(k4)), k4);
}

TEST(Io, ErrorLocations) {
    auto [c1, m1] = parse_error(R"({"type": "bases", "n": 3, "bases": [[1, 2], [1, 5]]})");
    EXPECT_EQ(c1, ErrorCode::InvalidInput);
    EXPECT_NE(m1.find("$.bases[1]"), std::string::npos) << m1;

    auto [c2, m2] = parse_error(R"({"type": "flag", "constituents": [{"type": "uniform", "r": 1}]})");
    EXPECT_EQ(c2, ErrorCode::ParseError);
    EXPECT_NE(m2.find("$.constituents[0]"), std::string::npos) << m2;
    EXPECT_NE(m2.find("\"n\""), std::string::npos) << m2;

    auto [c3, m3] = parse_error(R"({"type": "matrix", "rows": [[1, "x"]]})");
    EXPECT_EQ(c3, ErrorCode::ParseError);
    EXPECT_NE(m3.find("$.rows[0][1]"), std::string::npos) << m3;

    auto [c4, m4] = parse_error(R"({"type": "uniform", "r": 1, "n": )");
    EXPECT_EQ(c4, ErrorCode::ParseError);
    EXPECT_NE(m4.find("byte"), std::string::npos) << m4;

    EXPECT_EQ(parse_error(R"({"type": "circle"})").first, ErrorCode::ParseError);
    EXPECT_EQ(parse_error(R"({"type": "matrix", "rows": [[1, 0], [1]]})").first, ErrorCode::ParseError);
    EXPECT_EQ(parse_error(R"({"type": "bases", "n": 2, "bases": []})").first, ErrorCode::EmptyBases);
    EXPECT_EQ(parse_error(R"({"type": "bases", "n": 70, "bases": [[1]]})").first, ErrorCode::GroundSetTooLarge);
    EXPECT_EQ(parse_error("/nonexistent/input.json").first, ErrorCode::ParseError);
    EXPECT_EQ(parse_error(R"({"type": "flag", "constituents": [], "diagram": "flag"})").first, ErrorCode::ParseError);
    EXPECT_EQ(parse_error(R"({"type": "flag", "constituents": [{"type": "uniform", "r": 1, "n": 2}], "diagram": "x"})").first,
              ErrorCode::ParseError);
}

TEST(Io, InvalidStructures) {
    // not a matroid: {1,2} and {3,4} fail exchange
    EXPECT_EQ(parse_error(R"({"type": "bases", "n": 4, "bases": [[1, 2], [3, 4]]})").first, ErrorCode::NotAMatroid);
    EXPECT_EQ(parse_error(R"({"type": "flag", "constituents": [{"type": "uniform", "r": 2, "n": 3}, {"type": "uniform", "r": 1, "n": 3}]})")
                  .first,
              ErrorCode::NotAQuotientChain);
}
