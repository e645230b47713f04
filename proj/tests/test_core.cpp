#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/errors.hpp"
#include "tourcolor/io.hpp"
#include "tourcolor/rng.hpp"
#include "tourcolor/tournament.hpp"

using namespace tourcolor;

namespace {

Tournament c3()
{
    Tournament t(3);
    t.orient(2, 0);
    return t;
}

} // namespace

TEST(VertexSet, Algebra)
{
    auto a = VertexSet::of(130, {0, 5, 64, 129});
    auto b = VertexSet::of(130, {5, 64, 100});
    EXPECT_EQ((a | b).to_vector(), (std::vector<std::size_t>{0, 5, 64, 100, 129}));
    EXPECT_EQ((a & b).to_vector(), (std::vector<std::size_t>{5, 64}));
    EXPECT_EQ((a - b).to_vector(), (std::vector<std::size_t>{0, 129}));
    EXPECT_EQ(a.complement().count(), 126U);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(a.next(6), 64U);
    EXPECT_EQ(a.next(130), VertexSet::npos);
    EXPECT_THROW(a.insert(130), std::out_of_range);
    EXPECT_THROW(a |= VertexSet(10), std::invalid_argument);
}

TEST(VertexSet, IterationMatchesVector)
{
    auto s = VertexSet::of(70, {3, 63, 64, 69});
    std::vector<std::size_t> seen(s.begin(), s.end());
    EXPECT_EQ(seen, s.to_vector());
    EXPECT_TRUE(VertexSet(0).empty());
}

TEST(Rng, SplitMixReferenceValues)
{
    SplitMix64 rng(Seed{0});
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    SplitMix64 r2(Seed{7});
    for (int i = 0; i < 1000; ++i)
        EXPECT_LT(r2.below(13), 13U);
}

TEST(Tournament, OutNeighbourhoods)
{
    const auto t = c3();
    EXPECT_EQ(out_neighbors(t, VertexSet::of(3, {0})), VertexSet::of(3, {1}));
    EXPECT_EQ(out_neighbors(t, VertexSet::of(3, {0, 1})), VertexSet::of(3, {1, 2}));
    EXPECT_TRUE(out_neighbors(t, VertexSet(3)).empty());
    EXPECT_EQ(closed_out_neighbors(t, VertexSet::of(3, {0})), VertexSet::of(3, {0, 1}));
    EXPECT_EQ(closed_out_neighbors(t, t.vertices()), t.vertices());
    EXPECT_EQ(closed_out_neighbors(Tournament(3), VertexSet::of(3, {0})), VertexSet::full(3));
}

TEST(Tournament, DegreeIdentityOnRandomInstances)
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto t = random_tournament(17, Seed{s});
        for (std::size_t v = 0; v < t.size(); ++v) {
            EXPECT_FALSE(t.out(v).contains(v));
            EXPECT_EQ(t.out(v).count() + t.in(v).count(), t.size() - 1);
        }
    }
}

TEST(Tournament, TransitivityExamples)
{
    EXPECT_TRUE(is_transitive(Tournament(3)));
    EXPECT_FALSE(is_transitive(c3()));
    EXPECT_FALSE(is_transitive(s_tournament(3)));
    EXPECT_TRUE(is_transitive(Tournament(0)));
}

// Degree test, triangle search and general cycle search agree everywhere.
TEST(Tournament, TransitivityCheckersAgreeExhaustively)
{
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
            const auto t = oracle::from_code(n, code);
            const bool by_degree = is_transitive(t);
            const bool no_triangle = !find_directed_triangle(t, t.vertices()).has_value();
            const bool no_cycle = !has_directed_cycle(t);
            ASSERT_EQ(by_degree, no_triangle) << n << ' ' << code;
            ASSERT_EQ(by_degree, no_cycle) << n << ' ' << code;
        }
    }
}

TEST(Tournament, TriangleIsOrderedAndReal)
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto t = random_tournament(9, Seed{s});
        if (auto tri = find_directed_triangle(t, t.vertices())) {
            auto [a, b, c] = *tri;
            EXPECT_TRUE(t.arc(a, b) && t.arc(b, c) && t.arc(c, a));
            EXPECT_LT(a, b);
            EXPECT_LT(a, c);
        }
    }
}

TEST(Tournament, InduceComposes)
{
    const auto t = random_tournament(20, Seed{3});
    const auto x = VertexSet::of(20, {1, 2, 4, 7, 8, 11, 15, 19});
    const auto y_local = VertexSet::of(x.count(), {0, 2, 3, 6, 7});
    const auto xs = x.to_vector();
    VertexSet y_global(20);
    for (auto v : y_local)
        y_global.insert(xs[v]);
    EXPECT_EQ(induce(induce(t, x), y_local), induce(t, y_global));
}

TEST(Tournament, RandomIsDeterministic)
{
    EXPECT_EQ(random_tournament(0, Seed{1}).size(), 0U);
    EXPECT_EQ(random_tournament(1, Seed{1}).size(), 1U);
    EXPECT_EQ(random_tournament(5, Seed{42}), random_tournament(5, Seed{42}));
    EXPECT_NE(random_tournament(30, Seed{42}), random_tournament(30, Seed{43}));
    EXPECT_TRUE(is_transitive(random_transitive_tournament(25, Seed{9})));
}

TEST(Format, TriangleText)
{
    EXPECT_EQ(serialize(c3()), "3\n101\n");
    EXPECT_EQ(parse_tournament("3\n101\n"), c3());
    EXPECT_EQ(parse_tournament("1\n").size(), 1U);
    EXPECT_EQ(parse_tournament("0\n").size(), 0U);
    EXPECT_EQ(parse_tournament("# triangle\n3\n# pairs\n101\n"), c3());
    EXPECT_EQ(parse_tournament("3\r\n101\r\n\n"), c3());
}

TEST(Format, DistinctErrors)
{
    auto kind_of = [](const char *text) {
        try {
            parse_tournament(text);
        } catch (const ParseError &e) {
            return e.kind();
        }
        ADD_FAILURE() << "accepted: " << text;
        return ParseError::Kind::TrailingData;
    };
    EXPECT_EQ(kind_of("x\n101\n"), ParseError::Kind::MalformedHeader);
    EXPECT_EQ(kind_of(""), ParseError::Kind::MalformedHeader);
    EXPECT_EQ(kind_of("3\n10\n"), ParseError::Kind::LengthMismatch);
    EXPECT_EQ(kind_of("3\n1011\n"), ParseError::Kind::LengthMismatch);
    EXPECT_EQ(kind_of("3\n1a1\n"), ParseError::Kind::NonBinaryCharacter);
    EXPECT_EQ(kind_of("3\n101\n1\n"), ParseError::Kind::TrailingData);
}

TEST(Format, RoundTripRandom)
{
    SplitMix64 rng(Seed{2024});
    for (int i = 0; i < 1000; ++i) {
        const auto n = static_cast<std::size_t>(rng.below(51));
        const auto t = random_tournament(n, Seed{rng.next()});
        const auto text = serialize(t);
        const auto back = parse_tournament(text);
        ASSERT_EQ(back, t);
        ASSERT_EQ(serialize(back), text);
    }
}

TEST(Format, GraphRoundTrip)
{
    const auto g = petersen_graph();
    EXPECT_EQ(parse_graph(serialize(g)).edge_count(), 15U);
    EXPECT_EQ(serialize(parse_graph(serialize(g))), serialize(g));
}
