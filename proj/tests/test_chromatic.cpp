#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tourcolor/chromatic.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/errors.hpp"
#include "tourcolor/tournament.hpp"

using namespace tourcolor;

namespace {

Tournament c3()
{
    Tournament t(3);
    t.orient(2, 0);
    return t;
}

void expect_valid(const Tournament &t, const VertexSet &scope, const ChromaticResult &r)
{
    EXPECT_TRUE(verify_coloring(t, scope, r.witness));
    EXPECT_EQ(r.witness.size(), r.k);
}

} // namespace

TEST(Chromatic, SmallExamples)
{
    auto one = dichromatic_number_exact(Tournament(1));
    EXPECT_EQ(one.k, 1U);
    EXPECT_EQ(dichromatic_number_exact(Tournament(0)).k, 0U);
    const auto tri = dichromatic_number_exact(c3());
    EXPECT_EQ(tri.k, 2U);
    expect_valid(c3(), VertexSet::full(3), tri);
    const auto qr7 = paley_tournament(7);
    EXPECT_EQ(dichromatic_number_exact(qr7).k, 3U);
}

TEST(Chromatic, MatchesPartitionOracle)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const auto t = random_tournament(n, Seed{s * 31 + n});
            const auto r = dichromatic_number_exact(t);
            ASSERT_EQ(r.k, oracle::min_transitive_partition(t)) << n << ' ' << s;
            expect_valid(t, t.vertices(), r);
        }
    }
}

TEST(Chromatic, SparsePathAgreesWithDensePath)
{
    for (std::uint64_t s = 0; s < 12; ++s) {
        const auto t = random_tournament(16, Seed{s});
        ChromaticOptions dense;
        ChromaticOptions sparse;
        sparse.dp_threshold = 0;
        const auto a = dichromatic_number_exact(t, dense);
        const auto b = dichromatic_number_exact(t, sparse);
        EXPECT_TRUE(a.dense_path);
        EXPECT_FALSE(b.dense_path);
        EXPECT_EQ(a.k, b.k);
        expect_valid(t, t.vertices(), b);
    }
}

TEST(Chromatic, ScopeRestriction)
{
    const auto t = random_tournament(14, Seed{5});
    const auto scope = VertexSet::of(14, {0, 2, 3, 5, 8, 9, 13});
    const auto r = dichromatic_number_exact(t, scope);
    expect_valid(t, scope, r);
    EXPECT_EQ(r.k, oracle::min_transitive_partition(t, scope.to_vector()));
}

TEST(Chromatic, MonotoneUnderInclusion)
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto t = random_tournament(12, Seed{s});
        SplitMix64 rng(Seed{s + 100});
        VertexSet y(12), x(12);
        for (std::size_t v = 0; v < 12; ++v)
            if (rng.bit()) {
                y.insert(v);
                if (rng.bit())
                    x.insert(v);
            }
        EXPECT_LE(dichromatic_number_exact(t, x).k, dichromatic_number_exact(t, y).k);
    }
}

TEST(Chromatic, ClosedNeighbourhoodAddsAtMostOne)
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto t = random_tournament(13, Seed{s});
        for (std::size_t v = 0; v < t.size(); ++v) {
            const auto open = dichromatic_number_exact(t, t.out(v)).k;
            const auto closed = dichromatic_number_exact(t, closed_out_neighbors(t, VertexSet::of(13, {v}))).k;
            EXPECT_LE(closed, open + 1);
        }
    }
}

TEST(Chromatic, GreedyIsValidUpperBound)
{
    EXPECT_EQ(greedy_coloring(Tournament(9), VertexSet::full(9)).size(), 1U);
    EXPECT_EQ(greedy_coloring(c3(), VertexSet::full(3)).size(), 2U);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto t = random_tournament(20, Seed{s});
        const auto g = greedy_coloring(t, t.vertices());
        EXPECT_TRUE(verify_coloring(t, t.vertices(), g));
        EXPECT_GE(g.size(), dichromatic_number_exact(t).k);
    }
}

TEST(Chromatic, BoundsBracketExact)
{
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto t = random_tournament(18, Seed{s});
        const auto b = dichromatic_bounds(t, t.vertices());
        const auto k = dichromatic_number_exact(t).k;
        EXPECT_LE(b.lower, k);
        EXPECT_GE(b.upper, k);
    }
}

TEST(Chromatic, ThreadCountDoesNotChangeResult)
{
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto t = random_tournament(22, Seed{s});
        ChromaticOptions o;
        o.dp_threshold = 0;
        const auto base = dichromatic_number_exact(t, o);
        for (unsigned threads : {2U, 4U, 8U}) {
            o.threads = threads;
            const auto r = dichromatic_number_exact(t, o);
            EXPECT_EQ(r.k, base.k);
            EXPECT_EQ(r.witness.classes, base.witness.classes);
        }
    }
}

TEST(Chromatic, CanonicalIsLeastColourVector)
{
    // Compare against the least restricted-growth vector among all optimal
    // partitions, found by enumeration.
    for (std::uint64_t s = 0; s < 25; ++s) {
        const auto t = random_tournament(7, Seed{s});
        ChromaticOptions o;
        o.canonical = true;
        const auto r = dichromatic_number_exact(t, o);
        expect_valid(t, t.vertices(), r);
        std::vector<std::size_t> got(7);
        for (std::size_t c = 0; c < r.witness.size(); ++c)
            for (auto v : r.witness.classes[c])
                got[v] = c;

        std::vector<std::size_t> label(7, 0), best;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
            if (!best.empty() || used > r.k)
                return;
            if (i == 7) {
                if (used != r.k)
                    return;
                for (std::size_t c = 0; c < used; ++c) {
                    std::vector<std::size_t> cls;
                    for (std::size_t v = 0; v < 7; ++v)
                        if (label[v] == c)
                            cls.push_back(v);
                    if (!oracle::acyclic(t, cls))
                        return;
                }
                best = label;
                return;
            }
            for (std::size_t c = 0; c <= used && c < r.k; ++c) {
                label[i] = c;
                rec(i + 1, std::max(used, c + 1));
            }
        };
        rec(0, 0);
        EXPECT_EQ(got, best) << s;
    }
}

TEST(Chromatic, LimitsAreReported)
{
    const auto t = random_tournament(30, Seed{1});
    ChromaticOptions o;
    o.exact_limit = 20;
    EXPECT_THROW(dichromatic_number_exact(t, o), InfeasibleError);
    o.exact_limit = 64;
    o.canonical = true;
    EXPECT_THROW(dichromatic_number_exact(t, o), InfeasibleError);
}

TEST(Chromatic, VerifyRejectsBadColourings)
{
    const auto t = c3();
    Coloring one{{VertexSet::full(3)}};
    EXPECT_FALSE(verify_coloring(t, t.vertices(), one));
    Coloring partial{{VertexSet::of(3, {0, 1})}};
    EXPECT_FALSE(verify_coloring(t, t.vertices(), partial));
    Coloring outside{{VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})}};
    EXPECT_THROW(verify_coloring(t, VertexSet::of(3, {0, 1}), outside), ColoringOutOfScope);
}
