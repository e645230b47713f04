#pragma once

// A hand-built level-3 extraction trace. Its structure satisfies every
// arc, size and containment property checked by validate_trace; its gamma
// claims cannot be true (a tournament on n vertices has gamma at most
// ceil(log2(n + 1)) and the root needs 14), which the validator flags at
// the root. Mutations of it serve as negative fixtures.

#include <cstddef>
#include <stdexcept>

#include "tourcolor/localglobal.hpp"
#include "tourcolor/rng.hpp"
#include "tourcolor/tournament.hpp"

namespace fixture {

using namespace tourcolor;

struct LevelThree {
    Tournament t;
    ExtractionTrace trace;
    VertexSet w;
    VertexSet a;
};

inline constexpr std::size_t w_count = 12;  // 2 (K_2 + l_2 + 1)
inline constexpr std::size_t s_count = 6;   // K_2 + l_2 + 1
inline constexpr std::size_t a_first = 12;  // A = {12, 13, 14}
inline constexpr std::size_t block_first = 15;

inline ExtractionTrace triangle_level(const Tournament &t, const VertexSet &scope)
{
    ExtractionTrace tr;
    tr.k = 2;
    tr.scope = scope;
    tr.gamma_claim = 2;
    tr.dominating = VertexSet(t.size());
    tr.w = VertexSet(t.size());
    tr.result = VertexSet(t.size());
    auto tri = find_directed_triangle(t, scope);
    if (!tri)
        throw std::logic_error("fixture scope has no directed triangle");
    for (auto v : *tri)
        tr.result.insert(v);
    return tr;
}

// W = {0..11} ordered transitively, A a triangle beating all of W, and one
// triangle block per 6-subset S of W: W-vertex v beats block S' iff v is in
// S', every block beats A, arcs between blocks are random.
inline LevelThree level_three(Seed seed = Seed{3})
{
    const std::size_t n = block_first + 3 * 924; // C(12, 6) blocks; n = l_3
    LevelThree f{Tournament(n), {}, VertexSet(n), VertexSet(n)};
    auto &t = f.t;
    for (std::size_t v = 0; v < w_count; ++v)
        f.w.insert(v);
    const auto subsets = w_subsets(f.w, s_count);
    for (std::size_t v = a_first; v < a_first + 3; ++v)
        f.a.insert(v);

    t.orient(a_first + 2, a_first);
    for (auto x : f.a)
        for (auto v : f.w)
            t.orient(x, v);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const auto b = block_first + 3 * j;
        t.orient(b + 2, b);
        for (std::size_t x = b; x < b + 3; ++x) {
            for (auto u : f.a)
                t.orient(x, u);
            for (std::size_t v = 0; v < w_count; ++v)
                if (!subsets[j].contains(v))
                    t.orient(x, v);
        }
    }
    SplitMix64 rng(seed);
    for (std::size_t x = block_first; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if ((x - block_first) / 3 != (y - block_first) / 3 && rng.bit())
                t.orient(y, x);

    auto &tr = f.trace;
    tr.k = 3;
    tr.scope = t.vertices();
    tr.dominating = f.w;
    tr.dominating.insert(a_first);
    tr.dominating.insert(a_first + 2);
    tr.gamma_claim = tr.dominating.count();
    tr.w = f.w;
    tr.base = triangle_level(t, base_scope(t, tr.scope, tr.w));
    for (const auto &s : subsets) {
        ExtractionBranch br;
        br.s = s;
        br.gamma_claim = 5; // K_2 + l_2
        br.sub = triangle_level(t, branch_scope(t, tr.scope, br.s, tr.base->result));
        tr.branches.push_back(std::move(br));
    }
    tr.result = assemble(tr);
    return f;
}

} // namespace fixture
