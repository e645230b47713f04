#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tourcolor/rng.hpp"
#include "tourcolor/tournament.hpp"

namespace tourcolor {

/// S_1 is a single vertex; S_i blows up two vertices of a directed triangle
/// into copies of S_{i-1}. Layout: vertex 0 is the unblown triangle vertex,
/// 1..2^{i-1}-1 is copy A, the remaining 2^{i-1}-1 vertices are copy B, with
/// 0 -> A, A -> B, B -> 0 and each copy labelled recursively.
Tournament s_tournament(int i);

/// T vertex p stands for G vertex ordering[p]. For p < q the arc is p->q when
/// {ordering[p], ordering[q]} is an edge of G, and q->p otherwise.
Tournament orient_from_graph(const Graph &g, std::span<const std::size_t> ordering);
Tournament orient_from_graph(const Graph &g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph &g);

struct GirthGraph {
    Graph graph;
    std::size_t edges_requested = 0;
    std::size_t edges_added = 0;
};

/// Shuffles all vertex pairs with the seeded generator and adds each pair
/// whose endpoints are at distance >= min_girth - 1 (or disconnected), until
/// target_edges edges are placed or the pairs run out.
GirthGraph random_graph_with_girth(std::size_t n, std::size_t min_girth, std::size_t target_edges, Seed seed);

Graph petersen_graph();
Graph cycle_graph(std::size_t n);

/// Arc i->j iff j - i is a nonzero quadratic residue mod q; q prime, q = 3 mod 4.
Tournament paley_tournament(std::size_t q);

struct PatternMatch {
    /// mapping[p] is the host vertex playing pattern vertex p.
    std::vector<std::size_t> mapping;
};

/// Some induced copy of `pattern` in `host`, by backtracking with degree
/// pruning; nullopt means no copy exists.
std::optional<PatternMatch> contains_pattern(const Tournament &host, const Tournament &pattern);

/// Injective, in range, and arc-for-arc faithful.
bool verify_pattern_match(const Tournament &host, const Tournament &pattern, const PatternMatch &match);

} // namespace tourcolor
