#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tourcolor/rng.hpp"
#include "tourcolor/vertex_set.hpp"

namespace tourcolor {

/// Complete oriented graph on vertices 0..n-1. Row u holds the out-neighbours
/// of u; for u != v exactly one of u->v, v->u is present and there are no
/// loops. Every mutator preserves that invariant.
class Tournament {
public:
    Tournament() = default;

    /// The transitive tournament with u->v whenever u < v.
    explicit Tournament(std::size_t n);

    std::size_t size() const { return out_.size(); }
    VertexSet vertices() const { return VertexSet::full(size()); }

    bool arc(std::size_t from, std::size_t to) const { return out_.at(from).contains(to); }
    const VertexSet &out(std::size_t v) const { return out_.at(v); }
    VertexSet in(std::size_t v) const;
    std::size_t out_degree(std::size_t v) const { return out_.at(v).count(); }

    /// Makes from->to an arc (reversing to->from if needed).
    void orient(std::size_t from, std::size_t to);
    void reverse(std::size_t u, std::size_t v);

    bool operator==(const Tournament &other) const = default;

private:
    std::vector<VertexSet> out_;
};

/// Simple undirected graph, symmetric adjacency, no loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const;

    bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).contains(v); }
    const VertexSet &neighbors(std::size_t v) const { return adj_.at(v); }

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    bool operator==(const Graph &other) const = default;

private:
    std::vector<VertexSet> adj_;
};

/// Subtournament on X, relabelled 0..|X|-1 in increasing original order.
Tournament induce(const Tournament &t, const VertexSet &x);

/// N+(X): union of out-neighbourhoods of X (may intersect X).
VertexSet out_neighbors(const Tournament &t, const VertexSet &x);
/// N+[X] = X u N+(X).
VertexSet closed_out_neighbors(const Tournament &t, const VertexSet &x);

/// Out-degree sequence is a permutation of 0..n-1. For tournaments this is
/// equivalent to being acyclic and to having no directed triangle.
bool is_transitive(const Tournament &t);
/// Same test applied to the subtournament induced by X.
bool is_transitive(const Tournament &t, const VertexSet &x);

/// Lexicographically least directed triangle (a, b, c) with a the smallest
/// label, a->b->c->a, inside X.
std::optional<std::array<std::size_t, 3>> find_directed_triangle(const Tournament &t, const VertexSet &x);

/// Directed-cycle search by depth-first colouring, independent of degrees.
bool has_directed_cycle(const Tournament &t);

/// Each unordered pair (i, j), i < j, in lexicographic order takes the top bit
/// of one SplitMix64 draw: 1 means i->j, 0 means j->i.
Tournament random_tournament(std::size_t n, Seed seed);

/// Transitive tournament whose linear order is a seeded random permutation.
Tournament random_transitive_tournament(std::size_t n, Seed seed);

} // namespace tourcolor
