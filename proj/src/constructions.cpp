#include "tourcolor/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace tourcolor {

namespace {

constexpr int max_s_level = 14;

void blow_up(Tournament &t, std::size_t offset, int level)
{
    if (level <= 1)
        return;
    const std::size_t half = (std::size_t{1} << (level - 1)) - 1;
    const std::size_t a = offset + 1;
    const std::size_t b = a + half;
    // The base order already gives offset -> A and A -> B.
    for (std::size_t v = b; v < b + half; ++v)
        t.orient(v, offset);
    blow_up(t, a, level - 1);
    blow_up(t, b, level - 1);
}

bool is_prime(std::size_t q)
{
    if (q < 2)
        return false;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

/// True when v is within `radius` steps of u.
bool within_distance(const Graph &g, std::size_t u, std::size_t v, std::size_t radius)
{
    std::vector<std::size_t> dist(g.size(), static_cast<std::size_t>(-1));
    std::queue<std::size_t> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        if (x == v)
            return true;
        if (dist[x] == radius)
            continue;
        for (auto y : g.neighbors(x))
            if (dist[y] == static_cast<std::size_t>(-1)) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return false;
}

class PatternSearch {
public:
    PatternSearch(const Tournament &host, const Tournament &pattern) : host_(host), pattern_(pattern)
    {
        for (std::size_t v = 0; v < host.size(); ++v)
            host_out_.push_back(host.out_degree(v));
        for (std::size_t p = 0; p < pattern.size(); ++p)
            pattern_out_.push_back(pattern.out_degree(p));
    }

    std::optional<PatternMatch> run()
    {
        mapping_.clear();
        if (extend(host_.vertices()))
            return PatternMatch{mapping_};
        return std::nullopt;
    }

private:
    bool extend(const VertexSet &unused)
    {
        const auto p = mapping_.size();
        if (p == pattern_.size())
            return true;
        auto candidates = unused;
        for (std::size_t j = 0; j < p; ++j) {
            if (pattern_.arc(j, p))
                candidates &= host_.out(mapping_[j]);
            else
                candidates -= host_.out(mapping_[j]);
        }
        const auto need_out = pattern_out_[p];
        const auto need_in = pattern_.size() - 1 - need_out;
        for (auto h : candidates) {
            if (host_out_[h] < need_out || host_.size() - 1 - host_out_[h] < need_in)
                continue;
            mapping_.push_back(h);
            if (extend(unused - VertexSet::of(host_.size(), {h})))
                return true;
            mapping_.pop_back();
        }
        return false;
    }

    const Tournament &host_;
    const Tournament &pattern_;
    std::vector<std::size_t> host_out_;
    std::vector<std::size_t> pattern_out_;
    std::vector<std::size_t> mapping_;
};

} // namespace

Tournament s_tournament(int i)
{
    if (i <= 0)
        throw std::invalid_argument("S_i is defined for i >= 1");
    if (i > max_s_level)
        throw std::invalid_argument("S_i above i = " + std::to_string(max_s_level) + " is not materialised");
    Tournament t((std::size_t{1} << i) - 1);
    blow_up(t, 0, i);
    return t;
}

Tournament orient_from_graph(const Graph &g)
{
    std::vector<std::size_t> identity(g.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return orient_from_graph(g, identity);
}

Tournament orient_from_graph(const Graph &g, std::span<const std::size_t> ordering)
{
    const auto n = g.size();
    if (ordering.size() != n)
        throw std::invalid_argument("ordering length differs from the graph's vertex count");
    std::vector<bool> seen(n, false);
    for (auto v : ordering) {
        if (v >= n || seen[v])
            throw std::invalid_argument("ordering is not a permutation of the graph's vertices");
        seen[v] = true;
    }
    Tournament t(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (!g.has_edge(ordering[p], ordering[q]))
                t.orient(q, p);
    return t;
}

std::optional<std::size_t> girth(const Graph &g)
{
    constexpr auto unseen = static_cast<std::size_t>(-1);
    std::optional<std::size_t> best;
    const auto n = g.size();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, unseen);
        std::vector<std::size_t> parent(n, unseen);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    auto len = dist[u] + dist[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

GirthGraph random_graph_with_girth(std::size_t n, std::size_t min_girth, std::size_t target_edges, Seed seed)
{
    if (min_girth < 3)
        throw std::invalid_argument("girth bound must be at least 3");
    GirthGraph out{Graph(n), target_edges, 0};
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    SplitMix64 rng(seed);
    rng.shuffle(std::span(pairs));
    for (auto [u, v] : pairs) {
        if (out.edges_added == target_edges)
            break;
        // A new edge uv closes a cycle of length dist(u, v) + 1.
        if (within_distance(out.graph, u, v, min_girth - 2))
            continue;
        out.graph.add_edge(u, v);
        ++out.edges_added;
    }
    return out;
}

Graph petersen_graph()
{
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycles need at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Tournament paley_tournament(std::size_t q)
{
    if (!is_prime(q) || q % 4 != 3)
        throw std::invalid_argument("Paley tournaments need a prime q = 3 mod 4, got " + std::to_string(q));
    std::vector<bool> residue(q, false);
    for (std::size_t x = 1; x < q; ++x)
        residue[(x * x) % q] = true;
    Tournament t(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (i != j && residue[(j + q - i) % q])
                t.orient(i, j);
    return t;
}

std::optional<PatternMatch> contains_pattern(const Tournament &host, const Tournament &pattern)
{
    if (pattern.size() > host.size())
        return std::nullopt;
    return PatternSearch(host, pattern).run();
}

bool verify_pattern_match(const Tournament &host, const Tournament &pattern, const PatternMatch &match)
{
    const auto &m = match.mapping;
    if (m.size() != pattern.size())
        return false;
    std::vector<bool> used(host.size(), false);
    for (auto h : m) {
        if (h >= host.size() || used[h])
            return false;
        used[h] = true;
    }
    for (std::size_t p = 0; p < m.size(); ++p)
        for (std::size_t q = 0; q < m.size(); ++q)
            if (p != q && pattern.arc(p, q) != host.arc(m[p], m[q]))
                return false;
    return true;
}

} // namespace tourcolor
