#include "tourcolor/tournament.hpp"

#include <numeric>
#include <stdexcept>

namespace tourcolor {

Tournament::Tournament(std::size_t n) : out_(n, VertexSet(n))
{
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            out_[u].insert(v);
}

VertexSet Tournament::in(std::size_t v) const
{
    VertexSet s(size());
    for (std::size_t u = 0; u < size(); ++u)
        if (out_[u].contains(v))
            s.insert(u);
    return s;
}

void Tournament::orient(std::size_t from, std::size_t to)
{
    if (from == to)
        throw std::invalid_argument("tournaments have no loops");
    out_.at(from).insert(to);
    out_.at(to).erase(from);
}

void Tournament::reverse(std::size_t u, std::size_t v)
{
    if (arc(u, v))
        orient(v, u);
    else
        orient(u, v);
}

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto &row : adj_)
        twice += row.count();
    return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        throw std::invalid_argument("graphs have no loops");
    adj_.at(u).insert(v);
    adj_.at(v).insert(u);
}

void Graph::remove_edge(std::size_t u, std::size_t v)
{
    adj_.at(u).erase(v);
    adj_.at(v).erase(u);
}

namespace {

void check_host(const Tournament &t, const VertexSet &x)
{
    if (x.universe() != t.size())
        throw std::out_of_range("vertex set is not over this tournament's vertices");
}

} // namespace

Tournament induce(const Tournament &t, const VertexSet &x)
{
    check_host(t, x);
    auto members = x.to_vector();
    Tournament sub(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!t.arc(members[i], members[j]))
                sub.orient(j, i);
    return sub;
}

VertexSet out_neighbors(const Tournament &t, const VertexSet &x)
{
    check_host(t, x);
    VertexSet result(t.size());
    for (auto v : x)
        result |= t.out(v);
    return result;
}

VertexSet closed_out_neighbors(const Tournament &t, const VertexSet &x)
{
    return out_neighbors(t, x) | x;
}

bool is_transitive(const Tournament &t)
{
    return is_transitive(t, t.vertices());
}

bool is_transitive(const Tournament &t, const VertexSet &x)
{
    check_host(t, x);
    const auto m = x.count();
    std::vector<bool> seen(m, false);
    for (auto v : x) {
        auto d = (t.out(v) & x).count();
        if (seen[d])
            return false;
        seen[d] = true;
    }
    return true;
}

std::optional<std::array<std::size_t, 3>> find_directed_triangle(const Tournament &t, const VertexSet &x)
{
    check_host(t, x);
    // For a < b with a->b, any c > a in X with b->c->a closes a triangle.
    for (auto a : x) {
        const auto into_a = t.in(a) & x;
        for (auto b : t.out(a) & x) {
            if (b < a)
                continue;
            auto closing = t.out(b) & into_a;
            for (auto c = closing.next(a + 1); c != VertexSet::npos; c = closing.next(c + 1))
                return std::array<std::size_t, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

bool has_directed_cycle(const Tournament &t)
{
    enum class Mark { White, Grey, Black };
    const auto n = t.size();
    std::vector<Mark> mark(n, Mark::White);
    // Iterative DFS; stack holds (vertex, next successor to try).
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] != Mark::White)
            continue;
        stack.emplace_back(root, 0);
        mark[root] = Mark::Grey;
        while (!stack.empty()) {
            auto &[v, from] = stack.back();
            auto w = t.out(v).next(from);
            if (w == VertexSet::npos) {
                mark[v] = Mark::Black;
                stack.pop_back();
                continue;
            }
            from = w + 1;
            if (mark[w] == Mark::Grey)
                return true;
            if (mark[w] == Mark::White) {
                mark[w] = Mark::Grey;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

Tournament random_tournament(std::size_t n, Seed seed)
{
    SplitMix64 rng(seed);
    Tournament t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!rng.bit())
                t.orient(j, i);
    return t;
}

Tournament random_transitive_tournament(std::size_t n, Seed seed)
{
    SplitMix64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    Tournament t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            t.orient(order[i], order[j]);
    return t;
}

} // namespace tourcolor
