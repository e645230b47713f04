#include "tourcolor/domination.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "tourcolor/errors.hpp"
#include "transitive_masks.hpp"

namespace tourcolor {

namespace {

using detail::Mask;
using detail::bit;

void check_host(const Tournament &t, const VertexSet &x)
{
    if (x.universe() != t.size())
        throw std::out_of_range("vertex set is not over this tournament's vertices");
}

struct Column {
    std::size_t vertex;
    Mask covers;
};

int pop(Mask m) { return std::popcount(m); }

class CoverSearch {
public:
    CoverSearch(std::vector<Column> columns, std::vector<std::size_t> incumbent)
        : columns_(std::move(columns)), best_(std::move(incumbent))
    {
    }

    std::vector<std::size_t> solve(Mask universe)
    {
        std::vector<std::size_t> chosen;
        dfs(universe, chosen);
        return best_;
    }

private:
    void dfs(Mask uncovered, std::vector<std::size_t> &chosen)
    {
        if (uncovered == 0) {
            if (chosen.size() < best_.size())
                best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size())
            return;
        int widest = 0;
        for (const auto &c : columns_)
            widest = std::max(widest, pop(c.covers & uncovered));
        const auto lower = static_cast<std::size_t>((pop(uncovered) + widest - 1) / widest);
        if (chosen.size() + lower >= best_.size())
            return;

        // Branch on the uncovered element with the fewest covering columns.
        unsigned element = 0;
        int fewest = -1;
        for (Mask r = uncovered; r != 0; r &= r - 1) {
            const auto e = static_cast<unsigned>(std::countr_zero(r));
            int n = 0;
            for (const auto &c : columns_)
                n += (c.covers >> e) & 1U;
            if (fewest < 0 || n < fewest) {
                fewest = n;
                element = e;
            }
        }
        std::vector<const Column *> options;
        for (const auto &c : columns_)
            if ((c.covers >> element) & 1U)
                options.push_back(&c);
        std::stable_sort(options.begin(), options.end(), [&](const Column *a, const Column *b) {
            return pop(a->covers & uncovered) > pop(b->covers & uncovered);
        });
        for (const auto *c : options) {
            chosen.push_back(c->vertex);
            dfs(uncovered & ~c->covers, chosen);
            chosen.pop_back();
        }
    }

    std::vector<Column> columns_;
    std::vector<std::size_t> best_;
};

} // namespace

DominationOptions DominationOptions::from_environment()
{
    DominationOptions o;
    if (const char *env = std::getenv("TOURCOLOR_EXACT_LIMIT")) {
        std::string_view s(env);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size())
            o.exact_limit = v;
    }
    return o;
}

bool verify_domination(const Tournament &t, const VertexSet &x, const VertexSet &r)
{
    check_host(t, x);
    check_host(t, r);
    return (x - closed_out_neighbors(t, r)).empty();
}

std::size_t halving_bound(std::size_t m)
{
    std::size_t h = 0;
    while ((std::size_t{1} << h) < m + 1)
        ++h;
    return h;
}

DominationWitness greedy_dominating_set(const Tournament &t, const VertexSet &x)
{
    check_host(t, x);
    DominationWitness w{VertexSet(t.size()), x};
    auto undominated = x;
    while (!undominated.empty()) {
        std::size_t pick = 0;
        std::size_t most = 0;
        for (std::size_t r = 0; r < t.size(); ++r) {
            auto covered = (t.out(r) & undominated).count() + (undominated.contains(r) ? 1 : 0);
            if (covered > most) {
                most = covered;
                pick = r;
            }
        }
        w.dominators.insert(pick);
        undominated -= t.out(pick);
        undominated.erase(pick);
    }
    return w;
}

DominationResult domination_number_exact(const Tournament &t, const DominationOptions &options)
{
    return domination_number_exact(t, t.vertices(), options);
}

DominationResult domination_number_exact(const Tournament &t, const VertexSet &x, const DominationOptions &options)
{
    check_host(t, x);
    DominationResult result{0, {VertexSet(t.size()), x}};
    if (x.empty())
        return result;
    if (t.size() > options.exact_limit || x.count() > 64)
        throw InfeasibleError("exact domination number: instance exceeds the exact limit");

    const auto members = x.to_vector();
    std::vector<Column> columns;
    for (std::size_t r = 0; r < t.size(); ++r) {
        Mask covers = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i] == r || t.arc(r, members[i]))
                covers |= bit(static_cast<unsigned>(i));
        if (covers != 0)
            columns.push_back({r, covers});
    }
    // Drop columns covered by another column (ties keep the lower vertex).
    std::vector<Column> kept;
    for (const auto &c : columns) {
        bool dominated = std::any_of(columns.begin(), columns.end(), [&](const Column &o) {
            if (o.vertex == c.vertex || (c.covers & ~o.covers) != 0)
                return false;
            return o.covers != c.covers || o.vertex < c.vertex;
        });
        if (!dominated)
            kept.push_back(c);
    }

    auto greedy = greedy_dominating_set(t, x).dominators.to_vector();
    const Mask universe = members.size() == 64 ? ~Mask{0} : bit(static_cast<unsigned>(members.size())) - 1;
    auto best = CoverSearch(std::move(kept), std::move(greedy)).solve(universe);
    result.gamma = best.size();
    for (auto r : best)
        result.witness.dominators.insert(r);
    return result;
}

Verdict gamma_at_least(const Tournament &t, const VertexSet &x, std::size_t k, const DominationOptions &options)
{
    check_host(t, x);
    if (k == 0)
        return Verdict::Yes;
    if (x.empty())
        return Verdict::No;
    if (k == 1)
        return Verdict::Yes;
    if (k == 2) {
        for (std::size_t r = 0; r < t.size(); ++r) {
            auto left = x - t.out(r);
            left.erase(r);
            if (left.empty())
                return Verdict::No;
        }
        return Verdict::Yes;
    }
    if (t.size() <= options.exact_limit && x.count() <= 64)
        return domination_number_exact(t, x, options).gamma >= k ? Verdict::Yes : Verdict::No;
    if (greedy_dominating_set(t, x).dominators.count() < k)
        return Verdict::No;
    return Verdict::Unknown;
}

Verdict gamma_at_least_within(const Tournament &t, const VertexSet &scope, const VertexSet &x, std::size_t k,
                              const DominationOptions &options)
{
    check_host(t, scope);
    check_host(t, x);
    if (!x.is_subset_of(scope))
        throw std::invalid_argument("dominated set must lie inside the scope");
    if (k <= 1 || x.empty())
        return x.empty() && k >= 1 ? Verdict::No : Verdict::Yes;
    if (k == 2) {
        for (auto r : scope) {
            auto left = x - t.out(r);
            left.erase(r);
            if (left.empty())
                return Verdict::No;
        }
        return Verdict::Yes;
    }
    if (scope.count() > options.exact_limit) {
        // Greedy with dominators drawn from the scope only; a small enough
        // cover refutes the claim.
        auto left = x;
        std::size_t used = 0;
        while (!left.empty() && used < k) {
            std::size_t best = 0, pick = 0;
            for (auto r : scope) {
                auto hit = (t.out(r) & left).count() + (left.contains(r) ? 1 : 0);
                if (hit > best) {
                    best = hit;
                    pick = r;
                }
            }
            left -= t.out(pick);
            left.erase(pick);
            ++used;
        }
        return left.empty() && used < k ? Verdict::No : Verdict::Unknown;
    }
    const auto members = scope.to_vector();
    VertexSet local(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        if (x.contains(members[i]))
            local.insert(i);
    return gamma_at_least(induce(t, scope), local, k, options);
}

bool check_inequality_1(const Tournament &t, const VertexSet &x, const DominationOptions &options)
{
    return domination_number_exact(t, closed_out_neighbors(t, x), options).gamma <= x.count();
}

bool check_inequality_2(const Tournament &t, const VertexSet &x, const VertexSet &y, const DominationOptions &options)
{
    const auto lhs = domination_number_exact(t, y, options).gamma;
    const auto rhs = domination_number_exact(t, x, options).gamma + domination_number_exact(t, y - x, options).gamma;
    return lhs <= rhs;
}

} // namespace tourcolor
