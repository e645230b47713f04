#include "tourcolor/chromatic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "tourcolor/errors.hpp"
#include "transitive_masks.hpp"

namespace tourcolor {

namespace {

using detail::Mask;
using detail::bit;

constexpr std::size_t dense_hard_cap = 28;

/// Decides whether a vertex set (local indices, m <= 64) can be partitioned
/// into `budget` transitive sets. Branching always covers the lowest
/// uncovered vertex with a transitive set that is maximal inside the
/// uncovered remainder; any optimal partition can be rearranged into that
/// form because subsets of transitive sets are transitive. Failures are
/// memoised as "U needs more than b sets", which is monotone in b.
class TransitiveCover {
public:
    TransitiveCover(std::vector<Mask> out, bool dense, unsigned threads)
        : masks_(std::move(out)), dense_(dense), threads_(std::max(1U, threads))
    {
        if (dense_) {
            const std::size_t states = std::size_t{1} << masks_.size();
            table_.assign((states + 63) / 64, 0);
            table_[0] = 1;
            for (Mask s = 1; s < states; ++s) {
                const auto v = static_cast<unsigned>(63 - std::countl_zero(s));
                const Mask rest = s & ~bit(v);
                if (table_bit(rest) && masks_.extends(rest, v))
                    table_[s / 64] |= bit(static_cast<unsigned>(s % 64));
            }
            dense_memo_ = std::make_unique<std::atomic<std::uint8_t>[]>(states);
            for (std::size_t i = 0; i < states; ++i)
                dense_memo_[i].store(0, std::memory_order_relaxed);
        }
    }

    std::size_t size() const { return masks_.size(); }

    bool transitive(Mask s) const { return dense_ ? table_bit(s) : masks_.transitive(s); }

    /// S u {v} transitive, given S transitive.
    bool extends(Mask s, unsigned v) const { return dense_ ? table_bit(s | bit(v)) : masks_.extends(s, v); }

    std::size_t alpha()
    {
        if (alpha_)
            return *alpha_;
        if (dense_) {
            std::size_t best = 0;
            const std::size_t states = std::size_t{1} << masks_.size();
            for (Mask s = 0; s < states; ++s)
                if (table_bit(s))
                    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
            alpha_ = best;
        } else {
            alpha_ = masks_.max_transitive_size();
        }
        return *alpha_;
    }

    /// Transitive subsets of `within` that contain v and are maximal inside
    /// `within`, in include-first depth-first order.
    std::vector<Mask> maximal_sets(Mask within, unsigned v) const
    {
        std::vector<unsigned> others;
        for (Mask r = within & ~bit(v); r != 0; r &= r - 1)
            others.push_back(static_cast<unsigned>(std::countr_zero(r)));
        std::vector<Mask> found;
        enumerate(within, others, 0, bit(v), found);
        return found;
    }

    std::optional<std::vector<Mask>> cover(Mask universe, std::size_t budget)
    {
        std::vector<Mask> classes;
        if (universe == 0)
            return classes;
        if (budget == 0)
            return std::nullopt;
        if (transitive(universe))
            return std::vector<Mask>{universe};
        if (budget == 1 || static_cast<std::size_t>(std::popcount(universe)) > budget * alpha())
            return std::nullopt;

        const auto v = static_cast<unsigned>(std::countr_zero(universe));
        const auto branches = maximal_sets(universe, v);

        if (threads_ == 1 || branches.size() < 2) {
            for (auto m : branches) {
                if (search(universe & ~m, budget - 1, classes)) {
                    classes.push_back(m);
                    return classes;
                }
            }
            return std::nullopt;
        }

        // Threads claim branches in order; the lowest successful index wins so
        // the witness does not depend on scheduling.
        constexpr auto none = static_cast<std::size_t>(-1);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{none};
        std::vector<std::vector<Mask>> found(branches.size());
        auto worker = [&] {
            while (true) {
                const auto idx = next.fetch_add(1);
                if (idx >= branches.size() || idx > best.load())
                    return;
                std::vector<Mask> local;
                if (!search(universe & ~branches[idx], budget - 1, local))
                    continue;
                local.push_back(branches[idx]);
                found[idx] = std::move(local);
                auto cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned i = 0; i < threads_; ++i)
                pool.emplace_back(worker);
        }
        if (best.load() == none)
            return std::nullopt;
        return found[best.load()];
    }

    /// Lexicographically least colour vector among colourings with k classes.
    std::vector<Mask> canonical(std::size_t k)
    {
        std::vector<Mask> classes;
        const auto m = static_cast<unsigned>(masks_.size());
        if (!assign_canonical(0, m, k, classes))
            throw Error("internal: no colouring with the proven optimum");
        return classes;
    }

private:
    bool table_bit(Mask s) const { return (table_[s / 64] >> (s % 64)) & 1U; }

    void enumerate(Mask within, const std::vector<unsigned> &others, std::size_t i, Mask cur,
                   std::vector<Mask> &found) const
    {
        if (i == others.size()) {
            for (Mask r = within & ~cur; r != 0; r &= r - 1)
                if (extends(cur, static_cast<unsigned>(std::countr_zero(r))))
                    return;
            found.push_back(cur);
            return;
        }
        const auto u = others[i];
        if (extends(cur, u))
            enumerate(within, others, i + 1, cur | bit(u), found);
        enumerate(within, others, i + 1, cur, found);
    }

    std::uint8_t failed_budget(Mask u)
    {
        if (dense_)
            return dense_memo_[u].load(std::memory_order_relaxed);
        std::lock_guard lock(memo_mutex_);
        auto it = sparse_memo_.find(u);
        return it == sparse_memo_.end() ? 0 : it->second;
    }

    void record_failure(Mask u, std::size_t budget)
    {
        const auto b = static_cast<std::uint8_t>(budget);
        if (dense_) {
            auto &slot = dense_memo_[u];
            auto cur = slot.load(std::memory_order_relaxed);
            while (cur < b && !slot.compare_exchange_weak(cur, b, std::memory_order_relaxed)) {
            }
            return;
        }
        std::lock_guard lock(memo_mutex_);
        auto &slot = sparse_memo_[u];
        slot = std::max(slot, b);
    }

    bool search(Mask u, std::size_t budget, std::vector<Mask> &classes)
    {
        if (u == 0)
            return true;
        if (budget == 0)
            return false;
        if (transitive(u)) {
            classes.push_back(u);
            return true;
        }
        if (budget == 1 || failed_budget(u) >= budget)
            return false;
        if (static_cast<std::size_t>(std::popcount(u)) > budget * alpha()) {
            record_failure(u, budget);
            return false;
        }
        const auto v = static_cast<unsigned>(std::countr_zero(u));
        for (auto m : maximal_sets(u, v)) {
            if (search(u & ~m, budget - 1, classes)) {
                classes.push_back(m);
                return true;
            }
        }
        record_failure(u, budget);
        return false;
    }

    bool assign_canonical(unsigned i, unsigned m, std::size_t k, std::vector<Mask> &classes)
    {
        if (i == m)
            return true;
        // Vertices that fit no open class must be covered by the unopened ones.
        Mask forced = 0;
        for (unsigned u = i; u < m; ++u) {
            bool fits = false;
            for (auto c : classes)
                if (transitive(c | bit(u))) {
                    fits = true;
                    break;
                }
            if (!fits)
                forced |= bit(u);
        }
        if (forced != 0) {
            std::vector<Mask> scratch;
            if (classes.size() >= k || !search(forced, k - classes.size(), scratch))
                return false;
        }
        // Indexed: deeper levels push_back into `classes`.
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (!transitive(classes[c] | bit(i)))
                continue;
            classes[c] |= bit(i);
            if (assign_canonical(i + 1, m, k, classes))
                return true;
            classes[c] &= ~bit(i);
        }
        if (classes.size() < k) {
            classes.push_back(bit(i));
            if (assign_canonical(i + 1, m, k, classes))
                return true;
            classes.pop_back();
        }
        return false;
    }

    detail::LocalMasks masks_;
    bool dense_;
    unsigned threads_;
    std::optional<std::size_t> alpha_;
    std::vector<std::uint64_t> table_;
    std::unique_ptr<std::atomic<std::uint8_t>[]> dense_memo_;
    std::mutex memo_mutex_;
    std::unordered_map<Mask, std::uint8_t> sparse_memo_;
};

bool extends_set(const Tournament &t, const VertexSet &s, std::size_t v)
{
    // s transitive; adding v creates a cycle iff some x with v->x beats some
    // y with y->v.
    const auto beaten = t.out(v) & s;
    const auto beating = s - beaten;
    for (auto x : beaten)
        if (t.out(x).intersects(beating))
            return false;
    return true;
}

std::vector<VertexSet> to_sets(const std::vector<Mask> &masks, const std::vector<std::size_t> &members,
                               std::size_t universe)
{
    std::vector<VertexSet> out;
    for (auto m : masks) {
        VertexSet s(universe);
        for (Mask r = m; r != 0; r &= r - 1)
            s.insert(members[static_cast<std::size_t>(std::countr_zero(r))]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) { return a.lowest() < b.lowest(); });
    return out;
}

} // namespace

ChromaticOptions ChromaticOptions::from_environment()
{
    ChromaticOptions o;
    if (const char *env = std::getenv("TOURCOLOR_EXACT_LIMIT")) {
        std::string_view s(env);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size())
            o.exact_limit = v;
    }
    return o;
}

bool verify_coloring(const Tournament &t, const VertexSet &target, const Coloring &c)
{
    VertexSet seen(t.size());
    bool disjoint = true;
    for (const auto &cls : c.classes) {
        if (cls.universe() != t.size() || !cls.is_subset_of(target))
            throw ColoringOutOfScope("colour class contains vertices outside the coloured set");
        if (seen.intersects(cls))
            disjoint = false;
        seen |= cls;
    }
    if (!disjoint || seen != target)
        return false;
    return std::all_of(c.classes.begin(), c.classes.end(),
                       [&](const VertexSet &cls) { return is_transitive(t, cls); });
}

Coloring greedy_coloring(const Tournament &t, const VertexSet &scope)
{
    Coloring c;
    auto remaining = scope;
    while (!remaining.empty()) {
        VertexSet cls(t.size());
        for (auto v : remaining)
            if (extends_set(t, cls, v))
                cls.insert(v);
        remaining -= cls;
        c.classes.push_back(std::move(cls));
    }
    return c;
}

ChromaticResult dichromatic_number_exact(const Tournament &t, const ChromaticOptions &options)
{
    return dichromatic_number_exact(t, t.vertices(), options);
}

ChromaticResult dichromatic_number_exact(const Tournament &t, const VertexSet &scope, const ChromaticOptions &options)
{
    if (scope.universe() != t.size())
        throw std::out_of_range("scope is not over this tournament's vertices");
    const auto m = scope.count();
    ChromaticResult result;
    if (m == 0)
        return result;
    if (m > std::min<std::size_t>(options.exact_limit, 64))
        throw InfeasibleError("exact dichromatic number: scope of " + std::to_string(m) +
                              " vertices exceeds the exact limit");
    const bool dense = m <= std::min(options.dp_threshold, dense_hard_cap);
    if (options.canonical && !dense)
        throw InfeasibleError("canonical witnesses are only produced on the dense path");

    const auto members = scope.to_vector();
    TransitiveCover engine(detail::local_out_masks(t, members), dense, options.threads);
    result.dense_path = dense;

    const auto greedy = greedy_coloring(t, scope);
    const auto upper = greedy.size();
    const auto lower = (m + engine.alpha() - 1) / engine.alpha();
    const Mask universe = m == 64 ? ~Mask{0} : bit(static_cast<unsigned>(m)) - 1;

    result.k = upper;
    result.witness = greedy;
    for (auto b = lower; b < upper; ++b) {
        if (auto classes = engine.cover(universe, b)) {
            result.k = b;
            result.witness.classes = to_sets(*classes, members, t.size());
            break;
        }
    }
    if (options.canonical)
        result.witness.classes = to_sets(engine.canonical(result.k), members, t.size());
    else
        std::sort(result.witness.classes.begin(), result.witness.classes.end(),
                  [](const VertexSet &a, const VertexSet &b) { return a.lowest() < b.lowest(); });
    return result;
}

std::size_t max_transitive_subset_size(const Tournament &t, const VertexSet &scope)
{
    const auto members = scope.to_vector();
    if (members.size() > 64)
        throw InfeasibleError("largest transitive subset: scope exceeds 64 vertices");
    return detail::LocalMasks(detail::local_out_masks(t, members)).max_transitive_size();
}

ChromaticBounds dichromatic_bounds(const Tournament &t, const VertexSet &scope)
{
    ChromaticBounds b;
    b.upper_witness = greedy_coloring(t, scope);
    b.upper = b.upper_witness.size();
    const auto m = scope.count();
    if (m == 0)
        return b;
    b.lower = find_directed_triangle(t, scope) ? 2 : 1;
    if (m <= 64) {
        const auto alpha = max_transitive_subset_size(t, scope);
        b.lower = std::max(b.lower, (m + alpha - 1) / alpha);
    }
    return b;
}

} // namespace tourcolor
