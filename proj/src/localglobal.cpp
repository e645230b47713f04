#include "tourcolor/localglobal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "tourcolor/errors.hpp"

namespace tourcolor {

namespace {

// Binomials with a lower argument beyond this are not materialised.
constexpr std::size_t max_binomial_lower = 1'000'000;
// Levels with more S-subsets than this are refused.
constexpr std::size_t max_branch_count = 10'000'000;

BigInt binomial(const BigInt &n, std::size_t r)
{
    BigInt result = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

std::size_t need_size(const BigInt &v, const char *what)
{
    auto s = to_size(v);
    if (!s)
        throw ConstantsTooLarge(std::string(what) + " does not fit in machine range");
    return *s;
}

/// Maps a set over T[scope]'s labels back to T's labels.
VertexSet lift(const VertexSet &local, const std::vector<std::size_t> &members, std::size_t universe)
{
    VertexSet out(universe);
    for (auto i : local)
        out.insert(members[i]);
    return out;
}

VertexSet dominating_set_in(const Tournament &t, const VertexSet &scope, const ExtractionOptions &options)
{
    const auto members = scope.to_vector();
    const auto sub = induce(t, scope);
    if (options.permissive)
        return lift(greedy_dominating_set(sub, sub.vertices()).dominators, members, t.size());
    if (scope.count() > options.solvers.domination.exact_limit)
        throw ExactDominationInfeasible("a minimum dominating set of " + std::to_string(scope.count()) +
                                        " vertices is beyond the exact solver");
    return lift(domination_number_exact(sub, options.solvers.domination).witness.dominators, members, t.size());
}

ExtractionTrace extract_level(const Tournament &t, const VertexSet &scope, unsigned k, const ExtractionOptions &options)
{
    ExtractionTrace level;
    level.k = k;
    level.scope = scope;
    level.dominating = VertexSet(t.size());
    level.w = VertexSet(t.size());
    level.result = VertexSet(t.size());

    if (k == 1) {
        if (scope.empty())
            throw GammaTooSmall(0, 1);
        level.gamma_claim = 1;
        level.result.insert(scope.lowest());
        return level;
    }
    if (k == 2) {
        if (gamma_at_least_within(t, scope, scope, 2, options.solvers.domination) != Verdict::Yes)
            throw GammaTooSmall(scope.empty() ? 0 : 1, 2);
        // gamma >= 2 means no vertex beats the rest, so T[scope] is not
        // transitive and has a directed triangle.
        auto tri = find_directed_triangle(t, scope);
        if (!tri)
            throw Error("internal: non-transitive scope without a directed triangle");
        level.gamma_claim = 2;
        for (auto v : *tri)
            level.result.insert(v);
        return level;
    }

    const auto child = theorem_constants(k - 1);
    const auto required = need_size(theorem_constants(k).K, "K");
    const auto w_size = need_size(child.w_size(), "|W|");
    const auto s_size = need_size(child.s_size(), "|S|");
    const auto branch_gamma = need_size(child.K + child.l, "K + l");

    level.dominating = dominating_set_in(t, scope, options);
    level.gamma_claim = level.dominating.count();
    if (level.gamma_claim < required)
        throw GammaTooSmall(level.gamma_claim, required);
    if (binomial(BigInt(w_size), s_size) > max_branch_count)
        throw ConstantsTooLarge("too many subsets S of W to enumerate");

    level.w = select_w(level.dominating, w_size);
    level.base = extract_level(t, base_scope(t, scope, level.w), k - 1, options);
    const auto &a = level.base->result;

    for (auto &s : w_subsets(level.w, s_size)) {
        ExtractionBranch branch;
        branch.s = s;
        branch.gamma_claim = branch_gamma;
        if (options.permissive) {
            const auto out_s = out_neighbors(t, s) & scope;
            if (gamma_at_least_within(t, scope, out_s, branch_gamma, options.solvers.domination) == Verdict::No) {
                branch.aborted = true;
                level.branches.push_back(std::move(branch));
                continue;
            }
            try {
                branch.sub = extract_level(t, branch_scope(t, scope, s, a), k - 1, options);
            } catch (const GammaTooSmall &) {
                branch.aborted = true;
            }
        } else {
            branch.sub = extract_level(t, branch_scope(t, scope, s, a), k - 1, options);
        }
        level.branches.push_back(std::move(branch));
    }
    level.result = assemble(level);
    return level;
}

class Validator {
public:
    Validator(const Tournament &t, const ExtractionOptions &options, TraceValidation &report)
        : t_(t), options_(options), report_(report)
    {
    }

    void level(const ExtractionTrace &tr, unsigned k, const VertexSet &expected_scope, const std::string &where)
    {
        check_shape(tr, k, where);
        if (tr.scope != expected_scope)
            fail(ViolationKind::Scope, where, "recorded scope differs from the one the parent level induces");
        const auto &scope = expected_scope;
        if (!tr.result.is_subset_of(scope))
            fail(ViolationKind::Scope, where, "result leaves the scope");

        if (k == 1) {
            if (tr.result.count() != 1)
                fail(ViolationKind::SizeResult, where, "level 1 must return one vertex");
            return;
        }
        check_gamma_claim(tr, k, scope, where);
        if (k == 2) {
            if (tr.result.count() != 3 || is_transitive(t_, tr.result))
                fail(ViolationKind::NotTriangle, where, "level 2 must return a directed triangle");
            return;
        }

        const auto child = theorem_constants(k - 1);
        const auto w_size = need_size(child.w_size(), "|W|");
        const auto s_size = need_size(child.s_size(), "|S|");
        const auto l = need_size(child.l, "l");
        const auto branch_gamma = need_size(child.K + child.l, "K + l");

        // D dominates T[scope].
        if (!tr.dominating.is_subset_of(scope) || !(scope - closed_out_neighbors(t_, tr.dominating)).empty())
            fail(ViolationKind::DominatingSet, where, "D does not dominate the scope from inside it");
        if (tr.dominating.count() != tr.gamma_claim)
            fail(ViolationKind::GammaClaim, where, "claimed gamma differs from |D|");
        if (!tr.w.is_subset_of(tr.dominating))
            fail(ViolationKind::WNotInD, where, "W is not a subset of D");
        if (tr.w.count() != w_size)
            fail(ViolationKind::SizeW, where,
                 "|W| = " + std::to_string(tr.w.count()) + ", expected " + std::to_string(w_size));

        // A: inside scope \ N+[W], with every arc between A and W going A -> W.
        const auto base_expected = base_scope(t_, scope, tr.w);
        level(*tr.base, k - 1, base_expected, where + "/A");
        const auto &a = tr.base->result;
        if (a.count() != l)
            fail(ViolationKind::SizeA, where, "|A| = " + std::to_string(a.count()) + ", expected " + std::to_string(l));
        if (!a.is_subset_of(base_expected))
            fail(ViolationKind::ANotInBase, where, "A meets N+[W]");
        for (auto u : a)
            for (auto v : tr.w)
                if (u != v && !t_.arc(u, v)) {
                    fail(ViolationKind::ArcAToW, where,
                         "arc " + std::to_string(v) + "->" + std::to_string(u) + " runs from W to A");
                }

        check_family(tr, s_size, where);
        const auto out_a = out_neighbors(t_, a) & scope;
        for (std::size_t i = 0; i < tr.branches.size(); ++i) {
            const auto &br = tr.branches[i];
            const auto here = where + "/S#" + std::to_string(i);
            if (br.aborted) {
                fail(ViolationKind::Aborted, here, "branch was aborted; A' is not certified");
                continue;
            }
            const auto out_s = out_neighbors(t_, br.s) & scope;
            if (br.gamma_claim < branch_gamma)
                fail(ViolationKind::BranchGamma, here, "claim is below K + l");
            switch (gamma_at_least_within(t_, scope, out_s, br.gamma_claim, options_.solvers.domination)) {
            case Verdict::No:
                fail(ViolationKind::BranchGamma, here, "gamma(N+(S)) is below the claimed bound");
                break;
            case Verdict::Unknown:
                report_.unverifiable.push_back(here + ": gamma(N+(S)) >= " + std::to_string(br.gamma_claim));
                break;
            case Verdict::Yes:
                break;
            }
            level(*br.sub, k - 1, branch_scope(t_, scope, br.s, a), here + "/A_S");
            const auto &as = br.sub->result;
            if (as.count() != l)
                fail(ViolationKind::SizeAS, here, "|A_S| = " + std::to_string(as.count()));
            if (!as.is_subset_of(out_s))
                fail(ViolationKind::ASOutsideOutS, here, "A_S is not inside N+(S)");
            if (as.intersects(out_a))
                fail(ViolationKind::ASIntersectsOutA, here, "A_S meets N+(A)");
            for (auto w : as)
                for (auto u : a)
                    if (w != u && !t_.arc(w, u))
                        fail(ViolationKind::ArcASToA, here,
                             "arc " + std::to_string(u) + "->" + std::to_string(w) + " runs from A to A_S");
        }

        if (tr.result != assemble(tr))
            fail(ViolationKind::Assembly, where, "A' differs from A u W u (union of A_S)");
        if (auto bound = to_size(theorem_constants(k).l); bound && tr.result.count() > *bound)
            fail(ViolationKind::SizeAPrime, where, "|A'| exceeds l");
        check_chromatic(tr, k, where);
    }

private:
    void fail(ViolationKind kind, const std::string &where, std::string detail)
    {
        report_.violations.push_back({kind, where, std::move(detail)});
    }

    void check_shape(const ExtractionTrace &tr, unsigned k, const std::string &where) const
    {
        auto bad = [&](const std::string &why) { throw MalformedTrace(where + ": " + why); };
        if (tr.k != k)
            bad("level " + std::to_string(tr.k) + " where " + std::to_string(k) + " was expected");
        const auto n = t_.size();
        if (tr.scope.universe() != n || tr.result.universe() != n)
            bad("vertex sets are not over the host tournament");
        if (k >= 3) {
            if (tr.dominating.universe() != n || tr.w.universe() != n)
                bad("D or W is not over the host tournament");
            if (!tr.base)
                bad("missing sub-trace for A");
            for (const auto &br : tr.branches) {
                if (br.s.universe() != n)
                    bad("branch set is not over the host tournament");
                if (!br.aborted && !br.sub)
                    bad("branch without a sub-trace");
            }
        }
    }

    void check_gamma_claim(const ExtractionTrace &tr, unsigned k, const VertexSet &scope, const std::string &where)
    {
        const auto required = to_size(theorem_constants(k).K);
        if (required && tr.gamma_claim < *required)
            fail(ViolationKind::GammaClaim, where, "claimed gamma is below K for this level");
        const auto &dom = options_.solvers.domination;
        if (k >= 3 && scope.count() <= dom.exact_limit) {
            // Minimality of D is part of the argument: the claim must be exact.
            auto g = domination_number_exact(induce(t_, scope), dom).gamma;
            if (g != tr.gamma_claim)
                fail(ViolationKind::GammaClaim, where,
                     "claimed gamma " + std::to_string(tr.gamma_claim) + ", actual " + std::to_string(g));
            return;
        }
        switch (gamma_at_least_within(t_, scope, scope, tr.gamma_claim, dom)) {
        case Verdict::No:
            fail(ViolationKind::GammaClaim, where, "gamma of the scope is below the claim");
            break;
        case Verdict::Unknown:
            report_.unverifiable.push_back(where + ": gamma >= " + std::to_string(tr.gamma_claim));
            break;
        case Verdict::Yes:
            break;
        }
    }

    void check_family(const ExtractionTrace &tr, std::size_t s_size, const std::string &where)
    {
        std::set<std::vector<std::size_t>> seen;
        bool ok = true;
        for (const auto &br : tr.branches) {
            if (br.s.count() != s_size || !br.s.is_subset_of(tr.w))
                ok = false;
            if (!seen.insert(br.s.to_vector()).second)
                ok = false;
        }
        if (BigInt(seen.size()) != binomial(BigInt(tr.w.count()), s_size))
            ok = false;
        if (!ok)
            fail(ViolationKind::BranchFamily, where, "branches are not exactly the subsets of W of size K + l + 1");
    }

    void check_chromatic(const ExtractionTrace &tr, unsigned k, const std::string &where)
    {
        const auto &opts = options_.solvers.chromatic;
        if (tr.result.count() > std::min<std::size_t>(opts.exact_limit, 64)) {
            report_.unverifiable.push_back(where + ": chi(A') >= " + std::to_string(k) +
                                           " rests on the trace (A' beyond the exact solver)");
            return;
        }
        if (dichromatic_number_exact(t_, tr.result, opts).k < k)
            fail(ViolationKind::Chromatic, where, "chi(A') is below k");
    }

    const Tournament &t_;
    const ExtractionOptions &options_;
    TraceValidation &report_;
};

std::optional<std::array<std::size_t, 3>> refute(const Tournament &t, const ExtractionTrace &tr,
                                                 const std::vector<long> &colour)
{
    std::set<long> used;
    for (auto v : tr.result) {
        if (colour[v] < 0)
            return std::nullopt;
        used.insert(colour[v]);
    }
    if (used.size() >= tr.k)
        return std::nullopt;
    if (tr.k == 2) {
        return find_directed_triangle(t, tr.result);
    }
    if (tr.k < 2 || !tr.base)
        return std::nullopt;

    const auto child = theorem_constants(tr.k - 1);
    const auto s_size = need_size(child.s_size(), "|S|");
    // Pigeonhole: fewer than k colours on W of size (k-1)(K+l+1).
    std::map<long, std::vector<std::size_t>> by_colour;
    for (auto v : tr.w)
        by_colour[colour[v]].push_back(v);
    const std::vector<std::size_t> *big = nullptr;
    long col = 0;
    for (const auto &[c, vs] : by_colour)
        if (vs.size() >= s_size) {
            big = &vs;
            col = c;
            break;
        }
    if (!big)
        return std::nullopt;
    VertexSet s(t.size());
    for (std::size_t i = 0; i < s_size; ++i)
        s.insert((*big)[i]);

    const auto &a = tr.base->result;
    std::optional<std::size_t> u;
    for (auto x : a)
        if (colour[x] == col) {
            u = x;
            break;
        }
    if (!u)
        return refute(t, *tr.base, colour);

    auto br = std::find_if(tr.branches.begin(), tr.branches.end(),
                           [&](const ExtractionBranch &b) { return b.s == s && !b.aborted && b.sub; });
    if (br == tr.branches.end())
        return std::nullopt;
    std::optional<std::size_t> w;
    for (auto x : br->sub->result)
        if (colour[x] == col) {
            w = x;
            break;
        }
    if (!w)
        return refute(t, *br->sub, colour);
    for (auto v : s)
        if (t.arc(v, *w))
            return std::array<std::size_t, 3>{*u, v, *w};
    return std::nullopt;
}

} // namespace

std::optional<std::size_t> to_size(const BigInt &v)
{
    if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max()))
        return std::nullopt;
    return v.convert_to<std::size_t>();
}

TheoremConstants next_constants(const TheoremConstants &c)
{
    const BigInt s = c.s_size();
    const BigInt w = c.w_size();
    auto r = to_size(s);
    if (!r || *r > max_binomial_lower)
        throw ConstantsTooLarge("constants for k = " + std::to_string(c.k + 1) +
                                " need a binomial coefficient beyond exact arithmetic");
    TheoremConstants next;
    next.k = c.k + 1;
    next.K = w + c.K;
    next.l = c.l + w + c.l * binomial(w, *r);
    return next;
}

TheoremConstants theorem_constants(unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("constants are defined for k >= 1");
    if (k == 1)
        return {1, 1, 1};
    TheoremConstants c{2, 2, 3};
    while (c.k < k)
        c = next_constants(c);
    return c;
}

LocalGlobalOptions LocalGlobalOptions::from_environment()
{
    return {ChromaticOptions::from_environment(), DominationOptions::from_environment()};
}

LocalityResult locality(const Tournament &t, const LocalGlobalOptions &options)
{
    LocalityResult r;
    for (std::size_t v = 0; v < t.size(); ++v) {
        auto chi = dichromatic_number_exact(t, t.out(v), options.chromatic).k;
        r.per_vertex.push_back(chi);
        r.t = std::max(r.t, chi);
    }
    return r;
}

LocalColoringReport color_t_local(const Tournament &t, const LocalGlobalOptions &options)
{
    LocalColoringReport report;
    report.t = locality(t, options).t;
    if (t.size() <= options.domination.exact_limit) {
        report.dominators = domination_number_exact(t, options.domination).witness.dominators;
        report.mode = DominatingMode::Exact;
    } else {
        report.dominators = greedy_dominating_set(t, t.vertices()).dominators;
        report.mode = DominatingMode::Greedy;
    }
    VertexSet claimed(t.size());
    for (auto v : report.dominators) {
        auto closed = t.out(v);
        closed.insert(v);
        auto best = dichromatic_number_exact(t, closed, options.chromatic);
        report.closed_neighborhood_chi.push_back(best.k);
        for (const auto &cls : best.witness.classes) {
            auto fresh = cls - claimed;
            if (!fresh.empty())
                report.coloring.classes.push_back(std::move(fresh));
        }
        claimed |= closed;
    }
    report.bound = (report.t + 1) * report.dominators.count();
    return report;
}

VertexSet select_w(const VertexSet &d, std::size_t size)
{
    if (d.count() < size)
        throw std::invalid_argument("D has fewer than |W| members");
    VertexSet w(d.universe());
    for (auto v : d) {
        if (w.count() == size)
            break;
        w.insert(v);
    }
    return w;
}

VertexSet base_scope(const Tournament &t, const VertexSet &scope, const VertexSet &w)
{
    return scope - (closed_out_neighbors(t, w) & scope);
}

VertexSet branch_scope(const Tournament &t, const VertexSet &scope, const VertexSet &s, const VertexSet &a)
{
    return (out_neighbors(t, s) - out_neighbors(t, a)) & scope;
}

std::vector<VertexSet> w_subsets(const VertexSet &w, std::size_t size)
{
    const auto members = w.to_vector();
    std::vector<VertexSet> out;
    if (size > members.size())
        return out;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        VertexSet s(w.universe());
        for (auto i : idx)
            s.insert(members[i]);
        out.push_back(std::move(s));
        // Advance to the next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == members.size() - size + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

VertexSet assemble(const ExtractionTrace &level)
{
    if (level.k <= 2 || !level.base)
        return level.result;
    auto out = level.base->result | level.w;
    for (const auto &br : level.branches)
        if (!br.aborted && br.sub)
            out |= br.sub->result;
    return out;
}

ExtractionResult extract_high_chromatic(const Tournament &t, unsigned k, const ExtractionOptions &options)
{
    if (k == 0)
        throw std::invalid_argument("extraction is defined for k >= 1");
    ExtractionResult r;
    r.trace = extract_level(t, t.vertices(), k, options);
    r.a_prime = r.trace.result;
    const auto &chi = options.solvers.chromatic;
    if (r.a_prime.count() <= std::min<std::size_t>(chi.exact_limit, 64))
        r.chi_verified = dichromatic_number_exact(t, r.a_prime, chi).k >= k;
    return r;
}

const char *to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::Scope: return "scope";
    case ViolationKind::GammaClaim: return "gamma_claim";
    case ViolationKind::DominatingSet: return "dominating_set";
    case ViolationKind::WNotInD: return "w_not_in_d";
    case ViolationKind::SizeW: return "size_w";
    case ViolationKind::BranchFamily: return "branch_family";
    case ViolationKind::SizeA: return "size_a";
    case ViolationKind::ANotInBase: return "a_not_in_base";
    case ViolationKind::ArcAToW: return "arc_a_to_w";
    case ViolationKind::BranchGamma: return "branch_gamma";
    case ViolationKind::ASOutsideOutS: return "a_s_outside_out_s";
    case ViolationKind::ASIntersectsOutA: return "a_s_intersects_out_a";
    case ViolationKind::ArcASToA: return "arc_a_s_to_a";
    case ViolationKind::SizeAS: return "size_a_s";
    case ViolationKind::Aborted: return "aborted";
    case ViolationKind::Assembly: return "assembly";
    case ViolationKind::SizeAPrime: return "size_a_prime";
    case ViolationKind::NotTriangle: return "not_triangle";
    case ViolationKind::SizeResult: return "size_result";
    case ViolationKind::Chromatic: return "chromatic";
    }
    return "unknown";
}

bool TraceValidation::has(ViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; });
}

TraceValidation validate_trace(const Tournament &t, unsigned k, const ExtractionTrace &trace,
                               const ExtractionOptions &options)
{
    TraceValidation report;
    if (trace.scope.universe() != t.size())
        throw MalformedTrace("root: scope is not over the host tournament");
    Validator(t, options, report).level(trace, k, trace.scope, "root");
    return report;
}

std::optional<std::array<std::size_t, 3>> monochromatic_triangle(const Tournament &t, const ExtractionTrace &trace,
                                                                 const Coloring &coloring)
{
    std::vector<long> colour(t.size(), -1);
    for (std::size_t c = 0; c < coloring.classes.size(); ++c)
        for (auto v : coloring.classes[c])
            if (v < t.size() && colour[v] < 0)
                colour[v] = static_cast<long>(c);
    return refute(t, trace, colour);
}

} // namespace tourcolor
