#pragma once

#include <cstddef>

#include "tourcolor/tournament.hpp"

namespace tourcolor {

/// R dominates X in T when every vertex of X \ R has an in-neighbour in R.
/// R may lie anywhere in V(T), inside X or not.
struct DominationWitness {
    VertexSet dominators;
    VertexSet target;

    bool operator==(const DominationWitness &) const = default;
};

struct DominationResult {
    std::size_t gamma = 0;
    DominationWitness witness;
};

struct DominationOptions {
    /// Largest host tournament the exact solver accepts (hard cap: |X| <= 64).
    std::size_t exact_limit = 64;

    static DominationOptions from_environment();
};

enum class Verdict { Yes, No, Unknown };

bool verify_domination(const Tournament &t, const VertexSet &x, const VertexSet &r);

/// gamma_T(X) with a minimum witness. Solved as set cover: candidate r covers
/// N+[r] n X. Throws InfeasibleError beyond the exact limit.
DominationResult domination_number_exact(const Tournament &t, const VertexSet &x,
                                         const DominationOptions &options = {});
DominationResult domination_number_exact(const Tournament &t, const DominationOptions &options = {});

/// Repeatedly takes the vertex whose closed out-neighbourhood covers most of
/// what is still undominated (lowest index on ties). Always within
/// ceil(log2(|X| + 1)) vertices.
DominationWitness greedy_dominating_set(const Tournament &t, const VertexSet &x);

/// ceil(log2(m + 1)).
std::size_t halving_bound(std::size_t m);

/// Whether gamma_T(X) >= k. Exact when the instance is within reach; claims
/// k <= 2 are always decided; otherwise Unknown unless a greedy witness
/// already refutes the claim.
Verdict gamma_at_least(const Tournament &t, const VertexSet &x, std::size_t k, const DominationOptions &options = {});

/// gamma_at_least inside the subtournament T[scope] (dominators drawn from
/// scope, X a subset of scope). Beyond the exact limit only a greedy cover
/// inside the scope can refute the claim.
Verdict gamma_at_least_within(const Tournament &t, const VertexSet &scope, const VertexSet &x, std::size_t k,
                              const DominationOptions &options = {});

/// gamma_T(N+[X]) <= |X|.
bool check_inequality_1(const Tournament &t, const VertexSet &x, const DominationOptions &options = {});
/// gamma_T(Y) <= gamma_T(X) + gamma_T(Y \ X).
bool check_inequality_2(const Tournament &t, const VertexSet &x, const VertexSet &y,
                        const DominationOptions &options = {});

} // namespace tourcolor
