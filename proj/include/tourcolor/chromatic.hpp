#pragma once

#include <cstddef>
#include <vector>

#include "tourcolor/tournament.hpp"

namespace tourcolor {

/// Partition of a vertex set into colour classes; the colour of a vertex is
/// the index of its class. Validity (each class transitive) is checked by
/// verify_coloring, not enforced here.
struct Coloring {
    std::vector<VertexSet> classes;

    std::size_t size() const { return classes.size(); }
    bool operator==(const Coloring &) const = default;
};

struct ChromaticOptions {
    /// Scopes up to this size use the dense subset table; larger ones use
    /// branch-and-bound with a hashed memo.
    std::size_t dp_threshold = 24;
    /// Largest scope accepted by the exact solver at all (hard cap 64).
    std::size_t exact_limit = 64;
    unsigned threads = 1;
    /// Return the optimal colouring whose colour vector (classes numbered by
    /// first appearance) is lexicographically least. Dense path only.
    bool canonical = false;

    /// Defaults, with exact_limit taken from TOURCOLOR_EXACT_LIMIT when set.
    static ChromaticOptions from_environment();
};

struct ChromaticResult {
    std::size_t k = 0;
    Coloring witness;
    bool dense_path = false;
};

struct ChromaticBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    Coloring upper_witness;
};

/// True iff the classes partition `target` and each induces a transitive
/// subtournament. Throws ColoringOutOfScope if a class leaves `target`.
bool verify_coloring(const Tournament &t, const VertexSet &target, const Coloring &c);

/// Exact dichromatic number of T[scope] with an optimal witness, classes
/// ordered by their lowest vertex. Throws InfeasibleError when the scope is
/// larger than options.exact_limit, or when canonical is requested above the
/// dense threshold.
ChromaticResult dichromatic_number_exact(const Tournament &t, const VertexSet &scope,
                                         const ChromaticOptions &options = {});
ChromaticResult dichromatic_number_exact(const Tournament &t, const ChromaticOptions &options = {});

/// Peels off maximal transitive sets grown greedily in vertex order.
Coloring greedy_coloring(const Tournament &t, const VertexSet &scope);

/// Interval [lower, upper] containing the dichromatic number of T[scope],
/// valid at any size. Lower bound: 2 if a triangle exists, and ceil(m / alpha)
/// when the largest transitive subset alpha is computable (m <= 64).
ChromaticBounds dichromatic_bounds(const Tournament &t, const VertexSet &scope);

/// Size of the largest transitive subset of `scope` (|scope| <= 64).
std::size_t max_transitive_subset_size(const Tournament &t, const VertexSet &scope);

} // namespace tourcolor
