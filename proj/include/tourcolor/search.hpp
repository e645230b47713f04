#pragma once

#include <cstddef>
#include <string>

#include "tourcolor/domination.hpp"
#include "tourcolor/rng.hpp"
#include "tourcolor/tournament.hpp"
#include "tourcolor/witness_json.hpp"

namespace tourcolor {

/// Best state found by the S_i-free hill climb. Every verdict in it can be
/// recomputed from `tournament` alone.
struct SearchRecord {
    Tournament tournament;
    std::size_t gamma = 0;
    /// Exact minimum, or the size of a greedy dominating set (an upper bound)
    /// when the tournament is beyond the exact solver.
    bool gamma_exact = true;
    VertexSet dominators;
    unsigned pattern_level = 0;
    bool contains_pattern = false;
    Seed seed;
    /// "random", or "transitive" when the random start already held S_i.
    std::string start;
    std::size_t proposals = 0;
    std::size_t accepted = 0;
};

/// Hill climb over single-arc reversals that never admit an induced S_i,
/// accepting moves that do not lower gamma. `budget` counts proposals.
SearchRecord search_si_free(unsigned i, std::size_t n, std::size_t budget, Seed seed,
                            const DominationOptions &options = {});

Json search_record_to_json(const SearchRecord &r);

} // namespace tourcolor
