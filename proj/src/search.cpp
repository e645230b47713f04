#include "tourcolor/search.hpp"

#include <stdexcept>

#include "tourcolor/constructions.hpp"
#include "tourcolor/io.hpp"

namespace tourcolor {

namespace {

struct Evaluation {
    std::size_t gamma = 0;
    bool exact = true;
    VertexSet dominators;
};

Evaluation evaluate(const Tournament &t, const DominationOptions &options)
{
    if (t.size() <= options.exact_limit) {
        auto r = domination_number_exact(t, options);
        return {r.gamma, true, r.witness.dominators};
    }
    auto w = greedy_dominating_set(t, t.vertices());
    return {w.dominators.count(), false, w.dominators};
}

} // namespace

SearchRecord search_si_free(unsigned i, std::size_t n, std::size_t budget, Seed seed, const DominationOptions &options)
{
    if (i < 2)
        throw std::invalid_argument("search needs a pattern level i >= 2");
    const auto pattern = s_tournament(static_cast<int>(i));
    auto holds_pattern = [&](const Tournament &t) { return contains_pattern(t, pattern).has_value(); };

    SplitMix64 rng(seed);
    SearchRecord best;
    best.pattern_level = i;
    best.seed = seed;
    best.start = "random";

    auto current = random_tournament(n, Seed{rng.next()});
    if (holds_pattern(current)) {
        current = random_transitive_tournament(n, Seed{rng.next()});
        best.start = "transitive";
    }
    auto eval = evaluate(current, options);
    best.tournament = current;
    best.gamma = eval.gamma;
    best.gamma_exact = eval.exact;
    best.dominators = eval.dominators;

    for (std::size_t step = 0; step < budget && n >= 2; ++step) {
        ++best.proposals;
        const auto u = static_cast<std::size_t>(rng.below(n));
        auto v = static_cast<std::size_t>(rng.below(n - 1));
        if (v >= u)
            ++v;
        current.reverse(u, v);
        if (holds_pattern(current)) {
            current.reverse(u, v);
            continue;
        }
        auto next = evaluate(current, options);
        if (next.gamma < eval.gamma) {
            current.reverse(u, v);
            continue;
        }
        ++best.accepted;
        eval = std::move(next);
        if (eval.gamma > best.gamma) {
            best.tournament = current;
            best.gamma = eval.gamma;
            best.gamma_exact = eval.exact;
            best.dominators = eval.dominators;
        }
    }
    best.contains_pattern = holds_pattern(best.tournament);
    return best;
}

Json search_record_to_json(const SearchRecord &r)
{
    Json j;
    j["schema"] = schema_version;
    j["pattern"] = "S_" + std::to_string(r.pattern_level);
    j["n"] = r.tournament.size();
    j["gamma"] = r.gamma;
    j["gamma_mode"] = r.gamma_exact ? "exact" : "greedy_upper_bound";
    j["dominators"] = to_json(r.dominators);
    j["contains_pattern"] = r.contains_pattern;
    j["seed"] = r.seed.value;
    j["start"] = r.start;
    j["proposals"] = r.proposals;
    j["mutations"] = r.accepted;
    j["tournament"] = serialize(r.tournament);
    return j;
}

} // namespace tourcolor
