#pragma once

#include <cstddef>

#include "json.hpp"

#include "tourcolor/chromatic.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/domination.hpp"
#include "tourcolor/errors.hpp"
#include "tourcolor/localglobal.hpp"

// Witness documents. Every top-level object carries "schema": 1.
//
//   coloring    {"schema":1, "n":N, "k":K, "classes":[[v,...],...]}
//   domination  {"schema":1, "gamma":G, "dominators":[...], "target":[...]}
//   pattern     {"schema":1, "pattern":{"n":P, "arcs":"0101..."}, "mapping":[...]}
//   trace       {"schema":1, "n":N, "k":K, "trace":NODE}
//   NODE        {"k", "scope", "gamma", "A_prime"} plus, for k >= 3,
//               {"D", "W", "A":NODE, "branches":[{"S", "gamma", "aborted", "A_S":NODE}]}

namespace tourcolor {

using Json = nlohmann::ordered_json;

class MalformedWitness : public Error {
public:
    using Error::Error;
};

inline constexpr int schema_version = 1;

Json to_json(const VertexSet &s);
VertexSet vertex_set_from_json(const Json &j, std::size_t n);

/// Numbers that fit 64 bits stay numbers; larger ones become decimal strings.
Json to_json(const BigInt &v);

Json coloring_to_json(const Coloring &c, std::size_t n);
Coloring coloring_from_json(const Json &j, std::size_t n);

Json domination_to_json(std::size_t gamma, const DominationWitness &w);
struct DominationDocument {
    std::size_t gamma = 0;
    DominationWitness witness;
};
DominationDocument domination_from_json(const Json &j, std::size_t n);

Json pattern_to_json(const Tournament &pattern, const PatternMatch &match);
struct PatternDocument {
    Tournament pattern;
    PatternMatch match;
};
PatternDocument pattern_from_json(const Json &j);

Json trace_node_to_json(const ExtractionTrace &trace);
ExtractionTrace trace_node_from_json(const Json &j, std::size_t n);
Json trace_to_json(const ExtractionTrace &trace, std::size_t n);
ExtractionTrace trace_from_json(const Json &j, std::size_t n);

Json report_to_json(const LocalColoringReport &r, std::size_t n);

} // namespace tourcolor
