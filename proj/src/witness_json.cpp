#include "tourcolor/witness_json.hpp"

#include <limits>

#include "tourcolor/io.hpp"

namespace tourcolor {

namespace {

const Json &field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw MalformedWitness(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t size_field(const Json &j, const char *key)
{
    const auto &v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw MalformedWitness(std::string("field '") + key + "' is not a non-negative integer");
    return v.get<std::size_t>();
}

void check_schema(const Json &j)
{
    if (j.contains("schema") && j.at("schema") != schema_version)
        throw MalformedWitness("unsupported schema version");
}

} // namespace

Json to_json(const VertexSet &s)
{
    Json a = Json::array();
    for (auto v : s)
        a.push_back(v);
    return a;
}

VertexSet vertex_set_from_json(const Json &j, std::size_t n)
{
    if (!j.is_array())
        throw MalformedWitness("vertex list is not an array");
    VertexSet s(n);
    for (const auto &v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw MalformedWitness("vertex is not a non-negative integer");
        const auto x = v.get<std::size_t>();
        if (x >= n)
            throw MalformedWitness("vertex " + std::to_string(x) + " outside 0.." + std::to_string(n) + ")");
        s.insert(x);
    }
    return s;
}

Json to_json(const BigInt &v)
{
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return v.convert_to<std::uint64_t>();
    return v.str();
}

Json coloring_to_json(const Coloring &c, std::size_t n)
{
    Json j;
    j["schema"] = schema_version;
    j["n"] = n;
    j["k"] = c.size();
    j["classes"] = Json::array();
    for (const auto &cls : c.classes)
        j["classes"].push_back(to_json(cls));
    return j;
}

Coloring coloring_from_json(const Json &j, std::size_t n)
{
    check_schema(j);
    if (j.contains("n") && size_field(j, "n") != n)
        throw MalformedWitness("colouring is for a tournament of a different size");
    const auto &classes = field(j, "classes");
    if (!classes.is_array())
        throw MalformedWitness("'classes' is not an array");
    Coloring c;
    for (const auto &cls : classes)
        c.classes.push_back(vertex_set_from_json(cls, n));
    if (j.contains("k") && size_field(j, "k") != c.size())
        throw MalformedWitness("'k' differs from the number of classes");
    return c;
}

Json domination_to_json(std::size_t gamma, const DominationWitness &w)
{
    Json j;
    j["schema"] = schema_version;
    j["gamma"] = gamma;
    j["dominators"] = to_json(w.dominators);
    j["target"] = to_json(w.target);
    return j;
}

DominationDocument domination_from_json(const Json &j, std::size_t n)
{
    check_schema(j);
    DominationDocument d;
    d.gamma = size_field(j, "gamma");
    d.witness.dominators = vertex_set_from_json(field(j, "dominators"), n);
    d.witness.target = vertex_set_from_json(field(j, "target"), n);
    return d;
}

Json pattern_to_json(const Tournament &pattern, const PatternMatch &match)
{
    auto text = serialize(pattern);
    auto nl = text.find('\n');
    Json j;
    j["schema"] = schema_version;
    j["pattern"] = {{"n", pattern.size()}, {"arcs", text.substr(nl + 1, text.size() - nl - 2)}};
    j["mapping"] = match.mapping;
    return j;
}

PatternDocument pattern_from_json(const Json &j)
{
    check_schema(j);
    const auto &p = field(j, "pattern");
    const auto n = size_field(p, "n");
    const auto &arcs = field(p, "arcs");
    if (!arcs.is_string())
        throw MalformedWitness("'arcs' is not a string");
    PatternDocument d;
    d.pattern = parse_tournament(std::to_string(n) + "\n" + arcs.get<std::string>() + "\n");
    const auto &m = field(j, "mapping");
    if (!m.is_array())
        throw MalformedWitness("'mapping' is not an array");
    for (const auto &v : m) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw MalformedWitness("mapping entry is not a non-negative integer");
        d.match.mapping.push_back(v.get<std::size_t>());
    }
    return d;
}

Json trace_node_to_json(const ExtractionTrace &trace)
{
    Json j;
    j["k"] = trace.k;
    j["scope"] = to_json(trace.scope);
    j["gamma"] = trace.gamma_claim;
    if (trace.k >= 3) {
        j["D"] = to_json(trace.dominating);
        j["W"] = to_json(trace.w);
        j["A"] = trace.base ? trace_node_to_json(*trace.base) : Json();
        j["branches"] = Json::array();
        for (const auto &br : trace.branches) {
            Json b;
            b["S"] = to_json(br.s);
            b["gamma"] = br.gamma_claim;
            b["aborted"] = br.aborted;
            b["A_S"] = br.sub ? trace_node_to_json(*br.sub) : Json();
            j["branches"].push_back(std::move(b));
        }
    }
    j["A_prime"] = to_json(trace.result);
    return j;
}

ExtractionTrace trace_node_from_json(const Json &j, std::size_t n)
{
    ExtractionTrace t;
    t.k = static_cast<unsigned>(size_field(j, "k"));
    t.scope = vertex_set_from_json(field(j, "scope"), n);
    t.gamma_claim = size_field(j, "gamma");
    t.result = vertex_set_from_json(field(j, "A_prime"), n);
    t.dominating = VertexSet(n);
    t.w = VertexSet(n);
    if (t.k >= 3) {
        t.dominating = vertex_set_from_json(field(j, "D"), n);
        t.w = vertex_set_from_json(field(j, "W"), n);
        if (const auto &a = field(j, "A"); !a.is_null())
            t.base = trace_node_from_json(a, n);
        const auto &branches = field(j, "branches");
        if (!branches.is_array())
            throw MalformedWitness("'branches' is not an array");
        for (const auto &b : branches) {
            ExtractionBranch br;
            br.s = vertex_set_from_json(field(b, "S"), n);
            br.gamma_claim = size_field(b, "gamma");
            br.aborted = b.value("aborted", false);
            if (const auto &sub = field(b, "A_S"); !sub.is_null())
                br.sub = trace_node_from_json(sub, n);
            t.branches.push_back(std::move(br));
        }
    }
    return t;
}

Json trace_to_json(const ExtractionTrace &trace, std::size_t n)
{
    Json j;
    j["schema"] = schema_version;
    j["n"] = n;
    j["k"] = trace.k;
    j["trace"] = trace_node_to_json(trace);
    return j;
}

ExtractionTrace trace_from_json(const Json &j, std::size_t n)
{
    check_schema(j);
    if (j.contains("n") && size_field(j, "n") != n)
        throw MalformedWitness("trace is for a tournament of a different size");
    return trace_node_from_json(field(j, "trace"), n);
}

Json report_to_json(const LocalColoringReport &r, std::size_t n)
{
    Json j;
    j["schema"] = schema_version;
    j["n"] = n;
    j["t"] = r.t;
    j["dominating_mode"] = r.mode == DominatingMode::Exact ? "exact" : "greedy";
    j["D"] = to_json(r.dominators);
    j["closed_neighborhood_chi"] = r.closed_neighborhood_chi;
    j["bound"] = r.bound;
    j["k"] = r.coloring.size();
    j["classes"] = Json::array();
    for (const auto &cls : r.coloring.classes)
        j["classes"].push_back(to_json(cls));
    return j;
}

} // namespace tourcolor
