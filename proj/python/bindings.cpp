#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tourcolor/chromatic.hpp"
#include "tourcolor/cli.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/domination.hpp"
#include "tourcolor/errors.hpp"
#include "tourcolor/io.hpp"
#include "tourcolor/localglobal.hpp"
#include "tourcolor/witness_json.hpp"

namespace py = pybind11;
using namespace tourcolor;

namespace {

VertexSet to_set(const Tournament &t, const std::optional<std::vector<std::size_t>> &members)
{
    if (!members)
        return t.vertices();
    for (auto v : *members)
        if (v >= t.size())
            throw py::index_error("vertex " + std::to_string(v) + " out of range");
    return VertexSet::of(t.size(), std::span<const std::size_t>(*members));
}

std::vector<std::vector<std::size_t>> classes_of(const Coloring &c)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto &cls : c.classes)
        out.push_back(cls.to_vector());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Dichromatic and domination numbers of tournaments";

    // Later registrations are tried first, so subclasses follow the base.
    auto &base = py::register_exception<Error>(m, "TourcolorError");
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Tournament>(m, "Tournament")
        .def(py::init<std::size_t>(), py::arg("n") = 0, "Transitive tournament with i -> j for i < j.")
        .def_static("parse", [](const std::string &text) { return parse_tournament(text); })
        .def_static("random", [](std::size_t n, std::uint64_t seed) { return random_tournament(n, Seed{seed}); },
                    py::arg("n"), py::arg("seed"))
        .def_static("s", &s_tournament, py::arg("i"))
        .def_static("paley", &paley_tournament, py::arg("q"))
        .def("__len__", &Tournament::size)
        .def("arc", &Tournament::arc)
        .def("orient", &Tournament::orient)
        .def("out", [](const Tournament &t, std::size_t v) { return t.out(v).to_vector(); })
        .def("serialize", [](const Tournament &t) { return serialize(t); })
        .def("is_transitive", [](const Tournament &t) { return is_transitive(t); })
        .def("__eq__", [](const Tournament &a, const Tournament &b) { return a == b; });

    m.def(
        "dichromatic_number",
        [](const Tournament &t, std::optional<std::vector<std::size_t>> scope, bool canonical, unsigned threads) {
            auto opts = ChromaticOptions::from_environment();
            opts.canonical = canonical;
            opts.threads = threads;
            auto r = [&] {
                py::gil_scoped_release release;
                return dichromatic_number_exact(t, to_set(t, scope), opts);
            }();
            return py::make_tuple(r.k, classes_of(r.witness));
        },
        py::arg("t"), py::arg("scope") = py::none(), py::arg("canonical") = false, py::arg("threads") = 1,
        "Exact dichromatic number and an optimal colouring as a list of classes.");

    m.def(
        "domination_number",
        [](const Tournament &t, std::optional<std::vector<std::size_t>> target) {
            auto r = domination_number_exact(t, to_set(t, target), DominationOptions::from_environment());
            return py::make_tuple(r.gamma, r.witness.dominators.to_vector());
        },
        py::arg("t"), py::arg("target") = py::none());

    m.def("locality", [](const Tournament &t) { return locality(t, LocalGlobalOptions::from_environment()).t; });

    m.def("color_t_local", [](const Tournament &t) {
        return report_to_json(color_t_local(t, LocalGlobalOptions::from_environment()), t.size()).dump();
    });

    m.def(
        "extract",
        [](const Tournament &t, unsigned k, bool permissive) {
            auto r = extract_high_chromatic(t, k, {LocalGlobalOptions::from_environment(), permissive});
            return trace_to_json(r.trace, t.size()).dump();
        },
        py::arg("t"), py::arg("k"), py::arg("permissive") = false, "Extraction trace as a JSON string.");

    m.def("theorem_constants", [](unsigned k) {
        auto c = theorem_constants(k);
        return py::make_tuple(py::int_(py::str(c.K.str())), py::int_(py::str(c.l.str())));
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs one command-line invocation; returns (exit code, stdout, stderr).");
}
