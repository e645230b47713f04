#include "tourcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tourcolor/chromatic.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/domination.hpp"
#include "tourcolor/errors.hpp"
#include "tourcolor/io.hpp"
#include "tourcolor/localglobal.hpp"
#include "tourcolor/search.hpp"
#include "tourcolor/witness_json.hpp"

namespace tourcolor {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<std::size_t> parse_csv(const std::string &text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception &) {
            throw UsageError("not a vertex list: '" + text + "'");
        }
        if (pos != item.size())
            throw UsageError("not a vertex list: '" + text + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

Json read_json(const std::string &path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error &e) {
        throw MalformedWitness(path + ": " + e.what());
    }
}

void emit(std::ostream &out, const Json &j) { out << j.dump() << '\n'; }

void emit_text(std::ostream &out, const std::string &text, const std::string &path, std::ostream &err)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
    err << "wrote " << path << '\n';
}

struct Settings {
    unsigned threads = 1;
    LocalGlobalOptions solvers = LocalGlobalOptions::from_environment();
};

int cmd_chi(const Settings &s, const std::string &file, bool greedy, bool bounds, bool canonical,
            std::ostream &out, std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    Json j;
    j["schema"] = schema_version;
    if (greedy) {
        auto c = greedy_coloring(t, t.vertices());
        j["mode"] = "greedy";
        j["chi_upper"] = c.size();
        j.update(coloring_to_json(c, t.size()));
        err << "greedy colouring with " << c.size() << " classes\n";
    } else if (bounds) {
        auto b = dichromatic_bounds(t, t.vertices());
        j["mode"] = "bounds";
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j.update(coloring_to_json(b.upper_witness, t.size()));
        err << "chi in [" << b.lower << ", " << b.upper << "]\n";
    } else {
        auto opts = s.solvers.chromatic;
        opts.canonical = canonical;
        auto r = dichromatic_number_exact(t, opts);
        j["mode"] = "exact";
        j["chi"] = r.k;
        j["canonical"] = canonical;
        j.update(coloring_to_json(r.witness, t.size()));
        err << "chi = " << r.k << " (" << (r.dense_path ? "subset table" : "branch and bound") << ")\n";
    }
    emit(out, j);
    return exit_ok;
}

int cmd_gamma(const Settings &s, const std::string &file, bool greedy, const std::string &subset, std::ostream &out,
              std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    auto target = t.vertices();
    if (!subset.empty()) {
        auto members = parse_csv(subset);
        for (auto v : members)
            if (v >= t.size())
                throw UsageError("subset vertex " + std::to_string(v) + " out of range");
        target = VertexSet::of(t.size(), members);
    }
    Json j;
    if (greedy) {
        auto w = greedy_dominating_set(t, target);
        j = domination_to_json(w.dominators.count(), w);
        j["mode"] = "greedy";
        err << "greedy dominating set of size " << w.dominators.count() << '\n';
    } else {
        auto r = domination_number_exact(t, target, s.solvers.domination);
        j = domination_to_json(r.gamma, r.witness);
        j["mode"] = "exact";
        err << "gamma = " << r.gamma << '\n';
    }
    emit(out, j);
    return exit_ok;
}

int cmd_locality(const Settings &s, const std::string &file, std::ostream &out, std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    auto r = locality(t, s.solvers);
    Json j;
    j["schema"] = schema_version;
    j["n"] = t.size();
    j["t"] = r.t;
    j["per_vertex"] = r.per_vertex;
    emit(out, j);
    err << "tournament is " << r.t << "-local\n";
    return exit_ok;
}

int cmd_color_local(const Settings &s, const std::string &file, std::ostream &out, std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    auto r = color_t_local(t, s.solvers);
    emit(out, report_to_json(r, t.size()));
    err << r.coloring.size() << " classes, bound (t+1)|D| = " << r.bound << '\n';
    return exit_ok;
}

int cmd_extract(const Settings &s, const std::string &file, unsigned k, bool permissive, std::ostream &out,
                std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    ExtractionOptions opts{s.solvers, permissive};
    try {
        auto r = extract_high_chromatic(t, k, opts);
        auto j = trace_to_json(r.trace, t.size());
        j["permissive"] = permissive;
        j["A_prime"] = to_json(r.a_prime);
        j["chi_verified"] = r.chi_verified ? Json(*r.chi_verified) : Json();
        emit(out, j);
        err << "A' has " << r.a_prime.count() << " vertices\n";
        return r.chi_verified == false ? exit_verification_failed : exit_ok;
    } catch (const GammaTooSmall &e) {
        err << "extract: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

int cmd_verify(const Settings &s, const std::string &kind, const std::string &file, const std::string &witness,
               std::ostream &out, std::ostream &err)
{
    const auto t = parse_tournament(read_file(file));
    const auto doc = read_json(witness);
    Json j;
    j["schema"] = schema_version;
    j["kind"] = kind;
    bool valid = false;
    if (kind == "coloring") {
        auto c = coloring_from_json(doc, t.size());
        try {
            valid = verify_coloring(t, t.vertices(), c);
        } catch (const ColoringOutOfScope &e) {
            j["error"] = e.what();
        }
        j["classes"] = c.size();
    } else if (kind == "domination") {
        auto d = domination_from_json(doc, t.size());
        const bool dominates = verify_domination(t, d.witness.target, d.witness.dominators);
        const bool size_ok = d.witness.dominators.count() == d.gamma;
        j["dominates"] = dominates;
        j["size_matches"] = size_ok;
        valid = dominates && size_ok;
        try {
            auto exact = domination_number_exact(t, d.witness.target, s.solvers.domination).gamma;
            j["optimal"] = exact == d.gamma;
            valid = valid && exact == d.gamma;
        } catch (const InfeasibleError &) {
            j["optimal"] = nullptr;
        }
    } else if (kind == "trace") {
        auto trace = trace_from_json(doc, t.size());
        auto report = validate_trace(t, trace.k, trace, ExtractionOptions{s.solvers, false});
        valid = report.valid();
        j["violations"] = Json::array();
        for (const auto &v : report.violations)
            j["violations"].push_back({{"kind", to_string(v.kind)}, {"where", v.where}, {"detail", v.detail}});
        j["unverifiable"] = report.unverifiable;
    } else if (kind == "pattern") {
        auto p = pattern_from_json(doc);
        valid = verify_pattern_match(t, p.pattern, p.match);
    } else {
        throw UsageError("unknown witness kind '" + kind + "'");
    }
    j["valid"] = valid;
    emit(out, j);
    err << kind << " witness " << (valid ? "verified" : "REJECTED") << '\n';
    return valid ? exit_ok : exit_verification_failed;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"tourcolor: dichromatic and domination numbers of tournaments"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    app.add_option("--threads", settings.threads, "solver threads")->check(CLI::Range(1U, 256U));

    // gen
    auto *gen = app.add_subcommand("gen", "generate tournaments and graphs (.trn text)");
    gen->require_subcommand(1);
    std::string output;
    gen->add_option("-o,--output", output, "write to FILE instead of standard output");
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    auto *gen_random = gen->add_subcommand("random", "uniformly random tournament");
    gen_random->add_option("--n", gen_n)->required();
    gen_random->add_option("--seed", gen_seed)->required();
    std::size_t q = 0;
    auto *gen_paley = gen->add_subcommand("paley", "quadratic-residue tournament");
    gen_paley->add_option("--q", q)->required();
    int s_level = 0;
    auto *gen_s = gen->add_subcommand("s", "the blown-up triangle S_i");
    gen_s->add_option("--i", s_level)->required();
    std::string graph_file;
    std::string order;
    auto *gen_orient = gen->add_subcommand("orient", "orient a graph: edges forward, non-edges backward");
    gen_orient->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    gen_orient->add_option("--order", order, "vertex ordering as a comma-separated permutation");
    std::size_t min_girth = 3;
    std::size_t edges = 0;
    auto *gen_girth = gen->add_subcommand("girthgraph", "random graph with girth at least --girth");
    gen_girth->add_option("--n", gen_n)->required();
    gen_girth->add_option("--girth", min_girth)->required();
    gen_girth->add_option("--edges", edges)->required();
    gen_girth->add_option("--seed", gen_seed)->required();

    std::string file;
    auto *chi = app.add_subcommand("chi", "dichromatic number");
    chi->add_option("file", file)->required()->check(CLI::ExistingFile);
    bool exact = false, greedy = false, bounds = false, canonical = false;
    auto *f_exact = chi->add_flag("--exact", exact, "exact value with witness (default)");
    auto *f_greedy = chi->add_flag("--greedy", greedy, "greedy upper bound");
    auto *f_bounds = chi->add_flag("--bounds", bounds, "interval [lower, upper]");
    f_exact->excludes(f_greedy)->excludes(f_bounds);
    f_greedy->excludes(f_bounds);
    chi->add_flag("--canonical", canonical, "lexicographically least optimal colouring")->excludes(f_greedy, f_bounds);

    auto *gamma = app.add_subcommand("gamma", "domination number");
    gamma->add_option("file", file)->required()->check(CLI::ExistingFile);
    bool g_exact = false, g_greedy = false;
    std::string subset;
    gamma->add_flag("--exact", g_exact)->excludes(gamma->add_flag("--greedy", g_greedy));
    gamma->add_option("--subset", subset, "dominate only these vertices (comma-separated)");

    auto *loc = app.add_subcommand("locality", "smallest t for which the tournament is t-local");
    loc->add_option("file", file)->required()->check(CLI::ExistingFile);

    auto *cloc = app.add_subcommand("color-local", "colour through the out-neighbourhoods of a dominating set");
    cloc->add_option("file", file)->required()->check(CLI::ExistingFile);

    unsigned k = 0;
    bool permissive = false;
    auto *ext = app.add_subcommand("extract", "bounded subtournament with dichromatic number >= k");
    ext->add_option("file", file)->required()->check(CLI::ExistingFile);
    ext->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    ext->add_flag("--permissive", permissive, "greedy dominating sets; checks each S directly");

    std::string kind, witness;
    auto *ver = app.add_subcommand("verify", "check a witness against a tournament");
    ver->add_option("kind", kind)->required()->check(CLI::IsMember({"coloring", "domination", "trace", "pattern"}));
    ver->add_option("file", file)->required()->check(CLI::ExistingFile);
    ver->add_option("witness", witness)->required()->check(CLI::ExistingFile);

    auto *search = app.add_subcommand("search", "S_i-free search for large domination number");
    search->require_subcommand(1);
    auto *sfree = search->add_subcommand("s-free", "hill climb avoiding induced S_i");
    unsigned si = 0;
    std::size_t sn = 0, budget = 0;
    std::uint64_t sseed = 0;
    sfree->add_option("--i", si)->required()->check(CLI::Range(2U, 14U));
    sfree->add_option("--n", sn)->required();
    sfree->add_option("--budget", budget)->required();
    sfree->add_option("--seed", sseed)->required();

    auto *cst = app.add_subcommand("constants", "the pair (K, l) for level k");
    unsigned ck = 0;
    cst->add_option("--k", ck)->required()->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    settings.solvers.chromatic.threads = settings.threads;
    try {
        if (gen->parsed()) {
            if (gen_random->parsed()) {
                emit_text(out, serialize(random_tournament(gen_n, Seed{gen_seed})), output, err);
            } else if (gen_paley->parsed()) {
                emit_text(out, serialize(paley_tournament(q)), output, err);
            } else if (gen_s->parsed()) {
                emit_text(out, serialize(s_tournament(s_level)), output, err);
            } else if (gen_orient->parsed()) {
                auto g = parse_graph(read_file(graph_file));
                auto t = order.empty() ? orient_from_graph(g) : orient_from_graph(g, parse_csv(order));
                emit_text(out, serialize(t), output, err);
            } else {
                auto r = random_graph_with_girth(gen_n, min_girth, edges, Seed{gen_seed});
                auto gi = girth(r.graph);
                err << "placed " << r.edges_added << " of " << r.edges_requested << " edges, girth "
                    << (gi ? std::to_string(*gi) : std::string("inf")) << '\n';
                emit_text(out, serialize(r.graph), output, err);
            }
            return exit_ok;
        }
        if (chi->parsed())
            return cmd_chi(settings, file, greedy, bounds, canonical, out, err);
        if (gamma->parsed())
            return cmd_gamma(settings, file, g_greedy, subset, out, err);
        if (loc->parsed())
            return cmd_locality(settings, file, out, err);
        if (cloc->parsed())
            return cmd_color_local(settings, file, out, err);
        if (ext->parsed())
            return cmd_extract(settings, file, k, permissive, out, err);
        if (ver->parsed())
            return cmd_verify(settings, kind, file, witness, out, err);
        if (sfree->parsed()) {
            auto r = search_si_free(si, sn, budget, Seed{sseed}, settings.solvers.domination);
            emit(out, search_record_to_json(r));
            err << "best gamma " << r.gamma << " after " << r.proposals << " proposals\n";
            return exit_ok;
        }
        if (cst->parsed()) {
            auto c = theorem_constants(ck);
            Json j;
            j["schema"] = schema_version;
            j["k"] = ck;
            j["K"] = to_json(c.K);
            j["l"] = to_json(c.l);
            emit(out, j);
            return exit_ok;
        }
    } catch (const InfeasibleError &e) {
        err << "infeasible at exact scale: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const ConstantsTooLarge &e) {
        err << "infeasible at exact scale: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const MalformedTrace &e) {
        err << "malformed trace: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const ParseError &e) {
        err << "bad input: " << e.what() << '\n';
        return exit_usage;
    } catch (const MalformedWitness &e) {
        err << "bad witness: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace tourcolor
