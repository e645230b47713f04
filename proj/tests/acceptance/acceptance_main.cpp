// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tourcolor/chromatic.hpp"
#include "tourcolor/cli.hpp"
#include "tourcolor/constructions.hpp"
#include "tourcolor/domination.hpp"
#include "tourcolor/io.hpp"
#include "tourcolor/localglobal.hpp"
#include "tourcolor/witness_json.hpp"

using namespace tourcolor;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexSet random_subset(std::size_t n, SplitMix64 &rng)
{
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (rng.bit())
            s.insert(v);
    return s;
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::size_t checked = 0;
    for (std::uint64_t code = 0; code < (1U << 15); ++code) {
        const auto t = oracle::from_code(6, code);
        const auto r = dichromatic_number_exact(t);
        const auto expected = oracle::min_transitive_partition(t);
        o.require(r.k == expected && verify_coloring(t, t.vertices(), r.witness),
                  "chi mismatch on 6-vertex code " + std::to_string(code));
        ++checked;
    }
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
            const auto t = oracle::from_code(n, code);
            o.require(domination_number_exact(t).gamma == oracle::min_domination(t),
                      "gamma mismatch on n=" + std::to_string(n) + " code " + std::to_string(code));
            ++checked;
        }
    if (o.pass)
        o.note = std::to_string(checked) + " tournaments";
    return o;
}

Outcome known_constants()
{
    Outcome o;
    const auto c2 = theorem_constants(2);
    const auto c3 = theorem_constants(3);
    o.require(c2.K == 2 && c2.l == 3, "level 2 constants");
    o.require(c3.K == 14 && c3.l == 2787, "level 3 constants");
    if (o.pass)
        o.note = "(K,l) = (2,3) and (14,2787)";
    return o;
}

Outcome s_chain()
{
    Outcome o;
    for (int i = 1; i <= 10; ++i)
        o.require(s_tournament(i).size() == (std::size_t{1} << i) - 1, "|S_" + std::to_string(i) + "|");
    std::string values;
    double s4_seconds = 0;
    for (int i = 1; i <= 4; ++i) {
        const auto start = Clock::now();
        const auto t = s_tournament(i);
        const auto r = dichromatic_number_exact(t);
        if (i == 4)
            s4_seconds = seconds_since(start);
        o.require(r.k >= static_cast<std::size_t>(i) && verify_coloring(t, t.vertices(), r.witness),
                  "chi(S_" + std::to_string(i) + ") = " + std::to_string(r.k));
        values += (i > 1 ? "," : "") + std::to_string(r.k);
    }
    o.require(s4_seconds < 300, "S_4 took " + std::to_string(s4_seconds) + "s");
    if (o.pass) {
        std::ostringstream ss;
        ss << "chi(S_1..S_4) = " << values << ", S_4 in " << s4_seconds << "s";
        o.note = ss.str();
    }
    return o;
}

Outcome base_case()
{
    Outcome o;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
            const auto t = oracle::from_code(n, code);
            if (domination_number_exact(t).gamma >= 2)
                o.require(find_directed_triangle(t, t.vertices()).has_value(),
                          "gamma >= 2 without a triangle, n=" + std::to_string(n));
        }
    SplitMix64 rng(Seed{4});
    int done = 0;
    while (done < 500) {
        const auto n = 3 + static_cast<std::size_t>(rng.below(40));
        const auto t = random_tournament(n, Seed{rng.next()});
        if (domination_number_exact(t).gamma < 2)
            continue;
        ++done;
        const auto r = extract_high_chromatic(t, 2);
        const auto &a = r.a_prime;
        o.require(a.count() == 3 && !is_transitive(t, a) && validate_trace(t, 2, r.trace).valid(),
                  "extraction failed on random instance " + std::to_string(done));
    }
    if (o.pass)
        o.note = "exhaustive n <= 5, 500 extractions";
    return o;
}

Outcome inequalities()
{
    Outcome o;
    SplitMix64 rng(Seed{5});
    std::size_t violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = 1 + static_cast<std::size_t>(rng.below(14));
        const auto t = random_tournament(n, Seed{rng.next()});
        if (!check_inequality_1(t, random_subset(n, rng)))
            ++violations;
    }
    for (int i = 0; i < 1000; ++i) {
        const auto n = 1 + static_cast<std::size_t>(rng.below(14));
        const auto t = random_tournament(n, Seed{rng.next()});
        const auto x = random_subset(n, rng);
        if (!check_inequality_2(t, x, random_subset(n, rng)))
            ++violations;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass)
        o.note = "2000 instances, 0 violations";
    return o;
}

Outcome local_to_global()
{
    Outcome o;
    SplitMix64 rng(Seed{6});
    std::size_t max_n = 0;
    for (int i = 0; i < 100; ++i) {
        const auto n = 1 + static_cast<std::size_t>(rng.below(26));
        max_n = std::max(max_n, n);
        const auto t = random_tournament(n, Seed{rng.next()});
        const auto r = color_t_local(t);
        o.require(verify_coloring(t, t.vertices(), r.coloring), "invalid colouring");
        o.require(r.coloring.size() <= (r.t + 1) * r.dominators.count(), "class count above (t+1)|D|");
        std::size_t sum = 0;
        for (auto c : r.closed_neighborhood_chi) {
            sum += c;
            o.require(c <= r.t + 1, "chi(N+[v]) above t+1");
        }
        o.require(dichromatic_number_exact(t).k <= sum, "chi(T) above the sum over D");
        const auto loc = locality(t);
        for (std::size_t v = 0; v < n; ++v) {
            auto closed = t.out(v);
            closed.insert(v);
            o.require(dichromatic_number_exact(t, closed).k <= loc.t + 1, "some chi(N+[v]) above t+1");
        }
    }
    if (o.pass)
        o.note = "100 instances up to n = " + std::to_string(max_n);
    return o;
}

Outcome girth_orientation()
{
    Outcome o;
    const auto g = random_graph_with_girth(40, 8, 60, Seed{7});
    const auto gi = girth(g.graph);
    o.require(!gi || *gi >= 8, "girth below 8");
    const auto t = orient_from_graph(g.graph);
    SplitMix64 rng(Seed{77});
    std::vector<std::size_t> idx(40);
    for (std::size_t i = 0; i < 40; ++i)
        idx[i] = i;
    std::size_t worst = 0;
    for (int rep = 0; rep < 100000; ++rep) {
        rng.shuffle(std::span<std::size_t>(idx));
        const auto x = VertexSet::of(40, std::span<const std::size_t>(idx.data(), 7));
        const auto k = dichromatic_number_exact(t, x).k;
        worst = std::max(worst, k);
        if (k > 2) {
            std::cerr << "COUNTEREXAMPLE: 7-subset with chi " << k << ":";
            for (auto v : x)
                std::cerr << ' ' << v;
            std::cerr << '\n';
            o.require(false, "7-subset with dichromatic number " + std::to_string(k));
        }
    }
    if (o.pass)
        o.note = std::to_string(g.edges_added) + " edges, girth " + (gi ? std::to_string(*gi) : "inf") +
                 ", 100000 subsets, max chi " + std::to_string(worst);
    return o;
}

Outcome domination_fundamentals()
{
    Outcome o;
    const auto q = paley_tournament(7);
    o.require(domination_number_exact(q).gamma == 3, "gamma(QR7)");
    o.require(dichromatic_number_exact(q).k == 3, "chi(QR7)");
    SplitMix64 rng(Seed{8});
    for (int i = 0; i < 200; ++i) {
        const auto n = 1 + static_cast<std::size_t>(rng.below(1000));
        const auto t = random_tournament(n, Seed{rng.next()});
        const auto w = greedy_dominating_set(t, t.vertices());
        const auto bound = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n) + 1)));
        o.require(verify_domination(t, t.vertices(), w.dominators) && w.dominators.count() <= bound,
                  "greedy above log bound at n=" + std::to_string(n));
    }
    if (o.pass)
        o.note = "gamma(QR7) = chi(QR7) = 3, 200 greedy runs";
    return o;
}

Outcome determinism()
{
    Outcome o;
    SplitMix64 rng(Seed{9});
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_tournament(static_cast<std::size_t>(rng.below(51)), Seed{rng.next()});
        const auto text = serialize(t);
        o.require(parse_tournament(text) == t && serialize(parse_tournament(text)) == text, "roundtrip");
    }

    const auto path = (std::filesystem::temp_directory_path() / "tourcolor_acceptance.trn").string();
    std::ofstream(path, std::ios::binary) << serialize(random_tournament(16, Seed{10}));
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"chi", path}, {"gamma", path}, {"color-local", path}, {"extract", path, "--k", "2"},
             {"search", "s-free", "--i", "3", "--n", "10", "--budget", "100", "--seed", "1"}}) {
        std::ostringstream a, b, ea, eb;
        const int ca = run_cli(args, a, ea);
        const int cb = run_cli(args, b, eb);
        o.require(ca == 0 && ca == cb && a.str() == b.str(), "CLI output differs for " + args[0]);
    }
    std::filesystem::remove(path);

    for (std::uint64_t s = 0; s < 6; ++s) {
        const auto t = random_tournament(24 + s % 3, Seed{s});
        ChromaticOptions opts;
        opts.dp_threshold = s % 2 ? 0 : 24;
        std::vector<std::size_t> values;
        for (unsigned threads : {1U, 4U, 8U}) {
            opts.threads = threads;
            values.push_back(dichromatic_number_exact(t, opts).k);
        }
        o.require(values[0] == values[1] && values[1] == values[2], "chi depends on thread count");
    }
    if (o.pass)
        o.note = "1000 roundtrips, 5 CLI commands, threads 1/4/8";
    return o;
}

Outcome negative_fixtures()
{
    Outcome o;
    const auto f = fixture::level_three();
    auto has_at = [](const TraceValidation &v, ViolationKind kind, const std::string &where) {
        for (const auto &x : v.violations)
            if (x.kind == kind && x.where == where)
                return true;
        return false;
    };
    const auto baseline = validate_trace(f.t, 3, f.trace);
    for (auto kind : {ViolationKind::ArcAToW, ViolationKind::SizeW, ViolationKind::ASIntersectsOutA,
                      ViolationKind::SizeA})
        o.require(!baseline.has(kind), std::string("unmutated fixture already shows ") + to_string(kind));
    o.require(!has_at(baseline, ViolationKind::GammaClaim, "root/A"), "unmutated fixture: gamma at root/A");

    int caught = 0;
    {
        auto t = f.t;
        t.reverse(fixture::a_first, 0);
        caught += validate_trace(t, 3, f.trace).has(ViolationKind::ArcAToW);
    }
    {
        auto tr = f.trace;
        tr.w.erase(11);
        caught += validate_trace(f.t, 3, tr).has(ViolationKind::SizeW);
    }
    {
        auto tr = f.trace;
        auto &as = tr.branches[5].sub->result;
        as.erase(as.lowest());
        as.insert(4);
        caught += validate_trace(f.t, 3, tr).has(ViolationKind::ASIntersectsOutA);
    }
    {
        auto tr = f.trace;
        tr.base->result.insert(fixture::block_first);
        caught += validate_trace(f.t, 3, tr).has(ViolationKind::SizeA);
    }
    {
        auto tr = f.trace;
        tr.base->gamma_claim = 3;
        caught += has_at(validate_trace(f.t, 3, tr), ViolationKind::GammaClaim, "root/A");
    }
    o.require(caught == 5, std::to_string(caught) + " of 5 injected violations detected");
    if (o.pass)
        o.note = "5 of 5 injected violations detected";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact solvers match brute force", oracle_equivalence},
        {"theorem constants", known_constants},
        {"S_i chain", s_chain},
        {"triangle base case", base_case},
        {"domination inequalities", inequalities},
        {"local-to-global colouring", local_to_global},
        {"girth orientation", girth_orientation},
        {"domination fundamentals", domination_fundamentals},
        {"determinism and format", determinism},
        {"negative trace fixtures", negative_fixtures},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.note << ", " << static_cast<int>(seconds_since(start)) << "s)" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
