#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tourcolor/chromatic.hpp"
#include "tourcolor/domination.hpp"
#include "tourcolor/tournament.hpp"

namespace tourcolor {

using BigInt = boost::multiprecision::cpp_int;

/// (K, l) for level k: every tournament with domination number >= K has a
/// subtournament on at most l vertices with dichromatic number >= k.
///
///     (K_1, l_1) = (1, 1)     (K_2, l_2) = (2, 3)
///     K_{k+1} = k (K_k + l_k + 1) + K_k
///     l_{k+1} = l_k + k (K_k + l_k + 1) + l_k * C(k (K_k + l_k + 1), K_k + l_k + 1)
struct TheoremConstants {
    unsigned k = 0;
    BigInt K;
    BigInt l;

    /// Size of W at the next level, k (K + l + 1).
    BigInt w_size() const { return BigInt(k) * (K + l + 1); }
    /// Size of each subset S of W, K + l + 1.
    BigInt s_size() const { return K + l + 1; }
};

/// Exact values. Throws ConstantsTooLarge once a binomial argument leaves
/// machine range (from k = 5 on, l_k has more than 10^2000 digits).
TheoremConstants theorem_constants(unsigned k);
TheoremConstants next_constants(const TheoremConstants &c);

std::optional<std::size_t> to_size(const BigInt &v);

struct LocalGlobalOptions {
    ChromaticOptions chromatic;
    DominationOptions domination;

    static LocalGlobalOptions from_environment();
};

struct LocalityResult {
    std::size_t t = 0;
    /// Dichromatic number of each out-neighbourhood.
    std::vector<std::size_t> per_vertex;
};

/// Smallest t with T t-local: max over v of chi(N+(v)).
LocalityResult locality(const Tournament &t, const LocalGlobalOptions &options = {});

enum class DominatingMode { Exact, Greedy };

struct LocalColoringReport {
    std::size_t t = 0;
    DominatingMode mode = DominatingMode::Exact;
    VertexSet dominators;
    Coloring coloring;
    /// (t + 1) |D|.
    std::size_t bound = 0;
    /// chi(N+[v]) for each v in D, ascending v.
    std::vector<std::size_t> closed_neighborhood_chi;
};

/// Colours each N+[v], v in D, optimally with fresh colours; a vertex covered
/// by several dominators keeps the colour from the lowest one. D is a minimum
/// dominating set when the exact solver reaches, greedy otherwise.
LocalColoringReport color_t_local(const Tournament &t, const LocalGlobalOptions &options = {});

// Extraction of a bounded subtournament with dichromatic number >= k from a
// tournament with large domination number, by induction on k.

template <class T>
class Boxed {
public:
    Boxed() = default;
    Boxed(T value) : p_(std::make_unique<T>(std::move(value))) {}
    Boxed(const Boxed &o) : p_(o.p_ ? std::make_unique<T>(*o.p_) : nullptr) {}
    Boxed(Boxed &&) noexcept = default;
    Boxed &operator=(const Boxed &o)
    {
        if (this != &o)
            p_ = o.p_ ? std::make_unique<T>(*o.p_) : nullptr;
        return *this;
    }
    Boxed &operator=(Boxed &&) noexcept = default;
    ~Boxed() = default;

    explicit operator bool() const { return p_ != nullptr; }
    T &operator*() { return *p_; }
    const T &operator*() const { return *p_; }
    T *operator->() { return p_.get(); }
    const T *operator->() const { return p_.get(); }

private:
    std::unique_ptr<T> p_;
};

struct ExtractionTrace;

struct ExtractionBranch {
    VertexSet s;
    /// Claimed lower bound on gamma(N+(S)) inside the level's scope.
    std::size_t gamma_claim = 0;
    /// Set in permissive mode when the claim failed; no sub-trace then.
    bool aborted = false;
    /// Extraction inside N' = N+(S) \ N+(A); its result is A_S.
    Boxed<ExtractionTrace> sub;
};

struct ExtractionTrace {
    unsigned k = 0;
    /// Vertex set of the host this level works in.
    VertexSet scope;
    /// Claimed lower bound on gamma(T[scope]); |D| on levels k >= 3.
    std::size_t gamma_claim = 0;
    /// D and W (levels k >= 3).
    VertexSet dominating;
    VertexSet w;
    /// Extraction inside scope \ N+[W]; its result is A (levels k >= 3).
    Boxed<ExtractionTrace> base;
    std::vector<ExtractionBranch> branches;
    /// A' (a vertex for k = 1, a directed triangle for k = 2).
    VertexSet result;
};

struct ExtractionOptions {
    LocalGlobalOptions solvers;
    /// Use a greedy D and check gamma(N+(S)) per S instead of relying on the
    /// minimality of D; failing S are recorded as aborted. Heuristic.
    bool permissive = false;
};

struct ExtractionResult {
    VertexSet a_prime;
    ExtractionTrace trace;
    /// chi(A') >= k checked by the exact solver; nullopt when |A'| is beyond
    /// its reach (the trace is then the certificate).
    std::optional<bool> chi_verified;
};

/// Throws GammaTooSmall when gamma(T) < K_k and ExactDominationInfeasible when
/// a level needs a minimum dominating set beyond the exact solver.
ExtractionResult extract_high_chromatic(const Tournament &t, unsigned k, const ExtractionOptions &options = {});

// Steps of one inductive level, exposed for testing.

/// The `size` lowest members of D.
VertexSet select_w(const VertexSet &d, std::size_t size);
/// scope \ N+[W], neighbourhoods taken inside scope.
VertexSet base_scope(const Tournament &t, const VertexSet &scope, const VertexSet &w);
/// (N+(S) \ N+(A)) n scope.
VertexSet branch_scope(const Tournament &t, const VertexSet &scope, const VertexSet &s, const VertexSet &a);
/// All `size`-subsets of W in lexicographic order of sorted members.
std::vector<VertexSet> w_subsets(const VertexSet &w, std::size_t size);
/// A u W u (union of A_S over non-aborted branches).
VertexSet assemble(const ExtractionTrace &level);

enum class ViolationKind {
    Scope,
    GammaClaim,
    DominatingSet,
    WNotInD,
    SizeW,
    BranchFamily,
    SizeA,
    ANotInBase,
    ArcAToW,
    BranchGamma,
    ASOutsideOutS,
    ASIntersectsOutA,
    ArcASToA,
    SizeAS,
    Aborted,
    Assembly,
    SizeAPrime,
    NotTriangle,
    SizeResult,
    Chromatic,
};

const char *to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// Position in the trace tree, e.g. "root/S#3/A_S".
    std::string where;
    std::string detail;
};

struct TraceValidation {
    std::vector<Violation> violations;
    /// Claims that could not be checked exactly at this size.
    std::vector<std::string> unverifiable;

    bool valid() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
};

/// Re-checks every property the inductive argument asserts, recomputing
/// child scopes instead of trusting them. Throws MalformedTrace when the tree
/// shape does not match k.
TraceValidation validate_trace(const Tournament &t, unsigned k, const ExtractionTrace &trace,
                               const ExtractionOptions &options = {});

/// Given a colouring of A' with fewer than k colours (where k is the trace's
/// level), follows the inductive argument to a monochromatic directed
/// triangle (u, v, w): u in A, v in S, w in A_S with u->v->w->u. nullopt if
/// the colouring uses k or more colours on A', or leaves A' partly uncoloured.
std::optional<std::array<std::size_t, 3>> monochromatic_triangle(const Tournament &t, const ExtractionTrace &trace,
                                                                 const Coloring &coloring);

} // namespace tourcolor
