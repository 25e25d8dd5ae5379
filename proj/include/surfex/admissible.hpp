#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surfex/hypercore.hpp"

namespace surfex {

struct AdmissParams {
    double p = 0.5;
    double eps = 0.5;
    int k = 1;
    int r = 1;

    void validate() const;  // InvalidArgument on out-of-range values
};

enum class ProbMethod { Exact, MonteCarlo, Auto };

struct ProbMode {
    ProbMethod method = ProbMethod::Exact;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    std::size_t exact_threshold = 16;  // vertices, endpoints included
    unsigned threads = 1;
};

// Internally vertex-disjoint x-y paths other than the edge xy, capped at k.
// When `alive` is given, only vertices flagged there (plus x and y) are used.
int menger_count(const SimpleGraph& g, Vertex x, Vertex y, int k, const std::vector<char>* alive = nullptr);

// A minimum x-y vertex separator in g - xy; empty when x and y are not
// connected outside the edge. Its size equals menger_count without a cap.
std::vector<Vertex> min_vertex_separator(const SimpleGraph& g, Vertex x, Vertex y,
                                         const std::vector<char>* alive = nullptr);

// Success counts of the event "menger_count >= k" over every subset of the
// vertices that can lie on an x-y path, grouped by subset size. Lets one
// enumeration answer every (p, k <= k_max) query.
struct AdmissProfile {
    std::size_t free_vertices = 0;
    std::vector<std::vector<std::uint64_t>> hits;  // hits[k-1][j]

    double probability(double p, int k) const;
};

AdmissProfile admissibility_profile(const SimpleGraph& g, Vertex x, Vertex y, int k_max,
                                    std::size_t exact_threshold = 16);

struct EdgeProbability {
    VertexPair edge{};
    double prob = 0.0;
    double stderr_ = 0.0;
    bool exact = false;
    std::size_t trials = 0;
    bool verdict = false;
};

EdgeProbability admissible_exact(const SimpleGraph& g, VertexPair edge, const AdmissParams& params,
                                 std::size_t exact_threshold = 16);
EdgeProbability admissible_mc(const SimpleGraph& g, VertexPair edge, const AdmissParams& params,
                              std::size_t trials, std::uint64_t seed);
EdgeProbability admissible(const SimpleGraph& g, VertexPair edge, const AdmissParams& params, const ProbMode& mode);

struct AdmissReport {
    AdmissParams params;
    bool exact = false;
    std::vector<EdgeProbability> records;  // sorted by edge
    std::size_t nonadmissible = 0;
    double bound = 0.0;  // 2kn / (p^2 eps)
    bool bound_holds = true;
};

AdmissReport count_nonadmissible(const SimpleGraph& g, const AdmissParams& params, const ProbMode& mode);

// Vertices inducing a (k+1)-connected subgraph, or nothing if none exists.
std::optional<std::vector<Vertex>> mader_subgraph(const SimpleGraph& g, int k);

// |S| >= kappa + 1 and g[S] stays connected after deleting any kappa - 1 vertices.
bool is_k_connected(const SimpleGraph& g, const std::vector<Vertex>& vertices, int kappa);

// Common neighborhood of the r vertices of largest degree (ties: smaller id).
std::vector<Vertex> common_core(const SimpleGraph& g, int r);

// The r hubs chosen by common_core.
std::vector<Vertex> top_degree_vertices(const SimpleGraph& g, int r);

struct PairVerdict {
    bool admissible = false;
    EdgeProbability detail;
};

// (xyz, x'yz) is admissible iff yz is admissible in the colink of x and x'.
PairVerdict pair_admissible(const Hypergraph3& h, const Edge3& e, const Edge3& f, const AdmissParams& params,
                            const ProbMode& mode);

struct SemiVerdict {
    bool semi_admissible = false;
    std::vector<Edge3> witnesses;  // at most r
};

SemiVerdict pair_semi_admissible(const Hypergraph3& h, const Edge3& e, const Edge3& f, const AdmissParams& params,
                                 const ProbMode& mode);

struct FSelection {
    std::vector<Edge3> F;
    std::size_t removed = 0;
    std::size_t pairs_examined = 0;
    bool hypothesis_met = false;   // |E| >= (12r/p) sqrt(k/eps) n^{5/2}
    bool half_retained = false;    // |F| >= |E| / 2
    bool verified = false;         // every neighboring pair inside F rechecked
    std::size_t pairs_verified = 0;
};

// Per pair {y,z}: build the admissible-pair graph on N(y,z), drop the smaller
// of (N minus its common core) and a cover of the non-semi-admissible pairs.
FSelection select_semi_admissible_F(const Hypergraph3& h, const AdmissParams& params, const ProbMode& mode);

// Decides whether some family member through e survives in the sub-hypergraph.
using FamilyOracle = std::function<bool(const Hypergraph3& sub, const Edge3& e)>;

struct RichRecord {
    Edge3 edge;
    double prob = 0.0;
    double stderr_ = 0.0;
    bool exact = false;
    bool rich = false;
};

// e is rich iff P(oracle(H[U], e) | e in U) > 1 - eps.
std::vector<RichRecord> rich_edges(const Hypergraph3& h, const FamilyOracle& oracle, double p, double eps,
                                   const ProbMode& mode);

RichRecord rich_edge(const Hypergraph3& h, const Edge3& e, const FamilyOracle& oracle, double p, double eps,
                     const ProbMode& mode);

}  // namespace surfex
