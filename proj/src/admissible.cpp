#include "surfex/admissible.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>

#include "parallel.hpp"
#include "surfex/random.hpp"

namespace surfex {

void AdmissParams::validate() const {
    if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "p must lie in (0, 1]");
    if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
    if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
    if (r < 1) fail(ErrorCode::InvalidArgument, "r must be positive");
}

namespace {

constexpr double kTol = 1e-12;

// Unit vertex capacities via in/out splitting: in(v) = 2v, out(v) = 2v + 1.
// The arc between x and y is left out, so only longer paths count.
class SplitFlow {
public:
    SplitFlow(const SimpleGraph& g, Vertex x, Vertex y) : n_(g.n_vertices()), x_(x), y_(y) {
        adj_.resize(2 * n_);
        const int big = static_cast<int>(n_) + 1;
        for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, (v == x || v == y) ? big : 1);
        for (auto [u, v] : g.edges()) {
            if ((u == x && v == y) || (u == y && v == x)) continue;
            add_arc(2 * u + 1, 2 * v, big);
            add_arc(2 * v + 1, 2 * u, big);
        }
    }

    int run(int cap, const std::vector<char>* alive) {
        alive_ = alive;
        std::fill(flow_.begin(), flow_.end(), 0);
        int total = 0;
        while (total < cap && augment()) ++total;
        return total;
    }

    // Vertices whose split arc crosses the residual cut of the last run.
    std::vector<Vertex> separator() const {
        std::vector<char> seen = reachable();
        std::vector<Vertex> cut;
        for (Vertex v = 0; v < n_; ++v) {
            if (v != x_ && v != y_ && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
        }
        return cut;
    }

private:
    void add_arc(std::uint32_t from, std::uint32_t to, int cap) {
        adj_[from].push_back(static_cast<std::uint32_t>(to_.size()));
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[to].push_back(static_cast<std::uint32_t>(to_.size()));
        to_.push_back(from);
        cap_.push_back(0);
        flow_.push_back(0);
        flow_.push_back(0);
    }

    bool usable(std::uint32_t node) const {
        Vertex v = node / 2;
        return v == x_ || v == y_ || alive_ == nullptr || (*alive_)[v];
    }

    std::vector<char> reachable() const {
        std::vector<char> seen(2 * n_, 0);
        std::vector<std::uint32_t> stack{2 * x_ + 1};
        seen[2 * x_ + 1] = 1;
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            for (std::uint32_t a : adj_[u]) {
                std::uint32_t w = to_[a];
                if (!seen[w] && cap_[a] - flow_[a] > 0 && usable(w)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

    bool augment() {
        const std::uint32_t source = 2 * x_ + 1, sink = 2 * y_;
        std::vector<std::int32_t> via(2 * n_, -1);
        std::queue<std::uint32_t> queue;
        queue.push(source);
        via[source] = -2;
        while (!queue.empty() && via[sink] == -1) {
            std::uint32_t u = queue.front();
            queue.pop();
            for (std::uint32_t a : adj_[u]) {
                std::uint32_t w = to_[a];
                if (via[w] == -1 && cap_[a] - flow_[a] > 0 && usable(w)) {
                    via[w] = static_cast<std::int32_t>(a);
                    queue.push(w);
                }
            }
        }
        if (via[sink] == -1) return false;
        for (std::uint32_t node = sink; node != source;) {
            std::uint32_t a = static_cast<std::uint32_t>(via[node]);
            flow_[a] += 1;
            flow_[a ^ 1] -= 1;
            node = to_[a ^ 1];
        }
        return true;
    }

    std::size_t n_;
    Vertex x_, y_;
    const std::vector<char>* alive_ = nullptr;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> to_;
    std::vector<int> cap_;
    std::vector<int> flow_;
};

void check_pair(const SimpleGraph& g, Vertex x, Vertex y) {
    if (x == y) fail(ErrorCode::SameVertex, "endpoints must differ");
    if (x >= g.n_vertices() || y >= g.n_vertices()) fail(ErrorCode::VertexOutOfRange, "endpoint out of range");
}

// Vertices other than x, y in x's component of g - xy. Nothing else can lie
// on an x-y path, so the rest never influences the event.
std::vector<Vertex> relevant_vertices(const SimpleGraph& g, Vertex x, Vertex y) {
    std::vector<char> seen(g.n_vertices(), 0);
    std::vector<Vertex> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if ((u == x && w == y) || (u == y && w == x) || seen[w]) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    std::vector<Vertex> out;
    if (!seen[y]) return out;
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        if (seen[v] && v != x && v != y) out.push_back(v);
    }
    return out;
}

double binomial_weight(double p, std::size_t j, std::size_t m) {
    return std::pow(p, static_cast<double>(j)) * std::pow(1.0 - p, static_cast<double>(m - j));
}

std::uint64_t pair_key(Vertex x, Vertex y) {
    return (static_cast<std::uint64_t>(std::min(x, y)) << 32) | std::max(x, y);
}

}  // namespace

int menger_count(const SimpleGraph& g, Vertex x, Vertex y, int k, const std::vector<char>* alive) {
    check_pair(g, x, y);
    if (k <= 0) return 0;
    SplitFlow flow(g, x, y);
    return flow.run(k, alive);
}

std::vector<Vertex> min_vertex_separator(const SimpleGraph& g, Vertex x, Vertex y, const std::vector<char>* alive) {
    check_pair(g, x, y);
    SplitFlow flow(g, x, y);
    flow.run(static_cast<int>(g.n_vertices()) + 1, alive);
    return flow.separator();
}

double AdmissProfile::probability(double p, int k) const {
    if (k < 1) return 1.0;
    if (static_cast<std::size_t>(k) > hits.size()) fail(ErrorCode::InvalidArgument, "profile built for smaller k");
    double total = 0.0;
    const auto& row = hits[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = 0; j <= free_vertices; ++j) {
        if (row[j] != 0) total += static_cast<double>(row[j]) * binomial_weight(p, j, free_vertices);
    }
    return std::min(1.0, total);
}

AdmissProfile admissibility_profile(const SimpleGraph& g, Vertex x, Vertex y, int k_max,
                                    std::size_t exact_threshold) {
    check_pair(g, x, y);
    if (k_max < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
    std::vector<Vertex> free = relevant_vertices(g, x, y);
    if (free.size() + 2 > exact_threshold || free.size() > 30) {
        fail(ErrorCode::TooLargeForExact, std::to_string(free.size()) + " free vertices exceed the exact threshold " +
                                              std::to_string(exact_threshold));
    }
    AdmissProfile profile;
    profile.free_vertices = free.size();
    profile.hits.assign(static_cast<std::size_t>(k_max), std::vector<std::uint64_t>(free.size() + 1, 0));
    SplitFlow flow(g, x, y);
    std::vector<char> alive(g.n_vertices(), 0);
    const std::uint64_t subsets = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        for (std::size_t i = 0; i < free.size(); ++i) alive[free[i]] = static_cast<char>((mask >> i) & 1);
        int got = flow.run(k_max, &alive);
        std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        for (int kk = 0; kk < got; ++kk) ++profile.hits[static_cast<std::size_t>(kk)][size];
    }
    return profile;
}

EdgeProbability admissible_exact(const SimpleGraph& g, VertexPair edge, const AdmissParams& params,
                                 std::size_t exact_threshold) {
    params.validate();
    AdmissProfile profile = admissibility_profile(g, edge.first, edge.second, params.k, exact_threshold);
    EdgeProbability out;
    out.edge = make_pair_sorted(edge.first, edge.second);
    out.prob = profile.probability(params.p, params.k);
    out.exact = true;
    out.verdict = out.prob >= 1.0 - params.eps - kTol;
    return out;
}

EdgeProbability admissible_mc(const SimpleGraph& g, VertexPair edge, const AdmissParams& params, std::size_t trials,
                              std::uint64_t seed) {
    params.validate();
    if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be positive");
    auto [x, y] = edge;
    check_pair(g, x, y);
    std::vector<Vertex> free = relevant_vertices(g, x, y);
    SplitFlow flow(g, x, y);
    std::vector<char> alive(g.n_vertices(), 0);
    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        KeyedRng rng{seed, pair_key(x, y), t};
        for (Vertex v : free) alive[v] = static_cast<char>(rng.bernoulli(params.p));
        if (!free.empty() && flow.run(params.k, &alive) >= params.k) ++successes;
    }
    EdgeProbability out;
    out.edge = make_pair_sorted(x, y);
    out.trials = trials;
    out.prob = static_cast<double>(successes) / static_cast<double>(trials);
    out.stderr_ = std::sqrt(out.prob * (1.0 - out.prob) / static_cast<double>(trials));
    out.verdict = out.prob >= 1.0 - params.eps - kTol;
    return out;
}

EdgeProbability admissible(const SimpleGraph& g, VertexPair edge, const AdmissParams& params, const ProbMode& mode) {
    switch (mode.method) {
        case ProbMethod::Exact:
            return admissible_exact(g, edge, params, mode.exact_threshold);
        case ProbMethod::MonteCarlo:
            return admissible_mc(g, edge, params, mode.trials, mode.seed);
        case ProbMethod::Auto:
            check_pair(g, edge.first, edge.second);
            if (relevant_vertices(g, edge.first, edge.second).size() + 2 <= mode.exact_threshold) {
                return admissible_exact(g, edge, params, mode.exact_threshold);
            }
            return admissible_mc(g, edge, params, mode.trials, mode.seed);
    }
    fail(ErrorCode::Internal, "unknown method");
}

AdmissReport count_nonadmissible(const SimpleGraph& g, const AdmissParams& params, const ProbMode& mode) {
    params.validate();
    AdmissReport report;
    report.params = params;
    report.exact = mode.method == ProbMethod::Exact;
    auto edges = g.edges();
    report.records.resize(edges.size());
    detail::parallel_for(edges.size(), mode.threads,
                         [&](std::size_t i) { report.records[i] = admissible(g, edges[i], params, mode); });
    bool all_exact = true;
    for (const auto& rec : report.records) {
        if (!rec.verdict) ++report.nonadmissible;
        all_exact = all_exact && rec.exact;
    }
    report.exact = all_exact;
    report.bound = 2.0 * params.k * static_cast<double>(g.n_vertices()) / (params.p * params.p * params.eps);
    report.bound_holds = static_cast<double>(report.nonadmissible) <= report.bound;
    return report;
}

// ---------------------------------------------------------------------------
// Highly connected subgraphs

namespace {

std::size_t alive_degree(const SimpleGraph& g, const std::vector<char>& alive, Vertex v) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w] ? 1 : 0;
    return d;
}

std::vector<std::vector<Vertex>> alive_components(const SimpleGraph& g, const std::vector<char>& alive) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.n_vertices(), 0);
    for (Vertex s = 0; s < g.n_vertices(); ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : g.neighbors(comp[i])) {
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

double density(const SimpleGraph& g, const std::vector<Vertex>& verts) {
    std::vector<char> in(g.n_vertices(), 0);
    for (Vertex v : verts) in[v] = 1;
    std::size_t twice = 0;
    for (Vertex v : verts) twice += alive_degree(g, in, v);
    return verts.empty() ? 0.0 : static_cast<double>(twice) / static_cast<double>(verts.size());
}

std::optional<std::vector<Vertex>> mader_search(const SimpleGraph& g, std::vector<char> alive, int k) {
    const std::size_t need = static_cast<std::size_t>(k) + 1;
    // Vertices of degree <= k cannot belong to a (k+1)-connected subgraph.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.n_vertices(); ++v) {
            if (alive[v] && alive_degree(g, alive, v) < need) {
                alive[v] = 0;
                changed = true;
            }
        }
    }
    auto comps = alive_components(g, alive);
    std::stable_sort(comps.begin(), comps.end(),
                     [&](const auto& a, const auto& b) { return density(g, a) > density(g, b); });
    for (const auto& comp : comps) {
        if (comp.size() < need + 1) continue;
        std::vector<char> inside(g.n_vertices(), 0);
        for (Vertex v : comp) inside[v] = 1;
        std::vector<Vertex> cut;
        bool split = false;
        for (std::size_t i = 0; i < comp.size() && !split; ++i) {
            for (std::size_t j = i + 1; j < comp.size() && !split; ++j) {
                Vertex u = comp[i], v = comp[j];
                if (g.has_edge(u, v)) continue;
                if (menger_count(g, u, v, k + 1, &inside) <= k) {
                    cut = min_vertex_separator(g, u, v, &inside);
                    split = true;
                }
            }
        }
        if (!split) return comp;
        // Any (k+1)-connected subgraph of comp survives the removal of the
        // separator inside a single piece, so recursing on pieces is complete.
        std::vector<char> rest = inside;
        for (Vertex c : cut) rest[c] = 0;
        auto pieces = alive_components(g, rest);
        std::vector<std::vector<Vertex>> candidates;
        for (auto& piece : pieces) {
            piece.insert(piece.end(), cut.begin(), cut.end());
            std::sort(piece.begin(), piece.end());
            candidates.push_back(std::move(piece));
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](const auto& a, const auto& b) { return density(g, a) > density(g, b); });
        for (const auto& cand : candidates) {
            std::vector<char> mask(g.n_vertices(), 0);
            for (Vertex v : cand) mask[v] = 1;
            if (auto found = mader_search(g, std::move(mask), k)) return found;
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_k_connected(const SimpleGraph& g, const std::vector<Vertex>& vertices, int kappa) {
    if (kappa < 1) return !vertices.empty();
    if (vertices.size() < static_cast<std::size_t>(kappa) + 1) return false;
    std::vector<char> inside(g.n_vertices(), 0);
    for (Vertex v : vertices) inside[v] = 1;
    if (alive_components(g, inside).size() != 1) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            Vertex u = vertices[i], v = vertices[j];
            int through = menger_count(g, u, v, kappa, &inside) + (g.has_edge(u, v) ? 1 : 0);
            if (through < kappa) return false;
        }
    }
    return true;
}

std::optional<std::vector<Vertex>> mader_subgraph(const SimpleGraph& g, int k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
    auto found = mader_search(g, std::vector<char>(g.n_vertices(), 1), k);
    if (found && !is_k_connected(g, *found, k + 1)) {
        fail(ErrorCode::Internal, "connectivity certificate failed verification");
    }
    return found;
}

std::vector<Vertex> top_degree_vertices(const SimpleGraph& g, int r) {
    std::vector<Vertex> order(g.n_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(std::max(r, 0))));
    return order;
}

std::vector<Vertex> common_core(const SimpleGraph& g, int r) {
    if (r < 1) fail(ErrorCode::InvalidArgument, "r must be positive");
    std::vector<Vertex> hubs = top_degree_vertices(g, r);
    std::vector<Vertex> core;
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        bool all = true;
        for (Vertex h : hubs) {
            if (!g.has_edge(v, h)) {
                all = false;
                break;
            }
        }
        if (all) core.push_back(v);
    }
    return core;
}

// ---------------------------------------------------------------------------
// Pairs of neighboring hyperedges

namespace {

struct PairShape {
    Vertex x, x2, y, z;
};

PairShape shape_of(const Edge3& e, const Edge3& f) {
    if (!neighboring(e, f)) fail(ErrorCode::NotNeighboring, "{" + to_string(e) + "} and {" + to_string(f) + "}");
    std::vector<Vertex> common;
    for (Vertex v : e.v) {
        if (f.contains(v)) common.push_back(v);
    }
    PairShape s{};
    s.y = common[0];
    s.z = common[1];
    s.x = e.other(s.y, s.z);
    s.x2 = f.other(s.y, s.z);
    return s;
}

ProbMode keyed_for(const ProbMode& mode, Vertex x, Vertex x2) {
    ProbMode m = mode;
    m.seed = mix_key({mode.seed, pair_key(x, x2)});
    return m;
}

bool apex_pair_admissible(const Hypergraph3& h, Vertex x, Vertex x2, Vertex y, Vertex z, const AdmissParams& params,
                          const ProbMode& mode, EdgeProbability* detail = nullptr) {
    SimpleGraph colink = colink_graph(h, x, x2);
    EdgeProbability ep = admissible(colink, {y, z}, params, keyed_for(mode, x, x2));
    if (detail) *detail = ep;
    return ep.verdict;
}

}  // namespace

PairVerdict pair_admissible(const Hypergraph3& h, const Edge3& e, const Edge3& f, const AdmissParams& params,
                            const ProbMode& mode) {
    params.validate();
    PairShape s = shape_of(e, f);
    PairVerdict out;
    out.admissible = apex_pair_admissible(h, s.x, s.x2, s.y, s.z, params, mode, &out.detail);
    return out;
}

SemiVerdict pair_semi_admissible(const Hypergraph3& h, const Edge3& e, const Edge3& f, const AdmissParams& params,
                                 const ProbMode& mode) {
    params.validate();
    PairShape s = shape_of(e, f);
    SemiVerdict out;
    for (Vertex w : h.pair_neighborhood(s.y, s.z)) {
        if (w == s.x || w == s.x2) continue;
        if (apex_pair_admissible(h, s.x, w, s.y, s.z, params, mode) &&
            apex_pair_admissible(h, w, s.x2, s.y, s.z, params, mode)) {
            out.witnesses.push_back(Edge3::make(w, s.y, s.z));
            if (out.witnesses.size() >= static_cast<std::size_t>(params.r)) break;
        }
    }
    out.semi_admissible = out.witnesses.size() >= static_cast<std::size_t>(params.r);
    return out;
}

namespace {

std::vector<std::size_t> greedy_cover(std::size_t d, const std::vector<std::vector<char>>& bad) {
    std::vector<std::vector<char>> left = bad;
    std::vector<std::size_t> cover;
    while (true) {
        std::size_t best = d, best_deg = 0;
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t deg = 0;
            for (std::size_t j = 0; j < d; ++j) deg += left[i][j] ? 1 : 0;
            if (deg > best_deg) {
                best_deg = deg;
                best = i;
            }
        }
        if (best == d) break;
        cover.push_back(best);
        for (std::size_t j = 0; j < d; ++j) left[best][j] = left[j][best] = 0;
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace

FSelection select_semi_admissible_F(const Hypergraph3& h, const AdmissParams& params, const ProbMode& mode) {
    params.validate();
    FSelection out;
    const double n = static_cast<double>(h.n_vertices());
    const double threshold = 12.0 * params.r / params.p * std::sqrt(params.k / params.eps) * std::pow(n, 2.5);
    out.hypothesis_met = h.edge_count() > 0 && static_cast<double>(h.edge_count()) >= threshold;

    std::vector<VertexPair> pairs;
    for (const Edge3& e : h.edges()) {
        pairs.emplace_back(e[0], e[1]);
        pairs.emplace_back(e[0], e[2]);
        pairs.emplace_back(e[1], e[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<std::vector<Edge3>> removed_per_pair(pairs.size());
    std::vector<std::size_t> examined(pairs.size(), 0);
    detail::parallel_for(pairs.size(), mode.threads, [&](std::size_t idx) {
        auto [y, z] = pairs[idx];
        std::vector<Vertex> nbhd = h.pair_neighborhood(y, z);
        const std::size_t d = nbhd.size();
        if (d < 2) return;
        std::vector<std::vector<char>> adm(d, std::vector<char>(d, 0));
        std::vector<VertexPair> adm_edges;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                bool ok = apex_pair_admissible(h, nbhd[i], nbhd[j], y, z, params, mode);
                adm[i][j] = adm[j][i] = static_cast<char>(ok);
                if (ok) adm_edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
                ++examined[idx];
            }
        }
        std::vector<std::vector<char>> not_semi(d, std::vector<char>(d, 0));
        bool any_bad = false;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                std::size_t via = 0;
                for (std::size_t w = 0; w < d; ++w) {
                    if (w != i && w != j && adm[i][w] && adm[w][j]) ++via;
                }
                if (via < static_cast<std::size_t>(params.r)) {
                    not_semi[i][j] = not_semi[j][i] = 1;
                    any_bad = true;
                }
            }
        }
        if (!any_bad) return;
        SimpleGraph a(d, adm_edges);
        std::vector<Vertex> core = common_core(a, params.r);
        std::vector<std::size_t> outside_core;
        for (std::size_t i = 0; i < d; ++i) {
            if (!std::binary_search(core.begin(), core.end(), static_cast<Vertex>(i))) outside_core.push_back(i);
        }
        std::vector<std::size_t> cover = greedy_cover(d, not_semi);
        const auto& drop = outside_core.size() <= cover.size() ? outside_core : cover;
        for (std::size_t i : drop) removed_per_pair[idx].push_back(Edge3::make(nbhd[i], y, z));
    });

    std::vector<Edge3> removed;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        removed.insert(removed.end(), removed_per_pair[i].begin(), removed_per_pair[i].end());
        out.pairs_examined += examined[i];
    }
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    for (const Edge3& e : h.edges()) {
        if (!std::binary_search(removed.begin(), removed.end(), e)) out.F.push_back(e);
    }
    out.removed = removed.size();
    out.half_retained = 2 * out.F.size() >= h.edge_count();

    // Recheck neighboring pairs inside F: all of them in exact mode, a keyed
    // sample of at most 64 otherwise.
    Hypergraph3 f_graph(h.n_vertices(), out.F);
    std::vector<std::pair<Edge3, Edge3>> inside;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [y, z] = pairs[i];
        std::vector<Vertex> nb = f_graph.pair_neighborhood(y, z);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                inside.emplace_back(Edge3::make(nb[a], y, z), Edge3::make(nb[b], y, z));
    }
    if (mode.method != ProbMethod::Exact && inside.size() > 64) {
        KeyedRng rng{mode.seed, 0x5E1EC7ull};
        rng.shuffle(inside);
        inside.resize(64);
    }
    std::vector<char> ok(inside.size(), 0);
    detail::parallel_for(inside.size(), mode.threads, [&](std::size_t i) {
        ok[i] = static_cast<char>(pair_semi_admissible(h, inside[i].first, inside[i].second, params, mode).semi_admissible);
    });
    out.pairs_verified = inside.size();
    out.verified = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Rich edges

RichRecord rich_edge(const Hypergraph3& h, const Edge3& e, const FamilyOracle& oracle, double p, double eps,
                     const ProbMode& mode) {
    if (!(p > 0.0 && p <= 1.0) || !(eps > 0.0 && eps <= 1.0)) {
        fail(ErrorCode::InvalidArgument, "p and eps must lie in (0, 1]");
    }
    std::vector<Vertex> free;
    for (Vertex v : h.non_isolated_vertices()) {
        if (!e.contains(v)) free.push_back(v);
    }
    bool exact = mode.method == ProbMethod::Exact ||
                 (mode.method == ProbMethod::Auto && free.size() + 3 <= mode.exact_threshold);
    if (exact && (free.size() + 3 > mode.exact_threshold || free.size() > 30)) {
        fail(ErrorCode::TooLargeForExact, std::to_string(free.size() + 3) + " vertices exceed the exact threshold");
    }
    std::vector<char> keep(h.n_vertices(), 0);
    for (Vertex v : e.v) keep[v] = 1;
    RichRecord rec;
    rec.edge = e;
    rec.exact = exact;
    if (exact) {
        const std::size_t m = free.size();
        std::vector<std::uint64_t> hits(m + 1, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            for (std::size_t i = 0; i < m; ++i) keep[free[i]] = static_cast<char>((mask >> i) & 1);
            if (oracle(induced(h, keep), e)) ++hits[static_cast<std::size_t>(std::popcount(mask))];
        }
        for (std::size_t j = 0; j <= m; ++j) {
            if (hits[j] != 0) rec.prob += static_cast<double>(hits[j]) * binomial_weight(p, j, m);
        }
        rec.prob = std::min(1.0, rec.prob);
    } else {
        if (mode.trials == 0) fail(ErrorCode::InvalidArgument, "trials must be positive");
        std::size_t successes = 0;
        const std::uint64_t ekey = mix_key({e[0], e[1], e[2]});
        for (std::size_t t = 0; t < mode.trials; ++t) {
            KeyedRng rng{mode.seed, ekey, t};
            for (Vertex v : free) keep[v] = static_cast<char>(rng.bernoulli(p));
            if (oracle(induced(h, keep), e)) ++successes;
        }
        rec.prob = static_cast<double>(successes) / static_cast<double>(mode.trials);
        rec.stderr_ = std::sqrt(rec.prob * (1.0 - rec.prob) / static_cast<double>(mode.trials));
    }
    rec.rich = rec.prob > 1.0 - eps + kTol;
    return rec;
}

std::vector<RichRecord> rich_edges(const Hypergraph3& h, const FamilyOracle& oracle, double p, double eps,
                                   const ProbMode& mode) {
    std::vector<RichRecord> out(h.edge_count());
    detail::parallel_for(h.edge_count(), mode.threads,
                         [&](std::size_t i) { out[i] = rich_edge(h, h.edge(i), oracle, p, eps, mode); });
    return out;
}

}  // namespace surfex
