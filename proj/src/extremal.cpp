#include "surfex/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "surfex/enumerate.hpp"
#include "surfex/error.hpp"
#include "surfex/random.hpp"

namespace surfex {

namespace {

std::vector<Edge3> sorted_edges(const Hypergraph3& h) {
    std::vector<Edge3> e(h.edges().begin(), h.edges().end());
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

LowerBoundResult lower_bound_generate(std::size_t n, const SurfaceClass& target, double c0, std::size_t v_max,
                                      std::uint64_t seed, unsigned threads) {
    if (n < 4) fail(ErrorCode::InvalidArgument, "n must be at least 4");
    if (!(c0 > 0)) fail(ErrorCode::InvalidArgument, "c0 must be positive");
    if (!target.is_surface()) fail(ErrorCode::InvalidArgument, "target must be a closed surface");

    LowerBoundReport report;
    report.n = n;
    report.c0 = c0;
    report.p_used = std::min(1.0, c0 / std::sqrt(static_cast<double>(n)));
    report.target = target;
    report.v_max = v_max;

    KeyedRng rng{seed, 0x10b0u};
    std::vector<Edge3> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (rng.bernoulli(report.p_used)) edges.push_back(Edge3::make(a, b, c));
    report.edges_before = edges.size();

    std::set<Edge3> alive(edges.begin(), edges.end());
    Hypergraph3 h(n, edges);
    while (true) {
        auto copies = count_sub_triangulations(h, target, v_max, 10, threads);
        if (copies.empty()) break;
        ++report.rounds;
        report.triangulations_found += copies.size();
        std::vector<std::vector<Edge3>> canon;
        for (const Hypergraph3& s : copies) {
            if (!face_count_identity(s)) report.face_identity_holds = false;
            canon.push_back(sorted_edges(s));
        }
        std::sort(canon.begin(), canon.end());
        for (const auto& copy : canon) {
            bool intact = std::all_of(copy.begin(), copy.end(), [&](const Edge3& e) { return alive.count(e) != 0; });
            if (!intact) continue;  // an earlier deletion already broke it
            alive.erase(copy.front());
            ++report.edges_deleted;
        }
        h = Hypergraph3(n, std::vector<Edge3>(alive.begin(), alive.end()));
    }
    report.edges_after = h.edge_count();
    // Independent check on the output with a fresh enumeration.
    report.remaining = count_sub_triangulations(h, target, v_max, 10, threads).size();
    return {std::move(h), report};
}

namespace {

using Mask = unsigned __int128;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::size_t triple_index(Vertex a, Vertex b, Vertex c, std::size_t n) {
    // lexicographic rank of a < b < c among the triples of [n]
    std::size_t idx = 0;
    auto choose2 = [](std::size_t m) { return m * (m - 1) / 2; };
    auto choose3 = [](std::size_t m) { return m * (m - 1) * (m - 2) / 6; };
    idx += choose3(n) - choose3(n - a);
    idx += choose2(n - a - 1) - choose2(n - b);
    idx += c - b - 1;
    return idx;
}

// Every edge set of K_n^3 that is a copy of h (non-isolated vertices only).
std::vector<Mask> copies_in_complete(const Hypergraph3& h, std::size_t n) {
    std::vector<Vertex> verts = h.non_isolated_vertices();
    const std::size_t k = verts.size();
    std::set<Mask> out;
    if (k > n) return {};
    std::vector<Vertex> image(k);
    std::vector<char> used(n, 0);
    std::vector<Vertex> where(h.n_vertices(), 0);
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            for (std::size_t j = 0; j < k; ++j) where[verts[j]] = image[j];
            Mask m = 0;
            for (const Edge3& e : h.edges()) {
                Edge3 f = Edge3::make(where[e[0]], where[e[1]], where[e[2]]);
                m |= bit(triple_index(f[0], f[1], f[2], n));
            }
            out.insert(m);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            image[i] = v;
            self(self, i + 1);
            used[v] = 0;
        }
    };
    place(place, 0);
    return {out.begin(), out.end()};
}

int popcount(Mask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

// Minimum number of edges meeting every copy, by branch and bound. Each
// branch removes one edge of an unhit copy and forbids the edges tried
// before it; disjoint unhit copies give the lower bound.
class HittingSet {
public:
    explicit HittingSet(std::vector<Mask> copies) : copies_(std::move(copies)) {}

    int solve(int upper) {
        best_ = upper;
        search(0, 0, 0);
        return best_;
    }

private:
    void search(Mask removed, Mask forbidden, int count) {
        // unhit copies, and the one with the fewest usable edges
        const Mask* pick = nullptr;
        int pick_size = 1 << 20;
        Mask packed = 0;
        int bound = 0;
        for (const Mask& c : copies_) {
            if (c & removed) continue;
            Mask usable = c & ~forbidden;
            int size = popcount(usable);
            if (size == 0) return;  // cannot be hit any more
            if (size < pick_size) {
                pick = &c;
                pick_size = size;
            }
            if (!(usable & packed)) {
                packed |= usable;
                ++bound;
            }
        }
        if (!pick) {
            best_ = std::min(best_, count);
            return;
        }
        if (count + bound >= best_) return;
        Mask usable = *pick & ~forbidden;
        for (std::size_t i = 0; usable; ++i) {
            if (!(usable & bit(i))) continue;
            usable &= ~bit(i);
            search(removed | bit(i), forbidden, count + 1);
            forbidden |= bit(i);
            if (count + 1 >= best_) return;
        }
    }

    std::vector<Mask> copies_;
    int best_ = 0;
};

// Smallest edge list over all vertex relabelings; small members only.
std::vector<Edge3> canonical_form(const Hypergraph3& h) {
    Hypergraph3 c = compact_vertices(h);
    const std::size_t k = c.n_vertices();
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge3> best;
    if (k > 9) return sorted_edges(c);
    do {
        std::vector<Edge3> mapped;
        for (const Edge3& e : c.edges()) mapped.push_back(Edge3::make(perm[e[0]], perm[e[1]], perm[e[2]]));
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Hypergraph3> glue_families(const std::vector<Hypergraph3>& a, const std::vector<Hypergraph3>& b) {
    std::set<std::vector<Edge3>> seen;
    std::vector<Hypergraph3> out;
    for (const Hypergraph3& t : a) {
        Hypergraph3 ta = compact_vertices(t);
        for (const Hypergraph3& u : b) {
            Hypergraph3 ub = compact_vertices(u);
            const std::size_t na = ta.n_vertices(), nb = ub.n_vertices();
            for (const Edge3& e : ta.edges()) {
                for (const Edge3& f : ub.edges()) {
                    std::array<int, 3> order{0, 1, 2};
                    do {
                        // f[order[j]] becomes e[j]; other vertices of u go after ta's
                        std::vector<Vertex> map(nb);
                        Vertex next = static_cast<Vertex>(na);
                        for (Vertex v = 0; v < nb; ++v) {
                            map[v] = ~Vertex{0};
                            for (int j = 0; j < 3; ++j)
                                if (f[order[j]] == v) map[v] = e[j];
                            if (map[v] == ~Vertex{0}) map[v] = next++;
                        }
                        std::vector<Edge3> edges(ta.edges().begin(), ta.edges().end());
                        for (const Edge3& g : ub.edges()) edges.push_back(Edge3::make(map[g[0]], map[g[1]], map[g[2]]));
                        Hypergraph3 glued = Hypergraph3::from_edge_set(next, std::move(edges));
                        if (seen.insert(canonical_form(glued)).second) out.push_back(std::move(glued));
                    } while (std::next_permutation(order.begin(), order.end()));
                }
            }
        }
    }
    return out;
}

std::size_t extremal_number(std::size_t n, const std::vector<Hypergraph3>& family) {
    if (n > 9) fail(ErrorCode::CapExceeded, "exhaustive extremal numbers stop at n = 9");
    const std::size_t total = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    std::set<Mask> copies;
    for (const Hypergraph3& m : family) {
        if (m.empty()) fail(ErrorCode::InvalidArgument, "family members must have edges");
        for (Mask c : copies_in_complete(m, n)) copies.insert(c);
    }
    // A copy containing another is hit whenever the smaller one is.
    std::vector<Mask> minimal;
    for (Mask c : copies) {
        bool dominated = false;
        for (Mask d : copies) dominated = dominated || (d != c && (d & c) == d);
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](Mask x, Mask y) { return popcount(x) < popcount(y); });
    int tau = HittingSet(std::move(minimal)).solve(static_cast<int>(total));
    return total - static_cast<std::size_t>(tau);
}

GluingTable gluing_bound_check(std::size_t n_max, const std::vector<Hypergraph3>& family_a,
                               const std::vector<Hypergraph3>& family_b) {
    if (n_max > 9) fail(ErrorCode::CapExceeded, "n_max must be at most 9");
    if (family_a.empty() || family_b.empty()) fail(ErrorCode::InvalidArgument, "families must be non-empty");
    std::vector<Hypergraph3> glued = glue_families(family_a, family_b);
    GluingTable table;
    table.glued_members = glued.size();
    for (std::size_t n = 3; n <= n_max; ++n) {
        GluingRow row;
        row.n = n;
        row.ex_a = extremal_number(n, family_a);
        row.ex_b = extremal_number(n, family_b);
        row.ex_glued = extremal_number(n, glued);
        row.bound = 16 * (row.ex_a + row.ex_b);
        row.holds = row.ex_glued <= row.bound;
        table.all_hold = table.all_hold && row.holds;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace surfex
