#include "surfex/enumerate.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "surfex/error.hpp"

namespace surfex {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Grows a pseudo-surface from the seed by repeatedly closing the open side
// (a pair in exactly one chosen face) with the fewest completions. Every
// closed surface through the seed is reached along exactly one branch.
class SurfaceGrower {
public:
    SurfaceGrower(const Hypergraph3& h, const SurfaceSearch& search, std::size_t seed, bool minimal_seed)
        : h_(h), search_(search), seed_(seed), minimal_seed_(minimal_seed) {
        if (!search.target.is_surface()) fail(ErrorCode::InvalidArgument, "target must be a closed surface");
        chi_ = search.target.euler();
        long long limit = 2 * (static_cast<long long>(search.v_max) - chi_);
        max_faces_ = limit > 0 ? static_cast<std::size_t>(limit) : 0;
        state_.assign(h.edge_count(), 0);
        uses_.assign(h.n_vertices(), 0);
    }

    SurfaceSearchResult run() {
        const Edge3& s = h_.edge(seed_);
        if (!usable_vertex(s[0]) || !usable_vertex(s[1]) || !usable_vertex(s[2]) || max_faces_ < 4 ||
            search_.v_max < 4) {
            return std::move(result_);
        }
        add(seed_);
        grow();
        return std::move(result_);
    }

private:
    bool usable_vertex(Vertex v) const {
        return search_.allowed.empty() || (v < search_.allowed.size() && search_.allowed[v]);
    }

    std::uint8_t side_count(Vertex a, Vertex b) const {
        std::uint64_t k = pair_key(a, b);
        for (auto& [key, count] : sides_) {
            if (key == k) return count;
        }
        return 0;
    }

    void bump(Vertex a, Vertex b, int delta) {
        std::uint64_t k = pair_key(a, b);
        for (std::size_t i = 0; i < sides_.size(); ++i) {
            if (sides_[i].first == k) {
                sides_[i].second = static_cast<std::uint8_t>(sides_[i].second + delta);
                if (sides_[i].second == 0) {
                    sides_[i] = sides_.back();
                    sides_.pop_back();
                }
                return;
            }
        }
        sides_.emplace_back(k, static_cast<std::uint8_t>(delta));
    }

    void add(std::size_t idx) {
        const Edge3& e = h_.edge(idx);
        state_[idx] = 1;
        faces_.push_back(idx);
        for (Vertex v : e.v) {
            if (uses_[v]++ == 0) ++vertices_;
        }
        bump(e[0], e[1], 1);
        bump(e[0], e[2], 1);
        bump(e[1], e[2], 1);
    }

    void remove_last() {
        std::size_t idx = faces_.back();
        const Edge3& e = h_.edge(idx);
        faces_.pop_back();
        state_[idx] = 0;
        for (Vertex v : e.v) {
            if (--uses_[v] == 0) --vertices_;
        }
        bump(e[0], e[1], -1);
        bump(e[0], e[2], -1);
        bump(e[1], e[2], -1);
    }

    // Faces that could close the side {a, b}.
    void completions(Vertex a, Vertex b, std::vector<std::size_t>& out) const {
        out.clear();
        Vertex pivot = h_.degree(a) <= h_.degree(b) ? a : b;
        Vertex partner = pivot == a ? b : a;
        for (std::uint32_t idx : h_.incident(pivot)) {
            if (state_[idx] != 0 || (minimal_seed_ && idx < seed_)) continue;
            const Edge3& e = h_.edge(idx);
            if (!e.contains(partner)) continue;
            Vertex w = e.other(a, b);
            if (!usable_vertex(w)) continue;
            if (uses_[w] == 0 && vertices_ + 1 > search_.v_max) continue;
            if (side_count(a, w) >= 2 || side_count(b, w) >= 2) continue;
            out.push_back(idx);
        }
    }

    void grow() {
        if (stop_) return;
        if (search_.node_budget != 0 && result_.nodes >= search_.node_budget) {
            result_.exhausted = true;
            stop_ = true;
            return;
        }
        ++result_.nodes;

        // Most constrained open side first.
        std::vector<std::size_t> best, scratch;
        bool any_open = false;
        for (auto [key, count] : sides_) {
            if (count != 1) continue;
            Vertex a = static_cast<Vertex>(key >> 32), b = static_cast<Vertex>(key & 0xffffffffu);
            completions(a, b, scratch);
            if (!any_open || scratch.size() < best.size()) {
                best = scratch;
                any_open = true;
                if (best.empty()) return;
            }
        }
        if (!any_open) {
            record();
            return;
        }
        if (faces_.size() >= max_faces_) return;

        std::vector<std::size_t> blocked;
        for (std::size_t idx : best) {
            add(idx);
            grow();
            remove_last();
            if (stop_) break;
            state_[idx] = 2;
            blocked.push_back(idx);
        }
        for (std::size_t idx : blocked) state_[idx] = 0;
    }

    void record() {
        // Closed pseudo-surface: every side in two faces, so e = 3f / 2.
        long long chi = static_cast<long long>(vertices_) - static_cast<long long>(faces_.size()) / 2;
        if (chi != chi_) return;
        std::vector<Edge3> edges;
        for (std::size_t idx : faces_) edges.push_back(h_.edge(idx));
        Hypergraph3 s(h_.n_vertices(), std::move(edges));
        if (!classify_surface(s).same_surface(search_.target)) return;
        result_.surfaces.push_back(std::move(s));
        if (search_.max_results != 0 && result_.surfaces.size() >= search_.max_results) stop_ = true;
    }

    const Hypergraph3& h_;
    const SurfaceSearch& search_;
    std::size_t seed_;
    bool minimal_seed_;
    long long chi_ = 0;
    std::size_t max_faces_ = 0;
    std::vector<std::uint8_t> state_;  // 0 free, 1 chosen, 2 blocked
    std::vector<std::uint32_t> uses_;
    std::size_t vertices_ = 0;
    std::vector<std::size_t> faces_;
    std::vector<std::pair<std::uint64_t, std::uint8_t>> sides_;
    bool stop_ = false;
    SurfaceSearchResult result_;
};

}  // namespace

SurfaceSearchResult surfaces_through(const Hypergraph3& h, std::size_t seed, const SurfaceSearch& search,
                                     bool minimal_seed) {
    if (seed >= h.edge_count()) fail(ErrorCode::InvalidArgument, "seed edge index out of range");
    return SurfaceGrower(h, search, seed, minimal_seed).run();
}

std::optional<Hypergraph3> find_surface_through(const Hypergraph3& h, const Edge3& e, const SurfaceSearch& search) {
    auto idx = h.index_of(e);
    if (!idx) return std::nullopt;
    SurfaceSearch first = search;
    first.max_results = 1;
    auto found = surfaces_through(h, *idx, first);
    if (found.surfaces.empty()) return std::nullopt;
    return std::move(found.surfaces.front());
}

std::vector<Hypergraph3> count_sub_triangulations(const Hypergraph3& h, const SurfaceClass& target,
                                                  std::size_t v_max, std::size_t cap, unsigned threads) {
    if (v_max > cap) {
        fail(ErrorCode::CapExceeded, "v_max " + std::to_string(v_max) + " exceeds the cap " + std::to_string(cap));
    }
    if (!target.is_surface()) fail(ErrorCode::InvalidArgument, "target must be a closed surface");
    SurfaceSearch search;
    search.target = target;
    search.v_max = v_max;
    std::vector<std::vector<Hypergraph3>> per_seed(h.edge_count());
    detail::parallel_for(h.edge_count(), threads, [&](std::size_t seed) {
        per_seed[seed] = surfaces_through(h, seed, search, true).surfaces;
    });
    std::vector<Hypergraph3> out;
    for (auto& list : per_seed) {
        for (auto& s : list) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace surfex
