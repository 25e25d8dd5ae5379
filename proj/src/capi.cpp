#include "surfex/surfex.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "json.hpp"
#include "surfex/admissible.hpp"
#include "surfex/cycles.hpp"
#include "surfex/error.hpp"
#include "surfex/extremal.hpp"
#include "surfex/hypercore.hpp"
#include "surfex/pipeline.hpp"
#include "surfex/rainbow.hpp"
#include "surfex/surface.hpp"

struct surfex_hypergraph {
    surfex::Hypergraph3 h;
};

struct surfex_graph {
    surfex::SimpleGraph g;
};

static_assert(static_cast<int>(surfex::ErrorCode::Internal) + 1 == SURFEX_ERR_INTERNAL,
              "status values must follow the error codes");

namespace {

using nlohmann::json;
using namespace surfex;

thread_local std::string last_error;

surfex_status status_of(ErrorCode code) { return static_cast<surfex_status>(static_cast<int>(code) + 1); }

template <class Body>
surfex_status guarded(Body&& body) {
    try {
        last_error.clear();
        body();
        return SURFEX_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SURFEX_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SURFEX_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& doc, char** out) {
    require(out, "output pointer");
    *out = copy_string(doc.dump());
}

json edge_json(const Edge3& e) { return json::array({e[0], e[1], e[2]}); }

json edges_json(std::span<const Edge3> edges) {
    json out = json::array();
    for (const Edge3& e : edges) out.push_back(edge_json(e));
    return out;
}

json cert_json(const TopCycleCert& c) {
    json boundary = json::array();
    for (auto [a, b] : c.boundary) boundary.push_back(json::array({a, b}));
    return {{"r", c.r()},
            {"kind", kind_name(c.kind)},
            {"torus_like", c.torus_like},
            {"ordering", edges_json(c.ordering)},
            {"boundary", boundary},
            {"epsilons", c.epsilons}};
}

json class_json(const SurfaceClass& c) {
    json out = {{"verdict", kind_name(c.kind)}, {"label", surface_label(c)}};
    out["chi"] = c.chi ? json(*c.chi) : json(nullptr);
    if (c.kind == SurfaceKind::OrientableGenus) out["g"] = c.param;
    if (c.kind == SurfaceKind::NonOrientableCrossCaps) out["k"] = c.param;
    return out;
}

SurfaceClass from_c(const surfex_surface_class& c) {
    switch (c.kind) {
        case SURFEX_ORIENTABLE: return SurfaceClass::orientable(c.param);
        case SURFEX_NON_ORIENTABLE: return SurfaceClass::crosscaps(c.param);
        case SURFEX_NOT_A_SURFACE: break;
    }
    return SurfaceClass::not_surface("not a surface");
}

surfex_surface_class to_c(const SurfaceClass& c) {
    surfex_surface_class out{};
    out.kind = c.kind == SurfaceKind::OrientableGenus          ? SURFEX_ORIENTABLE
               : c.kind == SurfaceKind::NonOrientableCrossCaps ? SURFEX_NON_ORIENTABLE
                                                               : SURFEX_NOT_A_SURFACE;
    out.param = c.param;
    out.has_chi = c.chi.has_value();
    out.chi = c.chi.value_or(0);
    return out;
}

TorusOptions torus_options(const surfex_torus_options* o) {
    TorusOptions t;
    if (!o) return t;
    t.max_cycle_len = o->max_cycle_len;
    t.params = AdmissParams{o->p, o->eps, o->k, o->r};
    t.seed = o->seed;
    t.retries = o->retries;
    t.max_candidates = o->max_candidates;
    t.skip_F = o->skip_f != 0;
    t.threads = o->threads == 0 ? 1 : o->threads;
    t.mode.threads = t.threads;
    return t;
}

}  // namespace

extern "C" {

const char* surfex_version(void) { return "0.1.0"; }

const char* surfex_status_name(surfex_status status) {
    if (status == SURFEX_OK) return "Ok";
    if (status < SURFEX_OK || status > SURFEX_ERR_INTERNAL) return "Unknown";
    static thread_local std::string name;
    name = std::string(error_code_name(static_cast<ErrorCode>(status - 1)));
    return name.c_str();
}

const char* surfex_last_error(void) { return last_error.c_str(); }

void surfex_string_free(char* s) { std::free(s); }

surfex_status surfex_hypergraph_parse(const char* text, surfex_hypergraph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "output pointer");
        *out = new surfex_hypergraph{parse_hypergraph(text)};
    });
}

surfex_status surfex_hypergraph_load(const char* path, surfex_hypergraph** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output pointer");
        *out = new surfex_hypergraph{load_hypergraph(path)};
    });
}

surfex_status surfex_hypergraph_from_triples(size_t n_vertices, const uint32_t* triples, size_t n_edges,
                                             surfex_hypergraph** out) {
    return guarded([&] {
        require(out, "output pointer");
        if (n_edges != 0) require(triples, "triples");
        std::vector<Edge3> edges;
        for (size_t i = 0; i < n_edges; ++i) {
            const uint32_t* t = triples + 3 * i;
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
                fail(ErrorCode::DegenerateEdge, "edge " + std::to_string(i) + " repeats a vertex");
            edges.push_back(Edge3::make(t[0], t[1], t[2]));
        }
        *out = new surfex_hypergraph{Hypergraph3(n_vertices, std::move(edges))};
    });
}

void surfex_hypergraph_free(surfex_hypergraph* h) { delete h; }

size_t surfex_hypergraph_vertex_count(const surfex_hypergraph* h) { return h ? h->h.n_vertices() : 0; }

size_t surfex_hypergraph_edge_count(const surfex_hypergraph* h) { return h ? h->h.edge_count() : 0; }

surfex_status surfex_hypergraph_edges(const surfex_hypergraph* h, uint32_t* out, size_t capacity) {
    return guarded([&] {
        require(h, "hypergraph");
        if (capacity < 3 * h->h.edge_count()) fail(ErrorCode::RangeViolation, "output buffer too small");
        if (h->h.edge_count() != 0) require(out, "output buffer");
        std::vector<Edge3> edges(h->h.edges().begin(), h->h.edges().end());
        std::sort(edges.begin(), edges.end());
        for (size_t i = 0; i < edges.size(); ++i)
            for (int j = 0; j < 3; ++j) out[3 * i + j] = edges[i][j];
    });
}

surfex_status surfex_hypergraph_serialize(const surfex_hypergraph* h, char** out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = copy_string(serialize(h->h));
    });
}

surfex_status surfex_hypergraph_save(const surfex_hypergraph* h, const char* path) {
    return guarded([&] {
        require(h, "hypergraph");
        require(path, "path");
        std::ofstream file(path, std::ios::binary);
        if (!file) fail(ErrorCode::Io, std::string("cannot write ") + path);
        file << serialize(h->h);
        if (!file) fail(ErrorCode::Io, std::string("write failed for ") + path);
    });
}

surfex_status surfex_graph_parse(const char* text, surfex_graph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "output pointer");
        *out = new surfex_graph{parse_graph(text)};
    });
}

surfex_status surfex_graph_load(const char* path, surfex_graph** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output pointer");
        *out = new surfex_graph{load_graph(path)};
    });
}

void surfex_graph_free(surfex_graph* g) { delete g; }

surfex_status surfex_classify(const surfex_hypergraph* h, surfex_surface_class* out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = to_c(classify_surface(h->h));
    });
}

surfex_status surfex_parse_surface(const char* label, surfex_surface_class* out) {
    return guarded([&] {
        require(label, "label");
        require(out, "output pointer");
        auto c = parse_surface_label(label);
        if (!c) fail(ErrorCode::InvalidArgument, std::string("unknown surface '") + label + "'");
        *out = to_c(*c);
    });
}

surfex_status surfex_classify_json(const surfex_hypergraph* h, char** json_out) {
    return guarded([&] {
        require(h, "hypergraph");
        SurfaceClass c = classify_surface(h->h);
        SkeletonCounts counts = skeleton_counts(h->h);
        json doc = class_json(c);
        doc["v"] = counts.v;
        doc["e"] = counts.e;
        doc["f"] = counts.f;
        doc["orientable"] = c.is_surface() ? json(c.kind == SurfaceKind::OrientableGenus) : json(nullptr);
        doc["reason"] = c.is_surface() ? json(nullptr) : json(c.reason);
        emit(doc, json_out);
    });
}

surfex_status surfex_topcycle_json(const surfex_hypergraph* h, char** json_out) {
    return guarded([&] {
        require(h, "hypergraph");
        TopCycleResult res = recognize_topological_cycle(h->h);
        json doc = {{"found", res.cert.has_value()}};
        if (res.cert) {
            doc.update(cert_json(*res.cert));
            doc["defect"] = nullptr;
            doc["reason"] = nullptr;
        } else {
            doc["defect"] = defect_name(res.defect);
            doc["reason"] = res.reason;
        }
        emit(doc, json_out);
    });
}

void surfex_admissible_options_init(surfex_admissible_options* o) {
    if (!o) return;
    *o = surfex_admissible_options{};
    o->p = 0.5;
    o->eps = 0.5;
    o->k = 1;
    o->exact = 1;
    o->trials = 10000;
    o->exact_threshold = 16;
    o->seed = 0;
    o->threads = 1;
}

surfex_status surfex_admissible_json(const surfex_graph* g, const surfex_admissible_options* o, char** json_out) {
    return guarded([&] {
        require(g, "graph");
        require(o, "options");
        AdmissParams params{o->p, o->eps, o->k, 1};
        ProbMode mode;
        mode.method = o->exact ? ProbMethod::Exact : ProbMethod::MonteCarlo;
        mode.trials = o->trials;
        mode.seed = o->seed;
        mode.exact_threshold = o->exact_threshold;
        mode.threads = o->threads == 0 ? 1 : o->threads;
        AdmissReport report = count_nonadmissible(g->g, params, mode);
        json records = json::array();
        for (const EdgeProbability& r : report.records) {
            records.push_back({{"edge", json::array({r.edge.first, r.edge.second})},
                               {"prob", r.prob},
                               {"stderr", r.stderr_},
                               {"exact", r.exact},
                               {"trials", r.trials},
                               {"admissible", r.verdict}});
        }
        json doc = {{"params", {{"p", params.p}, {"eps", params.eps}, {"k", params.k}}},
                    {"exact", report.exact},
                    {"n", g->g.n_vertices()},
                    {"edges", g->g.edge_count()},
                    {"nonadmissible", report.nonadmissible},
                    {"bound", report.bound},
                    {"bound_holds", report.bound_holds},
                    {"records", records}};
        emit(doc, json_out);
    });
}

surfex_status surfex_rainbow_json(const surfex_hypergraph* h, size_t max_len, uint64_t seed, int* found,
                                  char** json_out) {
    return guarded([&] {
        require(h, "hypergraph");
        if (max_len < 6 || max_len % 2 != 0) fail(ErrorCode::InvalidArgument, "max-len must be even and at least 6");
        json doc = {{"found", false}, {"cycle", nullptr}, {"topcycle", nullptr}};
        PartitionResult part = three_partition(h->h, seed);
        doc["partition_edges"] = part.sub.edge_count();
        if (!part.sub.empty()) {
            LinkOfEdgesGraph l = diverse_subgraph(build_link_of_edges(part.sub, part.parts));
            doc["link_vertices"] = l.graph.n_vertices();
            doc["link_edges"] = l.graph.edge_count();
            auto rc = find_rainbow_cycle(l.graph, l.natural_coloring(), max_len / 2);
            if (rc) {
                std::vector<Edge3> cycle;
                for (Vertex v : *rc) cycle.push_back(l.payload[v]);
                RainbowConversion conv = rainbow_to_topcycle(part.sub, part.parts, l, *rc);
                doc["found"] = true;
                doc["cycle"] = edges_json(cycle);
                doc["removed"] = conv.removed;
                doc["topcycle"] = cert_json(conv.cert);
            }
        }
        if (found) *found = doc["found"].get<bool>();
        emit(doc, json_out);
    });
}

void surfex_torus_options_init(surfex_torus_options* o) {
    if (!o) return;
    TorusOptions t;
    *o = surfex_torus_options{};
    o->max_cycle_len = t.max_cycle_len;
    o->p = t.params.p;
    o->eps = t.params.eps;
    o->k = t.params.k;
    o->r = t.params.r;
    o->seed = t.seed;
    o->retries = t.retries;
    o->max_candidates = t.max_candidates;
    o->skip_f = t.skip_F ? 1 : 0;
    o->threads = 1;
}

surfex_status surfex_find_torus_json(const surfex_hypergraph* h, const surfex_torus_options* o, int* ok,
                                     char** json_out) {
    return guarded([&] {
        require(h, "hypergraph");
        TorusResult res = build_torus(h->h, torus_options(o));
        json doc = {{"status", res.ok ? "success" : "failure"},
                    {"stage", res.ok ? json(nullptr) : json(stage_name(res.stage))},
                    {"diagnostics", res.diagnostics},
                    {"torus", res.surface ? edges_json(res.surface->edges()) : json(nullptr)},
                    {"cycle", res.cycle ? cert_json(*res.cycle) : json(nullptr)},
                    {"witnesses", edges_json(res.witnesses)},
                    {"f_size", res.f_size},
                    {"candidates_tried", res.candidates_tried},
                    {"retries_used", res.retries_used}};
        if (ok) *ok = res.ok ? 1 : 0;
        emit(doc, json_out);
    });
}

surfex_status surfex_find_genus_json(const surfex_hypergraph* h, int g, const surfex_torus_options* o, size_t retries,
                                     int* ok, char** json_out) {
    return guarded([&] {
        require(h, "hypergraph");
        GenusOptions opts;
        opts.torus = torus_options(o);
        opts.seed = opts.torus.seed;
        if (retries != 0) opts.retries = retries;
        GenusResult res = find_surface_genus_g(h->h, g, opts);
        json doc = {{"status", res.ok ? "success" : "failure"},
                    {"g", g},
                    {"stage", res.ok ? json(nullptr) : json(res.stage)},
                    {"diagnostics", res.diagnostics},
                    {"surface", res.surface ? edges_json(res.surface->edges()) : json(nullptr)},
                    {"shared_edge", res.shared_edge ? edge_json(*res.shared_edge) : json(nullptr)},
                    {"from_coloring", res.from_coloring},
                    {"colorings_used", res.colorings_used}};
        if (ok) *ok = res.ok ? 1 : 0;
        emit(doc, json_out);
    });
}

surfex_status surfex_lower_bound(size_t n, const surfex_surface_class* target, double c0, size_t v_max, uint64_t seed,
                                 unsigned threads, surfex_hypergraph** out, char** json_out) {
    return guarded([&] {
        require(target, "target");
        LowerBoundResult res = lower_bound_generate(n, from_c(*target), c0, v_max, seed, threads == 0 ? 1 : threads);
        const LowerBoundReport& r = res.report;
        json doc = {{"n", r.n},
                    {"c0", r.c0},
                    {"p_used", r.p_used},
                    {"edges_before", r.edges_before},
                    {"triangulations_found", r.triangulations_found},
                    {"edges_deleted", r.edges_deleted},
                    {"edges_after", r.edges_after},
                    {"target_surface", surface_label(r.target)},
                    {"v_max", r.v_max},
                    {"rounds", r.rounds},
                    {"remaining", r.remaining},
                    {"face_identity_holds", r.face_identity_holds},
                    {"seed", seed}};
        emit(doc, json_out);
        if (out) *out = new surfex_hypergraph{std::move(res.graph)};
    });
}

surfex_status surfex_glue_check_json(size_t n_max, const surfex_hypergraph* const* family_a, size_t n_a,
                                     const surfex_hypergraph* const* family_b, size_t n_b, int* all_hold,
                                     char** json_out) {
    return guarded([&] {
        std::vector<Hypergraph3> a, b;
        for (size_t i = 0; i < n_a; ++i) {
            require(family_a[i], "family member");
            a.push_back(family_a[i]->h);
        }
        for (size_t i = 0; i < n_b; ++i) {
            require(family_b[i], "family member");
            b.push_back(family_b[i]->h);
        }
        GluingTable table = gluing_bound_check(n_max, a, b);
        json rows = json::array();
        for (const GluingRow& r : table.rows) {
            rows.push_back({{"n", r.n},
                            {"ex_a", r.ex_a},
                            {"ex_b", r.ex_b},
                            {"ex_glued", r.ex_glued},
                            {"bound", r.bound},
                            {"holds", r.holds}});
        }
        json doc = {{"n_max", n_max}, {"glued_members", table.glued_members}, {"all_hold", table.all_hold}, {"rows", rows}};
        if (all_hold) *all_hold = table.all_hold ? 1 : 0;
        emit(doc, json_out);
    });
}

surfex_status surfex_hom_cycle(const surfex_graph* g, size_t len, unsigned threads, uint64_t* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "output pointer");
        *out = hom_cycle(g->g, len, threads == 0 ? 1 : threads);
    });
}

surfex_status surfex_hom_json(const surfex_graph* g, size_t len, unsigned threads, char** json_out) {
    return guarded([&] {
        require(g, "graph");
        std::uint64_t hom = hom_cycle(g->g, len, threads == 0 ? 1 : threads);
        json doc = {{"len", len}, {"n", g->g.n_vertices()}, {"edges", g->g.edge_count()}, {"hom", hom}};
        if (len >= 2 && len % 2 == 0) {
            SidorenkoCheck s = sidorenko_check(g->g, len / 2);
            doc["sidorenko"] = {{"holds", s.holds}, {"exact", s.exact}, {"lower", s.lower}, {"ratio", s.ratio}};
        } else {
            doc["sidorenko"] = nullptr;
        }
        emit(doc, json_out);
    });
}

}  // extern "C"
