#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surfex/surfex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitStage = 3;

struct InputError {
    std::string message;
};

using HyperPtr = std::unique_ptr<surfex_hypergraph, decltype(&surfex_hypergraph_free)>;
using GraphPtr = std::unique_ptr<surfex_graph, decltype(&surfex_graph_free)>;

void check(surfex_status s, const std::string& context) {
    if (s == SURFEX_OK) return;
    throw InputError{context + ": " + surfex_status_name(s) + ": " + surfex_last_error()};
}

HyperPtr load_hypergraph(const std::string& path) {
    surfex_hypergraph* h = nullptr;
    check(surfex_hypergraph_load(path.c_str(), &h), path);
    return HyperPtr(h, surfex_hypergraph_free);
}

GraphPtr load_graph(const std::string& path) {
    surfex_graph* g = nullptr;
    check(surfex_graph_load(path.c_str(), &g), path);
    return GraphPtr(g, surfex_graph_free);
}

HyperPtr tetrahedron() {
    const uint32_t faces[] = {0, 1, 2, 0, 1, 3, 0, 2, 3, 1, 2, 3};
    surfex_hypergraph* h = nullptr;
    check(surfex_hypergraph_from_triples(4, faces, 4, &h), "tetrahedron");
    return HyperPtr(h, surfex_hypergraph_free);
}

// Takes ownership of a library string and prints it as the single report.
void print_json(char* json) {
    std::fputs(json, stdout);
    std::fputc('\n', stdout);
    surfex_string_free(json);
}

struct Options {
    std::string file;
    unsigned threads = 1;
    uint64_t seed = 0;

    double p = 0.5, eps = 0.5;
    int k = 12, r = 12;
    int adm_k = 1;
    bool exact = false;
    size_t mc_trials = 0;

    size_t max_len = 12;
    size_t max_cycle_len = 6;
    size_t retries = 64;
    size_t max_candidates = 8;
    bool skip_f = false;

    int genus = 2;
    size_t genus_retries = 0;

    size_t n = 40;
    double c0 = 0.5;
    std::string target = "torus";
    size_t v_max = 8;
    std::string out;

    size_t n_max = 7;
    std::vector<std::string> family_a, family_b;

    size_t len = 4;
};

surfex_torus_options torus_options(const Options& o) {
    surfex_torus_options t;
    surfex_torus_options_init(&t);
    t.max_cycle_len = o.max_cycle_len;
    t.p = o.p;
    t.eps = o.eps;
    t.k = o.k;
    t.r = o.r;
    t.seed = o.seed;
    t.retries = o.retries;
    t.max_candidates = o.max_candidates;
    t.skip_f = o.skip_f ? 1 : 0;
    t.threads = o.threads;
    return t;
}

int run_classify(const Options& o) {
    HyperPtr h = load_hypergraph(o.file);
    char* json = nullptr;
    check(surfex_classify_json(h.get(), &json), "classify");
    print_json(json);
    return kExitOk;
}

int run_topcycle(const Options& o) {
    HyperPtr h = load_hypergraph(o.file);
    char* json = nullptr;
    check(surfex_topcycle_json(h.get(), &json), "topcycle");
    print_json(json);
    return kExitOk;
}

int run_admissible(const Options& o) {
    GraphPtr g = load_graph(o.file);
    surfex_admissible_options a;
    surfex_admissible_options_init(&a);
    a.p = o.p;
    a.eps = o.eps;
    a.k = o.adm_k;
    a.exact = o.mc_trials == 0 ? 1 : 0;
    if (o.mc_trials != 0) a.trials = o.mc_trials;
    a.seed = o.seed;
    a.threads = o.threads;
    char* json = nullptr;
    check(surfex_admissible_json(g.get(), &a, &json), "admissible");
    print_json(json);
    return kExitOk;
}

int run_rainbow(const Options& o) {
    HyperPtr h = load_hypergraph(o.file);
    char* json = nullptr;
    int found = 0;
    check(surfex_rainbow_json(h.get(), o.max_len, o.seed, &found, &json), "rainbow");
    print_json(json);
    return kExitOk;
}

int run_find_torus(const Options& o) {
    HyperPtr h = load_hypergraph(o.file);
    surfex_torus_options t = torus_options(o);
    char* json = nullptr;
    int ok = 0;
    check(surfex_find_torus_json(h.get(), &t, &ok, &json), "find-torus");
    print_json(json);
    return ok ? kExitOk : kExitStage;
}

int run_find_genus(const Options& o) {
    HyperPtr h = load_hypergraph(o.file);
    surfex_torus_options t = torus_options(o);
    char* json = nullptr;
    int ok = 0;
    check(surfex_find_genus_json(h.get(), o.genus, &t, o.genus_retries, &ok, &json), "find-genus");
    print_json(json);
    return ok ? kExitOk : kExitStage;
}

int run_lower_bound(const Options& o) {
    surfex_surface_class target;
    check(surfex_parse_surface(o.target.c_str(), &target), "--target");
    surfex_hypergraph* raw = nullptr;
    char* json = nullptr;
    check(surfex_lower_bound(o.n, &target, o.c0, o.v_max, o.seed, o.threads, &raw, &json), "lower-bound");
    HyperPtr h(raw, surfex_hypergraph_free);
    if (!o.out.empty()) {
        surfex_status s = surfex_hypergraph_save(h.get(), o.out.c_str());
        if (s != SURFEX_OK) {
            surfex_string_free(json);
            check(s, o.out);
        }
    }
    print_json(json);
    return kExitOk;
}

int run_glue_check(const Options& o) {
    std::vector<HyperPtr> owned_a, owned_b;
    auto fill = [](const std::vector<std::string>& files, std::vector<HyperPtr>& owned) {
        if (files.empty()) owned.push_back(tetrahedron());
        for (const std::string& f : files) owned.push_back(load_hypergraph(f));
    };
    fill(o.family_a, owned_a);
    fill(o.family_b, owned_b);
    std::vector<const surfex_hypergraph*> a, b;
    for (const HyperPtr& h : owned_a) a.push_back(h.get());
    for (const HyperPtr& h : owned_b) b.push_back(h.get());
    char* json = nullptr;
    int hold = 0;
    check(surfex_glue_check_json(o.n_max, a.data(), a.size(), b.data(), b.size(), &hold, &json), "glue-check");
    print_json(json);
    return kExitOk;
}

int run_hom(const Options& o) {
    GraphPtr g = load_graph(o.file);
    char* json = nullptr;
    check(surfex_hom_json(g.get(), o.len, o.threads, &json), "hom");
    print_json(json);
    return kExitOk;
}

void add_torus_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-cycle-len", o.max_cycle_len, "longest topological cycle tried")->check(CLI::Range(3, 64));
    cmd->add_option("--p", o.p, "admissibility probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--eps", o.eps, "admissibility threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--k", o.k, "connectivity parameter")->check(CLI::PositiveNumber);
    cmd->add_option("--r", o.r, "witness routes per cycle edge")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "random seed")->required();
    cmd->add_option("--retries", o.retries, "colourings tried per candidate cycle");
    cmd->add_option("--max-candidates", o.max_candidates, "candidate cycles examined");
    cmd->add_flag("--skip-F", o.skip_f, "use the whole hypergraph instead of selecting F");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangulated surfaces in 3-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(surfex_version()));
    Options o;
    app.add_option("--threads", o.threads, "worker thread cap")->check(CLI::Range(1u, 256u));

    auto* classify = app.add_subcommand("classify", "classify a hypergraph as a closed surface");
    classify->add_option("file", o.file)->required();

    auto* topcycle = app.add_subcommand("topcycle", "recognize a topological cycle");
    topcycle->add_option("file", o.file)->required();

    auto* admissible = app.add_subcommand("admissible", "count non-admissible edges of a graph");
    admissible->add_option("file", o.file)->required();
    admissible->add_option("--p", o.p)->check(CLI::Range(0.0, 1.0));
    admissible->add_option("--eps", o.eps)->check(CLI::PositiveNumber);
    admissible->add_option("--k", o.adm_k)->check(CLI::PositiveNumber);
    auto* exact = admissible->add_flag("--exact", o.exact, "exact probabilities (default)");
    auto* mc = admissible->add_option("--mc", o.mc_trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    exact->excludes(mc);
    admissible->add_option("--seed", o.seed);

    auto* rainbow = app.add_subcommand("rainbow", "rainbow cycle in the link of a 3-partite part");
    rainbow->add_option("file", o.file)->required();
    rainbow->add_option("--max-len", o.max_len, "longest topological cycle, even")->check(CLI::Range(6, 64));
    rainbow->add_option("--seed", o.seed)->required();

    auto* find_torus = app.add_subcommand("find-torus", "build a torus sub-hypergraph");
    find_torus->add_option("file", o.file)->required();
    add_torus_flags(find_torus, o);

    auto* find_genus = app.add_subcommand("find-genus", "build an orientable surface of genus g");
    find_genus->add_option("file", o.file)->required();
    add_torus_flags(find_genus, o);
    find_genus->add_option("--g", o.genus, "genus")->check(CLI::Range(1, 64));
    find_genus->add_option("--colorings", o.genus_retries, "red/blue colourings per shared edge");

    auto* lower = app.add_subcommand("lower-bound", "random hypergraph with small target copies deleted");
    lower->add_option("--n", o.n)->required()->check(CLI::Range(4, 100000));
    lower->add_option("--c0", o.c0)->check(CLI::PositiveNumber);
    lower->add_option("--target", o.target, "sphere, torus, genus:g or crosscaps:k");
    lower->add_option("--vmax", o.v_max, "largest copy size searched")->check(CLI::Range(4, 16));
    lower->add_option("--seed", o.seed)->required();
    lower->add_option("--out", o.out, "write the hypergraph here");

    auto* glue = app.add_subcommand("glue-check", "extremal numbers of two families and their gluing");
    glue->add_option("--n-max", o.n_max)->check(CLI::Range(3, 9));
    glue->add_option("--family-a", o.family_a, "member files (default: tetrahedron)");
    glue->add_option("--family-b", o.family_b, "member files (default: tetrahedron)");

    auto* hom = app.add_subcommand("hom", "closed walks of a given length");
    hom->add_option("file", o.file)->required();
    hom->add_option("--len", o.len)->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    if (mc->count() != 0 && admissible->get_option("--seed")->count() == 0) {
        std::cerr << "admissible: --mc needs an explicit --seed\n";
        return kExitInput;
    }

    try {
        if (*classify) return run_classify(o);
        if (*topcycle) return run_topcycle(o);
        if (*admissible) return run_admissible(o);
        if (*rainbow) return run_rainbow(o);
        if (*find_torus) return run_find_torus(o);
        if (*find_genus) return run_find_genus(o);
        if (*lower) return run_lower_bound(o);
        if (*glue) return run_glue_check(o);
        if (*hom) return run_hom(o);
    } catch (const InputError& e) {
        std::cerr << e.message << '\n';
        return kExitInput;
    }
    return kExitInput;
}
