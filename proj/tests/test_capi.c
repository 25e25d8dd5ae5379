#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "surfex/surfex.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static const char* octahedron =
    "0 1 2\n0 2 3\n0 3 4\n0 1 4\n5 1 2\n5 2 3\n5 3 4\n5 1 4\n";

static void test_parse_and_classify(void) {
    surfex_hypergraph* h = NULL;
    EXPECT(surfex_hypergraph_parse(octahedron, &h) == SURFEX_OK);
    EXPECT(surfex_hypergraph_vertex_count(h) == 6);
    EXPECT(surfex_hypergraph_edge_count(h) == 8);

    surfex_surface_class c;
    EXPECT(surfex_classify(h, &c) == SURFEX_OK);
    EXPECT(c.kind == SURFEX_ORIENTABLE && c.param == 0 && c.has_chi && c.chi == 2);

    uint32_t buf[24];
    EXPECT(surfex_hypergraph_edges(h, buf, 3) == SURFEX_ERR_RANGE_VIOLATION);
    EXPECT(surfex_hypergraph_edges(h, buf, 24) == SURFEX_OK);
    EXPECT(buf[0] == 0 && buf[1] == 1 && buf[2] == 2);

    char* json = NULL;
    EXPECT(surfex_classify_json(h, &json) == SURFEX_OK);
    EXPECT(json && strstr(json, "\"chi\":2"));
    surfex_string_free(json);

    char* text = NULL;
    EXPECT(surfex_hypergraph_serialize(h, &text) == SURFEX_OK);
    surfex_hypergraph* again = NULL;
    EXPECT(surfex_hypergraph_parse(text, &again) == SURFEX_OK);
    EXPECT(surfex_hypergraph_edge_count(again) == 8);
    surfex_string_free(text);
    surfex_hypergraph_free(again);
    surfex_hypergraph_free(h);
}

static void test_errors(void) {
    surfex_hypergraph* h = NULL;
    EXPECT(surfex_hypergraph_parse("0 1 1\n", &h) == SURFEX_ERR_DEGENERATE_EDGE);
    EXPECT(h == NULL);
    EXPECT(strlen(surfex_last_error()) > 0);
    EXPECT(strcmp(surfex_status_name(SURFEX_ERR_DEGENERATE_EDGE), "DegenerateEdge") == 0);
    EXPECT(surfex_hypergraph_parse(NULL, &h) == SURFEX_ERR_INVALID_ARGUMENT);
    EXPECT(surfex_hypergraph_load("/nonexistent/file.txt", &h) == SURFEX_ERR_IO);

    uint32_t bad[3] = {4, 4, 1};
    EXPECT(surfex_hypergraph_from_triples(5, bad, 1, &h) == SURFEX_ERR_DEGENERATE_EDGE);

    surfex_surface_class c;
    EXPECT(surfex_parse_surface("genus:2", &c) == SURFEX_OK && c.kind == SURFEX_ORIENTABLE && c.param == 2);
    EXPECT(surfex_parse_surface("klein", &c) != SURFEX_OK);
}

static void test_reports(void) {
    surfex_graph* g = NULL;
    EXPECT(surfex_graph_parse("0 1\n1 2\n2 0\n", &g) == SURFEX_OK);
    uint64_t hom = 0;
    EXPECT(surfex_hom_cycle(g, 4, 1, &hom) == SURFEX_OK);
    EXPECT(hom == 18); /* trace(A^4) of a triangle: 2^4 + 2 */
    char* json = NULL;
    EXPECT(surfex_hom_json(g, 4, 1, &json) == SURFEX_OK);
    surfex_string_free(json);

    surfex_admissible_options ao;
    surfex_admissible_options_init(&ao);
    EXPECT(surfex_admissible_json(g, &ao, &json) == SURFEX_OK);
    EXPECT(strstr(json, "\"records\""));
    surfex_string_free(json);
    surfex_graph_free(g);

    surfex_surface_class sphere;
    surfex_parse_surface("sphere", &sphere);
    surfex_hypergraph* out = NULL;
    EXPECT(surfex_lower_bound(9, &sphere, 2.0, 5, 1, 1, &out, &json) == SURFEX_OK);
    EXPECT(out != NULL && strstr(json, "\"remaining\":0"));
    surfex_string_free(json);
    surfex_hypergraph_free(out);

    surfex_hypergraph* h = NULL;
    surfex_hypergraph_parse(octahedron, &h);
    surfex_torus_options to;
    surfex_torus_options_init(&to);
    int ok = -1;
    EXPECT(surfex_find_torus_json(h, &to, &ok, &json) == SURFEX_OK);
    EXPECT(ok == 0 && strstr(json, "\"status\":\"failure\""));
    surfex_string_free(json);

    const surfex_hypergraph* fam[1] = {h};
    int hold = 0;
    EXPECT(surfex_glue_check_json(10, fam, 1, fam, 1, &hold, &json) == SURFEX_ERR_CAP_EXCEEDED);
    surfex_hypergraph_free(h);
}

int main(void) {
    test_parse_and_classify();
    test_errors();
    test_reports();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("capi: ok (%s)\n", surfex_version());
    return 0;
}
