#include <stdexcept>

#include "doctest.h"
#include "ffs/verifier.hpp"
#include "test_util.hpp"

using namespace ffsg;

namespace {

TemplateGraph triangle_template() {
    TemplateGraph t;
    t.graph = complete_graph(3);
    t.delta = t.Delta = 2;
    t.beta = 1.0;
    t.construction_tag = "fixed";
    return t;
}

}  // namespace

TEST_CASE("verify_rainbow") {
    Graph h = path_graph(4);  // 0-1-2-3
    PartialColoring chi(4);
    chi.set(0, 0);
    chi.set(1, 1);
    chi.set(2, 2);
    chi.set(3, 0);
    CHECK(verify_rainbow(h, chi));
    chi.set(2, 0);  // neighbors 0 and 2 of vertex 1 now share a color
    CHECK_FALSE(verify_rainbow(h, chi));
    chi.unset(2);  // uncolored vertices never conflict
    CHECK(verify_rainbow(h, chi));
}

TEST_CASE("verify_edge_consistency") {
    TemplateGraph t = triangle_template();
    Graph h = path_graph(3);
    PartialColoring chi(3);
    chi.set(0, 0);
    chi.set(1, 1);
    chi.set(2, 0);
    CHECK(verify_edge_consistency(h, chi, t));
    chi.set(2, 1);  // edge 1-2 maps to the non-edge (1,1)
    CHECK_FALSE(verify_edge_consistency(h, chi, t));
    chi.unset(2);
    CHECK_THROWS_AS(verify_edge_consistency(h, chi, t), std::logic_error);
}

TEST_CASE("verify_solution verdict flags") {
    TemplateGraph t = triangle_template();
    Graph g = cycle_graph(6);
    Graph h = g;
    h.remove_edge(5, 0);
    PartialColoring chi(6);
    for (int v = 0; v < 6; ++v) chi.set(v, v % 3);  // 0,1,2 repeating along the path
    FamilySpec c6 = parse_family("C6");
    Verdict v = verify_solution(g, h, chi, t, c6, 3);
    CHECK(v.spanning);
    CHECK(v.subgraph);
    CHECK(v.rainbow);
    CHECK(v.edge_consistent);
    CHECK(v.f_free);
    CHECK(v.min_degree == 1);
    CHECK(v.target_degree == doctest::Approx(2.0 / (4.0 * (3.0 / 3.0))));
    CHECK(v.all_pass());

    // not a subgraph: H has an edge G lacks
    Graph h2 = h;
    h2.add_edge(0, 3);
    chi.set(3, 1);  // keep rainbow/consistency plausible
    Verdict v2 = verify_solution(g, h2, chi, t, c6, 3);
    CHECK_FALSE(v2.subgraph);

    // not spanning
    Graph h3 = path_graph(5);
    PartialColoring chi5(5);
    for (int i = 0; i < 5; ++i) chi5.set(i, i % 3);
    Verdict v3 = verify_solution(g, h3, chi5, t, c6, 3);
    CHECK_FALSE(v3.spanning);

    // contains the forbidden pattern
    Verdict v4 = verify_solution(g, g, chi, t, c6, 3);
    CHECK_FALSE(v4.f_free);
}
