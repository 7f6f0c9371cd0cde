#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ffs/coloring.hpp"
#include "ffs/verifier.hpp"
#include "test_util.hpp"

using namespace ffsg;

namespace {

TemplateGraph small_template() {
    FamilySpec c4 = parse_family("C4");
    return build_template(c4, 4, 64.0, 1);
}

}  // namespace

TEST_CASE("Params::validate enforces alpha >= 32*beta") {
    TemplateGraph t = small_template();
    Params p;
    p.alpha = 64.0;
    CHECK_NOTHROW(p.validate(t));
    p.alpha = 16.0;
    CHECK_THROWS_AS(p.validate(t), std::invalid_argument);
}

TEST_CASE("phase1 leaves rainbow B-neighborhoods and never overdeletes") {
    TemplateGraph t = small_template();
    Graph g = random_regular(40, 4, 11);
    auto [sides, h0] = bipartize(g);
    Params params;
    std::mt19937_64 rng(5);
    Phase1Result r = phase1(h0, sides, t, params, rng);
    CHECK(verify_rainbow(r.h, r.chi));
    CHECK(r.report.p2);
    // colored A-vertices keep colors; B stays uncolored
    for (int b : sides.B) CHECK_FALSE(r.chi.is_colored(b));
    for (int a : sides.A) CHECK(r.chi.is_colored(a));
    // only edges were deleted, never added
    for (auto [u, v] : r.h.edge_list()) CHECK(h0.has_edge(u, v));
}

TEST_CASE("phase2 terminates under the cap and colors everything") {
    TemplateGraph t = small_template();
    Graph g = random_regular(40, 4, 17);
    auto [sides, h0] = bipartize(g);
    Params params;
    std::mt19937_64 rng(23);
    Phase1Result p1 = phase1(h0, sides, t, params, rng);
    Phase2Result p2 = phase2(p1.h, p1.chi, sides, t, params, 4, rng);
    int cap = static_cast<int>(std::ceil(10 * std::log2(4.0))) + 5;
    CHECK(p2.report.tau <= cap);
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(p2.chi.is_colored(v));
    CHECK(verify_rainbow(p2.h, p2.chi));
    CHECK(verify_edge_consistency(p2.h, p2.chi, t));
}

TEST_CASE("run_pipeline returns a verified spanning subgraph") {
    Graph g = random_regular(40, 4, 3);
    FamilySpec c4 = parse_family("C4");
    Params params;
    params.seed = 3;
    SolutionReport rep = run_pipeline(g, c4, params);
    CHECK(rep.verdict.all_pass());
    CHECK(rep.h.num_vertices() == 40);
    CHECK(rep.retries <= params.max_retries);
    CHECK(rep.n == 40);
    CHECK(rep.d == 4);
    CHECK_FALSE(rep.to_json().empty());
}

TEST_CASE("run_pipeline is deterministic per seed") {
    Graph g = random_regular(40, 4, 3);
    FamilySpec c4 = parse_family("C4");
    Params params;
    params.seed = 9;
    SolutionReport a = run_pipeline(g, c4, params);
    SolutionReport b = run_pipeline(g, c4, params);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.h.to_edge_list_text() == b.h.to_edge_list_text());
    CHECK(a.chi.raw() == b.chi.raw());
    params.seed = 10;
    SolutionReport c = run_pipeline(g, c4, params);
    CHECK(a.to_json() != c.to_json());
}

TEST_CASE("run_pipeline rejects bad inputs") {
    FamilySpec c4 = parse_family("C4");
    Params params;
    Graph irregular = testutil::random_graph(20, 0.3, 8);
    CHECK_THROWS_AS(run_pipeline(irregular, c4, params), std::invalid_argument);
    Graph g = random_regular(40, 4, 3);
    CHECK_THROWS_AS(run_pipeline(g, parse_family("C3"), params), std::invalid_argument);
}
