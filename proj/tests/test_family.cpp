#include <stdexcept>

#include "doctest.h"
#include "ffs/family.hpp"
#include "test_util.hpp"

using namespace ffsg;

TEST_CASE("parse_family single cycle") {
    FamilySpec f = parse_family("C4");
    REQUIRE(f.patterns.size() == 1);
    CHECK(f.patterns[0].num_vertices() == 4);
    CHECK(f.patterns[0].num_edges() == 4);
    CHECK(f.closed);
    CHECK(f.hint == DetectionHint::CompleteBipartite);  // C4 = K_{2,2}
    CHECK(f.kab_a == 2);
    CHECK(f.kab_b == 2);
}

TEST_CASE("parse_family cycle range") {
    FamilySpec f = parse_family("C3-C5");
    REQUIRE(f.patterns.size() == 3);
    CHECK(f.girth_target == 6);
    CHECK(f.closed);
    CHECK(f.hint == DetectionHint::CycleList);
    FamilySpec g = parse_family("C4-C6");
    CHECK(g.patterns.size() == 3);
    CHECK_FALSE(g.closed);  // closedness is only claimed for ranges from C3
}

TEST_CASE("parse_family complete bipartite and Q3") {
    FamilySpec f = parse_family("K2,3");
    REQUIRE(f.patterns.size() == 1);
    CHECK(f.patterns[0].num_vertices() == 5);
    CHECK(f.patterns[0].num_edges() == 6);
    CHECK(f.closed);
    FamilySpec q = parse_family("Q3");
    CHECK(q.patterns[0].num_vertices() == 8);
    CHECK(q.hint == DetectionHint::Hypercube3);
}

TEST_CASE("parse_family unions") {
    FamilySpec f = parse_family("C4+K2,3");
    CHECK(f.patterns.size() == 2);
    FamilySpec g = parse_family("K2,2+K3,3");
    CHECK(g.patterns.size() == 2);
    CHECK(g.closed);  // all complete bipartite
}

TEST_CASE("parse_family rejects malformed names") {
    CHECK_THROWS_AS(parse_family("C2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("K0,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("W5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("C5-C3"), std::invalid_argument);
}

TEST_CASE("family_admissible needs a bipartite pattern and no forests") {
    std::string why;
    CHECK(family_admissible(parse_family("C4"), &why));
    CHECK(family_admissible(parse_family("C3-C5"), &why));
    CHECK_FALSE(family_admissible(parse_family("C3"), &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(family_admissible(parse_family("C3+C5"), &why));
    CHECK(family_admissible(parse_family("C3+C4"), &why));
    CHECK_FALSE(family_admissible(parse_family("K1,3"), &why));  // star = forest
}

TEST_CASE("family_free dispatches correctly") {
    FamilySpec c4 = parse_family("C4");
    CHECK(family_free(cycle_graph(5), c4));
    CHECK_FALSE(family_free(complete_bipartite(2, 2), c4));
    FamilySpec girth6 = parse_family("C3-C5");
    CHECK(family_free(cycle_graph(6), girth6));
    CHECK_FALSE(family_free(cycle_graph(5), girth6));
    CHECK_FALSE(family_free(complete_graph(4), girth6));
}
