#pragma once

#include <cstdint>
#include <string>

#include "ffs/family.hpp"
#include "ffs/graph.hpp"

namespace ffsg {

// The coloring target: a family-free, almost-regular graph whose
// vertices serve as colors. delta/Delta/beta are recomputed from the
// graph and audited on construction.
struct TemplateGraph {
    Graph graph;
    int delta = 0;
    int Delta = 0;
    double beta = 1.0;
    std::string construction_tag;

    // Random-map edge probabilities p- = delta/|V|, p+ = Delta/|V|.
    double p_minus() const { return static_cast<double>(delta) / graph.num_vertices(); }
    double p_plus() const { return static_cast<double>(Delta) / graph.num_vertices(); }
};

bool is_prime(long q);
long smallest_prime_with(long from, long (*order_of)(long));

// Polarity graph of the projective plane over F_q (q prime): vertices
// are the q^2+q+1 projective points, x ~ y iff <x,y> = 0 (mod q) and
// x != y. C4-free; q+1 absolute points have degree q, the rest q+1.
Graph polarity_graph(long q);

// Point-line incidence graph of the projective plane of order q
// (q prime): bipartite, (q+1)-regular on 2(q^2+q+1) vertices, girth 6.
Graph incidence_graph(long q);

// Repeatedly finds a cycle shorter than g and deletes the cycle edge
// with maximal endpoint degree sum (ties: smallest edge id) until the
// girth is at least g.
Graph prune_short_cycles(Graph g, int g_target);

// G(m,p) followed by deleting one edge of every remaining forbidden
// pattern copy. p is m^{-1+1/(2r)} for girth families {C3..C_{2r+1}}
// and m^{-(a+b-2)/(ab-1)} for a single K_{a,b}; generic families use
// the girth exponent of their longest cycle-like pattern, falling back
// to m^{-1/2}. Throws if the construction degenerates (min degree 0
// everywhere).
Graph random_pattern_free(int m, const FamilySpec& family, std::uint64_t seed);

// Smallest admissible construction of order >= alpha*d for the family,
// fully audited: family-free via contains_pattern, and hom*-free via
// the homomorphism module when the order is at most hom_check_cap
// (otherwise the family's closedness flag stands in).
TemplateGraph build_template(const FamilySpec& family, int d, double alpha, std::uint64_t seed);

inline constexpr int kHomCheckCap = 400;

}  // namespace ffsg
