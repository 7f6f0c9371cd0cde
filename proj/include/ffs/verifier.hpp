#pragma once

#include "ffs/family.hpp"
#include "ffs/graph.hpp"
#include "ffs/homomorphism.hpp"
#include "ffs/templates.hpp"

namespace ffsg {

// Oracle-grade re-check of every claimed output property, computed
// from (G, H, chi, template, family) alone. f_free comes from
// contains_pattern, never inferred from rainbow + edge consistency.
struct Verdict {
    bool spanning = false;
    bool subgraph = false;
    bool rainbow = false;          // Q2
    bool edge_consistent = false;  // Q3
    bool f_free = false;
    int min_degree = 0;
    double target_degree = 0.0;  // delta(template) / (4*alpha_hat)

    bool all_pass() const {
        return spanning && subgraph && rainbow && edge_consistent && f_free;
    }
};

// True iff the assigned colors on every neighborhood are pairwise
// distinct (uncolored vertices are ignored).
bool verify_rainbow(const Graph& h, const PartialColoring& chi);

// True iff every H-edge maps to a template edge. Throws on an
// uncolored endpoint of an H-edge.
bool verify_edge_consistency(const Graph& h, const PartialColoring& chi,
                             const TemplateGraph& t);

Verdict verify_solution(const Graph& g, const Graph& h, const PartialColoring& chi,
                        const TemplateGraph& t, const FamilySpec& family, int d);

}  // namespace ffsg
