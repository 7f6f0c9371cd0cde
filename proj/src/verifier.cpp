#include "ffs/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffsg {

bool verify_rainbow(const Graph& h, const PartialColoring& chi) {
    std::vector<int> cols;
    for (int v = 0; v < h.num_vertices(); ++v) {
        cols.clear();
        for (int u : h.neighbors(v))
            if (chi.is_colored(u)) cols.push_back(chi.color(u));
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
    }
    return true;
}

bool verify_edge_consistency(const Graph& h, const PartialColoring& chi,
                             const TemplateGraph& t) {
    for (auto [u, v] : h.edge_list()) {
        if (!chi.is_colored(u) || !chi.is_colored(v))
            throw std::logic_error("verify_edge_consistency: uncolored endpoint");
        if (!t.graph.has_edge(chi.color(u), chi.color(v))) return false;
    }
    return true;
}

Verdict verify_solution(const Graph& g, const Graph& h, const PartialColoring& chi,
                        const TemplateGraph& t, const FamilySpec& family, int d) {
    Verdict v;
    v.spanning = (h.num_vertices() == g.num_vertices());

    // E(H) subseteq E(G): adjacency lists are sorted, use inclusion.
    v.subgraph = v.spanning;
    if (v.subgraph) {
        for (int u = 0; u < h.num_vertices() && v.subgraph; ++u) {
            const auto& hn = h.neighbors(u);
            const auto& gn = g.neighbors(u);
            v.subgraph = std::includes(gn.begin(), gn.end(), hn.begin(), hn.end());
        }
    }

    v.rainbow = verify_rainbow(h, chi);
    v.edge_consistent = verify_edge_consistency(h, chi, t);

    v.f_free = true;
    for (const Graph& f : family.patterns)
        if (contains_pattern(h, f)) {
            v.f_free = false;
            break;
        }

    v.min_degree = h.min_degree();
    double alpha_hat = static_cast<double>(t.graph.num_vertices()) / d;
    v.target_degree = t.delta / (4.0 * alpha_hat);
    return v;
}

}  // namespace ffsg
