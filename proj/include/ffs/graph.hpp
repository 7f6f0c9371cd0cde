#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ffsg {

// Simple undirected graph over dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; a Graph is immutable once built
// except through the explicit edge-removal helpers used by the
// coloring engine.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long num_edges() const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }

    // Mutators used during construction / deletion-only algorithms.
    void add_edge(int u, int v);        // keeps lists sorted, ignores duplicates
    void remove_edge(int u, int v);     // no-op if absent

    std::vector<std::pair<int, int>> edge_list() const;  // u < v, lexicographic

    // Edge-list text format: first line "n m", then m lines "u v" with
    // u < v sorted lexicographically. Lines starting with '#' are
    // header comments (written before the "n m" line).
    std::string to_edge_list_text(const std::string& header_comment = "") const;
    static Graph from_edge_list_text(const std::string& text,
                                     std::string* header_out = nullptr);
    static Graph load_edge_list(const std::string& path,
                                std::string* header_out = nullptr);
    void save_edge_list(const std::string& path,
                        const std::string& header_comment = "") const;

private:
    std::vector<std::vector<int>> adj_;
};

struct Bipartition {
    std::vector<int> side_of;  // 0 = A, 1 = B
    std::vector<int> A;
    std::vector<int> B;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// d-regular graph via the configuration model, resampling on loops or
// multi-edges until simple. Deterministic given the seed.
// Requires n > d and n*d even.
Graph random_regular(int n, int d, std::uint64_t seed);

// Spanning bipartite subgraph where every vertex keeps at least half
// of its degree: local search moving any vertex whose cross-degree is
// below half its degree, in id order, until the cut is locally maximal.
std::pair<Bipartition, Graph> bipartize(const Graph& g);

// Length of a shortest cycle, kInfiniteGirth for forests.
int girth(const Graph& g);

// True iff g contains a (not necessarily induced) subgraph isomorphic
// to the pattern. Backtracking over injective maps with degree pruning;
// K_{a,b} patterns get a common-neighborhood fast path.
bool contains_pattern(const Graph& g, const Graph& pattern);

// Pattern constructors.
Graph cycle_graph(int k);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph hypercube3();

bool is_bipartite(const Graph& g, std::vector<int>* side_out = nullptr);
bool is_forest(const Graph& g);

// FNV-1a over the canonical edge list; used as input digest in reports.
std::uint64_t graph_digest(const Graph& g);

}  // namespace ffsg
