#include "ffs/homomorphism.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ffsg {

int PartialColoring::num_colored() const {
    int c = 0;
    for (int x : color_)
        if (x >= 0) ++c;
    return c;
}

int bad_count(int v, const PartialColoring& chi, const Graph& g) {
    if (!chi.is_colored(v)) throw std::invalid_argument("bad_count on uncolored vertex");
    return bad_count_with(v, chi.color(v), chi, g);
}

int bad_count_with(int v, int color, const PartialColoring& chi, const Graph& g) {
    int count = 0;
    for (int u : g.neighbors(v)) {
        for (int w : g.neighbors(u)) {
            if (w != v && chi.is_colored(w) && chi.color(w) == color) {
                ++count;
                break;
            }
        }
    }
    return count;
}

namespace {

// Connected components of a pattern graph, as vertex lists.
std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) { comp[w] = id; q.push(w); }
        }
    }
    return out;
}

// Backtracking count of locally injective homomorphisms for a single
// connected component, vertices taken in BFS order from a max-degree
// vertex so every non-root vertex has a mapped neighbor when placed.
long count_component(const Graph& pattern, const std::vector<int>& comp, const Graph& target,
                     bool early_exit) {
    const int nt = target.num_vertices();
    int root = comp[0];
    for (int v : comp)
        if (pattern.degree(v) > pattern.degree(root)) root = v;

    std::vector<int> order;
    {
        std::vector<char> seen(pattern.num_vertices(), 0);
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int w : pattern.neighbors(u))
                if (!seen[w]) { seen[w] = 1; q.push(w); }
        }
    }

    std::vector<int> map(pattern.num_vertices(), -1);
    long count = 0;

    // Placing u at t: every mapped pattern-neighbor w of u must satisfy
    // (t, map[w]) in E(T), and local injectivity must hold around every
    // mapped neighbor w of u (no other mapped neighbor of w shares t)
    // and around u itself (mapped neighbors of u have distinct images).
    auto feasible = [&](int u, int t) {
        for (int w : pattern.neighbors(u)) {
            if (map[w] < 0) continue;
            if (!target.has_edge(t, map[w])) return false;
            for (int x : pattern.neighbors(w))
                if (x != u && map[x] == t) return false;
        }
        // distinct images within N(u)
        for (int w1 : pattern.neighbors(u)) {
            if (map[w1] < 0) continue;
            for (int w2 : pattern.neighbors(u)) {
                if (w2 >= w1 || map[w2] < 0) continue;
                if (map[w1] == map[w2]) return false;
            }
        }
        return true;
    };

    std::function<bool(size_t)> go = [&](size_t idx) -> bool {
        if (idx == order.size()) {
            ++count;
            return early_exit;
        }
        int u = order[idx];
        for (int t = 0; t < nt; ++t) {
            if (target.degree(t) < pattern.degree(u)) continue;
            if (!feasible(u, t)) continue;
            map[u] = t;
            bool stop = go(idx + 1);
            map[u] = -1;
            if (stop) return true;
        }
        return false;
    };
    go(0);
    return count;
}

}  // namespace

long count_locally_injective_homs(const Graph& pattern, const Graph& target, bool early_exit) {
    if (pattern.num_vertices() == 0) return 1;
    long total = 1;
    for (const auto& comp : components(pattern)) {
        long c = count_component(pattern, comp, target, early_exit);
        if (c == 0) return 0;
        if (early_exit) c = 1;
        total *= c;
    }
    return total;
}

bool is_hom_free(const FamilySpec& family, const Graph& target) {
    for (const Graph& p : family.patterns)
        if (count_locally_injective_homs(p, target, /*early_exit=*/true) > 0) return false;
    return true;
}

std::optional<Graph> closedness_witness_search(const FamilySpec& family, int max_n) {
    if (max_n > 8) throw std::invalid_argument("witness search capped at max_n = 8");
    int min_pattern = std::numeric_limits<int>::max();
    for (const Graph& p : family.patterns)
        min_pattern = std::min(min_pattern, p.min_degree());

    for (int k = 1; k <= max_n; ++k) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) slots.emplace_back(u, v);
        const std::uint64_t total = 1ull << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            // graphs where the top vertex is isolated already appeared at k-1
            if (k > 1) {
                bool top_isolated = true;
                for (size_t s = 0; s < slots.size() && top_isolated; ++s)
                    if ((mask >> s) & 1ull)
                        if (slots[s].second == k - 1) top_isolated = false;
                if (top_isolated) continue;
            }
            Graph g(k);
            for (size_t s = 0; s < slots.size(); ++s)
                if ((mask >> s) & 1ull) g.add_edge(slots[s].first, slots[s].second);
            if (!family_free(g, family)) continue;
            if (!is_hom_free(family, g)) return g;
        }
    }
    return std::nullopt;
}

}  // namespace ffsg
