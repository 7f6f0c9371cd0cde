#include "ffs/templates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>

#include "ffs/homomorphism.hpp"

namespace ffsg {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long i = 2; i * i <= q; ++i)
        if (q % i == 0) return false;
    return true;
}

namespace {

// Projective points over F_q: nonzero triples up to scalar, normalized
// so the first nonzero coordinate is 1.
std::vector<std::array<int, 3>> projective_points(long q) {
    std::vector<std::array<int, 3>> pts;
    pts.reserve(q * q + q + 1);
    // (1, y, z), (0, 1, z), (0, 0, 1)
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});
    return pts;
}

int dot3(const std::array<int, 3>& a, const std::array<int, 3>& b, long q) {
    long s = static_cast<long>(a[0]) * b[0] + static_cast<long>(a[1]) * b[1] +
             static_cast<long>(a[2]) * b[2];
    return static_cast<int>(s % q);
}

}  // namespace

Graph polarity_graph(long q) {
    if (!is_prime(q)) throw std::invalid_argument("polarity_graph requires a prime q");
    auto pts = projective_points(q);
    const int n = static_cast<int>(pts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot3(pts[i], pts[j], q) == 0) g.add_edge(i, j);
    return g;
}

Graph incidence_graph(long q) {
    if (!is_prime(q)) throw std::invalid_argument("incidence_graph requires a prime q");
    auto pts = projective_points(q);  // lines use the same coordinates
    const int n = static_cast<int>(pts.size());
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot3(pts[i], pts[j], q) == 0) g.add_edge(i, n + j);
    return g;
}

namespace {

// Shortest cycle through any vertex, as a vertex sequence; empty if
// girth >= bound.
std::vector<int> find_short_cycle(const Graph& g, int bound) {
    const int n = g.num_vertices();
    std::vector<int> best;
    int best_len = bound;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best_len) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (len < best_len) {
                        best_len = len;
                        // walk both branches up to the root
                        std::vector<int> left, right;
                        for (int x = u; x != -1; x = parent[x]) left.push_back(x);
                        for (int x = w; x != -1; x = parent[x]) right.push_back(x);
                        // drop the common tail beyond the meeting point
                        while (left.size() >= 2 && right.size() >= 2 &&
                               left[left.size() - 1] == right[right.size() - 1] &&
                               left[left.size() - 2] == right[right.size() - 2]) {
                            left.pop_back();
                            right.pop_back();
                        }
                        best.assign(left.begin(), left.end());
                        for (size_t k = right.size() - 1; k + 1 >= 2; --k)
                            best.push_back(right[k - 1]);
                        // `best` now lists the cycle vertices in order
                    }
                }
            }
        }
    }
    return best;
}

// Deletion rule shared by the pruning passes: the cycle/copy edge with
// maximal endpoint degree sum, ties by smallest (u, v) pair.
std::pair<int, int> pick_edge_to_delete(const Graph& g,
                                        const std::vector<std::pair<int, int>>& edges) {
    std::pair<int, int> chosen = edges.front();
    int chosen_score = -1;
    for (auto [u, v] : edges) {
        int a = std::min(u, v), b = std::max(u, v);
        int score = g.degree(a) + g.degree(b);
        if (score > chosen_score ||
            (score == chosen_score && std::make_pair(a, b) < chosen)) {
            chosen = {a, b};
            chosen_score = score;
        }
    }
    return chosen;
}

}  // namespace

Graph prune_short_cycles(Graph g, int g_target) {
    while (true) {
        auto cycle = find_short_cycle(g, g_target);
        if (cycle.empty()) return g;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < cycle.size(); ++i)
            edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
        auto [u, v] = pick_edge_to_delete(g, edges);
        g.remove_edge(u, v);
    }
}

namespace {

// Locate one copy of the pattern and return its edge set in the host;
// generic backtracking, no fast paths (we need the embedding).
std::vector<std::pair<int, int>> find_pattern_edges(const Graph& g, const Graph& p) {
    const int np = p.num_vertices();
    const int ng = g.num_vertices();
    std::vector<int> order;
    {
        std::vector<char> seen(np, 0);
        std::vector<int> by_deg(np);
        for (int i = 0; i < np; ++i) by_deg[i] = i;
        std::stable_sort(by_deg.begin(), by_deg.end(),
                         [&](int x, int y) { return p.degree(x) > p.degree(y); });
        for (int s : by_deg) {
            if (seen[s]) continue;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                order.push_back(u);
                for (int w : p.neighbors(u))
                    if (!seen[w]) { seen[w] = 1; q.push(w); }
            }
        }
    }
    std::vector<int> map(np, -1);
    std::vector<char> used(ng, 0);
    std::function<bool(size_t)> go = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int u = order[idx];
        for (int cand = 0; cand < ng; ++cand) {
            if (used[cand] || g.degree(cand) < p.degree(u)) continue;
            bool ok = true;
            for (int w : p.neighbors(u))
                if (map[w] >= 0 && !g.has_edge(cand, map[w])) { ok = false; break; }
            if (!ok) continue;
            map[u] = cand;
            used[cand] = 1;
            if (go(idx + 1)) return true;
            map[u] = -1;
            used[cand] = 0;
        }
        return false;
    };
    if (!go(0)) return {};
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : p.edge_list()) out.emplace_back(map[u], map[v]);
    return out;
}

}  // namespace

Graph random_pattern_free(int m, const FamilySpec& family, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("random_pattern_free needs m >= 2");

    // Deletion-regime exponent.
    double exponent;
    if (family.hint == DetectionHint::CycleList && family.girth_target >= 4) {
        int r = std::max(1, (family.girth_target - 2) / 2);
        exponent = -1.0 + 1.0 / (2.0 * r);
    } else if (family.hint == DetectionHint::CompleteBipartite && family.kab_a >= 1) {
        double a = family.kab_a, b = family.kab_b;
        exponent = -(a + b - 2.0) / (a * b - 1.0);
    } else {
        exponent = -0.5;
    }
    double p = std::pow(static_cast<double>(m), exponent);

    std::mt19937_64 rng(seed);
    auto bernoulli = [&rng, p] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
    };
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (bernoulli()) g.add_edge(u, v);

    // Cycle families go through the girth pruner; everything else
    // deletes one edge per found copy until no pattern remains.
    if (family.hint == DetectionHint::CycleList && family.girth_target >= 4) {
        g = prune_short_cycles(std::move(g), family.girth_target);
    } else {
        for (const Graph& pattern : family.patterns) {
            while (true) {
                auto copy = find_pattern_edges(g, pattern);
                if (copy.empty()) break;
                auto [u, v] = pick_edge_to_delete(g, copy);
                g.remove_edge(u, v);
            }
        }
    }

    if (g.num_edges() == 0)
        throw std::runtime_error(
            "random_pattern_free degenerated (no edges survive); retry with larger m or a new seed");
    return g;
}

namespace {

TemplateGraph finalize(Graph g, std::string tag) {
    TemplateGraph t;
    t.graph = std::move(g);
    t.delta = t.graph.min_degree();
    t.Delta = t.graph.max_degree();
    if (t.delta < 1)
        throw std::runtime_error("template audit failed: isolated vertex (delta = 0) in " + tag);
    t.beta = static_cast<double>(t.Delta) / t.delta;
    t.construction_tag = std::move(tag);
    return t;
}

}  // namespace

TemplateGraph build_template(const FamilySpec& family, int d, double alpha, std::uint64_t seed) {
    if (d < 4) throw std::invalid_argument("build_template requires d >= 4");
    const double target = alpha * d;

    TemplateGraph t;
    if (family.hint == DetectionHint::CompleteBipartite && family.kab_a == 2 &&
        family.kab_b == 2) {
        long q = 2;
        while (!is_prime(q) || static_cast<double>(q) * q + q + 1 < target) ++q;
        t = finalize(polarity_graph(q), "polarity(q=" + std::to_string(q) + ")");
    } else if (family.hint == DetectionHint::CycleList && family.girth_target <= 6) {
        long q = 2;
        while (!is_prime(q) || 2.0 * (static_cast<double>(q) * q + q + 1) < target) ++q;
        t = finalize(incidence_graph(q), "incidence(q=" + std::to_string(q) + ")");
    } else {
        // The deletion construction leaves a few isolated vertices; only
        // the subgraph actually used serves as the color set, so strip
        // them and oversample until the stripped order still meets the
        // target.
        int m = static_cast<int>(std::ceil(target));
        std::uint64_t try_seed = seed;
        for (int attempt = 0;; ++attempt) {
            Graph raw = random_pattern_free(m, family, try_seed);
            std::vector<int> keep;
            for (int v = 0; v < raw.num_vertices(); ++v)
                if (raw.degree(v) > 0) keep.push_back(v);
            std::vector<int> newid(raw.num_vertices(), -1);
            for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
            Graph stripped(static_cast<int>(keep.size()));
            for (auto [u, v] : raw.edge_list()) stripped.add_edge(newid[u], newid[v]);
            if (stripped.num_vertices() >= target) {
                t = finalize(std::move(stripped),
                             "random_pattern_free(m=" + std::to_string(m) + ")");
                break;
            }
            if (attempt >= 16)
                throw std::runtime_error("random template construction keeps falling short of alpha*d");
            m += std::max(16, m / 5);
            ++try_seed;
        }
    }

    if (t.graph.num_vertices() < target)
        throw std::runtime_error("template audit failed: order below alpha*d");
    for (size_t i = 0; i < family.patterns.size(); ++i)
        if (contains_pattern(t.graph, family.patterns[i]))
            throw std::runtime_error("template audit failed: contains " + family.pattern_names[i]);
    if (t.graph.num_vertices() <= kHomCheckCap) {
        if (!is_hom_free(family, t.graph))
            throw std::runtime_error(
                "template audit failed: admits a locally injective homomorphism");
    } else if (!family.closed) {
        throw std::runtime_error(
            "cannot certify hom*-freeness: template too large for direct verification and the "
            "family is not claimed closed");
    }
    return t;
}

}  // namespace ffsg
