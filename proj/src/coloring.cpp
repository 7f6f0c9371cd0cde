#include "ffs/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ffsg {

namespace {

// Bounded uniform draw, independent of the standard library's
// distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % bound;
}

[[noreturn]] void structural_failure(const std::string& what) {
    throw std::logic_error("structural invariant violated (engine bug): " + what);
}

}  // namespace

void Params::validate(const TemplateGraph& t) const {
    if (alpha < 32.0 * t.beta) {
        std::ostringstream os;
        os << "alpha = " << alpha << " below 32*beta = " << 32.0 * t.beta
           << " for template " << t.construction_tag;
        throw std::invalid_argument(os.str());
    }
    if (phase2_uncolored_threshold < 0 || max_phase2_iterations < 0 || max_retries < 0)
        throw std::invalid_argument("caps and thresholds must be nonnegative");
}

int Phase2State::max_uncolored_neighbors(const std::vector<int>& a_vertices) const {
    int mx = 0;
    for (int a : a_vertices) {
        int c = 0;
        for (int b : h.neighbors(a))
            if (in_b_unc[b]) ++c;
        mx = std::max(mx, c);
    }
    return mx;
}

Phase1Result phase1(const Graph& h0, const Bipartition& sides, const TemplateGraph& t,
                    const Params& params, std::mt19937_64& rng) {
    const int n = h0.num_vertices();
    const int nt = t.graph.num_vertices();
    const int d = h0.max_degree();
    const double alpha_hat = static_cast<double>(nt) / d;

    Phase1Result out;
    out.h = h0;
    out.chi = PartialColoring(n);
    Graph& h = out.h;
    PartialColoring& chi = out.chi;

    // Step 1: independent uniform colors for A, in id order.
    for (int a : sides.A) chi.set(a, static_cast<int>(draw(rng, nt)));

    // Uncolor a if Bad(a, chi'_0, H_0) >= d / sqrt(alpha_hat); decisions
    // are simultaneous against the fully colored chi'_0.
    const double uncolor_threshold = d / std::sqrt(alpha_hat);
    std::vector<int> uncolored;
    std::vector<int> original_bad(n, 0);
    for (int a : sides.A) original_bad[a] = bad_count(a, chi, h);
    for (int a : sides.A)
        if (original_bad[a] >= uncolor_threshold) uncolored.push_back(a);
    for (int a : uncolored) chi.unset(a);
    out.report.uncolored_after_random = static_cast<int>(uncolored.size());

    // Step 2: symmetric conflict deletion among retained vertices. Any
    // color appearing more than once in N(b) loses all its edges at b.
    {
        std::vector<std::pair<int, int>> doomed;
        std::vector<int> count(nt, 0), touched;
        for (int b : sides.B) {
            touched.clear();
            for (int a : h.neighbors(b)) {
                if (!chi.is_colored(a)) continue;
                if (count[chi.color(a)]++ == 0) touched.push_back(chi.color(a));
            }
            for (int a : h.neighbors(b))
                if (chi.is_colored(a) && count[chi.color(a)] > 1) doomed.emplace_back(a, b);
            for (int c : touched) count[c] = 0;
        }
        std::vector<int> deleted_at(n, 0);
        for (auto [a, b] : doomed) {
            h.remove_edge(a, b);
            ++deleted_at[a];
        }
        out.report.edges_deleted_random = static_cast<long>(doomed.size());
        // Edge accounting: a retained vertex loses exactly its Bad count
        // under the retained coloring, and strictly less than the
        // uncoloring threshold.
        for (int a : sides.A) {
            if (!chi.is_colored(a)) continue;
            if (deleted_at[a] != bad_count(a, chi, h0))
                structural_failure("phase 1 step 2 edge accounting");
            if (deleted_at[a] >= uncolor_threshold)
                structural_failure("phase 1 retained vertex lost >= d/sqrt(alpha) edges");
        }
    }

    // Steps 3-4: deterministic tail over uncolored A-vertices, id order.
    std::sort(uncolored.begin(), uncolored.end());
    {
        std::vector<int> bad_of_color(nt, 0);
        std::vector<int> touched;
        std::vector<int> seen_stamp(nt, -1);
        for (int a : uncolored) {
            touched.clear();
            for (int b : h.neighbors(a)) {
                for (int a2 : h.neighbors(b)) {
                    if (a2 == a || !chi.is_colored(a2)) continue;
                    int c = chi.color(a2);
                    if (seen_stamp[c] != b) {  // first time this color shows at b
                        seen_stamp[c] = b;
                        if (bad_of_color[c]++ == 0) touched.push_back(c);
                    }
                }
            }
            // Pick the color minimizing Bad; ties by smallest color id.
            int best = -1, best_bad = std::numeric_limits<int>::max();
            if (static_cast<int>(touched.size()) < nt) {
                // some color has Bad = 0; the smallest such id wins
                std::sort(touched.begin(), touched.end());
                int expect = 0;
                for (int c : touched) {
                    if (bad_of_color[c] == 0) break;  // c itself could be a zero? no: touched => >0
                    if (c != expect) break;
                    ++expect;
                }
                best = expect;
                best_bad = 0;
            } else {
                for (int c = 0; c < nt; ++c)
                    if (bad_of_color[c] < best_bad) { best_bad = bad_of_color[c]; best = c; }
            }
            // Pigeonhole: some color has Bad <= d^2 / |V(T)| = d / alpha_hat.
            if (best_bad > static_cast<double>(d) * d / nt)
                structural_failure("phase 1 pigeonhole bound on the deterministic tail");
            chi.set(a, best);
            // Step 4b: delete only a's own conflict edges.
            std::vector<int> doomed;
            for (int b : h.neighbors(a)) {
                bool conflict = false;
                for (int a2 : h.neighbors(b))
                    if (a2 != a && chi.is_colored(a2) && chi.color(a2) == best) {
                        conflict = true;
                        break;
                    }
                if (conflict) doomed.push_back(b);
            }
            for (int b : doomed) h.remove_edge(a, b);
            out.report.edges_deleted_tail += static_cast<long>(doomed.size());
            for (int c : touched) bad_of_color[c] = 0;
        }
    }

    // P2 is unconditional: every B-neighborhood rainbow.
    for (int b : sides.B) {
        std::vector<int> cols;
        for (int a : h.neighbors(b))
            if (chi.is_colored(a)) cols.push_back(chi.color(a));
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
            structural_failure("P2: non-rainbow B-neighborhood after phase 1");
    }
    out.report.p2 = true;

    // P1 measured: every A-degree at least d/2.
    out.report.p1 = true;
    for (int a : sides.A)
        if (2 * h.degree(a) < d) { out.report.p1 = false; break; }

    P3Check p3 = check_P3(h, chi, sides, t, d);
    out.report.p3 = p3.pass;
    out.report.p3_min_count = p3.min_count;
    out.report.p3_threshold = p3.threshold;
    return out;
}

P3Check check_P3(const Graph& h, const PartialColoring& chi_a, const Bipartition& sides,
                 const TemplateGraph& t, int d) {
    const int nt = t.graph.num_vertices();
    const double alpha_hat = static_cast<double>(nt) / d;
    P3Check out;
    out.threshold = t.delta / (2.0 * alpha_hat);
    out.min_count = std::numeric_limits<int>::max();

    std::vector<int> color_mult(nt, 0), good(nt, 0);
    std::vector<int> touched_colors, touched_good;
    for (int b : sides.B) {
        touched_colors.clear();
        touched_good.clear();
        for (int a : h.neighbors(b)) {
            if (!chi_a.is_colored(a)) continue;
            int c = chi_a.color(a);
            if (color_mult[c]++ == 0) touched_colors.push_back(c);
        }
        // good[c] = #{a in N(b) : chi(a)c in E(T)}
        for (int cprime : touched_colors)
            for (int c : t.graph.neighbors(cprime)) {
                if (good[c] == 0) touched_good.push_back(c);
                good[c] += color_mult[cprime];
            }
        // minimum over all colors c in V(T)
        int min_here;
        if (static_cast<int>(touched_good.size()) < nt) {
            min_here = 0;  // some color has no template-adjacent neighbor at b
        } else {
            min_here = std::numeric_limits<int>::max();
            for (int c = 0; c < nt; ++c) min_here = std::min(min_here, good[c]);
        }
        out.min_count = std::min(out.min_count, min_here);
        for (int c : touched_colors) color_mult[c] = 0;
        for (int c : touched_good) good[c] = 0;
    }
    if (sides.B.empty()) out.min_count = 0;
    out.pass = out.min_count >= out.threshold;
    return out;
}

void phase2_iteration(Phase2State& state, const Bipartition& sides, const TemplateGraph& t,
                      int threshold, std::mt19937_64& rng) {
    const int nt = t.graph.num_vertices();
    Graph& h = state.h;
    PartialColoring& chi = state.chi;
    const int d = state.d;
    const double alpha_hat = static_cast<double>(nt) / d;
    const double p_plus = t.p_plus();

    ++state.iteration;
    Phase2IterationRecord rec;
    rec.iteration = state.iteration;

    // Snapshot B_{i-1} and, per A-vertex, B_{i-1}(a).
    std::vector<int> prev_unc;
    for (int b : state.b_vertices)
        if (state.in_b_unc[b]) prev_unc.push_back(b);
    std::vector<int> prev_b_of_a(chi.size(), 0);
    for (int a : sides.A)
        for (int b : h.neighbors(a))
            if (state.in_b_unc[b]) ++prev_b_of_a[a];

    // Step 2a: independent uniform tentative colors, id order.
    for (int b : prev_unc) chi.set(b, static_cast<int>(draw(rng, nt)));

    // Step 2b: simultaneous uncoloring against the full tentative chi_i.
    // good_b = |N_{H_{i-1}}(b) cap chi_i^{-1}(N_T(chi_i(b)))| counts
    // A-neighbors whose phase-1 color is template-adjacent to chi_i(b).
    std::vector<int> retained;
    std::vector<int> newly_uncolored;
    std::vector<int> good_of(chi.size(), 0);
    for (int b : prev_unc) {
        const int cb = chi.color(b);
        const auto& tnb = t.graph.neighbors(cb);
        int good = 0;
        for (int a : h.neighbors(b))
            if (std::binary_search(tnb.begin(), tnb.end(), chi.color(a))) ++good;
        good_of[b] = good;
        int bad = 0;
        for (int a : h.neighbors(b)) {
            for (int b2 : h.neighbors(a)) {
                if (b2 != b && chi.is_colored(b2) && chi.color(b2) == cb) {
                    ++bad;
                    break;
                }
            }
        }
        if (bad >= 0.5 * good)
            newly_uncolored.push_back(b);
        else
            retained.push_back(b);
    }
    for (int b : newly_uncolored) chi.unset(b);

    // Step 2c: deletions for retained b, decided against H_{i-1} and the
    // post-uncoloring chi_i, then applied at once.
    std::vector<std::pair<int, int>> doomed;
    std::vector<int> deleted_good_at(chi.size(), 0);
    for (int b : retained) {
        const int cb = chi.color(b);
        const auto& tnb = t.graph.neighbors(cb);
        for (int a : h.neighbors(b)) {
            bool conflict = false;
            for (int b2 : h.neighbors(a))
                if (b2 != b && chi.is_colored(b2) && chi.color(b2) == cb) {
                    conflict = true;
                    break;
                }
            bool good_edge = std::binary_search(tnb.begin(), tnb.end(), chi.color(a));
            if (conflict || !good_edge) {
                doomed.emplace_back(a, b);
                if (good_edge) ++deleted_good_at[b];
            }
        }
    }
    for (auto [a, b] : doomed) h.remove_edge(a, b);
    rec.edges_deleted = static_cast<long>(doomed.size());

    // Accounting check: a retained vertex loses fewer than half
    // of its good edges in the iteration it retains a color.
    for (int b : retained)
        if (2 * deleted_good_at[b] >= std::max(good_of[b], 1))
            structural_failure("phase 2 retained vertex lost half of its good edges");

    for (int b : retained) state.in_b_unc[b] = 0;

    // GoodNeighs_i(a): newly colored b in B_{i-1}(a) with chi(a)chi(b)
    // a template edge (counted against the pre-deletion neighborhoods).
    std::vector<char> retained_flag(chi.size(), 0);
    for (int b : retained) retained_flag[b] = 1;
    long goodneighs_total = 0;
    bool c2 = true;
    {
        // recompute B_{i-1}(a) membership from the snapshot degrees: we
        // recorded prev_b_of_a sizes, but need actual membership; use
        // doomed edges to reconstruct pre-deletion adjacency.
        // Simpler: goodneighs over current h plus doomed edges.
        std::vector<std::vector<int>> restored(chi.size());
        for (auto [a, b] : doomed) restored[a].push_back(b);
        for (int a : sides.A) {
            int gn = 0;
            auto consider = [&](int b) {
                if (!retained_flag[b]) return;
                if (t.graph.has_edge(chi.color(a), chi.color(b))) ++gn;
            };
            for (int b : h.neighbors(a)) consider(b);
            for (int b : restored[a]) consider(b);
            goodneighs_total += gn;
            double bound = std::max(2.0 * p_plus * prev_b_of_a[a], static_cast<double>(threshold));
            if (gn > bound) c2 = false;
        }
    }
    rec.goodneighs_total = goodneighs_total;
    rec.c2 = c2;

    // C1: |B_i(a)| <= d / alpha_hat^{i/2}.
    bool c1 = true;
    int max_b_of_a = 0;
    int unc_count = 0;
    for (int b : state.b_vertices)
        if (state.in_b_unc[b]) ++unc_count;
    const double c1_bound = d / std::pow(alpha_hat, state.iteration / 2.0);
    for (int a : sides.A) {
        int cnt = 0;
        for (int b : h.neighbors(a))
            if (state.in_b_unc[b]) ++cnt;
        max_b_of_a = std::max(max_b_of_a, cnt);
        if (cnt > c1_bound) c1 = false;
    }
    rec.c1 = c1;
    rec.uncolored = unc_count;
    rec.max_b_of_a = max_b_of_a;

    // C3 (after iteration 1): degree of every a into B \ B_1 at least
    // delta / (4*alpha_hat).
    if (state.iteration == 1) {
        bool c3 = true;
        const double c3_bound = t.delta / (4.0 * alpha_hat);
        for (int a : sides.A) {
            int colored_deg = 0;
            for (int b : h.neighbors(a))
                if (!state.in_b_unc[b]) ++colored_deg;
            if (colored_deg < c3_bound) { c3 = false; break; }
        }
        rec.c3 = c3;
    }

    // Degree invariant: edges at a still-uncolored vertex are untouched.
    for (int b : state.b_vertices)
        if (state.in_b_unc[b] && h.degree(b) != state.initial_degree[b])
            structural_failure("phase 2 degree invariant for uncolored vertices");

    state.trace.push_back(rec);
}

Phase2Result phase2(const Graph& h_s, const PartialColoring& chi_s, const Bipartition& sides,
                    const TemplateGraph& t, const Params& params, int d, std::mt19937_64& rng) {
    const int nt = t.graph.num_vertices();
    const double alpha_hat = static_cast<double>(nt) / d;

    int threshold = params.phase2_uncolored_threshold > 0
                        ? params.phase2_uncolored_threshold
                        : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(t.delta))));
    int cap = params.max_phase2_iterations > 0
                  ? params.max_phase2_iterations
                  : static_cast<int>(std::ceil(10.0 * std::log2(std::max(2, d)))) + 5;

    Phase2State state;
    state.h = h_s;
    state.chi = chi_s;
    state.d = d;
    state.b_vertices = sides.B;
    state.in_b_unc.assign(h_s.num_vertices(), 0);
    for (int b : sides.B) state.in_b_unc[b] = 1;
    state.initial_degree.resize(h_s.num_vertices());
    for (int v = 0; v < h_s.num_vertices(); ++v) state.initial_degree[v] = h_s.degree(v);

    Phase2Result out;
    bool cap_tripped = false;
    while (state.max_uncolored_neighbors(sides.A) > threshold) {
        if (state.iteration >= cap) {
            cap_tripped = true;
            break;
        }
        phase2_iteration(state, sides, t, threshold, rng);
    }

    // Deterministic tail over the remaining uncolored B, id order:
    // minimize Bad, then maximize conflict-free template-adjacent
    // neighbors, then smallest color id.
    Graph& h = state.h;
    PartialColoring& chi = state.chi;
    std::vector<int> tail;
    for (int b : state.b_vertices)
        if (state.in_b_unc[b]) tail.push_back(b);

    std::vector<int> bad_of(nt, 0), good_of(nt, 0), seen_stamp(nt, -1);
    std::vector<int> bad_touched, good_touched;
    for (int b : tail) {
        bad_touched.clear();
        good_touched.clear();
        for (int a : h.neighbors(b)) {
            // conflict colors at a: colors on N(a) \ {b}
            for (int b2 : h.neighbors(a)) {
                if (b2 == b || !chi.is_colored(b2)) continue;
                int c = chi.color(b2);
                if (seen_stamp[c] != a) {
                    seen_stamp[c] = a;
                    if (bad_of[c]++ == 0) bad_touched.push_back(c);
                }
            }
            for (int c : t.graph.neighbors(chi.color(a))) {
                if (seen_stamp[c] == a) continue;  // conflicting at a: not a keepable edge
                if (good_of[c]++ == 0) good_touched.push_back(c);
            }
        }
        int best = -1, best_bad = std::numeric_limits<int>::max(), best_good = -1;
        if (static_cast<int>(bad_touched.size()) < nt) {
            best_bad = 0;
            // among Bad-0 colors, maximize good; candidates with good > 0
            // all live in good_touched
            for (int c : good_touched) {
                if (bad_of[c] != 0) continue;
                if (good_of[c] > best_good || (good_of[c] == best_good && c < best))
                    { best_good = good_of[c]; best = c; }
            }
            if (best_good <= 0) {
                // every Bad-0 color has good 0: smallest color id with Bad 0
                std::vector<int> blocked = bad_touched;
                std::sort(blocked.begin(), blocked.end());
                int expect = 0;
                for (int c : blocked) {
                    if (c != expect) break;
                    ++expect;
                }
                best = expect;
                best_good = 0;
            }
        } else {
            for (int c = 0; c < nt; ++c) {
                int g = good_of[c];
                if (bad_of[c] < best_bad ||
                    (bad_of[c] == best_bad && (g > best_good || (g == best_good && c < best)))) {
                    best_bad = bad_of[c];
                    best_good = g;
                    best = c;
                }
            }
        }
        chi.set(b, best);
        // delete b's conflict edges and non-template edges
        std::vector<int> doomed;
        for (int a : h.neighbors(b)) {
            bool conflict = false;
            for (int b2 : h.neighbors(a))
                if (b2 != b && chi.is_colored(b2) && chi.color(b2) == best) {
                    conflict = true;
                    break;
                }
            if (conflict || !t.graph.has_edge(chi.color(a), best)) doomed.push_back(a);
        }
        for (int a : doomed) h.remove_edge(a, b);
        out.report.edges_deleted_tail += static_cast<long>(doomed.size());
        for (int c : bad_touched) bad_of[c] = 0;
        for (int c : good_touched) good_of[c] = 0;
        // stamps are keyed by a-id and a-ids repeat across b's, so a full
        // reset is needed between tail vertices
        std::fill(seen_stamp.begin(), seen_stamp.end(), -1);
    }

    // Q2/Q3 unconditional.
    for (int v = 0; v < h.num_vertices(); ++v) {
        std::vector<int> cols;
        for (int u : h.neighbors(v))
            if (chi.is_colored(u)) cols.push_back(chi.color(u));
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
            structural_failure("Q2: non-rainbow neighborhood after phase 2");
    }
    for (auto [u, v] : h.edge_list()) {
        if (!chi.is_colored(u) || !chi.is_colored(v))
            structural_failure("Q3: uncolored endpoint after phase 2");
        if (!t.graph.has_edge(chi.color(u), chi.color(v)))
            structural_failure("Q3: edge mapped outside the template");
    }

    out.report.tau = state.iteration;
    out.report.cap_tripped = cap_tripped;
    out.report.trace = state.trace;
    out.report.q1_target = t.delta / (4.0 * alpha_hat);
    out.report.delta_h = h.min_degree();
    out.report.q1 = !cap_tripped && out.report.delta_h >= out.report.q1_target;
    out.h = std::move(state.h);
    out.chi = std::move(state.chi);
    return out;
}

namespace {

nlohmann::json phase2_trace_json(const Phase2Report& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : r.trace) {
        arr.push_back({{"iteration", rec.iteration},
                       {"uncolored", rec.uncolored},
                       {"max_b_of_a", rec.max_b_of_a},
                       {"goodneighs_total", rec.goodneighs_total},
                       {"edges_deleted", rec.edges_deleted},
                       {"c1", rec.c1},
                       {"c2", rec.c2},
                       {"c3", rec.c3}});
    }
    return arr;
}

}  // namespace

std::string SolutionReport::to_json() const {
    nlohmann::json j;
    j["success"] = success;
    j["seed"] = seed;
    j["input_digest"] = input_digest;
    j["n"] = n;
    j["d"] = d;
    j["alpha"] = alpha;
    j["alpha_hat"] = alpha_hat;
    j["family"] = family;
    j["template"] = {{"tag", template_tag},
                     {"order", template_order},
                     {"delta", template_delta},
                     {"Delta", template_Delta},
                     {"beta", template_beta}};
    j["retries"] = retries;
    j["attempt_seeds"] = attempt_seeds;
    j["phase1"] = {{"uncolored_after_random", phase1.uncolored_after_random},
                   {"edges_deleted_random", phase1.edges_deleted_random},
                   {"edges_deleted_tail", phase1.edges_deleted_tail},
                   {"p1", phase1.p1},
                   {"p2", phase1.p2},
                   {"p3", phase1.p3},
                   {"p3_min_count", phase1.p3_min_count},
                   {"p3_threshold", phase1.p3_threshold}};
    j["phase2"] = {{"tau", phase2.tau},
                   {"cap_tripped", phase2.cap_tripped},
                   {"edges_deleted_tail", phase2.edges_deleted_tail},
                   {"q1", phase2.q1},
                   {"delta_h", phase2.delta_h},
                   {"q1_target", phase2.q1_target},
                   {"trace", phase2_trace_json(phase2)}};
    j["verdict"] = {{"spanning", verdict.spanning},
                    {"subgraph", verdict.subgraph},
                    {"rainbow", verdict.rainbow},
                    {"edge_consistent", verdict.edge_consistent},
                    {"f_free", verdict.f_free},
                    {"min_degree", verdict.min_degree},
                    {"target_degree", verdict.target_degree}};
    return j.dump(2) + "\n";
}

SolutionReport run_pipeline(const Graph& g, const FamilySpec& family, const Params& params,
                            const TemplateGraph* prebuilt_template) {
    if (!g.is_regular())
        throw std::invalid_argument("run_pipeline requires a regular input graph");
    std::string why;
    if (!family_admissible(family, &why))
        throw std::invalid_argument("family not admissible: " + why);
    const int d = g.max_degree();
    if (d < 1) throw std::invalid_argument("input graph has no edges");

    auto [sides, h0] = bipartize(g);

    TemplateGraph built;
    const TemplateGraph* t = prebuilt_template;
    if (!t) {
        built = build_template(family, d, params.alpha, params.seed);
        t = &built;
    }
    params.validate(*t);

    SolutionReport rep;
    rep.seed = params.seed;
    rep.input_digest = graph_digest(g);
    rep.n = g.num_vertices();
    rep.d = d;
    rep.alpha = params.alpha;
    rep.alpha_hat = static_cast<double>(t->graph.num_vertices()) / d;
    rep.family = family.name;
    rep.template_tag = t->construction_tag;
    rep.template_order = t->graph.num_vertices();
    rep.template_delta = t->delta;
    rep.template_Delta = t->Delta;
    rep.template_beta = t->beta;

    int retries = 0;
    std::uint64_t attempt_index = 0;
    auto next_rng = [&]() {
        std::uint64_t s = params.seed ^ attempt_index;
        rep.attempt_seeds.push_back(s);
        ++attempt_index;
        return std::mt19937_64(s);
    };

    // Phase 1 until P3 passes, keeping the attempt with the largest
    // measured P3 margin.
    Phase1Result best1;
    bool have1 = false;
    while (true) {
        auto rng = next_rng();
        Phase1Result r = phase1(h0, sides, *t, params, rng);
        if (!have1 || r.report.p3_min_count > best1.report.p3_min_count) {
            best1 = std::move(r);
            have1 = true;
        }
        if (best1.report.p3) break;
        if (retries >= params.max_retries) break;
        ++retries;
    }

    // Phase 2 until Q1 passes and the cap holds, keeping the best
    // delta(H).
    Phase2Result best2;
    bool have2 = false;
    while (true) {
        auto rng = next_rng();
        Phase2Result r = phase2(best1.h, best1.chi, sides, *t, params, d, rng);
        if (!have2 || r.report.delta_h > best2.report.delta_h ||
            (r.report.delta_h == best2.report.delta_h && !best2.report.q1 && r.report.q1)) {
            best2 = std::move(r);
            have2 = true;
        }
        if (best2.report.q1) break;
        if (retries >= params.max_retries) break;
        ++retries;
    }

    rep.retries = retries;
    rep.phase1 = best1.report;
    rep.phase2 = best2.report;
    rep.h = std::move(best2.h);
    rep.chi = std::move(best2.chi);
    rep.success = best1.report.p3 && best2.report.q1;
    rep.verdict = verify_solution(g, rep.h, rep.chi, *t, family, d);
    if (!rep.verdict.all_pass())
        structural_failure("verifier rejected a terminating run");
    return rep;
}

}  // namespace ffsg
