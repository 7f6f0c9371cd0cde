#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ffs/family.hpp"
#include "ffs/graph.hpp"
#include "ffs/homomorphism.hpp"
#include "ffs/templates.hpp"
#include "ffs/verifier.hpp"

namespace ffsg {

struct Params {
    double alpha = 64.0;
    int phase2_uncolored_threshold = 0;  // 0: default ceil(sqrt(delta(template)))
    int max_phase2_iterations = 0;       // 0: default ceil(10*log2(d)) + 5
    int max_retries = 20;
    std::uint64_t seed = 0;

    void validate(const TemplateGraph& t) const;  // throws on violation
};

struct Phase1Report {
    int uncolored_after_random = 0;  // |A \ A_0|
    long edges_deleted_random = 0;   // step 2
    long edges_deleted_tail = 0;     // step 4
    bool p1 = false;                 // min_A degree >= d/2 (measured)
    bool p2 = false;                 // rainbow B-neighborhoods (hard)
    bool p3 = false;                 // measured
    int p3_min_count = 0;            // min over (b,c) of the P3 count
    double p3_threshold = 0.0;       // delta / (2*alpha_hat)
};

struct Phase1Result {
    Graph h;
    PartialColoring chi;
    Phase1Report report;
};

struct Phase2IterationRecord {
    int iteration = 0;
    int uncolored = 0;        // |B_i|
    int max_b_of_a = 0;       // max_a |B_i(a)|
    long goodneighs_total = 0;
    long edges_deleted = 0;
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;  // only meaningful at iteration 1
};

struct Phase2Report {
    int tau = 0;
    bool cap_tripped = false;
    std::vector<Phase2IterationRecord> trace;
    long edges_deleted_tail = 0;
    bool q1 = false;  // measured: delta(H) >= delta/(4*alpha_hat)
    int delta_h = 0;
    double q1_target = 0.0;
};

struct Phase2Result {
    Graph h;
    PartialColoring chi;
    Phase2Report report;
};

// Internal state of the Phase II iteration loop, exposed so the
// per-iteration step can be driven and inspected by tests.
struct Phase2State {
    Graph h;
    PartialColoring chi;
    std::vector<char> in_b_unc;   // uncolored-B membership (B_i)
    std::vector<int> b_vertices;  // all of B, ascending
    std::vector<int> initial_degree;  // d_{H_0}(b) for the degree invariant
    int d = 0;                        // the regular degree of the input
    int iteration = 0;
    std::vector<Phase2IterationRecord> trace;

    int max_uncolored_neighbors(const std::vector<int>& a_vertices) const;
};

// Phase I: random coloring of A with the uncoloring rule
// Bad >= d/sqrt(alpha_hat), symmetric conflict deletion, then the
// deterministic Bad-minimizing tail over the uncolored A-vertices in
// id order. P2 is asserted; P1/P3 are measured.
Phase1Result phase1(const Graph& h0, const Bipartition& sides, const TemplateGraph& t,
                    const Params& params, std::mt19937_64& rng);

struct P3Check {
    bool pass = false;
    int min_count = 0;
    double threshold = 0.0;
};
P3Check check_P3(const Graph& h, const PartialColoring& chi_a, const Bipartition& sides,
                 const TemplateGraph& t, int d);

// One random round of Phase II over the currently uncolored B-vertices.
void phase2_iteration(Phase2State& state, const Bipartition& sides, const TemplateGraph& t,
                      int threshold, std::mt19937_64& rng);

// Full Phase II: iterate until max_a |B_i(a)| <= threshold or the cap
// trips (recorded as failure), then color the remaining B-vertices
// deterministically. Q2/Q3 are asserted; Q1 is measured.
Phase2Result phase2(const Graph& h_s, const PartialColoring& chi_s, const Bipartition& sides,
                    const TemplateGraph& t, const Params& params, int d, std::mt19937_64& rng);

struct SolutionReport {
    bool success = false;  // measured gates (P3, Q1) met within the retry budget
    std::uint64_t seed = 0;
    std::uint64_t input_digest = 0;
    int n = 0;
    int d = 0;
    double alpha = 0.0;
    double alpha_hat = 0.0;
    std::string family;
    std::string template_tag;
    int template_order = 0;
    int template_delta = 0;
    int template_Delta = 0;
    double template_beta = 0.0;
    int retries = 0;
    std::vector<std::uint64_t> attempt_seeds;
    Phase1Report phase1;
    Phase2Report phase2;
    Graph h;
    PartialColoring chi;
    Verdict verdict;

    std::string to_json() const;
};

// bipartize -> build_template -> {phase1 until P3, phase2 until Q1}
// within a shared retry budget; after the budget is exhausted the best
// completed attempt is returned with success=false. The returned H is
// always verified (structural booleans hold on every terminating run).
SolutionReport run_pipeline(const Graph& g, const FamilySpec& family, const Params& params,
                            const TemplateGraph* prebuilt_template = nullptr);

}  // namespace ffsg
