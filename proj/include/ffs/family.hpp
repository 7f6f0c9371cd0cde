#pragma once

#include <string>
#include <vector>

#include "ffs/graph.hpp"

namespace ffsg {

enum class DetectionHint { CycleList, CompleteBipartite, Hypercube3, Generic };

// A family of forbidden patterns plus the metadata the pipeline needs:
// whether the family is claimed closed (absence of locally injective
// homomorphisms into a graph is equivalent to that graph being
// family-free) and which detection strategy fits.
struct FamilySpec {
    std::string name;
    std::vector<Graph> patterns;
    std::vector<std::string> pattern_names;
    bool closed = false;
    DetectionHint hint = DetectionHint::Generic;

    // For CycleList families {C3,...,C_{g-1}}: the target girth g.
    int girth_target = 0;
    // For a single K_{a,b}.
    int kab_a = 0, kab_b = 0;
};

// Parses family names: "C<k>", "C<j>-C<k>" (inclusive cycle range),
// "K<a>,<b>", "Q3", and '+'-separated unions of those.
// Throws std::invalid_argument on unknown syntax.
FamilySpec parse_family(const std::string& name);

// Loads a single pattern from an edge-list file as a one-pattern family.
FamilySpec family_from_pattern_file(const std::string& path);

// Pipeline admissibility: at least one bipartite pattern (the
// chi(F)=2 reduction) and no forest patterns. Returns an explanation
// when rejected.
bool family_admissible(const FamilySpec& f, std::string* why = nullptr);

bool family_free(const Graph& g, const FamilySpec& f);

}  // namespace ffsg
