#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffs/family.hpp"
#include "ffs/graph.hpp"

namespace ffsg {

// Partial coloring of a host graph; colors are vertex ids of the
// template graph. -1 means uncolored.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : color_(n, -1) {}

    int size() const { return static_cast<int>(color_.size()); }
    bool is_colored(int v) const { return color_[v] >= 0; }
    int color(int v) const { return color_[v]; }
    void set(int v, int c) { color_[v] = c; }
    void unset(int v) { color_[v] = -1; }

    int num_colored() const;
    const std::vector<int>& raw() const { return color_; }

private:
    std::vector<int> color_;
};

// Bad(v, chi, G): the number of neighbors u of v such that chi(v)
// appears on some other neighbor of u. Uncolored vertices never create
// conflicts. Requires v colored.
int bad_count(int v, const PartialColoring& chi, const Graph& g);

// As above but for a hypothetical color of v (v's recorded color, if
// any, is ignored on the witness side only when the witness is v itself).
int bad_count_with(int v, int color, const PartialColoring& chi, const Graph& g);

// Number of locally injective homomorphisms F -> T: edge preserving
// maps whose restriction to every neighborhood is injective. With
// early_exit, stops at the first one (returns 1). Disconnected patterns
// factor over components.
long count_locally_injective_homs(const Graph& pattern, const Graph& target, bool early_exit);

bool is_hom_free(const FamilySpec& family, const Graph& target);

// Searches all graphs on up to max_n labeled vertices for one that is
// family-free yet admits a locally injective homomorphism from some
// pattern — a falsification of the family's closedness claim. Returns
// the first hit in enumeration order (by vertex count, then edge mask).
std::optional<Graph> closedness_witness_search(const FamilySpec& family, int max_n);

}  // namespace ffsg
