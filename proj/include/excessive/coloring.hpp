#pragma once

#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

// A proper edge coloring as color classes (disjoint matchings covering E).
struct ColorClasses {
    std::vector<EdgeSet> classes;

    int size() const { return static_cast<int>(classes.size()); }
    std::vector<int> class_sizes() const {
        std::vector<int> out;
        out.reserve(classes.size());
        for (const auto& c : classes)
            out.push_back(c.count());
        return out;
    }
};

void validate_coloring(const Graph& g, const ColorClasses& c);

// Chromatic index (always max_degree or max_degree + 1).
int chromatic_index(const Graph& g);

// Optimal proper edge coloring whose class sizes differ by at most one.
// Starts from any optimal coloring and repeatedly moves an alternating
// component between a smallest and a largest class.
ColorClasses equalized_coloring(const Graph& g);

// Rebalance a list of matchings in place (not necessarily disjoint) so their
// sizes differ by at most one, preserving matching-hood and the union.
// Used to turn ad hoc covers into uniform ones.
void balance_matchings(const Graph& g, std::vector<EdgeSet>& ms);

}  // namespace excessive
