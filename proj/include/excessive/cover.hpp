#pragma once

#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

// A cover of E(G) by matchings of exactly m edges each.
struct CoverCertificate {
    int m = 0;
    std::vector<EdgeSet> matchings;

    int size() const { return static_cast<int>(matchings.size()); }
};

// Throws ValidationError unless every member is an m-edge matching of g and
// the union is all of E(g).
void validate_cover(const Graph& g, const CoverCertificate& c);

}  // namespace excessive
