#pragma once

#include <optional>

#include "excessive/graph.hpp"

namespace excessive {

// An edge set S is (m,t)-splitting when
//   (i)  no (t+1)-matching inside S extends to an m-matching of G
//        (an m-matching itself counts as extending), and
//   (ii) a witness that S is "spread out": for t = 1 the edges of S have no
//        common vertex (S is not a star, where single edges and two adjacent
//        edges count as stars), and for t >= 2 S contains a (t+1)-matching.
// Any m-matching then uses at most t edges of S, so a splitting set of size s
// forces at least ceil(s/t) matchings in any cover by m-matchings.
bool is_splitting_set(const Graph& g, const EdgeSet& s, int m, int t);

struct SplittingCertificate {
    EdgeSet edge_set;
    int m = 0;
    int t = 0;
    int size = 0;
};

struct SplittingResult {
    int size = 0;  // 0 when no splitting set exists
    std::optional<SplittingCertificate> witness;  // a largest one, if any
};

// Largest (m,t)-splitting set. Requires 1 <= t < m. For trees with t = 1 a
// size cap and leaf pruning rule kick in; pass prune = false to force the
// plain search (used by tests to confirm the pruned search agrees).
SplittingResult splitting_number(const Graph& g, int m, int t,
                                 bool prune = true);

// Pruning rules for t = 1 on trees, exposed for direct testing. A candidate
// set can be ignored when it breaks either:
//  - |S| <= m, and
//  - every vertex covered by S keeps an incident tree edge outside S.
// Throws NotATreeError on non-trees.
bool tree_splitting_admissible(const Graph& g, const EdgeSet& s, int m);

}  // namespace excessive
