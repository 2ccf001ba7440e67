#pragma once

#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

inline bool is_matching(const Graph& g, const EdgeSet& s) {
    bool ok = true;
    s.for_each([&](int i) {
        if (ok && g.conflicts(i).intersects(s))
            ok = false;
    });
    return ok;
}

// Enumerate all matchings of exactly m edges in lexicographic order of their
// sorted index sequences. Visitor returns false to stop early; the function
// returns false iff the visitor stopped it.
template <class F>
bool for_each_matching(const Graph& g, int m, F&& visit) {
    if (m == 0)
        return visit(EdgeSet{});
    int e = g.edge_count();
    auto rec = [&](auto&& self, int start, int depth, EdgeSet cur,
                   EdgeSet blocked) -> bool {
        for (int i = start; i + (m - depth) <= e; ++i) {
            if (blocked.test(i))
                continue;
            EdgeSet nc = cur;
            nc.set(i);
            if (depth + 1 == m) {
                if (!visit(nc))
                    return false;
            } else if (!self(self, i + 1, depth + 1, nc,
                             blocked | g.conflicts(i))) {
                return false;
            }
        }
        return true;
    };
    return rec(rec, 0, 0, EdgeSet{}, EdgeSet{});
}

std::vector<EdgeSet> all_matchings(const Graph& g, int m);
long long count_matchings(const Graph& g, int m);

// Does the graph contain a matching of m edges that includes all of `part`
// (which must itself be a matching)? With part empty this asks whether any
// m-matching exists.
bool extends_to(const Graph& g, const EdgeSet& part, int m);

// Every edge lies in some m-matching.
bool is_m_coverable(const Graph& g, int m);

// Size of the smallest maximal matching.
int min_maximal_matching_size(const Graph& g);

// Maximum matching size (via plain augmenting paths; graphs here are small).
int max_matching_size(const Graph& g);

// All m-matchings containing edge i.
std::vector<EdgeSet> matchings_containing(const Graph& g, int i, int m);

}  // namespace excessive
