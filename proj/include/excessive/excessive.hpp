#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "excessive/cover.hpp"
#include "excessive/graph.hpp"
#include "excessive/splitting.hpp"

namespace excessive {

// Lower bounds on the minimum number of m-matchings needed to cover E(G).
struct LowerBounds {
    int chromatic = 0;  // chromatic index
    int density = 0;    // ceil(|E| / m)
    // (t, splitting number s, ceil(s/t)) for each t considered.
    struct SplitBound {
        int t = 0;
        int size = 0;
        int bound = 0;
    };
    std::vector<SplitBound> splitting;

    int best() const {
        int b = chromatic > density ? chromatic : density;
        for (const auto& s : splitting)
            if (s.bound > b)
                b = s.bound;
        return b;
    }
};

enum class IndexMethod {
    formula_m1,
    formula_m2,
    formula_m3,
    formula_tree_m4,
    exact_search,
};

// Result of an index computation. value is empty when the graph is not
// m-coverable (some edge lies in no m-matching), i.e. the index is infinite.
struct IndexResult {
    std::optional<int> value;
    LowerBounds bounds;
    std::optional<CoverCertificate> witness;
    IndexMethod method = IndexMethod::exact_search;
};

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
};

// Lower bounds only; t_max selects which splitting terms to evaluate
// (all t in [1, min(t_max, m-1)]; pass 0 for the full range). Throws
// NotCoverableError when some edge lies in no m-matching, since no finite
// bound is meaningful then.
LowerBounds lower_bound(const Graph& g, int m, int t_max = 0);

// Exact minimum number of m-edge matchings covering E(G), by branch and
// bound seeded at max(chromatic index, ceil(|E|/m)). Throws
// BudgetExceededError (carrying the proven lower bound) if the node budget
// runs out before the optimum is certified. want_witness controls whether
// the certificate is kept.
IndexResult exact_excessive_index(const Graph& g, int m,
                                  const SearchBudget& budget = {},
                                  bool want_witness = true);

// Closed formulas for m = 1, 2, 3 (any coverable graph). Also fills in a
// witness cover when requested. Throws PreconditionError for other m and
// NotCoverableError when the graph is not m-coverable.
IndexResult formula_index_small_m(const Graph& g, int m,
                                  bool want_witness = true);

// Tree formula for m = 4: max(max degree, ceil(|E|/4), splitting number).
// Throws NotATreeError on non-trees and NotCoverableError when not
// 4-coverable. The witness route never feeds the formula value back into
// itself: covers come from an equalized proper coloring when the smallest
// maximal matching has >= 4 edges, otherwise from the exact solver, and a
// mismatch with the formula raises.
IndexResult tree_index_m4(const Graph& g, bool want_witness = true);

// Whether the index is finite and equals max(chromatic index, ceil(|E|/m)),
// the two bounds every graph satisfies. Runs the exact solver.
bool is_compatible(const Graph& g, int m);

}  // namespace excessive
