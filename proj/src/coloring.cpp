#include "excessive/coloring.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "excessive/errors.hpp"
#include "excessive/matching.hpp"

namespace excessive {

namespace {

// Backtracking edge coloring with at most k colors. Branches on the
// uncolored edge with the fewest free colors; new colors are introduced in
// order (an edge may use at most one color beyond the highest used so far),
// which kills color-permutation symmetry.
std::optional<std::vector<int>> try_color(const Graph& g, int k) {
    int e = g.edge_count();
    std::vector<int> color(e, -1);
    auto rec = [&](auto&& self, int colored, int hi) -> bool {
        if (colored == e)
            return true;
        int limit = std::min(k, hi + 2);
        int best = -1, best_free = 1 << 30;
        std::uint32_t best_used = 0;
        for (int i = 0; i < e; ++i) {
            if (color[i] >= 0)
                continue;
            std::uint32_t used = 0;
            g.conflicts(i).for_each([&](int j) {
                if (color[j] >= 0)
                    used |= 1u << color[j];
            });
            int free = limit - std::popcount(used & ((1u << limit) - 1));
            if (free == 0)
                return false;
            if (free < best_free) {
                best_free = free;
                best = i;
                best_used = used;
            }
        }
        for (int c = 0; c < limit; ++c) {
            if ((best_used >> c) & 1)
                continue;
            color[best] = c;
            if (self(self, colored + 1, std::max(hi, c)))
                return true;
            color[best] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, -1))
        return std::nullopt;
    return color;
}

}  // namespace

void validate_coloring(const Graph& g, const ColorClasses& c) {
    EdgeSet seen;
    for (const auto& cls : c.classes) {
        if (cls.empty())
            throw ValidationError("empty color class");
        if (!is_matching(g, cls))
            throw ValidationError("color class is not a matching");
        if (seen.intersects(cls))
            throw ValidationError("color classes overlap");
        seen |= cls;
    }
    if (!(seen == g.all_edges()))
        throw ValidationError("coloring misses some edge");
}

int chromatic_index(const Graph& g) {
    int e = g.edge_count();
    if (e == 0)
        return 0;
    int d = g.max_degree();
    if (g.is_bipartite())
        return d;
    // A color class has at most floor(n/2) edges, so d classes cannot cover
    // more than d * floor(n/2) of them; past that it takes d + 1 colors,
    // which always suffice.
    int cap = g.vertex_count() / 2;
    if ((e + cap - 1) / cap > d)
        return d + 1;
    return try_color(g, d) ? d : d + 1;
}

ColorClasses equalized_coloring(const Graph& g) {
    int k = chromatic_index(g);
    ColorClasses out;
    if (k == 0)
        return out;
    auto color = try_color(g, k);
    if (!color)
        throw Error("internal: optimal coloring not found at chromatic index");
    out.classes.assign(k, EdgeSet{});
    for (int i = 0; i < g.edge_count(); ++i)
        out.classes[(*color)[i]].set(i);
    balance_matchings(g, out.classes);
    std::sort(out.classes.begin(), out.classes.end(),
              [](const EdgeSet& a, const EdgeSet& b) {
                  if (a.count() != b.count())
                      return a.count() > b.count();
                  return seq_less(a, b);
              });
    return out;
}

void balance_matchings(const Graph& g, std::vector<EdgeSet>& ms) {
    if (ms.size() < 2)
        return;
    for (;;) {
        int lo = 0, hi = 0;
        for (int i = 1; i < static_cast<int>(ms.size()); ++i) {
            if (ms[i].count() < ms[lo].count())
                lo = i;
            if (ms[i].count() > ms[hi].count())
                hi = i;
        }
        int size_lo = ms[lo].count(), size_hi = ms[hi].count();
        if (size_hi - size_lo <= 1)
            return;
        // The two matchings' symmetric difference splits into alternating
        // paths and cycles; swapping sides along a component with an edge
        // surplus shrinks the gap. Shared edges sit outside the difference
        // and keep both sides matchings after the swap.
        EdgeSet diff = ms[lo] ^ ms[hi];
        EdgeSet done;
        EdgeSet pick;
        bool found = false;
        diff.for_each([&](int start) {
            if (found || done.test(start))
                return;
            EdgeSet comp;
            std::vector<int> stack{start};
            comp.set(start);
            done.set(start);
            while (!stack.empty()) {
                int ei = stack.back();
                stack.pop_back();
                (g.conflicts(ei) & diff).for_each([&](int ej) {
                    if (!done.test(ej)) {
                        done.set(ej);
                        comp.set(ej);
                        stack.push_back(ej);
                    }
                });
            }
            if ((comp & ms[hi]).count() == (comp & ms[lo]).count() + 1) {
                pick = comp;
                found = true;
            }
        });
        if (!found)
            throw Error("internal: no rebalancing component found");
        ms[lo] = ms[lo] ^ pick;
        ms[hi] = ms[hi] ^ pick;
        if (ms[lo].count() != size_lo + 1 || ms[hi].count() != size_hi - 1)
            throw Error("internal: rebalancing made no progress");
    }
}

}  // namespace excessive
