#include "excessive/splitting.hpp"

#include <vector>

#include "excessive/errors.hpp"
#include "excessive/matching.hpp"

namespace excessive {

namespace {

// Enumerate k-edge matchings drawn from `allowed` only, lex order.
template <class F>
bool for_each_matching_within(const Graph& g, const EdgeSet& allowed, int k,
                              F&& visit) {
    if (k == 0)
        return visit(EdgeSet{});
    std::vector<int> idx = allowed.to_indices();
    int e = static_cast<int>(idx.size());
    auto rec = [&](auto&& self, int start, int depth, EdgeSet cur,
                   EdgeSet blocked) -> bool {
        for (int p = start; p + (k - depth) <= e; ++p) {
            int i = idx[p];
            if (blocked.test(i))
                continue;
            EdgeSet nc = cur;
            nc.set(i);
            if (depth + 1 == k) {
                if (!visit(nc))
                    return false;
            } else if (!self(self, p + 1, depth + 1, nc,
                             blocked | g.conflicts(i))) {
                return false;
            }
        }
        return true;
    };
    return rec(rec, 0, 0, EdgeSet{}, EdgeSet{});
}

void check_order(int m, int t) {
    if (t < 1 || t >= m)
        throw PreconditionError("splitting order t must satisfy 1 <= t < m");
}

}  // namespace

bool is_splitting_set(const Graph& g, const EdgeSet& s, int m, int t) {
    check_order(m, t);
    if (t == 1) {
        if (g.edges_form_star(s))
            return false;
    } else {
        bool has = !for_each_matching_within(g, s, t + 1,
                                             [](const EdgeSet&) { return false; });
        if (!has)
            return false;
    }
    bool ok = true;
    for_each_matching_within(g, s, t + 1, [&](const EdgeSet& sub) {
        if (extends_to(g, sub, m)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool tree_splitting_admissible(const Graph& g, const EdgeSet& s, int m) {
    if (!g.is_tree())
        throw NotATreeError("tree_splitting_admissible needs a tree");
    if (s.count() > m)
        return false;
    std::vector<int> vdeg(g.vertex_count(), 0);
    bool ok = true;
    s.for_each([&](int i) {
        auto [u, v] = g.edge(i);
        ++vdeg[u];
        ++vdeg[v];
    });
    s.for_each([&](int i) {
        auto [u, v] = g.edge(i);
        if (vdeg[u] >= g.degree(u) || vdeg[v] >= g.degree(v))
            ok = false;
    });
    return ok;
}

SplittingResult splitting_number(const Graph& g, int m, int t, bool prune) {
    check_order(m, t);
    int e = g.edge_count();

    // Every (t+1)-matching of the graph, split into those that extend to an
    // m-matching (condition (i) bans containing one) and those that do not
    // (for t >= 2, condition (ii) demands containing one).
    std::vector<EdgeSet> bad, good;
    for_each_matching(g, t + 1, [&](const EdgeSet& sub) {
        if (extends_to(g, sub, m))
            bad.push_back(sub);
        else
            good.push_back(sub);
        return true;
    });
    // For t >= 2 a splitting set must contain a non-extending (t+1)-matching,
    // so none exist when every (t+1)-matching extends. In particular t = m-1
    // always lands here for m >= 3: an m-matching extends to itself.
    if (t >= 2 && good.empty())
        return SplittingResult{};

    std::vector<std::vector<int>> bad_by_edge(e);
    for (int b = 0; b < static_cast<int>(bad.size()); ++b)
        bad[b].for_each([&](int i) { bad_by_edge[i].push_back(b); });

    // On coverable trees with t = 1, splitting sets never have more than m
    // edges and never claim every edge at a vertex, so the search can stop
    // early on both counts. (Tests compare against the unpruned search.)
    bool tree_mode =
        prune && t == 1 && g.is_tree() && is_m_coverable(g, m);

    SplittingResult result;
    std::vector<int> vdeg(g.vertex_count(), 0);

    auto qualifies = [&](const EdgeSet& cur) {
        if (t == 1)
            return !g.edges_form_star(cur);
        for (const auto& b : good)
            if (b.subset_of(cur))
                return true;
        return false;
    };

    auto rec = [&](auto&& self, int i, EdgeSet cur, int cnt) -> void {
        if (cnt > result.size && qualifies(cur)) {
            result.size = cnt;
            result.witness = SplittingCertificate{cur, m, t, cnt};
        }
        if (i == e)
            return;
        int reach = cnt + e - i;
        if (tree_mode && reach > m)
            reach = m;
        if (reach <= result.size)
            return;

        bool can = !(tree_mode && cnt >= m);
        auto [u, v] = g.edge(i);
        if (can && tree_mode &&
            (vdeg[u] + 1 >= g.degree(u) || vdeg[v] + 1 >= g.degree(v)))
            can = false;
        if (can) {
            for (int b : bad_by_edge[i]) {
                if (bad[b].and_not(cur).count() == 1) {
                    can = false;
                    break;
                }
            }
        }
        if (can) {
            EdgeSet nxt = cur;
            nxt.set(i);
            ++vdeg[u];
            ++vdeg[v];
            self(self, i + 1, nxt, cnt + 1);
            --vdeg[u];
            --vdeg[v];
        }
        self(self, i + 1, cur, cnt);
    };
    rec(rec, 0, EdgeSet{}, 0);
    return result;
}

}  // namespace excessive
