#include "excessive/excessive.hpp"

#include <algorithm>

#include "excessive/coloring.hpp"
#include "excessive/errors.hpp"
#include "excessive/matching.hpp"

namespace excessive {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Branch and bound over covers by exactly k matchings of m edges. Matchings
// are enumerated once; branching picks the uncovered edge lying in the
// fewest m-matchings and tries each of them.
struct CoverSearch {
    const Graph& g;
    int m;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    std::vector<EdgeSet> mats;
    std::vector<std::vector<int>> by_edge;
    int current_k = 0;

    CoverSearch(const Graph& graph, int size, std::uint64_t budget)
        : g(graph), m(size), max_nodes(budget), by_edge(graph.edge_count()) {
        for_each_matching(g, m, [&](const EdgeSet& s) {
            mats.push_back(s);
            return true;
        });
        for (int id = 0; id < static_cast<int>(mats.size()); ++id)
            mats[id].for_each([&](int i) { by_edge[i].push_back(id); });
    }

    bool covers_all_edges() const {
        for (const auto& lst : by_edge)
            if (lst.empty())
                return false;
        return true;
    }

    std::optional<std::vector<int>> run(int k) {
        current_k = k;
        std::vector<int> chosen;
        chosen.reserve(k);
        if (rec(EdgeSet{}, 0, k, chosen))
            return chosen;
        return std::nullopt;
    }

  private:
    bool rec(EdgeSet covered, int depth, int k, std::vector<int>& chosen) {
        if (++nodes > max_nodes)
            throw BudgetExceededError(
                "cover search ran past " + std::to_string(max_nodes) +
                    " nodes",
                current_k);
        EdgeSet left = g.all_edges().and_not(covered);
        if (left.empty())
            return true;
        if (depth == k || static_cast<long long>(k - depth) * m < left.count())
            return false;
        int pick = -1;
        std::size_t fewest = 0;
        left.for_each([&](int i) {
            if (pick < 0 || by_edge[i].size() < fewest) {
                pick = i;
                fewest = by_edge[i].size();
            }
        });
        for (int id : by_edge[pick]) {
            chosen.push_back(id);
            if (rec(covered | mats[id], depth + 1, k, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

CoverCertificate cert_from(const CoverSearch& search,
                           const std::vector<int>& ids) {
    CoverCertificate cert;
    cert.m = search.m;
    for (int id : ids)
        cert.matchings.push_back(search.mats[id]);
    std::sort(cert.matchings.begin(), cert.matchings.end(), seq_less);
    return cert;
}

// Cover construction that works whenever even the smallest maximal matching
// has >= m edges: take an equalized optimal coloring, pad with empty classes
// up to k, rebalance, then grow every class to exactly m edges (possible
// because any matching extends greedily to a maximal one, which is big
// enough to trim back to m).
CoverCertificate cover_from_coloring(const Graph& g, int m, int k) {
    ColorClasses cc = equalized_coloring(g);
    std::vector<EdgeSet> classes = cc.classes;
    if (static_cast<int>(classes.size()) > k)
        throw Error("internal: more color classes than cover slots");
    classes.resize(k, EdgeSet{});
    balance_matchings(g, classes);
    CoverCertificate cert;
    cert.m = m;
    for (EdgeSet cls : classes) {
        int have = cls.count();
        if (have > m)
            throw Error("internal: color class larger than cover size");
        EdgeSet blocked = cls;
        cls.for_each([&](int i) { blocked |= g.conflicts(i); });
        for (int i = 0; i < g.edge_count() && have < m; ++i) {
            if (blocked.test(i))
                continue;
            cls.set(i);
            blocked |= g.conflicts(i);
            blocked.set(i);
            ++have;
        }
        if (have < m)
            throw Error("internal: could not grow color class to cover size");
        cert.matchings.push_back(cls);
    }
    std::sort(cert.matchings.begin(), cert.matchings.end(), seq_less);
    return cert;
}

}  // namespace

LowerBounds lower_bound(const Graph& g, int m, int t_max) {
    if (m < 1)
        throw PreconditionError("matching size must be positive");
    if (!is_m_coverable(g, m))
        throw NotCoverableError("an edge lies in no matching of the given "
                                "size; the index is infinite");
    if (t_max <= 0 || t_max > m - 1)
        t_max = m - 1;
    LowerBounds lb;
    lb.chromatic = chromatic_index(g);
    lb.density = g.edge_count() == 0 ? 0 : ceil_div(g.edge_count(), m);
    for (int t = 1; t <= t_max; ++t) {
        SplittingResult r = splitting_number(g, m, t);
        lb.splitting.push_back({t, r.size, r.size ? ceil_div(r.size, t) : 0});
    }
    return lb;
}

bool is_compatible(const Graph& g, int m) {
    if (!is_m_coverable(g, m))
        return false;
    IndexResult r = exact_excessive_index(g, m, SearchBudget{}, false);
    int cheap = std::max(r.bounds.chromatic, r.bounds.density);
    return r.value.has_value() && *r.value == cheap;
}

IndexResult exact_excessive_index(const Graph& g, int m,
                                  const SearchBudget& budget,
                                  bool want_witness) {
    if (m < 1)
        throw PreconditionError("matching size must be positive");
    IndexResult res;
    res.method = IndexMethod::exact_search;
    res.bounds.chromatic = chromatic_index(g);
    res.bounds.density =
        g.edge_count() == 0 ? 0 : ceil_div(g.edge_count(), m);
    if (g.edge_count() == 0) {
        res.value = 0;
        if (want_witness)
            res.witness = CoverCertificate{m, {}};
        return res;
    }
    CoverSearch search(g, m, budget.max_nodes);
    if (!search.covers_all_edges())
        return res;  // some edge lies in no m-matching: index infinite
    // The search is seeded from coloring and density bounds only, so its
    // verdict stays independent of the splitting machinery it is used to
    // cross-check.
    int k = res.bounds.chromatic > res.bounds.density ? res.bounds.chromatic
                                                      : res.bounds.density;
    if (k < 1)
        k = 1;
    for (;; ++k) {
        auto ids = search.run(k);
        if (ids) {
            res.value = k;
            if (want_witness)
                res.witness = cert_from(search, *ids);
            return res;
        }
    }
}

IndexResult formula_index_small_m(const Graph& g, int m, bool want_witness) {
    if (m < 1 || m > 3)
        throw PreconditionError("closed formulas cover m in {1, 2, 3}");
    IndexResult res;
    res.bounds.chromatic = chromatic_index(g);
    res.bounds.density =
        g.edge_count() == 0 ? 0 : ceil_div(g.edge_count(), m);
    if (m == 1) {
        res.method = IndexMethod::formula_m1;
        res.value = g.edge_count();
        if (want_witness) {
            CoverCertificate cert;
            cert.m = 1;
            for (int i = 0; i < g.edge_count(); ++i)
                cert.matchings.push_back(EdgeSet::single(i));
            res.witness = std::move(cert);
        }
        return res;
    }
    res.method = m == 2 ? IndexMethod::formula_m2 : IndexMethod::formula_m3;
    if (g.edge_count() == 0) {
        res.value = 0;
        if (want_witness)
            res.witness = CoverCertificate{m, {}};
        return res;
    }
    if (!is_m_coverable(g, m))
        throw NotCoverableError("an edge lies in no matching of the given "
                                "size; the index is infinite");
    int k = std::max(res.bounds.chromatic, res.bounds.density);
    if (m == 3) {
        SplittingResult s = splitting_number(g, 3, 1);
        res.bounds.splitting.push_back({1, s.size, s.size});
        k = std::max(k, s.size);
    }
    res.value = k;
    if (want_witness) {
        if (min_maximal_matching_size(g) >= m) {
            res.witness = cover_from_coloring(g, m, k);
        } else {
            CoverSearch search(g, m, SearchBudget{}.max_nodes);
            auto ids = search.run(k);
            if (!ids)
                throw ReconstructionError(
                    "no cover exists at the formula value");
            res.witness = cert_from(search, *ids);
        }
        validate_cover(g, *res.witness);
    }
    return res;
}

IndexResult tree_index_m4(const Graph& g, bool want_witness) {
    if (!g.is_tree())
        throw NotATreeError("the m = 4 formula applies to trees");
    IndexResult res;
    res.method = IndexMethod::formula_tree_m4;
    res.bounds.chromatic = g.max_degree();  // trees are bipartite
    res.bounds.density =
        g.edge_count() == 0 ? 0 : ceil_div(g.edge_count(), 4);
    if (g.edge_count() == 0) {
        res.value = 0;
        if (want_witness)
            res.witness = CoverCertificate{4, {}};
        return res;
    }
    if (!is_m_coverable(g, 4))
        throw NotCoverableError("an edge lies in no 4-matching; the index "
                                "is infinite");
    int mm = min_maximal_matching_size(g);
    int s = 0;
    if (mm >= 4) {
        // Every 2-matching extends, so no splitting set can exist.
        res.bounds.splitting.push_back({1, 0, 0});
    } else {
        SplittingResult r = splitting_number(g, 4, 1);
        s = r.size;
        res.bounds.splitting.push_back({1, s, s});
    }
    int k = std::max({res.bounds.chromatic, res.bounds.density, s});
    res.value = k;
    if (want_witness) {
        if (mm >= 4) {
            res.witness = cover_from_coloring(g, 4, k);
        } else {
            CoverSearch search(g, 4, SearchBudget{}.max_nodes);
            auto ids = search.run(k);
            if (!ids)
                throw ReconstructionError(
                    "no cover exists at the formula value");
            res.witness = cert_from(search, *ids);
        }
        validate_cover(g, *res.witness);
    }
    return res;
}

}  // namespace excessive
