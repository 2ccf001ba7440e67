#include "excessive/matching.hpp"

#include "excessive/cover.hpp"
#include "excessive/errors.hpp"

namespace excessive {

std::vector<EdgeSet> all_matchings(const Graph& g, int m) {
    std::vector<EdgeSet> out;
    for_each_matching(g, m, [&](const EdgeSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

long long count_matchings(const Graph& g, int m) {
    long long n = 0;
    for_each_matching(g, m, [&](const EdgeSet&) {
        ++n;
        return true;
    });
    return n;
}

bool extends_to(const Graph& g, const EdgeSet& part, int m) {
    if (!is_matching(g, part))
        throw PreconditionError("extends_to needs a matching to start from");
    int have = part.count();
    if (have > m)
        return false;
    if (have == m)
        return true;
    EdgeSet blocked = part;
    part.for_each([&](int i) { blocked |= g.conflicts(i); });
    int e = g.edge_count();
    auto rec = [&](auto&& self, int start, int need,
                   const EdgeSet& blk) -> bool {
        if (e - start - blk.count_from(start) < need)
            return false;
        for (int i = start; i + need <= e; ++i) {
            if (blk.test(i))
                continue;
            if (need == 1)
                return true;
            if (self(self, i + 1, need - 1, blk | g.conflicts(i)))
                return true;
        }
        return false;
    };
    return rec(rec, 0, m - have, blocked);
}

bool is_m_coverable(const Graph& g, int m) {
    for (int i = 0; i < g.edge_count(); ++i)
        if (!extends_to(g, EdgeSet::single(i), m))
            return false;
    return true;
}

int min_maximal_matching_size(const Graph& g) {
    if (g.edge_count() == 0)
        return 0;
    EdgeSet all = g.all_edges();
    for (int k = 1; k <= g.edge_count(); ++k) {
        bool found = false;
        for_each_matching(g, k, [&](const EdgeSet& s) {
            EdgeSet reach = s;
            s.for_each([&](int i) { reach |= g.conflicts(i); });
            if (reach == all) {
                found = true;
                return false;
            }
            return true;
        });
        if (found)
            return k;
    }
    return g.edge_count();  // unreachable: some maximal matching exists
}

int max_matching_size(const Graph& g) {
    int k = 0;
    while (extends_to(g, EdgeSet{}, k + 1))
        ++k;
    return k;
}

std::vector<EdgeSet> matchings_containing(const Graph& g, int i, int m) {
    std::vector<EdgeSet> out;
    for_each_matching(g, m, [&](const EdgeSet& s) {
        if (s.test(i))
            out.push_back(s);
        return true;
    });
    return out;
}

void validate_cover(const Graph& g, const CoverCertificate& c) {
    if (c.m < 1)
        throw ValidationError("cover matching size must be positive");
    EdgeSet covered;
    for (const auto& s : c.matchings) {
        if (s.count() != c.m)
            throw ValidationError("cover member is not a " +
                                  std::to_string(c.m) + "-edge matching");
        if (!is_matching(g, s))
            throw ValidationError("cover member is not a matching");
        covered |= s;
    }
    if (!(covered == g.all_edges()))
        throw ValidationError("cover misses some edge");
}

}  // namespace excessive
