#include "excessive/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "excessive/errors.hpp"

namespace excessive {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1 || n > 62)
        throw ValidationError("vertex count must be in [1, 62], got " +
                              std::to_string(n));
    for (auto& [u, v] : edges) {
        if (u == v)
            throw ValidationError("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n)
            throw ValidationError("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ValidationError("duplicate edge (" +
                                  std::to_string(edges[i].first) + ", " +
                                  std::to_string(edges[i].second) + ")");
    if (static_cast<int>(edges.size()) > EdgeSet::kMaxEdges)
        throw ValidationError("too many edges (limit " +
                              std::to_string(EdgeSet::kMaxEdges) + ")");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.incident_.resize(n);
    for (int i = 0; i < g.edge_count(); ++i) {
        g.incident_[g.edges_[i].first].push_back(i);
        g.incident_[g.edges_[i].second].push_back(i);
    }

    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : g.incident_[v]) {
            auto [a, b] = g.edges_[ei];
            int w = a == v ? b : a;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n)
        throw ValidationError("graph is not connected");

    g.conflict_.resize(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges_[i];
        for (int ej : g.incident_[u])
            if (ej != i)
                g.conflict_[i].set(ej);
        for (int ej : g.incident_[v])
            if (ej != i)
                g.conflict_[i].set(ej);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& inc : incident_)
        d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : incident_[v]) {
            auto [a, b] = edges_[ei];
            int w = a == v ? b : a;
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return false;
            }
        }
    }
    return true;
}

int Graph::diameter() const {
    int best = 0;
    std::vector<int> dist(n_);
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            best = std::max(best, dist[v]);
            for (int ei : incident_[v]) {
                auto [a, b] = edges_[ei];
                int w = a == v ? b : a;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
    }
    return best;
}

bool Graph::edges_form_star(const EdgeSet& s) const {
    int first = s.lowest();
    if (first < 0 || s.count() == 1)
        return true;
    auto [cu, cv] = edges_[first];
    bool u_ok = true, v_ok = true;
    s.for_each([&](int i) {
        if (i == first)
            return;
        auto [a, b] = edges_[i];
        if (a != cu && b != cu)
            u_ok = false;
        if (a != cv && b != cv)
            v_ok = false;
    });
    return u_ok || v_ok;
}

Graph make_path(int n) {
    if (n < 1)
        throw ValidationError("path needs at least 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(e));
}

Graph make_star(int leaves) {
    if (leaves < 0)
        throw ValidationError("negative leaf count");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.push_back({0, i});
    return Graph::from_edges(leaves + 1, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, std::move(e));
}

Graph make_complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph::from_edges(n, std::move(e));
}

Graph make_petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});      // outer cycle
        e.push_back({i, i + 5});            // spokes
        e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph::from_edges(10, std::move(e));
}

Graph make_petersen_minus_edge() {
    Graph p = make_petersen();
    std::vector<Edge> e = p.edges();
    e.erase(e.begin());  // edge-transitive, so which edge is irrelevant
    return Graph::from_edges(10, std::move(e));
}

Graph make_pendant_clique(int k) {
    if (k < 1)
        throw ValidationError("clique size must be positive");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j)
            e.push_back({i, j});
        e.push_back({i, i + k});
    }
    return Graph::from_edges(2 * k, std::move(e));
}

Graph build_caterpillar(const std::vector<int>& legs) {
    int t = static_cast<int>(legs.size());
    if (t < 1)
        throw ValidationError("caterpillar needs at least one spine vertex");
    for (int d : legs)
        if (d < 0)
            throw ValidationError("negative leg count");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < t; ++i)
        e.push_back({i, i + 1});
    int nxt = t;
    for (int i = 0; i < t; ++i) {
        // The listed counts are legs beyond the underlying longest path, so
        // spine ends carry one extra leaf (two when the spine is a point).
        int extra = t == 1 ? 2 : (i == 0 || i == t - 1) ? 1 : 0;
        for (int d = 0; d < legs[i] + extra; ++d)
            e.push_back({i, nxt++});
    }
    return Graph::from_edges(nxt, std::move(e));
}

std::vector<int> caterpillar_spec_of(const Graph& g) {
    int n = g.vertex_count();
    if (!g.is_tree() || n < 3)
        throw ValidationError("not a caterpillar on >= 3 vertices");
    std::vector<int> spine;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2)
            spine.push_back(v);
    if (spine.empty())
        throw ValidationError("not a caterpillar on >= 3 vertices");

    // non-leaf vertices must induce a path
    std::vector<int> inner_deg(n, 0), leaf_cnt(n, 0);
    for (auto [u, v] : g.edges()) {
        bool lu = g.degree(u) == 1, lv = g.degree(v) == 1;
        if (!lu && !lv) {
            ++inner_deg[u];
            ++inner_deg[v];
        }
        if (lv)
            ++leaf_cnt[u];
        if (lu)
            ++leaf_cnt[v];
    }
    int t = static_cast<int>(spine.size());
    std::vector<int> order;
    if (t == 1) {
        order = spine;
    } else {
        int start = -1;
        for (int v : spine) {
            if (inner_deg[v] > 2)
                throw ValidationError("not a caterpillar");
            if (inner_deg[v] == 1 && start < 0)
                start = v;
        }
        // walk the spine path from one end
        int prev = -1, cur = start;
        while (cur >= 0) {
            order.push_back(cur);
            int next = -1;
            for (int ei : g.incident(cur)) {
                auto [a, b] = g.edge(ei);
                int w = a == cur ? b : a;
                if (w != prev && g.degree(w) >= 2)
                    next = w;
            }
            prev = cur;
            cur = next;
        }
        if (static_cast<int>(order.size()) != t)
            throw ValidationError("not a caterpillar");
    }
    std::vector<int> legs(t);
    for (int i = 0; i < t; ++i) {
        int extra = t == 1 ? 2 : (i == 0 || i == t - 1) ? 1 : 0;
        legs[i] = leaf_cnt[order[i]] - extra;
        if (legs[i] < 0)
            throw ValidationError("not a caterpillar");
    }
    std::vector<int> rev(legs.rbegin(), legs.rend());
    return std::min(legs, rev);
}

GraphStats stats_of(const Graph& g) {
    GraphStats s;
    s.vertices = g.vertex_count();
    s.edges = g.edge_count();
    s.max_degree = g.max_degree();
    s.diameter = g.diameter();
    s.tree = g.is_tree();
    if (s.tree && s.vertices >= 3) {
        try {
            caterpillar_spec_of(g);
            s.caterpillar = true;
        } catch (const ValidationError&) {
            s.caterpillar = false;
        }
    } else {
        s.caterpillar = s.tree;  // K2 and K1 count as caterpillars
    }
    return s;
}

namespace {

std::string ahu_code(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int ei : g.incident(v)) {
        auto [a, b] = g.edge(ei);
        int w = a == v ? b : a;
        if (w != parent)
            kids.push_back(ahu_code(g, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids)
        out += k;
    out += ")";
    return out;
}

}  // namespace

std::string canonical_tree_code(const Graph& g) {
    if (!g.is_tree())
        throw NotATreeError("canonical_tree_code requires a tree");
    int n = g.vertex_count();
    if (n == 1)
        return "1()";
    // find centers by peeling leaves
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int ei : g.incident(v)) {
                auto [a, b] = g.edge(ei);
                int w = a == v ? b : a;
                if (!removed[w] && --deg[w] == 1)
                    next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v])
            centers.push_back(v);
    if (centers.size() == 1)
        return "1" + ahu_code(g, centers[0], -1);
    std::string a = ahu_code(g, centers[0], centers[1]);
    std::string b = ahu_code(g, centers[1], centers[0]);
    if (b < a)
        std::swap(a, b);
    return "2" + a + b;
}

}  // namespace excessive
