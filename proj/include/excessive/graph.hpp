#pragma once

#include <string>
#include <utility>
#include <vector>

#include "excessive/edge_set.hpp"

namespace excessive {

using Edge = std::pair<int, int>;

// Simple connected undirected graph. Vertices are 0..n-1, edges are stored
// sorted lexicographically and addressed by index everywhere else in the
// library (EdgeSet bit i = edges()[i]).
class Graph {
  public:
    // Validates and normalizes: 1 <= n <= 62, no loops, no duplicate edges,
    // at most EdgeSet::kMaxEdges edges, graph connected. Throws
    // ValidationError otherwise.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int i) const { return edges_[i]; }

    // Index of edge {u,v} or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Edge indices incident to a vertex.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    int max_degree() const;

    // Edges that cannot coexist with edge i in a matching (shares a vertex;
    // excludes i itself).
    const EdgeSet& conflicts(int i) const { return conflict_[i]; }

    // All edge indices incident to either endpoint of edge i, including i.
    EdgeSet closed_conflicts(int i) const {
        EdgeSet s = conflict_[i];
        s.set(i);
        return s;
    }

    EdgeSet all_edges() const { return EdgeSet::first_n(edge_count()); }

    bool is_tree() const { return edge_count() == n_ - 1; }
    bool is_bipartite() const;

    // Longest shortest path, in edges.
    int diameter() const;

    // Subgraph induced on the vertices touched by the given edge set: does
    // some vertex meet every edge of the set? (Trivially true for 0 or 1
    // edges.) Stars in the K_{1,k} sense, plus a triangle is NOT a star.
    bool edges_form_star(const EdgeSet& s) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<EdgeSet> conflict_;
};

// Generators. All return validated graphs.
Graph make_path(int n);              // n vertices, n-1 edges
Graph make_star(int leaves);         // K_{1,leaves}
Graph make_cycle(int n);             // n >= 3
Graph make_complete(int n);          // K_n
Graph make_petersen();               // 10 vertices, 15 edges, 3-regular
Graph make_petersen_minus_edge();    // Petersen with one edge removed
// K_k with one pendant edge attached to every clique vertex.
Graph make_pendant_clique(int k);

// Caterpillar from leg counts: spine vertices p_1..p_k in a path, spine
// vertex i gets legs[i] pendant leaves. Spine length = legs.size() >= 1.
// Leading/trailing zero leg counts are allowed and extend the spine ends.
Graph build_caterpillar(const std::vector<int>& legs);

// Caterpillar recognition: returns the leg-count sequence for a tree whose
// non-leaf vertices form a path, choosing the lexicographically smaller of
// the two traversal directions. Throws ValidationError if the graph is not
// a caterpillar with at least 2 vertices.
std::vector<int> caterpillar_spec_of(const Graph& g);

struct GraphStats {
    int vertices = 0;
    int edges = 0;
    int max_degree = 0;
    int diameter = 0;
    bool tree = false;
    bool caterpillar = false;
};

GraphStats stats_of(const Graph& g);

// Isomorphism-invariant code for trees (center-rooted canonical form). Two
// trees get the same code iff they are isomorphic.
std::string canonical_tree_code(const Graph& g);

}  // namespace excessive
