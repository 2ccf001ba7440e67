#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "excessive/errors.hpp"
#include "excessive/formats.hpp"
#include "excessive/graph.hpp"
#include "excessive/lab.hpp"

using namespace excessive;

TEST_CASE("from_edges validates and normalizes") {
    Graph g = Graph::from_edges(4, {{2, 3}, {1, 0}, {1, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    // sorted lexicographically, endpoints ascending
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 2) == -1);
    CHECK(g.has_edge(3, 2));
    CHECK(g.degree(1) == 2);

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {2, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(63, {{0, 1}}), ValidationError);
}

TEST_CASE("conflicts mark shared endpoints") {
    Graph g = make_path(4);  // edges 0-1, 1-2, 2-3
    CHECK(g.conflicts(0).test(1));
    CHECK_FALSE(g.conflicts(0).test(2));
    CHECK(g.conflicts(1).test(0));
    CHECK(g.conflicts(1).test(2));
    CHECK_FALSE(g.conflicts(0).test(0));
    CHECK(g.closed_conflicts(0).test(0));
}

TEST_CASE("graph6 fixed vectors") {
    CHECK(to_graph6(make_complete(3)) == "Bw");
    CHECK(to_graph6(make_complete(4)) == "C~");
    CHECK(to_graph6(make_cycle(4)) == "Cl");
    CHECK(to_graph6(make_path(3)) == "Bg");
    CHECK(to_graph6(parse_graph6("Bw")) == "Bw");
    CHECK(parse_graph6(">>graph6<<Bw").edge_count() == 3);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("Bwx"), ParseError);     // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B~"), ParseError);      // nonzero padding
    CHECK_THROWS_AS(parse_graph6("\x7f"), ParseError);    // out of range byte
    // disconnected graph on 4 vertices: single edge 0-1
    CHECK_THROWS_AS(parse_graph6("CO"), ValidationError);
}

TEST_CASE("graph6 round trips the whole small census") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs_on(n)) {
            Graph back = parse_graph6(to_graph6(g));
            CHECK(back.vertex_count() == g.vertex_count());
            CHECK(back.edges() == g.edges());
        }
    for (const Graph& t : trees_on(10)) {
        Graph back = parse_graph6(to_graph6(t));
        CHECK(back.edges() == t.edges());
    }
}

TEST_CASE("edge list format") {
    Graph g = parse_edge_list("# a comment\n4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4 3\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4 1\n0 1\nleftover\n"), ParseError);
}

TEST_CASE("cat notation") {
    Graph g = parse_cat_notation("cat(0,1,1,1,0)");
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 9);
    CHECK(cat_notation({0, 1, 1, 1, 0}) == "cat(0,1,1,1,0)");
    CHECK_THROWS_AS(parse_cat_notation("cat()"), ParseError);
    CHECK_THROWS_AS(parse_cat_notation("cat(1,"), ParseError);
    CHECK_THROWS_AS(parse_cat_notation("cat(-1)"), ParseError);
    CHECK_THROWS_AS(parse_cat_notation("dog(1)"), ParseError);
}

TEST_CASE("load_graph_auto guesses the format") {
    CHECK(load_graph_auto("cat(0,1,1,1,0)").vertex_count() == 10);
    CHECK(load_graph_auto("3 2\n0 1\n1 2\n").vertex_count() == 3);
    CHECK(load_graph_auto("Bw").edge_count() == 3);
}

TEST_CASE("generator shapes") {
    GraphStats p = stats_of(make_path(9));
    CHECK(p.vertices == 9);
    CHECK(p.edges == 8);
    CHECK(p.diameter == 8);
    CHECK(p.max_degree == 2);
    CHECK(p.tree);
    CHECK(p.caterpillar);

    GraphStats s = stats_of(make_star(5));
    CHECK(s.edges == 5);
    CHECK(s.max_degree == 5);
    CHECK(s.diameter == 2);

    GraphStats c = stats_of(make_cycle(7));
    CHECK(c.edges == 7);
    CHECK(c.max_degree == 2);
    CHECK(c.diameter == 3);
    CHECK_FALSE(c.tree);

    GraphStats k = stats_of(make_complete(6));
    CHECK(k.edges == 15);
    CHECK(k.max_degree == 5);
    CHECK(k.diameter == 1);

    GraphStats pet = stats_of(make_petersen());
    CHECK(pet.vertices == 10);
    CHECK(pet.edges == 15);
    CHECK(pet.max_degree == 3);
    CHECK(pet.diameter == 2);

    Graph pe = make_petersen_minus_edge();
    CHECK(pe.vertex_count() == 10);
    CHECK(pe.edge_count() == 14);
    CHECK(pe.max_degree() == 3);

    GraphStats kp = stats_of(make_pendant_clique(6));
    CHECK(kp.vertices == 12);
    CHECK(kp.edges == 21);
    CHECK(kp.max_degree == 6);
    CHECK(kp.diameter == 3);
}

TEST_CASE("diameter matches breadth-first oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs_on(n))
            CHECK(g.diameter() == oracles::diameter_naive(g));
    for (const Graph& t : trees_on(9))
        CHECK(t.diameter() == oracles::diameter_naive(t));
}

TEST_CASE("caterpillar build and recognition") {
    Graph g = build_caterpillar({1, 2, 1, 0, 3, 0});
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 14);
    CHECK(g.max_degree() == 5);
    // recognizer reports the lexicographically smaller direction
    CHECK(caterpillar_spec_of(g) == std::vector<int>{0, 3, 0, 1, 2, 1});

    CHECK(caterpillar_spec_of(build_caterpillar({0, 1, 1, 1, 0})) ==
          std::vector<int>{0, 1, 1, 1, 0});
    CHECK(caterpillar_spec_of(make_path(5)) == std::vector<int>{0, 0, 0});
    CHECK(caterpillar_spec_of(make_star(4)) == std::vector<int>{2});

    // spider with three legs of length 2 is a tree but no caterpillar
    Graph spider = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK_THROWS_AS(caterpillar_spec_of(spider), ValidationError);
    CHECK_FALSE(stats_of(spider).caterpillar);
    CHECK_THROWS_AS(caterpillar_spec_of(make_cycle(4)), ValidationError);
    CHECK_THROWS_AS(build_caterpillar({-1}), ValidationError);
    CHECK_THROWS_AS(build_caterpillar({}), ValidationError);
}

TEST_CASE("canonical tree code is an isomorphism invariant") {
    Graph a = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Graph b = Graph::from_edges(5, {{4, 2}, {2, 0}, {0, 1}, {1, 3}});  // relabeled path
    CHECK(canonical_tree_code(a) == canonical_tree_code(b));
    CHECK(canonical_tree_code(make_path(5)) !=
          canonical_tree_code(make_star(4)));
    CHECK_THROWS_AS(canonical_tree_code(make_cycle(4)), NotATreeError);

    // all pairs on 7 vertices are distinguished
    std::vector<std::string> codes;
    for (const Graph& t : trees_on(7))
        codes.push_back(canonical_tree_code(t));
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("edges_form_star") {
    Graph star = make_star(3);
    CHECK(star.edges_form_star(star.all_edges()));
    Graph tri = make_cycle(3);
    CHECK_FALSE(tri.edges_form_star(tri.all_edges()));
    Graph p4 = make_path(4);
    EdgeSet two_adjacent;
    two_adjacent.set(0);
    two_adjacent.set(1);
    CHECK(p4.edges_form_star(two_adjacent));
    EdgeSet apart;
    apart.set(0);
    apart.set(2);
    CHECK_FALSE(p4.edges_form_star(apart));
    CHECK(p4.edges_form_star(EdgeSet{}));
    CHECK(p4.edges_form_star(EdgeSet::single(1)));
}

TEST_CASE("edge set primitives") {
    EdgeSet s = EdgeSet::first_n(70);
    CHECK(s.count() == 70);
    CHECK(s.test(69));
    CHECK_FALSE(s.test(70));
    s.reset(0);
    CHECK(s.count_from(64) == 6);
    CHECK(s.lowest() == 1);
    EdgeSet t = EdgeSet::single(65);
    CHECK(t.subset_of(s));
    CHECK(s.intersects(t));
    CHECK(s.and_not(t).count() == 68);
    CHECK((s ^ t).count() == 68);
    CHECK(seq_less(EdgeSet::single(1), EdgeSet::single(2)));
    std::vector<int> idx = t.to_indices();
    CHECK(idx == std::vector<int>{65});
}
