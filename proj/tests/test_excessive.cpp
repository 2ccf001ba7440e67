#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "excessive/cover.hpp"
#include "excessive/errors.hpp"
#include "excessive/excessive.hpp"
#include "excessive/formats.hpp"
#include "excessive/lab.hpp"
#include "excessive/matching.hpp"

using namespace excessive;

namespace {

void check_witness(const Graph& g, const IndexResult& r) {
    REQUIRE(r.value.has_value());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == *r.value);
    validate_cover(g, *r.witness);
}

}  // namespace

TEST_CASE("exact index on frozen instances") {
    IndexResult p9 = exact_excessive_index(make_path(9), 4);
    CHECK(p9.value == 2);
    check_witness(make_path(9), p9);

    Graph cat = build_caterpillar({0, 1, 1, 1, 0});
    IndexResult c = exact_excessive_index(cat, 4);
    CHECK(c.value == 4);
    check_witness(cat, c);

    // spider: three paths of length 3 glued at a hub
    Graph spider = Graph::from_edges(
        10,
        {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
    IndexResult s = exact_excessive_index(spider, 4);
    CHECK(s.value == 3);
    check_witness(spider, s);

    Graph pm5 = build_caterpillar({0, 1, 1, 1, 1, 1, 0});
    IndexResult long_cat = exact_excessive_index(pm5, 5);
    CHECK(long_cat.value == 3);
    check_witness(pm5, long_cat);
}

TEST_CASE("exact index matches the oracle on every coverable census graph") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs_on(n))
            for (int m = 1; m <= 3; ++m) {
                int naive = oracles::cover_index_naive(g, m);
                IndexResult r = exact_excessive_index(g, m);
                if (naive < 0) {
                    CHECK_FALSE(r.value.has_value());
                    CHECK_FALSE(r.witness.has_value());
                } else {
                    CHECK(r.value == naive);
                    check_witness(g, r);
                }
            }
    for (const Graph& t : trees_on(8))
        for (int m : {3, 4}) {
            int naive = oracles::cover_index_naive(t, m);
            IndexResult r = exact_excessive_index(t, m);
            CHECK(r.value.value_or(-1) == naive);
        }
}

TEST_CASE("index of an edgeless graph is zero") {
    Graph one = Graph::from_edges(1, {});
    IndexResult r = exact_excessive_index(one, 3);
    CHECK(r.value == 0);
    CHECK(r.witness.has_value());
    CHECK(r.witness->matchings.empty());
}

TEST_CASE("non-coverable graphs have no finite index") {
    CHECK_FALSE(exact_excessive_index(make_cycle(3), 2).value.has_value());
    CHECK_FALSE(exact_excessive_index(make_star(4), 2).value.has_value());
    CHECK_FALSE(exact_excessive_index(make_complete(7), 4).value.has_value());
}

TEST_CASE("budget exhaustion carries the proven lower bound") {
    try {
        exact_excessive_index(make_petersen(), 5, SearchBudget{1});
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.proven_lower == 4);  // search starts at max(chi', density)
    }
}

TEST_CASE("formula for m = 1 and 2") {
    for (auto& [name, g] : oracles::test_zoo()) {
        CAPTURE(name);
        IndexResult r1 = formula_index_small_m(g, 1);
        CHECK(r1.value == g.edge_count());
        CHECK(r1.method == IndexMethod::formula_m1);
        check_witness(g, r1);
    }
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs_on(n)) {
            if (!is_m_coverable(g, 2))
                continue;
            IndexResult f = formula_index_small_m(g, 2);
            CHECK(f.method == IndexMethod::formula_m2);
            CHECK(f.value == oracles::cover_index_naive(g, 2));
            check_witness(g, f);
        }
}

TEST_CASE("formula for m = 3 includes the splitting term") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs_on(n)) {
            if (!is_m_coverable(g, 3))
                continue;
            IndexResult f = formula_index_small_m(g, 3);
            CHECK(f.method == IndexMethod::formula_m3);
            CHECK(f.value == oracles::cover_index_naive(g, 3));
            CHECK(f.bounds.splitting.size() == 1);
            CHECK(f.bounds.splitting[0].t == 1);
            check_witness(g, f);
        }
}

TEST_CASE("formula preconditions") {
    CHECK_THROWS_AS(formula_index_small_m(make_path(9), 4), PreconditionError);
    CHECK_THROWS_AS(formula_index_small_m(make_path(9), 0), PreconditionError);
    CHECK_THROWS_AS(formula_index_small_m(make_cycle(3), 2), NotCoverableError);
    CHECK_THROWS_AS(tree_index_m4(make_cycle(4)), NotATreeError);
    CHECK_THROWS_AS(tree_index_m4(make_path(4)), NotCoverableError);
}

TEST_CASE("tree formula for m = 4 equals the exact solver") {
    for (int n = 9; n <= 10; ++n)
        for (const Graph& t : trees_on(n)) {
            if (!is_m_coverable(t, 4))
                continue;
            IndexResult f = tree_index_m4(t);
            CHECK(f.method == IndexMethod::formula_tree_m4);
            IndexResult ex = exact_excessive_index(t, 4);
            CHECK(f.value == ex.value);
            check_witness(t, f);
        }
}

TEST_CASE("exceptional caterpillars for m = 4") {
    for (auto legs : {std::vector<int>{0, 1, 1, 1, 0},
                      std::vector<int>{1, 1, 1, 1, 0},
                      std::vector<int>{1, 1, 1, 1, 1}}) {
        Graph g = build_caterpillar(legs);
        CAPTURE(cat_notation(legs));
        IndexResult f = tree_index_m4(g);
        CHECK(f.value == 4);
        check_witness(g, f);
        CHECK(f.bounds.chromatic == 3);
        CHECK(f.bounds.density == 3);
        REQUIRE(f.bounds.splitting.size() == 1);
        CHECK(f.bounds.splitting[0].size == 4);
        CHECK(exact_excessive_index(g, 4).value == 4);
    }
}

TEST_CASE("lower_bound breakdown on the path with 8 edges") {
    LowerBounds lb = lower_bound(make_path(9), 4);
    CHECK(lb.chromatic == 2);
    CHECK(lb.density == 2);
    REQUIRE(lb.splitting.size() == 3);
    CHECK(lb.splitting[0].t == 1);
    CHECK(lb.splitting[0].size == 2);
    CHECK(lb.splitting[0].bound == 2);
    CHECK(lb.splitting[1].t == 2);
    CHECK(lb.splitting[1].size == 4);
    CHECK(lb.splitting[1].bound == 2);
    CHECK(lb.splitting[2].t == 3);
    CHECK(lb.splitting[2].size == 0);
    CHECK(lb.splitting[2].bound == 0);
    CHECK(lb.best() == 2);
}

TEST_CASE("lower_bound respects t_max and coverability") {
    LowerBounds lb = lower_bound(make_path(9), 4, 1);
    CHECK(lb.splitting.size() == 1);
    CHECK_THROWS_AS(lower_bound(make_cycle(3), 2), NotCoverableError);
}

TEST_CASE("lower_bound on petersen at m = 5") {
    LowerBounds lb = lower_bound(make_petersen(), 5);
    CHECK(lb.chromatic == 4);
    CHECK(lb.density == 3);
    REQUIRE(lb.splitting.size() == 4);
    CHECK(lb.splitting[0].size == 3);
    CHECK(lb.splitting[1].size == 6);
    CHECK(lb.splitting[2].size == 9);
    CHECK(lb.splitting[3].size == 0);
    CHECK(lb.best() == 4);
}

TEST_CASE("petersen adjudication at m = 5") {
    IndexResult pet = exact_excessive_index(make_petersen(), 5);
    CHECK(pet.value == 5);
    check_witness(make_petersen(), pet);
    CHECK_FALSE(is_compatible(make_petersen(), 5));

    IndexResult minus = exact_excessive_index(make_petersen_minus_edge(), 5);
    CHECK(minus.value == 4);
    check_witness(make_petersen_minus_edge(), minus);
    CHECK(is_compatible(make_petersen_minus_edge(), 5));
}

TEST_CASE("is_compatible") {
    CHECK(is_compatible(make_path(9), 4));
    CHECK_FALSE(is_compatible(build_caterpillar({0, 1, 1, 1, 0}), 4));
    CHECK_FALSE(is_compatible(make_cycle(3), 2));  // not even coverable
}

TEST_CASE("method bounds never exceed the value") {
    for (auto& [name, g] : oracles::test_zoo()) {
        CAPTURE(name);
        for (int m = 2; m <= 4; ++m) {
            IndexResult r = exact_excessive_index(g, m);
            if (!r.value)
                continue;
            CHECK(r.bounds.chromatic <= *r.value);
            CHECK(r.bounds.density <= *r.value);
        }
    }
}
