#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include "excessive/errors.hpp"
#include "excessive/formats.hpp"
#include "excessive/lab.hpp"

using namespace excessive;

namespace {

LabOptions fast_options() {
    LabOptions opt;
    opt.workers = 4;
    return opt;
}

std::string strip_millis(const std::vector<TrialReport>& rs) {
    std::string out;
    for (const TrialReport& r : rs)
        out += r.claim + "|" + r.instance + "|" + r.expected + "|" +
               r.computed + "|" + r.verdict + "\n";
    return out;
}

}  // namespace

TEST_CASE("tree census counts") {
    const int expect[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
    for (int n = 1; n <= 13; ++n)
        CHECK(static_cast<int>(trees_on(n).size()) == expect[n]);
    for (const Graph& t : trees_on(9)) {
        CHECK(t.vertex_count() == 9);
        CHECK(t.is_tree());
    }
    CHECK_THROWS_AS(trees_on(0), PreconditionError);
    CHECK_THROWS_AS(trees_on(17), PreconditionError);
}

TEST_CASE("tree census matches pruefer enumeration") {
    for (int n = 3; n <= 8; ++n) {
        std::set<std::string> codes;
        int total = 1;
        for (int i = 0; i < n - 2; ++i)
            total *= n;
        for (int idx = 0; idx < total; ++idx) {
            std::vector<int> seq(n - 2);
            int rem = idx;
            for (int i = 0; i < n - 2; ++i) {
                seq[i] = rem % n;
                rem /= n;
            }
            codes.insert(canonical_tree_code(oracles::tree_from_pruefer(n, seq)));
        }
        CHECK(codes.size() == trees_on(n).size());
        std::set<std::string> census_codes;
        for (const Graph& t : trees_on(n))
            census_codes.insert(canonical_tree_code(t));
        CHECK(census_codes == codes);
    }
}

TEST_CASE("connected graph census counts") {
    const int expect[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(connected_graphs_on(n).size()) == expect[n]);
    CHECK_THROWS_AS(connected_graphs_on(8), PreconditionError);

    // the six graphs on 4 vertices, recognized by degree profile
    std::multiset<std::vector<int>> profiles;
    for (const Graph& g : connected_graphs_on(4)) {
        std::vector<int> degs;
        for (int v = 0; v < 4; ++v)
            degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        profiles.insert(degs);
    }
    std::multiset<std::vector<int>> want;
    want.insert({1, 1, 2, 2});  // path on 4
    want.insert({1, 1, 1, 3});  // star
    want.insert({1, 2, 2, 3});  // triangle with a tail
    want.insert({2, 2, 2, 2});  // C4
    want.insert({2, 2, 3, 3});  // diamond
    want.insert({3, 3, 3, 3});  // K4
    CHECK(profiles == want);
}

TEST_CASE("census graphs are pairwise non-isomorphic") {
    // counts match the known sequence and no two members are isomorphic,
    // which together pin the census exactly
    for (int n = 4; n <= 6; ++n) {
        const std::vector<Graph>& gs = connected_graphs_on(n);
        for (std::size_t a = 0; a < gs.size(); ++a)
            for (std::size_t b = a + 1; b < gs.size(); ++b)
                CHECK_FALSE(oracles::isomorphic_naive(gs[a], gs[b]));
    }
}

TEST_CASE("counterexample construction verifies itself") {
    Graph g = build_counterexample_graph();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 21);
    CHECK(g.max_degree() == 6);
}

TEST_CASE("claim catalog") {
    const std::vector<ClaimInfo>& cat = claim_catalog();
    CHECK(cat.size() == 24);
    std::set<std::string> names;
    std::set<std::string> open;
    for (const ClaimInfo& c : cat) {
        CHECK_FALSE(c.summary.empty());
        names.insert(c.name);
        if (c.open_question)
            open.insert(c.name);
    }
    CHECK(names.size() == cat.size());
    CHECK(open == std::set<std::string>{"spine-caterpillar-m5",
                                        "tree-formula-m5-conjecture",
                                        "graph-formula-m4-conjecture"});
    CHECK_THROWS_AS(run_claim("no-such-claim", fast_options()),
                    ValidationError);
}

TEST_CASE("degenerate splitting claim runs clean") {
    std::vector<TrialReport> rs =
        run_claim("splitting-degenerate-top-order", fast_options());
    CHECK(rs.size() == 7);
    for (const TrialReport& r : rs) {
        CAPTURE(r.instance);
        CHECK(r.verdict == "confirmed");
    }
}

TEST_CASE("exceptional caterpillar claim runs clean") {
    std::vector<TrialReport> rs =
        run_claim("exceptional-caterpillars-m4", fast_options());
    CHECK(rs.size() == 3);
    for (const TrialReport& r : rs)
        CHECK(r.verdict == "confirmed");
}

TEST_CASE("spine caterpillar adjudication refutes the claimed bound") {
    std::vector<TrialReport> rs =
        run_claim("spine-caterpillar-m5", fast_options());
    REQUIRE(rs.size() == 2);
    for (const TrialReport& r : rs) {
        CHECK(r.verdict == "refuted");
        CHECK(r.computed.find("index = 3") != std::string::npos);
    }
    // an open question: the refutation must not flip the suite outcome
    CHECK_FALSE(any_settled_refutation(rs));
}

TEST_CASE("tree conjecture sweep confirms through the exceptional sizes") {
    LabOptions opt = fast_options();
    std::vector<TrialReport> rs = check_tree_conjecture(10, 4, opt, "sweep");
    CHECK(!rs.empty());
    bool saw_exceptional = false;
    std::string exceptional =
        canonical_tree_code(build_caterpillar({0, 1, 1, 1, 0}));
    for (const TrialReport& r : rs) {
        CHECK(r.claim == "sweep");
        CHECK(r.verdict == "confirmed");
        if (canonical_tree_code(parse_graph6(r.instance)) == exceptional)
            saw_exceptional = true;
    }
    // the formula's splitting term carries the exceptional caterpillar
    CHECK(saw_exceptional);
}

TEST_CASE("graph conjecture sweep is vacuous below 8 vertices") {
    LabOptions opt = fast_options();
    std::vector<TrialReport> rs = check_graph_conjecture(5, opt, "sweep");
    REQUIRE(rs.size() == 5);  // 4 vacuous census rows + the pendant clique
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
        CHECK(rs[i].verdict == "confirmed");
        CHECK(rs[i].computed.find("0 coverable") != std::string::npos);
    }
    CHECK(rs.back().instance == "k6-pendants");
    CHECK(rs.back().verdict == "confirmed");
}

TEST_CASE("reports are deterministic across worker counts") {
    LabOptions serial = fast_options();
    serial.workers = 1;
    LabOptions parallel = fast_options();
    parallel.workers = 4;
    for (const char* claim :
         {"splitting-degenerate-top-order", "index-m2-formula",
          "equalized-coloring"}) {
        CAPTURE(claim);
        CHECK(strip_millis(run_claim(claim, serial)) ==
              strip_millis(run_claim(claim, parallel)));
    }
}

TEST_CASE("jsonl report format") {
    std::vector<TrialReport> rs =
        run_claim("splitting-degenerate-top-order", fast_options());
    std::ostringstream out;
    write_reports_jsonl(rs, out);
    std::istringstream in(out.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j.contains("claim"));
        CHECK(j.contains("instance"));
        CHECK(j.contains("expected"));
        CHECK(j.contains("computed"));
        CHECK(j.contains("verdict"));
        CHECK(j.contains("millis"));
        // field order is part of the contract
        CHECK(line.rfind("{\"claim\":", 0) == 0);
    }
    CHECK(lines == static_cast<int>(rs.size()));
}

TEST_CASE("any_settled_refutation looks at the catalog") {
    TrialReport open_refuted;
    open_refuted.claim = "tree-formula-m5-conjecture";
    open_refuted.verdict = "refuted";
    TrialReport settled_refuted;
    settled_refuted.claim = "tree-formula-m4";
    settled_refuted.verdict = "refuted";
    TrialReport unknown_refuted;
    unknown_refuted.claim = "tree-sweep-m4";
    unknown_refuted.verdict = "refuted";
    TrialReport fine;
    fine.claim = "tree-formula-m4";
    fine.verdict = "confirmed";

    CHECK_FALSE(any_settled_refutation({open_refuted, fine}));
    CHECK(any_settled_refutation({settled_refuted}));
    CHECK(any_settled_refutation({unknown_refuted}));
    CHECK_FALSE(any_settled_refutation({fine}));
}
