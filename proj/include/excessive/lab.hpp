#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "excessive/graph.hpp"

namespace excessive {

// Every non-isomorphic tree on n vertices (1 <= n <= 16), sorted by
// canonical code. Cached after first call; thread safe.
const std::vector<Graph>& trees_on(int n);

// Every non-isomorphic connected graph on n vertices (1 <= n <= 7).
// Cached after first call; thread safe.
const std::vector<Graph>& connected_graphs_on(int n);

// The 12-vertex graph certifying that the tree formula fails for general
// graphs at m = 4: K6 with a pendant edge on each clique vertex. Verifies
// its own shape (degrees, counts) before returning.
Graph build_counterexample_graph();

struct TrialReport {
    std::string claim;
    std::string instance;  // graph6 or a generator tag
    std::string expected;
    std::string computed;
    std::string verdict;  // confirmed | refuted | skipped-budget
    long long millis = 0;
};

struct ClaimInfo {
    std::string name;
    std::string summary;
    // Open questions may come back refuted without failing the run; every
    // other claim is treated as settled and a refutation is an error.
    bool open_question = false;
};

struct LabOptions {
    int workers = 1;
    std::uint64_t budget = 100'000'000;  // solver node budget per instance
    int tree_limit = 13;   // largest vertex count in tree sweeps
    int graph_limit = 7;   // largest vertex count in whole-census graph sweeps
    std::uint64_t seed = 1;  // for randomized spot checks
};

const std::vector<ClaimInfo>& claim_catalog();

// Sweep the conjectured general tree formula
//   index = max(chi', ceil(E/m), s^1, ceil(s^2/2), ..., ceil(s^{m-1}/(m-1)))
// against the exact solver over every m-coverable tree with at most n_max
// vertices. One report per coverable tree, under the given claim name.
std::vector<TrialReport> check_tree_conjecture(int n_max, int m,
                                               const LabOptions& opt,
                                               const std::string& claim_name);

// Same for the m = 4 graph conjecture over the connected-graph census up to
// n_max vertices (vacuous there: a 4-matching needs 8 vertices) plus the
// pendant-clique construction, which is the real test.
std::vector<TrialReport> check_graph_conjecture(int n_max,
                                                const LabOptions& opt,
                                                const std::string& claim_name);

// Run one named claim (throws ValidationError for unknown names) or the
// whole catalog. Reports are deterministic for fixed options regardless of
// worker count.
std::vector<TrialReport> run_claim(const std::string& name,
                                   const LabOptions& opt);
std::vector<TrialReport> run_claim_suite(const LabOptions& opt);

void write_reports_jsonl(const std::vector<TrialReport>& reports,
                         std::ostream& out);

// True when some refuted report belongs to a settled (non-open) claim.
bool any_settled_refutation(const std::vector<TrialReport>& reports);

}  // namespace excessive
