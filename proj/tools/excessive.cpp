// Command line front end: compute indices and splitting numbers, run the
// claim lab, emit reports. Exit codes: 0 ok, 1 usage or input error,
// 2 not coverable (index infinite), 3 budget exhausted, 4 a settled claim
// came back refuted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "excessive/coloring.hpp"
#include "excessive/errors.hpp"
#include "excessive/excessive.hpp"
#include "excessive/formats.hpp"
#include "excessive/lab.hpp"
#include "excessive/matching.hpp"
#include "excessive/splitting.hpp"

namespace {

using excessive::EdgeSet;
using excessive::Graph;
using json = nlohmann::ordered_json;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct GraphInput {
    std::string graph6;
    std::string edge_list;
    std::string cat;
    std::string file;
    std::string construct;
    int path = -1;  // edge count
    int star = -1;  // leaf count

    void add_options(CLI::App* cmd) {
        auto* grp = cmd->add_option_group("input", "graph source (pick one)");
        grp->add_option("--graph6", graph6, "graph6 string");
        grp->add_option("--edge-list", edge_list,
                        "inline edge list: \"n m; u v; u v; ...\" "
                        "(';' may stand in for newlines)");
        grp->add_option("--cat", cat,
                        "caterpillar leg counts, e.g. 0,1,1,1,0");
        grp->add_option("--file", file,
                        "file holding graph6, edge list or cat(...) text");
        grp->add_option("--path", path, "path with this many edges");
        grp->add_option("--star", star, "star with this many leaves");
        grp->add_option("--construct", construct,
                        "named graph: k6-pendants | petersen | "
                        "petersen-minus-edge")
            ->check(CLI::IsMember(
                {"k6-pendants", "petersen", "petersen-minus-edge"}));
        grp->require_option(1);
    }

    Graph build() const {
        if (!graph6.empty())
            return excessive::parse_graph6(graph6);
        if (!edge_list.empty()) {
            std::string text = edge_list;
            for (char& c : text)
                if (c == ';')
                    c = '\n';
            return excessive::parse_edge_list(text);
        }
        if (!cat.empty()) {
            std::string text = cat;
            if (text.rfind("cat(", 0) != 0)
                text = "cat(" + text + ")";
            return excessive::parse_cat_notation(text);
        }
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in)
                throw excessive::ParseError("cannot read file: " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            return excessive::load_graph_auto(ss.str());
        }
        if (path >= 0) {
            if (path < 1)
                throw excessive::ParseError("--path needs at least 1 edge");
            return excessive::make_path(path + 1);
        }
        if (star >= 0) {
            if (star < 1)
                throw excessive::ParseError("--star needs at least 1 leaf");
            return excessive::make_star(star);
        }
        if (construct == "k6-pendants")
            return excessive::build_counterexample_graph();
        if (construct == "petersen")
            return excessive::make_petersen();
        if (construct == "petersen-minus-edge")
            return excessive::make_petersen_minus_edge();
        throw excessive::ParseError("no graph input given");
    }
};

std::string method_name(excessive::IndexMethod m) {
    switch (m) {
        case excessive::IndexMethod::formula_m1: return "formula-m1";
        case excessive::IndexMethod::formula_m2: return "formula-m2";
        case excessive::IndexMethod::formula_m3: return "formula-m3";
        case excessive::IndexMethod::formula_tree_m4: return "formula-tree-m4";
        case excessive::IndexMethod::exact_search: return "exact-search";
    }
    return "?";
}

std::string edge_text(const Graph& g, const EdgeSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        auto [u, v] = g.edge(i);
        if (!first)
            out += " ";
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    });
    return out + "}";
}

json edge_json(const Graph& g, const EdgeSet& s) {
    json arr = json::array();
    s.for_each([&](int i) {
        auto [u, v] = g.edge(i);
        arr.push_back(json::array({u, v}));
    });
    return arr;
}

json bounds_json(const excessive::LowerBounds& b) {
    json j;
    j["chromatic"] = b.chromatic;
    j["density"] = b.density;
    json sp = json::array();
    for (const auto& s : b.splitting)
        sp.push_back(json{{"t", s.t}, {"size", s.size}, {"bound", s.bound}});
    j["splitting"] = sp;
    j["best"] = b.best();
    return j;
}

std::string bounds_text(const excessive::LowerBounds& b) {
    std::string out = "chromatic " + std::to_string(b.chromatic) +
                      ", density " + std::to_string(b.density);
    for (const auto& s : b.splitting)
        out += ", t=" + std::to_string(s.t) + ": s=" + std::to_string(s.size) +
               " bound " + std::to_string(s.bound);
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_index(const GraphInput& input, int m, bool witness, bool force_exact,
              std::uint64_t budget, const std::string& format) {
    Graph g = input.build();
    excessive::IndexResult res;
    try {
        if (force_exact || m > 4 || (m == 4 && !g.is_tree()))
            res = excessive::exact_excessive_index(
                g, m, excessive::SearchBudget{budget}, witness);
        else if (m == 4)
            res = excessive::tree_index_m4(g, witness);
        else
            res = excessive::formula_index_small_m(g, m, witness);
    } catch (const excessive::NotCoverableError&) {
        res = excessive::IndexResult{};  // value stays empty
    } catch (const excessive::BudgetExceededError& e) {
        std::cerr << "budget exhausted: " << e.what()
                  << " (proved index >= " << e.proven_lower << ")\n";
        return 3;
    }

    if (format == "json") {
        json j;
        j["graph"] = {{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"graph6", excessive::to_graph6(g)}};
        j["m"] = m;
        j["value"] = res.value ? json(*res.value) : json(nullptr);
        j["method"] = method_name(res.method);
        j["bounds"] = bounds_json(res.bounds);
        if (res.witness) {
            json w = json::array();
            for (const EdgeSet& mt : res.witness->matchings)
                w.push_back(edge_json(g, mt));
            j["witness"] = w;
        }
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "vertices,edges,m,value,method,chromatic,density,best\n"
                  << g.vertex_count() << "," << g.edge_count() << "," << m
                  << "," << (res.value ? std::to_string(*res.value) : "INFINITE")
                  << "," << method_name(res.method) << ","
                  << res.bounds.chromatic << "," << res.bounds.density << ","
                  << res.bounds.best() << "\n";
    } else {
        std::cout << "graph: " << g.vertex_count() << " vertices, "
                  << g.edge_count() << " edges ("
                  << excessive::to_graph6(g) << ")\n"
                  << "m: " << m << "\n"
                  << "value: "
                  << (res.value ? std::to_string(*res.value) : "INFINITE")
                  << "\n";
        if (res.value) {
            std::cout << "method: " << method_name(res.method) << "\n"
                      << "bounds: " << bounds_text(res.bounds) << "\n";
            if (res.witness) {
                std::cout << "witness:\n";
                for (const EdgeSet& mt : res.witness->matchings)
                    std::cout << "  " << edge_text(g, mt) << "\n";
            }
        }
    }
    return res.value ? 0 : 2;
}

int cmd_splitting(const GraphInput& input, int m, int t, bool witness,
                  const std::string& format) {
    Graph g = input.build();
    std::vector<int> orders;
    if (t == 0) {
        for (int i = 1; i < m; ++i)
            orders.push_back(i);
    } else {
        orders.push_back(t);
    }
    struct Row {
        int t;
        excessive::SplittingResult res;
    };
    std::vector<Row> rows;
    for (int ord : orders)
        rows.push_back({ord, excessive::splitting_number(g, m, ord)});

    if (format == "json") {
        json j;
        j["graph"] = {{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"graph6", excessive::to_graph6(g)}};
        j["m"] = m;
        json arr = json::array();
        for (const Row& r : rows) {
            json e;
            e["t"] = r.t;
            e["size"] = r.res.size;
            e["bound"] = r.res.size ? ceil_div(r.res.size, r.t) : 0;
            if (witness && r.res.witness)
                e["witness"] = edge_json(g, r.res.witness->edge_set);
            arr.push_back(e);
        }
        j["results"] = arr;
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "t,size,bound\n";
        for (const Row& r : rows)
            std::cout << r.t << "," << r.res.size << ","
                      << (r.res.size ? ceil_div(r.res.size, r.t) : 0) << "\n";
    } else {
        std::cout << "graph: " << g.vertex_count() << " vertices, "
                  << g.edge_count() << " edges ("
                  << excessive::to_graph6(g) << ")\n"
                  << "m: " << m << "\n";
        for (const Row& r : rows) {
            std::cout << "t=" << r.t << ": s=" << r.res.size << " bound "
                      << (r.res.size ? ceil_div(r.res.size, r.t) : 0);
            if (witness && r.res.witness)
                std::cout << " witness " << edge_text(g, r.res.witness->edge_set);
            std::cout << "\n";
        }
    }
    return 0;
}

void print_reports(const std::vector<excessive::TrialReport>& reports,
                   const std::string& format, std::ostream& out) {
    if (format == "json") {
        excessive::write_reports_jsonl(reports, out);
    } else if (format == "csv") {
        out << "claim,instance,expected,computed,verdict,millis\n";
        for (const auto& r : reports)
            out << csv_escape(r.claim) << "," << csv_escape(r.instance) << ","
                << csv_escape(r.expected) << "," << csv_escape(r.computed)
                << "," << r.verdict << "," << r.millis << "\n";
    } else {
        for (const auto& r : reports)
            out << "[" << r.verdict << "] " << r.claim << " :: " << r.instance
                << " :: " << r.computed << "\n";
    }
}

int cmd_verify(const std::string& suite, const std::string& claim, int trees,
               int graphs, int m, const excessive::LabOptions& opt,
               const std::string& format, const std::string& out_path,
               bool list_only) {
    if (list_only) {
        for (const excessive::ClaimInfo& c : excessive::claim_catalog())
            std::cout << c.name << (c.open_question ? "  [open]" : "")
                      << "\n    " << c.summary << "\n";
        return 0;
    }

    std::vector<excessive::TrialReport> reports;
    bool settled_scope = true;  // refutations flip the exit code
    if (!claim.empty()) {
        reports = excessive::run_claim(claim, opt);
    } else if (trees > 0) {
        reports = excessive::check_tree_conjecture(
            trees, m, opt, "tree-sweep-m" + std::to_string(m));
        settled_scope = m <= 4;  // proven up to there on trees
    } else if (graphs > 0) {
        reports = excessive::check_graph_conjecture(
            graphs, opt, "graph-sweep-m4");
        settled_scope = false;  // conjecture only
    } else if (!suite.empty()) {
        reports = excessive::run_claim_suite(opt);
    } else {
        std::cerr << "verify needs --suite, --claim, --trees or --graphs\n";
        return 1;
    }

    std::ofstream file_out;
    std::ostream* sink = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        sink = &file_out;
    }
    print_reports(reports, format, *sink);

    int confirmed = 0, refuted = 0, skipped = 0;
    for (const auto& r : reports) {
        if (r.verdict == "confirmed")
            ++confirmed;
        else if (r.verdict == "refuted")
            ++refuted;
        else
            ++skipped;
    }
    std::cerr << "trials: " << reports.size() << ", confirmed: " << confirmed
              << ", refuted: " << refuted << ", skipped: " << skipped << "\n";

    bool fail;
    if (!claim.empty() || !suite.empty())
        fail = excessive::any_settled_refutation(reports);
    else
        fail = settled_scope && refuted > 0;
    return fail ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge covers by fixed-size matchings: exact solver and "
                 "claim lab"};
    app.require_subcommand(1);

    GraphInput idx_in, spl_in;
    int idx_m = 0, spl_m = 0, spl_t = 0;
    bool idx_witness = false, spl_witness = false, idx_exact = false;
    std::uint64_t idx_budget = excessive::SearchBudget{}.max_nodes;
    std::string idx_format = "text", spl_format = "text";

    CLI::App* idx = app.add_subcommand(
        "index", "minimum number of m-edge matchings covering all edges");
    idx_in.add_options(idx);
    idx->add_option("--m", idx_m, "matching size")->required()
        ->check(CLI::PositiveNumber);
    idx->add_flag("--witness", idx_witness, "print an optimal cover");
    idx->add_flag("--exact", idx_exact,
                  "force the exact search even where a formula applies");
    idx->add_option("--budget", idx_budget, "search node budget");
    idx->add_option("--format", idx_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* spl = app.add_subcommand(
        "splitting", "largest (m,t)-splitting set and the bound it forces");
    spl_in.add_options(spl);
    spl->add_option("--m", spl_m, "matching size")->required()
        ->check(CLI::PositiveNumber);
    spl->add_option("--t", spl_t, "order (default: every t in 1..m-1)");
    spl->add_flag("--witness", spl_witness, "print a largest splitting set");
    spl->add_option("--format", spl_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string ver_suite, ver_claim, ver_format = "json", ver_out;
    int ver_trees = 0, ver_graphs = 0, ver_m = 4;
    bool ver_list = false;
    excessive::LabOptions opt;
    opt.workers = static_cast<int>(std::thread::hardware_concurrency());
    if (opt.workers < 1)
        opt.workers = 1;

    CLI::App* ver = app.add_subcommand(
        "verify", "run recorded claims against the solver, report JSONL");
    ver->add_option("--suite", ver_suite, "claim suite to run: claims");
    ver->add_option("--claim", ver_claim, "single claim by name");
    ver->add_option("--trees", ver_trees,
                    "sweep the tree formula over all trees up to this many "
                    "vertices (with --m)");
    ver->add_option("--graphs", ver_graphs,
                    "sweep the m=4 graph formula over the census up to this "
                    "many vertices");
    ver->add_option("--m", ver_m, "matching size for --trees");
    ver->add_flag("--list", ver_list, "list claims and exit");
    ver->add_option("--workers", opt.workers, "worker threads");
    ver->add_option("--budget", opt.budget, "search node budget per instance");
    ver->add_option("--seed", opt.seed, "seed for randomized spot checks");
    ver->add_option("--tree-limit", opt.tree_limit,
                    "largest tree size in suite sweeps");
    ver->add_option("--graph-limit", opt.graph_limit,
                    "largest census size in suite sweeps");
    ver->add_option("--format", ver_format, "json | text | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    ver->add_option("--out", ver_out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (idx->parsed())
            return cmd_index(idx_in, idx_m, idx_witness, idx_exact, idx_budget,
                             idx_format);
        if (spl->parsed()) {
            if (spl_t < 0 || spl_t >= spl_m) {
                std::cerr << "--t must lie in 1.." << (spl_m - 1)
                          << " (or 0 for all)\n";
                return 1;
            }
            return cmd_splitting(spl_in, spl_m, spl_t, spl_witness,
                                 spl_format);
        }
        if (ver->parsed()) {
            if (ver_suite == "paper")
                ver_suite = "claims";
            if (!ver_suite.empty() && ver_suite != "claims") {
                std::cerr << "unknown suite: " << ver_suite << "\n";
                return 1;
            }
            return cmd_verify(ver_suite, ver_claim, ver_trees, ver_graphs,
                              ver_m, opt, ver_format, ver_out, ver_list);
        }
    } catch (const excessive::BudgetExceededError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const excessive::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
