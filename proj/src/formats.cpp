#include "excessive/formats.hpp"

#include <cctype>
#include <sstream>

#include "excessive/errors.hpp"

namespace excessive {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = trimmed(text);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0)
        s = s.substr(header.size());
    if (s.empty())
        throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character");
    int n = s[0] - 63;
    if (n < 1 || n > 62)
        throw ParseError("graph6 vertex count out of supported range [1, 62]");
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - 1 != need)
        throw ParseError("graph6 string has wrong length");
    std::vector<Edge> edges;
    long long pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++pos) {
            int byte = s[1 + pos / 6] - 63;
            if ((byte >> (5 - pos % 6)) & 1)
                edges.push_back({i, j});
        }
    }
    for (long long p = bits; p < need * 6; ++p) {
        int byte = s[1 + p / 6] - 63;
        if ((byte >> (5 - p % 6)) & 1)
            throw ParseError("graph6 padding bits must be zero");
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits)
        out += static_cast<char>(63 + (acc << (6 - nbits)));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trimmed(line);
        if (!line.empty())
            rows.push_back(line);
    }
    if (rows.empty())
        throw ParseError("empty edge list");
    std::istringstream head(rows[0]);
    int n = 0, m = 0;
    if (!(head >> n >> m))
        throw ParseError("edge list header must be '<n> <m>'");
    std::string junk;
    if (head >> junk)
        throw ParseError("trailing tokens after edge list header");
    if (static_cast<int>(rows.size()) != m + 1)
        throw ParseError("edge list declares " + std::to_string(m) +
                         " edges but has " + std::to_string(rows.size() - 1) +
                         " edge lines");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        std::istringstream row(rows[i]);
        int u = 0, v = 0;
        if (!(row >> u >> v) || (row >> junk))
            throw ParseError("bad edge line: '" + rows[i] + "'");
        edges.push_back({u, v});
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_cat_notation(const std::string& text) {
    std::string s = trimmed(text);
    if (s.size() < 5)
        throw ParseError("bad caterpillar notation: '" + s + "'");
    std::string head = s.substr(0, 4);
    for (auto& c : head)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (head != "cat(" || s.back() != ')')
        throw ParseError("caterpillar notation looks like 'cat(1,0,2)'");
    std::string body = s.substr(4, s.size() - 5);
    std::vector<int> legs;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = trimmed(tok);
        std::size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad leg count '" + tok + "'");
        }
        if (used != tok.size() || d < 0)
            throw ParseError("bad leg count '" + tok + "'");
        legs.push_back(d);
    }
    if (legs.empty())
        throw ParseError("caterpillar notation needs at least one leg count");
    return build_caterpillar(legs);
}

std::string cat_notation(const std::vector<int>& legs) {
    std::string out = "cat(";
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(legs[i]);
    }
    out += ')';
    return out;
}

Graph load_graph(const std::string& text, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::graph6:
            return parse_graph6(text);
        case GraphFormat::edge_list:
            return parse_edge_list(text);
        case GraphFormat::cat_notation:
            return parse_cat_notation(text);
    }
    throw ParseError("unknown graph format");
}

Graph load_graph_auto(const std::string& text) {
    std::string s = trimmed(text);
    if (s.size() >= 4) {
        std::string head = s.substr(0, 4);
        for (auto& c : head)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (head == "cat(")
            return parse_cat_notation(s);
    }
    if (s.rfind(">>graph6<<", 0) == 0)
        return parse_graph6(s);
    bool spaced = s.find_first_of(" \t\n\r") != std::string::npos;
    if (spaced || s.find('#') != std::string::npos)
        return parse_edge_list(text);
    return parse_graph6(s);
}

}  // namespace excessive
