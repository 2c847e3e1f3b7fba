#include "overlap/io.hpp"

#include <algorithm>
#include <sstream>

namespace overlap {

namespace {

struct Line {
    int number;
    std::string text;
};

// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<Line> content_lines(const std::string& text, char comment) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == comment) continue;
        out.push_back({number, line});
    }
    return out;
}

std::vector<long long> parse_ints(const Line& l) {
    std::istringstream in(l.text);
    std::vector<long long> out;
    long long v;
    while (in >> v) out.push_back(v);
    std::string rest;
    if (in.clear(), in >> rest)
        throw ParseError(l.number, "unexpected token '" + rest + "'");
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = content_lines(text, '#');
    if (lines.empty()) throw ParseError(1, "missing 'p graph' header");
    std::istringstream head(lines[0].text);
    std::string p, kind;
    long long n = -1, m = -1;
    if (!(head >> p >> kind >> n >> m) || p != "p" || kind != "graph")
        throw ParseError(lines[0].number, "malformed header, expected 'p graph <n> <m>'");
    if (n < 0 || m < 0)
        throw ParseError(lines[0].number, "negative count in header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i]);
        if (vals.size() != 2)
            throw ParseError(lines[i].number, "expected '<u> <v>'");
        long long u = vals[0], v = vals[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lines[i].number, "vertex id out of range");
        if (u == v) throw ParseError(lines[i].number, "self-loop");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.n << ' ' << g.edge_count() << '\n';
    for (auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Representation parse_representation(const std::string& text) {
    auto lines = content_lines(text, '#');
    if (lines.empty()) throw ParseError(1, "empty representation");
    std::vector<ElementSet> sets(lines.size());
    std::vector<char> seen(lines.size(), 0);
    for (const Line& l : lines) {
        size_t colon = l.text.find(':');
        if (colon == std::string::npos)
            throw ParseError(l.number, "expected '<v>: <elements>'");
        long long v;
        {
            std::istringstream in(l.text.substr(0, colon));
            std::string rest;
            if (!(in >> v) || (in >> rest))
                throw ParseError(l.number, "malformed vertex id");
        }
        if (v < 0 || v >= static_cast<long long>(lines.size()))
            throw ParseError(l.number,
                             "vertex id " + std::to_string(v) + " outside 0.." +
                                 std::to_string(lines.size() - 1));
        if (seen[v]) throw ParseError(l.number, "duplicate vertex line");
        seen[v] = 1;
        ElementSet s;
        std::istringstream in(l.text.substr(colon + 1));
        long long e;
        while (in >> e) {
            if (e < 0) throw ParseError(l.number, "negative element id");
            if (!s.empty() && e <= s.back())
                throw ParseError(l.number, "elements must be strictly ascending");
            s.push_back(static_cast<int>(e));
        }
        std::string rest;
        if (in.clear(), in >> rest)
            throw ParseError(l.number, "unexpected token '" + rest + "'");
        if (s.empty()) throw ParseError(l.number, "empty element set");
        sets[v] = std::move(s);
    }
    return Representation{std::move(sets)};
}

std::string serialize_representation(const Representation& r) {
    std::ostringstream out;
    for (int v = 0; v < r.vertex_count(); ++v) {
        out << v << ':';
        for (int e : r.sets[v]) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

CnfInstance parse_dimacs_cnf(const std::string& text) {
    CnfInstance f;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    bool header_seen = false;
    long long declared_clauses = -1;
    std::vector<int> pending;  // literals of the clause being read
    int pending_line = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') {
            std::string body = line.substr(start + 1);
            size_t b = body.find_first_not_of(" \t");
            if (b != std::string::npos && body.substr(b) == "mode: nae")
                f.mode = CnfMode::NotAllEqual;
            continue;
        }
        if (line[start] == 'p') {
            if (header_seen) throw ParseError(number, "duplicate 'p cnf' header");
            std::istringstream head(line);
            std::string p, kind;
            long long nv = -1;
            if (!(head >> p >> kind >> nv >> declared_clauses) || kind != "cnf")
                throw ParseError(number, "malformed header, expected 'p cnf <vars> <clauses>'");
            if (nv < 0 || declared_clauses < 0)
                throw ParseError(number, "negative count in header");
            f.num_vars = static_cast<int>(nv);
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError(number, "clause before 'p cnf' header");
        std::istringstream body(line);
        long long lit;
        while (body >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError(number, "clause must have exactly 3 literals");
                Clause c{pending[0], pending[1], pending[2]};
                if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
                    throw ParseError(number, "duplicate literal in clause");
                f.clauses.push_back(c);
                pending.clear();
                continue;
            }
            long long var = lit > 0 ? lit : -lit;
            if (var > f.num_vars)
                throw ParseError(number, "variable " + std::to_string(var) +
                                             " exceeds declared count");
            int v = static_cast<int>(var) - 1;
            pending.push_back(lit > 0 ? pos_lit(v) : neg_lit(v));
            if (pending.size() == 1) pending_line = number;
            if (pending.size() > 3)
                throw ParseError(number, "clause must have exactly 3 literals");
        }
        std::string rest;
        if (body.clear(), body >> rest)
            throw ParseError(number, "unexpected token '" + rest + "'");
    }
    if (!header_seen) throw ParseError(number == 0 ? 1 : number, "missing 'p cnf' header");
    if (!pending.empty())
        throw ParseError(pending_line, "unterminated clause (missing 0)");
    if (declared_clauses != static_cast<long long>(f.clauses.size()))
        throw ParseError(number, "header declares " + std::to_string(declared_clauses) +
                                     " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::vector<int> parse_targets(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    long long v;
    while (in >> v) {
        if (v < 0) throw ParseError(1, "negative vertex id");
        out.push_back(static_cast<int>(v));
    }
    std::string rest;
    if (in.clear(), in >> rest) throw ParseError(1, "unexpected token '" + rest + "'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string serialize_targets(const std::vector<int>& targets) {
    std::ostringstream out;
    for (size_t i = 0; i < targets.size(); ++i) {
        if (i) out << ' ';
        out << targets[i];
    }
    out << '\n';
    return out.str();
}

}  // namespace overlap
