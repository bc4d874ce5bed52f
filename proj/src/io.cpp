#include "axg/io.hpp"

#include <istream>
#include <sstream>
#include <unordered_map>

namespace axg {

namespace {

// Reads the next line that contains any non-space character and is not a
// '#' comment; returns false on EOF. `lineno` counts every physical line
// consumed.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto at = line.find_first_not_of(" \t\r\n");
        if (at == std::string::npos || line[at] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long long parse_int(const std::string& tok, int lineno, const char* what) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string(what) + " is not an integer: '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(lineno, std::string(what) + " is not an integer: '" + tok + "'");
    return v;
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "edgelist") return Format::edge_list;
    if (name == "dimacs") return Format::dimacs;
    throw std::invalid_argument("unknown format '" + name + "' (expected edgelist or dimacs)");
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, "missing header");
    auto head = tokens_of(line);
    if (head.size() != 2)
        throw ParseError(lineno, "header must be '<n> <m>', got " + std::to_string(head.size()) +
                                     " tokens");
    long long n = parse_int(head[0], lineno, "vertex count");
    long long m = parse_int(head[1], lineno, "edge count");
    if (n < 0 || m < 0) throw ParseError(lineno, "counts must be non-negative");

    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    EdgeList edges;
    auto intern = [&](const std::string& tok, int at) {
        auto it = id_of.find(tok);
        if (it != id_of.end()) return it->second;
        if (static_cast<long long>(labels.size()) == n)
            throw ParseError(at, "more than " + std::to_string(n) + " distinct labels ('" + tok +
                                     "' is new)");
        int id = int(labels.size());
        id_of.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(i));
        auto toks = tokens_of(line);
        if (toks.size() != 2)
            throw ParseError(lineno, "edge line must have two tokens, got " +
                                         std::to_string(toks.size()));
        int u = intern(toks[0], lineno);
        int v = intern(toks[1], lineno);
        if (u == v) throw ParseError(lineno, "self loop at '" + toks[0] + "'");
        edges.emplace_back(u, v);
    }
    // Vertices that never appear in an edge get fresh decimal labels.
    while (static_cast<long long>(labels.size()) < n) {
        std::string fresh = std::to_string(labels.size());
        while (id_of.count(fresh)) fresh += "'";
        id_of.emplace(fresh, int(labels.size()));
        labels.push_back(fresh);
    }
    return Graph::build(int(n), edges, std::move(labels));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    EdgeList edges;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(lineno, "problem line must be 'p edge <n> <m>'");
            n = parse_int(toks[2], lineno, "vertex count");
            m = parse_int(toks[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "counts must be non-negative");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            long long u = parse_int(toks[1], lineno, "endpoint");
            long long v = parse_int(toks[2], lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self loop at " + std::to_string(u));
            edges.emplace_back(int(u - 1), int(v - 1));
            ++seen;
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
    }
    if (n < 0) throw ParseError(lineno + 1, "missing problem line");
    if (seen != m)
        throw ParseError(lineno + 1, "problem line promised " + std::to_string(m) +
                                         " edges, found " + std::to_string(seen));
    std::vector<std::string> labels(n);
    for (long long i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return Graph::build(int(n), edges, std::move(labels));
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_graph(std::istream& in, Format f) {
    return f == Format::edge_list ? read_edge_list(in) : read_dimacs(in);
}

std::string write_graph(const Graph& g, Format f) {
    return f == Format::edge_list ? write_edge_list(g) : write_dimacs(g);
}

} // namespace axg
