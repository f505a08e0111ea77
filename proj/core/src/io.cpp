#include <netctrl/io.hpp>

#include <netctrl/error.hpp>

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace netctrl {

namespace {

struct SourceLine {
    int number = 0; // 1-based position in the original text
    std::vector<std::string> tokens;
};

// Keeps only significant lines (tokenized), remembering where they came
// from so errors can point at the real file position.
std::vector<SourceLine> significant_lines(const std::string& text) {
    std::vector<SourceLine> lines;
    int number = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        SourceLine line;
        line.number = number;
        std::istringstream fields(raw);
        std::string tok;
        while (fields >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void parse_fail(int lineNumber, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(lineNumber) + ": " + what);
}

long long parse_number(const SourceLine& line, const std::string& tok, const char* what) {
    if (tok.empty() || tok.size() > 9) parse_fail(line.number, std::string(what) + " '" + tok + "' is not a valid integer");
    long long value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size())
        parse_fail(line.number, std::string(what) + " '" + tok + "' is not a valid integer");
    return value;
}

int parse_endpoint(const SourceLine& line, const std::string& tok, int n) {
    long long v = parse_number(line, tok, "vertex");
    if (v < 1 || v > n)
        parse_fail(line.number, "vertex " + tok + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v);
}

std::string escape_label(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '"') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<SourceLine> lines = significant_lines(text);
    if (lines.empty()) fail(ErrorCode::ParseError, "line 1: missing header line 'n m'");

    const SourceLine& header = lines.front();
    if (header.tokens.size() != 2)
        parse_fail(header.number, "header must be 'n m', got " + std::to_string(header.tokens.size()) + " fields");
    long long n = parse_number(header, header.tokens[0], "vertex count");
    if (n < 1 || n > 64)
        parse_fail(header.number, "vertex count " + header.tokens[0] + " out of range 1..64");
    long long maxEdges = n * (n - 1) / 2;
    long long m = parse_number(header, header.tokens[1], "edge count");
    if (m < 0 || m > maxEdges)
        parse_fail(header.number, "edge count " + header.tokens[1] + " out of range 0.." + std::to_string(maxEdges));

    if (static_cast<long long>(lines.size()) - 1 < m) {
        int last = lines.back().number;
        parse_fail(last, "expected " + std::to_string(m) + " edge lines, found only " +
                             std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        parse_fail(lines[static_cast<size_t>(m) + 1].number,
                   "unexpected content after " + std::to_string(m) + " edges");

    std::vector<std::pair<int, int>> edges;
    std::vector<uint64_t> seen(static_cast<size_t>(n), 0);
    for (long long i = 0; i < m; ++i) {
        const SourceLine& line = lines[static_cast<size_t>(i) + 1];
        if (line.tokens.size() != 2)
            parse_fail(line.number, "edge must be 'u v', got " + std::to_string(line.tokens.size()) + " fields");
        int u = parse_endpoint(line, line.tokens[0], static_cast<int>(n));
        int v = parse_endpoint(line, line.tokens[1], static_cast<int>(n));
        if (u == v) parse_fail(line.number, "self-loop " + line.tokens[0] + "-" + line.tokens[1]);
        if ((seen[static_cast<size_t>(u - 1)] >> (v - 1)) & 1u)
            parse_fail(line.number, "duplicate edge " + line.tokens[0] + "-" + line.tokens[1]);
        seen[static_cast<size_t>(u - 1)] |= uint64_t(1) << (v - 1);
        seen[static_cast<size_t>(v - 1)] |= uint64_t(1) << (u - 1);
        edges.emplace_back(u, v);
    }
    return graph_from_edges(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::string export_dot(const Graph& g, const DotAnnotations& a) {
    uint64_t leaderMask = 0, shadedMask = 0;
    for (int v : a.leaders) {
        if (v < 0 || v >= g.n)
            fail(ErrorCode::IndexOutOfRange, "dot leader " + std::to_string(v) + " out of range");
        leaderMask |= uint64_t(1) << v;
    }
    for (int v : a.shaded) {
        if (v < 0 || v >= g.n)
            fail(ErrorCode::IndexOutOfRange, "dot shaded vertex " + std::to_string(v) + " out of range");
        shadedMask |= uint64_t(1) << v;
    }
    if (!a.valueLabels.empty() && static_cast<int>(a.valueLabels.size()) != g.n)
        fail(ErrorCode::WrongSize, "dot value labels: expected " + std::to_string(g.n) +
                                       " entries, got " + std::to_string(a.valueLabels.size()));

    std::string out = "graph netctrl {\n";
    for (int v = 0; v < g.n; ++v) {
        std::string label = std::to_string(v + 1);
        if (!a.valueLabels.empty()) label += ": " + escape_label(a.valueLabels[static_cast<size_t>(v)]);
        out += "  v" + std::to_string(v + 1) + " [label=\"" + label + "\"";
        if ((leaderMask >> v) & 1u) out += ", shape=square";
        if ((shadedMask >> v) & 1u) out += ", style=filled, fillcolor=gray80";
        out += "];\n";
    }
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u + 1) + " -- v" + std::to_string(v + 1) + ";\n";
    out += "}\n";
    return out;
}

} // namespace netctrl
