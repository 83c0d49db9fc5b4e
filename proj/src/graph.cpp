#include "dbldom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace dbldom {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::ParseError: return "ParseError";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InfeasibleParameter: return "InfeasibleParameter";
    case Errc::RequiredSetInfeasible: return "RequiredSetInfeasible";
    case Errc::GraphTooLargeForOracle: return "GraphTooLargeForOracle";
    case Errc::EmptyDemand: return "EmptyDemand";
    case Errc::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case Errc::OrderTooLargeForExhaustive: return "OrderTooLargeForExhaustive";
    case Errc::PairNotApplicable: return "PairNotApplicable";
    }
    return "Unknown";
}

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxOrder) {
        throw Error(Errc::InvalidGraph,
                    "order " + std::to_string(n) + " outside supported range 1.." +
                        std::to_string(kMaxOrder));
    }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(Errc::InvalidGraph, "edge (" + std::to_string(u) + ", " +
                                                std::to_string(v) + ") has an endpoint outside 0.." +
                                                std::to_string(n - 1));
        }
        if (u == v) {
            throw Error(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(u));
        }
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    check_order(n);
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet nv = adjacency[static_cast<std::size_t>(v)];
        if (!nv.is_subset_of(all)) throw Error(Errc::InvalidGraph, "adjacency bit out of range");
        if (nv.contains(v)) throw Error(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(v));
        for (int w : nv) {
            if (!adjacency[static_cast<std::size_t>(w)].contains(v)) {
                throw Error(Errc::InvalidGraph, "adjacency is not symmetric");
            }
        }
    }
    return Graph(std::move(adjacency));
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet nv : adj_) twice += nv.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int best = order();
    for (VertexSet nv : adj_) best = std::min(best, nv.size());
    return best;
}

bool Graph::is_connected() const {
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        const VertexSet next = neighborhood(frontier) - seen;
        seen |= next;
        frontier = next;
    }
    return seen == vertices();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet Graph::neighborhood(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= neighbors(v);
    return out;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v : s) {
        if (neighbors(v).intersects(s)) return false;
    }
    return true;
}

bool Graph::is_clique(VertexSet s) const {
    for (int v : s) {
        if (!(s - VertexSet::single(v)).is_subset_of(neighbors(v))) return false;
    }
    return true;
}

bool is_claw_free(const Graph& g) {
    for (int center = 0; center < g.order(); ++center) {
        const std::vector<int> nb = g.neighbors(center).to_vector();
        const std::size_t d = nb.size();
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < d; ++c) {
                    if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
                }
            }
        }
    }
    return true;
}

GraphProfile profile(const Graph& g) {
    GraphProfile p;
    p.min_degree = g.min_degree();
    p.has_isolated = p.min_degree == 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) p.leaves.insert(v);
    }
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbors(v).intersects(p.leaves)) p.supports.insert(v);
    }
    p.claw_free = is_claw_free(g);
    p.is_tree = g.is_connected() && g.edge_count() == g.order() - 1;
    return p;
}

VertexSet epn(int u, VertexSet a, const Graph& g) {
    if (!a.contains(u)) {
        throw Error(Errc::PreconditionViolated,
                    "epn: vertex " + std::to_string(u) + " is not a member of " + a.to_string());
    }
    const VertexSet owner = VertexSet::single(u);
    VertexSet out;
    for (int w : g.neighbors(u) - a) {
        if ((g.neighbors(w) & a) == owner) out.insert(w);
    }
    return out;
}

bool has_k2_component(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 1) continue;
        const int v = g.neighbors(u).front();
        if (g.degree(v) == 1) return true;
    }
    return false;
}

// graph6: byte n+63, then the upper triangle x(i,j), i<j, in column-major
// order (j outer, i inner), packed big-endian into 6-bit groups offset by 63.

Graph graph6_decode(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    int column_offset = 0;
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        column_offset = static_cast<int>(header.size());
    }
    if (text.empty()) throw ParseError(1, column_offset + 1, "empty graph6 string");
    for (std::size_t k = 0; k < text.size(); ++k) {
        const auto c = static_cast<unsigned char>(text[k]);
        if (c < 63 || c > 126) {
            throw ParseError(1, column_offset + static_cast<int>(k) + 1,
                             "byte " + std::to_string(c) + " is not a graph6 character");
        }
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kMaxOrder) {
        throw ParseError(1, column_offset + 1, "order header exceeds the supported maximum of 62");
    }
    if (n < 1) throw ParseError(1, column_offset + 1, "order-0 graphs are not supported");

    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - 1 < nbytes) {
        throw ParseError(1, column_offset + static_cast<int>(text.size()) + 1,
                         "truncated bit payload: expected " + std::to_string(nbytes) +
                             " data bytes, found " + std::to_string(text.size() - 1));
    }
    if (text.size() - 1 > nbytes) {
        throw ParseError(1, column_offset + static_cast<int>(nbytes) + 2, "trailing bytes after graph6 payload");
    }

    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    std::size_t bit = 0;
    auto next_bit = [&]() {
        const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
        const int shift = 5 - static_cast<int>(bit % 6);
        ++bit;
        return (byte >> shift) & 1;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (next_bit() != 0) {
                adj[static_cast<std::size_t>(i)].insert(j);
                adj[static_cast<std::size_t>(j)].insert(i);
            }
        }
    }
    while (bit < nbytes * 6) {
        if (next_bit() != 0) {
            throw ParseError(1, column_offset + static_cast<int>(nbytes) + 1, "nonzero padding bits");
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k > start) out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line) {
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
    }
    return value;
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        out.push_back({number, std::move(text)});
    }
    return out;
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

Graph parse_edge_list(const std::vector<Line>& lines) {
    std::size_t k = 0;
    auto next_content = [&]() -> const Line* {
        while (k < lines.size()) {
            const Line& l = lines[k++];
            if (!is_blank(strip_comment(l.text))) return &l;
        }
        return nullptr;
    };

    const Line* header = next_content();
    if (header == nullptr) throw ParseError(1, 0, "missing \"n m\" header");
    const auto htoks = tokenize(strip_comment(header->text));
    if (htoks.size() != 2) {
        throw ParseError(header->number, htoks.empty() ? 0 : htoks.front().column,
                         "header must be exactly two integers \"n m\"");
    }
    const int n = parse_int(htoks[0], header->number);
    const int m = parse_int(htoks[1], header->number);
    if (n < 1 || n > kMaxOrder) {
        throw ParseError(header->number, htoks[0].column,
                         "order " + std::to_string(n) + " outside supported range 1..62");
    }
    if (m < 0) throw ParseError(header->number, htoks[1].column, "negative edge count");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    int last_line = header->number;
    for (int e = 0; e < m; ++e) {
        const Line* l = next_content();
        if (l == nullptr) {
            throw ParseError(last_line + 1, 0,
                             "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        }
        last_line = l->number;
        const auto toks = tokenize(strip_comment(l->text));
        if (toks.size() != 2) {
            throw ParseError(l->number, toks.front().column, "edge line must be exactly two integers \"u v\"");
        }
        const int u = parse_int(toks[0], l->number);
        const int v = parse_int(toks[1], l->number);
        for (int idx = 0; idx < 2; ++idx) {
            const int x = idx == 0 ? u : v;
            if (x < 0 || x >= n) {
                throw ParseError(l->number, toks[static_cast<std::size_t>(idx)].column,
                                 "vertex " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
            }
        }
        if (u == v) throw ParseError(l->number, toks[1].column, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (const Line* extra = next_content()) {
        throw ParseError(extra->number, 1, "unexpected data after " + std::to_string(m) + " edges");
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace

Graph read_edge_list(std::istream& in) { return parse_edge_list(read_lines(in)); }

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph(std::istream& in) {
    const auto lines = read_lines(in);
    const Line* first = nullptr;
    for (const Line& l : lines) {
        if (!is_blank(strip_comment(l.text))) {
            first = &l;
            break;
        }
    }
    if (first == nullptr) throw ParseError(1, 0, "no graph found in input");

    const std::string_view content = strip_comment(first->text);
    const bool numeric = std::all_of(content.begin(), content.end(), [](unsigned char c) {
        return std::isdigit(c) != 0 || std::isspace(c) != 0 || c == '-';
    });
    if (numeric) return parse_edge_list(lines);

    const auto toks = tokenize(content);
    if (toks.size() != 1) {
        throw ParseError(first->number, toks[1].column, "graph6 line must be a single token");
    }
    for (const Line& l : lines) {
        if (l.number > first->number && !is_blank(strip_comment(l.text))) {
            throw ParseError(l.number, 1, "only one graph6 graph per input is supported");
        }
    }
    try {
        return graph6_decode(toks[0].text);
    } catch (const ParseError& e) {
        throw ParseError(first->number, toks[0].column - 1 + e.column(),
                         std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

}  // namespace dbldom
