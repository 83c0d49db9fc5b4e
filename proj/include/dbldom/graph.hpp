#pragma once

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbldom/error.hpp"
#include "dbldom/vertex_set.hpp"

namespace dbldom {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with n in [1, 62].
/// Adjacency is one VertexSet per vertex.
class Graph {
public:
    /// Throws Error(InvalidGraph) on n outside [1, 62], out-of-range indices
    /// or self-loops. Repeated pairs collapse to one edge.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds from an adjacency array, checking symmetry and irreflexivity.
    static Graph from_adjacency(std::vector<VertexSet> adjacency);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return neighbors(v) | VertexSet::single(v); }
    int degree(int v) const { return neighbors(v).size(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    int edge_count() const;
    int min_degree() const;
    bool has_isolated_vertex() const { return min_degree() == 0; }
    bool is_connected() const;

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    /// Union of N(v) over v in s.
    VertexSet neighborhood(VertexSet s) const;
    /// True iff no two members of s are adjacent.
    bool is_independent(VertexSet s) const;
    /// True iff every pair of members of s is adjacent.
    bool is_clique(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

    std::vector<VertexSet> adj_;
};

struct GraphProfile {
    int min_degree = 0;
    bool has_isolated = false;
    VertexSet leaves;
    VertexSet supports;
    bool claw_free = true;
    bool is_tree = false;
};

GraphProfile profile(const Graph& g);

/// Direct triple scan for an induced K_{1,3}.
bool is_claw_free(const Graph& g);

/// Vertices outside `a` whose only neighbor in `a` is `u`.
/// Throws Error(PreconditionViolated) when u is not in a.
VertexSet epn(int u, VertexSet a, const Graph& g);

/// True iff some component is a single edge.
bool has_k2_component(const Graph& g);

// graph6 interchange. Only orders 1..62 (single header byte) are accepted.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

// Edge-list text: "n m" header then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Reads an edge list or a single graph6 line, deciding by the first
/// non-comment line: two integer tokens select the edge-list reader.
Graph read_graph(std::istream& in);

}  // namespace dbldom
