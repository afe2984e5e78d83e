#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distmagic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple finite undirected graph on vertices 0..n-1.
//
// Edges are stored canonically as (min, max) pairs in lexicographic order and
// adjacency lists are kept sorted, so every traversal is deterministic. A
// Graph is immutable once built.
class Graph {
public:
    Graph() = default;

    // Throws InputError on loops, duplicate edges or out-of-range endpoints.
    Graph(std::size_t order, std::vector<Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Ascending neighbor ids. Throws InputError when v is out of range.
    std::span<const Vertex> neighbors(Vertex v) const;

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool adjacent(Vertex u, Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

enum class GraphFamily {
    cycle,
    path,
    empty,
    complete_bipartite,
    complete_minus_perfect_matching,
};

// A named generator with its integer parameters. complete_bipartite takes
// two part sizes; every other family takes the vertex count.
struct GraphKind {
    GraphFamily family;
    std::vector<long long> params;
};

Graph generate(const GraphKind& kind);

// Parses "cycle:5", "path:3", "empty:4", "complete-bipartite:2:3",
// "complete-minus-matching:6". Throws InputError on anything else.
GraphKind parse_graph_kind(std::string_view text);

std::string describe(const GraphKind& kind);

std::optional<std::size_t> regularity(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

// Edge-list text format: "n m" followed by m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace distmagic
