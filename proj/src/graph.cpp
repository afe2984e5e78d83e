#include "distmagic/graph.hpp"

#include "distmagic/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace distmagic {

Graph::Graph(std::size_t order, std::vector<Edge> edges) : adjacency_(order) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= order ||
            static_cast<std::size_t>(v) >= order) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(order) + ")");
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InputError("duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
    }
    for (const auto& [u, v] : edges) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= order()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
    }
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

namespace {

long long require_param(const GraphKind& kind, std::size_t index, const char* name) {
    if (kind.params.size() <= index) {
        throw InputError(std::string("missing parameter ") + name + " for " + describe(kind));
    }
    return kind.params[index];
}

void require_arity(const GraphKind& kind, std::size_t arity) {
    if (kind.params.size() != arity) {
        throw InputError(describe(kind) + ": expected " + std::to_string(arity) +
                         " parameter(s), got " + std::to_string(kind.params.size()));
    }
}

}  // namespace

Graph generate(const GraphKind& kind) {
    std::vector<Edge> edges;
    switch (kind.family) {
        case GraphFamily::cycle: {
            require_arity(kind, 1);
            const long long n = require_param(kind, 0, "n");
            if (n < 3) throw InputError("cycle: parameter n must be >= 3, got " + std::to_string(n));
            for (long long i = 0; i < n; ++i) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
            }
            return Graph(static_cast<std::size_t>(n), std::move(edges));
        }
        case GraphFamily::path: {
            require_arity(kind, 1);
            const long long n = require_param(kind, 0, "n");
            if (n < 1) throw InputError("path: parameter n must be >= 1, got " + std::to_string(n));
            for (long long i = 0; i + 1 < n; ++i) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
            }
            return Graph(static_cast<std::size_t>(n), std::move(edges));
        }
        case GraphFamily::empty: {
            require_arity(kind, 1);
            const long long n = require_param(kind, 0, "n");
            if (n < 0) throw InputError("empty: parameter n must be >= 0, got " + std::to_string(n));
            return Graph(static_cast<std::size_t>(n), {});
        }
        case GraphFamily::complete_bipartite: {
            require_arity(kind, 2);
            const long long a = require_param(kind, 0, "a");
            const long long b = require_param(kind, 1, "b");
            if (a < 1) throw InputError("complete_bipartite: parameter a must be >= 1, got " + std::to_string(a));
            if (b < 1) throw InputError("complete_bipartite: parameter b must be >= 1, got " + std::to_string(b));
            for (long long u = 0; u < a; ++u) {
                for (long long v = a; v < a + b; ++v) {
                    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                }
            }
            return Graph(static_cast<std::size_t>(a + b), std::move(edges));
        }
        case GraphFamily::complete_minus_perfect_matching: {
            require_arity(kind, 1);
            const long long n = require_param(kind, 0, "n");
            if (n < 2 || n % 2 != 0) {
                throw InputError("complete_minus_perfect_matching: parameter n must be even and >= 2, got " +
                                 std::to_string(n));
            }
            for (long long u = 0; u < n; ++u) {
                for (long long v = u + 1; v < n; ++v) {
                    if (u % 2 == 0 && v == u + 1) continue;  // removed matching edge
                    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                }
            }
            return Graph(static_cast<std::size_t>(n), std::move(edges));
        }
    }
    throw InputError("unknown graph family");
}

namespace {

long long parse_integer(std::string_view token, std::size_t line, const char* what) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        std::string msg = std::string("invalid ") + what + " '" + std::string(token) + "'";
        if (line == 0) throw InputError(msg);
        throw InputError(line, msg);
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

GraphKind parse_graph_kind(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    const std::string_view name = parts.front();
    GraphKind kind{};
    if (name == "cycle") {
        kind.family = GraphFamily::cycle;
    } else if (name == "path") {
        kind.family = GraphFamily::path;
    } else if (name == "empty") {
        kind.family = GraphFamily::empty;
    } else if (name == "complete-bipartite") {
        kind.family = GraphFamily::complete_bipartite;
    } else if (name == "complete-minus-matching") {
        kind.family = GraphFamily::complete_minus_perfect_matching;
    } else {
        throw InputError("unknown graph family '" + std::string(name) + "'");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        kind.params.push_back(parse_integer(parts[i], 0, "graph parameter"));
    }
    return kind;
}

std::string describe(const GraphKind& kind) {
    std::string out;
    switch (kind.family) {
        case GraphFamily::cycle: out = "cycle"; break;
        case GraphFamily::path: out = "path"; break;
        case GraphFamily::empty: out = "empty"; break;
        case GraphFamily::complete_bipartite: out = "complete-bipartite"; break;
        case GraphFamily::complete_minus_perfect_matching: out = "complete-minus-matching"; break;
    }
    for (long long p : kind.params) out += ":" + std::to_string(p);
    return out;
}

std::optional<std::size_t> regularity(const Graph& g) {
    if (g.order() == 0) return 0;
    const std::size_t r = g.degree(0);
    for (std::size_t v = 1; v < g.order(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) != r) return std::nullopt;
    }
    return r;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> frontier;
        frontier.push(static_cast<Vertex>(s));
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    frontier.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!split_ws(line).empty()) return true;
        }
        return false;
    };

    if (!next_content_line()) throw InputError(1, "missing header line \"n m\"");
    auto header = split_ws(line);
    if (header.size() != 2) throw InputError(line_no, "header must be \"n m\"");
    const long long n = parse_integer(header[0], line_no, "vertex count");
    const long long m = parse_integer(header[1], line_no, "edge count");
    if (n < 0) throw InputError(line_no, "vertex count must be nonnegative");
    if (m < 0) throw InputError(line_no, "edge count must be nonnegative");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::pair<Edge, std::size_t>> seen;
    for (long long e = 0; e < m; ++e) {
        if (!next_content_line()) {
            throw InputError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(e));
        }
        auto tokens = split_ws(line);
        if (tokens.size() != 2) throw InputError(line_no, "edge line must be \"u v\"");
        const long long u = parse_integer(tokens[0], line_no, "vertex id");
        const long long v = parse_integer(tokens[1], line_no, "vertex id");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError(line_no, "vertex id out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) throw InputError(line_no, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw InputError(line_no, "edge endpoints must satisfy u < v");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        seen.push_back({edges.back(), line_no});
    }
    if (next_content_line()) throw InputError(line_no, "unexpected content after last edge");

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw InputError(std::max(seen[i].second, seen[i - 1].second),
                             "duplicate edge " + std::to_string(seen[i].first.first) + " " +
                                 std::to_string(seen[i].first.second));
        }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace distmagic
