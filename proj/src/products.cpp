#include "distmagic/products.hpp"

#include "distmagic/error.hpp"

#include <algorithm>
#include <string>

namespace distmagic {

std::string_view to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::direct: return "direct";
    }
    return "unknown";
}

ProductKind parse_product_kind(std::string_view text) {
    if (text == "cartesian") return ProductKind::cartesian;
    if (text == "lexicographic" || text == "lex") return ProductKind::lexicographic;
    if (text == "direct") return ProductKind::direct;
    throw InputError("unknown product kind '" + std::string(text) + "'");
}

Vertex ProductGraph::vertex(Vertex g, Vertex h) const {
    if (g < 0 || static_cast<std::size_t>(g) >= gsize() || h < 0 ||
        static_cast<std::size_t>(h) >= hsize()) {
        throw InputError("product coordinate (" + std::to_string(g) + "," + std::to_string(h) +
                         ") out of range");
    }
    return static_cast<Vertex>(static_cast<std::size_t>(g) * hsize() + static_cast<std::size_t>(h));
}

std::pair<Vertex, Vertex> ProductGraph::coords(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= base.order()) {
        throw InputError("product vertex " + std::to_string(v) + " out of range");
    }
    const auto hs = static_cast<Vertex>(hsize());
    return {v / hs, v % hs};
}

ProductGraph product(ProductKind kind, const Graph& g, const Graph& h) {
    const std::size_t gs = g.order();
    const std::size_t hs = h.order();
    auto id = [hs](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * hs + b); };

    // Each edge is emitted once with its smaller endpoint first; the Graph
    // constructor canonicalizes and sorts.
    std::vector<Edge> edges;
    switch (kind) {
        case ProductKind::cartesian:
            for (std::size_t a = 0; a < gs; ++a) {
                for (const auto& [x, y] : h.edges()) edges.emplace_back(id(a, x), id(a, y));
            }
            for (const auto& [x, y] : g.edges()) {
                for (std::size_t b = 0; b < hs; ++b) edges.emplace_back(id(x, b), id(y, b));
            }
            break;
        case ProductKind::lexicographic:
            for (std::size_t a = 0; a < gs; ++a) {
                for (const auto& [x, y] : h.edges()) edges.emplace_back(id(a, x), id(a, y));
            }
            for (const auto& [x, y] : g.edges()) {
                for (std::size_t b = 0; b < hs; ++b) {
                    for (std::size_t c = 0; c < hs; ++c) edges.emplace_back(id(x, b), id(y, c));
                }
            }
            break;
        case ProductKind::direct:
            for (const auto& [x, y] : g.edges()) {
                for (const auto& [u, v] : h.edges()) {
                    edges.emplace_back(id(x, u), id(y, v));
                    edges.emplace_back(id(x, v), id(y, u));
                }
            }
            break;
    }
    return ProductGraph{Graph(gs * hs, std::move(edges)), g, h, kind};
}

std::vector<Vertex> layer(const ProductGraph& p, LayerAxis axis, Vertex fixed) {
    std::vector<Vertex> ids;
    if (axis == LayerAxis::h_layer) {
        if (fixed < 0 || static_cast<std::size_t>(fixed) >= p.gsize()) {
            throw InputError("H-layer index " + std::to_string(fixed) + " out of range [0," +
                             std::to_string(p.gsize()) + ")");
        }
        for (std::size_t h = 0; h < p.hsize(); ++h) ids.push_back(p.vertex(fixed, static_cast<Vertex>(h)));
    } else {
        if (fixed < 0 || static_cast<std::size_t>(fixed) >= p.hsize()) {
            throw InputError("G-layer index " + std::to_string(fixed) + " out of range [0," +
                             std::to_string(p.hsize()) + ")");
        }
        for (std::size_t g = 0; g < p.gsize(); ++g) ids.push_back(p.vertex(static_cast<Vertex>(g), fixed));
    }
    return ids;
}

bool neighborhood_product_check(const ProductGraph& p) {
    if (p.kind != ProductKind::direct) {
        throw InputError("neighborhood_product_check requires a direct product, got " +
                         std::string(to_string(p.kind)));
    }
    for (std::size_t v = 0; v < p.base.order(); ++v) {
        const auto [a, b] = p.coords(static_cast<Vertex>(v));
        std::vector<Vertex> expected;
        for (Vertex x : p.first.neighbors(a)) {
            for (Vertex y : p.second.neighbors(b)) expected.push_back(p.vertex(x, y));
        }
        // Row-major encoding keeps `expected` sorted already.
        auto actual = p.base.neighbors(static_cast<Vertex>(v));
        if (!std::equal(actual.begin(), actual.end(), expected.begin(), expected.end())) return false;
    }
    return true;
}

}  // namespace distmagic
