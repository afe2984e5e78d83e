#pragma once

#include "distmagic/graph.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace distmagic {

enum class ProductKind { cartesian, lexicographic, direct };

std::string_view to_string(ProductKind kind);
ProductKind parse_product_kind(std::string_view text);

// Product of two graphs together with its factors. The pair (g, h) is
// encoded as vertex id g * hsize + h, so every H-layer is a contiguous id
// range.
struct ProductGraph {
    Graph base;
    Graph first;   // G
    Graph second;  // H
    ProductKind kind = ProductKind::direct;

    std::size_t gsize() const noexcept { return first.order(); }
    std::size_t hsize() const noexcept { return second.order(); }

    Vertex vertex(Vertex g, Vertex h) const;
    std::pair<Vertex, Vertex> coords(Vertex v) const;
};

ProductGraph product(ProductKind kind, const Graph& g, const Graph& h);

enum class LayerAxis {
    h_layer,  // fixes the G coordinate: ^gH
    g_layer,  // fixes the H coordinate: G^h
};

std::vector<Vertex> layer(const ProductGraph& p, LayerAxis axis, Vertex fixed);

// Self-test for direct products: N(a,b) == N(a) x N(b) for every vertex.
bool neighborhood_product_check(const ProductGraph& p);

}  // namespace distmagic
