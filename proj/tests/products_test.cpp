#include "distmagic/error.hpp"
#include "distmagic/products.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace distmagic;

namespace {

Graph cycle(long long n) { return generate({GraphFamily::cycle, {n}}); }
Graph empty(long long n) { return generate({GraphFamily::empty, {n}}); }
Graph k2() { return generate({GraphFamily::path, {2}}); }

constexpr ProductKind kAllKinds[] = {ProductKind::cartesian, ProductKind::lexicographic, ProductKind::direct};

}  // namespace

TEST(Product, DirectC3C4IsConnectedFourRegular) {
    const ProductGraph p = product(ProductKind::direct, cycle(3), cycle(4));
    EXPECT_EQ(p.base.order(), 12u);
    EXPECT_EQ(regularity(p.base), 4u);
    EXPECT_TRUE(is_connected(p.base));
}

TEST(Product, DirectK2K2) {
    const ProductGraph p = product(ProductKind::direct, k2(), k2());
    EXPECT_EQ(p.base.order(), 4u);
    // (0,0)-(1,1) is 0-3 and (0,1)-(1,0) is 1-2.
    EXPECT_EQ(p.base.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
    EXPECT_FALSE(is_connected(p.base));
}

TEST(Product, LexicographicC4Empty3) {
    const ProductGraph p = product(ProductKind::lexicographic, cycle(4), empty(3));
    EXPECT_EQ(p.base.order(), 12u);
    EXPECT_EQ(regularity(p.base), 6u);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 3; ++b) {
            const auto got = p.base.neighbors(p.vertex(a, b));
            EXPECT_EQ(std::vector<Vertex>(got.begin(), got.end()),
                      oracle::product_neighbors(ProductKind::lexicographic, cycle(4), empty(3), a, b));
        }
    }
}

TEST(Product, EmptyFactorGivesEmptyProduct) {
    for (ProductKind kind : kAllKinds) {
        EXPECT_EQ(product(kind, empty(0), cycle(5)).base.order(), 0u);
        EXPECT_EQ(product(kind, cycle(5), empty(0)).base.order(), 0u);
    }
}

TEST(Layer, Examples) {
    const ProductGraph p = product(ProductKind::direct, cycle(3), cycle(4));
    EXPECT_EQ(layer(p, LayerAxis::h_layer, 0), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(layer(p, LayerAxis::g_layer, 2), (std::vector<Vertex>{2, 6, 10}));
    for (Vertex g = 0; g < 3; ++g) EXPECT_EQ(layer(p, LayerAxis::h_layer, g).size(), p.hsize());
    EXPECT_THROW(layer(p, LayerAxis::h_layer, 3), InputError);
    EXPECT_THROW(layer(p, LayerAxis::g_layer, 4), InputError);
}

TEST(NeighborhoodProductCheck, Examples) {
    EXPECT_TRUE(neighborhood_product_check(product(ProductKind::direct, cycle(3), cycle(3))));
    EXPECT_TRUE(neighborhood_product_check(product(ProductKind::direct, cycle(4), cycle(4))));
    EXPECT_THROW(neighborhood_product_check(product(ProductKind::cartesian, cycle(3), cycle(3))), InputError);
}

// Adjacency against the definitions, plus the degree formulas, on random
// small factors.
TEST(ProductProperties, AdjacencyAndDegreeFormulas) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        const Graph h = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        for (ProductKind kind : kAllKinds) {
            const ProductGraph p = product(kind, g, h);
            ASSERT_EQ(p.base.order(), g.order() * h.order());
            for (int a = 0; a < static_cast<int>(g.order()); ++a) {
                for (int b = 0; b < static_cast<int>(h.order()); ++b) {
                    const Vertex v = p.vertex(a, b);
                    ASSERT_EQ(p.coords(v), std::make_pair(a, b));
                    const auto got = p.base.neighbors(v);
                    ASSERT_EQ(std::vector<Vertex>(got.begin(), got.end()), oracle::product_neighbors(kind, g, h, a, b));
                    const std::size_t dg = g.degree(a);
                    const std::size_t dh = h.degree(b);
                    std::size_t expected = 0;
                    switch (kind) {
                        case ProductKind::cartesian: expected = dg + dh; break;
                        case ProductKind::lexicographic: expected = dg * h.order() + dh; break;
                        case ProductKind::direct: expected = dg * dh; break;
                    }
                    ASSERT_EQ(p.base.degree(v), expected);
                }
            }
            if (kind == ProductKind::direct) EXPECT_TRUE(neighborhood_product_check(p));
        }
    }
}

// Connectivity of the direct product for factors with at least two
// vertices: connected iff both factors are connected and one of them is
// non-bipartite.
TEST(ProductProperties, DirectConnectivityCriterion) {
    std::mt19937_64 rng(99);
    int connected_cases = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(2 + rng() % 7, 0.45, rng);
        const Graph h = oracle::random_graph(2 + rng() % 7, 0.45, rng);
        const bool predicted = is_connected(g) && is_connected(h) && (!is_bipartite(g) || !is_bipartite(h));
        const bool actual = is_connected(product(ProductKind::direct, g, h).base);
        ASSERT_EQ(actual, predicted) << to_edge_list(g) << "x\n" << to_edge_list(h);
        connected_cases += actual;
    }
    EXPECT_GT(connected_cases, 20);
}

// Cartesian and direct products commute under (g,h) -> (h,g).
TEST(ProductProperties, CommutativeUpToPairSwap) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        const Graph h = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct}) {
            const ProductGraph gh = product(kind, g, h);
            const ProductGraph hg = product(kind, h, g);
            std::vector<Edge> mapped;
            for (const auto& [u, v] : gh.base.edges()) {
                const auto [a, b] = gh.coords(u);
                const auto [c, d] = gh.coords(v);
                mapped.emplace_back(hg.vertex(b, a), hg.vertex(d, c));
            }
            EXPECT_EQ(Graph(hg.base.order(), mapped), hg.base);
        }
    }
}

TEST(ProductKindText, ParseAndPrint) {
    for (ProductKind kind : kAllKinds) EXPECT_EQ(parse_product_kind(to_string(kind)), kind);
    EXPECT_THROW(parse_product_kind("strong"), InputError);
}
