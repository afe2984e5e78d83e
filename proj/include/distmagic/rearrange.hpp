#pragma once

#include "distmagic/constructors.hpp"
#include "distmagic/magic.hpp"
#include "distmagic/products.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

namespace distmagic {

// A balanced distance magic labeling of a direct or lexicographic product,
// together with its twin pairing on vertex ids.
class BalancedProductLabeling {
public:
    // Throws InputError unless `labeling` is balanced on `product.base`.
    BalancedProductLabeling(ProductGraph product, Labeling labeling);
    explicit BalancedProductLabeling(LabeledProduct lp)
        : BalancedProductLabeling(std::move(lp.product), std::move(lp.labeling)) {}

    const ProductGraph& product() const noexcept { return product_; }
    const Labeling& labeling() const noexcept { return labeling_; }

    Vertex twin(Vertex v) const;
    Vertex twin(Vertex g, Vertex h) const { return twin(product_.vertex(g, h)); }
    bool are_twins(Vertex u, Vertex v) const { return twin(u) == v; }

    // Exchanges two labels without re-verifying. Callers guarantee that u and
    // v have identical neighborhoods, which keeps the labeling balanced.
    BalancedProductLabeling with_swapped(Vertex u, Vertex v) const;

private:
    struct Unchecked {};
    BalancedProductLabeling(Unchecked, ProductGraph product, Labeling labeling)
        : product_(std::move(product)), labeling_(std::move(labeling)) {}

    ProductGraph product_;
    Labeling labeling_;
};

// (g,h), (g',h') twins with g != g', h != h': swap labels of (g',h') and
// (g',h), making (g,h) and (g',h) twins.
BalancedProductLabeling swap_lemma1(const BalancedProductLabeling& bl, Vertex v1, Vertex v2);

// (g,h), (g',h) twins and (g,h1), (g,h2) twins: swap labels of (g,h2) and
// (g',h1), making (g,h1) and (g',h1) twins. Requires h, h1, h2 distinct.
BalancedProductLabeling swap_lemma2(const BalancedProductLabeling& bl, Vertex g, Vertex g_prime,
                                    Vertex h, Vertex h1, Vertex h2);

// (g,h), (g',h) twins and (g,h'), (g'',h') twins with g'' != g': swap labels
// of (g',h') and (g'',h'), making (g,h') and (g',h') twins.
BalancedProductLabeling swap_lemma3(const BalancedProductLabeling& bl, Vertex g, Vertex g_prime,
                                    Vertex g_second, Vertex h, Vertex h_prime);

struct CoupleOutcome {
    enum class Tag { closed_h_layer, coupled_pairs };
    Tag tag = Tag::closed_h_layer;
    Vertex layer = -1;                          // closed_h_layer
    std::vector<std::pair<Vertex, Vertex>> pairs;  // coupled_pairs, g < g'
};

struct SwapRecord {
    int lemma;  // 1, 2 or 3
    int step;   // step of the coupling procedure that issued it
    Vertex a;   // product vertices whose labels were exchanged
    Vertex b;
};

using SwapObserver =
    std::function<void(const SwapRecord&, const BalancedProductLabeling& before, const BalancedProductLabeling& after)>;

struct CoupleResult {
    BalancedProductLabeling labeling;
    CoupleOutcome outcome;
    std::size_t swaps = 0;
    std::size_t removals = 0;  // pairs removed from the active set
};

// Rearranges a balanced labeling of G x H until either some H-layer is
// closed under twins or all H-layers are coupled so that (g,h) and (g',h)
// are twins for each coupled pair {g, g'}.
CoupleResult couple_layers(const BalancedProductLabeling& bl, const SwapObserver& observer = {});

enum class Factor { first, second };

struct FactorLabeling {
    Factor factor;
    LabeledGraph labeled;
};

// Reads a balanced labeling of one factor off the twin structure described
// by `outcome`. Throws InputError when the outcome no longer matches `bl`.
FactorLabeling extract_factor_labeling(const BalancedProductLabeling& bl, const CoupleOutcome& outcome);

// Converse for lexicographic products: twins lie within an H-layer, so a
// balanced labeling of H can be read off the first twin-closed layer.
FactorLabeling extract_lexicographic_factor(const BalancedProductLabeling& bl);

// Deterministic scramble: within every class of vertices sharing one
// neighborhood, labels are permuted by a Fisher-Yates shuffle driven by
// Lcg64 seeded with `seed`. Classes are visited in order of their smallest
// vertex id.
BalancedProductLabeling scramble_balanced(const BalancedProductLabeling& bl, std::uint64_t seed);

// 64-bit linear congruential generator (Knuth's MMIX constants); draws use
// the high 32 bits of the state.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }
    // Uniform-ish draw in [0, bound) by modulo reduction.
    std::uint32_t below(std::uint32_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace distmagic
