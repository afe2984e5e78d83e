#include "distmagic/rearrange.hpp"

#include "distmagic/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace distmagic {

BalancedProductLabeling::BalancedProductLabeling(ProductGraph product, Labeling labeling)
    : product_(std::move(product)), labeling_(std::move(labeling)) {
    if (product_.kind == ProductKind::cartesian) {
        throw InputError("balanced product labelings are defined for direct and lexicographic products only");
    }
    if (!verify_balanced(product_.base, labeling_).is_balanced) {
        throw InputError("labeling is not balanced distance magic on the product");
    }
}

Vertex BalancedProductLabeling::twin(Vertex v) const {
    const auto n = static_cast<Label>(labeling_.size());
    return labeling_.vertex_of(n + 1 - labeling_.at(v));
}

BalancedProductLabeling BalancedProductLabeling::with_swapped(Vertex u, Vertex v) const {
    return BalancedProductLabeling(Unchecked{}, product_, labeling_.swapped(u, v));
}

namespace {

std::string coord_text(Vertex g, Vertex h) {
    return "(" + std::to_string(g) + "," + std::to_string(h) + ")";
}

void require_direct(const BalancedProductLabeling& bl, const char* op) {
    if (bl.product().kind != ProductKind::direct) {
        throw InputError(std::string(op) + ": requires a direct product");
    }
}

void require_g(const ProductGraph& p, Vertex g) {
    if (g < 0 || static_cast<std::size_t>(g) >= p.gsize()) {
        throw InputError("G coordinate " + std::to_string(g) + " out of range");
    }
}

void require_h(const ProductGraph& p, Vertex h) {
    if (h < 0 || static_cast<std::size_t>(h) >= p.hsize()) {
        throw InputError("H coordinate " + std::to_string(h) + " out of range");
    }
}

}  // namespace

BalancedProductLabeling swap_lemma1(const BalancedProductLabeling& bl, Vertex v1, Vertex v2) {
    require_direct(bl, "swap_lemma1");
    const ProductGraph& p = bl.product();
    const auto [g, h] = p.coords(v1);
    const auto [gp, hp] = p.coords(v2);
    if (!bl.are_twins(v1, v2)) {
        throw InputError("swap_lemma1: " + coord_text(g, h) + " and " + coord_text(gp, hp) + " are not twins");
    }
    if (g == gp) throw InputError("swap_lemma1: twins share the G coordinate (g == g')");
    if (h == hp) throw InputError("swap_lemma1: twins share the H coordinate (h == h')");
    return bl.with_swapped(p.vertex(gp, hp), p.vertex(gp, h));
}

BalancedProductLabeling swap_lemma2(const BalancedProductLabeling& bl, Vertex g, Vertex g_prime, Vertex h,
                                    Vertex h1, Vertex h2) {
    require_direct(bl, "swap_lemma2");
    const ProductGraph& p = bl.product();
    require_g(p, g);
    require_g(p, g_prime);
    require_h(p, h);
    require_h(p, h1);
    require_h(p, h2);
    if (h1 == h2) throw InputError("swap_lemma2: h1 == h2");
    if (h == h1 || h == h2) throw InputError("swap_lemma2: h must differ from h1 and h2");
    if (!bl.are_twins(p.vertex(g, h), p.vertex(g_prime, h))) {
        throw InputError("swap_lemma2: " + coord_text(g, h) + " and " + coord_text(g_prime, h) + " are not twins");
    }
    if (!bl.are_twins(p.vertex(g, h1), p.vertex(g, h2))) {
        throw InputError("swap_lemma2: " + coord_text(g, h1) + " and " + coord_text(g, h2) + " are not twins");
    }
    return bl.with_swapped(p.vertex(g, h2), p.vertex(g_prime, h1));
}

BalancedProductLabeling swap_lemma3(const BalancedProductLabeling& bl, Vertex g, Vertex g_prime, Vertex g_second,
                                    Vertex h, Vertex h_prime) {
    require_direct(bl, "swap_lemma3");
    const ProductGraph& p = bl.product();
    require_g(p, g);
    require_g(p, g_prime);
    require_g(p, g_second);
    require_h(p, h);
    require_h(p, h_prime);
    if (g_second == g_prime) throw InputError("swap_lemma3: g'' == g'");
    if (!bl.are_twins(p.vertex(g, h), p.vertex(g_prime, h))) {
        throw InputError("swap_lemma3: " + coord_text(g, h) + " and " + coord_text(g_prime, h) + " are not twins");
    }
    if (!bl.are_twins(p.vertex(g, h_prime), p.vertex(g_second, h_prime))) {
        throw InputError("swap_lemma3: " + coord_text(g, h_prime) + " and " + coord_text(g_second, h_prime) +
                         " are not twins");
    }
    return bl.with_swapped(p.vertex(g_prime, h_prime), p.vertex(g_second, h_prime));
}

namespace {

bool h_layer_closed(const BalancedProductLabeling& bl, Vertex g) {
    const ProductGraph& p = bl.product();
    for (std::size_t h = 0; h < p.hsize(); ++h) {
        if (p.coords(bl.twin(g, static_cast<Vertex>(h))).first != g) return false;
    }
    return true;
}

bool layers_coupled(const BalancedProductLabeling& bl, Vertex g, Vertex g_prime) {
    const ProductGraph& p = bl.product();
    for (std::size_t h = 0; h < p.hsize(); ++h) {
        const auto hv = static_cast<Vertex>(h);
        if (bl.twin(g, hv) != p.vertex(g_prime, hv)) return false;
    }
    return true;
}

}  // namespace

CoupleResult couple_layers(const BalancedProductLabeling& bl, const SwapObserver& observer) {
    require_direct(bl, "couple_layers");
    const ProductGraph& p = bl.product();
    if (p.base.size() == 0) throw InputError("couple_layers: product has no edges");

    CoupleResult result{bl, {}, 0, 0};
    BalancedProductLabeling& state = result.labeling;

    auto apply = [&](int lemma, int step, Vertex a, Vertex b, BalancedProductLabeling next) {
        if (observer) observer(SwapRecord{lemma, step, a, b}, state, next);
        state = std::move(next);
        ++result.swaps;
    };

    // Step 1.
    std::set<Vertex> active;
    for (std::size_t g = 0; g < p.gsize(); ++g) active.insert(static_cast<Vertex>(g));

    while (true) {
        // Step 2.
        if (active.size() == 1) {
            result.outcome = {CoupleOutcome::Tag::closed_h_layer, *active.begin(), {}};
            break;
        }
        if (active.empty()) {
            result.outcome.tag = CoupleOutcome::Tag::coupled_pairs;
            break;
        }

        // Step 3: smallest g still active.
        const Vertex g = *active.begin();
        if (h_layer_closed(state, g)) {
            result.outcome = {CoupleOutcome::Tag::closed_h_layer, g, {}};
            break;
        }
        Vertex h = 0;
        while (p.coords(state.twin(g, h)).first == g) ++h;
        const auto [g_prime, h_prime] = p.coords(state.twin(g, h));
        if (h_prime != h) {
            apply(1, 3, p.vertex(g_prime, h_prime), p.vertex(g_prime, h),
                  swap_lemma1(state, p.vertex(g, h), p.vertex(g_prime, h_prime)));
        }

        // Steps 4-6, one vertex of ^gH at a time in ascending h. Each vertex
        // ends with twin (g',h1), and later swaps never touch a finished pair.
        for (std::size_t hi = 0; hi < p.hsize(); ++hi) {
            const auto h1 = static_cast<Vertex>(hi);
            auto [tg, th] = p.coords(state.twin(g, h1));
            if (tg == g_prime && th == h1) continue;
            if (tg != g && tg != g_prime) {
                if (th != h1) {
                    // Step 4.
                    apply(1, 4, p.vertex(tg, th), p.vertex(tg, h1),
                          swap_lemma1(state, p.vertex(g, h1), p.vertex(tg, th)));
                    th = h1;
                }
                // Step 5.
                apply(3, 5, p.vertex(g_prime, h1), p.vertex(tg, h1), swap_lemma3(state, g, g_prime, tg, h, h1));
            } else if (tg == g) {
                // Step 6.
                apply(2, 6, p.vertex(g, th), p.vertex(g_prime, h1), swap_lemma2(state, g, g_prime, h, h1, th));
            } else {
                // Twin (g',h2) with h2 != h1: align it within ^g'H.
                apply(1, 6, p.vertex(g_prime, th), p.vertex(g_prime, h1),
                      swap_lemma1(state, p.vertex(g, h1), p.vertex(g_prime, th)));
            }
        }
        if (!layers_coupled(state, g, g_prime)) {
            throw std::logic_error("couple_layers: layers " + std::to_string(g) + " and " +
                                   std::to_string(g_prime) + " failed to couple");
        }

        // Step 7.
        active.erase(g);
        active.erase(g_prime);
        result.outcome.pairs.emplace_back(std::min(g, g_prime), std::max(g, g_prime));
        ++result.removals;
    }
    if (result.outcome.tag == CoupleOutcome::Tag::closed_h_layer) result.outcome.pairs.clear();
    return result;
}

namespace {

// Labels the twin pairs listed in order as i and size+1-i.
Labeling pair_labeling(std::size_t size, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Label> values(size, 0);
    Label next = 1;
    for (const auto& [a, b] : pairs) {
        values[a] = next;
        values[b] = static_cast<Label>(size) + 1 - next;
        ++next;
    }
    return Labeling(std::move(values));
}

FactorLabeling extract_from_closed_layer(const BalancedProductLabeling& bl, Vertex g) {
    const ProductGraph& p = bl.product();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<char> done(p.hsize(), 0);
    for (std::size_t h = 0; h < p.hsize(); ++h) {
        if (done[h]) continue;
        const Vertex partner = p.coords(bl.twin(g, static_cast<Vertex>(h))).second;
        done[h] = 1;
        done[partner] = 1;
        pairs.emplace_back(static_cast<Vertex>(h), partner);
    }
    return {Factor::second, {p.second, pair_labeling(p.hsize(), pairs)}};
}

}  // namespace

FactorLabeling extract_factor_labeling(const BalancedProductLabeling& bl, const CoupleOutcome& outcome) {
    const ProductGraph& p = bl.product();
    if (outcome.tag == CoupleOutcome::Tag::closed_h_layer) {
        if (outcome.layer < 0 || static_cast<std::size_t>(outcome.layer) >= p.gsize()) {
            throw InputError("extract_factor_labeling: outcome layer out of range");
        }
        if (!h_layer_closed(bl, outcome.layer)) {
            throw InputError("extract_factor_labeling: H-layer " + std::to_string(outcome.layer) +
                             " is not closed under twins for this labeling (stale outcome?)");
        }
        return extract_from_closed_layer(bl, outcome.layer);
    }

    if (p.kind != ProductKind::direct) {
        throw InputError("extract_factor_labeling: coupled layers only arise in direct products");
    }
    std::vector<char> covered(p.gsize(), 0);
    for (const auto& [a, b] : outcome.pairs) {
        require_g(p, a);
        require_g(p, b);
        if (a == b || covered[a] || covered[b]) {
            throw InputError("extract_factor_labeling: coupled pairs do not partition V(G)");
        }
        covered[a] = covered[b] = 1;
        if (!layers_coupled(bl, a, b)) {
            throw InputError("extract_factor_labeling: layers " + std::to_string(a) + " and " + std::to_string(b) +
                             " are not coupled for this labeling (stale outcome?)");
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
        throw InputError("extract_factor_labeling: coupled pairs do not cover V(G)");
    }
    // Every G-layer is twin-closed; read G^0.
    return {Factor::first, {p.first, pair_labeling(p.gsize(), outcome.pairs)}};
}

FactorLabeling extract_lexicographic_factor(const BalancedProductLabeling& bl) {
    const ProductGraph& p = bl.product();
    if (p.kind != ProductKind::lexicographic) {
        throw InputError("extract_lexicographic_factor: requires a lexicographic product");
    }
    if (p.second.size() == 0) {
        if (p.hsize() % 2 != 0) {
            throw InputError("extract_lexicographic_factor: H is edgeless of odd order, which is never balanced");
        }
        return {Factor::second, {p.second, Labeling::identity(p.hsize())}};
    }
    for (std::size_t g = 0; g < p.gsize(); ++g) {
        if (h_layer_closed(bl, static_cast<Vertex>(g))) return extract_from_closed_layer(bl, static_cast<Vertex>(g));
    }
    throw InputError("extract_lexicographic_factor: no H-layer is closed under twins");
}

namespace {

struct NeighborListHash {
    std::size_t operator()(std::span<const Vertex> list) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Vertex v : list) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

BalancedProductLabeling scramble_balanced(const BalancedProductLabeling& bl, std::uint64_t seed) {
    const Graph& g = bl.product().base;
    const std::size_t n = g.order();

    // Equal-neighborhood classes, keyed by hash with full comparison in the
    // bucket.
    std::unordered_map<std::size_t, std::vector<std::vector<Vertex>>> buckets;
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> class_of(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto hood = g.neighbors(static_cast<Vertex>(v));
        auto& bucket = buckets[NeighborListHash{}(hood)];
        bool placed = false;
        for (auto& cls : bucket) {
            auto rep = g.neighbors(cls.front());
            if (std::equal(rep.begin(), rep.end(), hood.begin(), hood.end())) {
                cls.push_back(static_cast<Vertex>(v));
                placed = true;
                break;
            }
        }
        if (!placed) bucket.push_back({static_cast<Vertex>(v)});
    }
    for (auto& [hash, bucket] : buckets) {
        for (auto& cls : bucket) classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<Label> values = bl.labeling().values();
    Lcg64 rng(seed);
    for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        std::vector<Label> labels;
        for (Vertex v : cls) labels.push_back(values[v]);
        for (std::size_t i = labels.size() - 1; i > 0; --i) {
            const std::size_t j = rng.below(static_cast<std::uint32_t>(i + 1));
            std::swap(labels[i], labels[j]);
        }
        for (std::size_t i = 0; i < cls.size(); ++i) values[cls[i]] = labels[i];
    }
    return BalancedProductLabeling(bl.product(), Labeling(std::move(values)));
}

}  // namespace distmagic
