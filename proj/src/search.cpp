#include "distmagic/search.hpp"

#include "distmagic/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace distmagic {

SearchBudget SearchBudget::nodes(std::uint64_t n) {
    if (n == 0) throw InputError("search budget must be positive");
    return SearchBudget{n};
}

std::string_view to_string(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::found: return "found";
        case SearchOutcome::Status::exhausted_none: return "exhausted_none";
        case SearchOutcome::Status::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

std::vector<Vertex> search_order(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::pair<Weight, Weight> magic_constant_bounds(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return {0, 0};
    std::vector<Weight> degrees(n);
    for (std::size_t v = 0; v < n; ++v) degrees[v] = static_cast<Weight>(g.degree(static_cast<Vertex>(v)));
    std::sort(degrees.begin(), degrees.end());
    Weight low = 0;
    Weight high = 0;
    for (std::size_t i = 0; i < n; ++i) {
        low += degrees[i] * static_cast<Weight>(n - i);  // largest degree meets label 1
        high += degrees[i] * static_cast<Weight>(i + 1);
    }
    const auto nn = static_cast<Weight>(n);
    return {(low + nn - 1) / nn, high / nn};
}

namespace {

class Solver {
public:
    Solver(const Graph& g, SearchBudget budget, SearchStats& stats)
        : g_(g), n_(g.order()), budget_(budget), stats_(stats), order_(search_order(g)) {}

    enum class Result { found, none, budget };

    Result run(Weight k) {
        k_ = k;
        labels_.assign(n_, 0);
        used_.assign(n_ + 1, 0);
        sum_.assign(n_, 0);
        open_.assign(n_, 0);
        for (std::size_t v = 0; v < n_; ++v) {
            open_[v] = static_cast<int>(g_.degree(static_cast<Vertex>(v)));
            // Isolated vertices have weight 0 from the start.
            if (open_[v] == 0 && k_ != 0) {
                ++stats_.prune_weight_mismatch;
                return Result::none;
            }
        }
        return descend(0);
    }

    Labeling witness() const { return Labeling(labels_); }

private:
    Result descend(std::size_t depth) {
        if (depth == n_) return Result::found;
        const Vertex v = order_[depth];
        for (Label l = 1; l <= static_cast<Label>(n_); ++l) {
            if (used_[l]) continue;
            if (budget_.max_nodes && stats_.nodes >= *budget_.max_nodes) return Result::budget;
            ++stats_.nodes;
            assign(v, l);
            if (feasible(v)) {
                const Result r = descend(depth + 1);
                if (r != Result::none) return r;
            }
            unassign(v, l);
        }
        return Result::none;
    }

    void assign(Vertex v, Label l) {
        labels_[v] = l;
        used_[l] = 1;
        for (Vertex w : g_.neighbors(v)) {
            sum_[w] += l;
            --open_[w];
        }
    }

    void unassign(Vertex v, Label l) {
        labels_[v] = 0;
        used_[l] = 0;
        for (Vertex w : g_.neighbors(v)) {
            sum_[w] -= l;
            ++open_[w];
        }
    }

    bool feasible(Vertex v) {
        for (Vertex w : g_.neighbors(v)) {
            if (open_[w] == 0 && sum_[w] != k_) {
                ++stats_.prune_weight_mismatch;
                return false;
            }
        }
        // Sums of the c smallest / largest unused labels.
        low_.assign(1, 0);
        for (std::size_t l = 1; l <= n_; ++l) {
            if (!used_[l]) low_.push_back(low_.back() + static_cast<Weight>(l));
        }
        const std::size_t free = low_.size() - 1;
        const Weight total = low_.back();
        for (std::size_t w = 0; w < n_; ++w) {
            const auto c = static_cast<std::size_t>(open_[w]);
            if (c == 0) continue;
            if (sum_[w] + low_[c] > k_) {
                ++stats_.prune_overshoot;
                return false;
            }
            if (sum_[w] + (total - low_[free - c]) < k_) {
                ++stats_.prune_undershoot;
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    std::size_t n_;
    SearchBudget budget_;
    SearchStats& stats_;
    std::vector<Vertex> order_;
    Weight k_ = 0;
    std::vector<Label> labels_;
    std::vector<char> used_;
    std::vector<Weight> sum_;
    std::vector<int> open_;
    std::vector<Weight> low_;
};

}  // namespace

SearchOutcome find_distance_magic(const Graph& g, SearchBudget budget) {
    SearchOutcome out;
    if (g.order() == 0) {
        out.status = SearchOutcome::Status::found;
        out.witness = Labeling{};
        out.k = 0;
        out.note = "empty vertex set";
        return out;
    }

    std::vector<Weight> candidates;
    if (const auto r = regularity(g)) {
        if (odd_regular_obstruction(g)) {
            out.note = "odd-regular obstruction";
            return out;
        }
        const auto k = theoretical_k(g);
        if (!k) {
            out.note = "non-integral magic constant";
            return out;
        }
        candidates.push_back(*k);
    } else {
        const auto [lo, hi] = magic_constant_bounds(g);
        for (Weight k = lo; k <= hi; ++k) candidates.push_back(k);
    }

    // The magic constant of a graph is unique, so the first candidate with a
    // witness also yields the lexicographically first witness overall.
    Solver solver(g, budget, out.stats);
    for (Weight k : candidates) {
        ++out.stats.k_candidates;
        switch (solver.run(k)) {
            case Solver::Result::found:
                out.status = SearchOutcome::Status::found;
                out.witness = solver.witness();
                out.k = k;
                return out;
            case Solver::Result::budget:
                out.status = SearchOutcome::Status::budget_exceeded;
                return out;
            case Solver::Result::none:
                break;
        }
    }
    out.status = SearchOutcome::Status::exhausted_none;
    return out;
}

std::vector<FamilyRow> check_family(const std::vector<FamilyMember>& family, SearchBudget budget) {
    std::vector<FamilyRow> rows;
    rows.reserve(family.size());
    for (const auto& member : family) rows.push_back({member.name, find_distance_magic(member.graph, budget)});
    return rows;
}

std::string to_text(const SearchOutcome& o) {
    std::ostringstream out;
    out << to_string(o.status);
    if (o.k) out << " k=" << *o.k;
    out << '\n';
    if (!o.note.empty()) out << "note: " << o.note << '\n';
    out << "nodes=" << o.stats.nodes << " k_candidates=" << o.stats.k_candidates
        << " prune_weight_mismatch=" << o.stats.prune_weight_mismatch
        << " prune_overshoot=" << o.stats.prune_overshoot << " prune_undershoot=" << o.stats.prune_undershoot
        << '\n';
    return out.str();
}

}  // namespace distmagic
