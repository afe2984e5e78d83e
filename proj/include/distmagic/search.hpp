#pragma once

#include "distmagic/graph.hpp"
#include "distmagic/magic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distmagic {

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;  // unlimited when empty

    static SearchBudget unlimited() { return {}; }
    static SearchBudget nodes(std::uint64_t n);
};

struct SearchStats {
    std::uint64_t nodes = 0;                // label assignments tried
    std::uint64_t prune_weight_mismatch = 0;  // a fully labeled neighborhood missed k
    std::uint64_t prune_overshoot = 0;        // even the smallest completion exceeds k
    std::uint64_t prune_undershoot = 0;       // even the largest completion stays below k
    std::uint64_t k_candidates = 0;
};

struct SearchOutcome {
    enum class Status { found, exhausted_none, budget_exceeded };
    Status status = Status::exhausted_none;
    std::optional<Labeling> witness;
    std::optional<Weight> k;
    SearchStats stats;
    std::string note;  // fast path taken, if any
};

std::string_view to_string(SearchOutcome::Status s);

// Decides whether g has a distance magic labeling by pruned depth-first
// search. Vertices are labeled in order of descending degree (ties by id)
// with labels tried in increasing order, so a found witness is the
// lexicographically first label sequence in that vertex order.
SearchOutcome find_distance_magic(const Graph& g, SearchBudget budget = SearchBudget::unlimited());

// The vertex order used by find_distance_magic.
std::vector<Vertex> search_order(const Graph& g);

// Closed interval of candidate magic constants for g from the rearrangement
// bounds on sum_v d(v) l(v) = n k.
std::pair<Weight, Weight> magic_constant_bounds(const Graph& g);

struct FamilyMember {
    std::string name;
    Graph graph;
};

struct FamilyRow {
    std::string name;
    SearchOutcome outcome;
};

std::vector<FamilyRow> check_family(const std::vector<FamilyMember>& family, SearchBudget budget);

std::string to_text(const SearchOutcome& outcome);

}  // namespace distmagic
