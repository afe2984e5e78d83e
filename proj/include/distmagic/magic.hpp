#pragma once

#include "distmagic/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace distmagic {

using Label = int;
using Weight = std::int64_t;

// Bijection from vertex ids 0..n-1 onto labels 1..n.
class Labeling {
public:
    Labeling() = default;

    // Throws InputError listing duplicate and missing labels when `values`
    // is not a permutation of 1..n.
    explicit Labeling(std::vector<Label> values);

    static Labeling identity(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    Label operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
    Label at(Vertex v) const;
    Vertex vertex_of(Label label) const;

    const std::vector<Label>& values() const noexcept { return values_; }

    // Returns a copy with the labels of u and v exchanged.
    Labeling swapped(Vertex u, Vertex v) const;

    bool operator==(const Labeling&) const = default;

private:
    std::vector<Label> values_;
    std::vector<Vertex> inverse_;  // inverse_[label - 1] = vertex
};

struct LabeledGraph {
    Graph graph;
    Labeling labeling;
};

// Labeling text format: one "v label" line per vertex, in any order.
Labeling read_labeling(std::istream& in);
Labeling parse_labeling(std::string_view text);
void write_labeling(std::ostream& out, const Labeling& l);
std::string to_labeling_text(const Labeling& l);

struct WeightFailure {
    Vertex vertex;
    Weight expected;
    Weight actual;
};

// Vertex `center` has `member` in its neighborhood but not `missing`, the
// vertex carrying label n+1-l(member).
struct TwinViolation {
    Vertex center;
    Vertex member;
    Vertex missing;
};

struct TwinMap {
    std::vector<Vertex> partner;  // partner[v] = twin of v
    bool all_nonadjacent = true;
    bool all_same_neighborhood = true;
};

inline constexpr std::size_t kMaxDiagnostics = 32;

struct VerifyReport {
    std::size_t order = 0;
    std::size_t edge_count = 0;
    std::vector<Weight> weights;
    std::optional<Weight> magic_constant;
    bool is_distance_magic = false;
    // Edgeless graph accepted with k = 0.
    bool degenerate = false;
    bool balance_checked = false;
    bool is_balanced = false;
    std::optional<TwinMap> twin_map;
    std::vector<WeightFailure> failures;  // capped at kMaxDiagnostics
    std::size_t failure_count = 0;
    std::vector<TwinViolation> twin_violations;  // capped at kMaxDiagnostics
    std::size_t twin_violation_count = 0;
};

Weight weight(const Graph& g, const Labeling& l, Vertex v);
std::vector<Weight> weights(const Graph& g, const Labeling& l);

VerifyReport verify_distance_magic(const Graph& g, const Labeling& l);
VerifyReport verify_balanced(const Graph& g, const Labeling& l);

// r(n+1)/2 for an r-regular graph when it is an integer.
std::optional<Weight> theoretical_k(const Graph& g);

// True when g is r-regular with r odd; such graphs are never distance magic.
bool odd_regular_obstruction(const Graph& g);

std::string to_key_value(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

// Equalized incomplete tournament read off a regular distance magic labeling.
struct EitRow {
    Vertex team;
    Label strength;
    std::vector<Label> opponents;  // ascending
    Weight opponent_total;
};

struct EitSchedule {
    std::size_t teams = 0;
    std::size_t rounds = 0;
    Weight total = 0;
    std::vector<EitRow> rows;  // ordered by team id
};

EitSchedule eit_schedule(const Graph& g, const Labeling& l);
std::string to_text(const EitSchedule& schedule);

}  // namespace distmagic
