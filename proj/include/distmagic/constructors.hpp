#pragma once

#include "distmagic/magic.hpp"
#include "distmagic/products.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace distmagic {

struct LabeledProduct {
    ProductGraph product;
    Labeling labeling;
};

// Labels of C_m x C_n indexed by (row i, column j); vertex v_{i,j} has id
// i * cols + j, which matches product(direct, C_m, C_n).
class GridLabeling {
public:
    GridLabeling(std::size_t rows, std::size_t cols, std::vector<Label> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Label at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Label>& entries() const noexcept { return entries_; }

    Labeling to_labeling() const { return Labeling(entries_); }
    static GridLabeling from_labeling(std::size_t rows, std::size_t cols, const Labeling& l);

    bool operator==(const GridLabeling&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Label> entries_;
};

enum class GridOrientation {
    row0_last,   // row m-1 printed first, v_{0,0} in the lower left corner
    row0_first,
};

// Header "m n k" then the grid rows, single spaces between entries.
void write_grid(std::ostream& out, const GridLabeling& grid, Weight k,
                GridOrientation orientation = GridOrientation::row0_last);
std::string to_grid_text(const GridLabeling& grid, Weight k,
                         GridOrientation orientation = GridOrientation::row0_last);

LabeledGraph label_c4();
LabeledGraph label_complete_bipartite(long long n);       // K_{2n,2n}
LabeledGraph label_complete_minus_matching(long long n);  // K_{2n} - M

// Balanced labeling of G o H from a regular G and a balanced labeling of H.
LabeledProduct label_lexicographic(const Graph& g, const LabeledGraph& h);

// Balanced labeling of G x H from a regular G and a balanced labeling of H.
LabeledProduct label_direct(const Graph& g, const LabeledGraph& h);
// Same with the balanced graph as the first factor: labels G x H where G
// carries the balanced labeling and H is regular.
LabeledProduct label_direct(const LabeledGraph& g, const Graph& h);

// Distance magic (not balanced) labeling of C_m x C_n for m, n = 0 mod 4,
// both greater than 4. Magic constant 2mn + 2.
GridLabeling label_cycle_product(long long m, long long n);

enum class CycleProductClass {
    balanced_distance_magic,
    distance_magic_not_balanced,
    not_distance_magic,
};

std::string_view to_string(CycleProductClass c);

CycleProductClass classify_cycle_direct(long long m, long long n);
bool classify_cycle_cartesian(long long m, long long n);
bool classify_cycle(long long n);
// C_n o C_m
bool classify_lex_cycles(long long n, long long m);

}  // namespace distmagic
