#include "distmagic/constructors.hpp"

#include "distmagic/error.hpp"

#include <ostream>
#include <sstream>

namespace distmagic {

GridLabeling::GridLabeling(std::size_t rows, std::size_t cols, std::vector<Label> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw InputError("grid of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " needs " +
                         std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
    }
    (void)Labeling(entries_);  // validates the bijection
}

GridLabeling GridLabeling::from_labeling(std::size_t rows, std::size_t cols, const Labeling& l) {
    return GridLabeling(rows, cols, l.values());
}

void write_grid(std::ostream& out, const GridLabeling& grid, Weight k, GridOrientation orientation) {
    out << grid.rows() << ' ' << grid.cols() << ' ' << k << '\n';
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        const std::size_t i = orientation == GridOrientation::row0_last ? grid.rows() - 1 - r : r;
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            if (j) out << ' ';
            out << grid.at(i, j);
        }
        out << '\n';
    }
}

std::string to_grid_text(const GridLabeling& grid, Weight k, GridOrientation orientation) {
    std::ostringstream out;
    write_grid(out, grid, k, orientation);
    return out.str();
}

LabeledGraph label_c4() {
    return {generate({GraphFamily::cycle, {4}}), Labeling({1, 2, 4, 3})};
}

LabeledGraph label_complete_bipartite(long long n) {
    if (n < 1) throw InputError("label_complete_bipartite: n must be >= 1, got " + std::to_string(n));
    // v_i (1-based) belongs to the first part iff i mod 4 is 0 or 1; each
    // part is laid out in increasing i and v_i carries label i.
    std::vector<Label> first;
    std::vector<Label> second;
    for (long long i = 1; i <= 4 * n; ++i) {
        (i % 4 == 0 || i % 4 == 1 ? first : second).push_back(static_cast<Label>(i));
    }
    first.insert(first.end(), second.begin(), second.end());
    return {generate({GraphFamily::complete_bipartite, {2 * n, 2 * n}}), Labeling(std::move(first))};
}

LabeledGraph label_complete_minus_matching(long long n) {
    if (n < 1) throw InputError("label_complete_minus_matching: n must be >= 1, got " + std::to_string(n));
    // Matching edge i (0-based) is {2i, 2i+1}; its ends get i+1 and 2n-i.
    std::vector<Label> values(static_cast<std::size_t>(2 * n));
    for (long long i = 0; i < n; ++i) {
        values[2 * i] = static_cast<Label>(i + 1);
        values[2 * i + 1] = static_cast<Label>(2 * n - i);
    }
    return {generate({GraphFamily::complete_minus_perfect_matching, {2 * n}}), Labeling(std::move(values))};
}

namespace {

void require_regular(const Graph& g, const char* op) {
    if (!regularity(g)) throw InputError(std::string(op) + ": first factor must be regular");
}

void require_balanced(const LabeledGraph& h, const char* op) {
    const VerifyReport report = verify_balanced(h.graph, h.labeling);
    if (!report.is_balanced) {
        throw InputError(std::string(op) + ": labeling of the balanced factor is not balanced distance magic");
    }
}

}  // namespace

LabeledProduct label_lexicographic(const Graph& g, const LabeledGraph& h) {
    require_regular(g, "label_lexicographic");
    require_balanced(h, "label_lexicographic");
    const long long p = static_cast<long long>(g.order());
    const long long t = static_cast<long long>(h.graph.order());

    ProductGraph prod = product(ProductKind::lexicographic, g, h.graph);
    std::vector<Label> values(prod.base.order());
    for (long long i = 1; i <= p; ++i) {
        for (long long j = 1; j <= t; ++j) {
            const Vertex hj = h.labeling.vertex_of(static_cast<Label>(j));
            const long long label = j <= t / 2 ? (j - 1) * p + i : j * p - i + 1;
            values[prod.vertex(static_cast<Vertex>(i - 1), hj)] = static_cast<Label>(label);
        }
    }
    return {std::move(prod), Labeling(std::move(values))};
}

LabeledProduct label_direct(const Graph& g, const LabeledGraph& h) {
    require_regular(g, "label_direct");
    require_balanced(h, "label_direct");
    const long long t = static_cast<long long>(g.order());
    const long long p = static_cast<long long>(h.graph.order());

    ProductGraph prod = product(ProductKind::direct, g, h.graph);
    std::vector<Label> values(prod.base.order());
    for (long long i = 1; i <= t; ++i) {
        for (long long j = 1; j <= p; ++j) {
            const Vertex hj = h.labeling.vertex_of(static_cast<Label>(j));
            const long long label = j <= p / 2 ? (j - 1) * t + i : j * t - i + 1;
            values[prod.vertex(static_cast<Vertex>(i - 1), hj)] = static_cast<Label>(label);
        }
    }
    return {std::move(prod), Labeling(std::move(values))};
}

LabeledProduct label_direct(const LabeledGraph& g, const Graph& h) {
    const LabeledProduct swapped = label_direct(h, g);
    ProductGraph prod = product(ProductKind::direct, g.graph, h);
    std::vector<Label> values(prod.base.order());
    for (std::size_t a = 0; a < prod.gsize(); ++a) {
        for (std::size_t b = 0; b < prod.hsize(); ++b) {
            const Vertex from = swapped.product.vertex(static_cast<Vertex>(b), static_cast<Vertex>(a));
            values[prod.vertex(static_cast<Vertex>(a), static_cast<Vertex>(b))] = swapped.labeling[from];
        }
    }
    return {std::move(prod), Labeling(std::move(values))};
}

GridLabeling label_cycle_product(long long m, long long n) {
    if (m == 4 || n == 4) {
        throw InputError("label_cycle_product: a factor equals C_4; use label_direct with label_c4 instead");
    }
    if (m % 4 != 0 || n % 4 != 0 || m <= 4 || n <= 4) {
        throw InputError("label_cycle_product: requires m, n divisible by 4 and greater than 4, got m=" +
                         std::to_string(m) + " n=" + std::to_string(n));
    }
    const long long mn = m * n;
    const long long half = mn / 2;
    std::vector<Label> grid(static_cast<std::size_t>(mn), 0);
    auto cell = [&](long long i, long long j) -> Label& { return grid[static_cast<std::size_t>(i * n + j)]; };
    // Moves a label towards the middle of 1..mn by `step`.
    auto shift = [half](long long label, long long step) {
        return static_cast<Label>(label <= half ? label + step : label - step);
    };

    // Starting conditions: every second vertex of row 0.
    const long long ceil8 = (n + 7) / 8;
    const long long floor8 = n / 8;
    for (long long j = 0; j < n / 4; ++j) {
        cell(0, 4 * j) = static_cast<Label>(j <= ceil8 - 1 ? 2 * j + 1 : n / 2 - 2 * j);
        cell(0, 4 * j + 2) = static_cast<Label>(j <= floor8 - 1 ? mn - 2 * j - 1 : mn - n / 2 + 2 * j + 2);
    }
    // Row 2, mirrored against row 0.
    for (long long j = 0; j < n; j += 2) cell(2, j) = shift(cell(0, n - 2 - j), n / 4);
    // Remaining even rows 4, 6, ..., m-2 from the row four below.
    for (long long i = 2; i <= m / 2 - 1; ++i) {
        for (long long j = 0; j < n; j += 2) cell(2 * i, j) = shift(cell(2 * i - 4, j), n / 2);
    }
    // Odd rows on even columns.
    for (long long i = 0; i <= m / 2 - 1; ++i) {
        for (long long j = 0; j < n; j += 2) cell(2 * i + 1, j) = shift(cell(2 * i, j), mn / 8);
    }
    // Odd columns from the even column to their left.
    for (long long i = 0; i < m; ++i) {
        for (long long c = 1; c < n; c += 2) cell(i, c) = shift(cell(i, c - 1), mn / 4);
    }
    return GridLabeling(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(grid));
}

std::string_view to_string(CycleProductClass c) {
    switch (c) {
        case CycleProductClass::balanced_distance_magic: return "balanced_distance_magic";
        case CycleProductClass::distance_magic_not_balanced: return "distance_magic_not_balanced";
        case CycleProductClass::not_distance_magic: return "not_distance_magic";
    }
    return "unknown";
}

namespace {

void require_cycle_length(long long n) {
    if (n < 3) throw InputError("cycle length must be >= 3, got " + std::to_string(n));
}

}  // namespace

CycleProductClass classify_cycle_direct(long long m, long long n) {
    require_cycle_length(m);
    require_cycle_length(n);
    if (m == 4 || n == 4) return CycleProductClass::balanced_distance_magic;
    if (m % 4 == 0 && n % 4 == 0) return CycleProductClass::distance_magic_not_balanced;
    return CycleProductClass::not_distance_magic;
}

bool classify_cycle_cartesian(long long m, long long n) {
    require_cycle_length(m);
    require_cycle_length(n);
    return m == n && n % 4 == 2;
}

bool classify_cycle(long long n) {
    require_cycle_length(n);
    return n == 4;
}

bool classify_lex_cycles(long long n, long long m) {
    require_cycle_length(n);
    require_cycle_length(m);
    return m == 4;
}

}  // namespace distmagic
