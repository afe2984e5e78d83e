#include "distmagic/magic.hpp"

#include "distmagic/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace distmagic {

Labeling::Labeling(std::vector<Label> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    inverse_.assign(n, -1);
    std::vector<Label> duplicates;
    std::vector<Label> out_of_range;
    for (std::size_t v = 0; v < n; ++v) {
        const Label l = values_[v];
        if (l < 1 || static_cast<std::size_t>(l) > n) {
            out_of_range.push_back(l);
        } else if (inverse_[l - 1] != -1) {
            duplicates.push_back(l);
        } else {
            inverse_[l - 1] = static_cast<Vertex>(v);
        }
    }
    if (duplicates.empty() && out_of_range.empty()) return;

    std::ostringstream msg;
    msg << "labeling is not a bijection onto {1.." << n << "}";
    if (!duplicates.empty()) {
        std::sort(duplicates.begin(), duplicates.end());
        duplicates.erase(std::unique(duplicates.begin(), duplicates.end()), duplicates.end());
        msg << "; duplicate:";
        for (Label l : duplicates) msg << ' ' << l;
    }
    if (!out_of_range.empty()) {
        msg << "; out of range:";
        for (Label l : out_of_range) msg << ' ' << l;
    }
    msg << "; missing:";
    for (std::size_t l = 1; l <= n; ++l) {
        if (inverse_[l - 1] == -1) msg << ' ' << l;
    }
    throw InputError(msg.str());
}

Labeling Labeling::identity(std::size_t n) {
    std::vector<Label> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<Label>(i + 1);
    return Labeling(std::move(values));
}

Label Labeling::at(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= size()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for labeling of size " +
                         std::to_string(size()));
    }
    return values_[static_cast<std::size_t>(v)];
}

Vertex Labeling::vertex_of(Label label) const {
    if (label < 1 || static_cast<std::size_t>(label) > size()) {
        throw InputError("label " + std::to_string(label) + " out of range");
    }
    return inverse_[static_cast<std::size_t>(label - 1)];
}

Labeling Labeling::swapped(Vertex u, Vertex v) const {
    Labeling out = *this;
    const Label lu = at(u);
    const Label lv = at(v);
    out.values_[u] = lv;
    out.values_[v] = lu;
    out.inverse_[lu - 1] = v;
    out.inverse_[lv - 1] = u;
    return out;
}

namespace {

long long parse_field(std::string_view token, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InputError(line, "invalid integer '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Labeling read_labeling(std::istream& in) {
    std::vector<std::pair<long long, long long>> rows;
    std::vector<std::size_t> lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw InputError(line_no, "labeling line must be \"v label\"");
        rows.emplace_back(parse_field(tokens[0], line_no), parse_field(tokens[1], line_no));
        lines.push_back(line_no);
    }
    const std::size_t n = rows.size();
    std::vector<Label> values(n, 0);
    std::vector<std::size_t> label_line(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [v, l] = rows[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw InputError(lines[i], "vertex " + std::to_string(v) + " out of range [0," +
                                           std::to_string(n) + ")");
        }
        if (values[v] != 0) throw InputError(lines[i], "vertex " + std::to_string(v) + " labeled twice");
        if (l < 1 || static_cast<std::size_t>(l) > n) {
            throw InputError(lines[i], "label " + std::to_string(l) + " out of range [1," +
                                           std::to_string(n) + "]");
        }
        if (label_line[l] != 0) {
            throw InputError(lines[i], "label " + std::to_string(l) + " already used on line " +
                                           std::to_string(label_line[l]));
        }
        label_line[l] = lines[i];
        values[v] = static_cast<Label>(l);
    }
    return Labeling(std::move(values));
}

Labeling parse_labeling(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_labeling(in);
}

void write_labeling(std::ostream& out, const Labeling& l) {
    for (std::size_t v = 0; v < l.size(); ++v) out << v << ' ' << l.values()[v] << '\n';
}

std::string to_labeling_text(const Labeling& l) {
    std::ostringstream out;
    write_labeling(out, l);
    return out.str();
}

namespace {

void require_matching_size(const Graph& g, const Labeling& l) {
    if (g.order() != l.size()) {
        throw InputError("labeling has " + std::to_string(l.size()) + " entries but graph has " +
                         std::to_string(g.order()) + " vertices");
    }
}

}  // namespace

Weight weight(const Graph& g, const Labeling& l, Vertex v) {
    require_matching_size(g, l);
    Weight sum = 0;
    for (Vertex u : g.neighbors(v)) sum += l[u];
    return sum;
}

std::vector<Weight> weights(const Graph& g, const Labeling& l) {
    require_matching_size(g, l);
    std::vector<Weight> out(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) out[v] += l[u];
    }
    return out;
}

std::optional<Weight> theoretical_k(const Graph& g) {
    const auto r = regularity(g);
    if (!r) return std::nullopt;
    const Weight twice = static_cast<Weight>(*r) * static_cast<Weight>(g.order() + 1);
    if (twice % 2 != 0) return std::nullopt;
    return twice / 2;
}

bool odd_regular_obstruction(const Graph& g) {
    const auto r = regularity(g);
    return r && *r % 2 == 1;
}

VerifyReport verify_distance_magic(const Graph& g, const Labeling& l) {
    VerifyReport report;
    report.order = g.order();
    report.edge_count = g.size();
    report.weights = weights(g, l);

    const auto& w = report.weights;
    const bool uniform = std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) == w.end();
    if (uniform) {
        report.is_distance_magic = true;
        report.magic_constant = w.empty() ? 0 : w.front();
        report.degenerate = g.size() == 0;
        return report;
    }

    // Expected weight for diagnostics: the forced constant when the graph is
    // regular, otherwise the most common weight (smallest on ties).
    Weight expected = 0;
    if (auto k = theoretical_k(g)) {
        expected = *k;
    } else {
        std::map<Weight, std::size_t> counts;
        for (Weight x : w) ++counts[x];
        std::size_t best = 0;
        for (const auto& [value, count] : counts) {
            if (count > best) {
                best = count;
                expected = value;
            }
        }
    }
    for (std::size_t v = 0; v < w.size(); ++v) {
        if (w[v] == expected) continue;
        ++report.failure_count;
        if (report.failures.size() < kMaxDiagnostics) {
            report.failures.push_back({static_cast<Vertex>(v), expected, w[v]});
        }
    }
    return report;
}

VerifyReport verify_balanced(const Graph& g, const Labeling& l) {
    VerifyReport report = verify_distance_magic(g, l);
    report.balance_checked = true;
    const std::size_t n = g.order();
    if (n % 2 != 0) return report;

    const auto twin_of = [&](Vertex v) { return l.vertex_of(static_cast<Label>(n + 1) - l[v]); };
    for (std::size_t w = 0; w < n; ++w) {
        auto hood = g.neighbors(static_cast<Vertex>(w));
        for (Vertex u : hood) {
            const Vertex t = twin_of(u);
            if (std::binary_search(hood.begin(), hood.end(), t)) continue;
            ++report.twin_violation_count;
            if (report.twin_violations.size() < kMaxDiagnostics) {
                report.twin_violations.push_back({static_cast<Vertex>(w), u, t});
            }
        }
    }
    if (!report.is_distance_magic || report.twin_violation_count != 0) return report;

    report.is_balanced = true;
    TwinMap twins;
    twins.partner.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Vertex t = twin_of(static_cast<Vertex>(v));
        twins.partner[v] = t;
        if (g.adjacent(static_cast<Vertex>(v), t)) twins.all_nonadjacent = false;
        auto a = g.neighbors(static_cast<Vertex>(v));
        auto b = g.neighbors(t);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) twins.all_same_neighborhood = false;
    }
    report.twin_map = std::move(twins);
    return report;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_key_value(const VerifyReport& r) {
    std::ostringstream out;
    out << "order=" << r.order << '\n';
    out << "edges=" << r.edge_count << '\n';
    out << "distance_magic=" << flag(r.is_distance_magic) << '\n';
    out << "magic_constant=";
    if (r.magic_constant) {
        out << *r.magic_constant;
    } else {
        out << "none";
    }
    out << '\n';
    out << "degenerate=" << flag(r.degenerate) << '\n';
    if (r.balance_checked) {
        out << "balanced=" << flag(r.is_balanced) << '\n';
        out << "twins=";
        if (r.twin_map) {
            bool first = true;
            for (std::size_t v = 0; v < r.twin_map->partner.size(); ++v) {
                const Vertex t = r.twin_map->partner[v];
                if (static_cast<Vertex>(v) > t) continue;
                out << (first ? "" : " ") << v << ':' << t;
                first = false;
            }
            out << '\n';
            out << "twins_nonadjacent=" << flag(r.twin_map->all_nonadjacent) << '\n';
            out << "twins_same_neighborhood=" << flag(r.twin_map->all_same_neighborhood) << '\n';
        } else {
            out << "none\n";
        }
        out << "twin_violation_count=" << r.twin_violation_count << '\n';
    }
    out << "failure_count=" << r.failure_count << '\n';
    out << "failures=";
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
        const auto& f = r.failures[i];
        out << (i ? " " : "") << f.vertex << ':' << f.expected << ':' << f.actual;
    }
    out << '\n';
    out << "weights=";
    for (std::size_t i = 0; i < r.weights.size(); ++i) out << (i ? " " : "") << r.weights[i];
    out << '\n';
    return out.str();
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream out;
    out << "graph: " << r.order << " vertices, " << r.edge_count << " edges\n";
    if (r.is_distance_magic) {
        out << "distance magic: yes, k = " << *r.magic_constant;
        if (r.degenerate) out << " (degenerate: no edges)";
        out << '\n';
    } else {
        out << "distance magic: no (" << r.failure_count << " vertices off the expected weight)\n";
        for (const auto& f : r.failures) {
            out << "  vertex " << f.vertex << ": weight " << f.actual << ", expected " << f.expected << '\n';
        }
        if (r.failure_count > r.failures.size()) {
            out << "  ... " << (r.failure_count - r.failures.size()) << " more\n";
        }
    }
    if (r.balance_checked) {
        if (r.is_balanced) {
            out << "balanced: yes\n";
            for (std::size_t v = 0; v < r.twin_map->partner.size(); ++v) {
                const Vertex t = r.twin_map->partner[v];
                if (static_cast<Vertex>(v) < t) out << "  twins " << v << " ~ " << t << '\n';
            }
        } else if (r.order % 2 != 0) {
            out << "balanced: no (odd order)\n";
        } else {
            out << "balanced: no (" << r.twin_violation_count << " twin violations)\n";
            for (const auto& t : r.twin_violations) {
                out << "  N(" << t.center << ") contains " << t.member << " but not its twin " << t.missing
                    << '\n';
            }
        }
    }
    return out.str();
}

EitSchedule eit_schedule(const Graph& g, const Labeling& l) {
    require_matching_size(g, l);
    const auto r = regularity(g);
    if (!r) throw InputError("EIT schedule requires a regular graph");
    const VerifyReport report = verify_distance_magic(g, l);
    if (!report.is_distance_magic) {
        throw InputError("EIT schedule requires a distance magic labeling (" +
                         std::to_string(report.failure_count) + " vertices off the expected weight)");
    }
    EitSchedule s;
    s.teams = g.order();
    s.rounds = *r;
    s.total = *report.magic_constant;
    for (std::size_t v = 0; v < g.order(); ++v) {
        EitRow row{static_cast<Vertex>(v), l[static_cast<Vertex>(v)], {}, report.weights[v]};
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) row.opponents.push_back(l[u]);
        std::sort(row.opponents.begin(), row.opponents.end());
        s.rows.push_back(std::move(row));
    }
    return s;
}

std::string to_text(const EitSchedule& s) {
    std::ostringstream out;
    out << "EIT(" << s.teams << "," << s.rounds << ") total=" << s.total << '\n';
    for (const auto& row : s.rows) {
        out << "team " << row.team << " strength " << row.strength << " opponents";
        for (Label o : row.opponents) out << ' ' << o;
        out << " total " << row.opponent_total << '\n';
    }
    return out.str();
}

}  // namespace distmagic
