#include "cli.hpp"

#include "distmagic/constructors.hpp"
#include "distmagic/error.hpp"
#include "distmagic/graph.hpp"
#include "distmagic/magic.hpp"
#include "distmagic/products.hpp"
#include "distmagic/rearrange.hpp"
#include "distmagic/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace distmagic::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Wraps parser errors with the file they came from.
template <typename Fn>
auto parse_file(const std::string& path, Fn&& parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

// A generator spec such as "cycle:5", otherwise an edge-list file.
Graph load_graph(const std::string& source) {
    std::optional<GraphKind> kind;
    try {
        kind = parse_graph_kind(source);
    } catch (const InputError&) {
    }
    if (kind) return generate(*kind);
    return parse_file(source, [](const std::string& t) { return parse_edge_list(t); });
}

Labeling load_labeling(const std::string& path) {
    return parse_file(path, [](const std::string& t) { return parse_labeling(t); });
}

// A named balanced construction: c4, complete-bipartite:N,
// complete-minus-matching:N or empty:N with N even.
LabeledGraph balanced_by_name(const std::string& name) {
    if (name == "c4") return label_c4();
    const GraphKind kind = parse_graph_kind(name);
    if (kind.params.size() != 1) throw InputError("balanced factor '" + name + "' takes one parameter");
    switch (kind.family) {
        case GraphFamily::complete_bipartite: return label_complete_bipartite(kind.params[0]);
        case GraphFamily::complete_minus_perfect_matching: return label_complete_minus_matching(kind.params[0]);
        case GraphFamily::empty: {
            Graph g = generate(kind);
            if (g.order() % 2 != 0) throw InputError("empty graph of odd order is not balanced");
            const std::size_t n = g.order();
            return {std::move(g), Labeling::identity(n)};
        }
        default: break;
    }
    throw InputError("no balanced construction named '" + name + "'");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + out_path + "'");
    file << text;
}

struct ConstructOptions {
    std::string kind;
    long long m = 0;
    long long n = 0;
    std::string g;
    std::string h;
    std::string h_graph;
    std::string h_labels;
    bool balanced_first = false;
    std::string format;
    std::string out;
    std::string graph_out;
    bool row0_first = false;
};

int do_construct(const ConstructOptions& o, std::ostream& out) {
    const auto orientation = o.row0_first ? GridOrientation::row0_first : GridOrientation::row0_last;
    if (o.kind == "cycle-product") {
        const GridLabeling grid = label_cycle_product(o.m, o.n);
        const ProductGraph p = product(ProductKind::direct, generate({GraphFamily::cycle, {o.m}}),
                                       generate({GraphFamily::cycle, {o.n}}));
        const VerifyReport report = verify_distance_magic(p.base, grid.to_labeling());
        if (!o.graph_out.empty()) emit(to_edge_list(p.base), o.graph_out, out);
        if (o.format == "list") {
            emit(to_labeling_text(grid.to_labeling()), o.out, out);
        } else {
            emit(to_grid_text(grid, report.magic_constant.value_or(0), orientation), o.out, out);
        }
        return kOk;
    }
    if (o.format == "grid") throw InputError("--format grid is only available for --kind cycle-product");

    Graph graph;
    Labeling labeling;
    auto take = [&](auto labeled) {
        if constexpr (requires { labeled.product; }) {
            graph = std::move(labeled.product.base);
        } else {
            graph = std::move(labeled.graph);
        }
        labeling = std::move(labeled.labeling);
    };

    if (o.kind == "c4") {
        take(label_c4());
    } else if (o.kind == "complete-bipartite") {
        take(label_complete_bipartite(o.n));
    } else if (o.kind == "complete-minus-matching") {
        take(label_complete_minus_matching(o.n));
    } else if (o.kind == "lexicographic" || o.kind == "direct") {
        if (o.g.empty()) throw InputError("--regular is required for --kind " + o.kind);
        LabeledGraph balanced;
        if (!o.h_graph.empty() || !o.h_labels.empty()) {
            if (o.h_graph.empty() || o.h_labels.empty()) {
                throw InputError("--balanced-graph and --balanced-labels must be given together");
            }
            balanced = {load_graph(o.h_graph), load_labeling(o.h_labels)};
        } else if (!o.h.empty()) {
            balanced = balanced_by_name(o.h);
        } else {
            throw InputError("--balanced or --balanced-graph/--balanced-labels is required for --kind " + o.kind);
        }
        const Graph regular = load_graph(o.g);
        if (o.kind == "lexicographic") {
            if (o.balanced_first) throw InputError("--balanced-first applies to --kind direct only");
            take(label_lexicographic(regular, balanced));
        } else if (o.balanced_first) {
            take(label_direct(balanced, regular));
        } else {
            take(label_direct(regular, balanced));
        }
    } else {
        throw InputError("unknown --kind '" + o.kind + "'");
    }
    if (!o.graph_out.empty()) emit(to_edge_list(graph), o.graph_out, out);
    emit(to_labeling_text(labeling), o.out, out);
    return kOk;
}

struct VerifyOptions {
    std::string graph;
    std::string labels;
    bool human = false;
};

int do_verify(const VerifyOptions& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const Labeling l = load_labeling(o.labels);
    const VerifyReport report = verify_balanced(g, l);
    out << (o.human ? to_text(report) : to_key_value(report));
    return report.is_distance_magic ? kOk : kNegative;
}

struct ProductOptions {
    std::string kind;
    std::string g;
    std::string h;
    std::string out;
};

int do_product(const ProductOptions& o, std::ostream& out) {
    const ProductGraph p = product(parse_product_kind(o.kind), load_graph(o.g), load_graph(o.h));
    emit(to_edge_list(p.base), o.out, out);
    return kOk;
}

struct SearchOptions {
    std::string graph;
    std::uint64_t budget = 0;
    std::string out;
};

int do_search(const SearchOptions& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const SearchBudget budget = o.budget == 0 ? SearchBudget::unlimited() : SearchBudget::nodes(o.budget);
    const SearchOutcome outcome = find_distance_magic(g, budget);
    out << to_text(outcome);
    if (outcome.witness) {
        if (o.out.empty()) {
            out << "witness:\n" << to_labeling_text(*outcome.witness);
        } else {
            emit(to_labeling_text(*outcome.witness), o.out, out);
        }
    }
    return outcome.status == SearchOutcome::Status::found ? kOk : kNegative;
}

struct CoupleOptions {
    std::string kind = "direct";
    std::string g;
    std::string h;
    std::string labels;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int do_couple(const CoupleOptions& o, std::ostream& out) {
    const ProductGraph p = product(parse_product_kind(o.kind), load_graph(o.g), load_graph(o.h));
    BalancedProductLabeling bl(p, load_labeling(o.labels));
    if (o.seed) bl = scramble_balanced(bl, *o.seed);

    FactorLabeling factor;
    if (p.kind == ProductKind::lexicographic) {
        factor = extract_lexicographic_factor(bl);
        out << "outcome=closed_h_layer\n";
    } else {
        const CoupleResult result = couple_layers(bl);
        if (result.outcome.tag == CoupleOutcome::Tag::closed_h_layer) {
            out << "outcome=closed_h_layer layer=" << result.outcome.layer << '\n';
        } else {
            out << "outcome=coupled_pairs pairs=";
            for (std::size_t i = 0; i < result.outcome.pairs.size(); ++i) {
                out << (i ? " " : "") << result.outcome.pairs[i].first << ':' << result.outcome.pairs[i].second;
            }
            out << '\n';
        }
        out << "swaps=" << result.swaps << '\n';
        factor = extract_factor_labeling(result.labeling, result.outcome);
    }
    const VerifyReport report = verify_balanced(factor.labeled.graph, factor.labeled.labeling);
    out << "factor=" << (factor.factor == Factor::first ? "first" : "second") << '\n';
    out << "factor_balanced=" << (report.is_balanced ? "true" : "false") << '\n';
    if (report.magic_constant) out << "factor_magic_constant=" << *report.magic_constant << '\n';
    if (o.out.empty()) {
        out << "factor_labeling:\n" << to_labeling_text(factor.labeled.labeling);
    } else {
        emit(to_labeling_text(factor.labeled.labeling), o.out, out);
    }
    return report.is_balanced ? kOk : kNegative;
}

struct ClassifyOptions {
    std::string family;
    std::vector<long long> params;
};

int do_classify(const ClassifyOptions& o, std::ostream& out) {
    auto need = [&](std::size_t count) {
        if (o.params.size() != count) {
            throw InputError("classify " + o.family + " takes " + std::to_string(count) + " cycle length(s)");
        }
    };
    auto verdict = [&](bool magic) {
        out << (magic ? "distance_magic" : "not_distance_magic") << '\n';
        return magic ? kOk : kNegative;
    };
    if (o.family == "direct") {
        need(2);
        const CycleProductClass c = classify_cycle_direct(o.params[0], o.params[1]);
        out << to_string(c) << '\n';
        return c == CycleProductClass::not_distance_magic ? kNegative : kOk;
    }
    if (o.family == "cartesian") {
        need(2);
        return verdict(classify_cycle_cartesian(o.params[0], o.params[1]));
    }
    if (o.family == "cycle") {
        need(1);
        return verdict(classify_cycle(o.params[0]));
    }
    if (o.family == "lex" || o.family == "lexicographic") {
        need(2);
        return verdict(classify_lex_cycles(o.params[0], o.params[1]));
    }
    throw InputError("unknown family '" + o.family + "' (expected direct, cartesian, cycle or lex)");
}

struct EitOptions {
    std::string graph;
    std::string labels;
};

int do_eit(const EitOptions& o, std::ostream& out) {
    out << to_text(eit_schedule(load_graph(o.graph), load_labeling(o.labels)));
    return kOk;
}

int do_table16(bool row0_first, const std::string& out_path, std::ostream& out) {
    const GridLabeling grid = label_cycle_product(16, 16);
    const auto orientation = row0_first ? GridOrientation::row0_first : GridOrientation::row0_last;
    emit(to_grid_text(grid, 2 * 16 * 16 + 2, orientation), out_path, out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance magic labelings of graphs and graph products", "dmagic"};
    app.require_subcommand(1);

    std::function<int()> action;

    ConstructOptions construct;
    auto* c = app.add_subcommand("construct", "Emit a labeling from a named construction");
    c->add_option("--kind", construct.kind,
                  "c4 | complete-bipartite | complete-minus-matching | lexicographic | direct | cycle-product")
        ->required();
    c->add_option("--m", construct.m, "Rows of C_m x C_n (cycle-product)");
    c->add_option("--n", construct.n, "Columns of C_m x C_n, or the family parameter");
    c->add_option("--regular", construct.g, "Regular factor: generator spec (cycle:5) or edge-list file");
    c->add_option("--balanced", construct.h, "Balanced factor: c4, complete-bipartite:N, complete-minus-matching:N, empty:N");
    c->add_option("--balanced-graph", construct.h_graph, "Balanced factor graph file");
    c->add_option("--balanced-labels", construct.h_labels, "Balanced factor labeling file");
    c->add_flag("--balanced-first", construct.balanced_first, "direct: place the balanced factor first");
    c->add_option("--format", construct.format, "grid | list")->check(CLI::IsMember({"grid", "list"}));
    c->add_option("--out", construct.out, "Write the labeling here instead of stdout");
    c->add_option("--graph-out", construct.graph_out, "Also write the labeled graph as an edge list");
    c->add_flag("--row0-first", construct.row0_first, "Print grid row 0 first");
    c->callback([&] { action = [&] { return do_construct(construct, out); }; });

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check a labeling for (balanced) distance magic");
    v->add_option("graph", verify.graph, "Edge-list file or generator spec")->required();
    v->add_option("labels", verify.labels, "Labeling file")->required();
    v->add_flag("--human", verify.human, "Human-readable report instead of key=value");
    v->callback([&] { action = [&] { return do_verify(verify, out); }; });

    ProductOptions prod;
    auto* p = app.add_subcommand("product", "Build a graph product");
    p->add_option("--kind", prod.kind, "cartesian | lexicographic | direct")->required();
    p->add_option("first", prod.g, "First factor")->required();
    p->add_option("second", prod.h, "Second factor")->required();
    p->add_option("--out", prod.out, "Output edge-list file");
    p->callback([&] { action = [&] { return do_product(prod, out); }; });

    SearchOptions search;
    auto* s = app.add_subcommand("search", "Exhaustive search for a distance magic labeling");
    s->add_option("graph", search.graph, "Edge-list file or generator spec")->required();
    s->add_option("--budget", search.budget, "Maximum search nodes (0 = unlimited)");
    s->add_option("--out", search.out, "Write the witness labeling here");
    s->callback([&] { action = [&] { return do_search(search, out); }; });

    CoupleOptions couple;
    std::uint64_t seed = 0;
    auto* cp = app.add_subcommand("couple", "Couple H-layers and extract a balanced factor labeling");
    cp->add_option("--kind", couple.kind, "direct | lexicographic")->check(CLI::IsMember({"direct", "lexicographic"}));
    cp->add_option("--first", couple.g, "First factor")->required();
    cp->add_option("--second", couple.h, "Second factor")->required();
    cp->add_option("labels", couple.labels, "Balanced labeling of the product")->required();
    auto* seed_opt = cp->add_option("--seed", seed, "Scramble the labeling with this seed first");
    cp->add_option("--out", couple.out, "Write the factor labeling here");
    cp->callback([&] {
        if (seed_opt->count() > 0) couple.seed = seed;
        action = [&] { return do_couple(couple, out); };
    });

    ClassifyOptions classify;
    auto* cl = app.add_subcommand("classify", "Closed-form verdicts for cycle products");
    cl->add_option("family", classify.family, "direct | cartesian | cycle | lex")->required();
    cl->add_option("lengths", classify.params, "Cycle lengths")->required();
    cl->callback([&] { action = [&] { return do_classify(classify, out); }; });

    EitOptions eit;
    auto* e = app.add_subcommand("eit", "Equalized incomplete tournament from a regular magic labeling");
    e->add_option("graph", eit.graph, "Edge-list file or generator spec")->required();
    e->add_option("labels", eit.labels, "Labeling file")->required();
    e->callback([&] { action = [&] { return do_eit(eit, out); }; });

    bool row0_first = false;
    std::string table_out;
    auto* t = app.add_subcommand("table16", "Print the C_16 x C_16 labeling grid");
    t->add_flag("--row0-first", row0_first, "Print row 0 first");
    t->add_option("--out", table_out, "Output file");
    t->callback([&] { action = [&] { return do_table16(row0_first, table_out, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        return action();
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    }
}

}  // namespace distmagic::cli
