#include "latgenus/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latgenus/crosscheck.hpp"
#include "latgenus/embedding.hpp"
#include "latgenus/errors.hpp"
#include "latgenus/formulas.hpp"
#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/minor.hpp"
#include "latgenus/search.hpp"
#include "latgenus/structure.hpp"

namespace latgenus {

namespace {

using nlohmann::json;

struct Globals {
    std::uint64_t seed = 1;
    std::int64_t budget = 1'000'000;
    bool json = false;
    bool dot = false;
    std::uint64_t order_cap = kDefaultOrderCap;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

// "K3,3", "K5", "bowtie"; nullopt for anything else.
std::optional<Graph> named_graph(const std::string& name) {
    if (name == "bowtie") {
        return double_k33();
    }
    if (name.size() >= 2 && name[0] == 'K') {
        const std::string rest = name.substr(1);
        const auto comma = rest.find(',');
        try {
            if (comma == std::string::npos) {
                return complete_graph(std::stoi(rest));
            }
            return complete_bipartite(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
        } catch (const std::logic_error&) {
            throw InputError("bad complete-graph name '" + name + "'");
        }
    }
    return std::nullopt;
}

// A graph argument: a JSON file (graph or certificate), "grid:e1,e2,...",
// a named pattern, or a group expression whose lattice is taken.
Graph load_graph(const std::string& arg, const Globals& g) {
    if (std::filesystem::is_regular_file(arg)) {
        const json j = read_json_file(arg);
        try {
            return graph_from_json(j.contains("graph") ? j.at("graph") : j);
        } catch (const json::exception& e) {
            throw InputError("'" + arg + "' is not a graph: " + e.what());
        }
    }
    if (starts_with(arg, "grid:")) {
        return grid_graph(parse_grid_spec(arg.substr(5)));
    }
    if (auto named = named_graph(arg)) {
        return *named;
    }
    return lattice_of(parse_group_spec(arg, g.order_cap));
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_group(const std::string& text, const Globals& g, std::ostream& out) {
    const GroupSpec spec = parse_group_spec(text, g.order_cap);
    const SubgroupSet subs = enumerate_subgroups(spec);
    const Graph lattice = build_lattice(subs);
    if (g.dot) {
        out << graph_to_dot(lattice, "lattice");
        return kExitOk;
    }
    const auto census = subgroup_census(subs);
    if (g.json) {
        json c = json::object();
        for (auto [order, count] : census) {
            c[std::to_string(order)] = count;
        }
        print_json(out, {{"group", spec.to_string()},
                         {"order", spec.order()},
                         {"subgroup_count", subs.size()},
                         {"census", c},
                         {"subgroups", subgroups_to_json(subs)},
                         {"lattice", graph_to_json(lattice)}});
        return kExitOk;
    }
    out << spec.to_string() << ": order " << spec.order() << ", " << subs.size() << " subgroups\n";
    for (auto [order, count] : census) {
        out << "  order " << order << ": " << count << '\n';
    }
    out << "lattice: " << lattice.num_vertices() << " vertices, " << lattice.num_edges() << " edges\n";
    return kExitOk;
}

int cmd_grid(const std::string& text, const Globals& g, std::ostream& out) {
    const GridSpec spec = parse_grid_spec(text);
    const Graph grid = grid_graph(spec);
    if (g.dot) {
        out << graph_to_dot(grid, "grid");
        return kExitOk;
    }
    const GenusEstimate est = grid_bounds(spec);
    if (g.json) {
        print_json(out, {{"grid", spec.to_string()},
                         {"vertices", grid.num_vertices()},
                         {"edges", grid.num_edges()},
                         {"genus", estimate_to_json(est)},
                         {"graph", graph_to_json(grid)}});
        return kExitOk;
    }
    out << "grid " << spec.to_string() << ": " << grid.num_vertices() << " vertices, " << grid.num_edges()
        << " edges\n";
    out << "genus: " << estimate_to_json(est).dump() << '\n';
    return kExitOk;
}

// Bounds that need no search: planarity, girth Euler bound, maximum genus,
// and the closed forms when the argument is a grid or a cyclic group.
int cmd_bounds(const std::string& arg, const Globals& g, std::ostream& out) {
    std::optional<GridSpec> grid;
    if (starts_with(arg, "grid:")) {
        grid = parse_grid_spec(arg.substr(5));
    } else if (!std::filesystem::is_regular_file(arg) && !named_graph(arg)) {
        const GroupSpec spec = parse_group_spec(arg, g.order_cap);
        if (spec.is_cyclic() && spec.order() > 1) {
            std::vector<int> exps;
            for (const auto& f : spec.factors()) {
                exps.push_back(f.exponent);
            }
            grid = GridSpec(exps);
        }
    }
    const Graph graph = load_graph(arg, g);
    GenusEstimate est;
    if (graph.num_edges() > 0 && graph.is_connected()) {
        if (is_planar(graph)) {
            est = GenusEstimate::exactly(0, "planar (Boyer-Myrvold)");
        } else {
            est.raise_lower(1, "nonplanar (Boyer-Myrvold)");
            if (const auto gi = girth(graph)) {
                est.raise_lower(girth_euler_bound(graph.num_vertices(), graph.num_edges(), *gi),
                                "Euler bound with girth " + std::to_string(*gi));
            }
            est.lower_upper(static_cast<int>((graph.num_edges() - graph.num_vertices() + 1) / 2),
                            "maximum genus bound (E-V+1)/2");
        }
    } else if (graph.num_edges() == 0) {
        est = GenusEstimate::exactly(0, "no edges");
    } else {
        throw InputError("genus bounds need a connected graph");
    }
    if (grid && grid->dimension() > 0) {
        est.tighten(grid_bounds(*grid));
    }
    print_json(out, estimate_to_json(est));
    return kExitOk;
}

int cmd_classify(const std::string& text, const Globals& g, std::ostream& out) {
    const GroupSpec spec = parse_group_spec(text, g.order_cap);
    const AbelianClass c = classify_abelian(spec);
    std::optional<CyclicClass> cyclic;
    if (spec.is_cyclic() && spec.order() > 1) {
        std::vector<int> exps;
        for (const auto& f : spec.factors()) {
            exps.push_back(f.exponent);
        }
        cyclic = classify_cyclic(exps);
    }
    if (g.json) {
        json j = {{"group", spec.to_string()}, {"class", to_string(c)}};
        if (cyclic) {
            j["cyclic_class"] = cyclic->to_string();
        }
        print_json(out, j);
    } else {
        out << to_string(c) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    EmbeddingCertificate cert;
    try {
        cert = certificate_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw InputError("'" + path + "' is not a certificate: " + e.what());
    }
    if (auto bad = find_violation(cert)) {
        out << violation_to_json(*bad).dump() << '\n';
        return kExitDisagree;
    }
    const auto v = verify_certificate(cert);
    out << json{{"faces", v.faces}, {"genus", v.genus}}.dump() << '\n';
    return kExitOk;
}

int cmd_make_cert(const std::string& family, int n, std::ostream& out) {
    EmbeddingCertificate cert;
    if (family == "gn") {
        cert = gn_certificate(n);
    } else if (family == "hn") {
        cert = hn_certificate(n);
    } else if (family == "zppq") {
        cert = zppq_certificate(n);
    } else if (family == "fan-lift") {
        const auto p = static_cast<std::uint64_t>(n);
        const GroupSpec spec({{p, 2}, {p, 2}}, kNoOrderCap);
        cert = lift_certificate_to_lattice(surgered_gn_certificate(n), lattice_of(spec));
    } else {
        throw InputError("unknown certificate family '" + family + "'");
    }
    print_json(out, certificate_to_json(cert));
    return kExitOk;
}

struct SearchArgs {
    std::string graph;
    int target = 0;
    std::string mode = "heuristic";
    int restarts = 8;
    bool exact = false;
};

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
    const Graph graph = load_graph(a.graph, g);
    if (a.exact) {
        ExactGenusOptions eo;
        eo.budget = g.budget;
        eo.seed = g.seed;
        eo.restarts = a.restarts;
        eo.minors = {{"bowtie", double_k33(), 2}};
        const auto report = exact_genus_small(graph, eo);
        json j = {{"genus", estimate_to_json(report.estimate)}};
        j["certificate"] = report.certificate ? certificate_to_json(*report.certificate) : json(nullptr);
        if (report.minor) {
            j["minor"] = {{"pattern", report.minor->first}, {"witness", minor_witness_to_json(report.minor->second)}};
        }
        print_json(out, j);
        return report.estimate.exact() ? kExitOk : kExitInconclusive;
    }
    SearchConfig cfg;
    cfg.target_genus = a.target;
    cfg.seed = g.seed;
    cfg.budget = g.budget;
    cfg.restarts = a.restarts;
    if (a.mode == "exhaustive") {
        cfg.mode = SearchMode::Exhaustive;
    } else if (a.mode != "heuristic") {
        throw InputError("unknown search mode '" + a.mode + "'");
    }
    cfg.progress = [&](int restart, std::size_t best) {
        out << json{{"restart", restart}, {"best_faces", best}}.dump() << '\n';
    };
    const auto outcome = search_embedding(graph, cfg);
    if (outcome.status == SearchStatus::FoundCertificate) {
        out << certificate_to_json(*outcome.certificate).dump() << '\n';
        return kExitOk;
    }
    json status = {{"status", to_string(outcome.status)}, {"evaluations", outcome.evaluations}};
    if (outcome.verified) {
        status["best_genus"] = outcome.verified->genus;
    }
    out << status.dump() << '\n';
    return outcome.status == SearchStatus::ExhaustedNoEmbedding ? kExitDisagree : kExitInconclusive;
}

int cmd_minor(const std::string& host_arg, const std::string& pattern_arg, const Globals& g, std::ostream& out) {
    const Graph host = load_graph(host_arg, g);
    const Graph pattern = load_graph(pattern_arg, g);
    const auto result = find_minor(host, pattern, g.budget);
    json j = {{"status", to_string(result.status)}, {"nodes", result.nodes}};
    j["witness"] = result.witness ? minor_witness_to_json(*result.witness) : json(nullptr);
    print_json(out, j);
    switch (result.status) {
        case MinorSearchStatus::Found:
            return kExitOk;
        case MinorSearchStatus::ExhaustedAbsent:
            return kExitDisagree;
        case MinorSearchStatus::BudgetExceeded:
            break;
    }
    return kExitInconclusive;
}

int cmd_crosscheck(const Globals& g, std::ostream& out) {
    CrosscheckOptions opts;
    opts.order_limit = g.order_cap;
    opts.budget = g.budget;
    opts.seed = g.seed;
    const auto report = crosscheck(default_roster(), opts);
    if (g.json) {
        print_json(out, crosscheck_to_json(report));
    } else {
        for (const auto& row : report.rows) {
            out << row.group << "  predicted " << to_string(row.predicted) << "  genus "
                << estimate_to_json(row.estimate).dump() << "  " << to_string(row.status);
            for (const auto& w : row.witnesses) {
                out << ' ' << w;
            }
            out << '\n';
        }
    }
    return report.exit_code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subgroup-lattice graphs of finite abelian groups and their genus", "latgenus"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "random seed for searches");
    app.add_option("--budget", g.budget, "search budget (evaluations or nodes)")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--dot", g.dot, "Graphviz output");
    app.add_option("--order-cap", g.order_cap, "largest group order accepted");

    std::string group_arg;
    auto* group = app.add_subcommand("group", "subgroup census and lattice");
    group->add_option("group", group_arg, "group, e.g. Z4xZ4")->required();

    std::string grid_arg;
    auto* grid = app.add_subcommand("grid", "grid graph and its genus bounds");
    grid->add_option("exponents", grid_arg, "e.g. 3,2,1")->required();

    std::string bounds_arg;
    auto* bounds = app.add_subcommand("bounds", "genus bounds without search");
    bounds->add_option("graph", bounds_arg, "group, grid:e1,..., named graph or graph JSON file")->required();

    std::string classify_arg;
    auto* classify = app.add_subcommand("classify", "predicted genus class of a group");
    classify->add_option("group", classify_arg)->required();

    std::string verify_arg;
    auto* verify = app.add_subcommand("verify", "check a face certificate");
    verify->add_option("file", verify_arg)->required();

    std::string family;
    int family_n = 0;
    auto* make_cert = app.add_subcommand("make-cert", "emit a certificate family member");
    make_cert->add_option("family", family, "gn | hn | zppq | fan-lift")
        ->required()
        ->check(CLI::IsMember({"gn", "hn", "zppq", "fan-lift"}));
    make_cert->add_option("n", family_n, "n for gn/hn, p for zppq/fan-lift")->required();

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "search for an embedding");
    search->add_option("graph", sa.graph)->required();
    search->add_option("--target", sa.target, "target genus");
    search->add_option("--mode", sa.mode, "heuristic | exhaustive")
        ->check(CLI::IsMember({"heuristic", "exhaustive"}));
    search->add_option("--restarts", sa.restarts)->check(CLI::PositiveNumber);
    search->add_flag("--exact", sa.exact, "run the full bound/search pipeline");

    std::string host_arg, pattern_arg;
    auto* minor = app.add_subcommand("minor", "search for a minor");
    minor->add_option("host", host_arg)->required();
    minor->add_option("pattern", pattern_arg, "bowtie, K3,3, K5, or any graph argument")->required();

    app.add_subcommand("crosscheck", "classification cross-check over the built-in roster");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*group) return cmd_group(group_arg, g, out);
        if (*grid) return cmd_grid(grid_arg, g, out);
        if (*bounds) return cmd_bounds(bounds_arg, g, out);
        if (*classify) return cmd_classify(classify_arg, g, out);
        if (*verify) return cmd_verify(verify_arg, out);
        if (*make_cert) return cmd_make_cert(family, family_n, out);
        if (*search) return cmd_search(sa, g, out);
        if (*minor) return cmd_minor(host_arg, pattern_arg, g, out);
        return cmd_crosscheck(g, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace latgenus
