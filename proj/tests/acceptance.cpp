// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "latgenus/crosscheck.hpp"
#include "latgenus/embedding.hpp"
#include "latgenus/formulas.hpp"
#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/minor.hpp"
#include "latgenus/search.hpp"
#include "latgenus/structure.hpp"

#include "goldens.hpp"
#include "oracles.hpp"

using namespace latgenus;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = "failed: " + what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < limit_s;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %d %s: %.2f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id, name, dt, limit_s,
                out.detail.empty() ? "" : "; ", out.detail.c_str());
    std::fflush(stdout);
}

Outcome formula_goldens() {
    Outcome o;
    int checked = 0;
    for (const auto& row : goldens::genus_lists()) {
        const GridSpec spec(row.grid);
        if (row.grid == std::vector<int>{3, 3, 2}) {
            // Upper end from the recurrence; the lower end needs a minor
            // (checked by the slow test suite).
            o.require(grid_upper_bound(spec) == 4, "(3,3,2) upper bound");
            ++checked;
            continue;
        }
        const auto v = goldens::closed_form(row.grid);
        o.require(v && *v == row.genus, "closed form for " + spec.to_string());
        ++checked;
    }
    // Genus zero: k <= 2, and k = 3 with at most one parameter above 1.
    for (int a = 1; a <= 8; ++a) {
        o.require(genus_grid_e1_e2_1(a, 1) == 0, "(a,1,1)");
        o.require(grid_bounds(GridSpec({a, a})).exact() && grid_bounds(GridSpec({a, a})).lower == 0, "(a,a)");
        if (a % 2 == 1) {
            o.require(white_genus(GridSpec({a, 1, 1})) == 0, "white (a,1,1)");
        }
        checked += 2;
    }
    o.require(genus_hypercube(4) == 1 && genus_n111(1) == 1, "hypercube");
    if (o.ok) {
        o.detail = std::to_string(checked) + " tuples";
    }
    return o;
}

Outcome euler_eliminations() {
    Outcome o;
    struct Case {
        const char* group;
        std::int64_t v, e;
        Rational value;
    };
    const std::vector<Case> cases = {{"Z2xZ2xZ3xZ3", 30, 76, Rational(5)},
                                     {"Z4xZ4xZ3", 30, 63, Rational(7, 4)},
                                     {"Z2xZ2xZ3xZ5", 20, 44, Rational(2)},
                                     {"Z3xZ3xZ2xZ5", 24, 56, Rational(3)}};
    std::ostringstream s;
    for (const auto& c : cases) {
        const Graph l = lattice_of(parse_group_spec(c.group));
        const auto v = static_cast<std::int64_t>(l.num_vertices());
        const auto e = static_cast<std::int64_t>(l.num_edges());
        o.require(v == c.v && e == c.e, std::string(c.group) + " size");
        const auto gi = girth(l);
        o.require(gi && *gi >= 4, std::string(c.group) + " girth");
        const auto b = euler_lower_bound(v, e);
        o.require(b.value == c.value, std::string(c.group) + " value");
        s << "(" << v << "," << e << ")->" << b.value.numerator();
        if (b.value.denominator() != 1) {
            s << "/" << b.value.denominator();
        }
        s << " ";
    }
    if (o.ok) {
        o.detail = s.str();
    }
    return o;
}

Outcome certificate_families() {
    Outcome o;
    for (auto [n, g] : std::vector<std::pair<int, int>>{{2, 0}, {6, 1}, {10, 2}, {14, 3}}) {
        const auto v = verify_certificate(gn_certificate(n));
        o.require(v.genus == g && v.faces == static_cast<std::size_t>(5 * n / 2), "gn " + std::to_string(n));
    }
    for (auto [n, g] : std::vector<std::pair<int, int>>{{5, 2}, {9, 4}, {13, 6}}) {
        const auto v = verify_certificate(hn_certificate(n));
        o.require(v.genus == g && v.faces == static_cast<std::size_t>(5 * n + 2), "hn " + std::to_string(n));
    }
    for (auto [p, g] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {7, 3}}) {
        const auto v = verify_certificate(zppq_certificate(p));
        o.require(v.genus == g && v.faces == static_cast<std::size_t>(2 * p + 4), "zppq " + std::to_string(p));
    }
    if (o.ok) {
        o.detail = "10 certificates";
    }
    return o;
}

Outcome surgery() {
    Outcome o;
    const auto cert = surgered_gn_certificate(5);
    o.require(cert.graph.num_vertices() == 45 && cert.graph.num_edges() == 84, "45 vertices, 84 edges");
    const Graph lattice = lattice_of(parse_group_spec("Z25xZ25"));
    o.require(lattice.num_vertices() == 45 && lattice.num_edges() == 84, "lattice size");
    o.require(is_isomorphic(cert.graph, lattice), "isomorphic to the Z25xZ25 lattice");
    o.require(verify_certificate(cert).genus == 1, "genus 1");
    const auto lifted = lift_certificate_to_lattice(cert, lattice);
    o.require(verify_certificate(lifted).genus == 1, "lifted certificate genus 1");
    o.require(!is_planar(lattice), "nonplanar");
    if (o.ok) {
        o.detail = "45/84, genus 1 on the lattice itself";
    }
    return o;
}

Outcome exact_small() {
    Outcome o;
    ExactGenusOptions opts;
    opts.budget = 1'000'000;
    opts.seed = 1;
    int count = 0;
    for (const char* g : {"Z4xZ4", "Z9xZ9", "Z8xZ4", "Z2xZ2xZ3", "Z2xZ2xZ5", "Z4xZ2xZ3", "Z4xZ2xZ5", "Z3xZ3xZ2"}) {
        const Graph l = lattice_of(parse_group_spec(g));
        const auto r = exact_genus_small(l, opts);
        o.require(r.estimate.exact() && r.estimate.lower == 1, std::string(g) + " exact 1");
        o.require(r.certificate && verify_certificate(*r.certificate).genus == 1, std::string(g) + " certificate");
        ++count;
    }
    if (o.ok) {
        o.detail = std::to_string(count) + " lattices at genus 1";
    }
    return o;
}

Outcome minor_witnesses() {
    Outcome o;
    const std::int64_t budget = 10'000'000;
    std::ostringstream s;
    auto find = [&](const char* group, const Graph& pattern, const char* name) {
        const Graph l = lattice_of(parse_group_spec(group));
        const auto r = find_minor(l, pattern, budget);
        const bool found = r.status == MinorSearchStatus::Found &&
                           !check_minor_witness(l, pattern, *r.witness).has_value();
        o.require(found, std::string(name) + " in " + group);
        s << group << ":" << r.nodes << " ";
    };
    for (const char* g : {"Z16xZ4", "Z8xZ8", "Z8xZ2xZ3", "Z9xZ3xZ2", "Z2xZ2xZ9"}) {
        find(g, double_k33(), "bowtie");
    }
    find("Z3xZ3xZ4", complete_bipartite(6, 4), "K6,4");
    // The patterns' genus, from block additivity and the bipartite formula.
    const auto bowtie = exact_genus_small(double_k33());
    o.require(bowtie.estimate.exact() && bowtie.estimate.lower == 2, "bowtie genus 2");
    o.require(genus_complete_bipartite(6, 4) == 2, "K6,4 genus 2");
    if (o.ok) {
        o.detail = "nodes " + s.str();
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto sample = oracle::graph_sample(200, 5000000);
    int nonplanar = 0;
    for (const auto& g : sample) {
        const int brute = oracle::brute_genus(g);
        int found = -1;
        for (int target = 0; found < 0; ++target) {
            SearchConfig cfg;
            cfg.mode = SearchMode::Exhaustive;
            cfg.target_genus = target;
            cfg.budget = 100'000'000;
            const auto out = search_embedding(g, cfg);
            if (out.status == SearchStatus::BudgetExceeded) {
                o.require(false, "exhaustive search ran out of budget");
                return o;
            }
            if (out.status == SearchStatus::FoundCertificate) {
                found = out.verified->genus;
            }
        }
        o.require(found == brute, "genus mismatch on " + graph_to_json(g).dump());
        const auto r = exact_genus_small(g);
        o.require(r.estimate.exact() && r.estimate.lower == brute, "exact_genus_small mismatch");
        nonplanar += brute > 0 ? 1 : 0;
    }
    if (o.ok) {
        o.detail = std::to_string(sample.size()) + " graphs, " + std::to_string(nonplanar) + " nonplanar";
    }
    return o;
}

Outcome classification_gate() {
    Outcome o;
    const auto report = crosscheck(default_roster(), CrosscheckOptions{});
    int agree[3] = {0, 0, 0};
    for (const auto& row : report.rows) {
        o.require(row.status == RowStatus::Agree, row.group + " " + to_string(row.status));
        if (row.status == RowStatus::Agree) {
            ++agree[static_cast<int>(row.predicted)];
        }
    }
    o.require(agree[2] >= 10, "at least ten genus >= 2 representatives");
    o.require(report.exit_code() == 0, "exit code 0");
    if (o.ok) {
        o.detail = "agree: genus0 " + std::to_string(agree[0]) + ", genus1 " + std::to_string(agree[1]) +
                   ", >=2 " + std::to_string(agree[2]);
    }
    return o;
}

Outcome property_suites() {
    Outcome o;
    const std::vector<std::pair<const char*, std::vector<int>>> cyclic = {
        {"Z8", {3}},         {"Z72", {3, 2}},        {"Z30", {1, 1, 1}},     {"Z60", {2, 1, 1}},
        {"Z180", {2, 2, 1}}, {"Z360", {3, 2, 1}},    {"Z1080", {3, 3, 1}},   {"Z210", {1, 1, 1, 1}},
        {"Z900", {2, 2, 2}}, {"Z420", {2, 1, 1, 1}}, {"Z2310", {1, 1, 1, 1, 1}}, {"Z1800", {3, 2, 2}},
    };
    for (const auto& [g, e] : cyclic) {
        o.require(is_isomorphic(lattice_of(parse_group_spec(g)), grid_graph(GridSpec(e))),
                  std::string(g) + " lattice is a grid");
    }
    int girth_checked = 0;
    for (const auto& entry : default_roster()) {
        const Graph l = lattice_of(parse_group_spec(entry.group));
        if (const auto gi = girth(l)) {
            o.require(*gi >= 4, entry.group + " girth");
            ++girth_checked;
        }
    }
    // One mutation per reachable invariant.
    const auto good = gn_certificate(6);
    using K = CertificateViolation::Kind;
    std::vector<std::pair<K, EmbeddingCertificate>> mutants;
    {
        auto c = good;
        c.graph.add_vertex("island");
        mutants.emplace_back(K::Disconnected, c);
    }
    {
        auto c = good;
        c.faces.emplace_back();
        mutants.emplace_back(K::EmptyFace, c);
    }
    {
        auto c = good;
        c.faces[0][0] = "nowhere";
        mutants.emplace_back(K::UnknownVertex, c);
    }
    {
        auto c = good;
        c.faces[0] = {"a", "c"};
        mutants.emplace_back(K::NonEdge, c);
    }
    {
        auto c = good;
        c.faces.push_back(c.faces[0]);
        mutants.emplace_back(K::DartRepeated, c);
    }
    {
        auto c = good;
        c.faces.pop_back();
        mutants.emplace_back(K::DartMissing, c);
    }
    {
        Graph g;
        for (const char* x : {"v", "a", "b", "c", "d"}) {
            g.add_vertex(x);
        }
        for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
                 {"v", "a"}, {"a", "b"}, {"b", "v"}, {"v", "c"}, {"c", "d"}, {"d", "v"}}) {
            g.add_edge(x, y);
        }
        mutants.emplace_back(K::RotationNotSingleCycle,
                             EmbeddingCertificate{g, {{"v", "a", "b"}, {"v", "b", "a"}, {"v", "c", "d"}, {"v", "d", "c"}}});
    }
    for (const auto& [kind, cert] : mutants) {
        const auto v = find_violation(cert);
        o.require(v && v->kind == kind, std::string("mutation ") + to_string(kind));
    }
    o.require(!find_violation(good).has_value(), "unmutated certificate accepted");
    if (o.ok) {
        o.detail = "12 grids, " + std::to_string(girth_checked) + " girth checks, " +
                   std::to_string(mutants.size()) + " mutations rejected";
    }
    return o;
}

}  // namespace

int main() {
    criterion(1, "formula goldens", 1, formula_goldens);
    criterion(2, "Euler eliminations", 1, euler_eliminations);
    criterion(3, "certificate families", 1, certificate_families);
    criterion(4, "surgery Z25xZ25", 5, surgery);
    criterion(5, "exact small genus", 60, exact_small);
    criterion(6, "lower-bound minor witnesses", 120, minor_witnesses);
    criterion(7, "oracle equivalence", 120, oracle_equivalence);
    criterion(8, "classification gate", 300, classification_gate);
    criterion(9, "property suites", 10, property_suites);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
