#include "doctest.h"

#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/search.hpp"
#include "latgenus/structure.hpp"

#include "oracles.hpp"

using namespace latgenus;

namespace {

int exhaustive_genus(const Graph& g) {
    for (int target = 0;; ++target) {
        SearchConfig cfg;
        cfg.mode = SearchMode::Exhaustive;
        cfg.target_genus = target;
        cfg.budget = 100'000'000;
        const auto out = search_embedding(g, cfg);
        REQUIRE(out.status != SearchStatus::BudgetExceeded);
        if (out.status == SearchStatus::FoundCertificate) {
            REQUIRE(out.verified->genus <= target);
            return out.verified->genus;
        }
    }
}

}  // namespace

TEST_CASE("K33 exhaustive search") {
    const Graph k = complete_bipartite(3, 3);
    SearchConfig cfg;
    cfg.mode = SearchMode::Exhaustive;
    cfg.target_genus = 0;
    CHECK(search_embedding(k, cfg).status == SearchStatus::ExhaustedNoEmbedding);
    cfg.target_genus = 1;
    const auto out = search_embedding(k, cfg);
    REQUIRE(out.status == SearchStatus::FoundCertificate);
    CHECK(verify_certificate(*out.certificate).genus == 1);
}

TEST_CASE("planar grid found at genus zero by the heuristic") {
    SearchConfig cfg;
    cfg.target_genus = 0;
    const auto out = search_embedding(grid_graph(GridSpec({2, 2})), cfg);
    REQUIRE(out.status == SearchStatus::FoundCertificate);
    CHECK(out.verified->genus == 0);
}

TEST_CASE("heuristic search is reproducible") {
    const Graph g = lattice_of(parse_group_spec("Z8xZ4"));
    SearchConfig cfg;
    cfg.target_genus = 1;
    cfg.seed = 7;
    const auto a = search_embedding(g, cfg);
    const auto b = search_embedding(g, cfg);
    REQUIRE(a.status == SearchStatus::FoundCertificate);
    CHECK(b.status == a.status);
    CHECK(b.evaluations == a.evaluations);
    CHECK(certificate_to_json(*a.certificate).dump() == certificate_to_json(*b.certificate).dump());
}

TEST_CASE("search preconditions") {
    SearchConfig cfg;
    CHECK_THROWS_AS(search_embedding(Graph{}, cfg), InputError);
    Graph two;
    two.add_vertex("a");
    two.add_vertex("b");
    CHECK_THROWS_AS(search_embedding(two, cfg), InputError);
    cfg.budget = 0;
    CHECK_THROWS_AS(search_embedding(complete_graph(4), cfg), InputError);
    cfg.budget = 10;
    cfg.mode = SearchMode::Exhaustive;
    cfg.exhaustive_threshold = 10;
    CHECK_THROWS_AS(search_embedding(complete_graph(6), cfg), InputError);
    CHECK(rotation_space_size(complete_graph(5)) == 6.0 * 6 * 6 * 6 * 6);
}

TEST_CASE("girth Euler bound") {
    CHECK(girth_euler_bound(6, 9, 4) == 1);    // K33
    CHECK(girth_euler_bound(5, 10, 3) == 1);   // K5
    CHECK(girth_euler_bound(7, 21, 3) == 1);   // K7
    CHECK(girth_euler_bound(8, 28, 3) == 2);   // K8
    CHECK(girth_euler_bound(30, 76, 4) == 5);
    CHECK(girth_euler_bound(4, 3, 3) == 0);
}

TEST_CASE("exhaustive genus matches brute-force enumeration on small graphs") {
    const auto sample = oracle::graph_sample(40, 5000);
    for (const auto& g : sample) {
        CAPTURE(graph_to_json(g).dump());
        const int brute = oracle::brute_genus(g);
        CHECK(exhaustive_genus(g) == brute);
        const auto report = exact_genus_small(g);
        CHECK(report.estimate.exact());
        CHECK(report.estimate.lower == brute);
    }
    CHECK(oracle::brute_genus(complete_graph(5)) == 1);
    CHECK(exhaustive_genus(complete_graph(5)) == 1);
    CHECK(exhaustive_genus(complete_graph(6)) == 1);
}

TEST_CASE("exact genus of small lattices") {
    for (const char* group : {"Z4xZ4", "Z3xZ3xZ2", "Z2xZ2xZ3"}) {
        CAPTURE(group);
        const auto report = exact_genus_small(lattice_of(parse_group_spec(group)));
        CHECK(report.estimate.exact());
        CHECK(report.estimate.lower == 1);
        REQUIRE(report.certificate.has_value());
        CHECK(verify_certificate(*report.certificate).genus == 1);
    }
    const auto planar = exact_genus_small(lattice_of(parse_group_spec("Z8xZ2")));
    CHECK(planar.estimate.exact());
    CHECK(planar.estimate.lower == 0);
}

TEST_CASE("bowtie genus by block additivity") {
    const auto report = exact_genus_small(double_k33());
    CHECK(report.estimate.exact());
    CHECK(report.estimate.lower == 2);
    REQUIRE(report.certificate.has_value());
    CHECK(verify_certificate(*report.certificate).genus == 2);
}

TEST_CASE("genus never drops when edges are added") {
    const auto sample = oracle::graph_sample(30, 3000);
    for (const auto& g : sample) {
        const int base = exact_genus_small(g).estimate.lower;
        for (VertexId u = 0; u < g.num_vertices(); ++u) {
            bool added = false;
            for (VertexId v = u + 1; v < g.num_vertices() && !added; ++v) {
                if (g.has_edge(u, v)) {
                    continue;
                }
                Graph bigger = g;
                bigger.add_edge(u, v);
                if (oracle::rotation_count(bigger) > 1e6) {
                    continue;
                }
                const auto r = exact_genus_small(bigger);
                REQUIRE(r.estimate.exact());
                CHECK(r.estimate.lower >= base);
                added = true;
            }
            if (added) {
                break;
            }
        }
    }
}
