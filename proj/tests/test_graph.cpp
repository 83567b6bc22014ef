#include "doctest.h"

#include "latgenus/errors.hpp"
#include "latgenus/generators.hpp"
#include "latgenus/graph.hpp"
#include "latgenus/group.hpp"
#include "latgenus/structure.hpp"

using namespace latgenus;

TEST_CASE("graph basics") {
    Graph g;
    const auto a = g.add_vertex("a");
    const auto b = g.add_vertex("b");
    g.add_vertex("c");
    CHECK(g.add_edge(a, b));
    CHECK_FALSE(g.add_edge("b", "a"));
    CHECK(g.num_edges() == 1);
    CHECK_FALSE(g.is_connected());
    g.add_edge("c", "a");
    CHECK(g.is_connected());
    CHECK(g.neighbors(a) == std::vector<VertexId>{1, 2});
    CHECK_THROWS_AS(g.add_vertex("a"), InputError);
    CHECK_THROWS_AS(g.add_edge(a, a), InputError);
    CHECK_THROWS_AS(g.at("zz"), InputError);
}

TEST_CASE("graph JSON round-trip and DOT") {
    const Graph k = complete_bipartite(2, 3);
    const Graph back = graph_from_json(graph_to_json(k));
    CHECK(back.labels() == k.labels());
    CHECK(back.edges() == k.edges());
    const std::string dot = graph_to_dot(k, "k23");
    CHECK(dot.find("graph k23") != std::string::npos);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"vertices", {"a"}}, {"edges", {{"a", "b"}}}}), InputError);
}

TEST_CASE("generator sizes") {
    CHECK(path_graph(4).num_edges() == 4);
    CHECK(cycle_graph(5).num_edges() == 5);
    CHECK(complete_graph(6).num_edges() == 15);
    CHECK(complete_bipartite(6, 4).num_edges() == 24);
    const Graph bowtie = double_k33();
    CHECK(bowtie.num_vertices() == 11);
    CHECK(bowtie.num_edges() == 18);
    const Graph grid = grid_graph(GridSpec({3, 2, 1}));
    CHECK(grid.num_vertices() == 24);
    CHECK(grid.num_edges() == 3 * 3 * 2 + 2 * 4 * 2 + 1 * 4 * 3);
    CHECK(gn_graph(6).num_vertices() == 15);
    CHECK(gn_graph(6).num_edges() == 30);
    CHECK(zppq_graph(3).num_vertices() == 12);
    CHECK(parse_grid_spec("1,3,2").to_string() == "3,2,1");
}

TEST_CASE("girth, blocks and planarity") {
    CHECK_FALSE(girth(path_graph(3)).has_value());
    CHECK(*girth(complete_graph(4)) == 3);
    CHECK(*girth(complete_bipartite(3, 3)) == 4);
    CHECK(*girth(cycle_graph(7)) == 7);

    const auto bd = block_decomposition(double_k33());
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<std::string>{"hub"});
    CHECK(block_decomposition(path_graph(3)).blocks.size() == 3);

    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(grid_graph(GridSpec({5, 4}))));
}

TEST_CASE("isomorphism") {
    const Graph c = cycle_graph(6);
    const Graph k = complete_bipartite(3, 3);
    CHECK_FALSE(is_isomorphic(c, k));
    std::vector<std::string> names;
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
        names.push_back("x" + std::to_string(5 - v));
    }
    const Graph r = relabeled(k, names);
    const auto map = find_isomorphism(k, r);
    REQUIRE(map.has_value());
    for (auto [u, v] : k.edges()) {
        CHECK(r.has_edge((*map)[u], (*map)[v]));
    }
}

TEST_CASE("cyclic lattices are grid graphs") {
    const std::vector<std::pair<const char*, std::vector<int>>> cases = {
        {"Z8", {3}},           {"Z72", {3, 2}},          {"Z30", {1, 1, 1}},     {"Z60", {2, 1, 1}},
        {"Z180", {2, 2, 1}},   {"Z360", {3, 2, 1}},      {"Z1080", {3, 3, 1}},   {"Z210", {1, 1, 1, 1}},
        {"Z900", {2, 2, 2}},   {"Z420", {2, 1, 1, 1}},   {"Z2310", {1, 1, 1, 1, 1}}, {"Z1800", {3, 2, 2}},
    };
    for (const auto& [group, exps] : cases) {
        CAPTURE(group);
        CHECK(is_isomorphic(lattice_of(parse_group_spec(group)), grid_graph(GridSpec(exps))));
    }
}

TEST_CASE("lattice shape does not depend on the auxiliary prime") {
    const std::vector<std::vector<const char*>> classes = {
        {"Z2xZ2xZ3", "Z2xZ2xZ5", "Z2xZ2xZ7"},
        {"Z4xZ2xZ3", "Z4xZ2xZ5", "Z4xZ2xZ7"},
        {"Z3xZ3xZ2", "Z3xZ3xZ5", "Z3xZ3xZ7"},
        {"Z3xZ3xZ4", "Z3xZ3xZ25"},
        {"Z180", "Z300", "Z588"},
    };
    for (const auto& cls : classes) {
        const Graph first = lattice_of(parse_group_spec(cls[0]));
        for (std::size_t i = 1; i < cls.size(); ++i) {
            CAPTURE(cls[i]);
            CHECK(is_isomorphic(first, lattice_of(parse_group_spec(cls[i]))));
        }
    }
}

TEST_CASE("lattices that are not trees have girth at least 4") {
    for (const char* group : {"Z4xZ4", "Z8xZ4", "Z9xZ9", "Z2xZ2xZ3", "Z4xZ2xZ3", "Z3xZ3xZ2", "Z16xZ4", "Z8xZ8",
                              "Z2xZ2xZ2", "Z2xZ2xZ3xZ3", "Z2310", "Z27xZ9", "Z5xZ5xZ2", "Z25xZ25", "Z72"}) {
        CAPTURE(group);
        const auto gi = girth(lattice_of(parse_group_spec(group)));
        REQUIRE(gi.has_value());
        CHECK(*gi >= 4);
    }
    CHECK_FALSE(girth(lattice_of(parse_group_spec("Z27"))).has_value());
}

TEST_CASE("lattice sizes used by the Euler eliminations") {
    const std::vector<std::tuple<const char*, std::size_t, std::size_t>> cases = {
        {"Z2xZ2xZ3xZ3", 30, 76}, {"Z4xZ4xZ3", 30, 63}, {"Z2xZ2xZ3xZ5", 20, 44}, {"Z3xZ3xZ2xZ5", 24, 56},
    };
    for (const auto& [group, v, e] : cases) {
        const Graph l = lattice_of(parse_group_spec(group));
        CAPTURE(group);
        CHECK(l.num_vertices() == v);
        CHECK(l.num_edges() == e);
    }
    const Graph l = lattice_of(parse_group_spec("Z25xZ25"));
    CHECK(l.num_vertices() == 45);
    CHECK(l.num_edges() == 84);
}
