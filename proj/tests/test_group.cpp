#include "doctest.h"

#include "latgenus/errors.hpp"
#include "latgenus/group.hpp"
#include "latgenus/structure.hpp"

#include "oracles.hpp"

using namespace latgenus;

TEST_CASE("group expressions parse into canonical prime-power form") {
    CHECK(parse_group_spec("Z12").to_string() == "Z3xZ4");
    CHECK(parse_group_spec("Z2xZ4") == parse_group_spec("Z4xZ2"));
    CHECK(parse_group_spec("Z6xZ2") == parse_group_spec("Z2xZ3xZ2"));
    CHECK(parse_group_spec("Z72").is_cyclic());
    CHECK_FALSE(parse_group_spec("Z2xZ2").is_cyclic());
    CHECK(parse_group_spec("Z30030", kNoOrderCap).order() == 30030);

    CHECK_THROWS_AS(parse_group_spec(""), InputError);
    CHECK_THROWS_AS(parse_group_spec("Z3x"), InputError);
    CHECK_THROWS_AS(parse_group_spec("Y3"), InputError);
    CHECK_THROWS_AS(parse_group_spec("Z1"), InputError);
    CHECK_THROWS_AS(parse_group_spec("Z4096xZ2"), OrderCapExceeded);
    CHECK_THROWS_AS(parse_group_spec("Z64", 32), OrderCapExceeded);
}

TEST_CASE("factorization and primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == PrimePower{2, 3});
    CHECK(f[1] == PrimePower{3, 2});
    CHECK(f[2] == PrimePower{5, 1});
}

TEST_CASE("element arithmetic round-trips") {
    AbelianGroup g(parse_group_spec("Z4xZ6"));
    CHECK(g.order() == 24);
    for (ElementIndex a = 0; a < g.order(); ++a) {
        CHECK(g.encode(g.decode(a)) == a);
        CHECK(g.add(a, g.negate(a)) == 0);
    }
    CHECK(g.generated({}).size() == 1);
}

TEST_CASE("subgroup counts") {
    // Z4xZ4 and Z25xZ25 from the rank-2 counting formula; cyclic from the
    // divisor count.
    CHECK(enumerate_subgroups(parse_group_spec("Z4xZ4")).size() == 15);
    CHECK(enumerate_subgroups(parse_group_spec("Z72")).size() == 12);
    const auto chain = enumerate_subgroups(parse_group_spec("Z8"));
    CHECK(chain.size() == 4);
    const Graph l8 = build_lattice(chain);
    CHECK(l8.num_edges() == 3);
    CHECK(enumerate_subgroups(parse_group_spec("Z2xZ2xZ2")).size() == 16);
    CHECK(enumerate_subgroups(parse_group_spec("Z3xZ3")).size() == 3 + 3);
}

TEST_CASE("rank-2 subgroup counts match the gcd-sum formula") {
    for (auto [m, n] : std::vector<std::pair<long, long>>{
             {4, 4}, {8, 4}, {8, 8}, {16, 4}, {9, 9}, {27, 9}, {25, 25}, {12, 6}, {6, 10}, {2, 18}}) {
        const auto spec = parse_group_spec("Z" + std::to_string(m) + "xZ" + std::to_string(n));
        CAPTURE(spec.to_string());
        CHECK(static_cast<long>(enumerate_subgroups(spec).size()) == oracle::goursat_count(m, n));
    }
}

TEST_CASE("lattices match a brute-force subset enumeration") {
    const std::vector<std::vector<int>> groups = {
        {2, 2}, {4, 2}, {2, 2, 2}, {4, 4}, {8, 2}, {2, 2, 2, 2}, {3, 3}, {2, 2, 3},
        {12}, {16}, {9}, {2, 6}, {4, 2, 2}, {5}, {14}, {15},
    };
    for (const auto& moduli : groups) {
        std::string text;
        for (int m : moduli) {
            text += (text.empty() ? "Z" : "xZ") + std::to_string(m);
        }
        CAPTURE(text);
        const auto subs = enumerate_subgroups(parse_group_spec(text));
        const auto brute = oracle::brute_subgroups(moduli);
        REQUIRE(subs.size() == brute.size());

        std::map<std::size_t, std::size_t> brute_census;
        for (const auto& s : brute) {
            ++brute_census[s.size()];
        }
        CHECK(subgroup_census(subs) == brute_census);

        Graph expected;
        for (std::size_t i = 0; i < brute.size(); ++i) {
            expected.add_vertex("b" + std::to_string(i));
        }
        for (auto [i, j] : oracle::covering_pairs(brute)) {
            expected.add_edge(i, j);
        }
        const Graph lattice = build_lattice(subs);
        CHECK(lattice.num_edges() == expected.num_edges());
        CHECK(is_isomorphic(lattice, expected));
    }
}

TEST_CASE("subgroup ids and JSON") {
    const auto subs = enumerate_subgroups(parse_group_spec("Z2xZ2"));
    REQUIRE(subs.size() == 5);
    CHECK(subs.subgroups().front().id() == "S1#0");
    CHECK(subs.subgroups().back().id() == "S4#0");
    const auto j = subgroups_to_json(subs);
    CHECK(j.at("subgroups").size() == 5);
    CHECK(j.at("group") == "Z2xZ2");
    for (const auto& s : subs.subgroups()) {
        CHECK(s.is_subset_of(subs.subgroups().back()));
    }
}
