#include "doctest.h"

#include "latgenus/errors.hpp"
#include "latgenus/formulas.hpp"
#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/structure.hpp"

#include "goldens.hpp"

using namespace latgenus;

TEST_CASE("published genus lists") {
    for (const auto& row : goldens::genus_lists()) {
        CAPTURE(GridSpec(row.grid).to_string());
        if (row.grid == std::vector<int>{3, 3, 2}) {
            // No closed form; the recurrence gives the upper end.
            CHECK(grid_upper_bound(GridSpec(row.grid)) == 4);
            CHECK(grid_lower_bound(GridSpec(row.grid)) == 3);
            continue;
        }
        const auto v = goldens::closed_form(row.grid);
        REQUIRE(v.has_value());
        CHECK(*v == row.genus);
        CHECK(classify_cyclic(row.grid) == CyclicClass{CyclicClass::Kind::Genus, row.genus, 0});
    }
}

TEST_CASE("genus zero grids") {
    for (int a = 1; a <= 6; ++a) {
        CHECK(genus_grid_e1_e2_1(a, 1) == 0);
        if (a % 2 == 1) {
            CHECK(white_genus(GridSpec({a, 1, 1})) == 0);
        }
        for (int b = 1; b <= a; ++b) {
            CHECK(is_planar(grid_graph(GridSpec({a, b}))));
            CHECK(grid_bounds(GridSpec({a, b})).exact());
            CHECK(grid_bounds(GridSpec({a, b})).lower == 0);
        }
        CHECK(is_planar(grid_graph(GridSpec({a, 1, 1}))));
    }
    CHECK(genus_hypercube(3) == 0);
}

TEST_CASE("closed forms agree where they overlap") {
    for (int n = 1; n <= 9; n += 2) {
        CHECK(genus_n111(n) == white_genus(GridSpec({n, 1, 1, 1})));
    }
    for (int k = 3; k <= 8; ++k) {
        CHECK(genus_hypercube(k) == white_genus(GridSpec(std::vector<int>(static_cast<std::size_t>(k), 1))));
    }
    CHECK(white_genus(GridSpec({3, 3, 3})) == 5);
    CHECK(genus_hypercube(5) == 5);
    CHECK(genus_hypercube(6) == 17);
    CHECK_THROWS_AS(white_genus(GridSpec({2, 2, 1})), InputError);
}

TEST_CASE("Euler lower bound") {
    const auto b1 = euler_lower_bound(30, 76);
    CHECK(b1.value == Rational(5));
    CHECK(b1.genus == 5);
    const auto b2 = euler_lower_bound(30, 63);
    CHECK(b2.value == Rational(7, 4));
    CHECK(b2.genus == 2);
    CHECK(euler_lower_bound(20, 44).value == Rational(2));
    CHECK(euler_lower_bound(24, 56).value == Rational(3));
    CHECK(euler_lower_bound(10, 10).genus == 0);
    CHECK(ceil_rational(Rational(-3, 2)) == -1);
    CHECK(ceil_rational(Rational(7, 4)) == 2);
    // grid_euler_value is the same quantity written through the exponents.
    const GridSpec s({3, 2, 1});
    const Graph g = grid_graph(s);
    CHECK(grid_euler_value(s) == euler_lower_bound(static_cast<std::int64_t>(g.num_vertices()),
                                                   static_cast<std::int64_t>(g.num_edges()))
                                     .value);
}

TEST_CASE("grid bounds") {
    const auto a = grid_bounds(GridSpec({3, 3, 3}));
    CHECK(a.exact());
    CHECK(a.lower == 5);
    const auto b = grid_bounds(GridSpec({2, 2, 1, 1}));
    CHECK_FALSE(b.exact());
    CHECK(b.lower == 4);
    CHECK(b.upper == 6);
    const auto c = grid_bounds(GridSpec({4, 4, 4, 4}));
    CHECK(c.lower >= 5);
    CHECK(grid_upper_bound(GridSpec({3, 3, 2})) == 4);
    CHECK(grid_bounds(GridSpec({5, 3, 1})).lower == 2);
}

TEST_CASE("complete bipartite genus") {
    CHECK(genus_complete_bipartite(3, 3) == 1);
    CHECK(genus_complete_bipartite(6, 4) == 2);
    CHECK(genus_complete_bipartite(4, 6) == 2);
    CHECK(genus_complete_bipartite(2, 9) == 0);
    CHECK(genus_complete_bipartite(6, 6) == 4);
}

TEST_CASE("block additivity") {
    const auto bd = block_decomposition(double_k33());
    const auto sum = block_additive_genus(bd, {GenusEstimate::exactly(1, "K33"), GenusEstimate::exactly(1, "K33")});
    CHECK(sum.exact());
    CHECK(sum.lower == 2);
    const auto partial =
        block_additive_genus(bd, {GenusEstimate::exactly(1, "K33"), GenusEstimate::at_least(1, "nonplanar")});
    CHECK(partial.lower == 2);
    CHECK_FALSE(partial.upper.has_value());
}

TEST_CASE("estimate bookkeeping") {
    GenusEstimate e;
    e.raise_lower(1, "a");
    e.raise_lower(1, "a");
    e.lower_upper(3, "b");
    CHECK(e.provenance.size() == 2);
    CHECK_FALSE(e.exact());
    e.tighten(GenusEstimate::exactly(3, "c"));
    CHECK(e.exact());
    CHECK_THROWS(e.lower_upper(2, "d"));
    const auto j = estimate_to_json(GenusEstimate::at_least(2, "x"));
    CHECK(j.at("upper").is_null());
    CHECK(j.at("exact") == false);
}

TEST_CASE("cyclic classification") {
    CHECK(classify_cyclic({3, 2}).genus == 0);
    CHECK(classify_cyclic({1, 1, 1}).genus == 0);
    CHECK(classify_cyclic({1, 2, 2}).genus == 1);
    CHECK(classify_cyclic({1, 1, 1, 1}).genus == 1);
    CHECK(classify_cyclic({2, 2, 1, 1}).kind == CyclicClass::Kind::Range);
    CHECK(classify_cyclic({1, 1, 1, 1, 1}).kind == CyclicClass::Kind::AtLeast5);
    CHECK(classify_cyclic({1, 1, 1, 1, 1, 1}).kind == CyclicClass::Kind::AtLeast5);
    CHECK(classify_cyclic({10, 2, 1}).kind == CyclicClass::Kind::AtLeast5);
}

TEST_CASE("abelian classification") {
    auto cls = [](const char* g) { return classify_abelian(parse_group_spec(g, kNoOrderCap)); };
    CHECK(cls("Z25xZ25") == AbelianClass::Genus1);
    CHECK(cls("Z2xZ2xZ5") == AbelianClass::Genus1);
    CHECK(cls("Z30030") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z210") == AbelianClass::Genus1);
    CHECK(cls("Z4xZ4") == AbelianClass::Genus1);
    CHECK(cls("Z8xZ4") == AbelianClass::Genus1);
    CHECK(cls("Z9xZ9") == AbelianClass::Genus1);
    CHECK(cls("Z3xZ3xZ7") == AbelianClass::Genus1);
    CHECK(cls("Z4xZ2xZ11") == AbelianClass::Genus1);
    CHECK(cls("Z16xZ2") == AbelianClass::Genus0);
    CHECK(cls("Z72") == AbelianClass::Genus0);
    CHECK(cls("Z8xZ8") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z49xZ49") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z5xZ5xZ2") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z2xZ2xZ2") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z2xZ2xZ3xZ3") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z2xZ2xZ3xZ5") == AbelianClass::AtLeastTwo);
    CHECK(cls("Z27xZ9") == AbelianClass::AtLeastTwo);
}

TEST_CASE("lattice family values") {
    CHECK(family_genus(LatticeFamily::Zp2xZp2, 5).lower == 1);
    CHECK(family_genus(LatticeFamily::Zp2xZp2, 7).lower == 2);
    CHECK(family_genus(LatticeFamily::Zp2xZp2, 13).lower == 3);
    CHECK(family_genus(LatticeFamily::Zp3xZp2, 2).lower == 1);
    CHECK(family_genus(LatticeFamily::Zp3xZp2, 3).lower == 2);
    CHECK(family_genus(LatticeFamily::ZpxZpxZq, 3, 2).lower == 1);
    CHECK(family_genus(LatticeFamily::ZpxZpxZq, 5, 2).lower == 2);
    CHECK(family_genus(LatticeFamily::ZpxZpxZq2, 3, 2).lower == 2);
    CHECK_FALSE(family_genus(LatticeFamily::ZpxZpxZq2, 3, 2).exact());
    CHECK(family_genus(LatticeFamily::ZpxZpxZp, 2).lower == 2);
    CHECK_THROWS_AS(family_genus(LatticeFamily::ZpxZpxZq, 3, 3), InputError);
    CHECK_THROWS_AS(family_genus(LatticeFamily::Zp2xZp2, 4), InputError);
    CHECK(parse_lattice_family("Zp3xZp2") == LatticeFamily::Zp3xZp2);
    CHECK_THROWS_AS(parse_lattice_family("nope"), InputError);
}
