#pragma once

// Closed-form genus values and bounds for grid graphs, complete bipartite
// graphs and the abelian-group lattice families, plus the genus-0/1
// classification tables. All arithmetic is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"

#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/structure.hpp"

namespace latgenus {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil_rational(const Rational& r);

/// Interval [lower, upper] on the orientable genus of a graph, with the
/// reasons that produced each bound.
struct GenusEstimate {
    int lower = 0;
    std::optional<int> upper;
    std::vector<std::string> provenance;

    bool exact() const { return upper && *upper == lower; }

    static GenusEstimate exactly(int genus, std::string why);
    static GenusEstimate at_least(int genus, std::string why);

    /// Intersects with another estimate of the same graph.
    void tighten(const GenusEstimate& other);
    void raise_lower(int value, std::string why);
    void lower_upper(int value, std::string why);
    /// Appends to provenance unless already listed.
    void note(std::string why);
};

/// `{ "lower": int, "upper": int|null, "exact": bool, "provenance": [str] }`
nlohmann::json estimate_to_json(const GenusEstimate& e);

struct EulerBound {
    Rational value;
    /// ceil(value), clamped at 0.
    int genus;
};

/// 1 + e/4 - v/2 for a connected graph of girth at least 4.
EulerBound euler_lower_bound(std::int64_t vertices, std::int64_t edges);

/// 1 + (1/2) prod(e_i+1) [ (1/2) sum e_i/(e_i+1) - 1 ] for any grid spec.
Rational grid_euler_value(const GridSpec& spec);

/// ceil(grid_euler_value), clamped at 0. Requires k > 1.
int grid_lower_bound(const GridSpec& spec);

/// Exact genus of a lower-embeddable grid (k >= 3, at least three odd e_i).
int white_genus(const GridSpec& spec);

/// Genus of Gamma(n,1,1,1).
int genus_n111(int n);
/// Genus of the k-cube.
int genus_hypercube(int k);
/// Genus of Gamma(e1,e2,1): floor(e1/2) floor(e2/2).
int genus_grid_e1_e2_1(int e1, int e2);
/// Genus of Gamma(e1,2,2).
int genus_grid_e1_2_2(int e1);

/// Recursive upper bound for 3-dimensional grids with an even parameter.
int grid_upper_bound(const GridSpec& spec);

/// Ringel: ceil((m-2)(n-2)/4).
int genus_complete_bipartite(int m, int n);

/// Sums per-block estimates; `per_block` is aligned with `blocks.blocks`.
GenusEstimate block_additive_genus(const BlockDecomposition& blocks,
                                   const std::vector<GenusEstimate>& per_block);

struct CyclicClass {
    enum class Kind { Genus, AtLeast5, Range };
    Kind kind = Kind::Genus;
    /// Genus value for Kind::Genus; lower end for Kind::Range.
    int genus = 0;
    int range_upper = 0;

    std::string to_string() const;
    bool operator==(const CyclicClass&) const = default;
};

/// Exponent multiset of a cyclic group (one entry per prime).
CyclicClass classify_cyclic(std::vector<int> exponents);

enum class AbelianClass { Genus0, Genus1, AtLeastTwo };

const char* to_string(AbelianClass c);

AbelianClass classify_abelian(const GroupSpec& group);

enum class LatticeFamily { Zp2xZp2, Zp3xZp2, ZpxZpxZq, ZpxZpxZp, ZpxZpxZq2 };

LatticeFamily parse_lattice_family(const std::string& name);
const char* to_string(LatticeFamily f);

/// Genus (or lower bound) of a named lattice family at concrete primes.
GenusEstimate family_genus(LatticeFamily family, std::uint64_t p, std::uint64_t q = 0);

/// Every closed form that applies to the grid, merged into one estimate.
GenusEstimate grid_bounds(const GridSpec& spec);

}  // namespace latgenus
