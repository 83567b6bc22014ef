#pragma once

// Finite abelian groups as direct sums of cyclic prime-power groups, their
// subgroups, and the subgroup lattice (Hasse) graph.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "latgenus/graph.hpp"

namespace latgenus {

inline constexpr std::uint64_t kDefaultOrderCap = 4096;
inline constexpr std::uint64_t kNoOrderCap = UINT64_MAX;

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime = 2;
    int exponent = 1;

    std::uint64_t value() const;
    auto operator<=>(const PrimePower&) const = default;
};

/// Prime factorization of n >= 2, ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Z_{p_1^{k_1}} x ... x Z_{p_n^{k_n}}, kept in canonical form: factors
/// sorted by (p, k) descending. Equality is equality of canonical forms.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<PrimePower> factors,
                       std::uint64_t order_cap = kDefaultOrderCap);

    const std::vector<PrimePower>& factors() const { return factors_; }
    std::vector<std::uint64_t> moduli() const;
    std::uint64_t order() const { return order_; }
    std::uint64_t order_cap() const { return order_cap_; }

    /// Cyclic iff all primes are distinct.
    bool is_cyclic() const;
    /// Exponents grouped by prime, each list descending. Keyed by prime.
    std::map<std::uint64_t, std::vector<int>> exponents_by_prime() const;

    /// Canonical expression, e.g. "Z3xZ4xZ2".
    std::string to_string() const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

private:
    std::vector<PrimePower> factors_;
    std::uint64_t order_ = 1;
    std::uint64_t order_cap_ = kDefaultOrderCap;
};

/// Parses `group := factor ('x' factor)* ; factor := 'Z' integer`. Each Z_m
/// is split into prime-power factors.
GroupSpec parse_group_spec(std::string_view text, std::uint64_t order_cap = kDefaultOrderCap);

using ElementIndex = std::uint32_t;

struct Element {
    std::vector<std::uint64_t> coords;
    auto operator<=>(const Element&) const = default;
};

/// Concrete arithmetic on a GroupSpec. Elements are encoded as mixed-radix
/// indices with the first factor most significant, so index order equals
/// lexicographic coordinate order.
class AbelianGroup {
public:
    explicit AbelianGroup(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    std::size_t order() const { return order_; }

    Element decode(ElementIndex index) const;
    ElementIndex encode(const Element& element) const;
    ElementIndex add(ElementIndex a, ElementIndex b) const;
    ElementIndex negate(ElementIndex a) const;

    /// Sorted elements of the subgroup generated by `generators`.
    std::vector<ElementIndex> generated(const std::vector<ElementIndex>& generators) const;

private:
    GroupSpec spec_;
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> strides_;
    std::size_t order_ = 1;
};

class SubgroupSet;
class Subgroup;
SubgroupSet enumerate_subgroups(const GroupSpec& group);

class Subgroup {
public:
    Subgroup(std::vector<ElementIndex> sorted_elements, std::size_t group_order);

    const std::vector<ElementIndex>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(ElementIndex e) const;
    /// Subset test against another subgroup of the same group.
    bool is_subset_of(const Subgroup& other) const;

    /// "S<order>#<index>", assigned by SubgroupSet.
    const std::string& id() const { return id_; }

    bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

private:
    friend class SubgroupSet;
    friend SubgroupSet enumerate_subgroups(const GroupSpec&);

    std::vector<ElementIndex> elements_;
    std::vector<std::uint64_t> bits_;
    std::string id_;
};

/// All subgroups of a group, sorted by (order, element list), deduplicated.
class SubgroupSet {
public:
    SubgroupSet(GroupSpec group, std::vector<Subgroup> subgroups);

    const GroupSpec& group() const { return group_; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }
    std::size_t size() const { return subgroups_.size(); }

private:
    GroupSpec group_;
    std::vector<Subgroup> subgroups_;
};

/// Cyclic subgroups of every element, closed under pairwise join until no new
/// subgroup appears.
SubgroupSet enumerate_subgroups(const GroupSpec& group);

/// Covering graph of subgroup inclusion; vertices labeled by subgroup ids.
Graph build_lattice(const SubgroupSet& subgroups);

/// Convenience: parse/enumerate/build in one step.
Graph lattice_of(const GroupSpec& group);

std::map<std::size_t, std::size_t> subgroup_census(const SubgroupSet& subgroups);

nlohmann::json subgroups_to_json(const SubgroupSet& subgroups);

}  // namespace latgenus
