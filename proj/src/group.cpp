#include "latgenus/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "latgenus/errors.hpp"

namespace latgenus {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw OrderCapExceeded("group order overflows 64 bits");
    }
    return a * b;
}

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        v = checked_mul(v, prime);
    }
    return v;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 2) {
        throw InputError("cannot factorize " + std::to_string(n));
    }
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            PrimePower pp{d, 0};
            while (n % d == 0) {
                n /= d;
                ++pp.exponent;
            }
            out.push_back(pp);
        }
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

GroupSpec::GroupSpec(std::vector<PrimePower> factors, std::uint64_t order_cap)
    : factors_(std::move(factors)), order_cap_(order_cap) {
    if (factors_.empty()) {
        throw InputError("group needs at least one cyclic factor");
    }
    for (const auto& f : factors_) {
        if (!is_prime(f.prime)) {
            throw InputError(std::to_string(f.prime) + " is not prime");
        }
        if (f.exponent < 1) {
            throw InputError("prime-power exponent must be positive");
        }
        order_ = checked_mul(order_, f.value());
    }
    if (order_ > order_cap_) {
        throw OrderCapExceeded("group order " + std::to_string(order_) + " exceeds cap " +
                               std::to_string(order_cap_));
    }
    std::sort(factors_.begin(), factors_.end(), std::greater<>());
}

std::vector<std::uint64_t> GroupSpec::moduli() const {
    std::vector<std::uint64_t> out;
    for (const auto& f : factors_) {
        out.push_back(f.value());
    }
    return out;
}

bool GroupSpec::is_cyclic() const {
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        if (factors_[i].prime == factors_[i - 1].prime) {
            return false;
        }
    }
    return true;
}

std::map<std::uint64_t, std::vector<int>> GroupSpec::exponents_by_prime() const {
    std::map<std::uint64_t, std::vector<int>> out;
    for (const auto& f : factors_) {
        out[f.prime].push_back(f.exponent);
    }
    return out;
}

std::string GroupSpec::to_string() const {
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) {
            s += 'x';
        }
        s += 'Z' + std::to_string(f.value());
    }
    return s;
}

GroupSpec parse_group_spec(std::string_view text, std::uint64_t order_cap) {
    if (text.empty()) {
        throw InputError("empty group expression");
    }
    std::vector<PrimePower> factors;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find('x', pos), text.size());
        const std::string_view token = text.substr(pos, end - pos);
        if (token.size() < 2 || token[0] != 'Z') {
            throw InputError("malformed factor '" + std::string(token) + "' (expected Z<m>)");
        }
        std::uint64_t m = 0;
        const char* first = token.data() + 1;
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last) {
            throw InputError("malformed factor '" + std::string(token) + "'");
        }
        if (m < 2) {
            throw InputError("cyclic factor Z" + std::to_string(m) + " must have m >= 2");
        }
        for (const auto& pp : factorize(m)) {
            factors.push_back(pp);
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return GroupSpec(std::move(factors), order_cap);
}

AbelianGroup::AbelianGroup(const GroupSpec& spec) : spec_(spec), moduli_(spec.moduli()) {
    if (spec.order() > (std::uint64_t{1} << 24)) {
        throw OrderCapExceeded("group too large for concrete arithmetic");
    }
    order_ = spec.order();
    strides_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * moduli_[i];
    }
}

Element AbelianGroup::decode(ElementIndex index) const {
    Element e;
    e.coords.resize(moduli_.size());
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        e.coords[i] = rest / strides_[i];
        rest %= strides_[i];
    }
    return e;
}

ElementIndex AbelianGroup::encode(const Element& element) const {
    if (element.coords.size() != moduli_.size()) {
        throw InputError("element arity does not match group");
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (element.coords[i] >= moduli_[i]) {
            throw InputError("element coordinate out of range");
        }
        idx += element.coords[i] * strides_[i];
    }
    return static_cast<ElementIndex>(idx);
}

ElementIndex AbelianGroup::add(ElementIndex a, ElementIndex b) const {
    std::uint64_t ra = a, rb = b, idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint64_t ca = ra / strides_[i];
        const std::uint64_t cb = rb / strides_[i];
        ra %= strides_[i];
        rb %= strides_[i];
        idx += ((ca + cb) % moduli_[i]) * strides_[i];
    }
    return static_cast<ElementIndex>(idx);
}

ElementIndex AbelianGroup::negate(ElementIndex a) const {
    std::uint64_t ra = a, idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint64_t c = ra / strides_[i];
        ra %= strides_[i];
        idx += ((moduli_[i] - c) % moduli_[i]) * strides_[i];
    }
    return static_cast<ElementIndex>(idx);
}

std::vector<ElementIndex> AbelianGroup::generated(const std::vector<ElementIndex>& generators) const {
    std::vector<char> in(order_, 0);
    std::vector<ElementIndex> members{0};
    in[0] = 1;
    for (ElementIndex g : generators) {
        if (in[g]) {
            continue;
        }
        // members + <g>: keep adding g to every member until the coset repeats.
        std::vector<ElementIndex> frontier = members;
        while (!frontier.empty()) {
            std::vector<ElementIndex> next;
            for (ElementIndex m : frontier) {
                const ElementIndex s = add(m, g);
                if (!in[s]) {
                    in[s] = 1;
                    members.push_back(s);
                    next.push_back(s);
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

Subgroup::Subgroup(std::vector<ElementIndex> sorted_elements, std::size_t group_order)
    : elements_(std::move(sorted_elements)), bits_(words_for(group_order), 0) {
    for (ElementIndex e : elements_) {
        bits_[e / 64] |= std::uint64_t{1} << (e % 64);
    }
}

bool Subgroup::contains(ElementIndex e) const {
    const std::size_t w = e / 64;
    return w < bits_.size() && ((bits_[w] >> (e % 64)) & 1U) != 0;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    if (elements_.size() > other.elements_.size() || bits_.size() != other.bits_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if ((bits_[i] & ~other.bits_[i]) != 0) {
            return false;
        }
    }
    return true;
}

SubgroupSet::SubgroupSet(GroupSpec group, std::vector<Subgroup> subgroups)
    : group_(std::move(group)), subgroups_(std::move(subgroups)) {
    std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) {
            return a.order() < b.order();
        }
        return a.elements() < b.elements();
    });
    subgroups_.erase(std::unique(subgroups_.begin(), subgroups_.end()), subgroups_.end());
    std::size_t index = 0;
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        if (i > 0 && subgroups_[i].order() != subgroups_[i - 1].order()) {
            index = 0;
        }
        subgroups_[i].id_ = "S" + std::to_string(subgroups_[i].order()) + "#" + std::to_string(index++);
    }
}

SubgroupSet enumerate_subgroups(const GroupSpec& group) {
    if (group.order() > group.order_cap()) {
        throw OrderCapExceeded("group order exceeds cap");
    }
    const AbelianGroup arith(group);
    const std::size_t n = arith.order();

    struct Found {
        std::vector<ElementIndex> elements;
        std::vector<ElementIndex> generators;
    };
    std::vector<Found> found;
    std::set<std::vector<ElementIndex>> seen;

    for (ElementIndex x = 0; x < n; ++x) {
        auto cyc = arith.generated({x});
        if (seen.insert(cyc).second) {
            found.push_back({std::move(cyc), {x}});
        }
    }

    std::vector<Subgroup> subs;
    for (const auto& f : found) {
        subs.emplace_back(f.elements, n);
    }
    // Join closure: every subgroup is a join of cyclic subgroups, and joins of
    // joins are reached as the list grows.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (subs[i].is_subset_of(subs[j]) || subs[j].is_subset_of(subs[i])) {
                continue;
            }
            std::vector<ElementIndex> gens = found[i].generators;
            for (ElementIndex g : found[j].generators) {
                if (!subs[i].contains(g)) {
                    gens.push_back(g);
                }
            }
            auto joined = arith.generated(gens);
            if (seen.insert(joined).second) {
                subs.emplace_back(joined, n);
                found.push_back({std::move(joined), std::move(gens)});
            }
        }
    }
    return SubgroupSet(group, std::move(subs));
}

Graph build_lattice(const SubgroupSet& set) {
    const auto& subs = set.subgroups();
    const std::size_t n = subs.size();
    Graph g;
    for (const auto& s : subs) {
        g.add_vertex(s.id());
    }
    // Subgroups are sorted by order, so proper supersets come later.
    std::vector<std::vector<std::size_t>> above(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (subs[i].order() < subs[j].order() && subs[i].is_subset_of(subs[j])) {
                above[i].push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : above[i]) {
            bool covered = true;
            for (std::size_t k : above[i]) {
                if (k != j && subs[k].order() < subs[j].order() && subs[k].is_subset_of(subs[j])) {
                    covered = false;
                    break;
                }
            }
            if (covered) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph lattice_of(const GroupSpec& group) { return build_lattice(enumerate_subgroups(group)); }

std::map<std::size_t, std::size_t> subgroup_census(const SubgroupSet& set) {
    std::map<std::size_t, std::size_t> out;
    for (const auto& s : set.subgroups()) {
        ++out[s.order()];
    }
    return out;
}

nlohmann::json subgroups_to_json(const SubgroupSet& set) {
    const AbelianGroup arith(set.group());
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& s : set.subgroups()) {
        nlohmann::json elems = nlohmann::json::array();
        for (ElementIndex e : s.elements()) {
            elems.push_back(arith.decode(e).coords);
        }
        subs.push_back({{"id", s.id()}, {"order", s.order()}, {"elements", std::move(elems)}});
    }
    return {{"group", set.group().to_string()}, {"subgroups", std::move(subs)}};
}

}  // namespace latgenus
