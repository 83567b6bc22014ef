#include "latgenus/formulas.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "latgenus/errors.hpp"

namespace latgenus {

std::int64_t ceil_rational(const Rational& r) {
    const std::int64_t n = r.numerator();
    const std::int64_t d = r.denominator();  // always positive
    return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

GenusEstimate GenusEstimate::exactly(int genus, std::string why) {
    GenusEstimate e;
    e.lower = genus;
    e.upper = genus;
    e.provenance.push_back(std::move(why));
    return e;
}

GenusEstimate GenusEstimate::at_least(int genus, std::string why) {
    GenusEstimate e;
    e.lower = genus;
    e.provenance.push_back(std::move(why));
    return e;
}

void GenusEstimate::note(std::string why) {
    if (std::find(provenance.begin(), provenance.end(), why) == provenance.end()) {
        provenance.push_back(std::move(why));
    }
}

void GenusEstimate::raise_lower(int value, std::string why) {
    if (value > lower) {
        lower = value;
        note(std::move(why));
    }
    if (upper && *upper < lower) {
        throw std::logic_error("genus bounds crossed: lower " + std::to_string(lower) +
                               " > upper " + std::to_string(*upper));
    }
}

void GenusEstimate::lower_upper(int value, std::string why) {
    if (!upper || value < *upper) {
        upper = value;
        note(std::move(why));
    }
    if (*upper < lower) {
        throw std::logic_error("genus bounds crossed: upper " + std::to_string(*upper) +
                               " < lower " + std::to_string(lower));
    }
}

void GenusEstimate::tighten(const GenusEstimate& other) {
    std::string why;
    for (const auto& p : other.provenance) {
        why += why.empty() ? p : "; " + p;
    }
    raise_lower(other.lower, why);
    if (other.upper) {
        lower_upper(*other.upper, why);
    }
}

nlohmann::json estimate_to_json(const GenusEstimate& e) {
    nlohmann::json j;
    j["lower"] = e.lower;
    j["upper"] = e.upper ? nlohmann::json(*e.upper) : nlohmann::json(nullptr);
    j["exact"] = e.exact();
    j["provenance"] = e.provenance;
    return j;
}

EulerBound euler_lower_bound(std::int64_t vertices, std::int64_t edges) {
    const Rational value = Rational(1) + Rational(edges, 4) - Rational(vertices, 2);
    return {value, static_cast<int>(std::max<std::int64_t>(0, ceil_rational(value)))};
}

Rational grid_euler_value(const GridSpec& spec) {
    Rational product(1);
    Rational sum(0);
    for (int e : spec.exponents()) {
        product *= e + 1;
        sum += Rational(e, e + 1);
    }
    return Rational(1) + Rational(1, 2) * product * (Rational(1, 2) * sum - 1);
}

int grid_lower_bound(const GridSpec& spec) {
    if (spec.dimension() <= 1) {
        throw InputError("grid lower bound needs k > 1");
    }
    return static_cast<int>(std::max<std::int64_t>(0, ceil_rational(grid_euler_value(spec))));
}

namespace {

bool white_applies(const GridSpec& spec) {
    const auto& e = spec.exponents();
    const auto odd = std::count_if(e.begin(), e.end(), [](int x) { return x % 2 == 1; });
    return e.size() >= 3 && odd >= 3;
}

}  // namespace

int white_genus(const GridSpec& spec) {
    if (!white_applies(spec)) {
        throw InputError("lower-embeddable formula needs k >= 3 and three odd exponents");
    }
    const Rational v = grid_euler_value(spec);
    if (v.denominator() != 1 || v.numerator() < 0) {
        throw std::logic_error("lower-embeddable genus is not a nonnegative integer");
    }
    return static_cast<int>(v.numerator());
}

int genus_n111(int n) {
    if (n < 1) {
        throw InputError("genus_n111 needs n >= 1");
    }
    // 1 + (1/2)(n+1) 2^3 [ (1/2)(n/(n+1) + 3/2) - 1 ] simplifies to n.
    const Rational v = Rational(1) + Rational(1, 2) * (n + 1) * 8 *
                                         (Rational(1, 2) * (Rational(n, n + 1) + Rational(3, 2)) - 1);
    if (v != Rational(n)) {
        throw std::logic_error("n111 closed form disagrees with its derivation");
    }
    return n;
}

int genus_hypercube(int k) {
    if (k < 3) {
        throw InputError("hypercube formula needs k >= 3");
    }
    if (k >= 40) {
        throw InputError("hypercube dimension too large");
    }
    return static_cast<int>(1 + (std::int64_t{1} << (k - 3)) * (k - 4));
}

int genus_grid_e1_e2_1(int e1, int e2) {
    if (e1 < 1 || e2 < 1) {
        throw InputError("grid parameters must be positive");
    }
    return (e1 / 2) * (e2 / 2);
}

int genus_grid_e1_2_2(int e1) {
    if (e1 < 1) {
        throw InputError("grid parameters must be positive");
    }
    return e1;
}

int grid_upper_bound(const GridSpec& spec) {
    if (spec.dimension() != 3) {
        throw InputError("upper-bound recurrence needs a 3-dimensional grid");
    }
    std::vector<int> odd, even;
    for (int e : spec.exponents()) {
        (e % 2 == 0 ? even : odd).push_back(e);
    }
    Rational bound;
    switch (even.size()) {
        case 0:
            throw InputError("upper-bound recurrence needs an even grid parameter");
        case 1: {
            const int e1 = odd[0], e2 = odd[1], e3 = even[0];
            bound = white_genus(GridSpec({e1, e2, e3 - 1})) + Rational((e1 + 1) * (e2 + 1), 4) - 1;
            break;
        }
        case 2: {
            const int e1 = odd[0], e2 = even[0], e3 = even[1];
            bound = white_genus(GridSpec({e1, e2 - 1, e3 - 1})) + Rational((e1 + 1) * (e2 + e3), 4) - 1;
            break;
        }
        default: {
            const int e1 = even[0], e2 = even[1], e3 = even[2];
            bound = white_genus(GridSpec({e1 - 1, e2 - 1, e3 - 1})) +
                    Rational(e1 * e2 + e1 * e3 + e2 * e3, 4) - 1;
            break;
        }
    }
    if (bound.denominator() != 1) {
        throw std::logic_error("upper-bound recurrence produced a fraction");
    }
    return static_cast<int>(bound.numerator());
}

int genus_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) {
        throw InputError("K_{m,n} needs m, n >= 1");
    }
    if (m < 2 || n < 2) {
        return 0;
    }
    return static_cast<int>(ceil_rational(Rational((m - 2) * (n - 2), 4)));
}

GenusEstimate block_additive_genus(const BlockDecomposition& blocks,
                                   const std::vector<GenusEstimate>& per_block) {
    if (per_block.size() != blocks.blocks.size()) {
        throw InputError("missing genus estimate for a block (" + std::to_string(per_block.size()) +
                         " of " + std::to_string(blocks.blocks.size()) + ")");
    }
    GenusEstimate total;
    total.upper = 0;
    for (const auto& e : per_block) {
        total.lower += e.lower;
        if (total.upper && e.upper) {
            *total.upper += *e.upper;
        } else {
            total.upper.reset();
        }
    }
    total.provenance.push_back("block additivity over " + std::to_string(per_block.size()) + " blocks");
    return total;
}

std::string CyclicClass::to_string() const {
    switch (kind) {
        case Kind::Genus:
            return "Genus" + std::to_string(genus);
        case Kind::AtLeast5:
            return "AtLeast5";
        case Kind::Range:
            return "Range(" + std::to_string(genus) + "," + std::to_string(range_upper) + ")";
    }
    return "?";
}

CyclicClass classify_cyclic(std::vector<int> e) {
    if (e.empty()) {
        throw InputError("exponent multiset must be nonempty");
    }
    for (int x : e) {
        if (x < 1) {
            throw InputError("exponents must be positive");
        }
    }
    std::sort(e.begin(), e.end(), std::greater<>());
    using V = std::vector<int>;
    auto in = [&](std::initializer_list<V> list) {
        return std::find(list.begin(), list.end(), e) != list.end();
    };
    auto genus = [](int g) { return CyclicClass{CyclicClass::Kind::Genus, g, 0}; };

    if (e.size() <= 2 || (e.size() == 3 && e[1] == 1)) {
        return genus(0);
    }
    if (in({V{2, 2, 1}, V{3, 2, 1}, V{3, 3, 1}, V{1, 1, 1, 1}})) {
        return genus(1);
    }
    if (in({V{4, 2, 1}, V{4, 3, 1}, V{5, 2, 1}, V{5, 3, 1}, V{2, 2, 2}, V{2, 1, 1, 1}})) {
        return genus(2);
    }
    if (in({V{6, 2, 1}, V{6, 3, 1}, V{7, 2, 1}, V{7, 3, 1}, V{3, 2, 2}, V{3, 1, 1, 1}})) {
        return genus(3);
    }
    if (in({V{8, 2, 1}, V{8, 3, 1}, V{9, 2, 1}, V{9, 3, 1}, V{4, 4, 1}, V{5, 4, 1}, V{5, 5, 1},
            V{4, 2, 2}, V{3, 3, 2}, V{4, 1, 1, 1}})) {
        return genus(4);
    }
    if (e == V{2, 2, 1, 1}) {
        return {CyclicClass::Kind::Range, 4, 6};
    }
    return {CyclicClass::Kind::AtLeast5, 5, 0};
}

const char* to_string(AbelianClass c) {
    switch (c) {
        case AbelianClass::Genus0:
            return "Genus0";
        case AbelianClass::Genus1:
            return "Genus1";
        case AbelianClass::AtLeastTwo:
            return "AtLeastTwo";
    }
    return "?";
}

AbelianClass classify_abelian(const GroupSpec& group) {
    const auto by_prime = group.exponents_by_prime();
    if (group.is_cyclic()) {
        std::vector<int> exps;
        for (const auto& [p, e] : by_prime) {
            exps.push_back(e.front());
        }
        const auto c = classify_cyclic(exps);
        if (c.kind == CyclicClass::Kind::Genus && c.genus <= 1) {
            return c.genus == 0 ? AbelianClass::Genus0 : AbelianClass::Genus1;
        }
        return AbelianClass::AtLeastTwo;
    }

    // Z_{p^a} x Z_p and nothing else.
    if (by_prime.size() == 1) {
        const auto& e = by_prime.begin()->second;
        if (e.size() == 2 && e[1] == 1) {
            return AbelianClass::Genus0;
        }
    }

    // The repeated prime and the multiset of the remaining factors.
    std::uint64_t repeated = 0;
    std::vector<int> rep_exps;
    std::vector<std::pair<std::uint64_t, std::vector<int>>> others;
    for (const auto& [p, e] : by_prime) {
        if (e.size() >= 2) {
            if (repeated != 0) {
                return AbelianClass::AtLeastTwo;
            }
            repeated = p;
            rep_exps = e;
        } else {
            others.emplace_back(p, e);
        }
    }
    using V = std::vector<int>;
    const bool none_else = others.empty();
    const bool one_simple_prime = others.size() == 1 && others[0].second == V{1};

    if (repeated == 2) {
        // Z8 x Z4 stands in for the listed Z8 x Z8.
        if (none_else && (rep_exps == V{2, 2} || rep_exps == V{3, 2})) {
            return AbelianClass::Genus1;
        }
        if (one_simple_prime && (rep_exps == V{1, 1} || rep_exps == V{2, 1})) {
            return AbelianClass::Genus1;
        }
    } else if (repeated == 3) {
        if (none_else && rep_exps == V{2, 2}) {
            return AbelianClass::Genus1;
        }
        if (one_simple_prime && rep_exps == V{1, 1}) {
            return AbelianClass::Genus1;
        }
    } else if (repeated == 5) {
        if (none_else && rep_exps == V{2, 2}) {
            return AbelianClass::Genus1;
        }
    }
    return AbelianClass::AtLeastTwo;
}

LatticeFamily parse_lattice_family(const std::string& name) {
    if (name == "Zp2xZp2") return LatticeFamily::Zp2xZp2;
    if (name == "Zp3xZp2") return LatticeFamily::Zp3xZp2;
    if (name == "ZpxZpxZq") return LatticeFamily::ZpxZpxZq;
    if (name == "ZpxZpxZp") return LatticeFamily::ZpxZpxZp;
    if (name == "ZpxZpxZq2") return LatticeFamily::ZpxZpxZq2;
    throw InputError("unknown lattice family '" + name + "'");
}

const char* to_string(LatticeFamily f) {
    switch (f) {
        case LatticeFamily::Zp2xZp2:
            return "Zp2xZp2";
        case LatticeFamily::Zp3xZp2:
            return "Zp3xZp2";
        case LatticeFamily::ZpxZpxZq:
            return "ZpxZpxZq";
        case LatticeFamily::ZpxZpxZp:
            return "ZpxZpxZp";
        case LatticeFamily::ZpxZpxZq2:
            return "ZpxZpxZq2";
    }
    return "?";
}

GenusEstimate family_genus(LatticeFamily family, std::uint64_t p, std::uint64_t q) {
    if (!is_prime(p)) {
        throw InputError("p must be prime");
    }
    const bool needs_q = family == LatticeFamily::ZpxZpxZq || family == LatticeFamily::ZpxZpxZq2;
    if (needs_q && (!is_prime(q) || q == p)) {
        throw InputError("q must be a prime different from p");
    }
    if (p > 1'000'000) {
        throw InputError("p too large");
    }
    const auto P = static_cast<std::int64_t>(p);
    const std::string name = to_string(family);
    switch (family) {
        case LatticeFamily::Zp2xZp2:
            return GenusEstimate::exactly(static_cast<int>(ceil_rational(Rational(P - 1, 4))),
                                          name + ": ceil((p-1)/4) via G_{p+1} minor and fan surgery");
        case LatticeFamily::Zp3xZp2:
            if (p == 2) {
                return GenusEstimate::exactly(1, name + ": p=2 torus drawing");
            }
            return GenusEstimate::exactly(2 * static_cast<int>(ceil_rational(Rational(P - 2, 4))),
                                          name + ": 2 ceil((p-2)/4) via H_p");
        case LatticeFamily::ZpxZpxZq:
            return GenusEstimate::exactly(static_cast<int>(ceil_rational(Rational(P - 1, 2))),
                                          name + ": ceil((p-1)/2) via K_{4,p+1} minor");
        case LatticeFamily::ZpxZpxZp:
            return GenusEstimate::at_least(static_cast<int>(ceil_rational(Rational(P * P * P - 1, 4))),
                                           name + ": Euler bound (p^3-1)/4");
        case LatticeFamily::ZpxZpxZq2:
            return GenusEstimate::at_least(static_cast<int>(P - 1), name + ": K_{6,p+1} minor, p-1");
    }
    throw std::logic_error("unhandled lattice family");
}

GenusEstimate grid_bounds(const GridSpec& spec) {
    const auto& e = spec.exponents();
    const std::size_t k = e.size();
    GenusEstimate est;
    est.provenance.push_back("grid " + spec.to_string());
    if (k <= 2 || (k == 3 && e[1] == 1)) {
        est.lower_upper(0, "planar grid");
        return est;
    }
    est.raise_lower(grid_lower_bound(spec), "grid Euler lower bound");
    if (white_applies(spec)) {
        const int g = white_genus(spec);
        est.raise_lower(g, "lower-embeddable (three odd parameters)");
        est.lower_upper(g, "lower-embeddable (three odd parameters)");
    }
    if (k == 3 && e[2] == 1) {
        const int g = genus_grid_e1_e2_1(e[0], e[1]);
        est.raise_lower(g, "Gamma(e1,e2,1) formula");
        est.lower_upper(g, "Gamma(e1,e2,1) formula");
    }
    if (k == 3 && e[1] == 2 && e[2] == 2) {
        const int g = genus_grid_e1_2_2(e[0]);
        est.raise_lower(g, "Gamma(e1,2,2) formula");
        est.lower_upper(g, "Gamma(e1,2,2) formula");
    }
    if (k == 3 && std::any_of(e.begin(), e.end(), [](int x) { return x % 2 == 0; })) {
        est.lower_upper(grid_upper_bound(spec), "3-grid upper-bound recurrence");
    }
    const auto cls = classify_cyclic(e);
    switch (cls.kind) {
        case CyclicClass::Kind::Genus:
            est.raise_lower(cls.genus, "cyclic classification table");
            est.lower_upper(cls.genus, "cyclic classification table");
            break;
        case CyclicClass::Kind::Range:
            est.raise_lower(cls.genus, "cyclic classification: open range");
            est.lower_upper(cls.range_upper, "cyclic classification: open range");
            break;
        case CyclicClass::Kind::AtLeast5:
            est.raise_lower(5, "cyclic classification: genus at least 5");
            break;
    }
    return est;
}

}  // namespace latgenus
