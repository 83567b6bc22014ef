#include "latgenus/crosscheck.hpp"

#include <stdexcept>

#include "latgenus/embedding.hpp"
#include "latgenus/generators.hpp"
#include "latgenus/minor.hpp"
#include "latgenus/search.hpp"
#include "latgenus/structure.hpp"

namespace latgenus {

std::vector<RosterEntry> default_roster() {
    std::vector<RosterEntry> roster;
    auto add = [&](const char* group) { roster.push_back({group, std::nullopt}); };
    // Planar: cyclic groups with a planar divisor grid, and Z_{p^a} x Z_p.
    for (const char* g : {"Z64", "Z72", "Z60", "Z30", "Z2xZ2", "Z4xZ2", "Z8xZ2", "Z9xZ3", "Z25xZ5"}) {
        add(g);
    }
    // Genus one. Cyclic: exponent patterns (2,2,1), (3,2,1), (3,3,1), (1,1,1,1).
    for (const char* g : {"Z180", "Z360", "Z1080", "Z210"}) {
        add(g);
    }
    for (const char* g : {"Z4xZ4", "Z8xZ4", "Z2xZ2xZ3", "Z2xZ2xZ5", "Z4xZ2xZ3", "Z4xZ2xZ5", "Z9xZ9",
                          "Z3xZ3xZ2", "Z3xZ3xZ5"}) {
        add(g);
    }
    roster.push_back({"Z25xZ25", 5});
    // Genus at least two.
    for (const char* g : {"Z16xZ4", "Z8xZ8", "Z8xZ2xZ3", "Z9xZ3xZ2", "Z2xZ2xZ9", "Z3xZ3xZ4", "Z2xZ2xZ2",
                          "Z27xZ9", "Z27xZ27", "Z5xZ5xZ2", "Z2310", "Z2xZ2xZ3xZ3", "Z4xZ4xZ3"}) {
        add(g);
    }
    return roster;
}

const char* to_string(RowStatus status) {
    switch (status) {
        case RowStatus::Agree:
            return "agree";
        case RowStatus::Disagree:
            return "disagree";
        case RowStatus::Inconclusive:
            return "inconclusive";
        case RowStatus::Skipped:
            return "skipped";
    }
    return "?";
}

bool CrosscheckReport::any(RowStatus status) const {
    for (const auto& row : rows) {
        if (row.status == status) {
            return true;
        }
    }
    return false;
}

int CrosscheckReport::exit_code() const {
    if (any(RowStatus::Disagree)) {
        return 1;
    }
    return any(RowStatus::Inconclusive) ? 3 : 0;
}

namespace {

// Agreement with a "genus is exactly `genus`" prediction.
RowStatus judge_exact(const GenusEstimate& e, int genus) {
    if (e.lower > genus || (e.upper && *e.upper < genus)) {
        return RowStatus::Disagree;
    }
    return e.exact() ? RowStatus::Agree : RowStatus::Inconclusive;
}

void check_genus_one(const RosterEntry& entry, const Graph& lattice, const CrosscheckOptions& opts,
                     CrosscheckRow& row) {
    if (entry.surgery_prime) {
        const auto cert = lift_certificate_to_lattice(surgered_gn_certificate(*entry.surgery_prime), lattice);
        const auto verified = verify_certificate(cert);
        if (is_planar(lattice)) {
            row.estimate = GenusEstimate::exactly(0, "planar (Boyer-Myrvold)");
            row.witnesses.push_back("planar");
        } else {
            row.estimate = GenusEstimate::at_least(1, "nonplanar (Boyer-Myrvold)");
            row.estimate.lower_upper(verified.genus, "fan-expanded G_" +
                                                         std::to_string(*entry.surgery_prime + 1) +
                                                         " certificate");
            row.witnesses.push_back("nonplanar");
            row.witnesses.push_back("certificate:surgery");
        }
    } else {
        ExactGenusOptions eo;
        eo.budget = opts.budget;
        eo.seed = opts.seed;
        const auto report = exact_genus_small(lattice, eo);
        row.estimate = report.estimate;
        row.witnesses.push_back(report.estimate.lower >= 1 ? "nonplanar" : "planar");
        if (report.certificate) {
            row.witnesses.push_back("certificate:genus-" +
                                    std::to_string(verify_certificate(*report.certificate).genus));
        }
    }
    row.status = judge_exact(row.estimate, 1);
}

void check_at_least_two(const Graph& lattice, const CrosscheckOptions& opts, CrosscheckRow& row) {
    if (is_planar(lattice)) {
        row.estimate = GenusEstimate::exactly(0, "planar (Boyer-Myrvold)");
        row.witnesses.push_back("planar");
        row.status = RowStatus::Disagree;
        return;
    }
    row.estimate = GenusEstimate::at_least(1, "nonplanar (Boyer-Myrvold)");
    row.witnesses.push_back("nonplanar");
    row.estimate.lower_upper(static_cast<int>((row.edges - row.vertices + 1) / 2),
                             "maximum genus bound (E-V+1)/2");
    if (const auto gi = girth(lattice)) {
        const int euler = girth_euler_bound(row.vertices, row.edges, *gi);
        if (euler > row.estimate.lower) {
            row.estimate.raise_lower(euler, "Euler bound with girth " + std::to_string(*gi));
            row.witnesses.push_back("euler");
        }
    }
    const std::vector<MinorBound> minors = {
        {"bowtie", double_k33(), 2},
        {"K6,4", complete_bipartite(6, 4), genus_complete_bipartite(6, 4)},
    };
    for (const auto& bound : minors) {
        if (row.estimate.lower >= 2) {
            break;
        }
        const auto found = find_minor(lattice, bound.pattern, opts.budget);
        if (found.status == MinorSearchStatus::Found) {
            row.estimate.raise_lower(bound.genus, bound.name + " minor");
            row.witnesses.push_back("minor:" + bound.name);
        }
    }
    row.status = row.estimate.lower >= 2 ? RowStatus::Agree : RowStatus::Inconclusive;
}

}  // namespace

CrosscheckRow crosscheck_group(const RosterEntry& entry, const CrosscheckOptions& opts) {
    CrosscheckRow row;
    const GroupSpec spec = parse_group_spec(entry.group, kNoOrderCap);
    row.group = spec.to_string();
    row.predicted = classify_abelian(spec);
    if (spec.order() > opts.order_limit) {
        row.status = RowStatus::Skipped;
        row.note = "order " + std::to_string(spec.order()) + " above limit";
        return row;
    }
    const Graph lattice = lattice_of(spec);
    row.vertices = lattice.num_vertices();
    row.edges = lattice.num_edges();
    switch (row.predicted) {
        case AbelianClass::Genus0:
            if (is_planar(lattice)) {
                row.estimate = GenusEstimate::exactly(0, "planar (Boyer-Myrvold)");
                row.witnesses.push_back("planar");
            } else {
                row.estimate = GenusEstimate::at_least(1, "nonplanar (Boyer-Myrvold)");
                row.witnesses.push_back("nonplanar");
            }
            row.status = judge_exact(row.estimate, 0);
            break;
        case AbelianClass::Genus1:
            check_genus_one(entry, lattice, opts, row);
            break;
        case AbelianClass::AtLeastTwo:
            check_at_least_two(lattice, opts, row);
            break;
    }
    if (row.status == RowStatus::Inconclusive) {
        row.note = "budget exhausted before the bounds settled";
    }
    return row;
}

CrosscheckReport crosscheck(const std::vector<RosterEntry>& roster, const CrosscheckOptions& opts) {
    CrosscheckReport report;
    for (const auto& entry : roster) {
        report.rows.push_back(crosscheck_group(entry, opts));
    }
    return report;
}

nlohmann::json crosscheck_row_to_json(const CrosscheckRow& row) {
    nlohmann::json j;
    j["group"] = row.group;
    j["predicted"] = to_string(row.predicted);
    j["vertices"] = row.vertices;
    j["edges"] = row.edges;
    j["estimate"] = estimate_to_json(row.estimate);
    j["status"] = to_string(row.status);
    j["agree"] = row.status == RowStatus::Agree;
    j["witnesses"] = row.witnesses;
    if (!row.note.empty()) {
        j["note"] = row.note;
    }
    return j;
}

nlohmann::json crosscheck_to_json(const CrosscheckReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& row : report.rows) {
        rows.push_back(crosscheck_row_to_json(row));
        ++counts[static_cast<int>(row.status)];
    }
    return {{"rows", rows},
            {"summary",
             {{"agree", counts[0]}, {"disagree", counts[1]}, {"inconclusive", counts[2]}, {"skipped", counts[3]}}},
            {"exit_code", report.exit_code()}};
}

}  // namespace latgenus
