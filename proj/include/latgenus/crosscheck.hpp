#pragma once

// Classification cross-check: for a roster of groups, compare the predicted
// genus class with evidence computed from the lattice itself (planarity,
// certificates, Euler bounds, minor witnesses).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latgenus/formulas.hpp"
#include "latgenus/group.hpp"

namespace latgenus {

struct RosterEntry {
    std::string group;
    /// Use the fan-expanded G_{p+1} certificate for the Z_{p^2} x Z_{p^2}
    /// lattice instead of searching (p prime, p = 1 mod 4).
    std::optional<int> surgery_prime;
};

/// Genus-0 families, the genus-1 families at the smallest admissible primes
/// (plus q = 5 variants), and genus >= 2 representatives.
std::vector<RosterEntry> default_roster();

enum class RowStatus { Agree, Disagree, Inconclusive, Skipped };

const char* to_string(RowStatus status);

struct CrosscheckRow {
    std::string group;
    AbelianClass predicted = AbelianClass::AtLeastTwo;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    GenusEstimate estimate;
    RowStatus status = RowStatus::Inconclusive;
    /// Short ids of the evidence used, e.g. "planar", "certificate:heuristic",
    /// "minor:bowtie", "euler".
    std::vector<std::string> witnesses;
    std::string note;
};

struct CrosscheckOptions {
    std::uint64_t order_limit = kDefaultOrderCap;
    /// Search budget; minor searches get the same budget.
    std::int64_t budget = 1'000'000;
    std::uint64_t seed = 1;
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;

    bool any(RowStatus status) const;
    /// 0 all agree (skips allowed), 1 some disagreement, 3 inconclusive only.
    int exit_code() const;
};

CrosscheckRow crosscheck_group(const RosterEntry& entry, const CrosscheckOptions& opts);
CrosscheckReport crosscheck(const std::vector<RosterEntry>& roster, const CrosscheckOptions& opts);

nlohmann::json crosscheck_row_to_json(const CrosscheckRow& row);
nlohmann::json crosscheck_to_json(const CrosscheckReport& report);

}  // namespace latgenus
