#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latgenus/graph.hpp"

namespace latgenus {

struct MinorOp {
    enum class Kind { DeleteVertex, DeleteEdge, ContractEdge };
    Kind kind = Kind::DeleteVertex;
    /// One label for DeleteVertex, two for the edge operations.
    std::vector<std::string> args;
};

using MinorScript = std::vector<MinorOp>;

/// Applies the operations in order. Contracting {u, v} keeps u's label and
/// absorbs v; loops and parallel edges produced by the merge are dropped.
Graph apply_minor_script(const Graph& g, const MinorScript& script);

/// `[{"op": "delete-vertex" | "delete-edge" | "contract-edge", "args": [...]}]`
nlohmann::json minor_script_to_json(const MinorScript& script);
MinorScript minor_script_from_json(const nlohmann::json& j);

/// pattern vertex label -> host vertex labels of its branch set.
struct MinorWitness {
    std::map<std::string, std::vector<std::string>> branch_sets;
};

nlohmann::json minor_witness_to_json(const MinorWitness& w);

/// Checks disjointness, connectivity of each branch set and coverage of every
/// pattern edge. Returns a description of the first violation, or nullopt.
std::optional<std::string> check_minor_witness(const Graph& host, const Graph& pattern,
                                               const MinorWitness& witness);

enum class MinorSearchStatus {
    Found,
    /// The search space was exhausted: the pattern is not a minor of the host.
    ExhaustedAbsent,
    /// Gave up; says nothing about minor-freeness.
    BudgetExceeded,
};

const char* to_string(MinorSearchStatus status);

struct MinorSearchResult {
    MinorSearchStatus status = MinorSearchStatus::BudgetExceeded;
    std::optional<MinorWitness> witness;
    std::uint64_t nodes = 0;
};

/// Branch-set search on the host with low-degree vertices reduced away. Two
/// randomized heuristics (congestion routing, annealing over vertex owners)
/// and restarted randomized backtracking run first; a deterministic complete
/// backtracking search gets the rest of the budget. Only the backtracking
/// searches can report ExhaustedAbsent. `budget` limits node expansions
/// summed over all phases. Every witness is validated before it is returned.
MinorSearchResult find_minor(const Graph& host, const Graph& pattern, std::int64_t budget);

}  // namespace latgenus
