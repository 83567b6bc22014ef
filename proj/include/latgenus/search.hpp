#pragma once

// Search over rotation systems: randomized hill climbing on face count and an
// exhaustive DFS with face-count pruning, combined with the structural lower
// bounds into a certified genus interval.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latgenus/embedding.hpp"
#include "latgenus/formulas.hpp"
#include "latgenus/graph.hpp"
#include "latgenus/minor.hpp"

namespace latgenus {

inline constexpr double kDefaultExhaustiveThreshold = 1e9;

enum class SearchMode { Heuristic, Exhaustive };

struct SearchConfig {
    int target_genus = 0;
    SearchMode mode = SearchMode::Heuristic;
    std::uint64_t seed = 1;
    /// Rotation evaluations (heuristic) or DFS nodes (exhaustive).
    std::int64_t budget = 1'000'000;
    int restarts = 8;
    double exhaustive_threshold = kDefaultExhaustiveThreshold;
    /// Called after each heuristic restart with the best face count so far.
    std::function<void(int restart, std::size_t best_faces)> progress;
};

enum class SearchStatus { FoundCertificate, ExhaustedNoEmbedding, BudgetExceeded };

const char* to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExceeded;
    /// Present when FoundCertificate; in heuristic mode also the best
    /// embedding seen when the budget ran out.
    std::optional<EmbeddingCertificate> certificate;
    std::optional<VerifiedGenus> verified;
    std::uint64_t evaluations = 0;
};

/// prod over vertices of (deg(v) - 1)!, as a double (may be inf).
double rotation_space_size(const Graph& g);

/// Throws InputError for disconnected or edgeless graphs, a non-positive
/// budget, or exhaustive mode above the threshold.
SearchOutcome search_embedding(const Graph& g, const SearchConfig& cfg);

/// 1 - V/2 + E(girth-2)/(2 girth), rounded up and clamped at 0.
int girth_euler_bound(std::size_t vertices, std::size_t edges, std::size_t girth);

struct MinorBound {
    std::string name;
    Graph pattern;
    /// Genus of the pattern; a found minor implies genus >= this.
    int genus = 0;
};

struct ExactGenusOptions {
    std::int64_t budget = 1'000'000;
    std::uint64_t seed = 1;
    int restarts = 8;
    double exhaustive_threshold = kDefaultExhaustiveThreshold;
    std::vector<MinorBound> minors;
    std::int64_t minor_budget = 10'000'000;
};

struct GenusReport {
    GenusEstimate estimate;
    /// Best embedding found; witnesses the upper bound.
    std::optional<EmbeddingCertificate> certificate;
    /// Name and branch sets of the minor that gave the lower bound, if any.
    std::optional<std::pair<std::string, MinorWitness>> minor;
};

/// Planarity, Euler and block bounds, supplied minor patterns, exhaustive
/// search when the rotation space is small, heuristic search otherwise.
/// Never reports exact unless a certificate meets a proven lower bound.
GenusReport exact_genus_small(const Graph& g, const ExactGenusOptions& opts = {});

}  // namespace latgenus
