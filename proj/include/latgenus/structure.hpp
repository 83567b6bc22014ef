#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latgenus/graph.hpp"

namespace latgenus {

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

struct BlockDecomposition {
    /// Maximal 2-connected subgraphs; bridges appear as 2-vertex blocks.
    std::vector<Graph> blocks;
    std::vector<std::string> cut_vertices;
};

/// Biconnected components of a connected graph. Throws InputError when
/// the graph is disconnected.
BlockDecomposition block_decomposition(const Graph& g);

/// Boyer-Myrvold planarity test.
bool is_planar(const Graph& g);

/// Vertex bijection mapping[v1] = v2 with g1 -> g2 edge-preserving, or
/// nullopt when the graphs are not isomorphic.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g1, const Graph& g2);

inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
    return find_isomorphism(g1, g2).has_value();
}

}  // namespace latgenus
