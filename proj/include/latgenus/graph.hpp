#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace latgenus {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on string-labeled vertices. Vertex ids are dense
/// and follow insertion order; neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;

    /// Throws InputError if the label already exists.
    VertexId add_vertex(std::string label);
    /// Throws InputError on a loop or unknown endpoint. Returns false if the
    /// edge was already present.
    bool add_edge(VertexId u, VertexId v);
    bool add_edge(std::string_view u, std::string_view v);

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const { return edge_count_; }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;
    /// Like find() but throws InputError for unknown labels.
    VertexId at(std::string_view label) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool is_connected() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

/// Subgraph induced by `keep`, preserving the relative vertex order.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

/// Vertex-relabeled copy: label(v) -> names[v].
Graph relabeled(const Graph& g, const std::vector<std::string>& names);

/// `{ "vertices": [str], "edges": [[str,str]] }`
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const Graph& g, std::string_view name = "G");

}  // namespace latgenus
