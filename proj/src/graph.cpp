#include "latgenus/graph.hpp"

#include <algorithm>
#include <sstream>

#include "latgenus/errors.hpp"

namespace latgenus {

VertexId Graph::add_vertex(std::string label) {
    if (index_.count(label) != 0) {
        throw InputError("duplicate vertex label: " + label);
    }
    const VertexId id = labels_.size();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return id;
}

bool Graph::add_edge(VertexId u, VertexId v) {
    if (u >= labels_.size() || v >= labels_.size()) {
        throw InputError("edge endpoint out of range");
    }
    if (u == v) {
        throw InputError("loop at vertex " + labels_[u]);
    }
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) {
        return false;
    }
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::add_edge(std::string_view u, std::string_view v) {
    return add_edge(at(u), at(v));
}

std::optional<VertexId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexId Graph::at(std::string_view label) const {
    auto v = find(label);
    if (!v) {
        throw InputError("unknown vertex: " + std::string(label));
    }
    return *v;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (labels_.empty()) {
        return true;
    }
    std::vector<char> seen(labels_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == labels_.size();
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Graph out;
    std::unordered_map<VertexId, VertexId> map;
    for (VertexId v : sorted) {
        map[v] = out.add_vertex(g.label(v));
    }
    for (VertexId v : sorted) {
        for (VertexId w : g.neighbors(v)) {
            auto it = map.find(w);
            if (v < w && it != map.end()) {
                out.add_edge(map[v], it->second);
            }
        }
    }
    return out;
}

Graph relabeled(const Graph& g, const std::vector<std::string>& names) {
    if (names.size() != g.num_vertices()) {
        throw InputError("relabeling size mismatch");
    }
    Graph out;
    for (const auto& n : names) {
        out.add_vertex(n);
    }
    for (auto [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({g.label(u), g.label(v)});
    }
    return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw InputError("graph JSON needs \"vertices\" and \"edges\"");
    }
    Graph g;
    try {
        for (const auto& v : j.at("vertices")) {
            g.add_vertex(v.get<std::string>());
        }
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InputError("edge must be a pair of labels");
            }
            if (!g.add_edge(e[0].get<std::string>(), e[1].get<std::string>())) {
                throw InputError("duplicate edge " + e.dump());
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("graph JSON: ") + ex.what());
    }
    return g;
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const auto& l : g.labels()) {
        os << "  \"" << l << "\";\n";
    }
    for (auto [u, v] : g.edges()) {
        os << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace latgenus
