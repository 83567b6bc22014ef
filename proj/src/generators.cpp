#include "latgenus/generators.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "latgenus/errors.hpp"

namespace latgenus {

GridSpec::GridSpec(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw InputError("grid spec needs at least one exponent");
    }
    for (int e : exponents_) {
        if (e < 1) {
            throw InputError("grid exponents must be positive");
        }
    }
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
}

std::string GridSpec::to_string() const {
    std::string s;
    for (int e : exponents_) {
        if (!s.empty()) {
            s += ',';
        }
        s += std::to_string(e);
    }
    return s;
}

GridSpec parse_grid_spec(const std::string& text) {
    std::vector<int> exps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) {
                throw InputError("bad grid exponent '" + tok + "'");
            }
            exps.push_back(v);
        } catch (const std::logic_error&) {
            throw InputError("bad grid exponent '" + tok + "'");
        }
    }
    return GridSpec(std::move(exps));
}

Graph path_graph(int length) {
    if (length < 0) {
        throw InputError("path length must be nonnegative");
    }
    Graph g;
    for (int i = 0; i <= length; ++i) {
        g.add_vertex(std::to_string(i));
    }
    for (int i = 0; i < length; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw InputError("cycle needs at least 3 vertices");
    }
    Graph g = path_graph(n - 1);
    g.add_edge(static_cast<VertexId>(n - 1), VertexId{0});
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) {
        throw InputError("complete graph needs a vertex");
    }
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_vertex(std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) {
        throw InputError("K_{m,n} needs m, n >= 1");
    }
    Graph g;
    for (int i = 0; i < m; ++i) {
        g.add_vertex("u" + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
        g.add_vertex("v" + std::to_string(j));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(m + j));
        }
    }
    return g;
}

Graph one_point_union(const Graph& block, VertexId left_vertex, VertexId right_vertex) {
    Graph g;
    const VertexId hub = g.add_vertex("hub");
    std::vector<VertexId> left(block.num_vertices()), right(block.num_vertices());
    for (VertexId v = 0; v < block.num_vertices(); ++v) {
        left[v] = v == left_vertex ? hub : g.add_vertex("L." + block.label(v));
    }
    for (VertexId v = 0; v < block.num_vertices(); ++v) {
        right[v] = v == right_vertex ? hub : g.add_vertex("R." + block.label(v));
    }
    for (auto [u, v] : block.edges()) {
        g.add_edge(left[u], left[v]);
        g.add_edge(right[u], right[v]);
    }
    return g;
}

Graph double_k33() {
    const Graph k33 = complete_bipartite(3, 3);
    return one_point_union(k33, 0, 0);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    Graph g;
    const std::size_t nb = b.num_vertices();
    for (VertexId i = 0; i < a.num_vertices(); ++i) {
        for (VertexId j = 0; j < nb; ++j) {
            g.add_vertex("(" + a.label(i) + "," + b.label(j) + ")");
        }
    }
    auto id = [nb](VertexId i, VertexId j) { return i * nb + j; };
    for (auto [u, v] : a.edges()) {
        for (VertexId j = 0; j < nb; ++j) {
            g.add_edge(id(u, j), id(v, j));
        }
    }
    for (auto [u, v] : b.edges()) {
        for (VertexId i = 0; i < a.num_vertices(); ++i) {
            g.add_edge(id(i, u), id(i, v));
        }
    }
    return g;
}

Graph grid_graph(const GridSpec& spec) {
    const auto& e = spec.exponents();
    const std::size_t k = e.size();
    std::size_t count = 1;
    for (int x : e) {
        count *= static_cast<std::size_t>(x + 1);
    }
    // Mixed radix with the first coordinate most significant.
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) {
        stride[i - 1] = stride[i] * static_cast<std::size_t>(e[i] + 1);
    }
    Graph g;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::string label = "(";
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) {
                label += ',';
            }
            label += std::to_string((idx / stride[i]) % static_cast<std::size_t>(e[i] + 1));
        }
        g.add_vertex(label + ")");
    }
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t d = (idx / stride[i]) % static_cast<std::size_t>(e[i] + 1);
            if (d < static_cast<std::size_t>(e[i])) {
                g.add_edge(idx, idx + stride[i]);
            }
        }
    }
    return g;
}

std::string gn_label(const char* family, int index) {
    return std::string(family) + "_" + std::to_string(index);
}

namespace {

void add_gn_copy(Graph& g, const std::string& a, const std::string& b, const std::string& c,
                 const char* left, const char* right, int n) {
    g.add_vertex(a);
    g.add_vertex(b);
    g.add_vertex(c);
    for (int i = 1; i <= n; ++i) {
        g.add_vertex(gn_label(left, i));
        g.add_vertex(gn_label(right, i));
    }
    for (int i = 1; i <= n; ++i) {
        const auto l = gn_label(left, i);
        const auto r = gn_label(right, i);
        g.add_edge(b, l);
        g.add_edge(b, r);
        g.add_edge(a, l);
        g.add_edge(c, r);
        g.add_edge(l, r);
    }
}

}  // namespace

Graph gn_graph(int n) {
    if (n < 2) {
        throw InputError("G_n needs n >= 2");
    }
    Graph g;
    add_gn_copy(g, "a", "b", "c", "alpha", "beta", n);
    return g;
}

std::vector<std::pair<std::string, std::string>> hn_connecting_edges() {
    return {{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}, {"b0", "a1"}, {"c0", "b1"}};
}

Graph hn_graph(int n) {
    if (n < 2) {
        throw InputError("H_n needs n >= 2");
    }
    Graph g;
    add_gn_copy(g, "a0", "b0", "c0", "alpha", "beta", n);
    add_gn_copy(g, "a1", "b1", "c1", "gamma", "delta", n);
    for (const auto& [u, v] : hn_connecting_edges()) {
        g.add_edge(u, v);
    }
    return g;
}

Graph zppq_graph(int p) {
    if (p < 2) {
        throw InputError("Z_p x Z_p x Z_q shape needs p >= 2");
    }
    Graph g;
    for (const char* s : {"a", "b", "c", "d"}) {
        g.add_vertex(s);
    }
    for (int i = 0; i <= p; ++i) {
        g.add_vertex(std::to_string(i) + "_a");
        g.add_vertex(std::to_string(i) + "_c");
    }
    for (int i = 0; i <= p; ++i) {
        const auto ia = std::to_string(i) + "_a";
        const auto ic = std::to_string(i) + "_c";
        g.add_edge("a", ia);
        g.add_edge("b", ia);
        g.add_edge("c", ic);
        g.add_edge("d", ic);
        g.add_edge(ia, ic);
    }
    g.add_edge("a", "c");
    g.add_edge("b", "d");
    return g;
}

}  // namespace latgenus
