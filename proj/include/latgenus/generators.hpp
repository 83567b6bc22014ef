#pragma once

// Graph families: paths, cycles, complete graphs, Cartesian products, grid
// graphs, and the G_n / H_n / Z_p x Z_p x Z_q shapes used by the embedding
// certificates.

#include <string>
#include <vector>

#include "latgenus/graph.hpp"

namespace latgenus {

/// Exponents e_1 >= ... >= e_k >= 1 of a grid graph; kept sorted descending.
class GridSpec {
public:
    explicit GridSpec(std::vector<int> exponents);

    const std::vector<int>& exponents() const { return exponents_; }
    std::size_t dimension() const { return exponents_.size(); }

    /// "3,2,1"
    std::string to_string() const;

    bool operator==(const GridSpec&) const = default;

private:
    std::vector<int> exponents_;
};

/// Parses "3,2,1" (any order; sorted on construction).
GridSpec parse_grid_spec(const std::string& text);

/// Path with `length` edges, vertices "0".."length".
Graph path_graph(int length);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{m,n} on "u0".."u{m-1}" and "v0".."v{n-1}".
Graph complete_bipartite(int m, int n);
/// Two copies of `block` glued at one vertex. Labels get "L." / "R." prefixes
/// except the shared vertex, which is named "hub".
Graph one_point_union(const Graph& block, VertexId left_vertex, VertexId right_vertex);
/// Two K_{3,3} sharing one vertex.
Graph double_k33();

/// Vertex labels "(x,y)" built from the factor labels.
Graph cartesian_product(const Graph& a, const Graph& b);

/// Product of paths of lengths e_i; vertices "(d_1,...,d_k)".
Graph grid_graph(const GridSpec& spec);

/// G_n: vertices a, b, c, alpha_i, beta_i (i = 1..n); edges b-alpha_i,
/// b-beta_i, a-alpha_i, c-beta_i, alpha_i-beta_i.
Graph gn_graph(int n);

/// H_n: copy 0 of G_n on a0,b0,c0,alpha_i,beta_i; copy 1 on a1,b1,c1,
/// gamma_i,delta_i; plus a0-a1, b0-b1, c0-c1, b0-a1, c0-b1.
Graph hn_graph(int n);

/// The connecting edges of hn_graph, as label pairs.
std::vector<std::pair<std::string, std::string>> hn_connecting_edges();

/// Shape of the Z_p x Z_p x Z_q lattice: a (trivial), b (order p^2),
/// c (order q), d (whole group), i_a (order p) and i_c (order pq) for
/// i = 0..p. Edges a-i_a, b-i_a, c-i_c, d-i_c, i_a-i_c, a-c, b-d.
Graph zppq_graph(int p);

std::string gn_label(const char* family, int index);

}  // namespace latgenus
