#include "latgenus/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "latgenus/errors.hpp"

namespace latgenus {

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.num_vertices();
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = kUnseen;
    std::vector<std::size_t> dist(n);
    std::vector<VertexId> parent(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[root] = 0;
        parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) {
                break;
            }
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kUnseen) {
        return std::nullopt;
    }
    return best;
}

namespace {

struct TarjanState {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> components;
    int timer = 0;

    explicit TarjanState(const Graph& graph)
        : g(graph), disc(graph.num_vertices(), -1), low(graph.num_vertices(), 0) {}

    void visit(VertexId u, VertexId parent) {
        disc[u] = low[u] = timer++;
        for (VertexId w : g.neighbors(u)) {
            if (disc[w] == -1) {
                stack.emplace_back(u, w);
                visit(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Edge> comp;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        if (e == Edge{u, w}) {
                            break;
                        }
                    }
                    components.push_back(std::move(comp));
                }
            } else if (w != parent && disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!g.is_connected()) {
        throw InputError("block decomposition needs a connected graph");
    }
    BlockDecomposition out;
    if (g.num_vertices() == 0) {
        return out;
    }
    TarjanState state(g);
    state.visit(0, 0);
    std::vector<int> membership(g.num_vertices(), 0);
    for (const auto& comp : state.components) {
        std::vector<VertexId> verts;
        for (auto [u, v] : comp) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (VertexId v : verts) {
            ++membership[v];
        }
        // A biconnected component is an induced subgraph of g.
        out.blocks.push_back(induced_subgraph(g, verts));
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (membership[v] >= 2) {
            out.cut_vertices.push_back(g.label(v));
        }
    }
    return out;
}

bool is_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(g.num_vertices());
    for (auto [u, v] : g.edges()) {
        boost::add_edge(u, v, bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// Joint colour refinement so that colours are comparable across graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& a, const Graph& b) {
    std::vector<int> ca(a.num_vertices()), cb(b.num_vertices());
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        ca[v] = static_cast<int>(a.degree(v));
    }
    for (VertexId v = 0; v < b.num_vertices(); ++v) {
        cb[v] = static_cast<int>(b.degree(v));
    }
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> palette;
        auto signature = [](const Graph& g, const std::vector<int>& c, VertexId v) {
            std::vector<int> sig{c[v]};
            for (VertexId w : g.neighbors(v)) {
                sig.push_back(c[w]);
            }
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<std::vector<int>> sa(a.num_vertices()), sb(b.num_vertices());
        for (VertexId v = 0; v < a.num_vertices(); ++v) {
            sa[v] = signature(a, ca, v);
            palette.emplace(sa[v], 0);
        }
        for (VertexId v = 0; v < b.num_vertices(); ++v) {
            sb[v] = signature(b, cb, v);
            palette.emplace(sb[v], 0);
        }
        int next = 0;
        for (auto& [sig, colour] : palette) {
            colour = next++;
        }
        for (VertexId v = 0; v < a.num_vertices(); ++v) {
            ca[v] = palette[sa[v]];
        }
        for (VertexId v = 0; v < b.num_vertices(); ++v) {
            cb[v] = palette[sb[v]];
        }
        if (palette.size() == classes) {
            break;
        }
        classes = palette.size();
    }
    return {ca, cb};
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& g1, const Graph& g2) {
    const std::size_t n = g1.num_vertices();
    if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
        return std::nullopt;
    }
    auto [c1, c2] = refine_colours(g1, g2);
    std::map<int, int> hist1, hist2;
    for (int c : c1) {
        ++hist1[c];
    }
    for (int c : c2) {
        ++hist2[c];
    }
    if (hist1 != hist2) {
        return std::nullopt;
    }

    // Matching order: rarest colour first, then vertices with the most
    // already-ordered neighbours.
    std::vector<VertexId> order;
    std::vector<char> placed(n, 0);
    std::vector<int> placed_nbrs(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId pick = n;
        for (VertexId v = 0; v < n; ++v) {
            if (placed[v]) {
                continue;
            }
            if (pick == n) {
                pick = v;
                continue;
            }
            auto key = [&](VertexId x) {
                return std::make_tuple(-placed_nbrs[x], hist1[c1[x]], -static_cast<int>(g1.degree(x)));
            };
            if (key(v) < key(pick)) {
                pick = v;
            }
        }
        placed[pick] = 1;
        order.push_back(pick);
        for (VertexId w : g1.neighbors(pick)) {
            ++placed_nbrs[w];
        }
    }

    std::vector<VertexId> map(n, n);
    std::vector<char> used(n, 0);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[order[i]] = i;
    }

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) {
            return true;
        }
        const VertexId v = order[depth];
        std::vector<VertexId> mapped_nbrs;
        for (VertexId w : g1.neighbors(v)) {
            if (position[w] < depth) {
                mapped_nbrs.push_back(w);
            }
        }
        std::vector<VertexId> candidates;
        if (!mapped_nbrs.empty()) {
            candidates = g2.neighbors(map[mapped_nbrs.front()]);
        } else {
            candidates.resize(n);
            for (VertexId x = 0; x < n; ++x) {
                candidates[x] = x;
            }
        }
        for (VertexId cand : candidates) {
            if (used[cand] || c2[cand] != c1[v]) {
                continue;
            }
            bool ok = true;
            for (VertexId w : mapped_nbrs) {
                if (!g2.has_edge(cand, map[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            std::size_t used_nbrs = 0;
            for (VertexId x : g2.neighbors(cand)) {
                used_nbrs += used[x] ? 1 : 0;
            }
            if (used_nbrs != mapped_nbrs.size()) {
                continue;
            }
            map[v] = cand;
            used[cand] = 1;
            if (extend(depth + 1)) {
                return true;
            }
            used[cand] = 0;
        }
        map[v] = n;
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return map;
}

}  // namespace latgenus
