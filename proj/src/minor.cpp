#include "latgenus/minor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <tuple>

#include "latgenus/errors.hpp"

namespace latgenus {

Graph apply_minor_script(const Graph& g, const MinorScript& script) {
    const std::size_t n = g.num_vertices();
    std::vector<char> alive(n, 1);
    std::vector<std::set<VertexId>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    auto vertex = [&](const std::string& label) {
        auto v = g.find(label);
        if (!v || !alive[*v]) {
            throw InputError("minor script: no vertex " + label);
        }
        return *v;
    };
    auto edge = [&](const MinorOp& op) {
        if (op.args.size() != 2) {
            throw InputError("minor script: edge operation needs two labels");
        }
        const VertexId u = vertex(op.args[0]);
        const VertexId v = vertex(op.args[1]);
        if (adj[u].count(v) == 0) {
            throw InputError("minor script: no edge " + op.args[0] + "-" + op.args[1]);
        }
        return Edge{u, v};
    };
    for (const auto& op : script) {
        switch (op.kind) {
            case MinorOp::Kind::DeleteVertex: {
                if (op.args.size() != 1) {
                    throw InputError("minor script: delete-vertex needs one label");
                }
                const VertexId v = vertex(op.args[0]);
                for (VertexId w : adj[v]) {
                    adj[w].erase(v);
                }
                adj[v].clear();
                alive[v] = 0;
                break;
            }
            case MinorOp::Kind::DeleteEdge: {
                auto [u, v] = edge(op);
                adj[u].erase(v);
                adj[v].erase(u);
                break;
            }
            case MinorOp::Kind::ContractEdge: {
                auto [u, v] = edge(op);
                for (VertexId w : adj[v]) {
                    adj[w].erase(v);
                    if (w != u) {
                        adj[w].insert(u);
                        adj[u].insert(w);
                    }
                }
                adj[v].clear();
                adj[u].erase(v);
                alive[v] = 0;
                break;
            }
        }
    }
    Graph out;
    std::vector<VertexId> remap(n);
    for (VertexId v = 0; v < n; ++v) {
        if (alive[v]) {
            remap[v] = out.add_vertex(g.label(v));
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : adj[v]) {
            if (v < w) {
                out.add_edge(remap[v], remap[w]);
            }
        }
    }
    return out;
}

namespace {

const char* op_name(MinorOp::Kind kind) {
    switch (kind) {
        case MinorOp::Kind::DeleteVertex:
            return "delete-vertex";
        case MinorOp::Kind::DeleteEdge:
            return "delete-edge";
        case MinorOp::Kind::ContractEdge:
            return "contract-edge";
    }
    return "?";
}

}  // namespace

nlohmann::json minor_script_to_json(const MinorScript& script) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& op : script) {
        out.push_back({{"op", op_name(op.kind)}, {"args", op.args}});
    }
    return out;
}

MinorScript minor_script_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw InputError("minor script must be a JSON array");
    }
    MinorScript script;
    for (const auto& item : j) {
        MinorOp op;
        try {
            const auto name = item.at("op").get<std::string>();
            if (name == "delete-vertex") {
                op.kind = MinorOp::Kind::DeleteVertex;
            } else if (name == "delete-edge") {
                op.kind = MinorOp::Kind::DeleteEdge;
            } else if (name == "contract-edge") {
                op.kind = MinorOp::Kind::ContractEdge;
            } else {
                throw InputError("unknown minor operation '" + name + "'");
            }
            op.args = item.at("args").get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& ex) {
            throw InputError(std::string("minor script: ") + ex.what());
        }
        script.push_back(std::move(op));
    }
    return script;
}

nlohmann::json minor_witness_to_json(const MinorWitness& w) {
    nlohmann::json sets = nlohmann::json::object();
    for (const auto& [p, hosts] : w.branch_sets) {
        sets[p] = hosts;
    }
    return {{"branch_sets", std::move(sets)}};
}

std::optional<std::string> check_minor_witness(const Graph& host, const Graph& pattern,
                                               const MinorWitness& witness) {
    std::vector<int> owner(host.num_vertices(), -1);
    std::vector<std::vector<VertexId>> sets(pattern.num_vertices());
    for (VertexId p = 0; p < pattern.num_vertices(); ++p) {
        auto it = witness.branch_sets.find(pattern.label(p));
        if (it == witness.branch_sets.end() || it->second.empty()) {
            return "empty branch set for " + pattern.label(p);
        }
        for (const auto& hl : it->second) {
            auto h = host.find(hl);
            if (!h) {
                return "unknown host vertex " + hl;
            }
            if (owner[*h] != -1) {
                return "host vertex " + hl + " used twice";
            }
            owner[*h] = static_cast<int>(p);
            sets[p].push_back(*h);
        }
    }
    if (witness.branch_sets.size() != pattern.num_vertices()) {
        return std::string("witness names vertices outside the pattern");
    }
    for (VertexId p = 0; p < pattern.num_vertices(); ++p) {
        std::vector<char> seen(host.num_vertices(), 0);
        std::vector<VertexId> stack{sets[p].front()};
        seen[sets[p].front()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : host.neighbors(u)) {
                if (!seen[w] && owner[w] == static_cast<int>(p)) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != sets[p].size()) {
            return "branch set of " + pattern.label(p) + " is disconnected";
        }
    }
    for (auto [a, b] : pattern.edges()) {
        bool joined = false;
        for (VertexId h : sets[a]) {
            for (VertexId w : host.neighbors(h)) {
                if (owner[w] == static_cast<int>(b)) {
                    joined = true;
                    break;
                }
            }
            if (joined) {
                break;
            }
        }
        if (!joined) {
            return "pattern edge " + pattern.label(a) + "-" + pattern.label(b) + " not realized";
        }
    }
    return std::nullopt;
}

const char* to_string(MinorSearchStatus status) {
    switch (status) {
        case MinorSearchStatus::Found:
            return "found";
        case MinorSearchStatus::ExhaustedAbsent:
            return "exhausted-absent";
        case MinorSearchStatus::BudgetExceeded:
            return "budget-exceeded";
    }
    return "?";
}

namespace {

class MinorSearcher {
public:
    /// A nonzero seed randomizes tie-breaks among candidate moves.
    MinorSearcher(const Graph& host, const Graph& pattern, std::int64_t budget,
                  std::uint64_t shuffle_seed = 0)
        : host_(host),
          pattern_(pattern),
          budget_(budget),
          n_(host.num_vertices()),
          k_(pattern.num_vertices()),
          owner_(n_, -1),
          sets_(k_),
          links_(k_ * k_, 0),
          memo_(kMemoSize),
          randomized_(shuffle_seed != 0) {
        // Host vertices ranked by label so ties break deterministically by label.
        std::vector<VertexId> ids(n_);
        std::iota(ids.begin(), ids.end(), VertexId{0});
        std::sort(ids.begin(), ids.end(),
                  [&](VertexId a, VertexId b) { return host_.label(a) < host_.label(b); });
        if (shuffle_seed != 0) {
            std::mt19937_64 shuffle_rng(shuffle_seed);
            std::shuffle(ids.begin(), ids.end(), shuffle_rng);
        }
        label_rank_.resize(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            label_rank_[ids[r]] = r;
        }
        order_pattern();
        std::mt19937_64 rng(0x5eed5eedULL ^ shuffle_seed);
        zobrist_.resize(n_ * (k_ + 1));
        for (auto& z : zobrist_) {
            z = {rng(), rng()};
        }
        // Memo slots start zeroed, so the empty state must not hash to zero.
        for (VertexId h = 0; h < n_; ++h) {
            hash_.first ^= z(h, -1).first;
            hash_.second ^= z(h, -1).second;
        }
    }

    MinorSearchResult run() {
        MinorSearchResult result;
        if (k_ > n_) {
            result.status = MinorSearchStatus::ExhaustedAbsent;
            return result;
        }
        const bool found = k_ == 0 || dfs();
        result.nodes = nodes_;
        if (found) {
            result.status = MinorSearchStatus::Found;
        } else {
            result.status = aborted_ ? MinorSearchStatus::BudgetExceeded
                                     : MinorSearchStatus::ExhaustedAbsent;
        }
        return result;
    }

    const std::vector<std::vector<VertexId>>& branch_sets() const { return sets_; }

private:
    static constexpr std::size_t kMemoSize = std::size_t{1} << 20;
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    void order_pattern() {
        std::vector<char> placed(k_, 0);
        std::vector<int> placed_nbrs(k_, 0);
        for (std::size_t step = 0; step < k_; ++step) {
            VertexId best = k_;
            for (VertexId p = 0; p < k_; ++p) {
                if (placed[p]) {
                    continue;
                }
                auto key = [&](VertexId x) {
                    return std::make_tuple(-placed_nbrs[x], -static_cast<int>(pattern_.degree(x)),
                                           pattern_.label(x));
                };
                if (best == k_ || key(p) < key(best)) {
                    best = p;
                }
            }
            placed[best] = 1;
            pattern_order_.push_back(best);
            for (VertexId w : pattern_.neighbors(best)) {
                ++placed_nbrs[w];
            }
        }
        position_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) {
            position_[pattern_order_[i]] = i;
        }
        for (VertexId p : pattern_order_) {
            std::vector<VertexId> nbrs = pattern_.neighbors(p);
            std::sort(nbrs.begin(), nbrs.end(),
                      [&](VertexId a, VertexId b) { return position_[a] < position_[b]; });
            for (VertexId q : nbrs) {
                if (position_[q] > position_[p]) {
                    ordered_edges_.emplace_back(p, q);
                }
            }
        }
        // Edges sorted by the later endpoint so earlier-seeded edges come first.
        std::stable_sort(ordered_edges_.begin(), ordered_edges_.end(), [&](Edge a, Edge b) {
            return std::max(position_[a.first], position_[a.second]) <
                   std::max(position_[b.first], position_[b.second]);
        });
    }

    const Key& z(VertexId h, int owner) const {
        return zobrist_[h * (k_ + 1) + static_cast<std::size_t>(owner + 1)];
    }

    void assign(VertexId h, int p) {
        hash_.first ^= z(h, owner_[h]).first ^ z(h, p).first;
        hash_.second ^= z(h, owner_[h]).second ^ z(h, p).second;
        owner_[h] = p;
        sets_[static_cast<std::size_t>(p)].push_back(h);
        for (VertexId w : host_.neighbors(h)) {
            const int q = owner_[w];
            if (q >= 0 && q != p) {
                ++links_[static_cast<std::size_t>(p) * k_ + static_cast<std::size_t>(q)];
                ++links_[static_cast<std::size_t>(q) * k_ + static_cast<std::size_t>(p)];
            }
        }
    }

    void unassign(VertexId h) {
        const int p = owner_[h];
        for (VertexId w : host_.neighbors(h)) {
            const int q = owner_[w];
            if (q >= 0 && q != p) {
                --links_[static_cast<std::size_t>(p) * k_ + static_cast<std::size_t>(q)];
                --links_[static_cast<std::size_t>(q) * k_ + static_cast<std::size_t>(p)];
            }
        }
        sets_[static_cast<std::size_t>(p)].pop_back();
        hash_.first ^= z(h, p).first ^ z(h, -1).first;
        hash_.second ^= z(h, p).second ^ z(h, -1).second;
        owner_[h] = -1;
    }

    bool linked(VertexId a, VertexId b) const { return links_[a * k_ + b] > 0; }

    // Labels connected components of free host vertices; returns their count.
    int label_free_components() {
        comp_.assign(n_, -1);
        int count = 0;
        for (VertexId s = 0; s < n_; ++s) {
            if (owner_[s] != -1 || comp_[s] != -1) {
                continue;
            }
            comp_[s] = count;
            std::vector<VertexId> stack{s};
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (VertexId w : host_.neighbors(u)) {
                    if (owner_[w] == -1 && comp_[w] == -1) {
                        comp_[w] = count;
                        stack.push_back(w);
                    }
                }
            }
            ++count;
        }
        return count;
    }

    // Free components adjacent to the branch set of p, as a 0/1 vector.
    std::vector<char> adjacent_components(VertexId p, int count) const {
        std::vector<char> out(static_cast<std::size_t>(count), 0);
        for (VertexId h : sets_[p]) {
            for (VertexId w : host_.neighbors(h)) {
                if (owner_[w] == -1) {
                    out[static_cast<std::size_t>(comp_[w])] = 1;
                }
            }
        }
        return out;
    }

    // Multi-source BFS distance through free vertices from the free
    // neighbourhood of branch set p.
    std::vector<int> free_distance_from(VertexId p) const {
        std::vector<int> dist(n_, std::numeric_limits<int>::max());
        std::deque<VertexId> queue;
        for (VertexId h : sets_[p]) {
            for (VertexId w : host_.neighbors(h)) {
                if (owner_[w] == -1 && dist[w] != 0) {
                    dist[w] = 0;
                    queue.push_back(w);
                }
            }
        }
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : host_.neighbors(u)) {
                if (owner_[w] == -1 && dist[w] > dist[u] + 1) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    bool seen_before() {
        auto& slot = memo_[hash_.first & (kMemoSize - 1)];
        if (slot == hash_) {
            return true;
        }
        slot = hash_;
        return false;
    }

    bool try_candidates(const std::vector<std::pair<VertexId, VertexId>>& moves) {
        for (auto [h, p] : moves) {
            assign(h, static_cast<int>(p));
            if (dfs()) {
                return true;  // keep the assignment for witness extraction
            }
            unassign(h);
            if (aborted_) {
                return false;
            }
        }
        return false;
    }

    bool dfs() {
        if (static_cast<std::int64_t>(++nodes_) > budget_) {
            aborted_ = true;
            return false;
        }
        if (seen_before()) {
            return false;
        }
        const int count = label_free_components();
        std::size_t free_count = 0;
        for (VertexId h = 0; h < n_; ++h) {
            free_count += owner_[h] == -1 ? 1 : 0;
        }

        std::vector<std::vector<char>> adj_comp(k_);
        std::size_t unseeded = 0;
        for (VertexId p = 0; p < k_; ++p) {
            if (sets_[p].empty()) {
                ++unseeded;
            } else {
                adj_comp[p] = adjacent_components(p, count);
            }
        }
        if (unseeded > free_count) {
            return false;
        }

        // Feasibility: unsatisfied seeded edges need a shared free component;
        // an unseeded vertex needs a free component touching all its seeded
        // neighbours.
        std::optional<Edge> pending;
        for (auto [a, b] : ordered_edges_) {
            if (sets_[a].empty() || sets_[b].empty() || linked(a, b)) {
                continue;
            }
            bool shared = false;
            for (int c = 0; c < count && !shared; ++c) {
                shared = adj_comp[a][static_cast<std::size_t>(c)] && adj_comp[b][static_cast<std::size_t>(c)];
            }
            if (!shared) {
                return false;
            }
            if (!pending) {
                pending = Edge{a, b};
            }
        }
        for (VertexId p = 0; p < k_; ++p) {
            if (!sets_[p].empty()) {
                continue;
            }
            bool any = false;
            for (int c = 0; c < count && !any; ++c) {
                bool all = true;
                for (VertexId q : pattern_.neighbors(p)) {
                    if (!sets_[q].empty() && !adj_comp[q][static_cast<std::size_t>(c)]) {
                        all = false;
                        break;
                    }
                }
                any = all;
            }
            if (!any) {
                return false;
            }
        }

        if (pending) {
            return grow(pending->first, pending->second, adj_comp);
        }
        for (VertexId p : pattern_order_) {
            if (sets_[p].empty()) {
                return seed(p, adj_comp);
            }
        }
        return true;
    }

    bool grow(VertexId a, VertexId b, const std::vector<std::vector<char>>& adj_comp) {
        const auto dist_to_b = free_distance_from(b);
        const auto dist_to_a = free_distance_from(a);
        // (distance to the other side, side, label rank) -> move
        std::vector<std::tuple<int, int, std::size_t, VertexId, VertexId>> keyed;
        auto collect = [&](VertexId side, const std::vector<int>& dist_other, int side_rank) {
            std::vector<char> taken(n_, 0);
            for (VertexId h : sets_[side]) {
                for (VertexId w : host_.neighbors(h)) {
                    if (owner_[w] != -1 || taken[w]) {
                        continue;
                    }
                    const auto c = static_cast<std::size_t>(comp_[w]);
                    if (!adj_comp[a][c] || !adj_comp[b][c]) {
                        continue;
                    }
                    taken[w] = 1;
                    keyed.emplace_back(dist_other[w], side_rank, label_rank_[w], w, side);
                }
            }
        };
        collect(a, dist_to_b, 0);
        collect(b, dist_to_a, 1);
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::pair<VertexId, VertexId>> moves;
        for (const auto& t : keyed) {
            moves.emplace_back(std::get<3>(t), std::get<4>(t));
        }
        return try_candidates(moves);
    }

    bool seed(VertexId p, const std::vector<std::vector<char>>& adj_comp) {
        std::vector<VertexId> seeded_nbrs;
        for (VertexId q : pattern_.neighbors(p)) {
            if (!sets_[q].empty()) {
                seeded_nbrs.push_back(q);
            }
        }
        const int need = static_cast<int>(pattern_.degree(p));
        std::vector<std::tuple<int, int, int, std::size_t, VertexId>> keyed;
        for (VertexId h = 0; h < n_; ++h) {
            if (owner_[h] != -1) {
                continue;
            }
            const auto c = static_cast<std::size_t>(comp_[h]);
            bool ok = true;
            for (VertexId q : seeded_nbrs) {
                ok = ok && adj_comp[q][c];
            }
            if (!ok) {
                continue;
            }
            int touching = 0;
            for (VertexId q : seeded_nbrs) {
                for (VertexId w : host_.neighbors(h)) {
                    if (owner_[w] == static_cast<int>(q)) {
                        ++touching;
                        break;
                    }
                }
            }
            const int deg = static_cast<int>(host_.degree(h));
            if (randomized_) {
                keyed.emplace_back(-touching, deg >= need ? 0 : 1, 0, label_rank_[h], h);
            } else {
                keyed.emplace_back(-touching, deg >= need ? 0 : 1, -deg, label_rank_[h], h);
            }
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::pair<VertexId, VertexId>> moves;
        for (const auto& t : keyed) {
            moves.emplace_back(std::get<4>(t), p);
        }
        return try_candidates(moves);
    }

    const Graph& host_;
    const Graph& pattern_;
    std::int64_t budget_;
    std::size_t n_, k_;
    std::vector<int> owner_;
    std::vector<std::vector<VertexId>> sets_;
    std::vector<int> links_;
    std::vector<Key> memo_;
    std::vector<Key> zobrist_;
    Key hash_{0, 0};
    bool randomized_ = false;
    std::vector<std::size_t> label_rank_;
    std::vector<VertexId> pattern_order_;
    std::vector<std::size_t> position_;
    std::vector<Edge> ordered_edges_;
    std::vector<int> comp_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Routing heuristic: each pattern vertex is repeatedly re-placed as a root
// plus cheapest paths to its placed neighbours' branch sets, with host vertices
// already claimed by other branch sets made expensive. Succeeds once no host
// vertex is shared.
class RouteEmbedder {
public:
    RouteEmbedder(const Graph& host, const Graph& pattern, std::uint64_t seed)
        : host_(host), pattern_(pattern), n_(host.num_vertices()), k_(pattern.num_vertices()), rng_(seed) {
        // BFS order over the pattern from its highest-degree vertex.
        std::vector<char> seen(k_, 0);
        for (VertexId start = 0; start < k_; ++start) {
            VertexId root = start;
            if (seen[root]) {
                continue;
            }
            if (order_.empty()) {
                for (VertexId p = 0; p < k_; ++p) {
                    if (pattern_.degree(p) > pattern_.degree(root)) {
                        root = p;
                    }
                }
            }
            seen[root] = 1;
            const std::size_t first = order_.size();
            order_.push_back(root);
            for (std::size_t i = first; i < order_.size(); ++i) {
                for (VertexId q : pattern_.neighbors(order_[i])) {
                    if (!seen[q]) {
                        seen[q] = 1;
                        order_.push_back(q);
                    }
                }
            }
        }
    }

    /// Returns branch sets on success.
    std::optional<std::vector<std::vector<VertexId>>> run(std::int64_t budget, std::uint64_t& nodes) {
        constexpr int kRounds = 16;
        while (static_cast<std::int64_t>(nodes) < budget) {
            sets_.assign(k_, {});
            usage_.assign(n_, 0);
            history_.assign(n_, 0.0);
            auto order = order_;
            for (int round = 0; round < kRounds; ++round) {
                if (round > 0) {
                    std::shuffle(order.begin(), order.end(), rng_);
                }
                for (VertexId p : order) {
                    place(p, round);
                    if (static_cast<std::int64_t>(++nodes) >= budget) {
                        return std::nullopt;
                    }
                }
                if (std::all_of(usage_.begin(), usage_.end(), [](int u) { return u <= 1; })) {
                    return sets_;
                }
                for (VertexId h = 0; h < n_; ++h) {
                    if (usage_[h] > 1) {
                        history_[h] += 1.0;
                    }
                }
            }
        }
        return std::nullopt;
    }

private:
    // Negotiated congestion: sharing costs grow with the round, and vertices
    // that stayed shared accumulate a history cost.
    double weight(VertexId h, int round) const {
        const double present = 0.5 * std::pow(1.5, std::min(round, 30));
        return (1.0 + history_[h]) * (1.0 + present * usage_[h]);
    }

    // Cheapest cost of a path from h to a vertex adjacent to set(u), counting
    // every path vertex including h; pred leads back toward set(u).
    void distances_from(VertexId u, int round, std::vector<double>& dist, std::vector<VertexId>& pred) const {
        dist.assign(n_, std::numeric_limits<double>::infinity());
        pred.assign(n_, n_);
        using Item = std::pair<double, VertexId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        std::vector<char> in_set(n_, 0);
        for (VertexId h : sets_[u]) {
            in_set[h] = 1;
        }
        for (VertexId h : sets_[u]) {
            for (VertexId w : host_.neighbors(h)) {
                if (in_set[w]) {
                    continue;
                }
                const double d = weight(w, round);
                if (d < dist[w]) {
                    dist[w] = d;
                    pred[w] = n_;
                    queue.emplace(d, w);
                }
            }
        }
        while (!queue.empty()) {
            auto [d, x] = queue.top();
            queue.pop();
            if (d > dist[x]) {
                continue;
            }
            for (VertexId w : host_.neighbors(x)) {
                if (in_set[w]) {
                    continue;
                }
                const double nd = d + weight(w, round);
                if (nd < dist[w]) {
                    dist[w] = nd;
                    pred[w] = x;
                    queue.emplace(nd, w);
                }
            }
        }
    }

    void place(VertexId p, int round) {
        for (VertexId h : sets_[p]) {
            --usage_[h];
        }
        sets_[p].clear();
        std::vector<VertexId> placed;
        for (VertexId q : pattern_.neighbors(p)) {
            if (!sets_[q].empty()) {
                placed.push_back(q);
            }
        }
        std::vector<double> cost(n_, 0.0);
        std::vector<std::vector<VertexId>> preds(placed.size());
        std::vector<double> dist;
        for (std::size_t i = 0; i < placed.size(); ++i) {
            distances_from(placed[i], round, dist, preds[i]);
            for (VertexId h = 0; h < n_; ++h) {
                cost[h] += dist[h];
            }
        }
        std::vector<VertexId> best;
        double best_cost = std::numeric_limits<double>::infinity();
        for (VertexId h = 0; h < n_; ++h) {
            double c = placed.empty() ? weight(h, round)
                                      : cost[h] - static_cast<double>(placed.size() - 1) * weight(h, round);
            if (c < best_cost - 1e-9) {
                best_cost = c;
                best.assign(1, h);
            } else if (c <= best_cost + 1e-9) {
                best.push_back(h);
            }
        }
        if (best.empty()) {
            return;  // no neighbour set is reachable; leave p unplaced this round
        }
        const VertexId root = best[rng_() % best.size()];
        std::vector<char> member(n_, 0);
        auto add = [&](VertexId h) {
            if (!member[h]) {
                member[h] = 1;
                sets_[p].push_back(h);
                ++usage_[h];
            }
        };
        add(root);
        for (std::size_t i = 0; i < placed.size(); ++i) {
            for (VertexId x = preds[i][root]; x != n_; x = preds[i][x]) {
                add(x);
            }
        }
    }

    const Graph& host_;
    const Graph& pattern_;
    std::size_t n_, k_;
    std::mt19937_64 rng_;
    std::vector<VertexId> order_;
    std::vector<std::vector<VertexId>> sets_;
    std::vector<int> usage_;
    std::vector<double> history_;
};

// Annealing over host-vertex ownership. Energy counts, per pattern vertex,
// the components of its branch set beyond one (an empty set counts as one
// missing component) plus the pattern edges with no host edge between their
// branch sets; energy zero is a valid model.
class AnnealEmbedder {
public:
    AnnealEmbedder(const Graph& host, const Graph& pattern, std::uint64_t seed)
        : host_(host), pattern_(pattern), n_(host.num_vertices()), k_(pattern.num_vertices()), rng_(seed) {
        for (auto [a, b] : pattern_.edges()) {
            pattern_edges_.emplace_back(a, b);
        }
    }

    std::optional<std::vector<std::vector<VertexId>>> run(std::int64_t budget, std::uint64_t& nodes) {
        const std::int64_t steps = std::max<std::int64_t>(20000, 400 * static_cast<std::int64_t>(n_));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (static_cast<std::int64_t>(nodes) < budget) {
            owner_.assign(n_, -1);
            for (auto& o : owner_) {
                o = static_cast<int>(rng_() % (k_ + 1)) - 1;
            }
            int energy = evaluate();
            for (std::int64_t step = 0; step < steps; ++step) {
                if (energy == 0) {
                    return sets();
                }
                if (static_cast<std::int64_t>(++nodes) >= budget) {
                    return std::nullopt;
                }
                const double t = 2.0 * std::pow(0.02, static_cast<double>(step) / static_cast<double>(steps));
                const VertexId h = rng_() % n_;
                int label;
                const auto& nbrs = host_.neighbors(h);
                if (!nbrs.empty() && unit(rng_) < 0.8) {
                    label = owner_[nbrs[rng_() % nbrs.size()]];
                } else {
                    label = static_cast<int>(rng_() % (k_ + 1)) - 1;
                }
                if (label == owner_[h]) {
                    continue;
                }
                const int old = owner_[h];
                owner_[h] = label;
                const int next = evaluate();
                if (next <= energy || unit(rng_) < std::exp(static_cast<double>(energy - next) / t)) {
                    energy = next;
                } else {
                    owner_[h] = old;
                }
            }
        }
        return std::nullopt;
    }

private:
    int evaluate() {
        int energy = 0;
        comp_.assign(n_, -1);
        std::vector<int> components(k_, 0);
        for (VertexId s = 0; s < n_; ++s) {
            if (owner_[s] < 0 || comp_[s] >= 0) {
                continue;
            }
            ++components[static_cast<std::size_t>(owner_[s])];
            comp_[s] = 1;
            stack_.assign(1, s);
            while (!stack_.empty()) {
                const VertexId u = stack_.back();
                stack_.pop_back();
                for (VertexId w : host_.neighbors(u)) {
                    if (owner_[w] == owner_[s] && comp_[w] < 0) {
                        comp_[w] = 1;
                        stack_.push_back(w);
                    }
                }
            }
        }
        for (int c : components) {
            energy += c == 0 ? 1 : c - 1;
        }
        linked_.assign(k_ * k_, 0);
        for (auto [u, v] : host_.edges()) {
            const int a = owner_[u];
            const int b = owner_[v];
            if (a >= 0 && b >= 0 && a != b) {
                linked_[static_cast<std::size_t>(a) * k_ + static_cast<std::size_t>(b)] = 1;
                linked_[static_cast<std::size_t>(b) * k_ + static_cast<std::size_t>(a)] = 1;
            }
        }
        for (auto [a, b] : pattern_edges_) {
            energy += linked_[a * k_ + b] ? 0 : 1;
        }
        return energy;
    }

    std::vector<std::vector<VertexId>> sets() const {
        std::vector<std::vector<VertexId>> out(k_);
        for (VertexId h = 0; h < n_; ++h) {
            if (owner_[h] >= 0) {
                out[static_cast<std::size_t>(owner_[h])].push_back(h);
            }
        }
        return out;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::size_t n_, k_;
    std::mt19937_64 rng_;
    std::vector<std::pair<VertexId, VertexId>> pattern_edges_;
    std::vector<int> owner_;
    std::vector<int> comp_;
    std::vector<VertexId> stack_;
    std::vector<char> linked_;
};

// Host with degree-<=1 vertices deleted and degree-2 vertices contracted into
// a neighbour. Both steps preserve the existence of a minor whose minimum
// degree is at least 2 (deletion) or 3 (contraction); members[v] lists the
// original vertices merged into reduced vertex v.
struct ReducedHost {
    Graph graph;
    std::vector<std::vector<VertexId>> members;
};

ReducedHost reduce_host(const Graph& host, std::size_t pattern_min_degree) {
    const std::size_t n = host.num_vertices();
    std::vector<std::set<VertexId>> adj(n);
    for (auto [u, v] : host.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(n, 1);
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) {
        members[v] = {v};
    }
    auto remove = [&](VertexId v) {
        for (VertexId w : adj[v]) {
            adj[w].erase(v);
        }
        adj[v].clear();
        alive[v] = 0;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < n; ++v) {
            if (!alive[v]) {
                continue;
            }
            if (pattern_min_degree >= 2 && adj[v].size() <= 1) {
                remove(v);
                changed = true;
            } else if (pattern_min_degree >= 3 && adj[v].size() == 2) {
                const VertexId y = *adj[v].begin();
                const VertexId z = *std::next(adj[v].begin());
                members[y].insert(members[y].end(), members[v].begin(), members[v].end());
                remove(v);
                adj[y].insert(z);
                adj[z].insert(y);
                changed = true;
            }
        }
    }
    ReducedHost out;
    std::vector<VertexId> id(n, n);
    for (VertexId v = 0; v < n; ++v) {
        if (alive[v]) {
            id[v] = out.graph.add_vertex(host.label(v));
            auto m = members[v];
            std::sort(m.begin(), m.end());
            out.members.push_back(std::move(m));
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : adj[v]) {
            if (v < w) {
                out.graph.add_edge(id[v], id[w]);
            }
        }
    }
    return out;
}

MinorWitness expand_witness(const Graph& host, const ReducedHost& reduced,
                            const std::vector<std::vector<VertexId>>& sets, const Graph& pattern) {
    MinorWitness w;
    for (VertexId p = 0; p < pattern.num_vertices(); ++p) {
        auto& labels = w.branch_sets[pattern.label(p)];
        for (VertexId r : sets[p]) {
            for (VertexId h : reduced.members[r]) {
                labels.push_back(host.label(h));
            }
        }
        std::sort(labels.begin(), labels.end());
    }
    return w;
}

}  // namespace

MinorSearchResult find_minor(const Graph& host, const Graph& pattern, std::int64_t budget) {
    if (budget <= 0) {
        throw InputError("minor search budget must be positive");
    }
    MinorSearchResult result;
    const std::size_t k = pattern.num_vertices();
    if (k == 0) {
        result.status = MinorSearchStatus::Found;
        result.witness = MinorWitness{};
        return result;
    }
    std::size_t min_degree = std::numeric_limits<std::size_t>::max();
    for (VertexId p = 0; p < k; ++p) {
        min_degree = std::min(min_degree, pattern.degree(p));
    }
    const ReducedHost reduced = reduce_host(host, min_degree);
    if (k > reduced.graph.num_vertices()) {
        result.status = MinorSearchStatus::ExhaustedAbsent;
        return result;
    }

    auto accept = [&](const std::vector<std::vector<VertexId>>& sets) {
        MinorWitness w = expand_witness(host, reduced, sets, pattern);
        if (auto bad = check_minor_witness(host, pattern, w)) {
            throw std::logic_error("minor search produced an invalid witness: " + *bad);
        }
        result.status = MinorSearchStatus::Found;
        result.witness = std::move(w);
    };

    RouteEmbedder heuristic(reduced.graph, pattern, 0x9e3779b97f4a7c15ULL);
    if (auto sets = heuristic.run(budget / 8, result.nodes)) {
        accept(*sets);
        return result;
    }
    AnnealEmbedder anneal(reduced.graph, pattern, 0x13198a2e03707344ULL);
    if (auto sets = anneal.run(budget / 4, result.nodes)) {
        accept(*sets);
        return result;
    }
    // Randomized restarts of the exact search with growing budgets.
    std::mt19937_64 rng(0x243f6a8885a308d3ULL);
    for (std::int64_t slice = 1000; static_cast<std::int64_t>(result.nodes) + slice <= budget / 2;
         slice += slice / 2) {
        MinorSearcher attempt(reduced.graph, pattern, slice, rng() | 1);
        auto found = attempt.run();
        result.nodes += found.nodes;
        if (found.status == MinorSearchStatus::Found) {
            accept(attempt.branch_sets());
            return result;
        }
        if (found.status == MinorSearchStatus::ExhaustedAbsent) {
            result.status = found.status;
            return result;
        }
    }
    MinorSearcher exact(reduced.graph, pattern, budget - static_cast<std::int64_t>(result.nodes));
    auto found = exact.run();
    result.nodes += found.nodes;
    result.status = found.status;
    if (found.status == MinorSearchStatus::Found) {
        accept(exact.branch_sets());
    }
    return result;
}

}  // namespace latgenus
