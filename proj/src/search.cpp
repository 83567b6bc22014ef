#include "latgenus/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "latgenus/errors.hpp"
#include "latgenus/structure.hpp"

namespace latgenus {

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::FoundCertificate:
            return "found-certificate";
        case SearchStatus::ExhaustedNoEmbedding:
            return "exhausted-no-embedding";
        case SearchStatus::BudgetExceeded:
            return "budget-exceeded";
    }
    return "?";
}

double rotation_space_size(const Graph& g) {
    double product = 1.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (std::size_t i = 2; i < g.degree(v); ++i) {
            product *= static_cast<double>(i);
        }
    }
    return product;
}

int girth_euler_bound(std::size_t vertices, std::size_t edges, std::size_t girth) {
    if (girth < 3) {
        throw InputError("girth must be at least 3");
    }
    const auto g = static_cast<std::int64_t>(girth);
    const Rational value = Rational(1) - Rational(static_cast<std::int64_t>(vertices), 2) +
                           Rational(static_cast<std::int64_t>(edges) * (g - 2), 2 * g);
    return static_cast<int>(std::max<std::int64_t>(0, ceil_rational(value)));
}

namespace {

// Rotation system over dart ids. Dart d = offset[u] + i runs from u to
// neighbors(u)[i]; rot[v] lists v's out-darts in cyclic order.
class DartRotation {
public:
    explicit DartRotation(const Graph& g) : g_(g) {
        const std::size_t n = g.num_vertices();
        offset_.assign(n + 1, 0);
        for (VertexId v = 0; v < n; ++v) {
            offset_[v + 1] = offset_[v] + g.degree(v);
        }
        const std::size_t darts = offset_.back();
        head_.resize(darts);
        tail_.resize(darts);
        rev_.resize(darts);
        pos_.resize(darts);
        rot_.resize(n);
        for (VertexId u = 0; u < n; ++u) {
            const auto& nb = g.neighbors(u);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                const std::size_t d = offset_[u] + i;
                head_[d] = nb[i];
                tail_[d] = u;
                const auto& back = g.neighbors(nb[i]);
                rev_[d] = offset_[nb[i]] +
                          static_cast<std::size_t>(std::lower_bound(back.begin(), back.end(), u) - back.begin());
                rot_[u].push_back(d);
                pos_[d] = i;
            }
        }
        stamp_.assign(darts, 0);
    }

    std::size_t num_darts() const { return head_.size(); }
    VertexId head(std::size_t d) const { return head_[d]; }
    std::size_t rev(std::size_t d) const { return rev_[d]; }
    std::vector<std::size_t>& rot(VertexId v) { return rot_[v]; }

    void set_position(VertexId v, std::size_t i, std::size_t d) {
        rot_[v][i] = d;
        pos_[d] = i;
    }
    void swap(VertexId v, std::size_t i, std::size_t j) {
        auto& r = rot_[v];
        std::swap(r[i], r[j]);
        pos_[r[i]] = i;
        pos_[r[j]] = j;
    }

    /// Face successor of d = (u -> v): the out-dart of v after (v -> u).
    std::size_t next(std::size_t d) const {
        const VertexId v = head_[d];
        const std::size_t back = rev_[d];
        const auto& r = rot_[v];
        std::size_t p = pos_[back] + 1;
        return r[p == r.size() ? 0 : p];
    }

    std::size_t count_faces() {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        std::size_t faces = 0;
        for (std::size_t d = 0; d < head_.size(); ++d) {
            if (stamp_[d] == epoch_) {
                continue;
            }
            ++faces;
            std::size_t x = d;
            do {
                stamp_[x] = epoch_;
                x = next(x);
            } while (x != d);
        }
        return faces;
    }

    RotationSystem to_rotation() const {
        RotationSystem out;
        out.rotation.resize(rot_.size());
        for (VertexId v = 0; v < rot_.size(); ++v) {
            for (std::size_t d : rot_[v]) {
                out.rotation[v].push_back(head_[d]);
            }
        }
        return out;
    }

private:
    const Graph& g_;
    std::vector<std::size_t> offset_, rev_, pos_;
    std::vector<VertexId> head_, tail_;
    std::vector<std::vector<std::size_t>> rot_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

std::int64_t needed_faces(const Graph& g, int target) {
    return 2 - 2 * static_cast<std::int64_t>(target) - static_cast<std::int64_t>(g.num_vertices()) +
           static_cast<std::int64_t>(g.num_edges());
}

SearchOutcome finish(const Graph& g, const RotationSystem& rot, int target, std::uint64_t evaluations) {
    SearchOutcome out;
    out.evaluations = evaluations;
    out.certificate = trace_faces(g, rot);
    out.verified = verify_certificate(*out.certificate);
    out.status = out.verified->genus <= target ? SearchStatus::FoundCertificate : SearchStatus::BudgetExceeded;
    return out;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Simulated annealing on face count. The temperature falls geometrically
// from 1.5 to 0.05 across each restart; moves swap two cyclically adjacent
// entries of one vertex's rotation.
SearchOutcome heuristic_search(const Graph& g, const SearchConfig& cfg) {
    constexpr double kStartTemperature = 1.5;
    constexpr double kEndTemperature = 0.05;
    const std::int64_t needed = needed_faces(g, cfg.target_genus);
    std::mt19937_64 rng(cfg.seed);
    DartRotation state(g);
    std::vector<VertexId> movable;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) >= 3) {
            movable.push_back(v);
        }
    }
    const int restarts = std::max(1, cfg.restarts);
    std::uint64_t evaluations = 0;
    std::size_t best_faces = 0;
    RotationSystem best;
    for (int r = 0; r < restarts; ++r) {
        const std::int64_t remaining = cfg.budget - static_cast<std::int64_t>(evaluations);
        if (remaining <= 0) {
            break;
        }
        const std::int64_t steps = remaining / (restarts - r);
        for (VertexId v : movable) {
            auto& rot = state.rot(v);
            for (std::size_t i = rot.size() - 1; i > 0; --i) {
                state.swap(v, i, rng() % (i + 1));
            }
        }
        std::size_t faces = state.count_faces();
        ++evaluations;
        if (faces > best_faces || best.rotation.empty()) {
            best_faces = faces;
            best = state.to_rotation();
        }
        for (std::int64_t step = 1; step < steps && !movable.empty() &&
                                    static_cast<std::int64_t>(best_faces) < needed;
             ++step) {
            const VertexId v = movable[rng() % movable.size()];
            const std::size_t d = g.degree(v);
            const std::size_t i = rng() % d;
            const std::size_t j = i + 1 == d ? 0 : i + 1;
            state.swap(v, i, j);
            const std::size_t candidate = state.count_faces();
            ++evaluations;
            const double t = kStartTemperature *
                             std::pow(kEndTemperature / kStartTemperature,
                                      static_cast<double>(step) / static_cast<double>(steps));
            const double delta = static_cast<double>(candidate) - static_cast<double>(faces);
            if (delta >= 0 || unit(rng) < std::exp(delta / t)) {
                faces = candidate;
                if (faces > best_faces) {
                    best_faces = faces;
                    best = state.to_rotation();
                }
            } else {
                state.swap(v, i, j);
            }
        }
        if (cfg.progress) {
            cfg.progress(r, best_faces);
        }
        if (static_cast<std::int64_t>(best_faces) >= needed) {
            break;
        }
    }
    return finish(g, best, cfg.target_genus, evaluations);
}

// Vertex-by-vertex DFS over rotations. The first neighbour of each vertex is
// fixed (rotations are cyclic) and the first vertex of degree >= 3 keeps only
// one of each mirror pair. A face is closed once every vertex on it has a
// rotation; open darts must form faces of length >= the shortest possible
// face, which bounds the faces still reachable.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Graph& g, const SearchConfig& cfg)
        : g_(g), state_(g), budget_(cfg.budget), needed_(needed_faces(g, cfg.target_genus)) {
        const auto gi = girth(g);
        std::size_t min_degree = std::numeric_limits<std::size_t>::max();
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            min_degree = std::min(min_degree, g.degree(v));
        }
        // Without degree-1 vertices a face walk never backtracks, so it
        // contains a cycle.
        min_face_ = (gi && min_degree >= 2) ? *gi : 1;

        // BFS order from the highest-degree vertex closes faces early.
        VertexId root = 0;
        for (VertexId v = 1; v < g.num_vertices(); ++v) {
            if (g.degree(v) > g.degree(root)) {
                root = v;
            }
        }
        std::vector<char> seen(g.num_vertices(), 0);
        order_.push_back(root);
        seen[root] = 1;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (VertexId w : g.neighbors(order_[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order_.push_back(w);
                }
            }
        }
        for (VertexId v : order_) {
            if (g.degree(v) >= 3) {
                mirror_vertex_ = v;
                break;
            }
        }
        assigned_.assign(g.num_vertices(), 0);
        closed_by_.assign(state_.num_darts(), -1);
    }

    SearchStatus run() {
        const SearchStatus s = dfs(0, 0, 0);
        return s;
    }
    std::uint64_t nodes() const { return nodes_; }
    RotationSystem rotation() const { return state_.to_rotation(); }

private:
    SearchStatus dfs(std::size_t depth, std::int64_t closed_faces, std::int64_t closed_darts) {
        const auto total = static_cast<std::int64_t>(state_.num_darts());
        if (closed_faces + (total - closed_darts) / static_cast<std::int64_t>(min_face_) < needed_) {
            return SearchStatus::ExhaustedNoEmbedding;
        }
        if (depth == order_.size()) {
            return closed_faces >= needed_ ? SearchStatus::FoundCertificate
                                           : SearchStatus::ExhaustedNoEmbedding;
        }
        const VertexId v = order_[depth];
        auto& rot = state_.rot(v);
        // rest holds out-darts after the fixed first one, permuted in
        // lexicographic order.
        std::vector<std::size_t> rest(rot.begin() + (rot.empty() ? 0 : 1), rot.end());
        std::sort(rest.begin(), rest.end());
        const int tag = static_cast<int>(depth);
        do {
            if (v == mirror_vertex_ && rest.front() > rest.back()) {
                continue;
            }
            if (static_cast<std::int64_t>(++nodes_) > budget_) {
                return SearchStatus::BudgetExceeded;
            }
            for (std::size_t i = 0; i < rest.size(); ++i) {
                state_.set_position(v, i + 1, rest[i]);
            }
            assigned_[v] = 1;
            std::int64_t faces = closed_faces, darts = closed_darts;
            std::vector<std::size_t> marked;
            for (std::size_t out : rot) {
                const std::size_t in = state_.rev(out);
                if (closed_by_[in] != -1) {
                    continue;
                }
                std::size_t len = 0;
                std::size_t x = in;
                bool closed = true;
                do {
                    if (!assigned_[state_.head(x)]) {
                        closed = false;
                        break;
                    }
                    ++len;
                    x = state_.next(x);
                } while (x != in);
                if (!closed) {
                    continue;
                }
                ++faces;
                darts += static_cast<std::int64_t>(len);
                x = in;
                do {
                    closed_by_[x] = tag;
                    marked.push_back(x);
                    x = state_.next(x);
                } while (x != in);
            }
            const SearchStatus s = dfs(depth + 1, faces, darts);
            if (s != SearchStatus::ExhaustedNoEmbedding) {
                return s;
            }
            for (std::size_t d : marked) {
                closed_by_[d] = -1;
            }
            assigned_[v] = 0;
        } while (std::next_permutation(rest.begin(), rest.end()));
        return SearchStatus::ExhaustedNoEmbedding;
    }

    const Graph& g_;
    DartRotation state_;
    std::int64_t budget_;
    std::int64_t needed_;
    std::size_t min_face_ = 1;
    std::vector<VertexId> order_;
    VertexId mirror_vertex_ = std::numeric_limits<VertexId>::max();
    std::vector<char> assigned_;
    std::vector<int> closed_by_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchOutcome search_embedding(const Graph& g, const SearchConfig& cfg) {
    if (g.num_edges() == 0) {
        throw InputError("embedding search needs at least one edge");
    }
    if (!g.is_connected()) {
        throw InputError("embedding search needs a connected graph");
    }
    if (cfg.budget <= 0) {
        throw InputError("search budget must be positive");
    }
    if (cfg.target_genus < 0) {
        throw InputError("target genus must be nonnegative");
    }
    if (cfg.mode == SearchMode::Heuristic) {
        return heuristic_search(g, cfg);
    }
    const double space = rotation_space_size(g);
    if (space > cfg.exhaustive_threshold) {
        throw InputError("exhaustive search refused: rotation space " + std::to_string(space) +
                         " exceeds threshold " + std::to_string(cfg.exhaustive_threshold));
    }
    ExhaustiveSearch search(g, cfg);
    const SearchStatus status = search.run();
    if (status == SearchStatus::FoundCertificate) {
        auto out = finish(g, search.rotation(), cfg.target_genus, search.nodes());
        if (out.status != SearchStatus::FoundCertificate) {
            throw std::logic_error("exhaustive search returned an embedding above the target genus");
        }
        return out;
    }
    SearchOutcome out;
    out.status = status;
    out.evaluations = search.nodes();
    return out;
}

namespace {

// Rotation at a cut vertex: concatenating its rotations from each block
// yields an embedding whose genus is the sum of the block genera.
std::optional<EmbeddingCertificate> merge_block_certificates(const Graph& g, const std::vector<GenusReport>& parts) {
    RotationSystem merged;
    merged.rotation.resize(g.num_vertices());
    for (const auto& part : parts) {
        if (!part.certificate) {
            return std::nullopt;
        }
        const auto local = rotation_from_certificate(*part.certificate);
        const Graph& b = part.certificate->graph;
        for (VertexId v = 0; v < b.num_vertices(); ++v) {
            auto& into = merged.rotation[g.at(b.label(v))];
            for (VertexId w : local.rotation[v]) {
                into.push_back(g.at(b.label(w)));
            }
        }
    }
    return trace_faces(g, merged);
}

}  // namespace

GenusReport exact_genus_small(const Graph& g, const ExactGenusOptions& opts) {
    if (!g.is_connected()) {
        throw InputError("genus computation needs a connected graph");
    }
    if (opts.budget <= 0) {
        throw InputError("search budget must be positive");
    }
    GenusReport report;
    GenusEstimate& est = report.estimate;
    if (g.num_edges() == 0) {
        est = GenusEstimate::exactly(0, "no edges");
        report.certificate = EmbeddingCertificate{g, {}};
        return report;
    }
    if (auto rot = planar_rotation(g)) {
        est = GenusEstimate::exactly(0, "planar (Boyer-Myrvold)");
        report.certificate = trace_faces(g, *rot);
        if (verify_certificate(*report.certificate).genus != 0) {
            throw std::logic_error("planar embedding did not trace to genus 0");
        }
        return report;
    }
    est.raise_lower(1, "nonplanar (Boyer-Myrvold)");
    const auto gi = girth(g);
    if (gi) {
        est.raise_lower(girth_euler_bound(g.num_vertices(), g.num_edges(), *gi),
                        "Euler bound with girth " + std::to_string(*gi));
    }
    const int max_genus = static_cast<int>((g.num_edges() - g.num_vertices() + 1) / 2);
    est.lower_upper(max_genus, "maximum genus bound (E-V+1)/2");

    const auto blocks = block_decomposition(g);
    if (blocks.blocks.size() > 1) {
        std::vector<GenusReport> parts;
        std::vector<GenusEstimate> estimates;
        for (const auto& block : blocks.blocks) {
            parts.push_back(exact_genus_small(block, opts));
            estimates.push_back(parts.back().estimate);
            if (!report.minor && parts.back().minor) {
                report.minor = parts.back().minor;
            }
        }
        est.tighten(block_additive_genus(blocks, estimates));
        report.certificate = merge_block_certificates(g, parts);
        if (report.certificate) {
            est.lower_upper(verify_certificate(*report.certificate).genus, "merged block embeddings");
        }
        return report;
    }

    for (const auto& bound : opts.minors) {
        if (bound.genus <= est.lower) {
            continue;
        }
        const auto found = find_minor(g, bound.pattern, opts.minor_budget);
        if (found.status == MinorSearchStatus::Found) {
            est.raise_lower(bound.genus, bound.name + " minor");
            report.minor = std::make_pair(bound.name, *found.witness);
        }
    }

    auto record = [&](const SearchOutcome& out, const std::string& how) {
        if (out.certificate) {
            const int genus = out.verified->genus;
            if (!report.certificate || genus < verify_certificate(*report.certificate).genus) {
                report.certificate = out.certificate;
            }
            est.lower_upper(genus, how);
        }
    };

    if (rotation_space_size(g) <= opts.exhaustive_threshold) {
        while (!est.exact()) {
            SearchConfig cfg;
            cfg.mode = SearchMode::Exhaustive;
            cfg.target_genus = est.lower;
            cfg.budget = opts.budget;
            cfg.exhaustive_threshold = opts.exhaustive_threshold;
            const auto out = search_embedding(g, cfg);
            if (out.status == SearchStatus::FoundCertificate) {
                record(out, "exhaustive search certificate");
            } else if (out.status == SearchStatus::ExhaustedNoEmbedding) {
                est.raise_lower(cfg.target_genus + 1,
                                "exhaustive search: no embedding of genus " + std::to_string(cfg.target_genus));
            } else {
                break;
            }
        }
    }
    if (!est.exact()) {
        SearchConfig cfg;
        cfg.mode = SearchMode::Heuristic;
        cfg.target_genus = est.lower;
        cfg.budget = opts.budget;
        cfg.seed = opts.seed;
        cfg.restarts = opts.restarts;
        record(search_embedding(g, cfg), "heuristic search certificate");
    }
    return report;
}

}  // namespace latgenus
