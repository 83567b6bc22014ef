#include "latgenus/embedding.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "latgenus/generators.hpp"
#include "latgenus/group.hpp"
#include "latgenus/structure.hpp"

namespace latgenus {

namespace {

// Darts are indexed by position in the sorted adjacency list: dart (u, i)
// goes from u to neighbors(u)[i].
class DartIndex {
public:
    explicit DartIndex(const Graph& g) : offset_(g.num_vertices() + 1, 0) {
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            offset_[v + 1] = offset_[v] + g.degree(v);
        }
    }
    std::size_t size() const { return offset_.back(); }
    std::size_t of(const Graph& g, VertexId u, VertexId v) const {
        const auto& nb = g.neighbors(u);
        return offset_[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    }

private:
    std::vector<std::size_t> offset_;
};

CertificateViolation violation(CertificateViolation::Kind kind, std::string message,
                               std::optional<std::size_t> face = std::nullopt,
                               std::vector<std::string> where = {}) {
    return {kind, std::move(message), face, std::move(where)};
}

}  // namespace

void check_rotation(const Graph& g, const RotationSystem& rot) {
    if (rot.rotation.size() != g.num_vertices()) {
        throw InputError("rotation system has " + std::to_string(rot.rotation.size()) +
                         " entries for " + std::to_string(g.num_vertices()) + " vertices");
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto sorted = rot.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) {
            throw InputError("rotation at '" + g.label(v) + "' is not a permutation of its neighbours");
        }
    }
}

EmbeddingCertificate trace_faces(const Graph& g, const RotationSystem& rot) {
    check_rotation(g, rot);
    const DartIndex darts(g);
    // succ_at[v][u] = neighbour following u in v's rotation.
    std::vector<std::map<VertexId, VertexId>> succ_at(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& r = rot.rotation[v];
        for (std::size_t i = 0; i < r.size(); ++i) {
            succ_at[v][r[i]] = r[(i + 1) % r.size()];
        }
    }
    EmbeddingCertificate cert{g, {}};
    std::vector<char> used(darts.size(), 0);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (used[darts.of(g, u, v)]) {
                continue;
            }
            FaceWalk face;
            VertexId a = u, b = v;
            while (!used[darts.of(g, a, b)]) {
                used[darts.of(g, a, b)] = 1;
                face.push_back(g.label(a));
                const VertexId c = succ_at[b][a];
                a = b;
                b = c;
            }
            cert.faces.push_back(std::move(face));
        }
    }
    return cert;
}

const char* to_string(CertificateViolation::Kind kind) {
    using K = CertificateViolation::Kind;
    switch (kind) {
        case K::UnknownVertex:
            return "unknown-vertex";
        case K::EmptyFace:
            return "empty-face";
        case K::NonEdge:
            return "non-edge";
        case K::DartMissing:
            return "dart-missing";
        case K::DartRepeated:
            return "dart-repeated";
        case K::RotationNotSingleCycle:
            return "rotation-not-single-cycle";
        case K::Disconnected:
            return "disconnected";
        case K::BadGenus:
            return "bad-genus";
    }
    return "?";
}

nlohmann::json violation_to_json(const CertificateViolation& v) {
    return {{"error", to_string(v.kind)},
            {"message", v.message},
            {"face", v.face ? nlohmann::json(*v.face) : nlohmann::json(nullptr)},
            {"where", v.where}};
}

namespace {

struct Checked {
    std::optional<CertificateViolation> error;
    // next_at[v][u] = w when some face runs u -> v -> w.
    std::vector<std::map<VertexId, VertexId>> next_at;
};

Checked check_certificate(const EmbeddingCertificate& cert) {
    using K = CertificateViolation::Kind;
    const Graph& g = cert.graph;
    Checked out;
    if (!g.is_connected()) {
        out.error = violation(K::Disconnected, "certificate graph is disconnected");
        return out;
    }
    const DartIndex darts(g);
    std::vector<std::size_t> cover(darts.size(), 0);
    out.next_at.resize(g.num_vertices());
    for (std::size_t f = 0; f < cert.faces.size(); ++f) {
        const auto& face = cert.faces[f];
        if (face.empty()) {
            out.error = violation(K::EmptyFace, "face " + std::to_string(f) + " is empty", f);
            return out;
        }
        std::vector<VertexId> ids;
        for (const auto& label : face) {
            const auto id = g.find(label);
            if (!id) {
                out.error = violation(K::UnknownVertex, "face " + std::to_string(f) +
                                                            " names unknown vertex '" + label + "'",
                                      f, {label});
                return out;
            }
            ids.push_back(*id);
        }
        const std::size_t len = ids.size();
        for (std::size_t i = 0; i < len; ++i) {
            const VertexId a = ids[i], b = ids[(i + 1) % len], c = ids[(i + 2) % len];
            if (!g.has_edge(a, b)) {
                out.error = violation(K::NonEdge,
                                      "face " + std::to_string(f) + " steps along non-edge " +
                                          g.label(a) + "-" + g.label(b),
                                      f, {g.label(a), g.label(b)});
                return out;
            }
            if (++cover[darts.of(g, a, b)] > 1) {
                out.error = violation(K::DartRepeated,
                                      "dart " + g.label(a) + "->" + g.label(b) + " is traversed twice", f,
                                      {g.label(a), g.label(b)});
                return out;
            }
            out.next_at[b][a] = c;
        }
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (cover[darts.of(g, u, v)] == 0) {
                out.error = violation(K::DartMissing,
                                      "dart " + g.label(u) + "->" + g.label(v) + " is not traversed",
                                      std::nullopt, {g.label(u), g.label(v)});
                return out;
            }
        }
    }
    // Every dart is used once, so next_at[v] is a permutation of N(v).
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& next = out.next_at[v];
        if (next.empty()) {
            continue;
        }
        std::size_t steps = 0;
        const VertexId start = next.begin()->first;
        VertexId x = start;
        do {
            x = next.at(x);
            ++steps;
        } while (x != start);
        if (steps != g.degree(v)) {
            out.error = violation(K::RotationNotSingleCycle,
                                  "faces around '" + g.label(v) + "' form more than one cycle",
                                  std::nullopt, {g.label(v)});
            return out;
        }
    }
    return out;
}

}  // namespace

std::optional<CertificateViolation> find_violation(const EmbeddingCertificate& cert) {
    auto checked = check_certificate(cert);
    if (checked.error) {
        return checked.error;
    }
    const auto v = static_cast<std::int64_t>(cert.graph.num_vertices());
    const auto e = static_cast<std::int64_t>(cert.graph.num_edges());
    // A single vertex has one face with no darts.
    const auto f = e == 0 ? std::int64_t{1} : static_cast<std::int64_t>(cert.faces.size());
    const std::int64_t twice = 2 - v + e - f;
    if (twice < 0 || twice % 2 != 0) {
        return violation(CertificateViolation::Kind::BadGenus,
                         "Euler characteristic gives genus " + std::to_string(twice) + "/2");
    }
    return std::nullopt;
}

VerifiedGenus verify_certificate(const EmbeddingCertificate& cert) {
    if (auto bad = find_violation(cert)) {
        throw CertificateError(std::move(*bad));
    }
    const auto v = static_cast<std::int64_t>(cert.graph.num_vertices());
    const auto e = static_cast<std::int64_t>(cert.graph.num_edges());
    const std::size_t f = e == 0 ? 1 : cert.faces.size();
    return {f, static_cast<int>((2 - v + e - static_cast<std::int64_t>(f)) / 2)};
}

RotationSystem rotation_from_certificate(const EmbeddingCertificate& cert) {
    verify_certificate(cert);
    const auto checked = check_certificate(cert);
    const Graph& g = cert.graph;
    RotationSystem rot;
    rot.rotation.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) {
            continue;
        }
        const VertexId start = g.neighbors(v).front();
        VertexId x = start;
        do {
            rot.rotation[v].push_back(x);
            x = checked.next_at[v].at(x);
        } while (x != start);
    }
    return rot;
}

std::optional<RotationSystem> planar_rotation(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
    BoostGraph bg(g.num_vertices());
    int next_index = 0;
    for (auto [u, v] : g.edges()) {
        const auto e = boost::add_edge(u, v, bg).first;
        boost::put(boost::edge_index, bg, e, next_index++);
    }
    std::vector<std::vector<BoostEdge>> embedding(g.num_vertices());
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) {
        return std::nullopt;
    }
    RotationSystem rot;
    rot.rotation.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (const auto& e : embedding[v]) {
            const auto s = boost::source(e, bg);
            const auto t = boost::target(e, bg);
            rot.rotation[v].push_back(s == v ? t : s);
        }
    }
    return rot;
}

std::vector<FaceWalk> canonical_faces(const std::vector<FaceWalk>& faces) {
    std::vector<FaceWalk> out;
    out.reserve(faces.size());
    for (const auto& face : faces) {
        FaceWalk best = face;
        for (std::size_t s = 1; s < face.size(); ++s) {
            FaceWalk rotated(face.begin() + static_cast<std::ptrdiff_t>(s), face.end());
            rotated.insert(rotated.end(), face.begin(), face.begin() + static_cast<std::ptrdiff_t>(s));
            best = std::min(best, rotated);
        }
        out.push_back(std::move(best));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// 1-based cyclic index into 1..n.
int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace

EmbeddingCertificate gn_certificate(int n) {
    if (n < 2 || n % 4 != 2) {
        throw InputError("G_n certificate needs n = 2 (mod 4), got " + std::to_string(n));
    }
    auto al = [n](int i) { return gn_label("alpha", wrap(i, n)); };
    auto be = [n](int i) { return gn_label("beta", wrap(i, n)); };
    EmbeddingCertificate cert{gn_graph(n), {}};
    auto& F = cert.faces;
    for (int i = 1; i <= n; ++i) {
        F.push_back(i % 2 ? FaceWalk{"b", al(i), be(i)} : FaceWalk{"b", be(i), al(i)});
    }
    for (int i = 1; i < n; i += 2) {
        F.push_back({"b", be(i), "c", be(i + 1)});
    }
    for (int i = 2; i <= n; i += 2) {
        F.push_back({"b", al(i), "a", al(i + 1)});
    }
    for (int i = 1; i < n; i += 2) {
        F.push_back({"c", be(i), al(i), "a", al(i + n / 2), be(i + n / 2)});
    }
    return cert;
}

EmbeddingCertificate hn_certificate(int n) {
    if (n < 5 || n % 4 != 1) {
        throw InputError("H_n certificate needs n = 1 (mod 4) and n >= 5, got " + std::to_string(n));
    }
    auto al = [](int i) { return gn_label("alpha", i); };
    auto be = [](int i) { return gn_label("beta", i); };
    auto ga = [](int i) { return gn_label("gamma", i); };
    auto de = [](int i) { return gn_label("delta", i); };
    EmbeddingCertificate cert{hn_graph(n), {}};
    auto& F = cert.faces;
    // (a), (b)
    for (int i = 1; i <= n; ++i) {
        F.push_back(i % 2 ? FaceWalk{"b0", al(i), be(i)} : FaceWalk{"b0", be(i), al(i)});
    }
    for (int i = 1; i <= n; ++i) {
        F.push_back(i % 2 ? FaceWalk{"b1", de(i), ga(i)} : FaceWalk{"b1", ga(i), de(i)});
    }
    // (c), (d)
    for (int i = 1; i < n; ++i) {
        F.push_back(i % 2 ? FaceWalk{"b0", be(i), "c0", be(i + 1)} : FaceWalk{"b0", al(i), "a0", al(i + 1)});
    }
    for (int i = 1; i < n; ++i) {
        F.push_back(i % 2 ? FaceWalk{"b1", de(i + 1), "c1", de(i)} : FaceWalk{"b1", ga(i + 1), "a1", ga(i)});
    }
    // (e), (f)
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        const int j = i + (n + 1) / 2;
        F.push_back(i % 2 ? FaceWalk{"c0", be(i), al(i), "a0", al(j), be(j)}
                          : FaceWalk{"a0", al(i), be(i), "c0", be(j), al(j)});
    }
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        const int j = i + (n + 1) / 2;
        F.push_back(i % 2 ? FaceWalk{"a1", ga(i), de(i), "c1", de(j), ga(j)}
                          : FaceWalk{"c1", de(i), ga(i), "a1", ga(j), de(j)});
    }
    // (g), (h)
    F.push_back({"b0", "a1", "a0", al(1)});
    F.push_back({"b0", be(n), "c0", "b1"});
    F.push_back({"b0", "b1", ga(1), "a1"});
    F.push_back({"c1", de(n), "b1", "c0"});
    const int m = (n + 1) / 2;
    F.push_back({"c0", be(m), al(m), "a0", "a1", ga(m), de(m), "c1"});
    return cert;
}

EmbeddingCertificate zppq_certificate(int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw InputError("Z_p x Z_p x Z_q certificate needs an odd prime p, got " + std::to_string(p));
    }
    auto A = [p](int i) { return std::to_string(((i % (p + 1)) + p + 1) % (p + 1)) + "_a"; };
    auto C = [p](int i) { return std::to_string(((i % (p + 1)) + p + 1) % (p + 1)) + "_c"; };
    EmbeddingCertificate cert{zppq_graph(p), {}};
    auto& F = cert.faces;
    for (int i = 0; i < p; i += 2) {
        F.push_back({"a", A(i), "b", A(i + 1)});
    }
    for (int i = 0; i < p; i += 2) {
        F.push_back({"c", C(i + 1), "d", C(i)});
    }
    F.push_back({"a", "c", C(0), A(0)});
    F.push_back({"a", A(p), C(p), "c"});
    F.push_back({"b", "d", C(1), A(1)});
    F.push_back({"b", A(2), C(2), "d"});
    for (int i = 1; i <= p - 2; i += 2) {
        F.push_back({"a", A(i), C(i), "c", C(i + 1), A(i + 1)});
    }
    for (int i = 3; i <= p; i += 2) {
        F.push_back({"b", A(i + 1), C(i + 1), "d", C(i), A(i)});
    }
    return cert;
}

EmbeddingCertificate fan_expansion(const EmbeddingCertificate& cert, const std::string& u,
                                   const std::string& v, int k,
                                   const std::vector<std::string>& labels) {
    const Graph& g = cert.graph;
    if (k < 1) {
        throw InputError("fan width must be at least 1");
    }
    if (labels.size() != static_cast<std::size_t>(k)) {
        throw InputError("fan expansion needs exactly k fresh labels");
    }
    const VertexId uid = g.at(u), vid = g.at(v);
    if (!g.has_edge(uid, vid)) {
        throw InputError("fan expansion: no edge " + u + "-" + v);
    }
    for (const auto& w : labels) {
        if (g.find(w)) {
            throw InputError("fan expansion: label '" + w + "' already in use");
        }
    }
    Graph out;
    for (const auto& label : g.labels()) {
        out.add_vertex(label);
    }
    for (const auto& w : labels) {
        out.add_vertex(w);  // throws on duplicates within `labels`
    }
    for (auto [a, b] : g.edges()) {
        if (!((a == uid && b == vid) || (a == vid && b == uid))) {
            out.add_edge(a, b);
        }
    }
    for (const auto& w : labels) {
        out.add_edge(u, w);
        out.add_edge(w, v);
    }

    // Locate both traversals of {u, v}; insert the later position first so
    // that the earlier one stays valid when both lie in the same face.
    struct Hit {
        std::size_t face, pos;
        bool forward;
    };
    std::vector<Hit> hits;
    for (std::size_t f = 0; f < cert.faces.size(); ++f) {
        const auto& face = cert.faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            const auto& a = face[i];
            const auto& b = face[(i + 1) % face.size()];
            if (a == u && b == v) {
                hits.push_back({f, i, true});
            } else if (a == v && b == u) {
                hits.push_back({f, i, false});
            }
        }
    }
    if (hits.size() != 2 || hits[0].forward == hits[1].forward) {
        throw InputError("fan expansion: edge " + u + "-" + v + " is not covered once in each direction");
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
        return std::tie(x.face, x.pos) > std::tie(y.face, y.pos);
    });
    EmbeddingCertificate result{std::move(out), cert.faces};
    for (const Hit& h : hits) {
        auto& face = result.faces[h.face];
        const auto& w = h.forward ? labels.front() : labels.back();
        face.insert(face.begin() + static_cast<std::ptrdiff_t>(h.pos + 1), w);
    }
    for (int j = 0; j + 1 < k; ++j) {
        result.faces.push_back({u, labels[static_cast<std::size_t>(j + 1)], v, labels[static_cast<std::size_t>(j)]});
    }
    return result;
}

EmbeddingCertificate lift_certificate_to_lattice(const EmbeddingCertificate& cert, const Graph& target) {
    const auto iso = find_isomorphism(cert.graph, target);
    if (!iso) {
        throw InputError("certificate graph is not isomorphic to the target graph");
    }
    EmbeddingCertificate out{target, {}};
    out.faces.reserve(cert.faces.size());
    for (const auto& face : cert.faces) {
        FaceWalk mapped;
        mapped.reserve(face.size());
        for (const auto& label : face) {
            mapped.push_back(target.label((*iso)[cert.graph.at(label)]));
        }
        out.faces.push_back(std::move(mapped));
    }
    return out;
}

EmbeddingCertificate surgered_gn_certificate(int p) {
    if (!is_prime(static_cast<std::uint64_t>(p)) || (p + 1) % 4 != 2) {
        throw InputError("surgered G_{p+1} needs a prime p = 1 (mod 4), got " + std::to_string(p));
    }
    EmbeddingCertificate cert = gn_certificate(p + 1);
    for (int i = 1; i <= p + 1; ++i) {
        std::vector<std::string> fan;
        for (int j = 1; j <= p; ++j) {
            fan.push_back("w_" + std::to_string(i) + "_" + std::to_string(j));
        }
        cert = fan_expansion(cert, gn_label("alpha", i), gn_label("beta", i), p, fan);
    }
    return cert;
}

nlohmann::json certificate_to_json(const EmbeddingCertificate& cert) {
    return {{"graph", graph_to_json(cert.graph)}, {"faces", cert.faces}};
}

EmbeddingCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("faces") || !j["faces"].is_array()) {
        throw InputError("certificate JSON needs \"graph\" and \"faces\"");
    }
    EmbeddingCertificate cert{graph_from_json(j["graph"]), {}};
    for (const auto& face : j["faces"]) {
        if (!face.is_array()) {
            throw InputError("each face must be an array of vertex labels");
        }
        FaceWalk walk;
        for (const auto& label : face) {
            if (!label.is_string()) {
                throw InputError("face entries must be strings");
            }
            walk.push_back(label.get<std::string>());
        }
        cert.faces.push_back(std::move(walk));
    }
    return cert;
}

}  // namespace latgenus
