#pragma once

// Rotation systems, face certificates and their verifier, the three
// parameterized certificate families, and fan-expansion surgery.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latgenus/errors.hpp"
#include "latgenus/graph.hpp"

namespace latgenus {

/// rotation[v] is the cyclic order of v's neighbours.
struct RotationSystem {
    std::vector<std::vector<VertexId>> rotation;
};

/// Throws InputError unless every rotation[v] is a permutation of N(v).
void check_rotation(const Graph& g, const RotationSystem& rot);

/// A closed walk; the first vertex is not repeated at the end.
using FaceWalk = std::vector<std::string>;

struct EmbeddingCertificate {
    Graph graph;
    std::vector<FaceWalk> faces;
};

struct VerifiedGenus {
    std::size_t faces = 0;
    int genus = 0;
};

struct CertificateViolation {
    enum class Kind {
        UnknownVertex,
        EmptyFace,
        NonEdge,
        DartMissing,
        DartRepeated,
        RotationNotSingleCycle,
        Disconnected,
        BadGenus,
    };
    Kind kind = Kind::NonEdge;
    std::string message;
    /// Offending face index, if the violation is local to one face.
    std::optional<std::size_t> face;
    /// Offending vertex or dart endpoints.
    std::vector<std::string> where;
};

const char* to_string(CertificateViolation::Kind kind);

/// `{"error": kind, "message": str, "face": int|null, "where": [str]}`
nlohmann::json violation_to_json(const CertificateViolation& v);

class CertificateError : public InputError {
public:
    explicit CertificateError(CertificateViolation violation)
        : InputError(violation.message), violation_(std::move(violation)) {}
    const CertificateViolation& violation() const { return violation_; }

private:
    CertificateViolation violation_;
};

/// Face-tracing with successor (u -> v) |-> (v -> rot_v(u)), where rot_v(u)
/// follows u in v's cyclic order. Faces start at the lowest untraced dart.
EmbeddingCertificate trace_faces(const Graph& g, const RotationSystem& rot);

/// Returns the first violated invariant, or nullopt when the certificate is
/// the face set of a genuine orientable embedding of its (connected) graph.
std::optional<CertificateViolation> find_violation(const EmbeddingCertificate& cert);

/// Throws CertificateError on any violation.
VerifiedGenus verify_certificate(const EmbeddingCertificate& cert);

/// The rotation system whose faces are exactly `cert.faces`. Verifies first.
RotationSystem rotation_from_certificate(const EmbeddingCertificate& cert);

/// Rotation system of a planar embedding (Boyer-Myrvold), or nullopt when
/// the graph is not planar.
std::optional<RotationSystem> planar_rotation(const Graph& g);

/// Faces rotated to start at their smallest dart, then sorted; equal for two
/// certificates iff they describe the same face multiset.
std::vector<FaceWalk> canonical_faces(const std::vector<FaceWalk>& faces);

/// n = 2 (mod 4). Certificate on gn_graph(n) with 5n/2 faces.
EmbeddingCertificate gn_certificate(int n);
/// n = 1 (mod 4), n >= 5. Certificate on hn_graph(n) with 5n + 2 faces.
EmbeddingCertificate hn_certificate(int n);
/// p odd prime. Certificate on zppq_graph(p) with 2p + 4 faces.
EmbeddingCertificate zppq_certificate(int p);

/// Replaces edge {u, v} by k paths u - w_j - v (w_j = labels[j-1]). The face
/// using u -> v now runs through w_1, the face using v -> u through w_k, and
/// k - 1 quadrilaterals fill the gaps. Genus is unchanged.
EmbeddingCertificate fan_expansion(const EmbeddingCertificate& cert, const std::string& u,
                                   const std::string& v, int k,
                                   const std::vector<std::string>& labels);

/// Transports a certificate along an isomorphism onto `target`.
EmbeddingCertificate lift_certificate_to_lattice(const EmbeddingCertificate& cert,
                                                 const Graph& target);

/// G_{p+1} with every alpha_i beta_i edge fanned out p times. Fan vertex j of
/// edge i is labeled "w_i_j".
EmbeddingCertificate surgered_gn_certificate(int p);

/// `{"graph": <graph JSON>, "faces": [[str, ...], ...]}`
nlohmann::json certificate_to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace latgenus
