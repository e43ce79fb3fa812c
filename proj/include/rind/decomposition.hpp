#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rind/complex.hpp"

namespace rind {

/// Recursive proof object witnessing vertex decomposability.
///
/// Simplex leaves certify complexes with at most one facet (nullopt marks the
/// void complex, the empty set marks the empty complex). Join nodes certify a
/// join over a vertex partition, one child per part. Shed nodes certify that
/// a vertex is shedding, with child certificates for the deletion and the
/// link at that vertex. Nodes are immutable and shared, so copies are cheap.
class Certificate {
public:
    enum class Kind { Simplex, Join, Shed };

    static Certificate simplex(std::optional<VertexSet> vertices);
    static Certificate join(std::vector<Certificate> children, std::vector<VertexSet> parts);
    static Certificate shed(int vertex, Certificate del_branch, Certificate link_branch);

    Kind kind() const;

    const std::optional<VertexSet>& simplex_vertices() const;  // Simplex only
    const std::vector<Certificate>& children() const;          // Join only
    const std::vector<VertexSet>& parts() const;               // Join only
    int shed_vertex() const;                                   // Shed only
    const Certificate& del_branch() const;                     // Shed only
    const Certificate& link_branch() const;                    // Shed only

    std::size_t node_count() const;

    friend bool operator==(const Certificate& a, const Certificate& b);

    struct Node;

private:
    explicit Certificate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    const Node& node() const { return *node_; }
    std::shared_ptr<const Node> node_;
};

struct Certificate::Node {
    Kind kind;
    std::optional<VertexSet> vertices;  // Simplex
    std::vector<Certificate> branches;  // Join: children; Shed: [del, link]
    std::vector<VertexSet> parts;       // Join
    int vertex = -1;                    // Shed
};

struct NonVdWitness;

/// Per-vertex refutation: either the vertex is not shedding (with the
/// lexicographically least facet of the deletion that extends by the vertex
/// to a face), or it is shedding but one branch is itself not vertex
/// decomposable (with the sub-witness).
struct WitnessReason {
    enum class Kind { NotShedding, DelFails, LinkFails };
    Kind kind;
    int vertex;
    VertexSet offending_facet;                 // NotShedding
    std::shared_ptr<const NonVdWitness> sub;   // DelFails / LinkFails
};

/// Refutation of vertex decomposability: one reason per vertex of the
/// complex, in ascending vertex order.
struct NonVdWitness {
    SimplicialComplex complex;
    std::vector<WitnessReason> reasons;
};

using VdResult = std::variant<Certificate, NonVdWitness>;

inline bool is_decomposable(const VdResult& r) { return std::holds_alternative<Certificate>(r); }

/// True iff no facet of the deletion at v extends by v to a face of k.
/// v must belong to the vertex set of k.
bool is_shedding(const SimplicialComplex& k, int v);

/// The lexicographically least facet F of deletion(k, {v}) with F + v a face
/// of k, or nullopt when v is shedding.
std::optional<VertexSet> shedding_obstruction(const SimplicialComplex& k, int v);

/// Definition-level decision procedure for vertex decomposability. Vertices
/// are tried in ascending order and the first one whose branches certify is
/// recorded, so results are deterministic; with memoization enabled, results
/// are cached per canonical key for the lifetime of the oracle. The memo
/// behaves as an insert-only map guarded by a mutex, so concurrent checks of
/// distinct complexes are safe and agree with single-threaded runs.
class VdOracle {
public:
    explicit VdOracle(bool memoize = true, std::size_t max_entries = std::size_t{1} << 22)
        : memoize_(memoize), max_entries_(max_entries) {}

    VdResult check(const SimplicialComplex& k);

    bool memoize() const { return memoize_; }
    std::size_t memo_size();

private:
    VdResult compute(const SimplicialComplex& k);

    bool memoize_;
    std::size_t max_entries_;
    std::mutex mutex_;
    std::unordered_map<std::string, VdResult> memo_;
};

/// Recompute every claim a certificate makes about k: leaves must match
/// simplices, join nodes must reproduce k as the join over their partition,
/// shed nodes must name a shedding vertex whose deletion and link are
/// certified by the children. False is the failure signal.
bool verify_certificate(const Certificate& cert, const SimplicialComplex& k);

/// Replay a witness against k: checks that the reasons cover exactly the
/// vertex set and that each recorded reason reproduces.
bool verify_witness(const NonVdWitness& w, const SimplicialComplex& k);

/// Certificate surgery: from a certificate for k, build one for link(k, f)
/// by case analysis on the node kind. Shed nodes whose vertex survives into
/// the link have the shedding condition re-validated there; if validation
/// fails the subtree is rebuilt with the oracle.
Certificate certificate_link(const Certificate& cert, const SimplicialComplex& k,
                             VertexSet f, VdOracle& oracle);

/// Facet order induced by a certificate: deletion facets first, then link
/// facets each extended by the shed vertex; join nodes emit the lexicographic
/// product of their children's orders. The order of the empty complex is the
/// single empty facet, the order of void is empty.
std::vector<VertexSet> shelling_from_vd(const Certificate& cert);

/// Non-pure shelling condition: the order must be a permutation of the facets
/// of k, and every facet must meet the union of its predecessors in a
/// nonempty union of codimension-one faces of itself.
bool verify_shelling(const SimplicialComplex& k, const std::vector<VertexSet>& order);

/// R(F_j) = {x in F_j : F_j minus x lies in some earlier facet}. Requires a
/// valid shelling order.
std::vector<VertexSet> restriction_sets(const SimplicialComplex& k,
                                        const std::vector<VertexSet>& order);

}  // namespace rind
