#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rind/vertex_set.hpp"

namespace rind {

/// Simplicial complex stored by its facets (inclusion-maximal faces), kept as
/// a lexicographically sorted antichain. The vertex set of a complex is the
/// union of its facets; there is no external ground set. The void complex
/// (no faces at all) and the empty complex (the single face {}) are distinct
/// first-class values: void has an empty facet list, empty has facet list [{}].
class SimplicialComplex {
public:
    enum class Kind { Void, Empty, General };

    /// Default-constructed complexes are void.
    SimplicialComplex() = default;

    static SimplicialComplex void_complex() { return SimplicialComplex(); }
    static SimplicialComplex empty_complex() { return simplex(VertexSet{}); }

    /// The full simplex on v; the empty complex when v is empty.
    static SimplicialComplex simplex(VertexSet v);

    /// Normalize an arbitrary list of candidate facets: duplicates and
    /// dominated sets are dropped. An empty list yields the void complex.
    static SimplicialComplex from_facets(std::vector<VertexSet> candidates);

    Kind kind() const;
    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// True iff the complex is void, empty, or has exactly one facet.
    bool is_simplex() const { return facets_.size() <= 1; }

    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet support() const { return support_; }

    /// Max face dimension; -1 for the empty complex, -2 for void.
    int dimension() const;

    /// f is a face iff it is contained in some facet. The empty set is a face
    /// of every non-void complex.
    bool is_face(VertexSet f) const;

    /// Equal complexes yield equal keys; used for memoization.
    std::string canonical_key() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    explicit SimplicialComplex(std::vector<VertexSet> normalized);

    std::vector<VertexSet> facets_;
    VertexSet support_;
};

/// Link of a face: maximal sets G \ f over facets G containing f. Equals
/// {F : F disjoint from f, F union f a face} as a complex. Rejects non-faces.
SimplicialComplex link(const SimplicialComplex& k, VertexSet f);

/// Deletion of a face: all faces disjoint from f. Rejects non-faces.
SimplicialComplex deletion(const SimplicialComplex& k, VertexSet f);

/// Join of complexes on disjoint vertex sets; facets are pairwise unions.
/// The empty complex is the identity and void is absorbing.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

inline constexpr std::size_t kDefaultFaceGuard = std::size_t{1} << 16;

/// Every face, obtained by exact expansion of facet subsets, sorted by
/// (cardinality, lex). Includes the empty face for non-void complexes.
/// Throws GuardError when the face count exceeds the guard.
std::vector<VertexSet> all_faces(const SimplicialComplex& k,
                                 std::size_t max_faces = kDefaultFaceGuard);

/// Entry i = number of faces of dimension i, for i = 0..dim. Empty for the
/// void and empty complexes.
std::vector<long> f_vector(const SimplicialComplex& k);

}  // namespace rind
