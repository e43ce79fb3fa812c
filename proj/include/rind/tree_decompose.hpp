#pragma once

#include <functional>
#include <vector>

#include "rind/decomposition.hpp"
#include "rind/graph.hpp"
#include "rind/independence.hpp"

namespace rind {

/// One state of the link recursion: a connected face of the tree together
/// with the anchor vertex the recursion sheds around. The anchor always lies
/// in the face (except for the trivial empty face) and satisfies the rooted
/// shedding characterization whenever the state was produced by decompose.
struct LinkState {
    Graph tree;
    VertexSet face;
    int anchor;
    Radius radius;

    LinkState(Graph tree, VertexSet face, int anchor, Radius radius);
};

/// Rooted characterization of shedding vertices: root the tree at v and sum
/// the sizes of the child subtrees with at most r vertices; v is shedding in
/// the r-independence complex iff that sum plus one reaches r+1. Requires a
/// tree on at least r+1 vertices.
bool shedding_characterization(const Graph& t, Radius r, int v);

/// Root at the smallest label and walk downward into the smallest-label child
/// whose subtree still has more than r vertices; the terminal vertex always
/// satisfies the shedding characterization. Requires |V| >= r+1.
int find_shedding_vertex(const Graph& t, Radius r);

/// Shedding vertex of the link at state.face: among the vertices of the small
/// child subtrees of the anchor that lie outside the face, pick the one whose
/// own rooted subtree is largest (ties to the smallest label). Guarantees:
/// its parent lies in the face, the face stays connected when it is added,
/// and it is shedding in the expanded link. Requires |face| <= r-1 and the
/// characterization to hold at the anchor.
int link_shedding_vertex(const LinkState& state);

/// The explicit complex a state certifies: link(ind_complex(tree, r), face).
SimplicialComplex expand_link_state(const LinkState& state);

/// Brute-force list of all shedding vertices of link(ind_complex(t, r), a),
/// ascending. Exploratory; a must be r-independent.
std::vector<int> survey_link_shedding(const Graph& t, Radius r, VertexSet a);

/// Observation points for the recursion, used by tests to audit the
/// per-call guarantees of the link shedding choice.
struct DecomposeHooks {
    std::function<void(const LinkState&, int chosen)> on_link_shedding;
};

/// Constructive decomposition of the r-independence complex of a forest:
/// joins over components, simplex leaves for trees with at most r vertices,
/// and shed nodes driven by find_shedding_vertex / link_shedding_vertex.
/// The oracle is only consulted as a fallback inside certificate surgery.
Certificate decompose(const Graph& forest, Radius r, VdOracle& oracle,
                      const DecomposeHooks* hooks = nullptr);
Certificate decompose(const Graph& forest, Radius r);

}  // namespace rind
