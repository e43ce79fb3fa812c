#include "rind/tree_decompose.hpp"

#include <stdexcept>

namespace rind {

LinkState::LinkState(Graph tree_in, VertexSet face_in, int anchor_in, Radius radius_in)
    : tree(std::move(tree_in)), face(face_in), anchor(anchor_in), radius(radius_in) {
    if (!is_tree(tree)) throw std::invalid_argument("LinkState: not a tree");
    if (!tree.has_vertex(anchor)) throw std::invalid_argument("LinkState: anchor not in tree");
    if (!face.subset_of(tree.vertices()))
        throw std::invalid_argument("LinkState: face not in tree");
    if (face.size() > radius.value())
        throw std::invalid_argument("LinkState: face larger than the radius");
    if (!face.empty()) {
        if (!face.contains(anchor)) throw std::invalid_argument("LinkState: anchor not in face");
        if (!is_connected(induced_subgraph(tree, face)))
            throw std::invalid_argument("LinkState: face is not connected");
    }
}

bool shedding_characterization(const Graph& t, Radius r, int v) {
    if (!is_tree(t)) throw std::invalid_argument("shedding_characterization: not a tree");
    if (t.vertex_count() <= r.value())
        throw std::invalid_argument("shedding_characterization: need |V| >= r+1");
    RootedTree rooted(t, v);
    int reach = 1;
    for (int u : rooted.children(v))
        if (rooted.subtree_size(u) <= r.value()) reach += rooted.subtree_size(u);
    return reach >= r.value() + 1;
}

int find_shedding_vertex(const Graph& t, Radius r) {
    if (!is_tree(t)) throw std::invalid_argument("find_shedding_vertex: not a tree");
    if (t.vertex_count() <= r.value())
        throw std::invalid_argument("find_shedding_vertex: need |V| >= r+1");
    RootedTree rooted(t, t.vertices().min());
    int v = rooted.root();
    while (true) {
        int heavy = -1;
        for (int u : rooted.children(v)) {
            if (rooted.subtree_size(u) >= r.value() + 1) {
                heavy = u;  // children iterate ascending, first hit is smallest
                break;
            }
        }
        if (heavy < 0) return v;
        v = heavy;
    }
}

int link_shedding_vertex(const LinkState& state) {
    int r = state.radius.value();
    if (state.face.empty() || state.face.size() > r - 1)
        throw std::invalid_argument("link_shedding_vertex: need 1 <= |face| <= r-1");
    if (!shedding_characterization(state.tree, state.radius, state.anchor))
        throw std::invalid_argument("link_shedding_vertex: anchor is not a shedding vertex");
    RootedTree rooted(state.tree, state.anchor);
    VertexSet small_union;
    for (int u : rooted.children(state.anchor))
        if (rooted.subtree_size(u) <= r) small_union |= rooted.subtree_vertices(u);
    VertexSet candidates = small_union - state.face;
    int best = -1;
    int best_size = 0;
    for (int w : candidates) {  // ascending, so ties keep the smallest label
        int sz = rooted.subtree_size(w);
        if (sz > best_size) {
            best = w;
            best_size = sz;
        }
    }
    if (best < 0) throw std::logic_error("link_shedding_vertex: no candidate found");
    return best;
}

SimplicialComplex expand_link_state(const LinkState& state) {
    return link(ind_complex(state.tree, state.radius), state.face);
}

std::vector<int> survey_link_shedding(const Graph& t, Radius r, VertexSet a) {
    if (!a.subset_of(t.vertices()) || !is_r_independent(t, a, r))
        throw std::invalid_argument("survey_link_shedding: a is not an r-independent set");
    SimplicialComplex linked = link(ind_complex(t, r), a);
    std::vector<int> out;
    for (int v : linked.support())
        if (is_shedding(linked, v)) out.push_back(v);
    return out;
}

namespace {

struct Decomposer {
    Radius r;
    VdOracle& oracle;
    const DecomposeHooks* hooks;

    Certificate forest(const Graph& g) {
        std::vector<VertexSet> comps = connected_components(g);
        if (comps.empty()) return Certificate::simplex(VertexSet{});
        if (comps.size() == 1) return tree(g);
        std::vector<Certificate> children;
        children.reserve(comps.size());
        for (const auto& comp : comps) children.push_back(tree(induced_subgraph(g, comp)));
        return Certificate::join(std::move(children), std::move(comps));
    }

    Certificate tree(const Graph& t) {
        if (t.vertex_count() <= r.value()) return Certificate::simplex(t.vertices());
        int v = find_shedding_vertex(t, r);
        Certificate del = forest(delete_vertices(t, VertexSet{v}));
        Certificate lnk = link_state(LinkState(t, VertexSet{v}, v, r));
        return Certificate::shed(v, std::move(del), std::move(lnk));
    }

    // Certificate for link(ind_complex(state.tree, r), state.face).
    Certificate link_state(const LinkState& state) {
        const Graph& t = state.tree;
        if (state.face.size() == r.value()) {
            // A connected face of full size r seals off its closed
            // neighborhood; the link is the complex of what remains.
            return forest(delete_vertices(t, closed_neighborhood(t, state.face)));
        }
        int w = link_shedding_vertex(state);
        if (hooks && hooks->on_link_shedding) hooks->on_link_shedding(state, w);

        Certificate lnk = link_state(LinkState(t, state.face.with(w), state.anchor, r));

        // Deletion branch: in the tree minus w, the component holding the
        // face is linked via certificate surgery and joined with the rest.
        Graph remainder = delete_vertices(t, VertexSet{w});
        VertexSet holder;
        for (const auto& comp : connected_components(remainder)) {
            if (state.face.subset_of(comp)) {
                holder = comp;
                break;
            }
        }
        if (holder.empty()) throw std::logic_error("decompose: face split by deletion");
        Graph holder_tree = induced_subgraph(remainder, holder);
        Graph rest = delete_vertices(remainder, holder);
        Certificate holder_cert = certificate_link(forest(holder_tree), ind_complex(holder_tree, r),
                                                   state.face, oracle);
        std::vector<Certificate> join_children;
        join_children.push_back(std::move(holder_cert));
        join_children.push_back(forest(rest));
        std::vector<VertexSet> join_parts{holder - state.face, rest.vertices()};
        Certificate del = Certificate::join(std::move(join_children), std::move(join_parts));

        return Certificate::shed(w, std::move(del), std::move(lnk));
    }
};

}  // namespace

Certificate decompose(const Graph& g, Radius r, VdOracle& oracle, const DecomposeHooks* hooks) {
    if (!is_forest(g)) throw std::invalid_argument("decompose: input is not a forest");
    Decomposer d{r, oracle, hooks};
    return d.forest(g);
}

Certificate decompose(const Graph& g, Radius r) {
    VdOracle oracle;
    return decompose(g, r, oracle, nullptr);
}

}  // namespace rind
