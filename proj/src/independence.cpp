#include "rind/independence.hpp"

#include <array>
#include <stdexcept>

namespace rind {

bool is_r_independent(const Graph& g, VertexSet a, Radius r) {
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("is_r_independent: not a subset of the vertex set");
    VertexSet rest = a;
    while (!rest.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(rest.min());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v) & a;
            frontier = next - comp;
        }
        if (comp.size() > r.value()) return false;
        rest -= comp;
    }
    return true;
}

namespace {

// Union-find over the vertices currently selected, tracking component sizes.
// Branches of the enumeration copy the whole tracker instead of rolling back.
struct ComponentTracker {
    std::array<int, VertexSet::kCapacity> parent;
    std::array<int, VertexSet::kCapacity> size;

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Add v, merging with the components of its already-selected neighbors;
    // returns the size of the component v ends up in.
    int add(int v, VertexSet selected_neighbors) {
        parent[v] = v;
        size[v] = 1;
        for (int u : selected_neighbors) {
            int ru = find(u);
            int rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                size[rv] += size[ru];
            }
        }
        return size[find(v)];
    }
};

struct IndSearch {
    const Graph& g;
    std::vector<int> order;  // ascending labels
    int r;
    std::vector<VertexSet> facets;

    bool maximal(VertexSet current, const ComponentTracker& comps) const {
        for (int v : g.vertices()) {
            if (current.contains(v)) continue;
            ComponentTracker probe = comps;
            if (probe.add(v, g.neighbors(v) & current) <= r) return false;
        }
        return true;
    }

    void run(std::size_t i, VertexSet current, const ComponentTracker& comps) {
        if (i == order.size()) {
            if (maximal(current, comps)) facets.push_back(current);
            return;
        }
        int v = order[i];
        ComponentTracker with_v = comps;
        if (with_v.add(v, g.neighbors(v) & current) <= r)
            run(i + 1, current.with(v), with_v);
        run(i + 1, current, comps);
    }
};

}  // namespace

SimplicialComplex ind_complex(const Graph& g, Radius r) {
    if (g.vertex_count() == 0) return SimplicialComplex::empty_complex();
    IndSearch search{g, g.vertices().to_vector(), r.value(), {}};
    search.run(0, VertexSet{}, ComponentTracker{});
    return SimplicialComplex::from_facets(std::move(search.facets));
}

SimplicialComplex link_by_graph(const Graph& g, VertexSet a, Radius r) {
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("link_by_graph: not a subset of the vertex set");
    if (a.size() != r.value())
        throw std::invalid_argument("link_by_graph: |A| must equal r");
    if (!is_connected(induced_subgraph(g, a)))
        throw std::invalid_argument("link_by_graph: A must induce a connected subgraph");
    return ind_complex(delete_vertices(g, closed_neighborhood(g, a)), r);
}

}  // namespace rind
