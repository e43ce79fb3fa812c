#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rind/vertex_set.hpp"

namespace rind {

/// Simple undirected graph over integer labels 0..63. Labels are preserved by
/// all derived-graph operations (induced subgraphs, deletion), so complexes
/// and certificates built downstream always speak the original labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(VertexSet vertices) : vertices_(vertices) {}

    static Graph with_vertex_count(int n) { return Graph(VertexSet::range(n)); }

    const VertexSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    int edge_count() const;

    bool has_vertex(int v) const { return vertices_.contains(v); }
    bool has_edge(int u, int v) const;

    void add_vertex(int v) { vertices_.insert(v); }
    void add_edge(int u, int v);

    VertexSet neighbors(int v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    VertexSet vertices_;
    std::array<VertexSet, VertexSet::kCapacity> adj_{};
};

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, VertexSet a);
Graph delete_vertices(const Graph& g, VertexSet a);

/// a together with every vertex adjacent to a.
VertexSet closed_neighborhood(const Graph& g, VertexSet a);

bool is_connected(const Graph& g);  // false for the empty graph
bool is_tree(const Graph& g);       // false for the empty graph
bool is_forest(const Graph& g);     // true for the empty graph

/// Tree with a distinguished root; parent/children maps and the size and
/// vertex set of every rooted subtree are computed at construction.
class RootedTree {
public:
    RootedTree(const Graph& tree, int root);

    const Graph& tree() const { return tree_; }
    int root() const { return root_; }

    std::optional<int> parent(int v) const;
    VertexSet children(int v) const;  // iterates in ascending label order
    int subtree_size(int v) const;
    VertexSet subtree_vertices(int v) const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
    void check_vertex(int v) const;

    Graph tree_;
    int root_ = -1;
    std::array<int, VertexSet::kCapacity> parent_{};
    std::array<VertexSet, VertexSet::kCapacity> children_{};
    std::array<int, VertexSet::kCapacity> size_{};
    std::array<VertexSet, VertexSet::kCapacity> subtree_{};
};

inline RootedTree root_at(const Graph& t, int v) { return RootedTree(t, v); }

/// Number of labeled trees on n vertices (n^(n-2) for n >= 2, else 1).
std::uint64_t labeled_tree_count(int n);

/// Decode a Pruefer sequence over labels 0..n-1 into the labeled tree it
/// encodes. seq must have length n-2 (empty for n <= 2).
Graph pruefer_decode(const std::vector<int>& seq, int n);

/// Visit every labeled tree on vertices 0..n-1 exactly once, in lexicographic
/// Pruefer-sequence order.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);

/// Uniformly random labeled tree, deterministic for a given seed.
Graph random_tree(int n, std::uint64_t seed);

/// Canonical form of an unlabeled tree (rooted at its center, children codes
/// sorted); equal codes iff the trees are isomorphic.
std::string ahu_code(const Graph& tree);

}  // namespace rind
