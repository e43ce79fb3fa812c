#include "rind/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rind {

int Graph::edge_count() const {
    int twice = 0;
    for (int v : vertices_) twice += adj_[v].size();
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && adj_[u].contains(v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("add_edge: unknown vertex");
    if (adj_[u].contains(v))
        throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

VertexSet Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("neighbors: unknown vertex " + std::to_string(v));
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u : vertices_)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> parts;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(rest.min());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
        }
        parts.push_back(comp);
        rest -= comp;
    }
    return parts;
}

Graph induced_subgraph(const Graph& g, VertexSet a) {
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: not a subset of the vertex set");
    Graph h(a);
    for (int v : a)
        for (int u : g.neighbors(v) & a)
            if (v < u) h.add_edge(v, u);
    return h;
}

Graph delete_vertices(const Graph& g, VertexSet a) {
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("delete_vertices: not a subset of the vertex set");
    return induced_subgraph(g, g.vertices() - a);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet a) {
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("closed_neighborhood: not a subset of the vertex set");
    VertexSet out = a;
    for (int v : a) out |= g.neighbors(v);
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - static_cast<int>(connected_components(g).size());
}

RootedTree::RootedTree(const Graph& tree, int root) : tree_(tree), root_(root) {
    if (!is_tree(tree)) throw std::invalid_argument("root_at: input is not a tree");
    if (!tree.has_vertex(root)) throw std::invalid_argument("root_at: root is not a vertex");

    parent_.fill(-1);
    size_.fill(0);

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(tree.vertex_count()));
    std::vector<int> stack{root};
    VertexSet seen;
    seen.insert(root);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        VertexSet ch = tree.neighbors(v) - seen;
        children_[v] = ch;
        for (int c : ch) {
            parent_[c] = v;
            seen.insert(c);
            stack.push_back(c);
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        VertexSet sub;
        sub.insert(v);
        int sz = 1;
        for (int c : children_[v]) {
            sz += size_[c];
            sub |= subtree_[c];
        }
        size_[v] = sz;
        subtree_[v] = sub;
    }

    // subtree bookkeeping must close up exactly
    for (int v : tree.vertices()) {
        int sum = 1;
        for (int c : children_[v]) sum += size_[c];
        if (sum != size_[v] || subtree_[v].size() != size_[v])
            throw std::logic_error("RootedTree: subtree size bookkeeping broken");
    }
    if (size_[root] != tree.vertex_count())
        throw std::logic_error("RootedTree: root subtree does not cover the tree");
}

void RootedTree::check_vertex(int v) const {
    if (!tree_.has_vertex(v))
        throw std::invalid_argument("RootedTree: unknown vertex " + std::to_string(v));
}

std::optional<int> RootedTree::parent(int v) const {
    check_vertex(v);
    if (v == root_) return std::nullopt;
    return parent_[v];
}

VertexSet RootedTree::children(int v) const {
    check_vertex(v);
    return children_[v];
}

int RootedTree::subtree_size(int v) const {
    check_vertex(v);
    return size_[v];
}

VertexSet RootedTree::subtree_vertices(int v) const {
    check_vertex(v);
    return subtree_[v];
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 1) throw std::invalid_argument("labeled_tree_count: n must be >= 1");
    if (n <= 2) return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

Graph pruefer_decode(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("pruefer_decode: n must be >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("pruefer_decode: sequence length must be n-2");
    Graph g = Graph::with_vertex_count(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("pruefer_decode: label out of range");
        ++degree[static_cast<std::size_t>(s)];
    }
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        g.add_edge(leaf, s);
        if (--degree[static_cast<std::size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_labeled_tree: n must be >= 1");
    if (n <= 2) {
        fn(pruefer_decode({}, n));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        fn(pruefer_decode(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n <= 2) return pruefer_decode({}, n);
    std::mt19937_64 gen(seed);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
    return pruefer_decode(seq, n);
}

namespace {

std::string ahu_subtree_code(const RootedTree& rt, int v) {
    std::vector<std::string> codes;
    for (int c : rt.children(v)) codes.push_back(ahu_subtree_code(rt, c));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    return out + ")";
}

}  // namespace

std::string ahu_code(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("ahu_code: input is not a tree");
    VertexSet alive = tree.vertices();
    while (alive.size() > 2) {
        VertexSet leaves;
        for (int v : alive)
            if ((tree.neighbors(v) & alive).size() == 1) leaves.insert(v);
        alive -= leaves;
    }
    std::string best;
    for (int c : alive) {
        std::string code = ahu_subtree_code(root_at(tree, c), c);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace rind
