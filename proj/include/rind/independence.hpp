#pragma once

#include "rind/complex.hpp"
#include "rind/graph.hpp"

namespace rind {

/// Component-size bound for r-independence; always at least 1.
class Radius {
public:
    explicit Radius(int value) : value_(value) {
        if (value < 1) throw std::invalid_argument("Radius: r must be >= 1");
    }
    int value() const { return value_; }
    friend bool operator==(Radius, Radius) = default;

private:
    int value_;
};

/// True iff every connected component of the subgraph induced by a has at
/// most r vertices. The empty set qualifies for every r.
bool is_r_independent(const Graph& g, VertexSet a, Radius r);

/// The complex of all r-independent vertex subsets of g, built by pruned
/// depth-first augmentation with an explicit maximality test per complete
/// set. Exponential in |V(g)|; intended for small instances. The empty graph
/// yields the empty complex.
SimplicialComplex ind_complex(const Graph& g, Radius r);

/// Link of a connected r-set computed on the graph side: the r-independence
/// complex of g minus the closed neighborhood of a. Contract: equals
/// link(ind_complex(g, r), a). Rejects |a| != r and disconnected a.
SimplicialComplex link_by_graph(const Graph& g, VertexSet a, Radius r);

}  // namespace rind
