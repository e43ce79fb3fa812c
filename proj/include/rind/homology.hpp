#pragma once

#include <map>
#include <vector>

#include "rind/complex.hpp"

namespace rind {

/// Reduced Betti numbers over the two-element field, indexed from dimension
/// -1 upward. The entry at -1 is 1 exactly for the empty complex. The vector
/// for the void complex is empty.
class BettiVector {
public:
    BettiVector() = default;
    explicit BettiVector(std::vector<long> entries_from_dim_minus_one)
        : entries_(std::move(entries_from_dim_minus_one)) {}

    long at(int dim) const {
        if (dim < -1) return 0;
        std::size_t i = static_cast<std::size_t>(dim + 1);
        return i < entries_.size() ? entries_[i] : 0;
    }

    int max_dim() const { return static_cast<int>(entries_.size()) - 2; }
    const std::vector<long>& entries() const { return entries_; }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    std::vector<long> entries_;  // entries_[0] is dimension -1
};

/// Rank of the d-dimensional boundary map over the two-element field, with
/// the augmented chain complex (the empty face is the single (-1)-chain).
/// Out-of-range d gives 0.
int boundary_rank(const SimplicialComplex& k, int d);

BettiVector reduced_betti(const SimplicialComplex& k);

/// Count, by dimension, of the facets whose restriction set is the whole
/// facet. For a shelling these counts are the wedge decomposition of the
/// homotopy type. Rejects orders that are not shellings of k.
std::map<int, long> sphere_counts(const SimplicialComplex& k,
                                  const std::vector<VertexSet>& order);

}  // namespace rind
