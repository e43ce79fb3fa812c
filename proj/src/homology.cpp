#include "rind/homology.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "rind/decomposition.hpp"

namespace rind {

namespace {

// Word-packed GF(2) column vectors; rank by elimination against stored pivots.
int gf2_rank(std::vector<std::vector<std::uint64_t>> columns) {
    struct Pivot {
        std::size_t word;
        std::uint64_t bit;
        std::vector<std::uint64_t> column;
    };
    std::vector<Pivot> pivots;
    for (auto& col : columns) {
        for (const auto& p : pivots)
            if (col[p.word] & p.bit)
                for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= p.column[w];
        std::size_t word = col.size();
        for (std::size_t w = 0; w < col.size(); ++w) {
            if (col[w]) {
                word = w;
                break;
            }
        }
        if (word == col.size()) continue;  // dependent column
        std::uint64_t bit = col[word] & (~col[word] + 1);
        pivots.push_back({word, bit, std::move(col)});
    }
    return static_cast<int>(pivots.size());
}

// Faces of each cardinality, lex-sorted within a class. Index 0 holds the
// empty face (present for every non-void complex).
std::vector<std::vector<VertexSet>> faces_by_cardinality(const SimplicialComplex& k) {
    std::vector<std::vector<VertexSet>> classes;
    for (const auto& f : all_faces(k)) {
        std::size_t card = static_cast<std::size_t>(f.size());
        if (classes.size() <= card) classes.resize(card + 1);
        classes[card].push_back(f);  // all_faces is sorted by (size, lex)
    }
    return classes;
}

int rank_between(const std::vector<VertexSet>& rows, const std::vector<VertexSet>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i].bits(), i);
    std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> columns;
    columns.reserve(cols.size());
    for (const auto& face : cols) {
        std::vector<std::uint64_t> col(words, 0);
        for (int x : face) {
            std::size_t i = row_index.at(face.without(x).bits());
            col[i / 64] |= std::uint64_t{1} << (i % 64);
        }
        columns.push_back(std::move(col));
    }
    return gf2_rank(std::move(columns));
}

}  // namespace

int boundary_rank(const SimplicialComplex& k, int d) {
    if (d < 0 || k.is_void()) return 0;
    auto classes = faces_by_cardinality(k);
    std::size_t cols = static_cast<std::size_t>(d) + 1;
    if (cols >= classes.size()) return 0;
    return rank_between(classes[cols - 1], classes[cols]);
}

BettiVector reduced_betti(const SimplicialComplex& k) {
    if (k.is_void()) return BettiVector{};
    auto classes = faces_by_cardinality(k);
    int dim = static_cast<int>(classes.size()) - 2;  // classes[0] is the empty face
    // rank[card] = rank of the boundary map out of the faces of that cardinality
    std::vector<long> rank(classes.size() + 1, 0);
    for (std::size_t card = 1; card < classes.size(); ++card)
        rank[card] = rank_between(classes[card - 1], classes[card]);
    std::vector<long> entries;
    entries.reserve(static_cast<std::size_t>(dim) + 2);
    for (int d = -1; d <= dim; ++d) {
        std::size_t card = static_cast<std::size_t>(d + 1);
        long faces = static_cast<long>(classes[card].size());
        entries.push_back(faces - rank[card] - rank[card + 1]);
    }
    return BettiVector(std::move(entries));
}

std::map<int, long> sphere_counts(const SimplicialComplex& k,
                                  const std::vector<VertexSet>& order) {
    std::vector<VertexSet> restrictions = restriction_sets(k, order);
    std::map<int, long> counts;
    for (std::size_t j = 0; j < order.size(); ++j)
        if (restrictions[j] == order[j]) ++counts[order[j].size() - 1];
    return counts;
}

}  // namespace rind
