#include "rind/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rind/errors.hpp"

namespace rind {

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> normalized)
    : facets_(std::move(normalized)) {
    for (const auto& f : facets_) support_ |= f;
}

SimplicialComplex SimplicialComplex::simplex(VertexSet v) {
    return SimplicialComplex(std::vector<VertexSet>{v});
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            if (i != j && candidates[i].subset_of(candidates[j])) dominated = true;
        if (!dominated) maximal.push_back(candidates[i]);
    }
    return SimplicialComplex(std::move(maximal));
}

SimplicialComplex::Kind SimplicialComplex::kind() const {
    if (is_void()) return Kind::Void;
    if (is_empty_complex()) return Kind::Empty;
    return Kind::General;
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int best = -1;
    for (const auto& f : facets_) best = std::max(best, f.size() - 1);
    return best;
}

bool SimplicialComplex::is_face(VertexSet f) const {
    for (const auto& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::string SimplicialComplex::canonical_key() const {
    if (is_void()) return "~";
    std::string s;
    bool first_facet = true;
    for (const auto& f : facets_) {
        if (!first_facet) s += '|';
        first_facet = false;
        bool first = true;
        for (int v : f) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(v);
        }
    }
    return s;
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet f) {
    if (!k.is_face(f)) throw std::invalid_argument("link: argument is not a face");
    std::vector<VertexSet> out;
    for (const auto& g : k.facets())
        if (f.subset_of(g)) out.push_back(g - f);
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& k, VertexSet f) {
    if (!k.is_face(f)) throw std::invalid_argument("deletion: argument is not a face");
    std::vector<VertexSet> out;
    out.reserve(k.facets().size());
    for (const auto& g : k.facets()) out.push_back(g - f);
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.support().intersects(b.support()))
        throw std::invalid_argument("join: vertex sets overlap");
    std::vector<VertexSet> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) out.push_back(fa | fb);
    return SimplicialComplex::from_facets(std::move(out));
}

std::vector<VertexSet> all_faces(const SimplicialComplex& k, std::size_t max_faces) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& g : k.facets()) {
        std::uint64_t bits = g.bits();
        std::uint64_t sub = bits;
        while (true) {
            seen.insert(sub);
            if (seen.size() > max_faces)
                throw GuardError("face expansion exceeds the size guard of " +
                                 std::to_string(max_faces) + " faces");
            if (sub == 0) break;
            sub = (sub - 1) & bits;
        }
    }
    std::vector<VertexSet> faces;
    faces.reserve(seen.size());
    for (std::uint64_t bits : seen) faces.push_back(VertexSet::from_bits(bits));
    std::sort(faces.begin(), faces.end(), [](VertexSet x, VertexSet y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return faces;
}

std::vector<long> f_vector(const SimplicialComplex& k) {
    std::vector<long> counts;
    for (const auto& f : all_faces(k)) {
        int dim = f.size() - 1;
        if (dim < 0) continue;
        if (static_cast<int>(counts.size()) <= dim) counts.resize(static_cast<std::size_t>(dim) + 1, 0);
        ++counts[static_cast<std::size_t>(dim)];
    }
    return counts;
}

}  // namespace rind
