#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rind/complex.hpp"
#include "rind/errors.hpp"

using namespace rind;
using namespace rind::oracle;

TEST_SUITE_BEGIN("complex");

TEST_CASE("from_facets normalizes") {
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1}, {0}, {1, 2}});
    CHECK(k.facets() == std::vector<VertexSet>{{0, 1}, {1, 2}});

    CHECK(SimplicialComplex::from_facets({VertexSet{}}) == SimplicialComplex::empty_complex());
    CHECK(SimplicialComplex::from_facets({}) == SimplicialComplex::void_complex());

    SUBCASE("idempotent and antichain on random input") {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 200; ++trial) {
            SimplicialComplex r = random_complex(8, 8, gen);
            CHECK(SimplicialComplex::from_facets(r.facets()) == r);
            for (const auto& a : r.facets())
                for (const auto& b : r.facets())
                    if (a != b) CHECK(!a.subset_of(b));
        }
    }
}

TEST_CASE("face membership") {
    SimplicialComplex boundary = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    CHECK(!boundary.is_face(VertexSet{0, 1, 2}));
    CHECK(boundary.is_face(VertexSet{}));
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    CHECK(k.is_face(VertexSet{2}));
    CHECK(!SimplicialComplex::void_complex().is_face(VertexSet{}));
}

TEST_CASE("link") {
    SimplicialComplex boundary = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    CHECK(link(boundary, VertexSet{}) == boundary);
    CHECK(link(boundary, VertexSet{0}) == SimplicialComplex::from_facets({{1}, {2}}));
    SimplicialComplex simplex2 = SimplicialComplex::simplex(VertexSet{0, 1, 2});
    CHECK(link(simplex2, VertexSet{0, 1}) == SimplicialComplex::simplex(VertexSet{2}));
    CHECK_THROWS_AS(link(boundary, VertexSet{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("deletion") {
    SimplicialComplex p3_ind1 = SimplicialComplex::from_facets({{0, 2}, {1}});
    CHECK(deletion(p3_ind1, VertexSet{1}) == SimplicialComplex::simplex(VertexSet{0, 2}));
    CHECK(deletion(p3_ind1, VertexSet{}) == p3_ind1);
    SimplicialComplex simplex2 = SimplicialComplex::simplex(VertexSet{0, 1, 2});
    CHECK(deletion(simplex2, VertexSet{0}) == SimplicialComplex::simplex(VertexSet{1, 2}));
    CHECK_THROWS_AS(deletion(p3_ind1, VertexSet{0, 1}), std::invalid_argument);
}

TEST_CASE("link and deletion against subset expansion") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 120; ++trial) {
        SimplicialComplex k = random_complex(8, 6, gen);
        if (k.is_void()) continue;
        // pick a random face: random subset of a random facet
        const auto& facets = k.facets();
        VertexSet facet = facets[gen() % facets.size()];
        VertexSet f;
        for (int v : facet)
            if (gen() % 2) f.insert(v);
        CHECK(link(k, f) == link_bruteforce(k, f));
        CHECK(deletion(k, f) == deletion_bruteforce(k, f));
    }
}

TEST_CASE("join") {
    SimplicialComplex k = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    CHECK(join(k, SimplicialComplex::empty_complex()) == k);
    CHECK(join(SimplicialComplex::empty_complex(), k) == k);
    CHECK(join(k, SimplicialComplex::void_complex()).is_void());

    SimplicialComplex ab = SimplicialComplex::from_facets({{0}, {1}});
    SimplicialComplex cd = SimplicialComplex::from_facets({{2}, {3}});
    CHECK(join(ab, cd) == SimplicialComplex::from_facets({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

    CHECK_THROWS_AS(join(k, ab), std::invalid_argument);

    SUBCASE("associative and commutative") {
        std::mt19937_64 gen(31);
        for (int trial = 0; trial < 60; ++trial) {
            SimplicialComplex a = random_complex(3, 3, gen);
            SimplicialComplex b = [&] {
                SimplicialComplex src = random_complex(3, 3, gen);
                std::vector<VertexSet> fs;
                for (const auto& f : src.facets()) {
                    VertexSet shifted;
                    for (int v : f) shifted.insert(v + 3);
                    fs.push_back(shifted);
                }
                return SimplicialComplex::from_facets(fs);
            }();
            SimplicialComplex c = SimplicialComplex::simplex(VertexSet{7});
            CHECK(join(a, b) == join(b, a));
            CHECK(join(join(a, b), c) == join(a, join(b, c)));
        }
    }
}

TEST_CASE("simplex recognition") {
    CHECK(SimplicialComplex::void_complex().is_simplex());
    CHECK(SimplicialComplex::empty_complex().is_simplex());
    CHECK(SimplicialComplex::simplex(VertexSet{0, 1, 2}).is_simplex());
    CHECK(!SimplicialComplex::from_facets({{0, 1}, {2}}).is_simplex());
}

TEST_CASE("f-vector") {
    CHECK(f_vector(SimplicialComplex::simplex(VertexSet{0, 1, 2})) == std::vector<long>{3, 3, 1});
    CHECK(f_vector(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})) ==
          std::vector<long>{3, 3});
    CHECK(f_vector(SimplicialComplex::empty_complex()).empty());
    CHECK(f_vector(SimplicialComplex::void_complex()).empty());
}

TEST_CASE("face expansion guard") {
    // a 17-vertex simplex has 2^17 faces, past the default guard
    VertexSet big;
    for (int v = 0; v < 17; ++v) big.insert(v);
    CHECK_THROWS_AS(all_faces(SimplicialComplex::simplex(big)), GuardError);
}

TEST_CASE("canonical keys") {
    SimplicialComplex a = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    SimplicialComplex b = SimplicialComplex::from_facets({{1, 2}, {0, 1}});
    CHECK(a.canonical_key() == b.canonical_key());
    SimplicialComplex c = SimplicialComplex::from_facets({{0, 1}, {1, 3}});
    CHECK(a.canonical_key() != c.canonical_key());
    CHECK(SimplicialComplex::void_complex().canonical_key() !=
          SimplicialComplex::empty_complex().canonical_key());
}

TEST_CASE("link-deletion identities") {
    std::mt19937_64 gen(47);
    int exercised = 0;
    for (int trial = 0; trial < 300; ++trial) {
        SimplicialComplex k = random_complex(9, 7, gen);
        if (k.is_void()) continue;
        const auto& facets = k.facets();
        VertexSet facet = facets[gen() % facets.size()];
        VertexSet f1, f2;
        for (int v : facet) {
            switch (gen() % 3) {
                case 0: f1.insert(v); break;
                case 1: f2.insert(v); break;
                default: break;
            }
        }
        // disjoint faces with f1 + f2 still a face
        CHECK(deletion(link(k, f1), f2) == link(deletion(k, f2), f1));
        CHECK(link(link(k, f1), f2) == link(k, f1 | f2));
        ++exercised;
    }
    CHECK(exercised > 100);
}

TEST_SUITE_END();
