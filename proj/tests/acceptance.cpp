// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-7 run twice, once with memoization and once without;
// criterion 8 compares the byte streams of everything the two passes
// produced, plus a serial-vs-4-worker survey run.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rind/commands.hpp"
#include "rind/formats.hpp"
#include "rind/homology.hpp"
#include "rind/tree_decompose.hpp"

using namespace rind;
using namespace rind::oracle;

namespace {

struct Stream {
    std::uint64_t hash = 14695981039346656037ull;
    std::uint64_t bytes = 0;

    void feed(const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
        bytes += s.size();
    }
    void feed(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            hash ^= static_cast<unsigned char>(v >> (8 * i));
            hash *= 1099511628211ull;
        }
        bytes += 8;
    }
    void feed(bool b) { feed(std::uint64_t{b}); }

    friend bool operator==(const Stream&, const Stream&) = default;
};

void append_cert(const Certificate& c, std::string& out) {
    switch (c.kind()) {
        case Certificate::Kind::Simplex:
            out += 'S';
            out += c.simplex_vertices() ? c.simplex_vertices()->to_string() : std::string("~");
            return;
        case Certificate::Kind::Join:
            out += 'J';
            out += '[';
            for (std::size_t i = 0; i < c.children().size(); ++i) {
                out += c.parts()[i].to_string();
                out += ':';
                append_cert(c.children()[i], out);
                out += ';';
            }
            out += ']';
            return;
        case Certificate::Kind::Shed:
            out += 'D';
            out += '(';
            out += std::to_string(c.shed_vertex());
            out += ';';
            append_cert(c.del_branch(), out);
            out += ';';
            append_cert(c.link_branch(), out);
            out += ')';
            return;
    }
}

std::string cert_bytes(const Certificate& c) {
    std::string out;
    append_cert(c, out);
    return out;
}

struct Criterion {
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

Graph load_fig2() { return load_graph(std::string(RIND_FIXTURE_DIR) + "/fig2.graph"); }

// 1. The 13-vertex fixture: subtree sizes, the rooted characterization at the hub,
//    and agreement with the definition-level shedding test. Under 5 s.
Criterion criterion1(bool /*memo*/, Stream& stream) {
    Criterion c;
    Graph fig2 = load_fig2();
    RootedTree rooted(fig2, 0);
    const std::pair<int, int> expected[] = {{1, 2}, {2, 2}, {3, 3}, {4, 5}};
    for (auto [v, size] : expected) {
        bool ok = rooted.subtree_size(v) == size;
        stream.feed(ok);
        if (!ok) c.pass = false;
    }
    bool characterized = shedding_characterization(fig2, Radius(4), 0);
    bool brute = is_shedding(ind_complex(fig2, Radius(4)), 0);
    stream.feed(characterized);
    stream.feed(brute);
    if (!characterized || !brute) c.pass = false;
    c.detail = "hub subtree sizes (2,2,3,5); both shedding tests true";
    return c;
}

// 2. Exhaustive equivalence of the rooted characterization with the
//    definition-level shedding test: every labeled tree with 2..7 vertices,
//    every 1 <= r <= n-1, every vertex.
Criterion criterion2(bool /*memo*/, Stream& stream) {
    Criterion c;
    std::uint64_t trees = 0;
    std::uint64_t checks = 0;
    std::uint64_t mismatches = 0;
    for (int n = 2; n <= 7; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            ++trees;
            for (int r = 1; r <= n - 1; ++r) {
                SimplicialComplex k = ind_complex(t, Radius(r));
                for (int v : t.vertices()) {
                    bool lhs = shedding_characterization(t, Radius(r), v);
                    bool rhs = is_shedding(k, v);
                    stream.feed(lhs);
                    if (lhs != rhs) ++mismatches;
                    ++checks;
                }
            }
        });
    }
    if (trees != 18248 || mismatches != 0) c.pass = false;
    std::ostringstream d;
    d << trees << " trees, " << checks << " vertex checks, " << mismatches << " mismatches";
    c.detail = d.str();
    return c;
}

struct ConfirmationSweep {
    Criterion oracle_and_certificates;  // criterion 3
    Criterion link_guarantees;          // criterion 4
};

// 3+4 share one sweep: the oracle must certify every tree complex, the
// constructive certificate must verify, and every link-shedding choice made
// along the way must satisfy its guarantees.
ConfirmationSweep criteria3and4(bool memo, Stream& s3, Stream& s4) {
    ConfirmationSweep run;
    std::uint64_t pairs = 0, oracle_failures = 0, verify_failures = 0;
    std::uint64_t states = 0, guarantee_failures = 0;
    VdOracle oracle(memo);

    DecomposeHooks hooks;
    hooks.on_link_shedding = [&](const LinkState& state, int w) {
        ++states;
        RootedTree rooted(state.tree, state.anchor);
        bool parent_ok = rooted.parent(w).has_value() && state.face.contains(*rooted.parent(w));
        bool connected_ok = is_connected(induced_subgraph(state.tree, state.face.with(w)));
        bool shedding_ok = is_shedding(expand_link_state(state), w);
        s4.feed(state.face.bits());
        s4.feed(static_cast<std::uint64_t>(w));
        if (!parent_ok || !connected_ok || !shedding_ok) ++guarantee_failures;
    };

    for (int n = 1; n <= 7; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            for (int r = 1; r <= n; ++r) {
                ++pairs;
                SimplicialComplex k = ind_complex(t, Radius(r));
                VdResult res = oracle.check(k);
                if (!is_decomposable(res)) {
                    ++oracle_failures;
                    s3.feed(std::string("witness"));
                } else {
                    s3.feed(cert_bytes(std::get<Certificate>(res)));
                }
                Certificate constructive = decompose(t, Radius(r), oracle, &hooks);
                if (!verify_certificate(constructive, k)) ++verify_failures;
                s3.feed(cert_bytes(constructive));
            }
        });
    }

    run.oracle_and_certificates.pass = oracle_failures == 0 && verify_failures == 0;
    {
        std::ostringstream d;
        d << pairs << " (tree, r) pairs; " << oracle_failures << " oracle refusals, "
          << verify_failures << " verification failures";
        run.oracle_and_certificates.detail = d.str();
    }
    run.link_guarantees.pass = guarantee_failures == 0;
    {
        std::ostringstream d;
        d << states << " link states audited, " << guarantee_failures << " guarantee failures";
        run.link_guarantees.detail = d.str();
    }
    s4.feed(states);
    return run;
}

// 5. The complex-vs-graph identities on general seeded random graphs.
Criterion criterion5(bool /*memo*/, Stream& stream) {
    Criterion c;
    std::uint64_t graphs = 0, failures = 0, link_cases = 0;
    for (int i = 0; i < 500; ++i) {
        std::mt19937_64 gen(0x5eed0000u + static_cast<std::uint64_t>(i));
        int n1 = 1 + static_cast<int>(gen() % 5);
        int n2 = 1 + static_cast<int>(gen() % 5);
        Graph g1 = random_graph(n1, gen);
        Graph g2 = random_graph(n2, gen, n1);
        Graph g(g1.vertices() | g2.vertices());
        for (auto [u, v] : g1.edges()) g.add_edge(u, v);
        for (auto [u, v] : g2.edges()) g.add_edge(u, v);
        int r = 1 + (i % 4);
        ++graphs;

        SimplicialComplex whole = ind_complex(g, Radius(r));
        bool disjoint_union_ok =
            whole == join(ind_complex(g1, Radius(r)), ind_complex(g2, Radius(r)));

        bool deletion_ok = true;
        for (int v : g.vertices())
            if (deletion(whole, VertexSet{v}) != ind_complex(delete_vertices(g, VertexSet{v}), Radius(r)))
                deletion_ok = false;

        bool link_ok = true;
        int n = g.vertex_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet a = VertexSet::from_bits(mask);
            if (a.size() != r || !is_connected(induced_subgraph(g, a))) continue;
            ++link_cases;
            if (link(whole, a) != link_by_graph(g, a, Radius(r))) link_ok = false;
        }

        stream.feed(disjoint_union_ok);
        stream.feed(deletion_ok);
        stream.feed(link_ok);
        stream.feed(whole.canonical_key());
        if (!disjoint_union_ok || !deletion_ok || !link_ok) ++failures;
    }
    c.pass = failures == 0;
    std::ostringstream d;
    d << graphs << " random graphs, " << link_cases << " connected r-sets, " << failures
      << " identity failures";
    c.detail = d.str();
    return c;
}

// 6. Shellings from certificates verify, and their sphere counts equal the
//    reduced Betti numbers, for every tree with up to 7 vertices and r <= 3.
Criterion criterion6(bool memo, Stream& stream) {
    Criterion c;
    std::uint64_t pairs = 0, shelling_failures = 0, betti_mismatches = 0;
    VdOracle oracle(memo);
    for (int n = 1; n <= 7; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            for (int r = 1; r <= 3; ++r) {
                ++pairs;
                SimplicialComplex k = ind_complex(t, Radius(r));
                Certificate cert = decompose(t, Radius(r), oracle);
                std::vector<VertexSet> order = shelling_from_vd(cert);
                if (!verify_shelling(k, order)) {
                    ++shelling_failures;
                    return;
                }
                for (const auto& f : order) stream.feed(f.bits());
                std::map<int, long> counts = sphere_counts(k, order);
                BettiVector betti = reduced_betti(k);
                for (int d = -1; d <= std::max(betti.max_dim(), k.dimension()); ++d) {
                    auto it = counts.find(d);
                    long have = it == counts.end() ? 0 : it->second;
                    stream.feed(static_cast<std::uint64_t>(have));
                    if (have != betti.at(d)) ++betti_mismatches;
                }
            }
        });
    }
    c.pass = shelling_failures == 0 && betti_mismatches == 0;
    std::ostringstream d;
    d << pairs << " (tree, r) pairs; " << shelling_failures << " shelling failures, "
      << betti_mismatches << " sphere/Betti mismatches";
    c.detail = d.str();
    return c;
}

// 7. Exact small instances, frozen from independent enumeration.
Criterion criterion7(bool memo, Stream& stream) {
    Criterion c;
    VdOracle oracle(memo);

    SimplicialComplex p3 = ind_complex(path_graph(3), Radius(2));
    bool facets_ok = p3 == SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}}) &&
                     p3.facets() == ind_facets_bruteforce(path_graph(3), 2);
    bool circle_ok = reduced_betti(p3).at(1) == 1 && reduced_betti(p3).at(0) == 0;
    stream.feed(p3.canonical_key());
    stream.feed(circle_ok);

    SimplicialComplex k22c = ind_complex(k22(), Radius(1));
    VdResult res = oracle.check(k22c);
    bool witness_ok = !is_decomposable(res);
    std::string witness_doc;
    if (witness_ok) {
        const NonVdWitness& w = std::get<NonVdWitness>(res);
        witness_ok = verify_witness(w, k22c);
        witness_doc = dump_json(witness_to_json(w));
        // the document replays after a round-trip
        witness_ok = witness_ok && verify_witness(witness_from_json(json::parse(witness_doc)), k22c);
    }
    stream.feed(witness_doc);

    bool simplex_ok = true;
    for (int n = 1; n <= 4; ++n) {
        Graph p = path_graph(n);
        for (int r = n; r <= n + 1; ++r) {
            Certificate cert = decompose(p, Radius(r));
            bool leaf = cert.kind() == Certificate::Kind::Simplex &&
                        cert.simplex_vertices() == p.vertices();
            stream.feed(leaf);
            simplex_ok = simplex_ok && leaf;
        }
    }

    c.pass = facets_ok && circle_ok && witness_ok && simplex_ok;
    std::ostringstream d;
    d << "triangle boundary " << (facets_ok ? "exact" : "WRONG") << ", one circle "
      << (circle_ok ? "confirmed" : "WRONG") << "; non-decomposable witness "
      << (witness_ok ? "replayed" : "WRONG") << "; simplex leaves "
      << (simplex_ok ? "confirmed" : "WRONG");
    c.detail = d.str();
    return c;
}

struct Pass {
    Criterion results[7];
    Stream streams[7];
    bool all() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

Pass run_all(bool memo) {
    Pass p;
    auto timed = [](Criterion c, std::chrono::steady_clock::time_point start) {
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return c;
    };
    auto t0 = std::chrono::steady_clock::now();
    p.results[0] = timed(criterion1(memo, p.streams[0]), t0);

    auto t1 = std::chrono::steady_clock::now();
    p.results[1] = timed(criterion2(memo, p.streams[1]), t1);

    auto t2 = std::chrono::steady_clock::now();
    ConfirmationSweep run34 = criteria3and4(memo, p.streams[2], p.streams[3]);
    p.results[2] = timed(run34.oracle_and_certificates, t2);
    p.results[3] = run34.link_guarantees;
    p.results[3].seconds = p.results[2].seconds;

    auto t4 = std::chrono::steady_clock::now();
    p.results[4] = timed(criterion5(memo, p.streams[4]), t4);

    auto t5 = std::chrono::steady_clock::now();
    p.results[5] = timed(criterion6(memo, p.streams[5]), t5);

    auto t6 = std::chrono::steady_clock::now();
    p.results[6] = timed(criterion7(memo, p.streams[6]), t6);
    return p;
}

}  // namespace

int main() {
    const double limits[7] = {5.0, 600.0, 900.0, 900.0, 120.0, 600.0, 60.0};

    Pass with_memo = run_all(true);
    Pass without_memo = run_all(false);

    bool all_pass = true;
    for (int i = 0; i < 7; ++i) {
        Criterion& c = with_memo.results[i];
        bool in_time = c.seconds < limits[i];
        bool pass = c.pass && without_memo.results[i].pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << "criterion " << (i + 1) << ": " << (pass ? "PASS" : "FAIL") << " (" << c.seconds
             << " s) - " << c.detail;
        if (!in_time) line << " [over the " << limits[i] << " s budget]";
        std::cout << line.str() << std::endl;
    }

    // 8. Determinism: identical artifact bytes with memoization off, and an
    //    identical survey report with four workers.
    bool streams_equal = true;
    for (int i = 0; i < 7; ++i)
        if (!(with_memo.streams[i] == without_memo.streams[i])) streams_equal = false;

    cli::SurveyOptions survey;
    survey.max_n = 6;
    bool fail_serial = false, fail_parallel = false;
    std::string serial = cli::survey_report(survey, fail_serial);
    survey.jobs = 4;
    survey.memoize = false;
    std::string parallel = cli::survey_report(survey, fail_parallel);
    bool survey_ok = serial == parallel && !fail_serial && !fail_parallel;

    bool c8 = streams_equal && survey_ok;
    all_pass = all_pass && c8;
    std::uint64_t total_bytes = 0;
    for (const auto& s : with_memo.streams) total_bytes += s.bytes;
    std::cout << "criterion 8: " << (c8 ? "PASS" : "FAIL") << " - "
              << (streams_equal ? "artifact streams byte-identical without memoization"
                                : "ARTIFACT STREAMS DIVERGED")
              << " (" << total_bytes << " bytes hashed); survey serial vs 4 workers "
              << (survey_ok ? "byte-identical" : "DIVERGED") << std::endl;

    return all_pass ? 0 : 1;
}
