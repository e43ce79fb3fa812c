#include "rind/commands.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>
#include <vector>

#include "rind/formats.hpp"
#include "rind/homology.hpp"
#include "rind/independence.hpp"
#include "rind/tree_decompose.hpp"

namespace rind::cli {

namespace {

int map_errors(std::ostream& diag, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        // bad user-supplied values (radius, faces, vertex labels)
        diag << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

std::string betti_text(const BettiVector& betti) {
    std::ostringstream out;
    for (int d = -1; d <= betti.max_dim(); ++d)
        out << "dim " << d << ": " << betti.at(d) << "\n";
    return out.str();
}

std::string counts_text(const std::map<int, long>& counts) {
    if (counts.empty()) return "no spheres (contractible)\n";
    std::ostringstream out;
    for (const auto& [dim, count] : counts) out << "dim " << dim << ": " << count << "\n";
    return out.str();
}

}  // namespace

int cmd_build(const BuildOptions& opt, std::ostream& diag) {
    return map_errors(diag, [&] {
        Graph g = load_graph(opt.graph_path);
        if (g.vertex_count() > opt.vertex_guard)
            throw GuardError("build: " + std::to_string(g.vertex_count()) +
                             " vertices exceeds the guard of " + std::to_string(opt.vertex_guard));
        SimplicialComplex k = ind_complex(g, Radius(opt.radius));
        write_file_atomic(opt.out_path, dump_json(complex_to_json(k)));
        return kExitOk;
    });
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& diag) {
    return map_errors(diag, [&] {
        Graph g = load_graph(opt.graph_path);
        if (!is_forest(g)) {
            diag << "error: decompose: input graph is not a forest\n";
            return kExitNotForest;
        }
        Certificate cert = decompose(g, Radius(opt.radius));
        if (opt.record_facets) {
            SimplicialComplex k = ind_complex(g, Radius(opt.radius));
            write_file_atomic(opt.out_path, dump_json(certificate_to_json(cert, &k)));
        } else {
            write_file_atomic(opt.out_path, dump_json(certificate_to_json(cert)));
        }
        if (!opt.dot_path.empty()) write_file_atomic(opt.dot_path, certificate_to_dot(cert));
        return kExitOk;
    });
}

int cmd_check_vd(const CheckVdOptions& opt, std::ostream& out, std::ostream& diag) {
    return map_errors(diag, [&] {
        SimplicialComplex k = load_complex(opt.complex_path);
        VdOracle oracle;
        VdResult result = oracle.check(k);
        json doc = is_decomposable(result)
                       ? certificate_to_json(std::get<Certificate>(result), &k)
                       : witness_to_json(std::get<NonVdWitness>(result));
        if (opt.out_path.empty())
            out << dump_json(doc);
        else
            write_file_atomic(opt.out_path, dump_json(doc));
        return is_decomposable(result) ? kExitOk : kExitFail;
    });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& diag) {
    return map_errors(diag, [&] {
        Certificate cert = load_certificate(opt.cert_path);
        Graph g = load_graph(opt.graph_path);
        SimplicialComplex k = ind_complex(g, Radius(opt.radius));
        if (verify_certificate(cert, k)) {
            diag << "certificate verified\n";
            return kExitOk;
        }
        diag << "certificate FAILED verification\n";
        return kExitFail;
    });
}

int cmd_homology(const HomologyOptions& opt, std::ostream& out, std::ostream& diag) {
    return map_errors(diag, [&] {
        SimplicialComplex k = load_complex(opt.complex_path);
        out << betti_text(reduced_betti(k));
        return kExitOk;
    });
}

int cmd_spheres(const SpheresOptions& opt, std::ostream& out, std::ostream& diag) {
    return map_errors(diag, [&] {
        Certificate cert = load_certificate(opt.cert_path);
        Graph g = load_graph(opt.graph_path);
        SimplicialComplex k = ind_complex(g, Radius(opt.radius));
        if (!verify_certificate(cert, k)) {
            diag << "error: certificate does not certify the complex of this graph\n";
            return kExitFail;
        }
        std::vector<VertexSet> order = shelling_from_vd(cert);
        std::map<int, long> counts = sphere_counts(k, order);
        out << counts_text(counts);
        // cross-check against homology; disagreement is a failure
        BettiVector betti = reduced_betti(k);
        bool agree = true;
        for (int d = -1; d <= std::max(betti.max_dim(), k.dimension()); ++d) {
            auto it = counts.find(d);
            long c = it == counts.end() ? 0 : it->second;
            if (c != betti.at(d)) agree = false;
        }
        if (!agree) {
            diag << "error: sphere counts disagree with homology\n";
            return kExitFail;
        }
        return kExitOk;
    });
}

int cmd_export_dot(const ExportDotOptions& opt, std::ostream& diag) {
    return map_errors(diag, [&] {
        Graph g = load_graph(opt.graph_path);
        if (!is_forest(g)) {
            diag << "error: export-dot: input graph is not a forest\n";
            return kExitNotForest;
        }
        Certificate cert = decompose(g, Radius(opt.radius));
        write_file_atomic(opt.out_path, certificate_to_dot(cert));
        return kExitOk;
    });
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string edge_list_hash(const Graph& g) {
    std::ostringstream s;
    for (const auto& [u, v] : g.edges()) s << u << "-" << v << ";";
    std::ostringstream hex;
    hex << std::hex << fnv1a(s.str());
    return "h" + hex.str();
}

struct SurveyTask {
    std::string id;
    Graph tree;
};

struct SurveyRow {
    std::string id;
    int n;
    int r;
    std::string lemma31;
    std::string vd;
    std::string cert;
    std::string betti;
    long ms;
};

std::vector<SurveyRow> survey_tree(const SurveyTask& task, const SurveyOptions& opt) {
    std::vector<SurveyRow> rows;
    int n = task.tree.vertex_count();
    int r_hi = opt.r_max > 0 ? opt.r_max
                             : (opt.mode == SurveyMode::Exhaustive ? n : std::min(3, n));
    for (int r = opt.r_min; r <= r_hi; ++r) {
        auto start = std::chrono::steady_clock::now();
        SurveyRow row{task.id, n, r, "pass", "pass", "pass", "pass", 0};
        Radius radius(r);
        SimplicialComplex k = ind_complex(task.tree, radius);

        if (n > opt.vd_guard) {
            row.lemma31 = "skip";
            row.vd = "skip";
        } else {
            if (n >= r + 1) {
                for (int v : task.tree.vertices()) {
                    if (shedding_characterization(task.tree, radius, v) != is_shedding(k, v)) {
                        row.lemma31 = "fail";
                        break;
                    }
                }
            }
            VdOracle oracle(opt.memoize);
            if (!is_decomposable(oracle.check(k))) row.vd = "fail";
        }

        VdOracle oracle(opt.memoize);
        Certificate cert = decompose(task.tree, radius, oracle, nullptr);
        if (!verify_certificate(cert, k)) row.cert = "fail";

        try {
            std::vector<VertexSet> order = shelling_from_vd(cert);
            std::map<int, long> counts = sphere_counts(k, order);
            BettiVector betti = reduced_betti(k);
            for (int d = -1; d <= std::max(betti.max_dim(), k.dimension()); ++d) {
                auto it = counts.find(d);
                long c = it == counts.end() ? 0 : it->second;
                if (c != betti.at(d)) {
                    row.betti = "fail";
                    break;
                }
            }
        } catch (const GuardError&) {
            row.betti = "skip";
        }

        if (opt.timings) {
            auto elapsed = std::chrono::steady_clock::now() - start;
            row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string survey_report(const SurveyOptions& opt, bool& any_failure) {
    int guard = opt.guard > 0 ? opt.guard : (opt.mode == SurveyMode::Exhaustive ? 8 : 14);
    if (opt.max_n > guard)
        throw GuardError("survey: max-n " + std::to_string(opt.max_n) +
                         " exceeds the guard of " + std::to_string(guard));
    if (opt.max_n < 1) throw GuardError("survey: max-n must be >= 1");

    std::vector<SurveyTask> tasks;
    if (opt.mode == SurveyMode::Exhaustive) {
        std::unordered_set<std::string> shapes;
        for (int n = 1; n <= opt.max_n; ++n) {
            std::uint64_t index = 0;
            for_each_labeled_tree(n, [&](const Graph& t) {
                std::string id = "t" + std::to_string(n) + "." + std::to_string(index++);
                if (opt.dedup && !shapes.insert(ahu_code(t)).second) return;
                tasks.push_back({id, t});
            });
        }
    } else {
        for (int i = 0; i < opt.trials; ++i) {
            Graph t = random_tree(opt.max_n, opt.seed + static_cast<std::uint64_t>(i));
            tasks.push_back({edge_list_hash(t), t});
        }
    }

    std::vector<std::vector<SurveyRow>> results(tasks.size());
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = survey_tree(tasks[i], opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    results[i] = survey_tree(tasks[i], opt);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::ostringstream out;
    out << "tree,n,r,lemma31,vd,cert,betti,ms\n";
    any_failure = false;
    for (const auto& rows : results) {
        for (const auto& row : rows) {
            out << row.id << "," << row.n << "," << row.r << "," << row.lemma31 << "," << row.vd
                << "," << row.cert << "," << row.betti << "," << row.ms << "\n";
            if (row.lemma31 == "fail" || row.vd == "fail" || row.cert == "fail" ||
                row.betti == "fail")
                any_failure = true;
        }
    }
    return out.str();
}

int cmd_survey(const SurveyOptions& opt, std::ostream& diag) {
    return map_errors(diag, [&] {
        bool any_failure = false;
        std::string report = survey_report(opt, any_failure);
        if (opt.out_path.empty())
            std::cout << report;
        else
            write_file_atomic(opt.out_path, report);
        if (any_failure) {
            diag << "survey: some rows failed\n";
            return kExitFail;
        }
        return kExitOk;
    });
}

}  // namespace rind::cli
