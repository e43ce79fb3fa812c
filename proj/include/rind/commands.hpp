#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;      // semantic negative: not VD, verification failed, mismatch
inline constexpr int kExitParse = 2;     // malformed input
inline constexpr int kExitGuard = 3;     // size guard breached
inline constexpr int kExitNotForest = 4; // decompose needs a forest

struct BuildOptions {
    std::string graph_path;
    int radius = 1;
    std::string out_path;
    int vertex_guard = 22;
};
int cmd_build(const BuildOptions& opt, std::ostream& diag);

struct DecomposeOptions {
    std::string graph_path;
    int radius = 1;
    std::string out_path;
    std::string dot_path;  // optional recursion-tree export
    bool record_facets = false;
};
int cmd_decompose(const DecomposeOptions& opt, std::ostream& diag);

struct CheckVdOptions {
    std::string complex_path;
    std::string out_path;  // empty: print the document to stdout
};
int cmd_check_vd(const CheckVdOptions& opt, std::ostream& out, std::ostream& diag);

struct VerifyOptions {
    std::string cert_path;
    std::string graph_path;
    int radius = 1;
};
int cmd_verify(const VerifyOptions& opt, std::ostream& diag);

enum class SurveyMode { Exhaustive, Random };

struct SurveyOptions {
    int max_n = 6;
    int r_min = 1;
    int r_max = 0;  // 0: up to n (exhaustive) or 3 (random)
    SurveyMode mode = SurveyMode::Exhaustive;
    std::uint64_t seed = 0;
    int trials = 100;  // random mode only
    int jobs = 1;
    int guard = 0;      // 0: default 8 exhaustive / 14 random
    int vd_guard = 10;  // oracle columns skipped above this n
    bool dedup = false; // exhaustive mode: keep one tree per isomorphism class
    bool timings = false;
    bool memoize = true;
    std::string out_path;
};

/// The survey report as a string; also usable directly by tests.
/// Sets any_failure when some row has a fail cell.
std::string survey_report(const SurveyOptions& opt, bool& any_failure);
int cmd_survey(const SurveyOptions& opt, std::ostream& diag);

struct HomologyOptions {
    std::string complex_path;
};
int cmd_homology(const HomologyOptions& opt, std::ostream& out, std::ostream& diag);

struct SpheresOptions {
    std::string cert_path;
    std::string graph_path;
    int radius = 1;
};
int cmd_spheres(const SpheresOptions& opt, std::ostream& out, std::ostream& diag);

struct ExportDotOptions {
    std::string graph_path;
    int radius = 1;
    std::string out_path;
};
int cmd_export_dot(const ExportDotOptions& opt, std::ostream& diag);

}  // namespace rind::cli
