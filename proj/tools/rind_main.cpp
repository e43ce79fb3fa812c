#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rind/commands.hpp"

int main(int argc, char** argv) {
    using namespace rind::cli;

    CLI::App app{"r-independence complexes: construction, decomposition certificates, "
                 "shellings and homology"};
    app.require_subcommand(1);

    BuildOptions build;
    auto* cmd_b = app.add_subcommand("build", "write the r-independence complex of a graph");
    cmd_b->add_option("--graph", build.graph_path, "graph file")->required();
    cmd_b->add_option("--radius", build.radius, "component size bound r")->required();
    cmd_b->add_option("--out", build.out_path, "output complex file")->required();
    cmd_b->add_option("--guard", build.vertex_guard, "max vertex count");

    DecomposeOptions dec;
    auto* cmd_d = app.add_subcommand("decompose", "emit a decomposition certificate for a forest");
    cmd_d->add_option("--graph", dec.graph_path, "forest file")->required();
    cmd_d->add_option("--radius", dec.radius, "component size bound r")->required();
    cmd_d->add_option("--out", dec.out_path, "output certificate file")->required();
    cmd_d->add_option("--dot", dec.dot_path, "also export the recursion tree as DOT");
    cmd_d->add_flag("--record-facets", dec.record_facets, "annotate nodes with their facets");

    CheckVdOptions chk;
    auto* cmd_c = app.add_subcommand("check-vd", "decide vertex decomposability of a complex");
    cmd_c->add_option("--complex", chk.complex_path, "complex file")->required();
    cmd_c->add_option("--out", chk.out_path, "certificate/witness output (default stdout)");

    VerifyOptions ver;
    auto* cmd_v = app.add_subcommand("verify", "verify a certificate against a graph's complex");
    cmd_v->add_option("--cert", ver.cert_path, "certificate file")->required();
    cmd_v->add_option("--graph", ver.graph_path, "graph file")->required();
    cmd_v->add_option("--radius", ver.radius, "component size bound r")->required();

    SurveyOptions sur;
    std::string mode = "exhaustive";
    auto* cmd_s = app.add_subcommand("survey", "batch-validate trees and write a CSV report");
    cmd_s->add_option("--max-n", sur.max_n, "tree size (exhaustive: up to; random: exactly)");
    cmd_s->add_option("--r-min", sur.r_min, "smallest radius");
    cmd_s->add_option("--r-max", sur.r_max, "largest radius (0 = adaptive)");
    cmd_s->add_option("--mode", mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    cmd_s->add_option("--seed", sur.seed, "base seed for random mode");
    cmd_s->add_option("--trials", sur.trials, "tree count in random mode");
    cmd_s->add_option("--jobs", sur.jobs, "worker threads");
    cmd_s->add_option("--guard", sur.guard, "max-n guard override");
    cmd_s->add_option("--vd-guard", sur.vd_guard, "skip oracle columns above this n");
    cmd_s->add_flag("--dedup", sur.dedup, "keep one tree per isomorphism class");
    cmd_s->add_flag("--timings", sur.timings, "fill the ms column with wall times");
    cmd_s->add_flag("!--no-memo", sur.memoize, "disable oracle memoization");
    cmd_s->add_option("--out", sur.out_path, "report file (default stdout)");

    HomologyOptions hom;
    auto* cmd_h = app.add_subcommand("homology", "reduced Betti numbers of a complex");
    cmd_h->add_option("--complex", hom.complex_path, "complex file")->required();

    SpheresOptions sph;
    auto* cmd_p = app.add_subcommand("spheres", "sphere counts from a certificate's shelling");
    cmd_p->add_option("--cert", sph.cert_path, "certificate file")->required();
    cmd_p->add_option("--graph", sph.graph_path, "graph file")->required();
    cmd_p->add_option("--radius", sph.radius, "component size bound r")->required();

    ExportDotOptions dot;
    auto* cmd_e = app.add_subcommand("export-dot", "decompose and export the recursion tree");
    cmd_e->add_option("--graph", dot.graph_path, "forest file")->required();
    cmd_e->add_option("--radius", dot.radius, "component size bound r")->required();
    cmd_e->add_option("--out", dot.out_path, "output DOT file")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_b->parsed()) return cmd_build(build, std::cerr);
    if (cmd_d->parsed()) return cmd_decompose(dec, std::cerr);
    if (cmd_c->parsed()) return cmd_check_vd(chk, std::cout, std::cerr);
    if (cmd_v->parsed()) return cmd_verify(ver, std::cerr);
    if (cmd_s->parsed()) {
        sur.mode = mode == "random" ? SurveyMode::Random : SurveyMode::Exhaustive;
        return cmd_survey(sur, std::cerr);
    }
    if (cmd_h->parsed()) return cmd_homology(hom, std::cout, std::cerr);
    if (cmd_p->parsed()) return cmd_spheres(sph, std::cout, std::cerr);
    if (cmd_e->parsed()) return cmd_export_dot(dot, std::cerr);
    return kExitOk;
}
