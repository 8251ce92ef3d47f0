// Command-line front end: validates .toric inputs and prints cohomology,
// decomposition, Adams charts and KO-group tables.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "tko/tko.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_parse = 3;
constexpr int exit_no_collapse = 4;

struct CommonArgs {
    std::string file;
    std::string mode;  // "", "manifold", "singular"
    bool trust_sphere = false;
    int max_degree = -1;
    int max_stem = -1;
    int max_filt = 8;
    std::string format = "text";
    std::string out_path;
};

void add_input_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.file, "problem file (.toric)")->required();
    cmd->add_option("--mode", args.mode, "override the file's mode (manifold|singular)")
        ->check(CLI::IsMember({"manifold", "singular"}));
    cmd->add_flag("--trust-sphere", args.trust_sphere,
                  "assert sphere-only invariants (Dehn-Sommerville, rank match, duality)");
}

tko::ProblemSpec load_spec(const CommonArgs& args) {
    tko::ProblemSpec spec = tko::parse_spec_file(args.file);
    if (args.mode == "manifold") spec.manifold_mode = true;
    if (args.mode == "singular") spec.manifold_mode = false;
    return spec;
}

tko::RunOptions run_options(const CommonArgs& args) {
    tko::RunOptions opts;
    opts.trust_sphere = args.trust_sphere;
    opts.max_degree = args.max_degree;
    opts.chart_max_stem = args.max_stem;
    opts.chart_max_filt = args.max_filt;
    return opts;
}

int emit(const CommonArgs& args, const std::string& text) {
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << args.out_path << "'\n";
            return 1;
        }
        out << text;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KO-theory of quasitoric manifolds from combinatorial data"};
    app.require_subcommand(1);

    CommonArgs args;
    bool chart_s0 = false, chart_m = false, ex_list = false;
    std::string ex_name, ex_write_dir;
    int ex_mgon = 0;

    auto* validate = app.add_subcommand("validate", "validate the complex and the characteristic matrix");
    add_input_flags(validate, args);

    auto* cohomology = app.add_subcommand("cohomology", "print the mod-2 cohomology ring");
    add_input_flags(cohomology, args);
    cohomology->add_option("--format", args.format)->check(CLI::IsMember({"text", "json"}));

    auto* decomp = app.add_subcommand("decompose", "print the A(1)-module decomposition");
    add_input_flags(decomp, args);

    auto* chart = app.add_subcommand("chart", "render the Adams E2 chart");
    chart->add_option("file", args.file, "problem file (.toric)");
    chart->add_flag("--s0", chart_s0, "render the standard chart of the one-class module");
    chart->add_flag("--m", chart_m, "render the standard chart of the two-class module");
    chart->add_option("--mode", args.mode)->check(CLI::IsMember({"manifold", "singular"}));
    chart->add_option("--max-stem", args.max_stem, "largest stem (default 2n+8, or 16 for --s0/--m)");
    chart->add_option("--max-filt", args.max_filt, "largest filtration (default 8)");
    chart->add_option("--format", args.format)->check(CLI::IsMember({"text", "svg"}));
    chart->add_option("--out", args.out_path, "write to a file instead of stdout");

    auto* ko = app.add_subcommand("ko", "print ko, KO and KO-cohomology tables");
    add_input_flags(ko, args);
    ko->add_option("--max-degree", args.max_degree, "largest degree reported (default 2n+8)");

    auto* report = app.add_subcommand("report", "full report: combinatorics, ring, Sq2, decomposition, groups");
    add_input_flags(report, args);
    report->add_option("--max-degree", args.max_degree);
    report->add_option("--format", args.format)->check(CLI::IsMember({"text", "json"}));
    report->add_option("--out", args.out_path, "write to a file instead of stdout");

    auto* examples = app.add_subcommand("examples", "list or print bundled example inputs");
    examples->add_option("name", ex_name, "print this bundled example");
    examples->add_flag("--list", ex_list, "list bundled example names");
    examples->add_option("--write", ex_write_dir, "write all bundled examples to a directory");
    examples->add_option("--mgon", ex_mgon, "print an m-gon input with a default valid lambda");

    CLI11_PARSE(app, argc, argv);

    try {
        if (examples->parsed()) {
            if (ex_mgon) return emit(args, tko::render_spec(tko::example_mgon(ex_mgon)));
            if (!ex_name.empty()) return emit(args, tko::render_spec(tko::bundled_example(ex_name)));
            if (!ex_write_dir.empty()) {
                std::filesystem::create_directories(ex_write_dir);
                for (const auto& e : tko::bundled_examples()) {
                    std::ofstream out(std::filesystem::path(ex_write_dir) / (e.name + ".toric"));
                    out << tko::render_spec(e.spec);
                }
                std::cout << "wrote " << tko::bundled_examples().size() << " files to " << ex_write_dir
                          << "\n";
                return exit_ok;
            }
            for (const auto& e : tko::bundled_examples())
                std::cout << e.name << std::string(std::max<int>(1, 16 - int(e.name.size())), ' ')
                          << e.description << "\n";
            return exit_ok;
        }

        if (validate->parsed()) {
            tko::ProblemSpec spec = load_spec(args);
            tko::SimplicialComplex K = tko::validate_complex(spec.facets, spec.m, spec.n);
            tko::FVector f = tko::f_vector(K);
            tko::HVector h = tko::h_vector(f, K.n);
            if (args.trust_sphere) tko::check_sphere_conditions(h);
            tko::validate_lambda(spec, K);
            std::cout << "valid: " << spec.name << " (n=" << K.n << ", m=" << K.m << ", "
                      << K.facets.size() << " facets)\n";
            std::cout << "f-vector: (";
            for (std::size_t i = 0; i < f.f.size(); ++i) std::cout << (i ? ", " : "") << f.f[i];
            std::cout << ")\nh-vector: (";
            for (std::size_t i = 0; i < h.h.size(); ++i) std::cout << (i ? ", " : "") << h.h[i];
            std::cout << ")\n";
            return exit_ok;
        }

        if (chart->parsed()) {
            if (chart_s0 || chart_m) {
                int stem = args.max_stem >= 0 ? args.max_stem : 16;
                tko::BigradedChart c = chart_s0 ? tko::ext_s0(stem, args.max_filt)
                                                : tko::ext_m(stem, args.max_filt);
                return emit(args, tko::render_chart(c, args.format == "text" ? "ascii" : args.format));
            }
            if (args.file.empty()) {
                std::cerr << "error: chart needs a file or --s0/--m\n";
                return 1;
            }
            tko::Report rep = tko::run_pipeline(load_spec(args), run_options(args));
            return emit(args, tko::render_chart(rep.chart, args.format == "text" ? "ascii" : args.format));
        }

        // remaining subcommands run the full pipeline
        tko::ProblemSpec spec = load_spec(args);
        tko::Report rep = tko::run_pipeline(spec, run_options(args));

        if (cohomology->parsed()) {
            if (args.format == "json") {
                nlohmann::ordered_json j = tko::to_json(rep);
                nlohmann::ordered_json ring;
                for (const char* key : {"name", "f_vector", "h_vector", "cohomology"}) ring[key] = j[key];
                std::cout << ring.dump(2) << "\n";
                return exit_ok;
            }
            std::cout << "== " << spec.name << " ==\n";
            for (int k = 0; k <= rep.K.n; ++k) {
                std::cout << "H^" << 2 * k << ": dim " << rep.dims[k] << "  basis:";
                for (const auto& b : rep.basis_names[k]) std::cout << " " << b;
                std::cout << "\n";
            }
            std::cout << "linear relations:";
            for (const auto& r : rep.linear_relations) std::cout << " " << r;
            std::cout << "\nface relations:";
            for (const auto& r : rep.nonface_relations) std::cout << " " << r;
            std::cout << "\n";
            return exit_ok;
        }

        if (decomp->parsed()) {
            std::cout << rep.dec.summary() << "\n";
            return exit_ok;
        }

        if (ko->parsed()) {
            if (!rep.collapse_established) {
                for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
                std::cout << tko::render_chart_ascii(rep.chart);
                return exit_no_collapse;
            }
            std::ostringstream out;
            tko::detail::group_table(out, *rep.ko);
            tko::detail::group_table(out, *rep.KO);
            tko::detail::group_table(out, *rep.KO_co);
            std::cout << out.str();
            return exit_ok;
        }

        if (report->parsed()) {
            int code = rep.collapse_established ? exit_ok : exit_no_collapse;
            if (args.format == "json") {
                int rc = emit(args, tko::to_json(rep).dump(2) + "\n");
                return rc == exit_ok ? code : rc;
            }
            int rc = emit(args, tko::to_text(rep));
            return rc == exit_ok ? code : rc;
        }
    } catch (const tko::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const tko::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == tko::errc::collapse_not_established ? exit_no_collapse : exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
