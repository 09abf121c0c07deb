// ave-lab: command-line front end for the avelab library.
//
// Every command prints one JSON report (schema "ave-lab/1") to stdout; warnings
// are repeated on stderr. Exit codes: 0 success, 2 bad input, 3 dimension cap,
// 4 dimension misuse, 5 numeric failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avelab/ave.hpp"
#include "avelab/bench.hpp"
#include "avelab/compare.hpp"
#include "avelab/errors.hpp"
#include "avelab/homotopy.hpp"
#include "avelab/lcp.hpp"
#include "avelab/report.hpp"
#include "avelab/spectrum.hpp"

namespace {

using avelab::Matrix;
using avelab::Tolerances;
using avelab::Vector;
using avelab::report::Json;

enum ExitCode { kOk = 0, kParse = 2, kCap = 3, kDimension = 4, kNumeric = 5 };

struct Globals {
    Tolerances tol;
    std::uint64_t seed = 42;
    std::size_t max_n = avelab::kDefaultMaxDimension;
    bool acknowledge = false;
};

struct Output {
    std::vector<std::string> warnings;

    void warn(std::string message) {
        std::cerr << "warning: " << message << '\n';
        warnings.push_back(std::move(message));
    }
};

Json matrix_input(const std::string& path, const Matrix& a) { return {{"file", path}, {"matrix", avelab::report::to_json(a)}}; }

void emit(const Globals& g, std::string_view command, Json inputs, Json results, const Output& out) {
    std::cout << avelab::report::dump(
                     avelab::report::envelope(command, std::move(inputs), g.tol, g.seed, std::move(results), out.warnings))
              << '\n';
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

// Default profile: one point inside each properness interval.
std::vector<double> default_profile(const std::vector<double>& bp) {
    if (bp.empty()) return {0.4, 1.0};
    std::vector<double> ts{0.5 * bp.front()};
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) ts.push_back(0.5 * (bp[k] + bp[k + 1]));
    ts.push_back(2.0 * bp.back());
    return ts;
}

int run(int argc, char** argv) {
    CLI::App app{"Aligning spectra, absolute value equations and their mapping degree"};
    app.require_subcommand(1);
    Globals g;

    app.add_option("--tol-residual", g.tol.residual, "Eigen/solve residual tolerance")->capture_default_str();
    app.add_option("--tol-im", g.tol.im, "Imaginary-part tolerance for real eigenvalues")->capture_default_str();
    app.add_option("--tol-nonneg", g.tol.nonneg, "Nonnegativity tolerance for eigenvectors")->capture_default_str();
    app.add_option("--tol-boundary", g.tol.boundary, "Orthant boundary tolerance")->capture_default_str();
    app.add_option("--tol-dedupe", g.tol.dedupe, "Deduplication tolerance")->capture_default_str();
    app.add_option("--tol-sing", g.tol.sing, "Singularity threshold")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--max-n", g.max_n, "Dimension cap for 2^n enumeration")->capture_default_str();
    app.add_flag("--i-accept-exponential-cost", g.acknowledge, "Required to raise --max-n above 20");

    std::string matrix_path;
    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("matrix", matrix_path, "Matrix file {\"n\": .., \"rows\": [[..], ..]}")->required();
    };

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Aligning spectrum, rho_a, rho_R, degeneracy, simplicity");
    add_matrix(spectrum_cmd);

    std::string rhs;
    auto* solve_cmd = app.add_subcommand("solve", "All solutions of z - A|z| = b");
    add_matrix(solve_cmd);
    solve_cmd->add_option("--rhs", rhs, "Right-hand side b, e.g. 1,1 or [1,1]")->required();

    avelab::ave::DegreeOptions degree_options;
    auto* degree_cmd = app.add_subcommand("degree", "Mapping degree of z - A|z|");
    add_matrix(degree_cmd);
    degree_cmd->add_option("--trials", degree_options.trials, "Accepted regular values required")->capture_default_str();
    degree_cmd->add_option("--max-rejections", degree_options.max_rejections)->capture_default_str();

    std::vector<double> ts;
    std::size_t samples = 360;
    std::string out_dir = ".";
    auto* trace_cmd = app.add_subcommand("trace", "Unit-circle images under z - tA|z| (2x2 only), written as CSV");
    add_matrix(trace_cmd);
    trace_cmd->add_option("--t", ts, "Homotopy parameters")->required()->delimiter(',');
    trace_cmd->add_option("--samples", samples, "Samples per circle")->capture_default_str();
    trace_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    std::string from_ave;
    std::string sigma;
    int q_samples = 500;
    auto* qcheck_cmd = app.add_subcommand("qcheck", "Q-matrix and P-matrix checks");
    qcheck_cmd->add_option("matrix", matrix_path, "LCP matrix file");
    qcheck_cmd->add_option("--from-ave", from_ave, "Build M = (I - S A)^{-1}(I + S A) from this AVE matrix");
    qcheck_cmd->add_option("--sigma", sigma, "Signature pattern for --from-ave, e.g. +-")->default_str("all +");
    qcheck_cmd->add_option("--samples", q_samples, "Sampled q vectors for n > 2")->capture_default_str();

    avelab::compare::SearchOptions search;
    double band = 1e-3;
    auto* compare_cmd = app.add_subcommand("compare", "rho_a versus rho_R and the max-min quotient functionals");
    add_matrix(compare_cmd);
    compare_cmd->add_option("--restarts", search.restarts)->capture_default_str();
    compare_cmd->add_option("--iterations", search.iterations)->capture_default_str();
    compare_cmd->add_option("--band", band, "Agreement tolerance for the functionals")->capture_default_str();

    auto* homotopy_cmd = app.add_subcommand("homotopy", "Properness breakpoints and degree profile of z - tA|z|");
    add_matrix(homotopy_cmd);
    homotopy_cmd->add_option("--t", ts, "Profile parameters (default: one per properness interval)")->delimiter(',');

    std::string suite_name;
    auto* suite_cmd = app.add_subcommand("suite", "Run a randomized property suite");
    suite_cmd->add_option("name", suite_name, "Suite id")->required()->check(CLI::IsMember(avelab::bench::suite_names()));

    std::string instance_path;
    auto* replay_cmd = app.add_subcommand("replay", "Re-check one failing suite instance");
    replay_cmd->add_option("instance", instance_path, "JSON file holding the instance object")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (g.max_n > avelab::kDefaultMaxDimension && !g.acknowledge) {
        std::cerr << "error: --max-n above " << avelab::kDefaultMaxDimension
                  << " enumerates 2^n signatures; pass --i-accept-exponential-cost to proceed\n";
        return kParse;
    }
    g.tol.max_n = g.max_n;
    g.tol.validate();

    namespace rp = avelab::report;
    Output out;

    if (*spectrum_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        const auto spec = avelab::spectrum::aligning_spectrum(a, g.tol);
        if (spec.inconclusive) out.warn("eigenspace cone enumeration was truncated; spectrum may be incomplete");
        Json results = {{"spectrum", rp::to_json(spec, g.tol)},
                        {"rho_a", spec.pairs.empty() ? 0.0 : spec.pairs.front().lambda},
                        {"rho_R", avelab::spectrum::rho_sign_real(a, g.tol)},
                        {"degenerate", avelab::spectrum::is_degenerate(spec, g.tol)},
                        {"simplicity", rp::to_json(avelab::spectrum::simplicity(spec, g.tol))}};
        emit(g, "spectrum", matrix_input(matrix_path, a), std::move(results), out);
    } else if (*solve_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        const Vector b = rp::parse_vector(rhs);
        if (b.size() != a.rows()) throw avelab::DimensionMismatch("--rhs length does not match the matrix");
        const auto solved = avelab::ave::solve_all(a, b, g.tol);
        if (solved.continuum()) out.warn("solution set contains a continuum; b is not a regular value");
        Json inputs = matrix_input(matrix_path, a);
        inputs["b"] = rp::to_json(b);
        emit(g, "solve", std::move(inputs), rp::to_json(solved), out);
    } else if (*degree_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        degree_options.seed = g.seed;
        const auto d = avelab::ave::degree(a, g.tol, degree_options);
        if (!d.degree) out.warn("degree undefined: " + d.failure);
        Json inputs = matrix_input(matrix_path, a);
        inputs["trials"] = degree_options.trials;
        emit(g, "degree", std::move(inputs), rp::to_json(d), out);
    } else if (*trace_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        std::filesystem::create_directories(out_dir);
        Json traces = Json::array();
        for (double t : ts) {
            const auto trace = avelab::homotopy::circle_trace(a, t, samples);
            const auto winding = avelab::homotopy::winding_number(trace, g.tol);
            if (!winding) out.warn("winding number undefined at t = " + short_number(t));
            const auto file = std::filesystem::path(out_dir) / ("trace_t" + short_number(t) + ".csv");
            std::ofstream csv(file);
            if (!csv) throw avelab::InvalidInput("cannot write " + file.string());
            csv << "theta,x1,x2,fx1,fx2\n";
            for (const auto& s : trace.samples) {
                csv << format_number(s.theta) << ',' << format_number(s.point.x()) << ',' << format_number(s.point.y())
                    << ',' << format_number(s.image.x()) << ',' << format_number(s.image.y()) << '\n';
            }
            traces.push_back({{"t", t},
                              {"csv", file.filename().string()},
                              {"samples", trace.samples.size()},
                              {"winding_number", winding ? Json(*winding) : Json(nullptr)}});
        }
        Json inputs = matrix_input(matrix_path, a);
        inputs["t"] = ts;
        inputs["samples"] = samples;
        const Json report = rp::envelope("trace", inputs, g.tol, g.seed, {{"traces", traces}}, out.warnings);
        std::ofstream(std::filesystem::path(out_dir) / "trace_report.json") << rp::dump(report) << '\n';
        std::cout << rp::dump(report) << '\n';
    } else if (*qcheck_cmd) {
        Json inputs;
        Matrix m;
        if (!from_ave.empty()) {
            const Matrix a = rp::read_matrix_file(from_ave);
            const auto s = sigma.empty() ? avelab::Signature::positive(static_cast<std::size_t>(a.rows()))
                                         : avelab::Signature::parse(sigma);
            if (s.size() != static_cast<std::size_t>(a.rows())) {
                throw avelab::DimensionMismatch("--sigma length does not match the matrix");
            }
            m = avelab::lcp::ave_to_lcp(a, s, Vector::Zero(a.rows()), g.tol).M;
            inputs = matrix_input(from_ave, a);
            inputs["sigma"] = s.to_string();
        } else if (!matrix_path.empty()) {
            m = rp::read_matrix_file(matrix_path);
            inputs = matrix_input(matrix_path, m);
        } else {
            std::cerr << "error: qcheck needs a matrix file or --from-ave\n";
            return kParse;
        }
        const auto q = avelab::lcp::q_check(m, g.tol, g.seed, q_samples);
        Json results = rp::to_json(q);
        results["M"] = rp::to_json(m);
        results["p_matrix"] = avelab::lcp::p_matrix_check(m, g.tol);
        emit(g, "qcheck", std::move(inputs), std::move(results), out);
    } else if (*compare_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        search.seed = g.seed;
        const auto cmp = avelab::compare::coincidence_report(a, g.tol, search, band);
        if (cmp.rhs > cmp.rho_a + band) {
            out.warn("closed-orthant max-min exceeds rho_a; see rhs_interior for the strictly positive variant");
        }
        Json inputs = matrix_input(matrix_path, a);
        inputs["restarts"] = search.restarts;
        inputs["iterations"] = search.iterations;
        inputs["band"] = band;
        emit(g, "compare", std::move(inputs), rp::to_json(cmp), out);
    } else if (*homotopy_cmd) {
        const Matrix a = rp::read_matrix_file(matrix_path);
        const auto bp = avelab::homotopy::properness_breakpoints(a, g.tol);
        if (ts.empty()) ts = default_profile(bp.breakpoints);
        avelab::ave::DegreeOptions opts;
        opts.seed = g.seed;
        Json profile = Json::array();
        for (const auto& p : avelab::homotopy::degree_profile(a, ts, g.tol, opts)) profile.push_back(rp::to_json(p));
        Json inputs = matrix_input(matrix_path, a);
        inputs["t"] = ts;
        emit(g, "homotopy", std::move(inputs), {{"properness", rp::to_json(bp)}, {"profile", profile}}, out);
    } else if (*suite_cmd) {
        const auto r = avelab::bench::run_suite(suite_name, g.seed, g.tol);
        if (!r.ok()) out.warn("suite '" + suite_name + "' reported failures");
        emit(g, "suite", {{"suite", suite_name}}, r.to_json(), out);
    } else if (*replay_cmd) {
        std::ifstream in(instance_path);
        if (!in) throw avelab::InvalidInput("cannot open '" + instance_path + "'");
        Json inst;
        try {
            inst = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw avelab::InvalidInput(std::string("instance is not valid JSON: ") + e.what());
        }
        if (inst.contains("instance")) inst = inst["instance"];
        const auto outcome = avelab::bench::check_instance(inst, g.tol);
        emit(g, "replay", {{"instance", inst}},
             {{"status", avelab::bench::to_string(outcome.status)}, {"detail", outcome.detail}}, out);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const avelab::DimensionCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const avelab::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDimension;
    } catch (const avelab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const avelab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    }
}
