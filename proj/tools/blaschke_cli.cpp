// Command-line front end: generate instances, solve them, verify coefficient
// files, and run the benchmark suites with CSV/JSON reports.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blaschke/instances.hpp"
#include "blaschke/pipeline.hpp"
#include "blaschke/solver.hpp"
#include "blaschke/verify.hpp"

using json = nlohmann::ordered_json;
using namespace blaschke;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::runtime_error(field + ": expected a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const json& doc) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << doc.dump(2) << "\n";
}

std::vector<Complex> points_from_json(const json& doc, const std::string& path) {
    if (!doc.contains("points")) throw std::runtime_error(path + ": missing field 'points'");
    std::vector<Complex> points;
    int idx = 0;
    for (const json& item : doc.at("points"))
        points.push_back(complex_from_json(item, path + ": points[" + std::to_string(idx++) + "]"));
    if (doc.contains("n") && doc.at("n").get<int>() != static_cast<int>(points.size()))
        throw std::runtime_error(path + ": field 'n' disagrees with the number of points");
    if (points.empty()) throw std::runtime_error(path + ": no points given");
    return points;
}

std::vector<Complex> coeffs_from_json(const json& doc, const std::string& path) {
    if (!doc.contains("a")) throw std::runtime_error(path + ": missing field 'a'");
    std::vector<Complex> a;
    int idx = 0;
    for (const json& item : doc.at("a"))
        a.push_back(complex_from_json(item, path + ": a[" + std::to_string(idx++) + "]"));
    if (doc.contains("n") && doc.at("n").get<int>() != static_cast<int>(a.size()))
        throw std::runtime_error(path + ": field 'n' disagrees with the number of coefficients");
    if (a.empty()) throw std::runtime_error(path + ": no coefficients given");
    return a;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iterations: return "max_iterations";
        case SolveStatus::singular: return "singular";
    }
    return "unknown";
}

const char* classification_name(Classification c) {
    return c == Classification::blaschke_product ? "blaschke_product" : "blaschke_form";
}

json report_to_json(const VerificationReport& rep) {
    json out;
    out["max_error"] = rep.max_error;
    out["max_abs_derivative"] = rep.max_abs_derivative;
    out["classification"] = classification_name(rep.classification);
    out["accurately_solved"] = rep.accurately_solved;
    return out;
}

struct BenchConfig {
    Family family;
    int n;
    double r;
    bool transformed;
};

struct BenchRow {
    std::string instance;
    BenchConfig config;
    int iterations;
    double cpu_seconds;
    double max_error;
    double max_abs_derivative;
    std::string classification;
    bool solved;
};

std::string config_label(const BenchConfig& c, int index) {
    std::ostringstream os;
    os << family_name(c.family) << "-n" << c.n;
    if (c.family != Family::cluster) os << "-r" << c.r;
    os << "-t" << (c.transformed ? 1 : 0) << "-i" << index;
    return os.str();
}

std::vector<BenchConfig> suite_configs(const std::string& suite, Family family, int n, double r,
                                       bool transformed) {
    std::vector<BenchConfig> configs;
    if (suite == "test1") {
        configs.push_back({Family::disk, 20, 0.99, false});
        configs.push_back({Family::disk, 20, 0.99, true});
    } else if (suite == "test2") {
        for (int k = 1; k <= 10; ++k) configs.push_back({Family::disk, 30, 0.1 * k, true});
    } else if (suite == "test3") {
        for (int nn : {10, 20, 30, 40, 50, 60}) configs.push_back({Family::disk, nn, 0.999, true});
    } else if (suite == "test4") {
        configs.push_back({Family::cluster, 10, 0.0, false});
        configs.push_back({Family::cluster, 10, 0.0, true});
        configs.push_back({Family::circle, 50, 0.95, false});
        configs.push_back({Family::circle, 50, 0.95, true});
    } else if (suite == "custom") {
        configs.push_back({family, n, r, transformed});
    } else {
        throw std::runtime_error("unknown suite: " + suite);
    }
    return configs;
}

json triplet(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    const double med = (v[(n - 1) / 2] + v[n / 2]) / 2.0;
    return json::array({v.front(), med, v.back()});
}

int cmd_gen(const std::string& family, int n, double r, std::uint64_t seed, const std::string& out) {
    InstanceSpec spec;
    spec.family = family_from_name(family);
    spec.n = n;
    spec.r = r;
    spec.seed = seed;
    const std::vector<Complex> points = generate(spec);

    json doc;
    doc["n"] = n;
    doc["points"] = json::array();
    for (const Complex& z : points) doc["points"].push_back(complex_to_json(z));
    doc["metadata"] = {{"family", family}, {"r", r}, {"seed", seed}};
    write_output(out, doc);
    return 0;
}

int cmd_solve(const std::string& in, const std::string& out, double tol, int max_iter, bool no_transform,
              std::uint64_t seed) {
    const std::vector<Complex> points = points_from_json(load_json(in), in);

    SolveOptions opts;
    opts.residual_tol = tol;
    opts.max_iterations = max_iter;
    opts.transform_enabled = !no_transform;
    opts.rng_seed = seed;
    const PipelineResult pr = run_pipeline(points, opts);

    json doc;
    doc["n"] = points.size();
    doc["a"] = json::array();
    for (const Complex& c : pr.product.a) doc["a"].push_back(complex_to_json(c));
    doc["zeros"] = json::array();
    for (const Complex& z : roots(numerator(pr.product))) doc["zeros"].push_back(complex_to_json(z));
    doc["computed_critical_points"] = json::array();
    for (const Complex& z : pr.verification.computed_points)
        doc["computed_critical_points"].push_back(complex_to_json(z));
    doc["transformed"] = pr.transformed;
    doc["z_star"] = complex_to_json(pr.z_star);

    json rep = report_to_json(pr.verification);
    rep["iterations"] = pr.solve.iterations;
    rep["residual"] = pr.solve.final_residual_norm;
    rep["status"] = status_name(pr.solve.status);
    rep["boundary_root_warning"] = pr.solve.boundary_root_warning;
    doc["report"] = rep;
    write_output(out, doc);

    return pr.solve.status == SolveStatus::converged ? 0 : 2;
}

int cmd_verify(const std::string& coeffs_path, const std::string& points_path, const std::string& out) {
    const std::vector<Complex> a = coeffs_from_json(load_json(coeffs_path), coeffs_path);
    const std::vector<Complex> points = points_from_json(load_json(points_path), points_path);
    if (a.size() != points.size())
        throw std::runtime_error("coefficient count " + std::to_string(a.size()) +
                                 " does not match point count " + std::to_string(points.size()));

    // No solve happened here, so the accuracy rule reduces to the error clause.
    SolveResult stub;
    stub.a = a;
    stub.status = SolveStatus::converged;
    const BlaschkeProduct B{a};
    const VerificationReport rep = report(points, B, stub);

    json doc;
    doc["n"] = a.size();
    doc["report"] = report_to_json(rep);
    doc["report"]["error_below_threshold"] = rep.max_error < 0.5e-4;
    doc["computed_critical_points"] = json::array();
    for (const Complex& z : rep.computed_points) doc["computed_critical_points"].push_back(complex_to_json(z));
    write_output(out, doc);
    return 0;
}

int cmd_bench(const std::string& suite, int N, const std::string& family, int n, double r,
              bool no_transform, std::uint64_t seed, const std::string& out_prefix,
              const std::string& format, double tol, int max_iter) {
    const std::vector<BenchConfig> configs =
        suite_configs(suite, family_from_name(family), n, r, !no_transform);

    const std::string csv_path = out_prefix + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error(csv_path + ": cannot open file for writing");
    csv << "instance,n,family,transformed,iterations,cpu_seconds,max_error,max_abs_derivative,"
           "classification,solved\n";
    csv.flush();

    json summary;
    summary["suite"] = suite;
    summary["N"] = N;
    summary["seed"] = seed;
    summary["configs"] = json::array();

    std::vector<BenchRow> rows;
    for (const BenchConfig& config : configs) {
        std::vector<double> iters, secs, errs;
        int solved = 0;
        for (int i = 0; i < N; ++i) {
            InstanceSpec spec{config.family, config.n, config.r, seed + std::uint64_t(i)};
            const std::vector<Complex> pts = generate(spec);

            SolveOptions opts;
            opts.residual_tol = tol;
            opts.max_iterations = max_iter;
            opts.transform_enabled = config.transformed;
            opts.rng_seed = spec.seed;

            const auto t0 = std::chrono::steady_clock::now();
            const PipelineResult pr = run_pipeline(pts, opts);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            BenchRow row;
            row.instance = config_label(config, i);
            row.config = config;
            row.iterations = pr.solve.iterations;
            row.cpu_seconds = dt;
            row.max_error = pr.verification.max_error;
            row.max_abs_derivative = pr.verification.max_abs_derivative;
            row.classification = classification_name(pr.verification.classification);
            row.solved = pr.verification.accurately_solved;
            rows.push_back(row);

            char numbuf[64];
            csv << row.instance << ',' << config.n << ',' << family_name(config.family) << ','
                << (config.transformed ? 1 : 0) << ',' << row.iterations << ',';
            std::snprintf(numbuf, sizeof numbuf, "%.6f", row.cpu_seconds);
            csv << numbuf << ',';
            std::snprintf(numbuf, sizeof numbuf, "%.17g", row.max_error);
            csv << numbuf << ',';
            std::snprintf(numbuf, sizeof numbuf, "%.17g", row.max_abs_derivative);
            csv << numbuf << ',' << row.classification << ',' << (row.solved ? 1 : 0) << '\n';
            csv.flush();  // partial results survive an interrupt

            iters.push_back(double(pr.solve.iterations));
            secs.push_back(dt);
            errs.push_back(pr.verification.max_error);
            if (pr.verification.accurately_solved) ++solved;
        }

        json cfg;
        cfg["family"] = family_name(config.family);
        cfg["n"] = config.n;
        if (config.family != Family::cluster) cfg["r"] = config.r;
        cfg["transformed"] = config.transformed;
        cfg["N"] = N;
        cfg["iterations"] = triplet(iters);
        cfg["cpu_seconds"] = triplet(secs);
        cfg["max_error"] = triplet(errs);
        cfg["percent_solved"] = 100.0 * solved / N;
        summary["configs"].push_back(cfg);
    }

    const std::string json_path = out_prefix + ".json";
    std::ofstream js(json_path);
    if (!js) throw std::runtime_error(json_path + ": cannot open file for writing");
    js << summary.dump(2) << "\n";

    if (format == "json") std::cout << summary.dump(2) << "\n";
    else if (format == "csv") {
        for (const BenchRow& row : rows) std::cout << row.instance << "\n";
    }
    std::cerr << "wrote " << csv_path << " and " << json_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction of finite Blaschke products from prescribed critical points"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance file");
    std::string gen_family = "disk", gen_out = "-";
    int gen_n = 10;
    double gen_r = 0.99;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "disk | cluster | circle")->capture_default_str();
    gen->add_option("--n", gen_n, "number of critical points")->required();
    gen->add_option("--r", gen_r, "disk/circle radius")->capture_default_str();
    gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output file or - for stdout")->capture_default_str();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    std::string solve_in, solve_out = "-";
    double solve_tol = 1e-12;
    int solve_max_iter = 5000;
    bool solve_no_transform = false;
    std::uint64_t solve_seed = 0;
    solve_cmd->add_option("--in", solve_in, "instance JSON file")->required();
    solve_cmd->add_option("--out", solve_out, "solution file or - for stdout")->capture_default_str();
    solve_cmd->add_option("--tol", solve_tol, "residual tolerance")->capture_default_str();
    solve_cmd->add_option("--max-iter", solve_max_iter, "iteration budget")->capture_default_str();
    solve_cmd->add_flag("--no-transform", solve_no_transform, "skip the mean-centering transformation");
    solve_cmd->add_option("--seed", solve_seed, "seed for the centering perturbation")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify coefficients against prescribed points");
    std::string verify_coeffs, verify_points, verify_out = "-";
    verify_cmd->add_option("--coeffs", verify_coeffs, "coefficient JSON file {n, a}")->required();
    verify_cmd->add_option("--points", verify_points, "instance JSON file")->required();
    verify_cmd->add_option("--out", verify_out, "report file or - for stdout")->capture_default_str();

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    std::string bench_suite, bench_family = "disk", bench_out = "bench", bench_format = "json";
    int bench_N = 50, bench_n = 10, bench_max_iter = 5000;
    double bench_r = 0.99, bench_tol = 1e-12;
    bool bench_no_transform = false;
    std::uint64_t bench_seed = 0;
    bench->add_option("--suite", bench_suite, "test1 | test2 | test3 | test4 | custom")->required();
    bench->add_option("--N", bench_N, "instances per configuration")->capture_default_str();
    bench->add_option("--family", bench_family, "custom suite family")->capture_default_str();
    bench->add_option("--n", bench_n, "custom suite point count")->capture_default_str();
    bench->add_option("--r", bench_r, "custom suite radius")->capture_default_str();
    bench->add_flag("--no-transform", bench_no_transform, "custom suite: solve untransformed");
    bench->add_option("--seed", bench_seed, "base seed; instance i uses seed + i")->capture_default_str();
    bench->add_option("--out", bench_out, "output prefix for .csv and .json")->capture_default_str();
    bench->add_option("--format", bench_format, "stdout summary: json | csv")->capture_default_str();
    bench->add_option("--tol", bench_tol, "residual tolerance")->capture_default_str();
    bench->add_option("--max-iter", bench_max_iter, "iteration budget")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_r, gen_seed, gen_out);
        if (solve_cmd->parsed())
            return cmd_solve(solve_in, solve_out, solve_tol, solve_max_iter, solve_no_transform, solve_seed);
        if (verify_cmd->parsed()) return cmd_verify(verify_coeffs, verify_points, verify_out);
        if (bench->parsed())
            return cmd_bench(bench_suite, bench_N, bench_family, bench_n, bench_r, bench_no_transform,
                             bench_seed, bench_out, bench_format, bench_tol, bench_max_iter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
