#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "chronocalc/acceptance.hpp"
#include "chronocalc/evolution.hpp"
#include "chronocalc/json_io.hpp"
#include "chronocalc/kernels.hpp"
#include "chronocalc/ordered.hpp"
#include "chronocalc/pathsum.hpp"
#include "chronocalc/random.hpp"
#include "chronocalc/report.hpp"
#include "chronocalc/semigroup.hpp"

namespace cc = chronocalc;
using cc::Complex;
using cc::ComplexMatrix;
using Json = nlohmann::json;

namespace {

int thread_cap() {
    const char* env = std::getenv("CHRONOCALC_THREADS");
    if (!env) return 1;  // bit-exact CI default
    const int v = std::atoi(env);
    return v > 0 ? v : 1;
}

struct SweepPoint {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> metrics;  // name -> value
    double runtime_ms = 0.0;
};

struct RunOutcome {
    std::vector<SweepPoint> points;
    std::vector<std::pair<std::string, double>> summary;  // e.g. fitted slope
};

double timed_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void require(bool cond, const std::string& field, const std::string& msg) {
    if (!cond) throw std::invalid_argument("config: " + field + " " + msg);
}

// Executes one sweep point of a named experiment; pure in (config, value).
SweepPoint run_point(const Json& cfg, const std::string& op, double value) {
    SweepPoint pt;
    pt.value = value;
    const Json params = cfg.value("params", Json::object());

    if (op == "trotter") {
        const ComplexMatrix a = cc::matrix_from_json(cfg.at("matrix_a"));
        const ComplexMatrix b = cc::matrix_from_json(cfg.at("matrix_b"));
        const double t = params.value("t", 1.0);
        const ComplexMatrix target = cc::expm(Complex(t) * (a + b));
        ComplexMatrix u;
        pt.runtime_ms = timed_ms([&] { u = cc::trotter(a, b, t, std::size_t(value)); });
        pt.metrics.emplace_back("error", cc::operator_norm(u - target));
    } else if (op == "gtk") {
        const cc::GeneratorFamily fa = cc::family_from_json(cfg.at("family_a"));
        const cc::GeneratorFamily fb = cc::family_from_json(cfg.at("family_b"));
        const double t = params.value("t", 1.0);
        const bool exact_sched = params.value("exact_schedule", false);
        const ComplexMatrix ref =
            cc::propagate_richardson(cc::sum_family(fa, fb), t, params.value("ref_n", 8192));
        ComplexMatrix u;
        pt.runtime_ms = timed_ms(
            [&] { u = cc::generalized_trotter_kato(fa, fb, t, std::size_t(value), exact_sched); });
        pt.metrics.emplace_back("error", cc::operator_norm(u - ref));
    } else if (op == "propagate") {
        const cc::GeneratorFamily f = cc::family_from_json(cfg.at("family"));
        const double t = params.value("t", f.b);
        const ComplexMatrix ref = cc::propagate_richardson(f, t, params.value("ref_n", 8192));
        ComplexMatrix u;
        pt.runtime_ms = timed_ms([&] { u = cc::propagate(f, t, std::size_t(value)); });
        pt.metrics.emplace_back("error", cc::operator_norm(u - ref));
    } else if (op == "dyson") {
        const cc::GeneratorFamily f = cc::family_from_json(cfg.at("family"));
        const double t = params.value("t", f.b);
        const double w = params.value("w", 1.0);
        const std::size_t nodes = params.value("quad_nodes", 16);
        const cc::GeneratorFamily fw = cc::scaled_family(f, Complex(w));
        const ComplexMatrix ref = cc::propagate_richardson(fw, t, params.value("ref_n", 8192));
        cc::DysonResult d;
        pt.runtime_ms = timed_ms([&] { d = cc::dyson_expand(f, t, int(value), w, nodes); });
        pt.metrics.emplace_back("error",
                                cc::operator_norm(d.partial_sum + d.remainder - ref));
        pt.metrics.emplace_back("reported_estimate", d.quad_error);
    } else if (op == "mild") {
        const cc::GeneratorFamily f = cc::family_from_json(cfg.at("family"));
        const double t = params.value("t", f.b);
        const double rate = params.value("rate", 0.8);
        const double u0re = params.value("u0", 0.3);
        auto rhs = [rate](double, const cc::Vector& u) {
            cc::Vector out(u.dim());
            for (std::size_t i = 0; i < u.dim(); ++i) out[i] = rate * u[i] * (1.0 - u[i]);
            return out;
        };
        const cc::Vector u0(std::vector<Complex>(f.dim, Complex(u0re)));
        cc::Vector sol;
        pt.runtime_ms = timed_ms([&] {
            sol = cc::semilinear_mild(f, rhs, u0, t, std::size_t(value),
                                      params.value("max_picard", 200),
                                      params.value("picard_tol", 1e-11));
        });
        // reference at doubled resolution
        const cc::Vector ref = cc::semilinear_mild(f, rhs, u0, t, 2 * std::size_t(value),
                                                   params.value("max_picard", 200),
                                                   params.value("picard_tol", 1e-11));
        pt.metrics.emplace_back("error", (sol - ref).norm());
    } else if (op == "expansional") {
        const ComplexMatrix a = cc::matrix_from_json(cfg.at("matrix_a"));
        const ComplexMatrix b = cc::matrix_from_json(cfg.at("matrix_b"));
        const int order = params.value("order", 1);
        const std::size_t nodes = params.value("quad_nodes", 32);
        const ComplexMatrix target = cc::expm(a + Complex(value) * b);
        cc::ExpansionalResult e;
        pt.runtime_ms = timed_ms(
            [&] { e = cc::expansional_expand(a, Complex(value) * b, order, nodes); });
        pt.metrics.emplace_back("error", cc::operator_norm(target - e.value));
    } else if (op == "yosida") {
        const ComplexMatrix a = cc::matrix_from_json(cfg.at("matrix_a"));
        std::mt19937_64 rng(cfg.value("seed", 1));
        const cc::Vector x = cc::random_unit_vector(a.dim(), rng);
        ComplexMatrix al;
        pt.runtime_ms = timed_ms([&] { al = cc::yosida(a, value); });
        pt.metrics.emplace_back("error", (al * x - a * x).norm());
    } else {
        throw std::invalid_argument("config: op '" + op + "' is not a sweep experiment");
    }
    return pt;
}

int cmd_run(const std::string& config_path, bool timing) {
    Json cfg;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config " << config_path << "\n";
            return 1;
        }
        try {
            cfg = Json::parse(in);
        } catch (const Json::parse_error& e) {
            std::cerr << "error: config parse failure: " << e.what() << "\n";
            return 1;
        }
    }

    try {
        require(cfg.contains("name"), "name", "is required");
        require(cfg.contains("op"), "op", "is required");
        const std::string name = cfg.at("name").get<std::string>();
        const std::string op = cfg.at("op").get<std::string>();
        const std::string out_csv = cfg.value("output_csv", name + ".csv");

        // lambda sweeps carry their own CSV schema
        if (op == "pathsum_lambda") {
            const cc::GeneratorFamily f = cc::family_from_json(cfg.at("family"));
            const Json params = cfg.value("params", Json::object());
            const double t = params.value("t", f.b);
            require(cfg.contains("sweep"), "sweep", "is required");
            const auto lambdas = cfg.at("sweep").at("values").get<std::vector<double>>();
            require(!lambdas.empty(), "sweep.values", "nonempty");
            const ComplexMatrix ref = cc::propagate_richardson(f, t, params.value("ref_n", 4096));
            // renormalized sum: the floor(lambda t) truncation strands ~half
            // the Poisson mass, which would mask convergence in lambda
            const auto sweep = cc::experimental_evolution_sweep(f, t, lambdas, 1e-10, 2000, true);
            cc::CsvWriter csv(out_csv,
                              {"lambda", "terms_used", "deficit", "error_vs_reference",
                               "runtime_ms"},
                              cfg.value("append", false));
            for (const auto& s : sweep)
                csv.write_row({cc::format_double(s.lambda), std::to_string(s.terms_used),
                               cc::format_double(s.poisson_deficit),
                               cc::format_double(cc::operator_norm(s.value - ref)),
                               timing ? "1" : "0"});
            std::cout << "wrote " << out_csv << "\n";
            return 0;
        }
        if (op == "kernel_table") {
            const Json params = cfg.value("params", Json::object());
            const std::string kname = params.value("kernel", "heat");
            const double t = params.value("t", 1.0);
            cc::KernelFunction k;
            if (kname == "heat") k = cc::heat_kernel(params.value("kappa", 1.0));
            else if (kname == "schrodinger_free")
                k = cc::schrodinger_free_kernel(params.value("m", 1.0), params.value("hbar", 1.0));
            else if (kname == "mehler")
                k = cc::mehler_kernel(params.value("m", 1.0), params.value("omega", 1.0),
                                      params.value("hbar", 1.0));
            else
                throw std::invalid_argument("config: unknown kernel '" + kname + "'");
            const cc::Grid1D grid =
                cc::Grid1D::make(params.value("extent", 4.0), params.value("points", 65));
            cc::CsvWriter csv(out_csv, {"x", "y", "t", "re", "im"}, cfg.value("append", false));
            for (double x : grid.points)
                for (double y : grid.points) {
                    const Complex v = k.eval(x, t, y, 0.0);
                    csv.write_row({cc::format_double(x), cc::format_double(y),
                                   cc::format_double(t), cc::format_double(v.real()),
                                   cc::format_double(v.imag())});
                }
            std::cout << "wrote " << out_csv << "\n";
            return 0;
        }

        require(cfg.contains("sweep"), "sweep", "is required");
        require(cfg.at("sweep").contains("values"), "sweep.values", "is required");
        const auto values = cfg.at("sweep").at("values").get<std::vector<double>>();
        require(!values.empty(), "sweep.values", "nonempty");
        for (double v : values) require(std::isfinite(v), "sweep.values", "must be finite");

        // sweep points are independent; rows are buffered and written in order
        std::vector<SweepPoint> points(values.size());
        const int threads = std::min<int>(thread_cap(), int(values.size()));
        if (threads <= 1) {
            for (std::size_t i = 0; i < values.size(); ++i) points[i] = run_point(cfg, op, values[i]);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < values.size(); i = next++)
                        points[i] = run_point(cfg, op, values[i]);
                });
            for (auto& th : pool) th.join();
        }

        cc::CsvWriter csv(out_csv, {"experiment", "sweep", "metric", "value", "runtime_ms"},
                          cfg.value("append", false));
        for (const auto& pt : points)
            for (const auto& [metric, val] : pt.metrics)
                csv.write_row({name, cc::format_double(pt.value), metric, cc::format_double(val),
                               timing ? cc::format_double(pt.runtime_ms) : "0"});

        // fitted log-log slope over the primary metric
        int exit_code = 0;
        if (values.size() >= 2) {
            std::vector<double> xs, ys;
            for (const auto& pt : points)
                if (!pt.metrics.empty() && pt.metrics.front().second > 0.0 && pt.value > 0.0) {
                    xs.push_back(pt.value);
                    ys.push_back(pt.metrics.front().second);
                }
            if (xs.size() >= 2) {
                const double slope = cc::loglog_slope(xs, ys);
                csv.write_row({name, "-", "loglog_slope", cc::format_double(slope), "0"});
                if (cfg.contains("tolerance")) {
                    const double target = cfg.at("tolerance").value("target", 0.0);
                    const double within = cfg.at("tolerance").value("within", 0.1);
                    if (std::abs(slope - target) > within) {
                        std::cerr << "tolerance failure: slope " << slope << " not within "
                                  << within << " of " << target << "\n";
                        exit_code = 2;
                    }
                }
            }
        }
        std::cout << "wrote " << out_csv << "\n";
        return exit_code;
    } catch (const Json::exception& e) {
        std::cerr << "error: config field failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_suite(const std::string& name, const std::string& csv_path, double inject_tolerance,
              bool timing) {
    std::vector<int> ids;
    try {
        ids = cc::acceptance::suite_criteria(name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    Json summary;
    summary["suite"] = name;
    summary["criteria"] = Json::array();
    bool all_pass = true;

    std::unique_ptr<cc::CsvWriter> csv;
    if (!csv_path.empty())
        csv = std::make_unique<cc::CsvWriter>(
            csv_path, std::vector<std::string>{"criterion", "name", "value", "tolerance", "pass",
                                               "runtime_ms"});

    for (int id : ids) {
        cc::acceptance::CriterionResult r = cc::acceptance::run_criterion(id);
        if (inject_tolerance >= 0.0) {
            r.tolerance = inject_tolerance;
            r.pass = r.value <= r.tolerance;
        }
        all_pass = all_pass && r.pass;
        Json jc;
        jc["id"] = r.id;
        jc["name"] = r.name;
        jc["pass"] = r.pass;
        jc["value"] = r.value;
        jc["tolerance"] = r.tolerance;
        if (!r.detail.empty()) jc["detail"] = r.detail;
        summary["criteria"].push_back(jc);
        if (csv)
            csv->write_row({std::to_string(r.id), r.name, cc::format_double(r.value),
                            cc::format_double(r.tolerance), r.pass ? "1" : "0",
                            timing ? cc::format_double(r.runtime_ms) : "0"});
    }
    summary["pass"] = all_pass;
    std::cout << summary.dump(2) << "\n";
    return all_pass ? 0 : 2;
}

int cmd_plot(const std::string& csv_path, const std::string& kind, const std::string& out_path,
             std::size_t xcol, std::size_t ycol) {
    try {
        const cc::CsvTable table = cc::read_csv(csv_path);
        if (table.rows.empty()) {
            std::cerr << "error: empty CSV " << csv_path << "\n";
            return 1;
        }
        std::string svg;
        if (kind == "heatmap") {
            // expects the kernel-table schema (x,y,t,re,im): shade |K|
            const auto xs = table.column_as_double(0);
            const auto re = table.column_as_double(3);
            const auto im = table.column_as_double(4);
            std::size_t n = 1;
            while (n < xs.size() && xs[n] == xs[0]) ++n;
            const std::size_t rows = xs.size() / n;
            std::vector<double> mag(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) mag[i] = std::hypot(re[i], im[i]);
            svg = cc::svg_heatmap(mag, n, rows, csv_path);
        } else {
            const auto xs = table.column_as_double(xcol);
            const auto ys = table.column_as_double(ycol);
            svg = kind == "loglog" ? cc::svg_loglog(xs, ys, csv_path)
                                   : cc::svg_line(xs, ys, csv_path);
        }
        std::ofstream out(out_path);
        out << svg;
        std::cout << "wrote " << out_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chronocalc: time-ordered evolution and path-sum experiments"};
    app.require_subcommand(1);

    std::string config_path;
    bool timing = false;
    auto* run = app.add_subcommand("run", "execute an experiment config (JSON)");
    run->add_option("config", config_path, "experiment config path")->required();
    run->add_flag("--timing", timing, "emit real runtimes (breaks byte-determinism)");

    std::string suite_name, suite_csv;
    double inject_tolerance = -1.0;
    auto* suite = app.add_subcommand("suite", "run an acceptance bundle");
    suite->add_option("name", suite_name, "gauge|dyson|trotter|pathsum|kernels|all")->required();
    suite->add_option("--csv", suite_csv, "write per-criterion CSV rows");
    suite->add_option("--inject-tolerance", inject_tolerance,
                      "override all tolerances (failure-path testing)");
    suite->add_flag("--timing", timing, "emit real runtimes (breaks byte-determinism)");

    std::string plot_csv, plot_kind = "line", plot_out = "plot.svg";
    std::size_t xcol = 1, ycol = 3;
    auto* plot = app.add_subcommand("plot", "render a CSV as a deterministic SVG");
    plot->add_option("csv", plot_csv, "input CSV path")->required();
    plot->add_option("--kind", plot_kind, "loglog|line|heatmap")
        ->check(CLI::IsMember({"loglog", "line", "heatmap"}));
    plot->add_option("--out", plot_out, "output SVG path");
    plot->add_option("--xcol", xcol, "x column index (default: sweep column)");
    plot->add_option("--ycol", ycol, "y column index (default: value column)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(config_path, timing);
    if (suite->parsed()) return cmd_suite(suite_name, suite_csv, inject_tolerance, timing);
    if (plot->parsed()) return cmd_plot(plot_csv, plot_kind, plot_out, xcol, ycol);
    return 1;
}
