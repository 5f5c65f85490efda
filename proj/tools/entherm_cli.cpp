#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entherm/analytic.hpp"
#include "entherm/canonical.hpp"
#include "entherm/eigensolver.hpp"
#include "entherm/hamiltonian.hpp"
#include "entherm/io.hpp"
#include "entherm/svg.hpp"
#include "entherm/thermo.hpp"

namespace {

using namespace entherm;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CliOverrides {
    std::string config_path;
    std::string geometry;  // chain|square|triangular or a JSON file path
    int na = 0;
    double jb_over_ja = 0.0;
    double lambda_max = 0.0;
    double dlambda = 0.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CliOverrides* o) {
    cmd->add_option("--config", o->config_path, "JSON run configuration");
    cmd->add_option("--geometry", o->geometry,
                    "chain, square, triangular, or a cluster JSON file");
    cmd->add_option("--na", o->na, "sites per layer");
    cmd->add_option("--jb-over-ja", o->jb_over_ja, "coupling ratio J_B/J_A");
    cmd->add_option("--lambda-max", o->lambda_max, "sweep end in units of J_A");
    cmd->add_option("--dlambda", o->dlambda, "sweep grid spacing");
    cmd->add_option("--seed", o->seed, "solver start-vector seed")
        ->each([o](const std::string&) { o->seed_set = true; });
    cmd->add_option("--out", o->out_dir, "output directory");
}

RunConfig resolve_config(const CliOverrides& o) {
    RunConfig c;
    if (!o.config_path.empty()) c = load_run_config(o.config_path);
    if (!o.geometry.empty()) {
        if (o.geometry == "chain" || o.geometry == "square" ||
            o.geometry == "triangular") {
            c.geometry = ClusterSpec{};
            c.geometry.kind = cluster_kind_from_string(o.geometry);
            c.geometry.n_sites = o.na > 0 ? o.na : 8;
        } else {
            c.geometry = load_cluster_spec(o.geometry);
        }
    }
    if (o.na > 0) c.geometry.n_sites = o.na;
    if (o.jb_over_ja > 0) c.jb_over_ja = o.jb_over_ja;
    if (o.lambda_max > 0) c.lambda_max = o.lambda_max;
    if (o.dlambda > 0) c.dlambda = o.dlambda;
    if (o.seed_set) c.seed = o.seed;
    if (!o.out_dir.empty()) c.out_dir = o.out_dir;
    validate(c);
    std::filesystem::create_directories(c.out_dir);
    return c;
}

std::string out_path(const RunConfig& c, const std::string& name) {
    return (std::filesystem::path(c.out_dir) / name).string();
}

struct SweepData {
    std::vector<SweepPoint> points;
    std::vector<SweepRecord> records;
    DenseSpectrum spectrum_a;
    BondList cluster;
    int failures = 0;
};

SweepData run_sweep(const RunConfig& c) {
    SweepData d;
    d.cluster = build_cluster(c.geometry);
    SweepOptions opt;
    opt.tol = c.tol;
    opt.max_iter = c.max_iter;
    opt.seed = c.seed;
    const auto grid = uniform_lambda_grid(0.0, c.lambda_max, c.dlambda);
    d.points = lambda_sweep(d.cluster, c.j_a, c.j_b(), grid, opt);

    HeisenbergOperator h_a(weighted_bonds(d.cluster, c.j_a),
                           d.cluster.n_sites);
    d.spectrum_a = full_spectrum(h_a.build_dense());
    d.records =
        compare_sweep(d.points, d.spectrum_a, c.dlambda, d.cluster.n_sites);
    for (const auto& pt : d.points)
        if (pt.failed) ++d.failures;
    return d;
}

// Degenerate ground states leave the reduced density matrix ill-defined;
// without --force those rows keep the flag but drop the entanglement columns.
bool mask_entanglement(const SweepPoint& pt, bool force) {
    return pt.degenerate && !force;
}

int cmd_sweep(const RunConfig& c, bool force) {
    const SweepData d = run_sweep(c);
    const int n_a = d.cluster.n_sites;

    CsvTable table;
    table.header = {"lambda",   "s_a",  "s_a_per_site",
                    "e_a",      "e_a_per_site",
                    "e_b",      "b_a",  "t_a",
                    "fidelity_per_site", "rel_entropy", "degenerate_flag"};
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const SweepPoint& pt = d.points[i];
        const SweepRecord& rec = d.records[i];
        std::vector<std::string> row;
        row.push_back(format_double(pt.lambda));
        if (pt.failed) {
            for (int k = 0; k < 9; ++k) row.push_back("nan");
            row.push_back("error");
        } else if (mask_entanglement(pt, force)) {
            for (int k = 0; k < 9; ++k) row.push_back("nan");
            row.push_back("1");
        } else {
            row.push_back(format_double(pt.s_a));
            row.push_back(format_double(pt.s_a / n_a));
            row.push_back(format_double(pt.e_a));
            row.push_back(format_double(pt.e_a / n_a));
            row.push_back(format_double(pt.e_b));
            row.push_back(format_double(rec.b_a));
            row.push_back(format_double(rec.t_a));
            row.push_back(format_double(rec.fidelity_per_site));
            row.push_back(format_double(rec.rel_entropy_red_can));
            row.push_back(pt.degenerate ? "1" : "0");
        }
        table.rows.push_back(std::move(row));
    }
    write_csv(out_path(c, "sweep.csv"), table);
    write_metadata(out_path(c, "sweep.json"), c, "sweep");
    if (d.failures) {
        std::cerr << d.failures << " of " << d.points.size()
                  << " sweep points failed\n";
        return 2;
    }
    return 0;
}

int cmd_canonical(const RunConfig& c) {
    const BondList cluster = build_cluster(c.geometry);
    HeisenbergOperator h_a(weighted_bonds(cluster, c.j_a), cluster.n_sites);
    const DenseSpectrum spectrum = full_spectrum(h_a.build_dense());
    const auto betas =
        default_beta_grid(c.j_a, c.t_min, c.t_max, c.beta_points);
    const CanonicalCurve curve = canonical_curve(spectrum, betas);

    CsvTable table;
    table.header = {"beta", "t", "s", "s_per_site", "e", "e_per_site",
                    "log_z"};
    for (std::size_t k = 0; k < curve.betas.size(); ++k) {
        table.rows.push_back({
            format_double(curve.betas[k]),
            format_double(1.0 / (curve.betas[k] * c.j_a)),
            format_double(curve.entropies[k]),
            format_double(curve.entropies[k] / cluster.n_sites),
            format_double(curve.energies[k]),
            format_double(curve.energies[k] / cluster.n_sites),
            format_double(curve.log_z[k]),
        });
    }
    write_csv(out_path(c, "canonical.csv"), table);
    write_metadata(out_path(c, "canonical.json"), c, "canonical");
    return 0;
}

int cmd_compare(const RunConfig& c, bool force) {
    const SweepData d = run_sweep(c);

    std::vector<double> lambdas, s, e_b;
    for (const auto& pt : d.points) {
        lambdas.push_back(pt.lambda);
        s.push_back(pt.failed ? kNaN : pt.s_a);
        e_b.push_back(pt.failed ? kNaN : pt.e_b);
    }
    const auto b_b = subsystem_b_beta(lambdas, s, e_b, c.dlambda);

    CsvTable table;
    table.header = {"lambda", "b_a", "t_a", "b_b", "t_b",
                    "s_a", "s_can", "e_a", "e_can", "e_b",
                    "fidelity_per_site", "rel_entropy_red_can",
                    "rel_entropy_can_red", "schmidt_tv", "degenerate_flag"};
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const SweepPoint& pt = d.points[i];
        const SweepRecord& rec = d.records[i];
        std::vector<std::string> row;
        row.push_back(format_double(pt.lambda));
        if (pt.failed || mask_entanglement(pt, force)) {
            for (int k = 0; k < 13; ++k) row.push_back("nan");
            row.push_back(pt.failed ? "error" : "1");
        } else {
            row.push_back(format_double(rec.b_a));
            row.push_back(format_double(rec.t_a));
            row.push_back(format_double(b_b[i]));
            row.push_back(format_double(
                std::isfinite(b_b[i]) && b_b[i] > 0 ? 1.0 / b_b[i] : kNaN));
            row.push_back(format_double(pt.s_a));
            row.push_back(format_double(rec.s_can));
            row.push_back(format_double(pt.e_a));
            row.push_back(format_double(rec.e_can));
            row.push_back(format_double(pt.e_b));
            row.push_back(format_double(rec.fidelity_per_site));
            row.push_back(format_double(rec.rel_entropy_red_can));
            row.push_back(format_double(rec.rel_entropy_can_red));
            row.push_back(format_double(rec.schmidt_tv));
            row.push_back(pt.degenerate ? "1" : "0");
        }
        table.rows.push_back(std::move(row));
    }
    write_csv(out_path(c, "compare.csv"), table);
    write_metadata(out_path(c, "compare.json"), c, "compare");
    return d.failures ? 2 : 0;
}

int cmd_correlations(const RunConfig& c) {
    const SweepData d = run_sweep(c);
    CsvTable table;
    if (c.geometry.kind == ClusterKind::chain) {
        const CorrelationTable corr = correlation_difference_chain(
            d.points, d.spectrum_a, c.dlambda, d.cluster.n_sites);
        table.header = {"lambda", "t_a", "distance", "c_red", "c_can",
                        "delta_c"};
        for (std::size_t r = 0; r < corr.lambdas.size(); ++r)
            for (std::size_t k = 0; k < corr.distances.size(); ++k)
                table.rows.push_back({
                    format_double(corr.lambdas[r]),
                    format_double(corr.t_a[r]),
                    std::to_string(corr.distances[k]),
                    format_double(corr.c_red[r][k]),
                    format_double(corr.c_can[r][k]),
                    format_double(corr.delta_c[r][k]),
                });
    } else {
        const PairCorrelationTable corr = correlation_difference_pairs(
            d.points, d.spectrum_a, c.dlambda, d.cluster.n_sites);
        table.header = {"lambda", "i", "j", "delta_c"};
        for (std::size_t r = 0; r < corr.lambdas.size(); ++r)
            for (std::size_t k = 0; k < corr.pairs.size(); ++k)
                table.rows.push_back({
                    format_double(corr.lambdas[r]),
                    std::to_string(corr.pairs[k].i),
                    std::to_string(corr.pairs[k].j),
                    format_double(corr.delta_c[r][k]),
                });
    }
    write_csv(out_path(c, "correlations.csv"), table);
    write_metadata(out_path(c, "correlations.json"), c, "correlations");
    return d.failures ? 2 : 0;
}

int cmd_analytic(const RunConfig& c, const std::string& kind, double mode_a,
                 double mode_b, double theta_max, int points) {
    CsvTable table;
    table.header = {"theta", "lambda", "beta_star", "t_star", "s", "e"};
    const bool boson = kind == "boson";

    double window;
    if (boson)
        window = std::atanh(std::sqrt(std::min(mode_b / mode_a,
                                               mode_a / mode_b)));
    else
        window = std::atan(std::sqrt(std::min(mode_b / mode_a,
                                              mode_a / mode_b)));
    // The boson window edge itself is unstable; stay strictly inside.
    double lim = boson ? std::min(theta_max, 0.999 * window)
                       : std::min(theta_max, window);

    for (int k = 0; k < points; ++k) {
        const double theta = lim * k / (points - 1);
        double lambda, s, e, beta, t;
        if (boson) {
            const BosonModel m = boson_from_theta(theta, mode_a, mode_b);
            const BosonObservables o = boson_observables(m);
            lambda = m.lambda;
            s = o.s_a;
            e = o.e_a;
            beta = o.beta_star;
            t = o.t_star;
        } else {
            const FermionModel m = fermion_from_theta(theta, mode_a, mode_b);
            const FermionObservables o = fermion_observables(m);
            lambda = m.lambda;
            s = o.s_a;
            e = o.e_a;
            beta = o.beta_star;
            t = o.t_star;
        }
        table.rows.push_back({
            format_double(theta), format_double(lambda), format_double(beta),
            format_double(t), format_double(s), format_double(e),
        });
    }
    write_csv(out_path(c, "analytic_" + kind + ".csv"), table);
    return 0;
}

std::map<std::string, std::vector<double>> columns(const CsvTable& table) {
    std::map<std::string, std::vector<double>> cols;
    for (std::size_t k = 0; k < table.header.size(); ++k) {
        auto& col = cols[table.header[k]];
        for (const auto& row : table.rows) {
            try {
                col.push_back(parse_double(row[k]));
            } catch (const std::exception&) {
                col.push_back(kNaN);
            }
        }
    }
    return cols;
}

int cmd_plot(const RunConfig& c, const std::string& sweep_path,
             const std::string& canonical_path) {
    std::map<std::string, std::vector<double>> sw, can;
    if (!sweep_path.empty()) sw = columns(read_csv(sweep_path));
    if (!canonical_path.empty()) can = columns(read_csv(canonical_path));

    auto overlay = [&](const std::string& file, const std::string& title,
                       const std::string& sweep_y, const std::string& can_y,
                       const std::string& y_label) {
        PlotSpec spec;
        spec.title = title;
        spec.x_label = "T / J_A";
        spec.y_label = y_label;
        spec.log_x = true;
        if (can.count("t") && can.count(can_y)) {
            PlotSeries line;
            line.x = can.at("t");
            line.y = can.at(can_y);
            line.label = "canonical";
            line.color = "#444444";
            spec.series.push_back(std::move(line));
        }
        if (sw.count("t_a") && sw.count(sweep_y)) {
            PlotSeries pts;
            pts.x = sw.at("t_a");
            pts.y = sw.at(sweep_y);
            pts.label = "reduced";
            pts.color = "#c03020";
            pts.line = false;
            pts.markers = true;
            spec.series.push_back(std::move(pts));
        }
        write_plot(out_path(c, file), spec);
    };
    overlay("entropy.svg", "Entropy per site", "s_a_per_site", "s_per_site",
            "S / N_A");
    overlay("energy.svg", "Energy per site", "e_a_per_site", "e_per_site",
            "E / (J_A N_A)");

    auto vs_lambda = [&](const std::string& file, const std::string& title,
                         const std::string& y, const std::string& y_label) {
        if (!sw.count("lambda") || !sw.count(y)) return;
        PlotSpec spec;
        spec.title = title;
        spec.x_label = "lambda / J_A";
        spec.y_label = y_label;
        PlotSeries pts;
        pts.x = sw.at("lambda");
        pts.y = sw.at(y);
        pts.color = "#1f6fb4";
        pts.markers = true;
        spec.series.push_back(std::move(pts));
        write_plot(out_path(c, file), spec);
    };
    vs_lambda("temperature.svg", "Effective temperature", "t_a", "T_A / J_A");
    vs_lambda("fidelity.svg", "Fidelity per site", "fidelity_per_site",
              "F^{1/N_A}");
    vs_lambda("rel_entropy.svg", "Relative entropy", "rel_entropy",
              "D(red|can)");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Ground-state entanglement thermodynamics of coupled spin layers"};
    app.require_subcommand(1);

    CliOverrides o;
    bool force = false;

    auto* sweep = app.add_subcommand(
        "sweep", "Lambda sweep: entropy, energies, effective temperature");
    add_common_flags(sweep, &o);
    sweep->add_flag("--force", force,
                    "emit entanglement columns even for degenerate points");

    auto* canonical = app.add_subcommand(
        "canonical", "Canonical thermodynamics of the isolated layer");
    add_common_flags(canonical, &o);

    auto* compare = app.add_subcommand(
        "compare", "Reduced vs canonical state at the effective temperature");
    add_common_flags(compare, &o);
    compare->add_flag("--force", force,
                      "emit entanglement columns even for degenerate points");

    auto* correlations = app.add_subcommand(
        "correlations", "Spin correlation differences, reduced vs canonical");
    add_common_flags(correlations, &o);

    auto* analytic = app.add_subcommand(
        "analytic", "Closed-form coupled-mode tables over a theta grid");
    add_common_flags(analytic, &o);
    std::string kind = "boson";
    double mode_a = 1.0, mode_b = 1.0, theta_max = 1.5;
    int points = 200;
    analytic->add_option("--kind", kind, "boson or fermion")
        ->check(CLI::IsMember({"boson", "fermion"}));
    analytic->add_option("--mode-a", mode_a, "subsystem A mode energy");
    analytic->add_option("--mode-b", mode_b, "subsystem B mode energy");
    analytic->add_option("--theta-max", theta_max, "grid end (clipped)");
    analytic->add_option("--points", points, "grid size");

    auto* plot = app.add_subcommand("plot", "Render SVG figures from CSVs");
    add_common_flags(plot, &o);
    std::string sweep_csv, canonical_csv;
    plot->add_option("--sweep", sweep_csv, "sweep.csv path");
    plot->add_option("--canonical", canonical_csv, "canonical.csv path");

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig c = resolve_config(o);
        if (sweep->parsed()) return cmd_sweep(c, force);
        if (canonical->parsed()) return cmd_canonical(c);
        if (compare->parsed()) return cmd_compare(c, force);
        if (correlations->parsed()) return cmd_correlations(c);
        if (analytic->parsed())
            return cmd_analytic(c, kind, mode_a, mode_b, theta_max, points);
        if (plot->parsed()) return cmd_plot(c, sweep_csv, canonical_csv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
