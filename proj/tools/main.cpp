// affine2d command-line front end: trajectory runs, spectrum tables, action /
// frequency / resonance tables, wavefunction sampling and the chart
// consistency checks, with CSV/JSON emission.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affine2d/actions.hpp"
#include "affine2d/charts.hpp"
#include "affine2d/dynamics.hpp"
#include "affine2d/group_metrics.hpp"
#include "affine2d/models.hpp"
#include "affine2d/quantum.hpp"
#include "affine2d/random.hpp"
#include "affine2d/sturm.hpp"

#include "config.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace affine2d;
using tools::RunConfig;

constexpr int kExitDomain = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitCheckFailed = 5;

// 17 significant digits: round-trip exact for doubles.
std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write_csv(std::ostream& out) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }

    void write_json(std::ostream& out) const
    {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size() && i < row.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        out << arr.dump(2) << "\n";
    }

    void write(const std::string& path, const std::string& format) const
    {
        std::ostringstream buf;
        if (format == "json")
            write_json(buf);
        else
            write_csv(buf);
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            if (!f)
                throw domain_error("cannot open output file '" + path + "'");
            f << buf.str();
        }
    }
};

RunConfig make_config(const std::string& config_path,
                      const std::vector<std::string>& overrides)
{
    RunConfig cfg;
    if (!config_path.empty())
        cfg = tools::load_config(config_path);
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw domain_error("override '" + kv + "' is not key=value");
        tools::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
}

// ---------------------------------------------------------------------------

int cmd_decompose(const std::vector<double>& entries, bool reflection)
{
    ConfigurationMatrix m{entries[0], entries[1], entries[2], entries[3]};
    TwoPolarCoords tp = two_polar_decompose(m, {reflection});
    std::cout << "phi=" << num(tp.phi) << " psi=" << num(tp.psi) << " d1=" << num(tp.d1)
              << " d2=" << num(tp.d2) << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& cfg, const std::string& summary_path)
{
    const PotentialModel model = cfg.model();
    const PhaseState s0 = cfg.initial_state();
    Trajectory traj = integrate(model, s0, cfg.time_step(), static_cast<int>(cfg.steps),
                                cfg.integrator());

    auto fns = constants_of_motion_functions(model, s0.point.chart);
    Table table;
    table.header = {"t", "q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4", "H"};
    for (auto& [name, fn] : fns)
        if (name != "H")
            table.header.push_back(name);
    for (const auto& ts : traj.states) {
        std::vector<std::string> row;
        row.push_back(num(ts.t));
        for (int i = 0; i < 4; ++i)
            row.push_back(num(ts.state.point[i]));
        for (int i = 0; i < 4; ++i)
            row.push_back(num(ts.state.p[i]));
        row.push_back(num(hamiltonian(model, ts.state)));
        for (auto& [name, fn] : fns)
            if (name != "H")
                row.push_back(num(fn(ts.state)));
        table.rows.push_back(std::move(row));
    }
    table.write(cfg.output_path, cfg.output_format);

    DriftReport report = invariant_drift(traj);
    json summary;
    summary["model"] = cfg.model_kind;
    summary["chart"] = cfg.chart;
    summary["scheme"] = cfg.scheme;
    summary["dt"] = cfg.time_step();
    summary["steps_requested"] = cfg.steps;
    summary["steps_completed"] = traj.states.size() - 1;
    summary["truncated"] = traj.truncated;
    if (traj.truncated)
        summary["termination_reason"] = traj.termination_reason;
    json drifts = json::array();
    for (const auto& e : report.entries) {
        json d;
        d["name"] = e.name;
        d["initial"] = e.initial;
        d["max_abs_deviation"] = e.max_abs_deviation;
        d["relative_drift"] = e.relative_drift;
        drifts.push_back(d);
    }
    summary["drifts"] = drifts;
    if (summary_path.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::ofstream f(summary_path);
        f << summary.dump(2) << "\n";
    }
    return traj.truncated ? kExitTruncated : 0;
}

// Oracle energies per (n_a, n_b) assembled from slice solves.
struct OracleTable {
    std::vector<double> alpha_levels, beta_levels;  // alpha-beta models
    std::vector<std::vector<double>> polar_levels;  // [n_theta][n_r]
};

OracleTable solve_oracle(const PotentialModel& model, int m, int l, int k, int grid_n,
                         AngularConvention conv)
{
    OracleTable t;
    if (model.kind == PotentialKind::anharmonicRTheta) {
        // under halfIntegerPair the same physics is expressed through the
        // relabeled pair (m/2, l/2); the assembled equation is identical
        SLProblem theta = (conv == AngularConvention::integerPair)
                              ? build_problem(SLEquation::thetaAngular, model, HalfInt(m),
                                              HalfInt(l))
                              : build_problem(SLEquation::thetaAngular, model,
                                              HalfInt::from_twice(m), HalfInt::from_twice(l),
                                              conv);
        theta.grid_n = grid_n;
        EigenResult eth = lowest_eigenvalues(theta, k);
        for (int nt = 0; nt < k; ++nt) {
            SLProblem rr = build_problem(SLEquation::rRadial, model, HalfInt(m), HalfInt(l),
                                         AngularConvention::integerPair,
                                         eth.eigenvalues[static_cast<std::size_t>(nt)]);
            rr.grid_n = grid_n;
            t.polar_levels.push_back(lowest_eigenvalues(rr, k).eigenvalues);
        }
        return t;
    }
    SLProblem pa = build_problem(SLEquation::alphaRadial, model, HalfInt(m), HalfInt(l));
    pa.grid_n = grid_n;
    t.alpha_levels = lowest_eigenvalues(pa, k).eigenvalues;
    SLProblem pb = build_problem(SLEquation::betaRadial, model, HalfInt(m), HalfInt(l));
    pb.grid_n = grid_n;
    t.beta_levels = lowest_eigenvalues(pb, k).eigenvalues;
    return t;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& source)
{
    const PotentialModel model = cfg.model();
    const PhysicalParams& params = model.params;

    auto analytic_energy = [&](const QuantumNumbers& q) {
        switch (model.kind) {
        case PotentialKind::harmonic:            return energy_harmonic(q, params).energy;
        case PotentialKind::anharmonicAlphaBeta: return energy_anharmonic_ab(q, params).energy;
        case PotentialKind::anharmonicRTheta:    return energy_anharmonic_rtheta(q, params).energy;
        default:
            throw unsupported_error(std::string("no analytic spectrum for model ")
                                    + potential_kind_name(model.kind));
        }
    };

    Table table;
    if (source == "bs") {
        table.header = {"n", "m", "l", "E", "provenance"};
        for (int n = 0; n <= cfg.n_max; ++n)
            for (int m = -cfg.m_max; m <= cfg.m_max; ++m)
                for (int l = -cfg.l_max; l <= cfg.l_max; ++l)
                    table.rows.push_back({std::to_string(n), std::to_string(m),
                                          std::to_string(l),
                                          num(bs_spectrum(model, {n, m, l})), "bs"});
        table.write(cfg.output_path, cfg.output_format);
        return 0;
    }

    const bool want_oracle = (source == "oracle" || source == "compare");
    const bool want_analytic = (source == "analytic" || source == "compare");
    if (!want_oracle && !want_analytic)
        throw unsupported_error("spectrum source must be bs, analytic, oracle or compare");

    table.header = {"n_a", "n_b", "m", "l"};
    if (want_analytic)
        table.header.push_back("E_analytic");
    if (want_oracle)
        table.header.push_back("E_oracle");
    if (source == "compare")
        table.header.push_back("rel_error");

    for (int m = -cfg.m_max; m <= cfg.m_max; ++m)
        for (int l = -cfg.l_max; l <= cfg.l_max; ++l) {
            std::optional<OracleTable> oracle;
            if (want_oracle)
                oracle = solve_oracle(model, m, l, cfg.n_max + 1, cfg.grid_n,
                                      cfg.convention == "halfInteger"
                                          ? AngularConvention::halfIntegerPair
                                          : AngularConvention::integerPair);
            for (int na = 0; na <= cfg.n_max; ++na)
                for (int nb = 0; nb <= cfg.n_max; ++nb) {
                    QuantumNumbers q{na, nb, m, l};
                    std::vector<std::string> row{std::to_string(na), std::to_string(nb),
                                                 std::to_string(m), std::to_string(l)};
                    double ea = 0, eo = 0;
                    if (want_analytic) {
                        ea = analytic_energy(q);
                        row.push_back(num(ea));
                    }
                    if (want_oracle) {
                        // polar: n_a = n_r, n_b = n_theta
                        eo = (model.kind == PotentialKind::anharmonicRTheta)
                                 ? oracle->polar_levels[static_cast<std::size_t>(nb)]
                                                       [static_cast<std::size_t>(na)]
                                 : oracle->alpha_levels[static_cast<std::size_t>(na)]
                                       + oracle->beta_levels[static_cast<std::size_t>(nb)];
                        row.push_back(num(eo));
                    }
                    if (source == "compare")
                        row.push_back(num(std::abs(eo - ea) / std::max(std::abs(ea), 1e-300)));
                    table.rows.push_back(std::move(row));
                }
        }
    table.write(cfg.output_path, cfg.output_format);
    return 0;
}

int cmd_actions(const RunConfig& cfg, const std::vector<double>& point, bool have_point)
{
    const PotentialModel model = cfg.model();
    std::vector<ActionSet> sets;
    if (have_point) {
        sets.push_back({point[0], point[1], point[2], point[3]});
    } else {
        SplitMix64 rng(cfg.seed);
        for (long i = 0; i < cfg.samples; ++i)
            sets.push_back({rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0),
                            rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
    }

    Table table;
    table.header = {"j_a", "j_b", "j_phi", "j_psi", "E",
                    "nu_a", "nu_b", "nu_phi", "nu_psi",
                    "quad_rel_error", "resonances"};
    for (const ActionSet& a : sets) {
        const double e = energy_from_actions(model, a);
        const Frequencies f = frequencies(model, a);
        const SliceConstants sc = slice_constants(model, a);
        double quad_err = 0;
        auto upd = [&](double quad, double expect) {
            quad_err = std::max(quad_err,
                                std::abs(quad - expect) / std::max(1.0, std::abs(expect)));
        };
        if (model.kind == PotentialKind::anharmonicRTheta) {
            upd(action_integral(model, SliceKind::thetaSlice, sc.h_theta, a.j_phi, a.j_psi),
                a.j_b);
            upd(action_integral(model, SliceKind::rSlice, sc.e_total, a.j_phi, a.j_psi,
                                sc.h_theta),
                a.j_a);
        } else {
            upd(action_integral(model, SliceKind::alphaSlice, sc.e_alpha, a.j_phi, a.j_psi),
                a.j_a);
            upd(action_integral(model, SliceKind::betaSlice, sc.e_beta, a.j_phi, a.j_psi),
                a.j_b);
        }
        std::string res;
        for (const auto& name : resonance_check(model, a)) {
            if (!res.empty())
                res += "; ";
            res += name;
        }
        table.rows.push_back({num(a.j_a), num(a.j_b), num(a.j_phi), num(a.j_psi), num(e),
                              num(f.nu_a), num(f.nu_b), num(f.nu_phi), num(f.nu_psi),
                              num(quad_err), res});
    }
    table.write(cfg.output_path, cfg.output_format);
    return 0;
}

int cmd_wavefunction(const RunConfig& cfg, const std::string& variable, int n_a, int n_b,
                     int m, int l, long points, bool normalized)
{
    const PotentialModel model = cfg.model();
    WaveVariable var;
    if (variable == "alpha")
        var = WaveVariable::alpha;
    else if (variable == "beta")
        var = WaveVariable::beta;
    else if (variable == "r")
        var = WaveVariable::r;
    else if (variable == "theta")
        var = WaveVariable::theta;
    else
        throw unsupported_error("variable must be alpha, beta, r or theta");

    QuantumNumbers q{n_a, n_b, m, l};
    auto [lo, hi] = wavefunction_domain(q, model.params, model.kind, var);
    const double norm = normalized ? wavefunction_norm(q, model.params, model.kind, var) : 1.0;

    Table table;
    table.header = {"x", "value"};
    for (long i = 1; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points);
        table.rows.push_back({num(x), num(wavefunction(q, model.params, model.kind, var, x) / norm)});
    }
    table.write(cfg.output_path, cfg.output_format);
    return 0;
}

// --- chart-check -------------------------------------------------------------

struct CheckLine {
    std::string name;
    double max_dev = 0;
    double tolerance = 0;
    bool ok() const { return max_dev < tolerance; }
};

int cmd_chart_check(const RunConfig& cfg)
{
    SplitMix64 rng(cfg.seed);
    const long n = cfg.samples;
    std::vector<CheckLine> lines;

    // decompose/compose round trip on random GL+ matrices
    {
        CheckLine line{"two-polar round trip", 0, 1e-12};
        long done = 0;
        while (done < n) {
            ConfigurationMatrix m{rng.uniform(-2, 2), rng.uniform(-2, 2),
                                  rng.uniform(-2, 2), rng.uniform(-2, 2)};
            if (m.det() < 1e-8)
                continue;
            ++done;
            ConfigurationMatrix back = two_polar_compose(two_polar_decompose(m));
            const double scale = m.as_vector().cwiseAbs().maxCoeff();
            const double err = (back.as_vector() - m.as_vector()).cwiseAbs().maxCoeff();
            line.max_dev = std::max(line.max_dev, err / scale);
        }
        lines.push_back(line);
    }

    const Chart all_charts[] = {Chart::cartesian, Chart::twoPolar, Chart::alphaBeta,
                                Chart::polarRTheta, Chart::rhoEpsilon, Chart::exponentialAB,
                                Chart::elliptic};

    // cross-chart kinetic energy and analytic-Jacobian metric consistency
    {
        CheckLine kin{"cross-chart kinetic energy", 0, 1e-10};
        CheckLine push{"metric pushforward (finite-difference Jacobian)", 0, 1e-10};
        for (long s = 0; s < n; ++s) {
            const double d2 = rng.uniform(0.15, 1.2);
            const double d1 = d2 + rng.uniform(0.1, 1.5);
            ChartPoint tp{Chart::twoPolar,
                          {rng.uniform(0, 2 * M_PI), rng.uniform(0, 2 * M_PI), d1, d2}};
            Eigen::Vector4d v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                              rng.uniform(-1, 1)};
            const double t_ref = kinetic_energy(tp, v, 1.0);
            for (Chart c : all_charts) {
                ChartPoint q = transform(tp, c);
                Eigen::Vector4d vc = push_tangent(tp, v, c);
                const double t = kinetic_energy(q, vc, 1.0);
                kin.max_dev = std::max(kin.max_dev, std::abs(t - t_ref) / std::abs(t_ref));

                // FD Jacobian of the chart -> cartesian map: 4th-order central
                // stencil.  The step shrinks with small radial coordinates
                // (curvature of sqrt(r)-type maps) but never grows with the
                // periodic angles; error floor ~1e-12.
                Eigen::Matrix4d jfd;
                for (int j = 0; j < 4; ++j) {
                    const double h = 1e-3 * std::clamp(std::abs(q[j]), 0.1, 1.0);
                    auto at = [&](double shift) {
                        ChartPoint qq = q;
                        qq[j] += shift;
                        return to_configuration(qq).as_vector();
                    };
                    jfd.col(j) = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h))
                                 / (12 * h);
                }
                const double t_fd = 0.5 * (jfd * vc).squaredNorm();
                push.max_dev = std::max(push.max_dev, std::abs(t_fd - t) / std::abs(t_ref));
            }
        }
        lines.push_back(kin);
        lines.push_back(push);
    }

    // group metrics: generator-exponential route vs closed form, and the
    // complexified shear identity
    {
        CheckLine cartan{"invariant GL2 metric: exponential route vs closed form", 0, 1e-10};
        CheckLine breathing{"breathing-top metric: exponential route vs closed form", 0, 1e-10};
        CheckLine complexified{"complexified shear block imaginary residue", 0, 1e-12};
        CheckLine complexified_val{"complexified shear block vs sign-flipped angular", 0, 1e-12};
        const long n_group = std::min<long>(n, 100);
        for (long s = 0; s < n_group; ++s) {
            GroupMetricSpec spec{GroupMetricFamily::invariantGL2, rng.uniform(-0.5, 2.0)};
            GroupPoint p{rng.uniform(-1, 1), rng.uniform(0, 2 * M_PI), rng.uniform(-2, 2),
                         rng.uniform(0, 2 * M_PI)};
            Eigen::Vector4d v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                              rng.uniform(-1, 1)};
            const double closed = group_metric_closed_form(spec, p, v);
            const double cart = group_metric_cartan(spec, p, v);
            cartan.max_dev = std::max(cartan.max_dev,
                                      std::abs(cart - closed) / std::max(1.0, std::abs(closed)));

            GroupMetricSpec bspec{GroupMetricFamily::breathingTopSU2, spec.c};
            GroupPoint bp{p.a, p.Phi, rng.uniform(0.2, M_PI - 0.2), p.Psi};
            const double bclosed = group_metric_closed_form(bspec, bp, v);
            const double bcart = group_metric_cartan(bspec, bp, v);
            breathing.max_dev = std::max(breathing.max_dev, std::abs(bcart - bclosed)
                                                                / std::max(1.0, std::abs(bclosed)));

            const double theta = bp.x;
            const std::complex<double> cval =
                group_metric_gl2_complexified(spec, p.a, theta, v);
            complexified.max_dev = std::max(complexified.max_dev, std::abs(cval.imag()));
            const double ea = std::exp(p.a);
            const double expected = 0.25 * ea
                                    * ((1 + spec.c) * v[0] * v[0]
                                       - (v[2] * v[2] + v[1] * v[1]
                                          + 2 * std::cos(theta) * v[1] * v[3] + v[3] * v[3]));
            complexified_val.max_dev = std::max(complexified_val.max_dev,
                                                std::abs(cval.real() - expected));
        }
        lines.push_back(cartan);
        lines.push_back(breathing);
        lines.push_back(complexified);
        lines.push_back(complexified_val);
    }

    bool all_ok = true;
    std::string first_fail;
    for (const auto& line : lines) {
        std::cout << "chart-check: " << line.name << ": max deviation " << num(line.max_dev)
                  << " (tolerance " << num(line.tolerance) << ") "
                  << (line.ok() ? "[ok]" : "[FAIL]") << "\n";
        if (!line.ok() && all_ok) {
            all_ok = false;
            first_fail = line.name;
        }
    }
    if (!all_ok) {
        std::cerr << "chart-check failed: " << first_fail << "\n";
        return kExitCheckFailed;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"planar affine-body dynamics on GL(2,R): charts, trajectories, "
                 "action-angle tables and quantum spectra"};
    app.require_subcommand(1);

    std::string config_path, summary_path, source = "analytic", variable = "alpha";
    std::vector<std::string> overrides;
    std::vector<double> matrix_entries, action_point;
    bool reflection = false, normalized = false;
    int n_a = 0, n_b = 0, m_q = 0, l_q = 0;
    long points = 200;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "config file (key = value)");
        sub->add_option("--set", overrides,
                        "override a config key, e.g. --set model.mu=2.0");
        sub->add_option("--output", [&](const std::vector<std::string>& vals) {
            overrides.push_back("output.path=" + vals[0]);
            return true;
        }, "output path (default stdout)");
        sub->add_option("--format", [&](const std::vector<std::string>& vals) {
            overrides.push_back("output.format=" + vals[0]);
            return true;
        }, "csv or json");
        sub->add_option("--seed", [&](const std::vector<std::string>& vals) {
            overrides.push_back("seed=" + vals[0]);
            return true;
        }, "sampling seed");
        sub->add_option("--model", [&](const std::vector<std::string>& vals) {
            overrides.push_back("model.kind=" + vals[0]);
            return true;
        }, "potential kind");
        sub->add_option("--samples", [&](const std::vector<std::string>& vals) {
            overrides.push_back("samples=" + vals[0]);
            return true;
        }, "sample count");
    };

    CLI::App* c_dec = app.add_subcommand("decompose", "two-polar decomposition of a matrix");
    c_dec->add_option("entries", matrix_entries, "matrix entries x y z u")->expected(4);
    c_dec->add_flag("--reflection", reflection, "admit det < 0 configurations");

    CLI::App* c_sim = app.add_subcommand("simulate", "integrate a trajectory; CSV + drift summary");
    add_common(c_sim);
    c_sim->add_option("--summary", summary_path, "drift summary JSON path (default stdout)");

    CLI::App* c_spec = app.add_subcommand("spectrum", "quantum / semiclassical spectrum tables");
    add_common(c_spec);
    c_spec->add_option("--source", source, "bs | analytic | oracle | compare");

    CLI::App* c_act = app.add_subcommand("actions", "action quadrature, frequencies, resonances");
    add_common(c_act);
    c_act->add_option("--point", action_point, "explicit j_a j_b j_phi j_psi")->expected(4);

    CLI::App* c_wave = app.add_subcommand("wavefunction", "sample a separated wavefunction factor");
    add_common(c_wave);
    c_wave->add_option("--variable", variable, "alpha | beta | r | theta");
    c_wave->add_option("--n-a", n_a, "radial quantum number n_alpha / n_r");
    c_wave->add_option("--n-b", n_b, "radial quantum number n_beta / n_theta");
    c_wave->add_option("--m", m_q, "angular quantum number m");
    c_wave->add_option("--l", l_q, "angular quantum number l");
    c_wave->add_option("--points", points, "number of samples");
    c_wave->add_flag("--normalized", normalized, "divide by the slice-measure norm");

    CLI::App* c_chk = app.add_subcommand("chart-check", "chart / metric / group-metric consistency");
    add_common(c_chk);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_dec->parsed())
            return cmd_decompose(matrix_entries, reflection);
        RunConfig cfg = make_config(config_path, overrides);
        if (c_sim->parsed())
            return cmd_simulate(cfg, summary_path);
        if (c_spec->parsed())
            return cmd_spectrum(cfg, source);
        if (c_act->parsed())
            return cmd_actions(cfg, action_point, !action_point.empty());
        if (c_wave->parsed())
            return cmd_wavefunction(cfg, variable, n_a, n_b, m_q, l_q, points, normalized);
        if (c_chk->parsed())
            return cmd_chart_check(cfg);
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
