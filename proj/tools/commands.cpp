#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>

#include "io.hpp"
#include "qeffects/evolution.hpp"
#include "qeffects/oracles.hpp"

namespace qeffects::cli {

namespace {

using io::Json;

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Parse ? kParseFailure : kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

Json eigen_json(const RealVector& v) {
    Json arr = Json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

Effect load_effect(const std::string& path) {
    return validate_effect(io::operator_from_json(io::load_json(path)));
}

Json validate_effect_doc(const ComplexMatrix& m) {
    Json report;
    report["kind"] = "effect";
    report["dim"] = m.rows();
    report["hermiticity_residual"] = hermiticity_residual(m);
    try {
        const Effect e = validate_effect(m);
        report["valid"] = true;
        report["eigenvalues"] = eigen_json(e.reported_eigenvalues());
        report["min_eigenvalue"] = std::clamp(e.min_eigenvalue(), 0.0, 1.0);
        report["max_eigenvalue"] = std::clamp(e.max_eigenvalue(), 0.0, 1.0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        report["valid"] = false;
        report["error"] = std::string(to_string(e.kind()));
        if (e.kind() != ErrorKind::NonHermitian && e.kind() != ErrorKind::NonSquare &&
            e.kind() != ErrorKind::NonFinite) {
            const auto s = eigh(HermitianOperator(m));
            report["eigenvalues"] = eigen_json(s.eigenvalues);
            report["min_eigenvalue"] = s.eigenvalues(0);
            report["max_eigenvalue"] = s.eigenvalues(s.eigenvalues.size() - 1);
        }
        if (e.kind() == ErrorKind::SpectrumOutOfRange) report["offending_eigenvalue"] = e.value();
    }
    return report;
}

Json validate_state_doc(const ComplexMatrix& m) {
    Json report;
    report["kind"] = "state";
    report["dim"] = m.rows();
    report["hermiticity_residual"] = hermiticity_residual(m);
    try {
        const State s = validate_state(m);
        report["valid"] = true;
        report["eigenvalues"] = eigen_json(s.eigenvalues());
        report["trace"] = s.matrix().trace().real();
    } catch (const Error& e) {
        report["valid"] = false;
        report["error"] = std::string(to_string(e.kind()));
        if (!std::isnan(e.value())) report["value"] = e.value();
    }
    return report;
}

Json validate_observable_doc(const Json& doc) {
    Json report;
    report["kind"] = "observable";
    try {
        const Observable obs = io::observable_from_json(doc);
        report["valid"] = true;
        report["dim"] = obs.dim();
        report["outcomes"] = obs.outcomes();
        Json spectra = Json::array();
        for (const auto& e : obs.effects()) spectra.push_back(eigen_json(e.reported_eigenvalues()));
        report["eigenvalues"] = std::move(spectra);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        report["valid"] = false;
        report["error"] = std::string(to_string(e.kind()));
        report["message"] = e.what();
        if (!std::isnan(e.value())) report["value"] = e.value();
    }
    return report;
}

std::vector<double> uniform_grid(double t0, double t1, int steps) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(steps) + 1);
    ts.push_back(t0);
    for (int k = 1; k <= steps; ++k) {
        ts.push_back(k == steps ? t1 : t0 + (t1 - t0) * k / steps);
    }
    return ts;
}

Json observable_report(const Observable& obs, const std::optional<State>& rho) {
    Json report;
    report["observable"] = io::observable_to_json(obs);
    if (rho) report["distribution"] = io::distribution_to_json(distribution(obs, *rho));
    return report;
}

void require_files(const ObservableOptions& opts, std::size_t n) {
    if (opts.files.size() != n) {
        throw Error(ErrorKind::InvalidConfig, "'" + opts.subcommand + "' takes " + std::to_string(n) +
                                                  " observable file(s), got " +
                                                  std::to_string(opts.files.size()));
    }
}

// --- examples -------------------------------------------------------------

struct ExampleCheck {
    std::string name;
    std::string target;
    double residual = 0.0;
};

double max_entry_diff(const ComplexMatrix& x, const ComplexMatrix& y) { return max_abs_entry(x - y); }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> ts;
    for (int i = 0; i < n; ++i) ts.push_back(lo + (hi - lo) * i / (n - 1));
    return ts;
}

std::vector<ExampleCheck> run_example_checks() {
    constexpr double kPi = std::numbers::pi;
    const auto grid = linspace(0.0, 4.0 * kPi, 64);
    std::vector<ExampleCheck> checks;

    {
        const Effect a = validate_effect(oracles::example1_a());
        const Effect b = validate_effect(oracles::example1_b());
        const auto [lo, hi] = oracles::example1_derivative_eigs();
        double evo = 0.0;
        double eig = 0.0;
        for (double t : grid) {
            evo = std::max(evo, max_entry_diff(effect_evolution(b, a, t).matrix(),
                                               oracles::example1_evolution(t)));
            const auto d = eigh(evolution_derivative(b, a, t, 1)).eigenvalues;
            eig = std::max({eig, std::abs(d(0) - lo), std::abs(d(1) - hi)});
        }
        checks.push_back({"example1 b(t|a) = (1/2)[[1, e^{-it/2}], [e^{it/2}, 1]]", "closed form", evo});
        checks.push_back({"example1 eigenvalues of i[b(t|a), a]", "+-1/4", eig});
    }

    {
        double dev = 0.0;
        double peak = 0.0;
        double eig = 0.0;
        double closed = 0.0;
        const std::vector<std::complex<double>> offdiag{{0.1, 0.0}, {0.25, 0.25}, {0.0, -0.4}};
        for (double lambda : {0.3, 0.7, 1.0}) {
            for (auto b12 : offdiag) {
                const oracles::QubitExampleParams params{lambda, 0.5, 0.5, b12};
                const Effect a = validate_effect(oracles::example2_a(params));
                const Effect b = oracles::example2_b(params);
                const Effect p = validate_effect(oracles::example2_a({1.0, 0.5, 0.5, b12}));
                for (double t : grid) {
                    dev = std::max(dev, std::abs(deviation_norm(b, a, t) -
                                                 oracles::example2_deviation(params, t)));
                    const auto d = eigh(evolution_derivative(b, a, t, 1)).eigenvalues;
                    const auto [lo, hi] = oracles::example2_derivative_eigs(params);
                    eig = std::max({eig, std::abs(d(0) - lo), std::abs(d(1) - hi)});
                    closed = std::max(closed,
                                      max_entry_diff(projection_evolution_closed_form(b, lambda, p, t).matrix(),
                                                     effect_evolution(b, a, t).matrix()));
                }
                peak = std::max(peak, std::abs(deviation_norm(b, a, kPi / lambda) - 2.0 * std::abs(b12)));
            }
        }
        checks.push_back({"example2 ||b(t|a) - b||", "sqrt(2(1 - cos lambda t)) |b12|", dev});
        checks.push_back({"example2 maximum deviation at t = pi/lambda", "2 |b12|", peak});
        checks.push_back({"example2 eigenvalues of d/dt b(t|a)", "+-lambda |b12|", eig});
        checks.push_back({"example2 closed-form projection evolution", "matches e^{-ita} b e^{ita}", closed});
    }

    {
        double worst = 0.0;
        explorer::Rng rng = explorer::trial_rng(2024, 0);
        for (Index dim : {2, 3}) {
            for (int trial = 0; trial < 4; ++trial) {
                const Effect u = explorer::random_effect(dim, rng);
                const Effect b = explorer::random_effect(dim, rng);
                const Effect p = validate_effect(u.spectrum().cluster_projection(u.spectrum().clusters.size() - 1));
                const double lambda = 0.25 + 0.5 * trial / 3.0;
                const Effect a = validate_effect(ComplexMatrix(lambda * p.matrix()));
                for (double t : grid) {
                    worst = std::max(worst, max_entry_diff(time_seq_product(a, b, t).matrix(),
                                                           oracles::example3_constant_product(lambda, p, b, t).matrix()));
                }
            }
        }
        checks.push_back({"example3 (lambda p)[t]b", "lambda pbp = a o b", worst});
    }
    return checks;
}

}  // namespace

int cmd_validate(const std::string& file, DocumentKind kind, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Json doc = io::load_json(file);
        if (kind == DocumentKind::Auto) {
            kind = io::is_observable_document(doc) ? DocumentKind::Observable : DocumentKind::Effect;
        }
        Json report;
        switch (kind) {
            case DocumentKind::Observable: report = validate_observable_doc(doc); break;
            case DocumentKind::State: report = validate_state_doc(io::operator_from_json(doc)); break;
            default: report = validate_effect_doc(io::operator_from_json(doc)); break;
        }
        out << io::format_json(report);
        return report["valid"].get<bool>() ? kOk : kInvalidInput;
    });
}

int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.steps < 0) throw Error(ErrorKind::InvalidConfig, "--steps must be nonnegative");
        const Effect a = load_effect(opts.a_file);
        const Effect b = load_effect(opts.b_file);
        require_same_dim(a.dim(), b.dim(), "evolve");

        const Effect start = opts.mode == EvolveMode::Evolution ? b : sequential_product(a, b);
        std::vector<io::TrajectoryRow> rows;
        for (double t : uniform_grid(opts.t0, opts.t1, opts.steps)) {
            const bool evolution = opts.mode == EvolveMode::Evolution;
            const Effect op = evolution ? effect_evolution(b, a, t) : time_seq_product(a, b, t);
            const HermitianOperator rate =
                evolution ? evolution_derivative(b, a, t, 1) : seq_product_derivative(a, b, t);
            rows.push_back({t, op.matrix(),
                            operator_norm(HermitianOperator(op.matrix() - start.matrix())),
                            operator_norm(rate)});
        }
        io::write_trajectory_csv(out, rows);
        return kOk;
    });
}

int cmd_classify(const std::string& a_file, const std::string& b_file, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Effect a = load_effect(a_file);
        const Effect b = load_effect(b_file);
        const ConstancyReport report = constancy_classifier(a, b, global.tol);

        Json doc;
        doc["constant"] = report.constant;
        doc["reason"] = to_string(report.reason);
        doc["residual"] = report.residual;
        if (report.scaled_projection) {
            doc["lambda"] = report.scaled_projection->lambda;
            doc["projection"] = io::operator_to_json(report.scaled_projection->projection.matrix());
        }
        out << io::format_json(doc);
        return kOk;
    });
}

int cmd_observable(const ObservableOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<Observable> obs;
        for (const auto& f : opts.files) obs.push_back(io::observable_from_json(io::load_json(f)));
        std::optional<State> rho;
        if (opts.state_file) rho = validate_state(io::operator_from_json(io::load_json(*opts.state_file)));

        const std::string& sub = opts.subcommand;
        if (sub == "dist") {
            require_files(opts, 1);
            if (!rho) throw Error(ErrorKind::InvalidConfig, "'dist' requires --state");
            out << io::format_json(io::distribution_to_json(distribution(obs[0], *rho)));
            return kOk;
        }

        std::optional<Observable> result;
        if (sub == "seqprod") {
            require_files(opts, 2);
            result = obs_seq_product(obs[0], obs[1]);
        } else if (sub == "cond") {
            require_files(opts, 2);
            result = conditioned_observable(obs[0], obs[1]);
        } else if (sub == "evolve") {
            require_files(opts, 1);
            if (!opts.effect_file) throw Error(ErrorKind::InvalidConfig, "'evolve' requires --effect");
            result = obs_evolution(obs[0], load_effect(*opts.effect_file), opts.t);
        } else if (sub == "tseq") {
            require_files(opts, 2);
            result = obs_time_seq_product(obs[0], obs[1], opts.t);
        } else if (sub == "tcond") {
            require_files(opts, 2);
            result = time_conditional_observable(obs[0], obs[1], opts.t);
        } else if (sub == "convex") {
            result = convex_combination(opts.weights, obs);
        } else {
            throw Error(ErrorKind::InvalidConfig, "unknown observable subcommand '" + sub + "'");
        }
        out << io::format_json(observable_report(*result, rho));
        return kOk;
    });
}

int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        bool all = true;
        for (const auto& check : run_example_checks()) {
            const bool pass = check.residual <= opts.tolerance;
            all = all && pass;
            out << (pass ? "PASS " : "FAIL ") << check.name << " [target: " << check.target
                << "] max_residual=" << io::format_double(check.residual) << '\n';
        }
        return all ? kOk : kCheckFailed;
    });
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const explorer::ScanReport report = explorer::conjecture_scan(opts.config);

        std::ofstream json(opts.json_out, std::ios::binary);
        std::ofstream csv(opts.csv_out, std::ios::binary);
        if (!json || !csv) throw Error(ErrorKind::InvalidConfig, "cannot open scan output files");
        json << io::format_json(io::scan_to_json(report));
        io::write_scan_csv(csv, report);

        err << "scan: " << report.summary.recorded << " records, " << report.summary.skipped
            << " skipped, " << report.summary.candidates << " below "
            << explorer::kCandidateThreshold << '\n';
        out << opts.json_out << '\n' << opts.csv_out << '\n';
        return kOk;
    });
}

}  // namespace qeffects::cli
