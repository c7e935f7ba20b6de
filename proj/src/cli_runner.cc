// Copyright 2026 The kicked-ising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kising/cli_runner.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <new>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "kising/entanglement_dynamics.h"
#include "kising/errors.h"
#include "kising/floquet_engine.h"
#include "kising/kicked_top.h"
#include "kising/oracle.h"

namespace kising {

using json = nlohmann::ordered_json;

namespace {

constexpr int kMaxDiagonalQubits = 100000000;
constexpr std::int64_t kMaxPeriodRows = 100000;
constexpr double kOracleTolerance = 1e-11;
constexpr double kParityTolerance = 1e-12;

const std::map<std::string, Command> kCommands = {
    {"entropy-series", Command::entropy_series}, {"period", Command::period},
    {"spectrum", Command::spectrum},             {"spacings", Command::spacings},
    {"ratios", Command::ratios},                 {"rbar", Command::rbar},
    {"eigenstate-ee", Command::eigenstate_ee},   {"qkt-map", Command::qkt_map},
    {"oracle-check", Command::oracle_check},
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string format_cell(const json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::string render(const Table &table, const json &summary, OutputFormat format) {
    if (format == OutputFormat::json) {
        json rows = json::array();
        for (const auto &row : table.rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                obj[table.columns[c]] = row[c];
            }
            rows.push_back(std::move(obj));
        }
        json doc = json::object();
        doc["summary"] = summary;
        doc["rows"] = std::move(rows);
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + format_cell(row[c]);
        }
        out += "\n";
    }
    return out;
}

json optional_int(const std::optional<std::int64_t> &v) {
    return v ? json(*v) : json(nullptr);
}

int single_n(const RunConfig &config) {
    return config.n_qubits.front();
}

CouplingSpec coupling_of(const RunConfig &config) {
    return parse_coupling(config.coupling);
}

json base_summary(const RunConfig &config) {
    json s = json::object();
    s["command"] = command_name(config.command);
    if (config.n_qubits.size() == 1) {
        s["n_qubits"] = config.n_qubits.front();
    } else {
        s["n_qubits"] = config.n_qubits;
    }
    s["coupling"] = coupling_of(config).to_string();
    s["tau_m"] = config.tau_m;
    return s;
}

PhaseSpectrum spectrum_of(const RunConfig &config) {
    return eigenphases(single_n(config), coupling_of(config), config.tau_m, config.sector);
}

std::string unfold_name(const UnfoldMethod &method) {
    return method.kind == UnfoldMethod::Kind::rank ? "rank" : "local:" + std::to_string(method.parameter);
}

void entropy_command(const RunConfig &config, Table &table, json &summary) {
    const EntropySeries series = entropy_series(CoherentParams::make(config.theta0, config.phi0), single_n(config),
                                                coupling_of(config), config.tau_m, config.kicks);
    table.columns = {"kick", "linear_entropy", "von_neumann_entropy"};
    for (std::size_t i = 0; i < series.kicks.size(); ++i) {
        table.rows.push_back({series.kicks[i], series.linear[i], series.von_neumann[i]});
    }
    summary["theta0"] = series.params.theta0;
    summary["phi0"] = series.params.phi0;
    summary["kicks"] = config.kicks;
    summary["detected_period"] =
        series.linear.size() >= 3 ? optional_int(detect_period(series.linear, 1e-10)) : json(nullptr);
    summary["max_linear_entropy"] = *std::max_element(series.linear.begin(), series.linear.end());
}

void period_command(const RunConfig &config, Table &table, json &summary) {
    const CouplingSpec j = coupling_of(config);
    if (!j.is_rational()) {
        throw ArgumentError("period needs a rational coupling r/h");
    }
    const int n = single_n(config);
    const Rational r = j.as_rational();
    const std::int64_t exact = predicted_period(n, r.num, r.den, config.tau_m, PeriodMode::exact);
    const std::int64_t projective = predicted_period(n, r.num, r.den, config.tau_m, PeriodMode::projective);
    const FloquetBlocks blocks = diagonal_blocks(n, j, config.tau_m);
    const std::int64_t rows = std::min(exact, kMaxPeriodRows);
    table.columns = {"kick", "deviation_plus", "deviation_minus"};
    std::optional<std::int64_t> measured;
    for (std::int64_t k = 1; k <= rows; ++k) {
        const double dp = deviation_from_identity(blocks, k, Parity::plus);
        const double dm = deviation_from_identity(blocks, k, Parity::minus);
        if (!measured && dp < 1e-9 && dm < 1e-9) {
            measured = k;
        }
        table.rows.push_back({k, dp, dm});
    }
    summary["predicted_period"] = exact;
    summary["projective_period"] = projective;
    summary["measured_period"] = optional_int(measured);
    summary["case_rule_period"] = config.tau_m == 1 ? json(case_rule_period(n, r.num, r.den)) : json(nullptr);
}

void spectrum_command(const RunConfig &config, Table &table, json &summary) {
    const PhaseSpectrum s = spectrum_of(config);
    table.columns = {"index", "phase", "multiplicity"};
    std::int64_t max_mult = 0;
    for (std::size_t i = 0; i < s.phases.size(); ++i) {
        table.rows.push_back({static_cast<std::int64_t>(i), s.phases[i], s.multiplicities[i]});
        max_mult = std::max(max_mult, s.multiplicities[i]);
    }
    summary["sector"] = sector_name(config.sector);
    summary["distinct"] = s.phases.size();
    summary["total"] = s.total_count();
    summary["max_multiplicity"] = max_mult;
    summary["nondegenerate"] = s.nondegenerate();
    summary["precision_bound"] = s.precision_bound;
}

void distribution_command(const RunConfig &config, Table &table, json &summary) {
    const PhaseSpectrum s = spectrum_of(config);
    const UnfoldedLevels levels = unfold(s, config.unfold);
    const SpacingSamples samples = config.command == Command::spacings ? kth_spacings(levels, config.order_k)
                                                                       : kth_ratios(levels, config.order_k);
    const Histogram h = histogram(samples, config.bins);
    table.columns = {"center", "empirical", "reference"};
    for (std::size_t i = 0; i < h.centers.size(); ++i) {
        table.rows.push_back({h.centers[i], h.empirical[i], h.reference[i]});
    }
    summary["sector"] = sector_name(config.sector);
    summary["unfold"] = unfold_name(config.unfold);
    summary["k"] = config.order_k;
    summary["levels"] = levels.size();
    summary["samples"] = samples.values.size();
    summary["filtered"] = samples.filtered;
    summary["ks_distance"] = ks_distance(samples, 1);
}

void rbar_command(const RunConfig &config, Table &table, json &summary) {
    const PhaseSpectrum s = spectrum_of(config);
    const UnfoldedLevels levels = unfold(s, config.unfold);
    const GapRatio r = mean_adjacent_ratio(levels, 3);
    table.columns = {"levels", "count", "filtered", "r_mean"};
    table.rows.push_back({levels.size(), r.count, r.filtered, r.mean});
    summary["sector"] = sector_name(config.sector);
    summary["unfold"] = unfold_name(config.unfold);
    summary["levels"] = levels.size();
    summary["count"] = r.count;
    summary["r_mean"] = r.mean;
}

void eigenstate_command(const RunConfig &config, Table &table, json &summary, std::ostream &warn) {
    const CouplingSpec j = coupling_of(config);
    const Perturbation perturb{config.perturb_param, config.perturb_delta};
    std::vector<ScalingPoint> points;
    bool degenerate = false;
    double residual = 0.0;
    for (int n : config.n_qubits) {
        const EigenstateEnsemble ensemble = floquet_eigenstates(n, j, config.tau_m, perturb);
        degenerate = degenerate || ensemble.degenerate;
        residual = std::max(residual, ensemble.max_residual);
        points.push_back(average_ee_ratio(ensemble));
    }
    if (degenerate) {
        warn << "warning: degenerate spectrum; the eigenstate average depends on the chosen basis\n";
    }
    table.columns = {"n_qubits", "n_a", "inv_smax", "ratio", "ratio_plus", "ratio_minus", "max_entropy"};
    for (const auto &p : points) {
        table.rows.push_back({p.n_qubits, p.n_a, p.inv_smax, p.ratio, p.ratio_plus, p.ratio_minus, p.max_entropy});
    }
    summary["perturb"] = perturb_name(config.perturb_param);
    summary["delta"] = config.perturb_delta;
    summary["degenerate"] = degenerate;
    summary["max_residual"] = residual;
    summary["ratios"] = json::array();
    for (const auto &p : points) {
        summary["ratios"].push_back(p.ratio);
    }
    if (points.size() >= 4) {
        const LineFit fit = fit_scaling(points);
        summary["slope"] = fit.slope;
        summary["intercept"] = fit.intercept;
    } else {
        summary["slope"] = nullptr;
        summary["intercept"] = nullptr;
    }
}

void qkt_command(const RunConfig &config, Table &table, json &summary) {
    const TopParams params = map_params(single_n(config), coupling_of(config), config.tau_m);
    // Bloch vector of cos(theta0/2)|0> + exp(-i phi0) sin(theta0/2)|1>.
    const CoherentParams angles = CoherentParams::make(config.theta0, config.phi0);
    const BlochPoint start{std::sin(angles.theta0) * std::cos(angles.phi0),
                           -std::sin(angles.theta0) * std::sin(angles.phi0), std::cos(angles.theta0)};
    const auto orbit = classical_orbit(start, params, config.kicks);
    table.columns = {"step", "x", "y", "z"};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        table.rows.push_back({static_cast<std::int64_t>(i), orbit[i].x, orbit[i].y, orbit[i].z});
    }
    summary["p"] = params.p;
    summary["k_prime"] = params.k_prime;
    summary["lle_analytic"] = lle_estimate(params);
    summary["kicks"] = config.kicks;
}

double max_abs(const Eigen::MatrixXcd &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool oracle_command(const RunConfig &config, Table &table, json &summary) {
    const int n = single_n(config);
    const CouplingSpec j = coupling_of(config);
    const KickInterval interval{config.tau_m, 0};
    const double tau = static_cast<double>(interval.radians());
    const double jd = j.to_double();
    const CoherentParams params = CoherentParams::make(config.theta0, config.phi0);

    const FloquetBlocks blocks = diagonal_blocks(n, j, config.tau_m);
    const ParityState evolved = evolve_parity(to_parity(coherent_dicke(params, n)), blocks, config.kicks);
    const SymmetricState analytic_state = from_parity(evolved);
    const oracle::FullState full = oracle::full_state_evolve(params, n, jd, tau, config.kicks);

    const Eigen::VectorXcd projected = oracle::project_symmetric(full);
    const double state_error = max_abs(analytic_state.coeffs() - projected);
    const SingleQubitRdm rdm_a = single_qubit_rdm(evolved);
    const SingleQubitRdm rdm_o = oracle::full_rdm_qubit(full);
    const double rdm_error = max_abs(rdm_a.matrix() - rdm_o.matrix());
    const double linear_error = std::fabs(linear_entropy(rdm_a) - linear_entropy(rdm_o));
    const double vn_error = std::fabs(von_neumann_entropy(rdm_a) - von_neumann_entropy(rdm_o));
    const double floquet_error =
        max_abs(dicke_floquet(n, j, interval.radians()) - oracle::projected_floquet(n, jd, tau));
    const double parity_error = oracle::parity_commutation_check(n, jd, tau);

    // Eigenphases: every analytic eigenvalue must appear in the projected oracle operator and vice versa.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(oracle::projected_floquet(n, jd, tau), false);
    std::vector<cplx> analytic;
    for (Parity s : {Parity::plus, Parity::minus}) {
        const Eigen::VectorXcd d = blocks.diagonal(s);
        analytic.insert(analytic.end(), d.data(), d.data() + d.size());
    }
    std::vector<cplx> reference(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    auto one_sided = [](const std::vector<cplx> &from, const std::vector<cplx> &to) {
        double worst = 0.0;
        for (cplx a : from) {
            double best = INFINITY;
            for (cplx b : to) {
                best = std::min(best, std::abs(a - b));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    const double phase_error = std::max(one_sided(analytic, reference), one_sided(reference, analytic));

    struct Check {
        const char *name;
        double error;
        double tolerance;
    };
    const std::vector<Check> checks = {
        {"state", state_error, kOracleTolerance},
        {"rdm", rdm_error, kOracleTolerance},
        {"linear_entropy", linear_error, kOracleTolerance},
        {"von_neumann_entropy", vn_error, kOracleTolerance},
        {"floquet_matrix", floquet_error, kOracleTolerance},
        {"eigenvalues", phase_error, kOracleTolerance},
        {"parity_commutation", parity_error, kParityTolerance},
    };
    table.columns = {"check", "error", "tolerance", "pass"};
    bool all = true;
    json errors = json::object();
    for (const auto &c : checks) {
        const bool pass = c.error < c.tolerance;
        all = all && pass;
        table.rows.push_back({c.name, c.error, c.tolerance, pass});
        errors[c.name] = c.error;
    }
    summary["theta0"] = params.theta0;
    summary["phi0"] = params.phi0;
    summary["kicks"] = config.kicks;
    summary["errors"] = std::move(errors);
    summary["all_pass"] = all;
    return all;
}

int parse_int(const std::string &text, const char *what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception &) {
        throw ParseError(std::string("invalid ") + what + " '" + text + "'", 0);
    }
    if (used != text.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + text + "'", used);
    }
    if (v < INT32_MIN || v > INT32_MAX) {
        throw ArgumentError(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

std::vector<int> parse_sizes(const std::string &text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_int(item, "qubit count"));
    }
    if (out.empty()) {
        throw ArgumentError("empty qubit count");
    }
    return out;
}

UnfoldMethod parse_unfold(const std::string &text) {
    if (text == "rank") {
        return UnfoldMethod::rank();
    }
    if (text.rfind("local:", 0) == 0) {
        return UnfoldMethod::local_mean(parse_int(text.substr(6), "local-mean window"));
    }
    throw ArgumentError("unfold must be 'rank' or 'local:W'");
}

}  // namespace

const char *command_name(Command command) {
    for (const auto &[name, value] : kCommands) {
        if (value == command) {
            return name.c_str();
        }
    }
    return "?";
}

bool parse_run_config(int argc, const char *const *argv, RunConfig &config, std::ostream &help) {
    CLI::App app{"Kicked infinite-range Ising chain at tau = m pi/2"};
    std::string command;
    std::string sizes;
    std::string perturb = "tau";
    std::string sector = "plus";
    std::string unfold_text = "rank";
    std::string format = "csv";
    app.add_option("--command", command, "entropy-series|period|spectrum|spacings|ratios|rbar|eigenstate-ee|qkt-map|oracle-check")
        ->required();
    app.add_option("--n", sizes, "number of qubits (eigenstate-ee: comma-separated list)");
    app.add_option("--coupling", config.coupling, "J as r/h, [a*]sqrt(b)[/c] or a decimal");
    app.add_option("--tau-m", config.tau_m, "tau = m pi/2");
    app.add_option("--theta0", config.theta0, "initial polar angle");
    app.add_option("--phi0", config.phi0, "initial azimuthal angle");
    app.add_option("--kicks", config.kicks, "number of kicks");
    app.add_option("--k", config.order_k, "spacing or ratio order, 1..8");
    app.add_option("--bins", config.bins, "histogram bins");
    app.add_option("--perturb", perturb, "J|tau");
    app.add_option("--delta", config.perturb_delta, "perturbation size");
    app.add_option("--sector", sector, "plus|minus|pooled");
    app.add_option("--unfold", unfold_text, "rank|local:W");
    app.add_option("--out", config.out_path, "artifact path");
    app.add_option("--format", format, "csv|json");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        help << app.help();
        return false;
    } catch (const CLI::ParseError &e) {
        throw ArgumentError(e.what());
    }
    const auto it = kCommands.find(command);
    if (it == kCommands.end()) {
        throw ArgumentError("unknown command '" + command + "'");
    }
    config.command = it->second;
    if (!sizes.empty()) {
        config.n_qubits = parse_sizes(sizes);
    }
    if (perturb == "J") {
        config.perturb_param = PerturbParam::J;
    } else if (perturb == "tau") {
        config.perturb_param = PerturbParam::tau;
    } else {
        throw ArgumentError("perturb must be 'J' or 'tau'");
    }
    if (sector == "plus") {
        config.sector = SectorChoice::plus;
    } else if (sector == "minus") {
        config.sector = SectorChoice::minus;
    } else if (sector == "pooled") {
        config.sector = SectorChoice::pooled;
    } else {
        throw ArgumentError("sector must be plus, minus or pooled");
    }
    config.unfold = parse_unfold(unfold_text);
    if (format == "csv") {
        config.format = OutputFormat::csv;
    } else if (format == "json") {
        config.format = OutputFormat::json;
    } else {
        throw ArgumentError("format must be csv or json");
    }
    return true;
}

void validate(const RunConfig &config) {
    if (config.n_qubits.empty()) {
        throw ArgumentError("--n is required");
    }
    if (config.n_qubits.size() > 1 && config.command != Command::eigenstate_ee) {
        throw ArgumentError("only eigenstate-ee accepts a list of sizes");
    }
    if (config.coupling.empty()) {
        throw ArgumentError("--coupling is required");
    }
    parse_coupling(config.coupling);
    const int min_n = config.command == Command::entropy_series || config.command == Command::qkt_map ? 1 : 2;
    for (int n : config.n_qubits) {
        if (n < min_n) {
            throw ArgumentError("--n must be at least " + std::to_string(min_n));
        }
        if (n > kMaxDiagonalQubits) {
            throw ResourceError("N above " + std::to_string(kMaxDiagonalQubits) + " is not supported");
        }
    }
    if (config.kicks < 0) {
        throw ArgumentError("--kicks must be non-negative");
    }
    switch (config.command) {
        case Command::entropy_series:
            if (config.kicks < 2) {
                throw ArgumentError("entropy-series needs --kicks >= 2");
            }
            break;
        case Command::spacings:
        case Command::ratios:
            if (config.order_k < 1 || config.order_k > 8) {
                throw ArgumentError("--k must lie in 1..8");
            }
            if (config.bins < 1) {
                throw ArgumentError("--bins must be positive");
            }
            break;
        case Command::eigenstate_ee:
            if (!(config.perturb_delta >= 0.0) || config.perturb_delta > 1e-4) {
                throw ArgumentError("--delta must lie in [0, 1e-4]");
            }
            break;
        case Command::oracle_check:
            if (single_n(config) > oracle::kMaxMaterialized) {
                throw ResourceError("oracle-check is limited to N <= " + std::to_string(oracle::kMaxMaterialized));
            }
            break;
        default:
            break;
    }
}

void write_atomically(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ResourceError("cannot open " + tmp.string() + " for writing");
        }
        f << contents;
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp);
            throw ResourceError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ResourceError("cannot rename into " + path + ": " + ec.message());
    }
}

int run(const RunConfig &config, std::ostream &out, std::ostream &warn) {
    validate(config);
    Table table;
    json summary = base_summary(config);
    bool ok = true;
    switch (config.command) {
        case Command::entropy_series:
            entropy_command(config, table, summary);
            break;
        case Command::period:
            period_command(config, table, summary);
            break;
        case Command::spectrum:
            spectrum_command(config, table, summary);
            break;
        case Command::spacings:
        case Command::ratios:
            distribution_command(config, table, summary);
            break;
        case Command::rbar:
            rbar_command(config, table, summary);
            break;
        case Command::eigenstate_ee:
            eigenstate_command(config, table, summary, warn);
            break;
        case Command::qkt_map:
            qkt_command(config, table, summary);
            break;
        case Command::oracle_check:
            ok = oracle_command(config, table, summary);
            break;
    }
    if (!config.out_path.empty()) {
        write_atomically(config.out_path, render(table, summary, config.format));
    }
    out << summary.dump() << "\n";
    return ok ? kExitOk : kExitNumeric;
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    auto fail = [&](int code, const char *category, const std::string &message) {
        json e = json::object();
        e["error"] = category;
        e["message"] = message;
        err << e.dump() << "\n";
        return code;
    };
    try {
        RunConfig config;
        if (!parse_run_config(argc, argv, config, out)) {
            return kExitOk;
        }
        return run(config, out, err);
    } catch (const ArgumentError &e) {
        return fail(kExitConfig, "config", e.what());
    } catch (const UnsupportedRepresentationError &e) {
        return fail(kExitConfig, "config", e.what());
    } catch (const ResourceError &e) {
        return fail(kExitResource, "resource", e.what());
    } catch (const std::bad_alloc &) {
        return fail(kExitResource, "resource", "out of memory");
    } catch (const NumericGuardError &e) {
        return fail(kExitNumeric, "numeric", e.what());
    } catch (const StatisticsError &e) {
        return fail(kExitNumeric, "numeric", e.what());
    } catch (const std::exception &e) {
        return fail(kExitNumeric, "numeric", e.what());
    }
}

}  // namespace kising
