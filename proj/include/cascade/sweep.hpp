#pragma once

// Sweep configuration, per-point pipelines, optimizers, Fock-convergence
// ladder, and CSV/JSON emission. This is the user-facing surface behind the
// cascade-lab CLI: every grid point delegates to the model/spectra/entangle
// modules and reports a fixed set of scalar output columns.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "entangle.hpp"
#include "gaussian.hpp"
#include "liouville.hpp"
#include "models.hpp"
#include "network.hpp"
#include "operators.hpp"
#include "optimize.hpp"

namespace cascade {

// Configuration problems map to CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_models() {
    static const std::vector<std::string> m = {"bare-tls", "full-cavity", "dressed-rwa",
                                               "purcell",  "qms",         "bogoliubov",
                                               "network"};
    return m;
}

struct AxisSpec {
    std::string name;
    double min = 0.0, max = 0.0;
    int count = 0;
    std::string scale = "linear";

    std::vector<double> values() const {
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            double t = count == 1 ? 0.0 : double(i) / double(count - 1);
            v[static_cast<std::size_t>(i)] =
                scale == "log" ? min * std::pow(max / min, t) : min + (max - min) * t;
        }
        return v;
    }
};

struct SweepConfig {
    std::string model;
    std::map<std::string, double> fixed;
    std::vector<AxisSpec> axes;
    std::vector<std::string> optimize_over;
    std::vector<std::string> outputs;
    int n_fock = 0;  // 0 = model default
    long long seed = 0;
    int coarse_points = 41;

    void validate() const;
    nlohmann::json to_json() const;
    static SweepConfig from_json(const nlohmann::json& j);
};

inline void SweepConfig::validate() const {
    const auto& models = known_models();
    if (std::find(models.begin(), models.end(), model) == models.end())
        throw ConfigError("config.model: unknown model '" + model + "'");
    if (axes.empty() || axes.size() > 2)
        throw ConfigError("config.axes: need 1 or 2 axes, got " + std::to_string(axes.size()));
    for (const auto& a : axes) {
        if (a.name.empty()) throw ConfigError("config.axes: axis name must be non-empty");
        if (a.count < 1)
            throw ConfigError("config.axes." + a.name + ": count must be >= 1");
        if (a.count > 1 && !(a.max > a.min))
            throw ConfigError("config.axes." + a.name + ": degenerate range (max <= min)");
        if (a.scale != "linear" && a.scale != "log")
            throw ConfigError("config.axes." + a.name + ": scale must be linear or log");
        if (a.scale == "log" && a.min <= 0.0)
            throw ConfigError("config.axes." + a.name + ": log scale needs min > 0");
    }
    if (axes.size() == 2 && axes[0].name == axes[1].name)
        throw ConfigError("config.axes: duplicate axis name " + axes[0].name);
    static const std::set<std::string> opt_params = {"theta", "delta_q", "omega0"};
    for (const auto& p : optimize_over) {
        if (!opt_params.count(p))
            throw ConfigError("config.optimize_over: unsupported parameter '" + p + "'");
        for (const auto& a : axes)
            if (a.name == p)
                throw ConfigError("config.optimize_over: '" + p + "' is also a sweep axis");
    }
    static const std::set<std::string> out_keys = {
        "Cd",   "r_eff",        "mu_eff",     "N1",   "N2",      "absM",
        "Theta", "EN",          "concurrences", "coherences",
        "g_tms", "gamma_theta", "n_th",       "r_theta"};
    if (outputs.empty()) throw ConfigError("config.outputs: must request at least one output");
    for (const auto& o : outputs)
        if (!out_keys.count(o)) throw ConfigError("config.outputs: unknown output '" + o + "'");
    if (n_fock < 0) throw ConfigError("config.n_fock: must be >= 0");
    if (coarse_points < 3) throw ConfigError("config.coarse_points: must be >= 3");
}

inline nlohmann::json SweepConfig::to_json() const {
    nlohmann::json j;
    j["model"] = model;
    j["fixed"] = fixed;
    j["axes"] = nlohmann::json::array();
    for (const auto& a : axes)
        j["axes"].push_back({{"name", a.name},
                             {"min", a.min},
                             {"max", a.max},
                             {"count", a.count},
                             {"scale", a.scale}});
    j["optimize_over"] = optimize_over;
    j["outputs"] = outputs;
    if (n_fock > 0) j["n_fock"] = n_fock;
    j["seed"] = seed;
    j["coarse_points"] = coarse_points;
    return j;
}

inline SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    SweepConfig c;
    try {
        c.model = j.at("model").get<std::string>();
        if (j.contains("fixed"))
            c.fixed = j.at("fixed").get<std::map<std::string, double>>();
        for (const auto& a : j.at("axes")) {
            AxisSpec ax;
            ax.name = a.at("name").get<std::string>();
            ax.min = a.at("min").get<double>();
            ax.max = a.at("max").get<double>();
            ax.count = a.at("count").get<int>();
            if (a.contains("scale")) ax.scale = a.at("scale").get<std::string>();
            c.axes.push_back(ax);
        }
        if (j.contains("optimize_over"))
            c.optimize_over = j.at("optimize_over").get<std::vector<std::string>>();
        c.outputs = j.at("outputs").get<std::vector<std::string>>();
        if (j.contains("n_fock")) c.n_fock = j.at("n_fock").get<int>();
        if (j.contains("seed")) c.seed = j.at("seed").get<long long>();
        if (j.contains("coarse_points")) c.coarse_points = j.at("coarse_points").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

struct SweepRow {
    std::vector<double> coords;
    std::vector<double> values;
    std::string error;  // empty on success
    int n_fock_used = 0;
    int optimizer_evals = 0;
    double wall_seconds = 0.0;  // in-memory only, never emitted (determinism)
};

struct SweepResult {
    SweepConfig config;
    std::vector<std::string> columns;  // coords, then *_star, then value columns
    std::vector<SweepRow> rows;
};

namespace detail {

using ParamMap = std::map<std::string, double>;

inline double get_or(const ParamMap& p, const std::string& k, double fallback) {
    auto it = p.find(k);
    return it == p.end() ? fallback : it->second;
}

inline double require(const ParamMap& p, const std::string& k, const std::string& model) {
    auto it = p.find(k);
    if (it == p.end())
        throw ConfigError("config.fixed: model '" + model + "' needs parameter '" + k + "'");
    return it->second;
}

// Either (delta0, omega0) directly or the (theta, omega_tilde) parametrization.
inline TlsParams tls_from_params(const ParamMap& p, const std::string& model) {
    TlsParams t;
    if (p.count("theta")) {
        double th = p.at("theta");
        double ot = require(p, "omega_tilde", model);
        t.delta0 = ot * std::cos(th);
        t.omega0 = ot * std::sin(th);
    } else {
        t.delta0 = get_or(p, "delta0", 0.0);
        t.omega0 = require(p, "omega0", model);
    }
    t.gamma0 = get_or(p, "gamma0", 0.0);
    t.kappa = get_or(p, "kappa", 0.0);
    t.gamma_phi = get_or(p, "gamma_phi", 0.0);
    return t;
}

inline CavityParams cavity_from_params(const ParamMap& p, const std::string& model, int n_fock) {
    CavityParams c;
    c.tls = tls_from_params(p, model);
    c.g = require(p, "g", model);
    double kappa = get_or(p, "kappa", -1.0);
    if (kappa < 0.0) {
        // Allow specifying the cavity decay through the cooperativity.
        double coop = require(p, "cooperativity", model);
        double g0 = c.tls.gamma0 > 0.0 ? c.tls.gamma0 : 1.0;
        kappa = c.g * c.g / (coop * g0);
    }
    c.tls.kappa = kappa;  // reinterpreted as the cavity decay for these models
    c.delta_c = get_or(p, "delta_c", c.tls.omega_tilde());
    c.n_fock = n_fock;
    return c;
}

// Gaussian-measure log-negativity of the two cavity modes of an exact steady
// state: second moments are measured on the density matrix and pushed through
// the covariance machinery.
inline double exact_mode_log_negativity(const Liouvillian& liou) {
    DensityMatrix rho = steady_state(liou);
    const auto& space = liou.space;
    int nf = space.dims.at(1);
    Operator a1 = embed(destroy(nf), space, 1);
    Operator a2 = embed(destroy(space.dims.at(2)), space, 2);
    Operator ops[2] = {a1, a2};

    SecondMoments s;
    for (int i = 0; i < 2; ++i) {
        s.first(2 * i) = expectation(rho, ops[i]);
        s.first(2 * i + 1) = expectation(rho, ops[i].dagger());
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            s.aa(i, j) = expectation(rho, ops[i] * ops[j]);
            s.nmat(i, j) = expectation(rho, ops[i].dagger() * ops[j]);
        }
    }
    return log_negativity(s);
}

struct PointOutputs {
    std::map<std::string, double> scalars;
    int n_fock_used = 0;
};

inline int default_n_fock(const std::string& model) { return model == "full-cavity" ? 3 : 5; }

// Evaluate every requested output key for one fully specified parameter point.
inline PointOutputs evaluate_point(const std::string& model, const ParamMap& params,
                                   const std::vector<std::string>& outputs, int n_fock) {
    PointOutputs out;

    auto want = [&](const std::string& k) {
        return std::find(outputs.begin(), outputs.end(), k) != outputs.end();
    };
    auto fill_tms = [&](const TMSParams& t) {
        out.scalars["N1"] = t.n1;
        out.scalars["N2"] = t.n2;
        out.scalars["absM"] = std::abs(t.m);
        out.scalars["Theta"] = std::arg(t.m);
        EffectiveTMS e = effective_tms(t);
        out.scalars["r_eff"] = e.r_eff;
        out.scalars["mu_eff"] = e.mu_eff;
        out.scalars["Cd"] = concurrence_distributable(e);
    };

    if (model == "network") {
        NetworkParams np;
        np.source = tls_from_params(params, model);
        if (np.source.kappa <= 0.0) np.source.kappa = 1.0;
        np.gamma = require(params, "gamma_over_kappa", model) * np.source.kappa;
        np.delta_q = get_or(params, "delta_q", np.source.omega_tilde());
        NetworkReport r = analyze_network(np);
        out.scalars["Cd"] = r.c12;
        out.scalars["C01"] = r.c01;
        out.scalars["C02"] = r.c02;
        out.scalars["C12"] = r.c12;
        out.scalars["coh_gg_ee_12_re"] = r.coh_gg_ee_12.real();
        out.scalars["coh_gg_ee_12_im"] = r.coh_gg_ee_12.imag();
        out.scalars["coh_eg_ge_12_re"] = r.coh_eg_ge_12.real();
        out.scalars["coh_eg_ge_12_im"] = r.coh_eg_ge_12.imag();
        out.scalars["coh_gg_ee_01_re"] = r.coh_gg_ee_01.real();
        out.scalars["coh_gg_ee_01_im"] = r.coh_gg_ee_01.imag();
        out.scalars["coh_eg_ge_01_re"] = r.coh_eg_ge_01.real();
        out.scalars["coh_eg_ge_01_im"] = r.coh_eg_ge_01.imag();
        return out;
    }

    if (model == "bogoliubov") {
        CavityParams cp = cavity_from_params(params, model, 2);
        BogoliubovRates br = bogoliubov_weak_coupling(cp);
        out.scalars["g_tms"] = br.g_tms;
        out.scalars["gamma_theta"] = br.gamma_theta;
        out.scalars["n_th"] = br.n_th;
        out.scalars["r_theta"] = br.r_theta;
        if (br.diverging || br.gamma_theta <= 0.0) {
            // No cooling of the Bogoliubov mode: the closed forms diverge.
            TMSParams t;
            fill_tms(t);
        } else {
            QmsClosedForm cf = qms_closed_form(br.r_theta, cp.tls.kappa, br.gamma_theta);
            TMSParams t;
            t.n1 = cf.n1;
            t.n2 = cf.n2;
            t.m = cf.m;
            fill_tms(t);
        }
        return out;
    }

    if (model == "qms") {
        CavityParams cp = cavity_from_params(params, model, 2);
        QuadraticModel qm = qms_quadratic(cp, get_or(params, "secular", 1.0) != 0.0);
        double dq = get_or(params, "delta_q", cp.delta_c);
        fill_tms(tms_from_spectra(gaussian_correlation_set(qm, dq, -dq)));
        if (want("EN")) out.scalars["EN"] = log_negativity(steady_second_moments(qm));
        return out;
    }

    // Exact-spectra models.
    Liouvillian liou;
    double dq = 0.0;
    if (model == "bare-tls") {
        TlsParams t = tls_from_params(params, model);
        if (t.kappa <= 0.0) throw ConfigError("config.fixed: bare-tls needs kappa > 0");
        dq = get_or(params, "delta_q", t.omega_tilde());
        liou = bare_tls(t);
    } else if (model == "purcell") {
        CavityParams cp = cavity_from_params(params, model, 2);
        dq = get_or(params, "delta_q", cp.tls.omega_tilde());
        liou = resolved_purcell(cp);
    } else if (model == "full-cavity" || model == "dressed-rwa") {
        int nf = n_fock > 0 ? n_fock : default_n_fock(model);
        CavityParams cp = cavity_from_params(params, model, nf);
        dq = get_or(params, "delta_q", cp.delta_c);
        liou = model == "full-cavity" ? tls_two_cavities(cp) : dressed_rwa(cp);
        out.n_fock_used = nf;
        if (want("EN")) out.scalars["EN"] = exact_mode_log_negativity(liou);
    } else {
        throw ConfigError("config.model: unknown model '" + model + "'");
    }
    fill_tms(tms_from_spectra(correlation_set(liou, dq, -dq)));
    return out;
}

// Search box for a single optimized parameter, possibly model-dependent.
inline std::pair<double, double> optimize_bounds(const std::string& name, const ParamMap& params,
                                                 const std::string& model) {
    if (name == "theta") return {0.02, 3.14159265358979323846 / 2.0 - 0.02};
    if (name == "delta_q") {
        double ot = params.count("omega_tilde")
                        ? params.at("omega_tilde")
                        : std::hypot(get_or(params, "delta0", 0.0), get_or(params, "omega0", 1.0));
        double kappa = get_or(params, "kappa", 1.0);
        if (model == "network") return {0.0, 3.0 * kappa};
        return {1e-6, 3.0 * ot};
    }
    if (name == "omega0") {
        double kappa = get_or(params, "kappa", 1.0);
        return {0.1 * kappa, 6.0 * kappa};
    }
    throw ConfigError("optimize_over: unsupported parameter '" + name + "'");
}

}  // namespace detail

// Maximize Cd over the listed parameters at an otherwise fixed model point.
// Coarse scan first (deterministic), then golden-section (1D) or simplex (2D).
inline OptimumRecord optimize_point(const std::string& model,
                                    const std::map<std::string, double>& params,
                                    const std::vector<std::string>& over,
                                    const std::vector<std::string>& outputs, int n_fock,
                                    int coarse_points = 41, double tol = 1e-4) {
    if (over.empty() || over.size() > 2)
        throw ConfigError("optimize_over: need 1 or 2 parameters");

    auto objective = [&](const std::vector<double>& x) {
        std::map<std::string, double> p = params;
        for (std::size_t i = 0; i < over.size(); ++i) p[over[i]] = x[i];
        try {
            return detail::evaluate_point(model, p, outputs, n_fock).scalars.at("Cd");
        } catch (const ConfigError&) {
            throw;  // configuration problems must not be masked as bad objective values
        } catch (const std::exception&) {
            return -1.0;  // unstable/unsolvable point: dominated by any valid value
        }
    };

    std::vector<double> lo, hi;
    for (const auto& name : over) {
        auto [a, b] = detail::optimize_bounds(name, params, model);
        lo.push_back(a);
        hi.push_back(b);
    }

    int evals = 0;
    std::vector<double> best_x = lo;
    double best = -2.0;
    if (over.size() == 1) {
        for (int i = 0; i < coarse_points; ++i) {
            double x = lo[0] + (hi[0] - lo[0]) * i / double(coarse_points - 1);
            double v = objective({x});
            ++evals;
            if (v > best) {
                best = v;
                best_x = {x};
            }
        }
        double half = (hi[0] - lo[0]) / double(coarse_points - 1);
        OptimumRecord rec = golden_section(
            [&](double x) { return objective({x}); }, std::max(lo[0], best_x[0] - half),
            std::min(hi[0], best_x[0] + half), tol * (hi[0] - lo[0]));
        if (rec.value < best) {
            rec.value = best;
            rec.x = best_x;
        }
        rec.evaluations += evals;
        rec.boundary = (rec.x[0] - lo[0]) < 0.01 * (hi[0] - lo[0]) ||
                       (hi[0] - rec.x[0]) < 0.01 * (hi[0] - lo[0]);
        return rec;
    }

    int side = std::max(5, static_cast<int>(std::lround(std::sqrt(coarse_points * 10))));
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
            std::vector<double> x = {lo[0] + (hi[0] - lo[0]) * a / double(side - 1),
                                     lo[1] + (hi[1] - lo[1]) * b / double(side - 1)};
            double v = objective(x);
            ++evals;
            if (v > best) {
                best = v;
                best_x = x;
            }
        }
    }
    OptimumRecord rec = nelder_mead(objective, best_x, lo, hi, tol, 600);
    if (rec.value < best) {
        rec.value = best;
        rec.x = best_x;
    }
    rec.evaluations += evals;
    return rec;
}

// Fock-truncation ladder for the exact cavity models: step through
// 2, 3, 6, 12, 24 modes per cavity until Cd changes by less than 1e-3.
struct FockRecord {
    std::vector<std::pair<int, double>> ladder;  // (n_fock, Cd)
    int n_fock = 0;
    bool converged = false;
};

inline FockRecord fock_convergence(const std::string& model,
                                   const std::map<std::string, double>& params) {
    if (model != "full-cavity" && model != "dressed-rwa")
        throw ConfigError("converge: model must be full-cavity or dressed-rwa");
    FockRecord rec;
    const int steps[] = {2, 3, 6, 12, 24};
    double prev = 0.0;
    for (std::size_t k = 0; k < std::size(steps); ++k) {
        double cd =
            detail::evaluate_point(model, params, {"Cd"}, steps[k]).scalars.at("Cd");
        rec.ladder.push_back({steps[k], cd});
        if (k > 0 && std::abs(cd - prev) < 1e-3) {
            rec.n_fock = steps[k - 1];
            rec.converged = true;
            return rec;
        }
        prev = cd;
    }
    rec.n_fock = rec.ladder.back().first;
    return rec;
}

namespace detail {

inline std::vector<std::string> value_columns(const SweepConfig& cfg) {
    std::vector<std::string> cols;
    for (const auto& o : cfg.outputs) {
        if (o == "concurrences") {
            cols.insert(cols.end(), {"C01", "C02", "C12"});
        } else if (o == "coherences") {
            for (const char* base : {"coh_gg_ee_12", "coh_eg_ge_12", "coh_gg_ee_01",
                                     "coh_eg_ge_01"}) {
                cols.push_back(std::string(base) + "_re");
                cols.push_back(std::string(base) + "_im");
            }
        } else {
            cols.push_back(o);
        }
    }
    return cols;
}

}  // namespace detail

// Run every grid point through the per-model pipeline. Points are independent
// work items; rows land in preassigned slots, so worker count never changes
// the result.
inline SweepResult run_sweep(const SweepConfig& cfg, int workers = 0) {
    cfg.validate();
    if (workers <= 0) {
        if (const char* env = std::getenv("CASCADE_LAB_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }

    SweepResult res;
    res.config = cfg;
    for (const auto& a : cfg.axes) res.columns.push_back(a.name);
    for (const auto& p : cfg.optimize_over)
        res.columns.push_back((p == "delta_q" ? "deltaq" : p) + std::string("_star"));
    std::vector<std::string> vcols = detail::value_columns(cfg);
    res.columns.insert(res.columns.end(), vcols.begin(), vcols.end());

    std::vector<std::vector<double>> grids;
    for (const auto& a : cfg.axes) grids.push_back(a.values());
    std::size_t total = 1;
    for (const auto& g : grids) total *= g.size();
    res.rows.resize(total);

    auto run_point = [&](std::size_t idx) {
        SweepRow& row = res.rows[idx];
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::map<std::string, double> params = cfg.fixed;
            std::size_t rem = idx;
            for (std::size_t ax = grids.size(); ax-- > 0;) {
                std::size_t i = rem % grids[ax].size();
                rem /= grids[ax].size();
                params[cfg.axes[ax].name] = grids[ax][i];
            }
            row.coords.resize(grids.size());
            {
                std::size_t r2 = idx;
                for (std::size_t ax = grids.size(); ax-- > 0;) {
                    row.coords[ax] = grids[ax][r2 % grids[ax].size()];
                    r2 /= grids[ax].size();
                }
            }

            std::vector<double> stars;
            if (!cfg.optimize_over.empty()) {
                OptimumRecord rec =
                    optimize_point(cfg.model, params, cfg.optimize_over, cfg.outputs,
                                   cfg.n_fock, cfg.coarse_points);
                for (std::size_t i = 0; i < cfg.optimize_over.size(); ++i) {
                    params[cfg.optimize_over[i]] = rec.x[i];
                    stars.push_back(rec.x[i]);
                }
                row.optimizer_evals = rec.evaluations;
            }

            detail::PointOutputs po =
                detail::evaluate_point(cfg.model, params, cfg.outputs, cfg.n_fock);
            row.n_fock_used = po.n_fock_used;
            row.values = stars;
            for (const auto& col : vcols) {
                auto it = po.scalars.find(col);
                row.values.push_back(it == po.scalars.end()
                                         ? std::numeric_limits<double>::quiet_NaN()
                                         : it->second);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            row.values.assign(res.columns.size() - row.coords.size(),
                              std::numeric_limits<double>::quiet_NaN());
        }
        row.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_point(i);
    };
    if (workers == 1 || total <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return res;
}

// ---- emission -------------------------------------------------------------

// 12 significant digits, '.' decimal separator, locale-independent.
inline std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline void write_csv(const SweepResult& res, std::ostream& os) {
    for (std::size_t i = 0; i < res.columns.size(); ++i)
        os << res.columns[i] << (i + 1 < res.columns.size() ? "," : "");
    os << ",error\n";
    for (const auto& row : res.rows) {
        for (std::size_t i = 0; i < row.coords.size(); ++i)
            os << format_sig(row.coords[i]) << ",";
        for (std::size_t i = 0; i < row.values.size(); ++i)
            os << format_sig(row.values[i]) << ",";
        std::string err = row.error;
        for (auto& ch : err)
            if (ch == ',' || ch == '\n') ch = ';';
        os << err << "\n";
    }
}

inline nlohmann::json result_to_json(const SweepResult& res) {
    nlohmann::json j;
    j["config"] = res.config.to_json();
    j["library_version"] = "0.1.0";
    j["columns"] = res.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : res.rows) {
        nlohmann::json r;
        r["coords"] = row.coords;
        r["values"] = row.values;
        if (!row.error.empty()) r["error"] = row.error;
        if (row.n_fock_used > 0) r["n_fock_used"] = row.n_fock_used;
        if (row.optimizer_evals > 0) r["optimizer_evals"] = row.optimizer_evals;
        // wall time deliberately omitted: outputs must be byte-identical
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline SweepResult result_from_json(const nlohmann::json& j) {
    SweepResult res;
    res.config = SweepConfig::from_json(j.at("config"));
    res.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        SweepRow row;
        row.coords = r.at("coords").get<std::vector<double>>();
        row.values = r.at("values").get<std::vector<double>>();
        if (r.contains("error")) row.error = r.at("error").get<std::string>();
        if (r.contains("n_fock_used")) row.n_fock_used = r.at("n_fock_used").get<int>();
        if (r.contains("optimizer_evals"))
            row.optimizer_evals = r.at("optimizer_evals").get<int>();
        res.rows.push_back(std::move(row));
    }
    return res;
}

// ---- recipes --------------------------------------------------------------

// Named desk-scale configurations reproducing the reference figures.
inline SweepConfig recipe(const std::string& name) {
    SweepConfig c;
    c.seed = 20260826;
    auto tms_outputs = std::vector<std::string>{"Cd", "r_eff", "mu_eff", "N1", "N2", "absM"};

    if (name == "fig3b") {
        c.model = "bare-tls";
        c.fixed = {{"kappa", 1.0}, {"gamma0", 0.0}};
        c.axes = {{"omega0", 0.1, 100.0, 61, "log"}, {"delta0", 0.1, 100.0, 61, "log"}};
        c.outputs = {"Cd"};
    } else if (name == "fig4a") {
        c.model = "full-cavity";
        c.fixed = {{"theta", 0.7853981633974483}, {"g", 0.1}, {"kappa", 1.0},
                   {"gamma0", 0.0}};
        c.axes = {{"omega_tilde", 2.0, 60.0, 13, "log"}};
        c.outputs = {"Cd"};
        c.n_fock = 3;
    } else if (name == "fig4b") {
        c.model = "full-cavity";
        c.fixed = {{"omega_tilde", 30.0}, {"g", 0.1}, {"kappa", 1.0}, {"gamma0", 0.0}};
        c.axes = {{"theta", 0.05, 1.52, 25, "linear"}};
        c.outputs = tms_outputs;
        c.n_fock = 3;
    } else if (name == "fig5a") {
        c.model = "qms";
        c.fixed = {{"omega_tilde", 30.0}, {"g", 0.1}, {"kappa", 0.001}, {"gamma0", 1.0}};
        c.axes = {{"theta", 0.1, 1.5, 29, "linear"}};
        c.outputs = {"Cd", "EN", "r_eff", "mu_eff"};
    } else if (name == "fig5b") {
        c.model = "qms";
        c.fixed = {{"g", 0.1}, {"kappa", 0.001}, {"gamma0", 1.0}};
        c.axes = {{"omega_tilde", 1.0, 100.0, 17, "log"}};
        c.optimize_over = {"theta"};
        c.outputs = {"Cd", "EN"};
    } else if (name == "fig5c") {
        c.model = "qms";
        c.fixed = {{"omega_tilde", 100.0}, {"g", 0.1}, {"kappa", 0.001}, {"gamma0", 1.0},
                   {"theta", 0.9}};
        c.axes = {{"delta_c", 90.0, 110.0, 21, "linear"}};
        c.outputs = {"Cd", "EN", "r_eff", "mu_eff"};
    } else if (name == "fig5d") {
        c.model = "qms";
        c.fixed = {{"omega_tilde", 500.0}, {"g", 0.1}, {"gamma0", 1.0}};
        c.axes = {{"cooperativity", 0.1, 1000.0, 13, "log"}};
        c.optimize_over = {"theta"};
        c.outputs = {"Cd", "EN"};
    } else if (name == "fig6") {
        c.model = "bogoliubov";
        c.fixed = {{"theta", 1.0471975511965976}, {"omega_tilde", 100.0}, {"g", 0.1},
                   {"kappa", 0.001}, {"gamma0", 1.0}};
        c.axes = {{"delta_c", 50.0, 150.0, 41, "linear"}};
        c.outputs = {"g_tms", "gamma_theta", "n_th", "r_theta"};
    } else if (name == "fig7") {
        c.model = "dressed-rwa";
        c.fixed = {{"omega_tilde", 75.0}, {"delta_c", 75.0}, {"g", 1.0}, {"kappa", 2.0},
                   {"gamma0", 2.0}};
        c.axes = {{"theta", 0.1, 1.5, 15, "linear"}};
        c.outputs = {"Cd"};
        c.n_fock = 4;
    } else if (name == "fig8a") {
        c.model = "dressed-rwa";
        c.fixed = {{"theta", 1.0471975511965976}, {"omega_tilde", 75.0}, {"delta_c", 75.0},
                   {"g", 1.0}, {"kappa", 0.025}, {"gamma0", 0.025}};
        c.axes = {{"delta_q", 73.0, 77.0, 33, "linear"}};
        c.outputs = {"N1", "N2", "absM"};
        c.n_fock = 6;
    } else if (name == "fig8b") {
        c = recipe("fig8a");
        c.outputs = {"Cd"};
    } else if (name == "fig9") {
        c.model = "network";
        c.fixed = {{"kappa", 1.0}, {"delta0", 0.0}, {"omega0", 1.0}};
        c.axes = {{"gamma_over_kappa", 0.1, 20.0, 9, "log"}};
        c.optimize_over = {"omega0", "delta_q"};
        c.outputs = {"concurrences", "coherences"};
    } else {
        throw ConfigError("recipe: unknown recipe '" + name + "'");
    }
    c.validate();
    return c;
}

inline const std::vector<std::string>& recipe_names() {
    static const std::vector<std::string> names = {"fig3b", "fig4a", "fig4b", "fig5a",
                                                   "fig5b", "fig5c", "fig5d", "fig6",
                                                   "fig7",  "fig8a", "fig8b", "fig9"};
    return names;
}

}  // namespace cascade
