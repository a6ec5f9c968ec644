// Acceptance suite: thirteen end-to-end checks, one verdict line each.
// Exit status is the number of failed criteria.

#include <unsupported/Eigen/MatrixFunctions>

#include <cascade/sweep.hpp>

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cascade;

namespace {

constexpr double pi = 3.14159265358979323846;

int failures = 0;

void verdict(int num, bool pass, const std::string& what, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", num, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

TMSParams random_tms(std::mt19937& rng) {
    std::uniform_real_distribution<double> un(0.0, 3.0);
    std::uniform_real_distribution<double> uf(0.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * pi);
    TMSParams p;
    p.n1 = un(rng);
    p.n2 = un(rng);
    double bound = std::sqrt(p.n1 * p.n2 + std::min(p.n1, p.n2));
    p.m = std::polar(0.999 * bound * uf(rng), uphi(rng));
    return p;
}

// Direct time-domain Laplace transform of the centered correlation function,
// dense matrix exponential oracle for the resolvent path.
complexd time_domain_laplace(const Liouvillian& liou, const Operator& a, const Operator& b,
                             double delta, double tau_max, int steps) {
    const int d = liou.dim();
    DensityMatrix rho = steady_state(liou);
    complexd a_ss = expectation(rho, a), b_ss = expectation(rho, b);
    Matrix abar = a.dense() - a_ss * Matrix::Identity(d, d);
    Matrix bbar = b.dense() - b_ss * Matrix::Identity(d, d);
    Matrix prop = (Matrix(liou.superop) * (tau_max / steps)).exp();
    Vector v = vec(Matrix(bbar * rho.dense()));
    complexd acc = 0.0;
    for (int k = 0; k <= steps; ++k) {
        double tau = k * (tau_max / steps);
        complexd corr = (abar * unvec(v, d)).trace();
        double w = (k == 0 || k == steps) ? 0.5 : 1.0;
        acc += w * (tau_max / steps) * corr * std::exp(complexd(0, -delta * tau));
        v = prop * v;
    }
    return acc;
}

std::map<std::string, double> qms_regime_params(double theta) {
    return {{"theta", theta}, {"omega_tilde", 30.0}, {"g", 0.1}, {"kappa", 1e-3},
            {"gamma0", 1.0}};
}

// ---- criteria -------------------------------------------------------------

void criterion_1() {
    std::mt19937 rng(7001);
    int bad = 0;
    double max_dev = 0.0, max_dev_sym = 0.0;
    for (int k = 0; k < 200; ++k) {
        TMSParams t = random_tms(rng);
        double formula = concurrence_distributable(effective_tms(t));
        double direct = wootters_concurrence(steady_state(qubit_me_resonant(t, 1.0)));
        double dev = std::abs(direct - formula);
        max_dev = std::max(max_dev, dev);
        if (dev > 1e-8) ++bad;
        TMSParams s = t;  // matched-occupation control sample
        s.n2 = s.n1;
        double bound = std::sqrt(s.n1 * s.n2 + std::min(s.n1, s.n2));
        if (std::abs(s.m) > 0.999 * bound) s.m *= 0.999 * bound / std::abs(s.m);
        max_dev_sym = std::max(
            max_dev_sym,
            std::abs(wootters_concurrence(steady_state(qubit_me_resonant(s, 1.0))) -
                     concurrence_distributable(effective_tms(s))));
    }
    verdict(1, bad == 0, "closed-form concurrence vs two-qubit steady state (200 samples, 1e-8)",
            fmt("%d/200 samples beyond 1e-8, max |dev| = %.3e; matched-occupation control "
                "(N1 = N2) max |dev| = %.3e",
                bad, max_dev, max_dev_sym));
}

void criterion_2() {
    SweepResult res = run_sweep(recipe("fig3b"));
    double best = -1.0, om = 0.0, d0 = 0.0;
    for (const auto& row : res.rows) {
        if (row.error.empty() && row.values[0] > best) {
            best = row.values[0];
            om = row.coords[0];
            d0 = row.coords[1];
        }
    }
    double ratio = d0 / om;
    bool pass = best >= 0.12 && best <= 0.14 && ratio >= 0.5 && ratio <= 2.0;
    verdict(2, pass, "bare-TLS grid optimum Cd in [0.12, 0.14] at delta0/omega0 in [0.5, 2]",
            fmt("max Cd = %.4f at omega0 = %.3g, delta0 = %.3g (ratio %.2f)", best, om, d0,
                ratio));
}

void criterion_3() {
    std::map<std::string, double> p = {{"omega_tilde", 200.0}, {"kappa", 1.0}, {"gamma0", 0.5}};
    OptimumRecord rec = optimize_point("bare-tls", p, {"theta"}, {"Cd"}, 0, 41);
    bool pass = rec.value >= 0.09 && rec.value <= 0.11;
    verdict(3, pass, "bare TLS with extra decay gamma0 = kappa/2: optimized Cd in [0.09, 0.11]",
            fmt("Cd* = %.4f at theta* = %.3f", rec.value, rec.x[0]));
}

void criterion_4() {
    double worst = 0.0;
    for (double th : {pi / 6, pi / 4, pi / 3, pi / 2}) {
        std::map<std::string, double> p = {{"theta", th}, {"omega_tilde", 1000.0},
                                           {"kappa", 1.0}, {"gamma0", 0.0}};
        auto out = detail::evaluate_point("bare-tls", p, {"N1", "absM"}, 0).scalars;
        double s2 = std::sin(th) * std::sin(th);
        double n_ref = 4.0 * s2 * s2 /
                       (4.0 * std::cos(2 * th) + 29.0 - std::cos(4 * th));
        double m_ref = std::abs(s2 / (std::cos(2 * th) - 5.0));
        worst = std::max(worst, std::abs(out["N1"] - n_ref) / n_ref);
        worst = std::max(worst, std::abs(out["absM"] - m_ref) / m_ref);
    }
    auto res = detail::evaluate_point("bare-tls",
                                      {{"theta", pi / 2}, {"omega_tilde", 1000.0},
                                       {"kappa", 1.0}, {"gamma0", 0.0}},
                                      {"r_eff", "mu_eff"}, 0)
                   .scalars;
    double r_ref = 0.5 * std::atanh(0.25);
    bool pass = worst <= 0.01 && std::abs(res["r_eff"] - r_ref) <= 1e-3 &&
                std::abs(res["mu_eff"] - 0.600) <= 1e-3;
    verdict(4, pass, "strong-driving analytic N, |M|, r_eff, mu_eff for the bare TLS",
            fmt("max rel dev %.2e; at theta = pi/2: r_eff = %.5f (ref %.5f), mu_eff = %.5f",
                worst, res["r_eff"], r_ref, res["mu_eff"]));
}

void criterion_5() {
    std::map<std::string, double> p = {{"omega_tilde", 30.0}, {"g", 0.1}, {"kappa", 1.0},
                                       {"gamma0", 0.0}};
    OptimumRecord rec = optimize_point("purcell", p, {"theta"}, {"Cd"}, 0, 41);

    double worst = 0.0;
    for (double th : {pi / 6, pi / 4, pi / 3}) {
        std::map<std::string, double> q = {{"theta", th}, {"omega_tilde", 1000.0},
                                           {"g", 0.1}, {"kappa", 1.0}, {"gamma0", 0.0}};
        auto out = detail::evaluate_point("purcell", q, {"N1", "absM"}, 0).scalars;
        double s2 = std::sin(th) * std::sin(th);
        double den = 3.0 + std::cos(2 * th);
        double n_ref = 4.0 * s2 * s2 / (den * den);
        worst = std::max(worst, std::abs(out["N1"] - n_ref) / n_ref);
        worst = std::max(worst, std::abs(out["absM"] - std::sqrt(n_ref)) / std::sqrt(n_ref));
    }
    auto lim = detail::evaluate_point("purcell",
                                      {{"theta", pi / 2}, {"omega_tilde", 1000.0},
                                       {"g", 0.1}, {"kappa", 1.0}, {"gamma0", 0.0}},
                                      {"r_eff", "mu_eff"}, 0)
                   .scalars;
    bool pass = std::abs(rec.x[0] - pi / 4) <= 0.05 && rec.value >= 0.48 && rec.value <= 0.52 &&
                worst <= 0.01 && std::abs(lim["r_eff"] - 0.402) <= 1e-3 &&
                std::abs(lim["mu_eff"] - 0.200) <= 1e-3;
    verdict(5, pass, "resolved-Purcell optimum and strong-driving analytics",
            fmt("theta* = %.4f (pi/4 = %.4f), Cd* = %.4f; analytic max rel dev %.2e; "
                "theta = pi/2 limit r_eff = %.4f, mu_eff = %.4f",
                rec.x[0], pi / 4, rec.value, worst, lim["r_eff"], lim["mu_eff"]));
}

void criterion_6() {
    double worst_hi = 0.0, worst_lo = 0.0;
    for (double ot : {20.0, 30.0, 45.0, 60.0}) {
        std::map<std::string, double> p = {{"theta", pi / 4}, {"omega_tilde", ot}, {"g", 0.1},
                                           {"kappa", 1.0}, {"gamma0", 0.0}};
        double cp = detail::evaluate_point("purcell", p, {"Cd"}, 0).scalars.at("Cd");
        double cf = detail::evaluate_point("full-cavity", p, {"Cd"}, 3).scalars.at("Cd");
        worst_hi = std::max(worst_hi, std::abs(cp - cf));
    }
    for (double ot : {1.0, 2.0, 3.0}) {
        std::map<std::string, double> p = {{"theta", pi / 4}, {"omega_tilde", ot}, {"g", 0.1},
                                           {"kappa", 1.0}, {"gamma0", 0.0}};
        double cp = detail::evaluate_point("purcell", p, {"Cd"}, 0).scalars.at("Cd");
        double cf = detail::evaluate_point("full-cavity", p, {"Cd"}, 3).scalars.at("Cd");
        worst_lo = std::max(worst_lo, std::abs(cp - cf));
    }
    bool pass = worst_hi <= 0.02 && worst_lo > 0.02;
    verdict(6, pass, "Purcell vs full-cavity Cd: <= 0.02 for omega_tilde >= 20, deviating below 3",
            fmt("max |dev| = %.4f for omega_tilde in {20..60}; max |dev| = %.4f for {1, 2, 3}",
                worst_hi, worst_lo));
}

void criterion_7() {
    const bool full = std::getenv("CASCADE_LAB_ACCEPT_FULL") != nullptr;
    const int nf = full ? 20 : 12;
    const char* keys[4] = {"Cd", "EN", "r_eff", "mu_eff"};
    double worst = 0.0, worst_th = 0.0, worst_conv = 0.0, worst_conv_th = 0.0;
    std::string worst_key = "-", worst_conv_key = "-";
    double referee = 0.0;
    for (double th : {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5}) {
        auto p = qms_regime_params(th);
        auto dr = detail::evaluate_point("dressed-rwa", p, {"Cd", "EN", "r_eff", "mu_eff"}, nf)
                      .scalars;
        auto qm = detail::evaluate_point("qms", p, {"Cd", "EN", "r_eff", "mu_eff"}, 0).scalars;
        for (const char* k : keys) {
            if (qm[k] <= 0.05) continue;
            double rel = std::abs(dr[k] - qm[k]) / qm[k];
            if (rel > worst) {
                worst = rel;
                worst_th = th;
                worst_key = k;
            }
            // Mode occupation beyond theta ~ 1.2 exceeds the truncation; track
            // the converged window separately to separate model error from
            // truncation error.
            if (th <= 1.2 && rel > worst_conv) {
                worst_conv = rel;
                worst_conv_th = th;
                worst_conv_key = k;
            }
        }
        if (th <= 0.9) {
            // Referee: the untransformed TLS + cavities model (no dressed RWA).
            double fc = detail::evaluate_point("full-cavity", p, {"Cd"}, 8).scalars.at("Cd");
            if (qm["Cd"] > 0.05)
                referee = std::max(referee, std::abs(fc - qm["Cd"]) / qm["Cd"]);
        }
    }
    verdict(7, worst <= 0.02,
            fmt("Gaussian vs dressed-RWA pipeline (n_fock = %d) within 2%% over theta", nf),
            fmt("max rel dev %.1f%% (%s at theta = %.1f); converged window theta <= 1.2: "
                "%.2f%% (%s at theta = %.1f); referee full model vs Gaussian (theta <= 0.9): "
                "%.2f%%",
                100 * worst, worst_key.c_str(), worst_th, 100 * worst_conv,
                worst_conv_key.c_str(), worst_conv_th, 100 * referee));
}

void criterion_8() {
    std::map<std::string, double> base = {{"theta", pi / 3}, {"omega_tilde", 500.0},
                                          {"delta_c", 500.0}, {"g", 0.1}, {"gamma0", 1.0},
                                          {"kappa", 1e-3}};
    BogoliubovRates br = bogoliubov_weak_coupling(detail::cavity_from_params(base, "qms", 2));
    double worst = 0.0;
    for (double x : {0.03, 0.1, 0.3}) {
        auto p = base;
        p["kappa"] = x * br.gamma_theta;
        auto out = detail::evaluate_point("qms", p, {"N1", "N2", "absM"}, 0).scalars;
        double sh = std::sinh(2 * br.r_theta);
        double n_ref = sh * sh / (1.0 + x);
        double m_ref = std::sinh(4 * br.r_theta) / (2.0 * (1.0 + x));
        worst = std::max({worst, std::abs(out["N1"] - n_ref) / n_ref,
                          std::abs(out["N2"] - n_ref) / n_ref,
                          std::abs(out["absM"] - m_ref) / m_ref});
    }

    // First-order expansions in x = kappa/Gamma_theta leave quadratic residuals.
    auto eff_at = [&](double x) {
        QmsClosedForm cf = qms_closed_form(br.r_theta, x * br.gamma_theta, br.gamma_theta);
        TMSParams t;
        t.n1 = cf.n1;
        t.n2 = cf.n2;
        t.m = cf.m;
        return effective_tms(t);
    };
    const double h = 1e-5;
    double r0 = eff_at(0.0).r_eff, mu0 = eff_at(0.0).mu_eff;
    double rp = (eff_at(h).r_eff - eff_at(0.0).r_eff) / h;
    double mp = (eff_at(h).mu_eff - eff_at(0.0).mu_eff) / h;
    double res_r1 = std::abs(eff_at(0.1).r_eff - r0 - 0.1 * rp);
    double res_r2 = std::abs(eff_at(0.05).r_eff - r0 - 0.05 * rp);
    double res_m1 = std::abs(eff_at(0.1).mu_eff - mu0 - 0.1 * mp);
    double res_m2 = std::abs(eff_at(0.05).mu_eff - mu0 - 0.05 * mp);
    double ratio_r = res_r1 / res_r2, ratio_m = res_m1 / res_m2;
    bool quad = ratio_r > 2.5 && ratio_r < 6.0 && ratio_m > 2.5 && ratio_m < 6.0;
    verdict(8, worst <= 0.03 && quad, "closed-form QMS occupations and expansion residuals",
            fmt("max rel dev %.2e (tol 3e-2); residual halving ratios r: %.2f, mu: %.2f "
                "(quadratic = 4)",
                worst, ratio_r, ratio_m));
}

void criterion_9() {
    SweepResult res = run_sweep(recipe("fig5d"));
    double best = -1.0, coop = 0.0;
    std::size_t cd_col = 0;
    for (std::size_t i = 0; i < res.columns.size(); ++i)
        if (res.columns[i] == "Cd") cd_col = i - res.rows[0].coords.size();
    for (const auto& row : res.rows) {
        if (row.error.empty() && row.values[cd_col] > best) {
            best = row.values[cd_col];
            coop = row.coords[0];
        }
    }
    bool pass = best > 0.9 && best <= 1.0;
    verdict(9, pass, "high-cooperativity sweep reaches Cd > 0.9",
            fmt("max Cd = %.4f at cooperativity %.3g", best, coop));
}

void criterion_10() {
    double c_tls = detail::evaluate_point("bare-tls",
                                          {{"theta", pi / 2}, {"omega_tilde", 100.0},
                                           {"kappa", 1.0}, {"gamma0", 0.0}},
                                          {"Cd"}, 0)
                       .scalars.at("Cd");
    double c_pur = detail::evaluate_point("purcell",
                                          {{"theta", pi / 2}, {"omega_tilde", 30.0},
                                           {"g", 0.1}, {"kappa", 1.0}, {"gamma0", 0.0}},
                                          {"Cd"}, 0)
                       .scalars.at("Cd");
    double c_bog = detail::evaluate_point("bogoliubov",
                                          {{"theta", pi / 2}, {"omega_tilde", 500.0},
                                           {"delta_c", 500.0}, {"g", 0.1}, {"gamma0", 1.0},
                                           {"kappa", 1e-3}},
                                          {"Cd"}, 0)
                       .scalars.at("Cd");
    bool pass = c_tls <= 1e-6 && c_pur <= 1e-6 && c_bog <= 1e-6;
    verdict(10, pass, "resonant-drive null: Cd vanishes at theta = pi/2 in all pipelines",
            fmt("bare TLS %.2e, Purcell %.2e, closed-form QMS %.2e", c_tls, c_pur, c_bog));
}

void criterion_11() {
    std::map<std::string, double> base = {{"theta", pi / 3}, {"omega_tilde", 75.0},
                                          {"delta_c", 75.0}, {"g", 1.0}, {"kappa", 0.025},
                                          {"gamma0", 0.025}};
    std::vector<double> dq, absm;
    for (int k = 0; k <= 16; ++k) {
        double d = 74.0 + 0.125 * k;
        auto p = base;
        p["delta_q"] = d;
        dq.push_back(d);
        absm.push_back(
            detail::evaluate_point("dressed-rwa", p, {"absM"}, 12).scalars.at("absM"));
    }
    // side peaks: local maxima away from the central resonance
    double lower = 0.0, upper = 0.0, lower_v = -1.0, upper_v = -1.0;
    for (std::size_t i = 1; i + 1 < dq.size(); ++i) {
        if (absm[i] > absm[i - 1] && absm[i] > absm[i + 1] && std::abs(dq[i] - 75.0) > 0.3) {
            if (dq[i] < 75.0 && absm[i] > lower_v) {
                lower = dq[i];
                lower_v = absm[i];
            }
            if (dq[i] > 75.0 && absm[i] > upper_v) {
                upper = dq[i];
                upper_v = absm[i];
            }
        }
    }
    double gb = std::sqrt(std::cos(pi / 3));  // g sqrt(cos theta), g = 1

    auto p0 = base;
    p0["delta_q"] = 75.0;
    double cd_exact = detail::evaluate_point("dressed-rwa", p0, {"Cd"}, 12).scalars.at("Cd");
    double cd_qms = detail::evaluate_point("qms", p0, {"Cd"}, 0).scalars.at("Cd");
    double rel = std::abs(cd_exact - cd_qms) / cd_exact;

    bool peaks = lower > 0.0 && upper > 0.0 && std::abs((75.0 - lower) - gb) <= 0.25 &&
                 std::abs((upper - 75.0) - gb) <= 0.25;
    verdict(11, peaks && rel <= 0.05,
            "strong-coupling sidebands split by g sqrt(cos theta); Cd matches weak coupling",
            fmt("side peaks at delta_q = %.3f / %.3f (expected 75 -/+ %.3f); Cd %.4f vs "
                "weak-coupling %.4f (%.2f%%)",
                lower, upper, gb, cd_exact, cd_qms, 100 * rel));
}

void criterion_12() {
    NetworkOptimum opt = optimize_network(4.9, 0.0);
    NetworkParams np;
    np.source.omega0 = opt.omega0;
    np.source.kappa = 1.0;
    np.gamma = 4.9;
    np.delta_q = opt.delta_q;
    NetworkReport rep = analyze_network(np);

    // Markov-limit consistency against the compact pipeline.
    NetworkParams mk;
    mk.source.delta0 = 2.0;
    mk.source.omega0 = 2.0;
    mk.source.kappa = 1.0;
    mk.gamma = 1e-3;
    mk.delta_q = mk.source.omega_tilde();
    double c12_markov = analyze_network(mk).c12;
    double cd_pipeline = detail::evaluate_point("bare-tls",
                                                {{"delta0", 2.0}, {"omega0", 2.0},
                                                 {"kappa", 1.0}, {"gamma0", 0.0}},
                                                {"Cd"}, 0)
                             .scalars.at("Cd");
    double markov_dev = std::abs(c12_markov - cd_pipeline);

    bool pass = std::abs(opt.concurrence - 0.25) <= 0.02 &&
                std::abs(opt.omega0 - 1.9) <= 0.2 && std::abs(opt.delta_q - 0.6) <= 0.1 &&
                std::abs(rep.c01 - 0.32) <= 0.02 && markov_dev <= 0.01;
    verdict(12, pass, "non-Markovian network optimum and Markov-limit consistency",
            fmt("C(rho12) = %.4f at omega0* = %.3f, delta_q* = %.3f; C(rho01) = %.4f; "
                "Markov |C12 - Cd| = %.4f",
                opt.concurrence, opt.omega0, opt.delta_q, rep.c01, markov_dev));
}

void criterion_13() {
    std::ostringstream log;
    bool pass = true;

    // Trace preservation and Hermiticity propagation under the generator.
    TlsParams t;
    t.delta0 = 0.7;
    t.omega0 = 1.3;
    t.kappa = 0.5;
    t.gamma0 = 0.2;
    Liouvillian liou = bare_tls(t);
    std::mt19937 rng(4242);
    std::normal_distribution<double> dist;
    double worst_tr = 0.0, worst_h = 0.0;
    for (int k = 0; k < 20; ++k) {
        Matrix g(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) g(i, j) = complexd(dist(rng), dist(rng));
        Matrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        Matrix img = unvec(Vector(liou.superop * vec(rho)), 2);
        worst_tr = std::max(worst_tr, std::abs(img.trace()));
        worst_h = std::max(worst_h, (img - Matrix(img.adjoint())).norm());
    }
    DensityMatrix ss = steady_state(liou);
    pass = pass && worst_tr < 1e-12 && worst_h < 1e-12 &&
           std::abs(ss.dense().trace().real() - 1.0) < 1e-12;
    log << "trace dev " << fmt("%.1e", worst_tr) << ", herm dev " << fmt("%.1e", worst_h);

    // QRT resolvent vs direct time-domain integration.
    Operator tm = pauli(Pauli::minus);
    complexd resolvent = laplace_correlation(liou, tm.dagger(), tm, t.omega_tilde());
    complexd timedom =
        time_domain_laplace(liou, tm.dagger(), tm, t.omega_tilde(), 60.0, 60000);
    double qrt_dev = std::abs(resolvent - timedom) / std::abs(resolvent);
    pass = pass && qrt_dev < 1e-4;
    log << "; QRT vs time domain rel dev " << fmt("%.1e", qrt_dev);

    // Lyapunov-type residual of the Gaussian steady moments.
    CavityParams cp = detail::cavity_from_params(qms_regime_params(0.9), "qms", 2);
    QuadraticModel qm = qms_quadratic(cp, true);
    SecondMoments mom = steady_second_moments(qm);
    DriftSystem dr = drift_from_model(qm);
    double lyap = (dr.drift * mom.first + dr.inhom).norm();
    for (const auto& e : detail::quad_basis())
        lyap = std::max(lyap,
                        std::abs(expectation(mom, generator_adjoint(qm,
                                                                    detail::from_exponents(e)))));
    pass = pass && lyap < 1e-10;
    log << "; moment residual " << fmt("%.1e", lyap);

    // Determinism and parallel-equals-serial of sweeps.
    SweepConfig cfg;
    cfg.model = "bare-tls";
    cfg.fixed = {{"kappa", 1.0}, {"gamma0", 0.0}};
    cfg.axes = {{"omega0", 1.0, 8.0, 4, "linear"}, {"delta0", 0.5, 4.0, 3, "log"}};
    cfg.outputs = {"Cd", "N1", "absM"};
    auto emit = [&](int workers) {
        std::ostringstream os;
        write_csv(run_sweep(cfg, workers), os);
        return os.str();
    };
    std::string s1 = emit(1);
    bool det = s1 == emit(1) && s1 == emit(4);
    pass = pass && det;
    log << "; sweeps " << (det ? "byte-identical" : "NOT deterministic");

    verdict(13, pass, "numerical hygiene suite", log.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/13 criteria passed (%.0f s)\n", 13 - failures, dt);
    return failures;
}
