#pragma once

// Full finite-gamma cascaded network: driven source TLS plus two target
// qubits in a single 2x2x2 Hilbert space, with pairwise entanglement
// analysis and per-gamma optimization of the drive and qubit detuning.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "entangle.hpp"
#include "liouville.hpp"
#include "models.hpp"
#include "operators.hpp"
#include "optimize.hpp"

namespace cascade {

struct NetworkParams {
    TlsParams source;
    double gamma = 0.0;    // symmetric target-qubit decay, gamma_1 = gamma_2
    double delta_q = 0.0;  // symmetric detuning, delta_q1 = -delta_q2 = delta_q

    void validate() const {
        source.validate();
        if (gamma < 0.0) throw std::invalid_argument("NetworkParams: gamma must be >= 0");
    }
};

struct NetworkReport {
    double c01 = 0.0, c02 = 0.0, c12 = 0.0;
    complexd coh_gg_ee_12{}, coh_eg_ge_12{};
    complexd coh_gg_ee_01{}, coh_eg_ge_01{};
};

// Source TLS at position 0, target qubits at positions 1 and 2; each
// waveguide carries one unidirectional source-port -> qubit coupling.
inline Liouvillian build_network(const NetworkParams& p) {
    p.validate();
    HilbertSpace space{{2, 2, 2}};

    Operator tz = embed(pauli(Pauli::z), space, 0);
    Operator tx = embed(pauli(Pauli::x), space, 0);
    Operator tm = embed(pauli(Pauli::minus), space, 0);
    Operator sm[2] = {embed(pauli(Pauli::minus), space, 1),
                      embed(pauli(Pauli::minus), space, 2)};
    Operator sz[2] = {embed(pauli(Pauli::z), space, 1), embed(pauli(Pauli::z), space, 2)};

    const TlsParams& s = p.source;
    Operator h = 0.5 * s.delta0 * tz + 0.5 * s.omega0 * tx + 0.5 * p.delta_q * sz[0] -
                 0.5 * p.delta_q * sz[1];
    SpMat l = SpMat(hamiltonian_term(h) + dissipator(tm, s.gamma0) +
                    dissipator(tm, s.kappa) + dissipator(tm, s.kappa));
    if (s.gamma_phi > 0.0) l += dissipator(embed(pauli(Pauli::z), space, 0), 0.5 * s.gamma_phi);
    for (int i = 0; i < 2; ++i) {
        l += dissipator(sm[i], p.gamma);
        l += cascaded_coupling(tm, sm[i], s.kappa, p.gamma);
    }
    std::vector<JumpPort> ports = {{sm[0], p.gamma}, {sm[1], p.gamma}};
    return Liouvillian(space, l, ports, "drive");
}

inline NetworkReport analyze_network(const NetworkParams& p) {
    DensityMatrix rho = steady_state(build_network(p));
    DensityMatrix r01 = partial_trace(rho, {0, 1});
    DensityMatrix r02 = partial_trace(rho, {0, 2});
    DensityMatrix r12 = partial_trace(rho, {1, 2});

    NetworkReport out;
    out.c01 = wootters_concurrence(r01);
    out.c02 = wootters_concurrence(r02);
    out.c12 = wootters_concurrence(r12);
    // Basis index 2*i + j with 0 = ground: gg = 0, ge = 1, eg = 2, ee = 3.
    out.coh_gg_ee_12 = r12.dense()(0, 3);
    out.coh_eg_ge_12 = r12.dense()(2, 1);
    out.coh_gg_ee_01 = r01.dense()(0, 3);
    out.coh_eg_ge_01 = r01.dense()(2, 1);
    return out;
}

struct NetworkOptimum {
    double omega0 = 0.0;
    double delta_q = 0.0;
    double concurrence = 0.0;
    int evaluations = 0;
    bool boundary = false;
};

// Maximize C(rho_12) over (Omega0, delta_q) at fixed gamma/kappa and drive
// detuning: deterministic 25x25 coarse grid over Omega0/kappa in [0.1, 6],
// delta_q/kappa in [0, 3], then simplex refinement to 1e-3 relative, all
// within a fixed budget of steady-state solves.
inline NetworkOptimum optimize_network(double gamma_over_kappa, double delta0,
                                       double kappa = 1.0) {
    if (gamma_over_kappa < 0.0)
        throw std::invalid_argument("optimize_network: gamma/kappa must be >= 0");

    auto objective = [&](double omega0, double delta_q) {
        NetworkParams p;
        p.source.delta0 = delta0;
        p.source.omega0 = omega0;
        p.source.gamma0 = 0.0;
        p.source.kappa = kappa;
        p.gamma = gamma_over_kappa * kappa;
        p.delta_q = delta_q;
        return analyze_network(p).c12;
    };

    const double om_lo = 0.1 * kappa, om_hi = 6.0 * kappa;
    const double dq_lo = 0.0, dq_hi = 3.0 * kappa;
    int evals = 0;
    double best = -1.0, best_om = om_lo, best_dq = dq_lo;
    for (int a = 0; a < 25; ++a) {
        for (int b = 0; b < 25; ++b) {
            double om = om_lo + (om_hi - om_lo) * a / 24.0;
            double dq = dq_lo + (dq_hi - dq_lo) * b / 24.0;
            double c = objective(om, dq);
            ++evals;
            if (c > best) {
                best = c;
                best_om = om;
                best_dq = dq;
            }
        }
    }

    OptimumRecord rec = nelder_mead(
        [&](const std::vector<double>& x) { return objective(x[0], x[1]); },
        {best_om, best_dq}, {om_lo, dq_lo}, {om_hi, dq_hi}, 1e-6, 1200 - evals);
    if (rec.value >= best) {
        best = rec.value;
        best_om = rec.x[0];
        best_dq = rec.x[1];
    }
    evals += rec.evaluations;

    // The surface is extremely flat near the optimum, so the simplex can stall
    // with an accurate value but sloppy coordinates; polish each coordinate by
    // golden-section over a local bracket.
    for (int round = 0; round < 2; ++round) {
        OptimumRecord g1 = golden_section(
            [&](double om) { return objective(om, best_dq); },
            std::max(om_lo, best_om - 0.5 * kappa), std::min(om_hi, best_om + 0.5 * kappa),
            1e-4 * kappa);
        best_om = g1.x[0];
        OptimumRecord g2 = golden_section(
            [&](double dq) { return objective(best_om, dq); },
            std::max(dq_lo, best_dq - 0.5 * kappa), std::min(dq_hi, best_dq + 0.5 * kappa),
            1e-4 * kappa);
        best_dq = g2.x[0];
        best = std::max(best, std::max(g1.value, g2.value));
        evals += g1.evaluations + g2.evaluations;
    }

    NetworkOptimum out;
    out.omega0 = best_om;
    out.delta_q = best_dq;
    out.concurrence = best;
    out.evaluations = evals;
    out.boundary = rec.boundary;
    return out;
}

}  // namespace cascade
