#pragma once

// Effective two-mode-squeezed reservoir parameters, distributable concurrence,
// and the reduced two-qubit master equations driven by source correlation
// spectra.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include "liouville.hpp"
#include "operators.hpp"

namespace cascade {

// Thermal/squeezing coefficients of the reduced qubit master equation.
struct TMSParams {
    double n1 = 0.0;
    double n2 = 0.0;
    complexd m{0.0, 0.0};

    double theta() const { return std::arg(m); }

    // |M|^2 <= N1 N2 + min(N1, N2) holds for any physical Gaussian state;
    // spectra-derived values may violate it slightly, so this is a flag only.
    bool physical(double tol = 1e-8) const {
        double bound = n1 * n2 + std::min(n1, n2);
        return std::norm(m) <= bound + tol;
    }

    void validate() const {
        if (n1 < -1e-10 || n2 < -1e-10)
            throw std::invalid_argument("TMSParams: negative occupation");
    }
};

// Squeezing strength and purity of the equivalent two-mode reservoir state.
struct EffectiveTMS {
    double r_eff = 0.0;
    double mu_eff = 1.0;
    double theta = 0.0;
};

// Requires symmetric probes delta_q1 = -delta_q2; away from that regime the
// compact thermal/squeezing form does not apply and the full master equation
// must be used instead.
inline TMSParams tms_from_spectra(const CorrelationSet& c) {
    double scale = std::max({1.0, std::abs(c.delta_q1), std::abs(c.delta_q2)});
    if (std::abs(c.delta_q1 + c.delta_q2) > 1e-9 * scale)
        throw std::invalid_argument(
            "tms_from_spectra: requires delta_q1 = -delta_q2; use qubit_me_general "
            "for asymmetric detunings");
    TMSParams p;
    p.n1 = 2.0 * c.c_mp(0, 0).real();
    p.n2 = 2.0 * c.c_mp(1, 1).real();
    p.m = c.c_mm(0, 1) + c.c_mm(1, 0);
    p.validate();
    return p;
}

inline EffectiveTMS effective_tms(const TMSParams& p) {
    p.validate();
    double n1 = std::max(p.n1, 0.0);
    double n2 = std::max(p.n2, 0.0);
    double am = std::abs(p.m);
    double arg = 2.0 * am / (n1 + n2 + 1.0);
    if (arg >= 1.0)
        throw std::domain_error("effective_tms: unphysical spectra, 2|M| >= N1+N2+1");
    double denom = (1.0 + 2.0 * n1) * (1.0 + 2.0 * n2) - 4.0 * am * am;
    if (denom <= 0.0)
        throw std::domain_error("effective_tms: unphysical spectra, purity denominator <= 0");

    EffectiveTMS e;
    e.r_eff = 0.5 * std::atanh(arg);
    e.mu_eff = 1.0 / denom;
    e.theta = std::arg(p.m);
    if (e.mu_eff > 1.0) {
        // Finite truncation can push the purity marginally above 1; clip pure
        // roundoff but reject anything larger.
        if (e.mu_eff - 1.0 < 1e-6)
            e.mu_eff = 1.0;
        else
            throw std::domain_error("effective_tms: unphysical spectra, mu_eff > 1");
    }
    return e;
}

inline double concurrence_distributable(const EffectiveTMS& e) {
    double c = std::abs(e.mu_eff * std::tanh(2.0 * e.r_eff)) - 0.5 * (1.0 - e.mu_eff);
    return std::max(c, 0.0);
}

namespace detail {

// Two-qubit sigma^+/- embedded on site `site` of a 2x2 space.
inline Operator qubit_op(const HilbertSpace& space, int site, Pauli kind) {
    return embed(pauli(kind), space, static_cast<std::size_t>(site));
}

// Superoperator for the double commutator [[rho, P], Q].
inline SpMat double_commutator(const Operator& p, const Operator& q) {
    Operator pq = p * q;
    Operator qp = q * p;
    return SpMat(right_mult(pq) - sandwich(p.data, q.data) - sandwich(q.data, p.data) +
                 left_mult(qp));
}

}  // namespace detail

// Compact reduced master equation for two target qubits coupled to a thermal
// two-mode-squeezed reservoir, valid in the frame rotating with the symmetric
// qubit detunings.
inline Liouvillian qubit_me_resonant(const TMSParams& p, double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("qubit_me_resonant: gamma must be positive");
    p.validate();

    HilbertSpace space{{2, 2}};
    Operator sm1 = detail::qubit_op(space, 0, Pauli::minus);
    Operator sm2 = detail::qubit_op(space, 1, Pauli::minus);
    Operator sp1 = detail::qubit_op(space, 0, Pauli::plus);
    Operator sp2 = detail::qubit_op(space, 1, Pauli::plus);

    double n1 = std::max(p.n1, 0.0);
    double n2 = std::max(p.n2, 0.0);
    SpMat l = SpMat(dissipator(sm1, gamma * (n1 + 1.0)) + dissipator(sp1, gamma * n1) +
                    dissipator(sm2, gamma * (n2 + 1.0)) + dissipator(sp2, gamma * n2));
    complexd m = p.m;
    l -= SpMat(generalized_dissipator(sp1, sp2, gamma * m) +
               generalized_dissipator(sp2, sp1, gamma * m) +
               generalized_dissipator(sm2, sm1, gamma * std::conj(m)) +
               generalized_dissipator(sm1, sm2, gamma * std::conj(m)));
    return Liouvillian(space, l, {}, "qubit-rotating");
}

// Lamb-shifted qubit detunings recorded by qubit_me_general.
struct LambShifts {
    double delta_q1 = 0.0;
    double delta_q2 = 0.0;
};

// Full Born-Markov master equation for the two target qubits: coherent drive
// by the mean emitted fields plus all sixteen correlator double-commutator
// terms evaluated at the stated detunings. With `resonant_frame` set, only the
// contributions that are static in the frame rotating with symmetric detunings
// delta_q1 = -delta_q2 are kept (and the qubit Hamiltonian is dropped);
// otherwise every term is kept static in the drive frame.
inline Liouvillian qubit_me_general(const CorrelationSet& c, double gamma1, double gamma2,
                                    bool resonant_frame = false,
                                    LambShifts* shifts = nullptr) {
    if (gamma1 <= 0.0 || gamma2 <= 0.0)
        throw std::invalid_argument("qubit_me_general: decay rates must be positive");

    HilbertSpace space{{2, 2}};
    Operator sm[2] = {detail::qubit_op(space, 0, Pauli::minus),
                      detail::qubit_op(space, 1, Pauli::minus)};
    Operator sp[2] = {detail::qubit_op(space, 0, Pauli::plus),
                      detail::qubit_op(space, 1, Pauli::plus)};
    Operator sz[2] = {detail::qubit_op(space, 0, Pauli::z),
                      detail::qubit_op(space, 1, Pauli::z)};
    double gam[2] = {gamma1, gamma2};

    Eigen::Matrix2cd cmat[2][2];  // [s1][s2], index 0 = minus, 1 = plus
    cmat[0][0] = c.c_mm;
    cmat[0][1] = c.c_mp;
    cmat[1][1] = c.c_pp();
    cmat[1][0] = c.c_pm();

    LambShifts ls;
    ls.delta_q1 = c.delta_q1 + 2.0 * gamma1 * c.c_mp(0, 0).imag();
    ls.delta_q2 = c.delta_q2 + 2.0 * gamma2 * c.c_mp(1, 1).imag();
    if (shifts) *shifts = ls;

    // Bare qubit evolution: spontaneous decay into the waveguides.
    SpMat l = SpMat(dissipator(sm[0], gamma1) + dissipator(sm[1], gamma2));

    if (!resonant_frame) {
        Operator h = ls.delta_q1 * 0.5 * sz[0] + ls.delta_q2 * 0.5 * sz[1];
        l += hamiltonian_term(h);
        complexd eps[2] = {c.eps1, c.eps2};
        for (int i = 0; i < 2; ++i) {
            Operator drive = std::conj(eps[i]) * sm[i] - eps[i] * sp[i];
            l += SpMat(std::sqrt(gam[i]) * (left_mult(drive) - right_mult(drive)));
        }
    }

    double dq[2] = {c.delta_q1, c.delta_q2};
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            double sign1 = s1 == 0 ? -1.0 : 1.0;
            double sign2 = s2 == 0 ? -1.0 : 1.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    if (resonant_frame &&
                        std::abs(sign1 * dq[j] + sign2 * dq[i]) >
                            1e-9 * std::max(1.0, std::abs(dq[0])))
                        continue;
                    // sigma^{-s}: minus for s = +, plus for s = -.
                    const Operator& p_op = s1 == 1 ? sm[j] : sp[j];
                    const Operator& q_op = s2 == 1 ? sm[i] : sp[i];
                    complexd w = sign1 * sign2 * std::sqrt(gam[i] * gam[j]) * cmat[s1][s2](i, j);
                    l += SpMat(w * detail::double_commutator(p_op, q_op));
                }
            }
        }
    }
    return Liouvillian(space, l, {}, resonant_frame ? "qubit-rotating" : "drive");
}

// Standard two-qubit concurrence from the spin-flipped spectrum.
inline double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.space().dims != std::vector<int>{2, 2})
        throw std::invalid_argument("wootters_concurrence: state must live on 2x2");
    Matrix r = rho.dense();
    if ((r - r.adjoint()).norm() > 1e-8 || std::abs(r.trace() - 1.0) > 1e-8)
        throw std::invalid_argument("wootters_concurrence: invalid density matrix");

    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    Matrix rr = r * yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<Matrix> es(rr, false);
    std::array<double, 4> lam{};
    for (int k = 0; k < 4; ++k)
        lam[static_cast<std::size_t>(k)] = std::sqrt(std::max(es.eigenvalues()(k).real(), 0.0));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace cascade
