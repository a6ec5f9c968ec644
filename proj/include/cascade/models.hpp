// models.hpp -- physical source models assembled as Liouvillians or quadratic coefficient sets.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "liouville.hpp"
#include "operators.hpp"

namespace cascade {

// Driven two-level emitter. delta0/omega0 set the drive detuning and Rabi
// frequency, kappa is the per-waveguide decay, gamma0 any extra decay and
// gamma_phi pure dephasing.
struct TlsParams {
    double delta0 = 0.0;
    double omega0 = 0.0;
    double gamma0 = 0.0;
    double kappa = 0.0;
    double gamma_phi = 0.0;

    double gamma_total() const { return gamma0 + 2.0 * kappa; }
    double omega_tilde() const { return std::hypot(delta0, omega0); }
    double theta() const { return std::atan2(omega0, delta0); }

    void validate() const {
        if (omega0 < 0.0)
            throw std::invalid_argument("TlsParams: omega0 must be >= 0");
        if (gamma0 < 0.0 || kappa < 0.0 || gamma_phi < 0.0)
            throw std::invalid_argument("TlsParams: rates must be >= 0");
    }
};

// TLS coupled to two filter cavities with Jaynes-Cummings coupling g.
// Cavity detunings are symmetric: delta_c1 = -delta_c2 = delta_c.
// tls.kappa is reinterpreted as the cavity decay rate.
struct CavityParams {
    TlsParams tls;
    double g = 0.0;
    double delta_c = 0.0;
    int n_fock = 3;

    double g_c() const { return g * std::pow(std::cos(tls.theta() / 2.0), 2); }
    double g_s() const { return g * std::pow(std::sin(tls.theta() / 2.0), 2); }
    double g_b() const {
        double c = std::cos(tls.theta());
        if (c < 0.0)
            throw std::domain_error("CavityParams: g_b requires theta <= pi/2");
        return g * std::sqrt(c);
    }

    void validate() const {
        tls.validate();
        if (g < 0.0)
            throw std::invalid_argument("CavityParams: g must be >= 0");
        if (n_fock < 2)
            throw std::invalid_argument("CavityParams: n_fock must be >= 2");
    }
};

// Incoherent rates of the dressed-basis master equation plus the
// sideband-cavity detuning dz = omega_tilde - delta_c.
struct DressedRates {
    double gz = 0.0;      // dephasing between dressed states
    double gp = 0.0;      // dressed raising rate
    double gm = 0.0;      // dressed lowering rate
    double gperp = 0.0;   // transverse decoherence, 2 gz + (gp + gm)/2
    double dz = 0.0;
};

inline DressedRates dressed_rates(const TlsParams& p, double delta_c = 0.0) {
    double th = p.theta();
    DressedRates r;
    r.gz = p.gamma0 * std::pow(std::sin(th), 2) / 4.0;
    r.gp = p.gamma0 * std::pow(std::sin(th / 2.0), 4);
    r.gm = p.gamma0 * std::pow(std::cos(th / 2.0), 4);
    r.gperp = 2.0 * r.gz + (r.gp + r.gm) / 2.0;
    r.dz = p.omega_tilde() - delta_c;
    return r;
}

// Effective emitter decay rates after adiabatic elimination of the cavities.
struct PurcellRates {
    double k1 = 0.0;
    double k2 = 0.0;
};

inline PurcellRates purcell_rates(const CavityParams& p) {
    double ot = p.tls.omega_tilde();
    double k = p.tls.kappa;
    double half_k2 = 0.25 * k * k;
    PurcellRates r;
    // cavity 1 sits at +delta_c near the +omega_tilde sideband, cavity 2 mirrors it
    r.k1 = p.g_c() * p.g_c() * k / (std::pow(p.delta_c - ot, 2) + half_k2);
    r.k2 = p.g_s() * p.g_s() * k / (std::pow(-p.delta_c + ot, 2) + half_k2);
    return r;
}

// Driven TLS emitting symmetrically into two waveguides.
inline Liouvillian bare_tls(const TlsParams& p) {
    p.validate();
    Operator tz = pauli(Pauli::z);
    Operator tx = pauli(Pauli::x);
    Operator tm = pauli(Pauli::minus);
    HilbertSpace sp = tz.space;
    Operator h = 0.5 * p.delta0 * tz + 0.5 * p.omega0 * tx;
    SpMat l = hamiltonian_term(h);
    l += dissipator(tm, p.gamma_total());
    if (p.gamma_phi > 0.0)
        l += dissipator(tz, p.gamma_phi / 2.0);
    Liouvillian liou{sp, l, {{tm, p.kappa}, {tm, p.kappa}}, "drive"};
    return liou;
}

// Rotation to the dressed basis: columns of U are the dressed states
// expressed in the bare basis. Returns U together with the rate bundle
// (dz evaluated at delta_c = 0).
inline std::pair<Operator, DressedRates> dressed_transform(const TlsParams& p) {
    double th = p.theta();
    double c = std::cos(th / 2.0), s = std::sin(th / 2.0);
    HilbertSpace sp{{2}};
    Matrix u(2, 2);
    // index 0 = ground, index 1 = excited
    u << c, s,
        -s, c;

    // sanity: the lowering operator must decompose as
    // c^2 tau~^- - s^2 tau~^+ + (sin th / 2) tau~^z in the dressed basis
    Matrix tm = pauli(Pauli::minus).dense();
    Matrix tm_dressed = u.adjoint() * tm * u;
    Matrix expect(2, 2);
    expect << -0.5 * std::sin(th), c * c,
        -s * s, 0.5 * std::sin(th);
    if ((tm_dressed - expect).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("dressed_transform: lowering-operator decomposition failed");

    Operator op(sp, SpMat(u.sparseView()));
    return {op, dressed_rates(p)};
}

namespace detail {

inline void check_superop_size(int dim, long max_superop_dim) {
    long d2 = static_cast<long>(dim) * dim;
    if (d2 > max_superop_dim)
        throw std::invalid_argument(
            "model: superoperator dimension " + std::to_string(d2) + " exceeds cap " +
            std::to_string(max_superop_dim) + "; reduce n_fock or raise the cap");
}

}  // namespace detail

// Full TLS + two-cavity model in the drive frame.
inline Liouvillian tls_two_cavities(const CavityParams& p, long max_superop_dim = 4000000) {
    p.validate();
    int nf = p.n_fock;
    HilbertSpace sp{{2, nf, nf}};
    detail::check_superop_size(sp.dim(), max_superop_dim);

    Operator tz = embed(pauli(Pauli::z), sp, 0);
    Operator tx = embed(pauli(Pauli::x), sp, 0);
    Operator tm = embed(pauli(Pauli::minus), sp, 0);
    Operator a1 = embed(destroy(nf), sp, 1);
    Operator a2 = embed(destroy(nf), sp, 2);

    Operator h = 0.5 * p.tls.delta0 * tz + 0.5 * p.tls.omega0 * tx;
    h = h + p.delta_c * (a1.dagger() * a1) + (-p.delta_c) * (a2.dagger() * a2);
    Operator jc = p.g * ((a1.dagger() + a2.dagger()) * tm);
    h = h + jc + jc.dagger();

    SpMat l = hamiltonian_term(h);
    l += dissipator(tm, p.tls.gamma0);
    l += dissipator(a1, p.tls.kappa);
    l += dissipator(a2, p.tls.kappa);
    if (p.tls.gamma_phi > 0.0)
        l += dissipator(tz, p.tls.gamma_phi / 2.0);
    return Liouvillian{sp, l, {{a1, p.tls.kappa}, {a2, p.tls.kappa}}, "drive"};
}

// Dressed-basis model after the rotating-wave approximation. In the "drive"
// frame the cavity splitting delta_c (n1 - n2) is kept; in the "cavity" frame
// it is absorbed into the rotation and the dressed splitting shrinks to dz.
inline Liouvillian dressed_rwa(const CavityParams& p, const std::string& frame = "drive",
                               long max_superop_dim = 4000000) {
    p.validate();
    if (frame != "drive" && frame != "cavity")
        throw std::invalid_argument("dressed_rwa: frame must be 'drive' or 'cavity'");
    int nf = p.n_fock;
    HilbertSpace sp{{2, nf, nf}};
    detail::check_superop_size(sp.dim(), max_superop_dim);

    DressedRates dr = dressed_rates(p.tls, p.delta_c);
    Operator tz = embed(pauli(Pauli::z), sp, 0);
    Operator tp = embed(pauli(Pauli::plus), sp, 0);
    Operator tm = embed(pauli(Pauli::minus), sp, 0);
    Operator a1 = embed(destroy(nf), sp, 1);
    Operator a2 = embed(destroy(nf), sp, 2);

    double splitting = (frame == "drive") ? p.tls.omega_tilde() : dr.dz;
    Operator h = 0.5 * splitting * tz;
    if (frame == "drive")
        h = h + p.delta_c * (a1.dagger() * a1) + (-p.delta_c) * (a2.dagger() * a2);
    Operator jc = (p.g_c() * a1.dagger() + (-p.g_s()) * a2) * tm;
    h = h + jc + jc.dagger();

    SpMat l = hamiltonian_term(h);
    l += dissipator(a1, p.tls.kappa);
    l += dissipator(a2, p.tls.kappa);
    l += dissipator(tz, dr.gz);
    l += dissipator(tp, dr.gp);
    l += dissipator(tm, dr.gm);
    return Liouvillian{sp, l, {{a1, p.tls.kappa}, {a2, p.tls.kappa}}, frame};
}

// Resolved-Purcell model: the cavities are adiabatically eliminated and the
// dressed TLS decays through both its lowering and raising operators.
// Port 2 couples through the raising operator.
inline Liouvillian resolved_purcell(const CavityParams& p) {
    p.validate();
    PurcellRates pr = purcell_rates(p);
    Operator tz = pauli(Pauli::z);
    Operator tp = pauli(Pauli::plus);
    Operator tm = pauli(Pauli::minus);
    HilbertSpace sp = tz.space;
    Operator h = 0.5 * p.tls.omega_tilde() * tz;
    SpMat l = hamiltonian_term(h);
    l += dissipator(tm, pr.k1);
    l += dissipator(tp, pr.k2);
    return Liouvillian{sp, l, {{tm, pr.k1}, {tp, pr.k2}}, "dressed"};
}

// Quadratic model for the two cavity modes obtained by adiabatic
// elimination of the TLS. Coefficient tables are 0-based over the two modes;
// raw[n][m][s1][s2] stores the underlying TLS spectral integrals with index
// 0 = lowering, 1 = raising.
struct QuadraticModel {
    double delta_c = 0.0;
    double kappa = 0.0;
    Eigen::Matrix2cd big_gamma = Eigen::Matrix2cd::Zero();   // dissipative pair rates
    Eigen::Matrix2cd g_pair = Eigen::Matrix2cd::Zero();      // coherent squeezing
    Eigen::Matrix2cd gamma_up = Eigen::Matrix2cd::Zero();    // heating
    Eigen::Matrix2cd gamma_down = Eigen::Matrix2cd::Zero();  // cooling
    Eigen::Matrix2cd delta_shift = Eigen::Matrix2cd::Zero(); // Lamb-type shifts
    std::array<std::array<std::array<std::array<complexd, 2>, 2>, 2>, 2> raw{};
    complexd eps = 0.0;  // residual coherent drive on each mode
};

// Adiabatic elimination of a strongly dissipative TLS: spectral integrals of
// the bare emitter feed a quadratic Lindbladian for the cavities. With
// secular = true the far-off-resonant terms (connecting the two cavity
// frequencies at +-2 delta_c) are dropped, which restores Lindblad form.
inline QuadraticModel qms_quadratic(const CavityParams& p, bool secular = true) {
    p.validate();
    Operator tz = pauli(Pauli::z);
    Operator tx = pauli(Pauli::x);
    Operator tm = pauli(Pauli::minus);
    Operator tp = pauli(Pauli::plus);
    HilbertSpace sp = tz.space;
    // only the intrinsic decay enters the eliminated emitter dynamics
    Operator h = 0.5 * p.tls.delta0 * tz + 0.5 * p.tls.omega0 * tx;
    SpMat l0 = hamiltonian_term(h);
    l0 += dissipator(tm, p.tls.gamma0);
    Liouvillian liou{sp, l0, {}, "drive"};

    QuadraticModel m;
    m.delta_c = p.delta_c;
    m.kappa = p.tls.kappa;

    const Operator* ladder[2] = {&tm, &tp};
    double dc[2] = {p.delta_c, -p.delta_c};
    double g2 = p.g * p.g;
    // Gamma^{n,m}_{s1,s2} = g^2 Int_0^inf <tbar^{s1}(t) tbar^{s2}(0)> e^{i s2 dc_m t};
    // the result does not depend on n because the coupling is mode-symmetric.
    for (int mdx = 0; mdx < 2; ++mdx)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
                double sgn2 = (s2 == 0) ? -1.0 : 1.0;
                complexd val =
                    g2 * laplace_correlation(liou, *ladder[s1], *ladder[s2], -sgn2 * dc[mdx]);
                for (int n = 0; n < 2; ++n)
                    m.raw[n][mdx][s1][s2] = val;
            }

    auto gam = [&m](int n, int mm, int s1, int s2) { return m.raw[n][mm][s1][s2]; };
    const int lo = 0, hi = 1;
    const complexd half_i(0.0, 0.5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.big_gamma(i, j) = std::conj(gam(i, j, lo, lo)) + gam(j, i, hi, hi);
            m.g_pair(i, j) = -half_i * (gam(j, i, hi, hi) - std::conj(gam(i, j, lo, lo)));
            m.gamma_up(i, j) = std::conj(gam(j, i, hi, lo)) + gam(i, j, hi, lo);
            m.gamma_down(i, j) = std::conj(gam(j, i, lo, hi)) + gam(i, j, lo, hi);
            m.delta_shift(i, j) = -half_i * (gam(i, j, lo, hi) + gam(i, j, hi, lo)) +
                                  half_i * std::conj(gam(j, i, lo, hi) + gam(j, i, hi, lo));
        }

    // the Hamiltonian tables must be Hermitian; the raw integrals satisfy the
    // relations only up to elimination-order corrections, so take the
    // Hermitian part explicitly (delta_shift already obeys it identically)
    m.g_pair = Eigen::Matrix2cd(0.5 * (m.g_pair + Eigen::Matrix2cd(m.g_pair.adjoint())));

    if (secular) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (i == j) {  // pair terms oscillate at +-2 delta_c on the diagonal
                    m.big_gamma(i, j) = 0.0;
                    m.g_pair(i, j) = 0.0;
                } else {  // single-particle cross terms oscillate likewise
                    m.gamma_up(i, j) = 0.0;
                    m.gamma_down(i, j) = 0.0;
                    m.delta_shift(i, j) = 0.0;
                }
            }
    }

    m.eps = p.g * expectation(steady_state(liou), tp);
    return m;
}

// Analytic weak-coupling rates in the Bogoliubov frame.
struct BogoliubovRates {
    double r_theta = 0.0;
    double tz_ss = 0.0;    // dressed-state population imbalance
    double g_tms = 0.0;
    double gamma_c = 0.0;  // cooling of the active Bogoliubov mode
    double gamma_h = 0.0;  // heating
    double gamma_theta = 0.0;
    double n_th = 0.0;
    bool diverging = false;  // theta -> pi/2: r_theta and n_th diverge
};

inline BogoliubovRates bogoliubov_weak_coupling(const CavityParams& p) {
    p.validate();
    double th = p.tls.theta();
    if (std::cos(th) < -1e-12)
        throw std::domain_error("bogoliubov_weak_coupling: theta > pi/2 (coupling turns imaginary)");
    DressedRates dr = dressed_rates(p.tls, p.delta_c);

    BogoliubovRates b;
    double t2 = std::pow(std::tan(th / 2.0), 2);
    b.diverging = t2 >= 1.0 - 1e-12;
    b.r_theta = b.diverging ? std::numeric_limits<double>::infinity() : std::atanh(t2);
    b.tz_ss = (dr.gp + dr.gm > 0.0) ? (dr.gp - dr.gm) / (dr.gp + dr.gm) : 0.0;
    double lorentz = 1.0 / (dr.dz * dr.dz + dr.gperp * dr.gperp);
    b.g_tms = p.g_c() * p.g_s() * dr.dz * lorentz * b.tz_ss;
    double gb2 = std::cos(th) >= 0.0 ? p.g * p.g * std::cos(th) : 0.0;
    b.gamma_c = gb2 * dr.gperp * lorentz * (1.0 - b.tz_ss);
    b.gamma_h = gb2 * dr.gperp * lorentz * (1.0 + b.tz_ss);
    b.gamma_theta = b.gamma_c - b.gamma_h;
    b.n_th = b.diverging ? std::numeric_limits<double>::infinity()
                         : b.gamma_h / std::max(b.gamma_theta, 1e-300);
    return b;
}

// Closed-form reservoir parameters of the weak-coupling model, exact plus the
// leading corrections in kappa / gamma_theta.
struct QmsClosedForm {
    double n1 = 0.0;
    double n2 = 0.0;
    double m = 0.0;
    double r_eff_first_order = 0.0;
    double mu_eff_first_order = 0.0;
};

inline QmsClosedForm qms_closed_form(double r_theta, double kappa, double gamma_theta) {
    if (gamma_theta <= 0.0)
        throw std::invalid_argument("qms_closed_form: gamma_theta must be > 0");
    QmsClosedForm out;
    double ratio = kappa / gamma_theta;
    out.n1 = out.n2 = std::pow(std::sinh(2.0 * r_theta), 2) / (1.0 + ratio);
    out.m = std::sinh(4.0 * r_theta) / (2.0 * (1.0 + ratio));
    out.r_eff_first_order = 2.0 * r_theta - 0.5 * ratio * std::sinh(4.0 * r_theta);
    out.mu_eff_first_order = 1.0 - 4.0 * ratio * std::pow(std::sinh(2.0 * r_theta), 2);
    return out;
}

}  // namespace cascade
