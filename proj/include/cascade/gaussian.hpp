// gaussian.hpp -- exact treatment of quadratic Lindbladians via moment equations.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "boson_poly.hpp"
#include "liouville.hpp"
#include "models.hpp"

namespace cascade {

// First-moment dynamics d<v>/dt = drift * <v> + inhom for
// v = (<a1>, <a1^dag>, <a2>, <a2^dag>).
struct DriftSystem {
    Eigen::Matrix4cd drift = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd inhom = Eigen::Vector4cd::Zero();
};

// Steady first and second moments of the two cavity modes.
struct SecondMoments {
    Eigen::Vector4cd first = Eigen::Vector4cd::Zero();  // (<a1>, <a1^dag>, <a2>, <a2^dag>)
    Eigen::Matrix2cd aa = Eigen::Matrix2cd::Zero();     // <a_i a_j>
    Eigen::Matrix2cd nmat = Eigen::Matrix2cd::Zero();   // <a_i^dag a_j>
};

namespace detail {

// ladder operator c_k for the moment vector ordering above
inline BosonPoly moment_op(int k) { return BosonPoly::ladder(k / 2, k % 2 == 0 ? false : true); }

// (A, B, w) contributes w (A rho B - {BA, rho}/2) to the master equation
struct DissipativeTerm {
    BosonPoly a, b;
    complexd w;
};

struct GeneratorTerms {
    BosonPoly h;  // Hamiltonian including any residual linear drive
    std::vector<DissipativeTerm> diss;
};

inline GeneratorTerms generator_terms(const QuadraticModel& m) {
    GeneratorTerms g;
    BosonPoly a[2] = {BosonPoly::ladder(0, false), BosonPoly::ladder(1, false)};
    BosonPoly ad[2] = {BosonPoly::ladder(0, true), BosonPoly::ladder(1, true)};

    g.h = complexd(m.delta_c) * (ad[0] * a[0]) + complexd(-m.delta_c) * (ad[1] * a[1]);
    for (int i = 0; i < 2; ++i) {
        g.h += m.eps * a[i] + std::conj(m.eps) * ad[i];
        for (int j = 0; j < 2; ++j) {
            g.h += m.delta_shift(i, j) * (ad[i] * a[j]);
            g.h += m.g_pair(i, j) * (a[i] * a[j]) + std::conj(m.g_pair(i, j)) * (ad[i] * ad[j]);
        }
    }
    for (int i = 0; i < 2; ++i) {
        g.diss.push_back({a[i], ad[i], m.kappa});
        for (int j = 0; j < 2; ++j) {
            g.diss.push_back({a[i], a[j], m.big_gamma(i, j)});
            g.diss.push_back({ad[j], ad[i], std::conj(m.big_gamma(i, j))});
            g.diss.push_back({ad[i], a[j], m.gamma_up(i, j)});
            g.diss.push_back({a[i], ad[j], m.gamma_down(i, j)});
        }
    }
    return g;
}

}  // namespace detail

// Adjoint (Heisenberg) action of the quadratic Lindbladian on an observable:
// d<O>/dt = <generator_adjoint(m, O)>.
inline BosonPoly generator_adjoint(const QuadraticModel& m, const BosonPoly& o) {
    detail::GeneratorTerms g = detail::generator_terms(m);
    BosonPoly out = complexd(0.0, 1.0) * commutator(g.h, o);
    for (const auto& t : g.diss) {
        if (t.w == complexd(0.0)) continue;
        BosonPoly ba = t.b * t.a;
        out += t.w * (t.b * o * t.a - complexd(0.5) * (ba * o + o * ba));
    }
    return out;
}

inline DriftSystem drift_from_model(const QuadraticModel& m) {
    DriftSystem d;
    for (int k = 0; k < 4; ++k) {
        BosonPoly rhs = generator_adjoint(m, detail::moment_op(k));
        if (rhs.degree() > 1)
            throw std::logic_error("drift_from_model: generator is not quadratic");
        d.inhom(k) = rhs.coeff({0, 0, 0, 0});
        for (int l = 0; l < 4; ++l) {
            BosonExponents e{0, 0, 0, 0};
            e[(l / 2) * 2 + (l % 2 == 0 ? 1 : 0)] = 1;
            d.drift(k, l) = rhs.coeff(e);
        }
    }
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(d.drift);
    for (int k = 0; k < 4; ++k)
        if (es.eigenvalues()(k).real() >= 0.0) {
            std::ostringstream msg;
            msg << "drift_from_model: unstable drift, eigenvalue " << es.eigenvalues()(k).real()
                << (es.eigenvalues()(k).imag() >= 0 ? "+" : "") << es.eigenvalues()(k).imag()
                << "i has nonnegative real part";
            throw std::runtime_error(msg.str());
        }
    return d;
}

namespace detail {

// basis of the ten second-order monomials, normal ordered
inline const std::array<BosonExponents, 10>& quad_basis() {
    static const std::array<BosonExponents, 10> basis = {{
        {0, 2, 0, 0},  // a1 a1
        {0, 1, 0, 1},  // a1 a2
        {0, 0, 0, 2},  // a2 a2
        {1, 1, 0, 0},  // a1^dag a1
        {1, 0, 0, 1},  // a1^dag a2
        {0, 1, 1, 0},  // a2^dag a1
        {0, 0, 1, 1},  // a2^dag a2
        {2, 0, 0, 0},  // a1^dag a1^dag
        {1, 0, 1, 0},  // a1^dag a2^dag
        {0, 0, 2, 0},  // a2^dag a2^dag
    }};
    return basis;
}

inline BosonPoly from_exponents(const BosonExponents& e) {
    BosonPoly p = BosonPoly::one();
    for (int rep = 0; rep < e[0]; ++rep) p = p * BosonPoly::ladder(0, true);
    for (int rep = 0; rep < e[1]; ++rep) p = p * BosonPoly::ladder(0, false);
    for (int rep = 0; rep < e[2]; ++rep) p = p * BosonPoly::ladder(1, true);
    for (int rep = 0; rep < e[3]; ++rep) p = p * BosonPoly::ladder(1, false);
    return p;
}

inline int first_index(const BosonExponents& e) {
    // map a degree-1 exponent array to the moment-vector index, or -1
    for (int l = 0; l < 4; ++l) {
        BosonExponents f{0, 0, 0, 0};
        f[(l / 2) * 2 + (l % 2 == 0 ? 1 : 0)] = 1;
        if (e == f) return l;
    }
    return -1;
}

inline int quad_index(const BosonExponents& e) {
    const auto& basis = quad_basis();
    for (int r = 0; r < 10; ++r)
        if (basis[r] == e) return r;
    return -1;
}

}  // namespace detail

// Expectation of a polynomial of degree <= 2 from the stored moments.
inline complexd expectation(const SecondMoments& s, const BosonPoly& p) {
    static const int aa_i[10] = {0, 0, 1, 0, 0, 1, 1, 0, 0, 1};
    static const int aa_j[10] = {0, 1, 1, 0, 1, 0, 1, 0, 1, 1};
    complexd out = 0.0;
    for (const auto& [e, c] : p.terms) {
        int deg = e[0] + e[1] + e[2] + e[3];
        if (deg == 0) {
            out += c;
        } else if (deg == 1) {
            out += c * s.first(detail::first_index(e));
        } else if (deg == 2) {
            int r = detail::quad_index(e);
            if (r < 0) throw std::invalid_argument("expectation: monomial outside moment basis");
            complexd v;
            if (r < 3)
                v = s.aa(aa_i[r], aa_j[r]);
            else if (r < 7)
                v = s.nmat(r == 3 ? 0 : (r == 4 ? 0 : (r == 5 ? 1 : 1)),
                           r == 3 ? 0 : (r == 4 ? 1 : (r == 5 ? 0 : 1)));
            else
                v = std::conj(s.aa(aa_i[r], aa_j[r]));
            out += c * v;
        } else {
            throw std::invalid_argument("expectation: polynomial degree exceeds 2");
        }
    }
    return out;
}

inline SecondMoments steady_second_moments(const QuadraticModel& m) {
    DriftSystem d = drift_from_model(m);
    SecondMoments s;
    s.first = d.drift.fullPivLu().solve(-d.inhom);

    const auto& basis = detail::quad_basis();
    Eigen::Matrix<complexd, 10, 10> a = Eigen::Matrix<complexd, 10, 10>::Zero();
    Eigen::Matrix<complexd, 10, 1> rhs = Eigen::Matrix<complexd, 10, 1>::Zero();
    for (int r = 0; r < 10; ++r) {
        BosonPoly dot = generator_adjoint(m, detail::from_exponents(basis[r]));
        for (const auto& [e, c] : dot.terms) {
            int deg = e[0] + e[1] + e[2] + e[3];
            if (deg == 0) {
                rhs(r) -= c;
            } else if (deg == 1) {
                rhs(r) -= c * s.first(detail::first_index(e));
            } else {
                int q = detail::quad_index(e);
                if (q < 0)
                    throw std::logic_error("steady_second_moments: generator is not quadratic");
                a(r, q) += c;
            }
        }
    }
    Eigen::FullPivLU<Eigen::Matrix<complexd, 10, 10>> lu(a);
    if (!lu.isInvertible())
        throw std::runtime_error("steady_second_moments: moment system is singular");
    Eigen::Matrix<complexd, 10, 1> x = lu.solve(rhs);

    s.aa(0, 0) = x(0);
    s.aa(0, 1) = s.aa(1, 0) = x(1);
    s.aa(1, 1) = x(2);
    s.nmat(0, 0) = x(3);
    s.nmat(0, 1) = x(4);
    s.nmat(1, 0) = x(5);
    s.nmat(1, 1) = x(6);

    for (int i = 0; i < 2; ++i)
        if (s.nmat(i, i).real() < -1e-10 || std::abs(s.nmat(i, i).imag()) > 1e-10)
            throw std::runtime_error(
                "steady_second_moments: unphysical occupation; if the model was built without "
                "the secular approximation, enable the secular flag");
    return s;
}

// Covariance of the quadratures (x1, p1, x2, p2) with x = (a + a^dag)/sqrt(2),
// p = -i(a - a^dag)/sqrt(2); vacuum variance 1/2.
inline Eigen::Matrix4d covariance_matrix(const SecondMoments& s) {
    // centered ladder second moments <c_k c_l> for c = (a1, a1^dag, a2, a2^dag)
    Eigen::Matrix4cd sc = Eigen::Matrix4cd::Zero();
    auto centered_aa = [&](int i, int j) {
        return s.aa(i, j) - s.first(2 * i) * s.first(2 * j);
    };
    auto centered_n = [&](int i, int j) {
        return s.nmat(i, j) - s.first(2 * i + 1) * s.first(2 * j);
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            sc(2 * i, 2 * j) = centered_aa(i, j);
            sc(2 * i + 1, 2 * j) = centered_n(i, j);
            sc(2 * i, 2 * j + 1) = centered_n(j, i) + (i == j ? 1.0 : 0.0);
            sc(2 * i + 1, 2 * j + 1) = std::conj(centered_aa(i, j));
        }

    Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
    const double rt = 1.0 / std::sqrt(2.0);
    const complexd mi(0.0, -1.0);
    for (int mode = 0; mode < 2; ++mode) {
        w(2 * mode, 2 * mode) = rt;
        w(2 * mode, 2 * mode + 1) = rt;
        w(2 * mode + 1, 2 * mode) = mi * rt;
        w(2 * mode + 1, 2 * mode + 1) = -mi * rt;
    }
    Eigen::Matrix4cd sym = w * (0.5 * (sc + sc.transpose())) * w.transpose();
    if (sym.imag().cwiseAbs().maxCoeff() > 1e-9)
        throw std::runtime_error("covariance_matrix: covariance has a spurious imaginary part");
    return sym.real();
}

namespace detail {

inline void check_uncertainty(const Eigen::Matrix4d& sigma) {
    Eigen::Matrix4cd omega = Eigen::Matrix4cd::Zero();
    for (int mode = 0; mode < 2; ++mode) {
        omega(2 * mode, 2 * mode + 1) = 1.0;
        omega(2 * mode + 1, 2 * mode) = -1.0;
    }
    Eigen::Matrix4cd test = sigma.cast<complexd>() + complexd(0.0, 0.5) * omega;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(test);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw std::runtime_error(
            "covariance violates the bosonic uncertainty relation; if the model was built "
            "without the secular approximation, enable the secular flag");
}

}  // namespace detail

// Logarithmic negativity of the two-mode Gaussian state.
inline double log_negativity(const SecondMoments& s) {
    Eigen::Matrix4d sigma = covariance_matrix(s);
    detail::check_uncertainty(sigma);
    Eigen::Matrix2d a = sigma.topLeftCorner<2, 2>();
    Eigen::Matrix2d b = sigma.bottomRightCorner<2, 2>();
    Eigen::Matrix2d c = sigma.topRightCorner<2, 2>();
    double dtilde = a.determinant() + b.determinant() - 2.0 * c.determinant();
    double det = sigma.determinant();
    double disc = dtilde * dtilde - 4.0 * det;
    if (disc < 0.0) disc = 0.0;  // numerically touching symplectic eigenvalues
    double nu2 = 0.5 * (dtilde - std::sqrt(disc));
    if (nu2 <= 0.0)
        throw std::runtime_error("log_negativity: covariance is not physical");
    double nu = std::sqrt(nu2);
    return std::max(0.0, -std::log2(2.0 * nu));
}

// Ladder labels for the spectrum interface.
enum class Ladder { a1, a1d, a2, a2d };

namespace detail {

inline int ladder_index(Ladder l) { return static_cast<int>(l); }

// steady correlation <c_k_bar B_bar> for all k as the resolvent seed
inline Eigen::Vector4cd qrt_seed(const SecondMoments& s, Ladder b) {
    Eigen::Vector4cd x0;
    BosonPoly pb = moment_op(ladder_index(b));
    complexd b_mean = s.first(ladder_index(b));
    for (int k = 0; k < 4; ++k) {
        BosonPoly prod = moment_op(k) * pb;
        x0(k) = expectation(s, prod) - s.first(k) * b_mean;
    }
    return x0;
}

}  // namespace detail

// One-sided Laplace transform of <A_bar(tau) B_bar(0)> at probe detuning
// delta, computed from the 4x4 resolvent of the drift matrix.
inline complexd gaussian_laplace_spectrum(const QuadraticModel& m, Ladder a, Ladder b,
                                          double delta) {
    DriftSystem d = drift_from_model(m);
    SecondMoments s = steady_second_moments(m);
    Eigen::Matrix4cd res = complexd(0.0, delta) * Eigen::Matrix4cd::Identity() - d.drift;
    Eigen::Vector4cd y = res.fullPivLu().solve(detail::qrt_seed(s, b));
    return y(detail::ladder_index(a));
}

// Full correlation set of the quadratic model at the two probe detunings,
// with the same conventions and sqrt(kappa_i kappa_j) prefactors as the exact
// Liouvillian path.
inline CorrelationSet gaussian_correlation_set(const QuadraticModel& m, double delta_q1,
                                               double delta_q2) {
    DriftSystem d = drift_from_model(m);
    SecondMoments s = steady_second_moments(m);

    CorrelationSet cs;
    cs.delta_q1 = delta_q1;
    cs.delta_q2 = delta_q2;
    cs.eps1 = std::sqrt(m.kappa) * s.first(0);
    cs.eps2 = std::sqrt(m.kappa) * s.first(2);

    const Ladder ann[2] = {Ladder::a1, Ladder::a2};
    const double dq[2] = {delta_q1, delta_q2};
    for (int j = 0; j < 2; ++j) {
        // one resolvent solve per probe: component 2i is <a_i_bar(tau) a_j_bar>,
        // component 2i+1 is <a_i^dag_bar(tau) a_j_bar>
        Eigen::Matrix4cd res =
            complexd(0.0, dq[j]) * Eigen::Matrix4cd::Identity() - d.drift;
        Eigen::Vector4cd y = res.fullPivLu().solve(detail::qrt_seed(s, ann[j]));
        for (int i = 0; i < 2; ++i) {
            cs.c_mm(i, j) = m.kappa * y(2 * i);
            cs.c_mp(i, j) = m.kappa * y(2 * i + 1);
        }
    }
    return cs;
}

}  // namespace cascade
