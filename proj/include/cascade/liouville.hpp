// liouville.hpp — Lindblad superoperators, stationary states and
// Laplace-transformed two-time correlation functions (quantum regression).
//
// Vectorization is column-stacking throughout: vec(A X B) = (B^T (x) A) vec(X).

#pragma once

#include <array>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseLU>

#include "cascade/operators.hpp"

namespace cascade {

inline Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, int d) {
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

// Superoperator for rho -> A rho B.
inline SpMat sandwich(const SpMat& a, const SpMat& b) {
    return kron(SpMat(b.transpose()), a);
}

inline SpMat left_mult(const Operator& a) {
    SpMat id(a.dim(), a.dim());
    id.setIdentity();
    return sandwich(a.data, id);
}

inline SpMat right_mult(const Operator& a) {
    SpMat id(a.dim(), a.dim());
    id.setIdentity();
    return sandwich(id, a.data);
}

// rate * D[A] with D[A] = A . A^dag - {A^dag A, .}/2.
inline SpMat dissipator(const Operator& a, double rate) {
    if (rate < 0.0) throw std::invalid_argument("dissipator: negative rate");
    SpMat adag = SpMat(a.data.adjoint());
    SpMat ada = SpMat(adag * a.data);
    SpMat id(a.dim(), a.dim());
    id.setIdentity();
    SpMat out = sandwich(a.data, adag);
    out -= 0.5 * sandwich(ada, id);
    out -= 0.5 * sandwich(id, ada);
    return SpMat(rate * out);
}

// weight * D[A,B] with D[A,B] = A . B - {BA, .}/2. Weights may be complex.
inline SpMat generalized_dissipator(const Operator& a, const Operator& b, complexd weight) {
    if (a.space != b.space)
        throw std::invalid_argument("generalized_dissipator: operators on different spaces");
    SpMat ba = SpMat(b.data * a.data);
    SpMat id(a.dim(), a.dim());
    id.setIdentity();
    SpMat out = sandwich(a.data, b.data);
    out -= 0.5 * sandwich(ba, id);
    out -= 0.5 * sandwich(id, ba);
    return SpMat(weight * out);
}

// -i[H, .] for Hermitian H.
inline SpMat hamiltonian_term(const Operator& h) {
    if (!h.is_hermitian())
        throw std::invalid_argument("hamiltonian_term: Hamiltonian is not Hermitian");
    SpMat id(h.dim(), h.dim());
    id.setIdentity();
    return SpMat(complexd(0, -1) * SpMat(sandwich(h.data, id) - sandwich(id, h.data)));
}

// Unidirectional waveguide coupling sqrt(kappa gamma) ([O . , s+] + [s-, . O^dag]).
inline SpMat cascaded_coupling(const Operator& o, const Operator& sigma_minus,
                               double kappa, double gamma) {
    if (kappa < 0.0 || gamma < 0.0)
        throw std::invalid_argument("cascaded_coupling: negative rate");
    if (o.space != sigma_minus.space)
        throw std::invalid_argument("cascaded_coupling: operators on different spaces");
    const double c = std::sqrt(kappa * gamma);
    Operator sp = sigma_minus.dagger();
    SpMat id(o.dim(), o.dim());
    id.setIdentity();
    SpMat odag = SpMat(o.data.adjoint());
    // [O rho, s+] = O rho s+ - s+ O rho ; [s-, rho O^dag] = s- rho O^dag - rho O^dag s-
    SpMat out = sandwich(o.data, sp.data)
              - sandwich(SpMat(sp.data * o.data), id)
              + sandwich(sigma_minus.data, odag)
              - sandwich(id, SpMat(odag * sigma_minus.data));
    return SpMat(c * out);
}

struct JumpPort {
    Operator op;
    double rate = 0.0;
};

// Assembled Lindblad generator plus the waveguide ports it emits through.
// `frame` records the rotating frame the model was emitted in.
struct Liouvillian {
    HilbertSpace space;
    SpMat superop;
    std::vector<JumpPort> jump_ports;
    std::string frame;

    Liouvillian() = default;
    Liouvillian(HilbertSpace s, SpMat m, std::vector<JumpPort> ports = {},
                std::string fr = "drive")
        : space(std::move(s)), superop(std::move(m)), jump_ports(std::move(ports)),
          frame(std::move(fr)) {
        const int d = space.dim();
        if (superop.rows() != d * d || superop.cols() != d * d)
            throw std::invalid_argument("Liouvillian: superoperator shape mismatch");
    }

    int dim() const { return space.dim(); }

    double max_port_rate() const {
        double r = 0.0;
        for (const auto& p : jump_ports) r = std::max(r, p.rate);
        return r;
    }

    // Steady state is cached after the first solve and then used read-only.
    // Held behind a shared_ptr so Liouvillians stay copyable.
    struct SteadyCache {
        std::once_flag once;
        std::shared_ptr<const DensityMatrix> rho;
    };
    std::shared_ptr<SteadyCache> steady = std::make_shared<SteadyCache>();
};

namespace detail {

// Solve M x = b with a sparse LU, dense fallback for small systems.
inline Vector solve_sparse(const SpMat& m, const Vector& b, bool& ok) {
    ok = true;
    if (m.rows() <= 4096) {
        Matrix dense(m);
        Eigen::PartialPivLU<Matrix> lu(dense);
        Vector x = lu.solve(b);
        ok = (m * x - b).norm() <= 1e-8 * (1.0 + b.norm());
        return x;
    }
    Eigen::SparseLU<SpMat> lu;
    lu.compute(m);
    if (lu.info() != Eigen::Success) {
        ok = false;
        return Vector::Zero(m.rows());
    }
    Vector x = lu.solve(b);
    ok = (m * x - b).norm() <= 1e-6 * (1.0 + b.norm());
    return x;
}

}  // namespace detail

// rho_ss with L vec(rho_ss) = 0, trace 1. Direct factorization with the first
// row replaced by the trace condition.
inline DensityMatrix steady_state(const Liouvillian& liou) {
    const int d = liou.dim();
    const int n = d * d;

    std::call_once(liou.steady->once, [&] {
        std::vector<Eigen::Triplet<complexd>> trip;
        trip.reserve(std::size_t(liou.superop.nonZeros()) + d);
        for (int k = 0; k < liou.superop.outerSize(); ++k)
            for (SpMat::InnerIterator it(liou.superop, k); it; ++it)
                if (it.row() != 0) trip.emplace_back(it.row(), it.col(), it.value());
        for (int k = 0; k < d; ++k) trip.emplace_back(0, k * d + k, complexd(1.0));
        SpMat m(n, n);
        m.setFromTriplets(trip.begin(), trip.end());

        Vector rhs = Vector::Zero(n);
        rhs(0) = 1.0;

        bool ok = false;
        Vector x = detail::solve_sparse(m, rhs, ok);
        if (!ok) throw std::runtime_error("steady_state: factorization failed (singular system)");

        // Uniqueness: the solution must actually annihilate L.
        double resid = (liou.superop * x).norm();
        double scale = liou.superop.coeffs().abs().maxCoeff();
        if (resid > 1e-6 * std::max(1.0, scale))
            throw std::runtime_error("steady_state: kernel residual too large (degenerate steady state?)");

        if (n <= 4096) {
            Eigen::FullPivLU<Matrix> full(Matrix(liou.superop));
            full.setThreshold(1e-10 * std::max(1.0, scale));
            if (full.rank() < n - 1)
                throw std::runtime_error("steady_state: Liouvillian kernel is degenerate");
        }

        liou.steady->rho = std::make_shared<const DensityMatrix>(
            make_density_matrix(liou.space, unvec(x, d)));
    });
    return *liou.steady->rho;
}

inline complexd expectation(const DensityMatrix& rho, const Operator& a) {
    return (a.dense() * rho.dense()).trace();
}

// integral_0^inf dtau e^{-i Delta tau} <Abar(tau) Bbar>_ss via the resolvent
// (i Delta - L)^{-1}, with Abar = A - <A>_ss, Bbar = B - <B>_ss.
inline complexd laplace_correlation(const Liouvillian& liou, const Operator& a,
                                    const Operator& b, double delta) {
    const int d = liou.dim();
    const int n = d * d;
    DensityMatrix rho = steady_state(liou);

    complexd a_ss = expectation(rho, a);
    complexd b_ss = expectation(rho, b);
    Matrix abar = a.dense() - a_ss * Matrix::Identity(d, d);
    Matrix bbar = b.dense() - b_ss * Matrix::Identity(d, d);

    Vector rhs = vec(Matrix(bbar * rho.dense()));

    SpMat id(n, n);
    id.setIdentity();
    SpMat m = SpMat(complexd(0, delta) * id - liou.superop);

    bool ok = false;
    Vector x = detail::solve_sparse(m, rhs, ok);
    if (!ok) {
        // Probe sits (numerically) on a Liouvillian eigenvalue; shift and warn.
        double shift = 1e-10 * std::max(liou.max_port_rate(), 1.0);
        std::cerr << "laplace_correlation: resolvent near-singular at delta=" << delta
                  << ", regularizing with shift " << shift << "\n";
        m = SpMat(complexd(shift, delta) * id - liou.superop);
        x = detail::solve_sparse(m, rhs, ok);
        if (!ok) throw std::runtime_error("laplace_correlation: regularized solve failed");
    }

    Matrix xm = unvec(x, d);
    return (abar * xm).trace();
}

// The four spectra C^{ij}_{--}, C^{ij}_{-+} at the detunings they enter the
// effective qubit ME with, plus coherent amplitudes eps_i = sqrt(k_i)<O_i>.
struct CorrelationSet {
    double delta_q1 = 0.0, delta_q2 = 0.0;
    Eigen::Matrix2cd c_mm;  // C^{ij}_{--}(Delta_q,j)
    Eigen::Matrix2cd c_mp;  // C^{ij}_{-+}(Delta_q,j)
    complexd eps1{}, eps2{};

    Eigen::Matrix2cd c_pp() const { return c_mm.conjugate(); }
    Eigen::Matrix2cd c_pm() const { return c_mp.conjugate(); }
};

inline CorrelationSet correlation_set(const Liouvillian& liou, double delta_q1, double delta_q2) {
    if (liou.jump_ports.size() != 2)
        throw std::invalid_argument("correlation_set: Liouvillian must have two jump ports");

    DensityMatrix rho = steady_state(liou);
    const int d = liou.dim();
    const int n = d * d;

    const Operator& o1 = liou.jump_ports[0].op;
    const Operator& o2 = liou.jump_ports[1].op;
    const double k1 = liou.jump_ports[0].rate;
    const double k2 = liou.jump_ports[1].rate;

    CorrelationSet out;
    out.delta_q1 = delta_q1;
    out.delta_q2 = delta_q2;
    out.eps1 = std::sqrt(k1) * expectation(rho, o1);
    out.eps2 = std::sqrt(k2) * expectation(rho, o2);

    std::array<const Operator*, 2> ops{&o1, &o2};
    std::array<double, 2> rates{k1, k2};
    std::array<double, 2> deltas{delta_q1, delta_q2};

    std::array<Matrix, 2> bar;
    for (int i = 0; i < 2; ++i)
        bar[i] = ops[i]->dense() - expectation(rho, *ops[i]) * Matrix::Identity(d, d);

    SpMat id(n, n);
    id.setIdentity();
    for (int j = 0; j < 2; ++j) {
        // One factorization per probe detuning serves all four traces.
        Vector rhs = vec(Matrix(bar[j] * rho.dense()));
        SpMat m = SpMat(complexd(0, deltas[j]) * id - liou.superop);
        bool ok = false;
        Vector x = detail::solve_sparse(m, rhs, ok);
        if (!ok) {
            double shift = 1e-10 * std::max(liou.max_port_rate(), 1.0);
            std::cerr << "correlation_set: resolvent near-singular at delta=" << deltas[j]
                      << ", regularizing with shift " << shift << "\n";
            m = SpMat(complexd(shift, deltas[j]) * id - liou.superop);
            x = detail::solve_sparse(m, rhs, ok);
            if (!ok) throw std::runtime_error("correlation_set: regularized solve failed");
        }
        Matrix xm = unvec(x, d);
        for (int i = 0; i < 2; ++i) {
            double pref = std::sqrt(rates[i] * rates[j]);
            out.c_mm(i, j) = pref * (bar[i] * xm).trace();
            out.c_mp(i, j) = pref * (bar[i].adjoint() * xm).trace();
        }
    }
    return out;
}

}  // namespace cascade
