// operators.hpp — Composite Hilbert spaces and the complex operators on them

#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace cascade {

using complexd = std::complex<double>;
using SpMat = Eigen::SparseMatrix<complexd>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermTol = 1e-10;
inline constexpr double kPositivityTol = -1e-8;

// Ordered list of subsystem dimensions. Basis ordering is fixed as
// (source TLS, mode 1, mode 2[, target qubit 1, target qubit 2]) with
// ground/vacuum at index 0; factor 0 is the most significant index.
struct HilbertSpace {
    std::vector<int> dims;

    HilbertSpace() = default;
    explicit HilbertSpace(std::vector<int> d) : dims(std::move(d)) {
        for (int n : dims) {
            if (n < 1) throw std::invalid_argument("HilbertSpace: dimensions must be >= 1");
        }
        if (dims.empty()) throw std::invalid_argument("HilbertSpace: no subsystems");
    }

    int dim() const {
        return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    }
    std::size_t factors() const { return dims.size(); }

    bool operator==(const HilbertSpace& o) const { return dims == o.dims; }
    bool operator!=(const HilbertSpace& o) const { return !(*this == o); }
};

// Complex matrix tagged with its Hilbert space. Stored sparse; the operators
// appearing here (ladder, Pauli, their products) are sparse by nature and
// superoperator assembly wants sparse inputs anyway.
struct Operator {
    HilbertSpace space;
    SpMat data;

    Operator() = default;
    Operator(HilbertSpace s, SpMat m) : space(std::move(s)), data(std::move(m)) {
        if (data.rows() != space.dim() || data.cols() != space.dim())
            throw std::invalid_argument("Operator: matrix shape does not match space dimension");
    }
    Operator(HilbertSpace s, const Matrix& m) : Operator(std::move(s), SpMat(m.sparseView())) {}

    int dim() const { return space.dim(); }
    Matrix dense() const { return Matrix(data); }

    Operator dagger() const { return Operator(space, SpMat(data.adjoint())); }

    Operator operator*(const Operator& o) const {
        require_same_space(o);
        return Operator(space, SpMat(data * o.data));
    }
    Operator operator+(const Operator& o) const {
        require_same_space(o);
        return Operator(space, SpMat(data + o.data));
    }
    Operator operator-(const Operator& o) const {
        require_same_space(o);
        return Operator(space, SpMat(data - o.data));
    }
    Operator operator-() const { return Operator(space, SpMat(-data)); }
    friend Operator operator*(complexd c, const Operator& o) {
        return Operator(o.space, SpMat(c * o.data));
    }
    friend Operator operator*(double c, const Operator& o) { return complexd(c) * o; }

    bool is_hermitian(double tol = kHermTol) const {
        SpMat diff = SpMat(data - SpMat(data.adjoint()));
        for (int k = 0; k < diff.outerSize(); ++k)
            for (SpMat::InnerIterator it(diff, k); it; ++it)
                if (std::abs(it.value()) > tol) return false;
        return true;
    }

private:
    void require_same_space(const Operator& o) const {
        if (space != o.space)
            throw std::invalid_argument("Operator: operands live on different spaces");
    }
};

inline Operator identity(const HilbertSpace& space) {
    SpMat m(space.dim(), space.dim());
    m.setIdentity();
    return Operator(space, m);
}

inline complexd trace(const Operator& a) {
    complexd t = 0.0;
    for (int k = 0; k < a.data.outerSize(); ++k)
        for (SpMat::InnerIterator it(a.data, k); it; ++it)
            if (it.row() == it.col()) t += it.value();
    return t;
}

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

// Bosonic annihilation operator truncated to n_levels Fock states.
inline Operator destroy(int n_levels) {
    if (n_levels < 2) throw std::invalid_argument("destroy: need at least 2 levels");
    SpMat m(n_levels, n_levels);
    m.reserve(Eigen::VectorXi::Constant(n_levels, 1));
    for (int k = 1; k < n_levels; ++k) m.insert(k - 1, k) = std::sqrt(double(k));
    m.makeCompressed();
    return Operator(HilbertSpace({n_levels}), m);
}

enum class Pauli { x, y, z, plus, minus };

// Standard 2x2 Pauli/ladder matrices in the ordered basis (|g>, |e>).
// Convention: z = |e><e| - |g><g|, minus = |g><e|.
inline Operator pauli(Pauli kind) {
    Matrix m = Matrix::Zero(2, 2);
    switch (kind) {
        case Pauli::x: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case Pauli::y: m(0, 1) = complexd(0, 1); m(1, 0) = complexd(0, -1); break;
        case Pauli::z: m(0, 0) = -1.0; m(1, 1) = 1.0; break;
        case Pauli::plus: m(1, 0) = 1.0; break;
        case Pauli::minus: m(0, 1) = 1.0; break;
    }
    return Operator(HilbertSpace({2}), m);
}

inline SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<complexd>> trip;
    trip.reserve(std::size_t(a.nonZeros()) * std::size_t(b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
                    trip.emplace_back(ia.row() * b.rows() + ib.row(),
                                      ia.col() * b.cols() + ib.col(),
                                      ia.value() * ib.value());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

// identity x ... x op x ... x identity at the given factor position.
inline Operator embed(const Operator& op, const HilbertSpace& space, std::size_t position) {
    if (position >= space.factors())
        throw std::invalid_argument("embed: position out of range");
    if (op.dim() != space.dims[position])
        throw std::invalid_argument("embed: operator dimension does not match target factor");
    int dl = 1, dr = 1;
    for (std::size_t i = 0; i < position; ++i) dl *= space.dims[i];
    for (std::size_t i = position + 1; i < space.factors(); ++i) dr *= space.dims[i];
    SpMat il(dl, dl), ir(dr, dr);
    il.setIdentity();
    ir.setIdentity();
    return Operator(space, kron(kron(il, op.data), ir));
}

// Density matrix with the usual trace / Hermiticity / positivity contracts.
struct DensityMatrix {
    Operator op;

    DensityMatrix() = default;
    explicit DensityMatrix(Operator o, bool validate_now = true) : op(std::move(o)) {
        if (validate_now) validate();
    }

    const HilbertSpace& space() const { return op.space; }
    Matrix dense() const { return op.dense(); }

    void validate() const {
        complexd t = trace(op);
        if (std::abs(t - 1.0) > 1e-10)
            throw std::runtime_error("DensityMatrix: trace deviates from 1");
        if (!op.is_hermitian())
            throw std::runtime_error("DensityMatrix: not Hermitian");
        Eigen::SelfAdjointEigenSolver<Matrix> es(op.dense());
        if (es.eigenvalues().minCoeff() < kPositivityTol)
            throw std::runtime_error("DensityMatrix: negative eigenvalue beyond tolerance");
    }
};

// Trace over all factors not in `keep`; kept factors retain their order.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    const auto& space = rho.space();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    std::vector<bool> kept(space.factors(), false);
    for (std::size_t p : keep) {
        if (p >= space.factors()) throw std::invalid_argument("partial_trace: position out of range");
        kept[p] = true;
    }

    std::vector<int> keep_dims, drop_dims;
    for (std::size_t i = 0; i < space.factors(); ++i)
        (kept[i] ? keep_dims : drop_dims).push_back(space.dims[i]);
    int dk = std::accumulate(keep_dims.begin(), keep_dims.end(), 1, std::multiplies<int>());
    int dd = std::accumulate(drop_dims.begin(), drop_dims.end(), 1, std::multiplies<int>());

    // Strides of each factor in the full index.
    std::vector<int> stride(space.factors(), 1);
    for (int i = int(space.factors()) - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * space.dims[i + 1];

    auto full_index = [&](int ik, int id) {
        int idx = 0, rk = ik, rd = id;
        // Decompose ik/id over kept/dropped factors in order.
        std::vector<int> kd, dd_;
        for (std::size_t i = 0; i < space.factors(); ++i)
            if (kept[i]) kd.push_back(space.dims[i]); else dd_.push_back(space.dims[i]);
        std::vector<int> kidx(kd.size()), didx(dd_.size());
        for (int i = int(kd.size()) - 1; i >= 0; --i) { kidx[i] = rk % kd[i]; rk /= kd[i]; }
        for (int i = int(dd_.size()) - 1; i >= 0; --i) { didx[i] = rd % dd_[i]; rd /= dd_[i]; }
        std::size_t ck = 0, cd = 0;
        for (std::size_t i = 0; i < space.factors(); ++i)
            idx += (kept[i] ? kidx[ck++] : didx[cd++]) * stride[i];
        return idx;
    };

    Matrix full = rho.dense();
    Matrix out = Matrix::Zero(dk, dk);
    for (int r = 0; r < dk; ++r)
        for (int c = 0; c < dk; ++c)
            for (int t = 0; t < dd; ++t)
                out(r, c) += full(full_index(r, t), full_index(c, t));

    return DensityMatrix(Operator(HilbertSpace(keep_dims), out), false);
}

// Symmetrize and renormalize a raw linear-solve result before validation;
// LU null-space solutions carry roundoff asymmetry.
inline DensityMatrix make_density_matrix(const HilbertSpace& space, const Matrix& raw) {
    Matrix sym = 0.5 * (raw + raw.adjoint());
    sym /= sym.trace().real();
    return DensityMatrix(Operator(space, sym));
}

}  // namespace cascade
