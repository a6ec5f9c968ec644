#pragma once

// Small derivative-free maximizers used by the network and sweep drivers:
// golden-section search in 1D and a bounded Nelder-Mead simplex in N-D.
// Both are deterministic for a given starting point and budget.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cascade {

struct OptimumRecord {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool boundary = false;  // best point within 1% of a search-box edge
};

// Maximize f on [lo, hi] to absolute tolerance `tol` on x.
inline OptimumRecord golden_section(const std::function<double(double)>& f, double lo, double hi,
                                    double tol = 1e-6, int max_iter = 200) {
    if (!(hi > lo)) throw std::invalid_argument("golden_section: empty interval");
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int evals = 2;
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    OptimumRecord out;
    double x = fc > fd ? c : d;
    out.x = {x};
    out.value = std::max(fc, fd);
    out.evaluations = evals;
    out.boundary = (x - lo) < 0.01 * (hi - lo) || (hi - x) < 0.01 * (hi - lo);
    return out;
}

// Maximize f inside the box [lo_i, hi_i] starting from x0, clamping proposals
// to the box. Stops when the simplex spread of f drops below `tol` (relative
// to the best |f|, floored at 1e-12) or the evaluation budget is spent.
inline OptimumRecord nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x0, const std::vector<double>& lo,
                                 const std::vector<double>& hi, double tol = 1e-3,
                                 int max_evals = 500) {
    const std::size_t n = x0.size();
    if (lo.size() != n || hi.size() != n || n == 0)
        throw std::invalid_argument("nelder_mead: dimension mismatch");

    auto clamp = [&](std::vector<double>& x) {
        for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    };

    int evals = 0;
    auto eval = [&](std::vector<double> x) {
        clamp(x);
        ++evals;
        return std::make_pair(std::move(x), f(x));
    };

    std::vector<std::pair<std::vector<double>, double>> simplex;
    clamp(x0);
    simplex.push_back(eval(x0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> xi = x0;
        double step = 0.05 * (hi[i] - lo[i]);
        xi[i] += (xi[i] + step <= hi[i]) ? step : -step;
        simplex.push_back(eval(xi));
    }

    auto by_value = [](const auto& a, const auto& b) { return a.second > b.second; };
    while (evals < max_evals) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        double spread = simplex.front().second - simplex.back().second;
        double scale = std::max(std::abs(simplex.front().second), 1e-12);
        if (spread < tol * scale) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].first[i] / double(n);
        const auto& worst = simplex.back();

        auto at = [&](double coef) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = centroid[i] + coef * (centroid[i] - worst.first[i]);
            return eval(x);
        };

        auto refl = at(1.0);
        if (refl.second > simplex.front().second) {
            auto expa = at(2.0);
            simplex.back() = expa.second > refl.second ? expa : refl;
        } else if (refl.second > simplex[n - 1].second) {
            simplex.back() = refl;
        } else {
            auto contr = at(-0.5);
            if (contr.second > worst.second) {
                simplex.back() = contr;
            } else {
                // shrink toward the best vertex
                for (std::size_t k = 1; k < simplex.size(); ++k) {
                    std::vector<double> x(n);
                    for (std::size_t i = 0; i < n; ++i)
                        x[i] = 0.5 * (simplex[0].first[i] + simplex[k].first[i]);
                    simplex[k] = eval(x);
                    if (evals >= max_evals) break;
                }
            }
        }
    }

    std::sort(simplex.begin(), simplex.end(), by_value);
    OptimumRecord out;
    out.x = simplex.front().first;
    out.value = simplex.front().second;
    out.evaluations = evals;
    for (std::size_t i = 0; i < n; ++i) {
        double w = hi[i] - lo[i];
        if (out.x[i] - lo[i] < 0.01 * w || hi[i] - out.x[i] < 0.01 * w) out.boundary = true;
    }
    return out;
}

}  // namespace cascade
