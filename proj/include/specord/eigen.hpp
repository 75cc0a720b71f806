#pragma once

// Cyclic Jacobi eigensolver for complex Hermitian matrices.
//
// For the pivot (p,q) with block [[a, g],[conj(g), b]], write g = |g| e^{i phi}.
// The phase diag(1, e^{-i phi}) makes the block real symmetric with
// off-diagonal |g|; the annihilation condition for the rotation below is
//   |g| (1 - t^2) + (b - a) t = 0,
// whose small root is t = -sgn(tau) / (|tau| + sqrt(1 + tau^2)) with
// tau = (b - a) / (2 |g|); then c = 1 / sqrt(1 + t^2), s = t c.  Folding the
// phase back in, the unitary applied on the right is the identity except for
//   J(p,p) = c,  J(p,q) = -s e^{i phi},  J(q,p) = s e^{-i phi},  J(q,q) = c.
// Sweeps run in fixed row-major pivot order so results are deterministic;
// convergence is declared when the off-diagonal Frobenius norm drops below
// 1e-12 * max(1, ||A||_F).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "specord/errors.hpp"
#include "specord/matrix.hpp"

namespace specord {

struct RawEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // unitary, column k pairs with values[k]

    RawEigen(std::vector<double> v, ComplexMatrix u)
        : values(std::move(v)), vectors(std::move(u)) {}
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Full eigensystem of a Hermitian matrix.  Throws NotHermitian if the input
// fails the symmetry check and NoConvergence if 100 sweeps are not enough
// (does not happen for well-formed input at this scale; the guard exists so
// a silent wrong answer is impossible).
inline RawEigen jacobi_eigh(const ComplexMatrix& input, double herm_tol = 1e-10) {
    const int n = input.dim();
    if (!input.is_hermitian(herm_tol))
        throw NotHermitian("jacobi_eigh: matrix is not Hermitian within tolerance");

    ComplexMatrix a = input.hermitian_part();
    ComplexMatrix u = ComplexMatrix::identity(n);

    const double stop = 1e-12 * std::max(1.0, a.frobenius());
    const int max_sweeps = 100;

    bool converged = (n == 1) || detail::offdiag_frobenius(a) <= stop;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex g = a.at(p, q);
                const double ag = std::abs(g);
                if (ag < 1e-300) continue;

                const double alpha = a.at(p, p).real();
                const double beta = a.at(q, q).real();
                const Complex phase = g / ag;  // e^{i phi}

                const double tau = (beta - alpha) / (2.0 * ag);
                double t;
                if (std::isinf(tau)) {
                    t = 0.0;
                } else {
                    const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                    t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sigma = t * c;

                const Complex s = sigma * std::conj(phase);   // J(q,p)
                const Complex ms_bar = -sigma * phase;        // J(p,q)

                // A <- J^* A J, columns then rows.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a.at(k, p);
                    const Complex akq = a.at(k, q);
                    a.at(k, p) = c * akp + s * akq;
                    a.at(k, q) = ms_bar * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a.at(p, k);
                    const Complex aqk = a.at(q, k);
                    a.at(p, k) = c * apk + std::conj(s) * aqk;
                    a.at(q, k) = std::conj(ms_bar) * apk + c * aqk;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const Complex ukp = u.at(k, p);
                    const Complex ukq = u.at(k, q);
                    u.at(k, p) = c * ukp + s * ukq;
                    u.at(k, q) = ms_bar * ukp + c * ukq;
                }
            }
        }
        converged = detail::offdiag_frobenius(a) <= stop;
    }
    if (!converged)
        throw NoConvergence("jacobi_eigh: no convergence after 100 sweeps");

    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = a.at(i, i).real();

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(j)]; });

    std::vector<double> sorted_vals(static_cast<size_t>(n));
    ComplexMatrix sorted_vecs(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        sorted_vals[static_cast<size_t>(k)] = vals[static_cast<size_t>(src)];
        for (int i = 0; i < n; ++i) sorted_vecs.at(i, k) = u.at(i, src);
    }
    return RawEigen(std::move(sorted_vals), std::move(sorted_vecs));
}

// Group ascending eigenvalues by single linkage: a new cluster starts
// whenever the gap to the previous value exceeds `gap`.  Returns one
// (first_index, count) pair per cluster in ascending order.
inline std::vector<std::pair<int, int>> cluster_ascending(const std::vector<double>& vals,
                                                          double gap) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(vals.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || vals[static_cast<size_t>(i)] - vals[static_cast<size_t>(i - 1)] > gap) {
            out.emplace_back(start, i - start);
            start = i;
        }
    }
    return out;
}

}  // namespace specord
