#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "specord/errors.hpp"

namespace specord {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.  Everything in this library runs at
// desk scale (dim <= 32), so there is no sparsity, no blocking, and copies
// are cheap enough to pass around by value.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw DimMismatch("ComplexMatrix: dimension must be positive");
    }

    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Complex& operator()(int i, int j) { return at(i, j); }
    const Complex& operator()(int i, int j) const { return at(i, j); }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r.at(i, j) = std::conj(at(j, i));
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    // Largest entry magnitude (max norm); the scale reference for tolerances.
    double max_abs() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool is_hermitian(double tol) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
        return true;
    }

    // Symmetrise against the adjoint; used to scrub 1e-16 drift before
    // feeding derived matrices back into validating constructors.
    ComplexMatrix hermitian_part() const {
        ComplexMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r.at(i, j) = 0.5 * (at(i, j) + std::conj(at(j, i)));
        return r;
    }

private:
    int n_;
    std::vector<Complex> a_;
};

inline void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw DimMismatch(std::string(where) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator+");
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator-");
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator*");
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = s * a.at(i, j);
    return r;
}

inline ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            r.at(i, j) = s * a.at(i, j);
    return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a) { return -1.0 * a; }

// Max-norm distance, the workhorse of equality decisions.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

}  // namespace specord
