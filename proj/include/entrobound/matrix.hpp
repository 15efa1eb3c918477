#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "entrobound/core.hpp"

namespace entrobound {

// Dense complex matrix, row-major. Sized for multipartite density operators
// (nothing here exceeds 64x64), so simplicity beats blocking tricks.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(cdouble s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(cdouble s, Matrix m) { return m *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cdouble aik = a(i, k);
                if (aik == cdouble{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Matrix dagger() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    cdouble trace() const {
        cdouble t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    // Frobenius norm squared; for Hermitian m this is Tr[m^2].
    double frobenius_sq() const {
        double s = 0.0;
        for (const auto& x : data_) s += std::norm(x);
        return s;
    }

    double max_hermiticity_defect() const {
        if (rows_ != cols_) return std::numeric_limits<double>::infinity();
        double d = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return d;
    }

    // (M + M^dagger)/2
    Matrix hermitized() const {
        Matrix m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
        return m;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble{}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    c(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
        }
    return c;
}

struct EigenSystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
};

// Cyclic Jacobi for complex Hermitian matrices. Each rotation first strips the
// phase of the pivot element, then applies the standard symmetric 2x2 rotation.
// Quadratic convergence makes a handful of sweeps enough at these sizes.
inline EigenSystem eig_hermitian(const Matrix& input) {
    if (input.rows() != input.cols())
        throw ValidationError("eig_hermitian: matrix is not square");
    const std::size_t n = input.rows();
    Matrix a = input.hermitized();
    Matrix v = Matrix::identity(n);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) < 1e-14 * (1.0 + std::sqrt(a.frobenius_sq()))) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const cdouble phase = apq / mag;  // e^{i phi}

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Unitary on the (p,q) plane: U = [[c, s], [-s*conj(phase), c*conj(phase)]]
                const cdouble upp = c;
                const cdouble upq = s;
                const cdouble uqp = -s * std::conj(phase);
                const cdouble uqq = c * std::conj(phase);

                // columns: A <- A U
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                // rows: A <- U^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                // accumulate eigenvectors: V <- V U
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    }
    return es;
}

// Eigenvalues only, descending.
inline std::vector<double> eigvals_hermitian(const Matrix& m) {
    return eig_hermitian(m).values;
}

}  // namespace entrobound
