#ifndef NETCTRL_MATRIX_HPP
#define NETCTRL_MATRIX_HPP

#include <netctrl/error.hpp>
#include <netctrl/rational.hpp>

#include <cassert>
#include <vector>

namespace netctrl {

// Dense row-major matrix over an exact scalar type (Integer, Rational, or
// FieldElement). Deliberately minimal: the algorithms own the interesting
// loops, the container only owns storage and shape.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (int j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

} // namespace netctrl

#endif
