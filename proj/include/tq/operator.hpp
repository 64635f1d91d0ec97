#pragma once

#include <vector>

#include "tq/scalar.hpp"

namespace tq {

/// Dense matrix of exact Gaussian rationals. Row-major. Sizes here are desk
/// scale (a few hundred at most), so dense storage with zero-skipping
/// products is the right trade.
struct ScalarMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    ScalarMatrix() = default;
    ScalarMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const Scalar& v : a)
            if (!v.is_zero()) return false;
        return true;
    }

    ScalarMatrix multiply(const ScalarMatrix& o) const;
    ScalarMatrix conj_transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    ScalarMatrix& operator+=(const ScalarMatrix& o);
    ScalarMatrix& operator*=(const Scalar& c);

    /// Exact determinant by fraction elimination. Square only.
    Scalar determinant() const;

    /// Exact inverse. Throws std::domain_error when singular.
    ScalarMatrix inverse() const;

    friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const ScalarMatrix& x, const ScalarMatrix& y) { return !(x == y); }
};

/// Matrix of an operator on the degree-truncated monomial basis, together
/// with the bookkeeping that says where the truncated matrix still agrees
/// with the untruncated operator:
///   raise            maximal degree increase of the operator,
///   valid_in_degree  inputs of degree <= this are mapped exactly.
/// Compositions and sums propagate both fields; every equality the project
/// asserts is restricted to a validity region and is therefore exact.
struct TruncatedOperator {
    ScalarMatrix mat;
    int raise = 0;
    int valid_in_degree = 0;
};

/// Operator composition a after b (matrix product a * b). The result is
/// exact on inputs that b maps exactly into a's exact region:
/// valid = min(b.valid, a.valid - b.raise), capped at the truncation degree.
TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b, int D);

/// a + c * b with pessimistic bookkeeping: raise = max, valid = min.
TruncatedOperator add_scaled(const TruncatedOperator& a, const Scalar& c,
                             const TruncatedOperator& b);

}  // namespace tq
