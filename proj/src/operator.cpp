#include "tq/operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace tq {

ScalarMatrix ScalarMatrix::multiply(const ScalarMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("ScalarMatrix: size mismatch");
    ScalarMatrix out(rows, o.cols);
    // i-k-j with a zero test on a[i][k]: operator matrices here are sparse
    // (monomial symbols give one entry per column) and exact-rational
    // multiplies dominate, so skipping zeros is the whole ballgame.
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::conj_transpose() const {
    ScalarMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("ScalarMatrix: vector size mismatch");
    std::vector<Scalar> out(rows, Scalar(0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero() || v[k].is_zero()) continue;
            out[i] += aik * v[k];
        }
    return out;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("ScalarMatrix: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

ScalarMatrix& ScalarMatrix::operator*=(const Scalar& c) {
    for (Scalar& v : a) v *= c;
    return *this;
}

namespace {

// In-place elimination to upper triangular form, tracking the determinant.
// Returns false when singular. When inv is non-null it accumulates the full
// Gauss-Jordan pass and receives the inverse.
bool eliminate(ScalarMatrix m, Scalar* det, ScalarMatrix* inv) {
    int n = m.rows;
    ScalarMatrix id = ScalarMatrix::identity(n);
    Scalar d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(id.at(pivot, c), id.at(col, c));
            }
            d = -d;
        }
        Scalar p = m.at(col, col);
        d *= p;
        for (int c = 0; c < n; ++c) {
            m.at(col, c) /= p;
            id.at(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                m.at(r, c) -= f * m.at(col, c);
                id.at(r, c) -= f * id.at(col, c);
            }
        }
    }
    if (det) *det = d;
    if (inv) *inv = std::move(id);
    return true;
}

}  // namespace

Scalar ScalarMatrix::determinant() const {
    if (rows != cols) throw std::invalid_argument("determinant: matrix not square");
    if (rows == 0) return Scalar(1);
    Scalar d;
    if (!eliminate(*this, &d, nullptr)) return Scalar(0);
    return d;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows != cols) throw std::invalid_argument("inverse: matrix not square");
    ScalarMatrix inv;
    if (!eliminate(*this, nullptr, &inv)) throw std::domain_error("inverse: singular matrix");
    return inv;
}

TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b, int D) {
    TruncatedOperator out;
    out.mat = a.mat.multiply(b.mat);
    out.raise = a.raise + b.raise;
    out.valid_in_degree = std::min({b.valid_in_degree, a.valid_in_degree - b.raise, D});
    return out;
}

TruncatedOperator add_scaled(const TruncatedOperator& a, const Scalar& c,
                             const TruncatedOperator& b) {
    TruncatedOperator out;
    out.mat = a.mat;
    ScalarMatrix scaled = b.mat;
    scaled *= c;
    out.mat += scaled;
    out.raise = std::max(a.raise, b.raise);
    out.valid_in_degree = std::min(a.valid_in_degree, b.valid_in_degree);
    return out;
}

}  // namespace tq
