#include "abelint/poly_matrix.hpp"

#include <stdexcept>

namespace abelint {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    m_.resize(static_cast<size_t>(rows) * cols);
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
}

Poly& PolyMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return m_[static_cast<size_t>(r) * cols_ + c];
}

const Poly& PolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return m_[static_cast<size_t>(r) * cols_ + c];
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix addition with mismatched shapes");
    for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtraction with mismatched shapes");
    for (size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product with mismatched shapes");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Poly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

PolyMatrix operator*(const Poly& s, const PolyMatrix& a) {
    PolyMatrix out = a;
    for (auto& e : out.m_) e = s * e;
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
}

Poly PolyMatrix::det3() const {
    if (rows_ != 3 || cols_ != 3) throw std::invalid_argument("det3 requires a 3x3 matrix");
    auto minor = [&](int c0, int c1) {
        return at(1, c0) * at(2, c1) - at(1, c1) * at(2, c0);
    };
    return at(0, 0) * minor(1, 2) - at(0, 1) * minor(0, 2) + at(0, 2) * minor(0, 1);
}

PolyMatrix PolyMatrix::eval(const Rational& x) const {
    PolyMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = Poly(at(i, j).eval(x));
    return out;
}

} // namespace abelint
