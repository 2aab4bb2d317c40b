#pragma once

#include <vector>

#include "abelint/poly.hpp"

namespace abelint {

/// Dense matrix with polynomial entries.  Small fixed shapes only (the code
/// base never goes beyond 3x3), so simplicity beats cleverness here.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int r, int c);
    const Poly& at(int r, int c) const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Poly& s, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    /// Determinant of a 3x3 matrix by cofactor expansion.
    Poly det3() const;

    /// Substitute t = x in every entry, giving a matrix of constants.
    PolyMatrix eval(const Rational& x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> m_;
};

} // namespace abelint
