#pragma once

#include <vector>

#include "mvpoly/ratfunc.hpp"

namespace mvpoly {

class MatrixRF {
  public:
    MatrixRF() = default;
    explicit MatrixRF(int n) : n_(n), a_(n, std::vector<RatFunc>(n)) {}
    static MatrixRF identity(int n);

    int size() const { return n_; }
    RatFunc& at(int r, int c) { return a_[r - 1][c - 1]; } // 1-based
    const RatFunc& at(int r, int c) const { return a_[r - 1][c - 1]; }

    MatrixRF operator*(const MatrixRF& o) const;
    MatrixRF transposed() const;
    bool operator==(const MatrixRF& o) const;

    bool is_unit_upper_triangular() const;
    MatrixRF inverse_unitriangular() const; // requires unit upper triangular

    RatFunc det() const;

  private:
    int n_ = 0;
    std::vector<std::vector<RatFunc>> a_;
};

// Determinant of a square block given by row/column index lists (1-based),
// rows/columns taken in the given (ascending) order.
RatFunc submatrix_det(const MatrixRF& g, const std::vector<int>& rows,
                      const std::vector<int>& cols);

// Determinant of a polynomial matrix by subset-DP Laplace expansion.
UniPoly det_poly(const std::vector<std::vector<UniPoly>>& a);

} // namespace mvpoly
