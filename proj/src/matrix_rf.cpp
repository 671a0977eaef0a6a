#include "mvpoly/matrix_rf.hpp"

namespace mvpoly {

MatrixRF MatrixRF::identity(int n) {
    MatrixRF m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = RatFunc::from_int(1);
    return m;
}

MatrixRF MatrixRF::operator*(const MatrixRF& o) const {
    MatrixRF r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (a_[i][k].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.a_[k][j].is_zero()) continue;
                r.a_[i][j] = r.a_[i][j] + a_[i][k] * o.a_[k][j];
            }
        }
    return r;
}

MatrixRF MatrixRF::transposed() const {
    MatrixRF r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.a_[j][i] = a_[i][j];
    return r;
}

bool MatrixRF::operator==(const MatrixRF& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!(a_[i][j] == o.a_[i][j])) return false;
    return true;
}

bool MatrixRF::is_unit_upper_triangular() const {
    for (int i = 0; i < n_; ++i) {
        if (!(a_[i][i] == RatFunc::from_int(1))) return false;
        for (int j = 0; j < i; ++j)
            if (!a_[i][j].is_zero()) return false;
    }
    return true;
}

MatrixRF MatrixRF::inverse_unitriangular() const {
    require(is_unit_upper_triangular(), "inverse implemented for unit upper triangular only");
    MatrixRF v = identity(n_);
    for (int j = n_; j >= 1; --j)
        for (int i = j - 1; i >= 1; --i) {
            RatFunc s;
            for (int k = i + 1; k <= j; ++k) s = s + at(i, k) * v.at(k, j);
            v.at(i, j) = -s;
        }
    return v;
}

UniPoly det_poly(const std::vector<std::vector<UniPoly>>& a) {
    const int k = static_cast<int>(a.size());
    if (k == 0) return UniPoly::one();
    std::vector<UniPoly> dp(1u << k);
    dp[0] = UniPoly::one();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        int r = __builtin_popcount(mask) - 1;
        UniPoly acc;
        int pos = 0; // position of the column inside the subset
        for (int c = 0; c < k; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!a[r][c].is_zero()) {
                UniPoly term = a[r][c] * dp[mask ^ (1u << c)];
                acc = ((r + pos) % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(1u << k) - 1];
}

RatFunc submatrix_det(const MatrixRF& g, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    require(cols.size() == rows.size(), "submatrix must be square");
    std::vector<std::vector<UniPoly>> cleared(k, std::vector<UniPoly>(k));
    UniPoly den = UniPoly::one();
    for (int r = 0; r < k; ++r) {
        bool uniform = true;
        for (int c = 1; c < k; ++c)
            if (!(g.at(rows[r], cols[c]).den() == g.at(rows[r], cols[0]).den())) {
                uniform = false;
                break;
            }
        if (uniform) {
            for (int c = 0; c < k; ++c) cleared[r][c] = g.at(rows[r], cols[c]).num();
            den = den * g.at(rows[r], cols[0]).den();
        } else {
            UniPoly rowden = UniPoly::one();
            for (int c = 0; c < k; ++c) rowden = rowden * g.at(rows[r], cols[c]).den();
            for (int c = 0; c < k; ++c) {
                UniPoly scaled = g.at(rows[r], cols[c]).num();
                for (int c2 = 0; c2 < k; ++c2)
                    if (c2 != c) scaled = scaled * g.at(rows[r], cols[c2]).den();
                cleared[r][c] = std::move(scaled);
            }
            den = den * rowden;
        }
    }
    return RatFunc(det_poly(cleared), den);
}

RatFunc MatrixRF::det() const {
    std::vector<int> idx(n_);
    for (int i = 0; i < n_; ++i) idx[i] = i + 1;
    return submatrix_det(*this, idx, idx);
}

} // namespace mvpoly
