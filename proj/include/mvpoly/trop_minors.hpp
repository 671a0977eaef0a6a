#pragma once

#include "mvpoly/highest_vertex.hpp"
#include "mvpoly/matrix_rf.hpp"

namespace mvpoly {

/*
  Symbolic model of the reduced double Bruhat cell L^{w^{-1}} in type A.
  Group elements are (rank+1) x (rank+1) matrices over exact rational
  functions in one variable t; tropicalization is order of vanishing after
  substituting t-powers for the chart coordinates.

  Tropical points carry their coordinates in the letter order of the
  corresponding word of w: the point (chart j_1..j_m, A) is the matrix
  x_{j_1}(t^{A_m}) ... x_{j_m}(t^{A_1}).  This is the unique attachment under
  which the valuations of the minors reproduce the worked SL3 table
  (M = (0, 0, -a, -a-b, -b)) and it makes the Theorem-B identification of
  chart coordinates with Lusztig data the identity map.
*/

int matrix_size(const MVContext& ctx); // rank+1; requires type A
std::vector<int> permutation(const MVContext& ctx, const WeylElement& w); // images of 1..n

MatrixRF x_elem(int n, int i, const RatFunc& f);
MatrixRF y_elem(int n, int i, const RatFunc& f);
MatrixRF w_rep(int n, const Word& word);

// prod_k x_{i_k}(t^{A_k}), literal position order.
MatrixRF chart_point(int n, const Word& word, const IntVec& A);
// Kronecker substitution a_k = t^{base^{k-1}} for symbolic identity checks.
MatrixRF chart_point_symbolic(int n, const Word& word, long long base);

// The anti-automorphism fixing every x_i(a); D g^{-1} D with alternating D.
MatrixRF iota(const MatrixRF& g);

// eta(w, g) realizes the change of coordinates eta_{w^{-1}}: the unit upper
// triangular factor of w_rep(w^{-1}) g^T.  eta_inv is its inverse via
// iota . eta_w . iota.
MatrixRF eta(const MVContext& ctx, const WeylElement& w, const MatrixRF& g);
MatrixRF eta_inv(const MVContext& ctx, const WeylElement& w, const MatrixRF& z);

// det of the submatrix with rows u{1..i}, columns v{1..i}, both sorted.
RatFunc gen_minor(const MVContext& ctx, const MatrixRF& g, const WeylElement& u,
                  const WeylElement& v, int i);
// Delta^new_{v omega_i} = Delta_{v_w^{-1} v omega_i, v omega_i}.
RatFunc delta_new(const MVContext& ctx, const MatrixRF& g, const WeylElement& v, int i,
                  const WeylElement& w);

bool chi_trop_nonneg(const IntVec& A);
bool gamma_in_Gamma_w(const MVContext& ctx, int chamber, const WeylElement& w);

// All M_gamma values of the tropical point (w, A), indexed by chamber.
IntVec m_gamma_all(const MVContext& ctx, const WeylElement& w, const IntVec& A);
Int m_gamma(const MVContext& ctx, const WeylElement& w, const IntVec& A, int chamber);

// Valuation oracle versus the combinatorial pipeline, every chamber weight.
Report theorem_b_check(const MVContext& ctx, const WeylElement& w, const IntVec& A);

struct ScanOptions {
    Int bound = 4;       // entries of sampled tropical points
    int samples = 20;    // numeric samples for the edge-equality conjecture
    uint64_t seed = 1;
};
// Symbolic vanishing checks (cell equations, the proven vanishing family,
// the conjectural one) plus sampled edge equalities at collapsed edges.
Report vanishing_scan(const MVContext& ctx, const WeylElement& w, const ScanOptions& opt = {});

} // namespace mvpoly
