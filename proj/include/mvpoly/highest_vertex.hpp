#pragma once

#include <functional>

#include "mvpoly/polytope.hpp"
#include "mvpoly/report.hpp"

namespace mvpoly {

// mu_w == mu_{w0}
bool is_in_Pw(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

// A reduced word of w0 whose prefix is the canonical word of w.
Word w0_word_through(const MVContext& ctx, const WeylElement& w);

// Enumerate the polytopes with Lusztig data (n_1..n_{l(w)}, 0, ..., 0) on
// `word` for n in {0..bound}^{l(w)}.  The word's prefix must reduce to w.
void for_each_Pw(const MVContext& ctx, const WeylElement& w, const Word& word, Int bound,
                 const std::function<void(const MVPolytope&, const IntVec&)>& fn);
std::vector<MVPolytope> generate_Pw(const MVContext& ctx, const WeylElement& w, const Word& word,
                                    Int bound);

// Forced zeros of the Lusztig data of P in every chart (the rightmost
// subword of w^{-1} w0).  Requires P in P_w.
Report zero_pattern_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

// mu_v == mu_{v_w} for every v, and the vertex set lies over [e, w].
Report theorem_a_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

// <mu_w - mu_{s_j w}, omega_k> <= 0 for every w, j in D_L(w), k != j.
Report generalized_diagonal_check(const MVContext& ctx, const MVPolytope& P);

// mu_{s_j w} == mu_{w0 s_{j*}} for every j in D_L(w), for P in P_w.
Report s_jw_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

// Classes of W under u ~ u' iff u_w = u'_w, each class sorted, classes sorted
// by their common value of u_w.
std::vector<std::vector<int>> fan_partition(const MVContext& ctx, const WeylElement& w);

// Whether the vertex-equality partition of P is refined by fan_partition's
// classes; equivalent to membership in P_w.
bool coarsening_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

struct HighestVertexCertificate {
    WeylElement w;
    MVPolytope polytope;
    std::vector<int> vw_of; // per element index, the index of v_w
    std::map<Word, std::vector<int>> zero_positions;
};

// Builds the certificate; throws math_error unless P is in P_w, throws
// invariant_error if a certified equality fails.
HighestVertexCertificate certify(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

} // namespace mvpoly
