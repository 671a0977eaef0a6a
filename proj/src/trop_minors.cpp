#include "mvpoly/trop_minors.hpp"

#include <algorithm>
#include <random>

namespace mvpoly {

int matrix_size(const MVContext& ctx) {
    require(ctx.cartan().kind() == 'A', "minor evaluation is implemented for type A only");
    return ctx.rank() + 1;
}

std::vector<int> permutation(const MVContext& ctx, const WeylElement& w) {
    const int n = ctx.rank() + 1;
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) p[x] = x + 1;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int l = *it;
        for (int x = 0; x < n; ++x) {
            if (p[x] == l) p[x] = l + 1;
            else if (p[x] == l + 1) p[x] = l;
        }
    }
    return p;
}

MatrixRF x_elem(int n, int i, const RatFunc& f) {
    require(i >= 1 && i < n, "x_i index out of range");
    MatrixRF m = MatrixRF::identity(n);
    m.at(i, i + 1) = f;
    return m;
}

MatrixRF y_elem(int n, int i, const RatFunc& f) {
    require(i >= 1 && i < n, "y_i index out of range");
    MatrixRF m = MatrixRF::identity(n);
    m.at(i + 1, i) = f;
    return m;
}

MatrixRF w_rep(int n, const Word& word) {
    MatrixRF m = MatrixRF::identity(n);
    RatFunc one = RatFunc::from_int(1), minus = RatFunc::from_int(-1);
    for (int l : word) {
        // s_bar = y(1) x(-1) y(1): the 2x2 block [[0,-1],[1,0]]
        MatrixRF s = MatrixRF::identity(n);
        s.at(l, l) = RatFunc();
        s.at(l + 1, l + 1) = RatFunc();
        s.at(l, l + 1) = minus;
        s.at(l + 1, l) = one;
        m = m * s;
    }
    return m;
}

MatrixRF chart_point(int n, const Word& word, const IntVec& A) {
    require(word.size() == A.size(), "chart coordinate count must match the word");
    MatrixRF m = MatrixRF::identity(n);
    for (size_t k = 0; k < word.size(); ++k)
        m = m * x_elem(n, word[k], RatFunc::t_power(1, A[k]));
    return m;
}

MatrixRF chart_point_symbolic(int n, const Word& word, long long base) {
    MatrixRF m = MatrixRF::identity(n);
    long long e = 1;
    for (size_t k = 0; k < word.size(); ++k) {
        m = m * x_elem(n, word[k], RatFunc::t_power(1, e));
        e *= base;
    }
    return m;
}

MatrixRF iota(const MatrixRF& g) {
    const int n = g.size();
    MatrixRF v = g.inverse_unitriangular();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if ((i + j) % 2 == 1) v.at(i, j) = -v.at(i, j);
    return v;
}

namespace {

bool is_polynomial(const MatrixRF& g) {
    for (int i = 1; i <= g.size(); ++i)
        for (int j = 1; j <= g.size(); ++j)
            if (!(g.at(i, j).den() == UniPoly::one())) return false;
    return true;
}

// Unit upper triangular factor U of M = L U, entries as single fractions of
// minors: U_{ij} = det(M[1..i; 1..i-1,j]) / det(M[1..i; 1..i]).
MatrixRF lu_unit_upper(const MatrixRF& M) {
    const int n = M.size();
    MatrixRF u = MatrixRF::identity(n);
    std::vector<RatFunc> pivot(n + 1);
    for (int i = 1; i < n; ++i) {
        std::vector<int> rows(i), cols(i);
        for (int k = 0; k < i; ++k) rows[k] = cols[k] = k + 1;
        pivot[i] = submatrix_det(M, rows, cols);
        if (pivot[i].is_zero())
            throw math_error("vanishing leading principal minor: element is not in the cell");
        for (int j = i + 1; j <= n; ++j) {
            cols[i - 1] = j;
            u.at(i, j) = submatrix_det(M, rows, cols) / pivot[i];
        }
        cols[i - 1] = i;
    }
    return u;
}

// eta_w(g): the unit upper factor of w_rep(word of w) g^T.
MatrixRF eta_raw(const MVContext& ctx, const Word& word_of_elt, const MatrixRF& g) {
    MatrixRF M = w_rep(g.size(), word_of_elt) * g.transposed();
    return lu_unit_upper(M);
}

// Structured inverse-and-flip for a polynomial argument: rows of the result
// share one denominator, which keeps the downstream minors polynomial-sized.
MatrixRF iota_of_lu_structured(const MatrixRF& M) {
    const int n = M.size();
    // numerators N_ij and pivots D_i of the unit upper factor
    std::vector<std::vector<UniPoly>> N(n + 1, std::vector<UniPoly>(n + 1));
    std::vector<UniPoly> D(n + 1);
    D[0] = UniPoly::one();
    auto poly_minor = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        std::vector<std::vector<UniPoly>> block(rows.size(), std::vector<UniPoly>(cols.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < cols.size(); ++c) block[r][c] = M.at(rows[r], cols[c]).num();
        return det_poly(block);
    };
    for (int i = 1; i < n; ++i) {
        std::vector<int> rows(i), cols(i);
        for (int k = 0; k < i; ++k) rows[k] = cols[k] = k + 1;
        D[i] = poly_minor(rows, cols);
        if (D[i].is_zero())
            throw math_error("vanishing leading principal minor: element is not in the cell");
        for (int j = i + 1; j <= n; ++j) {
            cols[i - 1] = j;
            N[i][j] = poly_minor(rows, cols);
        }
    }
    // Q_i = D_i D_{i+1} ... D_{n-1}; V = U^{-1} has V_{ij} = P_ij / Q_i
    std::vector<UniPoly> Q(n + 2);
    Q[n] = UniPoly::one();
    Q[n + 1] = UniPoly::one();
    for (int i = n - 1; i >= 1; --i) Q[i] = D[i] * Q[i + 1];
    std::vector<std::vector<UniPoly>> P(n + 1, std::vector<UniPoly>(n + 1));
    for (int i = 1; i <= n; ++i) P[i][i] = Q[i];
    for (int j = 2; j <= n; ++j)
        for (int i = j - 1; i >= 1; --i) {
            // P_ij = -sum_{k=i+1..j} N_ik P_kj (D_{i+1} ... D_{k-1})
            UniPoly acc;
            for (int k = i + 1; k <= j; ++k) {
                UniPoly term = N[i][k] * P[k][j];
                for (int l = i + 1; l < k; ++l) term = term * D[l];
                acc = acc + term;
            }
            P[i][j] = -acc;
        }
    MatrixRF out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            UniPoly num = P[i][j];
            if ((i + j) % 2 == 1) num = -num;
            out.at(i, j) = RatFunc(std::move(num), Q[i]);
        }
    return out;
}

std::vector<int> sorted_image(const std::vector<int>& perm, int i) {
    std::vector<int> s(perm.begin(), perm.begin() + i);
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

MatrixRF eta(const MVContext& ctx, const WeylElement& w, const MatrixRF& g) {
    return eta_raw(ctx, ctx.group().inverse(w).word, g);
}

MatrixRF eta_inv(const MVContext& ctx, const WeylElement& w, const MatrixRF& z) {
    MatrixRF zi = iota(z);
    MatrixRF M = w_rep(z.size(), w.word) * zi.transposed();
    if (is_polynomial(M)) return iota_of_lu_structured(M);
    return iota(lu_unit_upper(M));
}

RatFunc gen_minor(const MVContext& ctx, const MatrixRF& g, const WeylElement& u,
                  const WeylElement& v, int i) {
    require(i >= 1 && i <= ctx.rank(), "fundamental weight index out of range");
    return submatrix_det(g, sorted_image(permutation(ctx, u), i),
                         sorted_image(permutation(ctx, v), i));
}

RatFunc delta_new(const MVContext& ctx, const MatrixRF& g, const WeylElement& v, int i,
                  const WeylElement& w) {
    WeylElement vw = ctx.group().v_w(v, w);
    WeylElement u = ctx.group().mul(ctx.group().inverse(vw), v);
    return gen_minor(ctx, g, u, v, i);
}

bool chi_trop_nonneg(const IntVec& A) {
    return std::all_of(A.begin(), A.end(), [](Int a) { return a >= 0; });
}

bool gamma_in_Gamma_w(const MVContext& ctx, int chamber, const WeylElement& w) {
    // gamma >= w omega_i in dominance order; in type A both weights are
    // subsets of {1..n} and dominance is the Gale order on sorted sets.
    const int n = matrix_size(ctx);
    const auto& ch = ctx.chamber(chamber);
    auto s = sorted_image(permutation(ctx, ctx.element(ch.witness)), ch.i);
    auto t = sorted_image(permutation(ctx, w), ch.i);
    for (int k = 1; k <= n; ++k) {
        int cs = 0, ct = 0;
        for (int x : s) cs += x <= k;
        for (int x : t) ct += x <= k;
        if (cs < ct) return false;
    }
    return true;
}

IntVec m_gamma_all(const MVContext& ctx, const WeylElement& w, const IntVec& A) {
    const int n = matrix_size(ctx);
    require(static_cast<int>(A.size()) == w.len, "tropical point length must be l(w)");
    Word chart = w.word;
    std::reverse(chart.begin(), chart.end()); // reduced word of w^{-1}
    IntVec rev(A.rbegin(), A.rend());
    MatrixRF z = chart_point(n, chart, rev);
    MatrixRF g = eta_inv(ctx, w, z);
    IntVec out(ctx.num_chambers());
    for (int c = 0; c < ctx.num_chambers(); ++c) {
        RatFunc d = delta_new(ctx, g, ctx.element(ctx.chamber(c).witness), ctx.chamber(c).i, w);
        out[c] = d.valuation();
    }
    return out;
}

Int m_gamma(const MVContext& ctx, const WeylElement& w, const IntVec& A, int chamber) {
    const int n = matrix_size(ctx);
    require(static_cast<int>(A.size()) == w.len, "tropical point length must be l(w)");
    Word chart = w.word;
    std::reverse(chart.begin(), chart.end());
    IntVec rev(A.rbegin(), A.rend());
    MatrixRF g = eta_inv(ctx, w, chart_point(n, chart, rev));
    return delta_new(ctx, g, ctx.element(ctx.chamber(chamber).witness), ctx.chamber(chamber).i, w)
        .valuation();
}

Report theorem_b_check(const MVContext& ctx, const WeylElement& w, const IntVec& A) {
    require(chi_trop_nonneg(A), "theorem-b needs a nonnegative tropical point");
    Report rep;
    rep.check = "theorem-b";
    rep.w = w.word;
    Word chart = w.word;
    std::reverse(chart.begin(), chart.end());

    IntVec oracle = m_gamma_all(ctx, w, A);

    // combinatorial pipeline: the chart coordinates are the Lusztig data of
    // the w-prefix of a reduced word of w0
    Word word = w0_word_through(ctx, w);
    IntVec n(word.size(), 0);
    std::copy(A.begin(), A.end(), n.begin());
    MVPolytope P = polytope_from_lusztig(ctx, word, n);

    for (int c = 0; c < ctx.num_chambers(); ++c) {
        ++rep.items_checked;
        if (oracle[c] != P.bz.m[c])
            rep.add_violation({{"w", w.word},
                               {"chart", chart},
                               {"A", A},
                               {"gamma", ctx.chamber(c).weight.c},
                               {"oracle", oracle[c]},
                               {"bz", P.bz.m[c]}});
    }
    if (!is_in_Pw(ctx, P, w))
        rep.add_violation({{"w", w.word}, {"A", A}, {"reason", "polytope not in P_w"}});
    return rep;
}

Report vanishing_scan(const MVContext& ctx, const WeylElement& w, const ScanOptions& opt) {
    const int n = matrix_size(ctx);
    Report rep;
    rep.check = "conjecture-scan";
    rep.w = w.word;
    Word chart = w.word;
    std::reverse(chart.begin(), chart.end());
    MatrixRF zk = chart_point_symbolic(n, chart, 128);
    const WeylElement e = ctx.group().identity();

    // cell equations: Delta_{omega_i, v omega_i} = 0 off Gamma^w, nonzero on it
    long long eq5 = 0;
    for (int c = 0; c < ctx.num_chambers(); ++c) {
        const auto& ch = ctx.chamber(c);
        WeylElement v = ctx.element(ch.witness);
        RatFunc d = gen_minor(ctx, zk, e, v, ch.i);
        bool in = gamma_in_Gamma_w(ctx, c, w);
        ++eq5;
        ++rep.items_checked;
        if (in == d.is_zero())
            rep.add_violation({{"family", "cell-equations"},
                               {"gamma", ch.weight.c},
                               {"in_Gamma_w", in},
                               {"minor_zero", d.is_zero()}});
        if (v.is_identity() && !(d == RatFunc::from_int(1)))
            rep.add_violation({{"family", "cell-equations"},
                               {"gamma", ch.weight.c},
                               {"reason", "principal flag minor is not 1"}});
        // the redefined minor must be nonvanishing everywhere
        RatFunc dn = delta_new(ctx, zk, v, ch.i, w);
        ++rep.items_checked;
        if (dn.is_zero())
            rep.add_violation({{"family", "delta-new-nonvanishing"}, {"gamma", ch.weight.c}});
    }

    // proven vanishing family: u <=_R w^{-1} w0, w u s_i reduced
    long long proven = 0;
    WeylElement winvw0 = ctx.group().mul(ctx.group().inverse(w), ctx.group().longest());
    for (const auto& u : ctx.group().elements()) {
        if (!ctx.group().weak_leq(u, winvw0, Side::Right)) continue;
        WeylElement wu = ctx.group().mul(w, u);
        for (int i = 1; i <= ctx.rank(); ++i) {
            WeylElement wusi = ctx.group().mul(wu, ctx.group().simple(i));
            if (wusi.len != w.len + u.len + 1) continue;
            ++proven;
            ++rep.items_checked;
            RatFunc d = gen_minor(ctx, zk, u, wusi, i);
            if (!d.is_zero())
                rep.add_violation({{"family", "proven-vanishing"},
                                   {"u", u.word},
                                   {"i", i},
                                   {"minor", d.str()}});
        }
    }

    // conjectural vanishing family: u = v_w^{-1} v, (v s_i)_w = v_w
    long long conjectural = 0;
    for (const auto& v : ctx.group().elements()) {
        WeylElement vw = ctx.group().v_w(v, w);
        WeylElement u = ctx.group().mul(ctx.group().inverse(vw), v);
        for (int i = 1; i <= ctx.rank(); ++i) {
            WeylElement vsi = ctx.group().mul(v, ctx.group().simple(i));
            if (vsi.len < v.len) continue;
            if (!(ctx.group().v_w(vsi, w) == vw)) continue;
            ++conjectural;
            ++rep.items_checked;
            RatFunc d = gen_minor(ctx, zk, u, vsi, i);
            if (!d.is_zero())
                rep.add_violation({{"family", "conjectural-vanishing"},
                                   {"v", v.word},
                                   {"i", i},
                                   {"u", u.word},
                                   {"minor", d.str()}});
        }
    }

    // edge equalities at collapsed edges (the companion conjecture):
    // exhaustive over the {0..bound}^{l(w)} box when it is small, sampled
    // otherwise
    long long equalities = 0;
    std::vector<IntVec> points;
    double box = 1;
    for (int k = 0; k < w.len; ++k) box *= (opt.bound + 1);
    if (box <= 256) {
        IntVec A(w.len, 0);
        std::function<void(int)> walk = [&](int k) {
            if (k == w.len) {
                points.push_back(A);
                return;
            }
            for (Int v = 0; v <= opt.bound; ++v) {
                A[k] = v;
                walk(k + 1);
            }
            A[k] = 0;
        };
        walk(0);
    } else {
        std::mt19937_64 rng(opt.seed);
        for (int s = 0; s < opt.samples; ++s) {
            IntVec A(w.len);
            for (auto& a : A) a = static_cast<Int>(rng() % (opt.bound + 1));
            points.push_back(std::move(A));
        }
    }
    for (const IntVec& A : points) {
        IntVec M = m_gamma_all(ctx, w, A);
        for (int vidx = 0; vidx < ctx.num_elements(); ++vidx) {
            const WeylElement& v = ctx.element(vidx);
            WeylElement vw = ctx.group().v_w(v, w);
            for (int i = 1; i <= ctx.rank(); ++i) {
                if (ctx.is_descent(vidx, i, Side::Right)) continue;
                int vsi = ctx.mult(vidx, i, Side::Right);
                if (!(ctx.group().v_w(ctx.element(vsi), w) == vw)) continue;
                ++equalities;
                ++rep.items_checked;
                Int lhs = M[ctx.chamber_of(vidx, i)] + M[ctx.chamber_of(vsi, i)];
                for (int j = 1; j <= ctx.rank(); ++j)
                    if (j != i) lhs += ctx.cartan().a(j, i) * M[ctx.chamber_of(vidx, j)];
                if (lhs != 0)
                    rep.add_violation({{"family", "edge-equality"},
                                       {"A", A},
                                       {"v", v.word},
                                       {"i", i},
                                       {"excess", lhs}});
            }
        }
    }

    rep.notes.push_back({{"cell_equations_checked", eq5},
                         {"proven_vanishing_checked", proven},
                         {"conjectural_vanishing_checked", conjectural},
                         {"edge_equalities_checked", equalities},
                         {"statement", "empirical evidence only, not proof"}});
    return rep;
}

} // namespace mvpoly
