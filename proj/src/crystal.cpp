#include "mvpoly/crystal.hpp"

#include <algorithm>

namespace mvpoly {

namespace {

enum class Shift { Lower, Raise }; // f adds alpha^vee, e removes it

// Rebuild the polytope whose Lusztig data along `word` is `n` and check the
// vertex shift law on the stated pinned set.
MVPolytope rebuild_checked(const MVContext& ctx, const MVPolytope& P, const Word& word,
                           IntVec n, int j, bool starred, Shift dir) {
    MVPolytope Q = polytope_from_lusztig(ctx, word, n);
    const Coweight alpha = ctx.cartan().alpha_vee(j);
    const Int sign = (dir == Shift::Lower) ? 1 : -1;
    for (int w = 0; w < ctx.num_elements(); ++w) {
        bool below = ctx.length_of(ctx.mult(w, j, Side::Left)) < ctx.length_of(w);
        if (!starred) {
            // mu'_e = mu_e and mu'_w = mu_w +- alpha_j^vee on {s_j w < w}
            if (below)
                check_invariant(Q.mu[w] == P.mu[w] + sign * alpha,
                                "crystal operator broke the vertex shift law");
            else if (w == ctx.identity_index())
                check_invariant(Q.mu[w] == P.mu[w], "crystal operator moved mu_e");
        } else {
            // mu'_{w0} = mu_{w0} +- alpha_j^vee and mu'_w = mu_w on {s_j w > w}
            if (!below)
                check_invariant(Q.mu[w] == P.mu[w],
                                "starred operator moved a vertex it must fix");
            else if (w == ctx.longest_index())
                check_invariant(Q.mu[w] == P.mu[w] + sign * alpha,
                                "starred operator broke the top shift law");
        }
    }
    return Q;
}

} // namespace

bool is_point(const MVPolytope& P) {
    return std::all_of(P.mu.begin(), P.mu.end(), [&](const Coweight& c) {
        return std::all_of(c.c.begin(), c.c.end(), [](Int x) { return x == 0; });
    });
}

Coweight crystal_wt(const MVContext& ctx, const MVPolytope& P) {
    return Coweight{IntVec(ctx.rank(), 0)} - P.mu[ctx.longest_index()];
}

Int epsilon(const MVContext& ctx, const MVPolytope& P, int j) {
    return lusztig_from_bz(ctx, P.bz, ctx.w0_word_starting(j)).front();
}

Int epsilon_star(const MVContext& ctx, const MVPolytope& P, int j) {
    return lusztig_from_bz(ctx, P.bz, ctx.w0_word_ending(ctx.group().star(j))).back();
}

Int phi(const MVContext& ctx, const MVPolytope& P, int j) {
    return epsilon(ctx, P, j) + pairing(crystal_wt(ctx, P), ctx.cartan().alpha(j));
}

Int phi_star(const MVContext& ctx, const MVPolytope& P, int j) {
    return epsilon_star(ctx, P, j) + pairing(crystal_wt(ctx, P), ctx.cartan().alpha(j));
}

MVPolytope f_op(const MVContext& ctx, const MVPolytope& P, int j) {
    const Word& word = ctx.w0_word_starting(j);
    IntVec n = lusztig_from_bz(ctx, P.bz, word);
    n.front() += 1;
    return rebuild_checked(ctx, P, word, std::move(n), j, false, Shift::Lower);
}

std::optional<MVPolytope> e_op(const MVContext& ctx, const MVPolytope& P, int j) {
    if (P.mu[ctx.identity_index()] == P.mu[ctx.mult(ctx.identity_index(), j, Side::Left)])
        return std::nullopt;
    const Word& word = ctx.w0_word_starting(j);
    IntVec n = lusztig_from_bz(ctx, P.bz, word);
    check_invariant(n.front() > 0, "mu_e != mu_{s_j} but the first edge has length 0");
    n.front() -= 1;
    return rebuild_checked(ctx, P, word, std::move(n), j, false, Shift::Raise);
}

MVPolytope f_star(const MVContext& ctx, const MVPolytope& P, int j) {
    const Word& word = ctx.w0_word_ending(ctx.group().star(j));
    IntVec n = lusztig_from_bz(ctx, P.bz, word);
    n.back() += 1;
    return rebuild_checked(ctx, P, word, std::move(n), j, true, Shift::Lower);
}

std::optional<MVPolytope> e_star(const MVContext& ctx, const MVPolytope& P, int j) {
    // zero iff the edge from mu_{w0 s_{j*}} to mu_{w0} is collapsed
    int w0sjstar = ctx.mult(ctx.longest_index(), ctx.group().star(j), Side::Right);
    if (P.mu[w0sjstar] == P.mu[ctx.longest_index()]) return std::nullopt;
    const Word& word = ctx.w0_word_ending(ctx.group().star(j));
    IntVec n = lusztig_from_bz(ctx, P.bz, word);
    check_invariant(n.back() > 0, "top edge nonzero but last Lusztig entry is 0");
    n.back() -= 1;
    return rebuild_checked(ctx, P, word, std::move(n), j, true, Shift::Raise);
}

MVPolytope saito(const MVContext& ctx, const MVPolytope& P, int j) {
    MVPolytope b = P;
    Int eps = epsilon(ctx, b, j);
    for (Int k = 0; k < eps; ++k) b = *e_op(ctx, b, j);
    // sigma~_j(b') = f_j^{phi*_j(b')} (e*_j)^{eps*_j(b')} (b')
    Int es = epsilon_star(ctx, b, j);
    Int ph = phi_star(ctx, b, j);
    check_invariant(ph >= 0, "phi*_j negative at Saito reflection");
    for (Int k = 0; k < es; ++k) b = *e_star(ctx, b, j);
    for (Int k = 0; k < ph; ++k) b = f_op(ctx, b, j);
    check_invariant(epsilon_star(ctx, b, j) == 0, "Saito reflection image has eps* != 0");
    return b;
}

MVPolytope saito_star(const MVContext& ctx, const MVPolytope& P, int j) {
    MVPolytope b = P;
    Int es = epsilon_star(ctx, b, j);
    for (Int k = 0; k < es; ++k) b = *e_star(ctx, b, j);
    Int eps = epsilon(ctx, b, j);
    Int ph = phi(ctx, b, j);
    check_invariant(ph >= 0, "phi_j negative at starred Saito reflection");
    for (Int k = 0; k < eps; ++k) b = *e_op(ctx, b, j);
    for (Int k = 0; k < ph; ++k) b = f_star(ctx, b, j);
    check_invariant(epsilon(ctx, b, j) == 0, "starred Saito image has eps != 0");
    return b;
}

MVPolytope saito_word(const MVContext& ctx, const MVPolytope& P, const Word& word) {
    MVPolytope b = P;
    for (auto it = word.rbegin(); it != word.rend(); ++it) b = saito(ctx, b, *it);
    return b;
}

MVPolytope saito_star_word(const MVContext& ctx, const MVPolytope& P, const Word& word) {
    MVPolytope b = P;
    for (auto it = word.rbegin(); it != word.rend(); ++it) b = saito_star(ctx, b, *it);
    return b;
}

Coweight mu_via_saito(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    MVPolytope img = saito_word(ctx, P, ctx.group().inverse(w).word);
    Coweight acc = ctx.group().apply(w, crystal_wt(ctx, img));
    return acc - crystal_wt(ctx, P);
}

} // namespace mvpoly
