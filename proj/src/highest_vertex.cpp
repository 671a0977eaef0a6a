#include "mvpoly/highest_vertex.hpp"

#include <algorithm>
#include <set>

namespace mvpoly {

bool is_in_Pw(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    return P.mu[ctx.index(w)] == P.mu[ctx.longest_index()];
}

Word w0_word_through(const MVContext& ctx, const WeylElement& w) {
    Word word = w.word;
    Word tail = ctx.group().mul(ctx.group().inverse(w), ctx.group().longest()).word;
    word.insert(word.end(), tail.begin(), tail.end());
    return word;
}

void for_each_Pw(const MVContext& ctx, const WeylElement& w, const Word& word, Int bound,
                 const std::function<void(const MVPolytope&, const IntVec&)>& fn) {
    require(bound >= 0, "bound must be nonnegative");
    const size_t lw = static_cast<size_t>(w.len);
    require(word.size() == static_cast<size_t>(ctx.group().longest().len),
            "need a full reduced word of w0");
    Word prefix(word.begin(), word.begin() + lw);
    require(ctx.group().from_word(prefix) == w && ctx.group().is_reduced(word),
            "word prefix must be a reduced word of w");
    IntVec n(word.size(), 0);
    std::function<void(size_t)> walk = [&](size_t k) {
        if (k == lw) {
            MVPolytope P = polytope_from_lusztig(ctx, word, n);
            check_invariant(is_in_Pw(ctx, P, w), "generated polytope left P_w");
            fn(P, n);
            return;
        }
        for (Int v = 0; v <= bound; ++v) {
            n[k] = v;
            walk(k + 1);
        }
        n[k] = 0;
    };
    walk(0);
}

std::vector<MVPolytope> generate_Pw(const MVContext& ctx, const WeylElement& w, const Word& word,
                                    Int bound) {
    std::vector<MVPolytope> out;
    for_each_Pw(ctx, w, word, bound, [&](const MVPolytope& P, const IntVec&) { out.push_back(P); });
    return out;
}

Report zero_pattern_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    require(is_in_Pw(ctx, P, w), "zero_pattern_check requires a polytope in P_w");
    Report rep;
    rep.check = "zeros";
    rep.w = w.word;
    WeylElement winvw0 = ctx.group().mul(ctx.group().inverse(w), ctx.group().longest());
    auto words = ctx.group().reduced_words(ctx.group().longest());
    if (ctx.rank() > 3) words.resize(std::min<size_t>(words.size(), 50)); // sampled beyond rank 3
    for (const Word& word : words) {
        auto zeros = ctx.group().rightmost_subword(word, winvw0);
        IntVec n = lusztig_from_bz(ctx, P.bz, word);
        for (int pos : zeros) {
            ++rep.items_checked;
            if (n[pos - 1] != 0)
                rep.add_violation({{"word", word}, {"position", pos}, {"value", n[pos - 1]}});
        }
        rep.notes.push_back({{"word", word}, {"forced_zeros", zeros}});
    }
    return rep;
}

Report theorem_a_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    Report rep;
    rep.check = "theorem-a";
    rep.w = w.word;
    std::set<IntVec> allowed;
    for (const auto& v : ctx.group().interval(w)) allowed.insert(P.mu[ctx.index(v)].c);
    for (int v = 0; v < ctx.num_elements(); ++v) {
        ++rep.items_checked;
        const WeylElement& velt = ctx.element(v);
        int vw = ctx.index(ctx.group().v_w(velt, w));
        if (P.mu[v] != P.mu[vw])
            rep.add_violation({{"v", velt.word},
                               {"v_w", ctx.element(vw).word},
                               {"mu_v", P.mu[v].c},
                               {"mu_v_w", P.mu[vw].c}});
        if (!allowed.count(P.mu[v].c))
            rep.add_violation({{"v", velt.word}, {"mu", P.mu[v].c}, {"reason", "vertex outside conv{mu_v : v <= w}"}});
    }
    return rep;
}

Report generalized_diagonal_check(const MVContext& ctx, const MVPolytope& P) {
    Report rep;
    rep.check = "diagonals";
    for (int w = 0; w < ctx.num_elements(); ++w)
        for (int j = 1; j <= ctx.rank(); ++j) {
            if (!ctx.is_descent(w, j, Side::Left)) continue;
            int sjw = ctx.mult(w, j, Side::Left);
            for (int k = 1; k <= ctx.rank(); ++k) {
                if (k == j) continue;
                ++rep.items_checked;
                Int val = P.mu[w].c[k - 1] - P.mu[sjw].c[k - 1]; // <mu_w - mu_{s_j w}, omega_k>
                if (val > 0)
                    rep.add_violation({{"w", ctx.element(w).word}, {"j", j}, {"k", k}, {"value", val}});
            }
        }
    return rep;
}

Report s_jw_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    Report rep;
    rep.check = "s_jw";
    rep.w = w.word;
    int widx = ctx.index(w);
    for (int j = 1; j <= ctx.rank(); ++j) {
        if (!ctx.is_descent(widx, j, Side::Left)) continue;
        ++rep.items_checked;
        int sjw = ctx.mult(widx, j, Side::Left);
        int w0sjstar = ctx.mult(ctx.longest_index(), ctx.group().star(j), Side::Right);
        if (P.mu[sjw] != P.mu[w0sjstar])
            rep.add_violation({{"j", j},
                               {"mu_sjw", P.mu[sjw].c},
                               {"mu_w0sjstar", P.mu[w0sjstar].c}});
    }
    return rep;
}

std::vector<std::vector<int>> fan_partition(const MVContext& ctx, const WeylElement& w) {
    std::map<int, std::vector<int>> classes;
    for (int u = 0; u < ctx.num_elements(); ++u)
        classes[ctx.index(ctx.group().v_w(ctx.element(u), w))].push_back(u);
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    for (auto& [vw, members] : classes) out.push_back(std::move(members));
    return out;
}

bool coarsening_check(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    for (const auto& cls : fan_partition(ctx, w))
        for (size_t k = 1; k < cls.size(); ++k)
            if (P.mu[cls[k]] != P.mu[cls[0]]) return false;
    return true;
}

HighestVertexCertificate certify(const MVContext& ctx, const MVPolytope& P, const WeylElement& w) {
    require(is_in_Pw(ctx, P, w), "certify requires a polytope in P_w");
    HighestVertexCertificate cert;
    cert.w = w;
    cert.polytope = P;
    cert.vw_of.resize(ctx.num_elements());
    for (int v = 0; v < ctx.num_elements(); ++v) {
        cert.vw_of[v] = ctx.index(ctx.group().v_w(ctx.element(v), w));
        check_invariant(P.mu[v] == P.mu[cert.vw_of[v]], "vertex equality failed in certificate");
    }
    Report zeros = zero_pattern_check(ctx, P, w);
    check_invariant(zeros.passed, "zero pattern failed in certificate");
    for (const auto& note : zeros.notes)
        cert.zero_positions[note.at("word").get<Word>()] =
            note.at("forced_zeros").get<std::vector<int>>();
    return cert;
}

} // namespace mvpoly
