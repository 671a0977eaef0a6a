#include "mvpoly/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace mvpoly {

namespace {

constexpr size_t kMaxElements = 1'000'000;
constexpr size_t kMaxWords = 2'000'000;
constexpr int kEnumerationRankCap = 4;

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    IntMat r(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

IntVec matvec(const IntMat& a, const IntVec& v) {
    const int n = static_cast<int>(a.size());
    IntVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
    return r;
}

} // namespace

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ',';
        os << w[k];
    }
    return os.str();
}

Word parse_word(const std::string& s) {
    Word w;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        w.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',' || ch == ' ') {
            flush();
        } else if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else {
            throw schema_error("bad word syntax: " + s);
        }
    }
    flush();
    return w;
}

WeylGroup::WeylGroup(CartanData cartan) : cartan_(std::move(cartan)) {
    const int n = cartan_.rank();
    gens_.reserve(n);
    for (int i = 1; i <= n; ++i) {
        WeylElement g;
        g.m = identity_matrix(n);
        for (int k = 0; k < n; ++k) g.m[k][i - 1] -= cartan_.a(k + 1, i);
        g.minv = g.m; // s_i is an involution
        g.word = {i};
        g.len = 1;
        gens_.push_back(std::move(g));
    }

    // Longest element by greedy ascent on the right.
    WeylElement w = identity();
    for (;;) {
        int up = 0;
        for (int i = 1; i <= n; ++i)
            if (!is_descent(w, i, Side::Right)) {
                up = i;
                break;
            }
        if (up == 0) break;
        w = mul(w, gens_[up - 1]);
    }
    w0_ = std::move(w);

    star_.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        IntMat s = matmul(matmul(w0_.m, gens_[i - 1].m), w0_.m);
        for (int j = 1; j <= n; ++j)
            if (s == gens_[j - 1].m) {
                star_[i - 1] = j;
                break;
            }
        check_invariant(star_[i - 1] != 0, "star involution not found");
    }
}

WeylElement WeylGroup::identity() const {
    WeylElement e;
    e.m = identity_matrix(rank());
    e.minv = e.m;
    e.len = 0;
    return e;
}

WeylElement WeylGroup::simple(int i) const {
    require(i >= 1 && i <= rank(), "generator index out of range");
    return gens_[i - 1];
}

Word WeylGroup::canonical_word(const IntMat& action_inv) const {
    const int n = rank();
    Word out;
    IntMat minv = action_inv;
    const IntMat id = identity_matrix(n);
    while (minv != id) {
        int pick = 0;
        for (int i = 1; i <= n; ++i) {
            // i is a left descent iff w^{-1} alpha_i is negative
            if (cartan_.root_sign(matvec(minv, cartan_.alpha(i).c)) < 0) {
                pick = i;
                break;
            }
        }
        check_invariant(pick != 0, "no descent found for nontrivial element");
        out.push_back(pick);
        minv = matmul(minv, gens_[pick - 1].m);
    }
    return out;
}

WeylElement WeylGroup::from_word(const Word& w) const {
    WeylElement cur = identity();
    for (int i : w) cur = mul(cur, simple(i));
    return cur;
}

WeylElement WeylGroup::mul(const WeylElement& a, const WeylElement& b) const {
    WeylElement r;
    r.m = matmul(a.m, b.m);
    r.minv = matmul(b.minv, a.minv);
    r.word = canonical_word(r.minv);
    r.len = static_cast<int>(r.word.size());
    return r;
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
    WeylElement r;
    r.m = a.minv;
    r.minv = a.m;
    r.word = canonical_word(r.minv);
    r.len = a.len;
    return r;
}

bool WeylGroup::is_reduced(const Word& w) const {
    return from_word(w).len == static_cast<int>(w.size());
}

Weight WeylGroup::apply(const WeylElement& w, const Weight& b) const {
    return Weight{matvec(w.m, b.c)};
}

Coweight WeylGroup::apply(const WeylElement& w, const Coweight& b) const {
    // Apply the witness word right-to-left: w . b = s_{i_1}( ... s_{i_k}(b)).
    Coweight r = b;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = cartan_.reflect(*it, r);
    return r;
}

bool WeylGroup::is_descent(const WeylElement& w, int i, Side side) const {
    const IntVec alpha = cartan_.alpha(i).c;
    const IntMat& m = (side == Side::Right) ? w.m : w.minv;
    return cartan_.root_sign(matvec(m, alpha)) < 0;
}

std::set<int> WeylGroup::descents(const WeylElement& w, Side side) const {
    std::set<int> d;
    for (int i = 1; i <= rank(); ++i)
        if (is_descent(w, i, side)) d.insert(i);
    return d;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
    // Lifting-property recursion, iterative form.
    WeylElement uu = u, ww = w;
    while (ww.len > 0) {
        if (uu.len > ww.len) return false;
        int i = 0;
        for (int k = 1; k <= rank(); ++k)
            if (is_descent(ww, k, Side::Left)) {
                i = k;
                break;
            }
        if (is_descent(uu, i, Side::Left)) uu = mul(gens_[i - 1], uu);
        ww = mul(gens_[i - 1], ww);
    }
    return uu.len == 0;
}

bool WeylGroup::weak_leq(const WeylElement& u, const WeylElement& w, Side side) const {
    if (side == Side::Right) {
        // u <=_R w iff l(u) + l(u^{-1} w) = l(w)
        WeylElement q = mul(inverse(u), w);
        return u.len + q.len == w.len;
    }
    WeylElement q = mul(w, inverse(u));
    return q.len + u.len == w.len;
}

WeylElement WeylGroup::demazure(const WeylElement& u, const WeylElement& w) const {
    WeylElement res = w;
    for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
        WeylElement t = mul(gens_[*it - 1], res);
        if (t.len > res.len) res = std::move(t); // s_i * x = max{x, s_i x}
    }
    return res;
}

WeylElement WeylGroup::v_w(const WeylElement& v, const WeylElement& w) const {
    // v_w = (v w0) ((w0 v^{-1}) * w)
    WeylElement vw0 = mul(v, w0_);
    WeylElement w0vinv = mul(w0_, inverse(v));
    return mul(vw0, demazure(w0vinv, w));
}

WeylElement WeylGroup::v_w_brute(const WeylElement& v, const WeylElement& w) const {
    std::vector<WeylElement> cands;
    for (const auto& x : interval(w))
        if (weak_leq(x, v, Side::Right)) cands.push_back(x);
    int best = -1;
    for (const auto& x : cands) best = std::max(best, x.len);
    std::vector<WeylElement> top;
    for (const auto& x : cands)
        if (x.len == best) top.push_back(x);
    check_invariant(top.size() == 1, "maximal element of [e,v]_R cap [e,w] is not unique");
    return top.front();
}

std::vector<int> WeylGroup::rightmost_subword(const Word& word_of_w0, const WeylElement& w) const {
    WeylElement full = from_word(word_of_w0);
    require(full == w0_ && full.len == static_cast<int>(word_of_w0.size()),
            "rightmost_subword needs a reduced word of w0");
    std::vector<int> pos;
    WeylElement rem = w;
    for (int k = static_cast<int>(word_of_w0.size()); k >= 1; --k) {
        if (rem.len == 0) break;
        int i = word_of_w0[k - 1];
        if (is_descent(rem, i, Side::Right)) {
            pos.push_back(k);
            rem = mul(rem, gens_[i - 1]);
        }
    }
    check_invariant(rem.len == 0, "greedy subword extraction failed");
    std::sort(pos.begin(), pos.end());
    return pos;
}

std::vector<Word> WeylGroup::reduced_words(const WeylElement& w, bool allow_large) const {
    if (!allow_large && rank() > kEnumerationRankCap)
        throw math_error("reduced-word enumeration capped at rank <= 4 (pass allow_large to override)");
    std::map<IntMat, std::vector<Word>> memo;
    size_t budget = kMaxWords;
    auto rec = [&](auto&& self, const WeylElement& x) -> const std::vector<Word>& {
        auto it = memo.find(x.m);
        if (it != memo.end()) return it->second;
        std::vector<Word> words;
        if (x.len == 0) {
            words.push_back({});
        } else {
            for (int i = 1; i <= rank(); ++i) {
                if (!is_descent(x, i, Side::Left)) continue;
                for (const Word& tail : self(self, mul(gens_[i - 1], x))) {
                    Word word;
                    word.reserve(tail.size() + 1);
                    word.push_back(i);
                    word.insert(word.end(), tail.begin(), tail.end());
                    words.push_back(std::move(word));
                    if (--budget == 0) throw math_error("reduced-word enumeration budget exceeded");
                }
            }
        }
        return memo.emplace(x.m, std::move(words)).first->second;
    };
    return rec(rec, w);
}

std::vector<BraidMove> WeylGroup::braid_neighbors(const Word& word) const {
    std::vector<BraidMove> moves;
    const int m = static_cast<int>(word.size());
    for (int p = 1; p <= m; ++p) {
        int x = word[p - 1];
        if (p + 1 > m) break;
        int y = word[p];
        if (x == y) continue;
        Int prod = cartan_.a(x, y) * cartan_.a(y, x);
        if (prod == 0) {
            Word nw = word;
            std::swap(nw[p - 1], nw[p]);
            moves.push_back({p, 2, std::move(nw)});
        } else if (prod == 1 && p + 2 <= m && word[p + 1] == x) {
            Word nw = word;
            nw[p - 1] = y;
            nw[p] = x;
            nw[p + 1] = y;
            moves.push_back({p, 3, std::move(nw)});
        } else if (prod == 2 && p + 3 <= m && word[p + 1] == x && word[p + 2] == y) {
            Word nw = word;
            nw[p - 1] = y;
            nw[p] = x;
            nw[p + 1] = y;
            nw[p + 2] = x;
            moves.push_back({p, 4, std::move(nw)});
        }
    }
    return moves;
}

std::vector<WeylElement> WeylGroup::interval(const WeylElement& w) const {
    std::map<IntMat, WeylElement> closure;
    WeylElement e = identity();
    closure.emplace(e.m, e);
    for (int i : w.word) {
        std::vector<WeylElement> grown;
        for (const auto& [mat, x] : closure) {
            WeylElement y = mul(x, gens_[i - 1]);
            if (!closure.count(y.m)) grown.push_back(std::move(y));
        }
        for (auto& y : grown) closure.emplace(y.m, std::move(y));
    }
    std::vector<WeylElement> out;
    out.reserve(closure.size());
    for (auto& [mat, x] : closure) out.push_back(x);
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        return std::tie(a.len, a.m) < std::tie(b.len, b.m);
    });
    return out;
}

void WeylGroup::build_elements() const {
    std::map<IntMat, WeylElement> seen;
    WeylElement e = identity();
    seen.emplace(e.m, e);
    std::vector<WeylElement> frontier{e};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& x : frontier) {
            for (int i = 1; i <= rank(); ++i) {
                WeylElement y = mul(x, gens_[i - 1]);
                if (seen.size() >= kMaxElements)
                    throw math_error("Weyl group too large for full enumeration");
                if (!seen.count(y.m)) {
                    seen.emplace(y.m, y);
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    elements_.reserve(seen.size());
    for (auto& [mat, x] : seen) elements_.push_back(x);
    std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
        return std::tie(a.len, a.m) < std::tie(b.len, b.m);
    });
    for (size_t k = 0; k < elements_.size(); ++k) element_index_[elements_[k].m] = static_cast<int>(k);
}

const std::vector<WeylElement>& WeylGroup::elements() const {
    std::call_once(elements_once_, [this] { build_elements(); });
    return elements_;
}

int WeylGroup::element_index(const WeylElement& w) const {
    elements();
    auto it = element_index_.find(w.m);
    check_invariant(it != element_index_.end(), "element not in enumerated group");
    return it->second;
}

const WeylGroup::W0Graph& WeylGroup::w0_graph(bool allow_large) const {
    std::call_once(w0_graph_once_, [this, allow_large] {
        auto g = std::make_unique<W0Graph>();
        g->words = reduced_words(w0_, allow_large);
        std::sort(g->words.begin(), g->words.end());
        for (size_t k = 0; k < g->words.size(); ++k) g->index[g->words[k]] = static_cast<int>(k);
        g->adj.resize(g->words.size());
        for (size_t k = 0; k < g->words.size(); ++k) {
            for (auto& mv : braid_neighbors(g->words[k])) {
                auto it = g->index.find(mv.word);
                check_invariant(it != g->index.end(), "braid move left the reduced-word set");
                g->adj[k].emplace_back(it->second, mv);
            }
        }
        w0_graph_ = std::move(g);
    });
    return *w0_graph_;
}

} // namespace mvpoly
