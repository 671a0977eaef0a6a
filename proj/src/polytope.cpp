#include "mvpoly/polytope.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace mvpoly {

MVContext::MVContext(CartanData cartan) : cartan_(std::move(cartan)), group_(cartan_) {
    const auto& els = group_.elements();
    const int n = static_cast<int>(els.size());
    const int r = rank();

    e_idx_ = group_.element_index(group_.identity());
    w0_idx_ = group_.element_index(group_.longest());

    inv_.resize(n);
    left_.assign(n, std::vector<int>(r));
    right_.assign(n, std::vector<int>(r));
    coroot_img_.assign(n, std::vector<Coweight>(r));
    for (int k = 0; k < n; ++k) {
        inv_[k] = group_.element_index(group_.inverse(els[k]));
        for (int i = 1; i <= r; ++i) {
            left_[k][i - 1] = group_.element_index(group_.mul(group_.simple(i), els[k]));
            right_[k][i - 1] = group_.element_index(group_.mul(els[k], group_.simple(i)));
            coroot_img_[k][i - 1] = group_.apply(els[k], cartan_.alpha_vee(i));
        }
    }

    // Chamber weights, witnessed by the minimal-length element of the coset.
    // elements() is ordered by length, so the first witness found is minimal.
    std::map<Weight, std::pair<int, int>> found;
    for (int k = 0; k < n; ++k)
        for (int i = 1; i <= r; ++i) {
            Weight w = group_.apply(els[k], cartan_.omega(i));
            found.try_emplace(w, k, i);
        }
    chambers_.reserve(found.size());
    for (auto& [w, wit] : found) {
        ChamberWeight c;
        c.weight = w;
        c.witness = wit.first;
        c.i = wit.second;
        chamber_lookup_[w] = static_cast<int>(chambers_.size());
        chambers_.push_back(std::move(c));
    }
    chamber_of_.assign(n, std::vector<int>(r));
    for (int k = 0; k < n; ++k)
        for (int i = 1; i <= r; ++i)
            chamber_of_[k][i - 1] = chamber_lookup_.at(group_.apply(els[k], cartan_.omega(i)));

    w0_start_.resize(r);
    w0_end_.resize(r);
    for (int j = 1; j <= r; ++j) {
        const WeylElement& w0 = group_.longest();
        Word start{j};
        Word tail = group_.mul(group_.simple(j), w0).word;
        start.insert(start.end(), tail.begin(), tail.end());
        w0_start_[j - 1] = std::move(start);
        Word end = group_.mul(w0, group_.simple(j)).word;
        end.push_back(j);
        w0_end_[j - 1] = std::move(end);
    }
}

int MVContext::chamber_index(const Weight& w) const {
    auto it = chamber_lookup_.find(w);
    require(it != chamber_lookup_.end(), "not a chamber weight of this type");
    return it->second;
}

BZData zero_bz(const MVContext& ctx) {
    return BZData{IntVec(ctx.num_chambers(), 0)};
}

std::vector<Coweight> bz_to_vertices(const MVContext& ctx, const BZData& bz) {
    require(static_cast<int>(bz.m.size()) == ctx.num_chambers(), "BZ vector length mismatch");
    std::vector<Coweight> mu(ctx.num_elements(), Coweight{IntVec(ctx.rank(), 0)});
    for (int k = 0; k < ctx.num_elements(); ++k)
        for (int i = 1; i <= ctx.rank(); ++i)
            mu[k] = mu[k] + bz.m[ctx.chamber_of(k, i)] * ctx.coroot_image(k, i);
    return mu;
}

BZData vertices_to_bz(const MVContext& ctx, const std::vector<Coweight>& mu) {
    require(static_cast<int>(mu.size()) == ctx.num_elements(), "vertex family length mismatch");
    BZData bz;
    bz.m.assign(ctx.num_chambers(), 0);
    std::vector<char> set(ctx.num_chambers(), 0);
    for (int k = 0; k < ctx.num_elements(); ++k)
        for (int i = 1; i <= ctx.rank(); ++i) {
            int c = ctx.chamber_of(k, i);
            Int v = pairing(mu[k], ctx.chamber(c).weight);
            if (!set[c]) {
                bz.m[c] = v;
                set[c] = 1;
            } else if (bz.m[c] != v) {
                throw math_error("vertex family is not GGMS: witnesses disagree on a hyperplane");
            }
        }
    // mu_v lies on the correct side of every hyperplane of mu_w
    for (int v = 0; v < ctx.num_elements(); ++v)
        for (int w = 0; w < ctx.num_elements(); ++w)
            for (int i = 1; i <= ctx.rank(); ++i) {
                int c = ctx.chamber_of(w, i);
                if (pairing(mu[v] - mu[w], ctx.chamber(c).weight) < 0)
                    throw math_error("vertex family is not GGMS: twisted-order violation");
            }
    return bz;
}

std::vector<EdgeViolation> check_edge_inequalities(const MVContext& ctx, const BZData& bz) {
    std::vector<EdgeViolation> out;
    for (int w = 0; w < ctx.num_elements(); ++w)
        for (int i = 1; i <= ctx.rank(); ++i) {
            Int s = bz.m[ctx.chamber_of(ctx.mult(w, i, Side::Right), i)] + bz.m[ctx.chamber_of(w, i)];
            for (int j = 1; j <= ctx.rank(); ++j)
                if (j != i) s += ctx.cartan().a(j, i) * bz.m[ctx.chamber_of(w, j)];
            if (s > 0) out.push_back({w, i, s});
        }
    return out;
}

namespace {

// The eight hyperplane values of the rank-2 face at base w for the ordered
// pair (i, j).  Names follow the Weyl translate: sisj_j is M_{w s_i s_j omega_j}.
struct FaceSlots {
    Int w_i, w_j, si_i, sj_j, sisj_j, sjsi_i, sisjsi_i, sjsisj_j;
};

FaceSlots face_slots(const MVContext& ctx, int w, int i, int j,
                     const std::function<Int(int)>& mval) {
    FaceSlots s;
    int wsi = ctx.mult(w, i, Side::Right);
    int wsj = ctx.mult(w, j, Side::Right);
    int wsisj = ctx.mult(wsi, j, Side::Right);
    int wsjsi = ctx.mult(wsj, i, Side::Right);
    int wsisjsi = ctx.mult(wsisj, i, Side::Right);
    int wsjsisj = ctx.mult(wsjsi, j, Side::Right);
    s.w_i = mval(ctx.chamber_of(w, i));
    s.w_j = mval(ctx.chamber_of(w, j));
    s.si_i = mval(ctx.chamber_of(wsi, i));
    s.sj_j = mval(ctx.chamber_of(wsj, j));
    s.sisj_j = mval(ctx.chamber_of(wsisj, j));
    s.sjsi_i = mval(ctx.chamber_of(wsjsi, i));
    s.sisjsi_i = mval(ctx.chamber_of(wsisjsi, i));
    s.sjsisj_j = mval(ctx.chamber_of(wsjsisj, j));
    return s;
}

// Four relations of a face with a_ij = -1, a_ji = -2: the two printed for
// that orientation and the two for the reversed one.  Returns (lhs, rhs).
std::vector<std::pair<Int, Int>> b2_relations(const FaceSlots& s) {
    std::vector<std::pair<Int, Int>> r;
    r.emplace_back(s.sj_j + s.sisj_j + s.si_i,
                   std::min({2 * s.sisj_j + s.w_i, 2 * s.w_j + s.sisjsi_i,
                             s.w_j + s.sjsisj_j + s.si_i}));
    // Second argument carries coefficient 2 on both terms (the degree-4
    // homogeneity of the relation forces it; a coefficient-1 reading is
    // violated by folded simply-laced data).
    r.emplace_back(s.sjsi_i + 2 * s.sisj_j + s.si_i,
                   std::min({2 * s.w_j + 2 * s.sisjsi_i, 2 * s.sjsisj_j + 2 * s.si_i,
                             s.sisjsi_i + 2 * s.sisj_j + s.w_i}));
    r.emplace_back(s.sisj_j + s.sj_j + s.sjsi_i,
                   std::min({2 * s.sj_j + s.sisjsi_i, 2 * s.sjsisj_j + s.w_i,
                             s.sjsisj_j + s.w_j + s.sjsi_i}));
    r.emplace_back(s.si_i + 2 * s.sj_j + s.sjsi_i,
                   std::min({2 * s.sjsisj_j + 2 * s.w_i, 2 * s.w_j + 2 * s.sjsi_i,
                             s.w_i + 2 * s.sj_j + s.sisjsi_i}));
    return r;
}

std::pair<Int, Int> case1_relation(const FaceSlots& s) {
    return {s.si_i + s.sj_j, std::min(s.w_i + s.sisj_j, s.sjsi_i + s.w_j)};
}

// Orientation with a(p,q) = -1 on a double-bond pair.
std::pair<int, int> minus_one_orientation(const CartanData& c, int i, int j) {
    if (c.a(i, j) == -1) return {i, j};
    return {j, i};
}

// Solve m3 b3 + m4 b4 = t exactly over the integers; nullopt if impossible.
std::optional<std::pair<Int, Int>> solve_two(const Coweight& b3, const Coweight& b4,
                                             const IntVec& t) {
    const int r = static_cast<int>(t.size());
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) {
            Int det = b3.c[p] * b4.c[q] - b3.c[q] * b4.c[p];
            if (det == 0) continue;
            Int num3 = t[p] * b4.c[q] - t[q] * b4.c[p];
            Int num4 = b3.c[p] * t[q] - b3.c[q] * t[p];
            if (num3 % det != 0 || num4 % det != 0) return std::nullopt;
            Int m3 = num3 / det, m4 = num4 / det;
            for (int k = 0; k < r; ++k)
                if (m3 * b3.c[k] + m4 * b4.c[k] != t[k]) return std::nullopt;
            return std::make_pair(m3, m4);
        }
    return std::nullopt;
}

// Unique Lusztig chunk on the (y,x,y,x) side of a B2 face whose (x,y,x,y)
// side is known.  mval must serve the six face values the known side fixes.
std::array<Int, 4> solve_b2_chunk(const MVContext& ctx, int u, int x, int y,
                                  const Coweight& mu_u, const Coweight& mu_end,
                                  const std::function<Int(int)>& mval) {
    int u_y = ctx.mult(u, y, Side::Right);
    int u_yx = ctx.mult(u_y, x, Side::Right);
    int u_yxy = ctx.mult(u_yx, y, Side::Right);
    const Coweight b1 = ctx.coroot_image(u, y);
    const Coweight b2 = ctx.coroot_image(u_y, x);
    const Coweight b3 = ctx.coroot_image(u_yx, y);
    const Coweight b4 = ctx.coroot_image(u_yxy, x);
    const int cy = ctx.chamber_of(u_y, y);
    const int cyx = ctx.chamber_of(u_yx, x);

    IntVec total(ctx.rank());
    Int bound = 0;
    for (int k = 0; k < ctx.rank(); ++k) {
        total[k] = mu_end.c[k] - mu_u.c[k];
        bound += std::max<Int>(total[k], 0);
    }

    auto [oi, oj] = minus_one_orientation(ctx.cartan(), x, y);
    std::optional<std::array<Int, 4>> solution;
    int hits = 0;
    for (Int m1 = 0; m1 <= bound; ++m1)
        for (Int m2 = 0; m2 <= bound; ++m2) {
            IntVec rest(ctx.rank());
            for (int k = 0; k < ctx.rank(); ++k)
                rest[k] = total[k] - m1 * b1.c[k] - m2 * b2.c[k];
            auto tail = solve_two(b3, b4, rest);
            if (!tail || tail->first < 0 || tail->second < 0) continue;
            Coweight v1 = mu_u + m1 * b1;
            Coweight v2 = v1 + m2 * b2;
            Int X = pairing(v1, ctx.chamber(cy).weight);
            Int Y = pairing(v2, ctx.chamber(cyx).weight);
            auto patched = [&](int c) -> Int {
                if (c == cy) return X;
                if (c == cyx) return Y;
                return mval(c);
            };
            FaceSlots slots = face_slots(ctx, u, oi, oj, patched);
            bool ok = true;
            for (auto& [lhs, rhs] : b2_relations(slots))
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            ++hits;
            solution = std::array<Int, 4>{m1, m2, tail->first, tail->second};
        }
    check_invariant(hits == 1, "B2 braid solver expected exactly one solution, found " +
                                   std::to_string(hits));
    return *solution;
}

std::vector<int> prefix_elements(const MVContext& ctx, const Word& word) {
    std::vector<int> pref{ctx.identity_index()};
    for (int letter : word) {
        require(letter >= 1 && letter <= ctx.rank(), "generator index out of range");
        pref.push_back(ctx.mult(pref.back(), letter, Side::Right));
    }
    return pref;
}

std::vector<Coweight> path_vertices(const MVContext& ctx, const std::vector<int>& pref,
                                    const Word& word, const IntVec& n) {
    std::vector<Coweight> mu{Coweight{IntVec(ctx.rank(), 0)}};
    for (size_t k = 0; k < word.size(); ++k)
        mu.push_back(mu.back() + n[k] * ctx.coroot_image(pref[k], word[k]));
    return mu;
}

} // namespace

std::vector<PluckerViolation> check_tropical_plucker(const MVContext& ctx, const BZData& bz) {
    std::vector<PluckerViolation> out;
    auto mval = [&](int c) { return bz.m[c]; };
    for (int w = 0; w < ctx.num_elements(); ++w)
        for (int i = 1; i <= ctx.rank(); ++i)
            for (int j = i + 1; j <= ctx.rank(); ++j) {
                if (ctx.cartan().a(i, j) == 0) continue;
                if (ctx.is_descent(w, i, Side::Right) || ctx.is_descent(w, j, Side::Right))
                    continue;
                Int prod = ctx.cartan().a(i, j) * ctx.cartan().a(j, i);
                if (prod == 1) {
                    auto [lhs, rhs] = case1_relation(face_slots(ctx, w, i, j, mval));
                    if (lhs != rhs) out.push_back({w, i, j, 1, lhs, rhs});
                } else {
                    auto [p, q] = minus_one_orientation(ctx.cartan(), i, j);
                    auto rels = b2_relations(face_slots(ctx, w, p, q, mval));
                    for (size_t k = 0; k < rels.size(); ++k)
                        if (rels[k].first != rels[k].second)
                            out.push_back({w, p, q, static_cast<int>(k + 1), rels[k].first,
                                           rels[k].second});
                }
            }
    return out;
}

bool case2_literal_reading_differs(const MVContext& ctx, const BZData& bz) {
    auto mval = [&](int c) { return bz.m[c]; };
    for (int w = 0; w < ctx.num_elements(); ++w)
        for (int i = 1; i <= ctx.rank(); ++i)
            for (int j = i + 1; j <= ctx.rank(); ++j) {
                if (ctx.cartan().a(i, j) * ctx.cartan().a(j, i) != 2) continue;
                if (ctx.is_descent(w, i, Side::Right) || ctx.is_descent(w, j, Side::Right))
                    continue;
                auto [p, q] = minus_one_orientation(ctx.cartan(), i, j);
                FaceSlots s = face_slots(ctx, w, p, q, mval);
                Int global_q = bz.m[ctx.chamber_of(ctx.identity_index(), q)];
                Int corrected = std::min(
                    {2 * s.sisj_j + s.w_i, 2 * s.w_j + s.sisjsi_i, s.w_j + s.sjsisj_j + s.si_i});
                Int literal = std::min({2 * s.sisj_j + s.w_i, 2 * s.w_j + s.sisjsi_i,
                                        global_q + s.sjsisj_j + s.si_i});
                if (corrected != literal) return true;
            }
    return false;
}

bool is_normalized(const MVContext& ctx, const BZData& bz) {
    for (int i = 1; i <= ctx.rank(); ++i)
        if (bz.m[ctx.chamber_of(ctx.identity_index(), i)] != 0) return false;
    return true;
}

bool is_bz_datum(const MVContext& ctx, const BZData& bz) {
    return is_normalized(ctx, bz) && check_edge_inequalities(ctx, bz).empty() &&
           check_tropical_plucker(ctx, bz).empty();
}

Coweight bz_coweight(const MVContext& ctx, const BZData& bz) {
    Coweight mu{IntVec(ctx.rank(), 0)};
    for (int i = 1; i <= ctx.rank(); ++i)
        mu = mu + bz.m[ctx.chamber_of(ctx.longest_index(), i)] * ctx.coroot_image(ctx.longest_index(), i);
    return mu;
}

IntVec lusztig_from_bz(const MVContext& ctx, const BZData& bz, const Word& word) {
    require(ctx.group().is_reduced(word) &&
                static_cast<int>(word.size()) == ctx.group().longest().len &&
                prefix_elements(ctx, word).back() == ctx.longest_index(),
            "lusztig_from_bz needs a reduced word of w0");
    auto pref = prefix_elements(ctx, word);
    IntVec n(word.size());
    for (size_t k = 0; k < word.size(); ++k) {
        int letter = word[k];
        Int v = -bz.m[ctx.chamber_of(pref[k], letter)] - bz.m[ctx.chamber_of(pref[k + 1], letter)];
        for (int l = 1; l <= ctx.rank(); ++l)
            if (l != letter) v -= ctx.cartan().a(l, letter) * bz.m[ctx.chamber_of(pref[k], l)];
        n[k] = v;
    }
    return n;
}

BZData bz_from_lusztig(const MVContext& ctx, const Word& word, const IntVec& n) {
    require(word.size() == n.size(), "Lusztig vector length must match the word");
    for (Int v : n) require(v >= 0, "Lusztig data must be nonnegative");
    const auto& graph = ctx.group().w0_graph();
    auto start_it = graph.index.find(word);
    require(start_it != graph.index.end(), "bz_from_lusztig needs a reduced word of w0");

    const Int unset = std::numeric_limits<Int>::min();
    IntVec M(ctx.num_chambers(), unset);
    std::vector<std::optional<IntVec>> data(graph.words.size());
    data[start_it->second] = n;
    std::deque<int> queue{start_it->second};

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const Word& cur = graph.words[id];
        const IntVec& nd = *data[id];
        auto pref = prefix_elements(ctx, cur);
        auto mus = path_vertices(ctx, pref, cur, nd);
        for (size_t k = 0; k < pref.size(); ++k)
            for (int i = 1; i <= ctx.rank(); ++i) {
                int c = ctx.chamber_of(pref[k], i);
                Int v = pairing(mus[k], ctx.chamber(c).weight);
                if (M[c] == unset)
                    M[c] = v;
                else
                    check_invariant(M[c] == v, "braid propagation reached a chamber weight "
                                               "with two different values");
            }
        auto mval = [&](int c) -> Int {
            check_invariant(M[c] != unset, "face value missing during propagation");
            return M[c];
        };
        for (const auto& [nid, move] : graph.adj[id]) {
            if (data[nid]) continue;
            IntVec nn = nd;
            const int p = move.pos; // 1-based
            if (move.span == 2) {
                std::swap(nn[p - 1], nn[p]);
            } else if (move.span == 3) {
                int x = cur[p - 1], y = cur[p];
                int u = pref[p - 1];
                // one unknown: M at (u s_y) omega_y, solved from the min relation
                int cy = ctx.chamber_of(ctx.mult(u, y, Side::Right), y);
                FaceSlots s = face_slots(ctx, u, x, y, [&](int c) -> Int {
                    return c == cy ? 0 : mval(c); // the unknown slot is not read
                });
                Int solved = std::min(s.w_i + s.sisj_j, s.sjsi_i + s.w_j) - s.si_i;
                auto patched = [&](int c) -> Int { return c == cy ? solved : mval(c); };
                // re-derive the new chunk from the hyperplane data along (y,x,y)
                int a = u;
                Word sub{y, x, y};
                for (int t = 0; t < 3; ++t) {
                    int letter = sub[t];
                    int b = ctx.mult(a, letter, Side::Right);
                    Int v = -patched(ctx.chamber_of(a, letter)) - patched(ctx.chamber_of(b, letter));
                    for (int l = 1; l <= ctx.rank(); ++l)
                        if (l != letter) v -= ctx.cartan().a(l, letter) * patched(ctx.chamber_of(a, l));
                    nn[p - 1 + t] = v;
                    a = b;
                }
            } else {
                int x = cur[p - 1], y = cur[p];
                auto chunk = solve_b2_chunk(ctx, pref[p - 1], x, y, mus[p - 1], mus[p + 3], mval);
                for (int t = 0; t < 4; ++t) nn[p - 1 + t] = chunk[t];
            }
            for (Int v : nn)
                check_invariant(v >= 0, "braid transition produced a negative edge length");
            data[nid] = std::move(nn);
            queue.push_back(nid);
        }
    }

    for (Int v : M) check_invariant(v != unset, "propagation left a chamber weight unset");
    return BZData{std::move(M)};
}

MVPolytope polytope_from_bz(const MVContext& ctx, BZData bz) {
    require(is_bz_datum(ctx, bz), "not a BZ datum");
    MVPolytope p;
    p.mu = bz_to_vertices(ctx, bz);
    p.bz = std::move(bz);
    return p;
}

MVPolytope polytope_from_lusztig(const MVContext& ctx, const Word& word, const IntVec& n) {
    BZData bz = bz_from_lusztig(ctx, word, n);
    check_invariant(is_bz_datum(ctx, bz), "propagated datum failed BZ validation");
    MVPolytope p;
    p.mu = bz_to_vertices(ctx, bz);
    p.bz = std::move(bz);
    return p;
}

std::array<Int, 3> a2_braid_transition(const std::array<Int, 3>& n) {
    Int p = std::min(n[0], n[2]);
    return {n[1] + n[2] - p, p, n[0] + n[1] - p};
}

std::array<Int, 4> b2_braid_transition(const MVContext& ctx, const Word& src4,
                                       const std::array<Int, 4>& n) {
    require(ctx.group().longest().len == 4 && src4.size() == 4,
            "b2_braid_transition needs a rank-2 type with l(w0) = 4");
    IntVec nv(n.begin(), n.end());
    BZData bz = bz_from_lusztig(ctx, src4, nv);
    Word dst{src4[1], src4[0], src4[1], src4[0]};
    IntVec out = lusztig_from_bz(ctx, bz, dst);
    return {out[0], out[1], out[2], out[3]};
}

} // namespace mvpoly
