#include "mvpoly/checks.hpp"

#include <algorithm>

namespace mvpoly {

using json = nlohmann::json;

namespace {

IntVec random_lusztig(std::mt19937_64& rng, size_t len, Int bound) {
    IntVec n(len);
    for (auto& v : n) v = static_cast<Int>(rng() % (bound + 1));
    return n;
}

// Deterministic list of prefix Lusztig vectors {0..bound}^{l(w)}.
std::vector<IntVec> prefix_box(int len, Int bound) {
    std::vector<IntVec> out;
    IntVec n(len, 0);
    std::function<void(int)> walk = [&](int k) {
        if (k == len) {
            out.push_back(n);
            return;
        }
        for (Int v = 0; v <= bound; ++v) {
            n[k] = v;
            walk(k + 1);
        }
        n[k] = 0;
    };
    walk(0);
    return out;
}

void merge(Report& into, const Report& part) {
    into.items_checked += part.items_checked;
    if (!part.passed) into.passed = false;
    for (const auto& v : part.violations) into.violations.push_back(v);
}

json axiom_violations(const MVContext& ctx, const MVPolytope& P, int j) {
    json bad = json::array();
    Coweight wt0 = crystal_wt(ctx, P);
    const Coweight alpha = ctx.cartan().alpha_vee(j);
    if (phi(ctx, P, j) != epsilon(ctx, P, j) + pairing(wt0, ctx.cartan().alpha(j)))
        bad.push_back({{"axiom", "phi = eps + <wt, alpha_j>"}, {"j", j}});
    auto F = f_op(ctx, P, j);
    if (!(crystal_wt(ctx, F) == wt0 - alpha)) bad.push_back({{"axiom", "wt(f b)"}, {"j", j}});
    if (epsilon(ctx, F, j) != epsilon(ctx, P, j) + 1)
        bad.push_back({{"axiom", "eps(f b)"}, {"j", j}});
    if (phi(ctx, F, j) != phi(ctx, P, j) - 1) bad.push_back({{"axiom", "phi(f b)"}, {"j", j}});
    auto back = e_op(ctx, F, j);
    if (!back || !(*back == P)) bad.push_back({{"axiom", "e f = id"}, {"j", j}});
    auto E = e_op(ctx, P, j);
    if (E.has_value() != (epsilon(ctx, P, j) > 0))
        bad.push_back({{"axiom", "e b = 0 iff eps = 0"}, {"j", j}});
    if (E) {
        if (!(crystal_wt(ctx, *E) == wt0 + alpha)) bad.push_back({{"axiom", "wt(e b)"}, {"j", j}});
        if (epsilon(ctx, *E, j) != epsilon(ctx, P, j) - 1)
            bad.push_back({{"axiom", "eps(e b)"}, {"j", j}});
        if (phi(ctx, *E, j) != phi(ctx, P, j) + 1) bad.push_back({{"axiom", "phi(e b)"}, {"j", j}});
        if (!(f_op(ctx, *E, j) == P)) bad.push_back({{"axiom", "f e = id"}, {"j", j}});
    }
    // starred structure
    if (phi_star(ctx, P, j) != epsilon_star(ctx, P, j) + pairing(wt0, ctx.cartan().alpha(j)))
        bad.push_back({{"axiom", "phi* = eps* + <wt, alpha_j>"}, {"j", j}});
    auto Fs = f_star(ctx, P, j);
    if (!(crystal_wt(ctx, Fs) == wt0 - alpha)) bad.push_back({{"axiom", "wt(f* b)"}, {"j", j}});
    if (epsilon_star(ctx, Fs, j) != epsilon_star(ctx, P, j) + 1)
        bad.push_back({{"axiom", "eps*(f* b)"}, {"j", j}});
    auto backs = e_star(ctx, Fs, j);
    if (!backs || !(*backs == P)) bad.push_back({{"axiom", "e* f* = id"}, {"j", j}});
    auto Es = e_star(ctx, P, j);
    if (Es.has_value() != (epsilon_star(ctx, P, j) > 0))
        bad.push_back({{"axiom", "e* b = 0 iff eps* = 0"}, {"j", j}});
    if (Es && !(f_star(ctx, *Es, j) == P)) bad.push_back({{"axiom", "f* e* = id"}, {"j", j}});
    return bad;
}

Word alternating(int i, int j, int len) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(k % 2 == 0 ? i : j);
    return w;
}

} // namespace

MVPolytope random_polytope(const MVContext& ctx, std::mt19937_64& rng, Int bound) {
    const auto& words = ctx.group().w0_graph().words;
    const Word& word = words[rng() % words.size()];
    return polytope_from_lusztig(ctx, word, random_lusztig(rng, word.size(), bound));
}

Report sweep_theorem_a(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg) {
    Word word = w0_word_through(ctx, w);
    auto box = prefix_box(w.len, cfg.bound);
    std::vector<Report> parts(box.size());
    sweep(box.size(), cfg.mode, [&](size_t k) {
        IntVec n(word.size(), 0);
        std::copy(box[k].begin(), box[k].end(), n.begin());
        MVPolytope P = polytope_from_lusztig(ctx, word, n);
        parts[k] = theorem_a_check(ctx, P, w);
        if (!is_in_Pw(ctx, P, w))
            parts[k].add_violation({{"n", box[k]}, {"reason", "not in P_w"}});
        Report sjw = s_jw_check(ctx, P, w);
        merge(parts[k], sjw);
    });
    Report rep;
    rep.check = "theorem-a";
    rep.w = w.word;
    for (auto& p : parts) merge(rep, p);
    rep.notes.push_back({{"polytopes", box.size()}, {"bound", cfg.bound}});
    return rep;
}

Report sweep_zeros(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg) {
    Word word = w0_word_through(ctx, w);
    auto box = prefix_box(w.len, cfg.bound);
    std::vector<Report> parts(box.size());
    sweep(box.size(), cfg.mode, [&](size_t k) {
        IntVec n(word.size(), 0);
        std::copy(box[k].begin(), box[k].end(), n.begin());
        MVPolytope P = polytope_from_lusztig(ctx, word, n);
        parts[k] = zero_pattern_check(ctx, P, w);
    });
    Report rep;
    rep.check = "zeros";
    rep.w = w.word;
    for (auto& p : parts) merge(rep, p);
    if (!parts.empty()) rep.notes = parts.front().notes; // the per-word zero table
    return rep;
}

Report sweep_diagonals(const MVContext& ctx, const SweepConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    const auto& words = ctx.group().w0_graph().words;
    std::vector<std::pair<Word, IntVec>> items;
    for (int s = 0; s < cfg.samples; ++s) {
        const Word& word = words[rng() % words.size()];
        items.emplace_back(word, random_lusztig(rng, word.size(), cfg.bound));
    }
    std::vector<Report> parts(items.size());
    sweep(items.size(), cfg.mode, [&](size_t k) {
        MVPolytope P = polytope_from_lusztig(ctx, items[k].first, items[k].second);
        parts[k] = generalized_diagonal_check(ctx, P);
        if (!parts[k].passed) parts[k].violations.push_back({{"word", items[k].first},
                                                             {"n", items[k].second}});
    });
    Report rep;
    rep.check = "diagonals";
    for (auto& p : parts) merge(rep, p);
    rep.notes.push_back({{"polytopes", items.size()}, {"bound", cfg.bound}, {"seed", cfg.seed}});
    return rep;
}

Report sweep_crystal_axioms(const MVContext& ctx, const SweepConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    Report rep;
    rep.check = "crystal-axioms";
    for (int s = 0; s < cfg.samples; ++s) {
        MVPolytope P = random_polytope(ctx, rng, cfg.bound);
        for (int j = 1; j <= ctx.rank(); ++j) {
            ++rep.items_checked;
            json bad = axiom_violations(ctx, P, j);
            for (auto& b : bad) rep.add_violation(b);
        }
    }
    rep.notes.push_back({{"polytopes", cfg.samples}, {"bound", cfg.bound}, {"seed", cfg.seed}});
    return rep;
}

Report sweep_saito(const MVContext& ctx, const SweepConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    Report rep;
    rep.check = "saito";
    const auto& els = ctx.group().elements();

    for (int s = 0; s < cfg.samples; ++s) {
        // alternate unrestricted polytopes with generated members of P_w
        const WeylElement& w = els[s % els.size()];
        bool member = (s % 2 == 0);
        MVPolytope P = [&] {
            if (!member) return random_polytope(ctx, rng, cfg.bound);
            Word word = w0_word_through(ctx, w);
            IntVec n(word.size(), 0);
            for (int k = 0; k < w.len; ++k) n[k] = static_cast<Int>(rng() % (cfg.bound + 1));
            return polytope_from_lusztig(ctx, word, n);
        }();

        // braid relations on every rank-2 pair, both structures
        for (int i = 1; i <= ctx.rank(); ++i)
            for (int j = i + 1; j <= ctx.rank(); ++j) {
                Int prod = ctx.cartan().a(i, j) * ctx.cartan().a(j, i);
                int m = prod == 0 ? 2 : (prod == 1 ? 3 : 4);
                ++rep.items_checked;
                if (!(saito_word(ctx, P, alternating(i, j, m)) ==
                      saito_word(ctx, P, alternating(j, i, m))))
                    rep.add_violation({{"law", "sigma braid"}, {"i", i}, {"j", j}});
                ++rep.items_checked;
                if (!(saito_star_word(ctx, P, alternating(i, j, m)) ==
                      saito_star_word(ctx, P, alternating(j, i, m))))
                    rep.add_violation({{"law", "sigma* braid"}, {"i", i}, {"j", j}});
            }

        // Lusztig shift laws
        for (int j = 1; j <= ctx.rank(); ++j) {
            const Word& start = ctx.w0_word_starting(j);
            IntVec n = lusztig_from_bz(ctx, P.bz, start);
            Word rot(start.begin() + 1, start.end());
            rot.push_back(ctx.group().star(start.front()));
            IntVec expect(n.begin() + 1, n.end());
            expect.push_back(0);
            ++rep.items_checked;
            if (lusztig_from_bz(ctx, saito(ctx, P, j).bz, rot) != expect)
                rep.add_violation({{"law", "sigma shift"}, {"j", j}});

            const Word& end = ctx.w0_word_ending(ctx.group().star(j));
            IntVec ne = lusztig_from_bz(ctx, P.bz, end);
            Word rot2{ctx.group().star(end.back())};
            rot2.insert(rot2.end(), end.begin(), end.end() - 1);
            IntVec expect2{0};
            expect2.insert(expect2.end(), ne.begin(), ne.end() - 1);
            ++rep.items_checked;
            if (lusztig_from_bz(ctx, saito_star(ctx, P, j).bz, rot2) != expect2)
                rep.add_violation({{"law", "sigma* shift"}, {"j", j}});
        }

        // membership equivalence: P in P_w iff sigma_{w^{-1}} kills P
        ++rep.items_checked;
        bool killed = is_point(saito_word(ctx, P, ctx.group().inverse(w).word));
        if (killed != is_in_Pw(ctx, P, w))
            rep.add_violation({{"law", "membership via sigma"}, {"w", w.word}});

        // vertex formula for every vertex
        for (const auto& v : els) {
            ++rep.items_checked;
            if (!(mu_via_saito(ctx, P, v) == P.mu[ctx.index(v)]))
                rep.add_violation({{"law", "mu via sigma"}, {"v", v.word}});
        }

        // membership transport under sigma*_{j*}
        if (member) {
            WeylElement winvw0 = ctx.group().mul(ctx.group().inverse(w), ctx.group().longest());
            for (int j = 1; j <= ctx.rank(); ++j) {
                ++rep.items_checked;
                MVPolytope Q = saito_star(ctx, P, ctx.group().star(j));
                bool jdesc = ctx.group().is_descent(winvw0, j, Side::Right);
                WeylElement target =
                    jdesc ? ctx.group().mul(ctx.group().simple(ctx.group().star(j)), w) : w;
                if (!is_in_Pw(ctx, Q, target))
                    rep.add_violation({{"law", "membership transport"}, {"w", w.word}, {"j", j}});
            }
        }
    }
    rep.notes.push_back({{"polytopes", cfg.samples}, {"bound", cfg.bound}, {"seed", cfg.seed}});
    return rep;
}

Report sweep_fan(const MVContext& ctx, const SweepConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    Report rep;
    rep.check = "fan";
    for (int s = 0; s < cfg.samples; ++s) {
        MVPolytope P = random_polytope(ctx, rng, cfg.bound);
        for (const auto& w : ctx.group().elements()) {
            ++rep.items_checked;
            if (coarsening_check(ctx, P, w) != is_in_Pw(ctx, P, w))
                rep.add_violation({{"w", w.word}, {"sample", s}});
        }
    }
    rep.notes.push_back({{"polytopes", cfg.samples}, {"bound", cfg.bound}, {"seed", cfg.seed}});
    return rep;
}

Report sweep_theorem_b(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg) {
    std::vector<IntVec> points;
    double total = 1;
    for (int k = 0; k < w.len; ++k) total *= (cfg.bound + 1);
    if (total <= 4096) {
        points = prefix_box(w.len, cfg.bound);
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s) points.push_back(random_lusztig(rng, w.len, cfg.bound));
    }
    std::vector<Report> parts(points.size());
    sweep(points.size(), cfg.mode, [&](size_t k) { parts[k] = theorem_b_check(ctx, w, points[k]); });
    Report rep;
    rep.check = "theorem-b";
    rep.w = w.word;
    for (auto& p : parts) merge(rep, p);
    rep.notes.push_back({{"points", points.size()},
                         {"exhaustive", total <= 4096},
                         {"bound", cfg.bound},
                         {"seed", cfg.seed}});
    return rep;
}

Report sweep_conjectures(const MVContext& ctx, const SweepConfig& cfg) {
    Report rep;
    rep.check = "conjecture-scan";
    ScanOptions opt;
    opt.bound = cfg.bound;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    long long families[4] = {0, 0, 0, 0};
    for (const auto& w : ctx.group().elements()) {
        Report part = vanishing_scan(ctx, w, opt);
        merge(rep, part);
        const auto& counts = part.notes.front();
        families[0] += counts.at("cell_equations_checked").get<long long>();
        families[1] += counts.at("proven_vanishing_checked").get<long long>();
        families[2] += counts.at("conjectural_vanishing_checked").get<long long>();
        families[3] += counts.at("edge_equalities_checked").get<long long>();
    }
    rep.notes.push_back({{"cell_equations_checked", families[0]},
                         {"proven_vanishing_checked", families[1]},
                         {"conjectural_vanishing_checked", families[2]},
                         {"edge_equalities_checked", families[3]},
                         {"statement", "empirical evidence only, not proof"}});
    return rep;
}

Report sweep_b2_solver(const MVContext& ctx, const SweepConfig& cfg) {
    require(ctx.group().longest().len == 4, "b2-solver check needs a rank-2 double-bond type");
    Word src{1, 2, 1, 2}, dst{2, 1, 2, 1};
    auto coweight_of = [&](const Word& word, const std::array<Int, 4>& n) {
        Coweight t{IntVec(2, 0)};
        int u = ctx.identity_index();
        for (int k = 0; k < 4; ++k) {
            t = t + n[k] * ctx.coroot_image(u, word[k]);
            u = ctx.mult(u, word[k], Side::Right);
        }
        return t;
    };
    auto box = prefix_box(4, cfg.bound);
    std::vector<Report> parts(box.size());
    std::vector<char> literal_differs(box.size(), 0);
    sweep(box.size(), cfg.mode, [&](size_t k) {
        parts[k].check = "b2-solver";
        std::array<Int, 4> n{box[k][0], box[k][1], box[k][2], box[k][3]};
        ++parts[k].items_checked;
        try {
            auto m = b2_braid_transition(ctx, src, n); // throws unless unique
            if (!(coweight_of(src, n) == coweight_of(dst, m)))
                parts[k].add_violation({{"n", box[k]}, {"reason", "coweight not preserved"}});
            if (b2_braid_transition(ctx, dst, m) != n)
                parts[k].add_violation({{"n", box[k]}, {"reason", "not involutive"}});
            // side report: does the literal reading of the case-2 relation
            // (global M_{omega_j} in the third argument) ever differ?
            BZData bz = bz_from_lusztig(ctx, src, IntVec(n.begin(), n.end()));
            literal_differs[k] = case2_literal_reading_differs(ctx, bz);
        } catch (const invariant_error& e) {
            parts[k].add_violation({{"n", box[k]}, {"reason", e.what()}});
        }
    });
    Report rep2;
    rep2.check = "b2-solver";
    for (auto& p : parts) merge(rep2, p);
    long long differs = std::count(literal_differs.begin(), literal_differs.end(), 1);
    rep2.notes.push_back({{"bound", cfg.bound},
                          {"case2_literal_reading_differs_on", differs},
                          {"of", static_cast<long long>(box.size())}});
    return rep2;
}

Report run_check(const std::string& name, const MVContext& ctx, const Word& w,
                 const SweepConfig& cfg) {
    if (name == "theorem-a") return sweep_theorem_a(ctx, ctx.group().from_word(w), cfg);
    if (name == "zeros") return sweep_zeros(ctx, ctx.group().from_word(w), cfg);
    if (name == "diagonals") return sweep_diagonals(ctx, cfg);
    if (name == "crystal-axioms") return sweep_crystal_axioms(ctx, cfg);
    if (name == "saito") return sweep_saito(ctx, cfg);
    if (name == "fan") return sweep_fan(ctx, cfg);
    if (name == "theorem-b") return sweep_theorem_b(ctx, ctx.group().from_word(w), cfg);
    if (name == "conjecture-scan") return sweep_conjectures(ctx, cfg);
    if (name == "b2-solver") return sweep_b2_solver(ctx, cfg);
    throw schema_error("unknown check '" + name + "'");
}

} // namespace mvpoly
