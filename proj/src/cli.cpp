#include "mvpoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

namespace mvpoly::cli {

namespace {

struct Frac {
    Int num = 0, den = 1;
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Planar embedding of the rank-2 coweight lattice.  Exact-rational output
// forces a rational direction for alpha_2^vee: B2/C2 use (-1,1), the exact
// 135-degree direction; A2 uses (-1/2,1), which keeps the 120-degree
// x-component and rescales y.
void embedding(const CartanData& c, Frac& e2x, Frac& e2y) {
    if (c.kind() == 'A') {
        e2x = {-1, 2};
        e2y = {1, 1};
    } else {
        e2x = {-1, 1};
        e2y = {1, 1};
    }
}

std::string label_of(const Word& w) {
    return w.empty() ? "e" : word_to_string(w);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw schema_error("malformed JSON input");
    return j;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw schema_error("cannot open output file: " + out_path);
    f << text;
}

CartanData parse_kind_arg(const std::string& kind) {
    try {
        return CartanData::parse(kind);
    } catch (const math_error& e) {
        // bad --kind is a usage error on the command line
        throw schema_error(e.what());
    }
}

std::string report_tsv(const Report& rep) {
    std::ostringstream os;
    os << "check\t" << rep.check << "\n";
    os << "w\t" << label_of(rep.w) << "\n";
    os << "passed\t" << (rep.passed ? "true" : "false") << "\n";
    os << "items_checked\t" << rep.items_checked << "\n";
    for (const auto& v : rep.violations) os << "violation\t" << v.dump() << "\n";
    return os.str();
}

int finish_report(const Report& rep, const std::string& format, const std::string& out_path,
                  std::ostream& out) {
    if (format == "tsv")
        emit(report_tsv(rep), out_path, out);
    else
        emit(rep.to_json().dump(1) + "\n", out_path, out);
    return rep.passed ? 0 : 1;
}

// Full reduced word of w0 through the input word, with the data zero-extended.
std::pair<Word, IntVec> extend_to_w0(const MVContext& ctx, Word word, IntVec n) {
    require(ctx.group().is_reduced(word), "input word must be reduced");
    WeylElement w = ctx.group().from_word(word);
    Word tail = ctx.group().mul(ctx.group().inverse(w), ctx.group().longest()).word;
    word.insert(word.end(), tail.begin(), tail.end());
    n.resize(word.size(), 0);
    return {word, n};
}

int cmd_convert(const std::string& in_path, const std::string& kind, const std::string& to,
                const std::string& word_arg, const std::string& out_path, std::ostream& out) {
    json input = parse_json(read_input(in_path));
    std::unique_ptr<MVContext> ctx;
    BZData bz;
    if (input.contains("n")) {
        if (kind.empty()) throw schema_error("Lusztig input needs --kind");
        ctx = std::make_unique<MVContext>(parse_kind_arg(kind));
        auto [word, n] = lusztig_from_json(input);
        for (Int v : n)
            if (v < 0) throw math_error("Lusztig data must be nonnegative");
        auto [full, fulln] = extend_to_w0(*ctx, word, n);
        bz = bz_from_lusztig(*ctx, full, fulln);
    } else if (input.contains("bz")) {
        if (!input.contains("cartan")) throw schema_error("polytope input needs a 'cartan' field");
        ctx = std::make_unique<MVContext>(cartan_from_json(input.at("cartan")));
        bz = polytope_from_json(*ctx, input);
        require(is_bz_datum(*ctx, bz), "input is not a BZ datum");
    } else {
        throw schema_error("input must be a Lusztig datum {word,n} or a polytope {cartan,bz}");
    }

    json result;
    if (to == "bz") {
        result = polytope_to_json(*ctx, bz);
    } else if (to == "vertices") {
        MVPolytope P = polytope_from_bz(*ctx, bz);
        result = vertices_to_json(*ctx, P);
    } else if (to == "word") {
        Word target = parse_word(word_arg);
        require(ctx->group().is_reduced(target) &&
                    ctx->group().from_word(target) == ctx->group().longest(),
                "--word must be a reduced word of w0");
        result = lusztig_to_json(target, lusztig_from_bz(*ctx, bz, target));
    } else {
        throw schema_error("--to must be word, bz or vertices");
    }
    emit(result.dump(1) + "\n", out_path, out);
    return 0;
}

} // namespace

json polygon_json(const MVContext& ctx, const MVPolytope& P) {
    require(ctx.rank() == 2, "polygon output is a rank-2 facility");
    const int m = ctx.group().longest().len;
    std::vector<int> cycle;
    int u = ctx.identity_index();
    cycle.push_back(u);
    for (int k = 0; k < m; ++k) {
        u = ctx.mult(u, k % 2 == 0 ? 1 : 2, Side::Right);
        cycle.push_back(u);
    }
    std::vector<int> other;
    int v = ctx.identity_index();
    for (int k = 0; k + 1 < m; ++k) {
        v = ctx.mult(v, k % 2 == 0 ? 2 : 1, Side::Right);
        other.push_back(v);
    }
    cycle.insert(cycle.end(), other.rbegin(), other.rend());

    Frac e2x, e2y;
    embedding(ctx.cartan(), e2x, e2y);
    json boundary = json::array();
    std::string px, py;
    for (int idx : cycle) {
        const Coweight& mu = P.mu[idx];
        Frac x{mu.c[0] * e2x.den + mu.c[1] * e2x.num, e2x.den};
        Frac y{mu.c[1] * e2y.num, e2y.den};
        x.normalize();
        y.normalize();
        if (!boundary.empty() && boundary.back().at("x") == x.str() &&
            boundary.back().at("y") == y.str()) {
            boundary.back().at("labels").push_back(label_of(ctx.element(idx).word));
        } else {
            boundary.push_back({{"x", x.str()},
                                {"y", y.str()},
                                {"labels", json::array({label_of(ctx.element(idx).word)})}});
        }
    }
    // a fully collapsed cycle is one coincident point
    if (boundary.size() > 1 && boundary.front().at("x") == boundary.back().at("x") &&
        boundary.front().at("y") == boundary.back().at("y")) {
        for (const auto& l : boundary.back().at("labels"))
            boundary.front().at("labels").push_back(l);
        boundary.erase(boundary.end() - 1);
    }
    return json{{"cartan", cartan_to_json(ctx.cartan())}, {"boundary", boundary}};
}

namespace {

std::string polygon_tsv(const json& poly) {
    std::ostringstream os;
    for (const auto& p : poly.at("boundary")) {
        os << p.at("x").get<std::string>() << "\t" << p.at("y").get<std::string>() << "\t";
        bool first = true;
        for (const auto& l : p.at("labels")) {
            if (!first) os << ";";
            first = false;
            os << l.get<std::string>();
        }
        os << "\n";
    }
    return os.str();
}

int cmd_polygon(const std::string& in_path, const std::string& kind, const std::string& format,
                const std::string& out_path, std::ostream& out) {
    CartanData c = parse_kind_arg(kind);
    if (c.rank() != 2) throw schema_error("polygon needs a rank-2 kind");
    MVContext ctx(std::move(c));
    json input = parse_json(read_input(in_path));
    auto [word, n] = lusztig_from_json(input);
    for (Int v : n)
        if (v < 0) throw math_error("Lusztig data must be nonnegative");
    auto [full, fulln] = extend_to_w0(ctx, word, n);
    MVPolytope P = polytope_from_lusztig(ctx, full, fulln);
    json poly = polygon_json(ctx, P);
    if (format == "tsv")
        emit(polygon_tsv(poly), out_path, out);
    else
        emit(poly.dump(1) + "\n", out_path, out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact MV polytope combinatorics"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path, kind, to = "bz", word_arg, w_arg, check;
    std::string format = "json";
    long long bound = 2, samples = 200, seed = 1;
    bool parallel = false;

    auto* convert = app.add_subcommand("convert", "convert between Lusztig/BZ/vertex data");
    convert->add_option("--in", in_path, "input file (- for stdin)");
    convert->add_option("--kind", kind, "Cartan kind, e.g. A2 (needed for Lusztig input)");
    convert->add_option("--to", to, "target: word | bz | vertices");
    convert->add_option("--word", word_arg, "target reduced word of w0, e.g. 2,1,2");
    convert->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--check", check, "theorem-a | zeros | diagonals | crystal-axioms | "
                                         "saito | fan | theorem-b | conjecture-scan | b2-solver")
        ->required();
    verify->add_option("--kind", kind, "Cartan kind, e.g. A3")->required();
    verify->add_option("--w", w_arg, "word of w, e.g. 1,2,3");
    verify->add_option("--bound", bound, "entry bound for generated data");
    verify->add_option("--samples", samples, "sample count for randomized sweeps");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "json | tsv");
    verify->add_option("--out", out_path, "output file (default stdout)");
    verify->add_flag("--parallel", parallel, "run sweep items in parallel");

    auto* polygon = app.add_subcommand("polygon", "rank-2 boundary coordinates");
    polygon->add_option("--kind", kind, "rank-2 Cartan kind")->required();
    polygon->add_option("--in", in_path, "Lusztig datum JSON (- for stdin)");
    polygon->add_option("--format", format, "json | tsv");
    polygon->add_option("--out", out_path, "output file (default stdout)");

    auto* scan = app.add_subcommand("scan", "conjecture scan over all w of a kind");
    scan->add_option("--kind", kind, "Cartan kind (type A)")->required();
    scan->add_option("--bound", bound, "entry bound for tropical points");
    scan->add_option("--samples", samples, "numeric samples per w");
    scan->add_option("--seed", seed, "random seed");
    scan->add_option("--format", format, "json | tsv");
    scan->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (format != "json" && format != "tsv") throw schema_error("--format must be json or tsv");
        if (convert->parsed()) return cmd_convert(in_path, kind, to, word_arg, out_path, out);
        if (polygon->parsed()) return cmd_polygon(in_path, kind, format, out_path, out);

        SweepConfig cfg;
        cfg.bound = bound;
        cfg.samples = static_cast<int>(samples);
        cfg.seed = static_cast<uint64_t>(seed);
        cfg.mode = parallel ? SweepMode::Parallel : SweepMode::Serial;

        if (scan->parsed()) {
            CartanData c = parse_kind_arg(kind);
            if (c.kind() != 'A') throw schema_error("scan needs a type A kind");
            MVContext ctx(std::move(c));
            return finish_report(sweep_conjectures(ctx, cfg), format, out_path, out);
        }

        // verify
        CartanData c = parse_kind_arg(kind);
        if ((check == "theorem-b" || check == "conjecture-scan") && c.kind() != 'A')
            throw schema_error("check '" + check + "' needs a type A kind");
        MVContext ctx(std::move(c));
        Word w = w_arg.empty() ? Word{} : parse_word(w_arg);
        return finish_report(run_check(check, ctx, w, cfg), format, out_path, out);
    } catch (const schema_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

} // namespace mvpoly::cli
