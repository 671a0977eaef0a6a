#include "mvpoly/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mvpoly {

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] -= b.c[k];
    return r;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
    Coweight r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
    Coweight r = a;
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] -= b.c[k];
    return r;
}

Coweight operator*(Int k, const Coweight& a) {
    Coweight r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

Int pairing(const Coweight& cw, const Weight& w) {
    Int s = 0;
    for (size_t k = 0; k < cw.c.size(); ++k) s += cw.c[k] * w.c[k];
    return s;
}

bool in_positive_coroot_cone(const Coweight& cw) {
    return std::all_of(cw.c.begin(), cw.c.end(), [](Int x) { return x >= 0; });
}

CartanData CartanData::build(char kind, int rank) {
    kind = static_cast<char>(std::toupper(static_cast<unsigned char>(kind)));
    if (kind == 'G')
        throw math_error("G2 tropical Plucker relations out of scope");
    CartanData c;
    c.kind_ = kind;
    c.rank_ = rank;
    if (rank < 1) throw math_error("rank must be at least 1");
    c.cartan_.assign(rank, IntVec(rank, 0));
    auto& m = c.cartan_;
    for (int i = 0; i < rank; ++i) m[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) m[i][i + 1] = m[i + 1][i] = -1;
    };
    switch (kind) {
        case 'A':
            chain(rank);
            break;
        case 'B':
            // Convention: a_{n-1,n} = -1, a_{n,n-1} = -2, so B2 reads
            // [[2,-1],[-2,2]] with a_12 = -1.
            if (rank < 2) throw math_error("type B needs rank >= 2");
            chain(rank - 1);
            m[rank - 2][rank - 1] = -1;
            m[rank - 1][rank - 2] = -2;
            break;
        case 'C':
            if (rank < 2) throw math_error("type C needs rank >= 2");
            chain(rank - 1);
            m[rank - 2][rank - 1] = -2;
            m[rank - 1][rank - 2] = -1;
            break;
        case 'D':
            if (rank < 2) throw math_error("type D needs rank >= 2");
            if (rank == 2) break; // A1 x A1
            chain(rank - 1);
            m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1;
            break;
        case 'E': {
            if (rank < 6 || rank > 8) throw math_error("type E needs rank in {6,7,8}");
            // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 hangs off node 4.
            auto link = [&](int p, int q) { m[p - 1][q - 1] = m[q - 1][p - 1] = -1; };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < rank; ++i) link(i, i + 1);
            break;
        }
        case 'F':
            if (rank != 4) throw math_error("type F needs rank 4");
            m[0][1] = m[1][0] = -1;
            m[1][2] = -1;
            m[2][1] = -2;
            m[2][3] = m[3][2] = -1;
            break;
        default:
            throw math_error(std::string("unknown Cartan kind '") + kind + "'");
    }
    c.validate_and_close();
    return c;
}

CartanData CartanData::parse(std::string_view label) {
    if (label.size() < 2) throw math_error("Cartan label must look like A2, B3, ...");
    char kind = label[0];
    int rank = 0;
    for (size_t k = 1; k < label.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(label[k])))
            throw math_error("bad rank in Cartan label");
        rank = rank * 10 + (label[k] - '0');
    }
    return build(kind, rank);
}

void CartanData::validate_and_close() {
    const int n = rank_;
    for (int i = 0; i < n; ++i) {
        if (cartan_[i][i] != 2) throw math_error("Cartan diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw math_error("off-diagonal Cartan entries must be <= 0");
            if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw math_error("Cartan zero pattern must be symmetric");
            Int prod = cartan_[i][j] * cartan_[j][i];
            if (prod != 0 && prod != 1 && prod != 2)
                throw math_error("G2 tropical Plucker relations out of scope");
        }
    }

    // Close the simple roots under the reflections, in simple-root coords.
    std::set<IntVec> seen;
    std::vector<IntVec> frontier;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& r : frontier) {
            for (int j = 0; j < n; ++j) {
                IntVec s = r;
                Int pr = 0;
                for (int k = 0; k < n; ++k) pr += cartan_[j][k] * r[k];
                s[j] -= pr;
                if (seen.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& r : seen) {
        bool pos = std::all_of(r.begin(), r.end(), [](Int x) { return x >= 0; });
        if (pos) positive_roots_.push_back(r);
        root_signs_[root_to_omega(r)] = pos ? 1 : -1;
    }
}

Weight CartanData::omega(int i) const {
    Weight w;
    w.c.assign(rank_, 0);
    w.c[i - 1] = 1;
    return w;
}

Weight CartanData::alpha(int i) const {
    Weight w;
    w.c.assign(rank_, 0);
    for (int k = 0; k < rank_; ++k) w.c[k] = cartan_[k][i - 1];
    return w;
}

Coweight CartanData::alpha_vee(int i) const {
    Coweight w;
    w.c.assign(rank_, 0);
    w.c[i - 1] = 1;
    return w;
}

Weight CartanData::reflect(int i, const Weight& b) const {
    Weight r = b;
    Int coef = b.c[i - 1]; // <alpha_i^vee, b>
    for (int k = 0; k < rank_; ++k) r.c[k] -= coef * cartan_[k][i - 1];
    return r;
}

Coweight CartanData::reflect(int i, const Coweight& b) const {
    Coweight r = b;
    Int coef = 0; // <b, alpha_i>
    for (int k = 0; k < rank_; ++k) coef += b.c[k] * cartan_[k][i - 1];
    r.c[i - 1] -= coef;
    return r;
}

int CartanData::root_sign(const IntVec& omega_coords) const {
    auto it = root_signs_.find(omega_coords);
    if (it == root_signs_.end()) throw invariant_error("vector is not a root");
    return it->second;
}

IntVec CartanData::root_to_omega(const IntVec& alpha_coords) const {
    IntVec w(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < rank_; ++k) w[i] += cartan_[i][k] * alpha_coords[k];
    return w;
}

} // namespace mvpoly
