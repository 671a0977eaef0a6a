#include "mvpoly/upoly.hpp"

#include <map>
#include <sstream>

namespace mvpoly {

UniPoly UniPoly::monomial(BigInt c, long long e) {
    UniPoly p;
    if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
    return p;
}

long long UniPoly::ord() const {
    check_invariant(!terms_.empty(), "ord of the zero polynomial");
    return terms_.front().e;
}

long long UniPoly::degree() const {
    check_invariant(!terms_.empty(), "degree of the zero polynomial");
    return terms_.back().e;
}

const BigInt& UniPoly::lowest_coeff() const {
    check_invariant(!terms_.empty(), "lowest coefficient of the zero polynomial");
    return terms_.front().c;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].e < b.terms_[j].e)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].e < a.terms_[i].e) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            BigInt c = a.terms_[i].c + b.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({a.terms_[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::map<long long, BigInt> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            BigInt prod = ta.c * tb.c;
            auto [it, fresh] = acc.try_emplace(ta.e + tb.e, prod);
            if (!fresh) it->second += prod;
        }
    UniPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
    return r;
}

UniPoly UniPoly::shifted(long long k) const {
    UniPoly r = *this;
    for (auto& t : r.terms_) t.e += k;
    return r;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.c.str();
        if (!first) {
            os << (c[0] == '-' ? " - " : " + ");
            if (c[0] == '-') c = c.substr(1);
        }
        first = false;
        if (t.e == 0) {
            os << c;
        } else {
            if (c != "1") os << c << "*";
            os << "t";
            if (t.e != 1) os << "^" << t.e;
        }
    }
    return os.str();
}

} // namespace mvpoly
