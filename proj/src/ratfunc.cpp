#include "mvpoly/ratfunc.hpp"

namespace mvpoly {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    if (den_.lowest_coeff().signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::t_power(long long coef, long long exp) {
    if (exp >= 0) return RatFunc(UniPoly::monomial(BigInt(coef), exp), UniPoly::one());
    return RatFunc(UniPoly::monomial(BigInt(coef), 0), UniPoly::monomial(BigInt(1), -exp));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::reciprocal() const {
    require(!is_zero(), "reciprocal of zero");
    return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.reciprocal();
}

long long RatFunc::valuation() const {
    require(!is_zero(), "valuation of the zero function is undefined (vanishing minor?)");
    return num_.ord() - den_.ord();
}

std::string RatFunc::str() const {
    if (den_ == UniPoly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace mvpoly
