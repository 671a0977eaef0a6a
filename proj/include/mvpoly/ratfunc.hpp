#pragma once

#include "mvpoly/upoly.hpp"

namespace mvpoly {

/*
  Exact fraction of integer-coefficient polynomials in t.  Fractions are kept
  unreduced (no polynomial gcd anywhere); only the denominator's sign is
  canonicalized.  Equality cross-multiplies and the valuation reads orders of
  vanishing, so reduction is never required for correctness.
*/
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc from_int(long long v) { return RatFunc(UniPoly::constant(v), UniPoly::one()); }
    // coef * t^exp with exp possibly negative
    static RatFunc t_power(long long coef, long long exp);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc reciprocal() const;

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

    // ord_t(num) - ord_t(den); undefined (throws math_error) on zero.
    long long valuation() const;

    std::string str() const;

  private:
    UniPoly num_, den_;
};

} // namespace mvpoly
