#pragma once

#include "mvpoly/bigint.hpp"
#include "mvpoly/errors.hpp"

namespace mvpoly {

/*
  Sparse univariate polynomial in t with BigInt coefficients and 64-bit
  exponents.  The wide exponent range doubles as a Kronecker encoding of
  multivariate polynomials (a_k = t^{B^k}) for the symbolic identity checks,
  so exponents can be huge while the term count stays small.
*/
class UniPoly {
  public:
    struct Term {
        long long e;
        BigInt c;
        bool operator==(const Term&) const = default;
    };

    UniPoly() = default;
    static UniPoly constant(long long v) { return monomial(BigInt(v), 0); }
    static UniPoly monomial(BigInt c, long long e);
    static UniPoly one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    long long ord() const;    // lowest exponent; polynomial must be nonzero
    long long degree() const; // highest exponent
    const BigInt& lowest_coeff() const;
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const UniPoly&) const = default;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly shifted(long long k) const; // multiply by t^k

    std::string str() const;

  private:
    std::vector<Term> terms_; // sorted by exponent, no zero coefficients
};

} // namespace mvpoly
