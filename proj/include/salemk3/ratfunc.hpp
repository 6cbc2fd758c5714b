#pragma once

#include <string>

#include "salemk3/poly.hpp"

namespace salemk3 {

// Rational function content * num/den in canonical form: num and den are
// primitive coprime integer polynomials with positive leading coefficients,
// den != 0, and the rational content carries sign and scale.  Zero is
// content == 0 with num == 0, den == 1.  Equality of canonical forms is
// structural equality.
class RatFunc {
  public:
    RatFunc() : content_(0), num_(), den_(IntPoly::one()) {}
    RatFunc(const IntPoly& num, const IntPoly& den);        // normalizes; den == 0 throws
    RatFunc(const Rat& c);                                  // constant
    static RatFunc from_poly(const IntPoly& p) { return RatFunc(p, IntPoly::one()); }
    static RatFunc var() { return from_poly(IntPoly::var()); }

    const Rat& content() const { return content_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return content_ == 0; }
    bool is_poly() const { return den_.is_one(); }
    // content * num as one integer polynomial; throws unless content is an
    // integer scalar times a polynomial (den == 1 and denominator of content 1
    // after folding).  as_poly folds the content into the numerator.
    IntPoly as_poly() const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;              // o == 0 throws
    RatFunc inverse() const;

    // Substitution F(g(x)); Horner over RatFunc arithmetic.
    RatFunc compose(const RatFunc& g) const;

    // Exact value at a rational point; nullopt at a pole.
    std::optional<Rat> eval(const Rat& x) const;

    // F(-x).
    RatFunc reflected() const;
    bool is_even() const;
    bool is_odd() const;

    std::string str(const std::string& var = "w") const;

  private:
    void normalize();
    Rat content_;
    IntPoly num_, den_;
};

RatFunc operator+(const IntPoly& p, const RatFunc& f);
RatFunc operator-(const IntPoly& p, const RatFunc& f);
RatFunc operator*(const IntPoly& p, const RatFunc& f);

// Numerator of f written over a common positive-lc primitive denominator,
// i.e. the primitive part of content*num with sign kept.
IntPoly numerator_with_sign(const RatFunc& f);

}  // namespace salemk3
