#pragma once

#include <vector>

#include "salemk3/poly.hpp"
#include "salemk3/ratfunc.hpp"

namespace salemk3 {

// Hard cap on interval bisections per operation.
inline constexpr long kBisectionBudget = 1'000'000;

// A real algebraic number: irreducible primitive minimal polynomial with
// positive leading coefficient plus an open rational isolating interval
// (lo, hi) whose endpoints are not roots.  Refinement is monotone: the
// interval only ever shrinks.
class AlgebraicReal {
  public:
    explicit AlgebraicReal(const Rat& value);
    // Selects the unique root of p inside (lo, hi); InputError if the count
    // over all irreducible factors differs from one.
    static AlgebraicReal root_of(const IntPoly& p, const Rat& lo, const Rat& hi);
    // All real roots of p, ascending, one entry per distinct root.
    static std::vector<AlgebraicReal> roots_of(const IntPoly& p);

    const IntPoly& minpoly() const { return minpoly_; }
    Rat lo() const { return lo_; }
    Rat hi() const { return hi_; }

    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat rational_value() const;  // requires is_rational()
    bool is_algebraic_integer() const { return minpoly_.lc() == 1; }

    void refine() const;                       // one bisection step
    void refine_below(const Rat& width) const; // until hi - lo < width

    int compare(const AlgebraicReal& o) const; // -1 / 0 / +1
    int compare(const Rat& q) const;
    int sign() const { return compare(Rat(0)); }
    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }

    double approx() const;
    std::string str(const std::string& var = "w") const;

  private:
    AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi);
    IntPoly minpoly_;
    mutable Rat lo_, hi_;
};

// Exact sign of F at x; InputError("pole at ...") if den(x) == 0.
int sign_at(const RatFunc& F, const AlgebraicReal& x);

// F(x) as an algebraic number via Res_w(T(w), y*D(w) - N(w)) plus
// interval-based selection of the irreducible factor.
AlgebraicReal eval_ratfunc(const RatFunc& F, const AlgebraicReal& x);

// The positive root of what^2 = tau + 2 (i.e. the half-trace shift);
// InputError if tau <= -2.
AlgebraicReal sqrt_shift(const AlgebraicReal& tau);

// Element of the number field Q[w]/(T), T irreducible (not necessarily
// monic).  Arithmetic is exact; inverse via the extended Euclidean algorithm.
class FieldElement {
  public:
    FieldElement(IntPoly T, const IntPoly& rep);   // rep reduced mod T
    static FieldElement generator(const IntPoly& T);
    static FieldElement constant(const IntPoly& T, const Rat& c);

    const IntPoly& modulus() const { return T_; }
    const std::vector<Rat>& rep() const { return rep_; }
    bool is_zero() const { return rep_.empty(); }
    bool is_rational() const { return rep_.size() <= 1; }

    bool operator==(const FieldElement& o) const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;                  // InputError on zero

    // p(this) for an integer polynomial p, reduced mod T.
    FieldElement apply(const IntPoly& p) const;
    // F(this); InputError("pole ...") if the denominator vanishes in the field.
    FieldElement apply(const RatFunc& F) const;

    // Exact sign at the embedding selected by an isolating interval of the
    // generator (x must have minpoly == T).
    int sign_at_root(const AlgebraicReal& x) const;

  private:
    FieldElement(IntPoly T, std::vector<Rat> rep) : T_(std::move(T)), rep_(std::move(rep)) {}
    IntPoly T_;
    std::vector<Rat> rep_;
};

}  // namespace salemk3
