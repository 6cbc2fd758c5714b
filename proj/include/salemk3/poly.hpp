#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/error.hpp"

namespace salemk3 {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending order with no trailing zeros.  The zero polynomial has an empty
// coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly var() { return IntPoly({0, 1}); }
    static IntPoly constant(Int a);
    static IntPoly monomial(int deg, Int a = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Int coeff(int i) const;                                 // 0 outside range
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const;                                  // leading coefficient
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& a) const;
    IntPoly shifted(int k) const;                           // * x^k, k >= 0

    IntPoly derivative() const;
    IntPoly reversed() const;                               // x^deg * p(1/x)
    IntPoly compose(const IntPoly& g) const;                // p(g(x))
    IntPoly pow(unsigned e) const;

    Int content() const;                                    // >= 0, gcd of coeffs
    IntPoly primitive_part() const;                         // content divided out, lc sign kept
    IntPoly normalized() const;                             // primitive with lc > 0

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // Sign of p(x) at a rational point, in {-1,0,1}.
    int sign_at(const Rat& x) const;

    bool is_palindromic() const;                            // c_i == c_{d-i}
    bool is_antipalindromic() const;                        // c_i == -c_{d-i}

    std::string str(const std::string& var = "w") const;

  private:
    void trim();
    std::vector<Int> c_;
};

IntPoly operator*(const Int& a, const IntPoly& p);

// Quotient/remainder.  divrem_monic requires a monic divisor and stays in Z.
// try_divide_exact returns the quotient iff b divides a exactly over Z.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b);
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly gcd(const IntPoly& a, const IntPoly& b);            // normalized (lc > 0) or zero
Rat resultant(const IntPoly& a, const IntPoly& b);

// --- root counting -------------------------------------------------------

// Interval endpoint: finite rational or +/- infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;
    static Bound neg_inf() { return {NegInf, 0}; }
    static Bound pos_inf() { return {PosInf, 0}; }
    static Bound at(Rat v) { return {Finite, std::move(v)}; }
};

// Number of distinct real roots of p in the open interval (a, b).  Finite
// endpoints that are themselves roots are not counted.
int count_real_roots(const IntPoly& p, const Bound& a, const Bound& b);
int count_real_roots(const IntPoly& p);

// Sturm chain of a polynomial, reusable across many interval queries
// (count_real_roots rebuilds the chain on every call).  The input need not
// be squarefree: the signed remainder chain of (p, p') still counts
// *distinct* roots, as long as no query point is a multiple root of p.
class SturmSequence {
  public:
    explicit SturmSequence(const IntPoly& p);
    // distinct real roots in the open interval (a, b)
    int count(const Bound& a, const Bound& b) const;
    // sign variation count; V(a) - V(b) is the number of distinct roots in (a, b]
    int variations(const Bound& b) const;
    // degree of gcd(p, p'); zero exactly when p is squarefree
    int gcd_degree() const { return gcd_deg_; }

  private:
    std::vector<std::vector<Int>> seq_;
    IntPoly p_;
    int gcd_deg_ = 0;
};

// Isolating intervals for all distinct real roots, ascending.  Each open
// interval (lo, hi) contains exactly one root and p(lo), p(hi) != 0.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p);

// --- trace / Chebyshev-like basis ----------------------------------------

// For palindromic u of even degree 2n, the unique U with u(z) = z^n U(z+1/z).
IntPoly trace_poly(const IntPoly& u);
// Inverse lift: z^n U(z + 1/z) for U of degree n.
IntPoly trace_lift(const IntPoly& U);

// H_n(z+1/z) = z^n + z^-n;  (z-1/z) K_n(z+1/z) = z^(n+1) - z^-(n+1).
// H accepts n >= 0, K accepts n >= -1 (K_{-1} = 0).  Both memoized.
const IntPoly& H(int n);
const IntPoly& K(int n);

// --- cyclotomic / arithmetic ---------------------------------------------

unsigned long totient(unsigned long n);
int moebius(unsigned long n);
// All n >= 1 with totient(n) <= bound, ascending.
std::vector<unsigned long> totient_le(unsigned long bound);

const IntPoly& cyclotomic(unsigned long n);                 // C_n(z), n >= 1

// Trace polynomial of C_n.  Standard convention requires n >= 3 (C_1, C_2
// have no palindromic trace of even degree); the alternate convention maps
// 1 -> w-2 and 2 -> w+2 and is used only by the dependence criterion.
enum class CycloTraceConv { Standard, Mdr };
IntPoly cyclotomic_trace(unsigned long n, CycloTraceConv conv = CycloTraceConv::Standard);

// --- factorization --------------------------------------------------------

struct Factorization {
    Rat unit;                                    // rational content incl. sign
    std::vector<std::pair<IntPoly, int>> factors;  // irreducible, primitive, lc > 0, ascending mult-order
    IntPoly product() const;
};

// Exact factorization over Q: squarefree split, cyclotomic sieve, then
// Zassenhaus on what remains.
Factorization factor(const IntPoly& p);
bool is_irreducible(const IntPoly& p);
// Squarefree part (product of distinct irreducible factors), normalized.
IntPoly squarefree_part(const IntPoly& p);

// --- text / data ----------------------------------------------------------

// Parses "w^4 - 4*w^2 - w + 1" style text (the '*' is optional, any single
// identifier works as the variable).  Throws InputError on malformed input.
IntPoly parse_poly(const std::string& text);
// Ascending coefficient list -> polynomial; used by the JSON loaders.
IntPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

}  // namespace salemk3
