#include "salemk3/algebraic.hpp"

#include <algorithm>
#include <functional>

namespace salemk3 {

namespace {

// Closed-interval arithmetic with exact rational endpoints.
struct IV {
    Rat lo, hi;
};

IV iv_add(const IV& a, const IV& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IV iv_mul(const IV& a, const IV& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

IV iv_eval(const IntPoly& p, const IV& x) {
    IV acc{0, 0};
    for (int i = p.degree(); i >= 0; --i) {
        acc = iv_mul(acc, x);
        Rat c(p.coeff(i));
        acc = iv_add(acc, IV{c, c});
    }
    return acc;
}

bool iv_excludes_zero(const IV& v) { return v.lo > 0 || v.hi < 0; }

// Division valid only when b excludes zero.
IV iv_div(const IV& a, const IV& b) {
    IV binv{Rat(1) / b.hi, Rat(1) / b.lo};
    return iv_mul(a, binv);
}

// floor(sqrt(q)) style rational bounds: returns (lo, hi) with
// lo <= sqrt(q) <= hi and hi - lo <= 1/2^prec.
std::pair<Rat, Rat> rat_sqrt_bounds(const Rat& q, unsigned prec) {
    if (q < 0) throw InternalError("rat_sqrt_bounds: negative input");
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^prec for precision.
    Int a = q.get_num(), b = q.get_den();
    Int scaled = a * b;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * prec);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rat denom = Rat(b) * Rat(Int(1) << prec);
    Rat lo = Rat(root) / denom;
    Rat hi = Rat(root + 1) / denom;
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace

// ------------------------------------------------------------ AlgebraicReal

AlgebraicReal::AlgebraicReal(const Rat& value)
    : minpoly_(IntPoly(std::vector<Int>{-value.get_num(), value.get_den()})),
      lo_(value - 1),
      hi_(value + 1) {}

AlgebraicReal::AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (minpoly_.sign_at(lo_) == 0 || minpoly_.sign_at(hi_) == 0 ||
        count_real_roots(minpoly_, Bound::at(lo_), Bound::at(hi_)) != 1)
        throw InternalError("algebraic number: invalid isolating interval");
}

namespace {

// Nudges endpoints off roots of f while keeping exactly one root inside.
std::pair<Rat, Rat> fix_endpoints(const IntPoly& f, Rat lo, Rat hi) {
    auto nudge = [&](const Rat& from, const Rat& toward) {
        Rat step = (toward - from) / 4;
        Rat cand = from;
        for (int i = 0; i < 512; ++i) {
            cand = cand + step;
            if (f.sign_at(cand) != 0 &&
                count_real_roots(f, Bound::at(std::min(cand, toward)),
                                 Bound::at(std::max(cand, toward))) == 1)
                return cand;
            step /= 2;
            cand = from;
        }
        throw InternalError("could not move interval endpoint off a root");
    };
    if (f.sign_at(lo) == 0) lo = nudge(lo, hi);
    if (f.sign_at(hi) == 0) hi = nudge(hi, lo);
    return {lo, hi};
}

}  // namespace

AlgebraicReal AlgebraicReal::root_of(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) throw InputError("root_of: polynomial has no roots");
    if (!(lo < hi)) throw InputError("root_of: empty interval");
    Factorization fac = factor(p);
    const IntPoly* chosen = nullptr;
    int total = 0;
    for (const auto& [f, mult] : fac.factors) {
        int n = count_real_roots(f, Bound::at(lo), Bound::at(hi));
        total += n;
        if (n == 1 && !chosen) chosen = &f;
        if (n > 1) chosen = nullptr;
    }
    if (total != 1 || !chosen)
        throw InputError("root_of: interval isolates " + std::to_string(total) +
                         " roots, expected exactly 1");
    auto [l, h] = fix_endpoints(*chosen, lo, hi);
    return AlgebraicReal(*chosen, l, h);
}

std::vector<AlgebraicReal> AlgebraicReal::roots_of(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<AlgebraicReal> out;
    Factorization fac = factor(p);
    for (const auto& [f, mult] : fac.factors)
        for (const auto& [lo, hi] : isolate_real_roots(f)) out.push_back(AlgebraicReal(f, lo, hi));
    std::sort(out.begin(), out.end(),
              [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; });
    return out;
}

Rat AlgebraicReal::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value on irrational number");
    Rat v(-minpoly_.coeff(0), minpoly_.coeff(1));
    v.canonicalize();
    return v;
}

void AlgebraicReal::refine() const {
    Rat m = (lo_ + hi_) / 2;
    int sm = minpoly_.sign_at(m);
    if (sm == 0) {
        // m is the (necessarily rational) root
        Rat d = (hi_ - lo_) / 8;
        lo_ = m - d;
        hi_ = m + d;
        return;
    }
    if (sm == minpoly_.sign_at(lo_))
        lo_ = m;
    else
        hi_ = m;
}

void AlgebraicReal::refine_below(const Rat& width) const {
    for (long i = 0; i < kBisectionBudget; ++i) {
        if (hi_ - lo_ < width) return;
        refine();
    }
    throw InternalError("refinement budget exhausted");
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (minpoly_ == o.minpoly_ && lo_ == o.lo_ && hi_ == o.hi_) return 0;
    for (long i = 0; i < kBisectionBudget; ++i) {
        if (hi_ <= o.lo_) return -1;
        if (o.hi_ <= lo_) return 1;
        if (minpoly_ == o.minpoly_) {
            Rat ilo = std::max(lo_, o.lo_), ihi = std::min(hi_, o.hi_);
            if (ilo < ihi && count_real_roots(minpoly_, Bound::at(ilo), Bound::at(ihi)) == 1)
                return 0;  // the shared root is each side's designated root
        }
        refine();
        o.refine();
    }
    throw InternalError("compare: refinement budget exhausted");
}

int AlgebraicReal::compare(const Rat& q) const {
    if (is_rational()) {
        Rat v = rational_value();
        if (v == q) return 0;
        return v < q ? -1 : 1;
    }
    // q cannot be a root of an irreducible minpoly of degree > 1
    for (long i = 0; i < kBisectionBudget; ++i) {
        if (q <= lo_) return 1;
        if (q >= hi_) return -1;
        refine();
    }
    throw InternalError("compare: refinement budget exhausted");
}

double AlgebraicReal::approx() const {
    refine_below(Rat(Int(1), Int(1) << 60));
    Rat m = (lo_ + hi_) / 2;
    return m.get_d();
}

std::string AlgebraicReal::str(const std::string& var) const {
    if (is_rational()) return rational_value().get_str();
    return "root of " + minpoly_.str(var) + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

// ------------------------------------------------------------------- signs

int sign_at(const RatFunc& F, const AlgebraicReal& x) {
    if (F.is_zero()) return 0;
    const IntPoly& T = x.minpoly();
    if (try_divide_exact(F.den(), T).has_value())
        throw InputError("pole at " + x.str());
    if (try_divide_exact(F.num(), T).has_value()) return 0;
    const int csign = sgn(F.content());
    for (long i = 0; i < kBisectionBudget; ++i) {
        IV n = iv_eval(F.num(), IV{x.lo(), x.hi()});
        IV d = iv_eval(F.den(), IV{x.lo(), x.hi()});
        if (iv_excludes_zero(n) && iv_excludes_zero(d))
            return csign * (n.lo > 0 ? 1 : -1) * (d.lo > 0 ? 1 : -1);
        x.refine();
    }
    throw InternalError("sign_at: refinement budget exhausted");
}

// ------------------------------------------------------------- eval / sqrt

namespace {

// Lagrange interpolation through (j, val_j), j = 0..deg; exact over Q.
std::vector<Rat> interpolate(const std::vector<Rat>& vals) {
    const size_t n = vals.size();
    std::vector<Rat> acc(n, Rat(0));
    for (size_t j = 0; j < n; ++j) {
        // basis polynomial prod_{k != j} (y - k)/(j - k)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            // multiply basis by (y - k)
            basis.push_back(Rat(0));
            for (size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = basis[t - 1] - Rat(static_cast<long>(k)) * basis[t];
            basis[0] = basis[0] * Rat(-static_cast<long>(k));
            denom *= Rat(static_cast<long>(j)) - Rat(static_cast<long>(k));
        }
        Rat scale = vals[j] / denom;
        for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
    }
    return acc;
}

IntPoly clear_denominators(const std::vector<Rat>& c) {
    Int den = 1;
    for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rat v = c[i] * Rat(den);
        v.canonicalize();
        out[i] = v.get_num();
    }
    return IntPoly(std::move(out));
}

AlgebraicReal select_root(const std::vector<IntPoly>& candidates, const AlgebraicReal& x,
                          const std::function<std::pair<bool, IV>()>& bracket) {
    for (long i = 0; i < kBisectionBudget; ++i) {
        auto [ok, iv] = bracket();
        if (ok) {
            // widen strictly so the value is interior even in degenerate cases
            const unsigned long shift = static_cast<unsigned long>(std::min<long>(20 + i, 400));
            Rat eps = (iv.hi - iv.lo + (x.hi() - x.lo())) / 1024 + Rat(Int(1), Int(1) << shift);
            Rat lo = iv.lo - eps, hi = iv.hi + eps;
            const IntPoly* unique = nullptr;
            int total = 0;
            for (const auto& f : candidates) {
                int n = count_real_roots(f, Bound::at(lo), Bound::at(hi));
                total += n;
                if (n == 1) unique = &f;
            }
            if (total == 1 && unique) {
                auto [l, h] = fix_endpoints(*unique, lo, hi);
                return AlgebraicReal::root_of(*unique, l, h);
            }
        }
        x.refine();
    }
    throw InternalError("factor selection: refinement budget exhausted");
}

}  // namespace

AlgebraicReal eval_ratfunc(const RatFunc& F, const AlgebraicReal& x) {
    if (F.is_zero()) return AlgebraicReal(Rat(0));
    const IntPoly& T = x.minpoly();
    if (try_divide_exact(F.den(), T).has_value())
        throw InputError("pole at " + x.str());
    if (x.is_rational()) {
        auto v = F.eval(x.rational_value());
        if (!v) throw InputError("pole at " + x.str());
        return AlgebraicReal(*v);
    }
    if (F.num().degree() == 0 && F.den().degree() == 0) {
        auto v = F.eval(Rat(0));
        return AlgebraicReal(*v);
    }
    // A/B with the scalar content folded in.
    IntPoly A = F.num() * F.content().get_num();
    IntPoly B = F.den() * F.content().get_den();
    const int dT = T.degree();

    // val(y) = prod over roots xi of T of (y*B(xi) - A(xi)), interpolated.
    std::vector<Rat> vals(dT + 1);
    for (int j = 0; j <= dT; ++j) {
        IntPoly g = B * Int(j) - A;
        if (g.is_zero()) {
            vals[j] = 0;
            continue;
        }
        Rat r = resultant(g, T);
        // resultant(g, T) = lc(T)^deg(g) * prod_{T(xi)=0} g(xi); divide the
        // leading-coefficient power back out.
        Int lp;
        mpz_pow_ui(lp.get_mpz_t(), T.lc().get_mpz_t(), static_cast<unsigned long>(g.degree()));
        vals[j] = r / Rat(lp);
    }
    IntPoly R = clear_denominators(interpolate(vals));
    if (R.degree() < 1) throw InternalError("eval_ratfunc: degenerate resultant");

    std::vector<IntPoly> candidates;
    for (const auto& [f, mult] : factor(R).factors)
        if (f.degree() >= 1) candidates.push_back(f);

    auto bracket = [&]() -> std::pair<bool, IV> {
        IV n = iv_eval(A, IV{x.lo(), x.hi()});
        IV d = iv_eval(B, IV{x.lo(), x.hi()});
        if (!iv_excludes_zero(d)) return {false, IV{}};
        return {true, iv_div(n, d)};
    };
    return select_root(candidates, x, bracket);
}

AlgebraicReal sqrt_shift(const AlgebraicReal& tau) {
    if (tau.compare(Rat(-2)) <= 0) throw InputError("sqrt_shift: value must exceed -2");
    for (long i = 0; tau.lo() <= -2; ++i) {
        if (i >= kBisectionBudget) throw InternalError("sqrt_shift: refinement budget exhausted");
        tau.refine();
    }
    const IntPoly& T = tau.minpoly();
    IntPoly G = T.compose(H(2));
    std::vector<IntPoly> candidates;
    for (const auto& [f, mult] : factor(G).factors)
        if (f.degree() >= 1) candidates.push_back(f);

    unsigned prec = 16;
    auto bracket = [&]() -> std::pair<bool, IV> {
        auto lo_b = rat_sqrt_bounds(tau.lo() + 2, prec);
        auto hi_b = rat_sqrt_bounds(tau.hi() + 2, prec);
        prec += 4;
        Rat lo = lo_b.first < 0 ? Rat(0) : lo_b.first;
        return {true, IV{lo, hi_b.second}};
    };
    return select_root(candidates, tau, bracket);
}

// ------------------------------------------------------------ FieldElement

namespace {

using QP = std::vector<Rat>;

void qtrim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qfrom(const IntPoly& p) { return QP(p.coeffs().begin(), p.coeffs().end()); }

QP qrem(QP a, const QP& b) {
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        Rat t = a.back() / b.back();
        const int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

QP qmul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QP qsub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

}  // namespace

FieldElement::FieldElement(IntPoly T, const IntPoly& rep) : T_(std::move(T)) {
    if (T_.degree() < 1) throw InputError("field modulus must be non-constant");
    QP r = qrem(qfrom(rep), qfrom(T_));
    rep_.assign(r.begin(), r.end());
}

FieldElement FieldElement::generator(const IntPoly& T) { return FieldElement(T, IntPoly::var()); }

FieldElement FieldElement::constant(const IntPoly& T, const Rat& c) {
    FieldElement e(T, IntPoly::zero());
    if (c != 0) e.rep_ = {c};
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return T_ == o.T_ && rep_ == o.rep_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    QP r = rep_;
    if (r.size() < o.rep_.size()) r.resize(o.rep_.size(), Rat(0));
    for (size_t i = 0; i < o.rep_.size(); ++i) r[i] += o.rep_[i];
    qtrim(r);
    return FieldElement(T_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    QP r = rep_;
    if (r.size() < o.rep_.size()) r.resize(o.rep_.size(), Rat(0));
    for (size_t i = 0; i < o.rep_.size(); ++i) r[i] -= o.rep_[i];
    qtrim(r);
    return FieldElement(T_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    QP r = qrem(qmul(rep_, o.rep_), qfrom(T_));
    return FieldElement(T_, std::move(r));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InputError("field inverse of zero");
    // extended Euclid over Q: s*rep + t*T = gcd (a nonzero constant)
    QP a = rep_, b = qfrom(T_);
    QP s0{Rat(1)}, s1{};
    while (!b.empty()) {
        // quotient/remainder of a by b
        QP q, r = a;
        const int db = static_cast<int>(b.size()) - 1;
        if (static_cast<int>(r.size()) - 1 >= db)
            q.assign(r.size() - b.size() + 1, Rat(0));
        while (static_cast<int>(r.size()) - 1 >= db) {
            Rat t = r.back() / b.back();
            const int shift = static_cast<int>(r.size()) - 1 - db;
            q[shift] = t;
            for (int j = 0; j <= db; ++j) r[shift + j] -= t * b[j];
            qtrim(r);
        }
        qtrim(q);
        QP ns = qsub(s0, qmul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    if (a.size() != 1) throw InternalError("field inverse: modulus not irreducible over Q");
    QP inv = s0;
    for (auto& v : inv) v /= a[0];
    return FieldElement(T_, std::move(inv));
}

FieldElement FieldElement::apply(const IntPoly& p) const {
    FieldElement acc = constant(T_, 0);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * *this + constant(T_, Rat(p.coeff(i)));
    }
    return acc;
}

FieldElement FieldElement::apply(const RatFunc& F) const {
    if (F.is_zero()) return constant(T_, 0);
    FieldElement n = apply(F.num());
    FieldElement d = apply(F.den());
    if (d.is_zero()) throw InputError("pole: denominator vanishes in the field");
    return n * d.inverse() * constant(T_, F.content());
}

int FieldElement::sign_at_root(const AlgebraicReal& x) const {
    if (x.minpoly() != T_)
        throw InternalError("sign_at_root: embedding does not match the field");
    if (is_zero()) return 0;
    Int den = 1;
    for (const auto& v : rep_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> c(rep_.size());
    for (size_t i = 0; i < rep_.size(); ++i) {
        Rat v = rep_[i] * Rat(den);
        c[i] = v.get_num();
    }
    return sign_at(RatFunc(IntPoly(std::move(c)), IntPoly::constant(den)), x);
}

}  // namespace salemk3
