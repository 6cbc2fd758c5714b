#include "salemk3/ratfunc.hpp"

#include <sstream>

namespace salemk3 {

RatFunc::RatFunc(const IntPoly& num, const IntPoly& den) : content_(1), num_(num), den_(den) {
    if (den.is_zero()) throw InputError("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(const Rat& c) : content_(c), num_(IntPoly::one()), den_(IntPoly::one()) {
    if (content_ == 0) num_ = IntPoly::zero();
}

void RatFunc::normalize() {
    if (num_.is_zero() || content_ == 0) {
        content_ = 0;
        num_ = IntPoly::zero();
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        // g is primitive, so both divisions are exact over Z (Gauss)
        num_ = *try_divide_exact(num_, g);
        den_ = *try_divide_exact(den_, g);
    }
    Int cn = num_.content(), cd = den_.content();
    int sign = sgn(num_.lc()) * sgn(den_.lc());
    num_ = num_.normalized();
    den_ = den_.normalized();
    content_ *= Rat(cn, cd) * sign;
    content_.canonicalize();
}

IntPoly RatFunc::as_poly() const {
    if (is_zero()) return IntPoly::zero();
    if (!den_.is_one()) throw InputError("rational function is not a polynomial");
    if (content_.get_den() != 1) throw InputError("rational function has non-integral content");
    return num_ * Int(content_.get_num());
}

bool RatFunc::operator==(const RatFunc& o) const {
    return content_ == o.content_ && num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.content_ = -r.content_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // a*N/D + c*M/E = (an*cd*N*E + cn*ad*M*D) / (ad*cd*D*E)
    const Int an = content_.get_num(), ad = content_.get_den();
    const Int cn = o.content_.get_num(), cd = o.content_.get_den();
    IntPoly n = num_ * o.den_ * (an * cd) + o.num_ * den_ * (cn * ad);
    if (n.is_zero()) return RatFunc();
    RatFunc r(n, den_ * o.den_);
    r.content_ /= Rat(ad * cd);
    r.content_.canonicalize();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    RatFunc r(num_ * o.num_, den_ * o.den_);
    r.content_ *= content_ * o.content_;
    r.content_.canonicalize();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw InputError("division by zero rational function");
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw InputError("inverse of zero rational function");
    RatFunc r(den_, num_);
    r.content_ /= content_;
    r.content_.canonicalize();
    return r;
}

namespace {

RatFunc poly_at(const IntPoly& p, const RatFunc& g) {
    RatFunc acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * g + RatFunc(Rat(p.coeff(i)));
    return acc;
}

}  // namespace

RatFunc RatFunc::compose(const RatFunc& g) const {
    if (is_zero()) return RatFunc();
    if (g.is_poly() && g.content().get_den() == 1) {
        // fast integer-polynomial path (the common case: H_m, w^2-2, w+2, ...)
        IntPoly garg = g.num() * Int(g.content().get_num());
        IntPoly dn = den_.compose(garg);
        if (dn.is_zero()) throw InputError("composition produces zero denominator");
        RatFunc r(num_.compose(garg), dn);
        r.content_ *= content_;
        r.content_.canonicalize();
        return r;
    }
    RatFunc pn = poly_at(num_, g), pd = poly_at(den_, g);
    if (pd.is_zero()) throw InputError("composition produces zero denominator");
    RatFunc r = pn / pd;
    r.content_ *= content_;
    r.content_.canonicalize();
    return r;
}

std::optional<Rat> RatFunc::eval(const Rat& x) const {
    if (is_zero()) return Rat(0);
    Rat d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return content_ * num_.eval(x) / d;
}

RatFunc RatFunc::reflected() const {
    auto flip = [](const IntPoly& p) {
        std::vector<Int> c(p.coeffs());
        for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return IntPoly(std::move(c));
    };
    if (is_zero()) return *this;
    RatFunc r(flip(num_), flip(den_));
    r.content_ *= content_;
    r.content_.canonicalize();
    return r;
}

bool RatFunc::is_even() const { return *this == reflected(); }
bool RatFunc::is_odd() const { return *this == -reflected(); }

std::string RatFunc::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (content_ != 1) out << "(" << content_.get_str() << ")*";
    out << "(" << num_.str(var) << ")";
    if (!den_.is_one()) out << "/(" << den_.str(var) << ")";
    return out.str();
}

RatFunc operator+(const IntPoly& p, const RatFunc& f) { return RatFunc::from_poly(p) + f; }
RatFunc operator-(const IntPoly& p, const RatFunc& f) { return RatFunc::from_poly(p) - f; }
RatFunc operator*(const IntPoly& p, const RatFunc& f) { return RatFunc::from_poly(p) * f; }

IntPoly numerator_with_sign(const RatFunc& f) {
    if (f.is_zero()) return IntPoly::zero();
    return f.content() < 0 ? -f.num() : f.num();
}

}  // namespace salemk3
