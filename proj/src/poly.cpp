#include "salemk3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace salemk3 {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(Int a) {
    IntPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

IntPoly IntPoly::monomial(int deg, Int a) {
    IntPoly p;
    if (a != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(a);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw InternalError("lc of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const Int& a) const {
    if (a == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_) v *= a;
    return r;
}

IntPoly operator*(const Int& a, const IntPoly& p) { return p * a; }

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + k, Int(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(static_cast<long>(i));
    r.trim();
    return r;
}

IntPoly IntPoly::reversed() const {
    IntPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

IntPoly IntPoly::compose(const IntPoly& g) const {
    IntPoly r;
    for (int i = degree(); i >= 0; --i) {
        r = r * g;
        r = r + IntPoly::constant(c_[i]);
    }
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::one();
    IntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    IntPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

IntPoly IntPoly::normalized() const {
    IntPoly r = primitive_part();
    if (!r.is_zero() && r.lc() < 0) r = -r;
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + Rat(c_[i]);
    return r;
}

int IntPoly::sign_at(const Rat& x) const {
    // p(a/b) has the sign of sum c_i a^i b^(d-i).
    if (is_zero()) return 0;
    const Int a = x.get_num(), b = x.get_den();
    Int acc = 0, ap = 1;
    std::vector<Int> apow(c_.size()), bpow(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        apow[i] = ap;
        ap *= a;
    }
    Int bp = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        bpow[c_.size() - 1 - i] = bp;
        bp *= b;
    }
    for (size_t i = 0; i < c_.size(); ++i) acc += c_[i] * apow[i] * bpow[i];
    return sgn(acc);
}

bool IntPoly::is_palindromic() const {
    const int d = degree();
    if (d < 0) return false;
    for (int i = 0; i <= d; ++i)
        if (c_[i] != c_[d - i]) return false;
    return true;
}

bool IntPoly::is_antipalindromic() const {
    const int d = degree();
    if (d < 0) return false;
    for (int i = 0; i <= d; ++i)
        if (c_[i] != -c_[d - i]) return false;
    return true;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ------------------------------------------------------------ divide / gcd

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero() || !b.is_monic()) throw InternalError("divrem_monic: divisor not monic");
    std::vector<Int> r(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {IntPoly(), a};
    std::vector<Int> q(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        Int t = r[i];
        if (t == 0) continue;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeff(j);
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InternalError("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> r(a.coeffs());
    const int db = b.degree();
    const Int& lb = b.lc();
    std::vector<Int> q(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Int t, rem;
        mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return std::nullopt;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeff(j);
    }
    for (const auto& v : r)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

namespace {

// Internal rational-coefficient helpers (ascending, trimmed).
using QP = std::vector<Rat>;

QP qp_from(const IntPoly& p) {
    QP r(p.coeffs().begin(), p.coeffs().end());
    return r;
}

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qp_deg(const QP& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a by b over Q.
QP qp_rem(QP a, const QP& b) {
    const int db = qp_deg(b);
    while (qp_deg(a) >= db) {
        Rat t = a.back() / b.back();
        const int shift = qp_deg(a) - db;
        for (int j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
        qp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    QP x = qp_from(a), y = qp_from(b);
    if (qp_deg(x) < qp_deg(y)) std::swap(x, y);
    while (!y.empty()) {
        QP r = qp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // Clear denominators, normalize.
    Int den = 1;
    for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> c(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rat v = x[i] * Rat(den);
        c[i] = v.get_num();
    }
    return IntPoly(std::move(c)).normalized();
}

Rat resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    QP f = qp_from(a), g = qp_from(b);
    // convention: resultant(a,b) = lc(b)^deg(a) * prod a(beta) over roots beta
    // of b, i.e. (-1)^(deg a * deg b) times the product over roots of a.
    Rat res = ((a.degree() & 1) && (b.degree() & 1)) ? -1 : 1;
    while (true) {
        const int df = qp_deg(f), dg = qp_deg(g);
        if (dg == 0) {
            Rat lg = g.back();
            Rat p;
            mpz_pow_ui(p.get_num().get_mpz_t(), lg.get_num().get_mpz_t(), df);
            mpz_pow_ui(p.get_den().get_mpz_t(), lg.get_den().get_mpz_t(), df);
            p.canonicalize();
            return res * p;
        }
        QP r = qp_rem(f, g);
        if (r.empty()) return 0;
        const int dr = qp_deg(r);
        // res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) res(g,r)
        if ((df & 1) && (dg & 1)) res = -res;
        Rat lg = g.back(), p;
        mpz_pow_ui(p.get_num().get_mpz_t(), lg.get_num().get_mpz_t(), df - dr);
        mpz_pow_ui(p.get_den().get_mpz_t(), lg.get_den().get_mpz_t(), df - dr);
        p.canonicalize();
        res *= p;
        f = std::move(g);
        g = std::move(r);
    }
}

// ---------------------------------------------------------------- Sturm

namespace {

int iv_sgn(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// primitive part, sign preserved
std::vector<Int> iv_primitive(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    Int g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& p) : p_(p) {
    std::vector<Int> f(p.coeffs().begin(), p.coeffs().end());
    IntPoly d = p.derivative();
    std::vector<Int> g(d.coeffs().begin(), d.coeffs().end());
    seq_.push_back(iv_primitive(std::move(f)));
    g = iv_primitive(std::move(g));
    while (!g.empty()) {
        seq_.push_back(g);
        // pseudo-remainder of the previous element by g; each reduction step
        // scales by lc(g), so flip the result when that scaling was negative
        const std::vector<Int>& b = seq_[seq_.size() - 2];
        std::vector<Int> r = b;
        const Int& l = g.back();
        bool neg_scale = false;
        while (r.size() >= g.size() && !r.empty()) {
            Int top = r.back();
            size_t shift = r.size() - g.size();
            for (auto& c : r) c *= l;
            for (size_t i = 0; i < g.size(); ++i) r[shift + i] -= top * g[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (l < 0) neg_scale = !neg_scale;
        }
        // Sturm recurrence wants -remainder, up to positive scaling
        if (!neg_scale)
            for (auto& c : r) c = -c;
        g = iv_primitive(std::move(r));
    }
    // the chain ends at (a scalar multiple of) gcd(p, p')
    if (seq_.size() > 1 && !seq_.back().empty())
        gcd_deg_ = static_cast<int>(seq_.back().size()) - 1;
}

int SturmSequence::variations(const Bound& b) const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
        if (p.empty()) continue;
        int s;
        if (b.kind == Bound::Finite) {
            const Int u = b.value.get_num(), v = b.value.get_den();
            Int r = 0, vp = 1;
            // sign of p(u/v) = sign of sum p[i] u^i v^(n-i), by Horner
            for (size_t i = p.size(); i-- > 0;) {
                r = r * u + p[i] * vp;
                if (i > 0) vp *= v;
            }
            s = iv_sgn(r);
        } else {
            s = iv_sgn(p.back());
            if (b.kind == Bound::NegInf && ((p.size() - 1) & 1)) s = -s;
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmSequence::count(const Bound& a, const Bound& b) const {
    if (p_.degree() <= 0) return 0;
    // V(a) - V(b) counts roots in (a, b]; subtract b if it is a root.
    int n = variations(a) - variations(b);
    if (b.kind == Bound::Finite && p_.sign_at(b.value) == 0) --n;
    return n;
}

int count_real_roots(const IntPoly& p, const Bound& a, const Bound& b) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    SturmSequence chain(sf);
    // A root exactly at a finite lower endpoint is already excluded: Sturm's
    // count over (a, b] never includes a.
    return chain.count(a, b);
}

int count_real_roots(const IntPoly& p) {
    return count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
}

namespace {

// Cauchy root bound: all roots have |x| < 1 + max|c_i|/|lc|.
Rat cauchy_bound(const IntPoly& p) {
    Int m = 0;
    for (const auto& v : p.coeffs()) {
        Int a = abs(v);
        if (a > m) m = a;
    }
    Int l = abs(p.lc());
    Rat r(m, l);
    r.canonicalize();
    return r + 1;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    IntPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return out;
    SturmSequence chain(sf);
    const Rat M = cauchy_bound(sf);
    auto count = [&](const Rat& a, const Rat& b) { return chain.count(Bound::at(a), Bound::at(b)); };
    // Find a non-root cut strictly inside (a, b).
    auto safe_cut = [&](const Rat& a, const Rat& b) {
        Rat m = (a + b) / 2;
        if (sf.sign_at(m) != 0) return m;
        // Shift the cut by decreasing offsets until it misses every root.
        Rat step = (b - a) / 4;
        while (true) {
            Rat m2 = m + step;
            if (m2 < b && sf.sign_at(m2) != 0) return m2;
            step /= 2;
        }
    };
    struct Seg {
        Rat a, b;
        int n;
    };
    std::vector<Seg> work;
    {
        Rat a = -M, b = M;  // p(+-M) != 0 by the strict Cauchy bound
        int n = count(a, b);
        if (n > 0) work.push_back({a, b, n});
    }
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 1) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat m = safe_cut(s.a, s.b);
        int nl = count(s.a, m);
        if (nl > 0) work.push_back({s.a, m, nl});
        if (s.n - nl > 0) work.push_back({m, s.b, s.n - nl});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// ---------------------------------------------------------- trace algebra

IntPoly trace_poly(const IntPoly& u) {
    const int d = u.degree();
    if (d < 0 || d % 2 != 0) throw InputError("trace_poly: degree must be even and positive");
    if (!u.is_palindromic()) throw InputError("trace_poly: polynomial is not palindromic");
    const int n = d / 2;
    // u(z) = z^n [ c_n + sum_{k>=1} c_{n+k} (z^k + z^-k) ]  =>  U = c_n + sum c_{n+k} H_k.
    IntPoly U = IntPoly::constant(u.coeff(n));
    for (int k = 1; k <= n; ++k) U = U + H(k) * u.coeff(n + k);
    return U;
}

IntPoly trace_lift(const IntPoly& U) {
    const int n = U.degree();
    if (n < 0) throw InputError("trace_lift: zero polynomial");
    // z^n U(z+1/z) = sum_k U_k z^(n-k) (z^2+1)^k.
    IntPoly zz = IntPoly({1, 0, 1});
    IntPoly u;
    for (int k = 0; k <= n; ++k) u = u + zz.pow(k).shifted(n - k) * U.coeff(k);
    return u;
}

namespace {
std::mutex hk_mutex;
// deque: growth must not invalidate references handed out earlier
std::deque<IntPoly> h_table, k_table;
}  // namespace

const IntPoly& H(int n) {
    if (n < 0) throw InputError("H: n must be >= 0");
    std::lock_guard<std::mutex> lock(hk_mutex);
    if (h_table.empty()) {
        h_table.push_back(IntPoly::constant(2));
        h_table.push_back(IntPoly::var());
    }
    while (static_cast<int>(h_table.size()) <= n) {
        const size_t m = h_table.size();
        h_table.push_back(IntPoly::var() * h_table[m - 1] - h_table[m - 2]);
    }
    return h_table[n];
}

const IntPoly& K(int n) {
    if (n < -1) throw InputError("K: n must be >= -1");
    std::lock_guard<std::mutex> lock(hk_mutex);
    if (k_table.empty()) {
        k_table.push_back(IntPoly::zero());  // K_{-1}
        k_table.push_back(IntPoly::one());   // K_0
        k_table.push_back(IntPoly::var());   // K_1
    }
    while (static_cast<int>(k_table.size()) <= n + 1) {
        const size_t m = k_table.size();
        k_table.push_back(IntPoly::var() * k_table[m - 1] - k_table[m - 2]);
    }
    return k_table[n + 1];
}

// ------------------------------------------------------- cyclotomic et al.

unsigned long totient(unsigned long n) {
    if (n == 0) throw InputError("totient(0)");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int moebius(unsigned long n) {
    if (n == 0) throw InputError("moebius(0)");
    int r = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

std::vector<unsigned long> totient_le(unsigned long bound) {
    // totient(n) >= sqrt(n/2) for all n, so n <= 2*bound^2 suffices.
    std::vector<unsigned long> out;
    const unsigned long limit = 2 * bound * bound + 1;
    for (unsigned long n = 1; n <= limit; ++n)
        if (totient(n) <= bound) out.push_back(n);
    return out;
}

namespace {
std::mutex cyc_mutex;
std::map<unsigned long, IntPoly> cyc_table;
}  // namespace

const IntPoly& cyclotomic(unsigned long n) {
    if (n == 0) throw InputError("cyclotomic(0)");
    std::lock_guard<std::mutex> lock(cyc_mutex);
    auto it = cyc_table.find(n);
    if (it != cyc_table.end()) return it->second;
    // C_n = (z^n - 1) / prod_{d|n, d<n} C_d, computed recursively without
    // re-locking: resolve dependencies iteratively.
    std::vector<unsigned long> stack{n};
    while (!stack.empty()) {
        unsigned long m = stack.back();
        if (cyc_table.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned long d = 1; d < m; ++d) {
            if (m % d == 0 && !cyc_table.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        IntPoly num = IntPoly::monomial(m) - IntPoly::one();
        for (unsigned long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto q = try_divide_exact(num, cyc_table[d]);
            if (!q) throw InternalError("cyclotomic recursion failure");
            num = *q;
        }
        cyc_table.emplace(m, std::move(num));
        stack.pop_back();
    }
    return cyc_table[n];
}

IntPoly cyclotomic_trace(unsigned long n, CycloTraceConv conv) {
    if (n <= 2) {
        if (conv == CycloTraceConv::Standard)
            throw InputError("cyclotomic_trace: n must be >= 3 in the standard convention");
        return n == 1 ? IntPoly({-2, 1}) : IntPoly({2, 1});
    }
    return trace_poly(cyclotomic(n));
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::string var;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool parse_uint(Int& out) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
        out = Int(s.substr(start, pos - start));
        return true;
    }

    bool parse_ident(std::string& out) {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size()) return false;
        if (!std::isalpha(static_cast<unsigned char>(s[pos])) && s[pos] != '_') return false;
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        out = s.substr(start, pos - start);
        return true;
    }

    IntPoly run() {
        IntPoly acc;
        skip_ws();
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = (s[pos] == '-') ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw InputError("polynomial text: expected '+' or '-' at position " +
                                 std::to_string(pos));
            }
            first = false;
            skip_ws();
            Int coef;
            bool have_coef = parse_uint(coef);
            bool have_var = false;
            long exp = 0;
            skip_ws();
            if (have_coef && pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
            std::string id;
            size_t save = pos;
            if (parse_ident(id)) {
                if (var.empty())
                    var = id;
                else if (id != var)
                    throw InputError("polynomial text: mixed variables '" + var + "' and '" + id +
                                     "'");
                have_var = true;
                exp = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    Int e;
                    if (!parse_uint(e)) throw InputError("polynomial text: missing exponent");
                    if (e > 100000) throw InputError("polynomial text: exponent too large");
                    exp = e.get_si();
                }
            } else {
                pos = save;
            }
            if (!have_coef && !have_var)
                throw InputError("polynomial text: expected term at position " +
                                 std::to_string(pos));
            if (!have_coef) coef = 1;
            acc = acc + IntPoly::monomial(static_cast<int>(exp), sign * coef);
        }
        if (first) throw InputError("polynomial text: empty input");
        return acc;
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text) {
    Parser p(text);
    return p.run();
}

IntPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return IntPoly(std::move(c));
}

}  // namespace salemk3
