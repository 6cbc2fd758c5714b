#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>

#include "salemk3/poly.hpp"

namespace salemk3 {

namespace {

// ----------------------------------------------------------- F_p polynomials

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using FpPoly = std::vector<u64>;  // ascending, trimmed

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const Fp& F, FpPoly a, const FpPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    fp_trim(a);
    return a;
}

FpPoly fp_rem(const Fp& F, FpPoly a, const FpPoly& b) {
    const int db = fp_deg(b);
    const u64 linv = F.inv(b.back());
    while (fp_deg(a) >= db) {
        u64 t = F.mul(a.back(), linv);
        int shift = fp_deg(a) - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(t, b[j]));
        fp_trim(a);
    }
    return a;
}

FpPoly fp_monic(const Fp& F, FpPoly a) {
    if (a.empty()) return a;
    u64 linv = F.inv(a.back());
    for (auto& v : a) v = F.mul(v, linv);
    return a;
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
void fp_extgcd(const Fp& F, FpPoly a, FpPoly b, FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        // quotient of a by b
        FpPoly q;
        {
            FpPoly r = a;
            const int db = fp_deg(b);
            const u64 linv = F.inv(b.back());
            q.assign(std::max(0, fp_deg(r) - db + 1), 0);
            while (fp_deg(r) >= db) {
                u64 c = F.mul(r.back(), linv);
                int shift = fp_deg(r) - db;
                q[shift] = c;
                for (int j = 0; j <= db; ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
                fp_trim(r);
            }
            a = std::move(b);
            b = std::move(r);
        }
        FpPoly ns = fp_sub(F, s0, fp_mul(F, q, s1));
        FpPoly nt = fp_sub(F, t0, fp_mul(F, q, t1));
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    u64 linv = F.inv(a.back());
    g = a;
    for (auto& v : g) v = F.mul(v, linv);
    s = s0;
    for (auto& v : s) v = F.mul(v, linv);
    t = t0;
    for (auto& v : t) v = F.mul(v, linv);
}

FpPoly fp_powmod(const Fp& F, FpPoly base, const Int& e, const FpPoly& mod) {
    FpPoly r{1};
    base = fp_rem(F, std::move(base), mod);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = fp_rem(F, fp_mul(F, r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(F, fp_mul(F, r, base), mod);
    }
    return r;
}

// Distinct-degree then Cantor-Zassenhaus equal-degree factorization of a
// squarefree monic polynomial mod p (p odd).  Deterministically seeded.
void fp_factor_squarefree(const Fp& F, FpPoly f, std::vector<FpPoly>& out) {
    std::mt19937_64 rng(0x5a1e3ULL * F.p + 17);
    struct Block {
        FpPoly f;
        int d;
    };
    std::vector<Block> blocks;
    {
        FpPoly h{0, 1};  // x
        FpPoly rest = f;
        int d = 0;
        while (fp_deg(rest) > 0) {
            ++d;
            if (2 * d > fp_deg(rest)) {
                blocks.push_back({rest, fp_deg(rest)});
                break;
            }
            h = fp_powmod(F, h, Int(static_cast<unsigned long>(F.p)), rest);
            FpPoly hx = fp_sub(F, h, FpPoly{0, 1});
            FpPoly g = fp_gcd(F, rest, hx);
            if (fp_deg(g) > 0) {
                blocks.push_back({g, d});
                // rest /= g
                FpPoly q;
                {
                    FpPoly r = rest;
                    const int dg = fp_deg(g);
                    q.assign(fp_deg(r) - dg + 1, 0);
                    while (fp_deg(r) >= dg) {
                        u64 c = F.mul(r.back(), F.inv(g.back()));
                        int shift = fp_deg(r) - dg;
                        q[shift] = c;
                        for (int j = 0; j <= dg; ++j)
                            r[shift + j] = F.sub(r[shift + j], F.mul(c, g[j]));
                        fp_trim(r);
                    }
                }
                rest = fp_monic(F, q);
                h = fp_rem(F, h, rest);
            }
        }
    }
    // equal-degree splitting
    Int pd_half;
    std::vector<Block> work = std::move(blocks);
    while (!work.empty()) {
        Block blk = std::move(work.back());
        work.pop_back();
        if (fp_deg(blk.f) == blk.d) {
            out.push_back(fp_monic(F, blk.f));
            continue;
        }
        mpz_ui_pow_ui(pd_half.get_mpz_t(), F.p, blk.d);
        pd_half = (pd_half - 1) / 2;
        while (true) {
            FpPoly r(fp_deg(blk.f), 0);
            for (auto& v : r) v = rng() % F.p;
            fp_trim(r);
            if (fp_deg(r) < 1) continue;
            FpPoly g = fp_gcd(F, blk.f, r);
            if (fp_deg(g) == 0) {
                FpPoly t = fp_powmod(F, r, pd_half, blk.f);
                if (t.empty())
                    continue;
                t[0] = F.sub(t[0], 1);
                fp_trim(t);
                g = fp_gcd(F, blk.f, t);
            }
            if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(blk.f)) {
                FpPoly q;
                {
                    FpPoly r2 = blk.f;
                    const int dg = fp_deg(g);
                    q.assign(fp_deg(r2) - dg + 1, 0);
                    while (fp_deg(r2) >= dg) {
                        u64 c = F.mul(r2.back(), F.inv(g.back()));
                        int shift = fp_deg(r2) - dg;
                        q[shift] = c;
                        for (int j = 0; j <= dg; ++j)
                            r2[shift + j] = F.sub(r2[shift + j], F.mul(c, g[j]));
                        fp_trim(r2);
                    }
                }
                work.push_back({g, blk.d});
                work.push_back({fp_monic(F, q), blk.d});
                break;
            }
        }
    }
}

// --------------------------------------------------- Z/p^K lifting machinery

struct ZM {  // arithmetic mod M
    Int M;
    Int reduce(Int a) const {
        Int r = a % M;
        if (r < 0) r += M;
        return r;
    }
    Int centered(const Int& a) const {
        Int r = reduce(a);
        if (2 * r >= M) r -= M;
        return r;
    }
};

using MPoly = std::vector<Int>;  // ascending, trimmed, coeffs in [0, M)

void m_trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int m_deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly m_from(const ZM& R, const IntPoly& p) {
    MPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = R.reduce(p.coeffs()[i]);
    m_trim(r);
    return r;
}

MPoly m_add(const ZM& R, MPoly a, const MPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = R.reduce(a[i] + b[i]);
    m_trim(a);
    return a;
}

MPoly m_sub(const ZM& R, MPoly a, const MPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = R.reduce(a[i] - b[i]);
    m_trim(a);
    return a;
}

MPoly m_mul(const ZM& R, const MPoly& a, const MPoly& b) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& v : r) v = R.reduce(v);
    m_trim(r);
    return r;
}

// Division by a monic divisor: returns {quotient, remainder}.
std::pair<MPoly, MPoly> m_divrem_monic(const ZM& R, MPoly a, const MPoly& b) {
    const int db = m_deg(b);
    MPoly q;
    if (m_deg(a) >= db) q.assign(m_deg(a) - db + 1, Int(0));
    while (m_deg(a) >= db) {
        Int t = a.back();
        int shift = m_deg(a) - db;
        q[shift] = t;
        for (int j = 0; j <= db; ++j) a[shift + j] = R.reduce(a[shift + j] - t * b[j]);
        m_trim(a);
    }
    m_trim(q);
    return {std::move(q), std::move(a)};
}

struct LiftPair {
    MPoly g, h, a, b;  // f = g*h, a*g + b*h = 1 (mod M)
};

// One quadratic Hensel step: (mod m) -> (mod m^2), capped at target modulus.
LiftPair hensel_step(const IntPoly& f, const LiftPair& in, const Int& m2) {
    ZM R{m2};
    MPoly fm = m_from(R, f);
    MPoly g = in.g, h = in.h, a = in.a, b = in.b;
    for (auto& v : g) v = R.reduce(v);
    for (auto& v : h) v = R.reduce(v);
    for (auto& v : a) v = R.reduce(v);
    for (auto& v : b) v = R.reduce(v);
    m_trim(g); m_trim(h); m_trim(a); m_trim(b);

    MPoly e = m_sub(R, fm, m_mul(R, g, h));
    auto [q1, r1] = m_divrem_monic(R, m_mul(R, a, e), h);
    MPoly dg = m_divrem_monic(R, m_sub(R, e, m_mul(R, g, r1)), h).first;
    MPoly g2 = m_add(R, g, dg);
    MPoly h2 = m_add(R, h, r1);

    MPoly e2 = m_sub(R, m_add(R, m_mul(R, a, g2), m_mul(R, b, h2)), MPoly{Int(1)});
    auto [q2, r2] = m_divrem_monic(R, m_mul(R, a, e2), h2);
    MPoly a2 = m_sub(R, a, r2);
    MPoly b2 = m_sub(R, b, m_add(R, m_mul(R, b, e2), m_mul(R, g2, q2)));
    return {g2, h2, a2, b2};
}

// Lift the factorization f = prod(list) from mod p to mod p^K (K a power of
// two times exponent steps; target is the supplied modulus).
void hensel_tree(const IntPoly& f, const std::vector<FpPoly>& list, size_t lo, size_t hi, u64 p,
                 const Int& target, std::vector<MPoly>& out) {
    ZM Rt{target};
    if (hi - lo == 1) {
        out.push_back(m_from(Rt, f));
        return;
    }
    const size_t mid = lo + (hi - lo) / 2;
    Fp F{p};
    FpPoly gp{1}, hp{1};
    for (size_t i = lo; i < mid; ++i) gp = fp_mul(F, gp, list[i]);
    for (size_t i = mid; i < hi; ++i) hp = fp_mul(F, hp, list[i]);
    FpPoly gg, ss, tt;
    fp_extgcd(F, gp, hp, gg, ss, tt);
    if (fp_deg(gg) != 0) throw InternalError("hensel: factors not coprime mod p");

    auto to_m = [&](const FpPoly& x) {
        MPoly r(x.size());
        for (size_t i = 0; i < x.size(); ++i) r[i] = Int(static_cast<unsigned long>(x[i]));
        m_trim(r);
        return r;
    };
    LiftPair cur{to_m(gp), to_m(hp), to_m(ss), to_m(tt)};
    Int m(static_cast<unsigned long>(p));
    while (m < target) {
        Int m2 = m * m;
        if (m2 > target) m2 = target;
        cur = hensel_step(f, cur, m2);
        m = m2;
    }
    // Reduce to the target modulus exactly.
    for (auto* poly : {&cur.g, &cur.h}) {
        for (auto& v : *poly) v = Rt.reduce(v);
        m_trim(*poly);
    }
    IntPoly gi, hi_;
    {
        std::vector<Int> c(cur.g.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = Rt.centered(cur.g[i]);
        gi = IntPoly(std::move(c));
        std::vector<Int> c2(cur.h.size());
        for (size_t i = 0; i < c2.size(); ++i) c2[i] = Rt.centered(cur.h[i]);
        hi_ = IntPoly(std::move(c2));
    }
    hensel_tree(gi, list, lo, mid, p, target, out);
    hensel_tree(hi_, list, mid, hi, p, target, out);
}

// ------------------------------------------------------------ zassenhaus

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factor a primitive squarefree monic polynomial over Z.
std::vector<IntPoly> zassenhaus_monic(const IntPoly& f) {
    const int n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f};

    // Choose a prime keeping f squarefree mod p; among a few, prefer the one
    // with fewest modular factors.
    u64 best_p = 0;
    std::vector<FpPoly> best_factors;
    u64 p = 10007;
    int tried = 0;
    while (tried < 3) {
        while (!is_prime_u64(p)) ++p;
        Fp F{p};
        FpPoly fp(f.coeffs().size());
        for (size_t i = 0; i < fp.size(); ++i) {
            Int c = f.coeffs()[i] % Int(static_cast<unsigned long>(p));
            if (c < 0) c += Int(static_cast<unsigned long>(p));
            fp[i] = c.get_ui();
        }
        fp_trim(fp);
        if (fp_deg(fp) == n) {
            FpPoly d(fp.size() - 1);
            for (size_t i = 1; i < fp.size(); ++i) d[i - 1] = F.mul(fp[i], i % p);
            fp_trim(d);
            if (fp_deg(fp_gcd(F, fp, d)) == 0) {
                std::vector<FpPoly> fac;
                fp_factor_squarefree(F, fp_monic(F, fp), fac);
                if (best_p == 0 || fac.size() < best_factors.size()) {
                    best_p = p;
                    best_factors = std::move(fac);
                }
                ++tried;
            }
        }
        ++p;
    }
    if (best_factors.size() == 1) return {f};

    // Mignotte-style bound on factor coefficients: 2^n * ||f||_2.
    Int norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Int bound = 1;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    bound <<= n;
    Int target(static_cast<unsigned long>(best_p));
    while (target <= 2 * bound) target *= Int(static_cast<unsigned long>(best_p));

    std::sort(best_factors.begin(), best_factors.end(),
              [](const FpPoly& a, const FpPoly& b) { return a < b; });
    std::vector<MPoly> lifted;
    hensel_tree(f, best_factors, 0, best_factors.size(), best_p, target, lifted);

    ZM R{target};
    std::vector<IntPoly> out;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    IntPoly rem = f;

    auto centered_poly = [&](const MPoly& m) {
        std::vector<Int> c(m.size());
        for (size_t i = 0; i < m.size(); ++i) c[i] = R.centered(m[i]);
        return IntPoly(std::move(c));
    };

    size_t s = 1;
    while (2 * s <= alive.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            MPoly prod{Int(1)};
            for (size_t i : idx) prod = m_mul(R, prod, lifted[alive[i]]);
            IntPoly cand = centered_poly(prod);
            bool ok = true;
            if (rem.coeff(0) != 0) {
                Int ct = cand.coeff(0);
                ok = ct != 0 && mpz_divisible_p(rem.coeff(0).get_mpz_t(), ct.get_mpz_t());
            }
            if (ok) {
                auto q = try_divide_exact(rem, cand);
                if (q) {
                    out.push_back(cand);
                    rem = *q;
                    std::vector<int> next;
                    for (size_t i = 0, k = 0; i < alive.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        next.push_back(alive[i]);
                    }
                    alive = std::move(next);
                    found = true;
                    break;
                }
            }
            // next subset of size s
            int pos = static_cast<int>(s) - 1;
            while (pos >= 0 && idx[pos] == alive.size() - s + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.degree() > 0) out.push_back(rem);
    return out;
}

// ------------------------------------------------------ cyclotomic helpers

// C_n evaluated at an integer point, computed as prod (x^d - 1)^mu(n/d)
// without constructing C_n.
Int cyclo_eval_int(unsigned long n, const Int& x) {
    Int num = 1, den = 1;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 0) continue;
        Int t;
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), d);
        t -= 1;
        if (mu == 1)
            num *= t;
        else
            den *= t;
    }
    return num / den;
}

const std::vector<unsigned long>& totient_le_cached(unsigned long bound) {
    static std::mutex mtx;
    static std::map<unsigned long, std::vector<unsigned long>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(bound);
    if (it == cache.end()) it = cache.emplace(bound, totient_le(bound)).first;
    return it->second;
}

}  // namespace

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return p.normalized();
    IntPoly f = p.normalized();
    IntPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    auto q = try_divide_exact(f, g);
    if (!q) throw InternalError("squarefree_part: inexact division");
    return q->normalized();
}

IntPoly Factorization::product() const {
    IntPoly r = IntPoly::one();
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * f;
    // unit is rational; product() is meaningful when unit is integral.
    if (unit.get_den() != 1) throw InternalError("Factorization::product with non-integral unit");
    return r * Int(unit.get_num());
}

Factorization factor(const IntPoly& p) {
    if (p.is_zero()) throw InputError("factor: zero polynomial");
    Factorization out;
    Int cont = p.content();
    if (p.lc() < 0) cont = -cont;
    out.unit = Rat(cont);
    IntPoly f = p.normalized();
    if (f.degree() == 0) return out;

    // Yun squarefree decomposition.
    std::vector<std::pair<IntPoly, int>> sqf;
    {
        IntPoly d = f.derivative();
        IntPoly u = gcd(f, d);
        IntPoly v = *try_divide_exact(f, u);
        IntPoly w = *try_divide_exact(d, u);
        int i = 1;
        while (v.degree() > 0) {
            IntPoly wv = w - v.derivative();
            IntPoly h = gcd(v, wv);
            if (h.degree() > 0) sqf.emplace_back(h, i);
            v = *try_divide_exact(v, h);
            w = *try_divide_exact(wv, h);
            ++i;
        }
    }

    for (auto& [part, mult] : sqf) {
        IntPoly g = part.normalized();
        // Cyclotomic sieve: try every C_n with totient(n) <= deg g.
        std::vector<IntPoly> irreducibles;
        if (g.degree() >= 1) {
            Int g2 = g.eval(Int(2)), g3 = g.eval(Int(3));
            for (unsigned long n : totient_le_cached(static_cast<unsigned long>(g.degree()))) {
                if (static_cast<int>(totient(n)) > g.degree()) continue;
                if (g2 != 0 && g3 != 0) {
                    if (!mpz_divisible_p(g2.get_mpz_t(), cyclo_eval_int(n, 2).get_mpz_t()))
                        continue;
                    if (!mpz_divisible_p(g3.get_mpz_t(), cyclo_eval_int(n, 3).get_mpz_t()))
                        continue;
                }
                auto q = try_divide_exact(g, cyclotomic(n));
                if (q) {
                    irreducibles.push_back(cyclotomic(n));
                    g = *q;
                    g2 = g.eval(Int(2));
                    g3 = g.eval(Int(3));
                    if (g.degree() == 0) break;
                }
            }
        }
        if (g.degree() == 1) {
            irreducibles.push_back(g.normalized());
        } else if (g.degree() > 1) {
            // Monic reduction x -> x/lc, factor, map back.
            const Int lcg = g.lc();
            IntPoly mono;
            {
                // lc^(d-1) * g(x/lc): coefficient i picks up lc^(d-1-i)
                std::vector<Int> c(g.coeffs());
                const int d = g.degree();
                Int scale = 1;
                for (int i = d - 1; i >= 0; --i) {
                    c[i] *= scale;
                    scale *= lcg;
                }
                c[d] = 1;
                mono = IntPoly(std::move(c));
            }
            for (const IntPoly& h : zassenhaus_monic(mono)) {
                // map back: primitive part of h(lc * x)
                std::vector<Int> c(h.coeffs());
                Int scale = 1;
                for (size_t i = 1; i < c.size(); ++i) {
                    scale *= lcg;
                    c[i] *= scale;
                }
                irreducibles.push_back(IntPoly(std::move(c)).normalized());
            }
        }
        for (auto& irr : irreducibles) out.factors.emplace_back(irr.normalized(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() <= 0) return false;
    Factorization f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace salemk3
