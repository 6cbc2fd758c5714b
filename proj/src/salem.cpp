#include "salemk3/salem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

namespace salemk3 {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Closed rational interval image of an integer polynomial (Horner).
struct IV {
    Rat lo, hi;
};

IV iv_eval(const IntPoly& p, const Rat& a, const Rat& b) {
    // numerators over the common denominator q; the accumulator tracks
    // q^(deg-i) * value so every step stays in integers
    const Int &da = a.get_den(), &db = b.get_den();
    Int q;
    mpz_lcm(q.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    const Int pa = a.get_num() * (q / da), pb = b.get_num() * (q / db);
    Int lo(0), hi(0), vp(1);
    for (int i = p.degree(); i >= 0; --i) {
        if (i < p.degree()) {
            Int m1 = lo * pa, m2 = lo * pb, m3 = hi * pa, m4 = hi * pb;
            lo = std::min(std::min(m1, m2), std::min(m3, m4));
            hi = std::max(std::max(m1, m2), std::max(m3, m4));
            vp *= q;
        }
        Int w = p.coeff(i) * vp;
        lo += w;
        hi += w;
    }
    IV acc{Rat(lo, vp), Rat(hi, vp)};
    acc.lo.canonicalize();
    acc.hi.canonicalize();
    return acc;
}

}  // namespace

// -------------------------------------------------------------- SalemTrace

const AlgebraicReal& SalemTrace::root(int j) const {
    if (j < 0 || j >= static_cast<int>(roots_.size()))
        throw InputError("trace root index out of range");
    return roots_[static_cast<size_t>(j)];
}

const SalemTrace& RecognizeResult::value() const {
    if (!ok()) throw InternalError("value() on rejected trace: " + rejection_);
    return *trace_;
}

RecognizeResult RecognizeResult::accept(IntPoly u, std::vector<AlgebraicReal> roots,
                                        AlgebraicReal lambda) {
    RecognizeResult r;
    r.trace_ = SalemTrace(std::move(u), std::move(roots), std::move(lambda));
    return r;
}

RecognizeResult RecognizeResult::reject(std::string reason) {
    RecognizeResult r;
    r.rejection_ = std::move(reason);
    return r;
}

RecognizeResult recognize_salem_trace(const IntPoly& u) {
    if (u.degree() < 1) return RecognizeResult::reject("degree too small");
    if (!u.is_monic()) return RecognizeResult::reject("not monic");
    if (!is_irreducible(u)) return RecognizeResult::reject("reducible");

    const int n = u.degree();
    int above = count_real_roots(u, Bound::at(Rat(2)), Bound::pos_inf());
    if (above == 0) return RecognizeResult::reject("no root > 2");
    if (above > 1) return RecognizeResult::reject("more than one root > 2");
    // u(2) != 0 is automatic for an irreducible u unless u = w - 2, which has
    // no root above 2; u(-2) = 0 only for u = w + 2, same remark.
    int inside = count_real_roots(u, Bound::at(Rat(-2)), Bound::at(Rat(2)));
    if (inside != n - 1) return RecognizeResult::reject("conjugate outside (-2, 2)");
    if (n < 2) return RecognizeResult::reject("trace degree 1: no conjugate on the unit circle");

    auto asc = AlgebraicReal::roots_of(u);
    std::vector<AlgebraicReal> roots(asc.rbegin(), asc.rend());  // tau_0 > tau_1 > ...

    // lambda is the unique root of the palindromic lift in (1, rho):
    // lambda > rho - 1 and 1/lambda < 1.
    IntPoly lift = trace_lift(u);
    const AlgebraicReal& rho = roots.front();
    rho.refine_below(Rat(1, 4));
    AlgebraicReal lambda = AlgebraicReal::root_of(lift, Rat(1), rho.hi());
    return RecognizeResult::accept(u, std::move(roots), std::move(lambda));
}

SalemTrace require_salem_trace(const IntPoly& u) {
    auto r = recognize_salem_trace(u);
    if (!r.ok()) throw InputError("not a Salem trace (" + r.rejection() + "): " + u.str());
    return r.value();
}

SalemTrace power_trace(const SalemTrace& s, long k) {
    if (k < 1) throw InputError("power_trace: k must be positive");
    AlgebraicReal y = eval_ratfunc(RatFunc::from_poly(H(k)), s.rho());
    return require_salem_trace(y.minpoly());
}

// ---------------------------------------------------------- power structure

long salem_power_bound(const SalemTrace& s) {
    const int d = s.degree();
    double log_lambda = std::log(s.salem_root().approx());
    // lower bound on log(lambda) over all Salem numbers of degree d: the
    // exact minimum from the exhaustive enumeration when the trace degree is
    // small, else the general Mahler-measure bound (1/4)(loglog d/log d)^3.
    double floor_log;
    if (d <= 10) {
        static std::map<int, double> cache;
        auto it = cache.find(d);
        if (it == cache.end()) {
            auto list = salem_traces_up_to(d / 2, Rat(5, 2));
            double v = list.empty() ? 0.0 : std::log(list.front().salem_root().approx());
            it = cache.emplace(d, v).first;
        }
        floor_log = it->second;
    } else {
        floor_log = 0.0;
    }
    if (floor_log <= 0.0) {
        double ld = std::log(static_cast<double>(d));
        double r = std::log(ld) / ld;
        floor_log = 0.25 * r * r * r;
    }
    return static_cast<long>(std::floor(log_lambda / (floor_log * (1.0 - 1e-9)))) + 1;
}

PrimitiveDecomposition primitive(const SalemTrace& sigma) {
    const long kmax = salem_power_bound(sigma);
    for (long k = 2; k <= kmax; ++k) {
        // the least index extracting a root is prime; recursion supplies the rest
        if (!is_prime(k)) continue;
        IntPoly comp = sigma.trace_poly().compose(H(k));
        for (const auto& [f, mult] : factor(comp).factors) {
            if (f.degree() != sigma.trace_degree()) continue;
            auto rec = recognize_salem_trace(f);
            if (!rec.ok()) continue;
            // f's root above 2 maps onto rho automatically: H_k of it is a
            // root of the trace polynomial and exceeds 2, hence equals rho.
            auto sub = primitive(rec.value());
            return {sub.rho0, k * sub.k0};
        }
    }
    return {sigma, 1};
}

Mdr2Bounds mdr2_bounds(const SalemTrace& rho, const AlgebraicReal& q_rho) {
    if (q_rho.compare(Rat(2)) <= 0)
        throw InputError("search bounds are defined only for values above 2");
    auto prim = primitive(rho);
    const AlgebraicReal& r0 = prim.rho0.rho();
    for (long j = 1; j <= 1000; ++j) {
        AlgebraicReal hj = eval_ratfunc(RatFunc::from_poly(H(j)), r0);
        if (hj.compare(q_rho) >= 0) return {j, prim.k0};
    }
    throw InternalError("no j with H_j(rho0) >= q_rho below 1000");
}

// -------------------------------------------------------------- enumeration

namespace {

Rat rat_ceil(const Rat& v) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return Rat(q);
}

Rat rat_floor(const Rat& v) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return Rat(q);
}

// All monic integer polynomials of degree n whose roots are all real and lie
// in [lo, hi].  Descends the derivative chain scaled to keep coefficients
// small: E_j := p^(n-j) / (n-j)!  is an integer polynomial (its coefficients
// are binomials times the top coefficients of p), E_1 = n x + a_{n-1}, and
// E_{j+1} = (n-j) * antiderivative(E_j) + a_{n-j-1}.  The roots of E_j are
// the critical points of E_{j+1}, so endpoint signs plus sign conditions at
// those roots bracket the next coefficient.  Every condition used for
// pruning is necessary, so the enumeration is exhaustive; each surviving
// candidate is then checked exactly with a Sturm count.
struct ChainEnumerator {
    int n;
    Rat lo, hi;
    std::vector<IntPoly> out;
    // when positive, also require every coefficient of the leaf to lie in
    // [-cbound, cbound]; the constant added at each level is exactly one
    // coefficient of the leaf, so the cap applies level by level
    int cbound = 0;

    void run() {
        // E_1 = n x + c with root -c/n in [lo, hi]
        Rat clo = rat_ceil(-Rat(n) * hi), chi = rat_floor(-Rat(n) * lo);
        if (cbound > 0) {
            clo = std::max(clo, Rat(-cbound));
            chi = std::min(chi, Rat(cbound));
        }
        for (Rat c = clo; c <= chi; c += 1) {
            IntPoly e1(std::vector<Int>{c.get_num(), Int(n)});
            if (n == 1) {
                out.push_back(e1);
                continue;
            }
            descend(e1, 1);
        }
    }

    void descend(const IntPoly& ej, int j) {
        // roots of the full chain sit strictly between the leaf's extreme
        // roots, so an endpoint root rules out every descendant
        if (ej.sign_at(lo) == 0 || ej.sign_at(hi) == 0) return;

        SturmSequence chain(ej);
        const int vlo = chain.variations(Bound::at(lo));
        const int vhi = chain.variations(Bound::at(hi));
        const int distinct = ej.degree() - chain.gcd_degree();
        // a real-rooted descendant needs every ancestor real-rooted in the box
        if (vlo - vhi != distinct) return;
        // Rolle, applied down from a leaf with n-1 simple roots in (-2, 2):
        // E_j keeps at least j-1 distinct roots there (so at most one escapes
        // toward [2, hi)).  Skip when 2 itself is a root: the variation count
        // is unreliable at a multiple root, and such nodes are rare.
        if (j > 1 && ej.sign_at(Rat(2)) != 0) {
            int v2 = chain.variations(Bound::at(Rat(2)));
            if (vlo - v2 < j - 1) return;
        }

        // W = (n-j) * antiderivative of E_j, integer along the whole chain
        std::vector<Int> w(static_cast<size_t>(ej.degree()) + 2, Int(0));
        for (int i = 0; i <= ej.degree(); ++i) {
            Int t = ej.coeff(i) * (n - j);
            Int q = t / (i + 1);
            if (q * (i + 1) != t) throw InternalError("derivative chain not integral");
            w[static_cast<size_t>(i) + 1] = q;
        }
        IntPoly W(std::move(w));

        // Bracket the integer c in E = W + c.  Lower bounds come from
        // conditions E >= 0, upper bounds from E <= 0.
        bool has_lo = false, has_hi = false;
        Rat c_lo, c_hi;
        auto add_lower = [&](const Rat& v) {
            if (!has_lo || v > c_lo) c_lo = v;
            has_lo = true;
        };
        auto add_upper = [&](const Rat& v) {
            if (!has_hi || v < c_hi) c_hi = v;
            has_hi = true;
        };

        // E(hi) >= 0 always; the sign of E(lo) is (-1)^(j+1) since lc > 0
        add_lower(-W.eval(hi));
        if ((j + 1) % 2 == 0)
            add_lower(-W.eval(lo));
        else
            add_upper(-W.eval(lo));
        auto empty = [&] { return has_lo && has_hi && c_lo > c_hi; };
        if (empty()) return;

        // critical points of E are the roots of E_j, all inside (lo, hi);
        // isolate them with the node's own chain.  Sign probes need a
        // sign-flipping polynomial, so deflate only when E_j is not squarefree.
        const bool simple = chain.gcd_degree() == 0;
        const IntPoly sf = simple ? IntPoly() : squarefree_part(ej);
        const IntPoly& probe = simple ? ej : sf;
        auto safe_cut = [&](const Rat& a, const Rat& b) {
            Rat m = (a + b) / 2;
            for (int t = 0; t <= probe.degree(); ++t) {
                if (probe.sign_at(m) != 0) return m;
                m = (a + m) / 2;
            }
            throw InternalError("derivative chain: no root-free cut");
        };
        const Rat slack(1, 8);
        struct Seg {
            Rat a, b;
            int va, vb;
        };
        std::vector<Seg> segs{{lo, hi, vlo, vhi}};
        while (!segs.empty()) {
            Seg s = std::move(segs.back());
            segs.pop_back();
            int k = s.va - s.vb;  // distinct roots in (a, b); endpoints are never roots
            if (k == 0) continue;
            if (k >= 2) {
                Rat m = safe_cut(s.a, s.b);
                int vm = chain.variations(Bound::at(m));
                segs.push_back({s.a, m, s.va, vm});
                segs.push_back({std::move(m), std::move(s.b), vm, s.vb});
                continue;
            }
            Rat a = std::move(s.a), b = std::move(s.b);
            const Rat a0 = a, b0 = b;
            int s_left = probe.sign_at(a);
            // narrow by sign tests alone before evaluating W at all
            const Rat xslack(1, 16);
            while (b - a > xslack) {
                Rat m2 = (a + b) / 2;
                int sm = probe.sign_at(m2);
                if (sm == 0) {
                    a = m2;
                    b = m2;
                    break;
                }
                (sm == s_left ? a : b) = m2;
            }
            IV v = iv_eval(W, a, b);
            for (int it = 0; it < 80 && v.hi - v.lo > slack; ++it) {
                Rat m2 = (a + b) / 2;
                int sm = probe.sign_at(m2);
                if (sm == 0) {
                    a = m2;
                    b = m2;
                } else {
                    (sm == s_left ? a : b) = m2;
                }
                v = iv_eval(W, a, b);
                if (a == b) break;
            }
            int sa, sb;
            if (simple) {
                sa = s_left;  // one simple root in (a, b): opposite end signs
                sb = -s_left;
            } else {
                sa = ej.sign_at(a0);
                sb = ej.sign_at(b0);
            }
            if (sa < 0 && sb > 0) {
                // local minimum of E: E(r) <= 0, i.e. c <= -W(r)
                add_upper(-v.lo);
            } else if (sa > 0 && sb < 0) {
                // local maximum: E(r) >= 0
                add_lower(-v.hi);
            } else {
                // even multiplicity: inflection must satisfy E(r) = 0
                add_upper(-v.lo);
                add_lower(-v.hi);
            }
            if (empty()) return;
        }
        if (!has_lo || !has_hi) throw InternalError("derivative chain: unbounded coefficient");

        Rat c_from = rat_ceil(c_lo), c_to = rat_floor(c_hi);
        if (cbound > 0) {
            c_from = std::max(c_from, Rat(-cbound));
            c_to = std::min(c_to, Rat(cbound));
        }
        const bool leaf = j + 1 == n;
        for (Rat c = c_from; c <= c_to; c += 1) {
            IntPoly cand = W + IntPoly(std::vector<Int>{c.get_num()});
            if (leaf) {
                // cheap necessary screens for a Salem trace: u(2) < 0 and
                // sign u(-2) = (-1)^n; exact checks happen on the survivors
                if (cand.eval(Int(2)) >= 0) continue;
                Int ulo = cand.eval(Int(-2));
                if ((n % 2 == 0 && ulo <= 0) || (n % 2 == 1 && ulo >= 0)) continue;
                out.push_back(cand);
            } else {
                descend(cand, j + 1);
            }
        }
    }
};

}  // namespace

namespace {

// exact screens + recognition over the survivors of a chain scan, λ-sorted
std::vector<SalemTrace> finish_salem_scan(const std::vector<IntPoly>& cands, int n) {
    std::vector<SalemTrace> out;
    for (const auto& p : cands) {
        if (count_real_roots(p, Bound::at(Rat(2)), Bound::pos_inf()) != 1) continue;
        if (count_real_roots(p, Bound::at(Rat(-2)), Bound::at(Rat(2))) != n - 1) continue;
        auto rec = recognize_salem_trace(p);
        if (rec.ok()) out.push_back(rec.value());
    }
    std::sort(out.begin(), out.end(), [](const SalemTrace& a, const SalemTrace& b) {
        return a.rho().compare(b.rho()) < 0;
    });
    return out;
}

}  // namespace

std::vector<SalemTrace> salem_traces_up_to(int trace_degree, const Rat& rho_max) {
    if (trace_degree < 1) throw InputError("trace degree must be positive");
    if (rho_max <= 2) return {};
    ChainEnumerator chain{trace_degree, Rat(-2), rho_max, {}};
    chain.run();
    return finish_salem_scan(chain.out, trace_degree);
}

std::vector<SalemTrace> enumerate_salem_candidates(int degree, const Int& coeff_bound) {
    if (degree < 4 || degree % 2 != 0) throw InputError("degree must be even and at least 4");
    if (coeff_bound < 0) throw InputError("coefficient bound must be nonnegative");
    if (coeff_bound > 1000000) throw InputError("coefficient bound too large");
    if (coeff_bound == 0) return {};
    const int n = degree / 2;
    const int B = static_cast<int>(coeff_bound.get_si());
    // Cauchy: all roots of a monic integer polynomial with |c_i| <= B lie
    // strictly inside (-(B+1), B+1); Salem conjugates are already in (-2, 2)
    ChainEnumerator chain{n, Rat(-2), Rat(B + 1), {}, B};
    chain.run();
    return finish_salem_scan(chain.out, n);
}

// ------------------------------------------------------------ SalemCatalog

SalemCatalog SalemCatalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open catalog file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("catalog parse error in " + path + ": " + e.what());
    }
    SalemCatalog cat;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        auto colon = key.find(':');
        if (colon == std::string::npos) throw InputError("catalog key not 'd:i': " + key);
        int d = std::stoi(key.substr(0, colon));
        int i = std::stoi(key.substr(colon + 1));
        const auto& val = it.value();
        std::vector<Int> coeffs;
        for (const auto& cv : val.at("trace_coeffs")) coeffs.push_back(Int(cv.get<long>()));
        IntPoly u(std::move(coeffs));
        SalemTrace trace = require_salem_trace(u);
        if (trace.degree() != d)
            throw InputError("catalog entry " + key + " has degree " +
                             std::to_string(trace.degree()));
        Entry entry{std::move(trace), val.at("provenance").get<std::string>(), std::nullopt};
        if (val.contains("bound")) {
            if (val["bound"].is_string())
                entry.bound = Rat(val["bound"].get<std::string>());
            else
                entry.bound = Rat(val["bound"].get<long>());
        }
        cat.entries_.emplace(std::make_pair(d, i), std::move(entry));
    }
    return cat;
}

std::string SalemCatalog::default_path() {
    if (const char* p = std::getenv("SALEMK3_CATALOG")) return p;
    if (const char* dir = std::getenv("SALEMK3_DATA_DIR"))
        return std::string(dir) + "/salem_catalog.json";
    return "data/salem_catalog.json";
}

const SalemCatalog& SalemCatalog::shared() {
    static SalemCatalog cat = load(default_path());
    return cat;
}

bool SalemCatalog::contains(int d, int i) const {
    return entries_.count(std::make_pair(d, i)) > 0;
}

const SalemCatalog::Entry& SalemCatalog::entry(int d, int i) const {
    auto it = entries_.find(std::make_pair(d, i));
    if (it == entries_.end())
        throw InputError("no catalog entry for degree " + std::to_string(d) + " index " +
                         std::to_string(i));
    return it->second;
}

}  // namespace salemk3
