#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "salemk3/ratfunc.hpp"
#include "salemk3/salem.hpp"

namespace salemk3 {

// The multiplier pair at a periodic point of period m whose transversal
// eigenvalues are delta^{m/2} alpha^{+-1}, where delta is the Galois
// conjugate of the Salem number lambda with delta + 1/delta = tau_j, and
// alpha + 1/alpha = phat(tau_hat) for tau_hat = delta^{1/2} + delta^{-1/2}
// (the positive branch, tau_hat^2 = tau_j + 2).  phat must be even for even
// m and odd for odd m.
struct MultiplierSpec {
    SalemTrace salem;
    int special_trace_index;  // j >= 1 picks tau_j strictly inside (-2, 2)
    long period;              // m >= 1
    RatFunc phat;
};

// The same point seen through the k-th iterate: alpha -> alpha^k turns
// (m, phat) into (k*m, H_k o phat).  Parity is preserved automatically.
MultiplierSpec power_spec(const MultiplierSpec& spec, long k);

enum class MdrKind { MI, MD_NR, RESONANT };

// Which test settled an MI verdict.
enum class MiReason {
    QNotAlgebraicInteger,  // Q(rho) fails to be an algebraic integer
    ConjugateAboveTwo,     // Q > 2 at a conjugate of rho
    NoCyclotomicTrace,     // Q(rho) in [-2,2] but no admissible CT_k vanishes
    NoSalemPair,           // Q(rho) > 2 but no (j, k, sigma) decomposition
};

struct MiEvidence {
    MiReason reason;
    // index of the conjugate tau_i with Q(tau_i) > 2, for ConjugateAboveTwo
    std::optional<int> conjugate_index;
};

// Q(rho) lies in [-2, 2]: alpha^2 is a root of unity precisely when some
// CT_k (in the convention CT_1 = w-2, CT_2 = w+2) vanishes at Q(rho) with
// phi(k) dividing deg lambda, in which case alpha^{2k} = 1 and the pair is
// dependent but non-resonant.
struct CaseIEvidence {
    std::vector<unsigned long> ks;   // all admissible k; provably at most one
    unsigned long phi_k;             // totient of ks.front(), convention value
    unsigned long alpha_order_bound; // alpha^{2k} = 1 for k = ks.front()
};

// Q(rho) > 2: alpha^2 is the Galois conjugate of a Salem power.  The unique
// coprime pair (j, k) and mediating Salem trace sigma satisfy
// H_j(sigma-root) = Q(rho) and H_k(sigma-root) = rho; dependence certificate
// alpha_1^{n1} = alpha_2^{n2} with (n1, n2) = (km + j, km - j).
struct CaseIIEvidence {
    long j = 0;
    long k = 0;
    IntPoly sigma_trace;
    long delta = 0;  // km - j
    long n1 = 0, n2 = 0;
    bool n1_pass = false;           // delta >= 2
    bool n2_pass = false;           // delta does not divide m
    bool n3_applies = false;        // delta even, delta | 2m, (2m)/delta odd
    bool n3_pass = true;            // when it applies: phat(rho_hat) < 0
    std::optional<int> phat_sign;   // exact sign at rho_hat, when evaluated
    bool half_is_salem = false;     // lambda^{1/2} is itself a Salem number
};

struct MdrVerdict {
    MdrKind kind = MdrKind::MI;
    RatFunc q;           // alpha^2 + alpha^{-2} as a function of w = tau
    IntPoly q_minpoly;   // minimal polynomial of Q(rho)
    double q_approx = 0; // floating approximation of Q(rho)
    int q_case = 0;      // 1: Q(rho) in [-2,2]; 2: Q(rho) > 2
    std::optional<MiEvidence> mi;
    std::optional<CaseIEvidence> case1;
    std::optional<CaseIIEvidence> case2;

    bool independent() const { return kind == MdrKind::MI; }
    bool non_resonant() const { return kind != MdrKind::RESONANT; }
    std::string kind_str() const;
    std::string str() const;
    std::string to_json() const;  // full evidence payload
};

// Q = P^2 - 2 (even m) or (w+2)^{-1} P^2 - 2 (odd m), where P is defined by
// phat(w) = P(H_2(w)) resp. w * phat(w) = P(H_2(w)).  InputError if phat's
// parity does not match m or the substitution is not expressible.
RatFunc build_Q(const RatFunc& phat, long m);

// Full decision: multiplicatively independent, dependent but non-resonant,
// or resonant, with replayable evidence.  InputError on a parity violation,
// a pole of Q at rho, or a vanishing phat(rho_hat) where its sign is needed.
MdrVerdict decide(const MultiplierSpec& spec);

// Exhaustive search over |n1|, |n2| <= relation_bound for exact relations
// alpha_1^{n1} = alpha_2^{n2} and for resonances alpha_i = alpha_1^{n1} *
// alpha_2^{n2} (n1, n2 >= 0, n1 + n2 >= 2), each verified exactly in the
// field Q(tau_hat): the relation holds iff the monic quadratics with root
// pairs {alpha^a, alpha^-a} and {delta^{c/2}, delta^{-c/2}} coincide, i.e.
// H_a(phat(tau_hat)) = H_c(tau_hat) with a = n1 + n2, c = m(n1 - n2).
struct OracleReport {
    bool consistent = false;
    std::optional<std::pair<long, long>> relation;          // first (n1, n2)
    std::optional<std::array<long, 3>> resonance;           // (i, n1, n2)
    std::string detail;
};
OracleReport nr_bruteforce_oracle(const MultiplierSpec& spec, long relation_bound);

}  // namespace salemk3
