#include <doctest.h>

#include <json.hpp>
#include <map>
#include <vector>

#include "salemk3/mdr.hpp"
#include "salemk3/salem.hpp"

using namespace salemk3;

namespace {
const IntPoly kLehmerTrace = parse_poly("w^5 + w^4 - 5*w^3 - 5*w^2 + 4*w + 3");
const IntPoly kSt4_1 = parse_poly("w^2 - w - 3");

// Solved multiplier functions P_n for the period-(n+1) family:
// P_{2j-1} = H_j - K_{j-1},  P_{2j} = (w+1) K_j - (w+3) K_{j-1}.
IntPoly solved_p(int n) {
    int j = (n + 1) / 2;
    if (n % 2 == 1) return H(j) - K(j - 1);
    return parse_poly("w + 1") * K(j) - parse_poly("w + 3") * K(j - 1);
}

// phat = P(H_2) for even periods, P(H_2)/w for odd ones.
RatFunc even_phat(const IntPoly& p) { return RatFunc::from_poly(p.compose(H(2))); }
RatFunc odd_phat(const IntPoly& p) { return RatFunc(p.compose(H(2)), IntPoly::var()); }

MultiplierSpec spec_for(const SalemTrace& s, long m, const RatFunc& phat, int j = 1) {
    return MultiplierSpec{s, j, m, phat};
}
}  // namespace

TEST_CASE("squared-trace construction follows the parity of the period") {
    RatFunc w = RatFunc::var();
    CHECK(build_Q(w, 1) == w);
    CHECK(build_Q(RatFunc(parse_poly("w^2 - 1"), parse_poly("w")), 1) ==
          RatFunc(parse_poly("w^2 - 3"), parse_poly("w + 2")));
    // phat = H_{2r} means alpha is conjugate to delta^r, so Q = H_{2r} again
    CHECK(build_Q(RatFunc::from_poly(H(2)), 2) == RatFunc::from_poly(H(2)));
    CHECK(build_Q(RatFunc::from_poly(H(4)), 2) == RatFunc::from_poly(H(4)));
    // rational content squares through
    CHECK(build_Q(RatFunc(parse_poly("3*w"), IntPoly::one()), 1) ==
          RatFunc::from_poly(parse_poly("9*w + 16")));
    // parity violations
    CHECK_THROWS_AS(build_Q(w, 2), const InputError&);
    CHECK_THROWS_AS(build_Q(RatFunc::from_poly(H(2)), 1), const InputError&);
    CHECK_THROWS_AS(build_Q(RatFunc::from_poly(parse_poly("w^2 + w")), 2), const InputError&);
}

TEST_CASE("solved multiplier functions satisfy the half-trace identity") {
    // H_{n+1}(w) - K_n(w)/w is P_n(H_2(w)) for odd n and P_n(H_2(w))/w for even n
    for (int n = 1; n <= 14; ++n) {
        RatFunc phat = RatFunc::from_poly(H(n + 1)) - RatFunc(K(n), IntPoly::var());
        RatFunc expected = (n % 2 == 1) ? even_phat(solved_p(n)) : odd_phat(solved_p(n));
        CAPTURE(n);
        CHECK(phat == expected);
        CHECK_NOTHROW(build_Q(phat, n + 1));
    }
    CHECK(solved_p(1) == parse_poly("w - 1"));
    CHECK(solved_p(2) == parse_poly("w^2 - 3"));
    CHECK(solved_p(6) == parse_poly("w^4 - 5*w^2 - w + 3"));
    CHECK(solved_p(7) == parse_poly("w^4 - w^3 - 4*w^2 + 2*w + 2"));
    CHECK(solved_p(11) == parse_poly("w^6 - w^5 - 6*w^4 + 4*w^3 + 9*w^2 - 3*w - 2"));
}

TEST_CASE("admissible root-of-unity orders group by the convention totient") {
    CHECK(cyclotomic_trace(1, CycloTraceConv::Mdr) == parse_poly("w - 2"));
    CHECK(cyclotomic_trace(2, CycloTraceConv::Mdr) == parse_poly("w + 2"));
    CHECK(cyclotomic_trace(3, CycloTraceConv::Mdr) == parse_poly("w + 1"));
    CHECK(cyclotomic_trace(5, CycloTraceConv::Mdr) == cyclotomic_trace(5));

    std::vector<unsigned long> ks = totient_le(22);
    CHECK(ks.size() == 43);
    std::map<unsigned long, std::vector<unsigned long>> groups;
    for (unsigned long k : ks) {
        unsigned long conv = 2 * static_cast<unsigned long>(
                                     cyclotomic_trace(k, CycloTraceConv::Mdr).degree());
        groups[conv].push_back(k);
    }
    CHECK(groups[2] == std::vector<unsigned long>{1, 2, 3, 4, 6});
    CHECK(groups[4] == std::vector<unsigned long>{5, 8, 10, 12});
    CHECK(groups[6] == std::vector<unsigned long>{7, 9, 14, 18});
    CHECK(groups[8] == std::vector<unsigned long>{15, 16, 20, 24, 30});
    CHECK(groups[10] == std::vector<unsigned long>{11, 22});
    CHECK(groups[12] == std::vector<unsigned long>{13, 21, 26, 28, 36, 42});
    CHECK(groups.count(14) == 0);
    CHECK(groups[16] == std::vector<unsigned long>{17, 32, 34, 40, 48, 60});
    CHECK(groups[18] == std::vector<unsigned long>{19, 27, 38, 54});
    CHECK(groups[20] == std::vector<unsigned long>{25, 33, 44, 50, 66});
    CHECK(groups[22] == std::vector<unsigned long>{23, 46});
}

TEST_CASE("case I: a vanishing cyclotomic trace of admissible order certifies dependence") {
    const SalemTrace& s = SalemCatalog::shared().at(8, 17);
    CHECK(s.trace_poly() == parse_poly("w^4 + w^3 - 5*w^2 - 7*w - 1"));
    MdrVerdict v = decide(spec_for(s, 1, RatFunc(parse_poly("w^2 - 1"), parse_poly("w")), 2));
    CHECK(v.kind == MdrKind::MD_NR);
    CHECK_FALSE(v.independent());
    CHECK(v.non_resonant());
    CHECK(v.q_case == 1);
    CHECK(v.q == RatFunc(parse_poly("w^2 - 3"), parse_poly("w + 2")));
    CHECK(v.q_minpoly == parse_poly("w^2 + w - 1"));
    REQUIRE(v.case1.has_value());
    CHECK(v.case1->ks == std::vector<unsigned long>{5});
    CHECK(v.case1->phi_k == 4);
    CHECK(v.case1->alpha_order_bound == 10);
}

TEST_CASE("case I: a constant squared trace pins a sixth root of unity") {
    const SalemCatalog& cat = SalemCatalog::shared();
    const SalemTrace& s = cat.at(8, 8);
    // the eighth-ranked degree-8 number is the square of the first
    CHECK(s.trace_poly() == power_trace(cat.at(8, 1), 2).trace_poly());

    MdrVerdict v = decide(spec_for(s, 3, RatFunc(parse_poly("w^4 - 4*w^2 + 1"), parse_poly("w"))));
    CHECK(v.kind == MdrKind::MD_NR);
    CHECK(v.q_case == 1);
    CHECK(v.q_minpoly == parse_poly("w + 1"));
    CHECK(v.q_approx == doctest::Approx(-1.0));
    REQUIRE(v.case1.has_value());
    CHECK(v.case1->ks == std::vector<unsigned long>{3});
    CHECK(v.case1->phi_k == 2);
    CHECK(v.case1->alpha_order_bound == 6);
    // Q + 1 vanishes on the whole trace: its numerator is the trace polynomial itself
    CHECK(numerator_with_sign(v.q + RatFunc(Rat(1))) == s.trace_poly());
}

TEST_CASE("case II: the sign test at the shifted root separates dependence from resonance") {
    SalemTrace leh = require_salem_trace(kLehmerTrace);
    RatFunc h3 = RatFunc::from_poly(H(3));

    MdrVerdict dep = decide(spec_for(leh, 5, -h3));
    CHECK(dep.kind == MdrKind::MD_NR);
    CHECK(dep.q_case == 2);
    CHECK(dep.q == h3);
    CHECK(dep.q_minpoly == power_trace(leh, 3).trace_poly());
    REQUIRE(dep.case2.has_value());
    CHECK(dep.case2->j == 3);
    CHECK(dep.case2->k == 1);
    CHECK(dep.case2->sigma_trace == kLehmerTrace);
    CHECK(dep.case2->delta == 2);
    CHECK(dep.case2->n1 == 8);
    CHECK(dep.case2->n2 == 2);
    CHECK(dep.case2->n1_pass);
    CHECK(dep.case2->n2_pass);
    CHECK(dep.case2->n3_applies);
    CHECK(dep.case2->n3_pass);
    CHECK(dep.case2->phat_sign == -1);
    CHECK_FALSE(dep.case2->half_is_salem);

    // same squared trace, opposite sign at the shifted root: the pair resonates
    MdrVerdict res = decide(spec_for(leh, 5, h3));
    CHECK(res.kind == MdrKind::RESONANT);
    CHECK_FALSE(res.non_resonant());
    CHECK(res.q == dep.q);
    REQUIRE(res.case2.has_value());
    CHECK(res.case2->phat_sign == 1);
    CHECK(res.case2->n3_applies);
    CHECK_FALSE(res.case2->n3_pass);
    CHECK(res.case2->n1_pass);
    CHECK(res.case2->n2_pass);
}

TEST_CASE("case II: a square root of the dynamical degree is resonant") {
    SalemTrace s = require_salem_trace(kSt4_1);
    MdrVerdict v = decide(spec_for(s, 1, RatFunc::var()));
    CHECK(v.kind == MdrKind::RESONANT);
    CHECK(v.q_case == 2);
    CHECK(v.q == RatFunc::var());
    CHECK(v.q_minpoly == kSt4_1);
    REQUIRE(v.case2.has_value());
    CHECK(v.case2->j == 1);
    CHECK(v.case2->k == 1);
    CHECK(v.case2->sigma_trace == kSt4_1);
    CHECK(v.case2->delta == 0);
    CHECK(v.case2->n1 == 2);
    CHECK(v.case2->n2 == 0);
    CHECK_FALSE(v.case2->n1_pass);
    CHECK(v.case2->n2_pass);        // vacuous at delta = 0
    CHECK_FALSE(v.case2->n3_applies);
    CHECK_FALSE(v.case2->phat_sign.has_value());
    CHECK_FALSE(v.case2->half_is_salem);
}

TEST_CASE("a conjugate above two forces independence") {
    const SalemCatalog& cat = SalemCatalog::shared();
    RatFunc s12 = RatFunc(parse_poly("w^6 - 7*w^4 - w^3 + 13*w^2 + 3*w - 4"), kLehmerTrace)
                      .compose(RatFunc::from_poly(H(2)));
    RatFunc s8 = RatFunc(parse_poly("w^3 - w^2 - 3*w"), parse_poly("w^2 - 1"))
                     .compose(RatFunc::from_poly(H(2)));

    struct Instance {
        int d, i;
        long m;
        RatFunc phat;
        int conj;  // first conjugate with Q > 2
    };
    std::vector<Instance> rows = {
        {16, 2, 7, odd_phat(solved_p(6)), 1},
        {12, 1, 2, s12, 3},
        {12, 1, 2, even_phat(solved_p(1)), 5},
        {10, 1, 3, odd_phat(solved_p(2)), 2},
        {8, 1, 8, even_phat(solved_p(7)), 1},
        {8, 2, 2, even_phat(solved_p(1)), 3},
        {8, 6, 2, s8, 1},
        {8, 8, 12, even_phat(solved_p(11)), 1},
        {6, 1, 7, odd_phat(solved_p(6)), 1},
    };
    for (const Instance& r : rows) {
        CAPTURE(r.d);
        CAPTURE(r.i);
        CAPTURE(r.m);
        MdrVerdict v = decide(spec_for(cat.at(r.d, r.i), r.m, r.phat));
        CHECK(v.kind == MdrKind::MI);
        CHECK(v.independent());
        CHECK(v.q_case == 1);
        REQUIRE(v.mi.has_value());
        CHECK(v.mi->reason == MiReason::ConjugateAboveTwo);
        CHECK(v.mi->conjugate_index == r.conj);
    }
}

TEST_CASE("a non-integral squared trace forces independence") {
    SalemTrace s = require_salem_trace(kSt4_1);
    MdrVerdict v = decide(spec_for(s, 1, RatFunc(parse_poly("w^2 - 1"), parse_poly("w"))));
    CHECK(v.kind == MdrKind::MI);
    REQUIRE(v.mi.has_value());
    CHECK(v.mi->reason == MiReason::QNotAlgebraicInteger);
    CHECK_FALSE(v.mi->conjugate_index.has_value());
    CHECK(v.q_minpoly == parse_poly("3*w^2 + 4*w - 3"));

    // the tenth-ranked degree-8 instance of the period-7 family: here the
    // squared trace has minimal polynomial with leading coefficient 2, so
    // integrality already fails (a conjugate above two would reject it too)
    MdrVerdict w = decide(spec_for(SalemCatalog::shared().at(8, 10), 7, odd_phat(solved_p(6))));
    CHECK(w.kind == MdrKind::MI);
    REQUIRE(w.mi.has_value());
    CHECK(w.mi->reason == MiReason::QNotAlgebraicInteger);
    CHECK(w.q_minpoly == parse_poly("2*w^4 + w^3 - 12*w^2 - 16*w - 4"));
}

TEST_CASE("absence of a Salem pair leaves the power conjugate independent") {
    SalemTrace s = require_salem_trace(kSt4_1);
    MdrVerdict v = decide(spec_for(s, 1, RatFunc::from_poly(IntPoly::monomial(3))));
    CHECK(v.kind == MdrKind::MI);
    CHECK(v.q_case == 2);
    CHECK(v.q == RatFunc::from_poly(parse_poly("w^3 + 6*w^2 + 12*w + 6")));
    CHECK(v.q_minpoly == parse_poly("w^2 - 76*w - 129"));
    REQUIRE(v.mi.has_value());
    CHECK(v.mi->reason == MiReason::NoSalemPair);
}

TEST_CASE("independence is stable under iterate powers") {
    MultiplierSpec base =
        spec_for(SalemCatalog::shared().at(8, 1), 8, even_phat(solved_p(7)));
    REQUIRE(decide(base).kind == MdrKind::MI);
    for (long k : {2L, 3L}) {
        MultiplierSpec sp = power_spec(base, k);
        CHECK(sp.period == 8 * k);
        CHECK(sp.phat == RatFunc::from_poly(H(static_cast<int>(k))).compose(base.phat));
        CHECK(decide(sp).kind == MdrKind::MI);
    }
}

TEST_CASE("the exhaustive relation search replays every verdict") {
    const SalemCatalog& cat = SalemCatalog::shared();
    SalemTrace leh = require_salem_trace(kLehmerTrace);
    SalemTrace st41 = require_salem_trace(kSt4_1);
    RatFunc h3 = RatFunc::from_poly(H(3));

    OracleReport takada =
        nr_bruteforce_oracle(spec_for(cat.at(8, 17), 1,
                                      RatFunc(parse_poly("w^2 - 1"), parse_poly("w")), 2),
                             12);
    CHECK(takada.consistent);
    CHECK(takada.relation == std::pair<long, long>{-5, -5});
    CHECK_FALSE(takada.resonance.has_value());

    OracleReport sixth = nr_bruteforce_oracle(
        spec_for(cat.at(8, 8), 3, RatFunc(parse_poly("w^4 - 4*w^2 + 1"), parse_poly("w"))), 8);
    CHECK(sixth.consistent);
    CHECK(sixth.relation == std::pair<long, long>{-3, -3});

    OracleReport dep = nr_bruteforce_oracle(spec_for(leh, 5, -h3), 10);
    CHECK(dep.consistent);
    CHECK(dep.relation == std::pair<long, long>{-8, -2});
    CHECK_FALSE(dep.resonance.has_value());

    OracleReport res = nr_bruteforce_oracle(spec_for(leh, 5, h3), 10);
    CHECK(res.consistent);
    CHECK(res.relation == std::pair<long, long>{-4, -1});
    CHECK(res.resonance == std::array<long, 3>{1, 0, 4});

    OracleReport half = nr_bruteforce_oracle(spec_for(st41, 1, RatFunc::var()), 6);
    CHECK(half.consistent);
    CHECK(half.relation == std::pair<long, long>{-1, 0});
    CHECK(half.resonance == std::array<long, 3>{2, 0, 2});

    OracleReport indep =
        nr_bruteforce_oracle(spec_for(cat.at(8, 1), 8, even_phat(solved_p(7))), 50);
    CHECK(indep.consistent);
    CHECK_FALSE(indep.relation.has_value());
    CHECK_FALSE(indep.resonance.has_value());

    OracleReport cube =
        nr_bruteforce_oracle(spec_for(st41, 1, RatFunc::from_poly(IntPoly::monomial(3))), 20);
    CHECK(cube.consistent);
    CHECK_FALSE(cube.relation.has_value());
    CHECK_FALSE(cube.resonance.has_value());

    CHECK_THROWS_AS(nr_bruteforce_oracle(spec_for(st41, 1, RatFunc::var()), 0),
                    const InputError&);
    CHECK_THROWS_AS(nr_bruteforce_oracle(spec_for(st41, 1, RatFunc::var()), 201),
                    const InputError&);
}

TEST_CASE("verdicts serialize with full evidence") {
    SalemTrace leh = require_salem_trace(kLehmerTrace);
    MdrVerdict dep = decide(spec_for(leh, 5, -RatFunc::from_poly(H(3))));
    nlohmann::json j = nlohmann::json::parse(dep.to_json());
    CHECK(j["kind"] == "MD_NR");
    CHECK(j["q_case"] == 2);
    CHECK(j["case_ii"]["certificate"] == nlohmann::json({8, 2}));
    CHECK(j["case_ii"]["phat_sign"] == -1);
    CHECK(j["case_ii"]["sigma_trace"] == kLehmerTrace.str("w"));

    MdrVerdict tak = decide(spec_for(SalemCatalog::shared().at(8, 17), 1,
                                     RatFunc(parse_poly("w^2 - 1"), parse_poly("w")), 2));
    nlohmann::json t = nlohmann::json::parse(tak.to_json());
    CHECK(t["kind"] == "MD_NR");
    CHECK(t["case_i"]["ks"] == nlohmann::json({5}));
    CHECK(tak.str().find("MD_NR") != std::string::npos);
}

TEST_CASE("malformed specifications are rejected") {
    SalemTrace s = require_salem_trace(kSt4_1);
    CHECK_THROWS_AS(decide(MultiplierSpec{s, 0, 1, RatFunc::var()}), const InputError&);
    CHECK_THROWS_AS(decide(MultiplierSpec{s, 2, 1, RatFunc::var()}), const InputError&);
    CHECK_THROWS_AS(decide(MultiplierSpec{s, 1, 0, RatFunc::var()}), const InputError&);
    CHECK_THROWS_AS(decide(MultiplierSpec{s, 1, 2, RatFunc::var()}), const InputError&);
}
