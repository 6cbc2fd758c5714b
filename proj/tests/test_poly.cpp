#include <doctest.h>

#include <random>

#include "salemk3/poly.hpp"
#include "salemk3/ratfunc.hpp"

using namespace salemk3;

TEST_CASE("parse and print round trip") {
    IntPoly p = parse_poly("w^4 - 4*w^2 - w + 1");
    CHECK(p == IntPoly({1, -1, -4, 0, 1}));
    CHECK(p.str("w") == "w^4 - 4*w^2 - w + 1");
    CHECK(parse_poly(p.str("w")) == p);
    CHECK(parse_poly("z^4-z^3-z^2-z+1") == IntPoly({1, -1, -1, -1, 1}));
    CHECK(parse_poly("-3") == IntPoly::constant(-3));
    CHECK(parse_poly("2w") == IntPoly({0, 2}));
    CHECK_THROWS_AS(parse_poly(""), InputError);
    CHECK_THROWS_AS(parse_poly("w + z"), InputError);
    CHECK_THROWS_AS(parse_poly("w^"), InputError);
}

TEST_CASE("basic arithmetic and division") {
    IntPoly a = parse_poly("x^3 - 2*x + 5");
    IntPoly b = parse_poly("x - 1");
    auto [q, r] = divrem_monic(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == 4);  // a(1)

    CHECK(try_divide_exact(a * b, b).value() == a);
    CHECK(!try_divide_exact(a, b).has_value());
    IntPoly c = parse_poly("6*x^2 - 6");
    CHECK(c.content() == 6);
    CHECK(c.normalized() == parse_poly("x^2 - 1"));
}

TEST_CASE("gcd and resultant") {
    IntPoly a = parse_poly("z - 1"), b = parse_poly("z + 1");
    CHECK(resultant(a, b) == Rat(-2));
    CHECK(gcd(a * b, b * parse_poly("z^2 + 3")) == b);

    // res(f, g) = lc(f)^deg g * prod g(roots of f): check on split cases
    IntPoly f = parse_poly("z^2 - 3*z + 2");  // roots 1, 2
    IntPoly g = parse_poly("z^2 + 1");
    CHECK(resultant(f, g) == Rat(g.eval(Rat(1)) * g.eval(Rat(2))));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto rnd = [&](int deg) {
            std::vector<Int> c(deg + 1);
            for (auto& v : c) v = Int(static_cast<long>(rng() % 11) - 5);
            c[deg] = Int(static_cast<long>(rng() % 4) + 1);
            return IntPoly(std::move(c));
        };
        IntPoly u = rnd(3), v = rnd(2), w = rnd(2);
        // multiplicativity: res(u, v*w) = res(u,v)*res(u,w)
        CHECK(resultant(u, v * w) == resultant(u, v) * resultant(u, w));
        // common factor forces zero
        CHECK(resultant(u * v, v * w) == 0);
    }
}

TEST_CASE("trace polynomial of a palindromic polynomial") {
    CHECK(trace_poly(parse_poly("z^4 - z^3 - z^2 - z + 1")) == parse_poly("w^2 - w - 3"));
    CHECK_THROWS_AS(trace_poly(parse_poly("z^3 - 1")), InputError);
    CHECK_THROWS_AS(trace_poly(parse_poly("z^2 - 2*z + 3")), InputError);
    // round trip through the lift
    IntPoly u = parse_poly("z^8 + z^7 - z^6 - 3*z^5 - 3*z^4 - 3*z^3 - z^2 + z + 1");
    CHECK(u.is_palindromic());
    CHECK(trace_lift(trace_poly(u)) == u);
}

TEST_CASE("H and K families") {
    CHECK(H(0) == IntPoly::constant(2));
    CHECK(H(1) == IntPoly::var());
    CHECK(H(2) == parse_poly("w^2 - 2"));
    CHECK(K(3) == parse_poly("w^3 - 2*w"));
    CHECK(K(-1).is_zero());
    CHECK(K(0) == IntPoly::one());

    IntPoly z2m1 = parse_poly("z^2 - 1");
    for (int n = 1; n <= 10; ++n) {
        // z^n H_n(z+1/z) = z^2n + 1
        CHECK(trace_lift(H(n)) == IntPoly::monomial(2 * n) + IntPoly::one());
        // (z^2-1) z^n K_n(z+1/z) = z^(2n+2) - 1
        CHECK(z2m1 * trace_lift(K(n)) == IntPoly::monomial(2 * n + 2) - IntPoly::one());
    }

    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) CHECK(H(m * n) == H(m).compose(H(n)));

    for (int n = 1; n <= 8; ++n) {
        const IntPoly& h2 = H(2);
        CHECK(H(2 * n) == H(n).compose(h2));
        CHECK(H(2 * n + 1) == IntPoly::var() * (K(n).compose(h2) - K(n - 1).compose(h2)));
        CHECK(K(2 * n) == K(n).compose(h2) + K(n - 1).compose(h2));
        CHECK(K(2 * n + 1) == IntPoly::var() * K(n).compose(h2));
        CHECK((H(2) - IntPoly::constant(2)) * K(n) * K(n) ==
              H(2 * (n + 1)) - IntPoly::constant(2));
    }
}

TEST_CASE("totient, moebius, totient_le") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);

    // the 43 integers with totient <= 22
    std::vector<unsigned long> expect = {1,  2,  3,  4,  6,  5,  8,  10, 12, 7,  9,  14, 18, 15, 16,
                                         20, 24, 30, 11, 22, 13, 21, 26, 28, 36, 42, 17, 32, 34, 40,
                                         48, 60, 19, 27, 38, 54, 25, 33, 44, 50, 66, 23, 46};
    std::sort(expect.begin(), expect.end());
    CHECK(totient_le(22) == expect);
}

TEST_CASE("cyclotomic polynomials and traces") {
    CHECK(cyclotomic(1) == parse_poly("z - 1"));
    CHECK(cyclotomic(2) == parse_poly("z + 1"));
    CHECK(cyclotomic(12) == parse_poly("z^4 - z^2 + 1"));
    CHECK(cyclotomic(105).coeff(7) == -2);  // first coefficient outside {0,+-1}

    CHECK(cyclotomic_trace(5) == parse_poly("w^2 + w - 1"));
    CHECK(cyclotomic_trace(12) == parse_poly("w^2 - 3"));
    CHECK_THROWS_AS(cyclotomic_trace(1), InputError);
    CHECK_THROWS_AS(cyclotomic_trace(2), InputError);
    CHECK(cyclotomic_trace(1, CycloTraceConv::Mdr) == parse_poly("w - 2"));
    CHECK(cyclotomic_trace(2, CycloTraceConv::Mdr) == parse_poly("w + 2"));

    // C_n(z+1/z)-trace has the right roots: H_k evaluated identity
    for (unsigned long n : {3ul, 4ul, 7ul, 9ul, 30ul})
        CHECK(trace_lift(cyclotomic_trace(n)) == cyclotomic(n));
}

TEST_CASE("root counting and isolation") {
    IntPoly p = parse_poly("w^4 - 4*w^2 - w + 1");
    CHECK(count_real_roots(p) == 4);
    CHECK(count_real_roots(p, Bound::at(2), Bound::pos_inf()) == 1);
    CHECK(count_real_roots(p, Bound::at(-2), Bound::at(2)) == 3);
    CHECK(count_real_roots(p, Bound::neg_inf(), Bound::at(-2)) == 0);

    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 4);
    for (size_t i = 0; i + 1 < iso.size(); ++i) CHECK(iso[i].second <= iso[i + 1].first);
    for (auto& [lo, hi] : iso) {
        CHECK(p.sign_at(lo) != 0);
        CHECK(p.sign_at(hi) != 0);
        CHECK(p.sign_at(lo) * p.sign_at(hi) < 0);
    }

    // roots exactly at endpoints are excluded from open-interval counts
    IntPoly q = parse_poly("w^2 - 1");
    CHECK(count_real_roots(q, Bound::at(-1), Bound::at(1)) == 0);
    CHECK(count_real_roots(q, Bound::at(-2), Bound::at(1)) == 1);

    // repeated roots counted once
    CHECK(count_real_roots(q * q) == 2);
}

TEST_CASE("factorization") {
    // squarefree + multiplicity bookkeeping
    IntPoly p = parse_poly("z - 1").pow(2) * parse_poly("z + 1") * parse_poly("z^2 - z - 1");
    Factorization f = factor(p * Int(-6));
    CHECK(f.unit == Rat(-6));
    CHECK(f.product() == p * Int(-6));
    REQUIRE(f.factors.size() == 3);

    // cyclotomic sieve catches high-degree cyclotomics instantly
    Factorization c = factor(cyclotomic(84) * cyclotomic(5));
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[0].first == cyclotomic(5));
    CHECK(c.factors[1].first == cyclotomic(84));

    // Lehmer's polynomial is irreducible (degree 10, genuine Zassenhaus input)
    IntPoly lehmer = parse_poly("z^10 + z^9 - z^7 - z^6 - z^5 - z^4 - z^3 + z + 1");
    CHECK(is_irreducible(lehmer));
    CHECK(is_irreducible(parse_poly("w^4 - 4*w^2 - w + 1")));
    CHECK(!is_irreducible(parse_poly("w^4 - 5*w^2 + 4")));

    // product of two close trace polynomials splits correctly
    Factorization g = factor(parse_poly("w^2 - w - 3") * parse_poly("w^2 + w - 1"));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == parse_poly("w^2 - w - 3"));
    CHECK(g.factors[1].first == parse_poly("w^2 + w - 1"));

    // non-monic content and sign
    Factorization h = factor(parse_poly("4*x^2 - 1") * Int(3));
    CHECK(h.unit == Rat(3));
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first == parse_poly("2*x - 1"));
    CHECK(h.factors[1].first == parse_poly("2*x + 1"));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto rnd_irr = [&](int deg) {
            while (true) {
                std::vector<Int> c(deg + 1);
                for (auto& v : c) v = Int(static_cast<long>(rng() % 7) - 3);
                c[deg] = 1;
                IntPoly cand(std::move(c));
                if (is_irreducible(cand)) return cand;
            }
        };
        IntPoly a = rnd_irr(3), b = rnd_irr(4);
        if (a == b) continue;
        Factorization fr = factor(a * a * b);
        CHECK(fr.product() == a * a * b);
        REQUIRE(fr.factors.size() == 2);
    }
}

TEST_CASE("rational functions") {
    RatFunc f(parse_poly("w^2 - 4"), parse_poly("2*w + 4"));
    // canonical form reduces (w-2)(w+2) / 2(w+2) to (1/2)(w-2)
    CHECK(f.content() == Rat(1, 2));
    CHECK(f.num() == parse_poly("w - 2"));
    CHECK(f.den() == IntPoly::one());

    RatFunc g = RatFunc::from_poly(parse_poly("w")) / RatFunc::from_poly(parse_poly("w + 1"));
    CHECK((g + g) == RatFunc(parse_poly("2*w"), parse_poly("w + 1")));
    CHECK((g - g).is_zero());
    CHECK(g * g.inverse() == RatFunc(Rat(1)));
    CHECK(g.eval(Rat(1)).value() == Rat(1, 2));
    CHECK(!g.eval(Rat(-1)).has_value());

    // composition: g(w^2-2)
    RatFunc h = g.compose(RatFunc::from_poly(H(2)));
    CHECK(h == RatFunc(parse_poly("w^2 - 2"), parse_poly("w^2 - 1")));

    RatFunc even(parse_poly("w^2 + 1"), parse_poly("w^4 + 3"));
    CHECK(even.is_even());
    RatFunc odd(parse_poly("w^3 - 2*w"), parse_poly("w^2 + 1"));
    CHECK(odd.is_odd());
    CHECK(!odd.is_even());
}
