#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "salemk3/salem.hpp"

using namespace salemk3;

namespace {
const IntPoly kSt4_1 = parse_poly("w^2 - w - 3");                // trace of z^4-z^3-z^2-z+1
const IntPoly kSt8_1 = parse_poly("w^4 - 4*w^2 - w + 1");
const IntPoly kSt8_17 = parse_poly("w^4 + w^3 - 5*w^2 - 7*w - 1");
const IntPoly kLehmerTrace = parse_poly("w^5 + w^4 - 5*w^3 - 5*w^2 + 4*w + 3");
}  // namespace

TEST_CASE("recognition accepts the classical traces") {
    for (const IntPoly* u : {&kSt4_1, &kSt8_1, &kSt8_17, &kLehmerTrace}) {
        auto r = recognize_salem_trace(*u);
        REQUIRE(r.ok());
        const SalemTrace& s = r.value();
        CHECK(s.degree() == 2 * u->degree());
        CHECK(s.rho().compare(Rat(2)) == 1);
        for (int j = 1; j < s.trace_degree(); ++j) {
            CHECK(s.root(j).compare(Rat(2)) == -1);
            CHECK(s.root(j).compare(Rat(-2)) == 1);
            CHECK(s.root(j - 1).compare(s.root(j)) == 1);
        }
        CHECK(s.salem_root().compare(Rat(1)) == 1);
        // lambda + 1/lambda = rho, checked through the lift
        CHECK(s.lift().degree() == s.degree());
        CHECK(trace_poly(s.lift()) == *u);
    }
}

TEST_CASE("recognition rejects non-Salem inputs") {
    CHECK(recognize_salem_trace(parse_poly("w + 1")).rejection() == "no root > 2");
    CHECK(recognize_salem_trace(parse_poly("w - 3")).rejection() ==
          "trace degree 1: no conjugate on the unit circle");
    CHECK(recognize_salem_trace(cyclotomic_trace(7)).rejection() == "no root > 2");
    CHECK(recognize_salem_trace(cyclotomic_trace(30)).rejection() == "no root > 2");
    // reducible, although it has a legal root pattern
    IntPoly red = kSt4_1 * parse_poly("w + 1");
    CHECK(recognize_salem_trace(red).rejection() == "reducible");
    // Pisot trace: the conjugate of rho lies below -2
    CHECK(recognize_salem_trace(parse_poly("w^2 - 5")).rejection() ==
          "conjugate outside (-2, 2)");
    CHECK(recognize_salem_trace(parse_poly("2*w^2 - w - 7")).rejection() == "not monic");
    CHECK_THROWS_AS(require_salem_trace(parse_poly("w + 1")), const InputError&);
}

TEST_CASE("lambda approximations match the published values") {
    CHECK(require_salem_trace(kSt4_1).salem_root().approx() == doctest::Approx(1.7220838).epsilon(1e-6));
    CHECK(require_salem_trace(kSt8_1).salem_root().approx() == doctest::Approx(1.2806381).epsilon(1e-6));
    CHECK(require_salem_trace(kLehmerTrace).salem_root().approx() ==
          doctest::Approx(1.17628081).epsilon(1e-6));
}

TEST_CASE("power traces are exact") {
    SalemTrace s = require_salem_trace(kSt4_1);
    // rho^2 = rho + 3, so H_2(rho) = rho + 1 and the trace of lambda^2
    // satisfies (w-1)^2 - (w-1) - 3 = w^2 - 3w - 1
    SalemTrace s2 = power_trace(s, 2);
    CHECK(s2.trace_poly() == parse_poly("w^2 - 3*w - 1"));
    CHECK(power_trace(s, 1) == s);
    CHECK_THROWS_AS(power_trace(s, 0), const InputError&);
}

TEST_CASE("primitive decomposition inverts power traces") {
    SalemTrace s = require_salem_trace(kSt4_1);
    auto p1 = primitive(s);
    CHECK(p1.rho0 == s);
    CHECK(p1.k0 == 1);

    auto p2 = primitive(power_trace(s, 2));
    CHECK(p2.rho0 == s);
    CHECK(p2.k0 == 2);

    auto p6 = primitive(power_trace(power_trace(s, 2), 3));
    CHECK(p6.rho0 == s);
    CHECK(p6.k0 == 6);

    SalemTrace m = require_salem_trace(kSt8_1);
    auto pm = primitive(m);
    CHECK(pm.rho0 == m);
    CHECK(pm.k0 == 1);
    CHECK(salem_power_bound(m) >= 1);
}

TEST_CASE("two-equation search bounds") {
    SalemTrace s = require_salem_trace(kSt4_1);  // rho ~ 2.3028
    auto b = mdr2_bounds(s, AlgebraicReal(Rat(21, 10)));
    CHECK(b.j0 == 1);
    CHECK(b.k0 == 1);

    SalemTrace m = require_salem_trace(kSt8_1);  // rho ~ 2.0615
    auto bm = mdr2_bounds(m, AlgebraicReal(Rat(5, 2)));
    CHECK(bm.j0 == 3);  // H_1, H_2 < 5/2 <= H_3 at rho
    CHECK(bm.k0 == 1);

    auto bp = mdr2_bounds(power_trace(s, 2), AlgebraicReal(Rat(5, 2)));
    CHECK(bp.j0 == 2);  // bounds are taken at the primitive trace
    CHECK(bp.k0 == 2);

    CHECK_THROWS_AS(mdr2_bounds(s, AlgebraicReal(Rat(2))), const InputError&);
}

TEST_CASE("coefficient-box enumeration") {
    auto small = enumerate_salem_candidates(4, 3);
    REQUIRE(!small.empty());
    CHECK(small.front().trace_poly() == kSt4_1);
    for (size_t i = 0; i + 1 < small.size(); ++i)
        CHECK(small[i].salem_root().compare(small[i + 1].salem_root()) == -1);
    for (const SalemTrace& t : small)
        for (int i = 0; i <= t.trace_poly().degree(); ++i)
            CHECK(abs(t.trace_poly().coeff(i)) <= 3);

    auto deg8 = enumerate_salem_candidates(8, 8);
    CHECK(deg8.size() == 1859);
    CHECK(deg8.front().trace_poly() == kSt8_1);

    auto deg10 = enumerate_salem_candidates(10, 5);
    CHECK(deg10.size() == 66);
    CHECK(deg10.front().trace_poly() == kLehmerTrace);

    CHECK(enumerate_salem_candidates(4, 0).empty());
    CHECK_THROWS_AS(enumerate_salem_candidates(7, 3), const InputError&);
    CHECK_THROWS_AS(enumerate_salem_candidates(2, 3), const InputError&);
    CHECK_THROWS_AS(enumerate_salem_candidates(8, -1), const InputError&);
}

TEST_CASE("exhaustive enumeration below a trace bound") {
    auto deg2 = salem_traces_up_to(2, Rat(5, 2));
    REQUIRE(deg2.size() == 2);
    CHECK(deg2[0].trace_poly() == kSt4_1);
    CHECK(deg2[1].trace_poly() == parse_poly("w^2 - 2*w - 1"));

    CHECK(salem_traces_up_to(4, Rat(16, 5)).size() == 154);
    CHECK(salem_traces_up_to(2, Rat(2)).empty());
    CHECK_THROWS_AS(salem_traces_up_to(0, Rat(3)), const InputError&);

    // ascending in rho, and every box-scan hit with matching size appears
    auto by_rho = salem_traces_up_to(2, Rat(4));
    for (size_t i = 0; i + 1 < by_rho.size(); ++i)
        CHECK(by_rho[i].rho().compare(by_rho[i + 1].rho()) == -1);
    std::vector<IntPoly> boxed;
    for (const SalemTrace& t : by_rho) {
        bool fits = true;
        for (int i = 0; i <= t.trace_poly().degree(); ++i)
            if (abs(t.trace_poly().coeff(i)) > 3) fits = false;
        if (fits) boxed.push_back(t.trace_poly());
    }
    auto box = enumerate_salem_candidates(4, 3);  // Cauchy: roots within (-4, 4)
    REQUIRE(box.size() == boxed.size());
    for (size_t i = 0; i < box.size(); ++i) CHECK(box[i].trace_poly() == boxed[i]);
}

TEST_CASE("catalog round trip") {
    const char* path = "test_catalog_tmp.json";
    {
        std::ofstream out(path);
        out << R"({
            "8:1": {"trace_coeffs": [1, -1, -4, 0, 1], "provenance": "explicit"},
            "4:1": {"trace_coeffs": [-3, -1, 1], "provenance": "enumerated", "bound": "21/5"}
        })";
    }
    SalemCatalog cat = SalemCatalog::load(path);
    std::remove(path);
    CHECK(cat.contains(8, 1));
    CHECK(cat.contains(4, 1));
    CHECK_FALSE(cat.contains(8, 2));
    CHECK(cat.at(8, 1).trace_poly() == kSt8_1);
    CHECK(cat.entry(4, 1).provenance == "enumerated");
    REQUIRE(cat.entry(4, 1).bound.has_value());
    CHECK(*cat.entry(4, 1).bound == Rat(21, 5));
    CHECK_FALSE(cat.entry(8, 1).bound.has_value());
    CHECK_THROWS_AS(cat.entry(8, 2), const InputError&);
    CHECK_THROWS_AS(SalemCatalog::load("does_not_exist.json"), const InputError&);
}
