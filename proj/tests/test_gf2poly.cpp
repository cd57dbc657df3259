#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf2collatz/gf2poly.hpp"
#include "gf2collatz/rng.hpp"
#include "test_support.hpp"

using namespace gf2collatz;
using testsupport::random_poly;

TEST_CASE("degree") {
    CHECK(Gf2Poly().degree() == Degree::neg_inf());
    CHECK(Gf2Poly::one().degree() == Degree(0));
    CHECK(Gf2Poly::parse("x^3+1").degree() == Degree(3));
    CHECK(Gf2Poly().degree().is_neg_inf());
    CHECK_THROWS_AS(Gf2Poly().degree().value(), Error);
    CHECK(Degree::neg_inf() < Degree(0));
}

TEST_CASE("addition is XOR and involutive") {
    const Gf2Poly a = Gf2Poly::parse("x^2+1");
    const Gf2Poly b = Gf2Poly::parse("x^2+x");
    CHECK(a + b == Gf2Poly::parse("x+1"));
    CHECK(a + a == Gf2Poly());
    CHECK(Gf2Poly::parse("x+1") + Gf2Poly::one() == Gf2Poly::x());
}

TEST_CASE("addition degree bound") {
    SplitMix64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const Gf2Poly f = random_poly(rng, 100);
        const Gf2Poly g = random_poly(rng, 100);
        const Degree df = f.degree(), dg = g.degree(), ds = (f + g).degree();
        CHECK(ds <= (df < dg ? dg : df));
        if (df != dg) CHECK(ds == (df < dg ? dg : df));
    }
}

TEST_CASE("evaluation at 0 and 1") {
    CHECK(Gf2Poly::parse("x^2+x+1").eval_at(1) == 1);
    CHECK(Gf2Poly::parse("x+1").eval_at(1) == 0);
    CHECK(Gf2Poly::parse("x^2+1").eval_at(0) == 1);
    CHECK(Gf2Poly().eval_at(0) == 0);
    CHECK(Gf2Poly().eval_at(1) == 0);
}

TEST_CASE("basic products") {
    CHECK(Gf2Poly::parse("x+1").mul_basic(BasicFactor::XPlusOne) == Gf2Poly::parse("x^2+1"));
    CHECK(Gf2Poly::parse("x^2+1").mul_basic(BasicFactor::X) == Gf2Poly::parse("x^3+x"));
    CHECK(Gf2Poly::one().mul_basic(BasicFactor::XPlusOne) == Gf2Poly::parse("x+1"));
}

TEST_CASE("exact division") {
    CHECK(Gf2Poly::parse("x^2+1").div_exact(BasicFactor::XPlusOne) == Gf2Poly::parse("x+1"));
    // oracle: multiply the expected quotient back
    const Gf2Poly q = Gf2Poly::parse("x^3+x^2+x+1").div_exact(BasicFactor::XPlusOne);
    CHECK(q == Gf2Poly::parse("x^2+1"));
    CHECK(q.mul_basic(BasicFactor::XPlusOne) == Gf2Poly::parse("x^3+x^2+x+1"));
    CHECK(Gf2Poly::parse("x^3+x").div_exact(BasicFactor::X) == Gf2Poly::parse("x^2+1"));

    CHECK_THROWS_AS(Gf2Poly::parse("x+1").div_exact(BasicFactor::X), NotDivisible);
    CHECK_THROWS_AS(Gf2Poly::x().div_exact(BasicFactor::XPlusOne), NotDivisible);
    CHECK_THROWS_AS(Gf2Poly().div_exact(BasicFactor::X), ZeroInput);
    CHECK_THROWS_AS(Gf2Poly().div_exact(BasicFactor::XPlusOne), ZeroInput);
}

TEST_CASE("div after mul is the identity") {
    SplitMix64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const Gf2Poly f = random_poly(rng, 200);
        for (BasicFactor d : {BasicFactor::X, BasicFactor::XPlusOne}) {
            CHECK(f.mul_basic(d).div_exact(d) == f);
        }
    }
}

TEST_CASE("suffix-sum transform") {
    // oracle: direct per-coefficient suffix parity scan
    const auto naive_forward = [](const Gf2Poly& f) {
        Gf2Poly out;
        if (f.is_zero()) return out;
        for (long k = 0; k <= f.degree_value(); ++k) {
            int parity = 0;
            for (long j = k; j <= f.degree_value(); ++j) parity ^= f.coeff(j);
            if (parity) out += Gf2Poly::monomial(k);
        }
        return out;
    };

    CHECK(Gf2Poly::parse("x^2+x+1").poly_part_p(PDirection::Forward) == Gf2Poly::parse("x^2+1"));
    CHECK(Gf2Poly::one().poly_part_p(PDirection::Forward) == Gf2Poly::one());

    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Gf2Poly f = random_poly(rng, 300);
        const Gf2Poly fwd = f.poly_part_p(PDirection::Forward);
        CHECK(fwd == naive_forward(f));
        CHECK(fwd.poly_part_p(PDirection::Inverse) == f);
        CHECK(fwd.degree() == f.degree());
    }
}

TEST_CASE("suffix-sum transform is linear") {
    SplitMix64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Gf2Poly f = random_poly(rng, 150);
        const Gf2Poly g = random_poly(rng, 150);
        CHECK((f + g).poly_part_p(PDirection::Forward) ==
              f.poly_part_p(PDirection::Forward) + g.poly_part_p(PDirection::Forward));
    }
}

TEST_CASE("substitution x -> x+1") {
    CHECK(Gf2Poly::x().subst_x_plus_one() == Gf2Poly::parse("x+1"));
    CHECK(Gf2Poly::parse("x^2").subst_x_plus_one() == Gf2Poly::parse("x^2+1"));
    CHECK(Gf2Poly::parse("x^3+x").subst_x_plus_one().subst_x_plus_one() == Gf2Poly::parse("x^3+x"));

    SplitMix64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Gf2Poly f = random_poly(rng, 100);
        const Gf2Poly g = random_poly(rng, 100);
        CHECK(f.subst_x_plus_one().subst_x_plus_one() == f);
        CHECK((f + g).subst_x_plus_one() == f.subst_x_plus_one() + g.subst_x_plus_one());
        CHECK(f.subst_x_plus_one().degree() == f.degree());
    }
}

TEST_CASE("powers of x+1") {
    CHECK(Gf2Poly::x_plus_one_pow(0) == Gf2Poly::one());
    CHECK(Gf2Poly::x_plus_one_pow(1) == Gf2Poly::parse("x+1"));
    CHECK(Gf2Poly::x_plus_one_pow(2) == Gf2Poly::parse("x^2+1"));
    Gf2Poly by_product = Gf2Poly::one();
    for (unsigned k = 1; k <= 20; ++k) {
        by_product = by_product.mul_basic(BasicFactor::XPlusOne);
        CHECK(Gf2Poly::x_plus_one_pow(k) == by_product);
    }
}

TEST_CASE("text round trips") {
    CHECK(Gf2Poly::parse("0x7") == Gf2Poly::parse("x^2+x+1"));
    CHECK(Gf2Poly::parse("0x7").to_hex() == "0x7");
    CHECK(Gf2Poly().to_hex() == "0x0");
    CHECK(Gf2Poly().to_pretty() == "0");
    CHECK(Gf2Poly::parse("0x0") == Gf2Poly());
    CHECK(Gf2Poly::parse("0") == Gf2Poly());

    SplitMix64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const Gf2Poly f = random_poly(rng, 200);
        CHECK(Gf2Poly::parse_hex(f.to_hex()) == f);
        CHECK(Gf2Poly::parse_pretty(f.to_pretty()) == f);
        CHECK(Gf2Poly::parse(f.to_hex()) == f);
        CHECK(Gf2Poly::parse(f.to_pretty()) == f);
    }

    CHECK_THROWS_AS(Gf2Poly::parse("0xZZ"), Error);
    CHECK_THROWS_AS(Gf2Poly::parse("y+1"), Error);
    CHECK_THROWS_AS(Gf2Poly::parse(""), Error);
    CHECK_THROWS_AS(Gf2Poly::parse("x^"), Error);
}
