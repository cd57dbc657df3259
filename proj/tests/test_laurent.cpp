#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "gf2collatz/laurent.hpp"
#include "gf2collatz/maps.hpp"
#include "test_support.hpp"

using namespace gf2collatz;
using testsupport::mul_poly;
using testsupport::random_poly;

TEST_CASE("embedding a polynomial") {
    const LaurentWindow r = LaurentWindow::from_poly(Gf2Poly::parse("x^2+1"), -2, "00");
    CHECK(r.top_exp() == Degree(2));
    CHECK(r.floor() == -2);
    const int expected[] = {1, 0, 1, 0, 0}; // exponents 2..-2
    for (long e = 2, i = 0; e >= -2; --e, ++i) CHECK(r.coeff(e) == expected[i]);

    const LaurentWindow t = LaurentWindow::from_poly(Gf2Poly(), -1, "1");
    CHECK(t.top_exp() == Degree(-1));
    CHECK(t.coeff(-1) == 1);

    const LaurentWindow u = LaurentWindow::from_poly(Gf2Poly::one(), -2, "10");
    CHECK(u.top_exp() == Degree(0));
    CHECK(u.coeff(0) == 1);
    CHECK(u.coeff(-1) == 1);
    CHECK(u.coeff(-2) == 0);

    CHECK_THROWS_AS(LaurentWindow::from_poly(Gf2Poly::one(), 1, ""), BadFloor);
    CHECK_THROWS_AS(LaurentWindow::from_poly(Gf2Poly::one(), -2, "0"), BadFloor);
    CHECK_THROWS_AS(r.coeff(-3), Error); // below the exactness floor
}

TEST_CASE("suffix-sum step against the polynomial transform") {
    const LaurentWindow r = LaurentWindow::from_poly(Gf2Poly::parse("x^2+x+1"), -3, "000");
    CHECK(r.p_step(PDirection::Forward).poly_part() ==
          Gf2Poly::parse("x^2+x+1").poly_part_p(PDirection::Forward));
    CHECK(r.p_step(PDirection::Forward).poly_part() == Gf2Poly::parse("x^2+1"));
}

TEST_CASE("inverse undoes forward on the stored range") {
    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const LaurentWindow r =
            LaurentWindow::sample(static_cast<long>(rng.next_below(40)), -32, rng.next());
        CHECK(r.p_step(PDirection::Forward).p_step(PDirection::Inverse) == r);
    }
}

TEST_CASE("forward step period 2^n on polynomial parts") {
    // deg f = 2 < 2^3, so eight forward steps restore the polynomial part.
    LaurentWindow r = LaurentWindow::from_poly(Gf2Poly::parse("x^2+x+1"), -8, "00000000");
    for (int i = 0; i < 8; ++i) r = r.p_step(PDirection::Forward);
    CHECK(r.poly_part() == Gf2Poly::parse("x^2+x+1"));

    SplitMix64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const Gf2Poly f = random_poly(rng, 15); // deg < 16
        std::string tail;
        for (int t = 0; t < 16; ++t) tail += (rng.next_bit() ? '1' : '0');
        LaurentWindow w = LaurentWindow::from_poly(f, -16, tail);
        for (int k = 0; k < 16; ++k) w = w.p_step(PDirection::Forward);
        CHECK(w.poly_part() == f);
    }
}

TEST_CASE("series step") {
    // parity 0: (x+1)/(x+1) = 1, exactly
    const LaurentWindow a = LaurentWindow::from_poly(Gf2Poly::parse("x+1"), -2, "00").s_step();
    CHECK(a.top_exp() == Degree(0));
    for (long e = 0; e >= a.floor(); --e) CHECK(a.coeff(e) == (e == 0 ? 1 : 0));
    CHECK(a.poly_part() == Gf2Poly::one());

    // parity 1: x^2/(x+1) = x + 1 + 1/x + ...
    const LaurentWindow b = LaurentWindow::from_poly(Gf2Poly::x(), -2, "00").s_step();
    CHECK(b.top_exp() == Degree(1));
    for (long e = 1; e >= b.floor(); --e) CHECK(b.coeff(e) == 1);
    CHECK(b.poly_part() == Gf2Poly::parse("x+1"));

    CHECK_THROWS_AS(LaurentWindow::from_poly(Gf2Poly(), -1, "1").s_step(), NegativeDegree);
}

TEST_CASE("polynomial part") {
    SplitMix64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const Gf2Poly f = random_poly(rng, 60);
        std::string tail;
        for (int t = 0; t < 5; ++t) tail += (rng.next_bit() ? '1' : '0');
        CHECK(LaurentWindow::from_poly(f, -5, tail).poly_part() == f);
    }
    CHECK(LaurentWindow(-3).poly_part() == Gf2Poly());
    CHECK_THROWS_AS(LaurentWindow::from_poly(Gf2Poly::one(), 0, "").shifted(2).poly_part(), BadFloor);
}

TEST_CASE("series-level steps project to map steps") {
    SplitMix64 rng(14);
    for (int i = 0; i < 100; ++i) {
        LaurentWindow r =
            LaurentWindow::sample(1 + static_cast<long>(rng.next_below(40)), -40, rng.next());
        Gf2Poly f = r.poly_part();
        for (int k = 0; k < 16; ++k) {
            r = r.s_step();
            f = step(f, MapKind::T);
            CHECK(r.poly_part() == f);
        }
    }
}

TEST_CASE("shift relation") {
    const LaurentWindow rx = LaurentWindow::from_poly(Gf2Poly::x(), -2, "00");
    const LaurentWindow rx3 = LaurentWindow::from_poly(Gf2Poly::parse("x^3"), -2, "00");
    CHECK(shift_le(rx, rx3));
    CHECK_FALSE(shift_le(rx3, rx));
    CHECK(shift_le(rx, rx));
    CHECK(shift_le(LaurentWindow(-1), LaurentWindow(0))); // both zero
    CHECK_FALSE(shift_le(LaurentWindow(-1), rx));
    CHECK_FALSE(shift_le(rx, LaurentWindow(-1)));
    // same degree but different series
    CHECK_FALSE(shift_le(LaurentWindow::from_poly(Gf2Poly::parse("x^3+1"), -1, "0"),
                         LaurentWindow::from_poly(Gf2Poly::parse("x^3+x"), -1, "0")));
}

TEST_CASE("series step preserves the shift relation") {
    SplitMix64 rng(15);
    for (int i = 0; i < 100; ++i) {
        LaurentWindow r =
            LaurentWindow::sample(1 + static_cast<long>(rng.next_below(30)), -40, rng.next());
        LaurentWindow s = r.shifted(2); // x^2 r
        REQUIRE(shift_le(r, s));
        for (int k = 0; k < 8; ++k) {
            r = r.s_step();
            s = s.s_step();
            CHECK(shift_le(r, s));
        }
    }
}

TEST_CASE("degree under iterated series steps follows the parity prefix") {
    SplitMix64 rng(16);
    for (int i = 0; i < 60; ++i) {
        const long n = 1 + static_cast<long>(rng.next_below(30));
        LaurentWindow r = LaurentWindow::sample(n, -48, rng.next());
        long parity_sum = 0;
        for (long k = 1; k <= 32; ++k) {
            parity_sum += r.poly_parity();
            r = r.s_step();
            CHECK(r.top_exp() == Degree(n - k + parity_sum));
        }
    }
}

TEST_CASE("adding (x+1)^k times an odd-weight polynomial flips parity bit k") {
    SplitMix64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const long n = 1 + static_cast<long>(rng.next_below(24));
        const LaurentWindow r = LaurentWindow::sample(n, -40, rng.next());
        Gf2Poly g = random_poly(rng, 6);
        if (g.eval_at(1) == 0) g += Gf2Poly::one(); // force g(1) = 1
        const unsigned k = static_cast<unsigned>(rng.next_below(17));
        const LaurentWindow s = r.with_poly_added(mul_poly(Gf2Poly::x_plus_one_pow(k), g));
        LaurentWindow a = r, b = s;
        for (unsigned j = 0; j < k; ++j) {
            CHECK(a.poly_parity() == b.poly_parity());
            a = a.s_step();
            b = b.s_step();
        }
        CHECK(a.poly_parity() != b.poly_parity());
    }
}

TEST_CASE("seeded windows") {
    CHECK(LaurentWindow::sample(10, -16, 42) == LaurentWindow::sample(10, -16, 42));
    const LaurentWindow one = LaurentWindow::sample(0, 0, 9);
    CHECK(one.top_exp() == Degree(0));
    CHECK(one.poly_part() == Gf2Poly::one());

    // the byte right below the leading coefficient is uniform
    std::map<unsigned, std::uint64_t> histogram;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const LaurentWindow w = LaurentWindow::sample(20, -4, 1000 + static_cast<std::uint64_t>(i));
        unsigned byte = 0;
        for (long b = 0; b < 8; ++b) byte |= static_cast<unsigned>(w.coeff(19 - b)) << b;
        ++histogram[byte];
    }
    for (unsigned v = 0; v < 256; ++v) {
        const double freq = static_cast<double>(histogram[v]) / samples;
        CHECK(std::abs(freq - 1.0 / 256) <= 0.02);
    }
}
