#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effbayes/errors.hpp"
#include "effbayes/interval.hpp"
#include "effbayes/oracle.hpp"
#include "effbayes/rational.hpp"
#include "effbayes/rng.hpp"

using namespace effbayes;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

Rational random_rational(Rng& rng, long den_cap = 1000) {
    std::uint64_t u = rng.next_u64();
    long den = static_cast<long>(u % static_cast<std::uint64_t>(den_cap)) + 1;
    long num = static_cast<long>(rng.next_u64() % 4001) - 2000;
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rational arithmetic is canonical and exact") {
    CHECK(Q("2/4") == Q("1/2"));
    CHECK(Q("-3/-6") == Q("1/2"));
    CHECK(Q("1/3") + Q("2/3") == Rational(1));
    CHECK(Q("1/3") * Q("3/7") == Q("1/7"));
    CHECK((Q("5/8") / Q("5/2")) == Q("1/4"));
    CHECK(Q("1/3").pow(3) == Q("1/27"));
    CHECK(Rational::pow2(-3) == Q("1/8"));
    CHECK(Rational(7, -2) == Q("-7/2"));
    CHECK(Rational(7, -2).denominator() == 2);
    CHECK_THROWS_AS(Q("1/0"), Error);
}

TEST_CASE("decimal rendering is deterministic and round-trips magnitude") {
    CHECK(Rational(1, 2).decimal_string(12) == "0.5");
    CHECK(Rational(1, 3).decimal_string(5) == "0.33333");
    CHECK(Rational(2, 3).decimal_string(5) == "0.66667");
    CHECK(Rational(0).decimal_string() == "0");
    CHECK(Rational(-1, 8).decimal_string(3) == "-0.125");
    CHECK(Rational(1000).decimal_string(3) == "1000");
    CHECK(Q("9999/10").decimal_string(3) == "1000");
    CHECK(Rational(1, 10000).decimal_string(3) == "0.0001");
    CHECK(Rational(1, 1000000).decimal_string(3) == "1e-6");
    // tiny values switch to scientific
    CHECK(Rational(1, mpz_class("100000000000000000000")).decimal_string(3) == "1e-20");
}

TEST_CASE("interval ops: worked examples") {
    // add([1/3,1/3],[2/3,2/3]) = [1,1]
    Enclosure a = Enclosure::exact(Q("1/3"));
    Enclosure b = Enclosure::exact(Q("2/3"));
    Enclosure s = add(a, b);
    CHECK(s.lo == Rational(1));
    CHECK(s.hi == Rational(1));

    // div([1,1],[2,3]) = [1/3,1/2]
    Enclosure d = div(Enclosure::exact(Rational(1)), Enclosure(Rational(2), Rational(3)));
    CHECK(d.lo == Q("1/3"));
    CHECK(d.hi == Q("1/2"));

    CHECK_THROWS_AS(div(a, Enclosure(Rational(-1), Rational(1))), DivisionByIntervalContainingZero);
}

TEST_CASE("sqrt enclosure of 1/2 at width 2^-10 brackets 0.70710678") {
    Enclosure r = sqrt_enclosure(Enclosure::exact(Q("1/2")), 10);
    CHECK(r.width() <= Rational::pow2(-10));
    // independent certificate: endpoints square around 1/2
    CHECK(r.lo * r.lo <= Q("1/2"));
    CHECK(r.hi * r.hi >= Q("1/2"));
    CHECK(r.contains(Q("70710678/100000000")));
}

TEST_CASE("interval soundness on randomized rational inputs") {
    Rng rng(Rng::derive_key(7, "interval-soundness", 0));
    for (int trial = 0; trial < 300; ++trial) {
        Rational x = random_rational(rng), y = random_rational(rng);
        Rational rad1 = abs(random_rational(rng, 50)) / Rational(100);
        Rational rad2 = abs(random_rational(rng, 50)) / Rational(100);
        Enclosure ex(x - rad1, x + rad1);
        Enclosure ey(y - rad2, y + rad2);
        CHECK(add(ex, ey).contains(x + y));
        CHECK(sub(ex, ey).contains(x - y));
        CHECK(mul(ex, ey).contains(x * y));
        if (ey.lo.sign() > 0 || ey.hi.sign() < 0) CHECK(div(ex, ey).contains(x / y));
        CHECK(emin(ex, ey).contains(min(x, y)));
        CHECK(emax(ex, ey).contains(max(x, y)));
        CHECK(eabs(ex).contains(abs(x)));
    }
}

TEST_CASE("nth root enclosure: cube root of 4") {
    Enclosure r = nth_root_enclosure(Rational(4), 3, 30);
    CHECK(r.width() <= Rational::pow2(-30));
    CHECK(r.lo.pow(3) <= Rational(4));
    CHECK(r.hi.pow(3) >= Rational(4));
}

TEST_CASE("oracle refinement is nested and widths halve") {
    RealOracle pi_ish = RealOracle::from_fn([](unsigned k) {
        // crude enclosure of pi via a fixed rational inside every level
        Rational c = Q("355/113");
        Rational r = Rational::pow2(-static_cast<long>(k) - 1);
        return Enclosure(c - r, c + r);
    });
    Enclosure e4 = pi_ish.evaluate(4);
    Enclosure e8 = pi_ish.evaluate(8);
    Enclosure e16 = pi_ish.evaluate(16);
    CHECK(e4.contains(e8));
    CHECK(e8.contains(e16));
    CHECK(e8.width() <= Rational::pow2(-8));
    CHECK(e16.width() <= Rational::pow2(-16));
    // re-evaluating at coarse precision after refining stays tight
    CHECK(pi_ish.evaluate(4).contains(e16));
    CHECK(pi_ish.evaluate(4).width() <= e16.width());
}

TEST_CASE("oracle arithmetic meets requested widths") {
    RealOracle a = RealOracle::exact(Q("1/3"));
    RealOracle b = RealOracle::sqrt(RealOracle::exact(Q("1/2")));
    RealOracle c = (a + b) * b - a / RealOracle::exact(Q("2/5"));
    Enclosure e = c.evaluate(24);
    CHECK(e.width() <= Rational::pow2(-24));
    // value is (1/3 + s)*s - 5/6 with s = sqrt(1/2): s^2 = 1/2, so value = 1/2 + s/3 - 5/6 = s/3 - 1/3
    Enclosure s = RealOracle::sqrt(RealOracle::exact(Q("1/2"))).evaluate(30);
    Enclosure expect = sub(div(s, Enclosure::exact(Rational(3))), Enclosure::exact(Q("1/3")));
    CHECK(e.lo <= expect.hi);
    CHECK(expect.lo <= e.hi);
}

TEST_CASE("compare_with_gap: worked examples") {
    CHECK(compare_with_gap(RealOracle::exact(Q("1/3")), RealOracle::exact(Q("1/2")), Q("1/100")) == GapOrder::Less);

    // identical oracles stay within any gap
    RealOracle p = RealOracle::from_fn([](unsigned k) {
        Rational c = Q("355/113");
        Rational r = Rational::pow2(-static_cast<long>(k) - 1);
        return Enclosure(c - r, c + r);
    });
    CHECK(compare_with_gap(p, p, Q("1/8")) == GapOrder::WithinGap);

    RealOracle sqrt2 = RealOracle::sqrt(RealOracle::exact(Rational(2)));
    CHECK(compare_with_gap(sqrt2, RealOracle::exact(Q("3/2")), Q("1/64")) == GapOrder::Less);
    // independent certificate that the answer is right: 2 < 9/4
    CHECK(Rational(2) < Q("9/4"));
}

TEST_CASE("compare_with_gap is never strictly wrong on rational oracles") {
    Rng rng(Rng::derive_key(11, "compare-prop", 0));
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = random_rational(rng), y = random_rational(rng);
        Rational gap = Rational(1, 1 + static_cast<long>(rng.next_u64() % 64));
        GapOrder g = compare_with_gap(RealOracle::exact(x), RealOracle::exact(y), gap);
        if (g == GapOrder::Less) CHECK(x < y);
        if (g == GapOrder::Greater) CHECK(x > y);
        if (g == GapOrder::WithinGap) CHECK(abs(x - y) < gap);
    }
}

TEST_CASE("avoid_atoms: worked examples and property") {
    CHECK(avoid_atoms(Q("79/100"), Rational(1), {Q("4/5")}) != Q("4/5"));
    CHECK(avoid_atoms(Rational(0), Rational(1), {}) == Q("1/2"));
    CHECK(avoid_atoms(Q("1/4"), Q("1/2"), {Q("1/3"), Q("3/8")}) == Q("5/16"));

    Rng rng(Rng::derive_key(13, "avoid-prop", 0));
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = random_rational(rng);
        Rational b = a + abs(random_rational(rng)) + Rational(1, 977);
        std::vector<Rational> atoms;
        for (int i = 0; i < 5; ++i) atoms.push_back(a + (b - a) * Rational(1 + static_cast<long>(rng.next_u64() % 7), 8));
        Rational r = avoid_atoms(a, b, atoms);
        CHECK(a < r);
        CHECK(r < b);
        for (const auto& atom : atoms) CHECK(r != atom);
    }
}

TEST_CASE("rng determinism and substreams") {
    Rng r1(Rng::derive_key(42, "exp", 3));
    Rng r2(Rng::derive_key(42, "exp", 3));
    Rng r3(Rng::derive_key(42, "exp", 4));
    bool same = true, diff = false;
    for (int i = 0; i < 64; ++i) {
        std::uint64_t a = r1.next_u64(), b = r2.next_u64(), c = r3.next_u64();
        same = same && (a == b);
        diff = diff || (a != c);
    }
    CHECK(same);
    CHECK(diff);
    Rng r4(1);
    Rational u = r4.next_unit();
    CHECK(Rational(0) <= u);
    CHECK(u < Rational(1));
}
