#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effbayes/errors.hpp"
#include "effbayes/estimators.hpp"

using namespace effbayes;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }
ParameterPoint unit(const char* q) { return UnitPoint{Q(q)}; }

// Exhaustive oracle: enumerate all 2^n Cantor strings per atom.
Rational deviation_by_enumeration(const Rational& theta, unsigned n, const Rational& eps) {
    Rational out(0);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        Rational prob(1);
        long ones = 0;
        for (unsigned j = 0; j < n; ++j) {
            bool one = (bits >> j) & 1;
            prob *= one ? theta : Rational(1) - theta;
            ones += one;
        }
        if (abs(Rational(ones, n) - theta) > eps) out += prob;
    }
    return out;
}

}  // namespace

TEST_CASE("lrf worked examples and range") {
    CHECK(lrf({0, 1, 0, 1}, 4) == Q("1/2"));
    CHECK(lrf(SampleString(7, 1), 7) == Rational(1));
    CHECK(lrf_coordinate({0, 2, 0, 5}, 0, 4) == Q("1/2"));
    CHECK_THROWS_AS(lrf({1}, 0), Error);
    CHECK_THROWS_AS(lrf({1}, 2), Error);

    // occurring-symbol frequencies sum to 1
    SampleString x{3, 1, 4, 1, 5, 9, 2, 6};
    Rational total(0);
    for (Symbol j : {1u, 2u, 3u, 4u, 5u, 6u, 9u}) total += lrf_coordinate(x, j, x.size());
    CHECK(total == Rational(1));
}

TEST_CASE("moments worked examples") {
    MomentPair leb = moments(Prior::lebesgue());
    CHECK(leb.alpha == Q("1/2"));
    CHECK(leb.beta == Q("1/3"));

    MomentPair atoms = moments(Prior::atomic({{Q("1/2"), unit("1/4")}, {Q("1/2"), unit("3/4")}}));
    CHECK(atoms.alpha == Q("1/2"));
    CHECK(atoms.beta == Q("5/16"));

    MomentPair degenerate = moments(Prior::atomic({{Rational(1), unit("1")}}));
    CHECK(degenerate.alpha == Rational(1));
    CHECK(degenerate.beta == Rational(1));
}

TEST_CASE("binomial grouping agrees with string enumeration") {
    for (const char* t : {"1/4", "3/4", "1/3", "9/10"}) {
        for (unsigned n : {1u, 2u, 5u, 9u}) {
            for (const char* e : {"1/10", "1/4", "3/5"}) {
                CHECK(bernoulli_deviation_prob(Q(t), n, Q(e)) == deviation_by_enumeration(Q(t), n, Q(e)));
            }
        }
    }
    CHECK(bernoulli_deviation_prob(Rational(0), 12, Q("1/10")) == Rational(0));
    CHECK(bernoulli_deviation_prob(Rational(1), 12, Q("1/10")) == Rational(0));
}

TEST_CASE("chebyshev bound: worked examples") {
    // degenerate atoms: alpha - beta = 0 and f_n = Theta surely
    ChebyshevResult degenerate =
        chebyshev_check(Prior::atomic({{Q("1/2"), unit("0")}, {Q("1/2"), unit("1")}}), Q("1/10"), 8);
    CHECK(degenerate.lhs == Rational(0));
    CHECK(degenerate.rhs == Rational(0));
    CHECK(degenerate.holds);

    Prior quarters = Prior::atomic({{Q("1/2"), unit("1/4")}, {Q("1/2"), unit("3/4")}});
    ChebyshevResult r = chebyshev_check(quarters, Q("3/5"), 2);
    CHECK(r.lhs == Q("1/16"));
    CHECK(r.rhs == Q("25/96"));
    CHECK(r.holds);

    // the bound is a theorem: a sweep must produce zero violations
    for (unsigned n : {1u, 2u, 10u, 100u, 1000u, 10000u}) {
        for (const char* e : {"1/10", "1/4", "3/5"}) {
            CHECK(chebyshev_check(quarters, Q(e), n).holds);
        }
    }

    CHECK_THROWS_AS(chebyshev_check(Prior::lebesgue(), Q("1/4"), 8), Error);
}

TEST_CASE("chebyshev Monte Carlo mode with exact Clopper-Pearson") {
    Rng rng(Rng::derive_key(17, "cheb-mc", 0));
    ChebyshevMcResult r = chebyshev_check_mc(Prior::lebesgue(), Q("1/4"), 96, 400, rng);
    CHECK(r.rhs == Q("1/36"));
    CHECK(r.ci_lo <= r.estimate);
    CHECK(r.estimate <= r.ci_hi);
    CHECK(r.no_certified_violation);
}

TEST_CASE("clopper-pearson bounds bracket and cover") {
    auto [lo0, hi0] = clopper_pearson(0, 20, Q("1/100"));
    CHECK(lo0 == Rational(0));
    CHECK(hi0 < Rational(1));
    auto [lon, hin] = clopper_pearson(20, 20, Q("1/100"));
    CHECK(hin == Rational(1));
    CHECK(lon > Rational(0));

    auto [lo, hi] = clopper_pearson(7, 20, Q("1/100"));
    CHECK(lo < Q("7/20"));
    CHECK(Q("7/20") < hi);
    // one-sided tails at the returned endpoints stay within alpha/2
    // (outward rounding): P_lo(Bin >= 7) <= 1/200 and P_hi(Bin <= 7) <= 1/200
    auto tail_ge = [](unsigned k, unsigned n, const Rational& p) {
        Rational acc(0);
        for (unsigned i = k; i <= n; ++i) {
            Rational b(binomial(n, i), mpz_class(1));
            acc += b * p.pow(i) * (Rational(1) - p).pow(n - i);
        }
        return acc;
    };
    CHECK(tail_ge(7, 20, lo) <= Q("1/200"));
    CHECK(Rational(1) - tail_ge(8, 20, hi) <= Q("1/200"));
}

TEST_CASE("doob maximal inequality: worked examples") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());

    DoobMaximalResult one = doob_maximal_check(conj, {{1}}, 1);
    CHECK(one.mass_b == Q("1/2"));
    CHECK(one.lhs_sq == Q("5/8"));
    CHECK(one.holds);
    Enclosure lhs_enc = one.lhs.evaluate(20);
    CHECK(lhs_enc.contains(Q("79057/100000")) == (Q("79057/100000") * Q("79057/100000") <= Q("5/8")));
    CHECK(one.rhs.evaluate(20).width() <= Rational::pow2(-20));

    DoobMaximalResult empty = doob_maximal_check(conj, {}, 3);
    CHECK(empty.lhs_sq == Rational(0));
    CHECK(empty.mass_b == Rational(0));
    CHECK(empty.holds);

    DoobMaximalResult full = doob_maximal_check(conj, {{}}, 3);
    CHECK(full.lhs_sq == Rational(1));
    CHECK(full.mass_b == Rational(1));
    CHECK(full.holds);
}

TEST_CASE("doob maximal: truncation equals an independent leaf-sum oracle") {
    JointMeasure discrete(Prior::atomic({{Q("1/2"), unit("1/3")}, {Q("1/2"), unit("2/3")}}),
                          Likelihood::bernoulli_product());
    std::vector<SampleString> b{{0, 0}, {1, 1, 0}};
    size_t depth = 4;
    DoobMaximalResult r = doob_maximal_check(discrete, b, depth);

    // oracle: bottom-up mu_X(B cap .) from depth-4 leaves, then per-leaf max
    std::map<SampleString, Rational> bmass;
    std::vector<SampleString> layer;
    for (unsigned bits = 0; bits < 16; ++bits) {
        SampleString s{(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        bool inside = false;
        for (const auto& c : b) inside = inside || is_prefix(c, s);
        bmass[s] = inside ? discrete.pushforward_sample(s) : Rational(0);
        layer.push_back(std::move(s));
    }
    for (size_t d = depth; d-- > 0;) {
        std::vector<SampleString> up;
        for (unsigned bits = 0; bits < (1u << d); ++bits) {
            SampleString s;
            for (size_t j = d; j-- > 0;) s.push_back((bits >> j) & 1);
            Rational total(0);
            for (Symbol k : {0u, 1u}) {
                SampleString child = s;
                child.push_back(k);
                total += bmass.at(child);
            }
            bmass[s] = total;
            up.push_back(std::move(s));
        }
    }
    Rational expect(0);
    for (unsigned bits = 0; bits < 16; ++bits) {
        SampleString s{(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        Rational best(0);
        for (size_t n = 0; n <= depth; ++n) {
            SampleString prefix(s.begin(), s.begin() + static_cast<long>(n));
            Rational node = discrete.pushforward_sample(prefix);
            Rational m = node.is_zero() ? Rational(0) : bmass.at(prefix) / node;
            best = max(best, m);
        }
        expect += discrete.pushforward_sample(s) * best * best;
    }
    CHECK(r.lhs_sq == expect);
    CHECK(r.holds);
}

TEST_CASE("martingale tower property holds exactly at every node") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    DoobMaximalResult r = doob_maximal_check(conj, {{0, 1}, {1, 1, 1}}, 4);
    for (const auto& [node, m] : r.martingale.values) {
        if (node.size() == r.martingale.depth) continue;
        Rational parent = r.martingale.node_mass.at(node) * m;
        Rational kids(0);
        for (Symbol s : {0u, 1u}) {
            SampleString child = node;
            child.push_back(s);
            kids += r.martingale.node_mass.at(child) * r.martingale.values.at(child);
        }
        CHECK(parent == kids);
    }
}

TEST_CASE("empirical SLLN: seeded Bernoulli paths concentrate") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    int good = 0;
    for (int rep = 0; rep < 100; ++rep) {
        Rng rng(Rng::derive_key(23, "slln", static_cast<std::uint64_t>(rep)));
        SampleString x = conj.sample_path(unit("1/3"), 10000, rng);
        if (abs(lrf(x, 10000) - Q("1/3")) < Q("1/20")) ++good;
    }
    CHECK(good >= 97);
}
