#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effbayes/errors.hpp"
#include "effbayes/joint.hpp"
#include "effbayes/metrics.hpp"

using namespace effbayes;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

ParameterPoint unit(const char* q) { return UnitPoint{Q(q)}; }

Prior two_atom_unit() {
    return Prior::atomic({{Q("1/2"), unit("1/3")}, {Q("1/2"), unit("2/3")}});
}

SimplexPoint theta1() { return SimplexPoint::geometric(Q("1/2"), Q("1/2")); }
SimplexPoint theta2() { return SimplexPoint::finite({Q("1/2"), Q("1/2"), Rational(0)}); }

Prior freedman_prior() {
    return Prior::atomic({{Q("1/2"), theta1()}, {Q("1/2"), theta2()}});
}

// Brute-force oracle for rectangles with atomic priors: re-derive the
// likelihood value of sigma via the child sum two levels down.
Rational rectangle_by_descent(const Prior& prior, const Likelihood& lh, const ParameterEvent& A,
                              const SampleString& sigma) {
    Rational out(0);
    for (const auto& atom : prior.atoms()) {
        if (A.membership(atom.point) != Tri::In) continue;
        std::vector<SampleString> layer{sigma};
        for (int step = 0; step < 2; ++step) {
            std::vector<SampleString> next;
            for (const auto& node : layer) {
                auto kids = lh.tree()->children(node);
                REQUIRE(kids.has_value());
                for (Symbol s : *kids) {
                    SampleString child = node;
                    child.push_back(s);
                    next.push_back(child);
                }
            }
            layer = std::move(next);
        }
        Rational mass(0);
        for (const auto& leaf : layer) mass += lh.eval(atom.point, leaf);
        out += atom.weight * mass;
    }
    return out;
}

}  // namespace

TEST_CASE("likelihood_eval worked examples") {
    Likelihood bern = Likelihood::bernoulli_product();
    CHECK(bern.eval(unit("1/3"), {1, 0, 1}) == Q("2/27"));
    CHECK(bern.eval(unit("1/3"), {}) == Rational(1));

    Likelihood sim = Likelihood::iid_simplex();
    CHECK(sim.eval(ParameterPoint(theta1()), {0, 1}) == Q("1/8"));
    CHECK(sim.eval(ParameterPoint(theta1()), {}) == Rational(1));
    CHECK(sim.eval(ParameterPoint(theta2()), {0, 1, 2}) == Rational(0));

    CHECK_THROWS_AS(bern.eval(ParameterPoint(theta1()), {1}), SpaceMismatch);
    CHECK_THROWS_AS(bern.eval(unit("1/3"), {2}), Error);

    // support gating zeroes everything, including the root
    Likelihood gated = bern.with_support([](const ParameterPoint& p) {
        return std::get<UnitPoint>(p).value != Q("1/3");
    });
    CHECK(gated.eval(unit("1/3"), {}) == Rational(0));
    CHECK(gated.eval(unit("1/3"), {1}) == Rational(0));
    CHECK(gated.eval(unit("2/3"), {1}) == Q("2/3"));
}

TEST_CASE("likelihood additivity over children (exact)") {
    Likelihood bern = Likelihood::bernoulli_product();
    for (const char* t : {"0", "1/3", "2/3", "1", "9/10"}) {
        for (const SampleString& sigma : {SampleString{}, SampleString{1}, SampleString{1, 0}}) {
            Rational parent = bern.eval(unit(t), sigma);
            Rational kids(0);
            for (Symbol s : {0u, 1u}) {
                SampleString child = sigma;
                child.push_back(s);
                kids += bern.eval(unit(t), child);
            }
            CHECK(parent == kids);
        }
    }

    // countable child sum telescopes through the tail mass
    Likelihood sim = Likelihood::iid_simplex();
    for (const auto& theta : {theta1(), theta2()}) {
        for (const SampleString& sigma : {SampleString{}, SampleString{0}, SampleString{1, 0}}) {
            Rational parent = sim.eval(ParameterPoint(theta), sigma);
            size_t cut = 6;
            Rational partial(0);
            for (Symbol s = 0; s < cut; ++s) {
                SampleString child = sigma;
                child.push_back(s);
                partial += sim.eval(ParameterPoint(theta), child);
            }
            CHECK(partial + parent * theta.mass_from(cut) == parent);
        }
    }
}

TEST_CASE("joint_rectangle worked examples") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    CHECK(discrete.rectangle(ParameterEvent::points({unit("2/3")}), {1}) == Q("1/3"));

    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    CHECK(conj.rectangle(ParameterEvent::full(), {1}) == Q("1/2"));
    CHECK(conj.rectangle(ParameterEvent::full(), {1, 1}) == Q("1/3"));
    // Laplace rule oracle: mu_X([sigma]) = i!(n-i)!/(n+1)! exactly
    for (unsigned n = 1; n <= 6; ++n) {
        SampleString sigma;
        unsigned ones = 0;
        for (unsigned j = 0; j < n; ++j) {
            sigma.push_back(j % 2);
            ones += j % 2;
        }
        mpz_class fact_i, fact_ni, fact_n1;
        mpz_fac_ui(fact_i.get_mpz_t(), ones);
        mpz_fac_ui(fact_ni.get_mpz_t(), n - ones);
        mpz_fac_ui(fact_n1.get_mpz_t(), n + 1);
        CHECK(conj.pushforward_sample(sigma) == Rational(fact_i * fact_ni, fact_n1));
    }

    CHECK(conj.rectangle(ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2"))), {1}) == Q("1/8"));
}

TEST_CASE("pushforward worked examples") {
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    CHECK(fre.pushforward_sample({}) == Rational(1));
    CHECK(fre.pushforward_sample({0, 1}) == Q("3/16"));

    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    CHECK(conj.pushforward_sample({}) == Rational(1));
    CHECK(conj.pushforward_sample({1}) == Q("1/2"));
}

TEST_CASE("Eq.(1) consistency: random rectangles vs descent oracle") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    Rng rng(Rng::derive_key(21, "rect-prop", 0));

    int cases = 0;
    for (int trial = 0; trial < 25; ++trial) {
        // random event: interval or point set or full
        ParameterEvent A = ParameterEvent::full();
        switch (rng.next_u64() % 3) {
            case 0: {
                Rational a(static_cast<long>(rng.next_u64() % 100), 100);
                Rational b = a + Rational(static_cast<long>(rng.next_u64() % 100), 100);
                A = ParameterEvent::interval(RatInterval::closed(a, min(b, Rational(1))));
                break;
            }
            case 1:
                A = ParameterEvent::points({unit("2/3")});
                break;
            default:
                break;
        }
        SampleString sigma;
        size_t len = rng.next_u64() % 4;
        for (size_t j = 0; j < len; ++j) sigma.push_back(static_cast<Symbol>(rng.next_u64() % 2));
        CHECK(discrete.rectangle(A, sigma) ==
              rectangle_by_descent(discrete.prior(), discrete.likelihood(), A, sigma));
        ++cases;

        // simplex model with point-set events
        ParameterEvent As = ParameterEvent::points({ParameterPoint(theta1())});
        if (rng.next_u64() % 2) As = As.complement();
        SampleString tau;
        for (size_t j = 0; j < len; ++j) tau.push_back(static_cast<Symbol>(rng.next_u64() % 3));
        // independent route: plain weighted sum at the atoms
        Rational direct = fre.rectangle(As, tau);
        Rational manual(0);
        for (const auto& atom : fre.prior().atoms()) {
            if (As.membership(atom.point) != Tri::In) continue;
            manual += atom.weight * fre.likelihood().eval(atom.point, tau);
        }
        CHECK(direct == manual);
        ++cases;
    }
    CHECK(cases >= 50);

    // density prior: Darboux interval enclosure must contain the exact value
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    for (int trial = 0; trial < 10; ++trial) {
        Rational a(static_cast<long>(rng.next_u64() % 50), 100);
        Rational b = a + Rational(static_cast<long>(1 + rng.next_u64() % 50), 100);
        SampleString sigma;
        size_t len = 1 + rng.next_u64() % 4;
        for (size_t j = 0; j < len; ++j) sigma.push_back(static_cast<Symbol>(rng.next_u64() % 2));
        Rational exact = conj.rectangle(ParameterEvent::interval(RatInterval::closed(a, b)), sigma);

        Polynomial f = conj.likelihood().poly_in_theta(sigma);
        Rational lo(0), hi(0);
        long cells = 64;
        for (long c = 0; c < cells; ++c) {
            Rational x0 = a + (b - a) * Rational(c, cells);
            Rational x1 = a + (b - a) * Rational(c + 1, cells);
            Enclosure e = f.eval_interval(Enclosure(x0, x1));
            lo += e.lo * (x1 - x0);
            hi += e.hi * (x1 - x0);
        }
        CHECK(lo <= exact);
        CHECK(exact <= hi);
    }
}

TEST_CASE("pushforward onto parameters recovers the prior") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    for (const auto& atom : discrete.prior().atoms()) {
        ParameterEvent just_this = ParameterEvent::points({atom.point});
        Rational total(0);
        for (unsigned bits = 0; bits < 8; ++bits) {
            SampleString sigma{(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
            total += discrete.rectangle(just_this, sigma);
        }
        CHECK(total == atom.weight);
    }
}

TEST_CASE("sample_path: degenerate parameters, frequencies, determinism") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    Rng r1(Rng::derive_key(5, "samples", 1));
    SampleString ones = conj.sample_path(unit("1"), 32, r1);
    for (Symbol s : ones) CHECK(s == 1);
    SampleString zeros = conj.sample_path(unit("0"), 32, r1);
    for (Symbol s : zeros) CHECK(s == 0);

    Rng r2(Rng::derive_key(5, "samples", 2));
    Rng r3(Rng::derive_key(5, "samples", 2));
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    SampleString a = fre.sample_path(ParameterPoint(theta1()), 64, r2);
    SampleString b = fre.sample_path(ParameterPoint(theta1()), 64, r3);
    CHECK(a == b);

    // empirical frequency of symbol 0 under geometric(1/2,1/2): 3 sigma band
    Rng r4(Rng::derive_key(5, "samples", 3));
    SampleString big = fre.sample_path(ParameterPoint(theta1()), 10000, r4);
    long zeros_count = 0;
    for (Symbol s : big) zeros_count += (s == 0);
    double freq = static_cast<double>(zeros_count) / 10000.0;
    double band = 3.0 * 0.005;  // sqrt(1/2 * 1/2 / 10^4)
    CHECK(freq > 0.5 - band);
    CHECK(freq < 0.5 + band);

    // support-gated parameter refuses to sample
    Likelihood gated = Likelihood::bernoulli_product().with_support([](const ParameterPoint&) { return false; });
    JointMeasure dead(Prior::lebesgue(), gated);
    Rng r5(1);
    CHECK_THROWS_AS(dead.sample_path(unit("1/2"), 4, r5), ZeroMassParameter);
}

TEST_CASE("superspace extension") {
    // treat the two-atom prior as sitting inside a superspace where only
    // values <= 1/2 count as the original space
    Prior p = two_atom_unit();
    Likelihood lh = Likelihood::bernoulli_product();
    auto membership = [](const ParameterPoint& q) { return std::get<UnitPoint>(q).value <= Q("1/2"); };
    auto [p2, lh2] = extend_to_superspace(p, lh, membership);

    // atom inside: unchanged likelihood values
    CHECK(lh2.eval(unit("1/3"), {1, 0}) == lh.eval(unit("1/3"), {1, 0}));
    // point outside: identically zero
    CHECK(lh2.eval(unit("2/3"), {1, 0}) == Rational(0));
    CHECK(lh2.eval(unit("2/3"), {}) == Rational(0));

    // total joint mass matches the restricted rectangle computation
    JointMeasure nu(p2, lh2);
    JointMeasure mu(p, lh);
    ParameterEvent inside = ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2")));
    for (const SampleString& sigma : {SampleString{}, SampleString{1}, SampleString{0, 1}}) {
        CHECK(nu.rectangle(ParameterEvent::full(), sigma) == mu.rectangle(inside, sigma));
    }
}

TEST_CASE("undecidable events surface as errors") {
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    // ball whose radius sits inside the d0 enclosure around theta1: undecidable
    Enclosure e = d0_distance(theta2(), theta1()).evaluate(30);
    ParameterEvent ball = ParameterEvent::simplex_ball(theta1(), e.midpoint(), Q("1/4"));
    CHECK_THROWS_AS(fre.rectangle(ball, {0}), UndecidableEvent);

    // a comfortably separated ball is decidable
    ParameterEvent tiny = ParameterEvent::simplex_ball(theta1(), Q("1/1000"), Q("1/4096"));
    CHECK(fre.rectangle(tiny, {}) == Q("1/2"));  // only theta1 inside its own tiny ball
}
