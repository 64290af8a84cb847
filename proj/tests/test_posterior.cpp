#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effbayes/errors.hpp"
#include "effbayes/posterior.hpp"

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

}  // namespace

TEST_CASE("posterior_eval worked examples") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    // empty evidence: posterior equals prior
    PosteriorValue base = posterior_eval(conj, ParameterEvent::interval(RatInterval::closed(Q("1/4"), Q("3/4"))), {});
    CHECK_FALSE(base.degenerate);
    CHECK(base.value == Q("1/2"));

    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    PosteriorValue d = posterior_eval(discrete, ParameterEvent::points({unit("2/3")}), {1});
    CHECK(d.value == Q("2/3"));

    PosteriorValue half = posterior_eval(conj, ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2"))), {1});
    CHECK(half.value == Q("1/4"));

    // Freedman collapse: a forbidden symbol kills the null atom exactly
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    SampleString with2{0, 1, 2};
    CHECK(posterior_eval(fre, ParameterEvent::points({ParameterPoint(theta1())}), with2).value == Rational(1));
    CHECK(posterior_eval(fre, ParameterEvent::points({ParameterPoint(theta2())}), with2).value == Rational(0));
}

TEST_CASE("normalization, complement and discrete Bayes agreement") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    for (const SampleString& sigma : {SampleString{}, SampleString{1}, SampleString{1, 1, 0}}) {
        CHECK(posterior_eval(discrete, ParameterEvent::full(), sigma).value == Rational(1));
        CHECK(posterior_eval(conj, ParameterEvent::full(), sigma).value == Rational(1));

        ParameterEvent A = ParameterEvent::points({unit("1/3")});
        Rational pa = posterior_eval(discrete, A, sigma).value;
        Rational pac = posterior_eval(discrete, A.complement(), sigma).value;
        CHECK(pa + pac == Rational(1));

        // familiar discrete Bayes ratio
        Likelihood lh = Likelihood::bernoulli_product();
        Rational num = Q("1/2") * lh.eval(unit("1/3"), sigma);
        Rational den = num + Q("1/2") * lh.eval(unit("2/3"), sigma);
        CHECK(pa == num / den);
    }
}

TEST_CASE("martingale tower property over children") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    ParameterEvent A = ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2")));
    ParameterEvent B = ParameterEvent::points({unit("1/3")});
    for (const SampleString& sigma : {SampleString{}, SampleString{0}, SampleString{1, 1}}) {
        for (int which = 0; which < 2; ++which) {
            const JointMeasure& jm = which ? conj : discrete;
            const ParameterEvent& ev = which ? A : B;
            Rational parent = jm.pushforward_sample(sigma) * posterior_eval(jm, ev, sigma).value;
            Rational kids(0);
            for (Symbol s : {0u, 1u}) {
                SampleString child = sigma;
                child.push_back(s);
                kids += jm.pushforward_sample(child) * posterior_eval(jm, ev, child).value;
            }
            CHECK(parent == kids);
        }
    }
}

TEST_CASE("posterior_trajectory: degenerate onset and closed forms") {
    // point prior on the null atom: observing its zero coordinate kills mass
    Prior point_prior = Prior::atomic({{Rational(1), ParameterPoint(theta2())}});
    JointMeasure jm(point_prior, Likelihood::iid_simplex());
    SampleString x{0, 1, 0, 2, 1, 1};
    PosteriorTrajectory traj =
        posterior_trajectory(jm, ParameterEvent::points({ParameterPoint(theta2())}), x, x.size());
    REQUIRE(traj.values.size() == x.size() + 1);
    REQUIRE(traj.degenerate_onset.has_value());
    CHECK(*traj.degenerate_onset == 4);
    for (size_t n = 0; n < 4; ++n) CHECK_FALSE(traj.values[n].degenerate);
    for (size_t n = 4; n <= x.size(); ++n) {
        CHECK(traj.values[n].degenerate);
        CHECK(traj.values[n].value == Rational(0));
    }

    // all-ones Bernoulli path under the uniform prior: p([3/4,1] | 1^n) = 1 - (3/4)^(n+1)
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    SampleString ones(10, 1);
    ParameterEvent top = ParameterEvent::interval(RatInterval::closed(Q("3/4"), Rational(1)));
    PosteriorTrajectory t2 = posterior_trajectory(conj, top, ones, ones.size());
    for (size_t n = 0; n <= ones.size(); ++n) {
        CHECK(t2.values[n].value == Rational(1) - Q("3/4").pow(static_cast<unsigned long>(n) + 1));
        if (n) CHECK(t2.values[n].value > t2.values[n - 1].value);
    }

    // constant event: normalization along the whole trajectory
    PosteriorTrajectory t3 = posterior_trajectory(conj, ParameterEvent::full(), ones, 5);
    for (const auto& v : t3.values) CHECK(v.value == Rational(1));
}

TEST_CASE("conditional expectation identity: worked example at depth 1") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    ParameterEvent A = ParameterEvent::points({unit("2/3")});

    // hand evaluation for D = {(1)}: LHS = 1/2 * 2/3 = 1/3 = (2/3) * (1/2) = RHS
    Rational lhs = discrete.rectangle(A, {1});
    CHECK(lhs == Q("1/3"));
    Rational rhs = posterior_eval(discrete, A, {1}).value * discrete.pushforward_sample({1});
    CHECK(rhs == Q("1/3"));

    CondExpReport report = verify_conditional_expectation(discrete, A, 1);
    CHECK(report.exhaustive);
    CHECK(report.reachable == 2);
    CHECK(report.subsets_checked == 4);
    CHECK(report.max_discrepancy == Rational(0));
}

TEST_CASE("conditional expectation identity: shipped models, depths <= 4") {
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    JointMeasure finite_simplex(
        Prior::atomic({{Q("1/3"), ParameterPoint(SimplexPoint::finite({Q("1/2"), Q("1/2")}))},
                       {Q("2/3"), ParameterPoint(SimplexPoint::finite({Q("1/4"), Q("1/4"), Q("1/2")}))}}),
        Likelihood::iid_simplex());

    ParameterEvent A1 = ParameterEvent::points({unit("2/3")});
    ParameterEvent A2 = ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2")));
    ParameterEvent A3 = ParameterEvent::points({ParameterPoint(SimplexPoint::finite({Q("1/2"), Q("1/2")}))});

    for (size_t depth = 0; depth <= 4; ++depth) {
        CHECK(verify_conditional_expectation(discrete, A1, depth).max_discrepancy == Rational(0));
        CHECK(verify_conditional_expectation(conj, A2, depth).max_discrepancy == Rational(0));
        CHECK(verify_conditional_expectation(finite_simplex, A3, depth).max_discrepancy == Rational(0));
    }

    // trivial event: identity holds for all D
    CHECK(verify_conditional_expectation(conj, ParameterEvent::full(), 3).max_discrepancy == Rational(0));

    // depth 4 on cantor has 16 strings: singleton-and-complement mode
    CondExpReport r = verify_conditional_expectation(conj, A2, 4);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.reachable == 16);
    CHECK(r.max_discrepancy == Rational(0));
}

TEST_CASE("reachable strings: budget and infinite-support guard") {
    JointMeasure fre(freedman_prior(), Likelihood::iid_simplex());
    CHECK_THROWS_AS(reachable_strings(fre, 1), TooManyStrings);

    JointMeasure finite_simplex(
        Prior::atomic({{Rational(1), ParameterPoint(SimplexPoint::finite({Q("1/2"), Q("1/2")}))}}),
        Likelihood::iid_simplex());
    CHECK(reachable_strings(finite_simplex, 3).size() == 8);
}

TEST_CASE("posterior lsc check: monotone stages and limits") {
    JointMeasure conj(Prior::lebesgue(), Likelihood::bernoulli_product());
    // U_m = [0, 1/2 - 1/m] increasing to U = [0, 1/2); p(U_m | (1)) = (1/2 - 1/m)^2
    std::vector<ParameterEvent> stages;
    for (long m = 3; m <= 24; ++m)
        stages.push_back(ParameterEvent::interval(RatInterval::closed(Rational(0), Q("1/2") - Rational(1, m))));
    ParameterEvent limit = ParameterEvent::interval(RatInterval{Rational(0), Q("1/2"), true, false});

    LscCheckReport rep = posterior_lsc_check(conj, stages, limit, {1}, Q("1/10"));
    CHECK(rep.nondecreasing);
    REQUIRE(rep.limit_value.has_value());
    CHECK(*rep.limit_value == Q("1/4"));
    CHECK(rep.converged);
    for (size_t i = 0; i < rep.stages.size(); ++i) {
        Rational t = Q("1/2") - Rational(1, 3 + static_cast<long>(i));
        CHECK(rep.stages[i].value == t * t);
    }

    // atomic prior: stage that captures the atom jumps then stays constant
    JointMeasure discrete(two_atom_unit(), Likelihood::bernoulli_product());
    std::vector<ParameterEvent> st2;
    for (long m = 1; m <= 6; ++m)
        st2.push_back(ParameterEvent::interval(RatInterval::closed(Rational(0), Rational(m, 10))));
    LscCheckReport rep2 = posterior_lsc_check(discrete, st2, std::nullopt, {0}, Q("1/100"));
    CHECK(rep2.nondecreasing);
    CHECK(rep2.stages[0].value == Rational(0));
    CHECK(rep2.stages[3].value == rep2.stages[5].value);  // atom at 1/3 captured from m=4 on
    CHECK(rep2.stages[5].value > Rational(0));
}
