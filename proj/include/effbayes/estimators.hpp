#pragma once

#include <map>

#include "effbayes/oracle.hpp"
#include "effbayes/posterior.hpp"

namespace effbayes {

/// Limiting-relative-frequency estimator f_n(x) = (1/n) sum_{i<n} x(i).
Rational lrf(const SampleString& x, size_t n);
/// Coordinate version on Baire-space strings: frequency of symbol j.
Rational lrf_coordinate(const SampleString& x, Symbol j, size_t n);

/// alpha = E Theta, beta = E Theta^2 under a [0,1] prior, exact.
MomentPair moments(const Prior& prior);

/// Exact P_theta(|ones/n - theta| > eps) for Bernoulli(theta) of length n,
/// computed by grouping strings by their count of ones (n+1 terms).
Rational bernoulli_deviation_prob(const Rational& theta, unsigned n, const Rational& eps);

struct ChebyshevResult {
    Rational lhs;  // exact mu(|f_n o X - Theta| > eps)
    Rational rhs;  // eps^-2 n^-1 (alpha - beta)
    bool holds;
};

/// Exact two-sided check of the concentration bound for atomic priors.
/// Throws ExplosionGuard when (n+1) * #atoms exceeds the budget.
ChebyshevResult chebyshev_check(const Prior& prior, const Rational& eps, unsigned n);

struct ChebyshevMcResult {
    Rational estimate;
    Rational ci_lo, ci_hi;  // exact-coverage 99% Clopper-Pearson bounds
    Rational rhs;
    unsigned replicas;
    unsigned hits;
    bool no_certified_violation;  // ci_lo <= rhs
};

/// Monte Carlo mode for density priors: sample theta by inverse CDF
/// (bisection on the exact polynomial CDF), then a Bernoulli(theta) block.
ChebyshevMcResult chebyshev_check_mc(const Prior& prior, const Rational& eps, unsigned n,
                                     unsigned replicas, Rng& rng);

/// Exact Clopper-Pearson bounds for k successes out of n at confidence
/// 1 - alpha, outward-rounded dyadic rationals (lower rounded down, upper up).
std::pair<Rational, Rational> clopper_pearson(unsigned k, unsigned n, const Rational& alpha,
                                              unsigned precision_bits = 30);

/// The truncated martingale M_n = mu_X(B | .) on a finite-branching tree.
struct MartingaleTruncation {
    size_t depth;
    std::vector<SampleString> event;            // defining antichain of B
    std::map<SampleString, Rational> values;    // M_n at every node to `depth`
    std::map<SampleString, Rational> node_mass; // mu_X([sigma])
};

struct DoobMaximalResult {
    Rational lhs_sq;   // exact || max_{n<=depth} M_n ||_2^2
    Rational mass_b;   // exact mu_X(B)
    bool holds;        // lhs_sq <= 4 * mass_b, decided exactly
    RealOracle lhs;    // sqrt enclosure for reporting
    RealOracle rhs;    // 2 sqrt(mu_X(B))
    MartingaleTruncation martingale;
};

/// Doob maximal-inequality estimate with m = 0. B is a finite union of
/// cylinders of depth <= `depth`; past `depth` the martingale is constant on
/// B's sigma-algebra, so the truncated norm is the full supremum norm.
DoobMaximalResult doob_maximal_check(const JointMeasure& jm, const std::vector<SampleString>& b_cylinders,
                                     size_t depth);

}  // namespace effbayes
