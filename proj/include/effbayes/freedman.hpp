#pragma once

#include <optional>
#include <string>

#include "effbayes/metrics.hpp"
#include "effbayes/posterior.hpp"

namespace effbayes {

/// The inconsistency-witness prior: one fully supported atom plus null atoms
/// that each vanish at a designated coordinate. Observing a designated
/// coordinate kills its atom exactly, and once all are killed the posterior
/// sits on the positive atom forever.
struct FreedmanPrior {
    struct NullAtom {
        SimplexPoint point;       // has a zero coordinate
        size_t zero_coordinate;   // the designated one
        Rational weight;
    };

    Rational positive_weight;
    SimplexPoint positive_atom = SimplexPoint::basis(0);  // every coordinate > 0
    std::vector<NullAtom> nulls;

    Prior to_prior() const;
};

/// Validates and assembles the prior. Throws NotInteriorPoint when the
/// positive atom has a zero coordinate, BadZeroCoordinate when a claimed
/// zero coordinate is nonzero, Error when the weights do not sum to 1.
FreedmanPrior build_freedman_prior(SimplexPoint positive,
                                   std::vector<std::pair<SimplexPoint, size_t>> nulls,
                                   std::vector<Rational> weights);

struct CollapseResult {
    SampleString path;
    PosteriorTrajectory trajectory;          // of the event {positive atom}
    std::optional<size_t> hitting_time;      // first n with every designated coordinate seen
};

/// Seeded run of the collapse mechanism: sample from P(.|true_theta), track
/// the posterior of the positive atom; after the hitting time the value is
/// exactly 1.
CollapseResult collapse_trajectory(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                   size_t horizon, std::uint64_t seed);

/// P(some designated coordinate unseen after n draws from true_theta),
/// by inclusion-exclusion over the designated set; exact.
Rational miss_probability(const SimplexPoint& true_theta, const std::vector<size_t>& zero_coords, size_t n);

struct InconsistencyCertificate {
    FreedmanPrior prior;
    SimplexPoint true_theta = SimplexPoint::basis(0);
    std::string v_description;
    size_t horizon;
    Rational bound;        // exact E[p(V | sample_n)] upper bound
    bool strictly_below_1;
};

/// The separating event V around the truth, excluding the positive atom.
struct SeparatingEvent {
    // default: the atom-complement event Omega \ {positive}; optionally a
    // d0-ball around the truth with a certified separation radius
    std::optional<Rational> ball_radius;
    Rational gap = Rational(1, 1024);  // separation comparison resolution
};

/// Exact bound E[p(V | sample_n)] <= miss_probability(n) at the horizon,
/// the strict-below-1 witness. Throws SeparationFailure when a requested
/// ball cannot be certified to exclude the positive atom.
InconsistencyCertificate inconsistency_certificate(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                                   const SeparatingEvent& v, size_t horizon);

/// Integrand for the double integral: an indicator event or a bump function.
struct DoubleIntegrand {
    std::optional<ParameterEvent> event;
    struct Bump {
        SimplexPoint center;
        Rational eps_k, eps_k1;
    };
    std::optional<Bump> bump;
};

struct DoubleIntegralResult {
    Rational mean_lo, mean_hi;                 // enclosure of the Monte Carlo mean
    Rational ci_lo, ci_hi;                     // conservative 99% interval for the expectation
    std::optional<Rational> certified_lower;   // 1 - miss when the integrand is 1 at the positive atom
    std::optional<Rational> certified_upper;   // miss when the integrand vanishes there
    unsigned replicas;
};

/// Monte Carlo estimate of int int f dposterior dP(.|true_theta) at fixed n:
/// the inner integral is an exact finite sum over the atoms; the outer one is
/// averaged over seeded sample paths.
DoubleIntegralResult double_integral_estimate(const FreedmanPrior& prior, const SimplexPoint& true_theta,
                                              const DoubleIntegrand& f, size_t n, unsigned replicas,
                                              std::uint64_t seed);

}  // namespace effbayes
