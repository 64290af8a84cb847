#pragma once

#include <optional>

#include "effbayes/joint.hpp"

namespace effbayes {

/// Posterior mass with the total-function convention: when the normalizing
/// constant mu(Omega x [sigma]) is exactly zero the value is 0 and the
/// degenerate flag is set.
struct PosteriorValue {
    Rational value;
    bool degenerate = false;
};

struct PosteriorTrajectory {
    ParameterEvent event;
    SampleString sample;
    std::vector<PosteriorValue> values;        // values[n] conditions on the length-n prefix
    std::optional<size_t> degenerate_onset;    // least n with a degenerate value
};

/// p(A | sigma) per the normalized-ratio formula, exactly.
PosteriorValue posterior_eval(const JointMeasure& jm, const ParameterEvent& A, const SampleString& sigma);

/// p(A | x restricted to n) for n = 0..N.
PosteriorTrajectory posterior_trajectory(const JointMeasure& jm, const ParameterEvent& A,
                                         const SampleString& x, size_t N);

/// All strings of the tree at `depth` that carry positive reachable structure:
/// finite-branching trees enumerate children; Baire-space models enumerate the
/// union of the finite supports of the prior atoms. Throws TooManyStrings when
/// the set is infinite or exceeds 2^20.
std::vector<SampleString> reachable_strings(const JointMeasure& jm, size_t depth);

struct CondExpReport {
    size_t depth = 0;
    size_t reachable = 0;
    size_t subsets_checked = 0;
    bool exhaustive = false;  // full powerset vs singletons-and-complements
    Rational max_discrepancy;
};

/// Checks the defining identity of the conditional expectation at depth n:
/// integral of I_{Theta^-1(A)} over X_n^-1(D) equals sum_{sigma in D}
/// p(A|sigma) mu_X([sigma]), for every subset D of the reachable strings
/// (all subsets when at most 12 strings, else singletons and complements).
CondExpReport verify_conditional_expectation(const JointMeasure& jm, const ParameterEvent& A, size_t depth);

struct LscCheckRow {
    Rational value;
    bool degenerate = false;
};

struct LscCheckReport {
    std::vector<LscCheckRow> stages;         // p(U_m | sigma)
    bool nondecreasing = false;
    std::optional<Rational> limit_value;     // p(U | sigma) when U was supplied
    bool converged = false;                  // |limit - last stage| <= tol
};

/// Monotone-approximation check for the posterior against an increasing union
/// U = union_m U_m: stage values must be nondecreasing and Cauchy against the
/// final event when it is finitely describable.
LscCheckReport posterior_lsc_check(const JointMeasure& jm, const std::vector<ParameterEvent>& stages,
                                   const std::optional<ParameterEvent>& limit, const SampleString& sigma,
                                   const Rational& tol);

}  // namespace effbayes
