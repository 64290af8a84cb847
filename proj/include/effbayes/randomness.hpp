#pragma once

#include <optional>
#include <utility>

#include "effbayes/estimators.hpp"
#include "effbayes/joint.hpp"
#include "effbayes/ratset.hpp"

namespace effbayes {

/// A point a test can interrogate: a parameter, a sample path, or both.
struct TestPoint {
    std::optional<ParameterPoint> param;
    std::function<Symbol(size_t)> path;  // empty when absent

    static TestPoint parameter(ParameterPoint p) { return {std::move(p), {}}; }
    static TestPoint sample(std::function<Symbol(size_t)> f) { return {std::nullopt, std::move(f)}; }
    static TestPoint product(ParameterPoint p, std::function<Symbol(size_t)> f) {
        return {std::move(p), std::move(f)};
    }
};

/// One basic open: the conjunction of whichever constraints are present.
struct BasicOpen {
    std::optional<IntervalUnion> param_set;               // unit-interval parameter constraint
    std::optional<std::vector<uint8_t>> param_prefix;     // Cantor parameter cylinder
    std::optional<SampleString> sample_cylinder;          // sample-path cylinder
    std::optional<std::pair<size_t, size_t>> sample_freq; // (length, ones-count) class

    bool contains(const TestPoint& pt) const;
};

/// Explicit open-set description: a finite (or stage-truncated) union of
/// basic opens together with an exact measure certificate for the union.
struct OpenSetDesc {
    std::vector<BasicOpen> gens;
    bool complete = true;  // the listed gens are the whole set
    Rational measure;      // exact certified measure of the union

    /// Membership in the stage-k finite approximation (first k generators).
    bool contains_at_stage(const TestPoint& pt, size_t stage) const;
    /// Membership in the full union; throws UndecidedMembership when the
    /// description is incomplete and no listed generator captures the point.
    bool contains(const TestPoint& pt) const;
};

/// Levels U_0, U_1, ... with exact measures.
struct SequentialSchnorrTest {
    std::vector<OpenSetDesc> levels;

    /// Every level's measure is <= 2^-n (the sequential Schnorr property).
    bool dyadic_bounds_ok() const;
    /// U_0 is the whole space and the levels are verifiably decreasing
    /// (cylinder/interval containment); throws when not checkable.
    void require_full_decreasing() const;
};

/// The all-zeros-cylinder test: U_n = [0^n] under the uniform measure,
/// usable on the parameter side (Cantor parameters) or the sample side.
enum class CylinderRole { CantorParameter, SamplePath };
SequentialSchnorrTest all_zeros_cylinder_test(size_t levels, CylinderRole role);

struct StageResult {
    bool captured = false;  // point was inside every level up to `level`, with level >= 1
    size_t level = 0;
};

/// Finite-stage capture only; NOT_YET (captured = false) is never a
/// randomness certificate.
StageResult test_membership_stage(const SequentialSchnorrTest& test, const TestPoint& pt, size_t stage);

/// A nu-effectively-Sigma02 class at desk scale: finitely many explicit
/// closed pieces with exact measures under the named base measure.
enum class BaseMeasure { CantorUniform, LebesgueUnit };

struct ClosedPiece {
    // closed cylinders on Cantor, or a closed interval union on [0,1]
    std::optional<std::vector<SampleString>> cylinders;
    std::optional<IntervalUnion> intervals;
    Rational measure;  // exact
};

struct SigmaTwoClass {
    BaseMeasure base = BaseMeasure::CantorUniform;
    std::vector<ClosedPiece> pieces;
    Rational total_measure;  // exact measure of the union

    static SigmaTwoClass from_cylinder_pieces(std::vector<std::vector<SampleString>> pieces);
    static SigmaTwoClass from_interval_pieces(std::vector<IntervalUnion> pieces);

    bool contains_path(const std::function<Symbol(size_t)>& path) const;
    bool contains_unit(const Rational& x) const;
};

struct CoverResult {
    // the covering open set, in the same geometry as the class
    std::vector<std::vector<SampleString>> cylinder_cover;  // Cantor case
    IntervalUnion interval_cover;                           // unit-interval case
    Rational measure;  // exact nu(U)
    Rational excess;   // exact nu(U \ B), < eps
};

/// Effective cover of a Sigma02 class: an open U containing B with exact
/// measure and excess strictly below eps (per-piece budgets eps 2^-(i+1)).
CoverResult sigma2_cover(const SigmaTwoClass& b, const Rational& eps);

/// One level of the LRF-derived test, {(theta, x) : |f_{n^2}(x) - theta| > eta}.
/// Exact measure under (prior x Bernoulli-product likelihood).
Rational lrf_level_measure(const Prior& prior, unsigned n, const Rational& eta);

struct LrfLevelRow {
    unsigned n;
    Rational eta;       // chosen in ((n+1)^-1/3, n^-1/3), avoiding measure atoms
    Rational measure;   // exact mu(U_n)
    bool bound_holds;   // measure <= cbrt(4) n^-4/3 (alpha - beta), decided exactly via cubes
    Enclosure bound;    // enclosure of the right-hand side, for reporting
};

struct LrfSchnorrResult {
    SequentialSchnorrTest test;  // levels 0..horizon on the product space (level 0 = everything)
    std::vector<LrfLevelRow> rows;
    MomentPair moment_pair;
};

/// Builds the limiting-relative-frequency Schnorr test for a prior on [0,1]
/// and certifies its measure bounds exactly up to the horizon.
LrfSchnorrResult lrf_schnorr_test(const Prior& prior, unsigned horizon);

/// The reversal construction: tree surgery T_inf plus likelihood gating by
/// the test's level indicators. Evaluation is lazy per (copy, sigma, theta);
/// parameters captured through the stage budget get the all-zero likelihood.
struct ExtendedModel {
    std::shared_ptr<const SampleTree> tree;  // root plus countably many copies of the base tree
    Likelihood likelihood;                   // the gated family
    SequentialSchnorrTest test;
    unsigned stage_budget;

    /// Least m with theta in U_m \ U_{m+1}, or nullopt when theta sits in
    /// every level up to the budget (treated as captured).
    std::optional<size_t> level_of(const ParameterPoint& theta) const;
};

ExtendedModel reversal_build(const Likelihood& base, SequentialSchnorrTest test, unsigned stage_budget);

}  // namespace effbayes
