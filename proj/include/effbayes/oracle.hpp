#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "effbayes/interval.hpp"

namespace effbayes {

/// A computable real: evaluate(k) yields an enclosure of width <= 2^-k.
/// Successive evaluations are nested regardless of the order of the requested
/// precisions (the running intersection of everything the backing function
/// has produced is returned), so refinement never widens.
class RealOracle {
  public:
    using Fn = std::function<Enclosure(unsigned precision_bits)>;

    RealOracle() : RealOracle(Rational(0)) {}
    explicit RealOracle(const Rational& exact_value);
    static RealOracle exact(const Rational& v) { return RealOracle(v); }

    /// `fn(k)` must return an enclosure of width <= 2^-k; all enclosures it
    /// ever returns must share a common point (the represented real).
    static RealOracle from_fn(Fn fn);

    Enclosure evaluate(unsigned precision_bits) const;

    /// The exact rational value, if this oracle was built from one.
    std::optional<Rational> exact_value() const;

    friend RealOracle operator+(const RealOracle& a, const RealOracle& b);
    friend RealOracle operator-(const RealOracle& a, const RealOracle& b);
    friend RealOracle operator*(const RealOracle& a, const RealOracle& b);
    /// Requires the divisor to be bounded away from zero.
    friend RealOracle operator/(const RealOracle& a, const RealOracle& b);

    static RealOracle sqrt(const RealOracle& a);
    static RealOracle min(const RealOracle& a, const RealOracle& b);
    static RealOracle max(const RealOracle& a, const RealOracle& b);
    static RealOracle abs(const RealOracle& a);
    static RealOracle clamp01(const RealOracle& a);

  private:
    struct State {
        Fn fn;
        std::optional<Rational> exact;
        mutable std::mutex mu;
        mutable std::optional<Enclosure> best;
    };
    std::shared_ptr<State> s_;

    static RealOracle combine(const RealOracle& a, const RealOracle& b,
                              Enclosure (*op)(const Enclosure&, const Enclosure&));
};

enum class GapOrder { Less, Greater, WithinGap };

/// Decidable comparison up to a declared positive gap:
/// Less certifies a < b, Greater certifies a > b, WithinGap certifies |a-b| < gap.
/// Performs at most ceil(log2(1/gap)) + 2 refinements of each oracle.
GapOrder compare_with_gap(const RealOracle& a, const RealOracle& b, const Rational& gap);

/// A rational in (lo, hi) distinct from every listed atom, found by midpoint
/// bisection toward lo, skipping atoms.
Rational avoid_atoms(const Rational& lo, const Rational& hi, const std::vector<Rational>& atoms);

}  // namespace effbayes
