#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effbayes/rational.hpp"

namespace effbayes {

/// Rational subinterval of [0,1] with independently open/closed endpoints.
struct RatInterval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static RatInterval closed(const Rational& a, const Rational& b) { return {a, b, true, true}; }
    static RatInterval open(const Rational& a, const Rational& b) { return {a, b, false, false}; }
    static RatInterval point(const Rational& a) { return {a, a, true, true}; }

    bool empty() const;
    bool contains(const Rational& x) const;
    Rational length() const { return empty() ? Rational(0) : hi - lo; }
    std::string to_string() const;
};

/// Finite union of rational intervals in [0,1]; the working event/open-set
/// algebra on the unit interval. All measures are Lebesgue lengths (endpoint
/// flags do not affect measure but do affect membership).
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<RatInterval> parts);
    static IntervalUnion full() { return IntervalUnion({RatInterval::closed(Rational(0), Rational(1))}); }

    const std::vector<RatInterval>& parts() const { return parts_; }
    bool contains(const Rational& x) const;
    bool empty() const { return parts_.empty(); }
    Rational measure() const;

    IntervalUnion unite(const IntervalUnion& o) const;
    IntervalUnion intersect(const IntervalUnion& o) const;
    /// Complement within [0,1].
    IntervalUnion complement() const;
    /// True when every point of `o` lies in this union.
    bool covers(const IntervalUnion& o) const;

    std::string to_string() const;

  private:
    std::vector<RatInterval> parts_;  // disjoint, sorted
    void normalize();
};

}  // namespace effbayes
