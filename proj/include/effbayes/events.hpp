#pragma once

#include <variant>
#include <vector>

#include "effbayes/point.hpp"
#include "effbayes/ratset.hpp"

namespace effbayes {

enum class Tri { In, Out, Undecided };

/// Whole parameter space.
struct FullSpaceEvent {};

/// Finite union of rational intervals on the unit interval.
struct IntervalUnionEvent {
    IntervalUnion set;
};

/// Finite set of explicit parameter points (atom sets).
struct PointSetEvent {
    std::vector<ParameterPoint> points;
};

/// Cylinder on Cantor parameter space: all points extending `prefix`.
struct CantorCylinderEvent {
    std::vector<uint8_t> prefix;
};

/// Open d0-ball on the simplex; membership decided through enclosures with
/// the declared gap, so it can come back Undecided.
struct SimplexBallEvent {
    SimplexPoint center;
    Rational radius;
    Rational gap;  // comparison resolution
};

/// A parameter event: one of the finitely-describable shapes above, possibly
/// complemented. Membership is exact where the representation allows and
/// Undecided otherwise (callers turn Undecided into UndecidableEvent).
class ParameterEvent {
  public:
    using Shape = std::variant<FullSpaceEvent, IntervalUnionEvent, PointSetEvent, CantorCylinderEvent,
                               SimplexBallEvent>;

    ParameterEvent() : shape_(FullSpaceEvent{}) {}
    explicit ParameterEvent(Shape s, bool complemented = false)
        : shape_(std::move(s)), complemented_(complemented) {}

    static ParameterEvent full() { return ParameterEvent(FullSpaceEvent{}); }
    static ParameterEvent interval(const RatInterval& r) {
        return ParameterEvent(IntervalUnionEvent{IntervalUnion({r})});
    }
    static ParameterEvent intervals(IntervalUnion u) { return ParameterEvent(IntervalUnionEvent{std::move(u)}); }
    static ParameterEvent points(std::vector<ParameterPoint> pts) {
        return ParameterEvent(PointSetEvent{std::move(pts)});
    }
    static ParameterEvent simplex_ball(SimplexPoint center, Rational radius, Rational gap) {
        return ParameterEvent(SimplexBallEvent{std::move(center), std::move(radius), std::move(gap)});
    }
    static ParameterEvent cantor_cylinder(std::vector<uint8_t> prefix) {
        return ParameterEvent(CantorCylinderEvent{std::move(prefix)});
    }

    ParameterEvent complement() const { return ParameterEvent(shape_, !complemented_); }
    bool complemented() const { return complemented_; }
    const Shape& shape() const { return shape_; }

    Tri membership(const ParameterPoint& p) const;

    std::string to_string() const;

  private:
    Shape shape_;
    bool complemented_ = false;
};

}  // namespace effbayes
