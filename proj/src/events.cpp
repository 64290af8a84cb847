#include "effbayes/events.hpp"

#include "effbayes/errors.hpp"
#include "effbayes/metrics.hpp"

namespace effbayes {

namespace {

Tri flip(Tri t, bool complemented) {
    if (!complemented || t == Tri::Undecided) return t;
    return t == Tri::In ? Tri::Out : Tri::In;
}

Tri membership_shape(const ParameterEvent::Shape& shape, const ParameterPoint& p) {
    if (std::holds_alternative<FullSpaceEvent>(shape)) return Tri::In;

    if (const auto* iv = std::get_if<IntervalUnionEvent>(&shape)) {
        const auto* u = std::get_if<UnitPoint>(&p);
        if (!u) throw SpaceMismatch("interval event on a non-unit-interval point");
        return iv->set.contains(u->value) ? Tri::In : Tri::Out;
    }

    if (const auto* ps = std::get_if<PointSetEvent>(&shape)) {
        bool undecided = false;
        for (const auto& q : ps->points) {
            auto eq = points_equal(p, q);
            if (!eq.has_value()) {
                undecided = true;
                continue;
            }
            if (*eq) return Tri::In;
        }
        return undecided ? Tri::Undecided : Tri::Out;
    }

    if (const auto* cc = std::get_if<CantorCylinderEvent>(&shape)) {
        const auto* c = std::get_if<CantorPoint>(&p);
        if (!c) throw SpaceMismatch("cantor cylinder event on a non-cantor point");
        for (size_t i = 0; i < cc->prefix.size(); ++i)
            if (c->bit(i) != cc->prefix[i]) return Tri::Out;
        return Tri::In;
    }

    const auto& ball = std::get<SimplexBallEvent>(shape);
    const auto* s = std::get_if<SimplexPoint>(&p);
    if (!s) throw SpaceMismatch("simplex ball event on a non-simplex point");
    GapOrder g = compare_with_gap(d0_distance(*s, ball.center), RealOracle::exact(ball.radius), ball.gap);
    if (g == GapOrder::Less) return Tri::In;
    if (g == GapOrder::Greater) return Tri::Out;
    return Tri::Undecided;
}

}  // namespace

Tri ParameterEvent::membership(const ParameterPoint& p) const {
    return flip(membership_shape(shape_, p), complemented_);
}

std::string ParameterEvent::to_string() const {
    std::string body;
    if (std::holds_alternative<FullSpaceEvent>(shape_)) {
        body = "Omega";
    } else if (const auto* iv = std::get_if<IntervalUnionEvent>(&shape_)) {
        body = iv->set.to_string();
    } else if (const auto* ps = std::get_if<PointSetEvent>(&shape_)) {
        body = "{";
        for (size_t i = 0; i < ps->points.size(); ++i) {
            if (i) body += ",";
            body += point_to_string(ps->points[i]);
        }
        body += "}";
    } else if (const auto* cc = std::get_if<CantorCylinderEvent>(&shape_)) {
        body = "[";
        for (uint8_t b : cc->prefix) body += static_cast<char>('0' + b);
        body += "]";
    } else {
        const auto& ball = std::get<SimplexBallEvent>(shape_);
        body = "B(" + ball.center.to_string() + "," + ball.radius.to_string() + ")";
    }
    return complemented_ ? "~" + body : body;
}

}  // namespace effbayes
