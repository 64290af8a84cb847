#pragma once

#include "effbayes/rational.hpp"

namespace effbayes {

/// Directed rational interval [lo, hi], lo <= hi. The operational form of a
/// partially computed real: refinement only ever shrinks it.
struct Enclosure {
    Rational lo;
    Rational hi;

    Enclosure() = default;
    Enclosure(Rational l, Rational h);
    static Enclosure exact(const Rational& v) { return Enclosure(v, v); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
    bool is_exact() const { return lo == hi; }

    /// Intersection; precondition: the intervals share a point.
    Enclosure meet(const Enclosure& o) const;
};

Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure sub(const Enclosure& a, const Enclosure& b);
Enclosure mul(const Enclosure& a, const Enclosure& b);
/// Throws DivisionByIntervalContainingZero when 0 is in b.
Enclosure div(const Enclosure& a, const Enclosure& b);
Enclosure emin(const Enclosure& a, const Enclosure& b);
Enclosure emax(const Enclosure& a, const Enclosure& b);
Enclosure eabs(const Enclosure& a);
/// Clamp the image into [0,1]; still an enclosure of clamp(x).
Enclosure clamp01(const Enclosure& a);

/// Enclosure of sqrt over a (a.lo >= 0 required), endpoints dyadic,
/// outward-rounded to width <= 2^-precision_bits + width contribution of a.
Enclosure sqrt_enclosure(const Enclosure& a, unsigned precision_bits);

/// Enclosure of the k-th root of a nonnegative rational, width <= 2^-precision_bits.
Enclosure nth_root_enclosure(const Rational& a, unsigned k, unsigned precision_bits);

}  // namespace effbayes
