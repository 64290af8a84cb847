#include "effbayes/metrics.hpp"

#include <algorithm>

#include "effbayes/errors.hpp"

namespace effbayes {

namespace {

Rational coord_of(const ParameterPoint& p, size_t i) {
    if (const auto* s = std::get_if<SimplexPoint>(&p)) return s->coordinate(i);
    if (const auto* c = std::get_if<CubePoint>(&p)) return c->coordinate(i);
    throw SpaceMismatch("hilbert metric needs simplex or cube points");
}

}  // namespace

RealOracle hilbert_distance(const ParameterPoint& x, const ParameterPoint& y) {
    const auto* sx = std::get_if<SimplexPoint>(&x);
    const auto* sy = std::get_if<SimplexPoint>(&y);
    if (sx && sy) {
        if (*sx == *sy) return RealOracle::exact(Rational(0));
        if (!sx->has_geometric_tail() && !sy->has_geometric_tail()) {
            size_t len = std::max(sx->head_size(), sy->head_size());
            Rational sum(0);
            for (size_t n = 0; n < len; ++n)
                sum += Rational::pow2(-static_cast<long>(n) - 1) * abs(sx->coordinate(n) - sy->coordinate(n));
            return RealOracle::exact(sum);
        }
    }
    if (!sx && !std::holds_alternative<CubePoint>(x)) throw SpaceMismatch("hilbert metric needs simplex or cube points");
    if (!sy && !std::holds_alternative<CubePoint>(y)) throw SpaceMismatch("hilbert metric needs simplex or cube points");

    ParameterPoint xc = x, yc = y;
    return RealOracle::from_fn([xc, yc](unsigned k) {
        size_t n_terms = static_cast<size_t>(k) + 1;
        Rational sum(0);
        for (size_t n = 0; n < n_terms; ++n)
            sum += Rational::pow2(-static_cast<long>(n) - 1) * abs(coord_of(xc, n) - coord_of(yc, n));
        Rational tail = Rational::pow2(-static_cast<long>(n_terms));
        const auto* a = std::get_if<SimplexPoint>(&xc);
        const auto* b = std::get_if<SimplexPoint>(&yc);
        if (a && b) {
            // |x-y| <= x+y coordinatewise, and both weighted tails are exact
            Rational exact_tail = a->weighted_mass_from(n_terms) + b->weighted_mass_from(n_terms);
            tail = min(tail, exact_tail);
        }
        return Enclosure(sum, sum + tail);
    });
}

std::optional<Rational> simplex_closed_set_distance(const SimplexPoint& x, size_t n, SimplexClosedSet which) {
    if (which == SimplexClosedSet::LowSum) {
        // Remove mass delta = 1/(n+1), cheapest (highest-index) coordinates first.
        Rational delta(1, static_cast<long>(n) + 1);
        size_t m = 0;
        while (x.mass_from(m + 1) >= delta) ++m;
        Rational rest = delta - x.mass_from(m + 1);
        return x.weighted_mass_from(m + 1) + Rational::pow2(-static_cast<long>(m) - 1) * rest;
    }
    // HighWindow: raise coordinates 0..n to reach 1 + 1/(n+1); the n = 0 set
    // {y(0) >= 2} is empty in the cube.
    if (n == 0) return std::nullopt;
    Rational target = Rational(1) + Rational(1, static_cast<long>(n) + 1);
    Rational have(0);
    for (size_t i = 0; i <= n; ++i) have += x.coordinate(i);
    Rational need = target - have;
    Rational cost(0);
    for (size_t ii = n + 1; ii-- > 0 && need.sign() > 0;) {
        Rational headroom = Rational(1) - x.coordinate(ii);
        Rational take = min(headroom, need);
        cost += Rational::pow2(-static_cast<long>(ii) - 1) * take;
        need -= take;
    }
    if (need.sign() > 0) return std::nullopt;  // cannot happen for n >= 1
    return cost;
}

Rational d0_reciprocal_term(const SimplexPoint& x, size_t pos) {
    size_t m = pos / 2;
    SimplexClosedSet which = (pos % 2 == 0) ? SimplexClosedSet::LowSum : SimplexClosedSet::HighWindow;
    std::optional<Rational> d = simplex_closed_set_distance(x, m, which);
    if (!d) return Rational(0);  // empty set at infinite distance
    if (d->is_zero()) throw Error("point is on a simplex-defining closed set; not a simplex point");
    return Rational(1) / *d;
}

RealOracle d0_distance(const SimplexPoint& x, const SimplexPoint& y) {
    if (x == y) return RealOracle::exact(Rational(0));
    RealOracle base = hilbert_distance(ParameterPoint(x), ParameterPoint(y));
    SimplexPoint xc = x, yc = y;
    return RealOracle::from_fn([base, xc, yc](unsigned k) {
        size_t n_terms = static_cast<size_t>(k) + 1;
        Rational sum(0);
        for (size_t pos = 0; pos < n_terms; ++pos) {
            Rational cap = Rational::pow2(-static_cast<long>(pos) - 1);
            Rational diff = abs(d0_reciprocal_term(xc, pos) - d0_reciprocal_term(yc, pos));
            sum += min(cap, diff);
        }
        Rational tail = Rational::pow2(-static_cast<long>(n_terms));  // terms are capped by 2^-(pos+1)
        Enclosure d = base.evaluate(k + 1);
        return Enclosure(d.lo + sum, d.hi + sum + tail);
    });
}

Rational projection(const SimplexPoint& x, size_t i) {
    return x.coordinate(i);
}

namespace {

void check_constraint_form(const RatInterval& v) {
    // Allowed: (p,q), [0,q), (p,1], [0,1] relative to the unit interval.
    if (v.lo.sign() < 0 || v.hi > Rational(1) || v.lo > v.hi) throw Error("box constraint outside [0,1]");
    if (v.lo_closed && !v.lo.is_zero()) throw Error("box constraint must be open below unless it starts at 0");
    if (v.hi_closed && v.hi != Rational(1)) throw Error("box constraint must be open above unless it ends at 1");
}

}  // namespace

std::vector<RatInterval> projection_image(const CoordinateBox& box, size_t i) {
    for (const auto& v : box) check_constraint_form(v);

    Rational lower_sum(0);
    for (const auto& v : box) lower_sum += v.lo;
    if (lower_sum > Rational(1)) throw EmptyBox();

    RatInterval vi = (i < box.size()) ? box[i] : RatInterval::closed(Rational(0), Rational(1));

    // Residual infimum of the other constrained coordinates, and whether a
    // completion can attain it exactly (all other lower ends closed).
    Rational residual = lower_sum - (i < box.size() ? box[i].lo : Rational(0));
    bool attained = true;
    for (size_t j = 0; j < box.size(); ++j) {
        if (j == i) continue;
        if (!box[j].lo_closed) attained = false;
    }

    Rational cap = Rational(1) - residual;
    RatInterval image;
    image.lo = vi.lo;
    image.lo_closed = vi.lo_closed;
    if (vi.hi < cap) {
        image.hi = vi.hi;
        image.hi_closed = vi.hi_closed;
    } else if (vi.hi == cap) {
        image.hi = cap;
        image.hi_closed = vi.hi_closed && attained;
    } else {
        image.hi = cap;
        image.hi_closed = attained;
    }
    if (image.hi < Rational(0)) return {};
    if (image.empty()) return {};
    return {image};
}

size_t PiecewiseMultilinear::grid_index(const std::vector<size_t>& idx) const {
    size_t flat = 0;
    for (size_t d = 0; d < dims(); ++d) flat = flat * breakpoints[d].size() + idx[d];
    return flat;
}

void PiecewiseMultilinear::validate() const {
    if (breakpoints.empty()) throw Error("piecewise function needs at least one dimension");
    size_t total = 1;
    for (const auto& bp : breakpoints) {
        if (bp.size() < 2 || bp.front() != Rational(0) || bp.back() != Rational(1))
            throw Error("breakpoints must start at 0 and end at 1");
        for (size_t j = 1; j < bp.size(); ++j)
            if (!(bp[j - 1] < bp[j])) throw Error("breakpoints must be strictly increasing");
        total *= bp.size();
    }
    if (values.size() != total) throw Error("grid value count mismatch");
}

Rational PiecewiseMultilinear::eval(const std::vector<Rational>& t) const {
    validate();
    if (t.size() != dims()) throw Error("evaluation point dimension mismatch");
    // locate the cell and barycentric weight per dimension
    std::vector<size_t> cell(dims());
    std::vector<Rational> w(dims());
    for (size_t d = 0; d < dims(); ++d) {
        const auto& bp = breakpoints[d];
        if (t[d] < Rational(0) || t[d] > Rational(1)) throw Error("evaluation point outside the unit cube");
        size_t c = 0;
        while (c + 2 < bp.size() && t[d] >= bp[c + 1]) ++c;
        cell[d] = c;
        w[d] = (t[d] - bp[c]) / (bp[c + 1] - bp[c]);
    }
    // multilinear blend over the 2^dims cell corners
    Rational out(0);
    for (size_t corner = 0; corner < (size_t{1} << dims()); ++corner) {
        Rational weight(1);
        std::vector<size_t> idx(dims());
        for (size_t d = 0; d < dims(); ++d) {
            bool hi = (corner >> d) & 1;
            idx[d] = cell[d] + (hi ? 1 : 0);
            weight *= hi ? w[d] : Rational(1) - w[d];
        }
        out += weight * values[grid_index(idx)];
    }
    return out;
}

Rational compact_extremum(const PiecewiseMultilinear& f, bool maximize) {
    f.validate();
    Rational best = f.values.front();
    for (const Rational& v : f.values) {
        if (maximize ? (v > best) : (v < best)) best = v;
    }
    return best;
}

RealOracle bump(const SimplexPoint& center, const Rational& eps_k, const Rational& eps_k1,
                const SimplexPoint& theta) {
    if (!(Rational(0) < eps_k1 && eps_k1 < eps_k)) throw Error("bump needs 0 < eps_{k+1} < eps_k");
    RealOracle d = d0_distance(theta, center);
    Rational gap = eps_k - eps_k1;
    return RealOracle::from_fn([d, eps_k, gap](unsigned k) {
        for (unsigned j = k + 1;; j = 2 * j + 4) {
            Enclosure e = d.evaluate(j);
            Enclosure lin((eps_k - e.hi) / gap, (eps_k - e.lo) / gap);
            Enclosure out = clamp01(lin);
            if (out.width() <= Rational::pow2(-static_cast<long>(k))) return out;
        }
    });
}

}  // namespace effbayes
