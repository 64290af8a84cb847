#include "effbayes/oracle.hpp"

#include <algorithm>

#include "effbayes/errors.hpp"

namespace effbayes {

RealOracle::RealOracle(const Rational& exact_value) {
    s_ = std::make_shared<State>();
    s_->exact = exact_value;
    Enclosure e = Enclosure::exact(exact_value);
    s_->fn = [e](unsigned) { return e; };
    s_->best = e;
}

RealOracle RealOracle::from_fn(Fn fn) {
    RealOracle o;
    o.s_ = std::make_shared<State>();
    o.s_->fn = std::move(fn);
    return o;
}

Enclosure RealOracle::evaluate(unsigned k) const {
    std::lock_guard<std::mutex> lock(s_->mu);
    Rational target = Rational::pow2(-static_cast<long>(k));
    if (s_->best && s_->best->width() <= target) return *s_->best;
    Enclosure e = s_->fn(k);
    s_->best = s_->best ? s_->best->meet(e) : e;
    return *s_->best;
}

std::optional<Rational> RealOracle::exact_value() const {
    return s_->exact;
}

RealOracle RealOracle::combine(const RealOracle& a, const RealOracle& b,
                               Enclosure (*op)(const Enclosure&, const Enclosure&)) {
    if (a.exact_value() && b.exact_value()) {
        Enclosure r = op(Enclosure::exact(*a.exact_value()), Enclosure::exact(*b.exact_value()));
        if (r.is_exact()) return RealOracle(r.lo);
    }
    return from_fn([a, b, op](unsigned k) {
        for (unsigned j = k + 1;; j = 2 * j + 4) {
            Enclosure r = op(a.evaluate(j), b.evaluate(j));
            Rational target = Rational::pow2(-static_cast<long>(k));
            if (r.width() <= target) return r;
        }
    });
}

RealOracle operator+(const RealOracle& a, const RealOracle& b) { return RealOracle::combine(a, b, &add); }
RealOracle operator-(const RealOracle& a, const RealOracle& b) { return RealOracle::combine(a, b, &sub); }
RealOracle operator*(const RealOracle& a, const RealOracle& b) { return RealOracle::combine(a, b, &mul); }
RealOracle operator/(const RealOracle& a, const RealOracle& b) { return RealOracle::combine(a, b, &div); }
RealOracle RealOracle::min(const RealOracle& a, const RealOracle& b) { return combine(a, b, &emin); }
RealOracle RealOracle::max(const RealOracle& a, const RealOracle& b) { return combine(a, b, &emax); }

RealOracle RealOracle::abs(const RealOracle& a) {
    if (a.exact_value()) return RealOracle(effbayes::abs(*a.exact_value()));
    return from_fn([a](unsigned k) { return eabs(a.evaluate(k)); });
}

RealOracle RealOracle::clamp01(const RealOracle& a) {
    if (a.exact_value()) {
        Rational v = *a.exact_value();
        return RealOracle(effbayes::max(Rational(0), effbayes::min(Rational(1), v)));
    }
    return from_fn([a](unsigned k) { return effbayes::clamp01(a.evaluate(k)); });
}

RealOracle RealOracle::sqrt(const RealOracle& a) {
    return from_fn([a](unsigned k) {
        // sqrt is 1/2-Hoelder, not Lipschitz near 0: refine the radicand until
        // the image interval is tight enough.
        for (unsigned j = k + 2;; j = 2 * j + 4) {
            Enclosure e = a.evaluate(j);
            if (e.lo.sign() < 0) e = Enclosure(Rational(0), effbayes::max(Rational(0), e.hi));
            Enclosure r = sqrt_enclosure(e, j);
            if (r.width() <= Rational::pow2(-static_cast<long>(k))) return r;
        }
    });
}

namespace {
long ceil_log2_inverse(const Rational& gap) {
    // smallest t >= 0 with 2^-t <= gap
    long t = 0;
    while (Rational::pow2(-t) > gap) ++t;
    return t;
}
}  // namespace

GapOrder compare_with_gap(const RealOracle& a, const RealOracle& b, const Rational& gap) {
    if (gap.sign() <= 0) throw Error("compare_with_gap needs gap > 0");
    long k_max = ceil_log2_inverse(gap) + 2;
    for (long k = 1; k <= k_max; ++k) {
        Enclosure ea = a.evaluate(static_cast<unsigned>(k));
        Enclosure eb = b.evaluate(static_cast<unsigned>(k));
        if (ea.hi < eb.lo) return GapOrder::Less;
        if (eb.hi < ea.lo) return GapOrder::Greater;
        Rational span = max(ea.hi, eb.hi) - min(ea.lo, eb.lo);
        if (span < gap) return GapOrder::WithinGap;
    }
    // Both widths are <= gap/4 and the intervals overlap, so |a-b| <= gap/2.
    return GapOrder::WithinGap;
}

Rational avoid_atoms(const Rational& lo, const Rational& hi, const std::vector<Rational>& atoms) {
    if (!(lo < hi)) throw Error("avoid_atoms needs a nonempty open interval");
    Rational right = hi;
    for (;;) {
        Rational mid = (lo + right) / Rational(2);
        bool clash = false;
        for (const Rational& atom : atoms) {
            if (atom == mid) { clash = true; break; }
        }
        if (!clash) return mid;
        right = mid;
    }
}

}  // namespace effbayes
