#include "effbayes/ratset.hpp"

#include <algorithm>

#include "effbayes/errors.hpp"

namespace effbayes {

bool RatInterval::empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
}

bool RatInterval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string RatInterval::to_string() const {
    std::string out = lo_closed ? "[" : "(";
    out += lo.to_string() + "," + hi.to_string();
    out += hi_closed ? "]" : ")";
    return out;
}

IntervalUnion::IntervalUnion(std::vector<RatInterval> parts) : parts_(std::move(parts)) {
    normalize();
}

void IntervalUnion::normalize() {
    std::vector<RatInterval> in;
    for (const auto& p : parts_)
        if (!p.empty()) in.push_back(p);
    std::sort(in.begin(), in.end(), [](const RatInterval& a, const RatInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    parts_.clear();
    for (const auto& p : in) {
        if (!parts_.empty()) {
            RatInterval& cur = parts_.back();
            bool overlaps = p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
            if (overlaps) {
                if (p.hi > cur.hi) {
                    cur.hi = p.hi;
                    cur.hi_closed = p.hi_closed;
                } else if (p.hi == cur.hi) {
                    cur.hi_closed = cur.hi_closed || p.hi_closed;
                }
                continue;
            }
        }
        parts_.push_back(p);
    }
}

bool IntervalUnion::contains(const Rational& x) const {
    for (const auto& p : parts_)
        if (p.contains(x)) return true;
    return false;
}

Rational IntervalUnion::measure() const {
    Rational out(0);
    for (const auto& p : parts_) out += p.length();
    return out;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& o) const {
    std::vector<RatInterval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& o) const {
    std::vector<RatInterval> out;
    for (const auto& a : parts_) {
        for (const auto& b : o.parts_) {
            RatInterval r;
            if (a.lo > b.lo) {
                r.lo = a.lo;
                r.lo_closed = a.lo_closed;
            } else if (b.lo > a.lo) {
                r.lo = b.lo;
                r.lo_closed = b.lo_closed;
            } else {
                r.lo = a.lo;
                r.lo_closed = a.lo_closed && b.lo_closed;
            }
            if (a.hi < b.hi) {
                r.hi = a.hi;
                r.hi_closed = a.hi_closed;
            } else if (b.hi < a.hi) {
                r.hi = b.hi;
                r.hi_closed = b.hi_closed;
            } else {
                r.hi = a.hi;
                r.hi_closed = a.hi_closed && b.hi_closed;
            }
            if (!r.empty()) out.push_back(r);
        }
    }
    return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::complement() const {
    std::vector<RatInterval> out;
    Rational prev(0);
    bool prev_closed = true;
    for (const auto& p : parts_) {
        RatInterval gap{prev, p.lo, prev_closed, !p.lo_closed};
        if (!gap.empty()) out.push_back(gap);
        prev = p.hi;
        prev_closed = !p.hi_closed;
    }
    RatInterval last{prev, Rational(1), prev_closed, true};
    if (!last.empty()) out.push_back(last);
    return IntervalUnion(std::move(out));
}

bool IntervalUnion::covers(const IntervalUnion& o) const {
    return o.intersect(complement()).empty();
}

std::string IntervalUnion::to_string() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += " u ";
        out += parts_[i].to_string();
    }
    return out;
}

}  // namespace effbayes
