#include "effbayes/point.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

void SimplexPoint::validate() const {
    Rational total(0);
    for (const Rational& h : head_) {
        if (h.sign() < 0 || h > Rational(1)) throw Error("simplex head coordinate outside [0,1]");
        total += h;
    }
    if (tail_) {
        if (tail_->first.sign() <= 0) throw Error("geometric tail needs first > 0");
        if (tail_->ratio.sign() <= 0 || tail_->ratio >= Rational(1)) throw Error("geometric tail needs ratio in (0,1)");
        total += tail_->mass();
    }
    if (total != Rational(1)) throw Error("simplex point mass is " + total.to_string() + ", not 1");
}

SimplexPoint SimplexPoint::finite(std::vector<Rational> head) {
    SimplexPoint p;
    p.head_ = std::move(head);
    p.validate();
    return p;
}

SimplexPoint SimplexPoint::geometric(const Rational& first, const Rational& ratio) {
    SimplexPoint p;
    p.tail_ = GeometricTail{first, ratio};
    p.validate();
    return p;
}

SimplexPoint SimplexPoint::head_plus_geometric(std::vector<Rational> head, const Rational& first,
                                               const Rational& ratio) {
    SimplexPoint p;
    p.head_ = std::move(head);
    p.tail_ = GeometricTail{first, ratio};
    p.validate();
    return p;
}

SimplexPoint SimplexPoint::basis(size_t i) {
    std::vector<Rational> head(i + 1, Rational(0));
    head[i] = Rational(1);
    return finite(std::move(head));
}

Rational SimplexPoint::coordinate(size_t i) const {
    if (i < head_.size()) return head_[i];
    if (!tail_) return Rational(0);
    return tail_->first * tail_->ratio.pow(i - head_.size());
}

Rational SimplexPoint::mass_from(size_t i) const {
    Rational out(0);
    for (size_t j = i; j < head_.size(); ++j) out += head_[j];
    if (tail_) {
        size_t s = head_.size();
        if (i <= s) {
            out += tail_->mass();
        } else {
            // Sum_{j >= i} first * ratio^(j-s) = first * ratio^(i-s) / (1-ratio)
            out += tail_->first * tail_->ratio.pow(i - s) / (Rational(1) - tail_->ratio);
        }
    }
    return out;
}

Rational SimplexPoint::weighted_mass_from(size_t i) const {
    Rational out(0);
    for (size_t j = std::max(i, size_t{0}); j < head_.size(); ++j) {
        if (j >= i) out += Rational::pow2(-static_cast<long>(j) - 1) * head_[j];
    }
    if (tail_) {
        size_t s = std::max(i, head_.size());
        // Sum_{j >= s} 2^-(j+1) first ratio^(j-hs) = 2^-(s+1) first ratio^(s-hs) / (1 - ratio/2)
        Rational lead = Rational::pow2(-static_cast<long>(s) - 1) * tail_->first * tail_->ratio.pow(s - head_.size());
        out += lead / (Rational(1) - tail_->ratio / Rational(2));
    }
    return out;
}

bool SimplexPoint::all_positive() const {
    if (!tail_) return false;  // zero tail has zero coordinates
    for (const Rational& h : head_)
        if (h.sign() <= 0) return false;
    return true;
}

bool SimplexPoint::has_zero_coordinate() const {
    if (!tail_) return true;
    for (const Rational& h : head_)
        if (h.is_zero()) return true;
    return false;
}

SimplexPoint SimplexPoint::normalized(size_t len) const {
    if (len <= head_.size()) return *this;
    SimplexPoint p;
    p.head_ = head_;
    if (!tail_) {
        p.head_.resize(len, Rational(0));
        return p;
    }
    Rational cur = tail_->first;
    for (size_t j = head_.size(); j < len; ++j) {
        p.head_.push_back(cur);
        cur *= tail_->ratio;
    }
    p.tail_ = GeometricTail{cur, tail_->ratio};
    return p;
}

bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
    size_t len = std::max(a.head_.size(), b.head_.size());
    SimplexPoint na = a.normalized(len);
    SimplexPoint nb = b.normalized(len);
    if (na.head_ != nb.head_) return false;
    if (na.tail_.has_value() != nb.tail_.has_value()) return false;
    if (!na.tail_) return true;
    return na.tail_->first == nb.tail_->first && na.tail_->ratio == nb.tail_->ratio;
}

std::string SimplexPoint::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < head_.size(); ++i) {
        if (i) out += ",";
        out += head_[i].to_string();
    }
    if (tail_) {
        if (!head_.empty()) out += ",";
        out += "geom(" + tail_->first.to_string() + "," + tail_->ratio.to_string() + ")";
    }
    return out + "]";
}

CantorPoint CantorPoint::eventually_constant(std::vector<uint8_t> prefix, uint8_t tail_bit) {
    if (tail_bit > 1) throw Error("cantor tail bit must be 0 or 1");
    for (uint8_t b : prefix)
        if (b > 1) throw Error("cantor bits must be 0 or 1");
    CantorPoint p;
    p.prefix_ = std::move(prefix);
    p.tail_ = tail_bit;
    return p;
}

CantorPoint CantorPoint::from_fn(std::function<uint8_t(size_t)> bits) {
    CantorPoint p;
    p.fn_ = std::move(bits);
    return p;
}

uint8_t CantorPoint::bit(size_t i) const {
    if (fn_) return fn_(i) ? 1 : 0;
    if (i < prefix_.size()) return prefix_[i];
    return tail_;
}

const std::vector<uint8_t>& CantorPoint::prefix() const {
    if (fn_) throw Error("oracle-backed cantor point has no stored prefix");
    return prefix_;
}

uint8_t CantorPoint::tail_bit() const {
    if (fn_) throw Error("oracle-backed cantor point has no stored tail");
    return tail_;
}

bool operator==(const CantorPoint& a, const CantorPoint& b) {
    if (!a.is_eventually_constant() || !b.is_eventually_constant())
        throw Error("equality of oracle-backed cantor points is undecidable");
    size_t len = std::max(a.prefix_.size(), b.prefix_.size());
    for (size_t i = 0; i < len; ++i)
        if (a.bit(i) != b.bit(i)) return false;
    return a.tail_ == b.tail_;
}

std::string CantorPoint::to_string() const {
    if (fn_) return "cantor(oracle)";
    std::string out = "cantor(";
    for (uint8_t b : prefix_) out += static_cast<char>('0' + b);
    out += tail_ ? "1..)" : "0..)";
    return out;
}

Space space_of(const ParameterPoint& p) {
    if (std::holds_alternative<UnitPoint>(p)) return Space::UnitInterval;
    if (std::holds_alternative<CantorPoint>(p)) return Space::Cantor;
    if (std::holds_alternative<SimplexPoint>(p)) return Space::Simplex;
    return Space::HilbertCube;
}

std::string space_name(Space s) {
    switch (s) {
        case Space::UnitInterval: return "unit-interval";
        case Space::Cantor: return "cantor";
        case Space::Simplex: return "simplex";
        case Space::HilbertCube: return "hilbert-cube";
    }
    return "?";
}

std::optional<bool> points_equal(const ParameterPoint& a, const ParameterPoint& b) {
    if (space_of(a) != space_of(b)) return false;
    if (const auto* ua = std::get_if<UnitPoint>(&a)) return ua->value == std::get<UnitPoint>(b).value;
    if (const auto* sa = std::get_if<SimplexPoint>(&a)) return *sa == std::get<SimplexPoint>(b);
    if (const auto* ca = std::get_if<CantorPoint>(&a)) {
        const auto& cb = std::get<CantorPoint>(b);
        if (!ca->is_eventually_constant() || !cb.is_eventually_constant()) return std::nullopt;
        return *ca == cb;
    }
    return std::nullopt;  // cube points are oracle-backed
}

std::string point_to_string(const ParameterPoint& p) {
    if (const auto* u = std::get_if<UnitPoint>(&p)) return u->value.to_string();
    if (const auto* s = std::get_if<SimplexPoint>(&p)) return s->to_string();
    if (const auto* c = std::get_if<CantorPoint>(&p)) return c->to_string();
    return "cube(oracle)";
}

}  // namespace effbayes
