#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "effbayes/rational.hpp"

namespace effbayes {

/// A point of the infinite-dimensional simplex: exact rational head
/// coordinates followed by an exact tail descriptor (all-zero or geometric).
/// head sum + tail mass = 1 is an exact identity enforced at construction,
/// and every coordinate is an exact rational.
class SimplexPoint {
  public:
    struct GeometricTail {
        Rational first;  // > 0
        Rational ratio;  // in (0,1)
        Rational mass() const { return first / (Rational(1) - ratio); }
    };

    /// All mass in the head; tail identically zero. sum(head) must be 1.
    static SimplexPoint finite(std::vector<Rational> head);
    /// Pure geometric point theta(i) = first * ratio^i; first/(1-ratio) must be 1.
    static SimplexPoint geometric(const Rational& first, const Rational& ratio);
    /// Explicit head then geometric tail; total mass must be exactly 1.
    static SimplexPoint head_plus_geometric(std::vector<Rational> head, const Rational& first,
                                            const Rational& ratio);
    /// e_i: unit mass at coordinate i.
    static SimplexPoint basis(size_t i);

    Rational coordinate(size_t i) const;
    size_t head_size() const { return head_.size(); }
    bool has_geometric_tail() const { return tail_.has_value(); }
    const GeometricTail& tail() const { return *tail_; }

    /// Sum_{j >= i} theta(j), exact (closed-form geometric series).
    Rational mass_from(size_t i) const;
    /// Sum_{j >= i} 2^-(j+1) * theta(j), exact.
    Rational weighted_mass_from(size_t i) const;

    /// Membership in S_infinity^+ (every coordinate > 0).
    bool all_positive() const;
    /// Membership in S_infinity^- (some coordinate = 0).
    bool has_zero_coordinate() const;

    /// Same point with head extended to at least `len` coordinates
    /// (tail entries popped into the head); value-preserving.
    SimplexPoint normalized(size_t len) const;

    /// Exact pointwise equality (decidable for these representations).
    friend bool operator==(const SimplexPoint& a, const SimplexPoint& b);
    friend bool operator!=(const SimplexPoint& a, const SimplexPoint& b) { return !(a == b); }

    std::string to_string() const;

  private:
    SimplexPoint() = default;
    std::vector<Rational> head_;
    std::optional<GeometricTail> tail_;
    void validate() const;
};

/// Point of the unit interval parameter space.
struct UnitPoint {
    Rational value;  // in [0,1]
};

/// Point of Cantor space, eventually-constant or oracle-backed. Only
/// eventually-constant points support exact equality tests.
class CantorPoint {
  public:
    static CantorPoint eventually_constant(std::vector<uint8_t> prefix, uint8_t tail_bit);
    static CantorPoint all_zeros() { return eventually_constant({}, 0); }
    static CantorPoint from_fn(std::function<uint8_t(size_t)> bits);

    uint8_t bit(size_t i) const;
    bool is_eventually_constant() const { return !fn_; }
    /// Stored prefix / tail of an eventually-constant point.
    const std::vector<uint8_t>& prefix() const;
    uint8_t tail_bit() const;

    /// Exact equality; throws for oracle-backed points.
    friend bool operator==(const CantorPoint& a, const CantorPoint& b);

    std::string to_string() const;

  private:
    std::vector<uint8_t> prefix_;
    uint8_t tail_ = 0;
    std::function<uint8_t(size_t)> fn_;
};

/// Point of the Hilbert cube, coordinate oracle returning exact rationals.
class CubePoint {
  public:
    explicit CubePoint(std::function<Rational(size_t)> coord) : coord_(std::move(coord)) {}
    static CubePoint zero() {
        return CubePoint([](size_t) { return Rational(0); });
    }
    Rational coordinate(size_t i) const { return coord_(i); }

  private:
    std::function<Rational(size_t)> coord_;
};

using ParameterPoint = std::variant<UnitPoint, CantorPoint, SimplexPoint, CubePoint>;

enum class Space { UnitInterval, Cantor, Simplex, HilbertCube };

Space space_of(const ParameterPoint& p);
std::string space_name(Space s);

/// Exact equality where decidable; nullopt when not (oracle-backed points).
std::optional<bool> points_equal(const ParameterPoint& a, const ParameterPoint& b);

std::string point_to_string(const ParameterPoint& p);

}  // namespace effbayes
