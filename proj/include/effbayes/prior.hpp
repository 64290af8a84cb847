#pragma once

#include <vector>

#include "effbayes/events.hpp"
#include "effbayes/point.hpp"
#include "effbayes/polynomial.hpp"

namespace effbayes {

struct MomentPair {
    Rational alpha;  // E Theta
    Rational beta;   // E Theta^2
};

/// A computable prior: either a finite atomic mixture (any parameter space)
/// or a polynomial density on [0,1] (the richest exactly-integrable class).
class Prior {
  public:
    struct Atom {
        Rational weight;  // > 0
        ParameterPoint point;
    };

    static Prior atomic(std::vector<Atom> atoms);
    static Prior poly_density(Polynomial density);
    static Prior lebesgue() { return poly_density(Polynomial::constant(Rational(1))); }

    bool is_atomic() const { return kind_ == Kind::Atomic; }
    const std::vector<Atom>& atoms() const;
    const Polynomial& density() const;
    Space space() const { return space_; }

    /// Exact p(A); throws UndecidableEvent when an atom's membership in A
    /// cannot be decided.
    Rational measure(const ParameterEvent& A) const;

    /// alpha = int theta dp, beta = int theta^2 dp; needs a [0,1] prior.
    MomentPair moments() const;

  private:
    enum class Kind { Atomic, PolyDensity };
    Kind kind_ = Kind::Atomic;
    std::vector<Atom> atoms_;
    Polynomial density_;
    Space space_ = Space::UnitInterval;
};

}  // namespace effbayes
