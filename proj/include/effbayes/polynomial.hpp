#pragma once

#include <vector>

#include "effbayes/interval.hpp"
#include "effbayes/rational.hpp"

namespace effbayes {

/// Polynomial with rational coefficients, p(t) = sum c[j] t^j.
class Polynomial {
  public:
    Polynomial() : c_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    /// theta^i (1-theta)^(n-i), expanded.
    static Polynomial bernstein_power(unsigned i, unsigned n);

    const std::vector<Rational>& coeffs() const { return c_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }

    Rational eval(const Rational& t) const;
    Enclosure eval_interval(const Enclosure& t) const;  // Horner with intervals

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& k) const;

    /// Exact definite integral over [a,b].
    Rational integrate(const Rational& a, const Rational& b) const;

    /// Certify p >= 0 on [0,1] by recursive interval subdivision.
    /// Sound: true implies nonnegativity. May fail (return false) for
    /// polynomials whose zeros are interior tangencies.
    bool certify_nonnegative_on_unit(unsigned max_depth = 14) const;

  private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace effbayes
