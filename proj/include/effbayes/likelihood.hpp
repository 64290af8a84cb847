#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "effbayes/point.hpp"
#include "effbayes/polynomial.hpp"
#include "effbayes/tree.hpp"

namespace effbayes {

/// A likelihood family theta -> P(.|theta) on a tree sample space, with exact
/// rational cylinder values and exact inverse-CDF one-step sampling. An
/// optional support oracle realizes the indicator factor I_C: parameters
/// reported OUT get likelihood identically zero (the g - h version with the
/// infinity-minus-infinity-is-zero convention).
class Likelihood {
  public:
    using SupportOracle = std::function<bool(const ParameterPoint&)>;

    struct Backend {
        Space param_space;
        std::shared_ptr<const SampleTree> tree;
        /// Exact P(sigma | theta), before support gating.
        std::function<Rational(const ParameterPoint&, const SampleString&)> eval;
        /// Inverse-CDF draw of the next symbol after `prefix` from u in [0,1).
        std::function<Symbol(const ParameterPoint&, const SampleString& prefix, const Rational& u)> sample_step;
        /// P(sigma | .) as a polynomial in theta, when the family admits one
        /// (Bernoulli products); enables exact integrals against densities.
        std::function<Polynomial(const SampleString&)> poly_in_theta;
    };

    /// Omega = [0,1], samples in Cantor space, P(sigma|theta) = theta^i (1-theta)^(n-i).
    static Likelihood bernoulli_product();
    /// Omega = simplex, samples in Baire space, P(sigma|theta) = prod_j theta(sigma(j)).
    static Likelihood iid_simplex();
    /// Omega = Cantor space, samples in Cantor space; coordinate j flips a
    /// coin with rate `rate1` when theta(j) = 1 and `rate0` when theta(j) = 0.
    static Likelihood cantor_bitwise(const Rational& rate0, const Rational& rate1);
    static Likelihood custom(Backend b);

    /// Same family gated by a decidable support oracle.
    Likelihood with_support(SupportOracle oracle) const;
    const SupportOracle& support() const { return support_; }

    Space param_space() const { return backend_->param_space; }
    const std::shared_ptr<const SampleTree>& tree() const { return backend_->tree; }
    bool has_poly_form() const { return static_cast<bool>(backend_->poly_in_theta); }

    /// Exact P(sigma|theta); 0 when the support oracle says OUT.
    /// Throws SpaceMismatch when theta lives in the wrong space.
    Rational eval(const ParameterPoint& theta, const SampleString& sigma) const;

    /// P(sigma|.) as a polynomial (support gating *not* applied).
    Polynomial poly_in_theta(const SampleString& sigma) const;

    /// Next symbol after `prefix` by exact inverse CDF on u.
    Symbol sample_step(const ParameterPoint& theta, const SampleString& prefix, const Rational& u) const;

  private:
    std::shared_ptr<const Backend> backend_;
    SupportOracle support_;  // empty = everything IN
};

}  // namespace effbayes
