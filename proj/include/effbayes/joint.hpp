#pragma once

#include "effbayes/events.hpp"
#include "effbayes/likelihood.hpp"
#include "effbayes/prior.hpp"
#include "effbayes/rng.hpp"

namespace effbayes {

/// Joint distribution mu on parameters x samples, acting on rectangles by
/// mu(A x [sigma]) = int_A P(sigma|theta) dp(theta). Everything is exact:
/// atomic priors give finite weighted sums, polynomial densities give exact
/// polynomial integrals.
class JointMeasure {
  public:
    JointMeasure(Prior prior, Likelihood likelihood);

    const Prior& prior() const { return prior_; }
    const Likelihood& likelihood() const { return lh_; }
    const std::shared_ptr<const SampleTree>& tree() const { return lh_.tree(); }

    /// Exact mu(A x [sigma]).
    Rational rectangle(const ParameterEvent& A, const SampleString& sigma) const;

    /// Exact mu_X([sigma]) = mu(Omega x [sigma]).
    Rational pushforward_sample(const SampleString& sigma) const;

    /// Seeded exact draw of a length-`horizon` sample from P(.|theta).
    /// Throws ZeroMassParameter when the support oracle reports theta OUT.
    SampleString sample_path(const ParameterPoint& theta, size_t horizon, Rng& rng) const;

  private:
    Prior prior_;
    Likelihood lh_;
};

/// Superspace extension: same atoms reinterpreted in the larger space, and a
/// likelihood gated by the membership indicator of the original space.
std::pair<Prior, Likelihood> extend_to_superspace(const Prior& prior, const Likelihood& lh,
                                                  Likelihood::SupportOracle membership);

}  // namespace effbayes
