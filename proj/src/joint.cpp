#include "effbayes/joint.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

JointMeasure::JointMeasure(Prior prior, Likelihood likelihood)
    : prior_(std::move(prior)), lh_(std::move(likelihood)) {
    if (prior_.space() != lh_.param_space())
        throw SpaceMismatch("prior on " + space_name(prior_.space()) + ", likelihood family on " +
                            space_name(lh_.param_space()));
}

Rational JointMeasure::rectangle(const ParameterEvent& A, const SampleString& sigma) const {
    if (prior_.is_atomic()) {
        Rational out(0);
        for (const auto& a : prior_.atoms()) {
            Tri t = A.membership(a.point);
            if (t == Tri::Undecided)
                throw UndecidableEvent("atom " + point_to_string(a.point) + " vs " + A.to_string());
            if (t == Tri::In) out += a.weight * lh_.eval(a.point, sigma);
        }
        return out;
    }
    // density prior on [0,1]: exact polynomial integral over the event
    if (!lh_.has_poly_form()) throw Error("density prior needs a polynomial-form likelihood family");
    if (!lh_.tree()->contains(sigma)) throw Error("string " + to_string(sigma) + " is not in the tree");
    Polynomial integrand = prior_.density() * lh_.poly_in_theta(sigma);
    if (std::holds_alternative<FullSpaceEvent>(A.shape())) {
        if (A.complemented()) return Rational(0);
        return integrand.integrate(Rational(0), Rational(1));
    }
    const auto* iv = std::get_if<IntervalUnionEvent>(&A.shape());
    if (!iv) throw UndecidableEvent("density priors support interval events only");
    IntervalUnion set = A.complemented() ? iv->set.complement() : iv->set;
    Rational out(0);
    for (const auto& part : set.parts()) out += integrand.integrate(part.lo, part.hi);
    return out;
}

Rational JointMeasure::pushforward_sample(const SampleString& sigma) const {
    return rectangle(ParameterEvent::full(), sigma);
}

SampleString JointMeasure::sample_path(const ParameterPoint& theta, size_t horizon, Rng& rng) const {
    if (lh_.support() && !lh_.support()(theta)) throw ZeroMassParameter();
    SampleString out;
    out.reserve(horizon);
    for (size_t i = 0; i < horizon; ++i) out.push_back(lh_.sample_step(theta, out, rng.next_unit()));
    return out;
}

std::pair<Prior, Likelihood> extend_to_superspace(const Prior& prior, const Likelihood& lh,
                                                  Likelihood::SupportOracle membership) {
    if (!prior.is_atomic()) throw Error("superspace extension is defined for atomic priors");
    return {prior, lh.with_support(std::move(membership))};
}

}  // namespace effbayes
