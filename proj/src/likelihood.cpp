#include "effbayes/likelihood.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

Likelihood Likelihood::custom(Backend b) {
    if (!b.tree || !b.eval || !b.sample_step) throw Error("likelihood backend incomplete");
    Likelihood lh;
    lh.backend_ = std::make_shared<Backend>(std::move(b));
    return lh;
}

Likelihood Likelihood::bernoulli_product() {
    Backend b;
    b.param_space = Space::UnitInterval;
    b.tree = SampleTree::cantor();
    b.eval = [](const ParameterPoint& theta, const SampleString& sigma) {
        const auto& q = std::get<UnitPoint>(theta).value;
        Rational out(1);
        for (Symbol s : sigma) out *= s ? q : Rational(1) - q;
        return out;
    };
    b.sample_step = [](const ParameterPoint& theta, const SampleString&, const Rational& u) -> Symbol {
        const auto& q = std::get<UnitPoint>(theta).value;
        return u < Rational(1) - q ? 0 : 1;
    };
    b.poly_in_theta = [](const SampleString& sigma) {
        unsigned n = static_cast<unsigned>(sigma.size());
        unsigned ones = 0;
        for (Symbol s : sigma) ones += (s ? 1 : 0);
        return Polynomial::bernstein_power(ones, n);
    };
    return custom(std::move(b));
}

Likelihood Likelihood::iid_simplex() {
    Backend b;
    b.param_space = Space::Simplex;
    b.tree = SampleTree::baire();
    b.eval = [](const ParameterPoint& theta, const SampleString& sigma) {
        const auto& t = std::get<SimplexPoint>(theta);
        Rational out(1);
        for (Symbol s : sigma) out *= t.coordinate(s);
        return out;
    };
    b.sample_step = [](const ParameterPoint& theta, const SampleString&, const Rational& u) -> Symbol {
        const auto& t = std::get<SimplexPoint>(theta);
        // least s with u < cum(s), cum(s) = 1 - mass_from(s+1); exact and
        // terminating since u < 1 and cum -> 1
        Symbol s = 0;
        for (;;) {
            Rational cum = Rational(1) - t.mass_from(s + 1);
            if (u < cum) return s;
            ++s;
        }
    };
    return custom(std::move(b));
}

Likelihood Likelihood::cantor_bitwise(const Rational& rate0, const Rational& rate1) {
    if (rate0.sign() < 0 || rate0 > Rational(1) || rate1.sign() < 0 || rate1 > Rational(1))
        throw Error("rates must be in [0,1]");
    Backend b;
    b.param_space = Space::Cantor;
    b.tree = SampleTree::cantor();
    Rational r0 = rate0, r1 = rate1;
    b.eval = [r0, r1](const ParameterPoint& theta, const SampleString& sigma) {
        const auto& c = std::get<CantorPoint>(theta);
        Rational out(1);
        for (size_t j = 0; j < sigma.size(); ++j) {
            Rational r = c.bit(j) ? r1 : r0;
            out *= sigma[j] ? r : Rational(1) - r;
        }
        return out;
    };
    b.sample_step = [r0, r1](const ParameterPoint& theta, const SampleString& prefix, const Rational& u) -> Symbol {
        const auto& c = std::get<CantorPoint>(theta);
        Rational r = c.bit(prefix.size()) ? r1 : r0;
        return u < Rational(1) - r ? 0 : 1;
    };
    return custom(std::move(b));
}

Likelihood Likelihood::with_support(SupportOracle oracle) const {
    Likelihood lh = *this;
    if (!support_) {
        lh.support_ = std::move(oracle);
        return lh;
    }
    SupportOracle prev = support_;
    SupportOracle next = std::move(oracle);
    lh.support_ = [prev, next](const ParameterPoint& p) { return prev(p) && next(p); };
    return lh;
}

namespace {
void check_space(Space expected, const ParameterPoint& theta) {
    if (space_of(theta) != expected)
        throw SpaceMismatch("parameter lives in " + space_name(space_of(theta)) + ", family wants " +
                            space_name(expected));
}
}  // namespace

Rational Likelihood::eval(const ParameterPoint& theta, const SampleString& sigma) const {
    check_space(backend_->param_space, theta);
    if (!backend_->tree->contains(sigma)) throw Error("string " + to_string(sigma) + " is not in the tree");
    if (support_ && !support_(theta)) return Rational(0);
    return backend_->eval(theta, sigma);
}

Polynomial Likelihood::poly_in_theta(const SampleString& sigma) const {
    if (!backend_->poly_in_theta) throw Error("family has no polynomial form in theta");
    return backend_->poly_in_theta(sigma);
}

Symbol Likelihood::sample_step(const ParameterPoint& theta, const SampleString& prefix, const Rational& u) const {
    check_space(backend_->param_space, theta);
    return backend_->sample_step(theta, prefix, u);
}

}  // namespace effbayes
