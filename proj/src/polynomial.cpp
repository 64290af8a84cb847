#include "effbayes/polynomial.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rational(0));
    trim();
}

void Polynomial::trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::bernstein_power(unsigned i, unsigned n) {
    if (i > n) throw Error("bernstein_power: i > n");
    // theta^i * sum_j C(n-i, j) (-theta)^j
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned j = 0; j + i <= n; ++j) {
        mpz_class b = binomial(n - i, j);
        Rational coef(b, mpz_class(1));
        if (j % 2 == 1) coef = -coef;
        c[i + j] = coef;
    }
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& t) const {
    Rational out(0);
    for (size_t j = c_.size(); j-- > 0;) out = out * t + c_[j];
    return out;
}

Enclosure Polynomial::eval_interval(const Enclosure& t) const {
    Enclosure out = Enclosure::exact(Rational(0));
    for (size_t j = c_.size(); j-- > 0;) out = add(mul(out, t), Enclosure::exact(c_[j]));
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) c[j] += c_[j];
    for (size_t j = 0; j < o.c_.size(); ++j) c[j] += o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j)
        for (size_t k = 0; k < o.c_.size(); ++k) c[j + k] += c_[j] * o.c_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& k) const {
    std::vector<Rational> c = c_;
    for (Rational& x : c) x *= k;
    return Polynomial(std::move(c));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
    // antiderivative evaluated at both ends
    Rational fa(0), fb(0);
    Rational pa = a, pb = b;
    for (size_t j = 0; j < c_.size(); ++j) {
        Rational k = c_[j] / Rational(static_cast<long>(j) + 1);
        fa += k * pa;
        fb += k * pb;
        pa *= a;
        pb *= b;
    }
    return fb - fa;
}

namespace {
bool certify_cell(const Polynomial& p, const Rational& lo, const Rational& hi, unsigned depth) {
    Enclosure e = p.eval_interval(Enclosure(lo, hi));
    if (e.lo.sign() >= 0) return true;
    if (p.eval(lo).sign() < 0 || p.eval(hi).sign() < 0) return false;
    if (depth == 0) return false;
    Rational mid = (lo + hi) / Rational(2);
    if (p.eval(mid).sign() < 0) return false;
    return certify_cell(p, lo, mid, depth - 1) && certify_cell(p, mid, hi, depth - 1);
}
}  // namespace

bool Polynomial::certify_nonnegative_on_unit(unsigned max_depth) const {
    return certify_cell(*this, Rational(0), Rational(1), max_depth);
}

}  // namespace effbayes
