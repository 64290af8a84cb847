#include "effbayes/rational.hpp"

#include <ostream>

#include "effbayes/errors.hpp"

namespace effbayes {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw Error("empty rational literal");
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (q.get_den() == 0) throw Error("rational with zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow2(long e) {
    mpz_class n = 1;
    if (e >= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(n, mpz_class(1));
    }
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(mpz_class(1), n);
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::string Rational::decimal_string(int sig) const {
    if (sig < 1) sig = 1;
    if (is_zero()) return "0";

    mpz_class num = numerator();
    mpz_class den = denominator();
    bool neg = sgn(num) < 0;
    if (neg) num = -num;

    // Decimal exponent e with 10^e <= num/den < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
    auto cmp_pow10 = [&](long k) {
        // sign of num/den - 10^k
        mpz_class p = 1;
        mpz_class lhs = num, rhs = den;
        if (k >= 0) {
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
            rhs *= p;
        } else {
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
            lhs *= p;
        }
        return cmp(lhs, rhs);
    };
    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;

    // Round num/den * 10^(sig-1-e) half away from zero.
    long shift = sig - 1 - e;
    mpz_class n = num, d = den, p;
    if (shift >= 0) {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        n *= p;
    } else {
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        d *= p;
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) ++q;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > sig) {
        // rounding carried into a new leading digit (e.g. 999.95 -> 1000)
        ++e;
        digits.resize(static_cast<size_t>(sig));
    }

    // Fixed-point form for moderate exponents, otherwise scientific.
    std::string out;
    if (e >= -4 && e < sig + 6) {
        if (e >= sig - 1) {
            out = digits + std::string(static_cast<size_t>(e - sig + 1), '0');
        } else if (e >= 0) {
            out = digits.substr(0, static_cast<size_t>(e + 1)) + "." + digits.substr(static_cast<size_t>(e + 1));
        } else {
            out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
        }
        // trim trailing zeros after a decimal point
        if (out.find('.') != std::string::npos) {
            size_t last = out.find_last_not_of('0');
            if (out[last] == '.') --last;
            out.resize(last + 1);
        }
    } else {
        out = digits.substr(0, 1);
        std::string rest = digits.substr(1);
        size_t last = rest.find_last_not_of('0');
        if (last != std::string::npos) out += "." + rest.substr(0, last + 1);
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class int_pow(unsigned long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

}  // namespace effbayes
