#include "effbayes/interval.hpp"

#include <algorithm>

#include "effbayes/errors.hpp"

namespace effbayes {

Enclosure::Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error("enclosure with hi < lo");
}

Enclosure Enclosure::meet(const Enclosure& o) const {
    Rational l = max(lo, o.lo);
    Rational h = min(hi, o.hi);
    if (h < l) throw Error("enclosure intersection is empty (oracle returned inconsistent bounds)");
    return Enclosure(l, h);
}

Enclosure add(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo + b.lo, a.hi + b.hi);
}

Enclosure sub(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo - b.hi, a.hi - b.lo);
}

Enclosure mul(const Enclosure& a, const Enclosure& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = min(min(p1, p2), min(p3, p4));
    Rational hi = max(max(p1, p2), max(p3, p4));
    return Enclosure(lo, hi);
}

Enclosure div(const Enclosure& a, const Enclosure& b) {
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0) throw DivisionByIntervalContainingZero();
    return mul(a, Enclosure(Rational(1) / b.hi, Rational(1) / b.lo));
}

Enclosure emin(const Enclosure& a, const Enclosure& b) {
    return Enclosure(min(a.lo, b.lo), min(a.hi, b.hi));
}

Enclosure emax(const Enclosure& a, const Enclosure& b) {
    return Enclosure(max(a.lo, b.lo), max(a.hi, b.hi));
}

Enclosure eabs(const Enclosure& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return Enclosure(-a.hi, -a.lo);
    return Enclosure(Rational(0), max(-a.lo, a.hi));
}

Enclosure clamp01(const Enclosure& a) {
    Rational lo = max(Rational(0), min(Rational(1), a.lo));
    Rational hi = max(Rational(0), min(Rational(1), a.hi));
    return Enclosure(lo, hi);
}

namespace {

// Dyadic z/2^m with z = floor(sqrt(a * 4^m)): a certified lower bound of sqrt(a).
Rational sqrt_lower(const Rational& a, unsigned m) {
    if (a.sign() < 0) throw Error("sqrt of negative rational");
    // floor(a * 4^m) = floor(num * 4^m / den)
    mpz_class scaled_num = a.numerator();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 2 * m);
    mpz_class floored;
    mpz_fdiv_q(floored.get_mpz_t(), scaled_num.get_mpz_t(), a.denominator().get_mpz_t());
    mpz_class z;
    mpz_sqrt(z.get_mpz_t(), floored.get_mpz_t());
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), m);
    return Rational(z, den);
}

// (z+1)/2^m with z = floor(sqrt(ceil(a * 4^m))): a certified upper bound.
Rational sqrt_upper(const Rational& a, unsigned m) {
    mpz_class scaled_num = a.numerator();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), 2 * m);
    mpz_class ceiled;
    mpz_cdiv_q(ceiled.get_mpz_t(), scaled_num.get_mpz_t(), a.denominator().get_mpz_t());
    mpz_class z;
    mpz_sqrt(z.get_mpz_t(), ceiled.get_mpz_t());
    z += 1;
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), m);
    return Rational(z, den);
}

}  // namespace

Enclosure sqrt_enclosure(const Enclosure& a, unsigned precision_bits) {
    if (a.lo.sign() < 0) throw Error("sqrt enclosure: interval dips below 0");
    unsigned m = precision_bits + 1;  // each endpoint contributes <= 2^-(m) error
    Rational lo = sqrt_lower(a.lo, m);
    Rational hi = sqrt_upper(a.hi, m);
    if (hi < lo) hi = lo;  // can only happen for exact squares at coarse m
    return Enclosure(lo, hi);
}

Enclosure nth_root_enclosure(const Rational& a, unsigned k, unsigned precision_bits) {
    if (k == 0) throw Error("0th root");
    if (a.sign() < 0) throw Error("root of negative rational");
    unsigned m = precision_bits + 1;
    // floor(root_k(a * 2^(k m))) / 2^m and (that + 1)/2^m bracket root_k(a).
    mpz_class scaled = a.numerator();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * m);
    mpz_class floored;
    mpz_fdiv_q(floored.get_mpz_t(), scaled.get_mpz_t(), a.denominator().get_mpz_t());
    mpz_class zlo;
    mpz_root(zlo.get_mpz_t(), floored.get_mpz_t(), k);

    mpz_class ceiled;
    mpz_cdiv_q(ceiled.get_mpz_t(), scaled.get_mpz_t(), a.denominator().get_mpz_t());
    mpz_class zhi;
    mpz_root(zhi.get_mpz_t(), ceiled.get_mpz_t(), k);
    zhi += 1;

    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), m);
    return Enclosure(Rational(zlo, den), Rational(zhi, den));
}

}  // namespace effbayes
