#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace effbayes {

/// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
/// This is the only scalar type in the library; doubles appear solely in CSV
/// renderings produced by decimal_string().
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a/b" or "a" with optional sign; throws Error on junk.
    static Rational parse(std::string_view text);

    /// 2^e for any integer e.
    static Rational pow2(long e);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return mpz_class(v_.get_num()); }
    mpz_class denominator() const { return mpz_class(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational pow(unsigned long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "num/den", or just "num" for integers.
    std::string to_string() const;

    /// Deterministic decimal rendering with `sig` significant digits,
    /// round-half-away-from-zero. Used only for CSV output.
    std::string decimal_string(int sig = 12) const;

    /// Lossy; diagnostics only.
    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n choose k as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// base^e for exact integers.
mpz_class int_pow(unsigned long base, unsigned long e);

}  // namespace effbayes
