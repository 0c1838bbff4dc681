#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "polyfree/error.hpp"

namespace polyfree {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; zero is 0/1. Arithmetic is arbitrary precision (GMP).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}

    /// num/den, reduced. Throws DivisionByZeroError when den == 0.
    Rational(long long num, long long den);

    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(long e) const;

    /// |num| + den; the enumeration order used by the lambda searches.
    mpz_class height() const { return ::abs(v_.get_num()) + v_.get_den(); }

    /// "num/den", or just "num" for integers.
    std::string to_string() const;

private:
    mpq_class v_; // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational int_like(const Rational&, long long n) { return Rational(n); }
inline unsigned long long characteristic(const Rational&) { return 0; }
inline std::string to_coeff_string(const Rational& r) { return r.to_string(); }

/// Deterministic total order used when listing field elements.
inline bool field_less(const Rational& a, const Rational& b) { return a < b; }

} // namespace polyfree
