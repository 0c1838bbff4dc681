#pragma once

#include <iosfwd>
#include <string>

#include "polyfree/error.hpp"
#include "polyfree/rational.hpp"

namespace polyfree {

/// Element u + v*sqrt(d) of the quadratic field Q(sqrt d). The discriminant d
/// must be a squarefree integer different from 0 and 1, which guarantees a
/// genuine degree-2 extension; it is validated on construction and must match
/// between operands of any binary operation.
class Quadratic {
public:
    Quadratic(Rational u, Rational v, long long d);

    /// Embeds a rational into Q(sqrt d).
    static Quadratic from_rational(const Rational& u, long long d) {
        return Quadratic(u, Rational(), d);
    }
    /// sqrt(d) itself.
    static Quadratic surd(long long d) { return Quadratic(Rational(), Rational(1), d); }

    const Rational& rational_part() const { return u_; }
    const Rational& surd_part() const { return v_; }
    long long discriminant() const { return d_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return u_.is_one() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    /// The conjugation u + v*sqrt(d) -> u - v*sqrt(d); the nontrivial element
    /// of the automorphism group of Q(sqrt d) over Q.
    Quadratic conjugate() const { return Quadratic(u_, -v_, d_, unchecked_tag{}); }

    /// Field norm u^2 - d v^2; zero exactly for the zero element.
    Rational norm() const { return u_ * u_ - Rational(d_) * v_ * v_; }

    Quadratic operator-() const { return Quadratic(-u_, -v_, d_, unchecked_tag{}); }
    Quadratic& operator+=(const Quadratic& o);
    Quadratic& operator-=(const Quadratic& o);
    Quadratic& operator*=(const Quadratic& o);
    Quadratic& operator/=(const Quadratic& o);

    friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
    friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
    friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
    friend Quadratic operator/(Quadratic a, const Quadratic& b) { return a /= b; }

    friend bool operator==(const Quadratic& a, const Quadratic& b) {
        return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Quadratic& a, const Quadratic& b) { return !(a == b); }

    Quadratic inverse() const;

    /// "(u+v*s)" with s standing for sqrt(d).
    std::string to_string() const;

private:
    struct unchecked_tag {};
    Quadratic(Rational u, Rational v, long long d, unchecked_tag)
        : u_(std::move(u)), v_(std::move(v)), d_(d) {}

    void check_same_field(const Quadratic& o) const;

    Rational u_;
    Rational v_;
    long long d_;
};

std::ostream& operator<<(std::ostream& os, const Quadratic& z);

/// True when d is a valid quadratic-field discriminant for this library:
/// squarefree and not 0 or 1.
bool is_valid_discriminant(long long d);

inline Quadratic conjugate(const Quadratic& z) { return z.conjugate(); }

inline Quadratic zero_like(const Quadratic& z) {
    return Quadratic::from_rational(Rational(), z.discriminant());
}
inline Quadratic one_like(const Quadratic& z) {
    return Quadratic::from_rational(Rational(1), z.discriminant());
}
inline Quadratic int_like(const Quadratic& z, long long n) {
    return Quadratic::from_rational(Rational(n), z.discriminant());
}
inline unsigned long long characteristic(const Quadratic&) { return 0; }
inline std::string to_coeff_string(const Quadratic& z) { return z.to_string(); }

/// Deterministic total order ((u, v) lexicographic) used when listing elements.
inline bool field_less(const Quadratic& a, const Quadratic& b) {
    if (a.rational_part() != b.rational_part()) return a.rational_part() < b.rational_part();
    return a.surd_part() < b.surd_part();
}

} // namespace polyfree
