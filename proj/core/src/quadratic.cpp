#include "polyfree/quadratic.hpp"

#include <ostream>

namespace polyfree {

bool is_valid_discriminant(long long d) {
    if (d == 0 || d == 1) return false;
    long long m = d < 0 ? -d : d;
    for (long long q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
        while (m % q == 0) m /= q;
    }
    return true;
}

Quadratic::Quadratic(Rational u, Rational v, long long d)
    : u_(std::move(u)), v_(std::move(v)), d_(d) {
    if (!is_valid_discriminant(d))
        throw PreconditionError("discriminant must be a squarefree integer != 0, 1; got " +
                                std::to_string(d));
}

void Quadratic::check_same_field(const Quadratic& o) const {
    if (d_ != o.d_)
        throw FieldMismatchError("mixing Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " +
                                 std::to_string(o.d_) + ")");
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
    check_same_field(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
    check_same_field(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
    check_same_field(o);
    // (u1 + v1 s)(u2 + v2 s) = u1 u2 + d v1 v2 + (u1 v2 + v1 u2) s
    Rational u = u_ * o.u_ + Rational(d_) * v_ * o.v_;
    Rational v = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

Quadratic Quadratic::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw DivisionByZeroError("inverse of zero in Q(sqrt d)");
    return Quadratic(u_ / n, -v_ / n, d_, unchecked_tag{});
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
    check_same_field(o);
    *this *= o.inverse();
    return *this;
}

std::string Quadratic::to_string() const {
    std::string out = "(" + u_.to_string();
    if (v_.sign() < 0)
        out += "-" + (-v_).to_string();
    else
        out += "+" + v_.to_string();
    out += "*s)";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Quadratic& z) {
    return os << z.to_string();
}

} // namespace polyfree
