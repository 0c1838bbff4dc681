#include "polyfree/prime_field.hpp"

#include <ostream>

namespace polyfree {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t q = 11; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

Fp::Fp(long long value, std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r);
}

void Fp::check_same_field(const Fp& o) const {
    if (p_ != o.p_)
        throw FieldMismatchError("mixing F_" + std::to_string(p_) + " with F_" +
                                 std::to_string(o.p_));
}

Fp& Fp::operator+=(const Fp& o) {
    check_same_field(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    check_same_field(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    check_same_field(o);
    v_ = static_cast<std::uint64_t>((static_cast<__uint128_t>(v_) * o.v_) % p_);
    return *this;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc(1, p_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (v, p).
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return Fp(t, p_);
}

Fp& Fp::operator/=(const Fp& o) {
    check_same_field(o);
    *this *= o.inverse();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.to_string();
}

} // namespace polyfree
