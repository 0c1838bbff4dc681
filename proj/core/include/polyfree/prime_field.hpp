#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "polyfree/error.hpp"

namespace polyfree {

/// Element of the prime field F_p, stored as a residue in [0, p). The modulus
/// travels with the element and must match between operands. Intended for
/// desk-scale moduli (identities are checked over small primes), not for
/// cryptographic sizes.
class Fp {
public:
    Fp(long long value, std::uint64_t p);

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, unchecked_tag{}); }
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    std::string to_string() const { return std::to_string(v_); }

private:
    struct unchecked_tag {};
    Fp(std::uint64_t v, std::uint64_t p, unchecked_tag) : v_(v), p_(p) {}

    void check_same_field(const Fp& o) const;

    std::uint64_t v_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

bool is_prime_u64(std::uint64_t n);

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Fp int_like(const Fp& x, long long n) { return Fp(n, x.modulus()); }
inline unsigned long long characteristic(const Fp& x) { return x.modulus(); }
inline std::string to_coeff_string(const Fp& x) { return x.to_string(); }
inline bool field_less(const Fp& a, const Fp& b) { return a.residue() < b.residue(); }

} // namespace polyfree
