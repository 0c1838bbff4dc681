#pragma once

#include <string>
#include <type_traits>

#include "polyfree/error.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/quadratic.hpp"

namespace polyfree {

/// Field automorphism fixing Q: the identity everywhere, or conjugation on a
/// quadratic field.
enum class Automorphism { identity, conjugation };

inline Automorphism compose(Automorphism a, Automorphism b) {
    return a == b ? Automorphism::identity : Automorphism::conjugation;
}

inline std::string to_string(Automorphism a) {
    return a == Automorphism::identity ? "id" : "conj";
}

template <FieldElement F>
F apply(Automorphism sigma, const F& x) {
    if (sigma == Automorphism::identity) return x;
    if constexpr (std::is_same_v<F, Quadratic>) {
        return x.conjugate();
    } else {
        throw PreconditionError("conjugation is only defined over quadratic fields");
    }
}

/// Coefficientwise application of sigma.
template <FieldElement F>
Polynomial<F> apply(Automorphism sigma, const Polynomial<F>& P) {
    if (sigma == Automorphism::identity) return P;
    std::vector<F> c;
    c.reserve(P.coefficients().size());
    for (const F& x : P.coefficients()) c.push_back(apply(sigma, x));
    return Polynomial<F>(std::move(c));
}

/// Coefficientwise conjugation of a polynomial over Q(sqrt d).
inline Polynomial<Quadratic> apply_sigma(const Polynomial<Quadratic>& P) {
    return apply(Automorphism::conjugation, P);
}

} // namespace polyfree
