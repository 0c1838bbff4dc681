#pragma once

#include <type_traits>

#include "polyfree/heights.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/prime_field.hpp"
#include "polyfree/quadratic.hpp"
#include "polyfree/rational.hpp"
#include "polyfree/rng.hpp"

namespace polyfree {

/// Random rational with |numerator| <= max_num and denominator <= max_den.
inline Rational random_rational(SplitMix64& rng, long long max_num = 9, long long max_den = 4) {
    return Rational(rng.next_in(-max_num, max_num), rng.next_in(1, max_den));
}

/// Random element in the same field as `like`, with small height.
template <FieldElement F>
F random_element(SplitMix64& rng, const F& like, long long max_num = 9, long long max_den = 4) {
    if constexpr (std::is_same_v<F, Rational>) {
        (void)like;
        return random_rational(rng, max_num, max_den);
    } else if constexpr (std::is_same_v<F, Quadratic>) {
        Rational u = random_rational(rng, max_num, max_den);
        Rational v = random_rational(rng, max_num, max_den);
        return Quadratic(u, v, like.discriminant());
    } else {
        return Fp(static_cast<long long>(rng.next_below(like.modulus())), like.modulus());
    }
}

/// Random polynomial of degree <= max_degree (never the zero polynomial).
template <FieldElement F>
Polynomial<F> random_polynomial(SplitMix64& rng, const F& like, int max_degree,
                                long long max_num = 9, long long max_den = 4) {
    const int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree) + 1));
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c.push_back(random_element(rng, like, max_num, max_den));
    Polynomial<F> p{std::move(c)};
    if (p.is_zero()) return Polynomial<F>(one_like(like));
    return p;
}

/// Deterministic grid of field points ordered by growing height, for
/// structured probes. Over Q(sqrt d) the grid alternates rational points and
/// rational multiples of sqrt(d); over F_p it cycles the residues.
template <FieldElement F>
F nth_grid_point(const F& like, std::size_t idx) {
    if constexpr (std::is_same_v<F, Rational>) {
        (void)like;
        return nth_rational(idx);
    } else if constexpr (std::is_same_v<F, Quadratic>) {
        Rational r = nth_rational(idx / 2);
        if (idx % 2 == 0) return Quadratic::from_rational(r, like.discriminant());
        return Quadratic(Rational(), r, like.discriminant());
    } else {
        return Fp(static_cast<long long>(idx % like.modulus()), like.modulus());
    }
}

} // namespace polyfree
