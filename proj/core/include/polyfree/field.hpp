#pragma once

#include <concepts>
#include <string>

namespace polyfree {

/// An exact field element type. Elements carry their own field context (the
/// discriminant d for Q(sqrt d), the modulus p for F_p), so new constants are
/// made "like" an existing element via zero_like / one_like / int_like.
template <typename F>
concept FieldElement = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<F>;
    { one_like(a) } -> std::convertible_to<F>;
    { int_like(a, 1LL) } -> std::convertible_to<F>;
    { characteristic(a) } -> std::convertible_to<unsigned long long>;
    { to_coeff_string(a) } -> std::convertible_to<std::string>;
};

} // namespace polyfree
