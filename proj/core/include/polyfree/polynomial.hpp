#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "polyfree/error.hpp"
#include "polyfree/field.hpp"

namespace polyfree {

/// Dense univariate polynomial over an exact field. Coefficient i is the
/// coefficient of X^i. Always normalized: the highest stored coefficient is
/// nonzero, and the zero polynomial stores nothing. All operations are pure;
/// values are immutable after construction and safe to share across threads.
template <FieldElement F>
class Polynomial {
public:
    /// Degree reported for the zero polynomial; strictly below every
    /// [attainable] degree, so deg(rem) < deg(divisor) holds with no special
    /// cases in Euclidean division.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() = default;

    explicit Polynomial(F constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }

    explicit Polynomial(std::vector<F> coefficients) : c_(std::move(coefficients)) {
        normalize();
    }

    static Polynomial monomial(F coeff, int degree) {
        if (coeff.is_zero()) return Polynomial();
        std::vector<F> c;
        c.reserve(degree + 1);
        for (int i = 0; i < degree; ++i) c.push_back(zero_like(coeff));
        c.push_back(std::move(coeff));
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

    const std::vector<F>& coefficients() const { return c_; }

    const F& leading() const {
        if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// Coefficient of X^i (zero beyond the degree). Undefined for the zero
    /// polynomial, whose coefficients carry no field context.
    F coefficient(int i) const {
        if (c_.empty()) throw Error("coefficient of the zero polynomial has no field context");
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_like(c_[0]);
        return c_[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        std::vector<F> c;
        c.reserve(c_.size());
        for (const F& x : c_) c.push_back(-x);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const F zero = zero_like(a.c_[0]);
        std::vector<F> c;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            F x = i < a.c_.size() ? a.c_[i] : zero;
            if (i < b.c_.size()) x = x + b.c_[i];
            c.push_back(std::move(x));
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        const F zero = zero_like(a.c_[0]);
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, zero);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const F& s) {
        if (a.is_zero() || s.is_zero()) return Polynomial();
        std::vector<F> c;
        c.reserve(a.c_.size());
        for (const F& x : a.c_) c.push_back(x * s);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const F& s, const Polynomial& a) { return a * s; }

    friend Polynomial operator/(const Polynomial& a, const F& s) {
        if (s.is_zero()) throw DivisionByZeroError("polynomial divided by zero scalar");
        if (a.is_zero()) return Polynomial();
        std::vector<F> c;
        c.reserve(a.c_.size());
        for (const F& x : a.c_) c.push_back(x / s);
        return Polynomial(std::move(c));
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        c_.shrink_to_fit();
    }

    std::vector<F> c_;
};

template <FieldElement F>
struct DivisionResult {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

/// Euclidean division: P = quotient * D + remainder with deg(remainder) < deg(D).
template <FieldElement F>
DivisionResult<F> euclid_div(const Polynomial<F>& P, const Polynomial<F>& D) {
    if (D.is_zero()) throw DivisionByZeroError("polynomial division by the zero polynomial");
    if (P.is_zero() || P.degree() < D.degree()) return {Polynomial<F>(), P};

    const F lead_inv = one_like(D.leading()) / D.leading();
    std::vector<F> rem(P.coefficients());
    const F zero = zero_like(D.leading());
    std::vector<F> quot(static_cast<std::size_t>(P.degree() - D.degree()) + 1, zero);

    for (int i = P.degree(); i >= D.degree(); --i) {
        F q = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - D.degree())] = q;
        for (int j = 0; j <= D.degree(); ++j) {
            std::size_t idx = static_cast<std::size_t>(i - D.degree() + j);
            rem[idx] = rem[idx] - q * D.coefficient(j);
        }
    }
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

template <FieldElement F>
Polynomial<F> operator/(const Polynomial<F>& P, const Polynomial<F>& D) {
    return euclid_div(P, D).quotient;
}

template <FieldElement F>
Polynomial<F> operator%(const Polynomial<F>& P, const Polynomial<F>& D) {
    return euclid_div(P, D).remainder;
}

template <FieldElement F>
bool divides(const Polynomial<F>& D, const Polynomial<F>& P) {
    if (D.is_zero()) return P.is_zero();
    return (P % D).is_zero();
}

/// Exact quotient; throws when D does not divide P.
template <FieldElement F>
Polynomial<F> exact_div(const Polynomial<F>& P, const Polynomial<F>& D) {
    auto [q, r] = euclid_div(P, D);
    if (!r.is_zero()) throw Error("exact_div: division leaves a remainder");
    return q;
}

template <FieldElement F>
Polynomial<F> monic(const Polynomial<F>& P) {
    if (P.is_zero()) throw DivisionByZeroError("monic of the zero polynomial");
    return P / P.leading();
}

/// Monic greatest common divisor; gcd(P, 0) = monic(P).
template <FieldElement F>
Polynomial<F> gcd(const Polynomial<F>& P, const Polynomial<F>& Q) {
    if (P.is_zero() && Q.is_zero()) throw Error("gcd(0, 0) is undefined");
    Polynomial<F> a = P, b = Q;
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = monic(b); // keeps intermediate coefficients small
    }
    return monic(a);
}

/// gcd of a family; zero members are skipped. At least one member nonzero.
template <FieldElement F>
Polynomial<F> gcd_all(const std::vector<Polynomial<F>>& polys) {
    Polynomial<F> g;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? monic(p) : gcd(g, p);
        if (g.degree() == 0) return g;
    }
    if (g.is_zero()) throw Error("gcd of a family of zero polynomials");
    return g;
}

template <FieldElement F>
Polynomial<F> derivative(const Polynomial<F>& P) {
    if (P.degree() <= 0) return Polynomial<F>();
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(P.degree()));
    for (int i = 1; i <= P.degree(); ++i)
        c.push_back(P.coefficient(i) * int_like(P.leading(), i));
    return Polynomial<F>(std::move(c));
}

template <FieldElement F>
Polynomial<F> nth_derivative(Polynomial<F> P, int n) {
    for (int i = 0; i < n && !P.is_zero(); ++i) P = derivative(P);
    return P;
}

template <FieldElement F>
F evaluate(const Polynomial<F>& P, const F& x) {
    F acc = zero_like(x);
    for (int i = P.degree(); i >= 0; --i) acc = acc * x + P.coefficient(i);
    return acc;
}

/// P(Q(X)), exact (Horner over polynomials).
template <FieldElement F>
Polynomial<F> compose(const Polynomial<F>& P, const Polynomial<F>& Q) {
    if (P.is_zero()) return Polynomial<F>();
    Polynomial<F> acc(P.leading());
    for (int i = P.degree() - 1; i >= 0; --i)
        acc = acc * Q + Polynomial<F>(P.coefficient(i));
    return acc;
}

template <FieldElement F>
Polynomial<F> pow(const Polynomial<F>& P, int e) {
    if (e < 0) throw PreconditionError("negative polynomial power");
    if (e == 0) {
        if (P.is_zero()) throw Error("0^0 for polynomials has no field context");
        return Polynomial<F>(one_like(P.leading()));
    }
    Polynomial<F> acc = P;
    for (int i = 1; i < e; ++i) acc = acc * P;
    return acc;
}

/// a*X + b.
template <FieldElement F>
Polynomial<F> linear_poly(const F& a, const F& b) {
    return Polynomial<F>(std::vector<F>{b, a});
}

/// X - x.
template <FieldElement F>
Polynomial<F> x_minus(const F& x) {
    return linear_poly(one_like(x), -x);
}

/// (X - x)^k.
template <FieldElement F>
Polynomial<F> root_power(const F& x, int k) {
    return pow(x_minus(x), k);
}

/// Multiplicity of x as a root of P (0 when P(x) != 0). P must be nonzero.
template <FieldElement F>
int multiplicity_at(const Polynomial<F>& P, const F& x) {
    if (P.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
    Polynomial<F> d = x_minus(x);
    Polynomial<F> cur = P;
    int m = 0;
    while (true) {
        auto [q, r] = euclid_div(cur, d);
        if (!r.is_zero()) return m;
        ++m;
        cur = std::move(q);
        if (cur.is_zero()) return m; // cannot happen for nonzero P, kept for safety
    }
}

} // namespace polyfree
