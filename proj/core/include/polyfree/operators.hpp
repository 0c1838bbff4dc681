#pragma once

#include <functional>
#include <gmpxx.h>
#include <optional>
#include <vector>

#include "polyfree/error.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/rational.hpp"

namespace polyfree {

/// Formal antiderivative vanishing at 0 (X^n -> X^{n+1}/(n+1)), iterated
/// `times` times. Characteristic-zero fields only.
template <FieldElement F>
Polynomial<F> antiderivative(const Polynomial<F>& P, int times = 1) {
    if (times < 1) throw PreconditionError("antiderivative iteration count must be positive");
    if (P.is_zero()) return P;
    if (characteristic(P.leading()) != 0)
        throw PreconditionError("formal antiderivative needs characteristic zero");
    Polynomial<F> cur = P;
    for (int t = 0; t < times; ++t) {
        const F zero = zero_like(cur.leading());
        std::vector<F> c;
        c.reserve(static_cast<std::size_t>(cur.degree()) + 2);
        c.push_back(zero);
        for (int i = 0; i <= cur.degree(); ++i)
            c.push_back(cur.coefficient(i) / int_like(zero, i + 1));
        cur = Polynomial<F>(std::move(c));
    }
    return cur;
}

/// P Q' - P' Q.
template <FieldElement F>
Polynomial<F> wronskian(const Polynomial<F>& P, const Polynomial<F>& Q) {
    return P * derivative(Q) - derivative(P) * Q;
}

namespace detail {

/// det of the rows (P^(i), Q^(i)) and (P^(j), Q^(j)).
template <FieldElement F>
Polynomial<F> derivative_det(const std::vector<Polynomial<F>>& dp,
                             const std::vector<Polynomial<F>>& dq, int i, int j) {
    return dp[static_cast<std::size_t>(i)] * dq[static_cast<std::size_t>(j)] -
           dq[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(j)];
}

template <FieldElement F>
std::vector<Polynomial<F>> derivative_ladder(const Polynomial<F>& P, int upto) {
    std::vector<Polynomial<F>> out;
    out.reserve(static_cast<std::size_t>(upto) + 1);
    Polynomial<F> cur = P;
    for (int i = 0; i <= upto; ++i) {
        out.push_back(cur);
        cur = derivative(cur);
    }
    return out;
}

} // namespace detail

/// n-th derivative of the Wronskian via the full binomial expansion
/// sum_i C(n,i) det(P^(i), Q^(i); P^(n+1-i), Q^(n+1-i)).
template <FieldElement F>
Polynomial<F> wronskian_nth_derivative_binomial(const Polynomial<F>& P, const Polynomial<F>& Q,
                                                int n) {
    if (n < 0) throw PreconditionError("derivative order must be nonnegative");
    if (n > 62) throw DegreeCapError("binomial expansion limited to n <= 62");
    if (P.is_zero() || Q.is_zero()) return Polynomial<F>();
    if (characteristic(P.leading()) != 0)
        throw PreconditionError("expansion stated for characteristic zero");
    auto dp = detail::derivative_ladder(P, n + 1);
    auto dq = detail::derivative_ladder(Q, n + 1);
    Polynomial<F> acc;
    const F one = one_like(P.leading());
    for (int i = 0; i <= n; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        acc = acc + detail::derivative_det(dp, dq, i, n + 1 - i) * int_like(one, b.get_si());
    }
    return acc;
}

/// Coefficients of the shortened Wronskian derivative expansion, derived by
/// solving against the iterated derivative rather than assumed. entry(n, i)
/// multiplies det(P^(i), Q^(i); P^(n+1-i), Q^(n+1-i)); the effective index
/// range is i <= floor(n/2), because for odd n the i = (n+1)/2 determinant has
/// equal rows and vanishes identically. The derived values come out as the
/// ballot numbers C(n,i) - C(n,i-1), i.e. the Catalan triangle read along
/// (n-i, i); in particular entry(2m, m) is the m-th Catalan number.
class CatalanTriangle {
public:
    int max_index() const { return static_cast<int>(rows_.size()) - 1; }

    const mpz_class& entry(int n, int i) const;

    const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }

private:
    friend CatalanTriangle derive_catalan_coefficients(int n_max);
    std::vector<std::vector<mpz_class>> rows_; // rows_[n][i], i <= floor(n/2)
};

/// Solves, for each n <= n_max, for the unique coefficient vector making the
/// short expansion agree with the iterated derivative on high-degree monomial
/// pairs. Throws when the system is underdetermined or inconsistent, or when
/// a solved value is not a nonnegative integer.
CatalanTriangle derive_catalan_coefficients(int n_max);

/// n-th derivative of the Wronskian via the shortened expansion with the
/// derived coefficient table (which must be populated through n).
template <FieldElement F>
Polynomial<F> wronskian_nth_derivative_catalan(const Polynomial<F>& P, const Polynomial<F>& Q,
                                               int n, const CatalanTriangle& table) {
    if (n < 0) throw PreconditionError("derivative order must be nonnegative");
    if (n > table.max_index())
        throw PreconditionError("coefficient table not populated through n = " +
                                std::to_string(n));
    if (P.is_zero() || Q.is_zero()) return Polynomial<F>();
    if (characteristic(P.leading()) != 0)
        throw PreconditionError("expansion stated for characteristic zero");
    auto dp = detail::derivative_ladder(P, n + 1);
    auto dq = detail::derivative_ladder(Q, n + 1);
    Polynomial<F> acc;
    const F one = one_like(P.leading());
    for (int i = 0; i <= n / 2; ++i) {
        long c = table.entry(n, i).get_si();
        acc = acc + detail::derivative_det(dp, dq, i, n + 1 - i) * int_like(one, c);
    }
    return acc;
}

/// Both sides of the pencil criterion at one instance: `wronskian_side` is
/// "x is a (k-1)-fold root of PQ' - P'Q" (by repeated division),
/// `pencil_side` is "the two derivative vectors up to order k-1 at x are
/// colinear", i.e. some nontrivial lambda P + mu Q has x as a k-fold root.
struct PencilVerdict {
    bool wronskian_side;
    bool pencil_side;
};

template <FieldElement F>
PencilVerdict lemma35_forward_and_back(const Polynomial<F>& P, const Polynomial<F>& Q,
                                       const F& x, int k) {
    if (k < 2) throw PreconditionError("k must be at least 2");
    if (evaluate(P, x).is_zero() && evaluate(Q, x).is_zero())
        throw PreconditionError("P and Q share the root x: hypothesis violated");

    Polynomial<F> w = wronskian(P, Q);
    bool lhs = w.is_zero() || multiplicity_at(w, x) >= k - 1;

    std::vector<F> pv, qv;
    Polynomial<F> dp = P, dq = Q;
    for (int i = 0; i < k; ++i) {
        pv.push_back(evaluate(dp, x));
        qv.push_back(evaluate(dq, x));
        dp = derivative(dp);
        dq = derivative(dq);
    }
    bool rhs = true;
    for (int i = 0; i < k && rhs; ++i)
        for (int j = i + 1; j < k && rhs; ++j)
            if (!(pv[static_cast<std::size_t>(i)] * qv[static_cast<std::size_t>(j)] -
                  pv[static_cast<std::size_t>(j)] * qv[static_cast<std::size_t>(i)])
                     .is_zero())
                rhs = false;
    return {lhs, rhs};
}

/// Callable view of a linear map on polynomials, optionally restricted to
/// inputs of bounded degree (e.g. when backed by a truncated matrix).
template <FieldElement F>
struct LinearMapOnPolys {
    std::function<Polynomial<F>(const Polynomial<F>&)> fn;
    std::optional<int> degree_bound;

    Polynomial<F> operator()(const Polynomial<F>& P) const {
        if (degree_bound && P.degree() > *degree_bound)
            throw DegreeCapError("map applied beyond its truncation degree " +
                                 std::to_string(*degree_bound));
        return fn(P);
    }
};

/// f(1) f(int P)' - f(1)' f(int P); the degree-lowering transform used to
/// push k-fold-root preservation down to k-1.
template <FieldElement F>
Polynomial<F> tilde_f(const LinearMapOnPolys<F>& f, const Polynomial<F>& P) {
    if (P.is_zero()) return P;
    Polynomial<F> f1 = f(Polynomial<F>(one_like(P.leading())));
    Polynomial<F> fi = f(antiderivative(P));
    return f1 * derivative(fi) - derivative(f1) * fi;
}

/// f1_of_1 * [Q P - Q' (int P) + Q'' (int^2 P) - ...]; the sum stops at
/// i = deg Q since higher derivatives of Q vanish.
template <FieldElement F>
Polynomial<F> h_q(const Polynomial<F>& f1_of_1, const Polynomial<F>& Q, const Polynomial<F>& P) {
    if (Q.is_zero() || P.is_zero()) return Polynomial<F>();
    Polynomial<F> sum;
    Polynomial<F> dq = Q;
    Polynomial<F> ip = P; // int^i P
    bool negative = false;
    for (int i = 0; i <= Q.degree(); ++i) {
        Polynomial<F> term = dq * ip;
        sum = negative ? sum - term : sum + term;
        negative = !negative;
        dq = derivative(dq);
        if (dq.is_zero()) break;
        ip = antiderivative(ip);
    }
    return f1_of_1 * sum;
}

/// Verifies f1(1) h_Q(P)' - f1(1)' h_Q(P) == f1(1)^2 Q P' on one instance.
/// An algebraic identity: any false return is a defect.
template <FieldElement F>
bool hq_identity_check(const Polynomial<F>& f1_of_1, const Polynomial<F>& Q,
                       const Polynomial<F>& P) {
    Polynomial<F> h = h_q(f1_of_1, Q, P);
    Polynomial<F> lhs = f1_of_1 * derivative(h) - derivative(f1_of_1) * h;
    Polynomial<F> rhs = f1_of_1 * f1_of_1 * Q * derivative(P);
    return lhs == rhs;
}

} // namespace polyfree
