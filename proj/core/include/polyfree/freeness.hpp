#pragma once

#include <algorithm>
#include <optional>
#include <type_traits>
#include <vector>

#include "polyfree/factor.hpp"
#include "polyfree/hilbert.hpp"
#include "polyfree/linalg.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/prime_field.hpp"

namespace polyfree {

/// Verdict of a k-freeness test. When the polynomial is not k-free over Q the
/// witness is an irreducible factor whose k-th power divides it exactly; over
/// other fields only the boolean is reported.
template <FieldElement F>
struct KFreeVerdict {
    bool is_k_free;
    std::optional<Polynomial<F>> witness_factor;
};

namespace detail {

/// gcd(P, P', ..., P^(k-1)); nonconstant exactly when P is not k-free
/// (characteristic 0 or > k).
template <FieldElement F>
Polynomial<F> derivative_chain_gcd(const Polynomial<F>& P, int k) {
    std::vector<Polynomial<F>> chain;
    chain.reserve(static_cast<std::size_t>(k));
    Polynomial<F> cur = P;
    for (int j = 0; j < k; ++j) {
        chain.push_back(cur);
        cur = derivative(cur);
    }
    return gcd_all(chain);
}

template <FieldElement F>
void check_kfree_preconditions(const Polynomial<F>& P, int k) {
    if (P.is_zero()) throw PreconditionError("k-free test on the zero polynomial");
    if (k < 2) throw PreconditionError("k must be at least 2");
    unsigned long long c = characteristic(P.leading());
    if (c != 0 && c <= static_cast<unsigned long long>(k))
        throw PreconditionError("k-free test needs characteristic 0 or > k");
}

} // namespace detail

/// Tests whether P has no irreducible factor of multiplicity >= k, via the
/// derivative-chain gcd. Over Q a failing input also yields a witness factor
/// (extracted with the factorization oracle and re-verified by division).
template <FieldElement F>
KFreeVerdict<F> is_k_free(const Polynomial<F>& P, int k) {
    detail::check_kfree_preconditions(P, k);
    Polynomial<F> g = detail::derivative_chain_gcd(P, k);
    if (g.degree() == 0) return {true, std::nullopt};
    if constexpr (std::is_same_v<F, Rational>) {
        auto fac = factor_over_q(g);
        if (fac.factors.empty()) throw Error("nonconstant gcd with no factors");
        Polynomial<Rational> witness = fac.factors.front().first;
        if (!divides(pow(witness, k), P))
            throw Error("internal: witness^k does not divide the input");
        return {false, witness};
    } else {
        return {false, std::nullopt};
    }
}

namespace detail {

inline std::vector<Rational> field_roots(const Polynomial<Rational>& G) {
    std::vector<Rational> out;
    for (const auto& [r, mult] : rational_roots(G)) out.push_back(r);
    return out;
}

inline std::vector<Quadratic> field_roots(const Polynomial<Quadratic>& G) {
    return roots_in_quadratic(G).roots;
}

inline std::vector<Fp> field_roots(const Polynomial<Fp>& G) {
    const std::uint64_t p = G.leading().modulus();
    if (p > 100000) throw PreconditionError("root enumeration over F_p needs p <= 10^5");
    std::vector<Fp> out;
    for (std::uint64_t r = 0; r < p; ++r) {
        Fp x(static_cast<long long>(r), p);
        if (evaluate(G, x).is_zero()) out.push_back(x);
    }
    return out;
}

} // namespace detail

/// Exactly the field elements x with (X - x)^k dividing P, sorted in the
/// field's canonical order. Roots come from the derivative-chain gcd and each
/// candidate is confirmed by exact division.
template <FieldElement F>
std::vector<F> k_fold_roots(const Polynomial<F>& P, int k) {
    if (P.is_zero()) throw PreconditionError("k-fold roots of the zero polynomial");
    if (k < 1) throw PreconditionError("k must be at least 1");
    unsigned long long c = characteristic(P.leading());
    if (k >= 2 && c != 0 && c <= static_cast<unsigned long long>(k))
        throw PreconditionError("k-fold root extraction needs characteristic 0 or > k");
    Polynomial<F> g = k == 1 ? monic(P) : detail::derivative_chain_gcd(P, k);
    std::vector<F> out;
    if (g.degree() == 0) return out;
    for (const F& x : detail::field_roots(g))
        if (divides(root_power(x, k), P)) out.push_back(x);
    std::sort(out.begin(), out.end(), [](const F& a, const F& b) { return field_less(a, b); });
    return out;
}

/// P - (1/k)(X - x) P'. Vanishes identically exactly when kP = (X - x)P'.
template <FieldElement F>
Polynomial<F> tilde_p(const Polynomial<F>& P, const F& x, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (int_like(x, k).is_zero())
        throw PreconditionError("k vanishes in the coefficient field");
    if (P.is_zero()) return P;
    return P - (x_minus(x) * derivative(P)) / int_like(x, k);
}

/// Checks one instance of the pencil divisibility criterion: either
/// (X - x)^k already divides P, or among the supplied lambdas (pairwise
/// distinct, at least 1 + deg P of them) some lambda makes P + lambda(X-x)^k
/// k-free. A false return would disprove the criterion.
inline bool lemma32_check(const Polynomial<Rational>& P, const Rational& x, int k,
                          const std::vector<Rational>& lambdas) {
    std::vector<Rational> sorted = lambdas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("lambdas must be pairwise distinct");
    const int required = P.is_zero() ? 1 : 1 + P.degree();
    if (static_cast<int>(lambdas.size()) < required)
        throw PreconditionError("need at least 1 + deg P lambdas");

    const Polynomial<Rational> shift = root_power(x, k);
    if (divides(shift, P)) return true;
    for (const Rational& lambda : lambdas) {
        Polynomial<Rational> cand = P + shift * lambda;
        if (!cand.is_zero() && is_k_free(cand, k).is_k_free) return true;
    }
    return false;
}

/// Verifies, over F_p with k = p^e, that X^{2k} + lambda (X-x)^k equals
/// (X^2 + lambda^{1/k} (X-x))^k; the k-th root of lambda is lambda itself
/// because the Frobenius is the identity on the prime field.
inline bool charp_identity_check(std::uint64_t p, int e, const Fp& x, const Fp& lam) {
    if (!is_prime_u64(p)) throw PreconditionError("p must be prime");
    if (e < 1) throw PreconditionError("e must be positive");
    if (x.modulus() != p || lam.modulus() != p)
        throw FieldMismatchError("arguments not over F_p");
    long long k = 1;
    for (int i = 0; i < e; ++i) {
        k *= static_cast<long long>(p);
        if (k > 512) throw DegreeCapError("k = p^e exceeds the degree cap 512");
    }
    const Fp one(1, p);
    const Polynomial<Fp> x2 = Polynomial<Fp>::monomial(one, 2);
    Polynomial<Fp> lhs = Polynomial<Fp>::monomial(one, static_cast<int>(2 * k)) +
                         root_power(x, static_cast<int>(k)) * lam;
    Polynomial<Fp> rhs = pow(x2 + x_minus(x) * lam, static_cast<int>(k));
    return lhs == rhs;
}

/// Result of analyzing a codimension-k subspace: either the unique x making
/// the span equal to (X-x)^k * (degree <= n-k polynomials), or a k-free
/// element of the span witnessing that no such x exists.
struct SubspaceAnalysis {
    std::vector<Polynomial<Rational>> basis;
    std::optional<Rational> point;
    std::optional<Polynomial<Rational>> witness;
};

/// Follows the proof route: row-reduce the basis by leading monomial, inspect
/// the unique degree-<= k element of the span, then confirm divisibility of
/// every basis element. The witness search walks the pencil B + lambda * g,
/// which is guaranteed to hit a k-free element within 1 + deg B steps.
inline SubspaceAnalysis analyze_codim_k_subspace(const std::vector<Polynomial<Rational>>& basis,
                                                 int k, int n) {
    if (k < 2) throw PreconditionError("k must be at least 2");
    if (n < k) throw PreconditionError("degree bound below k");
    if (static_cast<int>(basis.size()) != n + 1 - k)
        throw PreconditionError("codimension-k basis in degree <= " + std::to_string(n) +
                                " must have exactly " + std::to_string(n + 1 - k) +
                                " elements");

    Matrix<Rational> rows;
    for (const auto& p : basis) {
        if (p.is_zero()) throw PreconditionError("zero polynomial in basis");
        if (p.degree() > n) throw PreconditionError("basis element exceeds the degree bound");
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational());
        for (int i = 0; i <= p.degree(); ++i)
            row[static_cast<std::size_t>(n - i)] = p.coefficient(i);
        rows.push_back(std::move(row));
    }
    if (linalg::echelonize(rows) != static_cast<int>(basis.size()))
        throw PreconditionError("basis is dependent or has the wrong codimension");

    SubspaceAnalysis out{basis, std::nullopt, std::nullopt};

    Polynomial<Rational> generator;
    for (const auto& row : rows) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational());
        for (int i = 0; i <= n; ++i)
            coeffs[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(n - i)];
        Polynomial<Rational> p(std::move(coeffs));
        if (p.is_zero()) continue;
        if (p.degree() < k) {
            // Nonzero of degree < k: k-free outright, cheapest certificate.
            out.witness = p;
            return out;
        }
        if (p.degree() == k) generator = p; // unique: echelon pivots are distinct
    }
    if (generator.is_zero())
        throw PreconditionError("no element of degree <= k in the span");

    // A monic degree-k polynomial fails to be k-free only when it is a pure
    // k-th power, whose sub-leading coefficient pins down the root.
    const Rational x = -generator.coefficient(k - 1) / Rational(k);
    if (generator != root_power(x, k)) {
        out.witness = generator;
        return out;
    }

    const Polynomial<Rational> divisor = root_power(x, k);
    const Polynomial<Rational>* failing = nullptr;
    for (const auto& b : basis) {
        if (!divides(divisor, b)) {
            failing = &b;
            break;
        }
    }
    if (!failing) {
        out.point = x;
        return out;
    }
    for (long long lambda = 0; lambda <= failing->degree() + 1; ++lambda) {
        Polynomial<Rational> cand = *failing + divisor * Rational(lambda);
        if (!cand.is_zero() && is_k_free(cand, k).is_k_free) {
            out.witness = cand;
            return out;
        }
    }
    throw Error("pencil search exhausted the divisibility bound without a k-free element");
}

} // namespace polyfree
