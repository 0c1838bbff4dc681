#pragma once

#include <optional>
#include <vector>

#include "polyfree/factor.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/quadratic.hpp"
#include "polyfree/rational.hpp"

namespace polyfree {

enum class RootSearchMethod { rational_root_theorem, norm_polynomial_reduction };

template <FieldElement F>
struct RootSearchReport {
    std::vector<F> roots; // each evaluates to exactly zero under the input
    RootSearchMethod method;
};

/// All roots of P in Q (multiplicities dropped), sorted ascending.
RootSearchReport<Rational> roots_in_q(const Polynomial<Rational>& P);

/// All roots of P in Q(sqrt d), found by factoring the norm polynomial
/// P * sigma(P) over Q and testing which linear/quadratic factors contribute
/// roots that lie in the field and satisfy P. The norm degree must stay within
/// the Kronecker cap.
RootSearchReport<Quadratic> roots_in_quadratic(const Polynomial<Quadratic>& P,
                                               int degree_cap = kKroneckerDegreeCap);

/// sqrt of a nonnegative rational when it is itself rational.
std::optional<Rational> rational_sqrt(const Rational& r);

struct LambdaSearchResult {
    std::optional<Rational> lambda; // first lambda with P + lambda*Q rootless over Q
    long long height_bound;         // the cap that was searched (echoed on exhaustion)
};

/// Searches lambda by increasing height |num| + den for a value making
/// P + lambda*Q free of rational roots. Requires gcd(P, Q) constant and
/// max(deg P, deg Q) >= 2. Exhaustion is reported, never treated as a
/// disproof of existence.
LambdaSearchResult lemma42_lambda_search(const Polynomial<Rational>& P,
                                         const Polynomial<Rational>& Q,
                                         long long height_bound);

/// Outcome of the codimension-1 subspace analysis: either the unique x with
/// every basis element divisible by (X - x), or an element of the span with
/// no rational root.
struct Codim1Analysis {
    std::optional<Rational> point;
    std::optional<Polynomial<Rational>> witness;
};

/// Analyzes a codimension-1 subspace of the degree-<= n space over Q, given by
/// an independent basis of n polynomials. Follows the degree-<= 1 sub-line
/// route; on divisibility failure searches the span for a rational-rootless
/// witness.
Codim1Analysis analyze_codim1_subspace(const std::vector<Polynomial<Rational>>& basis, int n);

} // namespace polyfree
