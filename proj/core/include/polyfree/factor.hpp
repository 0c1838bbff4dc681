#pragma once

#include <utility>
#include <vector>

#include "polyfree/polynomial.hpp"
#include "polyfree/rational.hpp"

namespace polyfree {

/// Hard cap on the degree accepted by the Kronecker factorization routine
/// (exponential search; used as an exact cross-validation oracle only).
inline constexpr int kKroneckerDegreeCap = 12;

/// P = leading * prod parts[i].first ^ parts[i].second, with monic squarefree
/// pairwise-coprime parts listed by ascending multiplicity.
struct SquarefreeDecomposition {
    Rational leading;
    std::vector<std::pair<Polynomial<Rational>, int>> parts;
};

SquarefreeDecomposition squarefree_decomposition(const Polynomial<Rational>& P);

/// Monic product of the distinct irreducible factors of P, i.e. P / gcd(P, P').
Polynomial<Rational> squarefree_part(const Polynomial<Rational>& P);

/// All rational roots of P with exact multiplicities, sorted ascending.
/// Candidates come from divisors of the cleared leading/constant coefficients;
/// multiplicities from repeated exact division. P must be nonzero.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial<Rational>& P);

/// P = unit * prod factors[i].first ^ factors[i].second with monic irreducible
/// factors, sorted by (degree, coefficient) for deterministic output.
struct Factorization {
    Rational unit;
    std::vector<std::pair<Polynomial<Rational>, int>> factors;
};

/// Exact factorization over Q: squarefree decomposition, then Kronecker
/// interpolation on each squarefree part. Throws DegreeCapError above the cap.
Factorization factor_over_q(const Polynomial<Rational>& P, int degree_cap = kKroneckerDegreeCap);

} // namespace polyfree
