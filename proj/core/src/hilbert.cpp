#include "polyfree/hilbert.hpp"

#include <algorithm>

#include "polyfree/heights.hpp"
#include "polyfree/linalg.hpp"
#include "polyfree/rng.hpp"

namespace polyfree {

RootSearchReport<Rational> roots_in_q(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("root search in the zero polynomial");
    RootSearchReport<Rational> report{{}, RootSearchMethod::rational_root_theorem};
    for (const auto& [root, mult] : rational_roots(P)) report.roots.push_back(root);
    return report;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class num = r.numerator(), den = r.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

RootSearchReport<Quadratic> roots_in_quadratic(const Polynomial<Quadratic>& P, int degree_cap) {
    if (P.is_zero()) throw PreconditionError("root search in the zero polynomial");
    const long long d = P.leading().discriminant();
    RootSearchReport<Quadratic> report{{}, RootSearchMethod::norm_polynomial_reduction};

    // Split P = A + B*sqrt(d) with A, B over Q; the norm is A^2 - d*B^2.
    std::vector<Rational> ac, bc;
    ac.reserve(P.coefficients().size());
    bc.reserve(P.coefficients().size());
    for (const Quadratic& z : P.coefficients()) {
        ac.push_back(z.rational_part());
        bc.push_back(z.surd_part());
    }
    Polynomial<Rational> A(std::move(ac)), B(std::move(bc));
    Polynomial<Rational> norm = A * A - Rational(d) * B * B;
    if (norm.is_zero()) throw Error("norm polynomial vanished for a nonzero input");
    if (norm.degree() > degree_cap)
        throw DegreeCapError("norm polynomial degree " + std::to_string(norm.degree()) +
                             " exceeds the factorization cap " + std::to_string(degree_cap));

    const Quadratic zero = zero_like(P.leading());
    auto try_root = [&](const Quadratic& z) {
        if (evaluate(P, z).is_zero()) report.roots.push_back(z);
    };

    for (const auto& [factor, mult] : factor_over_q(norm, degree_cap).factors) {
        if (factor.degree() == 1) {
            try_root(Quadratic::from_rational(-factor.coefficient(0), d));
        } else if (factor.degree() == 2) {
            // X^2 - s X + t, roots s/2 +- w/2 sqrt(d) when s^2 - 4t = d w^2.
            Rational s = -factor.coefficient(1);
            Rational t = factor.coefficient(0);
            Rational disc = s * s - Rational(4) * t;
            auto w = rational_sqrt(disc / Rational(d));
            if (!w) continue;
            Rational half(1, 2);
            try_root(Quadratic(s * half, *w * half, d));
            try_root(Quadratic(s * half, -(*w * half), d));
        }
    }
    std::sort(report.roots.begin(), report.roots.end(), [](const auto& a, const auto& b) {
        return field_less(a, b);
    });
    report.roots.erase(std::unique(report.roots.begin(), report.roots.end()),
                       report.roots.end());
    return report;
}

LambdaSearchResult lemma42_lambda_search(const Polynomial<Rational>& P,
                                         const Polynomial<Rational>& Q,
                                         long long height_bound) {
    if (P.is_zero() || Q.is_zero())
        throw PreconditionError("lambda search requires nonzero coprime polynomials");
    if (gcd(P, Q).degree() != 0) throw PreconditionError("inputs are not coprime");
    if (std::max(P.degree(), Q.degree()) < 2)
        throw PreconditionError("both degrees <= 1 make the search vacuous");

    for (long long h = 1; h <= height_bound; ++h) {
        for (const Rational& lambda : rationals_of_height(h)) {
            Polynomial<Rational> R = P + Q * lambda;
            if (R.is_zero()) continue; // cannot happen for coprime inputs
            if (rational_roots(R).empty()) return {lambda, height_bound};
        }
    }
    return {std::nullopt, height_bound};
}

namespace {

/// Reduced row echelon form of the basis with the *leading monomial* as pivot
/// (columns ordered X^n down to 1). Returns the rows back as polynomials.
std::vector<Polynomial<Rational>> echelon_polynomials(
    const std::vector<Polynomial<Rational>>& basis, int n, int expected_rank) {
    Matrix<Rational> rows;
    for (const auto& p : basis) {
        if (p.is_zero()) throw PreconditionError("zero polynomial in basis");
        if (p.degree() > n) throw PreconditionError("basis element exceeds the degree bound");
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational());
        for (int i = 0; i <= p.degree(); ++i)
            row[static_cast<std::size_t>(n - i)] = p.coefficient(i);
        rows.push_back(std::move(row));
    }
    int rank = linalg::echelonize(rows);
    if (rank != expected_rank)
        throw PreconditionError("basis is dependent or has the wrong codimension");
    std::vector<Polynomial<Rational>> out;
    for (const auto& row : rows) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational());
        for (int i = 0; i <= n; ++i) coeffs[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(n - i)];
        Polynomial<Rational> p(std::move(coeffs));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Codim1Analysis analyze_codim1_subspace(const std::vector<Polynomial<Rational>>& basis, int n) {
    if (n < 1) throw PreconditionError("degree bound must be at least 1");
    if (static_cast<int>(basis.size()) != n)
        throw PreconditionError("codimension-1 basis in degree <= " + std::to_string(n) +
                                " must have exactly " + std::to_string(n) + " elements");
    auto rows = echelon_polynomials(basis, n, n);

    // The degree-<=1 sub-line. A pivot of degree <= 1 always exists by the
    // dimension count; a constant generator is itself a rootless witness.
    Polynomial<Rational> line;
    for (const auto& r : rows)
        if (r.degree() <= 1 && (line.is_zero() || r.degree() < line.degree())) line = r;
    if (line.is_zero()) throw PreconditionError("no element of degree <= 1 in the span");
    if (line.degree() == 0) return {std::nullopt, line};

    const Rational x = -line.coefficient(0) / line.coefficient(1);
    const Polynomial<Rational> divisor = x_minus(x);
    const Polynomial<Rational>* failing = nullptr;
    for (const auto& b : basis) {
        if (!divides(divisor, b)) {
            failing = &b;
            break;
        }
    }
    if (!failing) return {x, std::nullopt};

    // Some element misses the common root: hunt the span for a polynomial
    // with no rational root, first along the pencil B + lambda*line, then
    // with seeded random combinations of the echelon rows.
    for (long long h = 1; h <= 40; ++h) {
        for (const Rational& lambda : rationals_of_height(h)) {
            Polynomial<Rational> cand = *failing + line * lambda;
            if (!cand.is_zero() && rational_roots(cand).empty()) return {std::nullopt, cand};
        }
    }
    SplitMix64 rng(0x5eedULL);
    for (int trial = 0; trial < 10000; ++trial) {
        Polynomial<Rational> cand;
        for (const auto& r : rows) cand = cand + r * Rational(rng.next_in(-20, 20));
        if (!cand.is_zero() && rational_roots(cand).empty()) return {std::nullopt, cand};
    }
    throw Error("no rational-rootless witness found within the search budget");
}

} // namespace polyfree
