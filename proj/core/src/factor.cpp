#include "polyfree/factor.hpp"

#include <algorithm>
#include <optional>

#include "polyfree/intfactor.hpp"

namespace polyfree {
namespace {

using RPoly = Polynomial<Rational>;
using IVec = std::vector<mpz_class>; // integer coefficients, index i = coeff of X^i

// --- integer-polynomial helpers -------------------------------------------

/// Clears denominators and content; normalizes the leading sign to +.
IVec primitive_integer(const RPoly& P) {
    mpz_class den_lcm(1);
    for (const Rational& c : P.coefficients())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    IVec F;
    F.reserve(P.coefficients().size());
    mpz_class content(0);
    for (const Rational& c : P.coefficients()) {
        mpz_class v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        F.push_back(std::move(v));
    }
    for (mpz_class& v : F) v /= content;
    if (F.back() < 0)
        for (mpz_class& v : F) v = -v;
    return F;
}

RPoly to_rational_poly(const IVec& F) {
    std::vector<Rational> c;
    c.reserve(F.size());
    for (const mpz_class& v : F) c.emplace_back(v);
    return RPoly(std::move(c));
}

mpz_class eval_int(const IVec& F, long x) {
    mpz_class acc(0);
    for (auto it = F.rbegin(); it != F.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// den^deg * F(num/den); zero exactly when num/den is a root.
mpz_class eval_fraction_numerator(const IVec& F, const mpz_class& num, const mpz_class& den) {
    mpz_class acc(0), den_pow(1);
    for (auto it = F.rbegin(); it != F.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        if (it + 1 != F.rend()) den_pow *= den;
    }
    return acc;
}

/// Distinct rational roots of a squarefree primitive integer polynomial with
/// no zero root. Degrees 1 and 2 avoid divisor enumeration entirely.
std::vector<Rational> distinct_rational_roots_int(const IVec& F) {
    const int d = static_cast<int>(F.size()) - 1;
    std::vector<Rational> roots;
    if (d <= 0) return roots;
    if (d == 1) {
        roots.emplace_back(-F[0], F[1]);
        return roots;
    }
    if (d == 2) {
        mpz_class disc = F[1] * F[1] - 4 * F[2] * F[0];
        if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) return roots;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        roots.emplace_back(-F[1] + s, 2 * F[2]);
        if (s != 0) roots.emplace_back(-F[1] - s, 2 * F[2]);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    auto nums = intfactor::divisors(F[0]);
    auto dens = intfactor::divisors(F.back());
    mpz_class g;
    for (const mpz_class& q : dens) {
        for (const mpz_class& p : nums) {
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            if (eval_fraction_numerator(F, p, q) == 0) roots.emplace_back(p, q);
            if (eval_fraction_numerator(F, -p, q) == 0) roots.emplace_back(-p, q);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// --- Kronecker interpolation search ----------------------------------------

/// Landau-Mignotte style bound on |coefficients| of any degree-m divisor.
mpz_class divisor_coeff_bound(const IVec& F, int m) {
    mpz_class sq(0);
    for (const mpz_class& c : F) sq += c * c;
    mpz_class l2;
    mpz_sqrt(l2.get_mpz_t(), sq.get_mpz_t());
    l2 += 1;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(m / 2));
    return binom * (l2 + abs(F.back()));
}

/// Searches for a degree-m factor of the squarefree primitive integer
/// polynomial F (which has no factor of degree < m). Exhaustive over divisor
/// tuples of the values at m+1 consecutive integer points, with congruence,
/// integrality and size pruning. Returns a primitive factor with positive
/// leading coefficient, or nullopt.
std::optional<IVec> search_degree_m_factor(const IVec& F, int m) {
    const long start = -(m / 2);
    const int npts = m + 1;

    std::vector<mpz_class> values(npts);
    for (int i = 0; i < npts; ++i) {
        values[i] = eval_int(F, start + i);
        if (values[i] == 0) return std::nullopt; // integer root: handled at m = 1
    }

    const mpz_class cbound = divisor_coeff_bound(F, m);
    // |g(x)| <= sum_j cbound * |x|^j
    std::vector<mpz_class> value_bound(npts);
    for (int i = 0; i < npts; ++i) {
        mpz_class vb(0), xp(1);
        long ax = std::abs(start + i);
        for (int j = 0; j <= m; ++j) {
            vb += cbound * xp;
            xp *= ax > 1 ? ax : 1;
        }
        value_bound[i] = vb;
    }

    // Signed candidates per point, smallest magnitude first, + before -.
    std::vector<std::vector<mpz_class>> cands(npts);
    for (int i = 0; i < npts; ++i) {
        for (const mpz_class& t : intfactor::divisors(values[i])) {
            if (t > value_bound[i]) break;
            cands[i].push_back(t);
            if (i > 0) cands[i].push_back(-t);
        }
    }

    const long extra_x = start + npts;
    const mpz_class extra_v = eval_int(F, extra_x);
    const mpz_class& lead_f = F.back();

    // dd[i][j] = divided difference over points x_{i-j}..x_i; points are
    // consecutive so the denominators are plain level indices.
    std::vector<std::vector<mpq_class>> dd(npts);
    std::vector<mpz_class> chosen(npts);
    std::optional<IVec> found;

    std::vector<mpz_class> factorial(npts + 1);
    factorial[0] = 1;
    for (int j = 1; j <= npts; ++j) factorial[j] = factorial[j - 1] * j;

    auto dfs = [&](auto&& self, int level) -> bool {
        if (level == npts) {
            if (dd[m][m] == 0) return false; // degree < m
            // Leading coefficient = top divided difference; must divide lc(F).
            if (dd[m][m].get_den() != 1) return false;
            mpz_class lead_g = dd[m][m].get_num();
            if (!mpz_divisible_p(lead_f.get_mpz_t(), lead_g.get_mpz_t())) return false;

            // Expand the Newton form into coefficients.
            std::vector<mpq_class> coeffs{dd[0][0]};
            std::vector<mpq_class> basis{mpq_class(1)};
            for (int j = 1; j <= m; ++j) {
                // basis *= (X - x_{j-1})
                basis.push_back(mpq_class(0));
                for (int t = static_cast<int>(basis.size()) - 1; t > 0; --t)
                    basis[t] = basis[t - 1] - basis[t] * (start + j - 1);
                basis[0] = basis[0] * mpq_class(-(start + j - 1));
                while (coeffs.size() < basis.size()) coeffs.push_back(mpq_class(0));
                for (std::size_t t = 0; t < basis.size(); ++t)
                    coeffs[t] += dd[j][j] * basis[t];
            }
            IVec g(coeffs.size());
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                coeffs[t].canonicalize();
                if (coeffs[t].get_den() != 1) return false;
                g[t] = coeffs[t].get_num();
                if (abs(g[t]) > cbound) return false;
            }
            // Cheap extra-point divisibility filter before the real division.
            mpz_class gx = eval_int(g, extra_x);
            if (gx == 0 || !mpz_divisible_p(extra_v.get_mpz_t(), gx.get_mpz_t())) return false;
            if (!divides(to_rational_poly(g), to_rational_poly(F))) return false;
            found = std::move(g);
            return true;
        }
        for (const mpz_class& w : cands[level]) {
            bool ok = true;
            for (int j = 0; j < level && ok; ++j)
                if (!mpz_divisible_ui_p(mpz_class(chosen[j] - w).get_mpz_t(),
                                        static_cast<unsigned long>(level - j)))
                    ok = false;
            if (!ok) continue;
            chosen[level] = w;
            dd[level].assign(static_cast<std::size_t>(level) + 1, mpq_class(0));
            dd[level][0] = mpq_class(w);
            bool integral = true;
            for (int j = 1; j <= level && integral; ++j) {
                dd[level][j] = (dd[level][j - 1] - dd[level - 1][j - 1]) / j;
                dd[level][j].canonicalize();
                // j! * dd must be an integer for an integer polynomial.
                mpq_class scaled = dd[level][j] * factorial[j];
                scaled.canonicalize();
                if (scaled.get_den() != 1) integral = false;
            }
            if (!integral) continue;
            if (self(self, level + 1)) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

/// Full factorization of a squarefree primitive integer polynomial into
/// primitive irreducible factors (positive leading coefficients).
std::vector<IVec> kronecker_integer(IVec F) {
    std::vector<IVec> out;
    // Degree-1 factors via the rational root theorem.
    for (const Rational& r : distinct_rational_roots_int(F)) {
        IVec g{-r.numerator(), r.denominator()};
        out.push_back(g);
        F = primitive_integer(exact_div(to_rational_poly(F), to_rational_poly(g)));
    }
    int m = 2;
    while (2 * m <= static_cast<int>(F.size()) - 1) {
        auto g = search_degree_m_factor(F, m);
        if (g) {
            out.push_back(*g);
            F = primitive_integer(exact_div(to_rational_poly(F), to_rational_poly(*g)));
        } else {
            ++m;
        }
    }
    if (static_cast<int>(F.size()) - 1 >= 1) out.push_back(F);
    return out;
}

bool poly_less(const RPoly& a, const RPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coefficient(i) != b.coefficient(i)) return a.coefficient(i) < b.coefficient(i);
    }
    return false;
}

} // namespace

SquarefreeDecomposition squarefree_decomposition(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
    SquarefreeDecomposition out{P.leading(), {}};
    if (P.degree() == 0) return out;
    RPoly A = monic(P);
    // Yun's algorithm.
    RPoly G = gcd(A, derivative(A));
    RPoly C = exact_div(A, G);
    RPoly D = exact_div(derivative(A), G) - derivative(C);
    for (int i = 1; C.degree() > 0; ++i) {
        RPoly Ai = gcd(C, D); // gcd(C, 0) = monic(C) closes the final block
        if (Ai.degree() > 0) out.parts.emplace_back(Ai, i);
        C = exact_div(C, Ai);
        D = exact_div(D, Ai) - derivative(C);
    }
    return out;
}

Polynomial<Rational> squarefree_part(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
    if (P.degree() == 0) return RPoly(Rational(1));
    return monic(exact_div(P, gcd(P, derivative(P))));
}

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    if (P.degree() == 0) return out;

    RPoly work = P;
    int zero_mult = 0;
    while (evaluate(work, Rational()).is_zero()) {
        work = exact_div(work, x_minus(Rational()));
        ++zero_mult;
    }
    if (zero_mult > 0) out.emplace_back(Rational(), zero_mult);

    if (work.degree() > 0) {
        RPoly sf = squarefree_part(work);
        for (const Rational& r : distinct_rational_roots_int(primitive_integer(sf)))
            out.emplace_back(r, multiplicity_at(work, r));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Factorization factor_over_q(const Polynomial<Rational>& P, int degree_cap) {
    if (P.is_zero()) throw PreconditionError("factorization of the zero polynomial");
    if (P.degree() > degree_cap)
        throw DegreeCapError("degree " + std::to_string(P.degree()) +
                             " exceeds the Kronecker factorization cap " +
                             std::to_string(degree_cap));
    Factorization out{P.leading(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(P).parts) {
        for (const IVec& g : kronecker_integer(primitive_integer(part)))
            out.factors.emplace_back(monic(to_rational_poly(g)), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

} // namespace polyfree
