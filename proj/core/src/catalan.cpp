#include <string>

#include "polyfree/linalg.hpp"
#include "polyfree/operators.hpp"

namespace polyfree {
namespace {

/// Falling factorial a (a-1) ... (a-j+1).
mpz_class falling(long a, int j) {
    mpz_class acc(1);
    for (int t = 0; t < j; ++t) acc *= (a - t);
    return acc;
}

} // namespace

const mpz_class& CatalanTriangle::entry(int n, int i) const {
    if (n < 0 || n > max_index())
        throw PreconditionError("table not populated at n = " + std::to_string(n));
    const auto& row = rows_[static_cast<std::size_t>(n)];
    if (i < 0 || i >= static_cast<int>(row.size()))
        throw PreconditionError("index i = " + std::to_string(i) + " outside row " +
                                std::to_string(n));
    return row[static_cast<std::size_t>(i)];
}

CatalanTriangle derive_catalan_coefficients(int n_max) {
    if (n_max < 0) throw PreconditionError("n_max must be nonnegative");
    if (n_max > 12) throw DegreeCapError("coefficient derivation capped at n = 12");

    CatalanTriangle table;
    for (int n = 0; n <= n_max; ++n) {
        const int m = n / 2; // effective top index: higher determinants vanish
        const int unknowns = m + 1;

        // One scalar equation per monomial pair (X^a, X^b): both sides of the
        // expansion collapse to a single monomial of degree a + b - n - 1.
        Matrix<Rational> A;
        std::vector<Rational> rhs;
        for (int t = 0; t < 2 * unknowns; ++t) {
            long a = n + 2 + t;
            long b = n + 3 + 2 * t;
            std::vector<Rational> row;
            row.reserve(static_cast<std::size_t>(unknowns));
            for (int i = 0; i <= m; ++i) {
                mpz_class coeff = falling(a, i) * falling(b, n + 1 - i) -
                                  falling(b, i) * falling(a, n + 1 - i);
                row.emplace_back(coeff);
            }
            A.push_back(std::move(row));
            rhs.emplace_back(mpz_class((b - a) * falling(a + b - 1, n)));
        }

        auto solution = linalg::solve_unique(A, rhs);
        if (!solution)
            throw Error("coefficient system for n = " + std::to_string(n) +
                        " is underdetermined or inconsistent");
        std::vector<mpz_class> row;
        row.reserve(static_cast<std::size_t>(unknowns));
        for (const Rational& c : *solution) {
            if (!c.is_integer() || c.sign() < 0)
                throw Error("derived coefficient is not a nonnegative integer: " + c.to_string());
            row.push_back(c.numerator());
        }
        table.rows_.push_back(std::move(row));
    }
    return table;
}

} // namespace polyfree
