#include "polyfree/intfactor.hpp"

#include <algorithm>
#include <map>

#include "polyfree/error.hpp"

namespace polyfree::intfactor {
namespace {

mpz_class f_step(const mpz_class& x, const mpz_class& c, const mpz_class& n) {
    return (x * x + c) % n;
}

/// Pollard-Brent cycle finding; n must be odd, composite and not divisible by
/// small primes. Deterministic parameter schedule keeps results reproducible.
mpz_class pollard_brent(const mpz_class& n) {
    for (unsigned long c0 = 1;; ++c0) {
        mpz_class c(c0), y(2), g(1), r(1), q(1), x, ys;
        const long batch = 128;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = f_step(y, c, n);
            mpz_class k(0);
            while (k < r && g == 1) {
                ys = y;
                long steps = static_cast<long>(std::min(mpz_class(batch), r - k).get_ui());
                for (long i = 0; i < steps; ++i) {
                    y = f_step(y, c, n);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot; replay one step at a time.
            g = 1;
            while (g == 1) {
                ys = f_step(ys, c, n);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // Rare: the whole cycle collapsed; retry with the next polynomial.
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<mpz_class, int>> factor(const mpz_class& n) {
    if (n == 0) throw Error("factor(0) is undefined");
    mpz_class m = abs(n);
    std::map<mpz_class, int> acc;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            acc[mpz_class(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    for (unsigned long p = 17; p < 10000 && m > 1; p += 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            acc[mpz_class(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    factor_into(m, acc);
    return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    auto fac = factor(n);
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        mpz_class pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace polyfree::intfactor
