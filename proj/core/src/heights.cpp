#include "polyfree/heights.hpp"

namespace polyfree {

std::vector<Rational> rationals_of_height(long long h) {
    std::vector<Rational> out;
    if (h <= 0) return out;
    if (h == 1) {
        out.emplace_back(0);
        return out;
    }
    mpz_class g;
    for (long long den = 1; den < h; ++den) {
        long long num = h - den;
        mpz_gcd(g.get_mpz_t(), mpz_class(num).get_mpz_t(), mpz_class(den).get_mpz_t());
        if (g == 1) out.emplace_back(num, den);
    }
    std::size_t positives = out.size();
    for (std::size_t i = 0; i < positives; ++i) out.push_back(-out[i]);
    return out;
}

Rational nth_rational(std::size_t idx) {
    for (long long h = 1;; ++h) {
        auto batch = rationals_of_height(h);
        if (idx < batch.size()) return batch[idx];
        idx -= batch.size();
    }
}

} // namespace polyfree
