#include "polyfree/realroot.hpp"

#include <algorithm>

#include "polyfree/heights.hpp"
#include "polyfree/rng.hpp"

namespace polyfree {

SturmSequence::SturmSequence(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
    Polynomial<Rational> f = squarefree_part(P);
    chain_.push_back(f);
    if (f.degree() == 0) return;
    chain_.push_back(derivative(f));
    while (chain_.back().degree() > 0) {
        Polynomial<Rational> r = chain_[chain_.size() - 2] % chain_.back();
        if (r.is_zero()) break; // squarefree input: only at the constant tail
        chain_.push_back(-r);
    }
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int SturmSequence::variations_at(const Rational& t) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(evaluate(p, t).sign());
    return sign_changes(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        int s = p.leading().sign();
        if (p.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return sign_changes(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.leading().sign());
    return sign_changes(signs);
}

int SturmSequence::count_all() const {
    return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int SturmSequence::count_between(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw PreconditionError("interval endpoints must satisfy lo < hi");
    if (evaluate(chain_[0], lo).is_zero() || evaluate(chain_[0], hi).is_zero())
        throw PreconditionError("Sturm interval endpoints must not be roots");
    return variations_at(lo) - variations_at(hi);
}

Rational cauchy_root_bound(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("root bound of the zero polynomial");
    Rational m;
    for (int i = 0; i < P.degree(); ++i) {
        Rational a = P.coefficient(i).abs();
        if (m < a) m = a;
    }
    return Rational(1) + m / P.leading().abs();
}

int count_real_roots(const Polynomial<Rational>& P,
                     std::optional<std::pair<Rational, Rational>> interval) {
    if (P.is_zero()) throw PreconditionError("root count of the zero polynomial");
    if (P.degree() == 0) return 0;
    Polynomial<Rational> f = squarefree_part(P);
    if (!interval) {
        if (f.degree() == 0) return 0;
        SturmSequence chain(f);
        Rational bound = cauchy_root_bound(f);
        return chain.variations_at(-bound) - chain.variations_at(bound);
    }
    const auto& [lo, hi] = *interval;
    if (!(lo < hi)) throw PreconditionError("interval endpoints must satisfy lo < hi");

    // Endpoint roots count as inside: divide them out so the Sturm chain sees
    // clean endpoints, then add them back. Exact equivalent of nudging the
    // interval outward by less than the smallest root gap.
    int endpoint_roots = 0;
    if (evaluate(f, lo).is_zero()) {
        f = exact_div(f, x_minus(lo));
        ++endpoint_roots;
    }
    if (!f.is_zero() && evaluate(f, hi).is_zero()) {
        f = exact_div(f, x_minus(hi));
        ++endpoint_roots;
    }
    if (f.degree() <= 0) return endpoint_roots;
    SturmSequence chain(f);
    return chain.count_between(lo, hi) + endpoint_roots;
}

bool has_real_root(const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("root existence for the zero polynomial");
    if (P.degree() <= 0) return false;
    if (P.degree() % 2 == 1) return true;
    return count_real_roots(P) > 0;
}

bool has_common_real_root(const Polynomial<Rational>& P, const Polynomial<Rational>& Q) {
    if (P.is_zero() || Q.is_zero())
        throw PreconditionError("common-root test needs nonzero inputs");
    Polynomial<Rational> g = gcd(P, Q);
    return g.degree() > 0 && has_real_root(g);
}

bool v_contains(const Polynomial<Rational>& P, const Polynomial<Rational>& Q,
                const Rational& lam) {
    Polynomial<Rational> r = P - Q * lam;
    if (r.is_zero()) return true;
    return r.degree() > 0 && has_real_root(r);
}

ImageClassification classify_v(const Polynomial<Rational>& P, const Polynomial<Rational>& Q) {
    if (Q.is_zero()) throw PreconditionError("classification needs Q != 0");
    if (P.is_zero()) {
        // P - lambda Q = -lambda Q: every root of Q stays for every lambda.
        if (Q.degree() > 0 && has_real_root(Q)) return {VsetKind::all_reals, std::nullopt};
        return {VsetKind::bounded_interval_data, std::nullopt};
    }
    if (has_common_real_root(P, Q)) return {VsetKind::all_reals, std::nullopt};
    if (Q.degree() > 0 && has_real_root(Q))
        return {VsetKind::no_real_values_impossible, std::nullopt};
    // Q has no real root: V is the image of the continuous function P/Q.
    int dp = P.degree();
    if (dp <= Q.degree()) return {VsetKind::bounded_interval_data, std::nullopt};
    int gap = dp - Q.degree();
    if (gap % 2 == 1) return {VsetKind::all_reals, std::nullopt};
    int dir = P.leading().sign() * Q.leading().sign();
    return {VsetKind::half_line_data, dir};
}

bool s_membership(const Polynomial<Rational>& Q, const Polynomial<Rational>& P) {
    if (P.is_zero()) throw PreconditionError("S(P) membership needs P != 0");
    if (P.degree() > 0 && has_real_root(P)) return false;
    if (Q.is_zero()) return true;
    return Q.degree() <= P.degree();
}

bool is_nonnegative(const Polynomial<Rational>& P) {
    if (P.is_zero()) return true;
    if (P.leading().sign() < 0 || P.degree() % 2 != 0) return false;
    Polynomial<Rational> odd_part(Rational(1));
    for (const auto& [part, mult] : squarefree_decomposition(P).parts)
        if (mult % 2 == 1) odd_part = odd_part * part;
    return odd_part.degree() == 0 || !has_real_root(odd_part);
}

bool image_is_r_plus(const Polynomial<Rational>& P) {
    if (P.is_zero() || P.degree() < 1) return false;
    return is_nonnegative(P) && has_real_root(P);
}

DoubleRootVerdict lemma54_check(const Polynomial<Rational>& P, const Rational& x) {
    if (P.is_zero() || P.degree() % 2 != 0 || P.leading().sign() <= 0)
        throw PreconditionError("requires even degree and positive leading coefficient");

    const Polynomial<Rational> shift = root_power(x, 2);
    bool lhs = divides(shift, P);

    // lambda* clears the global minimum of the cofactor when the division is
    // exact: beyond the Cauchy bound the cofactor is positive, inside it is
    // bounded below by -sum|coeffs| (1+B)^deg.
    Polynomial<Rational> cofactor = euclid_div(P, shift).quotient;
    Rational lambda_star(1);
    if (!cofactor.is_zero()) {
        Rational coeff_sum;
        for (int i = 0; i <= cofactor.degree(); ++i)
            coeff_sum += cofactor.coefficient(i).abs();
        Rational b = Rational(1) + cauchy_root_bound(cofactor);
        lambda_star = Rational(1) + coeff_sum * b.pow(cofactor.degree());
    }

    // Enough rungs that a false double-root side forces some rung to be
    // 2-free, hence not of image R+.
    int rungs = std::max(4, P.degree() + 2);
    bool rhs = true;
    for (int j = 0; j < rungs && rhs; ++j)
        rhs = image_is_r_plus(P + shift * (lambda_star * Rational(1 + j)));
    return {lhs, rhs};
}

EvenDifference lemma55_decompose(const Polynomial<Rational>& P, const Rational& x) {
    const Polynomial<Rational> shift = root_power(x, 2);
    if (!divides(shift, P)) throw PreconditionError("x is not a double root of P");
    if (P.is_zero()) return {shift, shift};
    if (P.degree() % 2 == 0) {
        if (P.leading().sign() > 0) return {P, Polynomial<Rational>()};
        return {Polynomial<Rational>(), -P};
    }
    Polynomial<Rational> pad = root_power(x, P.degree() + 1);
    return {pad + P, pad};
}

bool lemma53_probe(const Polynomial<Rational>& P, const Rational& x,
                   const std::vector<std::pair<Rational, Rational>>& grid) {
    if (P.degree() != 2) throw PreconditionError("probe requires a degree-2 polynomial");
    for (const auto& [b, c] : grid) {
        Polynomial<Rational> probe = P + x_minus(x) * b + Polynomial<Rational>(c);
        bool rooted = probe.is_zero() ? true : has_real_root(probe);
        bool disc = b * b >= Rational(4) * c;
        if (rooted != disc) return false;
    }
    return true;
}

std::pair<Rational, Rational> lemma53_find_violation(const Polynomial<Rational>& P,
                                                     const Rational& x) {
    if (P.degree() != 2) throw PreconditionError("search requires a degree-2 polynomial");
    if (P == root_power(x, 2))
        throw PreconditionError("P = (X-x)^2 satisfies the criterion everywhere");
    for (long long h = 2;; ++h) {
        for (long long hb = 1; hb < h; ++hb) {
            for (const Rational& b : rationals_of_height(hb)) {
                for (const Rational& c : rationals_of_height(h - hb)) {
                    if (!lemma53_probe(P, x, {{b, c}})) return {b, c};
                }
            }
        }
    }
}

MomentDemoVerdict moment_subspace_demo(int n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 2) throw PreconditionError("degree bound must be at least 2");
    std::vector<Polynomial<Rational>> basis;
    for (int j = 1; j <= n; ++j) {
        Polynomial<Rational> b = Polynomial<Rational>::monomial(Rational(1), j);
        if (j % 2 == 0) b = b - Polynomial<Rational>(Rational(1));
        basis.push_back(std::move(b));
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(fork_seed(seed, t));
        Polynomial<Rational> P;
        for (const auto& b : basis)
            P = P + b * Rational(rng.next_in(-9, 9), rng.next_in(1, 4));
        if (P.is_zero()) continue; // every point is a root
        Rational at_one = evaluate(P, Rational(1));
        Rational at_minus_one = evaluate(P, Rational(-1));
        if (!(at_one + at_minus_one).is_zero())
            throw Error("moment basis lost the vanishing-sum property");
        if (count_real_roots(P) < 1) return {false, P, t + 1};
    }
    return {true, std::nullopt, trials};
}

} // namespace polyfree
