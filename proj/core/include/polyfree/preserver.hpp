#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "polyfree/automorphism.hpp"
#include "polyfree/freeness.hpp"
#include "polyfree/linalg.hpp"
#include "polyfree/operators.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/sampling.hpp"

namespace polyfree {

/// The affine-composition family P -> c * sigma(P)(aX + b): the maps that the
/// preserver theorems single out. sigma is the identity except over quadratic
/// fields, where conjugation is also allowed.
template <FieldElement F>
struct AffineSigmaPreserver {
    F a;
    F b;
    F c;
    Automorphism sigma;

    AffineSigmaPreserver(F a_, F b_, F c_, Automorphism sigma_ = Automorphism::identity)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), sigma(sigma_) {
        if (a.is_zero() || c.is_zero())
            throw PreconditionError("affine preserver needs nonzero a and c");
        if (sigma == Automorphism::conjugation && !std::is_same_v<F, Quadratic>)
            throw PreconditionError("conjugation is only available over quadratic fields");
    }
};

template <FieldElement F>
Polynomial<F> apply_affine(const AffineSigmaPreserver<F>& prs, const Polynomial<F>& P) {
    return compose(apply(prs.sigma, P), linear_poly(prs.a, prs.b)) * prs.c;
}

/// Group law: (f1 ∘ f2)(P) = f1(f2(P)).
template <FieldElement F>
AffineSigmaPreserver<F> compose(const AffineSigmaPreserver<F>& f1,
                                const AffineSigmaPreserver<F>& f2) {
    F a2 = apply(f1.sigma, f2.a);
    F b2 = apply(f1.sigma, f2.b);
    F c2 = apply(f1.sigma, f2.c);
    return AffineSigmaPreserver<F>(a2 * f1.a, a2 * f1.b + b2, f1.c * c2,
                                   compose(f1.sigma, f2.sigma));
}

/// A linear endomorphism of the degree-<= n polynomial space in the monomial
/// basis: column j holds the coefficients of f(X^j). Over quadratic fields an
/// optional conjugation twist precomposes on coefficients, which represents
/// the Q-linear (rather than L-linear) maps of interest; apply() is then
/// f(P) = M * coeffs(sigma(P)).
template <FieldElement F>
class TruncatedLinearMap {
public:
    TruncatedLinearMap(int degree_bound, std::vector<Polynomial<F>> columns,
                       Automorphism twist = Automorphism::identity)
        : n_(degree_bound), columns_(std::move(columns)), twist_(twist) {
        if (n_ < 2) throw PreconditionError("degree bound must be at least 2");
        if (static_cast<int>(columns_.size()) != n_ + 1)
            throw PreconditionError("expected " + std::to_string(n_ + 1) + " columns");
        const Polynomial<F>* nonzero = nullptr;
        for (const auto& col : columns_) {
            if (col.degree() > n_)
                throw PreconditionError("column degree exceeds the bound");
            if (!col.is_zero()) nonzero = &col;
        }
        if (!nonzero) throw PreconditionError("the zero map carries no field context");
        if (twist_ == Automorphism::conjugation && !std::is_same_v<F, Quadratic>)
            throw PreconditionError("conjugation twist is only available over quadratic fields");
        like_ = zero_like(nonzero->leading());
    }

    int degree_bound() const { return n_; }
    const std::vector<Polynomial<F>>& columns() const { return columns_; }
    Automorphism twist() const { return twist_; }
    const F& field_exemplar() const { return like_; }

    Polynomial<F> apply(const Polynomial<F>& P) const {
        if (P.degree() > n_)
            throw DegreeCapError("input degree " + std::to_string(P.degree()) +
                                 " exceeds the map's bound " + std::to_string(n_));
        Polynomial<F> image;
        if (P.is_zero()) return image;
        Polynomial<F> Q = polyfree::apply(twist_, P);
        for (int j = 0; j <= Q.degree(); ++j) {
            const F& coeff = Q.coefficient(j);
            if (!coeff.is_zero()) image = image + columns_[static_cast<std::size_t>(j)] * coeff;
        }
        return image;
    }

    Matrix<F> matrix() const {
        Matrix<F> m(static_cast<std::size_t>(n_) + 1,
                    std::vector<F>(static_cast<std::size_t>(n_) + 1, like_));
        for (int j = 0; j <= n_; ++j)
            for (int i = 0; i <= n_; ++i)
                if (!columns_[static_cast<std::size_t>(j)].is_zero())
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        columns_[static_cast<std::size_t>(j)].coefficient(i);
        return m;
    }

    bool is_bijective() const { return !linalg::determinant(matrix()).is_zero(); }

private:
    int n_;
    std::vector<Polynomial<F>> columns_;
    Automorphism twist_;
    F like_;
};

template <FieldElement F>
TruncatedLinearMap<F> to_matrix(const AffineSigmaPreserver<F>& prs, int n) {
    std::vector<Polynomial<F>> cols;
    cols.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        cols.push_back(apply_affine(prs, Polynomial<F>::monomial(one_like(prs.a), j)));
    return TruncatedLinearMap<F>(n, std::move(cols), prs.sigma);
}

/// Matrix of f1 ∘ f2 (twists compose; columns are f1 applied to f2's columns,
/// which is exact because monomials have rational coefficients).
template <FieldElement F>
TruncatedLinearMap<F> product(const TruncatedLinearMap<F>& f1, const TruncatedLinearMap<F>& f2) {
    if (f1.degree_bound() != f2.degree_bound())
        throw PreconditionError("product of maps with different degree bounds");
    std::vector<Polynomial<F>> cols;
    cols.reserve(f2.columns().size());
    for (const auto& col : f2.columns()) cols.push_back(f1.apply(col));
    return TruncatedLinearMap<F>(f1.degree_bound(), std::move(cols),
                                 compose(f1.twist(), f2.twist()));
}

/// Adapter for the operator toolkit.
template <FieldElement F>
LinearMapOnPolys<F> as_linear_map(const TruncatedLinearMap<F>& map) {
    return {[&map](const Polynomial<F>& P) { return map.apply(P); }, map.degree_bound()};
}

/// Result of locating the root-permutation value at one point: the unique y
/// with f((X-x)^k K[X]) lying inside (X-y)^k K[X] at the truncation, or a
/// diagnostic. Ambiguity or absence certifies the map is not a preserver.
template <FieldElement F>
struct MuResult {
    std::optional<F> value;
    std::string diagnostic;
};

template <FieldElement F>
MuResult<F> mu_at(const TruncatedLinearMap<F>& map, const F& x, int k) {
    if (k < 2) throw PreconditionError("k must be at least 2");
    const int n = map.degree_bound();
    if (n < k + 1) throw PreconditionError("degree bound must be at least k + 1");

    std::vector<Polynomial<F>> images;
    const Polynomial<F> base = root_power(x, k);
    bool any_nonzero = false;
    for (int j = 0; j + k <= n; ++j) {
        Polynomial<F> gen = base * Polynomial<F>::monomial(one_like(x), j);
        Polynomial<F> img = map.apply(gen);
        if (!img.is_zero()) any_nonzero = true;
        images.push_back(std::move(img));
    }
    if (!any_nonzero) return {std::nullopt, "the map annihilates (X-x)^k K[X]"};

    Polynomial<F> g = gcd_all(images);
    std::vector<F> candidates = k_fold_roots(g, k);
    if (candidates.empty())
        return {std::nullopt, "no field point y with (X-y)^k dividing every image"};
    if (candidates.size() > 1)
        return {std::nullopt, "ambiguous y: " + std::to_string(candidates.size()) +
                                  " candidates divide every image"};
    return {candidates.front(), ""};
}

/// Sampled root-permutation data: successful (x, mu(x)) pairs plus the points
/// where recovery failed.
template <FieldElement F>
struct RootPermutationSample {
    std::vector<std::pair<F, F>> pairs;
    int k;
    std::vector<F> exceptional;
};

template <FieldElement F>
RootPermutationSample<F> sample_mu(const TruncatedLinearMap<F>& map, int k,
                                   const std::vector<F>& points) {
    RootPermutationSample<F> out{{}, k, {}};
    for (const F& x : points) {
        MuResult<F> r = mu_at(map, x, k);
        if (r.value)
            out.pairs.emplace_back(x, *r.value);
        else
            out.exceptional.push_back(x);
    }
    return out;
}

/// Recovered normal form of a truncated map: f(P) = c * sigma(P) ∘ Y, with
/// the affine pair (a, b) filled in when Y has degree 1.
template <FieldElement F>
struct PreserverDecomposition {
    Polynomial<F> c;
    Polynomial<F> y;
    Automorphism sigma;
    std::optional<std::pair<F, F>> affine;
};

/// Concrete evidence that a map is not of the affine-composition form: the
/// stage that failed, and the sample point or monomial index that broke.
template <FieldElement F>
struct Refutation {
    std::string reason;
    std::optional<F> point;
    std::optional<int> monomial;
};

template <FieldElement F>
using RecoveryResult = std::variant<PreserverDecomposition<F>, Refutation<F>>;

template <FieldElement F>
std::vector<F> default_sample_points(const F& like) {
    return {int_like(like, 0), int_like(like, 1), int_like(like, 2), int_like(like, 3)};
}

/// Recovers (a, b, c) from a bijective truncated map by fitting the root
/// permutation mu(x) = (x - b)/a at sample points and then verifying
/// f(X^j) = c (aX + b)^j for every monomial. Any failure returns the
/// concrete witness instead of a decomposition.
template <FieldElement F>
RecoveryResult<F> recover_affine(const TruncatedLinearMap<F>& map, int k,
                                 std::vector<F> sample_points = {}) {
    const int n = map.degree_bound();
    if (n < k + 2) throw PreconditionError("degree bound must be at least k + 2");
    if (!map.is_bijective())
        throw PreconditionError("recovery requires a bijective map on the truncated space");
    if (sample_points.empty()) sample_points = default_sample_points(map.field_exemplar());
    if (sample_points.size() < 3)
        throw PreconditionError("need at least 3 sample points");

    const Polynomial<F>& f_of_1 = map.columns()[0];
    if (f_of_1.is_zero() || !f_of_1.is_constant())
        return Refutation<F>{"f(1) is not a nonzero constant", std::nullopt, 0};
    const F c = f_of_1.leading();

    RootPermutationSample<F> sample = sample_mu(map, k, sample_points);
    if (sample.pairs.size() < 2) {
        Refutation<F> r{"fewer than 2 sample points admit a root-permutation value",
                        std::nullopt, std::nullopt};
        if (!sample.exceptional.empty()) r.point = sample.exceptional.front();
        return r;
    }
    // mu(x) = (x - b)/a, so x = a*mu(x) + b: fit from the first two samples.
    const auto& [x1, y1] = sample.pairs[0];
    const auto& [x2, y2] = sample.pairs[1];
    if (y1 == y2)
        return Refutation<F>{"root permutation is not injective on the samples", x2,
                             std::nullopt};
    const F a = (x1 - x2) / (y1 - y2);
    const F b = x1 - a * y1;
    for (std::size_t i = 2; i < sample.pairs.size(); ++i) {
        const auto& [x, y] = sample.pairs[i];
        if (!(x == a * y + b))
            return Refutation<F>{"sample point breaks the affine fit", x, std::nullopt};
    }

    const Polynomial<F> target = linear_poly(a, b);
    Polynomial<F> power(one_like(a));
    for (int j = 0; j <= n; ++j) {
        if (!(map.columns()[static_cast<std::size_t>(j)] == power * c))
            return Refutation<F>{"monomial image differs from c (aX+b)^j", std::nullopt, j};
        if (j < n) power = power * target;
    }
    return PreserverDecomposition<F>{f_of_1, target, map.twist(), std::make_pair(a, b)};
}

/// Over Q(sqrt d): recovers Y = f(X)/f(1) and reads sigma off f(sqrt d)/f(1),
/// then verifies both monomial families. The bijective case forces f(1)
/// constant; everything else is reported as a refutation.
RecoveryResult<Quadratic> recover_sigma_y(const TruncatedLinearMap<Quadratic>& map);

/// Verdict of a randomized preservation check; the witness (when present) is
/// the lowest-index violating polynomial regardless of worker count.
template <FieldElement F>
struct PreservationVerdict {
    bool pass;
    std::optional<Polynomial<F>> witness;
    std::uint64_t trials;
};

namespace detail {

template <FieldElement F>
bool kfree_status(const Polynomial<F>& P, int k) {
    if (P.is_zero()) return false; // zero lies in every m^k
    return is_k_free(P, k).is_k_free;
}

template <FieldElement F>
bool has_k_root_status(const Polynomial<F>& P, int k) {
    if (P.is_zero()) return true; // every x is a k-fold root of 0
    return !k_fold_roots(P, k).empty();
}

/// Random probe used by the verification suites: odd trials force a
/// (X - x)^k factor so both predicate branches are exercised.
template <FieldElement F>
Polynomial<F> verification_probe(const TruncatedLinearMap<F>& map, int k, std::uint64_t seed,
                                 std::uint64_t index) {
    SplitMix64 rng(fork_seed(seed, index));
    const F like = map.field_exemplar();
    const int n = map.degree_bound();
    if (index % 2 == 0) return random_polynomial(rng, like, n);
    F x = random_element(rng, like, 4, 3);
    Polynomial<F> tail = random_polynomial(rng, like, n - k);
    return root_power(x, k) * tail;
}

/// Runs `total` indexed probes, in deterministic blocks when threads > 1,
/// and returns the smallest failing index with its witness.
template <FieldElement F>
PreservationVerdict<F> indexed_search(
    std::uint64_t total, int threads,
    const std::function<std::optional<Polynomial<F>>(std::uint64_t)>& probe) {
    if (threads < 1) threads = 1;
    if (threads == 1) {
        for (std::uint64_t i = 0; i < total; ++i) {
            auto w = probe(i);
            if (w) return {false, std::move(*w), i + 1};
        }
        return {true, std::nullopt, total};
    }
    for (std::uint64_t base = 0; base < total; base += static_cast<std::uint64_t>(threads)) {
        const int block = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total - base));
        std::vector<std::optional<Polynomial<F>>> results(static_cast<std::size_t>(block));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(block));
        for (int t = 0; t < block; ++t)
            workers.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = probe(base + static_cast<std::uint64_t>(t)); });
        for (auto& w : workers) w.join();
        for (int t = 0; t < block; ++t)
            if (results[static_cast<std::size_t>(t)])
                return {false, std::move(*results[static_cast<std::size_t>(t)]),
                        base + static_cast<std::uint64_t>(t) + 1};
    }
    return {true, std::nullopt, total};
}

} // namespace detail

/// Samples `trials` polynomials (half forced non-k-free) and checks that
/// k-freeness transfers through the map in both directions.
template <FieldElement F>
PreservationVerdict<F> verify_preserves_kfree(const TruncatedLinearMap<F>& map, int k,
                                              std::uint64_t trials, std::uint64_t seed,
                                              int threads = 1) {
    return detail::indexed_search<F>(
        trials, threads, [&](std::uint64_t i) -> std::optional<Polynomial<F>> {
            Polynomial<F> P = detail::verification_probe(map, k, seed, i);
            if (detail::kfree_status(P, k) != detail::kfree_status(map.apply(P), k)) return P;
            return std::nullopt;
        });
}

/// Same sampling scheme with the "has a k-fold root in the field" predicate.
template <FieldElement F>
PreservationVerdict<F> verify_preserves_k_root(const TruncatedLinearMap<F>& map, int k,
                                               std::uint64_t trials, std::uint64_t seed,
                                               int threads = 1) {
    return detail::indexed_search<F>(
        trials, threads, [&](std::uint64_t i) -> std::optional<Polynomial<F>> {
            Polynomial<F> P = detail::verification_probe(map, k, seed, i);
            if (detail::has_k_root_status(P, k) != detail::has_k_root_status(map.apply(P), k))
                return P;
            return std::nullopt;
        });
}

/// Outcome of the systematic refutation engine.
template <FieldElement F>
struct HuntOutcome {
    std::optional<Polynomial<F>> witness; // first probe whose status differs from its image's
    std::uint64_t evaluations;
    std::optional<std::uint64_t> witness_index;
};

/// Interleaves structured probes (X - x)^k X^j, with x walking the height
/// grid, and seeded random polynomials; stops at the first polynomial whose
/// k-freeness or k-fold-root status differs from its image's.
template <FieldElement F>
HuntOutcome<F> counterexample_search(const TruncatedLinearMap<F>& map, int k,
                                     std::uint64_t budget, std::uint64_t seed,
                                     int threads = 1) {
    const int n = map.degree_bound();
    if (n < k) throw PreconditionError("degree bound below k");
    const F like = map.field_exemplar();
    const int j_range = n - k + 1;

    auto probe_poly = [&](std::uint64_t i) -> Polynomial<F> {
        if (i % 2 == 0) {
            std::uint64_t s = i / 2;
            F x = nth_grid_point(like, s / static_cast<std::uint64_t>(j_range));
            int j = static_cast<int>(s % static_cast<std::uint64_t>(j_range));
            return root_power(x, k) * Polynomial<F>::monomial(one_like(like), j);
        }
        SplitMix64 rng(fork_seed(seed, i));
        return random_polynomial(rng, like, n);
    };

    PreservationVerdict<F> v = detail::indexed_search<F>(
        budget, threads, [&](std::uint64_t i) -> std::optional<Polynomial<F>> {
            Polynomial<F> P = probe_poly(i);
            Polynomial<F> image = map.apply(P);
            if (detail::kfree_status(P, k) != detail::kfree_status(image, k)) return P;
            if (detail::has_k_root_status(P, k) != detail::has_k_root_status(image, k)) return P;
            return std::nullopt;
        });
    if (v.pass) return {std::nullopt, budget, std::nullopt};
    return {v.witness, v.trials, v.trials - 1};
}

} // namespace polyfree
