#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyfree/factor.hpp"
#include "polyfree/polynomial.hpp"
#include "polyfree/rational.hpp"

namespace polyfree {

/// Signed-remainder chain of (squarefree part of P, its derivative). The
/// difference of sign variations across an interval counts the distinct real
/// roots inside it.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial<Rational>& P);

    const std::vector<Polynomial<Rational>>& chain() const { return chain_; }

    int variations_at(const Rational& t) const;
    int variations_at_minus_infinity() const;
    int variations_at_plus_infinity() const;

    /// Distinct real roots on the whole line.
    int count_all() const;

    /// Distinct real roots in (lo, hi]; endpoints must not be roots of the
    /// squarefree part.
    int count_between(const Rational& lo, const Rational& hi) const;

private:
    std::vector<Polynomial<Rational>> chain_;
};

/// 1 + max |a_i| / |a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const Polynomial<Rational>& P);

/// Number of distinct real roots of P, on the whole line or in an interval.
/// Endpoint roots are included (the interval is treated as nudged outward).
int count_real_roots(const Polynomial<Rational>& P,
                     std::optional<std::pair<Rational, Rational>> interval = std::nullopt);

bool has_real_root(const Polynomial<Rational>& P);
bool has_common_real_root(const Polynomial<Rational>& P, const Polynomial<Rational>& Q);

/// lambda in V(P, Q) = { lambda : P - lambda Q has a real root }; the zero
/// polynomial counts as having a root.
bool v_contains(const Polynomial<Rational>& P, const Polynomial<Rational>& Q,
                const Rational& lam);

enum class VsetKind {
    all_reals,               // V(P, Q) = R (e.g. common real root, or odd gap)
    bounded_interval_data,   // V bounded: Q rootless and deg P <= deg Q
    half_line_data,          // V = [m, inf) or (-inf, M]: Q rootless, even gap
    no_real_values_impossible // Q has a pole: V unbounded, shape not refined;
                              // emptiness is impossible
};

/// Coarse exact classification of V(P, Q) as the image of P/Q. Only the
/// shapes decidable without real algebraic optimization are refined; the
/// invariants tie each kind to degree parity and leading signs.
struct ImageClassification {
    VsetKind kind;
    std::optional<int> half_line_sign; // +1 for [m, inf), -1 for (-inf, M]
};

ImageClassification classify_v(const Polynomial<Rational>& P, const Polynomial<Rational>& Q);

/// Q in S(P) = { Q : V(Q, P) is bounded }. Decided by the characterization:
/// P rootless and deg Q <= deg P (Q = 0 is trivially a member when P is
/// rootless; S(P) is empty when P has a real root).
bool s_membership(const Polynomial<Rational>& Q, const Polynomial<Rational>& P);

/// P(t) >= 0 for all real t, decided exactly: P = 0, or positive leading
/// coefficient, even degree, and a rootless odd-multiplicity part.
bool is_nonnegative(const Polynomial<Rational>& P);

/// The image of P over R is exactly [0, inf).
bool image_is_r_plus(const Polynomial<Rational>& P);

/// Both sides of the double-root-by-positivity criterion at one instance.
/// `double_root_side` is (X-x)^2 | P; `image_side` probes P + lambda (X-x)^2
/// for a certified ladder of lambdas large enough to clear the minimum, with
/// enough rungs that agreement is forced either way.
struct DoubleRootVerdict {
    bool double_root_side;
    bool image_side;
};

DoubleRootVerdict lemma54_check(const Polynomial<Rational>& P, const Rational& x);

/// P = P1 - P2 with both parts of even degree, positive leading coefficient
/// (the zero polynomial admitted with vacuous conditions) and both divisible
/// by (X-x)^2. Requires x to be a double root of P.
struct EvenDifference {
    Polynomial<Rational> p1;
    Polynomial<Rational> p2;
};

EvenDifference lemma55_decompose(const Polynomial<Rational>& P, const Rational& x);

/// Tests, for a degree-2 polynomial P, whether "P + b(X-x) + c has a real
/// root iff b^2 >= 4c" holds at every grid point.
bool lemma53_probe(const Polynomial<Rational>& P, const Rational& x,
                   const std::vector<std::pair<Rational, Rational>>& grid);

/// For P != (X-x)^2, finds a violating (b, c) by expanding height search
/// (guaranteed to terminate: the parabola criterion characterizes (X-x)^2).
std::pair<Rational, Rational> lemma53_find_violation(const Polynomial<Rational>& P,
                                                     const Rational& x);

/// Samples random combinations of the moment basis {X, X^2-1, X^3, X^4-1, ...}
/// up to degree n and confirms each has a real root (sign change across +-1,
/// verified with the Sturm count).
struct MomentDemoVerdict {
    bool pass;
    std::optional<Polynomial<Rational>> witness;
    std::uint64_t samples;
};

MomentDemoVerdict moment_subspace_demo(int n, std::uint64_t trials, std::uint64_t seed);

} // namespace polyfree
