#pragma once

#include <jetcurve/poly2.hpp>
#include <jetcurve/rational.hpp>

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace jetcurve {

/// Exponent pattern (m_1, ..., m_kappa) with m_1 + 2 m_2 + ... + kappa m_kappa = m.
struct WeightedComposition {
    int kappa = 0;
    int m = 0;
    std::vector<int> parts;  // parts[k-1] = m_k
};

namespace detail {
template <typename F>
void compositions_rec(int k, int rem, std::vector<int>& parts, F& visit) {
    if (k == 1) {
        parts[0] = rem;
        visit(static_cast<const std::vector<int>&>(parts));
        return;
    }
    for (int mk = rem / k; mk >= 0; --mk) {
        parts[static_cast<size_t>(k) - 1] = mk;
        compositions_rec(k - 1, rem - k * mk, parts, visit);
    }
}
}  // namespace detail

/// Visits every weighted composition, ordered lexicographically descending on
/// (m_kappa, ..., m_1), passing `const std::vector<int>&` parts.
template <typename F>
void for_each_composition(int kappa, int m, F&& visit) {
    if (kappa < 1) throw std::invalid_argument("for_each_composition: order must be >= 1");
    if (m < 0) throw std::invalid_argument("for_each_composition: weight must be >= 0");
    std::vector<int> parts(static_cast<size_t>(kappa), 0);
    auto& v = visit;
    detail::compositions_rec(kappa, m, parts, v);
}

/// Materialized variant of for_each_composition (same order).
std::vector<WeightedComposition> enumerate_compositions(int kappa, int m);

/// Number of weighted compositions, by the coin-counting recurrence; safe far
/// beyond the range where enumeration is practical.
Int composition_count(int kappa, int m);

/// Dimension of the space of plane polynomials of degree <= t modulo
/// multiples of a degree-d curve equation: binom(t+2,2) - binom(t-d+2,2)
/// with binom(n,2) taken as 0 for n < 2.  Requires t >= 0, d >= 1.
Int dim_h0(long long t, int d);

/// Degree budget sum_k m_k (d-k-2) for coefficient polynomials on a degree-d
/// curve; may be negative when d is small.
long long delta_degree(const WeightedComposition& c, int d);

struct SectionCount {
    int kappa = 0;
    int m = 0;
    int d = 0;
    Int total;
    /// Rows (composition, delta, dimension) when a breakdown was requested.
    std::optional<std::vector<std::tuple<WeightedComposition, long long, Int>>> breakdown;
};

/// Exact number of independent weight-m sections of the kappa-jet bundle cut
/// out on a degree-d curve: sum of dim_h0(delta, d) over all weighted
/// compositions, negative budgets contributing zero.  Without a breakdown
/// the sum is grouped by part count, so m in the thousands stays fast.
SectionCount count_sections(int kappa, int m, int d, bool breakdown = false);

/// Oracle for dim_h0: rank computation on the actual multiplication-by-r
/// matrix from degree <= delta-d into degree <= delta, by exact Gaussian
/// elimination.  Throws std::invalid_argument when delta exceeds max_delta
/// (matrix dimensions grow quadratically).
Int brute_force_quotient_dim(int delta, int d, const Poly2& r, int max_delta = 64);

/// Leading-order model d^2 * (1 + 1/2 + ... + 1/kappa) * m^kappa / (kappa!)^2
/// for the section count; exact rational value of the model, which matches
/// the true count only to leading order in m.
Rational asymptotic_estimate(int kappa, int m, int d);

}  // namespace jetcurve
