#include <jetcurve/sections.hpp>

#include <cassert>
#include <map>

namespace jetcurve {

std::vector<WeightedComposition> enumerate_compositions(int kappa, int m) {
    std::vector<WeightedComposition> out;
    for_each_composition(kappa, m, [&](const std::vector<int>& parts) {
        out.push_back({kappa, m, parts});
    });
    return out;
}

Int composition_count(int kappa, int m) {
    if (kappa < 1) throw std::invalid_argument("composition_count: order must be >= 1");
    if (m < 0) throw std::invalid_argument("composition_count: weight must be >= 0");
    std::vector<Int> ways(static_cast<size_t>(m) + 1, Int(0));
    ways[0] = 1;
    for (int k = 1; k <= kappa; ++k)
        for (int w = k; w <= m; ++w)
            ways[static_cast<size_t>(w)] += ways[static_cast<size_t>(w - k)];
    return ways[static_cast<size_t>(m)];
}

namespace {

Int binom2(long long n) {
    if (n < 2) return Int(0);
    return Int(n) * Int(n - 1) / 2;
}

}  // namespace

Int dim_h0(long long t, int d) {
    if (t < 0) throw std::invalid_argument("dim_h0: degree bound must be >= 0");
    if (d < 1) throw std::invalid_argument("dim_h0: curve degree must be >= 1");
    return binom2(t + 2) - binom2(t - d + 2);
}

long long delta_degree(const WeightedComposition& c, int d) {
    long long delta = 0;
    for (size_t idx = 0; idx < c.parts.size(); ++idx)
        delta += static_cast<long long>(c.parts[idx]) * (d - static_cast<int>(idx) - 3);
    return delta;
}

SectionCount count_sections(int kappa, int m, int d, bool breakdown) {
    if (kappa < 1) throw std::invalid_argument("count_sections: order must be >= 1");
    if (m < 0) throw std::invalid_argument("count_sections: weight must be >= 0");
    if (d < 1) throw std::invalid_argument("count_sections: curve degree must be >= 1");
    SectionCount out;
    out.kappa = kappa;
    out.m = m;
    out.d = d;
    out.total = 0;
    if (breakdown) {
        out.breakdown.emplace();
        for_each_composition(kappa, m, [&](const std::vector<int>& parts) {
            WeightedComposition c{kappa, m, parts};
            const long long delta = delta_degree(c, d);
            const Int dim = delta < 0 ? Int(0) : dim_h0(delta, d);
            out.total += dim;
            out.breakdown->emplace_back(std::move(c), delta, dim);
        });
        return out;
    }
    // The budget depends only on the part count s = sum m_k: every
    // composition with s parts has delta = (d-2)s - m.  Count compositions
    // by part count with one joint unbounded-knapsack table.
    std::vector<std::vector<Int>> table(static_cast<size_t>(m) + 1);
    for (int w = 0; w <= m; ++w) table[static_cast<size_t>(w)].assign(static_cast<size_t>(w) + 1, Int(0));
    table[0][0] = 1;
    for (int k = 1; k <= kappa; ++k)
        for (int w = k; w <= m; ++w)
            for (int s = 1; s <= w - k + 1; ++s)
                table[static_cast<size_t>(w)][static_cast<size_t>(s)] +=
                    table[static_cast<size_t>(w - k)][static_cast<size_t>(s - 1)];
    for (int s = 0; s <= m; ++s) {
        const Int& count = table[static_cast<size_t>(m)][static_cast<size_t>(s)];
        if (count == 0) continue;
        const long long delta = static_cast<long long>(d - 2) * s - m;
        if (delta < 0) continue;
        out.total += count * dim_h0(delta, d);
    }
    return out;
}

Int brute_force_quotient_dim(int delta, int d, const Poly2& r, int max_delta) {
    if (delta < 0) throw std::invalid_argument("brute_force_quotient_dim: degree bound must be >= 0");
    if (!r.degree() || *r.degree() != d)
        throw std::invalid_argument("brute_force_quotient_dim: polynomial degree does not match d");
    if (delta > max_delta)
        throw std::invalid_argument("brute_force_quotient_dim: degree bound exceeds the desk-scale cap");

    // Row index: monomials of degree <= delta.
    std::map<Mono2, int, Mono2GrlexDesc> row_index;
    int rows = 0;
    for (int a = 0; a <= delta; ++a)
        for (int b = 0; a + b <= delta; ++b) row_index.emplace(Mono2{a, b}, rows++);

    // Columns: r * (monomials of degree <= delta - d).
    std::vector<std::vector<Rational>> cols;
    for (int a = 0; a + d <= delta; ++a) {
        for (int b = 0; a + b + d <= delta; ++b) {
            std::vector<Rational> col(static_cast<size_t>(rows), Rational(0));
            for (const auto& [mono, c] : r.terms()) {
                const Mono2 shifted{mono.a + a, mono.b + b};
                assert(row_index.count(shifted));
                col[static_cast<size_t>(row_index.at(shifted))] = c;
            }
            cols.push_back(std::move(col));
        }
    }

    // Column rank by Gaussian elimination over the rationals: keep each
    // accepted column normalized to a unit pivot and reduce newcomers.
    std::vector<std::pair<size_t, std::vector<Rational>>> basis;
    for (auto& col : cols) {
        for (const auto& [prow, pcol] : basis) {
            if (col[prow] == 0) continue;
            const Rational factor = col[prow];
            for (size_t i = 0; i < col.size(); ++i)
                if (pcol[i] != 0) col[i] -= Rational(factor * pcol[i]);
        }
        size_t prow = col.size();
        for (size_t i = 0; i < col.size(); ++i) {
            if (col[i] != 0) {
                prow = i;
                break;
            }
        }
        if (prow == col.size()) continue;
        const Rational inv = col[prow];
        for (auto& v : col)
            if (v != 0) v = Rational(v / inv);
        basis.emplace_back(prow, std::move(col));
    }
    return binom2(static_cast<long long>(delta) + 2) - Int(basis.size());
}

Rational asymptotic_estimate(int kappa, int m, int d) {
    if (kappa < 1) throw std::invalid_argument("asymptotic_estimate: order must be >= 1");
    if (m < 0) throw std::invalid_argument("asymptotic_estimate: weight must be >= 0");
    if (d < 1) throw std::invalid_argument("asymptotic_estimate: curve degree must be >= 1");
    Rational harmonic(0);
    for (int i = 1; i <= kappa; ++i) harmonic += make_rational(Int(1), Int(i));
    Int m_pow(1);
    for (int i = 0; i < kappa; ++i) m_pow *= m;
    const Int f = factorial(kappa);
    return Rational(Int(d) * Int(d)) * harmonic * Rational(m_pow) / Rational(f * f);
}

}  // namespace jetcurve
