#include <jetcurve/infinity.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace jetcurve {

namespace {

/// d/dt on a jet polynomial: y2 -> y2', k-th derivative -> (k+1)-th.
/// Output keys are one slot longer than input keys.
JetPoly jet_poly_derivative(const JetPoly& p, size_t key_len) {
    JetPoly out;
    for (const auto& [key, c] : p) {
        assert(key.size() == key_len);
        for (size_t idx = 0; idx < key_len; ++idx) {
            if (key[idx] == 0) continue;
            JetPolyKey shifted(key);
            shifted.resize(key_len + 1, 0);
            shifted[idx] -= 1;
            shifted[idx + 1] += 1;
            Int& slot = out[shifted];
            slot += c * key[idx];
            if (slot == 0) out.erase(shifted);
        }
    }
    return out;
}

}  // namespace

TransferJet transfer_jet(int lambda) {
    if (lambda < 1) throw std::invalid_argument("transfer_jet: order must be >= 1");
    // N_1 = -y2'; keys are (y2 exponent, y2' exponent).
    JetPoly n{{JetPolyKey{0, 1}, Int(-1)}};
    for (int l = 1; l < lambda; ++l) {
        const size_t key_len = static_cast<size_t>(l) + 1;
        JetPoly next = jet_poly_derivative(n, key_len);
        // multiply by y2
        JetPoly scaled;
        for (const auto& [key, c] : next) {
            JetPolyKey k(key);
            k[0] += 1;
            scaled.emplace(std::move(k), c);
        }
        // subtract (l+1) * y2' * N_l
        for (const auto& [key, c] : n) {
            JetPolyKey k(key);
            k.resize(key_len + 1, 0);
            k[1] += 1;
            Int& slot = scaled[k];
            slot -= c * (l + 1);
            if (slot == 0) scaled.erase(k);
        }
        n = std::move(scaled);
    }
    TransferJet out;
    out.order = lambda;
    out.numerator = std::move(n);
    out.denom_pow = lambda + 1;
    return out;
}

int monomial_infinity_order(const JetMonomial& jm, const DMonomial& m, int denom_pow, int d) {
    if (d < 1) throw std::invalid_argument("monomial_infinity_order: degree must be >= 1");
    if (jm.foreign_pow != 0)
        throw std::logic_error("monomial_infinity_order: foreign first-order factor remains");
    if (denom_pow != 1 + m.symbol_count())
        throw std::logic_error("monomial_infinity_order: denominator power inconsistent with coefficient");
    int order = 0;
    for (size_t idx = 0; idx < jm.mu.size(); ++idx)
        order -= (static_cast<int>(idx) + 2) * jm.mu[idx];
    order += d - 1;
    order += m.higher_excess();
    return order;
}

InfinityReport verify_uniform_order(const GeneratorPair& g, int d) {
    if (d < 1) throw std::invalid_argument("verify_uniform_order: degree must be >= 1");
    const auto weight = uniform_weight(g.left);
    if (!weight) throw std::invalid_argument("verify_uniform_order: expression is not weight-homogeneous");
    InfinityReport report;
    report.kappa = *weight;
    report.d = d;
    bool first = true;
    report.uniform = true;
    for (const auto& [jm, coef] : g.left.terms()) {
        for (const auto& [mono, c] : coef.num.terms()) {
            (void)c;
            const int order = monomial_infinity_order(jm, mono, coef.denom_pow, d);
            report.monomials.push_back({jm, mono, order});
            if (first) {
                report.uniform_value = order;
                first = false;
            } else if (order != report.uniform_value) {
                report.uniform = false;
            }
        }
    }
    if (!report.uniform) report.uniform_value = 0;
    return report;
}

namespace {

/// Sparse polynomial in (x2, y2, y2', ..., y2^(kappa)); key[0] = x2 exponent,
/// key[1] = y2 exponent, key[1+k] = k-th derivative exponent.
using XKey = std::vector<int>;
using XPoly = std::map<XKey, Rational>;

XPoly xpoly_mul(const XPoly& a, const XPoly& b, size_t key_len) {
    XPoly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            XKey k(key_len);
            for (size_t i = 0; i < key_len; ++i) k[i] = ka[i] + kb[i];
            Rational& slot = out[k];
            slot += ca * cb;
            if (slot == 0) out.erase(k);
        }
    }
    return out;
}

XPoly xpoly_constant(const Rational& c, size_t key_len) {
    XPoly out;
    if (c != 0) out.emplace(XKey(key_len, 0), c);
    return out;
}

XPoly embed_poly2(const Poly2& p, size_t key_len) {
    XPoly out;
    for (const auto& [m, c] : p.terms()) {
        XKey k(key_len, 0);
        k[0] = m.a;
        k[1] = m.b;
        out.emplace(std::move(k), c);
    }
    return out;
}

XPoly embed_transfer(const TransferJet& t, size_t key_len) {
    XPoly out;
    for (const auto& [key, c] : t.numerator) {
        XKey k(key_len, 0);
        for (size_t i = 0; i < key.size(); ++i) k[1 + i] = key[i];
        out.emplace(std::move(k), Rational(c));
    }
    return out;
}

int xpoly_y2_valuation(const XPoly& p) {
    assert(!p.empty());
    int v = p.begin()->first[1];
    for (const auto& [k, c] : p) {
        (void)c;
        v = std::min(v, k[1]);
    }
    return v;
}

}  // namespace

TransferCheckReport symbolic_transfer_check(const CurveSpec& curve, int kappa) {
    if (kappa < 1 || kappa > 3)
        throw std::invalid_argument("symbolic_transfer_check: order must be between 1 and 3");
    if (!curve.adapted.infinity_transversal)
        throw std::invalid_argument("symbolic_transfer_check: curve does not meet infinity transversally");
    const int d = curve.d;
    const size_t key_len = static_cast<size_t>(kappa) + 2;

    TransferCheckReport report;
    report.kappa = kappa;
    report.d = d;
    report.required_order = d - kappa - 2;

    // Chart numerators of the needed partials and the transfer jets.
    std::map<DSym, XPoly> chart;   // may contain the zero polynomial
    std::map<DSym, int> chart_val; // y2-valuation, or -1 for the zero polynomial
    auto chart_of = [&](DSym s) -> const XPoly& {
        auto it = chart.find(s);
        if (it != chart.end()) return it->second;
        const Poly2 numerator = chart_numerator(partial(curve.r, s.i, s.j), d - s.i - s.j);
        XPoly embedded = embed_poly2(numerator, key_len);
        chart_val[s] = embedded.empty() ? -1 : xpoly_y2_valuation(embedded);
        return chart.emplace(s, std::move(embedded)).first->second;
    };
    std::vector<XPoly> transfer(static_cast<size_t>(kappa) + 1);
    for (int l = 1; l <= kappa; ++l)
        transfer[static_cast<size_t>(l)] = embed_transfer(transfer_jet(l), key_len);

    const JetExpression& left = generate(kappa).left;
    const DSym den = denominator_symbol(left.side());
    const XPoly& s10 = chart_of(den);
    if (s10.empty())
        throw std::invalid_argument("symbolic_transfer_check: chart image of the denominator vanishes");

    struct TermData {
        XPoly num;
        int w = 0;
        int p = 0;
    };
    std::vector<TermData> data;
    int w_max = 0, p_max = 0;
    bool first_term = true;

    for (const auto& [jm, coef] : left.terms()) {
        for (const auto& [mono, c] : coef.num.terms()) {
            const int expected = monomial_infinity_order(jm, mono, coef.denom_pow, d);

            int w = -coef.denom_pow * (d - 1);
            XPoly num = xpoly_constant(c, key_len);
            bool degenerate = false;
            for (size_t idx = 0; idx < jm.mu.size(); ++idx) {
                const int lambda = static_cast<int>(idx) + 1;
                for (int rep = 0; rep < jm.mu[idx]; ++rep) {
                    num = xpoly_mul(num, transfer[static_cast<size_t>(lambda)], key_len);
                    w += lambda + 1;
                }
            }
            for (const auto& [s, e] : mono.factors()) {
                const XPoly& img = chart_of(s);
                if (chart_val[s] != 0) degenerate = true;
                for (int rep = 0; rep < e; ++rep) {
                    num = xpoly_mul(num, img, key_len);
                    w += d - s.i - s.j;
                }
                if (img.empty()) break;
            }

            TransferTermObservation obs;
            obs.jet = jm;
            obs.coeff_monomial = mono;
            obs.expected_order = expected;
            if (num.empty()) {
                obs.degenerate = true;
                obs.observed_order = expected;
            } else {
                obs.observed_order = xpoly_y2_valuation(num) - w;
                obs.degenerate = degenerate;
            }
            report.terms.push_back(obs);

            if (!num.empty()) {
                data.push_back({std::move(num), w, coef.denom_pow});
                if (first_term || w > w_max) w_max = w;
                if (first_term || coef.denom_pow > p_max) p_max = coef.denom_pow;
                first_term = false;
            }
        }
    }
    assert(!data.empty());

    // Common denominator s10^p_max * y2^w_max.
    std::vector<XPoly> s10_pow(static_cast<size_t>(p_max) + 1);
    s10_pow[0] = xpoly_constant(Rational(1), key_len);
    for (int e = 1; e <= p_max; ++e)
        s10_pow[static_cast<size_t>(e)] = xpoly_mul(s10_pow[static_cast<size_t>(e) - 1], s10, key_len);

    XPoly combined;
    for (const TermData& t : data) {
        XPoly part = xpoly_mul(t.num, s10_pow[static_cast<size_t>(p_max - t.p)], key_len);
        const int shift = w_max - t.w;
        for (const auto& [k, c] : part) {
            XKey key(k);
            key[1] += shift;
            Rational& slot = combined[key];
            slot += c;
            if (slot == 0) combined.erase(key);
        }
    }
    assert(!combined.empty());
    report.observed_order = xpoly_y2_valuation(combined) - w_max;
    report.pass = report.observed_order >= report.required_order;
    return report;
}

}  // namespace jetcurve
