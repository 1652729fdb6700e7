#include <jetcurve/numeric_eval.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace jetcurve {

namespace {

using Complex = std::complex<double>;

bool is_zero_scalar(const Rational& v) { return v == 0; }
bool is_zero_scalar(const Complex& v) { return std::abs(v) < 1e-300; }

/// Truncated product of two series (coefficient vectors of equal length).
template <typename K>
std::vector<K> series_mul(const std::vector<K>& a, const std::vector<K>& b) {
    assert(a.size() == b.size());
    std::vector<K> out(a.size(), K(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero_scalar(a[i])) continue;
        for (size_t j = 0; i + j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// 1 / a(t) truncated; requires a(0) != 0.
template <typename K>
std::vector<K> series_reciprocal(const std::vector<K>& a) {
    assert(!a.empty() && !is_zero_scalar(a[0]));
    std::vector<K> out(a.size(), K(0));
    out[0] = K(1) / a[0];
    for (size_t n = 1; n < a.size(); ++n) {
        K acc(0);
        for (size_t i = 1; i <= n; ++i) acc += a[i] * out[n - i];
        out[n] = -acc / a[0];
    }
    return out;
}

/// p(u(t), v(t)) truncated to the common series length.
template <typename K>
std::vector<K> series_compose(const Poly2& p, const std::vector<K>& u, const std::vector<K>& v) {
    assert(u.size() == v.size());
    const size_t len = u.size();
    int max_a = 0, max_b = 0;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        max_a = std::max(max_a, m.a);
        max_b = std::max(max_b, m.b);
    }
    std::vector<std::vector<K>> u_pow(static_cast<size_t>(max_a) + 1);
    std::vector<std::vector<K>> v_pow(static_cast<size_t>(max_b) + 1);
    u_pow[0] = std::vector<K>(len, K(0));
    u_pow[0][0] = K(1);
    v_pow[0] = u_pow[0];
    for (int a = 1; a <= max_a; ++a) u_pow[static_cast<size_t>(a)] = series_mul(u_pow[static_cast<size_t>(a) - 1], u);
    for (int b = 1; b <= max_b; ++b) v_pow[static_cast<size_t>(b)] = series_mul(v_pow[static_cast<size_t>(b) - 1], v);
    std::vector<K> out(len, K(0));
    for (const auto& [m, c] : p.terms()) {
        const K coeff = scalar_cast<K>(c);
        const auto prod = series_mul(u_pow[static_cast<size_t>(m.a)], v_pow[static_cast<size_t>(m.b)]);
        for (size_t i = 0; i < len; ++i) out[i] += coeff * prod[i];
    }
    return out;
}

/// Solves r(x(t), y(t)) = 0 for the dependent letter's series coefficients
/// c_1..c_order given its value c_0 and the full independent series, by
/// matching one t-power at a time: the t^k coefficient is linear in c_k with
/// slope (d r / d dependent)(base).
template <typename K>
std::vector<K> implicit_series(const Poly2& r, bool dependent_is_y, const std::vector<K>& indep,
                               const K& dep0, int order) {
    const Poly2 slope_poly = dependent_is_y ? partial(r, 0, 1) : partial(r, 1, 0);
    const K x0 = dependent_is_y ? indep[0] : dep0;
    const K y0 = dependent_is_y ? dep0 : indep[0];
    const K slope = slope_poly.eval(x0, y0);
    if (is_zero_scalar(slope))
        throw std::domain_error("implicit series: the defining partial vanishes at the base point");
    std::vector<K> dep(static_cast<size_t>(order) + 1, K(0));
    dep[0] = dep0;
    for (int k = 1; k <= order; ++k) {
        const auto& u = dependent_is_y ? indep : dep;
        const auto& v = dependent_is_y ? dep : indep;
        const std::vector<K> residual = series_compose(r, u, v);
        dep[static_cast<size_t>(k)] = -residual[static_cast<size_t>(k)] / slope;
    }
    return dep;
}

template <typename K>
std::vector<K> jets_from_series(const std::vector<K>& series) {
    std::vector<K> jets(series.size());
    Int f = 1;
    for (size_t k = 0; k < series.size(); ++k) {
        if (k > 0) f *= static_cast<int>(k);
        jets[k] = series[k] * scalar_cast<K>(Rational(f));
    }
    return jets;
}

template <typename K>
std::vector<K> series_from_jets(const K& base, const std::vector<K>& jets, int order) {
    std::vector<K> series(static_cast<size_t>(order) + 1, K(0));
    series[0] = base;
    Int f = 1;
    for (int k = 1; k <= order; ++k) {
        f *= k;
        if (static_cast<size_t>(k) <= jets.size())
            series[static_cast<size_t>(k)] = jets[static_cast<size_t>(k) - 1] / scalar_cast<K>(Rational(f));
    }
    return series;
}

/// Core evaluator: jets_x[k] / jets_y[k] are k-th derivatives (index 0 the
/// base coordinates); symbol values come from the curve partials at the base.
template <typename K>
K eval_expression(const JetExpression& e, const Poly2& r, const std::vector<K>& jets_x,
                  const std::vector<K>& jets_y) {
    const std::vector<K>& active = e.side() == Side::x_side ? jets_y : jets_x;
    const std::vector<K>& foreign = e.side() == Side::x_side ? jets_x : jets_y;
    const K x0 = jets_x.at(0);
    const K y0 = jets_y.at(0);
    std::map<DSym, K> symbol_value;
    auto sym = [&](DSym s) -> const K& {
        auto it = symbol_value.find(s);
        if (it == symbol_value.end())
            it = symbol_value.emplace(s, partial(r, s.i, s.j).eval(x0, y0)).first;
        return it->second;
    };
    const K den = sym(denominator_symbol(e.side()));
    if (is_zero_scalar(den))
        throw std::domain_error("eval: the denominator partial vanishes at the base point");

    K total(0);
    for (const auto& [jm, coef] : e.terms()) {
        K jet_part(1);
        for (size_t idx = 0; idx < jm.mu.size(); ++idx) {
            if (jm.mu[idx] == 0) continue;
            if (idx + 1 >= active.size())
                throw std::invalid_argument("eval: disc carries too few derivatives for this expression");
            for (int rep = 0; rep < jm.mu[idx]; ++rep) jet_part *= active[idx + 1];
        }
        if (jm.foreign_pow > 0) {
            if (foreign.size() < 2)
                throw std::invalid_argument("eval: disc carries too few derivatives for this expression");
            for (int rep = 0; rep < jm.foreign_pow; ++rep) jet_part *= foreign[1];
        }
        K num(0);
        for (const auto& [mono, c] : coef.num.terms()) {
            K factor = scalar_cast<K>(c);
            for (const auto& [s, exp] : mono.factors())
                for (int rep = 0; rep < exp; ++rep) factor *= sym(s);
            num += factor;
        }
        K den_pow(1);
        for (int rep = 0; rep < coef.denom_pow; ++rep) den_pow *= den;
        total += jet_part * num / den_pow;
    }
    return total;
}

template <typename K>
std::vector<K> cast_jets(const std::vector<Rational>& jets) {
    std::vector<K> out(jets.size());
    for (size_t i = 0; i < jets.size(); ++i) out[i] = scalar_cast<K>(jets[i]);
    return out;
}

std::string render_scalar(const Rational& v) { return to_string(v); }

std::string render_scalar(const Complex& v) {
    std::ostringstream os;
    os.precision(15);
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return os.str();
}

double relative_gap(const Complex& a, const Complex& b, const EvalConfig& cfg) {
    const double scale = std::max({std::abs(a), std::abs(b), cfg.abs_floor});
    return std::abs(a - b) / scale;
}

SeriesPoint build_series_point(const CurveSpec& curve, const Rational& xp, const Rational& yp,
                               Side side, int order, const std::vector<Rational>& indep_series_tail) {
    if (order < 1) throw std::invalid_argument("local series: order must be >= 1");
    if (curve.r.eval(xp, yp) != 0)
        throw std::invalid_argument("local series: the base point is not on the curve");
    std::vector<Rational> indep(static_cast<size_t>(order) + 1, Rational(0));
    indep[0] = side == Side::y_side ? xp : yp;
    for (size_t i = 0; i < indep_series_tail.size() && i + 1 < indep.size(); ++i)
        indep[i + 1] = indep_series_tail[i];
    const bool dependent_is_y = side == Side::y_side;
    const std::vector<Rational> dep =
        implicit_series(curve.r, dependent_is_y, indep, dependent_is_y ? yp : xp, order);
    SeriesPoint out;
    out.curve = curve;
    out.order = order;
    out.side = side;
    const auto indep_jets = jets_from_series(indep);
    const auto dep_jets = jets_from_series(dep);
    out.x_jets = dependent_is_y ? indep_jets : dep_jets;
    out.y_jets = dependent_is_y ? dep_jets : indep_jets;
    return out;
}

}  // namespace

SeriesPoint local_graph_series(const CurveSpec& curve, const Rational& xp, const Rational& yp,
                               Side side, int order) {
    return build_series_point(curve, xp, yp, side, order, {Rational(1)});
}

SeriesPoint local_graph_series_jets(const CurveSpec& curve, const Rational& xp, const Rational& yp,
                                    Side side, int order, const std::vector<Rational>& indep_jets) {
    if (static_cast<int>(indep_jets.size()) != order)
        throw std::invalid_argument("local series: expected one independent jet per order");
    std::vector<Rational> tail(indep_jets.size());
    Int f = 1;
    for (size_t k = 0; k < indep_jets.size(); ++k) {
        f *= static_cast<int>(k) + 1;
        tail[k] = indep_jets[k] / Rational(f);
    }
    return build_series_point(curve, xp, yp, side, order, tail);
}

Rational eval_jet_expression(const JetExpression& e, const SeriesPoint& s) {
    return eval_expression<Rational>(e, s.curve.r, s.x_jets, s.y_jets);
}

std::complex<double> eval_jet_expression_float(const JetExpression& e, const SeriesPoint& s) {
    return eval_expression<Complex>(e, s.curve.r, cast_jets<Complex>(s.x_jets),
                                    cast_jets<Complex>(s.y_jets));
}

Rational max_faa_residual(const SeriesPoint& s) {
    Rational worst = s.curve.r.eval(s.x_jets.at(0), s.y_jets.at(0));
    if (worst < 0) worst = -worst;
    for (int k = 1; k <= s.order; ++k) {
        Rational value(0);
        for (const FaaTerm& t : faa_di_bruno(k, 2)) {
            for (const FaaAssignment& a : t.assignments) {
                Rational prod = Rational(t.coefficient) * Rational(a.weight);
                prod *= partial(s.curve.r, a.symbol.i, a.symbol.j).eval(s.x_jets.at(0), s.y_jets.at(0));
                for (size_t e = 0; e < t.multiplicities.size(); ++e) {
                    const auto& [size, count] = t.multiplicities[e];
                    const int xc = a.x_counts[e];
                    for (int rep = 0; rep < xc; ++rep) prod *= s.x_jets.at(static_cast<size_t>(size));
                    for (int rep = 0; rep < count - xc; ++rep) prod *= s.y_jets.at(static_cast<size_t>(size));
                }
                value += prod;
            }
        }
        if (value < 0) value = -value;
        worst = std::max(worst, value);
    }
    return worst;
}

AgreementReport check_generator_agreement(int kappa, const CurveSpec& curve, const Rational& xp,
                                          const Rational& yp, const EvalConfig& cfg) {
    if (kappa < 1) throw std::invalid_argument("agreement check: order must be >= 1");
    AgreementReport report;
    report.kappa = kappa;
    report.exact = cfg.mode == EvalConfig::Mode::exact;
    const SeriesPoint disc = local_graph_series(curve, xp, yp, Side::y_side, kappa);
    const GeneratorPair& g = generate(kappa);

    if (report.exact) {
        const Rational left = eval_jet_expression(g.left, disc);
        const Rational right = eval_jet_expression(g.right, disc);
        report.left_value = render_scalar(left);
        report.right_value = render_scalar(right);
        report.pass = left == right;
        for (const auto& [order, forms] : elimination_forms()) {
            if (order > kappa) continue;
            const GeneratorPair& base = generate(order);
            report.elimination_equal[order] =
                eval_jet_expression(forms.left, disc) == eval_jet_expression(base.left, disc) &&
                eval_jet_expression(forms.right, disc) == eval_jet_expression(base.right, disc);
        }
    } else {
        const Complex left = eval_jet_expression_float(g.left, disc);
        const Complex right = eval_jet_expression_float(g.right, disc);
        report.left_value = render_scalar(left);
        report.right_value = render_scalar(right);
        report.residual = relative_gap(left, right, cfg);
        report.pass = report.residual <= cfg.rel_tol;
        for (const auto& [order, forms] : elimination_forms()) {
            if (order > kappa) continue;
            const GeneratorPair& base = generate(order);
            report.elimination_equal[order] =
                relative_gap(eval_jet_expression_float(forms.left, disc),
                             eval_jet_expression_float(base.left, disc), cfg) <= cfg.rel_tol &&
                relative_gap(eval_jet_expression_float(forms.right, disc),
                             eval_jet_expression_float(base.right, disc), cfg) <= cfg.rel_tol;
        }
    }
    return report;
}

RoundtripReport check_trivialization_roundtrip(int kappa, const CurveSpec& curve,
                                               const Rational& xp, const Rational& yp,
                                               const EvalConfig& cfg, std::vector<Rational> x_jets) {
    if (kappa < 1) throw std::invalid_argument("roundtrip check: order must be >= 1");
    if (x_jets.empty()) {
        const Rational defaults[] = {Rational(1),  make_rational(1, 2), make_rational(-2, 3),
                                     make_rational(3, 4), make_rational(-5, 6), make_rational(7, 8)};
        for (int k = 0; k < kappa; ++k)
            x_jets.push_back(defaults[static_cast<size_t>(k) % std::size(defaults)]);
    }
    if (static_cast<int>(x_jets.size()) != kappa)
        throw std::invalid_argument("roundtrip check: expected one x-jet per order");
    if (curve.r.eval(xp, yp) != 0)
        throw std::invalid_argument("roundtrip check: the base point is not on the curve");

    RoundtripReport report;
    report.kappa = kappa;
    report.exact = cfg.mode == EvalConfig::Mode::exact;

    const TrivializationMap forward = trivialization_change(kappa);
    const TrivializationMap backward = forward.mirrored();

    std::vector<Rational> jets_x{xp};
    jets_x.insert(jets_x.end(), x_jets.begin(), x_jets.end());
    std::vector<Rational> jets_y{yp};
    for (int l = 1; l <= kappa; ++l) {
        // components are indexed from order 1; only jets below l are read
        std::vector<Rational> dummy_y = jets_y;
        dummy_y.resize(static_cast<size_t>(kappa) + 1, Rational(0));
        jets_y.push_back(eval_expression<Rational>(forward.components[static_cast<size_t>(l) - 1],
                                                   curve.r, jets_x, dummy_y));
    }
    std::vector<Rational> jets_back{xp};
    for (int l = 1; l <= kappa; ++l) {
        std::vector<Rational> dummy_x = jets_back;
        dummy_x.resize(static_cast<size_t>(kappa) + 1, Rational(0));
        jets_back.push_back(eval_expression<Rational>(backward.components[static_cast<size_t>(l) - 1],
                                                      curve.r, dummy_x, jets_y));
    }

    report.pass = true;
    double worst = 0.0;
    for (int l = 1; l <= kappa; ++l) {
        const Rational& in = jets_x[static_cast<size_t>(l)];
        const Rational& out = jets_back[static_cast<size_t>(l)];
        report.input_jets.push_back(to_string(in));
        report.output_jets.push_back(to_string(out));
        if (report.exact) {
            if (in != out) report.pass = false;
        } else {
            const double gap = relative_gap(to_complex(in), to_complex(out), cfg);
            worst = std::max(worst, gap);
        }
    }
    if (!report.exact) {
        report.max_residual = worst;
        report.pass = worst <= cfg.rel_tol;
    }
    return report;
}

namespace {

/// All roots of a monic-normalized polynomial with simple roots, by the
/// simultaneous Weierstrass iteration.
std::vector<Complex> all_roots(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::domain_error("root finding: polynomial is constant");
    const Complex lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    const size_t n = coeffs.size() - 1;
    auto eval = [&](Complex z) {
        Complex acc(0);
        for (size_t i = coeffs.size(); i > 0;) {
            --i;
            acc = acc * z + coeffs[i];
        }
        return acc;
    };
    std::vector<Complex> roots(n);
    const Complex seed(0.4, 0.9);
    Complex power(1.0, 0.0);
    for (size_t j = 0; j < n; ++j) {
        power *= seed;
        roots[j] = power;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (size_t j = 0; j < n; ++j) {
            Complex denom(1.0, 0.0);
            for (size_t k = 0; k < n; ++k)
                if (k != j) denom *= roots[j] - roots[k];
            const Complex delta = eval(roots[j]) / denom;
            roots[j] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-13) break;
    }
    return roots;
}

Complex newton_in_x2(const Poly2& r2, const Poly2& r2_x2, Complex x2, double y2) {
    for (int iter = 0; iter < 100; ++iter) {
        const Complex value = r2.eval(x2, Complex(y2, 0.0));
        const Complex slope = r2_x2.eval(x2, Complex(y2, 0.0));
        const Complex step = value / slope;
        x2 -= step;
        if (std::abs(step) < 1e-13) break;
    }
    return x2;
}

}  // namespace

ProbeReport probe_infinity_vanishing(int kappa, const CurveSpec& curve, const EvalConfig& cfg) {
    (void)cfg;
    if (kappa < 1) throw std::invalid_argument("probe: order must be >= 1");
    if (!curve.adapted.infinity_transversal)
        throw std::invalid_argument("probe: curve does not meet infinity transversally");
    ProbeReport report;
    report.kappa = kappa;
    report.d = curve.d;
    report.expected_slope = curve.d - kappa - 2;

    const Poly2 r2 = infinity_chart(curve);
    const Poly2 r2_x2 = partial(r2, 1, 0);

    // Points at infinity: roots of R2(x2, 0).
    std::vector<Complex> at_zero(static_cast<size_t>(curve.d) + 1, Complex(0));
    for (const auto& [m, c] : r2.terms())
        if (m.b == 0) at_zero[static_cast<size_t>(m.a)] = to_complex(c);
    std::vector<Complex> roots = all_roots(at_zero);
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    Complex branch = roots.front();

    const int samples = 8;
    for (int i = 0; i < samples; ++i) {
        const double y2 = std::pow(10.0, -2.0 - static_cast<double>(i) / (samples - 1));
        branch = newton_in_x2(r2, r2_x2, branch, y2);

        // Disc in the chart: y2(t) = y2 + t, x2(t) solved implicitly.
        std::vector<Complex> y2_series(static_cast<size_t>(kappa) + 1, Complex(0));
        y2_series[0] = Complex(y2, 0.0);
        y2_series[1] = Complex(1.0, 0.0);
        const std::vector<Complex> x2_series =
            implicit_series<Complex>(r2, false, y2_series, branch, kappa);

        // Affine picture: y0 = 1/y2, x0 = x2/y2.
        const std::vector<Complex> y0_series = series_reciprocal(y2_series);
        const std::vector<Complex> x0_series = series_mul(x2_series, y0_series);
        const std::vector<Complex> jets_x = jets_from_series(x0_series);
        const std::vector<Complex> jets_y = jets_from_series(y0_series);

        const Complex value = eval_expression<Complex>(generate(kappa).left, curve.r, jets_x, jets_y);
        report.samples.emplace_back(y2, std::abs(value));
    }

    double su = 0, sv = 0, suu = 0, suv = 0;
    for (const auto& [y2, mag] : report.samples) {
        const double u = std::log(y2);
        const double v = std::log(std::max(mag, 1e-300));
        su += u;
        sv += v;
        suu += u * u;
        suv += u * v;
    }
    const double n = static_cast<double>(report.samples.size());
    report.slope = (n * suv - su * sv) / (n * suu - su * su);
    report.pass = std::abs(report.slope - report.expected_slope) <= 0.2;
    return report;
}

}  // namespace jetcurve
