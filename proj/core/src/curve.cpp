#include "jetcurve/curve.hpp"

#include <algorithm>
#include <vector>

namespace jetcurve {

namespace {

// Dense univariate helpers for the squarefree check. Coefficient index =
// power of x; invariant: no trailing zero (kept by trim).
using UPoly = std::vector<Rational>;

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(Int(k)));
    trim(d);
    return d;
}

// Euclidean remainder, with monic normalization of each remainder to keep
// the coefficient growth in check.
UPoly remainder(UPoly a, const UPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        a.pop_back(); // leading term cancels exactly
        trim(a);
    }
    return a;
}

bool gcd_is_constant(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            Rational lead = b.back();
            for (auto& c : b) c /= lead;
        }
    }
    return a.size() == 1;
}

UPoly restrict_to_y2_zero(const Poly2& r2)
{
    UPoly u;
    for (const auto& [m, c] : r2.terms()) {
        if (m.b != 0) continue;
        if (u.size() <= static_cast<std::size_t>(m.a)) u.resize(m.a + 1, Rational(0));
        u[m.a] = c;
    }
    trim(u);
    return u;
}

} // namespace

CurveSpec validate_curve(const Poly2& r)
{
    if (r.is_zero()) throw std::invalid_argument("curve polynomial is zero");
    int d = *r.degree();
    if (d < 1) throw std::invalid_argument("curve polynomial is constant");

    CurveSpec spec;
    spec.r = r;
    spec.d = d;
    spec.adapted.monomial_xd_present = r.coefficient(d, 0) != 0;
    spec.adapted.monomial_yd_present = r.coefficient(0, d) != 0;

    // Transversal crossing of the line at infinity: the restriction of the
    // chart image to {y2 = 0} must be squarefree of full degree d.
    UPoly r2 = restrict_to_y2_zero(chart_numerator(r, d));
    bool full_degree = r2.size() == static_cast<std::size_t>(d) + 1;
    spec.adapted.infinity_transversal =
        full_degree && (r2.size() <= 1 || gcd_is_constant(r2, derivative(r2)));
    return spec;
}

Poly2 chart_numerator(const Poly2& q, int weight)
{
    if (!q.is_zero() && *q.degree() > weight)
        throw std::invalid_argument("chart weight below polynomial degree");
    Poly2 image;
    for (const auto& [m, c] : q.terms())
        image.add_term(m.a, weight - m.a - m.b, c);
    return image;
}

Poly2 infinity_chart(const CurveSpec& c)
{
    if (c.r.degree() != std::optional<int>(c.d))
        throw std::invalid_argument("declared curve degree does not match polynomial");
    return chart_numerator(c.r, c.d);
}

ChartTransferReport chart_partial_transfer(const CurveSpec& c)
{
    // Left side: R_x has degree <= d-1, so its chart numerator at weight d-1
    // is exactly y2^(d-1) * R_x(x2/y2, 1/y2).
    Poly2 lhs = chart_numerator(partial(c.r, 1, 0), c.d - 1);
    Poly2 rhs = partial(infinity_chart(c), 1, 0);
    ChartTransferReport report;
    report.residual = lhs - rhs;
    report.pass = report.residual.is_zero();
    return report;
}

} // namespace jetcurve
