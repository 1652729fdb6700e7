// Curve-level operations: validation of the adapted-coordinate hypotheses,
// the affine chart at infinity, and the chart transfer law for partials.
#pragma once

#include "jetcurve/poly2.hpp"

namespace jetcurve {

/// Validation report for the coordinate hypotheses a curve must satisfy.
/// Affine smoothness is deliberately NOT part of this report: deciding it
/// exactly would need resultant/Groebner machinery, so it stays a caller
/// assertion and the numeric layer fails loudly at singular points instead.
struct AdaptedReport {
    bool monomial_xd_present = false;  // coefficient of x^d nonzero
    bool monomial_yd_present = false;  // coefficient of y^d nonzero
    bool infinity_transversal = false; // R2(x2,0) squarefree of degree d
    bool all() const { return monomial_xd_present && monomial_yd_present && infinity_transversal; }
};

struct CurveSpec {
    Poly2 r;
    int d = 0; // total degree of r
    AdaptedReport adapted;
};

/// Builds the validation report. Throws std::invalid_argument for the zero
/// polynomial or degree < 1; geometric failures are reported as false flags,
/// never as errors.
CurveSpec validate_curve(const Poly2& r);

/// The numerator of q composed with the chart map (x,y) -> (x2/y2, 1/y2),
/// homogenized to the given weight: sum of c[a,b] * x2^a * y2^(weight-a-b).
/// Requires weight >= degree(q).
Poly2 chart_numerator(const Poly2& q, int weight);

/// R2(x2,y2) = y2^d * R(x2/y2, 1/y2). Throws std::invalid_argument when the
/// declared degree does not match the actual degree of c.r.
Poly2 infinity_chart(const CurveSpec& c);

/// Verifies y2^(d-1) * (R_x composed with the chart) == d/dx2 of R2 as an
/// exact polynomial identity. residual is zero on pass.
struct ChartTransferReport {
    bool pass = false;
    Poly2 residual;
};
ChartTransferReport chart_partial_transfer(const CurveSpec& c);

} // namespace jetcurve
