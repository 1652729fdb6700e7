#pragma once

#include <jetcurve/curve.hpp>
#include <jetcurve/generator.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace jetcurve {

struct EvalConfig {
    enum class Mode { exact, floating };
    Mode mode = Mode::exact;
    double rel_tol = 1e-9;   // floating comparisons: relative tolerance
    double abs_floor = 1e-12;  // magnitude below which values count as zero
};

/// A disc on the curve through a rational base point, with exact jets of
/// both letters: x_jets[k] / y_jets[k] hold the k-th derivative at t = 0,
/// index 0 being the base point coordinates.
struct SeriesPoint {
    CurveSpec curve;
    int order = 0;
    Side side = Side::y_side;  // the side whose denominator letter was solved
    std::vector<Rational> x_jets;
    std::vector<Rational> y_jets;
};

/// Solves the side's denominator letter as a graph over the other along the
/// straight disc (independent letter)' = 1: for Side::y_side this is
/// y = Y(x) with x(t) = xp + t.  Throws std::invalid_argument when the point
/// is off the curve and std::domain_error when the needed partial vanishes.
SeriesPoint local_graph_series(const CurveSpec& curve, const Rational& xp, const Rational& yp,
                               Side side, int order);

/// Same, but along an arbitrary disc: indep_jets[k-1] is the k-th derivative
/// of the independent letter (k = 1..order).
SeriesPoint local_graph_series_jets(const CurveSpec& curve, const Rational& xp, const Rational& yp,
                                    Side side, int order,
                                    const std::vector<Rational>& indep_jets);

/// Exact value of a jet expression on the disc: derivatives of the
/// expression's active letter come from the disc, symbol values from the
/// curve's partials at the base point.  Throws std::domain_error when the
/// denominator partial vanishes there and std::invalid_argument when the
/// disc is too short.
Rational eval_jet_expression(const JetExpression& e, const SeriesPoint& s);

/// Same pipeline run in complex floating point (jets and symbol values are
/// converted first).
std::complex<double> eval_jet_expression_float(const JetExpression& e, const SeriesPoint& s);

/// Largest absolute residual of the composite chain-rule identities
/// d^k/dt^k R(x(t), y(t)) = 0 for k = 0..s.order on the disc's jets;
/// exactly zero for discs produced by the local series solvers.
Rational max_faa_residual(const SeriesPoint& s);

struct AgreementReport {
    int kappa = 0;
    bool exact = true;
    bool pass = false;  // generate(kappa): left value == right value
    std::string left_value;
    std::string right_value;
    double residual = 0.0;  // floating mode only
    /// order -> (eliminated normal form evaluates equal to generate(order));
    /// orders 2 and 3 when kappa allows.  Order 3 agrees exactly on curves
    /// whose mixed partials vanish along the curve and may differ otherwise.
    std::map<int, bool> elimination_equal;
};

/// Evaluates both sides of generate(kappa) on one disc through (xp, yp) and
/// compares them; also evaluates the eliminated normal forms on the same
/// disc.  Exact mode compares rationals for equality; floating mode uses
/// cfg.rel_tol against cfg.abs_floor.
AgreementReport check_generator_agreement(int kappa, const CurveSpec& curve, const Rational& xp,
                                          const Rational& yp, const EvalConfig& cfg);

struct RoundtripReport {
    int kappa = 0;
    bool exact = true;
    bool pass = false;
    double max_residual = 0.0;
    std::vector<std::string> input_jets;   // x', ..., x^(kappa) fed in
    std::vector<std::string> output_jets;  // values recovered after the roundtrip
};

/// Feeds x-jets through the graph-change components (producing y-jets), then
/// through their mirror (recovering x-jets), and compares: the composite is
/// the identity.  Empty x_jets selects a fixed nontrivial default.
RoundtripReport check_trivialization_roundtrip(int kappa, const CurveSpec& curve,
                                               const Rational& xp, const Rational& yp,
                                               const EvalConfig& cfg,
                                               std::vector<Rational> x_jets = {});

struct ProbeReport {
    int kappa = 0;
    int d = 0;
    double expected_slope = 0.0;  // d - kappa - 2
    double slope = 0.0;           // fitted d log|value| / d log y2
    bool pass = false;            // |slope - expected| <= 0.2
    std::vector<std::pair<double, double>> samples;  // (y2, |value|)
};

/// Follows a branch of the curve toward the line at infinity in the second
/// chart (y2 from 1e-2 down to 1e-3), evaluates generate(kappa).left on the
/// corresponding affine discs, and fits the decay exponent of |value|
/// against y2, which matches d - kappa - 2.
ProbeReport probe_infinity_vanishing(int kappa, const CurveSpec& curve, const EvalConfig& cfg);

}  // namespace jetcurve
