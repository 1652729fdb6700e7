#pragma once

#include <jetcurve/curve.hpp>
#include <jetcurve/generator.hpp>

#include <map>
#include <vector>

namespace jetcurve {

/// Sparse integer polynomial in the chart coordinate y2 and its formal
/// derivatives: key[0] is the y2 exponent, key[k] (k >= 1) the exponent of
/// the k-th derivative.  All keys in one polynomial have equal length.
using JetPolyKey = std::vector<int>;
using JetPoly = std::map<JetPolyKey, Int>;

/// The lambda-th derivative of 1/y2 along a disc, written as
/// numerator / y2^(lambda+1) with a polynomial numerator in y2 and its
/// derivatives (keys of length lambda+1, denom_pow = lambda+1).
struct TransferJet {
    int order = 0;
    JetPoly numerator;
    int denom_pow = 0;
};

/// Built by the recurrence N_1 = -y2', N_{l+1} = y2*dN_l - (l+1)*y2'*N_l.
TransferJet transfer_jet(int lambda);

/// Vanishing order at the line at infinity of one generator term
/// c * (jet monomial) * (symbol monomial) / denom^p on a degree-d curve:
/// each k-th derivative factor contributes -(k+1), the denominator d-1, and
/// each symbol factor of order i+j >= 2 contributes i+j-1.  Throws
/// std::logic_error when p != 1 + (symbol count of the monomial), which no
/// well-formed generator term violates, and when a foreign factor remains.
int monomial_infinity_order(const JetMonomial& jm, const DMonomial& m, int denom_pow, int d);

struct MonomialOrderEntry {
    JetMonomial jet;
    DMonomial coeff_monomial;
    int order = 0;
};

struct InfinityReport {
    int kappa = 0;
    int d = 0;
    std::vector<MonomialOrderEntry> monomials;
    bool uniform = false;
    int uniform_value = 0;
};

/// Tabulates monomial_infinity_order over every term of g.left and reports
/// whether all orders agree (they do, with common value d - kappa - 2).
InfinityReport verify_uniform_order(const GeneratorPair& g, int d);

struct TransferTermObservation {
    JetMonomial jet;
    DMonomial coeff_monomial;
    int expected_order = 0;  // integer bookkeeping
    int observed_order = 0;  // y2-valuation in the concrete chart
    bool degenerate = false; // a chart factor vanished or lost its constant term
};

struct TransferCheckReport {
    int kappa = 0;
    int d = 0;
    int required_order = 0;  // d - kappa - 2
    int observed_order = 0;  // valuation of the combined numerator, shifted
    bool pass = false;
    std::vector<TransferTermObservation> terms;
};

/// Substitutes the degree-d chart relations and the 1/y2 transfer jets into
/// generate(kappa).left for the given curve, clears all denominators, and
/// reads off the y2-valuation of the result: pass means the differential
/// extends across y2 = 0 with vanishing order >= d - kappa - 2 away from the
/// chart branch points.  Requires kappa <= 3 (expression swell beyond that)
/// and a curve whose infinity_transversal flag holds.
TransferCheckReport symbolic_transfer_check(const CurveSpec& curve, int kappa);

}  // namespace jetcurve
