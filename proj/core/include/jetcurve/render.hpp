#pragma once

#include <jetcurve/generator.hpp>

#include <string>

namespace jetcurve {

/// "R[i,j]".
std::string to_string(DSym s);

/// "y'", "x''", "y^(4)", ... for the k-th derivative of the side's active
/// letter (k >= 1).
std::string jet_variable_name(Side side, int k);

/// One line per jet monomial.  The coefficient of each jet monomial is
/// printed with the denominator reduced monomial-by-monomial, products of
/// higher-order symbols first, e.g.
///
///   y'''/R[1,0]
///   + y''y'*[-3*R[1,1]/R[1,0]^2 + 3*R[0,1]*R[2,0]/R[1,0]^3]
///
/// Deterministic: equal expressions render byte-identically.
std::string to_display_string(const JetExpression& e);

/// Both sides, with "left:" / "right:" headers.
std::string to_display_string(const GeneratorPair& g);

/// One line per component: "y' = ...", "y'' = ...".
std::string to_display_string(const TrivializationMap& m);

/// One line per block structure: "[coeff] (multiplicities) -> assignments".
std::string to_display_string(const std::vector<FaaTerm>& terms);

}  // namespace jetcurve
