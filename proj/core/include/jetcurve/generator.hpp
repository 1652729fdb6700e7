#pragma once

#include <jetcurve/jet_expression.hpp>

#include <map>
#include <utility>
#include <vector>

namespace jetcurve {

/// Matched pair of trivialized jet differentials: `left` lives on {R_x != 0}
/// in y-jets, `right` on {R_y != 0} in x-jets.  The construction keeps the
/// two sides exact mirror-negatives of each other; that property is verified
/// by tests rather than assumed here, since both sides are built by
/// independent runs of the same recursion.
struct GeneratorPair {
    JetExpression left;
    JetExpression right;
};

/// The order-kappa generating jet differential.  Base: y'/R_x and -x'/R_y.
/// Step: total differentiation, rewriting of the single foreign derivative,
/// then removal of the symmetric first-order pairs that cancel between the
/// two sides.  Results are memoized; kappa >= 1.
const GeneratorPair& generate(int kappa);

/// Hand-transcribed order-2 and order-3 pairs from the stepwise elimination
/// construction.  Order 2 coincides with generate(2) exactly; order 3 is a
/// different normal form of the same differential — the forms take equal
/// values on curve jets whenever the curve's mixed partials R_xy, R_xxy,
/// R_xyy vanish (pure-power curves), and differ pointwise otherwise.
const std::map<int, GeneratorPair>& elimination_forms();

/// One way the blocks of a partition split between the two letters:
/// x_counts[a] of the multiplicities[a].second blocks of that size
/// differentiate in x, the rest in y.
struct FaaAssignment {
    std::vector<int> x_counts;
    Int weight;      // product over block sizes of binom(count, x_count)
    DSym symbol;     // attached R_{i,j}: i = total x blocks, j = total y blocks
};

/// One partition term of d^kappa/dzeta^kappa R: block sizes with
/// multiplicities (sizes descending), the exact multinomial coefficient, and
/// all letter splits.  With one letter there is a single all-x split.
struct FaaTerm {
    std::vector<std::pair<int, int>> multiplicities;  // (block size, count)
    Int coefficient;  // kappa! / prod(size!^count * count!)
    int block_count;  // total blocks = order of the attached symbol
    std::vector<FaaAssignment> assignments;
};

/// Complete expansion of the kappa-th total derivative of R along a disc,
/// partitions enumerated largest-part-first.  vars selects one or two
/// letters; kappa >= 1.
std::vector<FaaTerm> faa_di_bruno(int kappa, int vars = 2);

/// Jet coordinates of one letter written in the other's: components[l-1]
/// expresses y^(l) as a y_side expression in x-jets (so its mirror gives
/// x^(l) in y-jets).  Built by differentiating the order-1 relation.
struct TrivializationMap {
    int order = 0;
    std::vector<JetExpression> components;

    TrivializationMap mirrored() const;
};

TrivializationMap trivialization_change(int kappa);

} // namespace jetcurve
