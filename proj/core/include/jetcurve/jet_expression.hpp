#pragma once

#include <jetcurve/dsym.hpp>

#include <map>
#include <optional>
#include <vector>

namespace jetcurve {

/// Which trivialization an expression lives in.  On x_side the active jet
/// letter is y (fiber coordinates y', y'', ...) and every denominator is a
/// power of R_x; y_side is the image under the x <-> y involution.
enum class Side { x_side, y_side };

constexpr Side opposite(Side s) { return s == Side::x_side ? Side::y_side : Side::x_side; }

/// R_x on x_side, R_y on y_side: the symbol whose powers sit under every term.
constexpr DSym denominator_symbol(Side s) { return s == Side::x_side ? DSym{1, 0} : DSym{0, 1}; }

/// The other letter's first-order symbol (R_y on x_side): the factor picked
/// up when a stray foreign derivative is rewritten through the order-1
/// relation x'*R_x + y'*R_y = 0.
constexpr DSym cofactor_symbol(Side s) { return s == Side::x_side ? DSym{0, 1} : DSym{1, 0}; }

/// Monomial in one side's jet coordinates.  mu[k] is the exponent of the
/// (k+1)-st derivative of the active letter; foreign_pow counts powers of the
/// other letter's first derivative, which appear transiently during total
/// differentiation and are zero in any normalized expression.
struct JetMonomial {
    std::vector<int> mu;
    int foreign_pow = 0;

    /// mu trimmed of trailing zeros (the class invariant all factories keep).
    static JetMonomial make(std::vector<int> mu, int foreign_pow = 0);

    /// The single factor v^(k), k >= 1.
    static JetMonomial derivative(int k, int exp = 1);

    bool is_unit() const { return mu.empty() && foreign_pow == 0; }

    /// Weight Sum k*mu[k-1], counting each foreign first-order factor once.
    int weight() const;

    /// True for a pure power (v')^e, e >= 1, with no foreign factor.
    bool is_pure_first_order() const { return foreign_pow == 0 && mu.size() == 1; }

    JetMonomial times(const JetMonomial& other) const;

    friend bool operator==(const JetMonomial&, const JetMonomial&) = default;
};

/// Canonical term order: heavier monomials first, then exponents compared
/// from the highest derivative downward (larger first), foreign power last.
struct JetMonomialOrder {
    bool operator()(const JetMonomial& a, const JetMonomial& b) const;
};

/// Coefficient of one jet monomial: a symbol polynomial over a single power
/// of the side's denominator symbol.
struct JetCoef {
    DPoly num;
    int denom_pow = 0;

    friend bool operator==(const JetCoef&, const JetCoef&) = default;
};

/// Sum of jet monomials with DPoly/denominator-power coefficients, all over
/// one side.  Addition merges coefficients at the larger denominator power;
/// normalize() cancels powers common to a numerator and its denominator.
class JetExpression {
public:
    using TermMap = std::map<JetMonomial, JetCoef, JetMonomialOrder>;

    explicit JetExpression(Side side = Side::x_side) : side_(side) {}

    Side side() const { return side_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    static JetExpression zero(Side side) { return JetExpression(side); }
    static JetExpression term(Side side, const JetMonomial& jm, DPoly num, int denom_pow);

    /// Merging addition; both operands must live on the same side.
    JetExpression& operator+=(const JetExpression& other);
    friend JetExpression operator+(JetExpression a, const JetExpression& b) { a += b; return a; }
    JetExpression operator*(const Rational& c) const;
    JetExpression operator*(const JetExpression& other) const;
    JetExpression operator-() const;

    /// Cancel denominator powers shared by every numerator term; drop zeros.
    void normalize();

    bool has_foreign() const;

    friend bool operator==(const JetExpression&, const JetExpression&) = default;

private:
    Side side_;
    TermMap terms_;

    void add_term_(const JetMonomial& jm, const JetCoef& coef);
};

/// Formal d/dzeta along a disc: jet exponents shift up by Leibniz, symbols
/// differentiate through the chain rule (introducing one foreign first
/// derivative per symbol factor), denominators step up one power.  The input
/// must carry no foreign factor.
JetExpression total_derivative(const JetExpression& e);

/// Rewrite every foreign first derivative through the order-1 relation
/// (x' = -y' R_y/R_x on x_side, mirrored on y_side); the result is back in
/// the side's own jet coordinates.
JetExpression substitute_foreign_first_order(const JetExpression& e);

/// Image under the x <-> y involution: side flipped, every symbol mirrored.
JetExpression mirror(const JetExpression& e);

/// Common weight of all jet monomials; nullopt when mixed or zero.
std::optional<int> uniform_weight(const JetExpression& e);

} // namespace jetcurve
