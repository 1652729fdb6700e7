#pragma once

#include <jetcurve/rational.hpp>

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace jetcurve {

/// Formal symbol for a mixed partial derivative of the defining polynomial:
/// DSym{i, j} is the i-fold x, j-fold y derivative.  Symbols are free
/// commuting indeterminates at this layer; no concrete curve is involved.
struct DSym {
    int i = 0;
    int j = 0;

    friend constexpr auto operator<=>(const DSym&, const DSym&) = default;
};

/// Total differentiation order: 1 for R_x, 3 for R_xxy.
constexpr int sym_order(DSym s) { return s.i + s.j; }

constexpr DSym mirror_sym(DSym s) { return DSym{s.j, s.i}; }

/// Power product of derivative symbols, e.g. R_y^2 R_xx R_xy.  Factors are
/// kept sorted with strictly positive exponents, so default comparison is a
/// total order usable as a map key.
class DMonomial {
public:
    DMonomial() = default;

    static DMonomial unit() { return DMonomial{}; }

    bool is_unit() const { return factors_.empty(); }
    const std::vector<std::pair<DSym, int>>& factors() const { return factors_; }

    int exponent(DSym s) const;

    /// Number of symbol factors, counted with multiplicity.
    int symbol_count() const;

    /// Factors of order >= 2, with multiplicity (first-order symbols excluded).
    int higher_count() const;

    /// Sum of (order - 1) over factors of order >= 2: the amount by which
    /// these factors raise the vanishing order at infinity.
    int higher_excess() const;

    /// True when some factor is a first-order symbol (R_x or R_y).
    bool has_first_order() const;

    DMonomial times(DSym s, int k = 1) const;
    DMonomial times(const DMonomial& other) const;

    /// Remove s^k; throws std::logic_error if the exponent is insufficient.
    DMonomial divided_by(DSym s, int k) const;

    DMonomial mirrored() const;
    bool is_mirror_symmetric() const { return mirrored() == *this; }

    friend auto operator<=>(const DMonomial&, const DMonomial&) = default;

private:
    std::vector<std::pair<DSym, int>> factors_;
};

/// Polynomial with rational coefficients in the derivative symbols.
class DPoly {
public:
    using TermMap = std::map<DMonomial, Rational>;

    DPoly() = default;

    static DPoly zero() { return DPoly{}; }
    static DPoly constant(const Rational& c);
    static DPoly symbol(DSym s, int k = 1);
    static DPoly monomial(const DMonomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const DMonomial& m) const;

    void add_term(const DMonomial& m, const Rational& c);

    DPoly& operator+=(const DPoly& other);
    DPoly& operator-=(const DPoly& other);
    DPoly operator*(const DPoly& other) const;
    DPoly operator*(const Rational& c) const;
    DPoly operator-() const;
    friend DPoly operator+(DPoly a, const DPoly& b) { a += b; return a; }
    friend DPoly operator-(DPoly a, const DPoly& b) { a -= b; return a; }

    /// Multiply every term by s^k, k >= 0.
    DPoly times_symbol(DSym s, int k = 1) const;

    /// Smallest exponent of s across terms; 0 for the zero polynomial.
    int min_exponent(DSym s) const;

    /// Divide every term by s^k; throws std::logic_error if some term lacks it.
    DPoly divided_by_symbol(DSym s, int k) const;

    DPoly mirrored() const;

    friend bool operator==(const DPoly&, const DPoly&) = default;

private:
    TermMap terms_;
};

} // namespace jetcurve
