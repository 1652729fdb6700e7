// Sparse exact-rational bivariate polynomials: the ring Q[x,y] that holds the
// curve equation, its partial derivatives, and the infinity-chart images.
#pragma once

#include "jetcurve/rational.hpp"

#include <cassert>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace jetcurve {

/// Exponent pair of one monomial x^a y^b.
struct Mono2 {
    int a = 0;
    int b = 0;
    friend constexpr auto operator<=>(const Mono2&, const Mono2&) = default;
    constexpr int degree() const { return a + b; }
};

/// Graded-lexicographic order with x major, largest term first, so that map
/// iteration yields the canonical printing order (x^2 before x*y before y^2,
/// higher total degree before lower).
struct Mono2GrlexDesc {
    constexpr bool operator()(const Mono2& lhs, const Mono2& rhs) const
    {
        if (lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
        return lhs.a > rhs.a;
    }
};

class Poly2 {
public:
    using TermMap = std::map<Mono2, Rational, Mono2GrlexDesc>;

    Poly2() = default;

    static Poly2 constant(const Rational& c);
    static Poly2 monomial(int a, int b, const Rational& c);

    bool is_zero() const { return terms_.empty(); }

    /// Total degree; nullopt is the zero polynomial's "minus infinity".
    std::optional<int> degree() const { return degree_; }

    const TermMap& terms() const { return terms_; }

    Rational coefficient(int a, int b) const;

    /// Adds c*x^a*y^b, erasing the slot if the sum cancels.
    void add_term(int a, int b, const Rational& c);

    Poly2& operator+=(const Poly2& rhs);
    Poly2& operator-=(const Poly2& rhs);
    friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
    friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
    friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
    friend Poly2 operator*(const Poly2& p, const Rational& c);
    friend Poly2 operator*(const Rational& c, const Poly2& p) { return p * c; }
    friend Poly2 operator-(const Poly2& p) { return p * Rational(-1); }

    friend bool operator==(const Poly2&, const Poly2&) = default;

    /// Evaluation over Rational, double, or std::complex<double>.
    template <typename K>
    K eval(const K& x, const K& y) const
    {
        K acc{};
        for (const auto& [m, c] : terms_)
            acc += scalar_cast<K>(c) * pow_(x, m.a) * pow_(y, m.b);
        return acc;
    }

    /// Smallest power of y occurring in any term; nullopt for the zero
    /// polynomial. This is the y-adic valuation used by the infinity checks.
    std::optional<int> min_y_exponent() const;

    /// Exact division by y^k (every term must carry at least y^k).
    Poly2 divided_by_y_power(int k) const;

    /// Multiplication by x^a y^b.
    Poly2 shifted(int a, int b) const;

private:
    template <typename K>
    static K pow_(const K& v, int e)
    {
        K r = scalar_cast<K>(Rational(1));
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    }

    void recompute_degree_();

    TermMap terms_;
    std::optional<int> degree_;
};

/// Exact mixed partial d^(i+j) p / dx^i dy^j.
Poly2 partial(const Poly2& p, int i, int j);

/// Thrown by parse_poly; offset is the byte position of the offending input.
struct poly_parse_error : std::invalid_argument {
    std::size_t offset;
    poly_parse_error(const std::string& what, std::size_t off)
        : std::invalid_argument(what + " (at byte " + std::to_string(off) + ")"), offset(off)
    {}
};

/// Grammar:
///   expr  := ('+'|'-')? term (('+'|'-') term)*
///   term  := coeff ('*' mono)? | mono
///   mono  := 'x' ('^' uint)? ('*' 'y' ('^' uint)?)? | 'y' ('^' uint)?
///   coeff := int ('/' uint)?
/// Whitespace is permitted between tokens.
Poly2 parse_poly(std::string_view text);

/// Canonical rendering; parse_poly(to_string(p)) == p.
std::string to_string(const Poly2& p);

std::ostream& operator<<(std::ostream& out, const Poly2& p);

} // namespace jetcurve
