#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jetcurve/curve.hpp>
#include <jetcurve/poly2.hpp>
#include <jetcurve/rational.hpp>

using namespace jetcurve;

TEST_CASE("make_rational normalizes sign and common factors")
{
    CHECK(make_rational(2, 4) == Rational(1) / 2);
    CHECK(make_rational(-2, 4) == Rational(-1) / 2);
    CHECK(make_rational(1, -2) == Rational(-1) / 2);
    CHECK(make_rational(-3, -6) == Rational(1) / 2);
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("factorial and binomial helpers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(Int(50), 25) == Int("126410606437752"));
}

TEST_CASE("rational_from_string")
{
    CHECK(rational_from_string("3/4") == make_rational(3, 4));
    CHECK(rational_from_string("-7") == -7);
    CHECK(rational_from_string("0") == 0);
    CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::domain_error);
}

TEST_CASE("Poly2 arithmetic basics")
{
    Poly2 x = Poly2::monomial(1, 0, 1);
    Poly2 y = Poly2::monomial(0, 1, 1);
    Poly2 one = Poly2::constant(1);

    Poly2 p = x * x + y * Rational(2) - one;
    CHECK(p.coefficient(2, 0) == 1);
    CHECK(p.coefficient(0, 1) == 2);
    CHECK(p.coefficient(0, 0) == -1);
    CHECK(p.coefficient(1, 1) == 0);
    CHECK(p.degree() == 2);

    Poly2 q = p - p;
    CHECK(q.is_zero());
    CHECK_FALSE(q.degree().has_value());

    // (x + y)^2 = x^2 + 2xy + y^2
    Poly2 s = (x + y) * (x + y);
    CHECK(s == x * x + x * y * Rational(2) + y * y);

    // cancellation inside a product updates the degree
    Poly2 diff = (x + y) * (x - y); // x^2 - y^2
    CHECK(diff.coefficient(1, 1) == 0);
    CHECK(diff.degree() == 2);
}

TEST_CASE("Poly2 eval template works for exact and floating scalars")
{
    Poly2 p = parse_poly("x^2 + 3*x*y - 1/2");
    CHECK(p.eval<Rational>(Rational(2), Rational(3)) == Rational(2 * 2 + 18) - make_rational(1, 2));
    double v = p.eval<double>(2.0, 3.0);
    CHECK(v == doctest::Approx(21.5));
}

TEST_CASE("partial derivatives")
{
    Poly2 r = parse_poly("x^4 + y^4 - 2");
    CHECK(partial(r, 1, 0) == parse_poly("4*x^3"));
    CHECK(partial(r, 0, 1) == parse_poly("4*y^3"));
    CHECK(partial(r, 2, 0) == parse_poly("12*x^2"));
    CHECK(partial(r, 1, 1).is_zero());
    CHECK(partial(r, 0, 4) == Poly2::constant(24));
    CHECK(partial(r, 0, 5).is_zero());

    // mixed-term polynomial: d/dx d/dy (x^2 y^3) = 6 x y^2
    CHECK(partial(parse_poly("x^2*y^3"), 1, 1) == parse_poly("6*x*y^2"));

    // partials commute
    Poly2 g = parse_poly("x^3*y^2 + 5*x*y - y^4 + 7");
    CHECK(partial(partial(g, 1, 0), 0, 1) == partial(g, 1, 1));
}

TEST_CASE("parse_poly accepts the documented grammar")
{
    CHECK(parse_poly("x^4 + y^4 - 2") == Poly2::monomial(4, 0, 1) + Poly2::monomial(0, 4, 1) +
                                             Poly2::constant(-2));
    CHECK(parse_poly("x*y") == Poly2::monomial(1, 1, 1));
    CHECK(parse_poly("3*x^2*y") == Poly2::monomial(2, 1, 3));
    CHECK(parse_poly("1/2*x - 2/3") == Poly2::monomial(1, 0, make_rational(1, 2)) +
                                           Poly2::constant(make_rational(-2, 3)));
    CHECK(parse_poly("-x + y") == Poly2::monomial(1, 0, -1) + Poly2::monomial(0, 1, 1));
    CHECK(parse_poly("  x ^ 2  +  y ") == parse_poly("x^2 + y"));
    CHECK(parse_poly("x + x") == Poly2::monomial(1, 0, 2));
    CHECK(parse_poly("x - x") == Poly2{});
}

TEST_CASE("parse_poly reports the byte offset of the failure")
{
    auto offset_of = [](std::string_view text) {
        try {
            parse_poly(text);
        } catch (const poly_parse_error& e) {
            return e.offset;
        }
        return static_cast<std::size_t>(-1);
    };

    CHECK(offset_of("") == 0);
    CHECK(offset_of("x^") == 2);       // missing exponent digits
    CHECK(offset_of("x + z") == 4);    // unknown letter
    CHECK(offset_of("1/0") == 2);      // zero denominator
    CHECK(offset_of("x^4 y") == 4);    // juxtaposition is not multiplication
    CHECK(offset_of("x*3") == 1);      // '*' must be followed by 'y' here
    CHECK_THROWS_AS(parse_poly("x^9999999"), poly_parse_error);
}

TEST_CASE("to_string prints grlex order with x major and round-trips")
{
    CHECK(to_string(parse_poly("y^4 + x^4 - 2")) == "x^4 + y^4 - 2");
    CHECK(to_string(parse_poly("y^2 + x*y + x^2")) == "x^2 + x*y + y^2");
    CHECK(to_string(Poly2{}) == "0");
    CHECK(to_string(parse_poly("-x + 1/2")) == "-x + 1/2");
    CHECK(to_string(parse_poly("2*x^3*y^2")) == "2*x^3*y^2");

    for (std::string_view s : {"x^4 + y^4 - 2", "x^2 + 2*x*y + y^2", "1/3*x^5 - y + 7",
                               "x^6 + y^6 + x*y - 1"}) {
        Poly2 p = parse_poly(s);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("validate_curve flags the adapted-coordinate hypotheses")
{
    // Fermat quartic: all hypotheses hold.
    CurveSpec fermat = validate_curve(parse_poly("x^4 + y^4 - 2"));
    CHECK(fermat.d == 4);
    CHECK(fermat.adapted.monomial_xd_present);
    CHECK(fermat.adapted.monomial_yd_present);
    CHECK(fermat.adapted.infinity_transversal);
    CHECK(fermat.adapted.all());

    // (x + y)^2: top form is a square, so R2(x2, 0) = (x2 + 1)^2 is not
    // squarefree even though both pure powers are present.
    CurveSpec sq = validate_curve(parse_poly("x^2 + 2*x*y + y^2"));
    CHECK(sq.adapted.monomial_xd_present);
    CHECK(sq.adapted.monomial_yd_present);
    CHECK_FALSE(sq.adapted.infinity_transversal);

    // x^2 + y: missing y^d.
    CurveSpec par = validate_curve(parse_poly("x^2 + y"));
    CHECK(par.d == 2);
    CHECK(par.adapted.monomial_xd_present);
    CHECK_FALSE(par.adapted.monomial_yd_present);

    // y^3 + x: missing x^d.
    CurveSpec cub = validate_curve(parse_poly("y^3 + x"));
    CHECK_FALSE(cub.adapted.monomial_xd_present);
    CHECK(cub.adapted.monomial_yd_present);

    CHECK_THROWS_AS(validate_curve(Poly2{}), std::invalid_argument);
    CHECK_THROWS_AS(validate_curve(Poly2::constant(3)), std::invalid_argument);
}

TEST_CASE("chart_numerator homogenizes through the second chart")
{
    // q = x^2 + y - 1 at weight 2: x2^2 + y2 - y2^2.
    Poly2 q = parse_poly("x^2 + y - 1");
    Poly2 n = chart_numerator(q, 2);
    CHECK(n.coefficient(2, 0) == 1);
    CHECK(n.coefficient(0, 1) == 1);
    CHECK(n.coefficient(0, 2) == -1);

    // weight above the degree pads with extra y2 powers
    Poly2 n3 = chart_numerator(q, 3);
    CHECK(n3 == n * Poly2::monomial(0, 1, 1));
}

TEST_CASE("infinity_chart substitutes (x, y) -> (x2/y2, 1/y2) and clears y2^d")
{
    CurveSpec c = validate_curve(parse_poly("x^4 + y^4 - 2"));
    Poly2 r2 = infinity_chart(c);
    CHECK(r2 == parse_poly("x^4 - 2*y^4 + 1")); // in the (x2, y2) letters
    // On the line at infinity y2 = 0 the restriction is x2^4 + 1.
    CHECK(r2.eval<Rational>(Rational(1), Rational(0)) == 2);
}

TEST_CASE("chart transfer law for the x-partial is an exact identity")
{
    for (std::string_view s :
         {"x^3 + y^3 + x", "x^4 + y^4 - 2", "x^6 + y^6 + x*y - 1", "x^5 + y^5 + x^2*y^2 - 3"}) {
        CurveSpec c = validate_curve(parse_poly(s));
        ChartTransferReport rep = chart_partial_transfer(c);
        CHECK(rep.pass);
        CHECK(rep.residual.is_zero());
    }
}
