#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jetcurve/infinity.hpp>

#include <numeric>
#include <vector>

using namespace jetcurve;

namespace {

/// Exact derivatives (0..order) of 1/u(t) at t = 0 computed through the
/// reciprocal power series — an oracle fully independent of the transfer-jet
/// recurrence.
std::vector<Rational> reciprocal_jets(const std::vector<Rational>& jets, int order)
{
    REQUIRE(jets.size() >= static_cast<std::size_t>(order) + 1);
    REQUIRE(jets[0] != 0);
    std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        a[static_cast<std::size_t>(k)] = jets[static_cast<std::size_t>(k)] / Rational(factorial(k));
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1) / a[0];
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j) acc += a[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - j)];
        c[static_cast<std::size_t>(n)] = -acc / a[0];
    }
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        out[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * Rational(factorial(k));
    return out;
}

Rational eval_transfer(const TransferJet& t, const std::vector<Rational>& jets)
{
    Rational total = 0;
    for (const auto& [key, c] : t.numerator) {
        Rational prod(c);
        for (std::size_t k = 0; k < key.size(); ++k)
            for (int e = 0; e < key[k]; ++e) prod *= jets[k];
        total += prod;
    }
    Rational denom = 1;
    for (int e = 0; e < t.denom_pow; ++e) denom *= jets[0];
    return total / denom;
}

} // namespace

TEST_CASE("transfer jets: exact low-order numerators")
{
    TransferJet n1 = transfer_jet(1);
    CHECK(n1.order == 1);
    CHECK(n1.denom_pow == 2);
    CHECK(n1.numerator == JetPoly{{JetPolyKey{0, 1}, Int(-1)}});

    TransferJet n2 = transfer_jet(2);
    CHECK(n2.denom_pow == 3);
    CHECK(n2.numerator == JetPoly{{JetPolyKey{0, 2, 0}, Int(2)}, {JetPolyKey{1, 0, 1}, Int(-1)}});

    TransferJet n3 = transfer_jet(3);
    CHECK(n3.denom_pow == 4);
    CHECK(n3.numerator == JetPoly{{JetPolyKey{0, 3, 0, 0}, Int(-6)},
                                  {JetPolyKey{1, 1, 1, 0}, Int(6)},
                                  {JetPolyKey{2, 0, 0, 1}, Int(-1)}});

    CHECK_THROWS_AS(transfer_jet(0), std::invalid_argument);
}

TEST_CASE("transfer jets: structural invariants through order 8")
{
    for (int lambda = 1; lambda <= 8; ++lambda) {
        TransferJet t = transfer_jet(lambda);
        CHECK(t.denom_pow == lambda + 1);
        for (const auto& [key, c] : t.numerator) {
            CHECK(key.size() == static_cast<std::size_t>(lambda) + 1);
            CHECK(c != 0);
            int weight = 0, factors = 0;
            for (std::size_t k = 1; k < key.size(); ++k) {
                weight += static_cast<int>(k) * key[k];
                factors += key[k];
            }
            CHECK(weight == lambda);
            // every monomial has total degree lambda in (y2 and derivatives)
            CHECK(key[0] + factors == lambda);
        }
        // leading monomial y2^(lambda-1) * (lambda-th derivative)
        JetPolyKey lead(static_cast<std::size_t>(lambda) + 1, 0);
        lead[0] = lambda - 1;
        lead[static_cast<std::size_t>(lambda)] = 1;
        REQUIRE(t.numerator.count(lead) == 1);
        CHECK(t.numerator.at(lead) == -1);
        // trailing monomial (y2')^lambda with coefficient (-1)^lambda lambda!
        JetPolyKey trail(static_cast<std::size_t>(lambda) + 1, 0);
        trail[1] = lambda;
        REQUIRE(t.numerator.count(trail) == 1);
        Int expect = factorial(lambda);
        if (lambda % 2) expect = -expect;
        CHECK(t.numerator.at(trail) == expect);
    }
}

TEST_CASE("transfer jets agree with reciprocal-series derivatives")
{
    // two sample arcs with very different jet patterns
    const std::vector<Rational> arcs[] = {
        {1, 1, 2, 0, 0, 0, 0},                                     // u = 1 + t + t^2
        {1, -2, 0, 18, 0, 0, 0},                                   // u = 1 - 2t + 3t^3
        {make_rational(1, 2), 1, make_rational(-1, 3), 5, -7, 2, 9} // generic jets
    };
    for (const auto& jets : arcs) {
        std::vector<Rational> truth = reciprocal_jets(jets, 6);
        for (int lambda = 1; lambda <= 6; ++lambda)
            CHECK(eval_transfer(transfer_jet(lambda), jets) ==
                  truth[static_cast<std::size_t>(lambda)]);
    }
}

TEST_CASE("vanishing order of a single generator monomial")
{
    // y' over one denominator: -(2) + (d - 1) = d - 3
    CHECK(monomial_infinity_order(JetMonomial::make({1}), DMonomial::unit(), 1, 6) == 3);
    CHECK(monomial_infinity_order(JetMonomial::make({1}), DMonomial::unit(), 1, 3) == 0);
    // y'' bare: -(3) + (d - 1) = d - 4
    CHECK(monomial_infinity_order(JetMonomial::make({0, 1}), DMonomial::unit(), 1, 7) == 3);
    // (y')^2 R_xy / R_x^2: -(4) + (d - 1) + 1 = d - 4
    CHECK(monomial_infinity_order(JetMonomial::make({2}),
                                  DMonomial::unit().times(DSym{1, 1}), 2, 7) == 3);
    // (y')^3 R_y^2 R_xxx / R_x^4: -(6) + (d - 1) + 2 = d - 5
    CHECK(monomial_infinity_order(JetMonomial::make({3}),
                                  DMonomial::unit().times(DSym{0, 1}, 2).times(DSym{3, 0}), 4,
                                  7) == 2);

    // denominator power must exceed the symbol count by exactly one
    CHECK_THROWS_AS(monomial_infinity_order(JetMonomial::make({1}), DMonomial::unit(), 2, 6),
                    std::logic_error);
    // foreign factors must have been rewritten
    CHECK_THROWS_AS(monomial_infinity_order(JetMonomial::make({1}, 1), DMonomial::unit(), 1, 6),
                    std::logic_error);
    CHECK_THROWS_AS(monomial_infinity_order(JetMonomial::make({1}), DMonomial::unit(), 1, 0),
                    std::invalid_argument);
}

TEST_CASE("every generator term vanishes to the same order at infinity")
{
    for (int kappa = 1; kappa <= 6; ++kappa)
        for (int d : {3, 6, 9}) {
            InfinityReport rep = verify_uniform_order(generate(kappa), d);
            CHECK(rep.kappa == kappa);
            CHECK(rep.d == d);
            CHECK(rep.uniform);
            CHECK(rep.uniform_value == d - kappa - 2);
            CHECK_FALSE(rep.monomials.empty());
            for (const MonomialOrderEntry& e : rep.monomials) {
                // excess of the higher-order symbols is pinned by the jet weight
                int mu_total = 0;
                for (int v : e.jet.mu) mu_total += v;
                CHECK(e.coeff_monomial.higher_excess() == mu_total - 1);
            }
        }

    CHECK_THROWS_AS(verify_uniform_order(generate(2), 0), std::invalid_argument);

    // weight-inhomogeneous input is rejected
    GeneratorPair bad;
    bad.left = JetExpression::term(Side::x_side, JetMonomial::make({1}), DPoly::constant(1), 1) +
               JetExpression::term(Side::x_side, JetMonomial::make({0, 1}), DPoly::constant(1), 1);
    bad.right = mirror(-bad.left);
    CHECK_THROWS_AS(verify_uniform_order(bad, 5), std::invalid_argument);
}

namespace {
const TransferTermObservation* find_term(const TransferCheckReport& rep, const JetMonomial& jm,
                                         const DMonomial& mono)
{
    for (const TransferTermObservation& t : rep.terms)
        if (t.jet == jm && t.coeff_monomial == mono) return &t;
    return nullptr;
}
} // namespace

TEST_CASE("symbolic transfer to the second chart: pure-power curves")
{
    CurveSpec sextic = validate_curve(parse_poly("x^6 + y^6 - 2"));
    int expected_degenerate[] = {0, 1, 4};
    for (int kappa = 1; kappa <= 3; ++kappa) {
        TransferCheckReport rep = symbolic_transfer_check(sextic, kappa);
        CHECK(rep.kappa == kappa);
        CHECK(rep.d == 6);
        CHECK(rep.required_order == 6 - kappa - 2);
        CHECK(rep.pass);
        // on the Fermat sextic nothing cancels: the bound is attained exactly
        CHECK(rep.observed_order == rep.required_order);
        int degenerate = 0;
        for (const TransferTermObservation& t : rep.terms) {
            CHECK(t.observed_order >= t.expected_order);
            if (t.degenerate)
                ++degenerate;
            else
                CHECK(t.observed_order == t.expected_order);
        }
        CHECK(degenerate == expected_degenerate[kappa - 1]);
    }

    CurveSpec cubic = validate_curve(parse_poly("x^3 + y^3 + x"));
    for (int kappa = 1; kappa <= 3; ++kappa) {
        TransferCheckReport rep = symbolic_transfer_check(cubic, kappa);
        CHECK(rep.required_order == 3 - kappa - 2);
        CHECK(rep.pass);
        CHECK(rep.observed_order >= rep.required_order);
    }
}

TEST_CASE("symbolic transfer to the second chart: mixed-term curve")
{
    CurveSpec quartic = validate_curve(parse_poly("x^4 + y^4 + x*y"));
    for (int kappa = 1; kappa <= 3; ++kappa) {
        TransferCheckReport rep = symbolic_transfer_check(quartic, kappa);
        CHECK(rep.required_order == 4 - kappa - 2);
        CHECK(rep.pass);
        for (const TransferTermObservation& t : rep.terms) {
            CHECK(t.observed_order >= t.expected_order);
            if (!t.degenerate) CHECK(t.observed_order == t.expected_order);
        }
    }

    // R_xy = 1 has chart numerator y2^2, so the (y')^2 R_xy term is flagged
    // degenerate and gains exactly that extra valuation.  (The stored
    // monomial carries one balancing R_x factor from the common-denominator
    // form of the coefficient.)
    TransferCheckReport rep2 = symbolic_transfer_check(quartic, 2);
    const TransferTermObservation* t = find_term(
        rep2, JetMonomial::make({2}), DMonomial::unit().times(DSym{1, 1}).times(DSym{1, 0}));
    REQUIRE(t != nullptr);
    CHECK(t->degenerate);
    CHECK(t->observed_order == t->expected_order + 2);

    CHECK_THROWS_AS(symbolic_transfer_check(quartic, 4), std::invalid_argument);
    CHECK_THROWS_AS(symbolic_transfer_check(quartic, 0), std::invalid_argument);

    CurveSpec bad = validate_curve(parse_poly("x^2 + 2*x*y + y^2"));
    CHECK_THROWS_AS(symbolic_transfer_check(bad, 1), std::invalid_argument);
}
