// Acceptance gate: runs the release checklist end to end and prints one
// [PASS]/[FAIL] line per criterion, wall-clock budget included in the
// verdict.  Exits nonzero when any criterion fails.
#include <jetcurve/infinity.hpp>
#include <jetcurve/numeric_eval.hpp>
#include <jetcurve/render.hpp>
#include <jetcurve/sections.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace jetcurve;

namespace {

const DSym rx{1, 0};
const DSym ry{0, 1};
const DSym rxx{2, 0};
const DSym rxy{1, 1};
const DSym ryy{0, 2};
const DSym rxxx{3, 0};
const DSym rxxy{2, 1};
const DSym rxyy{1, 2};
const DSym rxxxx{4, 0};
const DSym rxxxy{3, 1};
const DSym rxxyy{2, 2};
const DSym rxyyy{1, 3};

DPoly S(DSym s, int k = 1) { return DPoly::symbol(s, k); }

JetExpression T(const std::vector<int>& mu, DPoly num, int denom_pow) {
    return JetExpression::term(Side::x_side, JetMonomial::make(mu), std::move(num), denom_pow);
}

JetExpression Y(const std::vector<int>& mu, DPoly num, int denom_pow) {
    return JetExpression::term(Side::y_side, JetMonomial::make(mu), std::move(num), denom_pow);
}

CurveSpec curve(const char* source) { return validate_curve(parse_poly(source)); }

// --- independent oracle for the composite-derivative expansion ------------

struct MiniVar {
    int kind;  // 0: derivative of x, 1: derivative of y, 2: partial symbol
    int a;
    int b;
    auto operator<=>(const MiniVar&) const = default;
};
using MiniMono = std::map<MiniVar, int>;
using MiniPoly = std::map<MiniMono, Rational>;

void mini_add(MiniPoly& p, const MiniMono& m, const Rational& c) {
    auto [it, fresh] = p.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

MiniPoly mini_derivative(const MiniPoly& p) {
    MiniPoly out;
    for (const auto& [mono, c] : p)
        for (const auto& [v, e] : mono) {
            MiniMono base = mono;
            if (--base[v] == 0) base.erase(v);
            Rational scaled = c * e;
            if (v.kind == 2) {
                MiniMono mx = base;
                ++mx[MiniVar{2, v.a + 1, v.b}];
                ++mx[MiniVar{0, 1, 0}];
                mini_add(out, mx, scaled);
                MiniMono my = base;
                ++my[MiniVar{2, v.a, v.b + 1}];
                ++my[MiniVar{1, 1, 0}];
                mini_add(out, my, scaled);
            } else {
                MiniMono up = base;
                ++up[MiniVar{v.kind, v.a + 1, 0}];
                mini_add(out, up, scaled);
            }
        }
    return out;
}

MiniPoly faa_to_mini(const std::vector<FaaTerm>& terms) {
    MiniPoly out;
    for (const FaaTerm& t : terms)
        for (const FaaAssignment& asg : t.assignments) {
            MiniMono m;
            for (std::size_t i = 0; i < t.multiplicities.size(); ++i) {
                auto [size, count] = t.multiplicities[i];
                int in_x = asg.x_counts[i];
                if (in_x > 0) m[MiniVar{0, size, 0}] += in_x;
                if (count - in_x > 0) m[MiniVar{1, size, 0}] += count - in_x;
            }
            ++m[MiniVar{2, asg.symbol.i, asg.symbol.j}];
            Int c = t.coefficient * asg.weight;
            mini_add(out, m, Rational(c));
        }
    return out;
}

// --- exhaustive enumeration against the leading-order model ---------------

long long total_part_count(int kappa, int m) {
    long long total = 0;
    for_each_composition(kappa, m, [&](const std::vector<int>& parts) {
        for (int v : parts) total += v;
    });
    return total;
}

double model_gap(int kappa, int m) {
    const double model = to_double(asymptotic_estimate(kappa, m, 1));
    const double actual = static_cast<double>(total_part_count(kappa, m));
    return std::abs(actual - model) / model;
}

// --- criterion bodies ------------------------------------------------------

bool criterion_low_order_fixtures() {
    bool ok = true;
    const GeneratorPair& g1 = generate(1);
    ok = ok && g1.left == T({1}, DPoly::constant(1), 1);
    ok = ok && g1.right == JetExpression::term(Side::y_side, JetMonomial::make({1}),
                                               DPoly::constant(-1), 1);
    const GeneratorPair& g2 = generate(2);
    const JetExpression left2 =
        T({0, 1}, DPoly::constant(1), 1) + T({2}, -S(rxy), 2) + T({2}, S(ry) * S(rxx), 3);
    ok = ok && g2.left == left2;
    ok = ok && g2.right == mirror(-left2);
    return ok;
}

bool criterion_high_order_fixtures() {
    const JetExpression left3 = T({0, 0, 1}, DPoly::constant(1), 1)
        + T({1, 1}, S(rxy) * Rational(-3), 2)
        + T({1, 1}, S(ry) * S(rxx) * Rational(3), 3)
        + T({3}, S(ry) * S(rxy) * S(rxx) * Rational(-6), 4)
        + T({3}, S(ry, 2) * S(rxx, 2) * Rational(3), 5)
        + T({3}, -S(rxyy), 2)
        + T({3}, S(ry) * S(rxxy) * Rational(2), 3)
        + T({3}, -(S(ry, 2) * S(rxxx)), 4);
    const JetExpression left4 = T({0, 0, 0, 1}, DPoly::constant(1), 1)
        + T({1, 0, 1}, S(rxy) * Rational(-4), 2)
        + T({1, 0, 1}, S(ry) * S(rxx) * Rational(4), 3)
        + T({0, 2}, S(rxy) * Rational(-3), 2)
        + T({0, 2}, S(ry) * S(rxx) * Rational(3), 3)
        + T({2, 1}, S(rxy, 2) * Rational(6), 3)
        + T({2, 1}, S(ryy) * S(rxx) * Rational(3), 3)
        + T({2, 1}, S(ry) * S(rxy) * S(rxx) * Rational(-36), 4)
        + T({2, 1}, S(ry, 2) * S(rxx, 2) * Rational(18), 5)
        + T({2, 1}, S(rxyy) * Rational(-6), 2)
        + T({2, 1}, S(ry) * S(rxxy) * Rational(12), 3)
        + T({2, 1}, S(ry, 2) * S(rxxx) * Rational(-6), 4)
        + T({4}, S(ryy) * S(rxy) * S(rxx) * Rational(-6), 4)
        + T({4}, S(ry) * S(rxy, 2) * S(rxx) * Rational(30), 5)
        + T({4}, S(ry) * S(ryy) * S(rxx, 2) * Rational(6), 5)
        + T({4}, S(ry, 2) * S(rxy) * S(rxx, 2) * Rational(-45), 6)
        + T({4}, S(ry, 3) * S(rxx, 3) * Rational(15), 7)
        + T({4}, S(rxy) * S(rxyy) * Rational(2), 3)
        + T({4}, S(ryy) * S(rxxy) * Rational(2), 3)
        + T({4}, S(ry) * S(rxyy) * S(rxx) * Rational(-8), 4)
        + T({4}, S(ry) * S(rxy) * S(rxxy) * Rational(-14), 4)
        + T({4}, S(ry) * S(ryy) * S(rxxx) * Rational(-2), 4)
        + T({4}, S(ry, 2) * S(rxx) * S(rxxy) * Rational(18), 5)
        + T({4}, S(ry, 2) * S(rxy) * S(rxxx) * Rational(12), 5)
        + T({4}, S(ry, 3) * S(rxx) * S(rxxx) * Rational(-10), 6)
        + T({4}, -S(rxyyy), 2)
        + T({4}, S(ry) * S(rxxyy) * Rational(3), 3)
        + T({4}, S(ry, 2) * S(rxxxy) * Rational(-3), 4)
        + T({4}, S(ry, 3) * S(rxxxx), 5);
    return generate(3).left == left3 && generate(3).right == mirror(-left3) &&
           generate(4).left == left4 && generate(4).right == mirror(-left4);
}

bool criterion_mirror_antisymmetry() {
    bool ok = true;
    for (int kappa = 1; kappa <= 6; ++kappa) {
        const GeneratorPair& g = generate(kappa);
        ok = ok && mirror(g.left) == -g.right && g.right == mirror(-g.left);
    }
    return ok;
}

bool criterion_homogeneity_and_bonus() {
    bool ok = true;
    for (int kappa = 1; kappa <= 6; ++kappa) {
        const GeneratorPair& g = generate(kappa);
        ok = ok && uniform_weight(g.left) == kappa && uniform_weight(g.right) == kappa;
        for (const JetExpression* e : {&g.left, &g.right})
            for (const auto& [jm, coef] : e->terms()) {
                int total_mu = jm.foreign_pow;
                for (int v : jm.mu) total_mu += v;
                for (const auto& [mono, c] : coef.num.terms()) {
                    (void)c;
                    // the valuation bonus at infinity of each coefficient
                    // monomial equals (number of jet letters) - 1, and the
                    // denominator power matches the symbol count
                    ok = ok && mono.higher_excess() == total_mu - 1;
                    ok = ok && coef.denom_pow == 1 + mono.symbol_count();
                }
            }
    }
    return ok;
}

bool criterion_composite_derivative() {
    bool ok = true;
    MiniPoly truth{{MiniMono{{MiniVar{2, 0, 0}, 1}}, Rational(1)}};
    for (int kappa = 1; kappa <= 6; ++kappa) {
        truth = mini_derivative(truth);
        ok = ok && faa_to_mini(faa_di_bruno(kappa, 2)) == truth;
    }
    const std::vector<FaaTerm> order5 = faa_di_bruno(5, 2);
    const Int expected[] = {Int(1), Int(5), Int(10), Int(10), Int(15), Int(10), Int(1)};
    ok = ok && order5.size() == 7;
    for (std::size_t i = 0; i < order5.size() && i < 7; ++i)
        ok = ok && order5[i].coefficient == expected[i];
    return ok;
}

bool criterion_trivialization() {
    const TrivializationMap m = trivialization_change(2);
    bool ok = m.components.size() == 2;
    ok = ok && m.components[0] == Y({1}, -S(rx), 1);
    const JetExpression c2 = Y({0, 1}, -S(rx), 1) + Y({2}, -S(rxx), 1) +
                             Y({2}, S(rx) * S(rxy) * Rational(2), 2) +
                             Y({2}, -(S(rx, 2) * S(ryy)), 3);
    ok = ok && m.components[1] == c2;

    const CurveSpec septic = curve("x^7 + y^7 - 2");
    const EvalConfig cfg;
    for (int kappa = 1; kappa <= 4; ++kappa) {
        const RoundtripReport rep =
            check_trivialization_roundtrip(kappa, septic, Rational(1), Rational(1), cfg);
        ok = ok && rep.pass && rep.exact && rep.input_jets == rep.output_jets;
    }
    return ok;
}

bool criterion_two_sided_agreement() {
    bool ok = true;
    const EvalConfig cfg;
    for (int kappa = 1; kappa <= 5; ++kappa) {
        const int d = kappa + 3;
        const std::string primary = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " - 2";
        const CurveSpec c = curve(primary.c_str());
        ok = ok && check_generator_agreement(kappa, c, Rational(1), Rational(1), cfg).pass;
        if (d % 2 == 0) {
            // even degree: a second rational point on the same curve
            ok = ok && check_generator_agreement(kappa, c, Rational(-1), Rational(1), cfg).pass;
        } else {
            // odd degree: (1,1) is the only easy rational point, so use the
            // same-degree companion through (1,2) plus a curved disc at (1,1)
            const std::string shifted = "x^" + std::to_string(d) + " + y^" + std::to_string(d) +
                                        " - " + to_string(Rational(1) + Rational(Int(1) << d));
            ok = ok &&
                 check_generator_agreement(kappa, curve(shifted.c_str()), Rational(1), Rational(2), cfg)
                     .pass;
            std::vector<Rational> bent;
            const Rational pool[] = {Rational(1), make_rational(1, 2), make_rational(-2, 3),
                                     make_rational(3, 4), make_rational(-5, 6)};
            for (int k = 0; k < kappa; ++k) bent.push_back(pool[static_cast<std::size_t>(k) % 5]);
            const SeriesPoint s =
                local_graph_series_jets(c, Rational(1), Rational(1), Side::y_side, kappa, bent);
            const GeneratorPair& g = generate(kappa);
            ok = ok && eval_jet_expression(g.left, s) == eval_jet_expression(g.right, s);
        }
        if (kappa == 3) {
            const AgreementReport rep =
                check_generator_agreement(3, c, Rational(1), Rational(1), cfg);
            ok = ok && rep.elimination_equal.at(2) && rep.elimination_equal.at(3);
            const SeriesPoint s = local_graph_series(c, Rational(1), Rational(1), Side::y_side, 3);
            ok = ok && eval_jet_expression(elimination_forms().at(3).left, s) ==
                           eval_jet_expression(generate(3).left, s);
        }
    }
    return ok;
}

bool criterion_infinity_order() {
    bool ok = true;
    for (int kappa = 1; kappa <= 6; ++kappa)
        for (int d : {6, 9}) {
            const InfinityReport rep = verify_uniform_order(generate(kappa), d);
            ok = ok && rep.uniform && rep.uniform_value == d - kappa - 2;
        }
    for (const char* source : {"x^6 + y^6 - 2", "x^3 + y^3 + x", "x^4 + y^4 + x*y"}) {
        const CurveSpec c = curve(source);
        for (int kappa = 1; kappa <= 3; ++kappa)
            ok = ok && symbolic_transfer_check(c, kappa).pass;
    }
    const EvalConfig cfg;
    ok = ok && probe_infinity_vanishing(1, curve("x^4 + y^4 - 2"), cfg).pass;
    ok = ok && probe_infinity_vanishing(3, curve("x^6 + y^6 - 2"), cfg).pass;
    ok = ok && probe_infinity_vanishing(1, curve("x^5 + y^5 - 2"), cfg).pass;
    return ok;
}

bool criterion_section_counts() {
    bool ok = true;
    for (int d = 1; d <= 6; ++d) {
        const std::string source =
            d == 1 ? std::string("x + y - 2")
                   : "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " - 2";
        const Poly2 r = parse_poly(source);
        for (int delta = 0; delta <= 8; ++delta)
            ok = ok && brute_force_quotient_dim(delta, d, r) == dim_h0(delta, d);
    }
    // tie the grouped count to the oracle through its breakdown rows
    const SectionCount count = count_sections(2, 4, 5, true);
    const Poly2 quintic = parse_poly("x^5 + y^5 - 2");
    Int total = 0;
    for (const auto& [comp, delta, dim] : *count.breakdown) {
        (void)comp;
        ok = ok && dim == brute_force_quotient_dim(static_cast<int>(delta), 5, quintic);
        total += dim;
    }
    ok = ok && total == count.total;

    ok = ok && model_gap(2, 300) <= 0.05;
    ok = ok && model_gap(3, 300) <= 0.08;
    return ok;
}

bool criterion_asymptotic_substitution() {
    // The closed-form growth model has no finite specialization to check
    // directly; the documented substitute is the harmonic-factor enumeration
    // gap, re-asserted here at two orders.
    return model_gap(2, 300) <= 0.05 && model_gap(3, 300) <= 0.08;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* description;
        double budget_seconds;
        std::function<bool()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "order-1 and order-2 differentials match the hand-transcribed fixtures", 1.0,
         criterion_low_order_fixtures},
        {2, "order-3 and order-4 differentials match their hand-reduced expansions", 5.0,
         criterion_high_order_fixtures},
        {3, "mirroring one side reproduces the negated other side for every order up to 6", 60.0,
         criterion_mirror_antisymmetry},
        {4, "coefficient monomials are weight-homogeneous with the expected valuation bonus", 60.0,
         criterion_homogeneity_and_bonus},
        {5, "composite-derivative expansion matches a raw product-rule oracle through order 6", 60.0,
         criterion_composite_derivative},
        {6, "jet-coordinate change matches hand fixtures and roundtrips exactly through order 4",
         60.0, criterion_trivialization},
        {7, "both sides agree on two rational discs per curve through order 5", 60.0,
         criterion_two_sided_agreement},
        {8, "vanishing at infinity: uniform symbolic order, chart transfer, and float probes", 120.0,
         criterion_infinity_order},
        {9, "section counts match an exact rank oracle; enumeration tracks the harmonic model",
         60.0, criterion_section_counts},
        {10,
         "documented substitution: growth model validated via the harmonic-factor enumeration gap",
         60.0, criterion_asymptotic_substitution},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.body();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" (exception: ") + e.what() + ")";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && seconds < c.budget_seconds;
        std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s\n", ok ? "PASS" : "FAIL",
                    c.number, c.description, seconds, c.budget_seconds, note.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
