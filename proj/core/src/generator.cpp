#include <jetcurve/generator.hpp>

#include <deque>
#include <mutex>
#include <stdexcept>

namespace jetcurve {

namespace {

// A term c * M * (v'/D)^mu with mu odd, M free of first-order symbols and
// equal to its own mirror, takes the same value as its counterpart on the
// opposite side under the order-1 relation (v'/D)^mu = -(w'/D_opp)^mu, so the
// matched pair can be dropped from both sides without breaking their
// equality on curve jets.  Both sides run this with the same criterion,
// which keeps them mirror-negatives of each other.
JetExpression drop_symmetric_first_order_pairs(const JetExpression& e) {
    const DSym d = denominator_symbol(e.side());
    JetExpression out(e.side());
    for (const auto& [jm, coef] : e.terms()) {
        if (!jm.is_pure_first_order() || jm.mu[0] % 2 == 0) {
            out += JetExpression::term(e.side(), jm, coef.num, coef.denom_pow);
            continue;
        }
        const int mu = jm.mu[0];
        DPoly kept;
        for (const auto& [m, c] : coef.num.terms()) {
            int g = m.exponent(d);
            DMonomial rest = m.divided_by(d, g);
            bool cancels = coef.denom_pow - g == mu && !rest.is_unit() &&
                           !rest.has_first_order() && rest.is_mirror_symmetric();
            if (!cancels) kept.add_term(m, c);
        }
        out += JetExpression::term(e.side(), jm, std::move(kept), coef.denom_pow);
    }
    out.normalize();
    return out;
}

JetExpression advance(const JetExpression& e) {
    return drop_symmetric_first_order_pairs(substitute_foreign_first_order(total_derivative(e)));
}

} // namespace

const GeneratorPair& generate(int kappa) {
    if (kappa < 1) throw std::invalid_argument("generate: order must be >= 1");
    static std::mutex lock;
    static std::deque<GeneratorPair> memo;  // deque: handed-out references stay valid
    std::scoped_lock guard(lock);
    if (memo.empty()) {
        memo.push_back(GeneratorPair{
            JetExpression::term(Side::x_side, JetMonomial::derivative(1), DPoly::constant(1), 1),
            JetExpression::term(Side::y_side, JetMonomial::derivative(1), DPoly::constant(-1), 1)});
    }
    while (static_cast<int>(memo.size()) < kappa) {
        const GeneratorPair& prev = memo.back();
        memo.push_back(GeneratorPair{advance(prev.left), advance(prev.right)});
    }
    return memo[static_cast<size_t>(kappa) - 1];
}

namespace {

constexpr DSym D01{0, 1};
constexpr DSym D10{1, 0};
constexpr DSym D11{1, 1};
constexpr DSym D20{2, 0};
constexpr DSym D21{2, 1};
constexpr DSym D30{3, 0};

DMonomial prod(std::initializer_list<DSym> syms) {
    DMonomial m;
    for (DSym s : syms) m = m.times(s);
    return m;
}

JetExpression elimination_left(int lambda) {
    JetExpression e(Side::x_side);
    if (lambda == 2) {
        // y''/R_x + (y')^2 [ -R_xy/R_x^2 + R_y R_xx/R_x^3 ]
        e += JetExpression::term(Side::x_side, JetMonomial::derivative(2), DPoly::constant(1), 1);
        DPoly num;
        num.add_term(prod({D11, D10}), -1);
        num.add_term(prod({D01, D20}), 1);
        e += JetExpression::term(Side::x_side, JetMonomial::derivative(1, 2), std::move(num), 3);
        return e;
    }
    // y'''/R_x
    // + y''y' [ -3 R_xy/R_x^2 + 3 R_y R_xx/R_x^3 ]
    // + (y')^3 [ -6 R_y R_xy R_xx/R_x^4 + 3 R_y^2 R_xx^2/R_x^5
    //            + 3 R_y R_xxy/R_x^3 - R_y^2 R_xxx/R_x^4 ]
    e += JetExpression::term(Side::x_side, JetMonomial::derivative(3), DPoly::constant(1), 1);
    DPoly mixed;
    mixed.add_term(prod({D11, D10}), -3);
    mixed.add_term(prod({D01, D20}), 3);
    e += JetExpression::term(Side::x_side,
                             JetMonomial::derivative(2).times(JetMonomial::derivative(1)),
                             std::move(mixed), 3);
    DPoly cubic;
    cubic.add_term(prod({D01, D11, D20, D10}), -6);
    cubic.add_term(prod({D01, D01, D20, D20}), 3);
    cubic.add_term(prod({D01, D21, D10, D10}), 3);
    cubic.add_term(prod({D01, D01, D30, D10}), -1);
    e += JetExpression::term(Side::x_side, JetMonomial::derivative(1, 3), std::move(cubic), 5);
    return e;
}

} // namespace

const std::map<int, GeneratorPair>& elimination_forms() {
    static const std::map<int, GeneratorPair> table = [] {
        std::map<int, GeneratorPair> t;
        for (int lambda : {2, 3}) {
            JetExpression left = elimination_left(lambda);
            left.normalize();
            t.emplace(lambda, GeneratorPair{left, -mirror(left)});
        }
        return t;
    }();
    return table;
}

namespace {

void partitions_desc(int remaining, int max_part, std::vector<int>& parts,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(parts);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_desc(remaining - p, p, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<FaaTerm> faa_di_bruno(int kappa, int vars) {
    if (kappa < 1) throw std::invalid_argument("faa_di_bruno: order must be >= 1");
    if (vars != 1 && vars != 2) throw std::invalid_argument("faa_di_bruno: vars must be 1 or 2");

    std::vector<std::vector<int>> parts_list;
    std::vector<int> scratch;
    partitions_desc(kappa, kappa, scratch, parts_list);

    std::vector<FaaTerm> out;
    out.reserve(parts_list.size());
    for (const auto& parts : parts_list) {
        FaaTerm term;
        for (int p : parts) {
            if (!term.multiplicities.empty() && term.multiplicities.back().first == p)
                term.multiplicities.back().second += 1;
            else
                term.multiplicities.emplace_back(p, 1);
        }
        term.block_count = static_cast<int>(parts.size());
        Int denom = 1;
        for (const auto& [size, count] : term.multiplicities) {
            Int f = factorial(size);
            for (int c = 0; c < count; ++c) denom *= f;
            denom *= factorial(count);
        }
        term.coefficient = factorial(kappa) / denom;

        if (vars == 1) {
            FaaAssignment a;
            for (const auto& [size, count] : term.multiplicities) a.x_counts.push_back(count);
            a.weight = 1;
            a.symbol = DSym{term.block_count, 0};
            term.assignments.push_back(std::move(a));
        } else {
            // Odometer over per-size x-counts, all-x first.
            std::vector<int> x(term.multiplicities.size());
            for (size_t a = 0; a < x.size(); ++a) x[a] = term.multiplicities[a].second;
            bool more = true;
            while (more) {
                FaaAssignment asg;
                asg.x_counts = x;
                asg.weight = 1;
                int total_x = 0;
                for (size_t a = 0; a < x.size(); ++a) {
                    asg.weight *= binomial(Int(term.multiplicities[a].second), x[a]);
                    total_x += x[a];
                }
                asg.symbol = DSym{total_x, term.block_count - total_x};
                term.assignments.push_back(std::move(asg));

                more = false;
                for (size_t a = x.size(); a > 0;) {
                    --a;
                    if (x[a] > 0) {
                        x[a] -= 1;
                        for (size_t b = a + 1; b < x.size(); ++b)
                            x[b] = term.multiplicities[b].second;
                        more = true;
                        break;
                    }
                }
            }
        }
        out.push_back(std::move(term));
    }
    return out;
}

TrivializationMap TrivializationMap::mirrored() const {
    TrivializationMap out;
    out.order = order;
    out.components.reserve(components.size());
    for (const auto& c : components) out.components.push_back(mirror(c));
    return out;
}

TrivializationMap trivialization_change(int kappa) {
    if (kappa < 1) throw std::invalid_argument("trivialization_change: order must be >= 1");
    TrivializationMap map;
    map.order = kappa;
    JetExpression level = JetExpression::term(Side::y_side, JetMonomial::derivative(1),
                                              DPoly::symbol(DSym{1, 0}) * Rational(-1), 1);
    map.components.push_back(level);
    for (int l = 2; l <= kappa; ++l) {
        level = substitute_foreign_first_order(total_derivative(level));
        map.components.push_back(level);
    }
    return map;
}

} // namespace jetcurve
