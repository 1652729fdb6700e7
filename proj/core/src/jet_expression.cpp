#include <jetcurve/jet_expression.hpp>

#include <algorithm>
#include <stdexcept>

namespace jetcurve {

JetMonomial JetMonomial::make(std::vector<int> mu, int foreign_pow) {
    for (int e : mu)
        if (e < 0) throw std::logic_error("JetMonomial: negative exponent");
    if (foreign_pow < 0) throw std::logic_error("JetMonomial: negative foreign power");
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return JetMonomial{std::move(mu), foreign_pow};
}

JetMonomial JetMonomial::derivative(int k, int exp) {
    if (k < 1) throw std::logic_error("JetMonomial::derivative: order must be >= 1");
    std::vector<int> mu(static_cast<size_t>(k), 0);
    mu[static_cast<size_t>(k) - 1] = exp;
    return make(std::move(mu));
}

int JetMonomial::weight() const {
    int w = foreign_pow;
    for (size_t k = 0; k < mu.size(); ++k) w += static_cast<int>(k + 1) * mu[k];
    return w;
}

JetMonomial JetMonomial::times(const JetMonomial& other) const {
    std::vector<int> out(std::max(mu.size(), other.mu.size()), 0);
    for (size_t k = 0; k < mu.size(); ++k) out[k] += mu[k];
    for (size_t k = 0; k < other.mu.size(); ++k) out[k] += other.mu[k];
    return make(std::move(out), foreign_pow + other.foreign_pow);
}

bool JetMonomialOrder::operator()(const JetMonomial& a, const JetMonomial& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa > wb;
    size_t n = std::max(a.mu.size(), b.mu.size());
    for (size_t k = n; k-- > 0;) {
        int ea = k < a.mu.size() ? a.mu[k] : 0;
        int eb = k < b.mu.size() ? b.mu[k] : 0;
        if (ea != eb) return ea > eb;
    }
    return a.foreign_pow > b.foreign_pow;
}

JetExpression JetExpression::term(Side side, const JetMonomial& jm, DPoly num, int denom_pow) {
    if (denom_pow < 0) throw std::logic_error("JetExpression::term: negative denominator power");
    JetExpression e(side);
    if (!num.is_zero()) e.terms_.emplace(jm, JetCoef{std::move(num), denom_pow});
    return e;
}

void JetExpression::add_term_(const JetMonomial& jm, const JetCoef& coef) {
    if (coef.num.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(jm, coef);
    if (inserted) return;
    JetCoef& mine = it->second;
    const DSym d = denominator_symbol(side_);
    int p = std::max(mine.denom_pow, coef.denom_pow);
    DPoly merged = mine.num.times_symbol(d, p - mine.denom_pow);
    merged += coef.num.times_symbol(d, p - coef.denom_pow);
    if (merged.is_zero()) {
        terms_.erase(it);
    } else {
        mine.num = std::move(merged);
        mine.denom_pow = p;
    }
}

JetExpression& JetExpression::operator+=(const JetExpression& other) {
    if (side_ != other.side_)
        throw std::logic_error("JetExpression: cannot add expressions from different sides");
    for (const auto& [jm, coef] : other.terms_) add_term_(jm, coef);
    return *this;
}

JetExpression JetExpression::operator*(const Rational& c) const {
    JetExpression out(side_);
    if (c == 0) return out;
    for (const auto& [jm, coef] : terms_)
        out.terms_.emplace(jm, JetCoef{coef.num * c, coef.denom_pow});
    return out;
}

JetExpression JetExpression::operator*(const JetExpression& other) const {
    if (side_ != other.side_)
        throw std::logic_error("JetExpression: cannot multiply expressions from different sides");
    JetExpression out(side_);
    for (const auto& [ja, ca] : terms_)
        for (const auto& [jb, cb] : other.terms_)
            out.add_term_(ja.times(jb), JetCoef{ca.num * cb.num, ca.denom_pow + cb.denom_pow});
    return out;
}

JetExpression JetExpression::operator-() const {
    return *this * Rational(-1);
}

void JetExpression::normalize() {
    const DSym d = denominator_symbol(side_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        JetCoef& coef = it->second;
        if (coef.num.is_zero()) {
            it = terms_.erase(it);
            continue;
        }
        int shift = std::min(coef.denom_pow, coef.num.min_exponent(d));
        if (shift > 0) {
            coef.num = coef.num.divided_by_symbol(d, shift);
            coef.denom_pow -= shift;
        }
        ++it;
    }
}

bool JetExpression::has_foreign() const {
    for (const auto& [jm, coef] : terms_)
        if (jm.foreign_pow != 0) return true;
    return false;
}

JetExpression total_derivative(const JetExpression& e) {
    if (e.has_foreign())
        throw std::logic_error("total_derivative: operand still carries a foreign first-order factor");
    const Side side = e.side();
    const DSym d = denominator_symbol(side);
    // Differentiating any symbol R_{i,j} gives x'*R_{i+1,j} + y'*R_{i,j+1};
    // which letter is active and which is foreign depends on the side.
    // active_step bumps the active letter's index of differentiation.
    const bool x_active = (side == Side::y_side);
    auto active_step = [&](DSym s) { return x_active ? DSym{s.i + 1, s.j} : DSym{s.i, s.j + 1}; };
    auto foreign_step = [&](DSym s) { return x_active ? DSym{s.i, s.j + 1} : DSym{s.i + 1, s.j}; };

    JetExpression out(side);
    const JetMonomial active_first = JetMonomial::derivative(1);
    const JetMonomial foreign_first = JetMonomial::make({}, 1);

    for (const auto& [jm, coef] : e.terms()) {
        // Leibniz shift of the jet factors: v^(k) -> v^(k+1).
        for (size_t k = 0; k < jm.mu.size(); ++k) {
            if (jm.mu[k] == 0) continue;
            std::vector<int> mu = jm.mu;
            mu[k] -= 1;
            if (mu.size() < k + 2) mu.resize(k + 2, 0);
            mu[k + 1] += 1;
            JetExpression shifted = JetExpression::term(
                side, JetMonomial::make(std::move(mu)), coef.num * Rational(jm.mu[k]), coef.denom_pow);
            out += shifted;
        }
        // Chain rule through every symbol factor of the numerator.
        DPoly num_active, num_foreign;
        for (const auto& [m, c] : coef.num.terms()) {
            for (const auto& [s, exp] : m.factors()) {
                DMonomial base = m.divided_by(s, 1);
                num_active.add_term(base.times(active_step(s)), c * exp);
                num_foreign.add_term(base.times(foreign_step(s)), c * exp);
            }
        }
        out += JetExpression::term(side, jm.times(active_first), std::move(num_active), coef.denom_pow);
        out += JetExpression::term(side, jm.times(foreign_first), std::move(num_foreign), coef.denom_pow);
        // Denominator: (1/D^p)' = -p * D' / D^(p+1).
        if (coef.denom_pow > 0) {
            Rational scale(-coef.denom_pow);
            out += JetExpression::term(side, jm.times(active_first),
                                       coef.num.times_symbol(active_step(d)) * scale,
                                       coef.denom_pow + 1);
            out += JetExpression::term(side, jm.times(foreign_first),
                                       coef.num.times_symbol(foreign_step(d)) * scale,
                                       coef.denom_pow + 1);
        }
    }
    out.normalize();
    return out;
}

JetExpression substitute_foreign_first_order(const JetExpression& e) {
    const Side side = e.side();
    const DSym cof = cofactor_symbol(side);
    JetExpression out(side);
    for (const auto& [jm, coef] : e.terms()) {
        int f = jm.foreign_pow;
        if (f == 0) {
            out += JetExpression::term(side, jm, coef.num, coef.denom_pow);
            continue;
        }
        std::vector<int> mu = jm.mu;
        if (mu.empty()) mu.resize(1, 0);
        mu[0] += f;
        Rational sign = (f % 2 == 0) ? Rational(1) : Rational(-1);
        out += JetExpression::term(side, JetMonomial::make(std::move(mu)),
                                   coef.num.times_symbol(cof, f) * sign, coef.denom_pow + f);
    }
    out.normalize();
    return out;
}

JetExpression mirror(const JetExpression& e) {
    JetExpression out(opposite(e.side()));
    for (const auto& [jm, coef] : e.terms())
        out += JetExpression::term(out.side(), jm, coef.num.mirrored(), coef.denom_pow);
    out.normalize();
    return out;
}

std::optional<int> uniform_weight(const JetExpression& e) {
    std::optional<int> w;
    for (const auto& [jm, coef] : e.terms()) {
        int wk = jm.weight();
        if (!w) {
            w = wk;
        } else if (*w != wk) {
            return std::nullopt;
        }
    }
    return w;
}

} // namespace jetcurve
