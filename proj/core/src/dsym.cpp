#include <jetcurve/dsym.hpp>

#include <algorithm>
#include <stdexcept>

namespace jetcurve {

int DMonomial::exponent(DSym s) const {
    for (const auto& [sym, e] : factors_)
        if (sym == s) return e;
    return 0;
}

int DMonomial::symbol_count() const {
    int n = 0;
    for (const auto& [sym, e] : factors_) n += e;
    return n;
}

int DMonomial::higher_count() const {
    int n = 0;
    for (const auto& [sym, e] : factors_)
        if (sym_order(sym) >= 2) n += e;
    return n;
}

int DMonomial::higher_excess() const {
    int n = 0;
    for (const auto& [sym, e] : factors_)
        if (sym_order(sym) >= 2) n += (sym_order(sym) - 1) * e;
    return n;
}

bool DMonomial::has_first_order() const {
    for (const auto& [sym, e] : factors_)
        if (sym_order(sym) == 1) return true;
    return false;
}

DMonomial DMonomial::times(DSym s, int k) const {
    if (k < 0) throw std::logic_error("DMonomial::times: negative exponent");
    if (k == 0) return *this;
    DMonomial out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), s,
                               [](const auto& f, DSym v) { return f.first < v; });
    if (it != out.factors_.end() && it->first == s)
        it->second += k;
    else
        out.factors_.insert(it, {s, k});
    return out;
}

DMonomial DMonomial::times(const DMonomial& other) const {
    DMonomial out = *this;
    for (const auto& [sym, e] : other.factors_) out = out.times(sym, e);
    return out;
}

DMonomial DMonomial::divided_by(DSym s, int k) const {
    if (k == 0) return *this;
    DMonomial out = *this;
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const auto& f) { return f.first == s; });
    if (it == out.factors_.end() || it->second < k)
        throw std::logic_error("DMonomial::divided_by: exponent underflow");
    it->second -= k;
    if (it->second == 0) out.factors_.erase(it);
    return out;
}

DMonomial DMonomial::mirrored() const {
    DMonomial out;
    for (const auto& [sym, e] : factors_) out = out.times(mirror_sym(sym), e);
    return out;
}

DPoly DPoly::constant(const Rational& c) {
    DPoly p;
    p.add_term(DMonomial::unit(), c);
    return p;
}

DPoly DPoly::symbol(DSym s, int k) {
    DPoly p;
    p.add_term(DMonomial::unit().times(s, k), 1);
    return p;
}

DPoly DPoly::monomial(const DMonomial& m, const Rational& c) {
    DPoly p;
    p.add_term(m, c);
    return p;
}

Rational DPoly::coefficient(const DMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DPoly::add_term(const DMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DPoly& DPoly::operator+=(const DPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DPoly DPoly::operator*(const DPoly& other) const {
    DPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

DPoly DPoly::operator*(const Rational& c) const {
    DPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

DPoly DPoly::operator-() const {
    return *this * Rational(-1);
}

DPoly DPoly::times_symbol(DSym s, int k) const {
    DPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.times(s, k), c);
    return out;
}

int DPoly::min_exponent(DSym s) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(s);
        if (first || e < best) best = e;
        first = false;
        if (best == 0) break;
    }
    return best;
}

DPoly DPoly::divided_by_symbol(DSym s, int k) const {
    DPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.divided_by(s, k), c);
    return out;
}

DPoly DPoly::mirrored() const {
    DPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.mirrored(), c);
    return out;
}

} // namespace jetcurve
