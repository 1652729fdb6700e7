#include "jetcurve/poly2.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace jetcurve {

Rational rational_from_string(std::string_view text)
{
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return {}; // unreachable
}

Poly2 Poly2::constant(const Rational& c)
{
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
}

Poly2 Poly2::monomial(int a, int b, const Rational& c)
{
    Poly2 p;
    p.add_term(a, b, c);
    return p;
}

Rational Poly2::coefficient(int a, int b) const
{
    auto it = terms_.find(Mono2{a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(int a, int b, const Rational& c)
{
    assert(a >= 0 && b >= 0);
    if (c == 0) return;
    Mono2 key{a, b};
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    recompute_degree_();
}

Poly2& Poly2::operator+=(const Poly2& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    recompute_degree_();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, Rational(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    recompute_degree_();
    return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs)
{
    Poly2 prod;
    for (const auto& [ml, cl] : lhs.terms_)
        for (const auto& [mr, cr] : rhs.terms_) {
            Mono2 key{ml.a + mr.a, ml.b + mr.b};
            auto [it, inserted] = prod.terms_.try_emplace(key, Rational(cl * cr));
            if (!inserted) {
                it->second += cl * cr;
                if (it->second == 0) prod.terms_.erase(it);
            }
        }
    prod.recompute_degree_();
    return prod;
}

Poly2 operator*(const Poly2& p, const Rational& c)
{
    Poly2 r;
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, Rational(pc * c));
    r.degree_ = p.degree_;
    return r;
}

std::optional<int> Poly2::min_y_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    int best = terms_.begin()->first.b;
    for (const auto& [m, c] : terms_) best = std::min(best, m.b);
    return best;
}

Poly2 Poly2::divided_by_y_power(int k) const
{
    assert(k >= 0);
    Poly2 r;
    for (const auto& [m, c] : terms_) {
        assert(m.b >= k && "not divisible by y^k");
        r.terms_.emplace(Mono2{m.a, m.b - k}, c);
    }
    r.recompute_degree_();
    return r;
}

Poly2 Poly2::shifted(int a, int b) const
{
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Mono2{m.a + a, m.b + b}, c);
    r.recompute_degree_();
    return r;
}

void Poly2::recompute_degree_()
{
    if (terms_.empty()) {
        degree_ = std::nullopt;
        return;
    }
    // Grlex-descending order puts a maximal-degree term first.
    degree_ = terms_.begin()->first.degree();
}

Poly2 partial(const Poly2& p, int i, int j)
{
    assert(i >= 0 && j >= 0);
    Poly2 r;
    for (const auto& [m, c] : p.terms()) {
        if (m.a < i || m.b < j) continue;
        Rational factor = c;
        for (int k = 0; k < i; ++k) factor *= m.a - k;
        for (int k = 0; k < j; ++k) factor *= m.b - k;
        r.add_term(m.a - i, m.b - j, factor);
    }
    return r;
}

namespace {

// Recursive-descent parser over the grammar in the header. Tracks byte
// offsets for error messages.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly2 run()
    {
        Poly2 p;
        skip_ws_();
        if (done_()) fail_("empty polynomial");
        bool first = true;
        while (!done_()) {
            int sign = 1;
            if (peek_() == '+' || peek_() == '-') {
                sign = peek_() == '-' ? -1 : 1;
                ++pos_;
                skip_ws_();
            } else if (!first) {
                fail_("expected '+' or '-' between terms");
            }
            parse_term_(p, sign);
            skip_ws_();
            first = false;
        }
        return p;
    }

private:
    void parse_term_(Poly2& p, int sign)
    {
        Rational coeff(sign);
        int a = 0, b = 0;
        bool saw_factor = false;
        if (done_()) fail_("expected term");
        if (peek_() == '+' || peek_() == '-') { // signed int inside a term
            if (peek_() == '-') coeff = -coeff;
            ++pos_;
            skip_ws_();
            if (done_() || !std::isdigit(static_cast<unsigned char>(peek_())))
                fail_("expected digits after sign");
        }
        if (std::isdigit(static_cast<unsigned char>(peek_()))) {
            coeff *= parse_coeff_();
            saw_factor = true;
            skip_ws_();
            if (!done_() && peek_() == '*') {
                ++pos_;
                skip_ws_();
                parse_mono_(a, b);
            }
        } else {
            parse_mono_(a, b);
            saw_factor = true;
        }
        if (!saw_factor) fail_("expected coefficient or monomial");
        p.add_term(a, b, coeff);
    }

    void parse_mono_(int& a, int& b)
    {
        if (done_()) fail_("expected monomial");
        if (peek_() == 'x') {
            ++pos_;
            a = parse_exponent_();
            skip_ws_();
            if (!done_() && peek_() == '*') {
                std::size_t mark = pos_;
                ++pos_;
                skip_ws_();
                if (!done_() && peek_() == 'y') {
                    ++pos_;
                    b = parse_exponent_();
                } else {
                    // not x*y after all; '*' belongs to no production here
                    pos_ = mark;
                    fail_("expected 'y' after '*'");
                }
            }
        } else if (peek_() == 'y') {
            ++pos_;
            b = parse_exponent_();
        } else {
            fail_("expected 'x' or 'y'");
        }
    }

    int parse_exponent_()
    {
        skip_ws_();
        if (done_() || peek_() != '^') return 1;
        ++pos_;
        skip_ws_();
        return parse_uint_("exponent");
    }

    Rational parse_coeff_()
    {
        Int num = parse_uint_big_("coefficient");
        skip_ws_();
        if (!done_() && peek_() == '/') {
            ++pos_;
            skip_ws_();
            std::size_t at = pos_;
            Int den = parse_uint_big_("denominator");
            if (den == 0) throw poly_parse_error("zero denominator", at);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    int parse_uint_(const char* what)
    {
        Int big = parse_uint_big_(what);
        if (big > 1 << 20) fail_("unreasonably large exponent");
        return big.convert_to<int>();
    }

    Int parse_uint_big_(const char* what)
    {
        if (done_() || !std::isdigit(static_cast<unsigned char>(peek_())))
            fail_(std::string("expected ") + what);
        std::size_t start = pos_;
        while (!done_() && std::isdigit(static_cast<unsigned char>(peek_()))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    char peek_() const { return text_[pos_]; }
    bool done_() const { return pos_ >= text_.size(); }
    void skip_ws_()
    {
        while (!done_() && std::isspace(static_cast<unsigned char>(peek_()))) ++pos_;
    }
    [[noreturn]] void fail_(const std::string& msg) const { throw poly_parse_error(msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_mono(std::ostream& out, const Mono2& m)
{
    if (m.a > 0) {
        out << 'x';
        if (m.a > 1) out << '^' << m.a;
        if (m.b > 0) out << '*';
    }
    if (m.b > 0) {
        out << 'y';
        if (m.b > 1) out << '^' << m.b;
    }
}

} // namespace

Poly2 parse_poly(std::string_view text)
{
    return PolyParser(text).run();
}

std::string to_string(const Poly2& p)
{
    std::ostringstream out;
    out << p;
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const Poly2& p)
{
    if (p.is_zero()) return out << '0';
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.degree() == 0) {
            out << to_string(mag);
        } else {
            if (mag != 1) out << to_string(mag) << '*';
            render_mono(out, m);
        }
        first = false;
    }
    return out;
}

} // namespace jetcurve
