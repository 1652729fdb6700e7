#include <jetcurve/render.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace jetcurve {

std::string to_string(DSym s) {
    std::ostringstream os;
    os << "R[" << s.i << "," << s.j << "]";
    return os.str();
}

std::string jet_variable_name(Side side, int k) {
    if (k < 1) throw std::invalid_argument("jet_variable_name: derivative order must be >= 1");
    const char letter = side == Side::x_side ? 'y' : 'x';
    std::string out(1, letter);
    if (k <= 3) {
        out.append(static_cast<size_t>(k), '\'');
    } else {
        out += "^(" + std::to_string(k) + ")";
    }
    return out;
}

namespace {

std::string powered(const std::string& base, int exp) {
    assert(exp >= 1);
    if (exp == 1) return base;
    return "(" + base + ")^" + std::to_string(exp);
}

// "R[i,j]^e" needs no parentheses; jet factors like (y'')^2 do.
std::string powered_sym(DSym s, int exp) {
    assert(exp >= 1);
    if (exp == 1) return to_string(s);
    return to_string(s) + "^" + std::to_string(exp);
}

std::string jet_factor_string(Side side, const JetMonomial& jm) {
    std::string out;
    for (int idx = static_cast<int>(jm.mu.size()) - 1; idx >= 0; --idx) {
        if (jm.mu[static_cast<size_t>(idx)] == 0) continue;
        out += powered(jet_variable_name(side, idx + 1), jm.mu[static_cast<size_t>(idx)]);
    }
    if (jm.foreign_pow > 0)
        out += powered(jet_variable_name(opposite(side), 1), jm.foreign_pow);
    return out;
}

/// One bracket entry: a numerator monomial with its own reduced denominator.
struct DisplayEntry {
    Rational coeff;
    DMonomial reduced;  // no denominator-symbol factor left
    int dpow = 0;
};

/// Entries with more higher-order symbol factors come first; among equals the
/// remaining first-order power breaks ties ascending, then the multiset of
/// higher-order symbols (largest first) compares lexicographically.
struct DisplayEntryOrder {
    Side side;

    static std::vector<DSym> higher_sequence(const DMonomial& m) {
        std::vector<DSym> seq;
        for (const auto& [s, e] : m.factors())
            if (sym_order(s) >= 2) seq.insert(seq.end(), static_cast<size_t>(e), s);
        std::sort(seq.begin(), seq.end(), [](DSym a, DSym b) { return b < a; });
        return seq;
    }

    bool operator()(const DisplayEntry& a, const DisplayEntry& b) const {
        const int nu_a = a.reduced.higher_count();
        const int nu_b = b.reduced.higher_count();
        if (nu_a != nu_b) return nu_a > nu_b;
        const DSym cof = cofactor_symbol(side);
        const int ha = a.reduced.exponent(cof);
        const int hb = b.reduced.exponent(cof);
        if (ha != hb) return ha < hb;
        const auto sa = higher_sequence(a.reduced);
        const auto sb = higher_sequence(b.reduced);
        if (sa != sb) return sa < sb;
        if (a.dpow != b.dpow) return a.dpow < b.dpow;
        return a.reduced < b.reduced;
    }
};

std::string entry_string(Side side, const DisplayEntry& entry, bool with_sign) {
    std::string out;
    const bool negative = entry.coeff < 0;
    if (with_sign && negative) out += "-";
    const Rational mag = negative ? Rational(-entry.coeff) : entry.coeff;
    std::vector<std::string> parts;
    if (mag != 1 || entry.reduced.is_unit()) parts.push_back(to_string(mag));
    for (const auto& [s, e] : entry.reduced.factors()) parts.push_back(powered_sym(s, e));
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    if (entry.dpow > 0) out += "/" + powered_sym(denominator_symbol(side), entry.dpow);
    return out;
}

std::vector<DisplayEntry> reduced_entries(Side side, const JetCoef& coef) {
    const DSym den = denominator_symbol(side);
    std::vector<DisplayEntry> entries;
    for (const auto& [mono, c] : coef.num.terms()) {
        const int g = mono.exponent(den);
        entries.push_back({c, mono.divided_by(den, g), coef.denom_pow - g});
    }
    std::sort(entries.begin(), entries.end(), DisplayEntryOrder{side});
    return entries;
}

/// Renders one jet-monomial term without a leading sign; reports the sign
/// separately so the caller can join terms with " + " / " - ".
std::pair<bool, std::string> term_string(Side side, const JetMonomial& jm, const JetCoef& coef) {
    const auto entries = reduced_entries(side, coef);
    assert(!entries.empty());
    const std::string jet = jet_factor_string(side, jm);
    if (entries.size() == 1) {
        const DisplayEntry& e = entries.front();
        const bool negative = e.coeff < 0;
        DisplayEntry abs_entry{negative ? Rational(-e.coeff) : e.coeff, e.reduced, e.dpow};
        if (jet.empty()) return {negative, entry_string(side, abs_entry, false)};
        if (e.reduced.is_unit() && abs_entry.coeff == 1) {
            std::string body = jet;
            if (e.dpow > 0) body += "/" + powered_sym(denominator_symbol(side), e.dpow);
            return {negative, body};
        }
        return {negative, jet + "*" + entry_string(side, abs_entry, false)};
    }
    std::string bracket;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i == 0) {
            bracket += entry_string(side, entries[i], true);
        } else {
            bracket += entries[i].coeff < 0 ? " - " : " + ";
            DisplayEntry e = entries[i];
            if (e.coeff < 0) e.coeff = -e.coeff;
            bracket += entry_string(side, e, false);
        }
    }
    if (jet.empty()) return {false, "[" + bracket + "]"};
    return {false, jet + "*[" + bracket + "]"};
}

std::string indented(const std::string& text, const std::string& prefix) {
    std::string out;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t nl = text.find('\n', start);
        const std::string line = text.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
        out += prefix + line;
        if (nl == std::string::npos) break;
        out += "\n";
        start = nl + 1;
    }
    return out;
}

std::string inline_expression(const JetExpression& e) {
    if (e.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [jm, coef] : e.terms()) {
        auto [negative, body] = term_string(e.side(), jm, coef);
        if (first) {
            out += (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace

std::string to_display_string(const JetExpression& e) {
    if (e.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [jm, coef] : e.terms()) {
        auto [negative, body] = term_string(e.side(), jm, coef);
        if (first) {
            out += (negative ? "-" : "") + body;
            first = false;
        } else {
            out += "\n";
            out += negative ? "- " : "+ ";
            out += body;
        }
    }
    return out;
}

std::string to_display_string(const GeneratorPair& g) {
    std::string out;
    out += "left (jets of y, over " + to_string(denominator_symbol(g.left.side())) + " != 0):\n";
    out += indented(to_display_string(g.left), "  ");
    out += "\nright (jets of x, over " + to_string(denominator_symbol(g.right.side())) + " != 0):\n";
    out += indented(to_display_string(g.right), "  ");
    return out;
}

std::string to_display_string(const TrivializationMap& m) {
    std::string out;
    for (size_t idx = 0; idx < m.components.size(); ++idx) {
        const JetExpression& comp = m.components[idx];
        const Side label_side = opposite(comp.side());
        if (idx) out += "\n";
        out += jet_variable_name(label_side, static_cast<int>(idx) + 1) + " = " + inline_expression(comp);
    }
    return out;
}

std::string to_display_string(const std::vector<FaaTerm>& terms) {
    std::string out;
    bool first_line = true;
    for (const FaaTerm& t : terms) {
        if (!first_line) out += "\n";
        first_line = false;
        std::ostringstream os;
        os << "[" << t.coefficient << "] ";
        bool first_part = true;
        for (const auto& [size, count] : t.multiplicities) {
            for (int c = 0; c < count; ++c) {
                if (!first_part) os << "+";
                first_part = false;
                os << size;
            }
        }
        os << ": ";
        bool first_assign = true;
        for (const FaaAssignment& a : t.assignments) {
            if (!first_assign) os << " + ";
            first_assign = false;
            if (a.weight != 1) os << a.weight << "*";
            os << to_string(a.symbol);
            assert(a.x_counts.size() == t.multiplicities.size());
            for (size_t e = 0; e < t.multiplicities.size(); ++e) {
                const auto& [size, count] = t.multiplicities[e];
                const int xc = a.x_counts[e];
                const int yc = count - xc;
                if (xc > 0) os << "*" << powered(jet_variable_name(Side::y_side, size), xc);
                if (yc > 0) os << "*" << powered(jet_variable_name(Side::x_side, size), yc);
            }
        }
        out += os.str();
    }
    return out;
}

}  // namespace jetcurve
