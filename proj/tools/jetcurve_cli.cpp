#include <jetcurve/infinity.hpp>
#include <jetcurve/numeric_eval.hpp>
#include <jetcurve/render.hpp>
#include <jetcurve/sections.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

using nlohmann::ordered_json;
using namespace jetcurve;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

ordered_json symbol_json(DSym s) { return ordered_json::array({s.i, s.j}); }

ordered_json monomial_json(const DMonomial& m) {
    ordered_json factors = ordered_json::array();
    for (const auto& [s, e] : m.factors())
        factors.push_back(ordered_json{{"symbol", symbol_json(s)}, {"power", e}});
    return factors;
}

ordered_json expression_json(const JetExpression& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [jm, coef] : e.terms()) {
        ordered_json term;
        term["jet_exponents"] = jm.mu;
        term["foreign_power"] = jm.foreign_pow;
        term["denominator_power"] = coef.denom_pow;
        ordered_json monomials = ordered_json::array();
        for (const auto& [mono, c] : coef.num.terms())
            monomials.push_back(ordered_json{{"coefficient", to_string(c)}, {"factors", monomial_json(mono)}});
        term["numerator"] = monomials;
        terms.push_back(std::move(term));
    }
    return ordered_json{{"side", e.side() == Side::x_side ? "left" : "right"},
                        {"display", to_display_string(e)},
                        {"terms", std::move(terms)}};
}

struct CurvePointArgs {
    std::string curve_text;
    std::string point_text;
};

CurveSpec parse_curve_arg(const std::string& text) {
    return validate_curve(parse_poly(text));
}

std::pair<Rational, Rational> parse_point_arg(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point must be given as \"x,y\" with rational components");
    return {rational_from_string(text.substr(0, comma)), rational_from_string(text.substr(comma + 1))};
}

EvalConfig make_config(const std::string& mode, double tol) {
    EvalConfig cfg;
    if (mode == "exact") {
        cfg.mode = EvalConfig::Mode::exact;
    } else if (mode == "float") {
        cfg.mode = EvalConfig::Mode::floating;
    } else {
        throw std::invalid_argument("mode must be exact or float");
    }
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    cfg.rel_tol = tol;
    return cfg;
}

int run_gen(int order, const std::string& side, const std::string& format) {
    const GeneratorPair& g = generate(order);
    if (format == "json") {
        ordered_json out{{"command", "gen"}, {"order", order}};
        if (side == "left" || side == "both") out["left"] = expression_json(g.left);
        if (side == "right" || side == "both") out["right"] = expression_json(g.right);
        std::cout << out.dump(2) << "\n";
        return exit_pass;
    }
    if (side == "both") {
        std::cout << to_display_string(g) << "\n";
    } else {
        std::cout << to_display_string(side == "left" ? g.left : g.right) << "\n";
    }
    return exit_pass;
}

int run_faa(int order, int vars, const std::string& format) {
    const auto terms = faa_di_bruno(order, vars);
    if (format == "json") {
        ordered_json list = ordered_json::array();
        for (const FaaTerm& t : terms) {
            ordered_json entry;
            entry["coefficient"] = t.coefficient.str();
            ordered_json mults = ordered_json::array();
            for (const auto& [size, count] : t.multiplicities)
                mults.push_back(ordered_json{{"size", size}, {"count", count}});
            entry["multiplicities"] = std::move(mults);
            entry["blocks"] = t.block_count;
            ordered_json assigns = ordered_json::array();
            for (const FaaAssignment& a : t.assignments)
                assigns.push_back(ordered_json{{"x_counts", a.x_counts},
                                               {"weight", a.weight.str()},
                                               {"symbol", symbol_json(a.symbol)}});
            entry["assignments"] = std::move(assigns);
            list.push_back(std::move(entry));
        }
        std::cout << ordered_json{{"command", "faa"}, {"order", order}, {"vars", vars}, {"terms", list}}.dump(2)
                  << "\n";
        return exit_pass;
    }
    std::cout << to_display_string(terms) << "\n";
    return exit_pass;
}

int run_triv(int order, const std::string& format) {
    const TrivializationMap map = trivialization_change(order);
    if (format == "json") {
        ordered_json comps = ordered_json::array();
        for (const JetExpression& comp : map.components) comps.push_back(expression_json(comp));
        std::cout << ordered_json{{"command", "triv"}, {"order", order}, {"components", comps}}.dump(2) << "\n";
        return exit_pass;
    }
    std::cout << to_display_string(map) << "\n";
    return exit_pass;
}

int run_infinity(int order, int degree, const std::string& curve_text, const std::string& format) {
    if (!curve_text.empty()) {
        const CurveSpec curve = parse_curve_arg(curve_text);
        const TransferCheckReport report = symbolic_transfer_check(curve, order);
        if (format == "json") {
            ordered_json terms = ordered_json::array();
            for (const auto& t : report.terms)
                terms.push_back(ordered_json{{"jet_exponents", t.jet.mu},
                                             {"expected_order", t.expected_order},
                                             {"observed_order", t.observed_order},
                                             {"degenerate", t.degenerate}});
            std::cout << ordered_json{{"check", "infinity-transfer"},
                                      {"kappa", report.kappa},
                                      {"curve", curve_text},
                                      {"degree", report.d},
                                      {"required_order", report.required_order},
                                      {"observed_order", report.observed_order},
                                      {"terms", terms},
                                      {"pass", report.pass}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "chart transfer on degree " << report.d << " curve, order " << report.kappa
                      << ": required vanishing " << report.required_order << ", observed "
                      << report.observed_order << (report.pass ? " -> pass" : " -> FAIL") << "\n";
        }
        return report.pass ? exit_pass : exit_check_failed;
    }
    if (degree < 1) throw std::invalid_argument("infinity: provide --degree or --curve");
    const InfinityReport report = verify_uniform_order(generate(order), degree);
    const bool pass = report.uniform && report.uniform_value == degree - order - 2;
    if (format == "json") {
        ordered_json monomials = ordered_json::array();
        for (const auto& entry : report.monomials)
            monomials.push_back(ordered_json{{"jet_exponents", entry.jet.mu},
                                             {"coefficient_factors", monomial_json(entry.coeff_monomial)},
                                             {"order", entry.order}});
        std::cout << ordered_json{{"check", "infinity-order"},
                                  {"kappa", report.kappa},
                                  {"degree", report.d},
                                  {"uniform", report.uniform},
                                  {"uniform_value", report.uniform_value},
                                  {"monomials", monomials},
                                  {"pass", pass}}
                         .dump(2)
                  << "\n";
    } else {
        if (report.uniform) {
            std::cout << "all " << report.monomials.size() << " coefficient monomials vanish to order "
                      << report.uniform_value << " at infinity (degree " << degree << ", order " << order
                      << ")" << (pass ? "" : " -> UNEXPECTED VALUE") << "\n";
        } else {
            std::cout << "vanishing order at infinity is not uniform (degree " << degree << ", order "
                      << order << ")\n";
        }
    }
    return pass ? exit_pass : exit_check_failed;
}

int run_count(int order, int weight, int degree, bool breakdown, bool asymptotic,
              const std::string& format) {
    const SectionCount count = count_sections(order, weight, degree, breakdown);
    ordered_json out{{"command", "count"},
                     {"order", order},
                     {"weight", weight},
                     {"degree", degree},
                     {"total", count.total.str()}};
    std::ostringstream text;
    text << "independent sections at order " << order << ", weight " << weight << ", degree " << degree
         << ": " << count.total << "\n";
    if (breakdown && count.breakdown) {
        ordered_json rows = ordered_json::array();
        for (const auto& [comp, delta, dim] : *count.breakdown) {
            ordered_json row{{"parts", comp.parts}, {"delta", delta}, {"dimension", dim.str()}};
            rows.push_back(std::move(row));
            text << "  (";
            for (size_t i = 0; i < comp.parts.size(); ++i) {
                if (i) text << ",";
                text << "m" << i + 1 << "=" << comp.parts[i];
            }
            text << "): budget " << delta << ", dimension " << dim << "\n";
        }
        out["breakdown"] = std::move(rows);
    }
    if (asymptotic) {
        const Rational model = asymptotic_estimate(order, weight, degree);
        const double model_val = to_double(model);
        const double total_val = to_double(Rational(count.total));
        const double gap = model_val == 0.0 ? 0.0 : std::abs(total_val - model_val) / std::abs(model_val);
        out["asymptotic_model"] = to_string(model);
        out["relative_gap"] = format_double(gap);
        text << "  leading-order model: " << to_string(model) << " (relative gap " << format_double(gap)
             << ")\n";
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return exit_pass;
}

int run_eval(int order, const CurvePointArgs& args, const std::string& mode, double tol,
             const std::string& format) {
    const CurveSpec curve = parse_curve_arg(args.curve_text);
    const auto [xp, yp] = parse_point_arg(args.point_text);
    const EvalConfig cfg = make_config(mode, tol);
    const AgreementReport report = check_generator_agreement(order, curve, xp, yp, cfg);
    if (format == "json") {
        ordered_json elim = ordered_json::object();
        for (const auto& [o, equal] : report.elimination_equal) elim[std::to_string(o)] = equal;
        std::cout << ordered_json{{"check", "agreement"},
                                  {"kappa", report.kappa},
                                  {"curve", args.curve_text},
                                  {"point", args.point_text},
                                  {"mode", mode},
                                  {"left", report.left_value},
                                  {"right", report.right_value},
                                  {"max_residual", format_double(report.residual)},
                                  {"elimination_equal", elim},
                                  {"pass", report.pass}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "order-" << report.kappa << " values on the disc: left " << report.left_value
                  << ", right " << report.right_value << (report.pass ? " -> agree" : " -> DISAGREE");
        for (const auto& [o, equal] : report.elimination_equal)
            std::cout << "; eliminated form " << o << (equal ? " matches" : " DIFFERS");
        std::cout << "\n";
    }
    return report.pass ? exit_pass : exit_check_failed;
}

int run_roundtrip(int order, const CurvePointArgs& args, const std::string& mode, double tol,
                  const std::string& format) {
    const CurveSpec curve = parse_curve_arg(args.curve_text);
    const auto [xp, yp] = parse_point_arg(args.point_text);
    const EvalConfig cfg = make_config(mode, tol);
    const RoundtripReport report = check_trivialization_roundtrip(order, curve, xp, yp, cfg);
    if (format == "json") {
        std::cout << ordered_json{{"check", "roundtrip"},
                                  {"kappa", report.kappa},
                                  {"curve", args.curve_text},
                                  {"point", args.point_text},
                                  {"mode", mode},
                                  {"input_jets", report.input_jets},
                                  {"output_jets", report.output_jets},
                                  {"max_residual", format_double(report.max_residual)},
                                  {"pass", report.pass}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "jet roundtrip x -> y -> x at order " << report.kappa
                  << (report.pass ? ": identity holds" : ": IDENTITY FAILS") << "\n";
    }
    return report.pass ? exit_pass : exit_check_failed;
}

int run_probe(int order, const std::string& curve_text, double tol, const std::string& format) {
    const CurveSpec curve = parse_curve_arg(curve_text);
    const EvalConfig cfg = make_config("float", tol);
    const ProbeReport report = probe_infinity_vanishing(order, curve, cfg);
    if (format == "json") {
        ordered_json samples = ordered_json::array();
        for (const auto& [y2, mag] : report.samples)
            samples.push_back(ordered_json{{"y2", format_double(y2)}, {"magnitude", format_double(mag)}});
        std::cout << ordered_json{{"check", "probe"},
                                  {"kappa", report.kappa},
                                  {"curve", curve_text},
                                  {"mode", "float"},
                                  {"slope", format_double(report.slope)},
                                  {"expected_slope", format_double(report.expected_slope)},
                                  {"samples", samples},
                                  {"pass", report.pass}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "vanishing rate toward infinity: fitted slope " << format_double(report.slope)
                  << ", expected " << format_double(report.expected_slope)
                  << (report.pass ? " -> pass" : " -> FAIL") << "\n";
    }
    return report.pass ? exit_pass : exit_check_failed;
}

int run_series(int order, const CurvePointArgs& args, const std::string& side_text,
               const std::string& format) {
    const CurveSpec curve = parse_curve_arg(args.curve_text);
    const auto [xp, yp] = parse_point_arg(args.point_text);
    const Side side = side_text == "right" ? Side::x_side : Side::y_side;
    const SeriesPoint disc = local_graph_series(curve, xp, yp, side, order);
    const Rational residual = max_faa_residual(disc);
    if (format == "json") {
        ordered_json xj = ordered_json::array(), yj = ordered_json::array();
        for (const Rational& v : disc.x_jets) xj.push_back(to_string(v));
        for (const Rational& v : disc.y_jets) yj.push_back(to_string(v));
        std::cout << ordered_json{{"command", "series"},
                                  {"order", order},
                                  {"curve", args.curve_text},
                                  {"point", args.point_text},
                                  {"x_jets", xj},
                                  {"y_jets", yj},
                                  {"composite_residual", to_string(residual)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "graph disc through (" << to_string(xp) << ", " << to_string(yp) << "), order "
                  << order << ":\n";
        for (int k = 0; k <= order; ++k)
            std::cout << "  x^(" << k << ") = " << to_string(disc.x_jets[static_cast<size_t>(k)])
                      << "   y^(" << k << ") = " << to_string(disc.y_jets[static_cast<size_t>(k)]) << "\n";
        std::cout << "  chain-rule composite residual: " << to_string(residual) << "\n";
    }
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jet differentials on smooth plane curves"};
    app.require_subcommand(1);

    int order = 1, weight = 0, degree = 0, vars = 2;
    bool breakdown = false, asymptotic = false;
    double tol = 1e-9;
    std::string side = "both", format = "text", mode = "exact";
    CurvePointArgs args;

    const auto add_order = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("-k,--order", order, "jet order (kappa >= 1)");
        if (required) opt->required();
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_curve_point = [&](CLI::App* cmd) {
        cmd->add_option("--curve", args.curve_text, "curve equation, e.g. \"x^4+y^4-2\"")->required();
        cmd->add_option("--point", args.point_text, "base point \"x,y\" with rational components")
            ->required();
    };
    const auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--tol", tol, "relative tolerance for float mode");
    };

    auto* gen = app.add_subcommand("gen", "print the two-sided order-k differential");
    add_order(gen);
    gen->add_option("--side", side, "which side to print")->check(CLI::IsMember({"left", "right", "both"}));
    add_format(gen);

    auto* faa = app.add_subcommand("faa", "print the order-k composite derivative expansion");
    add_order(faa);
    faa->add_option("--vars", vars, "number of composed letters (1 or 2)")->check(CLI::Range(1, 2));
    add_format(faa);

    auto* triv = app.add_subcommand("triv", "print the x-jet to y-jet change of trivialization");
    add_order(triv);
    add_format(triv);

    auto* infinity = app.add_subcommand("infinity", "vanishing order at the line at infinity");
    add_order(infinity);
    infinity->add_option("-d,--degree", degree, "curve degree for the symbolic tally");
    infinity->add_option("--curve", args.curve_text, "concrete curve for the chart transfer check");
    add_format(infinity);

    auto* count = app.add_subcommand("count", "count independent sections of the jet bundle");
    add_order(count);
    count->add_option("-m,--weight", weight, "weighted degree in the jet variables")->required();
    count->add_option("-d,--degree", degree, "curve degree")->required();
    count->add_flag("--breakdown", breakdown, "list one row per weighted composition");
    count->add_flag("--asymptotic", asymptotic, "print the leading-order model and the relative gap");
    add_format(count);

    auto* eval = app.add_subcommand("eval", "evaluate both sides on a disc and compare");
    add_order(eval);
    add_curve_point(eval);
    add_mode(eval);
    add_format(eval);

    auto* roundtrip = app.add_subcommand("roundtrip", "x-jets -> y-jets -> x-jets identity check");
    add_order(roundtrip);
    add_curve_point(roundtrip);
    add_mode(roundtrip);
    add_format(roundtrip);

    auto* probe = app.add_subcommand("probe", "float probe of vanishing toward infinity");
    add_order(probe);
    probe->add_option("--curve", args.curve_text, "curve equation")->required();
    probe->add_option("--tol", tol, "relative tolerance");
    add_format(probe);

    auto* series = app.add_subcommand("series", "solve a local graph disc and print its jets");
    add_order(series);
    add_curve_point(series);
    series->add_option("--side", side, "left: y as a graph of x; right: x as a graph of y")
        ->check(CLI::IsMember({"left", "right"}));
    add_format(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (gen->parsed()) return run_gen(order, side, format);
        if (faa->parsed()) return run_faa(order, vars, format);
        if (triv->parsed()) return run_triv(order, format);
        if (infinity->parsed()) return run_infinity(order, degree, args.curve_text, format);
        if (count->parsed()) return run_count(order, weight, degree, breakdown, asymptotic, format);
        if (eval->parsed()) return run_eval(order, args, mode, tol, format);
        if (roundtrip->parsed()) return run_roundtrip(order, args, mode, tol, format);
        if (probe->parsed()) return run_probe(order, args.curve_text, tol, format);
        if (series->parsed()) return run_series(order, args, side, format);
    } catch (const poly_parse_error& e) {
        std::cerr << "curve parse error at offset " << e.offset << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
