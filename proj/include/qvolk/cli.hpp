#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// the test suite can drive it in-process.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or precondition error,
// 3 non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qvolk.hpp"

namespace qvolk::cli {

using json = json_io::json;

enum Exit : int { ok = 0, verification_failed = 1, usage = 2, not_converged = 3 };

/// One computed value in whichever field produced it.
using Value = std::variant<BigRational, RationalFunction, PadicNumber, CyclotomicElement>;

inline json value_json(const Value& v) {
    return std::visit([](const auto& x) { return json_io::to_json(x); }, v);
}

inline std::string value_text(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigRational>)
                return to_string(x);
            else
                return x.to_string();
        },
        v);
}

inline Value simplify(const CyclotomicElement& c) {
    RationalFunction base;
    if (c.in_base_field(&base)) return base;
    return c;
}

struct Row {
    std::string kind;
    std::optional<long> n;
    std::string x, m, chi, q_spec;
    Value value;
    json extra = json::object();
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline void write_rows(std::ostream& out, const std::string& format, const std::string& command,
                       const std::vector<Row>& rows) {
    if (format == "csv") {
        out << "kind,n,x,m,chi,q_spec,value\n";
        for (const auto& r : rows)
            out << csv_field(r.kind) << ',' << (r.n ? std::to_string(*r.n) : "") << ',' << csv_field(r.x) << ','
                << csv_field(r.m) << ',' << csv_field(r.chi) << ',' << csv_field(r.q_spec) << ','
                << csv_field(value_text(r.value)) << '\n';
        return;
    }
    json j;
    j["command"] = command;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json row;
        row["kind"] = r.kind;
        if (r.n) row["n"] = *r.n;
        if (!r.x.empty()) row["x"] = r.x;
        if (!r.m.empty()) row["m"] = r.m;
        if (!r.chi.empty()) row["chi"] = r.chi;
        row["q_spec"] = r.q_spec;
        row["value"] = value_json(r.value);
        for (auto& [k, v] : r.extra.items()) row[k] = v;
        j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

/// "3" or "0..5".
inline std::vector<long> parse_range(const std::string& s) {
    try {
        auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            long v = std::stol(s, &used);
            if (used != s.size() || v < 0) throw precondition_error("");
            return {v};
        }
        long lo = std::stol(s.substr(0, dots), &used);
        if (used != dots) throw precondition_error("");
        std::string rest = s.substr(dots + 2);
        long hi = std::stol(rest, &used);
        if (used != rest.size() || lo < 0 || hi < lo) throw precondition_error("");
        std::vector<long> out;
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    } catch (const std::exception&) {
        throw precondition_error("bad range '" + s + "' (want 'n' or 'lo..hi')");
    }
}

struct Common {
    std::string q = "sym";
    unsigned long p = 0;
    int precision = default_padic_precision;
    std::string format = "json";
    std::string output;
};

/// Plain "sym" widens its root order to what the arguments need; an
/// explicit "sym:D" is taken as given.
inline QDescriptor resolve_q(const Common& c, long needed_root_order = 1) {
    QDescriptor d = parse_q_spec(c.q, c.p, c.precision);
    if (c.q == "sym") return SymbolicQ(static_cast<int>(needed_root_order));
    return d;
}

inline std::string describe(const QDescriptor& d) {
    return std::visit([](const auto& q) { return q.describe(); }, d);
}

template <class Fn>
void with_output(const Common& c, std::ostream& fallback, Fn&& fn) {
    if (c.output.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw precondition_error("cannot open output file '" + c.output + "'");
    fn(f);
}

inline void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--q", c.q, "q: sym, sym:D, a/b, padic:p:q[:A]");
    sub->add_option("--p", c.p, "prime; turns a rational --q into a p-adic one");
    sub->add_option("--A", c.precision, "p-adic precision");
    sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", c.output, "write here instead of stdout");
}

inline IntegralOptions integral_options(long stability, int n_max) { return {stability, n_max, 0}; }

inline Integrand<PadicQ> parse_integrand(const std::string& name, const PadicQ& q, std::int64_t& d) {
    auto fields = [](const std::string& s, std::size_t max_parts) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (out.size() + 1 < max_parts) {
            auto colon = s.find(':', start);
            if (colon == std::string::npos) break;
            out.push_back(s.substr(start, colon - start));
            start = colon + 1;
        }
        out.push_back(s.substr(start));
        return out;
    };
    auto to_n = [&](const std::string& s) { return parse_range(s).at(0); };
    auto f = fields(name, 3);
    if (f[0] == "one" && f.size() == 1) return integrand_one(q);
    if (f[0] == "bracket_pow" && f.size() == 2) return integrand_bracket_pow(to_n(f[1]), q);
    if (f[0] == "shifted_bracket_pow" && f.size() == 3) return integrand_shifted_bracket_pow(to_n(f[1]), parse_rational(f[2]), q);
    if (f[0] == "char_twisted" && f.size() == 3) {
        auto chi = parse_character_id(f[2]);
        d = chi.modulus();
        return integrand_char_twisted(to_n(f[1]), chi, q);
    }
    throw precondition_error("unknown integrand '" + name +
                             "' (one, bracket_pow:n, shifted_bracket_pow:n:x, char_twisted:n:chi_id)");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"q-Volkenborn integration: q-Bernoulli and q-Euler numbers, exact and p-adic"};
    app.require_subcommand(1);

    Common common;
    std::string kind, n_range = "0", x = "0", chi, form, method = "closed", suite_csv, gf = "euler";
    std::string f_name = "one";
    long m = 0, stability = 6, terms = 200;
    int n_max_level = 8, n_max = 12, order = 10;
    std::int64_t d = 1, modulus = 1;
    std::vector<long> verify_m;
    std::vector<std::string> suites;

    auto* numbers = app.add_subcommand("numbers", "beta_{n,q}, K_{n,q}, K_{n,chi,q}");
    numbers->add_option("--kind", kind)->required()->check(CLI::IsMember({"beta", "K", "K_chi"}));
    numbers->add_option("--n", n_range, "n or lo..hi");
    numbers->add_option("--chi", chi, "character id f:e1,...");
    numbers->add_option("--method", method)->check(CLI::IsMember({"closed", "integral"}));
    numbers->add_option("--stability", stability);
    numbers->add_option("--N-max", n_max_level);
    add_common(numbers, common);

    auto* polys = app.add_subcommand("polynomials", "beta_{n,q}(x), K_{n,q}(x)");
    polys->add_option("--kind", kind)->required()->check(CLI::IsMember({"beta_poly", "K_poly"}));
    polys->add_option("--n", n_range);
    polys->add_option("--x", x, "a/b");
    polys->add_option("--m", m, "odd m: evaluate through the distribution relation");
    polys->add_option("--form", form)->check(CLI::IsMember({"closed", "expansion", "integral"}));
    polys->add_option("--stability", stability);
    polys->add_option("--N-max", n_max_level);
    add_common(polys, common);

    auto* integ = app.add_subcommand("integrate", "Riemann-sum limit of a built-in integrand");
    integ->add_option("--kind", kind)->check(CLI::IsMember({"bosonic", "fermionic"}));
    integ->add_option("--f", f_name, "one | bracket_pow:n | shifted_bracket_pow:n:x | char_twisted:n:chi_id");
    integ->add_option("--d", d, "X_d (char_twisted uses the character modulus)");
    integ->add_option("--stability", stability);
    integ->add_option("--N-max", n_max_level);
    add_common(integ, common);

    auto* ver = app.add_subcommand("verify", "identity-verification suites");
    ver->add_option("--suite", suites, "suite name (repeatable); default all");
    ver->add_option("--m", verify_m, "odd moduli for eq7");
    ver->add_option("--n-max", n_max, "largest n for limits");
    add_common(ver, common);

    auto* ser = app.add_subcommand("series", "2/(e^t+1), F_q(t), partial sums of the q-series");
    ser->add_option("--gf", gf)->check(CLI::IsMember({"euler", "Fq", "partial"}));
    ser->add_option("--T", order, "series order");
    ser->add_option("--n", n_range, "k for --gf partial");
    ser->add_option("--terms", terms, "terms for --gf partial");
    add_common(ser, common);

    auto* chars = app.add_subcommand("characters", "Dirichlet characters mod f");
    chars->add_option("--f", modulus, "modulus")->required();
    add_common(chars, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    kind = kind.empty() ? "fermionic" : kind;
    const bool csv = common.format == "csv";

    try {
        if (numbers->parsed()) {
            std::vector<Row> rows;
            std::optional<DirichletCharacter> character;
            long root = 1;
            if (kind == "K_chi") {
                if (chi.empty()) throw precondition_error("--kind K_chi needs --chi");
                character = parse_character_id(chi);
                root = 1;
            }
            QDescriptor qd = resolve_q(common, root);
            for (long n : parse_range(n_range)) {
                Value v = std::visit(
                    [&](const auto& q) -> Value {
                        using Q = std::decay_t<decltype(q)>;
                        if (kind == "beta") return beta_number(n, q);
                        if (kind == "K") return k_number(n, q);
                        auto how = method == "integral" ? TwistMethod::integral : TwistMethod::closed;
                        if constexpr (std::is_same_v<Q, SymbolicQ>)
                            return simplify(k_chi(n, *character, q, how));
                        else
                            return k_chi(n, *character, q, how, integral_options(stability, n_max_level));
                    },
                    qd);
                rows.push_back({kind, n, "", "", chi, describe(qd), v});
            }
            with_output(common, out, [&](std::ostream& o) { write_rows(o, common.format, "numbers", rows); });
            return Exit::ok;
        }

        if (polys->parsed()) {
            const BigRational xv = parse_rational(x);
            if (m != 0 && kind != "K_poly") throw precondition_error("--m applies to K_poly only");
            if (m != 0 && !form.empty()) throw precondition_error("--m and --form are exclusive");
            if (m != 0 && (m < 1 || m % 2 == 0)) throw precondition_error("the distribution relation needs odd positive m");
            const long mm = m == 0 ? 1 : m;
            QDescriptor qd = resolve_q(common, mm * xv.get_den().get_si());
            PolyForm pf = form == "expansion" ? PolyForm::expansion
                        : form == "integral"  ? PolyForm::integral
                                              : PolyForm::closed;
            IntegralOptions io = integral_options(stability, n_max_level);
            std::vector<Row> rows;
            for (long n : parse_range(n_range)) {
                Value v = std::visit(
                    [&](const auto& q) -> Value {
                        if (m != 0) return k_distribution_rhs(n, xv, m, q);
                        if (kind == "beta_poly") return beta_polynomial(n, xv, q, pf, io);
                        return k_polynomial(n, xv, q, pf, io);
                    },
                    qd);
                rows.push_back({kind, n, to_string(xv), m ? std::to_string(m) : "", "", describe(qd), v});
            }
            with_output(common, out, [&](std::ostream& o) { write_rows(o, common.format, "polynomials", rows); });
            return Exit::ok;
        }

        if (integ->parsed()) {
            QDescriptor qd = parse_q_spec(common.q, common.p, common.precision);
            const auto* q = std::get_if<PadicQ>(&qd);
            if (!q) throw precondition_error("integrate needs a p-adic q (use --p or padic:p:q)");
            auto f = parse_integrand(f_name, *q, d);
            MeasureSpec<PadicQ> spec(kind == "bosonic" ? MeasureKind::bosonic : MeasureKind::fermionic, *q,
                                     ProfiniteDomain(q->prime(), static_cast<std::uint64_t>(d)));
            auto r = integrate(spec, f, stability, n_max_level);
            Row row{"integrate:" + kind, std::nullopt, "", "", "", describe(qd), r.value};
            row.extra["f"] = f_name;
            row.extra["d"] = d;
            row.extra["N_used"] = r.levels_used;
            row.extra["stability"] = r.stability;
            row.extra["trace"] = r.trace;
            with_output(common, out, [&](std::ostream& o) { write_rows(o, common.format, "integrate", {row}); });
            return Exit::ok;
        }

        if (ver->parsed()) {
            verify::Options opt;
            if (!verify_m.empty()) opt.m = verify_m;
            opt.n_max = n_max;
            if (suites.empty()) suites = verify::suite_names();
            std::vector<verify::SuiteReport> reports;
            for (const auto& s : suites) reports.push_back(verify::run_suite(s, opt));
            bool all = true;
            for (const auto& r : reports) all = all && r.passed();
            with_output(common, out, [&](std::ostream& o) {
                if (csv) {
                    o << "suite,cases,pass\n";
                    for (const auto& r : reports) o << r.name << ',' << r.cases.size() << ',' << (r.passed() ? "true" : "false") << '\n';
                    return;
                }
                json j;
                j["command"] = "verify";
                j["pass"] = all;
                j["suites"] = json::array();
                for (const auto& r : reports) j["suites"].push_back(verify::to_json(r));
                o << j.dump(2) << '\n';
            });
            return all ? Exit::ok : Exit::verification_failed;
        }

        if (ser->parsed()) {
            std::vector<Row> rows;
            if (gf == "euler") {
                auto s = euler_gf(order);
                for (int n = 0; n <= order; ++n) {
                    Row r{"euler", n, "", "", "", "", s[static_cast<std::size_t>(n)]};
                    r.extra["scaled"] = to_string(BigRational(factorial(static_cast<unsigned long>(n))) * s[static_cast<std::size_t>(n)]);
                    rows.push_back(std::move(r));
                }
            } else if (gf == "Fq") {
                QDescriptor qd = parse_q_spec(common.q, common.p, common.precision);
                std::visit(
                    [&](const auto& q) {
                        using Q = std::decay_t<decltype(q)>;
                        if constexpr (std::is_same_v<Q, PadicQ>) {
                            throw precondition_error("F_q(t) needs a symbolic or rational q");
                        } else {
                            auto s = f_q_series(q, order);
                            auto scaled = scaled_coefficients(s);
                            for (int n = 0; n <= order; ++n) {
                                Row r{"Fq", n, "", "", "", q.describe(), s[static_cast<std::size_t>(n)]};
                                r.extra["scaled"] = json_io::to_json(scaled[static_cast<std::size_t>(n)]);
                                rows.push_back(std::move(r));
                            }
                        }
                    },
                    qd);
            } else {
                const BigRational qv = parse_rational(common.q);
                for (long k : parse_range(n_range)) {
                    auto ps = f_q_coefficient_partial(k, qv, terms);
                    Row r{"partial", k, "", "", "", to_string(qv), ps.value};
                    r.extra["terms"] = terms;
                    r.extra["tail_bound"] = to_string(ps.tail_bound);
                    rows.push_back(std::move(r));
                }
            }
            if (csv) {
                // Extraction column: the n!-scaled coefficient where one exists.
                for (auto& r : rows)
                    if (r.extra.contains("scaled")) {
                        const auto& sc = r.extra["scaled"];
                        r.value = sc.is_string() ? Value(parse_rational(sc.get<std::string>()))
                                                 : Value(json_io::rational_function_from_json(sc));
                    }
            }
            with_output(common, out, [&](std::ostream& o) { write_rows(o, common.format, "series", rows); });
            return Exit::ok;
        }

        if (chars->parsed()) {
            auto all = enumerate_characters(modulus);
            auto value_string = [](const CharacterValue& v) -> std::string {
                if (v.zero) return "0";
                if (v.order <= 2) return std::to_string(v.sign());
                return "zeta" + std::to_string(v.order) + "^" + std::to_string(v.exponent);
            };
            with_output(common, out, [&](std::ostream& o) {
                if (csv) {
                    o << "kind,n,x,m,chi,q_spec,value\n";
                    for (const auto& c : all)
                        for (std::int64_t a = 0; a < modulus; ++a)
                            o << "character," << a << ",,," << csv_field(c.id()) << ",," << value_string(c.value(a)) << '\n';
                    return;
                }
                json j;
                j["command"] = "characters";
                j["f"] = modulus;
                j["factors"] = json::array();
                for (const auto& fac : all.front().group().factors)
                    j["factors"].push_back(json{{"generator", fac.generator}, {"order", fac.order}});
                j["characters"] = json::array();
                for (const auto& c : all) {
                    auto cond = conductor(c);
                    json row{{"id", c.id()}, {"order", c.value_order()}, {"conductor", cond.conductor},
                             {"primitive", cond.primitive}};
                    row["values"] = json::array();
                    for (std::int64_t a = 0; a < modulus; ++a) row["values"].push_back(value_string(c.value(a)));
                    j["characters"].push_back(std::move(row));
                }
                o << j.dump(2) << '\n';
            });
            return Exit::ok;
        }
    } catch (const non_convergence_error& e) {
        err << "error: " << e.what() << " (trace:";
        for (long t : e.trace) err << ' ' << t;
        err << ")\n";
        return Exit::not_converged;
    } catch (const qvolk::error& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    return Exit::usage;
}

} // namespace qvolk::cli
