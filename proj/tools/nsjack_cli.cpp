// Command-line surface for the exact-rational nonsymmetric Jack /
// Dunkl-operator library: polynomials, norms, evaluations, coefficient
// tables, spectra, and the verification suites. All output is exact.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "nsjack/verify.hpp"

using nlohmann::json;
using namespace nsjack;

namespace {

struct Options {
    int n = 0;
    std::string k = "1", k1 = "0";
    std::string alpha, beta;
    std::vector<std::string> intervals;
    int ell = -1;
    int deg = 4;
    std::string suite = "all";
    std::string format = "json";
    bool unsafe_sizes = false;
};

Composition parse_label(const std::string& s, int n) {
    Composition a;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size() || v < 0) throw user_error("bad label entry: " + part);
        a.push_back(v);
    }
    if ((int)a.size() != n) throw user_error("label length must equal n");
    return a;
}

Interval parse_interval(const std::string& s, int n) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw user_error("interval must look like lo..hi");
    return Interval::checked(std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2)), n);
}

void guard_sizes(const Options& o, int degree) {
    if (o.unsafe_sizes) return;
    if (o.n > 6) throw user_error("n > 6 refused; pass --unsafe-sizes to override");
    if (degree > 8) throw user_error("degree > 8 refused; pass --unsafe-sizes to override");
}

void emit(const Options& o, const json& j) {
    if (o.format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [key, val] : j.items())
            std::cout << key << ": "
                      << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
}

std::string matrix_entry(const Rational& q) { return to_string(q); }

json matrix_json(const std::vector<std::vector<Rational>>& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r) row.push_back(matrix_entry(v));
        rows.push_back(row);
    }
    return rows;
}

int run(const std::string& cmd, const Options& o) {
    if (o.n < 1) throw user_error("--n must be at least 1");
    ParameterSet p{o.n, parse_rational(o.k), parse_rational(o.k1)};

    if (cmd == "verify") {
        guard_sizes(o, o.deg);
        std::vector<std::string> names =
            o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
        json out;
        bool all_ok = true;
        for (const auto& name : names) {
            SuiteReport rep = run_suite(name, p, o.deg);
            json jr{{"checks", rep.checks}, {"failures", rep.failures}};
            out[name] = jr;
            if (!rep.ok()) all_ok = false;
        }
        emit(o, out);
        return all_ok ? 0 : 2;
    }

    auto need_alpha = [&] {
        if (o.alpha.empty()) throw user_error("--alpha is required");
        Composition a = parse_label(o.alpha, o.n);
        guard_sizes(o, total_degree(a));
        return a;
    };
    auto family = [&] {
        std::vector<Interval> fam;
        for (const auto& s : o.intervals) fam.push_back(parse_interval(s, o.n));
        if (fam.empty()) throw user_error("--interval is required");
        require_disjoint(fam);
        return fam;
    };

    if (cmd == "jack") {
        emit(o, json{{"poly", poly_to_text(e_monic(need_alpha(), p))}});
    } else if (cmd == "zeta") {
        emit(o, json{{"poly", poly_to_text(zeta(need_alpha(), p))}});
    } else if (cmd == "norms") {
        ZetaNorms nm = zeta_norms(need_alpha(), p);
        emit(o, json{{"p_norm", to_string(nm.p_norm)},
                     {"a_norm", to_string(nm.a_norm)},
                     {"torus_norm", to_string(nm.torus_norm)}});
    } else if (cmd == "eval1n") {
        emit(o, json{{"value", to_string(eval_1n(need_alpha(), p))}});
    } else if (cmd == "coset") {
        auto fam = family();
        if (fam.size() != 1) throw user_error("coset expects exactly one --interval");
        CosetData cd = coset_data(need_alpha(), fam[0], p);
        json orbit = json::array(), g = json::object();
        for (const auto& b : cd.orbit) {
            json lb = json::array();
            for (int v : b) lb.push_back(v);
            orbit.push_back(lb);
            std::string key;
            for (size_t i = 0; i < b.size(); ++i)
                key += (i ? "," : "") + std::to_string(b[i]);
            g[key] = poly_to_text(cd.g.at(b));
        }
        emit(o, json{{"orbit", orbit},
                     {"g", g},
                     {"base_change", matrix_json(cd.B)},
                     {"gram", matrix_json(cd.H)}});
    } else if (cmd == "invariant") {
        emit(o, json{{"poly", poly_to_text(j_invariant(need_alpha(), family(), p))}});
    } else if (cmd == "alternant") {
        emit(o, json{{"poly", poly_to_text(a_alternating(need_alpha(), family(), p))}});
    } else if (cmd == "psi") {
        auto fam = family();
        if (fam.size() != 1) throw user_error("psi expects exactly one --interval");
        Composition a = need_alpha();
        emit(o, json{{"poly", poly_to_text(apply_psi(zeta(a, p), fam[0], p))}});
    } else if (cmd == "weyl-eval") {
        Composition a = need_alpha();
        emit(o, json{{"value", to_string(weyl_evaluate(zeta(a, p),
                                                       IntervalFamily(family()), p))}});
    } else if (cmd == "hermite") {
        if (o.beta.empty()) throw user_error("--beta is required");
        Composition b = parse_label(o.beta, o.n);
        guard_sizes(o, total_degree(b));
        HermiteLabel lb = HermiteLabel::standard(b);
        emit(o, json{{"poly", poly_to_text(hermite(lb, p))},
                     {"norm", to_string(hermite_norm_B(lb, p))}});
    } else if (cmd == "binomial") {
        json out = json::object();
        for (const auto& [g, v] : binomial_coeffs(need_alpha(), p)) {
            std::string key;
            for (size_t i = 0; i < g.size(); ++i)
                key += (i ? "," : "") + std::to_string(g[i]);
            out[key] = to_string(v);
        }
        emit(o, json{{"coeffs", out}});
    } else if (cmd == "spectrum") {
        if (o.beta.empty()) throw user_error("--beta is required");
        Composition b = parse_label(o.beta, o.n);
        guard_sizes(o, total_degree(b));
        HermiteLabel lb = HermiteLabel::standard(b);
        emit(o, json{{"h1", to_string(spectrum_value(lb, BSpectrum::H1, p))},
                     {"h2", to_string(spectrum_value(lb, BSpectrum::H2, p))},
                     {"h3", to_string(spectrum_value(lb, BSpectrum::H3, p))}});
    } else {
        throw user_error("unknown subcommand: " + cmd);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational nonsymmetric Jack / Dunkl operator calculator"};
    app.require_subcommand(1);
    Options o;

    std::vector<std::string> names = {"jack",      "zeta",      "norms",   "eval1n",
                                      "coset",     "invariant", "alternant", "psi",
                                      "weyl-eval", "hermite",   "binomial", "spectrum",
                                      "verify"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--n", o.n, "number of variables")->required();
        sub->add_option("--k", o.k, "coupling parameter (rational a/b)");
        sub->add_option("--k1", o.k1, "sign-flip coupling parameter (rational a/b)");
        sub->add_option("--alpha", o.alpha, "composition label, comma separated");
        sub->add_option("--beta", o.beta, "composition label, comma separated");
        sub->add_option("--interval", o.intervals, "interval lo..hi, repeatable");
        sub->add_option("--ell", o.ell, "odd-coordinate count");
        sub->add_option("--deg", o.deg, "degree bound");
        sub->add_option("--suite", o.suite, "verification suite name or 'all'");
        sub->add_option("--format", o.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--unsafe-sizes", o.unsafe_sizes, "lift the n/degree guards");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().at(0)->get_name();
    try {
        return run(cmd, o);
    } catch (const user_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const singular_parameter& e) {
        std::cerr << "error: singular parameter: " << e.what() << "\n";
        return 1;
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
