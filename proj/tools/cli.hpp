#pragma once

#include "lmo/cfrac.hpp"
#include "lmo/dedekind.hpp"
#include "lmo/invariants.hpp"
#include "lmo/json_io.hpp"
#include "lmo/numeric.hpp"
#include "lmo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace lmocli {

using nlohmann::json;

inline lmo::Int parse_int_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw std::invalid_argument("not an integer: '" + s + "'");
    return lmo::Int(s[0] == '+' ? s.substr(1) : s);
}

// Fiber token "p/q" (or bare "p" for q = 1), kept unreduced so that
// validation still sees non-coprime input.
inline lmo::SeifertFiber parse_fiber_token(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return {parse_int_token(s), lmo::Int(1)};
    return {parse_int_token(s.substr(0, slash)), parse_int_token(s.substr(slash + 1))};
}

inline void print_series(std::ostream& out, const lmo::HbarSeries& z) {
    for (int k = 0; k <= z.order_cap(); ++k)
        out << "hbar^" << k << "\t" << lmo::to_string(z[k]) << "\n";
}

inline std::string fiber_list(const lmo::SeifertData& d) {
    std::string s;
    for (std::size_t i = 0; i < d.fibers.size(); ++i) {
        if (i) s += " ";
        s += d.fibers[i].p.str() + "/" + d.fibers[i].q.str();
    }
    return s;
}

inline json fibers_json(const lmo::SeifertData& d) {
    json arr = json::array();
    for (const auto& f : d.fibers) arr.push_back({{"p", f.p.str()}, {"q", f.q.str()}});
    return arr;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Exact sl2-reduced LMO invariant, Casson-Walker invariant and Dedekind "
        "symbols of lens spaces and Seifert fibered rational homology spheres"};
    app.require_subcommand(1);
    int rc = 0;

    int order = 10;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub, bool with_order = true) {
        if (with_order)
            sub->add_option("--order", order, "hbar truncation order")
                ->check(CLI::Range(0, 100))
                ->capture_default_str();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string p_str, q_str, frac_str, b_str, f_str;
    std::vector<std::string> fiber_strs, p_strs;

    auto* lens = app.add_subcommand("lens", "invariants of the lens space L(p, q)");
    lens->add_option("p", p_str, "order of H_1")->required();
    lens->add_option("q", q_str, "gluing parameter, coprime to p")->required();
    add_common(lens);
    lens->callback([&] {
        lmo::LensData d{parse_int_token(p_str), parse_int_token(q_str)};
        lmo::HbarSeries z = lmo_lens(d, order);
        lmo::Rational s = lmo::dedekind_symbol(lmo::frac(d.q, d.p));
        if (format == "json") {
            out << json{{"p", d.p.str()},
                        {"q", d.q.str()},
                        {"h1_order", lmo::abs(lmo::Rational(d.p)).str()},
                        {"dedekind_S_q_over_p", lmo::to_string(s)},
                        {"series", lmo::to_json(z)}}
                       .dump(2)
                << "\n";
        } else {
            out << "L(" << d.p << ", " << d.q << ")\n";
            out << "|H_1| = " << lmo::abs(lmo::Rational(d.p)) << "\n";
            out << "S(q/p) = " << lmo::to_string(s) << "\n";
            print_series(out, z);
        }
    });

    auto* seifert =
        app.add_subcommand("seifert", "invariants of S^3(b; q_1/p_1, ..., q_n/p_n)");
    seifert->add_option("b", b_str, "integer framing of the trunk")->required();
    seifert->add_option("fibers", fiber_strs, "exceptional fibers as p/q tokens");
    add_common(seifert);
    seifert->callback([&] {
        lmo::SeifertData d{parse_int_token(b_str), {}};
        for (const auto& t : fiber_strs) d.fibers.push_back(parse_fiber_token(t));
        lmo::HbarSeries z = lmo_seifert(d, order);
        lmo::Rational lam = lmo::casson_walker(d);
        if (format == "json") {
            out << json{{"b", d.b.str()},
                        {"fibers", fibers_json(d)},
                        {"e0", lmo::to_string(lmo::e0(d))},
                        {"h1_order", lmo::to_string(lmo::h1_order(d))},
                        {"casson_walker", lmo::to_string(lam)},
                        {"series", lmo::to_json(z)}}
                       .dump(2)
                << "\n";
        } else {
            out << "S^3(" << d.b << "; " << fiber_list(d) << ")\n";
            out << "e0 = " << lmo::to_string(lmo::e0(d)) << "\n";
            out << "|H_1| = " << lmo::to_string(lmo::h1_order(d)) << "\n";
            out << "lambda_w = " << lmo::to_string(lam) << "\n";
            print_series(out, z);
        }
    });

    auto* casson = app.add_subcommand(
        "casson", "Casson-Walker invariant of S^3(b; q_1/p_1, ..., q_n/p_n)");
    casson->add_option("b", b_str, "integer framing of the trunk")->required();
    casson->add_option("fibers", fiber_strs, "exceptional fibers as p/q tokens");
    add_common(casson, false);
    casson->callback([&] {
        lmo::SeifertData d{parse_int_token(b_str), {}};
        for (const auto& t : fiber_strs) d.fibers.push_back(parse_fiber_token(t));
        lmo::Rational lam = lmo::casson_walker(d);
        if (format == "json")
            out << json{{"casson_walker", lmo::to_string(lam)}}.dump(2) << "\n";
        else
            out << "lambda_w = " << lmo::to_string(lam) << "\n";
    });

    auto* dedekind = app.add_subcommand("dedekind", "Dedekind symbol S(p/q)");
    dedekind->add_option("fraction", frac_str, "rational number p/q")->required();
    add_common(dedekind, false);
    dedekind->callback([&] {
        lmo::Rational f = lmo::parse_rational(frac_str);
        lmo::Rational s = lmo::dedekind_symbol(f);
        if (format == "json")
            out << json{{"p", lmo::num(f).str()},
                        {"q", lmo::den(f).str()},
                        {"S", lmo::to_string(s)}}
                       .dump(2)
                << "\n";
        else
            out << "S(" << lmo::to_string(f) << ") = " << lmo::to_string(s) << "\n";
    });

    int qmax = 10;
    std::string table_format = "text";
    auto* table =
        app.add_subcommand("dedekind-table", "q S(p/q) for 1 <= p < q <= qmax, gcd = 1");
    table->add_option("--qmax", qmax, "largest denominator")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    table->callback([&] {
        auto rows = lmo::dedekind_table(qmax);
        if (table_format == "json") {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back({{"p", r.p}, {"q", r.q}, {"qS", r.q_times_S.str()}});
            out << arr.dump(2) << "\n";
        } else if (table_format == "csv") {
            out << "p,q,qS\n";
            for (const auto& r : rows)
                out << r.p << "," << r.q << "," << r.q_times_S << "\n";
        } else {
            for (const auto& r : rows)
                out << "S(" << r.p << "/" << r.q << ") = " << r.q_times_S << "/" << r.q
                    << "\n";
        }
    });

    auto* cfrac = app.add_subcommand(
        "cfrac", "negative-reciprocal continued fraction data of p/q");
    cfrac->add_option("fraction", frac_str, "rational number p/q")->required();
    add_common(cfrac, false);
    cfrac->callback([&] {
        lmo::Rational f = lmo::parse_rational(frac_str);
        lmo::Int p = lmo::num(f), q = lmo::den(f);
        auto a = lmo::cfrac_expand(p, q);
        auto ev = lmo::cfrac_eval(a);
        auto corners = lmo::inverse_corners(a);
        lmo::Int t = lmo::tau(a);
        int sig = lmo::signature(a);
        lmo::Rational s = lmo::dedekind_via_surgery(p, q);
        if (format == "json") {
            json arr = json::array();
            for (const auto& ai : a) arr.push_back(ai.str());
            out << json{{"p", p.str()},
                        {"q", q.str()},
                        {"expansion", arr},
                        {"length", a.size()},
                        {"matrix", {{"p", ev.p.str()},
                                    {"u", ev.u.str()},
                                    {"q", ev.q.str()},
                                    {"v", ev.v.str()}}},
                        {"det", lmo::lambda_det(a).str()},
                        {"tau", t.str()},
                        {"signature", sig},
                        {"corners", {{"l11", lmo::to_string(corners.l11)},
                                     {"l1l", lmo::to_string(corners.l1l)},
                                     {"lll", lmo::to_string(corners.lll)}}},
                        {"S_via_surgery", lmo::to_string(s)}}
                       .dump(2)
                << "\n";
        } else {
            out << "fraction: " << lmo::to_string(f) << "\n";
            out << "expansion:";
            for (const auto& ai : a) out << " " << ai;
            out << "\n";
            out << "length: " << a.size() << "\n";
            out << "matrix (p u q v): " << ev.p << " " << ev.u << " " << ev.q << " "
                << ev.v << "\n";
            out << "det Lambda = " << lmo::lambda_det(a) << "\n";
            out << "tau = " << t << ", signature = " << sig << "\n";
            out << "corners: l11 = " << lmo::to_string(corners.l11)
                << ", l1l = " << lmo::to_string(corners.l1l)
                << ", lll = " << lmo::to_string(corners.lll) << "\n";
            out << "S via surgery = " << lmo::to_string(s) << "\n";
        }
    });

    std::string sign_str = "+";
    auto* ihs = app.add_subcommand(
        "ihs", "Seifert parameters of the integral homology sphere with the given "
               "pairwise coprime multiplicities");
    ihs->add_option("multiplicities", p_strs, "fiber multiplicities p_i >= 2");
    ihs->add_option("--sign", sign_str, "sign of e0")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    add_common(ihs, false);
    ihs->callback([&] {
        std::vector<lmo::Int> ps;
        for (const auto& t : p_strs) ps.push_back(parse_int_token(t));
        lmo::SeifertData d = lmo::ihs_parameters(ps, sign_str == "+" ? 1 : -1);
        if (format == "json") {
            out << json{{"b", d.b.str()},
                        {"fibers", fibers_json(d)},
                        {"e0", lmo::to_string(lmo::e0(d))}}
                       .dump(2)
                << "\n";
        } else {
            out << "b = " << d.b << "\n";
            out << "fibers: " << fiber_list(d) << "\n";
            out << "e0 = " << lmo::to_string(lmo::e0(d)) << "\n";
            out << "seifert args: " << d.b << (d.fibers.empty() ? "" : " ")
                << fiber_list(d) << "\n";
        }
    });

    auto* aarhus = app.add_subcommand(
        "aarhus-unknot", "pre-normalized invariant of the f-framed unknot, two ways");
    aarhus->add_option("framing", f_str, "nonzero integer framing")->required();
    add_common(aarhus);
    aarhus->callback([&] {
        lmo::AarhusUnknot a = lmo::aarhus0_unknot(parse_int_token(f_str), order);
        bool agree = a.closed_form == a.via_integral;
        if (format == "json") {
            out << json{{"framing", f_str},
                        {"closed_form", lmo::to_json(a.closed_form)},
                        {"via_integral", lmo::to_json(a.via_integral)},
                        {"agree", agree}}
                       .dump(2)
                << "\n";
        } else {
            out << "closed form:\n";
            print_series(out, a.closed_form);
            out << "via integral:\n";
            print_series(out, a.via_integral);
            out << "agree: " << (agree ? "yes" : "NO") << "\n";
        }
        if (!agree) rc = 1;
    });

    double hbar = 0.1, tol = 1e-6;
    int zorder = 12;
    auto* zrest = app.add_subcommand(
        "zrest-check",
        "compare the truncated z_rest series against adaptive quadrature");
    zrest->add_option("b", b_str, "integer framing of the trunk")->required();
    zrest->add_option("fibers", fiber_strs, "exceptional fibers as p/q tokens");
    zrest->add_option("--hbar", hbar, "evaluation point")->capture_default_str();
    zrest->add_option("--tol", tol, "agreement tolerance")->capture_default_str();
    zrest->add_option("--order", zorder, "hbar truncation order")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    zrest->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    zrest->callback([&] {
        lmo::SeifertData d{parse_int_token(b_str), {}};
        for (const auto& t : fiber_strs) d.fibers.push_back(parse_fiber_token(t));
        lmo::FloatResult series = lmo::eval_hbar_series(lmo::z_rest(d, zorder), hbar);
        lmo::FloatResult quad = lmo::z_rest_quadrature(d, hbar);
        double diff = std::fabs(series.value - quad.value);
        bool pass = diff <= tol;
        if (format == "json") {
            out << json{{"series_value", series.value},
                        {"series_est_error", series.est_error},
                        {"quadrature_value", quad.value},
                        {"quadrature_est_error", quad.est_error},
                        {"difference", diff},
                        {"tol", tol},
                        {"pass", pass}}
                       .dump(2)
                << "\n";
        } else {
            out << std::setprecision(16);
            out << "series value     = " << series.value
                << "  (truncation estimate " << series.est_error << ")\n";
            out << "quadrature value = " << quad.value << "  (error estimate "
                << quad.est_error << ")\n";
            out << "difference = " << diff << ", tol = " << tol << "\n";
            out << (pass ? "ok" : "MISMATCH") << "\n";
        }
        if (!pass) rc = 1;
    });

    bool dump = false;
    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_flag("--dump", dump, "also dump the wheels element as json");
    add_common(verify);
    verify->callback([&] {
        auto checks = lmo::run_identity_suite(order);
        int failures = 0;
        for (const auto& c : checks)
            if (!c.pass) ++failures;
        if (format == "json") {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            json result{{"checks", arr}, {"failures", failures}};
            if (dump) {
                lmo::ReducedElement om = lmo::build_omega(lmo::default_s_cap(order), order);
                result["omega"] = lmo::to_json(om);
                result["omega_inverse"] = lmo::to_json(lmo::elem_inv(om));
                result["pair_omega_omega"] = lmo::to_json(lmo::pair(om, om));
            }
            out << result.dump(2) << "\n";
        } else {
            for (const auto& c : checks)
                out << (c.pass ? "ok   " : "FAIL ") << c.name
                    << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            out << checks.size() - failures << "/" << checks.size() << " checks passed\n";
            if (dump) {
                lmo::ReducedElement om = lmo::build_omega(lmo::default_s_cap(order), order);
                out << json{{"omega", lmo::to_json(om)}}.dump(2) << "\n";
            }
        }
        if (failures) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace lmocli
