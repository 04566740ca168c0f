#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdgap/config_io.hpp"
#include "gdgap/examples.hpp"
#include "gdgap/fuzz.hpp"

namespace {

using namespace gdgap;

BaseConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

void emit(const Report& report, bool json, bool approx) {
    if (json)
        std::cout << report.render_json() << "\n";
    else
        std::cout << report.render_text(approx);
}

int cmd_construct(const std::string& path, bool json, bool approx) {
    BaseConfig cfg = load_config(path);
    Tetrahedron tet = build_tetrahedron(cfg);
    TangentPoints tp = tangent_points(cfg);
    Report rep;
    rep.add("w", tet.w);
    rep.add("X", tp.X);
    rep.add("Y", tp.Y);
    rep.add("Z", tp.Z);
    rep.add("insphere_center", tet.inc);
    rep.add("r", cfg.r);
    rep.add("r_crit^2", critical_inradius_sq(cfg));
    emit(rep, json, approx);
    return 0;
}

int cmd_gap(const std::string& path, bool json, bool approx) {
    BaseConfig cfg = load_config(path);
    GapCertificate cert = certificate(cfg);
    Metrics m = pipeline_metrics(cfg);
    Verdict v = gd_verdict(m);
    Report rep;
    rep.add("o", m.o);
    rep.add("R^2", m.R2);
    rep.add("d^2", m.d2);
    rep.add("gap", cert.lhs);
    rep.add("rhs", cert.rhs);
    rep.add("a0", cert.a0);
    rep.add("A", cert.A);
    rep.add("B", cert.B);
    rep.add("u1", cert.u1);
    rep.add("u2", cert.u2);
    rep.add("v1", cert.v1);
    rep.add("v2", cert.v2);
    rep.add("alpha", cert.alpha);
    rep.add("beta", cert.beta);
    rep.add("gamma", cert.gamma);
    rep.add("dis", cert.dis);
    rep.add("linear_side_sign", Scalar(v.linear_side_sign));
    rep.add_text("satisfied", v.satisfied ? "true" : "false");
    rep.add_text("equality", v.equality ? "true" : "false");
    emit(rep, json, approx);
    return v.satisfied ? 0 : 1;
}

int cmd_example(int n, bool json) {
    auto checks = run_example(n);
    bool all_ok = true;
    Report rep;
    for (const auto& c : checks) {
        all_ok = all_ok && c.ok;
        if (json) {
            rep.add_text(c.name, c.ok ? "ok" : "expected " + c.expected + ", got " + c.actual);
        } else if (c.ok) {
            std::cout << "ok   " << c.name << " = " << c.expected << "\n";
        } else {
            std::cout << "DIFF " << c.name << ": expected " << c.expected << ", got " << c.actual
                      << "\n";
        }
    }
    if (json) emit(rep, true, false);
    if (!json)
        std::cout << (all_ok ? "all values match" : "MISMATCH against the reference values")
                  << "\n";
    return all_ok ? 0 : 1;
}

int cmd_fuzz(const FuzzParams& params) {
    FuzzSummary s = run_fuzz(params);
    std::cout << s.text();
    return s.failures.empty() ? 0 : 1;
}

int cmd_planar(const std::string& p_text, const std::string& r_text, bool json, bool approx) {
    Rational p = Rational::parse(p_text);
    Report rep;
    rep.add("r_crit^2", Scalar(planar_critical_sq(p)));
    if (!r_text.empty()) {
        Rational r = Rational::parse(r_text);
        Rational h = planar_apex_height(p, r);
        if (!(h == planar_height_closed_form(p, r))) {
            std::cerr << "apex height disagrees with the closed form\n";
            return 1;
        }
        rep.add("apex_height", Scalar(h));
    }
    emit(rep, json, approx);
    return 0;
}

int cmd_pech(int trials, std::uint64_t seed, const std::string& sides, long long field_k,
             bool json, bool approx) {
    if (!sides.empty()) {
        std::istringstream in(sides);
        std::string tok;
        std::vector<Scalar> s;
        while (std::getline(in, tok, ',')) s.push_back(Scalar::parse(tok));
        if (s.size() != 3) throw input_error("pech: --sides needs three comma-separated scalars");
        PechReport repn = pech_euler(s[0], s[1], s[2], field_k);
        Report rep;
        rep.add("criterion_polynomial", repn.identity_value);
        rep.add_text("heronian", repn.heronian ? "true" : "false");
        if (repn.heronian) {
            rep.add("K", repn.K);
            rep.add("r", repn.r);
            rep.add("R", repn.R);
            rep.add("d^2", repn.d2);
            rep.add("euler_margin_sign", Scalar(repn.euler_margin_sign));
        }
        emit(rep, json, approx);
        return 0;
    }
    RandomStream rs(seed, 0x70656368ULL);
    for (int i = 0; i < trials; ++i) {
        Scalar a{rs.positive_rational(50, 10)}, b{rs.positive_rational(50, 10)},
            c{rs.positive_rational(50, 10)};
        auto [P, S] = pech_identity(a, b, c);
        if (!(P == S)) {
            std::cerr << "identity failed at (" << a << ", " << b << ", " << c << ")\n";
            return 1;
        }
    }
    std::cout << trials << "/" << trials << " identity ok\n";
    return 0;
}

int cmd_equilateral(const std::string& l2_text, const std::string& r_text, bool json,
                    bool approx) {
    EquilateralReport e = equilateral_gap(Scalar::parse(l2_text), Scalar::parse(r_text));
    Report rep;
    rep.add("w3", e.w3);
    rep.add("R", e.R);
    rep.add("d^2", e.d2);
    rep.add("G", e.squared_gap);  // exactly zero
    const char* regime = e.regime == EquilateralRegime::below_regular ? "r < r_reg"
                         : e.regime == EquilateralRegime::regular     ? "r = r_reg"
                                                                      : "r_reg < r < r_crit";
    rep.add_text("regime", regime);
    if (json) {
        emit(rep, true, false);
    } else {
        emit(rep, false, approx);
        std::cout << "G = " << e.squared_gap << ", regime: " << regime << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tetrahedron construction and inequality-gap verification"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, approx = false;
    app.add_flag("--json", json, "machine-readable output (exact literals as strings)");
    app.add_flag("--approx", approx, "append ~decimal previews (12 digits, diagnostic only)");

    std::string path;
    auto* construct = app.add_subcommand("construct", "build the tetrahedron from a config file");
    construct->add_option("config", path, "config file")->required();
    auto* gap = app.add_subcommand("gap", "full gap certificate and inequality verdict");
    gap->add_option("config", path, "config file")->required();

    int example_n = 0;
    auto* example = app.add_subcommand("example", "re-verify a built-in worked example");
    example->add_option("n", example_n, "example number (1, 2 or 3)")->required();

    FuzzParams fp;
    int trials = 1000;
    std::uint64_t seed = 0;
    auto* fuzz = app.add_subcommand("fuzz", "seeded random configs through the invariant suite");
    fuzz->add_option("--trials", fp.trials, "number of configs")->default_val(1000);
    fuzz->add_option("--seed", fp.seed, "random seed")->default_val(0);
    fuzz->add_option("--coordinate-bound", fp.coord_bound, "max |numerator| of coordinates")
        ->default_val(100);
    fuzz->add_option("--denominator-bound", fp.den_bound, "max denominator of coordinates")
        ->default_val(10);
    fuzz->add_option("--threads", fp.threads, "worker threads (0 = hardware)")->default_val(0);

    std::string p_text, r_text;
    auto* planar = app.add_subcommand("planar", "planar critical-inradius analogue");
    planar->add_option("--p", p_text, "division point in (0,1)")->required();
    planar->add_option("--r", r_text, "also report the apex height at this inradius");

    std::string sides;
    long long field_k = 0;
    auto* pech = app.add_subcommand("pech", "triangle criterion polynomial and Euler check");
    pech->add_option("--trials", trials, "random triples for the identity")->default_val(100);
    pech->add_option("--seed", seed, "random seed")->default_val(0);
    pech->add_option("--sides", sides, "exact report for sides 'a,b,c'");
    pech->add_option("--field", field_k, "ambient radicand for the area square root")
        ->default_val(0);

    std::string l2_text, er_text;
    auto* equilateral = app.add_subcommand("equilateral", "equilateral-base zero-gap report");
    equilateral->add_option("--l2", l2_text, "squared side length")->required();
    equilateral->add_option("--r", er_text, "inradius")->required();

    try {
        app.parse(argc, argv);
        if (*construct) return cmd_construct(path, json, approx);
        if (*gap) return cmd_gap(path, json, approx);
        if (*example) return cmd_example(example_n, json);
        if (*fuzz) return cmd_fuzz(fp);
        if (*planar) return cmd_planar(p_text, r_text, json, approx);
        if (*pech) return cmd_pech(trials, seed, sides, field_k, json, approx);
        if (*equilateral) return cmd_equilateral(l2_text, er_text, json, approx);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const gdgap::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gdgap::degeneracy_error& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const gdgap::check_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
