// Command-line front-end: verify one identity point, check the central
// specialization over an index range, scan grids, manage coefficient
// caches, and run the cross-check oracles.
//
// Exit codes: 0 all requested checks pass; 1 a verification failed;
// 2 usage error; 3 computation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>

#include "rtf/report.hpp"
#include "rtf/verify.hpp"

namespace {

// "a+bi" with optional signs and exponents; also accepts "a" and "bi"
rtf::CplxD parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw CLI::ValidationError("complex", "empty complex literal");
    bool has_i = s.back() == 'i' || s.back() == 'j';
    if (has_i) s.pop_back();
    // split before the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto to_d = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size()) throw CLI::ValidationError("complex", "bad number: " + t);
        return v;
    };
    if (!has_i) {
        if (split != std::string::npos)
            throw CLI::ValidationError("complex", "missing trailing i: " + raw);
        return rtf::CplxD(to_d(s), 0.0);
    }
    if (split == std::string::npos) return rtf::CplxD(0.0, to_d(s));
    return rtf::CplxD(to_d(s.substr(0, split)), to_d(s.substr(split)));
}

std::pair<long, long> parse_range(const std::string& s) {
    long lo, hi;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stol(s);
    } else {
        lo = std::stol(s.substr(0, dots));
        hi = std::stol(s.substr(dots + 2));
    }
    if (lo < 1 || hi < lo)
        throw CLI::ValidationError("index-range", "need 1 <= A <= B in A..B");
    return {lo, hi};
}

void emit(const std::vector<rtf::VerificationReport>& reps, const std::string& format,
          const std::string& output) {
    std::string text = (format == "csv") ? rtf::to_csv(reps) : rtf::to_json(reps) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(output);
        if (!os) throw rtf::ResourceError("cannot open output file " + output);
        os << text;
    }
}

int oracle_suite(const std::string& which);

} // namespace

int main(int argc, char** argv) {
    // join "--s1 -0.13+0.05i" into "--s1=-0.13+0.05i" so negative complex
    // literals survive option parsing
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if ((a == "--s1" || a == "--s2") && i + 1 < argc) {
            args.push_back(a + "=" + argv[++i]);
        } else {
            args.push_back(a);
        }
    }

    CLI::App app{"two-pipeline verification of the weighted second-moment identity"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string precision_flag;
    double tol = 1e-8, series_tol = 1e-12;
    std::string cache_dir;
    long table = 2000;
    std::string format = "json", output;
    app.add_option("--precision", precision_flag,
                   "working precision: auto | double | dd (env RTF_PRECISION; auto picks per weight)");
    app.add_option("--tol", tol, "identity tolerance (default 1e-8)");
    app.add_option("--series-tol", series_tol, "series truncation tolerance");
    app.add_option("--cache", cache_dir, "coefficient cache directory");
    app.add_option("--table", table, "coefficient table length (default 2000)");
    app.add_option("--format", format, "report format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", output, "write the report to a file");

    auto* v = app.add_subcommand("verify", "verify the identity at one point");
    int v_weight = 12;
    long v_index = 1;
    std::string v_s1 = "0", v_s2 = "0";
    bool v_timings = false;
    v->add_option("--weight", v_weight, "even weight in {12,16,18,20,22,26}")->required();
    v->add_option("--index", v_index, "Hecke index n >= 1")->required();
    v->add_option("--s1", v_s1, "first shift, a+bi");
    v->add_option("--s2", v_s2, "second shift, a+bi");
    v->add_flag("--timings", v_timings, "keep wall-clock timings in the report");

    auto* c = app.add_subcommand("corollary", "central-value check over an index range");
    int c_weight = 12;
    std::string c_range = "1..5";
    c->add_option("--weight", c_weight)->required();
    c->add_option("--index-range", c_range, "A..B");

    auto* sc = app.add_subcommand("scan", "grid scan: weights x indices at fixed shifts");
    std::string sc_weights = "12,16,18,20,22,26", sc_range = "1..5";
    std::string sc_s1 = "0.07+0.11i", sc_s2 = "-0.13+0.05i";
    bool sc_serial = false;
    sc->add_option("--weights", sc_weights, "comma-separated weights");
    sc->add_option("--indices", sc_range, "A..B");
    sc->add_option("--s1", sc_s1);
    sc->add_option("--s2", sc_s2);
    sc->add_flag("--serial", sc_serial, "disable concurrent evaluation");

    auto* q = app.add_subcommand("qexp", "build or inspect a coefficient cache file");
    int q_weight = 12;
    long q_count = 2000, q_show = 0;
    std::string q_out, q_check;
    q->add_option("--weight", q_weight)->required();
    q->add_option("--count", q_count);
    q->add_option("--out", q_out, "write the expansion to this file");
    q->add_option("--check", q_check, "read a file back and verify bit-exact round-trip");
    q->add_option("--show", q_show, "print the first M coefficients");

    auto* o = app.add_subcommand("oracle", "run the cross-check oracles");
    std::string o_suite = "all";
    o->add_option("--suite", o_suite, "special | orbital | all")
        ->check(CLI::IsMember({"special", "orbital", "all"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    rtf::ToleranceConfig cfg;
    cfg.identity_tol = tol;
    cfg.series_tol = series_tol;
    cfg.cache_dir = cache_dir;
    cfg.table_length = table;
    const char* env = std::getenv("RTF_PRECISION");
    std::string prec = precision_flag.empty() ? (env ? env : "auto") : precision_flag;
    if (prec == "dd" || prec == "double-double")
        cfg.precision = rtf::Precision::DoubleDouble;
    else if (prec == "double")
        cfg.precision = rtf::Precision::Double;
    else if (prec == "auto")
        cfg.precision = rtf::Precision::Auto;
    else {
        std::cerr << "unknown precision '" << prec << "'\n";
        return 2;
    }

    try {
        if (*v) {
            if (!rtf::weight_supported(v_weight)) {
                std::cerr << "unsupported weight " << v_weight << "\n";
                return 2;
            }
            rtf::SpectralParams p;
            p.weight = v_weight;
            p.index = v_index;
            p.s1 = parse_complex(v_s1);
            p.s2 = parse_complex(v_s2);
            auto rep = rtf::verify_identity(p, cfg);
            if (!v_timings) rep.spectral_ms = rep.geometric_ms = 0.0;
            emit({rep}, format, output);
            return rep.pass ? 0 : 1;
        }
        if (*c) {
            if (!rtf::weight_supported(c_weight)) {
                std::cerr << "unsupported weight " << c_weight << "\n";
                return 2;
            }
            auto [lo, hi] = parse_range(c_range);
            std::vector<rtf::VerificationReport> reps;
            bool all_pass = true;
            for (long n = lo; n <= hi; ++n) {
                reps.push_back(rtf::verify_corollary(c_weight, n, cfg));
                reps.back().spectral_ms = reps.back().geometric_ms = 0.0;
                all_pass = all_pass && reps.back().pass;
            }
            emit(reps, format, output);
            return all_pass ? 0 : 1;
        }
        if (*sc) {
            std::vector<int> weights;
            std::stringstream ws(sc_weights);
            std::string tokw;
            while (std::getline(ws, tokw, ',')) weights.push_back(std::stoi(tokw));
            for (int w : weights)
                if (!rtf::weight_supported(w)) {
                    std::cerr << "unsupported weight " << w << "\n";
                    return 2;
                }
            auto [lo, hi] = parse_range(sc_range);
            rtf::CplxD s1 = parse_complex(sc_s1), s2 = parse_complex(sc_s2);
            std::vector<rtf::SpectralParams> grid;
            for (int w : weights)
                for (long n = lo; n <= hi; ++n) grid.push_back({w, n, s1, s2});
            auto reps = rtf::scan(grid, cfg, !sc_serial);
            emit(reps, format, output);
            for (const auto& r : reps)
                if (!r.error.empty()) return 3;
            for (const auto& r : reps)
                if (!r.pass) return 1;
            return 0;
        }
        if (*q) {
            if (!rtf::weight_supported(q_weight)) {
                std::cerr << "unsupported weight " << q_weight << "\n";
                return 2;
            }
            if (!q_check.empty()) {
                auto back = rtf::load_qexp(q_check);
                std::ostringstream os;
                rtf::write_qexp(os, back);
                std::ifstream is(q_check);
                std::stringstream orig;
                orig << is.rdbuf();
                if (os.str() != orig.str()) {
                    std::cerr << "round-trip mismatch for " << q_check << "\n";
                    return 1;
                }
                std::cout << "round-trip ok: weight " << back.weight << ", "
                          << back.count << " coefficients\n";
                return 0;
            }
            auto f = rtf::eigenform(q_weight, q_count);
            if (!q_out.empty()) {
                rtf::save_qexp(q_out, f.qexp);
                std::cout << "wrote " << q_out << "\n";
            }
            for (long n = 1; n <= std::min(q_show, q_count); ++n)
                std::cout << n << " " << f.qexp.coeff(n).to_string() << "\n";
            return 0;
        }
        if (*o) return oracle_suite(o_suite);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rtf::Error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

namespace {

int oracle_suite(const std::string& which) {
    using rtf::CplxD;
    bool ok = true;
    auto line = [&](const char* name, double resid, double tol) {
        bool pass = resid < tol;
        ok = ok && pass;
        std::printf("%-44s %10.3e  (tol %7.1e)  %s\n", name, resid, tol,
                    pass ? "ok" : "FAIL");
    };

    if (which == "special" || which == "all") {
        // Gamma reflection at a fixed complex point
        CplxD z(0.3, 0.4);
        CplxD refl = rtf::gamma(z) * rtf::gamma(CplxD(1.0, 0.0) - z) *
                     rtf::sin(CplxD(3.14159265358979323846, 0.0) * z) /
                     CplxD(3.14159265358979323846, 0.0);
        line("gamma reflection residual", rtf::to_double(rtf::abs(refl - CplxD(1.0, 0.0))),
             1e-12);
        // zeta functional equation on the critical line
        CplxD s(0.5, 3.0);
        CplxD chi = rtf::rpow(2.0, s) *
                    rtf::rpow(3.14159265358979323846, s - CplxD(1.0, 0.0)) *
                    rtf::sin(CplxD(1.5707963267948966, 0.0) * s) *
                    rtf::gamma(CplxD(1.0, 0.0) - s);
        line("zeta functional-equation residual",
             rtf::to_double(rtf::abs(rtf::zeta(s) - chi * rtf::zeta(CplxD(1.0, 0.0) - s))),
             1e-11);
        // 2F1 vs the Euler integral
        CplxD F = rtf::hyp2f1(CplxD(6.0, 0.0), CplxD(6.0, 0.0), CplxD(12.0, 0.0), -3.7).value;
        CplxD E = rtf::hyp2f1_euler_oracle(CplxD(6.0, 0.0), CplxD(6.0, 0.0),
                                           CplxD(12.0, 0.0), -3.7);
        line("2F1 vs Euler-integral oracle", rtf::to_double(rtf::abs(F - E)), 1e-9);
        line("lattice-sum identity residual",
             rtf::lattice_sum_check(CplxD(0.3, 0.8), 12), 1e-10);
    }
    if (which == "orbital" || which == "all") {
        CplxD s1(0.3, 0.0), s2(0.1, 0.0);
        rtf::MatrixOrbit g{2, 1, 1, 1};
        CplxD quad = rtf::orbital_quadrature_oracle(g, 12, s1, s2, 1e-10);
        CplxD closed = rtf::orbital_closed_form_psi(12, 1, 1, g, s1, s2);
        line("first-cell orbit: quadrature vs closed form",
             rtf::to_double(rtf::abs(quad - closed)), 1e-6);
        rtf::MatrixOrbit o3{1, 3, -1, -2}, l3{1, 3, 1, 2};
        quad = rtf::orbital_quadrature_oracle(o3, 12, s1, s2, 1e-10);
        closed = rtf::orbital_closed_form_Phi(12, 1, 3, l3, s1, s2);
        line("third-cell orbit: quadrature vs closed form",
             rtf::to_double(rtf::abs(quad - closed)), 1e-6);
        rtf::MatrixOrbit u1{1, 1, -1, 1}, u2{1, -1, 1, 1}, lu{1, 1, 1, 1};
        CplxD su1(0.07, 0.11), su2(-0.13, 0.05);
        quad = rtf::orbital_quadrature_oracle(u1, 12, su1, su2, 1e-10) +
               rtf::orbital_quadrature_oracle(u2, 12, su1, su2, 1e-10);
        closed = rtf::orbital_closed_form_phi_pair(12, 2, 1, lu, su1, su2);
        line("middle-cell orbit pair: quadrature vs closed form",
             rtf::to_double(rtf::abs(quad - closed)), 1e-6);
    }
    return ok ? 0 : 1;
}

} // namespace
