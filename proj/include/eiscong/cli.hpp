#ifndef EISCONG_CLI_HPP
#define EISCONG_CLI_HPP

#include <complex>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "json_io.hpp"
#include "oracle.hpp"

namespace eiscong {

inline void run_cusp_battery(std::ostream& out);
inline void run_oracle_battery(std::ostream& out);

// Front end shared by the binary and the CLI tests. Exit codes: 0 success,
// 1 domain error (JSON error object on stdout), 2 usage error.
inline int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact Eisenstein congruence toolkit"};
    app.require_subcommand(1);

    std::string char1 = "trivial", char2 = "trivial", charf;
    int k = 2;
    long long ell = 0, M = 0, bound = 100, P = 20;
    std::string battery = "default";

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--char1", char1, "first character (shorthand or JSON file)");
        cmd->add_option("--char2", char2, "second character (shorthand or JSON file)");
        cmd->add_option("--k", k, "weight")->required();
    };

    auto* bern = app.add_subcommand("bernoulli", "generalized Bernoulli number B_{k,chi}");
    bern->add_option("--k", k)->required();
    bern->add_option("--char", charf, "character (shorthand or JSON file)")->required();

    auto* gauss = app.add_subcommand("gauss", "Gauss sum of a primitive character");
    gauss->add_option("--char", charf)->required();

    auto* eis = app.add_subcommand("eis", "Eisenstein series operations");
    eis->require_subcommand(1);
    auto* eis_qexp_cmd = eis->add_subcommand("qexp", "q-expansion of E_k^{chi1,chi2}");
    add_pair(eis_qexp_cmd);
    eis_qexp_cmd->add_option("--prec", P, "number of coefficients beyond a_0");
    auto* eis_cusp = eis->add_subcommand("cusp-constant", "constant term at a cusp");
    add_pair(eis_cusp);
    long long gu = 1, gb = 0, gv = 0, gd = 1;
    eis_cusp->add_option("--u", gu);
    eis_cusp->add_option("--beta", gb);
    eis_cusp->add_option("--v", gv);
    eis_cusp->add_option("--delta", gd);
    eis_cusp->add_option("--M", M)->default_val(1);
    auto* eis_combo = eis->add_subcommand("combo", "level-raising combination F1/F2");
    add_pair(eis_combo);
    std::string variant = "F1";
    eis_combo->add_option("--M", M)->required();
    eis_combo->add_option("--variant", variant)->check(CLI::IsMember({"F1", "F2"}));
    eis_combo->add_option("--prec", P);

    auto* decide = app.add_subcommand("decide", "decision procedures");
    decide->require_subcommand(1);
    auto* d_sm = decide->add_subcommand("strong-modularity", "Theorem 1 criterion");
    add_pair(d_sm);
    d_sm->add_option("--ell", ell)->required();
    auto* d_lr = decide->add_subcommand("level-raise", "Theorem 2 criterion");
    add_pair(d_lr);
    d_lr->add_option("--ell", ell)->required();
    d_lr->add_option("--M", M)->required();

    auto* scan = app.add_subcommand("scan", "scan level-raising primes");
    auto* s_lr = scan->add_subcommand("level-raise", "all admissible M up to a bound");
    add_pair(s_lr);
    s_lr->add_option("--ell", ell)->required();
    s_lr->add_option("--bound", bound);

    auto* verify = app.add_subcommand("verify", "numeric cross-checks");
    verify->require_subcommand(1);
    auto* v_cusp = verify->add_subcommand("cusp-constants", "exact vs oracle cusp constants");
    v_cusp->add_option("--battery", battery);
    auto* v_orc = verify->add_subcommand("oracles", "L-value / Gauss-sum oracle battery");
    v_orc->add_option("--battery", battery);

    // argv-style parse (CLI11 wants reversed order without program name)
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << json{{"error", "usage"}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    }

    try {
        if (*bern) {
            DirichletCharacter chi = parse_character(charf);
            out << cyclotomic_to_json(bernoulli_char((unsigned)k, chi)).dump(2) << "\n";
        } else if (*gauss) {
            DirichletCharacter chi = parse_character(charf);
            out << cyclotomic_to_json(gauss_sum(chi)).dump(2) << "\n";
        } else if (*eis_qexp_cmd) {
            auto f = eis_qexp(parse_character(char1), parse_character(char2), k, (int)P);
            out << qexp_to_json(f).dump(2) << "\n";
        } else if (*eis_cusp) {
            CuspMatrix gamma{gu, gb, gv, gd};
            auto c = cusp_constant(parse_character(char1), parse_character(char2), k, gamma, M);
            out << cyclotomic_to_json(c).dump(2) << "\n";
        } else if (*eis_combo) {
            auto f = level_raise_combo(parse_character(char1), parse_character(char2), k, M,
                                       variant == "F1" ? ComboVariant::F1 : ComboVariant::F2,
                                       (int)P);
            out << qexp_to_json(f).dump(2) << "\n";
        } else if (*d_sm) {
            auto d = decide_strong_modularity(parse_character(char1), parse_character(char2), k,
                                              (fp::u64)ell);
            out << decision_to_json(d).dump(2) << "\n";
        } else if (*d_lr) {
            auto d = decide_level_raise(parse_character(char1), parse_character(char2), k,
                                        (fp::u64)ell, M);
            out << decision_to_json(d).dump(2) << "\n";
        } else if (*s_lr) {
            auto primes = scan_level_raise(parse_character(char1), parse_character(char2), k,
                                           (fp::u64)ell, bound);
            auto psi = (parse_character(char1).conj() * parse_character(char2)).primitivize().second;
            json jp = json::array();
            for (long long p : primes) jp.push_back(p);
            out << json{{"primes", jp},
                        {"place", place_to_json(place_above((fp::u64)ell, (unsigned)psi.order()))}}
                       .dump(2)
                << "\n";
        } else if (*v_cusp) {
            run_cusp_battery(out);
        } else if (*v_orc) {
            run_oracle_battery(out);
        }
        return 0;
    } catch (const domain_error& e) {
        out << json{{"error", e.code()}, {"detail", e.detail()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << json{{"error", "internal-error"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    }
}

// Character pool for the verification batteries: one primitive character
// per small conductor (plus a quartic and a sextic), all conductors <= 12.
inline std::vector<DirichletCharacter> battery_characters() {
    return {
        DirichletCharacter::trivial(1),
        parse_character("quad:3"),
        parse_character("quad:4"),
        parse_character("gen:5:1:4"),
        parse_character("quad:5"),
        parse_character("gen:7:1:6"),
        parse_character("quad:8"),
        parse_character("gen:9:1:6"),
        parse_character("quad:11"),
        parse_character("quad:12"),
    };
}

// Random element of SL_2(Z); the lower row is a coprime pair with |v| <= 40.
inline CuspMatrix random_unimodular(std::mt19937& rng) {
    long long v = (long long)(rng() % 41);
    long long u = v == 0 ? 1 : 1 + (long long)(rng() % 12);
    while (gcd_ll(u, v) != 1) ++u;
    long long x, y;
    ext_gcd(u, v, x, y); // u x + v y = 1
    return CuspMatrix{u, -y, v, x};
}

// Randomized exact-vs-oracle cusp-constant battery: 20 random gamma, and
// for each gamma five random draws of (chi1, chi2, k, M) with conductors
// <= 12, k in [2,6] of matching parity, M in {1,2,3,5}.
inline void run_cusp_battery(std::ostream& out) {
    std::mt19937 rng(12345);
    auto chars = battery_characters();
    const long long Ms[] = {1, 2, 3, 5};
    double max_gap = 0.0;
    int checked = 0, failed = 0;
    for (int g = 0; g < 20; ++g) {
        CuspMatrix gamma = random_unimodular(rng);
        for (int draw = 0; draw < 5; ++draw) {
            auto& c1 = chars[rng() % chars.size()];
            auto& c2 = chars[rng() % chars.size()];
            int k = 2 + (int)(rng() % 5);
            if (c1.parity() * c2.parity() != (k % 2 == 0 ? 1 : -1)) ++k;
            if (c1.modulus() * c2.modulus() == 1 && k == 2) k = 4;
            long long M = Ms[rng() % 4];
            OracleConfig cfg;
            // k = 2 converges like 1/cutoff; higher weights much faster
            cfg.cutoff = (k == 2) ? 3000000 : 20000;
            auto exact = cusp_constant(c1, c2, k, gamma, M).embed();
            auto approx = oracle_cusp_constant(c1, c2, k, gamma, M, cfg);
            double gap = std::abs(exact - approx);
            max_gap = std::max(max_gap, gap);
            ++checked;
            if (gap >= 1e-6) ++failed;
        }
    }
    out << json{{"battery", "cusp-constants"},
                {"checked", checked},
                {"failed", failed},
                {"max_gap", max_gap},
                {"tolerance", 1e-6},
                {"pass", failed == 0}}
               .dump(2)
        << "\n";
}

inline void run_oracle_battery(std::ostream& out) {
    OracleConfig cfg;
    cfg.cutoff = 100000;
    double max_gap_L = 0.0, max_gap_W = 0.0, max_gap_2d = 0.0;
    int checked = 0, failed = 0;
    auto chars = battery_characters();
    for (auto& chi : chars) {
        // Gauss sums against the exact embedding
        double gw = std::abs(oracle_gauss_sum(chi) - gauss_sum(chi).embed());
        max_gap_W = std::max(max_gap_W, gw);
        ++checked;
        if (gw >= 1e-9) ++failed;
        // L(k, chi) against -W(chi) C_k / f^k * B_{k,chi-bar} / 2k
        for (int k = 3; k <= 6; ++k) {
            if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
            long long f = chi.modulus();
            auto closed = -gauss_sum(chi).embed() * oracle_detail::c_k(k) /
                          std::pow((double)f, (double)k) *
                          bernoulli_char((unsigned)k, chi.conj()).embed() / (2.0 * k);
            double gap = std::abs(oracle_L_value(chi, k, cfg) - closed);
            max_gap_L = std::max(max_gap_L, gap);
            ++checked;
            if (gap >= 1e-6) ++failed;
        }
    }
    // 1-D restricted sum vs full 2-D lattice sum at k = 4
    {
        OracleConfig c1d, c2d;
        c1d.cutoff = 20000;
        c2d.cutoff = 400;
        c2d.im_z = 20.0; // widths reach 9 here; keeps the dropped q-term below 1e-5
        std::vector<std::pair<DirichletCharacter, DirichletCharacter>> pairs{
            {DirichletCharacter::trivial(1), DirichletCharacter::trivial(1)},
            {parse_character("quad:3"), parse_character("quad:3")},
            {parse_character("quad:4"), parse_character("quad:4")},
        };
        for (auto& [a, b] : pairs)
            for (long long v : {0LL, 1LL, 2LL}) {
                long long u = 1, x, y;
                while (gcd_ll(u, v) != 1) ++u;
                ext_gcd(u, v, x, y);
                CuspMatrix gamma{u, -y, v, x};
                double gap = std::abs(oracle_cusp_constant(a, b, 4, gamma, 1, c1d) -
                                      oracle_lattice_2d(a, b, 4, gamma, 1, c2d));
                max_gap_2d = std::max(max_gap_2d, gap);
                ++checked;
                if (gap >= 1e-4) ++failed;
            }
    }
    out << json{{"battery", "oracles"},
                {"checked", checked},
                {"failed", failed},
                {"max_gap_L", max_gap_L},
                {"max_gap_gauss", max_gap_W},
                {"max_gap_2d", max_gap_2d},
                {"pass", failed == 0}}
               .dump(2)
        << "\n";
}

} // namespace eiscong

#endif
