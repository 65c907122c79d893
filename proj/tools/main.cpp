#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpfd/errors.hpp"
#include "qpfd/pfd.hpp"
#include "qpfd/polyparse.hpp"
#include "qpfd/report.hpp"

namespace {

using namespace qpfd;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

long long rnd_int(std::mt19937_64& g, long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Rejects q values on which the pole grid q^0..q^{-n} degenerates: 0, +-1,
// or any root of unity reachable at the configured sizes.
bool valid_numeric_q(const Rational& q, int n_max) {
    if (q.is_zero()) return false;
    Rational one(1);
    if (q == one || q == -one) return false;
    Rational p = one;
    for (int k = 1; k <= 2 * n_max + 2; ++k) {
        p = p * q;
        if (p == one) return false;
    }
    return true;
}

std::string coeff_text(const QRatFunc& c) {
    std::string t = c.canonical_text();
    if (t.find(' ') != std::string::npos || t.find('/') != std::string::npos)
        t = "(" + t + ")";
    return t;
}

std::string pole_factor_text(const Rational& a, int e) {
    std::string base;
    if (a.is_zero())
        base = "x";
    else if (a.sign() < 0)
        base = "(x + " + (-a).canonical_text() + ")";
    else
        base = "(x - " + a.canonical_text() + ")";
    if (e >= 2) base += "^" + std::to_string(e);
    return base;
}

int cmd_verify(const RunConfig& cfg, const std::string& output) {
    if (cfg.mode == CheckMode::NumericQ && !valid_numeric_q(cfg.q_value, cfg.n_max)) {
        std::cerr << "error: numeric q must avoid 0, +-1 and roots of unity up to order "
                  << (2 * cfg.n_max + 2) << "\n";
        return 2;
    }
    try {
        RunSummary summary;
        auto reports = run_catalog(cfg, &summary);
        if (output == "json")
            std::cout << report_json(cfg, reports, summary).dump(2) << "\n";
        else
            std::cout << render_report_text(cfg, reports, summary);
        return summary.fail > 0 ? 1 : 0;
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_list(const std::string& output) {
    if (output == "json")
        std::cout << catalog_json().dump(2) << "\n";
    else
        std::cout << render_catalog_text();
    return 0;
}

int cmd_decompose(const std::string& numerator, const std::string& poles_text, int m) {
    try {
        Poly<QRatFunc> Q = parse_poly(numerator);
        std::vector<Rational> pole_values;
        std::size_t pos = 0;
        while (pos <= poles_text.size()) {
            std::size_t comma = poles_text.find(',', pos);
            std::string piece = poles_text.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            std::size_t b = piece.find_first_not_of(" \t");
            std::size_t e = piece.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("empty pole entry");
            pole_values.push_back(Rational::parse(piece.substr(b, e - b + 1)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        std::vector<QRatFunc> poles;
        poles.reserve(pole_values.size());
        for (const auto& r : pole_values) poles.emplace_back(QRatFunc{r});
        PoleSpec<QRatFunc> spec(std::move(poles), m);
        auto dec = decompose_closed_form(Q, spec);
        auto oracle = decompose_linear_solve(Q, spec);
        std::string line;
        for (const auto& t : dec.terms) {
            std::string c = coeff_text(t.coeff);
            if (line.empty()) {
                line = c;
            } else if (c.size() > 1 && c[0] == '-') {
                line += " - " + c.substr(1);
            } else {
                line += " + " + c;
            }
            line += "/" + pole_factor_text(pole_values[static_cast<std::size_t>(t.pole)], t.power);
        }
        if (line.empty()) line = "0";
        std::cout << line << "\n";
        bool agree = dec == oracle;
        bool exact = recombine(dec, spec).num == Q;
        std::cout << "oracle agreement: " << (agree ? "yes" : "NO") << "\n";
        std::cout << "recombination: " << (exact ? "exact" : "MISMATCH") << "\n";
        return (agree && exact) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_bench(int s_max, int m_max, int trials, std::uint64_t seed) {
    std::mt19937_64 g(splitmix64(seed));
    std::cout << "  s  m  closed_us  oracle_us  trials\n";
    for (int s = 1; s <= s_max; ++s) {
        for (int m = 1; m <= m_max; ++m) {
            std::vector<long long> closed_us, oracle_us;
            for (int t = 0; t < trials; ++t) {
                std::vector<Rational> poles;
                while (static_cast<int>(poles.size()) < s) {
                    Rational cand(rnd_int(g, -9, 9), rnd_int(g, 1, 3));
                    bool dup = false;
                    for (const auto& p : poles) dup = dup || p == cand;
                    if (!dup) poles.push_back(cand);
                }
                PoleSpec<Rational> spec(std::move(poles), m);
                int d = static_cast<int>(rnd_int(g, 0, s * m - 1));
                std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
                for (auto& c : coeffs) c = Rational(rnd_int(g, -9, 9));
                Poly<Rational> Q(std::move(coeffs));
                auto t0 = std::chrono::steady_clock::now();
                auto closed = decompose_closed_form(Q, spec);
                auto t1 = std::chrono::steady_clock::now();
                auto oracle = decompose_linear_solve(Q, spec);
                auto t2 = std::chrono::steady_clock::now();
                if (!(closed == oracle)) {
                    std::cerr << "engine mismatch at s=" << s << " m=" << m << " trial=" << t
                              << "\n";
                    return 1;
                }
                closed_us.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
                oracle_us.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count());
            }
            if (trials == 0) continue;
            auto median = [](std::vector<long long> v) {
                std::sort(v.begin(), v.end());
                return v[v.size() / 2];
            };
            std::cout << "  " << s << "  " << m << "  " << median(closed_us) << "  "
                      << median(oracle_us) << "  " << trials << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of q-binomial / q-harmonic partial-fraction identities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list the identity catalog");
    std::string list_output = "text";
    list->add_option("-o,--output", list_output, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "certify identities over a parameter grid");
    RunConfig cfg;
    std::string mode_text = "symbolic-q";
    std::string q_text = "2";
    std::string verify_output = "text";
    long long l_value = 0;
    verify->add_option("-i,--identity", cfg.identity, "identity name, '*' glob, or \"all\"");
    verify->add_option("--n-max", cfg.n_max, "largest n in the sweep")
        ->check(CLI::Range(0, 64));
    verify->add_option("--m-max", cfg.m_max, "largest multiplicity m in the sweep")
        ->check(CLI::Range(1, 8));
    auto* l_opt = verify->add_option(
        "--l", l_value, "fix the inner sweep parameter (degree l; order m for gen_harmonic)");
    verify->add_option("--trials", cfg.trials, "random numerators per instance (0 = default)")
        ->check(CLI::Range(0, 10000));
    verify->add_option("--mode", mode_text, "coefficient field for q")
        ->check(CLI::IsMember({"symbolic-q", "numeric-q"}));
    verify->add_option("--q", q_text, "rational q value for numeric-q mode, e.g. 3/2");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("-o,--output", verify_output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    verify->add_option("--y-mode", cfg.y_mode, "sample family for the free parameter y")
        ->check(CLI::IsMember({"rational", "q-power"}));
    verify->add_flag("--mutate", cfg.mutate, "perturb one side of every comparison")
        ->group("");

    auto* decompose = app.add_subcommand("decompose", "partial-fraction decompose Q/P");
    std::string numerator;
    std::string poles_text;
    int multiplicity = 1;
    decompose->add_option("-Q,--numerator", numerator, "numerator polynomial, e.g. \"q*x^2 - 1\"")
        ->required();
    decompose->add_option("--poles", poles_text, "comma-separated rational poles, e.g. \"1,2\"")
        ->required();
    decompose->add_option("-m,--multiplicity", multiplicity, "shared pole multiplicity")
        ->check(CLI::Range(1, 16));

    auto* bench = app.add_subcommand("bench", "time closed form vs elimination oracle");
    int bench_s_max = 4;
    int bench_m_max = 3;
    int bench_trials = 5;
    std::uint64_t bench_seed = 1;
    bench->add_option("--s-max", bench_s_max, "largest pole count")->check(CLI::Range(1, 8));
    bench->add_option("--m-max", bench_m_max, "largest multiplicity")->check(CLI::Range(1, 6));
    bench->add_option("--trials", bench_trials, "instances per grid cell")
        ->check(CLI::Range(0, 1000));
    bench->add_option("--seed", bench_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(list)) return cmd_list(list_output);
    if (app.got_subcommand(verify)) {
        cfg.mode = (mode_text == "numeric-q") ? CheckMode::NumericQ : CheckMode::SymbolicQ;
        if (l_opt->count() > 0) cfg.l = l_value;
        try {
            cfg.q_value = Rational::parse(q_text);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return cmd_verify(cfg, verify_output);
    }
    if (app.got_subcommand(decompose)) return cmd_decompose(numerator, poles_text, multiplicity);
    return cmd_bench(bench_s_max, bench_m_max, bench_trials, bench_seed);
}
