// Command-line surface. Every invocation is deterministic given its flags
// and seed; exit codes: 0 success, 1 identity failure, 2 usage error,
// 3 resource guard.

#include "pdwbc/asymptotics.hpp"
#include "pdwbc/lattice.hpp"
#include "pdwbc/mc.hpp"
#include "pdwbc/onepoint.hpp"
#include "pdwbc/partition.hpp"
#include "pdwbc/qism.hpp"
#include "pdwbc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace pdwbc;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list: '" + text + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list: '" + text + "'");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (hi < lo) throw std::invalid_argument("range upper bound below lower bound: " + text);
    return {lo, hi};
}

std::string scalar_json(const Rational& value, int digits) {
    json j;
    j["value"] = value.str();
    j["decimal"] = value.decimal(digits);
    return j.dump();
}

void emit_scalar(const Rational& value, const std::string& format, int digits) {
    if (format == "json") {
        std::cout << scalar_json(value, digits) << "\n";
    } else if (format == "csv") {
        std::cout << "# schema=1\nvalue,decimal\n"
                  << value.str() << "," << value.decimal(digits) << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
}

void emit_poly(const Poly& p, const std::string& format, int digits) {
    json coeffs = json::array();
    for (long k = 0; k <= std::max(p.degree(), 0L); ++k) {
        coeffs.push_back(p.coeff(static_cast<unsigned>(k)).str());
    }
    if (format == "json") {
        json j;
        j["coeffs"] = coeffs;
        j["degree"] = p.degree();
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "# schema=1\nk,coeff,decimal\n";
        for (long k = 0; k <= std::max(p.degree(), 0L); ++k) {
            const Rational c = p.coeff(static_cast<unsigned>(k));
            std::cout << k << "," << c.str() << "," << c.decimal(digits) << "\n";
        }
    } else {
        std::cout << coeffs.dump() << "\n";
    }
}

struct GOptions {
    int m = 0;
    int s = 0;
    int n = 0;
    std::string t;
    std::string t_list;
    std::string repr = "series";
    std::string format = "text";
    int digits = 12;
};

int run_g(const GOptions& opt) {
    if (opt.repr == "series" || opt.repr == "residue" || opt.repr == "jacobi") {
        if (opt.t.empty()) {
            if (opt.repr != "series") {
                throw std::invalid_argument("--t is required for --repr " + opt.repr);
            }
            emit_poly(g_series(opt.m, opt.s), opt.format, opt.digits);
            return kExitOk;
        }
        const Rational t = Rational::parse(opt.t);
        Rational value;
        if (opt.repr == "series") value = g_series_at(opt.m, opt.s, t);
        else if (opt.repr == "residue") value = g_residue_homogeneous(opt.m, opt.s, t);
        else value = g_jacobi(opt.m, opt.s, t);
        emit_scalar(value, opt.format, opt.digits);
        return kExitOk;
    }
    if (opt.repr == "finite-n") {
        if (opt.t_list.empty()) {
            throw std::invalid_argument("--repr finite-n needs --t-list with s distinct values");
        }
        const auto rows = parse_rational_list(opt.t_list);
        const int n = opt.n > 0 ? opt.n : static_cast<int>(rows.size());
        emit_scalar(g_finite_n(rows, n, opt.m), opt.format, opt.digits);
        return kExitOk;
    }
    if (opt.repr == "semiinf") {
        if (opt.t_list.empty()) {
            throw std::invalid_argument("--repr semiinf needs --t-list with s distinct values");
        }
        emit_scalar(g_semiinf_inhomogeneous(parse_rational_list(opt.t_list), opt.m), opt.format,
                    opt.digits);
        return kExitOk;
    }
    throw std::invalid_argument("unknown representation: " + opt.repr);
}

struct ZOptions {
    int s = 0;
    int n = 0;
    std::string t;
    std::string t_list;
    std::string lambda_list;
    std::string nu_list;
    std::string formula = "hankel";
    std::string format = "text";
    int digits = 12;
};

int run_z(const ZOptions& opt) {
    Rational value;
    if (opt.formula == "fw" || opt.formula == "kostov") {
        if (opt.lambda_list.empty() || opt.nu_list.empty()) {
            throw degenerate_input_error(
                "--formula " + opt.formula +
                " needs distinct --lambda-list/--nu-list (use hankel for the homogeneous model)");
        }
        const auto lambdas = parse_rational_list(opt.lambda_list);
        const auto nus = parse_rational_list(opt.nu_list);
        value = opt.formula == "fw" ? z_foda_wheeler(lambdas, nus) : z_kostov(lambdas, nus);
    } else if (opt.formula == "parthom") {
        if (opt.t_list.empty() || opt.n <= 0) {
            throw std::invalid_argument("--formula parthom needs --t-list and --n");
        }
        value = z_partial_homogeneous(parse_rational_list(opt.t_list), opt.n);
    } else if (opt.formula == "hankel" || opt.formula == "bruteforce" ||
               opt.formula == "bracket") {
        LatticeSpec spec = [&] {
            if (!opt.t.empty()) {
                if (opt.s <= 0 || opt.n <= 0) throw std::invalid_argument("need --s and --n");
                return LatticeSpec::homogeneous(opt.s, opt.n, Rational::parse(opt.t));
            }
            if (!opt.lambda_list.empty() && !opt.nu_list.empty()) {
                return LatticeSpec::inhomogeneous(parse_rational_list(opt.lambda_list),
                                                  parse_rational_list(opt.nu_list));
            }
            throw std::invalid_argument("need --t (+ --s/--n) or --lambda-list/--nu-list");
        }();
        if (opt.formula == "hankel") {
            if (opt.t.empty()) {
                throw std::invalid_argument("--formula hankel applies to the homogeneous model");
            }
            value = z_homogeneous(Rational::parse(opt.t), spec.rows(), spec.cols());
        } else if (opt.formula == "bruteforce") {
            value = z_bruteforce(spec);
        } else {
            value = z_bracket(spec);
        }
    } else {
        throw std::invalid_argument("unknown formula: " + opt.formula);
    }
    emit_scalar(value, opt.format, opt.digits);
    return kExitOk;
}

struct ExitOptions {
    std::string pattern;
    std::string t;
    std::string t_list;
    std::string formula = "auto";
    bool raw = false;
    std::string format = "text";
    int digits = 12;
};

int run_exit(const ExitOptions& opt) {
    const ExitPattern pattern(parse_int_list(opt.pattern));
    std::string formula = opt.formula;
    if (formula == "auto") formula = opt.t_list.empty() ? "residue" : "coordinate";

    Rational value;
    if (formula == "coordinate") {
        if (opt.t_list.empty()) throw std::invalid_argument("coordinate form needs --t-list");
        value = z_exit_coordinate(pattern, parse_rational_list(opt.t_list));
    } else if (formula == "residue") {
        if (opt.t.empty()) throw std::invalid_argument("residue form needs --t");
        const Rational t = Rational::parse(opt.t);
        value = opt.raw ? z_exit_residue_raw(pattern, t) : z_exit_homogeneous(pattern, t);
    } else if (formula == "bruteforce") {
        if (opt.t.empty()) throw std::invalid_argument("bruteforce needs --t");
        const auto spec =
            LatticeSpec::homogeneous(pattern.size(), pattern.last(), Rational::parse(opt.t));
        value = z_exitpattern_bruteforce(spec, pattern);
    } else {
        throw std::invalid_argument("unknown formula: " + formula);
    }
    emit_scalar(value, opt.format, opt.digits);
    return kExitOk;
}

struct VerifyOptions {
    std::string suite = "all";
    int max_s = 6;
    std::uint64_t seed = kDefaultVerifySeed;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<SuiteReport> reports;
    if (opt.suite == "all") {
        reports = verify_all(opt.seed, opt.max_s);
    } else if (opt.suite == "qism") {
        reports.push_back(verify_qism(opt.seed));
    } else if (opt.suite == "partition") {
        reports.push_back(verify_partition(opt.seed));
    } else if (opt.suite == "onepoint") {
        reports.push_back(verify_onepoint(opt.seed, opt.max_s));
    } else if (opt.suite == "ode") {
        reports.push_back(verify_ode(opt.max_s));
    } else if (opt.suite == "asym") {
        reports.push_back(verify_asym(opt.seed));
    } else {
        throw std::invalid_argument("unknown suite: " + opt.suite);
    }

    bool all_ok = true;
    for (const auto& report : reports) {
        for (const auto& check : report.checks) {
            std::cout << (check.pass ? "ok   " : "FAIL ") << report.suite << "/" << check.name
                      << ": " << check.detail << "\n";
            all_ok = all_ok && check.pass;
        }
    }
    return all_ok ? kExitOk : kExitIdentityFailure;
}

struct McOptions {
    int s = 1;
    std::string t = "1/2";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

int run_mc(const McOptions& opt) {
    const double t = Rational::parse(opt.t).to_double();
    const auto result = mc_sample_exits(opt.s, t, opt.samples, opt.seed, opt.workers);
    write_histogram_csv(std::cout, result);
    if (result.n_flagged > 0) {
        std::cerr << "# flagged=" << result.n_flagged << " samples hit the column cap\n";
    }
    return kExitOk;
}

struct AsymOptions {
    std::string mode = "rate";
    std::string t = "1/3";
    int s = 100;
    std::string mu_list = "1/2,2";
    std::string v_list = "-2,-1,0,1,2";
    std::string grid;
};

int run_asym(const AsymOptions& opt) {
    const Rational t = Rational::parse(opt.t);
    const double td = t.to_double();
    if (opt.mode == "rate") {
        std::cout << "# schema=1\nmu,t,phi1,phi0,log_exact,log_predicted\n";
        for (const auto& mu : parse_rational_list(opt.grid.empty() ? opt.mu_list : opt.grid)) {
            const Rational ms = mu * Rational(opt.s);
            if (!ms.is_integer()) {
                throw std::invalid_argument("mu*s must be an integer (mu=" + mu.str() + ")");
            }
            const long m = ms.numerator().get_si();
            const double mud = mu.to_double();
            const Rational g = g_series_at(static_cast<int>(m), opt.s, t);
            const Rational deviation = mud < 1.0 ? g - Rational(1) : g;
            const auto est = g_asymptotic(m, opt.s, td);
            std::cout << mu.str() << "," << t.str() << "," << phi1(mud, td) << ","
                      << phi0(mud, td) << "," << log_abs(deviation) << ","
                      << est.log_correction << "\n";
        }
        return kExitOk;
    }
    if (opt.mode == "window") {
        std::cout << "# schema=1\nv,t,s,g_exact,erfc_limit\n";
        for (const auto& v : parse_rational_list(opt.grid.empty() ? opt.v_list : opt.grid)) {
            const double vd = v.to_double();
            const long m =
                opt.s + static_cast<long>(std::floor(vd * std::sqrt(static_cast<double>(opt.s))));
            if (m < 1) throw std::invalid_argument("window column below 1; increase s");
            const Rational g = g_series_at(static_cast<int>(m), opt.s, t);
            std::cout << v.str() << "," << t.str() << "," << opt.s << "," << g.to_double() << ","
                      << erfc_scaling(vd, td) << "\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown mode: " + opt.mode);
}

struct TableOptions {
    std::string quantity = "g";
    std::string m_range = "1:8";
    std::string s_range = "1:4";
    std::string n_range;
    std::string t = "1/2";
    int digits = 12;
};

int run_table(const TableOptions& opt) {
    const Rational t = Rational::parse(opt.t);
    if (opt.quantity == "g") {
        const auto [m_lo, m_hi] = parse_range(opt.m_range);
        const auto [s_lo, s_hi] = parse_range(opt.s_range);
        std::cout << "# schema=1\nm,s,t,value,decimal\n";
        for (int s = s_lo; s <= s_hi; ++s) {
            for (int m = m_lo; m <= m_hi; ++m) {
                const Rational g = g_series_at(m, s, t);
                std::cout << m << "," << s << "," << t.str() << "," << g.str() << ","
                          << g.decimal(opt.digits) << "\n";
            }
        }
        return kExitOk;
    }
    if (opt.quantity == "z") {
        const auto [s_lo, s_hi] = parse_range(opt.s_range);
        const auto [n_lo, n_hi] =
            parse_range(opt.n_range.empty() ? opt.s_range : opt.n_range);
        std::cout << "# schema=1\ns,n,t,value,decimal\n";
        for (int s = s_lo; s <= s_hi; ++s) {
            for (int n = std::max(s, n_lo); n <= n_hi; ++n) {
                const Rational z = z_homogeneous(t, s, n);
                std::cout << s << "," << n << "," << t.str() << "," << z.str() << ","
                          << z.decimal(opt.digits) << "\n";
            }
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown quantity: " + opt.quantity);
}

void report_error(const std::string& type, const std::string& message) {
    json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition functions, boundary one-point functions, and scaling "
                 "asymptotics of the stochastic six-vertex model on an s x N strip"};
    app.require_subcommand(1);

    GOptions g_opt;
    auto* g_cmd = app.add_subcommand("g", "Boundary one-point function g(m,s)");
    g_cmd->add_option("--m", g_opt.m, "Column index (1-based)")->required();
    g_cmd->add_option("--s", g_opt.s, "Number of rows")->required();
    g_cmd->add_option("--t", g_opt.t, "Weight parameter as p/q or decimal");
    g_cmd->add_option("--t-list", g_opt.t_list, "Distinct row parameters t_1,..,t_s");
    g_cmd->add_option("--nu-count,--n", g_opt.n, "Lattice width for --repr finite-n");
    g_cmd->add_option("--repr", g_opt.repr, "series|residue|jacobi|finite-n|semiinf");
    g_cmd->add_option("--format", g_opt.format, "text|json|csv");
    g_cmd->add_option("--digits", g_opt.digits, "Decimal display precision");

    ZOptions z_opt;
    auto* z_cmd = app.add_subcommand("z", "Partition function");
    z_cmd->add_option("--s", z_opt.s, "Number of rows");
    z_cmd->add_option("--n", z_opt.n, "Number of columns");
    z_cmd->add_option("--t", z_opt.t, "Homogeneous weight parameter");
    z_cmd->add_option("--t-list", z_opt.t_list, "Row parameters for --formula parthom");
    z_cmd->add_option("--lambda-list", z_opt.lambda_list, "Row rapidities");
    z_cmd->add_option("--nu-list", z_opt.nu_list, "Column rapidities");
    z_cmd->add_option("--formula", z_opt.formula, "fw|kostov|parthom|hankel|bruteforce|bracket");
    z_cmd->add_option("--format", z_opt.format, "text|json|csv");
    z_cmd->add_option("--digits", z_opt.digits, "Decimal display precision");

    ExitOptions exit_opt;
    auto* exit_cmd = app.add_subcommand("exit", "Fixed-exit partition function Z_{r_1..r_s}");
    exit_cmd->add_option("--pattern", exit_opt.pattern, "Exit columns, e.g. 2,3,5")->required();
    exit_cmd->add_option("--t", exit_opt.t, "Homogeneous weight parameter");
    exit_cmd->add_option("--t-list", exit_opt.t_list, "Distinct row parameters");
    exit_cmd->add_option("--formula", exit_opt.formula, "auto|coordinate|residue|bruteforce");
    exit_cmd->add_flag("--raw", exit_opt.raw, "Residue without the c-weight normalization");
    exit_cmd->add_option("--format", exit_opt.format, "text|json|csv");
    exit_cmd->add_option("--digits", exit_opt.digits, "Decimal display precision");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact identity suites");
    verify_cmd->add_option("--suite", verify_opt.suite, "all|qism|partition|onepoint|ode|asym");
    verify_cmd->add_option("--max-s", verify_opt.max_s, "Grid bound for m,s sweeps");
    verify_cmd->add_option("--seed", verify_opt.seed, "Seed for the randomized trials");

    McOptions mc_opt;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo path sampler (semi-infinite strip)");
    mc_cmd->add_option("--s", mc_opt.s, "Number of lines")->required();
    mc_cmd->add_option("--t", mc_opt.t, "Pass-through probability")->required();
    mc_cmd->add_option("--samples", mc_opt.samples, "Number of samples");
    mc_cmd->add_option("--seed", mc_opt.seed, "Base seed");
    mc_cmd->add_option("--workers", mc_opt.workers, "Independent streams (seed+w each)");

    AsymOptions asym_opt;
    auto* asym_cmd = app.add_subcommand("asym", "Scaling asymptotics tables");
    asym_cmd->add_option("--mode", asym_opt.mode, "rate|window");
    asym_cmd->add_option("--t", asym_opt.t, "Weight parameter");
    asym_cmd->add_option("--s", asym_opt.s, "Number of rows");
    asym_cmd->add_option("--mu-list", asym_opt.mu_list, "Values of m/s (rate mode)");
    asym_cmd->add_option("--v-list", asym_opt.v_list, "Window coordinates (window mode)");
    asym_cmd->add_option("--grid", asym_opt.grid, "Grid values for the selected mode");

    TableOptions table_opt;
    auto* table_cmd = app.add_subcommand("table", "CSV tables of g or Z over ranges");
    table_cmd->add_option("--quantity", table_opt.quantity, "g|z");
    table_cmd->add_option("--m-range", table_opt.m_range, "a:b");
    table_cmd->add_option("--s-range", table_opt.s_range, "a:b");
    table_cmd->add_option("--n-range", table_opt.n_range, "a:b");
    table_cmd->add_option("--t", table_opt.t, "Weight parameter");
    table_cmd->add_option("--digits", table_opt.digits, "Decimal display precision");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (g_cmd->parsed()) return run_g(g_opt);
        if (z_cmd->parsed()) return run_z(z_opt);
        if (exit_cmd->parsed()) return run_exit(exit_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (mc_cmd->parsed()) return run_mc(mc_opt);
        if (asym_cmd->parsed()) return run_asym(asym_opt);
        if (table_cmd->parsed()) return run_table(table_opt);
    } catch (const resource_error& e) {
        report_error("resource", e.what());
        return kExitResource;
    } catch (const degenerate_input_error& e) {
        report_error("degenerate-input", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        report_error("domain", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        report_error("usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
