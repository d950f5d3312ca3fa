#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grasslog/config_io.hpp"
#include "grasslog/errors.hpp"
#include "grasslog/grassmannian.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/quadrature.hpp"
#include "grasslog/verify.hpp"

namespace {

using namespace grasslog;

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

// Accepts "0.5", "-1", "1/3", "1+1i", "2-i", "i", "0.5i"; rational or decimal
// parts become exact Gaussian rationals (decimals are dyadic).
GaussianRational parse_complex(const std::string& text) {
    auto parse_real = [](std::string s) -> Rational {
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        if (s.find('/') != std::string::npos) return Rational::from_string(s);
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw DomainError("bad number: " + s);
        return Rational::from_double(v);
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty number");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // split a trailing imaginary part off an optional real part
        for (std::size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E' &&
                s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
                return {parse_real(s.substr(0, k)), parse_real(s.substr(k))};
            }
        }
        return {Rational(0), parse_real(s)};
    }
    return {parse_real(s), Rational(0)};
}

std::vector<double> parse_eps_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.size() < 2) throw DomainError("need at least two epsilons");
    return out;
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file: " + out_path);
        out << text;
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file: " + out_path);
        out << text;
    }
}

struct CommonArgs {
    std::string config_path, out_path, format = "json", method = "closed";
    std::string z_text, z_list, eps_list = "8e-3,4e-3,2e-3,1e-3";
    std::uint64_t seed = 42;
    long long budget = -1; // -1: per-command default
    double tol = 1e-6;
    std::string suite = "all";
};

Json eval_header(const std::string& command, const CommonArgs& a, long long budget) {
    Json j;
    j["schema"] = "grasslog-eval/1";
    j["command"] = command;
    j["seed"] = a.seed;
    j["budget"] = budget;
    j["orientation"] = orientation_tag();
    j["convention"] = normalization_convention();
    return j;
}

int run_eval(const std::string& what, const CommonArgs& a) {
    if (what == "sv-dilog" || what == "sv-trilog") {
        GaussianRational z = parse_complex(a.z_text);
        Json j = eval_header(what, a, 0);
        j["z"] = z.str();
        j["value"] = (what == "sv-dilog") ? bloch_wigner(z.to_complex()) : sv_trilog(z.to_complex());
        emit(j, a.out_path);
        return kExitOk;
    }
    if (what == "grass-dilog") {
        long long budget = a.budget > 0 ? a.budget : 100000;
        AnyConfiguration any = load_configuration(a.config_path);
        ConfigurationF cf = std::holds_alternative<ConfigurationF>(any)
                                ? std::get<ConfigurationF>(any)
                                : to_float(std::get<ConfigurationQ>(any));
        DilogMode mode = a.method == "numeric"  ? DilogMode::numeric
                         : a.method == "both"   ? DilogMode::both
                                                : DilogMode::closed;
        DilogResult r = grass_dilog(cf, mode, budget, a.tol);
        Json j = eval_header(what, a, budget);
        if (mode != DilogMode::numeric) j["value"] = r.closed;
        if (r.numeric) {
            if (mode == DilogMode::numeric) j["value"] = r.numeric->value;
            j["numeric"] = r.numeric->value;
            j["sigma"] = r.numeric->sigma;
            j["samples"] = r.numeric->samples;
        }
        emit(j, a.out_path);
        return kExitOk;
    }
    if (what == "grass-trilog") {
        long long budget = a.budget > 0 ? a.budget : 5000000;
        AnyConfiguration any = load_configuration(a.config_path);
        TrilogReport rep;
        Cp2Integrand intg;
        if (std::holds_alternative<ConfigurationF>(any)) {
            rep = grass_trilog_closed(std::get<ConfigurationF>(any));
            intg.covectors = std::get<ConfigurationF>(any).vectors();
        } else {
            rep = grass_trilog_closed(std::get<ConfigurationQ>(any));
            intg.covectors = to_float(std::get<ConfigurationQ>(any)).vectors();
        }
        Json j = eval_header(what, a, budget);
        j["closed"] = rep.closed;
        j["lie"] = rep.lie;
        j["diff_term"] = rep.diff_term;
        j["residuals"] = Json::object();
        j["residuals"]["closed_minus_lie_plus_diff"] = rep.closed - (rep.lie - rep.diff_term);
        if (a.method == "numeric" || a.method == "both") {
            QuadratureEstimate est = integrate_cp2(intg, budget, a.seed);
            double scale = 2.0 / (3.0 * M_PI * M_PI) * orientation_tag();
            j["numeric"] = est.value * scale;
            j["sigma"] = est.sigma * std::fabs(scale);
            j["samples"] = est.samples;
            j["residuals"]["numeric_minus_closed"] = est.value * scale - rep.closed;
        }
        j["value"] = rep.closed;
        emit(j, a.out_path);
        return kExitOk;
    }
    if (what == "special-stratum") {
        GaussianRational z = parse_complex(a.z_text);
        std::vector<double> eps = parse_eps_list(a.eps_list);
        double got = special_stratum_value(z, eps);
        double ref = sv_trilog(z.to_complex());
        Json j = eval_header(what, a, 0);
        j["z"] = z.str();
        j["value"] = got;
        j["sv_trilog"] = ref;
        j["difference"] = got - ref;
        emit(j, a.out_path);
        return kExitOk;
    }
    std::fprintf(stderr, "unknown eval function: %s\n", what.c_str());
    return kExitUsage;
}

int run_verify(const CommonArgs& a) {
    VerifyOptions opts;
    opts.seed = a.seed;
    if (a.budget > 0) {
        opts.budget_cp1 = std::min<long long>(a.budget, 400000);
        opts.budget_cp2 = a.budget;
    }
    opts.tol_cp1 = a.tol;
    Json report = run_suite(a.suite, opts);
    emit(report, a.out_path);
    return report["ok"].get<bool>() ? kExitOk : kExitContract;
}

int run_table(const CommonArgs& a) {
    std::vector<double> eps = parse_eps_list(a.eps_list);
    std::stringstream ss(a.z_list);
    std::string item;
    std::string csv = "z,grass_trilog_extrapolated,sv_trilog,difference\n";
    Json rows = Json::array();
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        GaussianRational z = parse_complex(item);
        Json row;
        row["z"] = z.str();
        try {
            double got = special_stratum_value(z, eps);
            double ref = sv_trilog(z.to_complex());
            csv += z.str() + "," + format_double(got) + "," + format_double(ref) + "," +
                   format_double(got - ref) + "\n";
            row["value"] = got;
            row["sv_trilog"] = ref;
            row["difference"] = got - ref;
        } catch (const Error& e) {
            csv += z.str() + ",ERROR,ERROR," + e.what() + "\n";
            row["error"] = e.what();
        }
        rows.push_back(std::move(row));
    }
    if (a.format == "csv") {
        emit_text(csv, a.out_path);
    } else {
        Json j;
        j["schema"] = "grasslog-table/1";
        j["convention"] = normalization_convention();
        j["rows"] = std::move(rows);
        emit(j, a.out_path);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmannian di- and trilogarithms: closed forms, singular "
                 "integration over CP^1/CP^2, and identity verification"};
    app.require_subcommand(1);

    CommonArgs args;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
    std::string what;
    eval->add_option("function", what,
                     "sv-dilog | sv-trilog | grass-dilog | grass-trilog | special-stratum")
        ->required();
    eval->add_option("--z", args.z_text, "complex argument, e.g. 0.5, 1/3, 1+1i");
    eval->add_option("--config", args.config_path, "configuration JSON path");
    eval->add_option("--method", args.method, "closed | numeric | both");
    eval->add_option("--eps", args.eps_list, "epsilon ladder for the stratum extrapolation");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", args.suite, "exact | forms | functional | quadrature | all");

    CLI::App* table = app.add_subcommand("table", "special-stratum comparison table");
    table->add_option("--z-list", args.z_list, "comma-separated z values")->required();
    table->add_option("--eps", args.eps_list, "epsilon ladder");

    for (CLI::App* sub : {eval, verify, table}) {
        sub->add_option("--seed", args.seed, "deterministic seed (default 42)");
        sub->add_option("--budget", args.budget, "evaluation/sample budget");
        sub->add_option("--tol", args.tol, "CP^1 adaptive tolerance");
        sub->add_option("--out", args.out_path, "output path (default stdout)");
        sub->add_option("--format", args.format, "json | csv (table only)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(what, args);
        if (verify->parsed()) return run_verify(args);
        if (table->parsed()) return run_table(args);
        return kExitUsage;
    } catch (const CrossRatioDegenerateError& e) {
        std::fprintf(stderr, "degenerate input: %s\n", e.what());
        return kExitDegenerate;
    } catch (const DegenerateError& e) {
        std::fprintf(stderr, "degenerate input: %s\n", e.what());
        return kExitDegenerate;
    } catch (const NonGenericError& e) {
        std::fprintf(stderr, "degenerate input: %s\n", e.what());
        return kExitDegenerate;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
