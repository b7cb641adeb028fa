#include "jackd/checks.hpp"
#include "jackd/colored.hpp"
#include "jackd/graphcheck.hpp"
#include "jackd/jack_oracle.hpp"
#include "jackd/partitions.hpp"
#include "jackd/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace jackd;

std::string default_cache_dir() {
    if (const char* env = std::getenv("JACKD_CACHE")) return env;
    return "./.jackd-cache";
}

int run_eta(const std::string& shape, const std::string& alpha,
            const std::string& method, const std::string& format) {
    const Partition lam = Partition::parse(shape);
    const AlphaSpec spec = AlphaSpec::parse(alpha);
    const EtaMethod m = parse_eta_method(method);
    std::string rendered;
    AlphaPoly poly;
    if (spec.symbolic) {
        switch (m) {
            case EtaMethod::Auto:
                poly = eta(lam);
                break;
            case EtaMethod::Colored: {
                const AlphaPoly counts = derangement_count_poly(lam);
                poly = (lam.size() - lam.part(1)) % 2 == 0 ? counts : -counts;
                break;
            }
            case EtaMethod::Minors:
                poly = eta_minor_sum(lam);
                break;
            case EtaMethod::Rencontres:
                poly = eta_rencontres(lam, lam.part(1));
                break;
            default:
                throw std::domain_error("method '" + method + "' needs a fixed alpha");
        }
        rendered = poly.to_string();
    } else {
        rendered = to_string(eta_at(lam, spec.value, m));
    }
    if (format == "json") {
        nlohmann::json j;
        j["shape"] = lam.to_string();
        j["alpha"] = spec.to_string();
        if (spec.symbolic)
            j["eta"] = nlohmann::json::parse(poly.to_json());
        else
            j["eta"] = rendered;
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "shape,eta\n\"" << lam.to_string() << "\"," << rendered << "\n";
    } else {
        std::cout << rendered << "\n";
    }
    return 0;
}

int run_spectrum(int n, const std::string& alpha, const std::string& format) {
    const SpectrumTable table = spectrum_table(n, AlphaSpec::parse(alpha));
    if (format == "json")
        std::cout << table.to_json() << "\n";
    else if (format == "csv")
        std::cout << table.to_csv();
    else
        std::cout << table.to_plain();
    return 0;
}

int run_profile(const std::string& shape, const std::string& format) {
    const Partition lam = Partition::parse(shape);
    const DerangementProfile profile = colored_derangement_counts(lam);
    if (format == "json") {
        std::cout << profile.to_json() << "\n";
    } else if (format == "csv") {
        std::cout << "k,d\n";
        for (std::size_t k = 1; k <= profile.d.size(); ++k)
            std::cout << k << "," << to_string(profile.d[k - 1]) << "\n";
    } else {
        for (std::size_t k = 1; k <= profile.d.size(); ++k)
            std::cout << "d_" << k << " = " << to_string(profile.d[k - 1]) << "\n";
    }
    return 0;
}

int run_immanant(const std::string& shape, const std::string& format) {
    const Partition lam = Partition::parse(shape);
    const std::vector<Rat> coeffs = immanant_char_poly(lam);
    if (format == "json") {
        nlohmann::json j;
        j["shape"] = lam.to_string();
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& c : coeffs) arr.push_back(to_string(c));
        j["coeffs"] = arr;
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "k,coeff\n";
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            std::cout << k << "," << to_string(coeffs[k]) << "\n";
    } else {
        bool first = true;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            if (!first) std::cout << " + ";
            std::cout << to_string(coeffs[k]) << "*x^" << k;
            first = false;
        }
        if (first) std::cout << "0";
        std::cout << "\n";
    }
    return 0;
}

int run_check(const std::string& suite, int max_n, const std::string& cache_dir,
              const std::string& format) {
    const std::vector<CheckResult> results = run_suite(suite, max_n, cache_dir);
    bool all_pass = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckResult& r : results) {
            nlohmann::json j;
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
            all_pass = all_pass && r.pass;
        }
        nlohmann::json out;
        out["suite"] = suite;
        out["results"] = arr;
        out["pass"] = all_pass;
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
                      << r.detail << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact eigenvalues of the permutation and matching derangement graphs"};
    app.require_subcommand(1);

    std::string shape, alpha = "sym", method = "auto", format = "plain";
    std::string suite = "all";
    std::string cache_dir = default_cache_dir();
    int n = 0, max_n = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
        cmd->add_option("--cache-dir", cache_dir, "character table cache directory");
    };

    CLI::App* eta_cmd = app.add_subcommand("eta", "eigenvalue of one shape");
    eta_cmd->add_option("--shape", shape, "comma-separated parts")->required();
    eta_cmd->add_option("--alpha", alpha, "sym, integer, or p/q");
    eta_cmd->add_option("--method", method, "evaluation route")
        ->check(CLI::IsMember(
            {"auto", "colored", "minors", "rencontres", "closed1", "det1", "closed2"}));
    add_format(eta_cmd);

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "full table for one n");
    spectrum_cmd->add_option("--n", n, "number of cells")->required();
    spectrum_cmd->add_option("--alpha", alpha, "sym, integer, or p/q");
    add_format(spectrum_cmd);

    CLI::App* profile_cmd =
        app.add_subcommand("profile", "derangement counts by cycle number");
    profile_cmd->add_option("--shape", shape, "comma-separated parts")->required();
    add_format(profile_cmd);

    CLI::App* immanant_cmd =
        app.add_subcommand("immanant", "normalized immanantal polynomial");
    immanant_cmd->add_option("--shape", shape, "comma-separated parts")->required();
    add_format(immanant_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "verification suites");
    check_cmd->add_option("--suite", suite, "which battery")
        ->check(CLI::IsMember({"all", "main", "signs", "kuwales", "extrema", "graphs",
                               "identities", "alpha2"}));
    check_cmd->add_option("--max-n", max_n, "cap on object sizes");
    add_format(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(eta_cmd)) return run_eta(shape, alpha, method, format);
        if (app.got_subcommand(spectrum_cmd)) return run_spectrum(n, alpha, format);
        if (app.got_subcommand(profile_cmd)) return run_profile(shape, format);
        if (app.got_subcommand(immanant_cmd)) return run_immanant(shape, format);
        if (app.got_subcommand(check_cmd)) return run_check(suite, max_n, cache_dir, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
