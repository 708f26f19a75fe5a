#include "stratavol/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratavol/atable.hpp"
#include "stratavol/checks.hpp"
#include "stratavol/errors.hpp"
#include "stratavol/npoint.hpp"
#include "stratavol/volumes.hpp"

namespace stratavol::cli {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (int p : parts) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(p);
    }
    return s;
}

std::string decimal(long double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << payload;
    else
        write_atomic(out_path, payload);
}

struct CliState {
    Config config;
    std::string out_path;
    std::string mu_text;
    std::string rho_text;
    int k_max = 13;
    std::vector<std::string> suites;
};

std::string format_minimal(const ATableFile& file, const Config& config) {
    if (config.format == "json")
        return to_json_text(file, config.content_hash());
    std::string text;
    if (config.format == "csv") {
        text = "mu,rho,value\n";
        for (const ATableEntry& e : file.entries)
            text += join_parts(e.mu.parts()) + "," + join_parts(e.rho.parts()) +
                    "," + stratavol::to_string(e.value) + "\n";
        return text;
    }
    for (const ATableEntry& e : file.entries)
        text += "a(" + e.mu.to_string() + "," + e.rho.to_string() +
                ") = " + stratavol::to_string(e.value) + "\n";
    return text;
}

struct ValueResult {
    Partition mu;
    Partition rho;
    bool empty = false;
    Rational a;
    volumes::PiValue vol;
};

ValueResult compute_value(const Config& config, const Partition& mu,
                          const Partition& rho) {
    if (mu.is_empty())
        throw DomainError("--mu needs at least one part");
    volumes::StratumKey key{mu, rho};
    ValueResult r{mu, rho, key.empty_stratum(), Rational(0), volumes::PiValue{0, 0}};
    if (r.empty)
        return r;
    if (rho.weight() > config.max_weight)
        throw ConfigError("rho " + rho.to_string() + " needs --max-weight >= " +
                          std::to_string(rho.weight()) + ", have " +
                          std::to_string(config.max_weight));
    int need_k = mu.length() == 1 ? mu.max_part() : mu.weight() - 1;
    if (need_k > config.max_k)
        throw ConfigError("mu " + mu.to_string() + " needs --max-k >= " +
                          std::to_string(need_k) + ", have " +
                          std::to_string(config.max_k));
    minimal::MinimalTable table = obtain_table(config);
    TPoly poly = mu.length() == 1 ? table.at(mu.max_part())
                                  : npoint::a_poly(mu, table);
    r.a = volumes::a_value(poly, rho);
    r.vol = volumes::volume(key, r.a);
    return r;
}

std::string format_value(const ValueResult& r, const Config& config, bool with_a) {
    if (config.format == "json") {
        nlohmann::ordered_json j;
        j["mu"] = r.mu.parts();
        j["rho"] = r.rho.parts();
        j["empty"] = r.empty;
        if (!r.empty && with_a)
            j["a"] = stratavol::to_string(r.a);
        j["volume"] = r.empty ? "0" : r.vol.to_string();
        return j.dump(2) + "\n";
    }
    if (config.format == "csv") {
        std::string text = with_a ? "mu,rho,empty,a,volume\n" : "mu,rho,empty,volume\n";
        text += join_parts(r.mu.parts()) + "," + join_parts(r.rho.parts()) + "," +
                (r.empty ? "true" : "false") + ",";
        if (with_a)
            text += (r.empty ? "" : stratavol::to_string(r.a)) + ",";
        text += (r.empty ? "0" : r.vol.to_string()) + "\n";
        return text;
    }
    if (r.empty)
        return "0 (empty stratum)\n";
    if (with_a)
        return "a = " + stratavol::to_string(r.a) + ", Vol = " + r.vol.to_string() +
               "\n";
    return "Vol = " + r.vol.to_string() + "\n";
}

std::string format_kernel(const Config& config) {
    int c1 = config.kernel_cap_1, c2 = config.kernel_cap_2;
    npoint::Kernel2 kernel = npoint::two_point_kernel(c1, c2);
    if (config.format == "json") {
        nlohmann::ordered_json j;
        j["caps"] = std::vector<int>{c1, c2};
        j["coefficients"] = nlohmann::ordered_json::array();
        for (int k1 = 1; k1 <= c1; ++k1)
            for (int k2 = 1; k2 <= c2; ++k2) {
                nlohmann::ordered_json row;
                row["k1"] = k1;
                row["k2"] = k2;
                row["value"] = kernel.coeff(k1, k2).to_string();
                j["coefficients"].push_back(std::move(row));
            }
        return j.dump(2) + "\n";
    }
    std::string text;
    if (config.format == "csv")
        text = "k1,k2,value\n";
    for (int k1 = 1; k1 <= c1; ++k1)
        for (int k2 = 1; k2 <= c2; ++k2) {
            std::string value = kernel.coeff(k1, k2).to_string();
            if (config.format == "csv")
                text += std::to_string(k1) + "," + std::to_string(k2) + "," + value +
                        "\n";
            else
                text += "c(" + std::to_string(k1) + "," + std::to_string(k2) +
                        ") = " + value + "\n";
        }
    return text;
}

std::string format_sv(const Partition& mu, const volumes::PiValue& c,
                      const Config& config) {
    if (config.format == "json") {
        nlohmann::ordered_json j;
        j["mu"] = mu.parts();
        j["coeff"] = stratavol::to_string(c.coeff);
        j["pi_power"] = c.pi_power;
        j["c0"] = c.to_string();
        return j.dump(2) + "\n";
    }
    if (config.format == "csv")
        return "mu,c0\n" + join_parts(mu.parts()) + "," + c.to_string() + "\n";
    return "c0(" + mu.to_string() + ") = " + c.to_string() + "\n";
}

std::string format_asympt(const Partition& rho, int k_max,
                          const std::vector<volumes::AsymptoticsRow>& rows,
                          const Config& config) {
    if (config.format == "json") {
        nlohmann::ordered_json j;
        j["rho"] = rho.parts();
        j["k_max"] = k_max;
        j["bound"] = "(0, 2)";
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["k"] = r.k;
            row["g"] = r.g;
            row["vol"] = r.vol.to_string();
            row["normalized"] = decimal(r.normalized, config.digits);
            j["rows"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    std::string text;
    if (config.format == "csv") {
        text = "k,g,vol,normalized\n";
        for (const auto& r : rows)
            text += std::to_string(r.k) + "," + std::to_string(r.g) + "," +
                    r.vol.to_string() + "," + decimal(r.normalized, config.digits) +
                    "\n";
        return text;
    }
    text = "rho = " + rho.to_string() + ", normalized column (2g)^-|rho| Vol k/4\n";
    for (const auto& r : rows)
        text += "k=" + std::to_string(r.k) + "  g=" + std::to_string(r.g) +
                "  Vol = " + r.vol.to_string() + "  normalized = " +
                decimal(r.normalized, config.digits) + "\n";
    return text;
}

std::string format_check(const CheckReport& report, const Config& config) {
    if (config.format == "json")
        return report.to_json().dump(2) + "\n";
    if (config.format == "csv") {
        std::string text = "suite,passed,checks\n";
        for (const SuiteResult& s : report.suites)
            text += s.name + "," + (s.passed ? "true" : "false") + "," +
                    std::to_string(s.checks) + "\n";
        return text;
    }
    std::string text = report.text_summary();
    text += "\npredictions:\n";
    for (const auto& p : report.predictions)
        text += "  mu=[" + join_parts(p.at("mu").get<std::vector<int>>()) +
                "] rho=[" + join_parts(p.at("rho").get<std::vector<int>>()) +
                "] volume = " + p.at("volume").get<std::string>() + "  [" +
                p.at("status").get<std::string>() + "]\n";
    text += "\nerrata ledger:\n";
    for (const ErrataEntry& e : report.errata) {
        text += "  [" + e.id + "]\n";
        text += "    displayed:   " + e.printed + "\n";
        text += "    implemented: " + e.implemented + "\n";
        text += "    evidence:    " + e.evidence + "\n";
    }
    text += "\nnotes:\n";
    for (const std::string& n : report.notes)
        text += "  - " + n + "\n";
    return text;
}

} // namespace

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.empty())
        return parts;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.erase(token.begin());
        while (!token.empty() && token.back() == ' ')
            token.pop_back();
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
            value < 1)
            throw DomainError("profile part must be a positive integer, got '" +
                              token + "'");
        parts.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return parts;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CliState st;
    st.config.format.clear(); // empty marks "not set on the command line"

    CLI::App app{"exact volumes of strata of differentials with residue conditions"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-k", st.config.max_k, "one-zero table size");
        sub->add_option("--max-weight", st.config.max_weight,
                        "t-weight truncation order");
        sub->add_option("--out", st.out_path, "write the output to this file");
        sub->add_option("--format", st.config.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--cache", st.config.cache_dir, "table cache directory");
        sub->add_option("--data", st.config.data_dir, "fixture data directory");
        sub->add_option("--digits", st.config.digits,
                        "decimal digits in rendered reports");
    };

    CLI::App* c_minimal =
        app.add_subcommand("minimal", "solve and print the one-zero a-value table");
    add_common(c_minimal);

    CLI::App* c_value =
        app.add_subcommand("value", "exact a-value and volume of one stratum");
    c_value->add_option("--mu", st.mu_text, "zero profile, e.g. 3 or 2,2")
        ->required();
    c_value->add_option("--rho", st.rho_text, "residue profile, '' for none");
    add_common(c_value);

    CLI::App* c_volume = app.add_subcommand("volume", "volume of one stratum");
    c_volume->add_option("--mu", st.mu_text, "zero profile")->required();
    c_volume->add_option("--rho", st.rho_text, "residue profile");
    add_common(c_volume);

    CLI::App* c_kernel =
        app.add_subcommand("kernel", "two-point kernel coefficients");
    c_kernel->add_option("--cap1", st.config.kernel_cap_1, "z1 degree cap");
    c_kernel->add_option("--cap2", st.config.kernel_cap_2, "z2 degree cap");
    add_common(c_kernel);

    CLI::App* c_sv = app.add_subcommand(
        "sv", "ratio of the simple-pole-pair volume to the plain volume");
    c_sv->add_option("--mu", st.mu_text, "zero profile")->required();
    add_common(c_sv);

    CLI::App* c_asympt = app.add_subcommand(
        "asympt", "normalized one-zero volumes for growing zero order");
    c_asympt->add_option("--rho", st.rho_text, "residue profile");
    c_asympt->add_option("--k-max", st.k_max, "largest zero order");
    add_common(c_asympt);

    CLI::App* c_check = app.add_subcommand("check", "run the consistency audit");
    c_check->add_option("--suite", st.suites, "run only the named suites");
    add_common(c_check);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("stratavol");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (st.config.cache_dir.empty())
            if (const char* env = std::getenv("STRATAVOL_CACHE_DIR"); env && *env)
                st.config.cache_dir = env;
        if (st.config.format.empty())
            st.config.format = app.got_subcommand(c_check) ? "json" : "text";
        st.config.validate();

        if (app.got_subcommand(c_minimal)) {
            ATableFile file = snapshot(obtain_table(st.config));
            emit(format_minimal(file, st.config), st.out_path, out);
            return 0;
        }
        if (app.got_subcommand(c_value) || app.got_subcommand(c_volume)) {
            ValueResult r = compute_value(st.config, Partition(parse_parts(st.mu_text)),
                                          Partition(parse_parts(st.rho_text)));
            emit(format_value(r, st.config, app.got_subcommand(c_value)), st.out_path,
                 out);
            return 0;
        }
        if (app.got_subcommand(c_kernel)) {
            emit(format_kernel(st.config), st.out_path, out);
            return 0;
        }
        if (app.got_subcommand(c_sv)) {
            Partition mu(parse_parts(st.mu_text));
            if (mu.is_empty())
                throw DomainError("--mu needs at least one part");
            int need_k = mu.length() == 1 ? mu.max_part() : mu.weight() - 1;
            if (need_k > st.config.max_k)
                throw ConfigError("mu " + mu.to_string() + " needs --max-k >= " +
                                  std::to_string(need_k) + ", have " +
                                  std::to_string(st.config.max_k));
            minimal::MinimalTable table = obtain_table(st.config);
            emit(format_sv(mu, volumes::sv_constant(mu, table), st.config),
                 st.out_path, out);
            return 0;
        }
        if (app.got_subcommand(c_asympt)) {
            Partition rho(parse_parts(st.rho_text));
            if (st.k_max < 1)
                throw DomainError("--k-max must be positive");
            minimal::MinimalTable table =
                minimal::solve_minimal(st.k_max, rho.weight());
            auto rows = volumes::asymptotics_report(rho, st.k_max, table);
            emit(format_asympt(rho, st.k_max, rows, st.config), st.out_path, out);
            return 0;
        }
        // check
        CheckReport report = run_checks(st.config, st.suites);
        emit(format_check(report, st.config), st.out_path, out);
        return report.ok() ? 0 : 1;
    } catch (const InvariantError& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace stratavol::cli
