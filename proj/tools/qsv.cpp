// q-series identity verifier: front end over the check registry and the
// series catalog.
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qseries/report.hpp"
#include "qseries/septic_constants.hpp"

namespace {

using namespace qseries;
using nlohmann::ordered_json;

std::pair<long, long> parse_order(const std::string& text) {
    long num = 0, den = 1;
    const auto slash = text.find('/');
    try {
        num = std::stol(text.substr(0, slash));
        if (slash != std::string::npos) den = std::stol(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw usage_error("bad order '" + text + "', expected N or N/D");
    }
    if (den <= 0 || num < 0) throw usage_error("order must be a nonnegative rational");
    return {num, den};
}

// stream selection: stdout or --out FILE
struct OutStream {
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw usage_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

std::string cyc_float(const Cyc& v) {
    auto [re, im] = v.approx(30);
    if (im == "0") return re;
    return re + (im[0] == '-' ? " - " : " + ") + (im[0] == '-' ? im.substr(1) : im) + "*i";
}

ordered_json cyc_json(const Cyc& v) {
    if (v.is_rational()) return qseries::to_string(v.rational_part());
    ordered_json j;
    j["level"] = v.level();
    ordered_json coords = ordered_json::array();
    for (const Rational& r : v.coords()) coords.push_back(qseries::to_string(r));
    j["coords"] = coords;
    return j;
}

int cmd_verify(const std::vector<std::string>& picks, bool all, const std::string& order_text,
               const std::string& format, const std::string& out_path, int jobs) {
    if (!all && picks.empty()) throw usage_error("verify needs --check NAME or --all");
    std::optional<std::pair<long, long>> order;
    if (!order_text.empty()) order = parse_order(order_text);

    std::vector<const CheckDef*> defs;
    if (all) {
        for (const auto& d : check_registry()) defs.push_back(&d);
    } else {
        defs = select_checks(picks);
    }
    const Report rep = run_checks(defs, order, jobs);
    OutStream out(out_path);
    if (format == "json")
        report_json(rep, out.get());
    else
        report_text(rep, out.get());
    return report_exit_code(rep);
}

int cmd_dump(const std::string& name, const std::string& order_text, const std::string& format,
             const std::string& out_path) {
    const auto [on, od] = parse_order(order_text.empty() ? "10" : order_text);
    const long qunits = (on + od - 1) / od;
    const AnySeries s = named_series(name, std::max<long>(qunits, 1));
    OutStream out(out_path);
    if (format == "json")
        dump_json(name, s, out.get());
    else
        dump_csv(s, out.get());
    return 0;
}

int cmd_constants(const std::string& format, const std::string& out_path) {
    const SepticConstants c = efund_constants();
    const PhiBundle b = phi_constants('x');
    const char* names[9] = {"alpha1", "alpha2", "alpha3", "beta1", "beta2",
                            "beta3",  "gamma1", "gamma2", "gamma3"};
    auto pick = [&c](int i, bool dft) -> const Cyc& {
        const auto& grp = i < 3 ? (dft ? c.alphas_dft : c.alphas)
                                : i < 6 ? (dft ? c.betas_dft : c.betas)
                                        : (dft ? c.gammas_dft : c.gammas);
        return grp[static_cast<std::size_t>(i % 3)];
    };
    OutStream out(out_path);
    std::ostream& os = out.get();
    if (format == "json") {
        ordered_json j;
        j["version"] = kVersion;
        ordered_json cs = ordered_json::array();
        for (int i = 0; i < 9; ++i) {
            ordered_json e;
            e["name"] = names[i];
            e["closed_form"] = cyc_json(pick(i, false));
            e["dft"] = cyc_json(pick(i, true));
            e["equal"] = pick(i, false) == pick(i, true);
            e["float"] = cyc_float(pick(i, false));
            cs.push_back(std::move(e));
        }
        j["expansion_constants"] = std::move(cs);
        ordered_json phis = ordered_json::array();
        for (const Cyc& p : b.phi) {
            ordered_json e;
            e["value"] = cyc_json(p);
            e["float"] = cyc_float(p);
            phis.push_back(std::move(e));
        }
        j["phi"] = std::move(phis);
        j["phi_sum"] = qseries::to_string(b.phi_sum);
        ordered_json an = ordered_json::array(), bn = ordered_json::array();
        for (long n = 0; n < 7; ++n) {
            an.push_back(qseries::to_string(b.an.at(n)));
            bn.push_back(qseries::to_string(b.bn.at(n)));
        }
        j["a_n"] = std::move(an);
        j["b_n"] = std::move(bn);
        os << j.dump(2) << "\n";
        return 0;
    }
    os << "expansion constants (closed form vs DFT derivation):\n";
    for (int i = 0; i < 9; ++i) {
        const Cyc &cf = pick(i, false), &df = pick(i, true);
        os << "  " << names[i] << ": " << cf.str() << "\n"
           << "          dft: " << df.str() << (cf == df ? "  [equal]" : "  [MISMATCH]") << "\n"
           << "        float: " << cyc_float(cf) << "\n";
    }
    os << "quadratic coefficients over e-products:\n";
    const char* pn[6] = {"e1^2", "e2^2", "e3^2", "e1*e2", "e1*e3", "e2*e3"};
    for (int i = 0; i < 6; ++i)
        os << "  Phi[" << pn[i] << "] = " << b.phi[static_cast<std::size_t>(i)].str()
           << "  ~ " << cyc_float(b.phi[static_cast<std::size_t>(i)]) << "\n";
    os << "  Phi sum = " << qseries::to_string(b.phi_sum) << "\n";
    os << "induced period-7 sequences:\n  a_n =";
    for (long n = 0; n < 7; ++n) os << " " << qseries::to_string(b.an.at(n));
    os << "\n  b_n =";
    for (long n = 0; n < 7; ++n) os << " " << qseries::to_string(b.bn.at(n));
    os << "\n";
    return 0;
}

int cmd_list(const std::string& out_path) {
    OutStream out(out_path);
    std::ostream& os = out.get();
    std::size_t width = 4;
    for (const auto& d : check_registry()) width = std::max(width, d.name.size());
    for (const auto& d : check_registry())
        os << std::left << std::setw(static_cast<int>(width) + 2) << d.name << "order "
           << std::setw(4) << format_order(d.order_num, d.order_den) << "  " << d.anchor
           << "\n";
    os << "series catalog:";
    for (const auto& n : series_names()) os << " " << n;
    os << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-series identities"};
    app.require_subcommand(1);

    std::string order_text, format = "text", out_path, series_name;
    std::vector<std::string> picks;
    bool all = false;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    long seed = 0; // accepted for interface stability; verification is deterministic

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--order", order_text, "override verification order, N or N/D");
    verify->add_option("--check", picks, "check name or dot-prefix group (repeatable)");
    verify->add_flag("--all", all, "run the whole registry");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--jobs", jobs, "number of parallel check workers");
    verify->add_option("--seed", seed, "unused");

    auto* dump = app.add_subcommand("dump", "print a catalog series");
    dump->add_option("--series", series_name, "catalog name")->required();
    dump->add_option("--order", order_text, "exponent bound, N or N/D");
    dump->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    dump->add_option("--out", out_path);

    auto* constants = app.add_subcommand("constants", "exact septic constant tables");
    constants->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    constants->add_option("--out", out_path);

    auto* list = app.add_subcommand("list", "checks and catalog entries");
    list->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify))
            return cmd_verify(picks, all, order_text, format, out_path, jobs);
        if (app.got_subcommand(dump)) return cmd_dump(series_name, order_text, format, out_path);
        if (app.got_subcommand(constants)) return cmd_constants(format, out_path);
        return cmd_list(out_path);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const qseries::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
