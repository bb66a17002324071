#include "qseries/report.hpp"

#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qseries {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::precision_error: return "precision-error";
    }
    return "?";
}

json coeff_json(const ZeroWitness& w) {
    if (w.level == 1) return w.coeff;
    json j;
    j["level"] = w.level;
    j["coords"] = w.coords;
    return j;
}

template <class K>
void dump_csv_rows(const Series<K>& s, std::ostream& os) {
    for (long k = s.lo(); k < s.prec(); ++k) {
        const K c = s.coeff(k, s.denom());
        const long g = std::gcd(k < 0 ? -k : k, s.denom());
        const long num = k / (g ? g : 1), den = s.denom() / (g ? g : 1);
        os << num << "," << den << ",\"" << qseries::to_string(c) << "\",";
        std::ostringstream fs;
        fs << std::setprecision(17);
        if constexpr (std::is_same_v<K, Rational>) {
            fs << mpq_class(c).get_d();
        } else {
            const auto [re, im] = c.approx_double();
            fs << re;
            if (im != 0.0) fs << (im > 0 ? "+" : "") << im << "i";
        }
        os << fs.str() << "\n";
    }
}

template <class K>
json dump_json_rows(const Series<K>& s) {
    json rows = json::array();
    for (long k = s.lo(); k < s.prec(); ++k) {
        const K c = s.coeff(k, s.denom());
        const long g = std::gcd(k < 0 ? -k : k, s.denom());
        json row;
        row["exponent_num"] = k / (g ? g : 1);
        row["exponent_den"] = s.denom() / (g ? g : 1);
        if constexpr (std::is_same_v<K, Rational>) {
            row["coefficient"] = qseries::to_string(c);
            row["float_approx"] = mpq_class(c).get_d();
        } else {
            if (c.is_rational()) {
                row["coefficient"] = qseries::to_string(c.rational_part());
            } else {
                json cc;
                cc["level"] = c.level();
                json coords = json::array();
                for (const Rational& r : c.coords()) coords.push_back(qseries::to_string(r));
                cc["coords"] = coords;
                row["coefficient"] = cc;
            }
            const auto [re, im] = c.approx_double();
            row["float_approx"] = {{"re", re}, {"im", im}};
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_order(long num, long den) {
    const long g = std::gcd(num < 0 ? -num : num, den);
    num /= g ? g : 1;
    den /= g ? g : 1;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void report_text(const Report& rep, std::ostream& os) {
    std::size_t width = 4;
    for (const auto& r : rep.results) width = std::max(width, r.name.size());
    for (const auto& r : rep.results) {
        os << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::right
           << std::setw(15) << status_name(r.status) << "  order "
           << format_order(r.order_num, r.order_den) << "  " << r.elapsed_ms << " ms";
        if (r.status == CheckStatus::fail && r.first_failure) {
            os << "  first failure at q^" << format_order(r.first_failure->expo_num,
                                                          r.first_failure->expo_den)
               << ", coefficient " << r.first_failure->coeff;
        }
        if (r.status == CheckStatus::precision_error && !r.message.empty())
            os << "  (" << r.message << ")";
        os << "\n";
    }
    os << rep.results.size() << " checks: " << rep.pass_count << " passed, " << rep.fail_count
       << " failed, " << rep.precision_count << " precision errors (" << rep.total_elapsed_ms
       << " ms)\n";
}

void report_json(const Report& rep, std::ostream& os) {
    ordered_json j;
    j["version"] = rep.version;
    if (rep.order_override)
        j["order"] = format_order(rep.order_override->first, rep.order_override->second);
    else
        j["order"] = nullptr;
    ordered_json results = ordered_json::array();
    for (const auto& r : rep.results) {
        ordered_json e;
        e["name"] = r.name;
        e["status"] = status_name(r.status);
        e["order_verified"] = r.status == CheckStatus::precision_error
                                  ? "0"
                                  : format_order(r.order_num, r.order_den);
        if (r.first_failure) {
            ordered_json f;
            f["exponent"] =
                format_order(r.first_failure->expo_num, r.first_failure->expo_den);
            f["coefficient"] = coeff_json(*r.first_failure);
            e["first_failure"] = f;
        } else {
            e["first_failure"] = nullptr;
        }
        e["elapsed_ms"] = r.elapsed_ms;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    j["summary"] = {{"pass", rep.pass_count},
                    {"fail", rep.fail_count},
                    {"precision_error", rep.precision_count}};
    os << j.dump(2) << "\n";
}

int report_exit_code(const Report& rep) {
    if (rep.fail_count > 0) return 1;
    if (rep.precision_count > 0) return 3;
    return 0;
}

void dump_csv(const AnySeries& s, std::ostream& os) {
    os << "exponent_num,exponent_den,coefficient,float_approx\n";
    std::visit([&os](const auto& ser) { dump_csv_rows(ser, os); }, s);
}

void dump_json(const std::string& name, const AnySeries& s, std::ostream& os) {
    ordered_json j;
    j["version"] = kVersion;
    j["name"] = name;
    std::visit(
        [&](const auto& ser) {
            j["denominator"] = ser.denom();
            j["prec_num"] = ser.prec();
            j["coefficients"] = dump_json_rows(ser);
        },
        s);
    os << j.dump(2) << "\n";
}

} // namespace qseries
