#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "qseries/report.hpp"

using namespace qseries;
using nlohmann::json;

namespace {

Report sample_report(bool with_fail) {
    std::vector<CheckDef> defs;
    CheckDef good;
    good.name = "synthetic.good";
    good.anchor = "zero residual";
    good.order_num = 6;
    good.order_den = 1;
    good.residual = [](long, long) -> AnySeries { return RSeries::zero(1, 20); };
    defs.push_back(good);
    if (with_fail) {
        CheckDef bad;
        bad.name = "synthetic.bad";
        bad.anchor = "nonzero residual";
        bad.order_num = 6;
        bad.order_den = 1;
        bad.residual = [](long, long) -> AnySeries {
            return RSeries::monomial(make_rational(-3, 7), 2, 1, 20);
        };
        defs.push_back(bad);
    }
    std::vector<const CheckDef*> ptrs;
    static std::vector<CheckDef> keep; // keep definitions alive across return
    keep = defs;
    for (const auto& d : keep) ptrs.push_back(&d);
    return run_checks(ptrs, std::nullopt, 1);
}

} // namespace

TEST_CASE("text report") {
    const Report rep = sample_report(true);
    std::ostringstream os;
    report_text(rep, os);
    const std::string text = os.str();
    CHECK(text.find("synthetic.good") != std::string::npos);
    CHECK(text.find("fail") != std::string::npos);
    CHECK(text.find("q^2") != std::string::npos);
    CHECK(text.find("-3/7") != std::string::npos);
    CHECK(text.find("1 failed") != std::string::npos);
}

TEST_CASE("JSON schema and round-trip") {
    const Report rep = sample_report(true);
    std::ostringstream os;
    report_json(rep, os);
    const json j = json::parse(os.str());

    CHECK(j.contains("version"));
    CHECK(j.contains("order"));
    CHECK(j["order"].is_null());
    REQUIRE(j.contains("results"));
    REQUIRE(j["results"].size() == 2);

    // results sorted by name
    CHECK(j["results"][0]["name"] == "synthetic.bad");
    CHECK(j["results"][0]["status"] == "fail");
    CHECK(j["results"][0]["first_failure"]["exponent"] == "2");
    CHECK(j["results"][0]["first_failure"]["coefficient"] == "-3/7");
    CHECK(j["results"][1]["status"] == "pass");
    CHECK(j["results"][1]["first_failure"].is_null());
    CHECK(j["results"][1]["order_verified"] == "6");
    CHECK(j["results"][1].contains("elapsed_ms"));

    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["precision_error"] == 0);

    // idempotent: parse -> dump -> parse gives the same document
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("exit codes track summary counts") {
    CHECK(report_exit_code(sample_report(false)) == 0);
    CHECK(report_exit_code(sample_report(true)) == 1);

    Report rep = sample_report(false);
    rep.precision_count = 1;
    CHECK(report_exit_code(rep) == 3);
    rep.fail_count = 1;
    CHECK(report_exit_code(rep) == 1); // fail outranks precision trouble
}

TEST_CASE("order formatting") {
    CHECK(format_order(10, 1) == "10");
    CHECK(format_order(19, 2) == "19/2");
    CHECK(format_order(14, 4) == "7/2");
    CHECK(format_order(-5, 8) == "-5/8");
}

TEST_CASE("series dumps") {
    const AnySeries e2 = named_series("E2", 3);
    std::ostringstream os;
    dump_csv(e2, os);
    const std::string csv = os.str();
    CHECK(csv.rfind("exponent_num,exponent_den,coefficient,float_approx", 0) == 0);
    CHECK(csv.find("1,1,\"-24\",-24") != std::string::npos);

    std::ostringstream js;
    dump_json("E2", named_series("E2", 3), js);
    const json dj = json::parse(js.str());
    CHECK(dj["name"] == "E2");
    CHECK(dj["coefficients"][0]["coefficient"] == "1");
    CHECK(dj["coefficients"][1]["coefficient"] == "-24");
    CHECK(dj["coefficients"][1]["float_approx"] == -24.0);

    // cyclotomic coefficients carry level and coordinate vectors
    std::ostringstream cs;
    dump_json("theta1.k1", named_series("theta1.k1", 2), cs);
    const json cj = json::parse(cs.str());
    bool saw_structured = false;
    for (const auto& row : cj["coefficients"])
        if (row["coefficient"].is_object()) {
            CHECK(row["coefficient"]["level"] == 4);
            saw_structured = true;
        }
    CHECK(saw_structured);
}
