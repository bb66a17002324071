#include <doctest.h>

#include <algorithm>

#include "qseries/checks.hpp"

using namespace qseries;

TEST_CASE("registry shape") {
    const auto& reg = check_registry();
    CHECK(reg.size() >= 60);
    CHECK(std::is_sorted(reg.begin(), reg.end(),
                         [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; }));
    for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].name != reg[i].name);
    for (const auto& d : reg) {
        CHECK(!d.anchor.empty());
        CHECK(d.order_num > 0);
    }
}

TEST_CASE("selection by name and prefix") {
    const auto exact = select_checks({"septic.klein.quartic"});
    CHECK(exact.size() == 1);

    const auto group = select_checks({"septic.klein"});
    CHECK(group.size() == 5);

    const auto merged = select_checks({"septic.klein", "septic.klein.xyz", "cubic"});
    CHECK(merged.size() == 8); // duplicates removed, sorted
    CHECK(std::is_sorted(merged.begin(), merged.end(),
                         [](const CheckDef* a, const CheckDef* b) { return a->name < b->name; }));

    CHECK_THROWS_AS(select_checks({"nosuch"}), usage_error);
    CHECK_THROWS_AS(select_checks({"septic.klein.q"}), usage_error); // no partial-word match
}

TEST_CASE("checks pass at reduced order") {
    for (const char* name : {"septic.klein.xyz", "septic.system.x", "eisenstein.coopt.e4",
                             "classical.ramanujan.e2", "products.liu.yu1", "constants.efund"}) {
        const auto defs = select_checks({name});
        const CheckResult r = run_check(*defs[0], std::pair<long, long>{8, 1});
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.order_num == 8);
        CHECK_FALSE(r.first_failure.has_value());
    }
}

TEST_CASE("fractional verification orders") {
    const auto defs = select_checks({"septic.klein.quartic"});
    const CheckResult r = run_check(*defs[0], std::pair<long, long>{19, 2});
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.order_den == 2);
}

TEST_CASE("a perturbed residual fails with the right witness") {
    const auto defs = select_checks({"septic.klein.xyz"});
    const AnySeries res = defs[0]->residual(12, 1);
    const RSeries bad = std::get<RSeries>(res) + RSeries::monomial(1, 5, 1, 12);
    ZeroWitness w;
    CHECK_FALSE(bad.is_zero_to(12, 1, &w));
    CHECK(w.expo_num == 5);
    CHECK(w.expo_den == 1);
    CHECK(w.coeff == "1");
    CHECK(bad.is_zero_to(5, 1)); // still fine below the injected term
}

TEST_CASE("precision shortfalls are reported, never silently passed") {
    CheckDef shallow;
    shallow.name = "synthetic.shallow";
    shallow.anchor = "residual with less precision than requested";
    shallow.order_num = 10;
    shallow.order_den = 1;
    shallow.residual = [](long, long) -> AnySeries { return RSeries::zero(1, 4); };
    const CheckResult r = run_check(shallow, std::nullopt);
    CHECK(r.status == CheckStatus::precision_error);
}

TEST_CASE("runner is deterministic across job counts") {
    const auto defs = select_checks({"septic.klein", "cubic", "products.jtp"});
    const Report serial = run_checks(defs, std::pair<long, long>{10, 1}, 1);
    const Report parallel = run_checks(defs, std::pair<long, long>{10, 1}, 4);
    REQUIRE(serial.results.size() == parallel.results.size());
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        CHECK(serial.results[i].name == parallel.results[i].name);
        CHECK(serial.results[i].status == parallel.results[i].status);
    }
    CHECK(serial.pass_count == parallel.pass_count);
    CHECK(std::is_sorted(serial.results.begin(), serial.results.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return a.name < b.name;
                         }));
}
