#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/constructors.hpp"

namespace qseries {

struct CheckDef {
    std::string name;
    std::string anchor; // one-line description of the verified identity
    long order_num = 0; // default verification order (exponent bound)
    long order_den = 1;
    // builds the residual series, exact at least up to the requested order
    std::function<AnySeries(long, long)> residual;
};

const std::vector<CheckDef>& check_registry();

// match each pattern as an exact name or a dot-prefix ("septic.klein" selects
// the whole group); usage_error when a pattern matches nothing
std::vector<const CheckDef*> select_checks(const std::vector<std::string>& patterns);

enum class CheckStatus { pass, fail, precision_error };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::precision_error;
    long order_num = 0;
    long order_den = 1;
    std::optional<ZeroWitness> first_failure;
    long long elapsed_ms = 0;
    std::string message;
};

struct Report {
    std::string version;
    std::optional<std::pair<long, long>> order_override;
    std::vector<CheckResult> results; // sorted by name
    long pass_count = 0;
    long fail_count = 0;
    long precision_count = 0;
    long long total_elapsed_ms = 0;
};

CheckResult run_check(const CheckDef& def, std::optional<std::pair<long, long>> order);

Report run_checks(const std::vector<const CheckDef*>& defs,
                  std::optional<std::pair<long, long>> order, int jobs);

} // namespace qseries
