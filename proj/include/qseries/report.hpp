#pragma once

#include <iosfwd>

#include "qseries/checks.hpp"

namespace qseries {

inline constexpr const char* kVersion = "0.1.0";

std::string format_order(long num, long den);

void report_text(const Report& rep, std::ostream& os);
void report_json(const Report& rep, std::ostream& os);

// 0 all pass, 1 any fail, 3 any precision shortfall (fail wins over precision)
int report_exit_code(const Report& rep);

// q-expansion table of a catalog series
void dump_csv(const AnySeries& s, std::ostream& os);
void dump_json(const std::string& name, const AnySeries& s, std::ostream& os);

} // namespace qseries
