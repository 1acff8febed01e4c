#pragma once

#include <string>
#include <string_view>

#include "hhineq/bound_report.hpp"
#include "hhineq/suite.hpp"

namespace hhineq::report_io {

inline const std::string kCsvHeader =
    "theorem,function,h,a,b,q,lhs,bound,slack,precondition_ok,satisfied,note";

/// Numbers are written with 17 significant digits; +inf as "inf".
std::string format_number(double x);
/// Inverse of format_number. Throws ConfigError on malformed input.
double parse_number(std::string_view text);

std::string to_json(const suite::SuiteReport& report);
/// Throws ConfigError on a malformed document.
suite::SuiteReport from_json(std::string_view text);

std::string to_csv(const suite::SuiteReport& report);

/// A single row as a JSON object (one line) or header plus CSV line.
std::string row_to_json(const BoundReport& row);
std::string row_to_csv(const BoundReport& row);

/// Dispatches on "json" or "csv".
std::string emit(const suite::SuiteReport& report, std::string_view format);

}  // namespace hhineq::report_io
