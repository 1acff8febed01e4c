#include "hhineq/report_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "hhineq/errors.hpp"

namespace hhineq::report_io {

namespace {

using nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join_notes(const std::vector<std::string>& notes) {
    return fmt::format("{}", fmt::join(notes, ";"));
}

std::vector<std::string> split_notes(std::string_view text) {
    std::vector<std::string> out;
    while (!text.empty()) {
        const auto cut = text.find(';');
        out.emplace_back(text.substr(0, cut));
        if (cut == std::string_view::npos) break;
        text.remove_prefix(cut + 1);
    }
    return out;
}

// Finite values stay JSON numbers; +inf becomes the string "inf".
ordered_json number_json(double x) {
    if (std::isinf(x) && x > 0) return "inf";
    return x;
}

ordered_json number_json(const ExtendedReal& x) { return number_json(x.as_double()); }

double number_from(const ordered_json& v) {
    if (v.is_string()) return parse_number(v.get<std::string>());
    if (v.is_number()) return v.get<double>();
    throw ConfigError("report: expected a number or \"inf\"");
}

ExtendedReal extended_from(const ordered_json& v) {
    const double x = number_from(v);
    return std::isinf(x) ? ExtendedReal::infinity() : ExtendedReal(x);
}

ordered_json row_object(const BoundReport& r) {
    ordered_json o;
    o["theorem"] = r.theorem;
    o["function"] = r.function;
    o["h"] = r.h;
    o["a"] = r.a;
    o["b"] = r.b;
    o["q"] = r.q ? ordered_json(*r.q) : ordered_json(nullptr);
    o["lhs"] = number_json(r.lhs);
    o["bound"] = number_json(r.bound);
    o["slack"] = number_json(r.slack);
    o["precondition_ok"] = r.precondition_ok;
    o["satisfied"] = r.satisfied;
    o["note"] = join_notes(r.notes);
    return o;
}

BoundReport row_from(const ordered_json& o) {
    BoundReport r;
    r.theorem = o.at("theorem").get<std::string>();
    r.function = o.at("function").get<std::string>();
    r.h = o.at("h").get<std::string>();
    r.a = number_from(o.at("a"));
    r.b = number_from(o.at("b"));
    if (!o.at("q").is_null()) r.q = number_from(o.at("q"));
    r.lhs = number_from(o.at("lhs"));
    r.bound = extended_from(o.at("bound"));
    r.slack = extended_from(o.at("slack"));
    r.precondition_ok = o.at("precondition_ok").get<bool>();
    r.satisfied = o.at("satisfied").get<bool>();
    r.notes = split_notes(o.at("note").get<std::string>());
    return r;
}

std::string csv_line(const BoundReport& r) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", r.theorem, r.function, r.h,
                       format_number(r.a), format_number(r.b), r.q ? format_number(*r.q) : "",
                       format_number(r.lhs), format_number(r.bound.as_double()),
                       format_number(r.slack.as_double()), r.precondition_ok, r.satisfied,
                       join_notes(r.notes));
}

}  // namespace

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", x);
}

double parse_number(std::string_view text) {
    if (text == "inf") return kInf;
    if (text == "-inf") return -kInf;
    double x = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ConfigError(fmt::format("not a number: '{}'", text));
    }
    return x;
}

std::string to_json(const suite::SuiteReport& report) {
    ordered_json doc;
    doc["seed"] = report.seed;
    doc["tolerance"] = report.tolerance;
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows) doc["rows"].push_back(row_object(r));
    doc["summary"] = {{"pass", report.summary.pass},
                      {"fail", report.summary.fail},
                      {"skipped", report.summary.skipped}};
    return doc.dump(2) + "\n";
}

suite::SuiteReport from_json(std::string_view text) {
    try {
        const auto doc = ordered_json::parse(text);
        suite::SuiteReport report;
        report.seed = doc.at("seed").get<std::uint64_t>();
        report.tolerance = doc.at("tolerance").get<double>();
        for (const auto& row : doc.at("rows")) report.rows.push_back(row_from(row));
        const auto& s = doc.at("summary");
        report.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(),
                          s.at("skipped").get<int>()};
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(fmt::format("malformed report: {}", e.what()));
    }
}

std::string to_csv(const suite::SuiteReport& report) {
    std::string out = kCsvHeader + "\n";
    for (const auto& r : report.rows) out += csv_line(r) + "\n";
    return out;
}

std::string row_to_json(const BoundReport& row) { return row_object(row).dump() + "\n"; }

std::string row_to_csv(const BoundReport& row) { return kCsvHeader + "\n" + csv_line(row) + "\n"; }

std::string emit(const suite::SuiteReport& report, std::string_view format) {
    if (format == "json") return to_json(report);
    if (format == "csv") return to_csv(report);
    throw ConfigError(fmt::format("unknown format '{}'", format));
}

}  // namespace hhineq::report_io
