#include "hhineq/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "hhineq/corpus.hpp"
#include "hhineq/errors.hpp"
#include "hhineq/identities.hpp"
#include "hhineq/means.hpp"
#include "hhineq/report_io.hpp"
#include "hhineq/suite.hpp"

namespace hhineq {

namespace {

using nlohmann::ordered_json;
using report_io::format_number;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string format = "json";
    std::string out;
    std::optional<double> tol;
};

void deliver(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError(fmt::format("cannot write '{}'", path));
    file << text;
    if (!file) throw ConfigError(fmt::format("write to '{}' failed", path));
}

// Emits a flat record as one JSON object or a CSV header plus line.
std::string flat_record(const ordered_json& record, const std::string& format) {
    if (format == "json") return record.dump() + "\n";
    std::string header;
    std::string line;
    for (const auto& [key, value] : record.items()) {
        if (!header.empty()) {
            header += ',';
            line += ',';
        }
        header += key;
        if (value.is_string()) {
            line += value.get<std::string>();
        } else if (value.is_boolean()) {
            line += value.get<bool>() ? "true" : "false";
        } else if (value.is_null()) {
        } else if (value.is_number_float()) {
            line += format_number(value.get<double>());
        } else {
            line += value.dump();
        }
    }
    return header + "\n" + line + "\n";
}

int run_suite_command(const Globals& g, const std::string& config_path,
                      std::optional<std::uint64_t> seed, std::optional<int> threads,
                      std::optional<double> scale, bool format_set, bool out_set,
                      std::ostream& out) {
    suite::SuiteConfig config = config_path.empty() ? suite::SuiteConfig{}
                                                    : suite::load_config(config_path);
    if (seed) config.seed = *seed;
    if (threads) config.threads = *threads;
    if (scale) config.debug_bound_scale = *scale;
    if (g.tol) config.tolerance = *g.tol;
    if (format_set) config.format = g.format;
    if (out_set) config.out = g.out;
    suite::validate_config(config);

    const auto report = suite::run_suite(config);
    deliver(report_io::emit(report, config.format), config.out, out);
    if (!config.out.empty()) {
        out << fmt::format("pass {} fail {} skipped {}\n", report.summary.pass,
                           report.summary.fail, report.summary.skipped);
    }
    return report.summary.fail > 0 ? kExitViolation : kExitOk;
}

int run_bound_command(const Globals& g, int theorem, const std::string& function,
                      const std::string& h_name, double a, double b, std::optional<double> q,
                      std::ostream& out) {
    const FunctionSpec& fs = corpus::entry(function).spec;
    const HFunction h = parse_h(h_name);
    BoundOptions options;
    if (g.tol) options.tol = *g.tol;

    std::vector<std::string> ids;
    if (theorem == 5) {
        ids = {"T5-left", "T5-right"};
    } else if ((theorem >= 6 && theorem <= 13) || theorem == 15 || theorem == 16) {
        ids = {fmt::format("T{}", theorem)};
    } else {
        throw ConfigError(fmt::format("no bound for theorem {}", theorem));
    }

    std::string text;
    int code = kExitOk;
    for (const auto& id : ids) {
        const BoundReport row = suite::evaluate_row(id, fs, h, a, b, q, options);
        if (row.precondition_ok && !row.satisfied) code = kExitViolation;
        if (g.format == "json") {
            text += report_io::row_to_json(row);
        } else {
            const std::string csv = report_io::row_to_csv(row);
            text += text.empty() ? csv : csv.substr(csv.find('\n') + 1);
        }
    }
    deliver(text, g.out, out);
    return code;
}

int run_identity_command(const Globals& g, int lemma, const std::string& function, double a,
                         double b, std::ostream& out) {
    if (lemma != 1 && lemma != 2) throw ConfigError("--lemma must be 1 or 2");
    const FunctionSpec& fs = corpus::entry(function).spec;
    const auto check = identities::verify_identity(lemma, fs, a, b, g.tol.value_or(1e-9));
    ordered_json record;
    record["lemma"] = lemma;
    record["function"] = fs.id;
    record["a"] = a;
    record["b"] = b;
    record["lhs"] = check.lhs;
    record["rhs"] = check.rhs;
    record["delta"] = check.delta;
    record["holds"] = check.holds;
    deliver(flat_record(record, g.format), g.out, out);
    return check.holds ? kExitOk : kExitViolation;
}

int run_check_class_command(const Globals& g, const std::string& function,
                            const std::string& h_name, double a, double b, bool concave,
                            std::optional<double> q, std::ostream& out) {
    const FunctionSpec& fs = corpus::entry(function).spec;
    require_interval(fs, a, b);
    const HFunction h = parse_h(h_name);
    MembershipOptions options;
    if (g.tol) options.tol = *g.tol;
    const RealFn subject = q ? abs_second_derivative_pow(fs, *q) : fs.f;
    const Curvature curvature = concave ? Curvature::concave : Curvature::convex;
    const auto report = check_h_class(subject, h, Interval{a, b}, curvature, options);

    ordered_json record;
    record["function"] = fs.id;
    record["subject"] = q ? "abs_second_derivative_pow" : "function";
    record["q"] = q ? ordered_json(*q) : ordered_json(nullptr);
    record["h"] = h.name();
    record["curvature"] = std::string(to_string(curvature));
    record["a"] = a;
    record["b"] = b;
    record["holds"] = report.holds;
    record["max_violation"] = report.max_violation;
    record["tolerance"] = report.tolerance;
    if (report.witness) {
        record["witness_x"] = report.witness->x;
        record["witness_y"] = report.witness->y;
        record["witness_t"] = report.witness->t;
    } else {
        record["witness_x"] = nullptr;
        record["witness_y"] = nullptr;
        record["witness_t"] = nullptr;
    }
    deliver(flat_record(record, g.format), g.out, out);
    return report.holds ? kExitOk : kExitViolation;
}

int run_means_command(const Globals& g, double a, double b, std::optional<int> prop, double q,
                      int n, std::ostream& out) {
    if (!prop) {
        const auto chain = means::means_chain(a, b);
        ordered_json record;
        record["a"] = a;
        record["b"] = b;
        record["H"] = chain.harmonic;
        record["G"] = chain.geometric;
        record["L"] = chain.logarithmic;
        record["I"] = chain.identric;
        record["A"] = chain.arithmetic;
        record["holds"] = chain.holds;
        deliver(flat_record(record, g.format), g.out, out);
        return chain.holds ? kExitOk : kExitViolation;
    }
    BoundOptions options;
    if (g.tol) options.tol = *g.tol;
    const auto r = means::proposition_check(*prop, a, b, q, n, options);
    ordered_json record;
    record["proposition"] = r.id;
    record["a"] = r.a;
    record["b"] = r.b;
    record["q"] = r.q;
    record["n"] = r.id == 2 ? ordered_json(r.n) : ordered_json(nullptr);
    record["lhs"] = r.lhs;
    record["printed_rhs"] = r.printed_rhs;
    record["parent_rhs"] = r.parent_rhs;
    record["printed_holds"] = r.printed_holds;
    record["parent_holds"] = r.parent_holds;
    record["parent_precondition_ok"] = r.parent_precondition_ok;
    record["note"] = fmt::format("{}", fmt::join(r.notes, ";"));
    deliver(flat_record(record, g.format), g.out, out);
    return r.parent_precondition_ok && !r.parent_holds ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of Hermite-Hadamard type inequalities for h-convex functions",
                 "hhineq"};
    app.require_subcommand(1);
    // "-h" would collide with the --h option.
    app.set_help_flag("--help", "Print this help message and exit");

    Globals g;
    auto* format_opt = app.add_option("--format", g.format, "Output format")
                           ->check(CLI::IsMember({"json", "csv"}));
    auto* out_opt = app.add_option("--out", g.out, "Write output to this path");
    app.add_option("--tol", g.tol, "Satisfaction tolerance")->check(CLI::PositiveNumber);

    auto* suite_cmd = app.add_subcommand("suite", "Run the verification matrix");
    suite_cmd->fallthrough();
    suite_cmd->set_help_flag("--help", "Print this help message and exit");
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<double> scale;
    suite_cmd->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    suite_cmd->add_option("--seed", seed, "Seed for the random intervals");
    suite_cmd->add_option("--threads", threads, "Worker threads");
    suite_cmd->add_option("--inject-bound-scale", scale, "Multiply every bound (testing hook)");

    auto* bound_cmd = app.add_subcommand("bound", "Evaluate one bound");
    bound_cmd->fallthrough();
    bound_cmd->set_help_flag("--help", "Print this help message and exit");
    int theorem = 0;
    std::string function;
    std::string h_name;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> q;
    bound_cmd->add_option("--theorem", theorem, "5-13, 15 or 16")->required();
    bound_cmd->add_option("--function", function, "Corpus id")->required();
    bound_cmd->add_option("--h", h_name, "h kind")->required();
    bound_cmd->add_option("--a", a)->required();
    bound_cmd->add_option("--b", b)->required();
    bound_cmd->add_option("--q", q);

    auto* identity_cmd = app.add_subcommand("identity", "Check a gap identity");
    identity_cmd->fallthrough();
    identity_cmd->set_help_flag("--help", "Print this help message and exit");
    int lemma = 1;
    identity_cmd->add_option("--lemma", lemma, "1 or 2")->required();
    identity_cmd->add_option("--function", function, "Corpus id")->required();
    identity_cmd->add_option("--a", a)->required();
    identity_cmd->add_option("--b", b)->required();

    auto* class_cmd = app.add_subcommand("check-class", "Grid test of h-convexity");
    class_cmd->fallthrough();
    class_cmd->set_help_flag("--help", "Print this help message and exit");
    bool concave = false;
    class_cmd->add_option("--function", function, "Corpus id")->required();
    class_cmd->add_option("--h", h_name, "h kind")->required();
    class_cmd->add_option("--a", a)->required();
    class_cmd->add_option("--b", b)->required();
    class_cmd->add_flag("--concave", concave, "Test h-concavity instead");
    class_cmd->add_option("--q", q, "Test |f''|^q instead of f");

    auto* means_cmd = app.add_subcommand("means", "Special means and propositions");
    means_cmd->fallthrough();
    means_cmd->set_help_flag("--help", "Print this help message and exit");
    std::optional<int> prop;
    double means_q = 2.0;
    int n = 3;
    means_cmd->add_option("--a", a)->required();
    means_cmd->add_option("--b", b)->required();
    means_cmd->add_option("--prop", prop, "Proposition 1-4")->check(CLI::Range(1, 4));
    means_cmd->add_option("--q", means_q, "Exponent q");
    means_cmd->add_option("--n", n, "n for proposition 2");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (suite_cmd->parsed()) {
            return run_suite_command(g, config_path, seed, threads, scale, format_opt->count() > 0,
                                     out_opt->count() > 0, out);
        }
        if (bound_cmd->parsed()) return run_bound_command(g, theorem, function, h_name, a, b, q, out);
        if (identity_cmd->parsed()) return run_identity_command(g, lemma, function, a, b, out);
        if (class_cmd->parsed()) {
            return run_check_class_command(g, function, h_name, a, b, concave, q, out);
        }
        if (means_cmd->parsed()) return run_means_command(g, a, b, prop, means_q, n, out);
    } catch (const CorpusIntegrityError& e) {
        err << "corpus integrity error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace hhineq
