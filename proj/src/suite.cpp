#include "hhineq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "hhineq/bounds.hpp"
#include "hhineq/corpus.hpp"
#include "hhineq/errors.hpp"
#include "hhineq/identities.hpp"
#include "hhineq/refinements.hpp"

namespace hhineq::suite {

namespace {

using nlohmann::json;

constexpr double kMinWidth = 1e-3;

bool needs_q_above_one(int theorem) {
    return theorem == 7 || theorem == 9 || theorem == 11 || theorem == 13;
}

bool uses_q(int theorem) { return theorem != 6 && theorem != 10; }

template <typename T>
T field(const json& doc, const char* key, T fallback) {
    if (!doc.contains(key) || doc.at(key).is_null()) return fallback;
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("config field '{}': {}", key, e.what()));
    }
}

std::vector<std::pair<double, double>> draw_intervals(const Interval& domain, int count,
                                                      std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pick(domain.lo, domain.hi);
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        double a = pick(rng);
        double b = pick(rng);
        if (a > b) std::swap(a, b);
        if (b - a >= kMinWidth) out.emplace_back(a, b);
    }
    return out;
}

BoundReport base_row(std::string theorem, const FunctionSpec& fs, std::string h, double a,
                     double b) {
    BoundReport r;
    r.theorem = std::move(theorem);
    r.function = fs.id;
    r.h = std::move(h);
    r.a = a;
    r.b = b;
    return r;
}

BoundReport identity_row(int lemma, const FunctionSpec& fs, double a, double b, double tol) {
    const auto check = identities::verify_identity(lemma, fs, a, b, tol);
    BoundReport r = base_row(fmt::format("L{}", lemma), fs, "", a, b);
    r.lhs = check.lhs;
    r.bound = check.rhs;
    r.slack = check.rhs - check.lhs;
    r.satisfied = check.holds;
    r.notes.emplace_back(notes::kIdentity);
    return r;
}

BoundReport theorem5_row(bool left, const FunctionSpec& fs, const HFunction& h, double a, double b,
                         const BoundOptions& options) {
    const auto triple = refinements::theorem5_check(fs, h, a, b, options);
    BoundReport r = base_row(left ? "T5-left" : "T5-right", fs, h.name(), a, b);
    r.precondition_ok = triple.precondition_ok;
    if (left) {
        r.lhs = triple.lower;
        r.bound = triple.middle;
    } else {
        r.lhs = triple.middle;
        r.bound = triple.upper;
        if (triple.upper.is_infinite()) r.notes.emplace_back(notes::kDivergentH);
    }
    finalize(r, options.tol);
    return r;
}

BoundReport refinement_row(int theorem, const FunctionSpec& fs, const HFunction& h, double a,
                           double b, const BoundOptions& options) {
    const auto rep = theorem == 15 ? refinements::theorem15_refinement(fs, h, a, b, options)
                                   : refinements::theorem16_refinement(fs, h, a, b, options);
    BoundReport r = base_row(fmt::format("T{}", theorem), fs, h.name(), a, b);
    r.precondition_ok = rep.precondition_ok;
    r.lhs = rep.inner.as_double();
    r.bound = rep.outer;
    r.slack = rep.outer.is_infinite() ? ExtendedReal::infinity() : rep.outer - r.lhs;
    r.satisfied = rep.holds;
    r.notes.emplace_back(theorem == 15 ? notes::kThm15ProofForm : notes::kThm16ProofForm);
    if (rep.outer.is_infinite()) r.notes.emplace_back(notes::kDivergentH);
    return r;
}

// Runs `make` and records any evaluation failure on the row instead of
// aborting the suite.
BoundReport guarded(const std::function<BoundReport()>& make, BoundReport fallback) {
    try {
        return make();
    } catch (const std::exception&) {
        fallback.precondition_ok = false;
        fallback.satisfied = false;
        fallback.notes.emplace_back(notes::kEvaluationError);
        return fallback;
    }
}

bool row_less(const BoundReport& x, const BoundReport& y) {
    const auto key = [](const BoundReport& r) {
        return std::make_tuple(theorem_rank(r.theorem), std::cref(r.function), std::cref(r.h), r.a,
                               r.b, r.q.has_value(), r.q.value_or(0.0));
    };
    return key(x) < key(y);
}

}  // namespace

std::vector<std::string> expand_theorem(std::string_view token) {
    std::string t(token);
    if (!t.empty() && (t[0] == 't' || t[0] == 'l')) t[0] = static_cast<char>(t[0] - 'a' + 'A');
    if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) t = "T" + t;
    if (t == "T5") return {"T5-left", "T5-right"};
    if (std::find(kAllTheorems.begin(), kAllTheorems.end(), t) != kAllTheorems.end()) return {t};
    throw ConfigError(fmt::format("unknown theorem '{}'", token));
}

int theorem_rank(std::string_view theorem) {
    const auto it = std::find(kAllTheorems.begin(), kAllTheorems.end(), theorem);
    if (it == kAllTheorems.end()) throw ConfigError(fmt::format("unknown theorem '{}'", theorem));
    return static_cast<int>(it - kAllTheorems.begin());
}

SuiteConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    SuiteConfig c;
    if (doc.contains("theorems")) {
        c.theorems.clear();
        for (const auto& item : doc.at("theorems")) {
            const std::string token =
                item.is_number_integer() ? std::to_string(item.get<int>()) : item.get<std::string>();
            for (auto& id : expand_theorem(token)) {
                if (std::find(c.theorems.begin(), c.theorems.end(), id) == c.theorems.end()) {
                    c.theorems.push_back(std::move(id));
                }
            }
        }
    }
    c.functions = field(doc, "functions", c.functions);
    c.h = field(doc, "h", c.h);
    c.intervals_per_function = field(doc, "intervals_per_function", c.intervals_per_function);
    if (doc.contains("intervals") && !doc.at("intervals").is_null()) {
        std::vector<std::pair<double, double>> list;
        for (const auto& item : doc.at("intervals")) {
            if (!item.is_array() || item.size() != 2) {
                throw ConfigError("each interval must be a two-element array [a, b]");
            }
            list.emplace_back(item[0].get<double>(), item[1].get<double>());
        }
        c.intervals = std::move(list);
    }
    c.q = field(doc, "q", c.q);
    c.tolerance = field(doc, "tolerance", c.tolerance);
    c.format = field(doc, "format", c.format);
    c.out = field(doc, "out", c.out);
    c.threads = field(doc, "threads", c.threads);
    c.seed = field(doc, "seed", c.seed);
    c.grid = field(doc, "grid", c.grid);
    c.debug_bound_scale = field(doc, "debug_bound_scale", c.debug_bound_scale);
    validate_config(c);
    return c;
}

SuiteConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot read config '{}'", path.string()));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate_config(const SuiteConfig& c) {
    if (!(c.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (c.theorems.empty()) throw ConfigError("theorem list is empty");
    if (c.h.empty()) throw ConfigError("h list is empty");
    if (c.q.empty()) throw ConfigError("q grid is empty");
    for (double q : c.q) {
        if (!(q >= 1.0)) throw ConfigError(fmt::format("q must be >= 1, got {}", q));
    }
    if (c.intervals) {
        if (c.intervals->empty()) throw ConfigError("interval list is empty");
        for (const auto& [a, b] : *c.intervals) {
            if (!(a < b)) throw ConfigError(fmt::format("interval [{}, {}] is empty", a, b));
        }
    } else if (c.intervals_per_function < 1) {
        throw ConfigError("intervals_per_function must be at least 1");
    }
    if (c.format != "json" && c.format != "csv") {
        throw ConfigError(fmt::format("unknown format '{}'", c.format));
    }
    if (c.threads < 1) throw ConfigError("threads must be at least 1");
    if (c.grid < 2) throw ConfigError("grid must be at least 2");
    if (!(c.debug_bound_scale > 0.0)) throw ConfigError("debug_bound_scale must be positive");
    for (const auto& t : c.theorems) theorem_rank(t);
    for (const auto& id : c.functions) corpus::entry(id);
    for (const auto& h : c.h) parse_h(h);
}

BoundReport evaluate_row(std::string_view theorem, const FunctionSpec& fs, const HFunction& h,
                         double a, double b, std::optional<double> q, const BoundOptions& options) {
    if (theorem == "L1" || theorem == "L2") {
        return identity_row(theorem == "L1" ? 1 : 2, fs, a, b, options.tol);
    }
    if (theorem == "T5-left" || theorem == "T5-right") {
        return theorem5_row(theorem == "T5-left", fs, h, a, b, options);
    }
    if (theorem == "T15" || theorem == "T16") {
        return refinement_row(theorem == "T15" ? 15 : 16, fs, h, a, b, options);
    }
    const int number = theorem_rank(theorem) - theorem_rank("T6") + 6;
    if (number < 6 || number > 13) throw ConfigError(fmt::format("unknown theorem '{}'", theorem));
    if (!uses_q(number)) return bounds::evaluate_bound(number, fs, h, a, b, 1.0, options);
    if (!q) throw ConfigError(fmt::format("{} needs q", theorem));
    return bounds::evaluate_bound(number, fs, h, a, b, *q, options);
}

SuiteSummary tally(const std::vector<BoundReport>& rows) {
    SuiteSummary s;
    for (const auto& r : rows) {
        const bool errored =
            std::find(r.notes.begin(), r.notes.end(), notes::kEvaluationError) != r.notes.end();
        if (errored) {
            ++s.fail;
        } else if (!r.precondition_ok) {
            ++s.skipped;
        } else if (r.satisfied) {
            ++s.pass;
        } else {
            ++s.fail;
        }
    }
    return s;
}

SuiteReport run_suite(const SuiteConfig& config) {
    validate_config(config);

    std::vector<const corpus::CorpusEntry*> selected;
    if (config.functions.empty()) {
        for (const auto& e : corpus::entries()) selected.push_back(&e);
    } else {
        for (const auto& id : config.functions) selected.push_back(&corpus::entry(id));
    }

    MembershipOptions membership;
    membership.grid = config.grid;
    corpus::validate(selected, membership, config.seed);

    std::vector<HFunction> hs;
    for (const auto& name : config.h) hs.push_back(parse_h(name));

    MembershipCache cache;
    BoundOptions options;
    options.tol = config.tolerance;
    options.membership = membership;
    options.cache = &cache;

    const auto wants = [&](std::string_view id) {
        return std::find(config.theorems.begin(), config.theorems.end(), id) !=
               config.theorems.end();
    };

    struct Task {
        std::string theorem;
        const FunctionSpec* fs;
        const HFunction* h;
        double a;
        double b;
        std::optional<double> q;
    };
    const HFunction no_h = HFunction::identity();
    std::mt19937_64 rng(config.seed);
    std::vector<Task> tasks;
    for (const corpus::CorpusEntry* e : selected) {
        const FunctionSpec* fs = &e->spec;
        const auto intervals =
            config.intervals ? *config.intervals
                             : draw_intervals(e->sample_domain, config.intervals_per_function, rng);
        for (const auto& [a, b] : intervals) {
            for (const char* id : {"L1", "L2"}) {
                if (wants(id)) tasks.push_back({id, fs, &no_h, a, b, std::nullopt});
            }
            for (const HFunction& h : hs) {
                for (const char* id : {"T5-left", "T5-right"}) {
                    if (wants(id)) tasks.push_back({id, fs, &h, a, b, std::nullopt});
                }
                for (int theorem = 6; theorem <= 13; ++theorem) {
                    const std::string id = fmt::format("T{}", theorem);
                    if (!wants(id)) continue;
                    if (!uses_q(theorem)) {
                        tasks.push_back({id, fs, &h, a, b, std::nullopt});
                        continue;
                    }
                    for (double q : config.q) {
                        if (needs_q_above_one(theorem) && !(q > 1.0)) continue;
                        tasks.push_back({id, fs, &h, a, b, q});
                    }
                }
                for (const char* id : {"T15", "T16"}) {
                    if (wants(id)) tasks.push_back({id, fs, &h, a, b, std::nullopt});
                }
            }
        }
    }

    const auto run_task = [&](const Task& t) {
        BoundReport r = guarded(
            [&] { return evaluate_row(t.theorem, *t.fs, *t.h, t.a, t.b, t.q, options); },
            [&] {
                BoundReport fallback = base_row(t.theorem, *t.fs, t.h->name(), t.a, t.b);
                if (t.theorem[0] == 'L') fallback.h.clear();
                fallback.q = t.q;
                return fallback;
            }());
        const int rank = theorem_rank(t.theorem);
        const bool scalable = rank >= theorem_rank("T6") && rank <= theorem_rank("T13");
        if (scalable && config.debug_bound_scale != 1.0 && r.bound.is_finite()) {
            r.bound = config.debug_bound_scale * r.bound;
            finalize(r, options.tol);
        }
        return r;
    };

    std::vector<BoundReport> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = run_task(tasks[i]);
    };
    const int threads = std::min<int>(config.threads, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    std::stable_sort(rows.begin(), rows.end(), row_less);

    SuiteReport report;
    report.seed = config.seed;
    report.tolerance = config.tolerance;
    report.rows = std::move(rows);
    report.summary = tally(report.rows);
    return report;
}

}  // namespace hhineq::suite
