#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hhineq/cli.hpp"
#include "hhineq/corpus.hpp"
#include "hhineq/errors.hpp"
#include "hhineq/report_io.hpp"
#include "hhineq/suite.hpp"

using namespace hhineq;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

suite::SuiteConfig small_config() {
    suite::SuiteConfig c;
    c.functions = {"xsq", "exp"};
    c.intervals_per_function = 2;
    c.q = {1.0, 2.0};
    return c;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hhineq_test_" + name);
}

}  // namespace

TEST_SUITE("corpus_cli") {

TEST_CASE("corpus entries") {
    const auto& all = corpus::entries();
    CHECK(all.size() == 10);
    CHECK(corpus::entry("xsq").spec.id == "xsq");
    CHECK(corpus::entry("xpow5").spec(2.0) == doctest::Approx(32.0));
    CHECK(corpus::entry("x52").spec.second_derivative(4.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(corpus::entry("nope"), ConfigError);
    CHECK_THROWS_AS(corpus::make_power(1), DomainError);
    CHECK(corpus::make_constant(4.0)(123.0) == 4.0);

    const auto sq = corpus::entry("xsq").claimed_h(ClaimSubject::second_derivative_power, 2.0, Curvature::concave);
    CHECK(sq == std::vector<std::string>{"identity"});
    CHECK(corpus::entry("neglog").claimed_h(ClaimSubject::function, 1.0, Curvature::convex).empty());
}

TEST_CASE("every compiled-in claim validates") {
    std::vector<const corpus::CorpusEntry*> all;
    for (const auto& e : corpus::entries()) all.push_back(&e);
    CHECK_NOTHROW(corpus::validate(all, MembershipOptions{}, 1));
}

TEST_CASE("a false claim aborts validation") {
    corpus::CorpusEntry bad{corpus::make_square(), Interval{-2.0, 2.0}};
    bad.spec.class_claims.push_back({ClaimSubject::function, 1.0, "identity", Curvature::concave});
    const corpus::CorpusEntry* list[] = {&bad};
    CHECK_THROWS_AS(corpus::validate(list, MembershipOptions{}, 1), CorpusIntegrityError);

    corpus::CorpusEntry wrong_f2{corpus::make_square(), Interval{-2.0, 2.0}};
    wrong_f2.spec.f2 = [](double) { return 3.0; };
    wrong_f2.spec.class_claims.clear();
    const corpus::CorpusEntry* list2[] = {&wrong_f2};
    CHECK_THROWS_AS(corpus::validate(list2, MembershipOptions{}, 1), CorpusIntegrityError);
}

TEST_CASE("config parsing") {
    const auto c = suite::parse_config(R"({"theorems": [5, "T7", "L1"], "functions": ["xsq"], "q": [2],
                                            "tolerance": 1e-8, "seed": 42, "threads": 2})");
    CHECK(c.theorems == std::vector<std::string>{"T5-left", "T5-right", "T7", "L1"});
    CHECK(c.functions == std::vector<std::string>{"xsq"});
    CHECK(c.q == std::vector<double>{2.0});
    CHECK(c.tolerance == 1e-8);
    CHECK(c.seed == 42);
    CHECK(c.threads == 2);
    CHECK(c.h == suite::SuiteConfig{}.h);
    CHECK(c.intervals_per_function == 20);

    const auto explicit_iv = suite::parse_config(R"({"intervals": [[0, 1], [0.5, 2]]})");
    REQUIRE(explicit_iv.intervals.has_value());
    CHECK(explicit_iv.intervals->size() == 2);

    CHECK_THROWS_AS(suite::parse_config("{"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config("[]"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"tolerance": 0})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"q": []})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"q": [0.5]})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"theorems": ["T14"]})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"functions": ["cosh"]})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"format": "xml"})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"intervals": [[2, 1]]})"), ConfigError);
    CHECK_THROWS_AS(suite::parse_config(R"({"seed": "abc"})"), ConfigError);
}

TEST_CASE("suite rows, ordering and summary") {
    const auto report = suite::run_suite(small_config());
    CHECK(report.seed == small_config().seed);
    CHECK_FALSE(report.rows.empty());
    CHECK(report.summary == suite::tally(report.rows));
    CHECK(report.summary.pass + report.summary.fail + report.summary.skipped ==
          static_cast<int>(report.rows.size()));
    CHECK(report.summary.fail == 0);
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const auto& p = report.rows[i - 1];
        const auto& r = report.rows[i];
        CHECK(suite::theorem_rank(p.theorem) <= suite::theorem_rank(r.theorem));
    }
    for (const auto& r : report.rows) {
        if (r.theorem == "T7" || r.theorem == "T11") CHECK(r.q.value() > 1.0);
        if (r.theorem == "T6" || r.theorem == "T10" || r.theorem[0] == 'L') CHECK_FALSE(r.q.has_value());
    }
}

TEST_CASE("tally counts evaluation errors as failures") {
    BoundReport ok;
    BoundReport skipped;
    skipped.precondition_ok = false;
    BoundReport errored;
    errored.precondition_ok = false;
    errored.satisfied = false;
    errored.notes = {notes::kEvaluationError};
    const auto s = suite::tally({ok, skipped, errored});
    CHECK(s.pass == 1);
    CHECK(s.skipped == 1);
    CHECK(s.fail == 1);
}

TEST_CASE("suite is deterministic and thread-count independent") {
    auto config = small_config();
    const auto one = report_io::to_json(suite::run_suite(config));
    const auto again = report_io::to_json(suite::run_suite(config));
    config.threads = 3;
    const auto threaded = report_io::to_json(suite::run_suite(config));
    CHECK(one == again);
    CHECK(one == threaded);
    config.seed += 1;
    CHECK(report_io::to_json(suite::run_suite(config)) != one);
}

TEST_CASE("affine-only suite") {
    suite::SuiteConfig c;
    c.functions = {"affine"};
    c.theorems = {"L1", "L2", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13"};
    c.intervals_per_function = 5;
    const auto report = suite::run_suite(c);
    for (const auto& r : report.rows) {
        CAPTURE(r.theorem);
        CHECK(std::abs(r.lhs) < 1e-13);
        CHECK(r.bound.value() == 0.0);
        CHECK(r.slack.value() == doctest::Approx(r.bound.value() - r.lhs));
        CHECK(r.satisfied);
    }
}

TEST_CASE("reciprocal h in the suite") {
    suite::SuiteConfig c;
    c.functions = {"xsq"};
    c.theorems = {"T5-right", "T7", "T11"};
    c.h = {"reciprocal"};
    c.intervals_per_function = 3;
    const auto report = suite::run_suite(c);
    REQUIRE_FALSE(report.rows.empty());
    for (const auto& r : report.rows) {
        CHECK(r.bound.is_infinite());
        CHECK(r.satisfied);
        CHECK(std::find(r.notes.begin(), r.notes.end(), notes::kDivergentH) != r.notes.end());
    }
}

TEST_CASE("JSON report round-trips") {
    auto config = small_config();
    config.h = {"identity", "reciprocal"};
    const auto report = suite::run_suite(config);
    const auto text = report_io::to_json(report);
    const auto back = report_io::from_json(text);
    CHECK(back == report);
    CHECK(report_io::to_json(back) == text);

    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.contains("seed"));
    CHECK(doc.contains("tolerance"));
    CHECK(doc["summary"].contains("skipped"));
    const auto& row = doc["rows"][0];
    for (const char* key : {"theorem", "function", "h", "a", "b", "q", "lhs", "bound", "slack",
                            "precondition_ok", "satisfied", "note"}) {
        CHECK(row.contains(key));
    }
    CHECK_THROWS_AS(report_io::from_json("{}"), ConfigError);
}

TEST_CASE("CSV report") {
    suite::SuiteReport report;
    BoundReport row;
    row.theorem = "T7";
    row.function = "xsq";
    row.h = "reciprocal";
    row.a = 0.1;
    row.b = 1.0;
    row.q = 2.0;
    row.lhs = 1.0 / 3.0;
    row.bound = ExtendedReal::infinity();
    row.slack = ExtendedReal::infinity();
    row.notes = {"H_INTEGRAL_DIVERGENT"};
    report.rows.push_back(row);
    const auto csv = report_io::to_csv(report);
    CHECK(csv.rfind(report_io::kCsvHeader + "\n", 0) == 0);
    CHECK(csv.find("T7,xsq,reciprocal,0.10000000000000001,1,2,0.33333333333333331,inf,inf,true,true,H_INTEGRAL_DIVERGENT") != std::string::npos);
    CHECK(report_io::parse_number("inf") > 1e308);
    CHECK(report_io::parse_number(report_io::format_number(0.1)) == 0.1);
    CHECK_THROWS_AS(report_io::parse_number("1.0x"), ConfigError);
}

TEST_CASE("cli: single-row commands") {
    const auto bound = cli({"bound", "--theorem", "6", "--function", "xsq", "--h", "identity", "--a", "0", "--b", "1"});
    CHECK(bound.code == 0);
    const auto row = nlohmann::json::parse(bound.out);
    CHECK(row["lhs"].get<double>() == doctest::Approx(1.0 / 6.0));
    CHECK(row["bound"].get<double>() == doctest::Approx(1.0 / 6.0));
    CHECK(row["satisfied"].get<bool>());

    const auto identity = cli({"identity", "--lemma", "2", "--function", "xquart", "--a", "0", "--b", "1"});
    CHECK(identity.code == 0);
    const auto id = nlohmann::json::parse(identity.out);
    CHECK(id["lhs"].get<double>() == doctest::Approx(0.1375));
    CHECK(id["rhs"].get<double>() == doctest::Approx(0.1375));
    CHECK(std::abs(id["delta"].get<double>()) < 1e-9);

    const auto means = cli({"means", "--a", "1", "--b", "2"});
    CHECK(means.code == 0);
    const auto m = nlohmann::json::parse(means.out);
    CHECK(m["H"].get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(m["L"].get<double>() == doctest::Approx(1.4426950408889634));
    CHECK(m["I"].get<double>() == doctest::Approx(1.4715177646857691));
    CHECK(m["holds"].get<bool>());

    const auto prop = cli({"means", "--a", "1", "--b", "2", "--prop", "3", "--q", "2"});
    CHECK(prop.code == 0);
    CHECK(nlohmann::json::parse(prop.out)["parent_holds"].get<bool>());

    const auto t5 = cli({"--format", "csv", "bound", "--theorem", "5", "--function", "sqrt", "--h", "power:0.5", "--a", "0", "--b", "1"});
    CHECK(t5.code == 0);
    CHECK(t5.out.find("T5-left") != std::string::npos);
    CHECK(t5.out.find("T5-right") != std::string::npos);

    const auto csv_means = cli({"means", "--a", "1", "--b", "2", "--format", "csv"});
    CHECK(csv_means.out.rfind("a,b,H,G,L,I,A,holds\n", 0) == 0);
}

TEST_CASE("cli: check-class") {
    const auto ok = cli({"check-class", "--function", "xsq", "--h", "identity", "--a", "0", "--b", "1"});
    CHECK(ok.code == 0);
    const auto concave = cli({"check-class", "--function", "xsq", "--h", "identity", "--a", "0", "--b", "1", "--concave"});
    CHECK(concave.code == 1);
    CHECK(nlohmann::json::parse(concave.out)["witness_t"].is_number());
    const auto f2 = cli({"check-class", "--function", "x52", "--h", "identity", "--a", "0", "--b", "1", "--q", "2", "--concave"});
    CHECK(f2.code == 0);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"bound", "--theorem", "6"}).code == 2);
    CHECK(cli({"bound", "--theorem", "4", "--function", "xsq", "--h", "identity", "--a", "0", "--b", "1"}).code == 2);
    CHECK(cli({"bound", "--theorem", "7", "--function", "xsq", "--h", "identity", "--a", "0", "--b", "1"}).code == 2);
    CHECK(cli({"bound", "--theorem", "6", "--function", "nope", "--h", "identity", "--a", "0", "--b", "1"}).code == 2);
    CHECK(cli({"bound", "--theorem", "6", "--function", "recip", "--h", "identity", "--a", "-1", "--b", "1"}).code == 2);
    CHECK(cli({"means", "--a", "1", "--b", "2", "--format", "xml"}).code == 2);
    CHECK(cli({"identity", "--lemma", "3", "--function", "xsq", "--a", "0", "--b", "1"}).code == 2);
    CHECK(cli({"suite", "--config", "/nonexistent/config.json"}).code == 2);
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("suite") != std::string::npos);
}

TEST_CASE("cli: suite exit codes and output file") {
    const auto config_path = temp_path("config.json");
    const auto out_path = temp_path("report.json");
    {
        std::ofstream cfg(config_path);
        cfg << R"({"functions": ["xsq"], "theorems": ["T6", "T10", "T12"], "intervals_per_function": 3, "q": [1, 2]})";
    }
    const auto pass = cli({"suite", "--config", config_path.string(), "--out", out_path.string()});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("fail 0") != std::string::npos);
    std::ifstream in(out_path);
    std::stringstream text;
    text << in.rdbuf();
    const auto report = report_io::from_json(text.str());
    CHECK(report.summary.fail == 0);
    CHECK_FALSE(report.rows.empty());

    // x^2 with h = t attains these bounds, so any shrinkage is a violation.
    const auto broken = cli({"suite", "--config", config_path.string(), "--inject-bound-scale", "0.5", "--out", out_path.string()});
    CHECK(broken.code == 1);

    const auto csv = cli({"suite", "--config", config_path.string(), "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind(report_io::kCsvHeader, 0) == 0);

    std::filesystem::remove(config_path);
    std::filesystem::remove(out_path);
}

}
