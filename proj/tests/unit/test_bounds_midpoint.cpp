#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hhineq/bounds.hpp"
#include "hhineq/corpus.hpp"
#include "hhineq/errors.hpp"
#include "hhineq/means.hpp"
#include "oracles.hpp"

using namespace hhineq;
using namespace hhineq::bounds;

namespace {

bool has_note(const BoundReport& r, const char* code) {
    return std::find(r.notes.begin(), r.notes.end(), code) != r.notes.end();
}

FunctionSpec constant_curvature(double c) {
    return FunctionSpec{"half-cx2", [c](double x) { return 0.5 * c * x * x; },
                        [c](double) { return c; }, Interval{-10.0, 10.0}, {}};
}

}  // namespace

TEST_SUITE("bounds_midpoint") {

TEST_CASE("m-weighted h integrals") {
    CHECK(std::abs(m_weighted_h_integral(HFunction::identity()).value() - 1.0 / 24.0) < 1e-12);
    CHECK(std::abs(m_weighted_h_integral(HFunction::constant_one()).value() - 1.0 / 12.0) < 1e-12);
    // int_0^1 m(t) t^{1/2} dt split at 1/2, against Simpson after t = s^2 on the left half.
    const double left = oracle::simpson([](double s) { return 2.0 * s * s * s * s * s * s; }, 0.0, std::sqrt(0.5));
    const double right = oracle::simpson([](double t) { return (1 - t) * (1 - t) * std::sqrt(t); }, 0.5, 1.0);
    CHECK(std::abs(m_weighted_h_integral(HFunction::power(0.5)).value() - (left + right)) < 1e-12);
    // Finite for the reciprocal weight: m(t)/t is bounded.
    const double rec = 0.125 + oracle::simpson([](double t) { return (1 - t) * (1 - t) / t; }, 0.5, 1.0);
    CHECK(std::abs(m_weighted_h_integral(HFunction::reciprocal()).value() - rec) < 1e-12);
}

TEST_CASE("theorem 10 examples") {
    const auto id = HFunction::identity();
    const auto r = theorem10_bound(corpus::make_square(), id, 0.0, 1.0);
    CHECK(r.lhs == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK(r.bound.value() == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(std::abs(r.slack.value()) < 1e-10);
    CHECK(std::abs(theorem10_bound(corpus::make_affine(), id, 0.0, 1.0).lhs) < 1e-14);
}

TEST_CASE("theorem 10 with h = t reduces to the classical midpoint formula") {
    std::mt19937_64 rng(10);
    const auto id = HFunction::identity();
    for (const auto& e : corpus::entries()) {
        for (const auto& [a, b] : oracle::intervals(rng, e.sample_domain.lo, e.sample_domain.hi, 10)) {
            const double w = b - a;
            const double expected = w * w / 24.0 * (std::abs(e.spec.f2(a)) + std::abs(e.spec.f2(b))) / 2.0;
            const double got = theorem10_bound(e.spec, id, a, b).bound.value();
            CAPTURE(e.spec.id);
            CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, expected));
        }
    }
}

TEST_CASE("theorem 11 examples") {
    const auto id = HFunction::identity();
    const auto r = theorem11_bound(corpus::make_square(), id, 0.0, 1.0, 2.0);
    CHECK(r.bound.value() == doctest::Approx(0.111803398874989485).epsilon(1e-12));
    CHECK(r.lhs == doctest::Approx(1.0 / 12.0));
    const auto line = theorem11_bound(corpus::make_affine(), id, 0.0, 1.0, 2.0);
    CHECK(std::abs(line.lhs) < 1e-14);
    CHECK(line.bound.value() == 0.0);
}

TEST_CASE("theorem 11 matches the harmonic-mean proposition") {
    std::mt19937_64 rng(11);
    for (const auto& [a, b] : oracle::intervals(rng, 0.5, 2.0, 10)) {
        for (double q : {1.5, 2.0, 3.0}) {
            const auto r = theorem11_bound(corpus::make_reciprocal(), HFunction::identity(), a, b, q);
            const auto p = means::proposition_check(3, a, b, q);
            CHECK(p.printed_rhs == doctest::Approx(r.bound.value()).epsilon(1e-12));
        }
    }
}

TEST_CASE("theorem 12 examples") {
    const auto id = HFunction::identity();
    const auto r = theorem12_bound(corpus::make_square(), id, 0.0, 1.0, 2.0);
    CHECK(r.bound.value() == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(std::abs(r.slack.value()) < 1e-10);
    CHECK(has_note(r, notes::kEq14ExponentInserted));
    const auto one = theorem12_bound(corpus::make_square(), id, 0.0, 1.0, 1.0);
    CHECK(one.bound.value() == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    const auto line = theorem12_bound(corpus::make_affine(), id, 0.0, 1.0, 2.0);
    CHECK(line.bound.value() == 0.0);
}

TEST_CASE("theorem 12 at q = 1 equals theorem 10") {
    std::mt19937_64 rng(12);
    for (const auto& e : corpus::entries()) {
        for (const auto& h : {HFunction::identity(), HFunction::constant_one(), HFunction::power(0.5),
                              HFunction::reciprocal()}) {
            for (const auto& [a, b] : oracle::intervals(rng, e.sample_domain.lo, e.sample_domain.hi, 3)) {
                const double t10 = theorem10_bound(e.spec, h, a, b).bound.value();
                const double t12 = theorem12_bound(e.spec, h, a, b, 1.0).bound.value();
                CAPTURE(e.spec.id);
                CAPTURE(h.name());
                CHECK(std::abs(t10 - t12) <= 1e-12 * std::max(1.0, t10));
            }
        }
    }
}

TEST_CASE("x^2 with h = t is an equality case of theorem 12 for every q") {
    std::mt19937_64 rng(121);
    for (const auto& [a, b] : oracle::intervals(rng, -2.0, 2.0, 5)) {
        for (double q : {1.0, 1.5, 2.0, 3.0}) {
            const auto r = theorem12_bound(corpus::make_square(), HFunction::identity(), a, b, q);
            CHECK(std::abs(r.slack.value()) < 1e-10);
        }
    }
}

TEST_CASE("theorem 13 examples") {
    const auto id = HFunction::identity();
    const auto r = theorem13_bound(corpus::make_x52(), id, 0.0, 1.0, 2.0);
    CHECK(r.lhs == doctest::Approx(0.0290500241113730222).epsilon(1e-10));
    CHECK(r.bound.value() == doctest::Approx(0.0790569415042094833).epsilon(1e-12));
    CHECK(r.precondition_ok);
    CHECK(has_note(r, notes::kThm13PReadAsQ));
    for (double c : {0.5, 3.0}) {
        const auto k = theorem13_bound(constant_curvature(c), id, 0.0, 1.0, 2.0);
        CHECK(k.bound.value() == doctest::Approx(c / 4.0 * std::sqrt(0.2)).epsilon(1e-12));
    }
    CHECK(theorem13_bound(corpus::make_affine(), id, 0.0, 1.0, 2.0).bound.value() == 0.0);
}

TEST_CASE("theorem 13 with a convex |f''|^q flags the precondition") {
    const auto r = theorem13_bound(corpus::make_neg_log(), HFunction::identity(), 1.0, 2.0, 2.0);
    CHECK_FALSE(r.precondition_ok);
}

TEST_CASE("divergent h") {
    const auto rec = HFunction::reciprocal();
    const auto r = theorem11_bound(corpus::make_square(), rec, 0.0, 1.0, 2.0);
    CHECK(r.bound.is_infinite());
    CHECK(r.satisfied);
    CHECK(has_note(r, notes::kDivergentH));
    CHECK(theorem10_bound(corpus::make_square(), rec, 0.0, 1.0).bound.is_finite());
}

TEST_CASE("q restrictions") {
    const auto fs = corpus::make_square();
    const auto id = HFunction::identity();
    CHECK_THROWS_AS(theorem11_bound(fs, id, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(theorem13_bound(fs, id, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(theorem12_bound(fs, id, 0.0, 1.0, 0.5), DomainError);
}

TEST_CASE("scale covariance and translation invariance") {
    const auto h = HFunction::power(0.5);
    for (const auto& fs : {corpus::make_square(), corpus::make_exp(), corpus::make_quartic()}) {
        const auto scaled = oracle::scaled(fs, 3.0);
        const auto moved = oracle::shifted(fs, -0.45);
        for (int theorem : {10, 11, 12, 13}) {
            const auto base = evaluate_bound(theorem, fs, h, -0.4, 1.3, 2.0);
            const auto big = evaluate_bound(theorem, scaled, h, -0.4, 1.3, 2.0);
            const auto other = evaluate_bound(theorem, moved, h, -0.85, 0.85, 2.0);
            CAPTURE(fs.id);
            CAPTURE(theorem);
            CHECK(big.lhs == doctest::Approx(3.0 * base.lhs).epsilon(1e-10));
            CHECK(big.bound.value() == doctest::Approx(3.0 * base.bound.value()).epsilon(1e-12));
            CHECK(std::abs(other.lhs - base.lhs) < 1e-10);
            CHECK(std::abs(other.bound.value() - base.bound.value()) < 1e-10);
        }
    }
}

TEST_CASE("bounds hold wherever the preconditions pass") {
    std::mt19937_64 rng(1313);
    MembershipCache cache;
    BoundOptions options;
    options.cache = &cache;
    int checked = 0;
    for (const auto& e : corpus::entries()) {
        for (const auto& [a, b] : oracle::intervals(rng, e.sample_domain.lo, e.sample_domain.hi, 4)) {
            for (const auto& h : {HFunction::identity(), HFunction::constant_one(), HFunction::power(0.5)}) {
                for (int theorem : {10, 11, 12, 13}) {
                    for (double q : {1.0, 1.5, 2.0, 3.0}) {
                        if ((theorem == 11 || theorem == 13) && q == 1.0) continue;
                        const auto r = evaluate_bound(theorem, e.spec, h, a, b, q, options);
                        if (!r.precondition_ok) continue;
                        ++checked;
                        CAPTURE(e.spec.id);
                        CAPTURE(theorem);
                        CHECK(r.lhs <= r.bound.value() + 1e-9);
                    }
                }
            }
        }
    }
    CHECK(checked > 500);
}

}
