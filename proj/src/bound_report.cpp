#include "hhineq/bound_report.hpp"

#include "hhineq/errors.hpp"

namespace hhineq {

void finalize(BoundReport& report, double tol) {
    report.slack = report.bound - report.lhs;
    report.satisfied = report.bound.is_infinite() || report.lhs <= report.bound.value() + tol;
}

std::optional<bool> MembershipCache::find(const Key& key) const {
    std::lock_guard lock(mutex_);
    if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
    return std::nullopt;
}

void MembershipCache::store(const Key& key, bool verdict) {
    std::lock_guard lock(mutex_);
    verdicts_.emplace(key, verdict);
}

namespace {

bool cached_check(const std::string& function_id, const RealFn& subject, const HFunction& h,
                  double a, double b, int subject_tag, double q, Curvature curvature,
                  const BoundOptions& options) {
    const MembershipCache::Key key{function_id, h.name(), a, b, subject_tag, q,
                                   static_cast<int>(curvature)};
    if (options.cache) {
        if (auto hit = options.cache->find(key)) return *hit;
    }
    bool verdict = false;
    try {
        verdict = check_h_class(subject, h, Interval{a, b}, curvature, options.membership).holds;
    } catch (const PreconditionError&) {
        verdict = false;
    }
    if (options.cache) options.cache->store(key, verdict);
    return verdict;
}

}  // namespace

bool second_derivative_in_class(const FunctionSpec& fs, const HFunction& h, double a, double b,
                                double q, Curvature curvature, const BoundOptions& options) {
    return cached_check(fs.id, abs_second_derivative_pow(fs, q), h, a, b, 1, q, curvature,
                        options);
}

bool function_in_class(const FunctionSpec& fs, const HFunction& h, double a, double b,
                       Curvature curvature, const BoundOptions& options) {
    return cached_check(fs.id, fs.f, h, a, b, 0, 1.0, curvature, options);
}

}  // namespace hhineq
