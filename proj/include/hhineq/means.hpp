#pragma once

#include <span>
#include <string>
#include <vector>

#include "hhineq/bound_report.hpp"

namespace hhineq::means {

enum class MeanKind { arithmetic, geometric, harmonic, logarithmic, identric, generalized_log };

/// A mean selector; `n` is only read for generalized_log.
struct Mean {
    MeanKind kind = MeanKind::arithmetic;
    double n = 1.0;
};

double arithmetic(double a, double b);
double geometric(double a, double b);
double harmonic(double a, double b);
/// (b - a) / (ln b - ln a); a when a == b.
double logarithmic(double a, double b);
/// (1/e) (b^b / a^a)^{1/(b-a)}; a when a == b.
double identric(double a, double b);
/// [(b^{n+1} - a^{n+1}) / ((n+1)(b-a))]^{1/n}, n not in {-1, 0}.
double generalized_log(double n, double a, double b);

/// All means require a, b > 0 (DomainError otherwise).
double mean(const Mean& m, double a, double b);

struct MeansChain {
    double harmonic = 0.0;
    double geometric = 0.0;
    double logarithmic = 0.0;
    double identric = 0.0;
    double arithmetic = 0.0;
    bool holds = false;
};

/// H <= G <= L <= I <= A with 1e-12 relative slack.
MeansChain means_chain(double a, double b);
bool means_chain_check(double a, double b);

/// L_n over a sorted grid is non-decreasing (1e-10 relative slack), with L
/// spliced in at n = -1 and I at n = 0.
bool ln_monotonicity_check(double a, double b, std::span<const double> n_grid);

/// L_n with the n = -1 -> L and n = 0 -> I substitutions.
double spliced_generalized_log(double n, double a, double b);

struct PropositionReport {
    int id = 0;
    double a = 0.0;
    double b = 0.0;
    double q = 0.0;
    int n = 0;
    double lhs = 0.0;
    double printed_rhs = 0.0;
    double parent_rhs = 0.0;
    /// |gap| as the parent theorem computes it; equals lhs up to quadrature.
    double parent_lhs = 0.0;
    bool printed_holds = false;
    bool parent_holds = false;
    bool parent_precondition_ok = false;
    std::vector<std::string> notes;
};

/// Evaluates one of the special-means propositions. `n` is used by
/// proposition 2 only (n >= 2). Proposition 2 accepts q >= 1; the others
/// need q > 1.
PropositionReport proposition_check(int id, double a, double b, double q, int n = 3,
                                    const BoundOptions& options = {});

}  // namespace hhineq::means
