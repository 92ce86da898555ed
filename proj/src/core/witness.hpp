#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/content.hpp"
#include "core/poly.hpp"
#include "core/rational.hpp"

namespace ng {

// The candidate witness c(x) = c_{b,beta}(x/d) with beta = b - D, together
// with a value cache for integer arguments (the checkers evaluate c on
// dense integer ranges).
class WitnessFn {
  public:
    explicit WitnessFn(FractionTriple t);

    const FractionTriple& triple() const { return t_; }
    std::uint32_t beta() const { return t_.beta(); }

    NonNegRational value(const NonNegRational& x) const;
    // c(n) for integer n >= 0, cached.  Returns a copy: growing the cache
    // reallocates, so references into it would not survive the next call.
    NonNegRational value_at(std::uint64_t n) const;

  private:
    FractionTriple t_;
    mutable std::vector<NonNegRational> cache_;  // cache_[n] = c(n)
};

// Discreteness constant M = beta^s (beta^t - 1) where s, t are the preperiod
// and period lengths of 1/d in base b; M*c(n) is a nonnegative integer for
// every integer n.
Int m_const(const FractionTriple& t);

// R(m, n) = D * reed_beta(r_b((m-n)/d, n/d)) for m >= n >= 0.  The exchange
// identity c(m) - c(m-n) = c(n) - R(m, n) is asserted on every call.
NonNegRational r_value(const FractionTriple& t, const NonNegRational& m, const NonNegRational& n);

// Index set I = {(i, j) : 0 <= j < j + D <= i <= d} U {(d, d)}, ascending
// lexicographic order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> step_index_set(std::uint32_t d,
                                                                    std::uint32_t D);

// One violated comparison, with both exact values.
struct ValuePair {
    std::string label;
    NonNegRational lhs;
    NonNegRational rhs;
};

// Base property: 0 = c(0) < c(1) < ... < c(d-1), and c(d-D) vs c(d).  The
// definition asks for a strict head comparison; in general only <= holds,
// with equality exactly when d is b or b-1.  Both flags are reported and
// ok() follows the non-strict form the induction actually consumes.
struct BaseReport {
    bool chain_ok = true;
    bool head_nonstrict_ok = true;
    bool head_strict_ok = true;
    std::vector<ValuePair> counterexamples;

    bool ok() const { return chain_ok && head_nonstrict_ok; }
};
BaseReport check_base(const FractionTriple& t);

// One (i, j) in I under the sufficient check.  For i = d the comparison is
// c(d) >= c(j) (R(n, d) = 0 on the band).  For i < d the left side is
// c(i-j) - R(i, j) computed exactly and the requirement is the exact
// supremum of R(n, i) over the band: D/beta when d = b (one fractional
// carry slot), D/(beta-1) otherwise (0/1 digits from slot 1 on).
// coarse_ok additionally relaxes R(i, j) to its own supremum
// D/(beta*(beta-1)) (slot-1 digit vanishes when i < d), the coarser
// closed-form route via c(D); it can fail on triples where the exact
// check passes, so ok is the authoritative flag.
struct StepPair {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    Rat lhs;       // c(d) resp. c(i-j) - R(i,j)
    Rat required;  // c(j) resp. sup R(n,i)
    bool ok = true;
    bool coarse_ok = true;
};

struct StepCounterexample {
    std::uint32_t k, i, j;
    std::uint64_t n, m;
    Rat lhs, rhs;
};

// Step property: for all k >= 0, (i,j) in I, d b^k <= n < d b^(k+1) and
// j b^k <= m:  c(n) - c(n - i b^k) >= c(m) - c(m - j b^k).
//   (a) sufficient_ok: a finite per-pair reduction (scaling collapses k;
//       the m side is bounded by its exact supremum c(j b^k)) covering the
//       full unbounded quantifier range;
//   (b) direct_ok: literal enumeration over k <= k_max with n and m capped
//       at n_budget, as corroboration.
struct StepReport {
    bool sufficient_ok = true;
    bool coarse_sufficient_ok = true;
    std::vector<StepPair> pairs;
    bool direct_ok = true;
    std::uint64_t direct_instances = 0;
    std::vector<StepCounterexample> direct_counterexamples;  // capped
};
StepReport check_step(const FractionTriple& t, std::uint32_t k_max, std::uint64_t n_budget);

struct WitnessRanges {
    std::uint64_t n_max = 200;     // discreteness + growth sample range
    std::uint32_t k_max = 2;       // direct step bands
    std::uint64_t n_budget = 200;  // direct step cap on n and m
};

// Aggregate verdict over the four defining properties, plus the flag for
// the sufficient hypotheses (d = b, d = b-1, or D <= b/2 i.e. 2D <= b).
struct WitnessReport {
    FractionTriple t{0, 0, 0};
    bool hypotheses_met = false;
    Int M;
    bool discreteness_ok = true;   // M*c(n) integral for n <= n_max
    bool growth_ok = true;         // envelope beta^(l-1) <= c(n) <= (b-1) beta^l/(beta-1)
    BaseReport base;
    StepReport step;
    bool ok = false;  // discreteness && growth && base.ok() && step.sufficient_ok && direct_ok
};
WitnessReport witness_report(const FractionTriple& t, const WitnessRanges& ranges);
// Stable-field JSON document; fractions rendered as "num/den" strings.
std::string witness_report_json(const WitnessReport& r);

// max{c(n) : n in supp f}, or NEG_INF (is_neg_inf = true) for f = 0.
struct PolyContent {
    bool is_neg_inf = true;
    NonNegRational value;
};
PolyContent poly_content(const Poly& f, const FractionTriple& t);

}  // namespace ng
