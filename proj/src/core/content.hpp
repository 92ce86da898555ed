#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/rational.hpp"
#include "core/word.hpp"

namespace ng {

// Parameters of the two-base content map: expand in base b, read in base beta.
struct ContentParams {
    std::uint32_t b;
    std::uint32_t beta;
};

// A triple (b, d, D) with 1 <= D <= d <= b and derived reading base
// beta = b - D >= 2; the parameter set of the unit-fraction apparatus and of
// the nilgrowth witness family.
struct FractionTriple {
    std::uint32_t b;
    std::uint32_t d;
    std::uint32_t D;

    std::uint32_t beta() const { return b - D; }
    void validate() const;
    ContentParams params() const { return ContentParams{b, beta()}; }
};

// c_{b,beta}(q): the base-b expansion of q read as a number in base beta.
NonNegRational content(const NonNegRational& q, const ContentParams& p);

// Same value assembled from the (ell, s, t, n, u, m) statistics:
// c(q) = c(n) + c(u)/beta^s + c(m)/(beta^s (beta^t - 1)).  Cross-check route.
NonNegRational content_closed_form(const NonNegRational& q, const ContentParams& p);

// Exact two-sided envelope for c(n) in terms of ell = ell_b(n):
//   beta^(ell-1) <= c(n) <= (b-1)(beta^ell - 1)/(beta - 1).
// These integer-power bounds imply the strict scaled envelope
// beta^-1 n^log_b(beta) < c(n) < (beta(b-1)/(beta-1)) n^log_b(beta).
struct Envelope {
    NonNegRational lower;
    NonNegRational upper;
    NonNegRational value;
    bool ok;
};
Envelope growth_envelope(const Int& n, const ContentParams& p);

// Verifies c(b^k q) = beta^k c(q) exactly; k may be negative.
bool content_scale_check(const NonNegRational& q, long k, const ContentParams& p);

// Both sides of c(m) + c(n) = c(m+n) + (b - beta) * reed_beta(r_b(m, n)).
// The correction term is signed when beta > b, so sides are plain rationals.
struct CarryContent {
    Rat lhs;
    Rat rhs;
    NonNegRational carry_reed;
    PeriodicWord word;
    bool equal;
};
CarryContent carry_content_identity(const NonNegRational& m, const NonNegRational& n,
                                    const ContentParams& p);

// Digits a_1..a_k of rite_b(1/d) plus the five-way structure classification:
//   1: a_1 >= 2            (iff 2d <= b)
//   2: a_1 = 1, a_2 >= 3   (iff b/2 < d <= b^2/(b+3))
//   3: 0.124^+ prefix      (iff b > 6 and d = b-2)
//   4: 0.(1)               (iff d = b-1)
//   5: 0.1 terminating     (iff d = b)
// d = 1 expands as 1.(0); the classifier does not apply (case_index = 0).
struct UnitFractionDigits {
    std::vector<std::uint32_t> a;
    int case_index;
    bool classifier_applicable;
};
UnitFractionDigits unit_fraction_digits(const FractionTriple& t, std::size_t k);

// Digits e_1..e_k of rite_b(D/d) and carry digits r_1..r_k of the D-fold
// addition of 1/d.  For D < d the r digits are recomputed through both
// floor-formula variants and checked against the addition route, and the
// identity e_i = D*a_i + r_{i+1} - b*r_i is verified for the whole prefix.
struct FractionDigits {
    std::vector<std::uint32_t> e;
    std::vector<std::uint32_t> r;
};
FractionDigits fraction_digits_and_carries(const FractionTriple& t, std::size_t k);

// Exact comparison of c(1/d) under (b, b-D) against the two lower bounds
// (beta+1)/(beta(beta-1)) (proved for d <= b-2, b > 6, with three listed
// small-b exceptional triples) and D/(beta(beta-1)).
struct BoundC1Report {
    NonNegRational c1;
    bool prop_applicable;
    bool prop_holds;
    Rat prop_margin;
    bool listed_exception;
    bool cor_applicable;
    bool cor_holds;
    Rat cor_margin;
    bool easy_formula_checked;
};
BoundC1Report bound_c1(const FractionTriple& t);

// Exact comparison of c(D/d) against D(beta+1)/(beta(beta-1)) together with
// every sufficient condition we know for it.  Nothing here asserts; callers
// assert only under the proved hypotheses (cond1 or cond2).
struct BoundCDReport {
    NonNegRational cD;
    Rat bound;
    bool holds;
    Rat margin;
    bool prop_applicable;   // D < d <= b-2
    bool cond1;             // 2d <= b
    bool cond2;             // D < d(1 - 1/(b-d))
    bool cond1prime;        // (b-d)^2 > b-1 (conjectured optimal; report only)
    bool a2r23[5];
    bool any_sufficient;
    bool r2ineq_applicable; // 2d > b
    bool r2ineq_equivalent; // cond2 evaluated both ways agrees
};
BoundCDReport bound_cD(const FractionTriple& t);

// Partial-sum lower bound for c(D/d):
//   ( D * sum_{i<=k} (a_i - r_i) beta^(k-i) + r_{k+1} ) / beta^k,
// which equals the k-digit partial sum of c(D/d) exactly.
Rat poscutoff_lower(const FractionTriple& t, std::size_t k);

}  // namespace ng
