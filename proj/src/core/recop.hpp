#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/content.hpp"
#include "core/poly.hpp"
#include "core/witness.hpp"

namespace ng {

// Companion of the linear recurrence s_n = a_1 s_{n-1} + ... + a_d s_{n-d},
// stored in recurrence sign convention.  The associated polynomial is
// X^d - a_1 X^{d-1} - ... - a_d; rendering in that "operator polynomial"
// convention negates the stored coefficients and is labeled as such.
struct CompanionPoly {
    CoeffRing ring;
    std::vector<Poly> rec;  // rec[i-1] = a_i, i = 1..d

    static CompanionPoly from_rec(const CoeffRing& ring, std::vector<Poly> rec);
    // From the coefficients c_1..c_d of X^d + c_1 X^{d-1} + ... + c_d
    // (the convention most displayed polynomials use): a_i = -c_i.
    static CompanionPoly from_poly_form(const CoeffRing& ring, std::vector<Poly> poly_coeffs);

    std::uint32_t order() const { return static_cast<std::uint32_t>(rec.size()); }
    void validate() const;

    std::string to_string_rec() const;   // "s_n = a_1 s_(n-1) + ..." right-hand side
    std::string to_string_poly() const;  // "X^d - a_1 X^(d-1) - ..."

    bool operator==(const CompanionPoly& o) const { return ring == o.ring && rec == o.rec; }
};

// Bivariate view: index = power of X, entry = coefficient in y.  Used for
// textbook cross-checks (powers, cofactor products).
using XPoly = std::vector<Poly>;
XPoly xpoly_from_companion(const CompanionPoly& P);
CompanionPoly companion_from_xpoly(const CoeffRing& ring, const XPoly& f);
XPoly xpoly_mul(const XPoly& a, const XPoly& b, const CoeffRing& ring);
std::string xpoly_to_string(const XPoly& f, const std::string& xvar = "X",
                            const std::string& yvar = "y");

// Shape classification of a companion.
struct ShapeInfo {
    bool filtered = false;          // deg a_i <= i for all i
    Scalar yd_coeff;                // coefficient of y^d in a_d
    std::uint32_t empty_middle_D = 0;  // largest D with every term besides
                                       // X^d and a*y^d of total degree <= d-D
    ShapeInfo() : yd_coeff(Scalar::zero(CoeffRing::rationals())) {}
};
ShapeInfo shape_info(const CompanionPoly& P);

// T acting on R[y]: T(y^n) follows the companion recurrence for n >= d and
// the initial images below.  Memo is append-only and reproducible; clone
// operators across workers rather than sharing one.
class RecursionOperator {
  public:
    RecursionOperator(CompanionPoly companion, std::vector<Poly> initial);

    const CompanionPoly& companion() const { return comp_; }
    const CoeffRing& ring() const { return comp_.ring; }
    const std::vector<Poly>& initial() const { return initial_; }
    const ShapeInfo& shape() const { return shape_; }

    // deg initial[i] < i for all i together with filtered: by induction
    // deg T(y^n) <= n - E for all n, E the minimal gap.
    bool degree_lowering() const { return lowering_; }
    std::uint32_t lowering_gap() const;  // E >= 1; fails without certificate

    // By value: the memo grows on demand and references into it would not
    // survive a later call with larger n.
    Poly image_of_basis(std::uint64_t n) const;
    Poly apply(const Poly& f) const;

  private:
    void grow_memo(std::uint64_t n) const;

    CompanionPoly comp_;
    std::vector<Poly> initial_;
    ShapeInfo shape_;
    bool lowering_;
    std::uint32_t gap_;
    mutable std::vector<Poly> memo_;
};

RecursionOperator make_operator(CompanionPoly companion, std::vector<Poly> initial);

// N_T(f) = max{k >= 0 : T^k f != 0}; NEG_INF for f = 0.  Requires the
// degree-lowering certificate (termination proof); without it use the
// step-bounded variant below.
Deg nilpotence_index(const RecursionOperator& T, const Poly& f);

struct BoundedNilpotence {
    bool resolved = false;
    Deg value = Deg::neg_inf();   // meaningful when resolved
    std::uint64_t steps_used = 0;
};
BoundedNilpotence nilpotence_index_bounded(const RecursionOperator& T, const Poly& f,
                                           std::uint64_t max_steps);

// N_T(y^n) for all n <= n_max in one sweep.  Over Z/p with p <= 251 a dense
// byte-matrix scan is used; other rings fall back to the generic path.
std::vector<Deg> nilpotence_of_powers(const RecursionOperator& T, std::uint64_t n_max);

// Companion of T^(p^k): rec coefficient a_i^(p^k) at lag i*p^k.
CompanionPoly frobenius_power(const CompanionPoly& P, std::uint32_t k);

// Homogeneous cofactor S with H*S = X^e - y^e, H the top form of P.
// s[i] is the coefficient of X^i y^(e-d-i).
struct Cofactor {
    std::vector<std::uint64_t> s;
    std::uint64_t e = 0;
    std::uint64_t q = 0;   // p^(lcm of irreducible factor degrees of h)
    std::uint64_t m = 0;   // minimal with q^m >= max root multiplicity
    std::string to_string(const std::string& xvar = "X", const std::string& yvar = "y") const;
};
Cofactor empty_middle_cofactor(const CompanionPoly& P);

// Exact scan of the product P*S without materializing a dense order-e
// companion: reports the leading block and the maximal total degree among
// middle terms, per X-power, in O(e d^2) ring operations.
struct CofactorProductShape {
    bool leading_ok = false;        // X^e present with coefficient 1
    std::uint64_t y_e_coeff = 0;    // coefficient of y^e
    std::uint64_t max_middle_total_degree = 0;  // over all other terms
    std::uint64_t empty_middle_D = 0;           // e - max_middle_total_degree
};
CofactorProductShape cofactor_product_shape(const CompanionPoly& P, const Cofactor& S);

// Verifies cbar(T(y^n)) < c(n) for 1 <= n <= N, cbar = poly_content under
// the witness of t.  Preconditions: shape D >= t.D and char | b.
struct DecreaseReport {
    bool ok = true;
    std::uint64_t first_violation_n = 0;
    PolyContent lhs;     // cbar(T(y^n)) at the violation
    NonNegRational rhs;  // c(n) at the violation
};
DecreaseReport content_decrease_check(const RecursionOperator& T, const FractionTriple& t,
                                      std::uint64_t N);

// log(max N_T over the range) / log n_max; decimals are presentation-only.
struct AlphaEstimate {
    std::vector<std::pair<std::uint64_t, std::int64_t>> samples;  // (n, N_T), -1 for NEG_INF
    double alpha_hat = 0.0;
};
AlphaEstimate alpha_estimate(const RecursionOperator& T, std::uint64_t n_max);

// Exact comparison N <= ((q-D)(q-1)/(E(q-D-1))) * n^(log(q-D)/log q) by
// cross-multiplication at rational exponent approximants u/v of
// alpha = log(q-D)/log q chosen from below (proof direction) and above
// (refutation direction), escalating v until one side resolves.
enum class BoundVerdict { holds, violated, unresolved };
BoundVerdict refined_bound_check(std::uint64_t N, std::uint64_t n, std::uint64_t q,
                                 std::uint64_t D, std::uint64_t E,
                                 std::uint32_t v_cap = 1u << 16);

}  // namespace ng
