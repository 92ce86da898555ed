#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/recop.hpp"

namespace ng {

// Mod-p q-expansions (p in {2, 3}) with explicit precision: a[n] is the
// coefficient of q^n, reduced mod p.  Combining two expansions truncates
// to the smaller precision.
struct QExpansion {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> a;

    std::uint64_t precision() const { return a.size(); }
    bool is_zero() const;
};

// q * prod_(n>=1) (1 - q^n)^24 mod p, truncated to N coefficients
// (indices 0..N-1), by direct truncated product.
QExpansion delta_qexp(std::uint64_t p, std::uint64_t N);

// Same series through Euler's pentagonal-number expansion of
// prod (1 - q^n), then four squarings and a product: an independent
// oracle route for testing delta_qexp.
QExpansion delta_qexp_pentagonal(std::uint64_t p, std::uint64_t N);

// File-backed wrapper: reuses cache_dir/delta-p<p>.txt when it holds at
// least N coefficients, recomputing and rewriting otherwise.  Unreadable
// or mismatched files are recomputed; results are identical either way.
QExpansion delta_qexp_cached(std::uint64_t p, std::uint64_t N, const std::string& cache_dir);

// Optional process-wide cache directory consulted by every internal Delta
// expansion (empty = always compute in memory).  Set once at startup, before
// concurrent use; the cache changes speed only, never results.
void set_delta_cache_dir(std::string dir);
const std::string& delta_cache_dir();

QExpansion qexp_add(const QExpansion& f, const QExpansion& g);
QExpansion qexp_mul(const QExpansion& f, const QExpansion& g);
QExpansion qexp_scale(const QExpansion& f, std::uint64_t c);

// Level-one Hecke action on q-expansions:
//   a_n(T_ell f) = a_(ell*n)(f) + ell^(weight-1) * a_(n/ell)(f),
// the second term only when ell | n; output precision floor(N/ell).
// weight 0 uses ell^(-1) mod p.  ell = p degenerates to tp_apply_qexp
// (the second term's coefficient vanishes mod p for weight >= 2 and the
// divisibility rule never fires otherwise).
QExpansion hecke_apply_qexp(const QExpansion& f, std::uint64_t ell, std::int64_t weight);

// U_p/T_p on mod-p expansions: a_n -> a_(p*n); output precision floor(N/p).
QExpansion tp_apply_qexp(const QExpansion& f);

// Inverts f = sum_i g_i Delta^i by triangular elimination against the
// leading terms Delta^n = q^n + higher, allowing degrees up to max_degree
// (default: precision - 1).  A nonzero residual means f is not a
// polynomial in Delta of that degree at this precision -> error.
Poly qexp_to_delta_poly(const QExpansion& f,
                        std::uint64_t max_degree = static_cast<std::uint64_t>(-1));

// T_ell(Delta^n) (or T_ell' = T_ell - a_ell(Delta) when modified) as
// polynomials in Delta for 0 <= n <= n_max, computed from q-expansions
// alone: the oracle route, independent of any recurrence.
std::vector<Poly> hecke_oracle_images(std::uint64_t p, std::uint64_t ell, bool modified,
                                      std::uint64_t n_max);

// A Hecke operator in recursion-operator form: companion from the printed
// table, initial values T_ell'(Delta^0..Delta^(d-1)) from the oracle.
struct HeckeOp {
    std::uint64_t p;
    std::uint64_t ell;
    bool modified;  // operator is T_ell' != T_ell (only (3,7): a_7(Delta) = 2)
    RecursionOperator as_recursion;
};

// Supported pairs: (2,3), (2,5), (3,2), (3,7).
HeckeOp hecke_recursion_operator(std::uint64_t p, std::uint64_t ell);

// The order-8 companion P5' = P5 * (X^2 + Delta^2) = X^8 + Delta X^3 +
// Delta^3 X + Delta^8 for T_5 mod 2, with oracle initial values; its
// empty-middle gap is 4 (P5 itself has none).
RecursionOperator hecke_p5prime_operator();

// The order-8 recurrence satisfied by plain T_7 mod 3 (the order-9 P_7
// for T_7' has an extra factor of X - Delta); cross-checked by exact
// division.  Plain T_7 is not degree-lowering (T_7 = T_7' + 2*id).
RecursionOperator hecke_t7_order8_operator();

// Recurrence-vs-oracle comparison over d <= n <= n_max.
struct RecursionVerdict {
    std::uint32_t order = 0;
    std::uint64_t n_max = 0;
    std::uint64_t first_valid_n = 0;  // smallest n0 with the recurrence true on [n0, n_max]
    std::uint64_t first_fail_n = 0;   // smallest failing n >= order; 0 when none fail
    bool ok_from_order() const { return first_fail_n == 0; }
};

RecursionVerdict verify_companion_against_oracle(const CompanionPoly& comp, std::uint64_t p,
                                                 std::uint64_t ell, bool modified,
                                                 std::uint64_t n_max);
RecursionVerdict verify_hecke_recursion(std::uint64_t p, std::uint64_t ell, std::uint64_t n_max);

// t_p(Delta^n) = 0 exactly when p does not divide n (and equals
// Delta^(n/p) otherwise), for 1 <= n <= n_max at working precision.
struct KernelVerdict {
    bool ok = true;
    std::uint64_t first_violation_n = 0;
    std::string detail;
};
KernelVerdict kernel_check(std::uint64_t p, std::uint64_t n_max);

// Joint nilpotence N(Delta^n) = N_T(Delta^n) + N_S(Delta^n) over the
// kernel basis (p does not divide n), with (T, S) = (T_3, T_5) for p = 2
// and (T_2, T_7') for p = 3.
struct JointRow {
    std::uint64_t n;
    std::int64_t nt;
    std::int64_t ns;
    std::int64_t total;
};
std::vector<JointRow> joint_nilpotence(std::uint64_t p, std::uint64_t n_max);

// #{rows : total >= k}; non-increasing in k.
std::uint64_t hilbert_samuel_count(const std::vector<JointRow>& table, std::int64_t k);

// JSON document with counts for k in [k_min, k_max] and a least-squares
// fit of log count against log k, labeled diagnostic.
std::string hilbert_samuel_summary_json(const std::vector<JointRow>& table, std::int64_t k_min,
                                        std::int64_t k_max);

}  // namespace ng
