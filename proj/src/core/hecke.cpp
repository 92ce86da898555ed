#include "core/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <utility>

#include "json.hpp"

#include "core/error.hpp"
#include "core/ring.hpp"

namespace ng {

namespace {

void require_p(std::uint64_t p) {
    if (p != 2 && p != 3) fail_domain("q-expansion characteristic must be 2 or 3");
}

void require_same(const QExpansion& f, const QExpansion& g) {
    if (f.p != g.p) fail_domain("q-expansion characteristic mismatch");
}

// Truncated product of residue vectors.  Residues are < p <= 3, so raw
// partial sums stay far below 2^64; one reduction per output coefficient.
std::vector<std::uint64_t> trunc_mul(const std::vector<std::uint64_t>& A,
                                     const std::vector<std::uint64_t>& B, std::uint64_t M,
                                     std::uint64_t p) {
    std::vector<std::uint64_t> C(M, 0);
    std::uint64_t ilim = std::min<std::uint64_t>(M, A.size());
    for (std::uint64_t i = 0; i < ilim; ++i) {
        std::uint64_t ai = A[i];
        if (!ai) continue;
        std::uint64_t jlim = std::min<std::uint64_t>(B.size(), M - i);
        const std::uint64_t* b = B.data();
        std::uint64_t* c = C.data() + i;
        for (std::uint64_t j = 0; j < jlim; ++j) c[j] += ai * b[j];
    }
    for (auto& v : C) v %= p;
    return C;
}

// powers[k] = Delta^k to at least work.size() coefficients.  Peels leading
// terms bottom-up (Delta^n = q^n + higher, so coefficient n is exposed once
// lower degrees are gone); any residual means no Delta-polynomial of degree
// <= max_degree matches at this precision.
Poly eliminate_delta(std::vector<std::uint64_t> work, std::uint64_t p,
                     const std::vector<std::vector<std::uint64_t>>& powers,
                     std::uint64_t max_degree) {
    std::uint64_t prec = work.size();
    std::vector<std::uint64_t> coeffs(max_degree + 1, 0);
    for (std::uint64_t n = 0; n <= max_degree && n < prec; ++n) {
        std::uint64_t g = work[n];
        if (!g) continue;
        coeffs[n] = g;
        std::uint64_t neg = p - g;
        const auto& pw = powers[n];
        for (std::uint64_t i = n; i < prec; ++i) work[i] = (work[i] + neg * pw[i]) % p;
    }
    for (std::uint64_t i = 0; i < prec; ++i)
        if (work[i]) fail_domain("not a polynomial in Delta at this precision");
    return Poly::from_mod(p, std::move(coeffs));
}

// Delta^0..Delta^(n_max) at the given precision, computed once per call and
// shared read-only by everything downstream.
std::vector<QExpansion> delta_power_table(const QExpansion& delta, std::uint64_t n_max) {
    std::vector<QExpansion> pw(n_max + 1);
    pw[0].p = delta.p;
    pw[0].a.assign(delta.a.size(), 0);
    if (!pw[0].a.empty()) pw[0].a[0] = 1;
    for (std::uint64_t k = 1; k <= n_max; ++k) pw[k] = qexp_mul(pw[k - 1], delta);
    return pw;
}

CompanionPoly hecke_companion(std::uint64_t p, std::uint64_t ell) {
    CoeffRing R = CoeffRing::integers_mod(p);
    auto yk = [&R](std::size_t k) { return Poly::y_power(R, k); };
    if (p == 2 && ell == 3) {
        // X^4 + Delta*X + Delta^4
        std::vector<Poly> c(4, Poly::zero(R));
        c[2] = yk(1);
        c[3] = yk(4);
        return CompanionPoly::from_poly_form(R, std::move(c));
    }
    if (p == 2 && ell == 5) {
        // X^6 + Delta^2*X^4 + Delta^4*X^2 + Delta*X + Delta^6
        std::vector<Poly> c(6, Poly::zero(R));
        c[1] = yk(2);
        c[3] = yk(4);
        c[4] = yk(1);
        c[5] = yk(6);
        return CompanionPoly::from_poly_form(R, std::move(c));
    }
    if (p == 3 && ell == 2) {
        // X^3 - Delta*X + Delta^3
        std::vector<Poly> c(3, Poly::zero(R));
        c[1] = -yk(1);
        c[2] = yk(3);
        return CompanionPoly::from_poly_form(R, std::move(c));
    }
    if (p == 3 && ell == 7) {
        // X^9 - Delta*X^5 - Delta^2*X^4 + (Delta^4 - Delta)*X^2
        //     + (Delta^5 + Delta^2)*X - Delta^9
        std::vector<Poly> c(9, Poly::zero(R));
        c[3] = -yk(1);
        c[4] = -yk(2);
        c[6] = yk(4) - yk(1);
        c[7] = yk(5) + yk(2);
        c[8] = -yk(9);
        return CompanionPoly::from_poly_form(R, std::move(c));
    }
    fail_domain("supported (p, ell) pairs: (2,3), (2,5), (3,2), (3,7)");
}

bool is_modified_pair(std::uint64_t p, std::uint64_t ell) {
    // tau(7) = -16744 = 2 mod 3, so only T_7 needs the a_ell(Delta)*id
    // subtraction; tau(2), tau(3), tau(5) vanish mod the relevant p.
    return p == 3 && ell == 7;
}

std::string g_delta_cache_dir;

// Internal Delta expansions honor the optional cache directory.
QExpansion delta_series(std::uint64_t p, std::uint64_t N) {
    return g_delta_cache_dir.empty() ? delta_qexp(p, N)
                                     : delta_qexp_cached(p, N, g_delta_cache_dir);
}

}  // namespace

void set_delta_cache_dir(std::string dir) { g_delta_cache_dir = std::move(dir); }

const std::string& delta_cache_dir() { return g_delta_cache_dir; }

bool QExpansion::is_zero() const {
    for (std::uint64_t v : a)
        if (v) return false;
    return true;
}

QExpansion delta_qexp(std::uint64_t p, std::uint64_t N) {
    require_p(p);
    if (N < 2) fail_domain("Delta expansion needs precision >= 2");
    // Delta = q * prod (1-q^n)^24; build the product to N-1 coefficients.
    std::uint64_t M = N - 1;
    std::vector<std::uint64_t> f(M, 0);
    f[0] = 1;
    // (1-q^n)^24 = sum_j binom(24,j) (-1)^j q^(j*n); binom(24,12) = 2704156.
    std::uint64_t term[25];
    std::uint64_t binom = 1;
    term[0] = 1 % p;
    for (std::uint64_t j = 1; j <= 24; ++j) {
        binom = binom * (25 - j) / j;
        std::uint64_t c = binom % p;
        term[j] = (j % 2 == 1) ? (p - c) % p : c;
    }
    for (std::uint64_t n = 1; n < M; ++n) {
        // In-place multiply, descending index: f[k - j*n] is still the
        // pre-multiplication value when k is processed.
        for (std::uint64_t k = M; k-- > n;) {
            std::uint64_t acc = f[k];
            for (std::uint64_t j = 1; j <= 24 && j * n <= k; ++j) acc += term[j] * f[k - j * n];
            f[k] = acc % p;
        }
    }
    QExpansion out;
    out.p = p;
    out.a.assign(N, 0);
    for (std::uint64_t i = 0; i < M; ++i) out.a[i + 1] = f[i];
    return out;
}

QExpansion delta_qexp_pentagonal(std::uint64_t p, std::uint64_t N) {
    require_p(p);
    if (N < 2) fail_domain("Delta expansion needs precision >= 2");
    std::uint64_t M = N - 1;
    // prod (1-q^n) = sum_(k in Z) (-1)^k q^(k(3k-1)/2)
    std::vector<std::uint64_t> E(M, 0);
    E[0] = 1;
    for (std::uint64_t k = 1;; ++k) {
        std::uint64_t gpos = k * (3 * k - 1) / 2;  // index k
        std::uint64_t gneg = k * (3 * k + 1) / 2;  // index -k
        if (gpos >= M && gneg >= M) break;
        std::uint64_t s = (k % 2 == 1) ? p - 1 : 1;
        if (gpos < M) E[gpos] = (E[gpos] + s) % p;
        if (gneg < M) E[gneg] = (E[gneg] + s) % p;
    }
    auto E2 = trunc_mul(E, E, M, p);
    auto E4 = trunc_mul(E2, E2, M, p);
    auto E8 = trunc_mul(E4, E4, M, p);
    auto E16 = trunc_mul(E8, E8, M, p);
    auto E24 = trunc_mul(E16, E8, M, p);
    QExpansion out;
    out.p = p;
    out.a.assign(N, 0);
    for (std::uint64_t i = 0; i < M; ++i) out.a[i + 1] = E24[i];
    return out;
}

QExpansion delta_qexp_cached(std::uint64_t p, std::uint64_t N, const std::string& cache_dir) {
    require_p(p);
    if (N < 2) fail_domain("Delta expansion needs precision >= 2");
    namespace fs = std::filesystem;
    fs::path file = fs::path(cache_dir) / ("delta-p" + std::to_string(p) + ".txt");
    {
        std::ifstream in(file);
        std::uint64_t fp = 0, fn = 0;
        if (in && (in >> fp >> fn) && fp == p && fn >= N) {
            QExpansion out;
            out.p = p;
            out.a.assign(N, 0);
            bool good = true;
            for (std::uint64_t i = 0; i < N && good; ++i) {
                std::uint64_t v = 0;
                if ((in >> v) && v < p)
                    out.a[i] = v;
                else
                    good = false;
            }
            if (good) return out;
        }
    }
    // Miss, short file, or corruption: recompute and rewrite.  Failures
    // writing are ignored -- the cache only affects speed.
    QExpansion out = delta_qexp(p, N);
    std::error_code ec;
    fs::create_directories(fs::path(cache_dir), ec);
    std::ofstream os(file, std::ios::trunc);
    if (os) {
        os << p << ' ' << N << '\n';
        for (std::uint64_t i = 0; i < N; ++i) os << out.a[i] << (i + 1 == N ? '\n' : ' ');
    }
    return out;
}

QExpansion qexp_add(const QExpansion& f, const QExpansion& g) {
    require_same(f, g);
    QExpansion out;
    out.p = f.p;
    std::uint64_t n = std::min(f.a.size(), g.a.size());
    out.a.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) out.a[i] = mod_add(f.a[i], g.a[i], f.p);
    return out;
}

QExpansion qexp_mul(const QExpansion& f, const QExpansion& g) {
    require_same(f, g);
    QExpansion out;
    out.p = f.p;
    std::uint64_t n = std::min(f.a.size(), g.a.size());
    out.a = trunc_mul(f.a, g.a, n, f.p);
    return out;
}

QExpansion qexp_scale(const QExpansion& f, std::uint64_t c) {
    QExpansion out;
    out.p = f.p;
    c %= f.p;
    out.a.resize(f.a.size());
    for (std::uint64_t i = 0; i < f.a.size(); ++i) out.a[i] = mod_mul(c, f.a[i], f.p);
    return out;
}

QExpansion tp_apply_qexp(const QExpansion& f) {
    require_p(f.p);
    QExpansion out;
    out.p = f.p;
    std::uint64_t nout = f.a.size() / f.p;
    out.a.resize(nout);
    for (std::uint64_t n = 0; n < nout; ++n) out.a[n] = f.a[f.p * n];
    return out;
}

QExpansion hecke_apply_qexp(const QExpansion& f, std::uint64_t ell, std::int64_t weight) {
    require_p(f.p);
    if (ell < 2) fail_domain("Hecke index must be a prime >= 2");
    if (ell % f.p == 0) {
        // ell = p collapses to U_p: the ell^(weight-1) a_(n/ell) term has
        // coefficient 0 mod p for weight >= 1 and no meaning at weight 0.
        if (ell != f.p) fail_domain("Hecke index divisible by p must equal p");
        return tp_apply_qexp(f);
    }
    std::uint64_t p = f.p;
    std::uint64_t base = ell % p;
    std::uint64_t c = weight >= 1
                          ? mod_pow(base, static_cast<std::uint64_t>(weight - 1), p)
                          : mod_pow(mod_inverse(base, p), static_cast<std::uint64_t>(1 - weight), p);
    QExpansion out;
    out.p = p;
    std::uint64_t nout = f.a.size() / ell;
    out.a.resize(nout);
    for (std::uint64_t n = 0; n < nout; ++n) {
        std::uint64_t v = f.a[ell * n];
        if (n % ell == 0) v = mod_add(v, mod_mul(c, f.a[n / ell], p), p);
        out.a[n] = v;
    }
    return out;
}

Poly qexp_to_delta_poly(const QExpansion& f, std::uint64_t max_degree) {
    require_p(f.p);
    std::uint64_t prec = f.precision();
    if (max_degree == static_cast<std::uint64_t>(-1)) max_degree = prec == 0 ? 0 : prec - 1;
    std::vector<std::vector<std::uint64_t>> powers(max_degree + 1);
    powers[0].assign(prec, 0);
    if (prec > 0) powers[0][0] = 1;
    if (max_degree >= 1 && prec >= 1) {
        QExpansion delta = delta_series(f.p, std::max<std::uint64_t>(prec, 2));
        delta.a.resize(prec);
        for (std::uint64_t k = 1; k <= max_degree; ++k)
            powers[k] = trunc_mul(powers[k - 1], delta.a, prec, f.p);
    } else {
        for (std::uint64_t k = 1; k <= max_degree; ++k) powers[k].assign(prec, 0);
    }
    return eliminate_delta(f.a, f.p, powers, max_degree);
}

std::vector<Poly> hecke_oracle_images(std::uint64_t p, std::uint64_t ell, bool modified,
                                      std::uint64_t n_max) {
    require_p(p);
    if (ell < 2) fail_domain("Hecke index must be a prime >= 2");
    // Output precision carries ~9 surplus coefficients past the largest
    // possible image degree, so the elimination residual check has teeth;
    // the input precision is chosen backward from it.
    std::uint64_t out_prec = n_max + 9;
    std::uint64_t in_prec = ell * out_prec;
    QExpansion delta = delta_series(p, in_prec);
    std::vector<QExpansion> pw = delta_power_table(delta, n_max);
    std::vector<std::vector<std::uint64_t>> small(n_max + 1);
    for (std::uint64_t k = 0; k <= n_max; ++k)
        small[k].assign(pw[k].a.begin(), pw[k].a.begin() + out_prec);
    std::uint64_t a_ell = ell < delta.a.size() ? delta.a[ell] : 0;  // tau(ell) mod p
    std::vector<Poly> out;
    out.reserve(n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        // Delta^n has weight 12n; n = 0 exercises the weight-0 inverse.
        QExpansion img = hecke_apply_qexp(pw[n], ell, static_cast<std::int64_t>(12 * n));
        if (modified && a_ell)  // T' = T - a_ell(Delta) * id
            img = qexp_add(img, qexp_scale(pw[n], p - a_ell));
        if (img.a.size() > out_prec) img.a.resize(out_prec);
        out.push_back(eliminate_delta(img.a, p, small, n));
    }
    return out;
}

HeckeOp hecke_recursion_operator(std::uint64_t p, std::uint64_t ell) {
    CompanionPoly comp = hecke_companion(p, ell);
    bool modified = is_modified_pair(p, ell);
    std::uint32_t d = comp.order();
    std::vector<Poly> init = hecke_oracle_images(p, ell, modified, d - 1);
    return HeckeOp{p, ell, modified, RecursionOperator(std::move(comp), std::move(init))};
}

RecursionOperator hecke_p5prime_operator() {
    CoeffRing R = CoeffRing::integers_mod(2);
    // Printed form X^8 + Delta*X^3 + Delta^3*X + Delta^8 ...
    std::vector<Poly> c(8, Poly::zero(R));
    c[4] = Poly::y_power(R, 1);
    c[6] = Poly::y_power(R, 3);
    c[7] = Poly::y_power(R, 8);
    CompanionPoly printed = CompanionPoly::from_poly_form(R, std::move(c));
    // ... must agree with the defining product P5 * (X^2 + Delta^2).
    XPoly factor(3, Poly::zero(R));
    factor[0] = Poly::y_power(R, 2);
    factor[2] = Poly::constant(R, Scalar::one(R));
    XPoly prod = xpoly_mul(xpoly_from_companion(hecke_companion(2, 5)), factor, R);
    CompanionPoly derived = companion_from_xpoly(R, prod);
    check_internal(derived == printed, "P5*(X^2+Delta^2) disagrees with its printed expansion");
    std::vector<Poly> init = hecke_oracle_images(2, 5, false, 7);
    return RecursionOperator(std::move(printed), std::move(init));
}

RecursionOperator hecke_t7_order8_operator() {
    CoeffRing R = CoeffRing::integers_mod(3);
    // The order-9 companion annihilates T_7' and the identity separately
    // (X - Delta is a factor); dividing it out leaves the minimal-order
    // recurrence satisfied by plain T_7 images.
    XPoly f = xpoly_from_companion(hecke_companion(3, 7));  // f[9] = 1
    Poly yv = Poly::y_power(R, 1);
    XPoly q(9, Poly::zero(R));
    q[8] = f[9];
    for (std::uint64_t k = 8; k >= 1; --k) q[k - 1] = f[k] + yv * q[k];
    Poly rem = f[0] + yv * q[0];
    check_internal(rem.is_zero(), "X - Delta does not divide the order-9 companion");
    XPoly lin(2, Poly::zero(R));
    lin[0] = -yv;
    lin[1] = Poly::constant(R, Scalar::one(R));
    check_internal(xpoly_mul(lin, q, R) == f, "(X - Delta) * quotient fails to restore P_7");
    CompanionPoly p8 = companion_from_xpoly(R, q);
    std::vector<Poly> init = hecke_oracle_images(3, 7, false, 7);  // plain T_7
    return RecursionOperator(std::move(p8), std::move(init));
}

RecursionVerdict verify_companion_against_oracle(const CompanionPoly& comp, std::uint64_t p,
                                                 std::uint64_t ell, bool modified,
                                                 std::uint64_t n_max) {
    comp.validate();
    if (!(comp.ring == CoeffRing::integers_mod(p))) fail_domain("companion ring must be Z/p");
    std::uint32_t d = comp.order();
    if (n_max < d) fail_domain("n_max is below the recurrence order");
    std::vector<Poly> img = hecke_oracle_images(p, ell, modified, n_max);
    RecursionVerdict v;
    v.order = d;
    v.n_max = n_max;
    std::uint64_t last_fail = 0;
    for (std::uint64_t n = d; n <= n_max; ++n) {
        Poly rhs = Poly::zero(comp.ring);
        for (std::uint32_t i = 1; i <= d; ++i) rhs = rhs + comp.rec[i - 1] * img[n - i];
        if (!(rhs == img[n])) {
            if (v.first_fail_n == 0) v.first_fail_n = n;
            last_fail = n;
        }
    }
    v.first_valid_n = last_fail == 0 ? d : last_fail + 1;  // n_max+1: never valid in range
    return v;
}

RecursionVerdict verify_hecke_recursion(std::uint64_t p, std::uint64_t ell, std::uint64_t n_max) {
    return verify_companion_against_oracle(hecke_companion(p, ell), p, ell,
                                           is_modified_pair(p, ell), n_max);
}

KernelVerdict kernel_check(std::uint64_t p, std::uint64_t n_max) {
    require_p(p);
    if (n_max < 1) fail_domain("n_max must be >= 1");
    std::uint64_t out_prec = n_max + 2;
    QExpansion delta = delta_series(p, p * out_prec);
    std::vector<QExpansion> pw = delta_power_table(delta, n_max);
    KernelVerdict v;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        QExpansion up = tp_apply_qexp(pw[n]);
        if (n % p == 0) {
            // On p | n the image is exactly Delta^(n/p) (coefficientwise
            // Frobenius is trivial over F_p), not merely nonzero.
            bool eq = true;
            const auto& ref = pw[n / p].a;
            for (std::uint64_t i = 0; i < up.a.size() && eq; ++i)
                if (up.a[i] != ref[i]) eq = false;
            if (!eq) {
                v.ok = false;
                v.first_violation_n = n;
                v.detail = "t_p(Delta^n) != Delta^(n/p) at n = " + std::to_string(n);
                return v;
            }
        } else if (!up.is_zero()) {
            v.ok = false;
            v.first_violation_n = n;
            v.detail = "t_p(Delta^n) != 0 off the kernel at n = " + std::to_string(n);
            return v;
        }
    }
    return v;
}

std::vector<JointRow> joint_nilpotence(std::uint64_t p, std::uint64_t n_max) {
    require_p(p);
    HeckeOp T = p == 2 ? hecke_recursion_operator(2, 3) : hecke_recursion_operator(3, 2);
    HeckeOp S = p == 2 ? hecke_recursion_operator(2, 5) : hecke_recursion_operator(3, 7);
    std::vector<Deg> nt = nilpotence_of_powers(T.as_recursion, n_max);
    std::vector<Deg> ns = nilpotence_of_powers(S.as_recursion, n_max);
    auto val = [](const Deg& d) { return d.is_neg_inf() ? std::int64_t{-1} : d.value(); };
    std::vector<JointRow> rows;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n % p == 0) continue;
        rows.push_back(JointRow{n, val(nt[n]), val(ns[n]), val(nt[n]) + val(ns[n])});
    }
    return rows;
}

std::uint64_t hilbert_samuel_count(const std::vector<JointRow>& table, std::int64_t k) {
    std::uint64_t c = 0;
    for (const JointRow& r : table)
        if (r.total >= k) ++c;
    return c;
}

std::string hilbert_samuel_summary_json(const std::vector<JointRow>& table, std::int64_t k_min,
                                        std::int64_t k_max) {
    if (k_min > k_max) fail_domain("empty threshold range");
    nlohmann::ordered_json doc;
    doc["rows"] = table.size();
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::uint64_t m = 0;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        std::uint64_t c = hilbert_samuel_count(table, k);
        counts.push_back({{"k", k}, {"count", c}});
        if (k >= 1 && c >= 1) {
            double x = std::log(static_cast<double>(k));
            double y = std::log(static_cast<double>(c));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
    }
    doc["counts"] = std::move(counts);
    double den = static_cast<double>(m) * sxx - sx * sx;
    if (m >= 2 && den != 0.0) {
        // count(k) ~ C * k^s by least squares on the log-log points; a
        // diagnostic readout, never an assertion.
        double slope = (static_cast<double>(m) * sxy - sx * sy) / den;
        doc["fit"] = {{"exponent_approx", slope}, {"label", "diagnostic"}};
    } else {
        doc["fit"] = nullptr;
    }
    return doc.dump(2);
}

}  // namespace ng
