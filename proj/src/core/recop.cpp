#include "core/recop.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/fpuni.hpp"

namespace ng {

CompanionPoly CompanionPoly::from_rec(const CoeffRing& ring, std::vector<Poly> rec) {
    CompanionPoly p{ring, std::move(rec)};
    p.validate();
    return p;
}

CompanionPoly CompanionPoly::from_poly_form(const CoeffRing& ring, std::vector<Poly> poly_coeffs) {
    for (Poly& c : poly_coeffs) c = -c;
    return from_rec(ring, std::move(poly_coeffs));
}

void CompanionPoly::validate() const {
    if (rec.empty()) fail_domain("companion needs order d >= 1");
    for (const Poly& a : rec) require_same_ring(ring, a.ring());
}

std::string CompanionPoly::to_string_rec() const {
    std::string out;
    for (std::size_t i = 0; i < rec.size(); ++i) {
        if (rec[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + rec[i].to_string() + ")*s_(n-" + std::to_string(i + 1) + ")";
    }
    return out.empty() ? "0" : out;
}

std::string CompanionPoly::to_string_poly() const {
    std::string out = "X^" + std::to_string(rec.size());
    for (std::size_t i = 0; i < rec.size(); ++i) {
        if (rec[i].is_zero()) continue;
        std::size_t xp = rec.size() - 1 - i;
        out += " - (" + rec[i].to_string() + ")";
        if (xp >= 2)
            out += "*X^" + std::to_string(xp);
        else if (xp == 1)
            out += "*X";
    }
    return out;
}

XPoly xpoly_from_companion(const CompanionPoly& P) {
    std::uint32_t d = P.order();
    XPoly f(d + 1, Poly::zero(P.ring));
    f[d] = Poly::constant(P.ring, Scalar::one(P.ring));
    for (std::uint32_t i = 1; i <= d; ++i) f[d - i] = -P.rec[i - 1];
    return f;
}

CompanionPoly companion_from_xpoly(const CoeffRing& ring, const XPoly& f) {
    if (f.empty() || f.back() != Poly::constant(ring, Scalar::one(ring)))
        fail_domain("companion conversion needs monic leading X coefficient");
    std::size_t d = f.size() - 1;
    std::vector<Poly> rec;
    rec.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) rec.push_back(-f[d - i]);
    return CompanionPoly::from_rec(ring, std::move(rec));
}

XPoly xpoly_mul(const XPoly& a, const XPoly& b, const CoeffRing& ring) {
    if (a.empty() || b.empty()) return {};
    XPoly out(a.size() + b.size() - 1, Poly::zero(ring));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

std::string xpoly_to_string(const XPoly& f, const std::string& xvar, const std::string& yvar) {
    std::string out;
    for (std::size_t k = f.size(); k-- > 0;) {
        if (f[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = f[k].to_string(yvar);
        bool trivial = (c == "1");
        if (k == 0) {
            out += c;
        } else {
            if (!trivial) out += "(" + c + ")*";
            out += xvar;
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

ShapeInfo shape_info(const CompanionPoly& P) {
    P.validate();
    std::uint32_t d = P.order();
    ShapeInfo info;
    info.filtered = true;
    info.yd_coeff = P.rec[d - 1].coeff(d);
    bool any_middle = false;
    std::uint64_t maxmid = 0;
    for (std::uint32_t i = 1; i <= d; ++i) {
        const Poly& a = P.rec[i - 1];
        if (a.degree() > Deg::of(i)) info.filtered = false;
        for (std::size_t u : a.support()) {
            if (i == d && u == d) continue;  // the a*y^d block
            any_middle = true;
            maxmid = std::max<std::uint64_t>(maxmid, u + (d - i));
        }
    }
    if (!any_middle) {
        info.empty_middle_D = d;
    } else {
        info.empty_middle_D = maxmid < d ? d - static_cast<std::uint32_t>(maxmid) : 0;
    }
    return info;
}

RecursionOperator::RecursionOperator(CompanionPoly companion, std::vector<Poly> initial)
    : comp_(std::move(companion)), initial_(std::move(initial)) {
    comp_.validate();
    if (initial_.size() != comp_.order())
        fail_domain("initial values: expected " + std::to_string(comp_.order()) + " polynomials, got " +
                    std::to_string(initial_.size()));
    for (const Poly& f : initial_) require_same_ring(comp_.ring, f.ring());
    shape_ = shape_info(comp_);
    lowering_ = shape_.filtered;
    std::uint32_t gap = comp_.order();
    for (std::size_t i = 0; i < initial_.size(); ++i) {
        Deg deg = initial_[i].degree();
        if (deg.is_neg_inf()) continue;
        if (deg >= Deg::of(static_cast<std::int64_t>(i))) {
            lowering_ = false;
            break;
        }
        gap = std::min<std::uint32_t>(gap,
                                      static_cast<std::uint32_t>(static_cast<std::int64_t>(i) -
                                                                 deg.value()));
    }
    gap_ = gap;
    memo_ = initial_;
}

std::uint32_t RecursionOperator::lowering_gap() const {
    if (!lowering_) fail_domain("operator has no degree-lowering certificate");
    return gap_;
}

void RecursionOperator::grow_memo(std::uint64_t n) const {
    std::uint32_t d = comp_.order();
    while (memo_.size() <= n) {
        std::size_t m = memo_.size();
        Poly img = Poly::zero(comp_.ring);
        for (std::uint32_t i = 1; i <= d; ++i) {
            if (comp_.rec[i - 1].is_zero()) continue;
            img = img + comp_.rec[i - 1] * memo_[m - i];
        }
        memo_.push_back(std::move(img));
    }
}

Poly RecursionOperator::image_of_basis(std::uint64_t n) const {
    grow_memo(n);
    return memo_[n];
}

Poly RecursionOperator::apply(const Poly& f) const {
    require_same_ring(comp_.ring, f.ring());
    Poly out = Poly::zero(comp_.ring);
    if (f.is_zero()) return out;
    grow_memo(static_cast<std::uint64_t>(f.degree().value()));
    for (std::size_t m : f.support()) {
        out = out + memo_[m].scaled(f.coeff(m));
    }
    return out;
}

RecursionOperator make_operator(CompanionPoly companion, std::vector<Poly> initial) {
    return RecursionOperator(std::move(companion), std::move(initial));
}

Deg nilpotence_index(const RecursionOperator& T, const Poly& f) {
    if (f.is_zero()) return Deg::neg_inf();
    if (!T.degree_lowering())
        fail_domain("nilpotence_index needs a degree-lowering certificate; "
                    "use nilpotence_index_bounded for exploratory runs");
    std::uint64_t guard = static_cast<std::uint64_t>(f.degree().value()) + 2;
    Poly g = f;
    std::uint64_t k = 0;
    while (!g.is_zero()) {
        g = T.apply(g);
        ++k;
        check_internal(k <= guard, "nilpotence loop exceeded the degree bound");
    }
    return Deg::of(static_cast<std::int64_t>(k - 1));
}

BoundedNilpotence nilpotence_index_bounded(const RecursionOperator& T, const Poly& f,
                                           std::uint64_t max_steps) {
    BoundedNilpotence out;
    if (f.is_zero()) {
        out.resolved = true;
        out.value = Deg::neg_inf();
        return out;
    }
    Poly g = f;
    for (std::uint64_t k = 0; k < max_steps; ++k) {
        g = T.apply(g);
        out.steps_used = k + 1;
        if (g.is_zero()) {
            out.resolved = true;
            out.value = Deg::of(static_cast<std::int64_t>(k));
            return out;
        }
    }
    return out;
}

namespace {

// Dense byte-matrix nilpotence scan over Z/p, p prime <= 251.  Rows are the
// memoized basis images; applications accumulate in 32-bit lanes and reduce
// once per output coefficient.
class FastScanner {
  public:
    FastScanner(const RecursionOperator& T, std::uint64_t n_max)
        : p_(static_cast<std::uint32_t>(T.ring().modulus())) {
        check_internal(p_ >= 2 && p_ <= 251, "fast scan modulus out of range");
        // 32-bit accumulators: terms <= (p-1)^2 * (n_max+1) must fit.
        check_internal((n_max + 1) < (0xffffffffull / ((p_ - 1) * (p_ - 1))),
                       "fast scan range too large for 32-bit accumulation");
        std::uint32_t d = T.companion().order();
        rows_.reserve(n_max + 1);
        for (std::uint32_t i = 0; i < d && i <= n_max; ++i) {
            rows_.push_back(to_row(T.initial()[i]));
        }
        std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> rec(d);
        for (std::uint32_t i = 1; i <= d; ++i) {
            const Poly& a = T.companion().rec[i - 1];
            for (std::size_t u : a.support()) {
                rec[i - 1].emplace_back(u, static_cast<std::uint32_t>(a.coeff(u).residue()));
            }
        }
        std::vector<std::uint32_t> acc;
        for (std::uint64_t n = rows_.size(); n <= n_max; ++n) {
            std::size_t cap = 0;
            for (std::uint32_t i = 1; i <= d; ++i) {
                if (rec[i - 1].empty() || rows_[n - i].empty()) continue;
                for (auto [u, c] : rec[i - 1]) cap = std::max(cap, rows_[n - i].size() + u);
            }
            acc.assign(cap, 0);
            for (std::uint32_t i = 1; i <= d; ++i) {
                const auto& row = rows_[n - i];
                for (auto [u, c] : rec[i - 1]) {
                    for (std::size_t j = 0; j < row.size(); ++j) acc[j + u] += c * row[j];
                }
            }
            rows_.push_back(reduce(acc));
        }
    }

    // N_T(y^n); y^n itself is nonzero, so the result is >= 0.
    std::int64_t nilpotence_at(std::uint64_t n) const {
        // g = T^k(y^n) with k = 1 at entry; the loop exits at the first
        // k with T^k(y^n) = 0, so N_T = k - 1.
        std::vector<std::uint8_t> g = rows_[n];
        std::int64_t k = 1;
        std::vector<std::uint32_t> acc;
        while (!g.empty()) {
            std::size_t cap = 0;
            for (std::size_t m = 0; m < g.size(); ++m) {
                if (g[m] != 0 && !rows_[m].empty()) cap = std::max(cap, rows_[m].size());
            }
            acc.assign(cap, 0);
            for (std::size_t m = 0; m < g.size(); ++m) {
                if (g[m] == 0) continue;
                std::uint32_t c = g[m];
                const auto& row = rows_[m];
                for (std::size_t j = 0; j < row.size(); ++j) acc[j] += c * row[j];
            }
            g = reduce(acc);
            ++k;
        }
        return k - 1;
    }

  private:
    std::vector<std::uint8_t> to_row(const Poly& f) const {
        std::vector<std::uint8_t> row;
        row.reserve(f.mod_lane().size());
        for (std::uint64_t c : f.mod_lane()) row.push_back(static_cast<std::uint8_t>(c));
        return row;
    }
    std::vector<std::uint8_t> reduce(const std::vector<std::uint32_t>& acc) const {
        std::vector<std::uint8_t> out(acc.size());
        for (std::size_t j = 0; j < acc.size(); ++j) out[j] = static_cast<std::uint8_t>(acc[j] % p_);
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    std::uint32_t p_;
    std::vector<std::vector<std::uint8_t>> rows_;
};

bool is_small_prime_mod(const CoeffRing& ring) {
    if (!ring.is_mod() || ring.modulus() > 251) return false;
    std::uint64_t p = ring.modulus();
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Deg> nilpotence_of_powers(const RecursionOperator& T, std::uint64_t n_max) {
    if (!T.degree_lowering())
        fail_domain("nilpotence_of_powers needs a degree-lowering certificate");
    std::vector<Deg> out;
    out.reserve(n_max + 1);
    if (is_small_prime_mod(T.ring())) {
        FastScanner scan(T, n_max);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            std::int64_t v = scan.nilpotence_at(n);
            out.push_back(Deg::of(v));
        }
        return out;
    }
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        out.push_back(nilpotence_index(T, Poly::y_power(T.ring(), n)));
    }
    return out;
}

CompanionPoly frobenius_power(const CompanionPoly& P, std::uint32_t k) {
    std::uint64_t p = fp_prime(P.ring);
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        pk *= p;
        if (pk > (1ull << 24)) fail_domain("frobenius power too large");
    }
    std::uint32_t d = P.order();
    std::vector<Poly> rec(static_cast<std::size_t>(d) * pk, Poly::zero(P.ring));
    for (std::uint32_t i = 1; i <= d; ++i) {
        rec[static_cast<std::size_t>(i) * pk - 1] = P.rec[i - 1].pow(pk);
    }
    return CompanionPoly::from_rec(P.ring, std::move(rec));
}

std::string Cofactor::to_string(const std::string& xvar, const std::string& yvar) const {
    std::string out;
    std::uint64_t degS = s.empty() ? 0 : s.size() - 1;  // homogeneous degree e - d
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string term;
        if (s[i] != 1 || (i == 0 && degS == 0)) term += std::to_string(s[i]);
        if (i > 0) {
            if (!term.empty()) term += "*";
            term += xvar;
            if (i >= 2) term += "^" + std::to_string(i);
        }
        std::uint64_t yexp = degS - i;
        if (yexp > 0) {
            if (!term.empty()) term += "*";
            term += yvar;
            if (yexp >= 2) term += "^" + std::to_string(yexp);
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

Cofactor empty_middle_cofactor(const CompanionPoly& P) {
    std::uint64_t p = fp_prime(P.ring);
    ShapeInfo info = shape_info(P);
    if (!info.filtered) fail_domain("empty_middle_cofactor needs a filtered companion");
    if (info.yd_coeff.is_zero())
        fail_domain("condition (3) violated: zero y^d coefficient in a_d");
    std::uint32_t d = P.order();
    // Dehomogenized top form h(Z) = Z^d - sum_i (coeff of y^i in a_i) Z^(d-i).
    Poly h(P.ring);
    h.mod_lane_mut().assign(d + 1, 0);
    h.mod_lane_mut()[d] = 1;
    for (std::uint32_t i = 1; i <= d; ++i) {
        std::uint64_t c = P.rec[i - 1].coeff(i).residue();
        h.mod_lane_mut()[d - i] = mod_sub(h.mod_lane()[d - i], c, p);
    }
    h.trim();
    std::uint64_t L = fp_splitting_degree(h);
    Int qz = int_pow(Int(static_cast<unsigned long>(p)), L);
    std::uint64_t nu = fp_max_root_multiplicity(h);
    Int qm(1);
    std::uint64_t m = 0;
    while (qm < nu) {
        qm *= qz;
        ++m;
    }
    Int ez = qm * (qz - 1);
    if (!ez.fits_ulong_p() || !qz.fits_ulong_p())
        fail_domain("cofactor exponent e = q^m (q-1) does not fit a machine word");
    std::uint64_t e = ez.get_ui();
    // s(Z) = (Z^e - 1) / h(Z) exactly; homogenize as s_i X^i y^(e-d-i).
    Poly ze(P.ring);
    ze.mod_lane_mut().assign(e + 1, 0);
    ze.mod_lane_mut()[e] = 1;
    ze.mod_lane_mut()[0] = p - 1;
    ze.trim();
    Poly s = fp_divexact(ze, h);
    Cofactor out;
    out.e = e;
    out.q = qz.get_ui();
    out.m = m;
    out.s = s.mod_lane();
    out.s.resize(e - d + 1, 0);
    return out;
}

CofactorProductShape cofactor_product_shape(const CompanionPoly& P, const Cofactor& S) {
    std::uint64_t p = fp_prime(P.ring);
    std::uint32_t d = P.order();
    std::uint64_t e = S.e;
    check_internal(S.s.size() == e - d + 1, "cofactor coefficient count mismatch");
    CofactorProductShape out;
    bool any_middle = false;
    // X^k coefficient of P*S: s_(k-d) y^(e-k) plus sum_j (-a_j) s_(k-d+j) y^(e-k ... ),
    // assembled sparsely per k.
    std::map<std::uint64_t, std::uint64_t> terms;
    for (std::uint64_t k = 0; k <= e; ++k) {
        terms.clear();
        if (k >= d && k - d < S.s.size() && S.s[k - d] != 0) {
            terms[e - k] = S.s[k - d] % p;
        }
        for (std::uint32_t j = 1; j <= d; ++j) {
            std::uint64_t idx = k + j;  // s index + d
            if (idx < d || idx - d >= S.s.size()) continue;
            std::uint64_t sc = S.s[idx - d];
            if (sc == 0) continue;
            const Poly& a = P.rec[j - 1];
            for (std::size_t u : a.support()) {
                std::uint64_t c = mod_mul(a.coeff(u).residue(), sc % p, p);
                // contribution -a_j[u] * s_(k-d+j) * y^(u + e - d - (k - d + j))
                std::uint64_t yexp = u + e - d - (k + j - d);
                auto& slot = terms[yexp];
                slot = mod_sub(slot, c, p);
            }
        }
        for (auto [yexp, c] : terms) {
            if (c == 0) continue;
            if (k == e && yexp == 0) {
                out.leading_ok = (c == 1);
            } else if (k == 0 && yexp == e) {
                out.y_e_coeff = c;
            } else {
                any_middle = true;
                out.max_middle_total_degree = std::max(out.max_middle_total_degree, k + yexp);
            }
        }
    }
    out.empty_middle_D =
        any_middle ? (out.max_middle_total_degree < e ? e - out.max_middle_total_degree : 0) : e;
    return out;
}

DecreaseReport content_decrease_check(const RecursionOperator& T, const FractionTriple& t,
                                      std::uint64_t N) {
    t.validate();
    if (T.shape().empty_middle_D < t.D)
        fail_domain("content_decrease_check needs empty-middle D >= the triple's D");
    std::uint64_t p = T.ring().characteristic();
    if (p == 0 || t.b % p != 0)
        fail_domain("content_decrease_check needs characteristic p dividing b");
    WitnessFn c(t);
    DecreaseReport rep;
    for (std::uint64_t n = 1; n <= N; ++n) {
        Poly img = T.image_of_basis(n);
        PolyContent lhs;
        for (std::size_t m : img.support()) {
            NonNegRational v = c.value_at(m);
            if (lhs.is_neg_inf || v > lhs.value) {
                lhs.is_neg_inf = false;
                lhs.value = v;
            }
        }
        NonNegRational rhs = c.value_at(n);
        bool ok = lhs.is_neg_inf || lhs.value < rhs;
        if (!ok) {
            rep.ok = false;
            rep.first_violation_n = n;
            rep.lhs = lhs;
            rep.rhs = rhs;
            return rep;
        }
    }
    return rep;
}

AlphaEstimate alpha_estimate(const RecursionOperator& T, std::uint64_t n_max) {
    AlphaEstimate out;
    std::vector<Deg> nt = nilpotence_of_powers(T, n_max);
    std::int64_t peak = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::int64_t v = nt[n].is_neg_inf() ? -1 : nt[n].value();
        out.samples.emplace_back(n, v);
        peak = std::max(peak, v);
    }
    // Growth-exponent estimate from the peak index over the whole range;
    // a per-n ratio max would be dominated by the smallest n.  Presentation
    // only -- assertions elsewhere use exact inequalities.
    if (peak >= 1 && n_max >= 2)
        out.alpha_hat = std::log(static_cast<double>(peak)) / std::log(static_cast<double>(n_max));
    return out;
}

BoundVerdict refined_bound_check(std::uint64_t N, std::uint64_t n, std::uint64_t q,
                                 std::uint64_t D, std::uint64_t E, std::uint32_t v_cap) {
    if (q < 2 || D < 1 || D >= q || E < 1 || n < 1)
        fail_domain("refined_bound_check needs q >= 2, 1 <= D < q, E >= 1, n >= 1");
    if (q - D == 1) fail_domain("refined bound degenerate at q - D = 1");
    Int L = Int(static_cast<unsigned long>(N)) * E * (q - D - 1);
    Int R0 = Int(static_cast<unsigned long>(q - D)) * (q - 1);
    Int nz(static_cast<unsigned long>(n)), qz(static_cast<unsigned long>(q)),
        bz(static_cast<unsigned long>(q - D));
    for (std::uint32_t v = 64; v <= v_cap; v *= 4) {
        // u = floor(v * log(q-D)/log q): largest u with q^u <= (q-D)^v.
        Int bv = int_pow(bz, v);
        std::uint64_t u = 0;
        Int qu(1);
        while (qu * qz <= bv) {
            qu *= qz;
            ++u;
        }
        Int Lv = int_pow(L, v);
        Int R0v = int_pow(R0, v);
        if (Lv <= R0v * int_pow(nz, u)) return BoundVerdict::holds;
        if (Lv > R0v * int_pow(nz, u + 1)) return BoundVerdict::violated;
    }
    return BoundVerdict::unresolved;
}

}  // namespace ng
