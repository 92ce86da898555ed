#include "core/fpuni.hpp"

#include <numeric>

namespace ng {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

}  // namespace

std::uint64_t fp_prime(const CoeffRing& ring) {
    if (!ring.is_mod()) fail_domain("prime-field operation on Q coefficients");
    std::uint64_t p = ring.modulus();
    if (!is_prime_u64(p)) fail_domain("prime-field operation needs a prime modulus");
    return p;
}

std::pair<Poly, Poly> fp_divmod(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    std::uint64_t p = fp_prime(a.ring());
    if (b.is_zero()) fail_domain("polynomial division by zero");
    Poly quot(a.ring()), rem = a;
    const auto& bl = b.mod_lane();
    std::size_t db = bl.size() - 1;
    std::uint64_t inv_lead = mod_inverse(bl[db], p);
    auto& rl = rem.mod_lane_mut();
    std::vector<std::uint64_t> q(rl.size() > db ? rl.size() - db : 0, 0);
    while (rl.size() > db) {
        std::size_t k = rl.size() - 1 - db;
        std::uint64_t c = mod_mul(rl.back(), inv_lead, p);
        q[k] = c;
        for (std::size_t i = 0; i <= db; ++i) {
            rl[k + i] = mod_sub(rl[k + i], mod_mul(c, bl[i], p), p);
        }
        rem.trim();
        if (rl.size() > k + db) rl.resize(k + db);  // top term cancelled exactly
        rem.trim();
    }
    quot.mod_lane_mut() = std::move(q);
    quot.trim();
    rem.trim();
    return {quot, rem};
}

Poly fp_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = fp_divmod(a, b);
    if (!r.is_zero()) fail_internal("inexact polynomial division");
    return q;
}

Poly fp_monic(const Poly& a) {
    if (a.is_zero()) return a;
    std::uint64_t p = fp_prime(a.ring());
    std::uint64_t inv = mod_inverse(a.mod_lane().back(), p);
    return a.scaled(Scalar::from_residue(a.ring(), inv));
}

Poly fp_gcd(Poly a, Poly b) {
    require_same_ring(a.ring(), b.ring());
    fp_prime(a.ring());
    while (!b.is_zero()) {
        Poly r = fp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

Poly fp_mulmod(const Poly& a, const Poly& b, const Poly& h) {
    return fp_divmod(a * b, h).second;
}

Poly fp_powmod(const Poly& base, const Int& e, const Poly& h) {
    if (e < 0) fail_domain("negative exponent in fp_powmod");
    Poly acc = fp_divmod(Poly::constant(base.ring(), Scalar::one(base.ring())), h).second;
    Poly sq = fp_divmod(base, h).second;
    for (std::size_t i = 0, n = mpz_sizeinbase(e.get_mpz_t(), 2); e != 0 && i < n; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp_mulmod(acc, sq, h);
        if (i + 1 < n) sq = fp_mulmod(sq, sq, h);
    }
    return acc;
}

Poly fp_derivative(const Poly& a) {
    std::uint64_t p = fp_prime(a.ring());
    Poly out(a.ring());
    const auto& al = a.mod_lane();
    if (al.size() <= 1) return out;
    auto& ol = out.mod_lane_mut();
    ol.assign(al.size() - 1, 0);
    for (std::size_t i = 1; i < al.size(); ++i) {
        ol[i - 1] = mod_mul(al[i], i % p, p);
    }
    out.trim();
    return out;
}

Poly fp_pth_root(const Poly& a) {
    std::uint64_t p = fp_prime(a.ring());
    Poly out(a.ring());
    const auto& al = a.mod_lane();
    if (al.empty()) return out;
    auto& ol = out.mod_lane_mut();
    ol.assign((al.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < al.size(); ++i) {
        if (al[i] == 0) continue;
        if (i % p != 0) fail_internal("p-th root of a polynomial that is not a p-th power");
        ol[i / p] = al[i];  // scalars of F_p are Frobenius-fixed
    }
    out.trim();
    return out;
}

std::uint64_t fp_max_root_multiplicity(const Poly& f) {
    std::uint64_t p = fp_prime(f.ring());
    if (f.degree() < Deg::of(1)) fail_domain("multiplicity of a constant polynomial");
    Poly fp = fp_derivative(f);
    if (fp.is_zero()) return p * fp_max_root_multiplicity(fp_pth_root(f));
    Poly t = fp_gcd(f, fp);
    if (t.degree() == Deg::of(0)) return 1;
    Poly v = fp_divexact(f, t);
    std::uint64_t best = 0;
    std::uint64_t i = 1;
    while (v.degree() > Deg::of(0)) {
        Poly w = fp_gcd(t, v);
        Poly s = fp_divexact(v, w);
        if (s.degree() > Deg::of(0)) best = std::max(best, i);
        v = std::move(w);
        t = fp_divexact(t, fp_monic(v));
        ++i;
    }
    if (t.degree() > Deg::of(0)) {
        best = std::max(best, p * fp_max_root_multiplicity(fp_pth_root(t)));
    }
    return best == 0 ? 1 : best;
}

Poly fp_radical(const Poly& f) {
    fp_prime(f.ring());
    if (f.is_zero()) fail_domain("radical of the zero polynomial");
    if (f.degree() == Deg::of(0)) return Poly::constant(f.ring(), Scalar::one(f.ring()));
    Poly fp = fp_derivative(f);
    if (fp.is_zero()) return fp_radical(fp_pth_root(f));
    Poly t = fp_gcd(f, fp);
    Poly v = fp_monic(fp_divexact(f, t));
    if (t.degree() == Deg::of(0)) return v;
    // Strip every copy of v's factors from t; the leftover collects the
    // factors whose multiplicity is divisible by p.
    for (;;) {
        Poly g = fp_gcd(t, v);
        if (g.degree() == Deg::of(0)) break;
        t = fp_divexact(t, g);
    }
    if (t.degree() == Deg::of(0)) return v;
    return fp_monic(v * fp_radical(t));
}

std::vector<std::uint32_t> fp_irreducible_degrees(const Poly& f) {
    std::uint64_t p = fp_prime(f.ring());
    if (f.degree() < Deg::of(1)) fail_domain("factor degrees of a constant polynomial");
    Poly s = fp_radical(f);
    Poly x = Poly::y_power(f.ring(), 1);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 1; s.degree() > Deg::of(0); ++i) {
        auto ds = static_cast<std::uint64_t>(s.degree().value());
        if (2 * i > ds) {  // leftover is irreducible
            out.push_back(static_cast<std::uint32_t>(ds));
            break;
        }
        Poly g = fp_gcd(s, fp_powmod(x, int_pow(Int(static_cast<unsigned long>(p)),
                                                static_cast<std::uint64_t>(i)),
                                     s) -
                               x);
        if (g.degree() > Deg::of(0)) {
            out.push_back(static_cast<std::uint32_t>(i));
            s = fp_divexact(s, g);
        }
    }
    return out;
}

std::uint64_t fp_splitting_degree(const Poly& f) {
    std::uint64_t l = 1;
    for (std::uint32_t d : fp_irreducible_degrees(f)) l = std::lcm(l, static_cast<std::uint64_t>(d));
    return l;
}

}  // namespace ng
