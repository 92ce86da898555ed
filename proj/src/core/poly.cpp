#include "core/poly.hpp"

#include <sstream>

namespace ng {

Poly Poly::constant(const CoeffRing& ring, const Scalar& c) { return monomial(ring, 0, c); }

Poly Poly::monomial(const CoeffRing& ring, std::size_t deg, const Scalar& c) {
    require_same_ring(ring, c.ring());
    Poly p(ring);
    if (c.is_zero()) return p;
    if (ring.is_q()) {
        p.q_.assign(deg + 1, Rat(0));
        p.q_[deg] = c.rat();
    } else {
        p.mod_.assign(deg + 1, 0);
        p.mod_[deg] = c.residue();
    }
    return p;
}

Poly Poly::from_q(std::vector<Rat> coeffs) {
    Poly p(CoeffRing::rationals());
    p.q_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_mod(std::uint64_t m, std::vector<std::uint64_t> coeffs) {
    Poly p(CoeffRing::integers_mod(m));
    p.mod_ = std::move(coeffs);
    for (auto& c : p.mod_) c %= m;
    p.trim();
    return p;
}

void Poly::trim() {
    if (ring_.is_q()) {
        while (!q_.empty() && q_.back() == 0) q_.pop_back();
        check_internal(mod_.empty(), "modular lane populated in a Q polynomial");
    } else {
        while (!mod_.empty() && mod_.back() == 0) mod_.pop_back();
        check_internal(q_.empty(), "Q lane populated in a modular polynomial");
    }
}

Scalar Poly::coeff(std::size_t i) const {
    if (i >= size()) return Scalar::zero(ring_);
    return ring_.is_q() ? Scalar::from_rat(ring_, q_[i]) : Scalar::from_residue(ring_, mod_[i]);
}

void Poly::set_coeff(std::size_t i, const Scalar& c) {
    require_same_ring(ring_, c.ring());
    if (i >= size()) {
        if (c.is_zero()) return;
        if (ring_.is_q())
            q_.resize(i + 1, Rat(0));
        else
            mod_.resize(i + 1, 0);
    }
    if (ring_.is_q())
        q_[i] = c.rat();
    else
        mod_[i] = c.residue();
    trim();
}

Scalar Poly::leading_coeff() const {
    if (is_zero()) fail_internal("leading_coeff of zero polynomial");
    return coeff(size() - 1);
}

std::vector<std::size_t> Poly::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < size(); ++i) {
        bool nz = ring_.is_q() ? q_[i] != 0 : mod_[i] != 0;
        if (nz) s.push_back(i);
    }
    return s;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    Poly r(ring_);
    std::size_t n = std::max(size(), o.size());
    if (ring_.is_q()) {
        r.q_.assign(n, Rat(0));
        for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = q_[i];
        for (std::size_t i = 0; i < o.q_.size(); ++i) r.q_[i] += o.q_[i];
    } else {
        std::uint64_t m = ring_.modulus();
        r.mod_.assign(n, 0);
        for (std::size_t i = 0; i < mod_.size(); ++i) r.mod_[i] = mod_[i];
        for (std::size_t i = 0; i < o.mod_.size(); ++i) r.mod_[i] = mod_add(r.mod_[i], o.mod_[i], m);
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(*this);
    if (ring_.is_q()) {
        for (auto& c : r.q_) c = -c;
    } else {
        std::uint64_t m = ring_.modulus();
        for (auto& c : r.mod_) c = c == 0 ? 0 : m - c;
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    std::size_t n = size(), k = o.size();
    if (ring_.is_q()) {
        r.q_.assign(n + k - 1, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (q_[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
                if (o.q_[j] != 0) r.q_[i + j] += q_[i] * o.q_[j];
        }
    } else {
        // Products fit in u64 (m < 2^32); accumulate in u128, reduce once
        // per output coefficient.
        std::uint64_t m = ring_.modulus();
        r.mod_.assign(n + k - 1, 0);
        for (std::size_t t = 0; t < r.mod_.size(); ++t) {
            unsigned __int128 acc = 0;
            std::size_t lo = t >= k - 1 ? t - (k - 1) : 0;
            std::size_t hi = std::min(t, n - 1);
            for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(mod_[i]) * o.mod_[t - i];
            r.mod_[t] = static_cast<std::uint64_t>(acc % m);
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    require_same_ring(ring_, c.ring());
    Poly r(ring_);
    if (c.is_zero() || is_zero()) return r;
    if (ring_.is_q()) {
        r.q_ = q_;
        for (auto& x : r.q_) x *= c.rat();
    } else {
        std::uint64_t m = ring_.modulus(), s = c.residue();
        r.mod_ = mod_;
        for (auto& x : r.mod_) x = mod_mul(x, s, m);
    }
    r.trim();
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(ring_);
    if (ring_.is_q()) {
        r.q_.assign(k, Rat(0));
        r.q_.insert(r.q_.end(), q_.begin(), q_.end());
    } else {
        r.mod_.assign(k, 0);
        r.mod_.insert(r.mod_.end(), mod_.begin(), mod_.end());
    }
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = constant(ring_, Scalar::one(ring_));
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::reduce_mod(std::uint64_t m) const {
    if (!ring_.is_q()) fail_internal("reduce_mod on a modular polynomial");
    Poly r(CoeffRing::integers_mod(m));
    r.mod_.resize(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) r.mod_[i] = mod_reduce(q_[i], m);
    r.trim();
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = size(); idx-- > 0;) {
        Scalar c = coeff(idx);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string mag;
        if (ring_.is_q()) {
            Rat v = c.rat();
            neg = v < 0;
            mag = rat_to_string(neg ? Rat(-v) : v);
        } else {
            mag = std::to_string(c.residue());
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (idx == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag << "*";
            out << var;
            if (idx > 1) out << "^" << idx;
        }
    }
    return out.str();
}

}  // namespace ng
