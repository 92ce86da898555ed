#pragma once

#include <cstdint>
#include <string>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace ng {

// Coefficient domain for polynomials: either Q or Z/m (m >= 2).
// Moduli are capped at 2^32-1 so products of two residues fit in uint64_t.
class CoeffRing {
public:
    enum class Kind { Q, Mod };

    static CoeffRing rationals() { return CoeffRing(Kind::Q, 0); }
    static CoeffRing integers_mod(std::uint64_t m) {
        if (m < 2) fail_domain("modulus must be >= 2");
        if (m > 0xffffffffull) fail_domain("modulus too large (must fit in 32 bits)");
        return CoeffRing(Kind::Mod, m);
    }

    Kind kind() const { return kind_; }
    bool is_q() const { return kind_ == Kind::Q; }
    bool is_mod() const { return kind_ == Kind::Mod; }
    std::uint64_t modulus() const {
        if (!is_mod()) fail_internal("modulus() called on Q");
        return m_;
    }
    // 0 for Q; m for Z/m (the exponent-stretch trick in frobenius_power
    // additionally requires m prime, checked at that call site).
    std::uint64_t characteristic() const { return is_q() ? 0 : m_; }

    std::string to_string() const { return is_q() ? "Q" : "Z/" + std::to_string(m_); }

    friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_;
    }
    friend bool operator!=(const CoeffRing& a, const CoeffRing& b) { return !(a == b); }

private:
    CoeffRing(Kind k, std::uint64_t m) : kind_(k), m_(m) {}
    Kind kind_;
    std::uint64_t m_;
};

inline void require_same_ring(const CoeffRing& a, const CoeffRing& b) {
    if (a != b)
        fail_domain("coefficient ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

// Residue arithmetic helpers; inputs are assumed reduced into [0, m).
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a * b) % m;  // safe: a,b < m <= 2^32-1
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a unit; fails with a domain error when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);
// Reduce an arbitrary rational with denominator invertible mod m.
std::uint64_t mod_reduce(const Rat& q, std::uint64_t m);
std::uint64_t mod_reduce(const Int& n, std::uint64_t m);

// A single coefficient tagged with its ring; convenience type for
// non-hot-path interfaces (hot paths use the raw lanes in Poly).
class Scalar {
public:
    static Scalar zero(const CoeffRing& ring) { return Scalar(ring); }
    static Scalar one(const CoeffRing& ring) {
        Scalar s(ring);
        if (ring.is_q())
            s.q_ = 1;
        else
            s.r_ = 1 % ring.modulus();
        return s;
    }
    static Scalar from_rat(const CoeffRing& ring, const Rat& v) {
        Scalar s(ring);
        if (ring.is_q())
            s.q_ = v;
        else
            s.r_ = mod_reduce(v, ring.modulus());
        return s;
    }
    static Scalar from_int(const CoeffRing& ring, const Int& v) { return from_rat(ring, Rat(v)); }
    static Scalar from_residue(const CoeffRing& ring, std::uint64_t r) {
        if (!ring.is_mod()) fail_internal("residue scalar in Q ring");
        Scalar s(ring);
        s.r_ = r % ring.modulus();
        return s;
    }

    const CoeffRing& ring() const { return ring_; }
    bool is_zero() const { return ring_.is_q() ? q_ == 0 : r_ == 0; }
    const Rat& rat() const {
        if (!ring_.is_q()) fail_internal("rat() on modular scalar");
        return q_;
    }
    std::uint64_t residue() const {
        if (!ring_.is_mod()) fail_internal("residue() on rational scalar");
        return r_;
    }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;

    bool operator==(const Scalar& o) const {
        return ring_ == o.ring_ && (ring_.is_q() ? q_ == o.q_ : r_ == o.r_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const { return ring_.is_q() ? rat_to_string(q_) : std::to_string(r_); }

private:
    explicit Scalar(const CoeffRing& ring) : ring_(ring), q_(0), r_(0) {}
    CoeffRing ring_;
    Rat q_;
    std::uint64_t r_;
};

}  // namespace ng
