#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/ring.hpp"

namespace ng {

// Degree of a polynomial, with an explicit -infinity for the zero
// polynomial (also reused as "already zero" for nilpotence indices).
class Deg {
public:
    static Deg neg_inf() { return Deg(true, 0); }
    static Deg of(std::int64_t v) {
        if (v < 0) fail_internal("finite degree must be >= 0");
        return Deg(false, v);
    }

    bool is_neg_inf() const { return neg_inf_; }
    std::int64_t value() const {
        if (neg_inf_) fail_internal("value() of -inf degree");
        return v_;
    }
    std::string to_string() const { return neg_inf_ ? "-inf" : std::to_string(v_); }

    friend bool operator==(const Deg& a, const Deg& b) {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Deg& a, const Deg& b) { return !(a == b); }
    friend bool operator<(const Deg& a, const Deg& b) {
        if (a.neg_inf_) return !b.neg_inf_;
        if (b.neg_inf_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Deg& a, const Deg& b) { return a < b || a == b; }
    friend bool operator>(const Deg& a, const Deg& b) { return b < a; }
    friend bool operator>=(const Deg& a, const Deg& b) { return b <= a; }

private:
    Deg(bool ninf, std::int64_t v) : neg_inf_(ninf), v_(v) {}
    bool neg_inf_;
    std::int64_t v_;
};

// Dense univariate polynomial over Q or Z/m.  Exactly one coefficient
// lane is populated (the other stays empty); no trailing zeros are kept,
// so degree() is the lane size minus one.
class Poly {
public:
    explicit Poly(const CoeffRing& ring) : ring_(ring) {}

    static Poly zero(const CoeffRing& ring) { return Poly(ring); }
    static Poly constant(const CoeffRing& ring, const Scalar& c);
    static Poly monomial(const CoeffRing& ring, std::size_t deg, const Scalar& c);
    // y^deg with coefficient 1.
    static Poly y_power(const CoeffRing& ring, std::size_t deg) {
        return monomial(ring, deg, Scalar::one(ring));
    }
    static Poly from_q(std::vector<Rat> coeffs_ascending);
    static Poly from_mod(std::uint64_t m, std::vector<std::uint64_t> coeffs_ascending);

    const CoeffRing& ring() const { return ring_; }
    bool is_zero() const { return mod_.empty() && q_.empty(); }
    Deg degree() const {
        std::size_t n = size();
        return n == 0 ? Deg::neg_inf() : Deg::of(static_cast<std::int64_t>(n - 1));
    }
    std::size_t size() const { return ring_.is_q() ? q_.size() : mod_.size(); }

    Scalar coeff(std::size_t i) const;
    void set_coeff(std::size_t i, const Scalar& c);
    Scalar leading_coeff() const;
    // Exponents with nonzero coefficient, ascending.
    std::vector<std::size_t> support() const;

    // Direct lane access for hot loops; entries in [0, m) resp. exact Rat.
    const std::vector<std::uint64_t>& mod_lane() const { return mod_; }
    const std::vector<Rat>& q_lane() const { return q_; }
    std::vector<std::uint64_t>& mod_lane_mut() { return mod_; }
    std::vector<Rat>& q_lane_mut() { return q_; }
    void trim();  // drop trailing zeros (call after mutating a lane)

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Scalar& c) const;
    Poly shifted(std::size_t k) const;  // multiply by y^k
    Poly pow(std::uint64_t e) const;    // repeated squaring

    bool operator==(const Poly& o) const {
        return ring_ == o.ring_ && mod_ == o.mod_ && q_ == o.q_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Q with integer coefficients -> Z/m; fails on fractional coefficients
    // whose denominator is not invertible mod m.
    Poly reduce_mod(std::uint64_t m) const;

    // Descending powers, e.g. "2*y^9 + y^7 + y^2"; zero prints "0".
    std::string to_string(const std::string& var = "y") const;

private:
    CoeffRing ring_;
    std::vector<std::uint64_t> mod_;  // used when ring is Z/m
    std::vector<Rat> q_;              // used when ring is Q
};

}  // namespace ng
