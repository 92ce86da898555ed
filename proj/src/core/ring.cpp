#include "core/ring.hpp"

namespace ng {

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    a %= m;
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mod_mul(r, a, m);
        a = mod_mul(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    a %= m;
    // Extended Euclid on (a, m); track x with a*x === g (mod m).
    std::int64_t x0 = 0, x1 = 1;
    std::uint64_t r0 = m, r1 = a;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - static_cast<std::int64_t>(q) * x1;
        r0 = r1;
        r1 = r2;
        x0 = x1;
        x1 = x2;
    }
    if (r0 != 1)
        fail_domain("residue " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    std::int64_t x = x0 % static_cast<std::int64_t>(m);
    if (x < 0) x += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(x);
}

std::uint64_t mod_reduce(const Int& n, std::uint64_t m) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_ui();
}

std::uint64_t mod_reduce(const Rat& q, std::uint64_t m) {
    std::uint64_t num = mod_reduce(Int(q.get_num()), m);
    std::uint64_t den = mod_reduce(Int(q.get_den()), m);
    if (den == 1) return num;
    return mod_mul(num, mod_inverse(den, m), m);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ring(ring_, o.ring_);
    Scalar s(ring_);
    if (ring_.is_q())
        s.q_ = q_ + o.q_;
    else
        s.r_ = mod_add(r_, o.r_, ring_.modulus());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_ring(ring_, o.ring_);
    Scalar s(ring_);
    if (ring_.is_q())
        s.q_ = q_ - o.q_;
    else
        s.r_ = mod_sub(r_, o.r_, ring_.modulus());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ring(ring_, o.ring_);
    Scalar s(ring_);
    if (ring_.is_q())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mod_mul(r_, o.r_, ring_.modulus());
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(ring_);
    if (ring_.is_q())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : ring_.modulus() - r_;
    return s;
}

}  // namespace ng
