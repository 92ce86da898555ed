#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace ng {

// Signed exact rational, used internally wherever differences can go negative
// (bound margins, identity residuals). mpq_class keeps gcd(num,den)=1, den>=1.
using Rat = mpq_class;
using Int = mpz_class;

Int int_pow(const Int& base, std::uint64_t e);
Rat rat_pow(const Rat& base, std::int64_t e);  // negative e inverts; base != 0 then

std::string rat_to_string(const Rat& q);  // "num/den", or "num" when den == 1
std::string int_to_string(const Int& n);

// Nonnegative exact rational in lowest terms. This is the value domain for
// base-b expansions and content: numerator >= 0, denominator >= 1, gcd = 1.
class NonNegRational {
  public:
    NonNegRational() : v_(0) {}
    explicit NonNegRational(const Int& n) : v_(n) { require_nonneg(); }
    NonNegRational(const Int& num, const Int& den);
    explicit NonNegRational(const Rat& q) : v_(q) { v_.canonicalize(); require_nonneg(); }
    static NonNegRational from_uint(std::uint64_t n) { return NonNegRational(Int(static_cast<unsigned long>(n))); }

    // Accepts "num", "num/den", optional surrounding whitespace; rejects signs.
    static NonNegRational parse(const std::string& text);

    const Rat& rat() const { return v_; }
    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Int floor() const;  // largest integer <= value

    NonNegRational operator+(const NonNegRational& o) const { return NonNegRational(Rat(v_ + o.v_)); }
    NonNegRational operator*(const NonNegRational& o) const { return NonNegRational(Rat(v_ * o.v_)); }
    // Subtraction and division stay inside the nonnegative domain by contract.
    NonNegRational operator-(const NonNegRational& o) const;
    NonNegRational operator/(const NonNegRational& o) const;

    bool operator==(const NonNegRational& o) const { return v_ == o.v_; }
    bool operator!=(const NonNegRational& o) const { return v_ != o.v_; }
    bool operator<(const NonNegRational& o) const { return v_ < o.v_; }
    bool operator<=(const NonNegRational& o) const { return v_ <= o.v_; }
    bool operator>(const NonNegRational& o) const { return v_ > o.v_; }
    bool operator>=(const NonNegRational& o) const { return v_ >= o.v_; }

    std::string to_string() const { return rat_to_string(v_); }
    double approx() const { return v_.get_d(); }

  private:
    void require_nonneg() const {
        if (v_ < 0) fail_domain("negative value where a nonnegative rational is required");
    }
    Rat v_;
};

}  // namespace ng
