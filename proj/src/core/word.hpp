#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace ng {

// Eventually periodic base-b word
//
//   n_{l-1} ... n_0 . u_1 ... u_s (m_1 ... m_t)^inf
//
// int_digits is little-endian (index i = weight b^i); pre holds the
// fractional preperiod (slot 1 first); period is the repeating block and
// is always non-empty (a terminating expansion has period {0}).  Digit
// values are not required to be < base: carry words and digit-wise sums
// reuse the same container.
struct PeriodicWord {
    std::uint32_t base = 10;
    std::vector<std::uint32_t> int_digits;
    std::vector<std::uint32_t> pre;
    std::vector<std::uint32_t> period;

    // Canonical form: no leading integer zeros, primitive period block,
    // minimal preperiod (boundary pulled back while the last preperiod
    // digit equals the last period digit, rotating the period right).
    void normalize();

    std::size_t ell() const { return int_digits.size(); }
    std::size_t s() const { return pre.size(); }
    std::size_t t() const { return period.size(); }

    // Digit at fractional slot j >= 1 (pre for j <= s, then periodic).
    std::uint32_t frac_digit(std::size_t j) const;
    // Digit at integer position i >= 0 (0 beyond the top).
    std::uint32_t int_digit(std::size_t i) const;

    // "1241", "0.4(20)", "0.(2)"; digits are concatenated for base <= 10
    // and ':'-separated above that.  A {0} period with empty preperiod is
    // omitted; otherwise the parenthesised block is always shown.
    std::string to_string() const;
    static PeriodicWord parse(const std::string& text, std::uint32_t base);

    bool operator==(const PeriodicWord&) const = default;
};

// Base-b expansion of q >= 0 with minimal preperiod and primitive period;
// never ends in the all-(b-1) tail (plain long division cannot produce it).
PeriodicWord rite(const NonNegRational& q, std::uint32_t b);

// Value of a word with its digits reinterpreted at radix beta >= 2:
//   N_beta + U_beta/beta^s + M_beta/(beta^s (beta^t - 1))
// where N, U, M read the integer/preperiod/period digit strings as
// base-beta numbers.  Digits may exceed beta.
NonNegRational reed(const PeriodicWord& w, std::uint32_t beta);

// Shape of rite(q): l integer digits, preperiod length s, period length t,
// and the three digit-string values n, u, m in base b, so that
//   q = n + u/b^s + m/(b^s (b^t - 1)).
struct BaseStats {
    std::size_t ell = 0, s = 0, t = 1;
    Int n, u, m;
};
BaseStats base_stats(const NonNegRational& q, std::uint32_t b);

// Carry word of the base-b addition x + y: digit at integer position i is
// the carry out of position i, digit at fractional slot j is the carry out
// of slot j (into slot j-1).  All digits are 0 or 1.
PeriodicWord carry_word(const NonNegRational& x, const NonNegRational& y, std::uint32_t b);

// Carry word of the D-fold addition 1/d + ... + 1/d performed base b, as the
// digit-wise sum of the pairwise carry words r_b(i/d, 1/d), i = 1..D-1.
// Digits lie in [0, D-1].
PeriodicWord dfold_carry_word(std::uint32_t b, std::uint32_t d, std::uint32_t D);

// First k fractional carry digits r_1..r_k of the D-fold addition word.
std::vector<std::uint32_t> carry_word_dfold(std::uint32_t d, std::uint32_t D, std::uint32_t b,
                                            std::size_t k);

}  // namespace ng
