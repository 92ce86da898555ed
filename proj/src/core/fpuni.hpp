#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/poly.hpp"

namespace ng {

// Univariate helpers over a prime field F_p (Poly in a Z/p ring with p
// prime).  Everything here runs on companion-sized inputs (degree <= a few
// dozen), so the implementations favour the textbook forms.

// Checks the ring is Z/p with p prime and returns p.
std::uint64_t fp_prime(const CoeffRing& ring);

// Quotient and remainder; b != 0.
std::pair<Poly, Poly> fp_divmod(const Poly& a, const Poly& b);
// Exact division; fails if the remainder is nonzero.
Poly fp_divexact(const Poly& a, const Poly& b);
// Monic gcd (gcd(0, 0) = 0).
Poly fp_gcd(Poly a, Poly b);
// Scale to leading coefficient 1 (zero stays zero).
Poly fp_monic(const Poly& a);

Poly fp_mulmod(const Poly& a, const Poly& b, const Poly& h);
Poly fp_powmod(const Poly& base, const Int& e, const Poly& h);

Poly fp_derivative(const Poly& a);
// Inverse of Frobenius on F_p[X]: input must have support only at
// multiples of p; scalar coefficients are Frobenius-fixed.
Poly fp_pth_root(const Poly& a);

// Largest multiplicity of any root of f in a splitting field, via the
// characteristic-p squarefree decomposition (derivative-gcd splitting plus
// p-th-root descent on the p-divisible part).  deg f >= 1.
std::uint64_t fp_max_root_multiplicity(const Poly& f);

// Product of the distinct irreducible factors of f (same roots, each once).
Poly fp_radical(const Poly& f);

// Sorted distinct degrees of the irreducible factors of f, by
// distinct-degree factorization of the radical.  deg f >= 1.
std::vector<std::uint32_t> fp_irreducible_degrees(const Poly& f);

// lcm of fp_irreducible_degrees: the smallest L with all roots of f in
// F_{p^L}.
std::uint64_t fp_splitting_degree(const Poly& f);

}  // namespace ng
