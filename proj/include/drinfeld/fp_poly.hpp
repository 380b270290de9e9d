#pragma once

#include <cstdint>
#include <vector>

namespace drinfeld::fppoly {

// Dense polynomials over the prime field F_p, coefficients low-degree-first
// with the leading coefficient nonzero (zero polynomial = empty vector).
using Poly = std::vector<std::uint32_t>;

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
// f mod g, g != 0 monic or with invertible leading coefficient.
Poly mod(const Poly& f, const Poly& g, std::uint32_t p);
Poly divquo(const Poly& f, const Poly& g, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);  // monic
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint32_t p);
// (f(X))^p mod modulus via the Frobenius coefficient map, cheaper than powmod.
Poly pow_p_mod(const Poly& f, const Poly& modulus, std::uint32_t p);

bool is_irreducible(const Poly& f, std::uint32_t p);

// The first monic irreducible of degree n over F_p when monic polynomials
// are enumerated by increasing value of sum c_i * p^i over the low coefficients.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t n);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace drinfeld::fppoly
