#pragma once

#include <vector>

#include "drinfeld/gf.hpp"

namespace drinfeld::epoly {

// Dense polynomial over a FieldCtx, low-degree-first, leading coefficient
// nonzero (zero polynomial = empty coefficient vector).
struct EPoly {
  const gf::FieldCtx* ctx = nullptr;
  std::vector<gf::FieldElem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const EPoly& o) const { return ctx == o.ctx && c == o.c; }
};

EPoly zero(const gf::FieldCtx* ctx);
EPoly constant(const gf::FieldElem& e);
EPoly from_fp(const fppoly::Poly& f, const gf::FieldCtx* ctx);
EPoly x_power(const gf::FieldCtx* ctx, std::size_t k);
void normalize(EPoly& f);

EPoly add(const EPoly& a, const EPoly& b);
EPoly sub(const EPoly& a, const EPoly& b);
EPoly mul(const EPoly& a, const EPoly& b);
EPoly make_monic(const EPoly& f);
std::pair<EPoly, EPoly> divmod(const EPoly& f, const EPoly& g);
EPoly mod(const EPoly& f, const EPoly& g);
EPoly gcd(EPoly a, EPoly b);  // monic
EPoly powmod(const EPoly& base, std::uint64_t e, const EPoly& modulus);
// f^q mod modulus, q a power of the characteristic (coefficient Frobenius + spread).
EPoly pow_q_mod(const EPoly& f, std::uint64_t q, const EPoly& modulus);

gf::FieldElem eval(const EPoly& f, const gf::FieldElem& x);
// Evaluate with coefficients embedded into the (larger) field of x.
gf::FieldElem eval_embedded(const EPoly& f, const gf::FieldElem& x);
// Coefficient-wise embedding into a larger field.
EPoly map_to(const EPoly& f, const gf::FieldCtx* target);

// Irreducibility over the coefficient field (Rabin).
bool is_irreducible(const EPoly& f);
// First monic irreducible of degree d over ctx, coefficients enumerated by
// increasing element index, constant coefficient least significant.
EPoly smallest_irreducible(const gf::FieldCtx* ctx, std::uint32_t d);

// All roots in f.ctx with multiplicity, by exhaustive scan and deflation.
std::vector<std::pair<gf::FieldElem, int>> roots_with_multiplicity(const EPoly& f);
// Roots without multiplicity, sorted.
std::vector<gf::FieldElem> distinct_roots(const EPoly& f);

}  // namespace drinfeld::epoly
