#pragma once

#include "drinfeld/epoly.hpp"

namespace drinfeld::relext {

// The quotient ring L[Z]/(h) for a monic h irreducible over L; used as an
// internal carrier for computations in L(zeta) when the compositum is too
// large to build as an explicit F_p[T]/(modulus) field. Elements are
// polynomials in Z of degree < deg h with coefficients in L.
class RelExt {
 public:
  RelExt(const gf::FieldCtx* base, epoly::EPoly minpoly);

  const gf::FieldCtx* base() const { return base_; }
  std::uint32_t rel_degree() const { return static_cast<std::uint32_t>(minpoly_.degree()); }
  // Total degree over F_p.
  std::uint32_t abs_degree() const { return base_->degree() * rel_degree(); }

  using Elem = epoly::EPoly;  // deg < rel_degree, ctx == base

  Elem zero() const { return epoly::zero(base_); }
  Elem one() const { return epoly::constant(base_->one()); }
  Elem from_base(const gf::FieldElem& e) const { return epoly::constant(e); }
  Elem z() const;  // the class of Z

  Elem add(const Elem& a, const Elem& b) const { return epoly::add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return epoly::sub(a, b); }
  Elem neg(const Elem& a) const { return epoly::sub(zero(), a); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::int64_t e) const;
  // a^(p^t)
  Elem frobenius(const Elem& a, std::uint64_t t) const;
  // Degree of a over the subfield of size p^(s): the length of the orbit of
  // a under x -> x^{p^s}. The subfield degree s must divide abs_degree().
  std::uint32_t degree_over(const Elem& a, std::uint32_t s) const;

  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }

 private:
  const gf::FieldCtx* base_;
  epoly::EPoly minpoly_;
};

}  // namespace drinfeld::relext
