#include "drinfeld/relext.hpp"

namespace drinfeld::relext {

using epoly::EPoly;

RelExt::RelExt(const gf::FieldCtx* base, EPoly minpoly) : base_(base), minpoly_(std::move(minpoly)) {
  if (minpoly_.ctx != base) throw UsageError("relative minimal polynomial over the wrong base");
  if (minpoly_.degree() < 1) throw UsageError("relative extension needs degree >= 1");
  if (!(minpoly_.c.back() == base->one())) throw UsageError("relative minimal polynomial must be monic");
}

RelExt::Elem RelExt::z() const {
  if (rel_degree() == 1) {
    // Z is congruent to the negated constant term.
    return epoly::constant(-minpoly_.c[0]);
  }
  return epoly::x_power(base_, 1);
}

RelExt::Elem RelExt::mul(const Elem& a, const Elem& b) const {
  return epoly::mod(epoly::mul(a, b), minpoly_);
}

RelExt::Elem RelExt::inv(const Elem& a) const {
  if (a.is_zero()) throw UsageError("inverse of zero in relative extension");
  // Extended Euclid in L[Z] against the minimal polynomial.
  EPoly r0 = minpoly_, r1 = a;
  EPoly t0 = zero(), t1 = one();
  while (!r1.is_zero()) {
    auto [q, r2] = epoly::divmod(r0, r1);
    EPoly t2 = epoly::sub(t0, epoly::mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw InternalError("relative modulus not irreducible over base");
  const gf::FieldElem inv_c = r0.c[0].inverse();
  EPoly out{base_, {}};
  for (const auto& e : t0.c) out.c.push_back(e * inv_c);
  epoly::normalize(out);
  return out;
}

RelExt::Elem RelExt::pow(const Elem& a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw UsageError("negative power of zero");
  }
  Elem base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Elem acc = one();
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

RelExt::Elem RelExt::frobenius(const Elem& a, std::uint64_t t) const {
  const std::uint64_t n = abs_degree();
  t %= n;
  Elem acc = a;
  const std::int64_t p = base_->p();
  for (std::uint64_t i = 0; i < t; ++i) acc = pow(acc, p);
  return acc;
}

std::uint32_t RelExt::degree_over(const Elem& a, std::uint32_t s) const {
  if (abs_degree() % s != 0) throw UsageError("subfield degree does not divide extension degree");
  Elem cur = frobenius(a, s);
  std::uint32_t deg = 1;
  while (!eq(cur, a)) {
    cur = frobenius(cur, s);
    ++deg;
    if (deg > abs_degree()) throw InternalError("Frobenius orbit did not close");
  }
  return deg;
}

}  // namespace drinfeld::relext
