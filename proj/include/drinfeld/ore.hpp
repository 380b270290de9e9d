#pragma once

#include <map>
#include <vector>

#include "drinfeld/epoly.hpp"
#include "drinfeld/gf.hpp"

namespace drinfeld::ore {

// --------------------------------------------------------------------------
// Twisted coefficient rings for R{F} with F * a = theta(a) * F.

// Finite-field coefficients, twist a -> a^q.
struct FieldTwist {
  const gf::FieldCtx* ctx = nullptr;
  std::uint64_t q = 0;   // twist power, q = p^s
  std::uint32_t s = 0;   // exponent of p in q

  using Elem = gf::FieldElem;

  FieldTwist() = default;
  FieldTwist(const gf::FieldCtx* c, std::uint64_t q_);

  Elem zero() const { return ctx->zero(); }
  Elem one() const { return ctx->one(); }
  bool is_zero(const Elem& e) const { return e.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_unit(const Elem& e) const { return !e.is_zero(); }
  Elem inv(const Elem& e) const { return e.inverse(); }
  Elem twist(const Elem& e) const { return ctx->frobenius_p_power(e, s); }
  Elem twist_inv(const Elem& e) const {
    return ctx->frobenius_p_power(e, (ctx->degree() - s % ctx->degree()) % ctx->degree());
  }
  Elem twist_pow(const Elem& e, std::uint64_t k) const {
    return ctx->frobenius_p_power(e, (std::uint64_t)s * k);
  }
  Elem from_fq(const Elem& e) const {
    if (e.ctx()->cardinality_u64() != q)
      throw UsageError("substituted coefficients must lie in F_q");
    return gf::embed(e, ctx);
  }

  bool operator==(const FieldTwist& o) const { return ctx == o.ctx && q == o.q; }
};

// The commutative polynomial ring F_{q^d}[A, B] with the twist
// theta(r)(A, B) = r^(Frob_q)(A^q, B^q). Carrier for exact verification of
// skew-polynomial identities in the two generic coefficients.
struct SymbRing {
  const gf::FieldCtx* coeff_ctx = nullptr;  // F_{q^d}
  std::uint64_t q = 0;
  std::uint32_t s = 0;

  struct Elem {
    // (deg_A, deg_B) -> nonzero coefficient
    std::map<std::pair<std::uint32_t, std::uint32_t>, gf::FieldElem> t;
    bool operator==(const Elem& o) const { return t == o.t; }
  };

  SymbRing() = default;
  SymbRing(const gf::FieldCtx* c, std::uint64_t q_);

  Elem zero() const { return {}; }
  Elem one() const { return constant(coeff_ctx->one()); }
  Elem constant(const gf::FieldElem& c) const;
  Elem var_a() const;
  Elem var_b() const;
  Elem monomial(const gf::FieldElem& c, std::uint32_t da, std::uint32_t db) const;

  bool is_zero(const Elem& e) const { return e.t.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a.t == b.t; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_unit(const Elem& e) const;
  Elem inv(const Elem& e) const;
  Elem twist(const Elem& e) const;
  Elem from_fq(const gf::FieldElem& e) const {
    if (e.ctx()->cardinality_u64() != q)
      throw UsageError("substituted coefficients must lie in F_q");
    return constant(gf::embed(e, coeff_ctx));
  }
  // Substitute concrete field values for A and B (values in an extension of coeff_ctx).
  gf::FieldElem substitute_values(const Elem& e, const gf::FieldElem& a, const gf::FieldElem& b) const;

  bool operator==(const SymbRing& o) const { return coeff_ctx == o.coeff_ctx && q == o.q; }
};

// --------------------------------------------------------------------------
// Skew polynomials sum a_i F^i over a twisted ring.

template <class Ring>
struct SkewPoly {
  std::vector<typename Ring::Elem> c;  // low F-degree first, leading nonzero
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <class Ring>
void normalize(const Ring& r, SkewPoly<Ring>& f) {
  while (!f.c.empty() && r.is_zero(f.c.back())) f.c.pop_back();
}

template <class Ring>
SkewPoly<Ring> skew_zero(const Ring&) {
  return {};
}

template <class Ring>
SkewPoly<Ring> skew_constant(const Ring& r, const typename Ring::Elem& e) {
  SkewPoly<Ring> f{{e}};
  normalize(r, f);
  return f;
}

template <class Ring>
SkewPoly<Ring> skew_f_power(const Ring& r, std::size_t k) {
  SkewPoly<Ring> f;
  f.c.assign(k + 1, r.zero());
  f.c[k] = r.one();
  return f;
}

template <class Ring>
bool skew_eq(const Ring& r, const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  if (f.c.size() != g.c.size()) return false;
  for (std::size_t i = 0; i < f.c.size(); ++i)
    if (!r.eq(f.c[i], g.c[i])) return false;
  return true;
}

template <class Ring>
SkewPoly<Ring> skew_add(const Ring& r, const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  SkewPoly<Ring> out;
  out.c.assign(std::max(f.c.size(), g.c.size()), r.zero());
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < f.c.size()) out.c[i] = r.add(out.c[i], f.c[i]);
    if (i < g.c.size()) out.c[i] = r.add(out.c[i], g.c[i]);
  }
  normalize(r, out);
  return out;
}

template <class Ring>
SkewPoly<Ring> skew_sub(const Ring& r, const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  SkewPoly<Ring> out;
  out.c.assign(std::max(f.c.size(), g.c.size()), r.zero());
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < f.c.size()) out.c[i] = r.add(out.c[i], f.c[i]);
    if (i < g.c.size()) out.c[i] = r.sub(out.c[i], g.c[i]);
  }
  normalize(r, out);
  return out;
}

// Coefficient of F^n in f*g is sum_{i+j=n} f_i * theta^i(g_j).
template <class Ring>
SkewPoly<Ring> skew_mul(const Ring& r, const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  SkewPoly<Ring> out;
  out.c.assign(f.c.size() + g.c.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (r.is_zero(f.c[i])) continue;
    // theta^i applied to all of g once per row.
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (r.is_zero(g.c[j])) continue;
      typename Ring::Elem tw = g.c[j];
      for (std::size_t k = 0; k < i; ++k) tw = r.twist(tw);
      out.c[i + j] = r.add(out.c[i + j], r.mul(f.c[i], tw));
    }
  }
  normalize(r, out);
  return out;
}

// Right division: f = quot * g + rem with deg rem < deg g. Needs the twisted
// leading coefficient of g to be a unit (any nonzero element over a field,
// monic over the symbolic ring).
template <class Ring>
std::pair<SkewPoly<Ring>, SkewPoly<Ring>> right_divmod(const Ring& r, const SkewPoly<Ring>& f,
                                                       const SkewPoly<Ring>& g) {
  if (g.is_zero()) throw UsageError("skew division by zero");
  SkewPoly<Ring> rem = f, quot;
  normalize(r, rem);
  const int dg = g.degree();
  while (rem.degree() >= dg) {
    const std::size_t k = rem.degree() - dg;
    typename Ring::Elem glead = g.c.back();
    for (std::size_t i = 0; i < k; ++i) glead = r.twist(glead);
    if (!r.is_unit(glead))
      throw UsageError("leading coefficient of divisor is not a unit");
    const typename Ring::Elem coef = r.mul(rem.c.back(), r.inv(glead));
    if (quot.c.size() < k + 1) quot.c.resize(k + 1, r.zero());
    quot.c[k] = r.add(quot.c[k], coef);
    // rem -= (coef F^k) * g
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (r.is_zero(g.c[j])) continue;
      typename Ring::Elem tw = g.c[j];
      for (std::size_t i = 0; i < k; ++i) tw = r.twist(tw);
      rem.c[j + k] = r.sub(rem.c[j + k], r.mul(coef, tw));
    }
    normalize(r, rem);
  }
  normalize(r, quot);
  return {quot, rem};
}

// Monic right GCD by the right Euclidean algorithm.
template <class Ring>
SkewPoly<Ring> right_gcd(const Ring& r, SkewPoly<Ring> f, SkewPoly<Ring> g) {
  normalize(r, f);
  normalize(r, g);
  if (f.is_zero() && g.is_zero()) throw UsageError("gcd of two zero skew polynomials");
  while (!g.is_zero()) {
    auto [q, rem] = right_divmod(r, f, g);
    f = std::move(g);
    g = std::move(rem);
  }
  if (!f.is_zero() && !r.eq(f.c.back(), r.one())) {
    const typename Ring::Elem inv = r.inv(f.c.back());
    for (auto& e : f.c) e = r.mul(inv, e);
  }
  return f;
}

// Extended right Euclid: u*f + w*g = rgcd(f, g) = 1 for coprime inputs.
template <class Ring>
std::pair<SkewPoly<Ring>, SkewPoly<Ring>> right_bezout(const Ring& r, const SkewPoly<Ring>& f,
                                                       const SkewPoly<Ring>& g) {
  SkewPoly<Ring> r0 = f, r1 = g;
  normalize(r, r0);
  normalize(r, r1);
  SkewPoly<Ring> u0 = skew_constant(r, r.one()), u1 = skew_zero(r);
  SkewPoly<Ring> w0 = skew_zero(r), w1 = skew_constant(r, r.one());
  while (!r1.is_zero()) {
    auto [q, rem] = right_divmod(r, r0, r1);
    SkewPoly<Ring> u2 = skew_sub(r, u0, skew_mul(r, q, u1));
    SkewPoly<Ring> w2 = skew_sub(r, w0, skew_mul(r, q, w1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    w0 = std::move(w1);
    w1 = std::move(w2);
  }
  if (r0.degree() != 0) throw UsageError("bezout on non-coprime skew polynomials");
  const typename Ring::Elem inv = r.inv(r0.c[0]);
  SkewPoly<Ring> scale = skew_constant(r, inv);
  return {skew_mul(r, scale, u0), skew_mul(r, scale, w0)};
}

// Left evaluation sum coeffs_k * inner^k; coefficients need not be central
// (used for psi, whose coefficients live in F_{q^d}).
template <class Ring>
SkewPoly<Ring> substitute_left(const Ring& r, const std::vector<typename Ring::Elem>& coeffs,
                               const SkewPoly<Ring>& inner) {
  SkewPoly<Ring> acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = skew_mul(r, acc, inner);
    acc = skew_add(r, acc, skew_constant(r, coeffs[i]));
  }
  return acc;
}

// phi evaluated at a skew element; phi has coefficients in F_q (central).
template <class Ring>
SkewPoly<Ring> substitute(const Ring& r, const epoly::EPoly& outer, const SkewPoly<Ring>& inner) {
  SkewPoly<Ring> acc;
  for (std::size_t i = outer.c.size(); i-- > 0;) {
    acc = skew_mul(r, acc, inner);
    acc = skew_add(r, acc, skew_constant(r, r.from_fq(outer.c[i])));
  }
  return acc;
}

// --------------------------------------------------------------------------
// Additive-polynomial views over a field ring.

using FSkew = SkewPoly<FieldTwist>;

// sum a_i x^{q^i}, coefficients embedded into the field of x.
gf::FieldElem additive_eval(const FieldTwist& ring, const FSkew& f, const gf::FieldElem& x);

// Kernel of the additive map x -> f(x) on the given field, via the null
// space of its matrix over F_p. Returns the full (sorted) root set.
std::vector<gf::FieldElem> additive_kernel(const FieldTwist& ring, const FSkew& f,
                                           const gf::FieldCtx* field);

// Null-space dimension only (cheaper membership-free size probe).
std::size_t additive_kernel_dim_fp(const FieldTwist& ring, const FSkew& f,
                                   const gf::FieldCtx* field);

// --------------------------------------------------------------------------
// The section-2 identity, verified exactly over the symbolic ring:
//   (A^{[q]_d} F^d - c_0 c_1 ... c_{d-1}) psi(AF+B) = h(F) phi(AF+B),
// with c_i = zeta - B^{q^i} and h as in the text, plus the companion
//   phi(AF+B) = -zeta psi(AF+B) + psi(AF+B)(AF+B).
bool verify_lcm_identity(std::uint64_t q, std::uint32_t d, const epoly::EPoly& phi);
// Deterministic phi of degree d over F_q.
bool verify_lcm_identity(std::uint64_t q, std::uint32_t d);

}  // namespace drinfeld::ore
