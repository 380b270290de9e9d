#include "drinfeld/ore.hpp"

#include <algorithm>

#include "drinfeld/linalg.hpp"

namespace drinfeld::ore {

using gf::FieldCtx;
using gf::FieldElem;

FieldTwist::FieldTwist(const FieldCtx* c, std::uint64_t q_) : ctx(c), q(q_) {
  s = gf::q_exponent_over_p(c->p(), q_);
  if (s == 0 || c->degree() % s != 0)
    throw UsageError("twist field F_q is not a subfield of the coefficient field");
}

SymbRing::SymbRing(const FieldCtx* c, std::uint64_t q_) : coeff_ctx(c), q(q_) {
  s = gf::q_exponent_over_p(c->p(), q_);
}

SymbRing::Elem SymbRing::constant(const FieldElem& c) const {
  Elem e;
  if (!c.is_zero()) e.t[{0, 0}] = c;
  return e;
}

SymbRing::Elem SymbRing::var_a() const { return monomial(coeff_ctx->one(), 1, 0); }
SymbRing::Elem SymbRing::var_b() const { return monomial(coeff_ctx->one(), 0, 1); }

SymbRing::Elem SymbRing::monomial(const FieldElem& c, std::uint32_t da, std::uint32_t db) const {
  Elem e;
  if (!c.is_zero()) e.t[{da, db}] = c;
  return e;
}

SymbRing::Elem SymbRing::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (const auto& [k, v] : b.t) {
    auto it = out.t.find(k);
    if (it == out.t.end()) {
      out.t[k] = v;
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) out.t.erase(it);
    }
  }
  return out;
}

SymbRing::Elem SymbRing::neg(const Elem& a) const {
  Elem out = a;
  for (auto& [k, v] : out.t) v = -v;
  return out;
}

SymbRing::Elem SymbRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

SymbRing::Elem SymbRing::mul(const Elem& a, const Elem& b) const {
  Elem out;
  for (const auto& [ka, va] : a.t) {
    for (const auto& [kb, vb] : b.t) {
      const std::pair<std::uint32_t, std::uint32_t> k{ka.first + kb.first, ka.second + kb.second};
      FieldElem prod = va * vb;
      auto it = out.t.find(k);
      if (it == out.t.end()) {
        if (!prod.is_zero()) out.t[k] = prod;
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.t.erase(it);
      }
    }
  }
  return out;
}

bool SymbRing::is_unit(const Elem& e) const {
  return e.t.size() == 1 && e.t.begin()->first == std::make_pair(0u, 0u);
}

SymbRing::Elem SymbRing::inv(const Elem& e) const {
  if (!is_unit(e)) throw UsageError("symbolic ring element is not a unit");
  return constant(e.t.begin()->second.inverse());
}

SymbRing::Elem SymbRing::twist(const Elem& e) const {
  Elem out;
  for (const auto& [k, v] : e.t) {
    out.t[{k.first * static_cast<std::uint32_t>(q), k.second * static_cast<std::uint32_t>(q)}] =
        coeff_ctx->frobenius_p_power(v, s);
  }
  return out;
}

FieldElem SymbRing::substitute_values(const Elem& e, const FieldElem& a, const FieldElem& b) const {
  const FieldCtx* target = a.ctx();
  if (b.ctx() != target) throw UsageError("substitute_values: mixed contexts");
  FieldElem acc = target->zero();
  for (const auto& [k, v] : e.t) {
    FieldElem term = gf::embed(v, target);
    term = term * a.pow(k.first) * b.pow(k.second);
    acc = acc + term;
  }
  return acc;
}

// --------------------------------------------------------------------------

FieldElem additive_eval(const FieldTwist& ring, const FSkew& f, const FieldElem& x) {
  const FieldCtx* E = x.ctx();
  if (E->p() != ring.ctx->p()) throw UsageError("additive_eval: characteristic mismatch");
  FieldElem acc = E->zero();
  FieldElem xq = x;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i].is_zero()) acc = acc + gf::embed(f.c[i], E) * xq;
    if (i + 1 < f.c.size()) xq = E->frobenius_p_power(xq, ring.s);
  }
  return acc;
}

namespace {

linalg::MatFp additive_matrix(const FieldTwist& ring, const FSkew& f, const FieldCtx* field) {
  const std::uint32_t p = field->p();
  const std::uint32_t N = field->degree();
  std::vector<FieldElem> coeffs;
  coeffs.reserve(f.c.size());
  for (const auto& a : f.c) coeffs.push_back(gf::embed(a, field));
  linalg::MatFp m(N, N, p);
  for (std::uint32_t j = 0; j < N; ++j) {
    std::vector<std::uint32_t> d(N, 0);
    d[j] = 1;
    FieldElem x = field->from_digits(std::move(d));
    FieldElem acc = field->zero();
    FieldElem xq = x;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_zero()) acc = acc + coeffs[i] * xq;
      if (i + 1 < coeffs.size()) xq = field->frobenius_p_power(xq, ring.s);
    }
    for (std::uint32_t i = 0; i < N; ++i) m.at(i, j) = acc.digits()[i];
  }
  return m;
}

}  // namespace

std::size_t additive_kernel_dim_fp(const FieldTwist& ring, const FSkew& f, const FieldCtx* field) {
  if (f.is_zero()) throw UsageError("kernel of the zero skew polynomial");
  return field->degree() - linalg::rank(additive_matrix(ring, f, field));
}

std::vector<FieldElem> additive_kernel(const FieldTwist& ring, const FSkew& f,
                                       const FieldCtx* field) {
  if (f.is_zero()) throw UsageError("kernel of the zero skew polynomial");
  auto basis = linalg::null_space(additive_matrix(ring, f, field));
  const std::uint32_t p = field->p();
  const std::size_t dim = basis.size();
  unsigned __int128 count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= p;
    if (count > limits().max_table_elems) throw LimitError("additive kernel too large to enumerate");
  }
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint32_t> coeff(dim, 0);
  const std::uint64_t total = static_cast<std::uint64_t>(count);
  for (std::uint64_t it = 0; it < total; ++it) {
    std::vector<std::uint32_t> digs(field->degree(), 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!coeff[i]) continue;
      for (std::size_t j = 0; j < digs.size(); ++j)
        digs[j] = static_cast<std::uint32_t>((digs[j] + (std::uint64_t)coeff[i] * basis[i][j]) % p);
    }
    out.emplace_back(field, std::move(digs));
    std::size_t i = 0;
    while (i < dim && ++coeff[i] == p) coeff[i++] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------------------
// Section-2 identity.

namespace {

using SElem = SymbRing::Elem;
using SSkew = SkewPoly<SymbRing>;

std::uint64_t q_bracket(std::uint64_t q, std::uint32_t k) {
  // [q]_k = (q^k - 1)/(q - 1) = 1 + q + ... + q^{k-1}
  std::uint64_t acc = 0, pw = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

}  // namespace

bool verify_lcm_identity(std::uint64_t q, std::uint32_t d, const epoly::EPoly& phi) {
  if (phi.degree() != static_cast<int>(d)) throw UsageError("phi degree mismatch");
  if (phi.ctx->cardinality_u64() != q) throw UsageError("phi must have coefficients in F_q");
  if (!epoly::is_irreducible(phi)) throw UsageError("phi must be irreducible over F_q");
  const std::uint32_t p = phi.ctx->p();
  const std::uint32_t s = gf::q_exponent_over_p(p, q);
  const FieldCtx* Fqd = gf::build_field(p, s * d);

  const epoly::EPoly phi_big = epoly::map_to(phi, Fqd);
  const auto roots = epoly::distinct_roots(phi_big);
  if (roots.size() != d) throw InternalError("phi does not split in F_{q^d}");
  const FieldElem zeta = roots.front();

  // psi = phi / (T - zeta) over F_{q^d}
  epoly::EPoly lin{Fqd, {-zeta, Fqd->one()}};
  auto [psi, rem] = epoly::divmod(phi_big, lin);
  if (!rem.is_zero()) throw InternalError("zeta is not a root of phi");

  const SymbRing S(Fqd, q);
  SSkew inner;
  inner.c = {S.var_b(), S.var_a()};

  const SSkew phiAB = substitute(S, phi, inner);
  std::vector<SElem> psi_coeffs;
  for (const auto& e : psi.c) psi_coeffs.push_back(S.constant(e));
  const SSkew psiAB = substitute_left(S, psi_coeffs, inner);

  // c_i = zeta - B^{q^i}
  std::vector<SElem> cs;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    cs.push_back(S.sub(S.constant(zeta), S.monomial(Fqd->one(), 0, static_cast<std::uint32_t>(qi))));
    qi *= q;
  }
  SElem c_prod = S.one();
  for (const auto& ci : cs) c_prod = S.mul(c_prod, ci);

  // lhs_factor = A^{[q]_d} F^d - c_0 c_1 ... c_{d-1}
  SSkew lhs_factor;
  lhs_factor.c.assign(d + 1, S.zero());
  lhs_factor.c[0] = S.neg(c_prod);
  lhs_factor.c[d] = S.monomial(Fqd->one(), static_cast<std::uint32_t>(q_bracket(q, d)), 0);
  normalize(S, lhs_factor);
  const SSkew lhs = skew_mul(S, lhs_factor, psiAB);

  // h(F) = sum_k A^{[q]_k} (c_{d-1} ... c_{k+1}) F^k
  SSkew h;
  h.c.assign(d, S.zero());
  for (std::uint32_t k = 0; k < d; ++k) {
    SElem tail = S.one();
    for (std::uint32_t j = k + 1; j < d; ++j) tail = S.mul(tail, cs[j]);
    h.c[k] = S.mul(S.monomial(Fqd->one(), static_cast<std::uint32_t>(q_bracket(q, k)), 0), tail);
  }
  normalize(S, h);
  const SSkew rhs = skew_mul(S, h, phiAB);

  if (!skew_eq(S, lhs, rhs)) return false;

  // Companion identity: phi(AF+B) = -zeta psi(AF+B) + psi(AF+B)(AF+B).
  const SSkew companion = skew_add(S, skew_mul(S, skew_constant(S, S.constant(-zeta)), psiAB),
                                   skew_mul(S, psiAB, inner));
  return skew_eq(S, phiAB, companion);
}

bool verify_lcm_identity(std::uint64_t q, std::uint32_t d) {
  // Deterministic phi over F_q (smallest in the coefficient enumeration).
  std::uint32_t p = 0;
  for (std::uint64_t cand = 2; cand * cand <= q; ++cand) {
    if (q % cand == 0) {
      p = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  if (!p) p = static_cast<std::uint32_t>(q);  // q itself prime
  const std::uint32_t s = gf::q_exponent_over_p(p, q);
  const FieldCtx* Fq = gf::build_field(p, s);
  return verify_lcm_identity(q, d, epoly::smallest_irreducible(Fq, d));
}

}  // namespace drinfeld::ore
