#include "drinfeld/dmod.hpp"

#include <algorithm>
#include <set>

#include "drinfeld/linalg.hpp"
#include "drinfeld/relext.hpp"

namespace drinfeld::dmod {

using epoly::EPoly;
using gf::FieldCtx;
using gf::FieldElem;

namespace {

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint32_t e, const char* what) {
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    acc *= base;
    if (acc > (unsigned __int128)UINT64_MAX) throw LimitError(std::string(what) + " overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t q_bracket(std::uint64_t q, std::uint32_t k) {
  std::uint64_t acc = 0, pw = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

}  // namespace

void DrinfeldParams::validate() const {
  if (!K) throw UsageError("missing base field");
  if (!K->enumerable())
    throw LimitError("base field K must be within the enumeration bound");
  const std::uint32_t s = gf::q_exponent_over_p(K->p(), q);
  if (s == 0 || K->degree() % s != 0) throw UsageError("K does not contain F_q");
  if (g.size() < 2) throw UsageError("g(F) must have degree >= 1");
  for (const auto& e : g)
    if (e.ctx() != K) throw UsageError("g coefficients must lie in K");
  if (g.back().is_zero()) throw UsageError("leading coefficient of g vanishes");
  if (phi.ctx->cardinality_u64() != q) throw UsageError("phi must be over F_q");
  if (phi.degree() < 1) throw UsageError("phi must have degree >= 1");
  if (!(phi.c.back() == phi.ctx->one())) throw UsageError("phi must be monic");
  if (!epoly::is_irreducible(phi)) throw UsageError("phi must be irreducible over F_q");
  // Separability: phi(b) != 0 for b the constant term of g.
  if (epoly::eval_embedded(phi, g.front()).is_zero())
    throw UsageError("phi(b) = 0: the division polynomial is inseparable");
}

DrinfeldParams rank1_params(const FieldCtx* K, std::uint64_t q, const FieldElem& a,
                            const FieldElem& b, const EPoly& phi) {
  if (a.is_zero()) throw UsageError("a must be nonzero");
  DrinfeldParams p{K, q, {b, a}, phi};
  p.validate();
  return p;
}

std::pair<const FieldCtx*, FieldElem> adjoin_root(const FieldCtx* K, const EPoly& phi) {
  const std::uint32_t p = K->p();
  const std::uint32_t s = phi.ctx->degree();
  const std::uint32_t d = static_cast<std::uint32_t>(phi.degree());
  const std::uint32_t deg = std::lcm(K->degree(), s * d);
  const FieldCtx* Kp = gf::build_field(p, deg);
  const auto roots = epoly::distinct_roots(epoly::map_to(phi, Kp));
  if (roots.empty()) throw InternalError("phi has no root in the compositum");
  return {Kp, roots.front()};
}

// ---------------------------------------------------------------------------
// Splitting degree

namespace {

// Dense polynomial over an enumerable field, coefficients as element indexes.
struct IdxPoly {
  std::vector<std::uint64_t> c;
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

void idx_reduce(const FieldCtx* K, IdxPoly& r, const IdxPoly& h_monic) {
  const std::size_t dh = h_monic.c.size() - 1;
  while (r.c.size() > dh) {
    const std::uint64_t coef = r.c.back();
    const std::size_t k = r.c.size() - 1 - dh;
    r.c.pop_back();
    if (coef == 0) continue;
    for (std::size_t j = 0; j < dh; ++j) {
      if (h_monic.c[j] == 0) continue;
      r.c[j + k] = K->idx_sub(r.c[j + k], K->idx_mul(coef, h_monic.c[j]));
    }
  }
  r.normalize();
}

void idx_pow_p(const FieldCtx* K, IdxPoly& y, const IdxPoly& h_monic) {
  const std::uint32_t p = K->p();
  IdxPoly spread;
  spread.c.assign(y.c.empty() ? 0 : (y.c.size() - 1) * p + 1, 0);
  for (std::size_t j = 0; j < y.c.size(); ++j) {
    if (y.c[j]) spread.c[j * p] = K->idx_frob_p(y.c[j], 1);
  }
  idx_reduce(K, spread, h_monic);
  y = std::move(spread);
}

}  // namespace

std::uint32_t splitting_degree(const DrinfeldParams& par, std::uint32_t degree_cap) {
  par.validate();
  const FieldCtx* K = par.K;
  const std::uint32_t s = gf::q_exponent_over_p(K->p(), par.q);
  const std::uint32_t d = par.d();
  const std::uint32_t r = par.rank();

  if (degree_cap == 0) {
    degree_cap = limits().max_degree_over_fp / K->degree();
    if (r == 1) {
      // [K(V):K] equals the order of rho(Frob_K), a divisor of q^d - 1.
      unsigned __int128 bound = 1;
      for (std::uint32_t i = 0; i < d; ++i) bound *= par.q;
      bound -= 1;
      if (bound < degree_cap) degree_cap = static_cast<std::uint32_t>(bound);
    }
  }

  // Rank 1 over K = F_q: Frobenius acts on V as the scalar (zeta - b)/a.
  if (r == 1 && K->cardinality_u64() == par.q) {
    const FieldCtx* Fqd = gf::build_field(K->p(), s * d);
    const auto roots = epoly::distinct_roots(epoly::map_to(par.phi, Fqd));
    const FieldElem zeta = roots.front();
    const FieldElem scalar =
        (zeta - gf::embed(par.g[0], Fqd)) * gf::embed(par.g[1], Fqd).inverse();
    const std::uint64_t e = gf::mult_order(scalar);
    if (e > degree_cap) throw LimitError("splitting degree exceeds the configured cap");
    return static_cast<std::uint32_t>(e);
  }

  // General case: step X^{|K|^e} mod h for the additive radical h.
  const ore::FieldTwist ring = par.ring();
  const ore::FSkew Phi = substitute(ring, par.phi, par.g_skew());
  const std::uint32_t D = d * r;
  const std::uint64_t H = pow_u64_checked(par.q, D, "additive radical degree");
  if (H > (1u << 20)) throw LimitError("additive radical too large to step");

  IdxPoly h;
  h.c.assign(H + 1, 0);
  {
    std::uint64_t e = 1;
    const std::uint64_t lead_inv = K->idx_inv(K->index_of(Phi.c.back()));
    for (std::size_t i = 0; i < Phi.c.size(); ++i) {
      if (!Phi.c[i].is_zero()) h.c[e] = K->idx_mul(K->index_of(Phi.c[i]), lead_inv);
      if (i + 1 < Phi.c.size()) e *= par.q;
    }
  }
  IdxPoly y;
  y.c = {0, 1};
  const std::uint32_t steps_per_e = K->degree();
  for (std::uint32_t e = 1; e <= degree_cap; ++e) {
    for (std::uint32_t t = 0; t < steps_per_e; ++t) idx_pow_p(K, y, h);
    if (y.c.size() == 2 && y.c[0] == 0 && y.c[1] == 1) return e;
  }
  throw LimitError("splitting degree exceeds the configured cap");
}

// ---------------------------------------------------------------------------
// Division points

namespace {

// All F_q-coefficient vectors of length d, as embedded elements of L.
std::vector<FieldElem> fq_elements_in(const FieldCtx* Fq, const FieldCtx* L) {
  std::vector<FieldElem> out;
  out.reserve(Fq->cardinality_u64());
  for (std::uint64_t i = 0; i < Fq->cardinality_u64(); ++i)
    out.push_back(gf::embed(Fq->element_from_index(i), L));
  return out;
}

}  // namespace

DivisionPointData division_points(const DrinfeldParams& par) {
  return division_points_at(par, splitting_degree(par));
}

DivisionPointData division_points_at(const DrinfeldParams& par, std::uint32_t e) {
  par.validate();
  const FieldCtx* K = par.K;
  const FieldCtx* L = gf::build_field(K->p(), K->degree() * e);
  const ore::FieldTwist ring = par.ring();
  const ore::FSkew Phi = substitute(ring, par.phi, par.g_skew());

  DivisionPointData data;
  data.params = par;
  data.L = L;
  data.ext_degree = e;
  data.points = additive_kernel(ring, Phi, L);

  const std::uint32_t D = par.d() * par.rank();
  const std::uint64_t expect = pow_u64_checked(par.q, D, "division point count");
  if (data.points.size() != expect)
    throw InternalError("division point count mismatch at the splitting degree");

  // Deterministic F_{q^d}-basis: repeatedly take the smallest point outside
  // the span of what has been chosen.
  const std::uint32_t s = gf::q_exponent_over_p(K->p(), par.q);
  const FieldCtx* Fq = gf::build_field(K->p(), s);
  const auto fq_in_L = fq_elements_in(Fq, L);
  const auto apply_T = [&](const FieldElem& x) { return additive_eval(ring, par.g_skew(), x); };

  std::set<FieldElem> span;
  span.insert(L->zero());
  for (std::uint32_t bi = 0; bi < par.rank(); ++bi) {
    FieldElem chosen = L->zero();
    bool found = false;
    for (const auto& pt : data.points) {
      if (!span.count(pt)) {
        chosen = pt;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("division points do not span rank many dimensions");
    data.basis.push_back(chosen);
    // Extend the span by all P(T) * chosen + existing.
    std::vector<FieldElem> t_pows{chosen};
    for (std::uint32_t j = 1; j < par.d(); ++j) t_pows.push_back(apply_T(t_pows.back()));
    std::vector<FieldElem> multiples;
    std::vector<std::uint64_t> digit(par.d(), 0);
    const std::uint64_t qq = Fq->cardinality_u64();
    for (;;) {
      FieldElem acc = L->zero();
      for (std::uint32_t j = 0; j < par.d(); ++j) {
        if (digit[j]) acc = acc + fq_in_L[digit[j]] * t_pows[j];
      }
      multiples.push_back(acc);
      std::uint32_t i = 0;
      while (i < par.d() && ++digit[i] == qq) digit[i++] = 0;
      if (i == par.d()) break;
    }
    std::set<FieldElem> next = span;
    for (const auto& m : multiples) {
      for (const auto& sp : span) next.insert(sp + m);
    }
    span = std::move(next);
  }
  for (const auto& b : data.basis) data.t_on_basis.push_back(apply_T(b));
  if (span.size() != data.points.size())
    throw InternalError("F_{q^d}-span does not exhaust the division points");
  return data;
}

// ---------------------------------------------------------------------------
// Character

const FieldElem& CharacterValue::scalar() const {
  if (mat.size() != 1) throw UsageError("scalar() on a rank > 1 character");
  return mat[0][0];
}

CharacterValue character(const DivisionPointData& data) {
  const DrinfeldParams& par = data.params;
  const FieldCtx* K = par.K;
  const FieldCtx* L = data.L;
  const std::uint32_t r = par.rank();
  const std::uint32_t d = par.d();
  const std::uint32_t s = gf::q_exponent_over_p(K->p(), par.q);
  const std::uint32_t N = L->degree();
  const ore::FieldTwist ring = par.ring();
  const auto apply_T = [&](const FieldElem& x) { return additive_eval(ring, par.g_skew(), x); };

  const FieldCtx* Fq = gf::build_field(K->p(), s);
  // F_p-basis of F_q inside L: images of gen_Fq^u.
  std::vector<FieldElem> fq_basis;
  {
    FieldElem cur = Fq->one();
    for (std::uint32_t u = 0; u < s; ++u) {
      fq_basis.push_back(gf::embed(cur, L));
      if (u + 1 < s) cur = cur * Fq->gen();
    }
  }

  // Columns: u_s * T^t * x_j for j < r, t < d, u < s.
  std::vector<std::vector<FieldElem>> t_pows(r);
  for (std::uint32_t j = 0; j < r; ++j) {
    t_pows[j].push_back(data.basis[j]);
    for (std::uint32_t t = 1; t < d; ++t) t_pows[j].push_back(apply_T(t_pows[j].back()));
  }
  const std::size_t cols = static_cast<std::size_t>(r) * d * s;
  linalg::MatFp m(N, cols, K->p());
  std::size_t col = 0;
  for (std::uint32_t j = 0; j < r; ++j) {
    for (std::uint32_t t = 0; t < d; ++t) {
      for (std::uint32_t u = 0; u < s; ++u, ++col) {
        const FieldElem val = fq_basis[u] * t_pows[j][t];
        for (std::uint32_t i = 0; i < N; ++i) m.at(i, col) = val.digits()[i];
      }
    }
  }

  const FieldCtx* Fqd = gf::build_field(K->p(), s * d);
  const FieldElem zeta = epoly::distinct_roots(epoly::map_to(par.phi, Fqd)).front();

  CharacterValue out;
  out.Fqd = Fqd;
  out.mat.assign(r, std::vector<FieldElem>(r, Fqd->zero()));
  for (std::uint32_t i = 0; i < r; ++i) {
    // Frobenius of K applied to x_i is the p^{[K:F_p]} power map.
    FieldElem fx = L->frobenius_p_power(data.basis[i], K->degree());
    auto sol = linalg::solve(m, fx.digits());
    if (!sol) throw InternalError("inconsistent module structure in character extraction");
    std::size_t idx = 0;
    for (std::uint32_t j = 0; j < r; ++j) {
      FieldElem val = Fqd->zero();
      FieldElem zpow = Fqd->one();
      for (std::uint32_t t = 0; t < d; ++t) {
        FieldElem coef = Fq->zero();
        FieldElem gpow = Fq->one();
        for (std::uint32_t u = 0; u < s; ++u, ++idx) {
          if ((*sol)[idx]) coef = coef + Fq->from_u64((*sol)[idx]) * gpow;
          gpow = gpow * (s > 1 ? Fq->gen() : Fq->one());
        }
        val = val + gf::embed(coef, Fqd) * zpow;
        zpow = zpow * zeta;
      }
      out.mat[i][j] = val;
    }
  }

  if (r == 1) {
    const FieldElem& v = out.mat[0][0];
    if (v.is_zero() || gf::mult_order(v) != data.ext_degree)
      throw InternalError("character order does not match the splitting degree");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kummer datum

std::uint64_t KummerDatum::class_order() const {
  const std::uint64_t N = Kprime->cardinality_u64() - 1;
  const std::uint64_t gM = std::gcd(modulus, N);
  const std::uint64_t ord = gf::mult_order(c);
  return ord / std::gcd(ord, N / gM);
}

bool KummerDatum::same_class(const FieldElem& other) const {
  if (other.is_zero()) throw UsageError("zero is not in any power class");
  return gf::power_class_test(c * other.inverse(), modulus).first;
}

KummerDatum kummer_datum(const FieldElem& a, const FieldElem& b, const EPoly& phi,
                         const FieldElem& zeta) {
  if (a.is_zero()) throw UsageError("a must be nonzero");
  const FieldCtx* Kp = zeta.ctx();
  if (!epoly::eval_embedded(phi, zeta).is_zero())
    throw UsageError("zeta is not a root of phi in K'");
  const std::uint64_t q = phi.ctx->cardinality_u64();
  const std::uint32_t s = gf::q_exponent_over_p(Kp->p(), q);
  const std::uint32_t d = static_cast<std::uint32_t>(phi.degree());
  const FieldElem aK = gf::embed(a, Kp), bK = gf::embed(b, Kp);
  FieldElem num = Kp->one();
  FieldElem bq = bK;
  for (std::uint32_t i = 0; i < d; ++i) {
    num = num * (zeta - bq);
    bq = Kp->frobenius_p_power(bq, s);
  }
  const FieldElem den = aK.pow(static_cast<std::int64_t>(q_bracket(q, d)));
  KummerDatum out;
  out.Kprime = Kp;
  out.c = num * den.inverse();
  out.modulus = pow_u64_checked(q, d, "q^d") - 1;
  if (out.c.is_zero()) throw InternalError("Kummer datum vanished (phi(b) = 0?)");
  return out;
}

// ---------------------------------------------------------------------------
// Kummer consistency (the section-2 Lemma, checked in L(zeta))

bool verify_kummer_consistency(const DrinfeldParams& par, const DivisionPointData& data) {
  if (par.rank() != 1) throw UsageError("Kummer consistency is a rank-1 statement");
  const FieldCtx* K = par.K;
  const FieldCtx* L = data.L;
  const std::uint32_t p = K->p();
  const std::uint32_t s = gf::q_exponent_over_p(p, par.q);
  const std::uint32_t d = par.d();
  const std::uint64_t q = par.q;

  // Minimal polynomial of zeta over L, with coefficients computed in F_{q^d}
  // and pulled into L through the common subfield.
  const FieldCtx* Fqd = gf::build_field(p, s * d);
  const FieldElem zqd = epoly::distinct_roots(epoly::map_to(par.phi, Fqd)).front();
  const std::uint32_t NL = L->degree();
  const std::uint32_t gp = std::gcd(s * d, NL);  // [F_qd  intersect L : F_p]
  const std::uint32_t m = (s * d) / gp;          // [L(zeta) : L]

  EPoly minpoly_L{L, {}};
  {
    EPoly acc = epoly::constant(Fqd->one());
    FieldElem conj = zqd;
    for (std::uint32_t j = 0; j < m; ++j) {
      acc = epoly::mul(acc, EPoly{Fqd, {-conj, Fqd->one()}});
      conj = Fqd->frobenius_p_power(conj, NL);
    }
    const FieldCtx* sub = gf::build_field(p, gp);
    const gf::Embedding* into_qd = gf::Registry::instance().embedding(sub, Fqd);
    for (const auto& coef : acc.c) {
      auto pre = into_qd->preimage(coef);
      if (!pre) throw InternalError("minimal polynomial coefficient outside the subfield");
      minpoly_L.c.push_back(gf::embed(*pre, L));
    }
    epoly::normalize(minpoly_L);
  }

  const relext::RelExt E(L, minpoly_L);
  const relext::RelExt::Elem zeta = E.z();
  const relext::RelExt::Elem aE = E.from_base(gf::embed(par.g[1], L));
  const relext::RelExt::Elem bE = E.from_base(gf::embed(par.g[0], L));

  // psi = phi / (T - zeta) by synthetic division, coefficients in E.
  std::vector<relext::RelExt::Elem> psi(d);
  {
    relext::RelExt::Elem carry = E.from_base(gf::embed(par.phi.c[d], L));  // = 1
    for (std::uint32_t k = d; k-- > 0;) {
      psi[k] = carry;
      carry = E.add(E.from_base(gf::embed(par.phi.c[k], L)), E.mul(zeta, carry));
    }
    if (!E.is_zero(carry)) throw InternalError("synthetic division remainder (phi(zeta) != 0)");
  }

  // v = sum psi_k x^{q^k} for the deterministic nonzero division point x.
  const FieldElem x = data.basis.at(0);
  relext::RelExt::Elem xE = E.from_base(x);
  relext::RelExt::Elem v = E.zero();
  {
    relext::RelExt::Elem xq = xE;
    for (std::uint32_t k = 0; k < d; ++k) {
      v = E.add(v, E.mul(psi[k], xq));
      if (k + 1 < d) xq = E.frobenius(xq, s);
    }
  }
  if (E.is_zero(v)) return false;

  // c = prod (zeta - b^{q^i}) / a^{[q]_d} computed alongside v.
  relext::RelExt::Elem c = E.one();
  {
    relext::RelExt::Elem bq = bE;
    for (std::uint32_t i = 0; i < d; ++i) {
      c = E.mul(c, E.sub(zeta, bq));
      bq = E.frobenius(bq, s);
    }
    c = E.mul(c, E.inv(E.pow(aE, static_cast<std::int64_t>(q_bracket(q, d)))));
  }

  const std::uint64_t qd1 = pow_u64_checked(q, d, "q^d") - 1;
  if (!E.eq(E.pow(v, static_cast<std::int64_t>(qd1)), c)) return false;

  // K'(v) = K'(x), compared through degrees over K' = K(zeta).
  const std::uint32_t sKp = std::lcm(K->degree(), s * d);
  return E.degree_over(v, sKp) == E.degree_over(xE, sKp);
}

// ---------------------------------------------------------------------------
// Genus

Rational genus_N(std::uint64_t q, std::uint32_t d, std::uint64_t k) {
  if (q < 2 || d < 1 || k < 1) throw UsageError("genus_N needs q >= 2, d >= 1, k >= 1");
  unsigned __int128 qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    qd *= q;
    if (qd > (unsigned __int128)INT64_MAX) throw LimitError("q^d too large");
  }
  const std::uint64_t M = static_cast<std::uint64_t>((qd - 1) / (q - 1));
  if (M % k != 0) throw UsageError("k does not divide (q^d-1)/(q-1)");
  const std::int64_t deg = static_cast<std::int64_t>(M / k);
  return Rational((static_cast<std::int64_t>(d) - 2) * (deg - 1), 2);
}

// ---------------------------------------------------------------------------
// Surjectivity audit

SurjReport surjectivity_audit(const FieldCtx* K, std::uint64_t q, const EPoly& phi,
                              const std::vector<std::pair<FieldElem, FieldElem>>& samples) {
  SurjReport rep;
  rep.K = K;
  rep.q = q;
  rep.d = static_cast<std::uint32_t>(phi.degree());
  const std::uint64_t M = q_bracket(q, rep.d);  // (q^d-1)/(q-1)
  for (const auto& [a, b] : samples) {
    DrinfeldParams par = rank1_params(K, q, a, b, phi);
    DivisionPointData data = division_points(par);
    CharacterValue chi = character(data);
    const std::uint64_t ord = gf::mult_order(chi.scalar());
    SurjRow row;
    row.a = a;
    row.b = b;
    row.ext_degree = data.ext_degree;
    row.k = ord / std::gcd(ord, q - 1);
    row.surjective = (row.k == M);
    if (row.surjective) ++rep.surjective_count;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Subspace polynomials (section 6)

ore::FSkew subspace_polynomial(const std::vector<FieldElem>& V, std::uint64_t q) {
  if (V.empty()) throw UsageError("empty point set");
  const FieldCtx* L = V.front().ctx();
  const std::uint32_t s = gf::q_exponent_over_p(L->p(), q);
  if (L->degree() % s != 0) throw UsageError("F_q is not a subfield of the ambient field");
  std::set<FieldElem> set(V.begin(), V.end());
  if (set.size() != V.size()) throw UsageError("point set has repetitions");
  // Size must be a power of q.
  {
    std::uint64_t n = set.size();
    while (n % q == 0) n /= q;
    if (n != 1) throw UsageError("point set size is not a power of q");
  }
  if (!set.count(L->zero())) throw UsageError("subspace must contain 0");
  for (const auto& v : set) {
    for (const auto& w : set) {
      if (!set.count(v + w)) throw UsageError("point set not closed under addition");
    }
  }
  const FieldCtx* Fq = gf::build_field(L->p(), s);
  if (q > 2) {
    const FieldElem lambda = gf::embed(Fq->mult_generator(), L);
    for (const auto& v : set) {
      if (!set.count(v * lambda)) throw UsageError("point set not closed under F_q-scaling");
    }
  }

  EPoly prod = epoly::constant(L->one());
  for (const auto& alpha : set) prod = epoly::mul(prod, EPoly{L, {-alpha, L->one()}});

  // Extract coefficients at exponents q^0, q^1, ...; everything else must vanish.
  ore::FSkew out;
  std::vector<FieldElem> coeffs;
  std::uint64_t e = 1;
  for (std::size_t i = 1; i < prod.c.size(); ++i) {
    if (i == e) {
      coeffs.push_back(prod.c[i]);
      e *= q;
    } else if (!prod.c[i].is_zero()) {
      throw InternalError("subspace product is not an additive polynomial");
    }
  }
  if (!prod.c[0].is_zero()) throw InternalError("subspace product has a constant term");
  out.c = std::move(coeffs);
  return out;
}

// ---------------------------------------------------------------------------
// Module embedding test (section 6, semisimple case)

namespace {

std::size_t nullity_over_field(std::vector<std::vector<FieldElem>> m, const FieldCtx* ctx) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    const FieldElem inv = m[rank][col].inverse();
    for (std::size_t j = 0; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const FieldElem f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  (void)ctx;
  return cols - rank;
}

std::vector<std::vector<FieldElem>> mat_mul(const std::vector<std::vector<FieldElem>>& a,
                                            const std::vector<std::vector<FieldElem>>& b,
                                            const FieldCtx* ctx) {
  const std::size_t n = a.size();
  std::vector<std::vector<FieldElem>> out(n, std::vector<FieldElem>(n, ctx->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace

bool module_embeds(std::uint32_t n, const std::vector<std::vector<FieldElem>>& gen_matrix,
                   std::uint32_t free_rank) {
  if (n == 0 || gen_matrix.empty()) throw UsageError("empty group or representation");
  const FieldCtx* Fq = gen_matrix[0][0].ctx();
  if (n % Fq->p() == 0)
    throw UsageError("p divides |H|: modular representation theory is out of scope");
  const std::size_t t = gen_matrix.size();
  for (const auto& row : gen_matrix)
    if (row.size() != t) throw UsageError("representation matrix is not square");

  // M^n must be the identity.
  {
    std::vector<std::vector<FieldElem>> acc(t, std::vector<FieldElem>(t, Fq->zero()));
    for (std::size_t i = 0; i < t; ++i) acc[i][i] = Fq->one();
    for (std::uint32_t k = 0; k < n; ++k) acc = mat_mul(acc, gen_matrix, Fq);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (acc[i][j] != (i == j ? Fq->one() : Fq->zero()))
          throw UsageError("matrix does not have order dividing n");
      }
    }
  }

  // Splitting extension F_{q^s} with s the order of q mod n.
  const std::uint64_t q = Fq->cardinality_u64();
  std::uint32_t sord = 1;
  {
    std::uint64_t acc = q % n;
    while (acc != 1 % n) {
      acc = acc * (q % n) % n;
      ++sord;
      if (sord > n) throw InternalError("order of q mod n not found");
    }
  }
  const FieldCtx* F = gf::build_field(Fq->p(), Fq->degree() * sord);
  const std::uint64_t Q = F->cardinality_u64();
  if ((Q - 1) % n != 0) throw InternalError("splitting field misses the n-th roots of unity");
  const FieldElem gen = F->mult_generator();
  const FieldElem omega = gen.pow(static_cast<std::int64_t>((Q - 1) / n));

  std::vector<std::vector<FieldElem>> M(t, std::vector<FieldElem>(t, F->zero()));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) M[i][j] = gf::embed(gen_matrix[i][j], F);

  std::size_t total = 0;
  bool ok = true;
  FieldElem w = F->one();
  for (std::uint32_t k = 0; k < n; ++k) {
    auto shifted = M;
    for (std::size_t i = 0; i < t; ++i) shifted[i][i] = shifted[i][i] - w;
    const std::size_t mult = nullity_over_field(std::move(shifted), F);
    total += mult;
    if (mult > free_rank) ok = false;
    w = w * omega;
  }
  if (total != t) throw InternalError("representation is not semisimple-diagonalizable");
  return ok;
}

}  // namespace drinfeld::dmod
