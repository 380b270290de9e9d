#include "drinfeld/hypa.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace drinfeld::hypa {

using gf::FieldCtx;
using gf::FieldElem;
using multipoly::MultiPoly;

FieldElem HypACtx::sigma(const FieldElem& x, std::uint32_t times) const {
  return Kp->frobenius_p_power(x, (std::uint64_t)sigma_t * times);
}

HypACtx make_ctx(const FieldCtx* K) {
  if (K->p() != 2) throw UsageError("Hypothesis (A) context needs characteristic 2");
  const std::uint32_t m = K->degree();
  if (m % 3 == 0) throw UsageError("T^3+T+1 is reducible over K when 3 divides [K:F_2]");
  HypACtx ctx;
  ctx.K = K;
  ctx.Kp = gf::build_field(2, 3 * m);
  // The canonical F_8 modulus is T^3 + T + 1, so the class of T is a root.
  const FieldCtx* F8 = gf::build_field(2, 3);
  ctx.zeta = gf::embed(F8->gen(), ctx.Kp);
  const FieldElem zeta2 = ctx.zeta * ctx.zeta;
  bool found = false;
  for (std::uint32_t j = 1; j <= 2; ++j) {
    if (ctx.Kp->frobenius_p_power(ctx.zeta, (std::uint64_t)j * m) == zeta2) {
      ctx.sigma_t = j * m;
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("no Galois element sends zeta to zeta^2");
  // sigma must fix K pointwise and have order 3.
  const FieldElem kg = gf::embed(K->gen(), ctx.Kp);
  if (ctx.sigma(kg) != kg) throw InternalError("sigma moves the base field");
  if (ctx.sigma(ctx.sigma(ctx.sigma(ctx.zeta))) != ctx.zeta)
    throw InternalError("sigma does not have order 3");
  return ctx;
}

// ---------------------------------------------------------------------------
// Coset audit

HypAReport coset_audit(const HypACtx& ctx) {
  const FieldCtx* Kp = ctx.Kp;
  if (!Kp->enumerable()) throw LimitError("K' exceeds the enumeration bound");
  const std::uint64_t N = Kp->cardinality_u64() - 1;
  // log S = {(2^sigma_t - 2) * t mod N}: a subgroup of index gcd(2^t - 2, N).
  const std::uint64_t pw = (std::uint64_t(1) << ctx.sigma_t) % N;
  const std::uint64_t mu = (pw + N - 2 % N) % N;
  const std::uint64_t gS = mu == 0 ? N : std::gcd(mu, N);

  HypAReport rep;
  rep.m = ctx.K->degree();
  rep.subgroup_order = N / gS;
  rep.coset_count = gS;
  rep.coset_covered.assign(gS, false);

  const std::uint64_t cardK = ctx.K->cardinality_u64();
  std::vector<std::uint64_t> embK(cardK);
  for (std::uint64_t i = 0; i < cardK; ++i)
    embK[i] = Kp->index_of(gf::embed(ctx.K->element_from_index(i), Kp));
  const std::uint64_t zidx = Kp->index_of(ctx.zeta);

  for (std::uint64_t ri = 0; ri < cardK; ++ri) {
    for (std::uint64_t si = 0; si < cardK; ++si) {
      if (ri == 0 && si == 0) continue;
      const std::uint64_t idx = Kp->idx_add(embK[ri], Kp->idx_mul(embK[si], zidx));
      rep.coset_covered[Kp->idx_log(idx) % gS] = true;
    }
  }
  for (bool b : rep.coset_covered)
    if (b) ++rep.covered_count;
  rep.satisfies_A = (rep.covered_count == gS);
  if (!rep.satisfies_A) {
    std::uint64_t rho = 0;
    while (rep.coset_covered[rho]) ++rho;
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t k = rho; k < N; k += gS) best = std::min(best, Kp->idx_exp(k));
    rep.witness = Kp->element_from_index(best);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The quartic

namespace {

// Terms of Q(a,b,c): parameter selector (0 = a, 1 = b, 2 = c) and (du, dv, dw).
struct QTerm {
  int par;
  std::uint32_t du, dv, dw;
};

constexpr QTerm kQuarticTerms[] = {
    {2, 4, 0, 0}, {0, 3, 1, 0}, {2, 3, 1, 0}, {1, 2, 2, 0}, {2, 2, 2, 0},
    {0, 1, 3, 0}, {1, 1, 3, 0}, {2, 1, 3, 0}, {2, 0, 4, 0}, {0, 3, 0, 1},
    {1, 3, 0, 1}, {2, 3, 0, 1}, {2, 2, 1, 1}, {0, 1, 2, 1}, {0, 0, 3, 1},
    {2, 0, 3, 1}, {0, 2, 0, 2}, {0, 1, 1, 2}, {1, 0, 2, 2}, {2, 0, 2, 2},
    {1, 1, 0, 3}, {0, 0, 1, 3}, {1, 0, 1, 3}, {2, 0, 1, 3}, {2, 0, 0, 4},
};

// The displayed special quartic (Q).
constexpr std::array<std::array<std::uint32_t, 3>, 11> kQTerms = {{{4, 0, 0},
                                                                   {3, 1, 0},
                                                                   {2, 2, 0},
                                                                   {1, 3, 0},
                                                                   {0, 4, 0},
                                                                   {3, 0, 1},
                                                                   {2, 1, 1},
                                                                   {0, 3, 1},
                                                                   {0, 2, 2},
                                                                   {0, 1, 3},
                                                                   {0, 0, 4}}};

// The homogeneous nonic from the partial-derivative elimination.
constexpr std::array<std::array<std::uint32_t, 3>, 33> kNonicTerms = {{
    {9, 0, 0}, {7, 2, 0}, {6, 3, 0}, {5, 4, 0}, {2, 7, 0}, {1, 8, 0}, {0, 9, 0},
    {7, 1, 1}, {3, 5, 1}, {1, 7, 1}, {7, 0, 2}, {6, 1, 2}, {5, 2, 2}, {1, 6, 2},
    {0, 7, 2}, {6, 0, 3}, {3, 3, 3}, {2, 4, 3}, {0, 6, 3}, {5, 0, 4}, {3, 2, 4},
    {1, 4, 4}, {0, 5, 4}, {3, 1, 5}, {2, 2, 5}, {1, 3, 5}, {2, 1, 6}, {2, 0, 7},
    {1, 1, 7}, {0, 2, 7}, {1, 0, 8}, {0, 1, 8}, {0, 0, 9},
}};

// u^3 + uv^2 + v^3 + uvw + uw^2 + vw^2 + w^3
constexpr std::array<std::array<std::uint32_t, 3>, 7> kCubicTerms = {
    {{3, 0, 0}, {1, 2, 0}, {0, 3, 0}, {1, 1, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}}};

template <std::size_t N>
MultiPoly from_terms_uvw(const FieldCtx* ctx, const std::array<std::array<std::uint32_t, 3>, N>& t) {
  MultiPoly out = multipoly::zero(ctx, 3);
  for (const auto& e : t)
    out = multipoly::add(out, multipoly::monomial(ctx, ctx->one(), {e[0], e[1], e[2]}));
  return out;
}

MultiPoly cubic_poly(const FieldCtx* ctx) { return from_terms_uvw(ctx, kCubicTerms); }

}  // namespace

MultiPoly quartic_abc(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  const FieldCtx* K = a.ctx();
  if (b.ctx() != K || c.ctx() != K) throw UsageError("quartic parameters from different fields");
  const FieldElem* pars[3] = {&a, &b, &c};
  MultiPoly out = multipoly::zero(K, 3);
  for (const auto& t : kQuarticTerms) {
    if (pars[t.par]->is_zero()) continue;
    out = multipoly::add(out, multipoly::monomial(K, *pars[t.par], {t.du, t.dv, t.dw}));
  }
  return out;
}

MultiPoly quartic_symbolic() {
  const FieldCtx* F2 = gf::build_field(2, 1);
  MultiPoly out = multipoly::zero(F2, 5);  // (a, b, u, v, w)
  for (const auto& t : kQuarticTerms) {
    std::vector<std::uint32_t> e{0, 0, t.du, t.dv, t.dw};
    if (t.par == 0) e[0] = 1;
    if (t.par == 1) e[1] = 1;
    // c = 1 contributes no variable.
    out = multipoly::add(out, multipoly::monomial(F2, F2->one(), std::move(e)));
  }
  return out;
}

MultiPoly quartic_Q() { return from_terms_uvw(gf::build_field(2, 1), kQTerms); }

bool quartic_transcription_consistent() {
  const FieldCtx* F2 = gf::build_field(2, 1);
  const MultiPoly q001 = quartic_abc(F2->zero(), F2->zero(), F2->one());
  return q001 == quartic_Q();
}

QuarticCount quartic_solutions(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                               std::size_t keep) {
  const FieldCtx* K = a.ctx();
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw UsageError("(a,b,c) must be nonzero");
  if (!K->enumerable()) throw LimitError("quartic enumeration needs an enumerable field");
  const MultiPoly Q = quartic_abc(a, b, c);
  QuarticCount out;
  const std::uint64_t card = K->cardinality_u64();
  for (std::uint64_t ui = 0; ui < card; ++ui) {
    for (std::uint64_t vi = 0; vi < card; ++vi) {
      for (std::uint64_t wi = 0; wi < card; ++wi) {
        if (ui == 0 && vi == 0 && wi == 0) continue;
        const FieldElem u = K->element_from_index(ui), v = K->element_from_index(vi),
                        w = K->element_from_index(wi);
        if (multipoly::eval(Q, {u, v, w}).is_zero()) {
          ++out.nontrivial_solutions;
          if (out.solutions.size() < keep) out.solutions.push_back({u, v, w});
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The map f and the witness

FieldElem f_map(const HypACtx& ctx, const FieldElem& x) {
  if (x.is_zero()) throw UsageError("f is defined on K'^*");
  const FieldElem x2 = x * x;
  const FieldElem x4 = x2 * x2;
  return x * ctx.sigma_inv(x2) * ctx.sigma(x4);  // sigma^{-2} = sigma
}

bool verify_f_identities(const HypACtx& ctx) {
  const FieldCtx* Kp = ctx.Kp;
  const std::uint64_t N = Kp->cardinality_u64() - 1;
  std::vector<bool> image_seen(Kp->cardinality_u64(), false);
  for (std::uint64_t k = 0; k < N; ++k) {
    const FieldElem x = Kp->exp(k);
    const FieldElem fx = f_map(ctx, x);
    // (i) sigma(f(x)) = f(x)^2 sigma(x)^{-7}
    if (ctx.sigma(fx) != fx * fx * ctx.sigma(x).pow(-7)) return false;
    // (ii) x^7 = f(x)^{-1} sigma^{-1}(f(x))^2
    if (x.pow(7) != fx.inverse() * ctx.sigma_inv(fx).pow(2)) return false;
    const std::uint64_t fi = Kp->index_of(fx);
    if (image_seen[fi]) return false;  // injectivity
    image_seen[fi] = true;
  }
  // f(zeta^i) = zeta^{3i}
  for (std::uint32_t i = 0; i < 7; ++i) {
    if (f_map(ctx, ctx.zeta.pow(i)) != ctx.zeta.pow(3 * i)) return false;
  }
  return true;
}

WitnessReport non_drinfeld_witness(const HypACtx& ctx) {
  const HypAReport audit = coset_audit(ctx);
  if (audit.satisfies_A)
    throw UsageError("K satisfies hypothesis (A); no witness by this construction");
  const FieldCtx* Kp = ctx.Kp;
  const FieldCtx* K = ctx.K;
  const std::uint64_t N = Kp->cardinality_u64() - 1;

  WitnessReport rep;
  rep.y = *audit.witness;
  rep.c = f_map(ctx, rep.y);

  // Attainable Drinfeld values k^7 (zeta-b)(zeta-b^2)(zeta-b^4) / a^7.
  std::set<std::uint64_t> attain;
  const std::uint64_t cardK = K->cardinality_u64();
  for (std::uint64_t ai = 1; ai < cardK; ++ai) {
    const FieldElem a = gf::embed(K->element_from_index(ai), Kp);
    for (std::uint64_t bi = 0; bi < cardK; ++bi) {
      const FieldElem b = gf::embed(K->element_from_index(bi), Kp);
      const FieldElem b2 = b * b;
      const FieldElem b4 = b2 * b2;
      const FieldElem base =
          (ctx.zeta - b) * (ctx.zeta - b2) * (ctx.zeta - b4) * a.pow(-7);
      const std::uint64_t base_idx = Kp->index_of(base);
      for (std::uint64_t kl = 0; kl < N; ++kl) {
        const std::uint64_t k7 = Kp->idx_exp(7 * kl % N);
        attain.insert(Kp->idx_mul(k7, base_idx));
        ++rep.attempts;
      }
    }
  }
  for (std::uint64_t idx : attain) rep.attainable.push_back(Kp->element_from_index(idx));
  rep.certificate_ok = !attain.count(Kp->index_of(rep.c));

  // Degree bookkeeping for L' = K(zeta, v), v^7 = c.
  const std::uint64_t ordc = gf::mult_order(rep.c);
  const std::uint64_t g7 = std::gcd<std::uint64_t>(7, N);
  rep.class_order = ordc / std::gcd(ordc, N / g7);
  rep.galois_degree = 3 * rep.class_order;
  rep.v_outside_K = true;
  for (std::uint64_t xi = 0; xi < cardK; ++xi) {
    const FieldElem x = gf::embed(K->element_from_index(xi), Kp);
    if (!x.is_zero() && x.pow(7) == rep.c) {
      rep.v_outside_K = false;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Nonic degeneracy

NonicReport nonic_degeneracy_check() {
  NonicReport rep;
  const FieldCtx* F2 = gf::build_field(2, 1);
  const MultiPoly nonic = from_terms_uvw(F2, kNonicTerms);
  const MultiPoly cubic = cubic_poly(F2);

  rep.cube_identity = (multipoly::pow(cubic, 3) == nonic);

  {
    const FieldCtx* F8 = gf::build_field(2, 3);
    const FieldElem z = F8->gen();
    const MultiPoly u = multipoly::var(F8, 3, 0), v = multipoly::var(F8, 3, 1),
                    w = multipoly::var(F8, 3, 2);
    auto line = [&](const FieldElem& zv, const FieldElem& zw) {
      return multipoly::add(u, multipoly::add(multipoly::mul(multipoly::constant(F8, 3, zv), v),
                                              multipoly::mul(multipoly::constant(F8, 3, zw), w)));
    };
    const MultiPoly prod = multipoly::mul(
        line(z, z.pow(2)), multipoly::mul(line(z.pow(2), z.pow(4)), line(z.pow(4), z)));
    rep.lines_factorization = (prod == multipoly::map_to(cubic, F8));
  }

  // Eliminate a, b from the vanishing partials of Q(a, b, 1).
  const MultiPoly Q5 = quartic_symbolic();  // vars (a, b, u, v, w)
  const std::vector<std::uint32_t> ab{0, 1};
  const MultiPoly QA = multipoly::coefficient_of(Q5, ab, {1, 0});
  const MultiPoly QB = multipoly::coefficient_of(Q5, ab, {0, 1});
  const MultiPoly QC = multipoly::coefficient_of(Q5, ab, {0, 0});
  std::array<MultiPoly, 3> A, B, C;
  for (std::uint32_t i = 0; i < 3; ++i) {
    const MultiPoly Pi = multipoly::derivative(Q5, 2 + i);
    A[i] = multipoly::coefficient_of(Pi, ab, {1, 0});
    B[i] = multipoly::coefficient_of(Pi, ab, {0, 1});
    C[i] = multipoly::coefficient_of(Pi, ab, {0, 0});
  }
  for (const auto& [i, j] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}}) {
    const MultiPoly delta = multipoly::sub(multipoly::mul(A[i], B[j]), multipoly::mul(A[j], B[i]));
    if (delta.is_zero()) continue;
    const MultiPoly a_num =
        multipoly::sub(multipoly::mul(B[i], C[j]), multipoly::mul(B[j], C[i]));
    const MultiPoly b_num =
        multipoly::sub(multipoly::mul(A[j], C[i]), multipoly::mul(A[i], C[j]));
    MultiPoly N = multipoly::add(multipoly::mul(a_num, QA),
                                 multipoly::add(multipoly::mul(b_num, QB), multipoly::mul(delta, QC)));
    if (N.is_zero()) continue;
    if (N == nonic) {
      rep.elimination_matches = true;
      break;
    }
    const auto quo = multipoly::exact_divide(N, nonic);
    if (quo && quo->terms.size() == 1) {
      rep.elimination_matches = true;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification

ClassifyReport classify_finite_fields(std::uint32_t max_m) {
  ClassifyReport rep;
  for (std::uint32_t m = 1; m <= max_m; ++m) {
    if (m % 3 == 0) continue;
    const HypACtx ctx = make_ctx(gf::build_field(2, m));
    const HypAReport audit = coset_audit(ctx);
    rep.rows.push_back({m, audit.satisfies_A, audit.covered_count, audit.coset_count});
  }
  // Genus-3 Hasse-Weil floor: q + 1 - 6 sqrt(q) > 0 for q >= 36, i.e.
  // (q+1)^2 > 36 q, verified exactly over a wide range.
  rep.hasse_weil_floor_ok = true;
  for (unsigned __int128 q = 36; q <= (1u << 22); ++q) {
    if ((q + 1) * (q + 1) <= 36 * q) {
      rep.hasse_weil_floor_ok = false;
      break;
    }
  }
  return rep;
}

}  // namespace drinfeld::hypa
