#include "drinfeld/epoly.hpp"

#include <algorithm>

namespace drinfeld::epoly {

using gf::FieldCtx;
using gf::FieldElem;

EPoly zero(const FieldCtx* ctx) { return EPoly{ctx, {}}; }

EPoly constant(const FieldElem& e) {
  EPoly f{e.ctx(), {e}};
  normalize(f);
  return f;
}

EPoly from_fp(const fppoly::Poly& f, const FieldCtx* ctx) {
  EPoly out{ctx, {}};
  for (std::uint32_t v : f) out.c.push_back(ctx->from_u64(v));
  normalize(out);
  return out;
}

EPoly x_power(const FieldCtx* ctx, std::size_t k) {
  EPoly out{ctx, std::vector<FieldElem>(k + 1, ctx->zero())};
  out.c[k] = ctx->one();
  return out;
}

void normalize(EPoly& f) {
  while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}

static void check_ring(const EPoly& a, const EPoly& b) {
  if (a.ctx != b.ctx) throw UsageError("polynomial arithmetic across different fields");
}

EPoly add(const EPoly& a, const EPoly& b) {
  check_ring(a, b);
  EPoly out{a.ctx, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), a.ctx->zero());
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    FieldElem s = a.ctx->zero();
    if (i < a.c.size()) s = s + a.c[i];
    if (i < b.c.size()) s = s + b.c[i];
    out.c[i] = s;
  }
  normalize(out);
  return out;
}

EPoly sub(const EPoly& a, const EPoly& b) {
  check_ring(a, b);
  EPoly out{a.ctx, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), a.ctx->zero());
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    FieldElem s = a.ctx->zero();
    if (i < a.c.size()) s = s + a.c[i];
    if (i < b.c.size()) s = s - b.c[i];
    out.c[i] = s;
  }
  normalize(out);
  return out;
}

EPoly mul(const EPoly& a, const EPoly& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return zero(a.ctx);
  EPoly out{a.ctx, std::vector<FieldElem>(a.c.size() + b.c.size() - 1, a.ctx->zero())};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
    }
  }
  normalize(out);
  return out;
}

EPoly make_monic(const EPoly& f) {
  if (f.is_zero()) return f;
  const FieldElem inv = f.c.back().inverse();
  EPoly out{f.ctx, {}};
  out.c.reserve(f.c.size());
  for (const auto& e : f.c) out.c.push_back(e * inv);
  return out;
}

std::pair<EPoly, EPoly> divmod(const EPoly& f, const EPoly& g) {
  check_ring(f, g);
  if (g.is_zero()) throw UsageError("polynomial division by zero");
  EPoly r = f;
  EPoly q{f.ctx, {}};
  const FieldElem lead_inv = g.c.back().inverse();
  while (r.degree() >= g.degree()) {
    const std::size_t k = r.degree() - g.degree();
    const FieldElem coef = r.c.back() * lead_inv;
    if (q.c.size() < k + 1) q.c.resize(k + 1, f.ctx->zero());
    q.c[k] = q.c[k] + coef;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      r.c[i + k] = r.c[i + k] - coef * g.c[i];
    }
    normalize(r);
  }
  normalize(q);
  return {q, r};
}

EPoly mod(const EPoly& f, const EPoly& g) { return divmod(f, g).second; }

EPoly gcd(EPoly a, EPoly b) {
  normalize(a);
  normalize(b);
  while (!b.is_zero()) {
    EPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

EPoly powmod(const EPoly& base, std::uint64_t e, const EPoly& modulus) {
  EPoly result = constant(base.ctx->one());
  EPoly b = mod(base, modulus);
  while (e) {
    if (e & 1) result = mod(mul(result, b), modulus);
    b = mod(mul(b, b), modulus);
    e >>= 1;
  }
  return result;
}

EPoly pow_q_mod(const EPoly& f, std::uint64_t q, const EPoly& modulus) {
  if (f.is_zero()) return f;
  const std::uint32_t s = gf::q_exponent_over_p(f.ctx->p(), q);
  EPoly spread{f.ctx, std::vector<FieldElem>((f.c.size() - 1) * q + 1, f.ctx->zero())};
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i].is_zero()) continue;
    spread.c[i * q] = f.ctx->frobenius_p_power(f.c[i], s);
  }
  normalize(spread);
  return mod(spread, modulus);
}

FieldElem eval(const EPoly& f, const FieldElem& x) {
  FieldElem acc = x.ctx()->zero();
  for (std::size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
  return acc;
}

FieldElem eval_embedded(const EPoly& f, const FieldElem& x) {
  FieldElem acc = x.ctx()->zero();
  for (std::size_t i = f.c.size(); i-- > 0;) acc = acc * x + gf::embed(f.c[i], x.ctx());
  return acc;
}

EPoly map_to(const EPoly& f, const FieldCtx* target) {
  EPoly out{target, {}};
  out.c.reserve(f.c.size());
  for (const auto& e : f.c) out.c.push_back(gf::embed(e, target));
  return out;
}

bool is_irreducible(const EPoly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const std::uint64_t q = f.ctx->cardinality_u64();
  const EPoly fm = make_monic(f);
  const EPoly x = x_power(f.ctx, 1);
  std::vector<std::uint32_t> prime_divs;
  {
    std::uint32_t m = static_cast<std::uint32_t>(d);
    for (std::uint32_t r = 2; r * r <= m; ++r) {
      if (m % r == 0) {
        prime_divs.push_back(r);
        while (m % r == 0) m /= r;
      }
    }
    if (m > 1) prime_divs.push_back(m);
  }
  EPoly cur = mod(x, fm);
  std::vector<EPoly> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = cur;
  for (int k = 1; k <= d; ++k) {
    cur = pow_q_mod(cur, q, fm);
    frob[k] = cur;
  }
  if (!sub(frob[d], mod(x, fm)).is_zero()) return false;
  for (std::uint32_t r : prime_divs) {
    EPoly g = gcd(sub(frob[d / r], mod(x, fm)), fm);
    if (g.degree() != 0) return false;
  }
  return true;
}

EPoly smallest_irreducible(const FieldCtx* ctx, std::uint32_t d) {
  if (d == 0) throw UsageError("degree must be positive");
  if (d == 1) return x_power(ctx, 1);  // T
  const std::uint64_t q = ctx->cardinality_u64();
  std::vector<std::uint64_t> idx(d, 0);
  for (;;) {
    EPoly f{ctx, {}};
    for (std::uint32_t i = 0; i < d; ++i) f.c.push_back(ctx->element_from_index(idx[i]));
    f.c.push_back(ctx->one());
    if (is_irreducible(f)) return f;
    std::uint32_t i = 0;
    while (i < d && ++idx[i] == q) idx[i++] = 0;
    if (i == d) throw InternalError("no irreducible found over extension field");
  }
}

std::vector<std::pair<FieldElem, int>> roots_with_multiplicity(const EPoly& f) {
  if (f.is_zero()) throw UsageError("roots of the zero polynomial");
  const FieldCtx* ctx = f.ctx;
  if (!ctx->enumerable()) throw LimitError("exhaustive root search needs an enumerable field");
  std::vector<std::pair<FieldElem, int>> out;
  EPoly cur = f;
  const std::uint64_t q = ctx->cardinality_u64();
  for (std::uint64_t i = 0; i < q && cur.degree() > 0; ++i) {
    FieldElem cand = ctx->element_from_index(i);
    int mult = 0;
    while (cur.degree() > 0 && eval(cur, cand).is_zero()) {
      // Deflate by (X - cand).
      EPoly lin{ctx, {-cand, ctx->one()}};
      auto [quo, rem] = divmod(cur, lin);
      if (!rem.is_zero()) throw InternalError("deflation remainder");
      cur = std::move(quo);
      ++mult;
    }
    if (mult) out.emplace_back(cand, mult);
  }
  return out;
}

std::vector<FieldElem> distinct_roots(const EPoly& f) {
  std::vector<FieldElem> out;
  for (auto& [r, m] : roots_with_multiplicity(f)) out.push_back(r);
  return out;
}

}  // namespace drinfeld::epoly
