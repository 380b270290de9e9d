#include "drinfeld/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace drinfeld::multipoly {

using gf::FieldCtx;
using gf::FieldElem;

MultiPoly zero(const FieldCtx* ctx, std::uint32_t nvars) { return MultiPoly{ctx, nvars, {}}; }

MultiPoly constant(const FieldCtx* ctx, std::uint32_t nvars, const FieldElem& c) {
  MultiPoly out{ctx, nvars, {}};
  if (!c.is_zero()) out.terms[std::vector<std::uint32_t>(nvars, 0)] = c;
  return out;
}

MultiPoly var(const FieldCtx* ctx, std::uint32_t nvars, std::uint32_t i) {
  if (i >= nvars) throw UsageError("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[i] = 1;
  return monomial(ctx, ctx->one(), std::move(e));
}

MultiPoly monomial(const FieldCtx* ctx, const FieldElem& c, std::vector<std::uint32_t> exps) {
  MultiPoly out{ctx, static_cast<std::uint32_t>(exps.size()), {}};
  if (!c.is_zero()) out.terms[std::move(exps)] = c;
  return out;
}

static void check(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx != b.ctx || a.nvars != b.nvars)
    throw UsageError("multivariate arithmetic across different rings");
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
  check(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms) {
    auto it = out.terms.find(e);
    if (it == out.terms.end()) {
      out.terms[e] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

MultiPoly neg(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return add(a, neg(b)); }

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
  check(a, b);
  MultiPoly out{a.ctx, a.nvars, {}};
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<std::uint32_t> e(a.nvars);
      for (std::uint32_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      FieldElem prod = ca * cb;
      auto it = out.terms.find(e);
      if (it == out.terms.end()) {
        if (!prod.is_zero()) out.terms[std::move(e)] = prod;
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& a, std::uint32_t e) {
  MultiPoly acc = constant(a.ctx, a.nvars, a.ctx->one());
  MultiPoly base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

MultiPoly derivative(const MultiPoly& a, std::uint32_t var_index) {
  if (var_index >= a.nvars) throw UsageError("variable index out of range");
  MultiPoly out{a.ctx, a.nvars, {}};
  for (const auto& [e, c] : a.terms) {
    if (e[var_index] == 0) continue;
    FieldElem nc = c * a.ctx->from_u64(e[var_index]);
    if (nc.is_zero()) continue;
    std::vector<std::uint32_t> ne = e;
    --ne[var_index];
    out.terms[std::move(ne)] = nc;
  }
  return out;
}

int total_degree(const MultiPoly& a) {
  int deg = -1;
  for (const auto& [e, c] : a.terms) {
    const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    deg = std::max(deg, d);
  }
  return deg;
}

bool is_homogeneous(const MultiPoly& a) {
  int deg = -1;
  for (const auto& [e, c] : a.terms) {
    const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

FieldElem eval(const MultiPoly& a, const std::vector<FieldElem>& point) {
  if (point.size() != a.nvars) throw UsageError("evaluation point arity mismatch");
  const FieldCtx* target = a.nvars ? point[0].ctx() : a.ctx;
  FieldElem acc = target->zero();
  for (const auto& [e, c] : a.terms) {
    FieldElem term = gf::embed(c, target);
    for (std::uint32_t i = 0; i < a.nvars; ++i) {
      if (e[i]) term = term * point[i].pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly coefficient_of(const MultiPoly& a, const std::vector<std::uint32_t>& fixed_vars,
                         const std::vector<std::uint32_t>& fixed_exps) {
  if (fixed_vars.size() != fixed_exps.size()) throw UsageError("fixed vars/exps mismatch");
  std::vector<bool> drop(a.nvars, false);
  for (auto v : fixed_vars) drop[v] = true;
  MultiPoly out{a.ctx, static_cast<std::uint32_t>(a.nvars - fixed_vars.size()), {}};
  for (const auto& [e, c] : a.terms) {
    bool match = true;
    for (std::size_t i = 0; i < fixed_vars.size(); ++i) {
      if (e[fixed_vars[i]] != fixed_exps[i]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    std::vector<std::uint32_t> ne;
    ne.reserve(out.nvars);
    for (std::uint32_t i = 0; i < a.nvars; ++i)
      if (!drop[i]) ne.push_back(e[i]);
    out.terms[std::move(ne)] = c;
  }
  return out;
}

MultiPoly map_to(const MultiPoly& a, const FieldCtx* target) {
  MultiPoly out{target, a.nvars, {}};
  for (const auto& [e, c] : a.terms) out.terms[e] = gf::embed(c, target);
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  check(a, b);
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  MultiPoly rem = a;
  MultiPoly quo{a.ctx, a.nvars, {}};
  // Leading term of b in the map's lexicographic order (largest key).
  const auto& lead_e = std::prev(b.terms.end())->first;
  const FieldElem lead_inv = std::prev(b.terms.end())->second.inverse();
  while (!rem.is_zero()) {
    const auto& re = std::prev(rem.terms.end())->first;
    const FieldElem rc = std::prev(rem.terms.end())->second;
    std::vector<std::uint32_t> de(a.nvars);
    for (std::uint32_t i = 0; i < a.nvars; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      de[i] = re[i] - lead_e[i];
    }
    MultiPoly t = monomial(a.ctx, rc * lead_inv, std::move(de));
    quo = add(quo, t);
    rem = sub(rem, mul(t, b));
  }
  return quo;
}

}  // namespace drinfeld::multipoly
