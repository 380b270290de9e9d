#pragma once

#include <map>
#include <optional>
#include <vector>

#include "drinfeld/gf.hpp"

namespace drinfeld::multipoly {

// Sparse multivariate polynomial over a FieldCtx with a fixed variable count.
// Monomials are exponent vectors; the term map keeps no zero coefficients.
struct MultiPoly {
  const gf::FieldCtx* ctx = nullptr;
  std::uint32_t nvars = 0;
  std::map<std::vector<std::uint32_t>, gf::FieldElem> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MultiPoly& o) const {
    return ctx == o.ctx && nvars == o.nvars && terms == o.terms;
  }
};

MultiPoly zero(const gf::FieldCtx* ctx, std::uint32_t nvars);
MultiPoly constant(const gf::FieldCtx* ctx, std::uint32_t nvars, const gf::FieldElem& c);
MultiPoly var(const gf::FieldCtx* ctx, std::uint32_t nvars, std::uint32_t i);
MultiPoly monomial(const gf::FieldCtx* ctx, const gf::FieldElem& c,
                   std::vector<std::uint32_t> exps);

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& a, std::uint32_t e);

MultiPoly derivative(const MultiPoly& a, std::uint32_t var_index);

// Total degree (-1 for zero); homogeneity check.
int total_degree(const MultiPoly& a);
bool is_homogeneous(const MultiPoly& a);

gf::FieldElem eval(const MultiPoly& a, const std::vector<gf::FieldElem>& point);

// Coefficient extraction: the polynomial in the remaining variables obtained
// by collecting terms whose exponents in `fixed_vars` match `fixed_exps`
// exactly (those variables are removed from the result's monomials).
MultiPoly coefficient_of(const MultiPoly& a, const std::vector<std::uint32_t>& fixed_vars,
                         const std::vector<std::uint32_t>& fixed_exps);

// Coefficient-wise embedding into a larger field.
MultiPoly map_to(const MultiPoly& a, const gf::FieldCtx* target);

// Exact division: returns a/b if b divides a (multivariate long division in
// lexicographic order), nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

}  // namespace drinfeld::multipoly
