#pragma once

#include <cstdint>
#include <vector>

#include "drinfeld/epoly.hpp"
#include "drinfeld/gf.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld::dmod {

// Parameters of the construction: base field K containing F_q, the skew
// polynomial g(F) of degree r over K, and a monic irreducible phi of degree
// d over F_q with phi(b) != 0 for b the constant term of g.
struct DrinfeldParams {
  const gf::FieldCtx* K = nullptr;
  std::uint64_t q = 0;
  std::vector<gf::FieldElem> g;  // coefficients of g(F) in K, low F-degree first
  epoly::EPoly phi;              // over the F_q context

  std::uint32_t rank() const { return static_cast<std::uint32_t>(g.size()) - 1; }
  std::uint32_t d() const { return static_cast<std::uint32_t>(phi.degree()); }
  void validate() const;
  ore::FieldTwist ring() const { return ore::FieldTwist(K, q); }
  ore::FSkew g_skew() const { return ore::FSkew{g}; }
};

DrinfeldParams rank1_params(const gf::FieldCtx* K, std::uint64_t q, const gf::FieldElem& a,
                            const gf::FieldElem& b, const epoly::EPoly& phi);

// The set V of phi-division points with its F_{q^d}-structure, inside the
// smallest field extension of K containing all of them.
struct DivisionPointData {
  DrinfeldParams params;
  const gf::FieldCtx* L = nullptr;  // K(V)
  std::uint32_t ext_degree = 0;     // [K(V):K]
  std::vector<gf::FieldElem> points;
  std::vector<gf::FieldElem> basis;       // F_{q^d}-basis, deterministic choice
  std::vector<gf::FieldElem> t_on_basis;  // T-action images of the basis
};

// [K(V):K], found by increasing extension degree. For rank 1 over K = F_q the
// Frobenius acts as the scalar (zeta - b)/a and the order is read off directly;
// otherwise e is stepped via X^{|K|^e} mod (the additive radical).
std::uint32_t splitting_degree(const DrinfeldParams& p, std::uint32_t degree_cap = 0);

DivisionPointData division_points(const DrinfeldParams& p);
// Same, at an externally determined splitting degree (e.g. a predicted order).
DivisionPointData division_points_at(const DrinfeldParams& p, std::uint32_t ext_degree);

// rho(Frob_K) expressed through the F_q[T]/(phi)-scalar action.
struct CharacterValue {
  const gf::FieldCtx* Fqd = nullptr;
  std::vector<std::vector<gf::FieldElem>> mat;  // r x r over Fqd
  const gf::FieldElem& scalar() const;          // rank-1 shortcut
};

CharacterValue character(const DivisionPointData& data);

// c = (zeta - b)(zeta - b^q)...(zeta - b^{q^{d-1}}) / a^{1+q+...+q^{d-1}},
// an element of K' = K(zeta) considered modulo (q^d - 1)-th powers.
struct KummerDatum {
  const gf::FieldCtx* Kprime = nullptr;
  gf::FieldElem c;
  std::uint64_t modulus = 0;  // q^d - 1
  std::uint64_t class_order() const;
  bool same_class(const gf::FieldElem& other) const;
};

KummerDatum kummer_datum(const gf::FieldElem& a, const gf::FieldElem& b, const epoly::EPoly& phi,
                         const gf::FieldElem& zeta);

// The compositum K(zeta) with a deterministic root of phi in it.
std::pair<const gf::FieldCtx*, gf::FieldElem> adjoin_root(const gf::FieldCtx* K,
                                                          const epoly::EPoly& phi);

// Checks v = (psi(aF+b))x against v^{q^d-1} = c and K'(v) = K'(x), working in
// L(zeta) realized as a relative extension of L = K(V).
bool verify_kummer_consistency(const DrinfeldParams& p, const DivisionPointData& data);

// g_N = (d-2)((q^d-1)/(k(q-1)) - 1)/2; k must divide (q^d-1)/(q-1).
Rational genus_N(std::uint64_t q, std::uint32_t d, std::uint64_t k);

struct SurjRow {
  gf::FieldElem a, b;
  std::uint32_t ext_degree = 0;
  std::uint64_t k = 0;  // order of the image of rho(Frob) in F_{q^d}^*/F_q^*
  bool surjective = false;
};

struct SurjReport {
  const gf::FieldCtx* K = nullptr;
  std::uint64_t q = 0;
  std::uint32_t d = 0;
  std::vector<SurjRow> rows;
  std::uint64_t surjective_count = 0;
};

SurjReport surjectivity_audit(const gf::FieldCtx* K, std::uint64_t q, const epoly::EPoly& phi,
                              const std::vector<std::pair<gf::FieldElem, gf::FieldElem>>& samples);

// The monic additive polynomial with root set exactly V (an F_q-subspace).
ore::FSkew subspace_polynomial(const std::vector<gf::FieldElem>& V, std::uint64_t q);

// Semisimple embedding test: does the C_n-representation given by the matrix
// of a generator embed into a free F_q[C_n]-module of the given rank?
bool module_embeds(std::uint32_t n, const std::vector<std::vector<gf::FieldElem>>& gen_matrix,
                   std::uint32_t free_rank);

}  // namespace drinfeld::dmod
