#pragma once

#include <optional>
#include <string>

#include "drinfeld/dmod.hpp"

namespace drinfeld::recover {

// Raised for the one genuinely unrealizable configuration: K = F_q with the
// representation's image inside GL_1(F_q) and a degree-2 phi demanded.
class ObstructionError : public std::runtime_error {
 public:
  explicit ObstructionError(const std::string& what) : std::runtime_error(what) {}
};

struct RecoveryResult {
  gf::FieldElem a, b;     // recovered parameters in K
  epoly::EPoly phi;       // over F_q
  std::string branch;     // which construction produced them
  dmod::KummerDatum cert; // c' = kummer datum of (a, b, phi)
  gf::FieldElem target_c; // the class it must match, in K'
  std::optional<gf::FieldElem> root_witness;  // w with w^{q^d-1} = c'/c
  bool class_ok = false;
  // Filled when the splitting field is also checked:
  std::uint32_t expected_degree = 0;
  std::uint32_t actual_degree = 0;
  bool degree_ok = false;
};

// d = 1: (a, b, phi) = (1, -c, T).
RecoveryResult recover_d1(const gf::FieldElem& c, std::uint64_t q);

// d = 2 with zeta in K (so F_{q^2} <= K); c in K^* taken modulo (q^2-1)-th powers.
RecoveryResult recover_d2_zeta_in_K(const gf::FieldCtx* K, std::uint64_t q,
                                    const gf::FieldElem& c);

// d = 2 with zeta outside K; the target cyclic extension of degree m | q^2-1
// is specified by its degree (finite base fields are always cyclic).
RecoveryResult recover_d2_zeta_not_in_K(const gf::FieldCtx* K, std::uint64_t q, std::uint32_t m);

// Dispatcher: realize the degree-m cyclic extension of K with d <= 2.
RecoveryResult recover(const gf::FieldCtx* K, std::uint64_t q, std::uint32_t m);

// The deterministic lambda: smallest element of F_q making T^2+T+lambda
// (char 2) or T^2-lambda (odd) irreducible; returns that phi.
epoly::EPoly deterministic_degree2_phi(const gf::FieldCtx* Fq);

struct CorollaryEquation {
  epoly::EPoly phi;                     // the degree-2 irreducible used
  std::vector<gf::FieldElem> coeffs;    // [c0, c1, c2] in K
  std::vector<std::uint64_t> exponents; // [0, q-1, q^2-1]
};

// Coefficients of a^{q+1} x^{q^2-1} + a(b^q+b+1) x^{q-1} + (b^2+b+lambda)
// (char 2), resp. a^{q+1} x^{q^2-1} + a(b^q+b) x^{q-1} + (b^2-lambda) (odd).
CorollaryEquation corollary_equation(const gf::FieldElem& a, const gf::FieldElem& b,
                                     const gf::FieldElem& lambda);

struct CartanOrbit {
  gf::FieldElem b;                     // (u^{q+1} - lambda)/(u^q - u)
  gf::FieldElem root;                  // one root U of the dagger equation
  std::vector<gf::FieldElem> orbit;    // sigma(U) over the nonsplit Cartan H_mu
  bool splits_completely = false;
  bool product_matches = false;        // prod (X - sigma(U)) equals the polynomial
  bool all_satisfy_dagger = false;
};

// Nonsplit-Cartan orbit of the roots of (u'^{q+1} - lambda) - b(u'^q - u') over F_{q^2}.
CartanOrbit cartan_orbit(std::uint64_t q, const gf::FieldElem& lambda, const gf::FieldElem& u);

// Exhaustive confirmation that (zeta-b)(zeta-b^q) = k^{q+1} r^{q^2-1} has no
// solution over K = F_q (the excluded special case).
bool confirm_fq_exclusion(std::uint64_t q);

}  // namespace drinfeld::recover
