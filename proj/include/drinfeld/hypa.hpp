#pragma once

#include <array>
#include <optional>
#include <vector>

#include "drinfeld/gf.hpp"
#include "drinfeld/multipoly.hpp"

namespace drinfeld::hypa {

// Context for q = 2, d = 3, phi = T^3 + T + 1 over a base K = F_{2^m} with
// 3 not dividing m, so phi stays irreducible over K. sigma is the element of
// Gal(K'/K) with sigma(zeta) = zeta^2.
struct HypACtx {
  const gf::FieldCtx* K = nullptr;
  const gf::FieldCtx* Kp = nullptr;  // K' = K(zeta) = F_{2^{3m}}
  gf::FieldElem zeta;
  std::uint32_t sigma_t = 0;  // sigma = x -> x^(2^sigma_t)

  gf::FieldElem sigma(const gf::FieldElem& x, std::uint32_t times = 1) const;
  gf::FieldElem sigma_inv(const gf::FieldElem& x) const { return sigma(x, 2); }
};

HypACtx make_ctx(const gf::FieldCtx* K);

struct HypAReport {
  std::uint32_t m = 0;
  std::uint64_t subgroup_order = 0;   // |S|
  std::uint64_t coset_count = 0;      // index of S in K'^*
  std::vector<bool> coset_covered;    // per coset class
  std::uint64_t covered_count = 0;
  bool satisfies_A = false;
  std::optional<gf::FieldElem> witness;  // smallest element of the first uncovered coset
};

// Enumerates S = {sigma(x) x^{-2}} and marks which cosets of S in K'^*
// contain an element r + s*zeta with r, s in K.
HypAReport coset_audit(const HypACtx& ctx);

// The 25-term quartic Q(a,b,c) in u, v, w with parameter elements a, b, c.
multipoly::MultiPoly quartic_abc(const gf::FieldElem& a, const gf::FieldElem& b,
                                 const gf::FieldElem& c);
// Symbolic 5-variable version over F_2 with variables (a, b, u, v, w).
multipoly::MultiPoly quartic_symbolic();
// The displayed special quartic (Q) = Q(0,0,1) over F_2 in (u, v, w).
multipoly::MultiPoly quartic_Q();
// Transcription cross-check: Q(0,0,1) equals (Q) term for term.
bool quartic_transcription_consistent();

struct QuarticCount {
  std::uint64_t nontrivial_solutions = 0;
  std::vector<std::array<gf::FieldElem, 3>> solutions;  // capped
};
QuarticCount quartic_solutions(const gf::FieldElem& a, const gf::FieldElem& b,
                               const gf::FieldElem& c, std::size_t keep = 64);

// f(x) = x sigma^{-1}(x^2) sigma^{-2}(x^4), a multiplicative endomorphism.
gf::FieldElem f_map(const HypACtx& ctx, const gf::FieldElem& x);

// Pointwise identities (i), (ii) and injectivity of f over all of K'^*,
// plus f(zeta^i) = zeta^{3i} for all i.
bool verify_f_identities(const HypACtx& ctx);

struct WitnessReport {
  gf::FieldElem y;  // uncovered-coset representative
  gf::FieldElem c;  // f(y)
  bool certificate_ok = false;       // c outside the attainable value set
  std::uint64_t attempts = 0;        // number of (a, b, k) triples exhausted
  std::vector<gf::FieldElem> attainable;  // deduplicated attainable values
  std::uint64_t class_order = 0;     // order of c modulo 7th powers (expect 7)
  std::uint64_t galois_degree = 0;   // [K(zeta, v) : K] (expect 21)
  bool v_outside_K = false;
};

// Builds the non-Drinfeld witness c = f(y) and exhaustively certifies that
// c != k^7 (zeta-b)(zeta-b^2)(zeta-b^4)/a^7 for all a in K^*, b in K, k in K'^*.
WitnessReport non_drinfeld_witness(const HypACtx& ctx);

struct NonicReport {
  bool elimination_matches = false;  // partial elimination reproduces the nonic
  bool cube_identity = false;        // nonic == cubic^3 over F_2
  bool lines_factorization = false;  // cubic factors into the three lines over F_8
  bool ok() const { return elimination_matches && cube_identity && lines_factorization; }
};
NonicReport nonic_degeneracy_check();

struct ClassifyRow {
  std::uint32_t m = 0;
  bool satisfies_A = false;
  std::uint64_t covered = 0, cosets = 0;
};
struct ClassifyReport {
  std::vector<ClassifyRow> rows;
  bool hasse_weil_floor_ok = false;  // q + 1 - 6 sqrt(q) > 0 for q >= 36, exactly
};
ClassifyReport classify_finite_fields(std::uint32_t max_m);

}  // namespace drinfeld::hypa
