#include "drinfeld/recover.hpp"

#include <numeric>

#include "drinfeld/linalg.hpp"

namespace drinfeld::recover {

using dmod::KummerDatum;
using epoly::EPoly;
using gf::FieldCtx;
using gf::FieldElem;

namespace {

const FieldCtx* fq_of(const FieldCtx* K, std::uint64_t q) {
  const std::uint32_t s = gf::q_exponent_over_p(K->p(), q);
  if (s == 0 || K->degree() % s != 0) throw UsageError("K does not contain F_q");
  return gf::build_field(K->p(), s);
}

// x in K' written as r + s*zeta with r, s in K (K'/K of degree 2).
std::pair<FieldElem, FieldElem> decompose_over(const FieldElem& x, const FieldCtx* K,
                                               const FieldElem& zeta) {
  const FieldCtx* Kp = x.ctx();
  const std::uint32_t nK = K->degree();
  if (Kp->degree() != 2 * nK) throw UsageError("decompose_over needs [K':K] = 2");
  linalg::MatFp m(Kp->degree(), 2 * nK, Kp->p());
  for (std::uint32_t j = 0; j < 2; ++j) {
    for (std::uint32_t i = 0; i < nK; ++i) {
      std::vector<std::uint32_t> d(nK, 0);
      d[i] = 1;
      FieldElem col = gf::embed(K->from_digits(std::move(d)), Kp);
      if (j == 1) col = col * zeta;
      for (std::uint32_t row = 0; row < Kp->degree(); ++row)
        m.at(row, j * nK + i) = col.digits()[row];
    }
  }
  auto sol = linalg::solve(std::move(m), x.digits());
  if (!sol) throw InternalError("element not in K + K*zeta");
  std::vector<std::uint32_t> rd(sol->begin(), sol->begin() + nK);
  std::vector<std::uint32_t> sd(sol->begin() + nK, sol->end());
  return {K->from_digits(std::move(rd)), K->from_digits(std::move(sd))};
}

void certify(RecoveryResult& res, const FieldCtx* K, std::uint64_t q, std::uint32_t expected_m) {
  const auto [Kp, zeta] = dmod::adjoin_root(K, res.phi);
  res.cert = dmod::kummer_datum(res.a, res.b, res.phi, zeta);
  if (res.target_c.ctx() != Kp) throw InternalError("certificate target lives in the wrong field");
  res.class_ok = res.cert.same_class(res.target_c);
  if (res.class_ok) {
    auto [ok, w] = gf::power_class_test(res.cert.c * res.target_c.inverse(), res.cert.modulus);
    (void)ok;
    res.root_witness = w;
  }
  res.expected_degree = expected_m;
  const dmod::DrinfeldParams par = dmod::rank1_params(K, q, res.a, res.b, res.phi);
  res.actual_degree = dmod::splitting_degree(par);
  res.degree_ok = (res.actual_degree == expected_m);
}

}  // namespace

EPoly deterministic_degree2_phi(const FieldCtx* Fq) {
  const std::uint64_t card = Fq->cardinality_u64();
  for (std::uint64_t i = 0; i < card; ++i) {
    const FieldElem lambda = Fq->element_from_index(i);
    EPoly phi{Fq, {}};
    if (Fq->p() == 2) {
      phi.c = {lambda, Fq->one(), Fq->one()};  // T^2 + T + lambda
    } else {
      phi.c = {-lambda, Fq->zero(), Fq->one()};  // T^2 - lambda
    }
    if (epoly::is_irreducible(phi)) return phi;
  }
  throw InternalError("no irreducible degree-2 polynomial found");
}

RecoveryResult recover_d1(const FieldElem& c, std::uint64_t q) {
  if (c.is_zero()) throw UsageError("Kummer datum c must be nonzero");
  const FieldCtx* K = c.ctx();
  const FieldCtx* Fq = fq_of(K, q);
  RecoveryResult res;
  res.phi = epoly::x_power(Fq, 1);  // phi = T, zeta = 0
  res.a = K->one();
  res.b = -c;
  res.branch = "d1";
  res.target_c = c;
  KummerDatum kd = dmod::kummer_datum(res.a, res.b, res.phi, K->zero());
  certify(res, K, q, static_cast<std::uint32_t>(kd.class_order()));
  return res;
}

RecoveryResult recover_d2_zeta_in_K(const FieldCtx* K, std::uint64_t q, const FieldElem& c) {
  if (c.is_zero()) throw UsageError("Kummer datum c must be nonzero");
  if (c.ctx() != K) throw UsageError("c must lie in K");
  const FieldCtx* Fq = fq_of(K, q);
  const std::uint32_t s = Fq->degree();
  if (K->degree() % (2 * s) != 0) throw UsageError("F_{q^2} is not contained in K");
  const EPoly phi = deterministic_degree2_phi(Fq);
  const auto [Kp, zeta] = dmod::adjoin_root(K, phi);
  if (Kp != K) throw InternalError("K(zeta) should equal K here");
  const std::uint64_t q2m1 = q * q - 1;

  RecoveryResult res;
  res.phi = phi;
  res.target_c = c;
  const KummerDatum target{K, c, q2m1};
  const std::uint32_t m = static_cast<std::uint32_t>(target.class_order());

  FieldElem cw = c;
  if (cw == K->one()) {
    if (K->cardinality_u64() > q * q) {
      // Replace c by an equivalent representative different from 1.
      for (std::uint64_t i = 2; i < K->cardinality_u64(); ++i) {
        const FieldElem t = K->element_from_index(i);
        if (t.is_zero()) continue;
        const FieldElem tp = t.pow(static_cast<std::int64_t>(q2m1));
        if (tp != K->one()) {
          cw = tp;  // c * t^{q^2-1} with c = 1
          break;
        }
      }
      if (cw == K->one()) throw InternalError("no nontrivial (q^2-1)-th power found");
    } else {
      // K = F_{q^2} = L: find b with (zeta-b)(zeta-b^q) a (q+1)-th power in K^*.
      const FieldElem lambda = K->p() == 2 ? phi.c[0] : -phi.c[0];
      const FieldElem lamK = gf::embed(lambda, K);
      for (std::uint64_t i = 0; i < K->cardinality_u64(); ++i) {
        const FieldElem u = K->element_from_index(i);
        const FieldElem uq = K->frobenius_p_power(u, s);
        if (uq == u) continue;
        FieldElem b;
        if (K->p() == 2) {
          b = (u.pow(static_cast<std::int64_t>(q + 1)) + u + lamK) * (uq + u).inverse();
        } else {
          b = (u.pow(static_cast<std::int64_t>(q + 1)) - lamK) * (uq - u).inverse();
        }
        if (epoly::eval_embedded(phi, b).is_zero()) continue;
        res.a = (u - b);
        res.b = b;
        res.branch = "d2-i-norm-form";
        certify(res, K, q, m);
        if (res.class_ok) return res;
      }
      throw ObstructionError("no norm-form parameter found over K = F_{q^2}");
    }
  }
  const FieldElem zq = K->frobenius_p_power(zeta, s);
  res.b = (cw * zq - zeta) * (cw - K->one()).inverse();
  res.a = zq - res.b;
  res.branch = "d2-i";
  certify(res, K, q, m);
  return res;
}

namespace {

// Smallest-log solution of t such that mult * t == target (mod modulus).
std::uint64_t solve_congruence(std::uint64_t mult, std::uint64_t target, std::uint64_t modulus) {
  const std::uint64_t g = std::gcd(mult, modulus);
  if (target % g != 0) throw InternalError("linear congruence has no solution");
  const std::uint64_t m2 = modulus / g;
  // Inverse of (mult/g) mod m2.
  std::int64_t a = static_cast<std::int64_t>((mult / g) % m2), b = static_cast<std::int64_t>(m2);
  std::int64_t x0 = 1, x1 = 0;
  while (b) {
    const std::int64_t qq = a / b;
    std::int64_t t = a - qq * b;
    a = b;
    b = t;
    t = x0 - qq * x1;
    x0 = x1;
    x1 = t;
  }
  std::uint64_t inv = static_cast<std::uint64_t>(((x0 % (std::int64_t)m2) + (std::int64_t)m2) % (std::int64_t)m2);
  return (unsigned __int128)(target / g % m2) * inv % m2;
}

// Deterministic Kummer generator of the cyclic degree-mm extension Lbig/Kp:
// v = g^{(|Lbig^*| / |Kp^*|) / mm} has v^{q^2-1} in Kp^* and degree mm over Kp.
FieldElem kummer_generator(const FieldCtx* Lbig, const FieldCtx* Kp, std::uint32_t mm,
                           std::uint64_t q2m1) {
  const std::uint64_t Nbig = Lbig->cardinality_u64() - 1;
  const std::uint64_t N0 = Kp->cardinality_u64() - 1;
  const std::uint64_t D = Nbig / N0;
  if (D % mm != 0) throw InternalError("Kummer generator exponent not integral");
  (void)q2m1;
  const FieldElem g = Lbig->mult_generator();
  const FieldElem v = g.pow(static_cast<std::int64_t>(D / mm));
  // Degree check: orbit under Frobenius of Kp.
  FieldElem cur = Lbig->frobenius_p_power(v, Kp->degree());
  std::uint32_t deg = 1;
  while (cur != v) {
    cur = Lbig->frobenius_p_power(cur, Kp->degree());
    ++deg;
  }
  if (deg != mm) throw InternalError("Kummer generator has the wrong degree");
  return v;
}

struct SubcaseIResult {
  FieldElem a, b;
  bool found = false;
};

}  // namespace

RecoveryResult recover_d2_zeta_not_in_K(const FieldCtx* K, std::uint64_t q, std::uint32_t m) {
  const FieldCtx* Fq = fq_of(K, q);
  const std::uint32_t s = Fq->degree();
  const std::uint32_t nK = K->degree();
  if (nK % (2 * s) == 0) throw UsageError("zeta lies in K; use the zeta-in-K branch");
  const std::uint64_t q2m1 = q * q - 1;
  if (m == 0 || q2m1 % m != 0) throw UsageError("degree must divide q^2 - 1");
  const EPoly phi = deterministic_degree2_phi(Fq);
  const auto [Kp, zeta] = dmod::adjoin_root(K, phi);

  RecoveryResult res;
  res.phi = phi;

  const bool disjoint = (m % 2 == 1);
  const FieldCtx* Lbig =
      disjoint ? gf::build_field(K->p(), 2u * m * nK) : gf::build_field(K->p(), m * nK);
  if (!Lbig->enumerable())
    throw LimitError("compositum exceeds the enumeration bound for the zeta-not-in-K branch");
  const gf::Embedding* kp_in_big = gf::Registry::instance().embedding(Kp, Lbig);

  const std::uint32_t mm = disjoint ? m : m / 2;  // [L' : K']
  const FieldElem v = kummer_generator(Lbig, Kp, mm, q2m1);
  const FieldElem c_big = v.pow(static_cast<std::int64_t>(q2m1));
  const auto c_pre = kp_in_big->preimage(c_big);
  if (!c_pre) throw InternalError("v^{q^2-1} is not in K'");
  res.target_c = *c_pre;

  // sigma: the order-2 element of Gal(L'/K) fixing L; tau generates Gal(L'/K').
  const std::uint32_t sigma_t = disjoint ? m * nK : nK;
  FieldElem y = Lbig->zero();
  if (disjoint) {
    const FieldElem w = Lbig->frobenius_p_power(v, sigma_t);
    y = w * v.pow(-static_cast<std::int64_t>(q));
    if (Lbig->frobenius_p_power(y, 2 * nK) != y) throw InternalError("y is not tau-invariant");
    if (Lbig->frobenius_p_power(y, sigma_t) * y.pow(static_cast<std::int64_t>(q)) * c_big !=
        Lbig->one())
      throw InternalError("sigma(y) y^q c != 1");
  } else {
    // zeta in L - K: eta = sigma^2(v)/v is an m-th root of unity; eta = mu^{2q}.
    const FieldElem eta = Lbig->frobenius_p_power(v, 2 * nK) * v.inverse();
    const FieldCtx* Fq2 = gf::build_field(K->p(), 2 * s);
    const gf::Embedding* fq2_in_big = gf::Registry::instance().embedding(Fq2, Lbig);
    const auto eta_pre = fq2_in_big->preimage(eta);
    if (!eta_pre) throw InternalError("eta is not a (q^2-1)-th root of unity");
    const std::uint64_t leta = Fq2->log(*eta_pre);
    const std::uint64_t t = solve_congruence((2 * q) % q2m1, leta, q2m1);
    const FieldElem mu = fq2_in_big->apply(Fq2->exp(t));
    y = v.pow(static_cast<std::int64_t>(q)) *
        Lbig->frobenius_p_power(v, sigma_t).inverse() * mu;
    if (Lbig->frobenius_p_power(y, sigma_t) * y.pow(static_cast<std::int64_t>(q)) != c_big)
      throw InternalError("sigma(y) y^q != c");
  }

  const bool y_in_K = (Lbig->frobenius_p_power(y, nK) == y);
  if (!y_in_K) {
    const FieldElem sy = Lbig->frobenius_p_power(y, sigma_t);
    // Both normalizations (sigma(y) and 1/sigma(y)) written as s*zeta - r give
    // candidate (a, b); the class certificate selects the right one.
    for (int variant = 0; variant < 2; ++variant) {
      const FieldElem target_big = variant == 0 ? sy.inverse() : sy;
      const auto pre = kp_in_big->preimage(target_big);
      if (!pre) throw InternalError("sigma(y) is not in K'");
      const auto [rp, sp] = decompose_over(*pre, K, zeta);
      if (sp.is_zero()) throw InternalError("sigma(y) lies in K although y does not");
      res.b = -rp / sp;
      res.a = sp.inverse();
      res.branch = disjoint ? "d2-ii-II" : "d2-ii-nondisjoint";
      certify(res, K, q, m);
      if (res.class_ok && res.degree_ok) return res;
    }
    throw InternalError("subcase II certificate failed for both normalizations");
  }

  // Subcase I: y in K.
  if (K->cardinality_u64() == q) {
    if ((q - 1) % m == 0) {
      // Kummer over K itself: realized with d = 1.
      const FieldElem gK = K->mult_generator();
      RecoveryResult rr = recover_d1(gK.pow(static_cast<std::int64_t>((q - 1) / m)), q);
      rr.branch = "d2-rerouted-d1";
      return rr;
    }
    throw ObstructionError(
        "K = F_q with image inside GL_1(F_q): no degree-2 Drinfeld parameters exist");
  }
  const auto y_pre = [&] {
    const gf::Embedding* k_in_big = gf::Registry::instance().embedding(K, Lbig);
    auto p = k_in_big->preimage(y);
    if (!p) throw InternalError("y in K but preimage failed");
    return *p;
  }();
  const FieldElem lambda = K->p() == 2 ? phi.c[0] : -phi.c[0];
  const FieldElem lamK = gf::embed(lambda, K);
  for (std::uint64_t i = 0; i < K->cardinality_u64(); ++i) {
    const FieldElem u = K->element_from_index(i);
    const FieldElem uq = K->frobenius_p_power(u, s);
    if (uq == u) continue;
    FieldElem b;
    if (K->p() == 2) {
      b = (u.pow(static_cast<std::int64_t>(q + 1)) + u + lamK) * (uq + u).inverse();
    } else {
      b = (u.pow(static_cast<std::int64_t>(q + 1)) - lamK) * (uq - u).inverse();
    }
    if (epoly::eval_embedded(phi, b).is_zero()) continue;
    const FieldElem a = (u - b) * y_pre;
    if (a.is_zero()) continue;
    res.a = a;
    res.b = b;
    res.branch = "d2-ii-I";
    certify(res, K, q, m);
    if (res.class_ok && res.degree_ok) return res;
  }
  throw InternalError("subcase I exhausted all u without a passing certificate");
}

RecoveryResult recover(const FieldCtx* K, std::uint64_t q, std::uint32_t m) {
  if (m == 0) throw UsageError("degree must be positive");
  const std::uint64_t q2m1 = q * q - 1;
  if (q2m1 % m != 0) throw UsageError("degree does not divide q^2 - 1 (d <= 2 scope)");
  const FieldCtx* Fq = fq_of(K, q);
  const std::uint32_t s = Fq->degree();
  if ((q - 1) % m == 0) {
    // Kummer already over K.
    const FieldElem gK = K->mult_generator();
    FieldElem c = m == 1 ? K->one() : gK.pow(static_cast<std::int64_t>((q - 1) / m));
    return recover_d1(c, q);
  }
  if (K->degree() % (2 * s) == 0) {
    const FieldElem gK = K->mult_generator();
    const FieldElem c = gK.pow(static_cast<std::int64_t>(q2m1 / m));
    return recover_d2_zeta_in_K(K, q, c);
  }
  return recover_d2_zeta_not_in_K(K, q, m);
}

// ---------------------------------------------------------------------------

CorollaryEquation corollary_equation(const FieldElem& a, const FieldElem& b,
                                     const FieldElem& lambda) {
  if (a.is_zero()) throw UsageError("a must be nonzero");
  const FieldCtx* K = a.ctx();
  const FieldCtx* Fq = lambda.ctx();
  const std::uint64_t q = Fq->cardinality_u64();
  const std::uint32_t s = Fq->degree();
  if (K->degree() % s != 0 || K->p() != Fq->p()) throw UsageError("lambda must lie in F_q <= K");
  EPoly phi{Fq, {}};
  if (K->p() == 2) {
    phi.c = {lambda, Fq->one(), Fq->one()};
  } else {
    phi.c = {-lambda, Fq->zero(), Fq->one()};
  }
  if (!epoly::is_irreducible(phi)) throw UsageError("T^2+T+lambda resp. T^2-lambda is reducible");

  const FieldElem lamK = gf::embed(lambda, K);
  const FieldElem bq = K->frobenius_p_power(b, s);
  CorollaryEquation out;
  out.phi = phi;
  if (K->p() == 2) {
    out.coeffs = {b * b + b + lamK, a * (bq + b + K->one()), a.pow(static_cast<std::int64_t>(q + 1))};
  } else {
    out.coeffs = {b * b - lamK, a * (bq + b), a.pow(static_cast<std::int64_t>(q + 1))};
  }
  out.exponents = {0, q - 1, q * q - 1};
  return out;
}

CartanOrbit cartan_orbit(std::uint64_t q, const FieldElem& lambda, const FieldElem& u) {
  const FieldCtx* Fq = lambda.ctx();
  if (Fq->cardinality_u64() != q) throw UsageError("lambda must lie in F_q");
  if (Fq->p() == 2) throw UsageError("the Cartan lemma needs odd characteristic");
  if (lambda.is_zero() || lambda.pow(static_cast<std::int64_t>((q - 1) / 2)) == Fq->one())
    throw UsageError("lambda must be a non-square in F_q");
  const FieldCtx* F = u.ctx();
  if (F->cardinality_u64() != q * q) throw UsageError("u must lie in F_{q^2}");
  const std::uint32_t s = Fq->degree();
  const FieldElem uq = F->frobenius_p_power(u, s);
  if (uq == u) throw UsageError("u must lie outside F_q");

  const FieldElem lamF = gf::embed(lambda, F);
  CartanOrbit out;
  out.b = (u.pow(static_cast<std::int64_t>(q + 1)) - lamF) * (uq - u).inverse();

  // P(X) = X^{q+1} - b X^q + b X - lambda over F_{q^2}.
  EPoly P{F, std::vector<FieldElem>(q + 2, F->zero())};
  P.c[q + 1] = F->one();
  P.c[q] = -out.b;
  P.c[1] = out.b;
  P.c[0] = -lamF;
  const auto roots = epoly::roots_with_multiplicity(P);
  std::size_t total = 0;
  bool simple = true;
  for (const auto& [r, mult] : roots) {
    total += mult;
    if (mult != 1) simple = false;
  }
  out.splits_completely = (total == q + 1) && simple;
  if (roots.empty()) throw InternalError("dagger polynomial has no roots at all");
  out.root = roots.front().first;

  // H_mu representatives: (alpha, beta) = (1, 0) and (alpha, 1), alpha in F_q.
  const FieldElem mu = gf::embed(lambda.inverse(), F);
  std::vector<std::pair<FieldElem, FieldElem>> reps;
  reps.emplace_back(F->one(), F->zero());
  for (std::uint64_t i = 0; i < q; ++i)
    reps.emplace_back(gf::embed(Fq->element_from_index(i), F), F->one());
  out.all_satisfy_dagger = true;
  for (const auto& [alpha, beta] : reps) {
    const FieldElem num = alpha * out.root + beta;
    const FieldElem den = mu * beta * out.root + alpha;
    if (den.is_zero()) throw InternalError("Cartan action hits infinity on the orbit");
    const FieldElem img = num * den.inverse();
    out.orbit.push_back(img);
    if (!epoly::eval(P, img).is_zero()) out.all_satisfy_dagger = false;
  }

  EPoly prod = epoly::constant(F->one());
  for (const auto& r : out.orbit) prod = epoly::mul(prod, EPoly{F, {-r, F->one()}});
  out.product_matches = (prod == P);
  return out;
}

bool confirm_fq_exclusion(std::uint64_t q) {
  // Over K = F_q: (zeta - b)(zeta - b^q) = k^{q+1} r^{q^2-1} reduces to
  // (zeta - b)^2 = k^2; confirm no (b, k) works by exhaustion.
  std::uint32_t p = 0;
  for (std::uint64_t cand = 2; cand * cand <= q; ++cand) {
    if (q % cand == 0) {
      p = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  if (!p) p = static_cast<std::uint32_t>(q);
  const std::uint32_t s = gf::q_exponent_over_p(p, q);
  const FieldCtx* K = gf::build_field(p, s);
  const EPoly phi = deterministic_degree2_phi(K);
  const auto [Kp, zeta] = dmod::adjoin_root(K, phi);
  for (std::uint64_t bi = 0; bi < q; ++bi) {
    const FieldElem b = gf::embed(K->element_from_index(bi), Kp);
    const FieldElem lhs = (zeta - b) * (zeta - Kp->frobenius_p_power(b, s));
    for (std::uint64_t ki = 1; ki < q; ++ki) {
      const FieldElem k = gf::embed(K->element_from_index(ki), Kp);
      // r^{q^2-1} = 1 for every r in K'^* since K' = F_{q^2}.
      if (lhs == k.pow(static_cast<std::int64_t>(q + 1))) return false;
    }
  }
  return true;
}

}  // namespace drinfeld::recover
