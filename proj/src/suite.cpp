#include "drinfeld/suite.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "drinfeld/dmod.hpp"
#include "drinfeld/hypa.hpp"
#include "drinfeld/recover.hpp"

namespace drinfeld::suite {

using dmod::DrinfeldParams;
using epoly::EPoly;
using gf::FieldCtx;
using gf::FieldElem;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

// Deterministic parallel map: results land by index regardless of schedule.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct Runner {
  SuiteResult result;
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    Check c;
    c.name = name;
    const double t0 = now_seconds();
    try {
      auto [pass, detail] = fn();
      c.pass = pass;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = now_seconds() - t0;
    result.checks.push_back(std::move(c));
  }
};

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct GridCell {
  std::uint32_t p, nK;
  std::uint64_t q;
};

const std::vector<GridCell>& rank1_cells() {
  static const std::vector<GridCell> cells{{2, 1, 2}, {2, 2, 2}, {3, 2, 3}};
  return cells;
}

// ---------------------------------------------------------------------------
// Section 2: the Ore-ring identity, coprimality, cardinality, Kummer value.

std::pair<bool, std::string> check_lcm_identity_grid() {
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> grid{
      {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}};
  for (auto [q, d] : grid) {
    if (!ore::verify_lcm_identity(q, d)) {
      return {false, "identity fails at q=" + std::to_string(q) + " d=" + std::to_string(d)};
    }
  }
  return {true, "7 (q,d) pairs verified symbolically"};
}

std::pair<bool, std::string> check_coprimality_bezout(unsigned jobs) {
  const std::vector<GridCell> pool{{2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {3, 1, 3}, {3, 2, 3}, {5, 1, 5}};
  std::mt19937_64 rng(0xD21F);
  struct Instance {
    GridCell cell;
    std::uint32_t d;
    std::uint64_t ai, bi;
  };
  std::vector<Instance> instances;
  while (instances.size() < 200) {
    const GridCell cell = pool[rng() % pool.size()];
    const std::uint32_t d = 2 + static_cast<std::uint32_t>(rng() % 2);
    const FieldCtx* K = gf::build_field(cell.p, cell.nK);
    const FieldCtx* Fq = gf::build_field(cell.p, gf::q_exponent_over_p(cell.p, cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, d);
    const std::uint64_t ai = 1 + rng() % (K->cardinality_u64() - 1);
    const std::uint64_t bi = rng() % K->cardinality_u64();
    if (epoly::eval_embedded(phi, K->element_from_index(bi)).is_zero()) continue;
    instances.push_back({cell, d, ai, bi});
  }
  std::vector<std::string> failures(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    const auto& in = instances[i];
    const FieldCtx* K = gf::build_field(in.cell.p, in.cell.nK);
    const FieldCtx* Fq = gf::build_field(in.cell.p, gf::q_exponent_over_p(in.cell.p, in.cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, in.d);
    const auto [Kp, zeta] = dmod::adjoin_root(K, phi);
    const ore::FieldTwist ring(Kp, in.cell.q);
    ore::FSkew inner;
    inner.c = {gf::embed(K->element_from_index(in.bi), Kp),
               gf::embed(K->element_from_index(in.ai), Kp)};
    const ore::FSkew f = substitute(ring, phi, inner);
    // psi = phi/(T - zeta) with coefficients in F_{q^d} <= K'.
    const FieldCtx* Fqd = gf::build_field(in.cell.p, Fq->degree() * in.d);
    const FieldElem zqd = epoly::distinct_roots(epoly::map_to(phi, Fqd)).front();
    auto [psi, rem] = epoly::divmod(epoly::map_to(phi, Fqd), EPoly{Fqd, {-zqd, Fqd->one()}});
    if (!rem.is_zero()) {
      failures[i] = "psi division failed";
      return;
    }
    std::vector<FieldElem> psi_coeffs;
    for (const auto& c : psi.c) psi_coeffs.push_back(gf::embed(c, Kp));
    const ore::FSkew g = substitute_left(ring, psi_coeffs, inner);
    const ore::FSkew gcd = right_gcd(ring, f, g);
    if (gcd.degree() != 0 || !(gcd.c[0] == Kp->one())) {
      failures[i] = "rgcd != 1";
      return;
    }
    const auto [u, w] = right_bezout(ring, f, g);
    const ore::FSkew one =
        skew_add(ring, skew_mul(ring, u, f), skew_mul(ring, w, g));
    if (one.degree() != 0 || !(one.c[0] == Kp->one())) failures[i] = "bezout remultiplication != 1";
  });
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i].empty())
      return {false, "instance " + std::to_string(i) + ": " + failures[i]};
  }
  return {true, "200 random instances coprime with exact Bezout pairs"};
}

// Exhaustive rank-1 sweep shared by the cardinality and Kummer-value checks.
struct Rank1Sweep {
  std::uint64_t verified = 0;
  std::uint64_t card_failures = 0;
  std::uint64_t kummer_failures = 0;
};

Rank1Sweep rank1_sweep(unsigned jobs, bool with_kummer) {
  struct Instance {
    GridCell cell;
    std::uint32_t d;
    std::uint64_t ai, bi;
  };
  std::vector<Instance> instances;
  for (const auto& cell : rank1_cells()) {
    const FieldCtx* K = gf::build_field(cell.p, cell.nK);
    const FieldCtx* Fq = gf::build_field(cell.p, gf::q_exponent_over_p(cell.p, cell.q));
    for (std::uint32_t d = 1; d <= 3; ++d) {
      const EPoly phi = epoly::smallest_irreducible(Fq, d);
      for (std::uint64_t ai = 1; ai < K->cardinality_u64(); ++ai) {
        for (std::uint64_t bi = 0; bi < K->cardinality_u64(); ++bi) {
          if (epoly::eval_embedded(phi, K->element_from_index(bi)).is_zero()) continue;
          instances.push_back({cell, d, ai, bi});
        }
      }
    }
  }
  std::atomic<std::uint64_t> card_fail{0}, kummer_fail{0};
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    const auto& in = instances[i];
    const FieldCtx* K = gf::build_field(in.cell.p, in.cell.nK);
    const FieldCtx* Fq = gf::build_field(in.cell.p, gf::q_exponent_over_p(in.cell.p, in.cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, in.d);
    const DrinfeldParams par = dmod::rank1_params(
        K, in.cell.q, K->element_from_index(in.ai), K->element_from_index(in.bi), phi);
    const dmod::DivisionPointData data = dmod::division_points(par);
    if (data.points.size() != pow_u64(in.cell.q, in.d)) ++card_fail;
    if (with_kummer && !dmod::verify_kummer_consistency(par, data)) ++kummer_fail;
  });
  Rank1Sweep out;
  out.verified = instances.size();
  out.card_failures = card_fail;
  out.kummer_failures = kummer_fail;
  return out;
}

std::pair<bool, std::string> check_rank2_cardinality(unsigned jobs) {
  struct Instance {
    GridCell cell;
    std::uint32_t d;
    std::uint64_t g2, g1, g0;
  };
  std::vector<Instance> instances;
  std::uint64_t skipped = 0;
  // Full rank-2 sweeps where the splitting degree is provably modest.
  const std::vector<std::pair<GridCell, std::uint32_t>> full_cells{
      {{2, 1, 2}, 1}, {{2, 1, 2}, 2}, {{2, 1, 2}, 3}, {{2, 2, 2}, 1}, {{2, 2, 2}, 2},
      {{2, 2, 2}, 3}, {{3, 2, 3}, 1}, {{3, 2, 3}, 2}};
  for (const auto& [cell, d] : full_cells) {
    const FieldCtx* K = gf::build_field(cell.p, cell.nK);
    const FieldCtx* Fq = gf::build_field(cell.p, gf::q_exponent_over_p(cell.p, cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, d);
    for (std::uint64_t g2 = 1; g2 < K->cardinality_u64(); ++g2) {
      for (std::uint64_t g1 = 0; g1 < K->cardinality_u64(); ++g1) {
        for (std::uint64_t g0 = 0; g0 < K->cardinality_u64(); ++g0) {
          if (epoly::eval_embedded(phi, K->element_from_index(g0)).is_zero()) continue;
          instances.push_back({cell, d, g2, g1, g0});
        }
      }
    }
  }
  std::atomic<std::uint64_t> fails{0};
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    const auto& in = instances[i];
    const FieldCtx* K = gf::build_field(in.cell.p, in.cell.nK);
    const FieldCtx* Fq = gf::build_field(in.cell.p, gf::q_exponent_over_p(in.cell.p, in.cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, in.d);
    DrinfeldParams par{K,
                       in.cell.q,
                       {K->element_from_index(in.g0), K->element_from_index(in.g1),
                        K->element_from_index(in.g2)},
                       phi};
    const dmod::DivisionPointData data = dmod::division_points(par);
    if (data.points.size() != pow_u64(in.cell.q, 2 * in.d)) ++fails;
  });
  const std::uint64_t full_count = instances.size();

  // K = F_9, d = 3, middle coefficient 0: here g(F) = aF^2 + b is a rank-1
  // module over F_81 in disguise, so the exact splitting degree is the order
  // of (zeta - b)/a in F_{729}^*; instances beyond the degree cap are skipped
  // and reported (they would need fields beyond desk scale).
  std::uint64_t predicted_verified = 0;
  {
    const FieldCtx* K = gf::build_field(3, 2);
    const FieldCtx* F3 = gf::build_field(3, 1);
    const EPoly phi3 = epoly::smallest_irreducible(F3, 3);
    const EPoly phi9 = epoly::map_to(phi3, K);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> todo;
    std::vector<std::uint32_t> degrees;
    for (std::uint64_t ai = 1; ai < 9; ++ai) {
      for (std::uint64_t bi = 0; bi < 9; ++bi) {
        if (epoly::eval_embedded(phi9, K->element_from_index(bi)).is_zero()) continue;
        const DrinfeldParams pr9 = dmod::rank1_params(
            K, 9, K->element_from_index(ai), K->element_from_index(bi), phi9);
        const std::uint32_t e = dmod::splitting_degree(pr9);
        if (2ull * e <= limits().max_degree_over_fp) {
          todo.emplace_back(ai, bi);
          degrees.push_back(e);
        } else {
          ++skipped;
        }
      }
    }
    std::atomic<std::uint64_t> fails2{0};
    parallel_for(todo.size(), jobs, [&](std::size_t i) {
      const auto [ai, bi] = todo[i];
      DrinfeldParams par{K,
                         3,
                         {K->element_from_index(bi), K->zero(), K->element_from_index(ai)},
                         phi3};
      const dmod::DivisionPointData data = dmod::division_points_at(par, degrees[i]);
      if (data.points.size() != pow_u64(3, 6)) ++fails2;
    });
    predicted_verified = todo.size();
    fails += fails2;
  }

  std::ostringstream detail;
  detail << full_count << " full-sweep + " << predicted_verified
         << " predicted-degree instances verified, " << skipped
         << " beyond the degree cap (K=F_9, d=3, rank 2)";
  return {fails == 0, detail.str()};
}

// Oracle cross-check: the reported splitting degree matches the literal
// smallest extension degree whose kernel is full, for a few small instances.
std::pair<bool, std::string> check_splitting_degree_oracle() {
  struct Case {
    GridCell cell;
    std::uint32_t d;
    std::uint64_t ai, bi;
  };
  const std::vector<Case> cases{
      {{2, 1, 2}, 2, 1, 1}, {{2, 1, 2}, 3, 1, 1}, {{2, 2, 2}, 2, 2, 1}, {{3, 2, 3}, 2, 3, 4}};
  for (const auto& cs : cases) {
    const FieldCtx* K = gf::build_field(cs.cell.p, cs.cell.nK);
    const FieldCtx* Fq = gf::build_field(cs.cell.p, 1);
    const EPoly phi = epoly::smallest_irreducible(Fq, cs.d);
    if (epoly::eval_embedded(phi, K->element_from_index(cs.bi)).is_zero()) continue;
    const DrinfeldParams par = dmod::rank1_params(
        K, cs.cell.q, K->element_from_index(cs.ai), K->element_from_index(cs.bi), phi);
    const std::uint32_t reported = dmod::splitting_degree(par);
    const ore::FieldTwist ring = par.ring();
    const ore::FSkew Phi = substitute(ring, par.phi, par.g_skew());
    const std::uint64_t want = pow_u64(cs.cell.q, cs.d);
    std::uint32_t literal = 0;
    for (std::uint32_t e = 1; e <= reported + 2; ++e) {
      const FieldCtx* L = gf::build_field(K->p(), K->degree() * e);
      const std::size_t dim = ore::additive_kernel_dim_fp(ring, Phi, L);
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < dim; ++i) size *= K->p();
      if (size == want) {
        literal = e;
        break;
      }
    }
    if (literal != reported)
      return {false, "degree mismatch: reported " + std::to_string(reported) + " literal " +
                         std::to_string(literal)};
  }
  return {true, "stepped degree equals the literal smallest full-kernel degree"};
}

SuiteResult section2(unsigned jobs) {
  Runner r;
  r.result.section = "section2";
  r.run("lcm-identity", check_lcm_identity_grid);
  r.run("coprimality-bezout", [&] { return check_coprimality_bezout(jobs); });
  r.run("division-cardinality-and-kummer", [&] {
    const Rank1Sweep sweep = rank1_sweep(jobs, true);
    std::ostringstream os;
    os << sweep.verified << " rank-1 instances; cardinality failures " << sweep.card_failures
       << ", Kummer failures " << sweep.kummer_failures;
    return std::make_pair(sweep.card_failures == 0 && sweep.kummer_failures == 0, os.str());
  });
  r.run("rank2-cardinality", [&] { return check_rank2_cardinality(jobs); });
  r.run("splitting-degree-oracle", check_splitting_degree_oracle);
  return r.result;
}

// ---------------------------------------------------------------------------
// Section 3: recovery round-trips, corollary equations, the Cartan orbit.

std::pair<bool, std::string> check_recovery_roundtrip() {
  struct Target {
    std::uint32_t p, nK;
    std::uint64_t q;
  };
  const std::vector<Target> targets{{2, 2, 2}, {2, 3, 2}, {3, 2, 3}, {2, 4, 4}};
  std::uint64_t count = 0;
  for (const auto& t : targets) {
    const FieldCtx* K = gf::build_field(t.p, t.nK);
    const std::uint64_t q2m1 = t.q * t.q - 1;
    for (std::uint32_t m = 1; m <= q2m1; ++m) {
      if (q2m1 % m != 0) continue;
      const recover::RecoveryResult res = recover::recover(K, t.q, m);
      if (!res.class_ok || !res.degree_ok) {
        return {false, "round-trip failed at |K|=" + std::to_string(K->cardinality_u64()) +
                           " m=" + std::to_string(m) + " branch=" + res.branch};
      }
      ++count;
    }
  }
  return {true, std::to_string(count) + " cyclic extensions recovered with exact certificates"};
}

std::pair<bool, std::string> check_fq_special_case() {
  for (std::uint64_t q : {2, 3, 5}) {
    if (!recover::confirm_fq_exclusion(q))
      return {false, "norm-form equation unexpectedly solvable over F_" + std::to_string(q)};
    const std::uint32_t p = static_cast<std::uint32_t>(q);
    const FieldCtx* K = gf::build_field(p, 1);
    // Degrees dividing q-1 reroute to the d = 1 construction.
    for (std::uint32_t m = 1; m < q; ++m) {
      if ((q - 1) % m != 0) continue;
      const recover::RecoveryResult res = recover::recover(K, q, m);
      if (!res.class_ok || !res.degree_ok || res.phi.degree() != 1)
        return {false, "F_q reroute failed at q=" + std::to_string(q) + " m=" + std::to_string(m)};
    }
    // Exhaustive: no degree-2 parameters realize an extension whose degree
    // divides q-1 (the image would land in GL_1(F_q)).
    const EPoly phi = recover::deterministic_degree2_phi(K);
    for (std::uint64_t ai = 1; ai < q; ++ai) {
      for (std::uint64_t bi = 0; bi < q; ++bi) {
        if (epoly::eval_embedded(phi, K->element_from_index(bi)).is_zero()) continue;
        const DrinfeldParams par =
            dmod::rank1_params(K, q, K->element_from_index(ai), K->element_from_index(bi), phi);
        const std::uint32_t deg = dmod::splitting_degree(par);
        if ((q - 1) % deg == 0)
          return {false, "degree-2 parameters realized a GL_1(F_q)-image extension over F_" +
                             std::to_string(q)};
      }
    }
  }
  return {true, "obstruction confirmed for q in {2,3,5}; reroutes pass"};
}

std::pair<bool, std::string> check_corollary_roots(unsigned jobs) {
  struct Instance {
    std::uint32_t p, nK;
    std::uint64_t ai, bi, li;
  };
  std::vector<Instance> instances;
  std::mt19937_64 rng(0xC060);
  const std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> chars{
      {2, {1, 2, 3, 4}}, {3, {1, 2, 3}}, {5, {1, 2}}};
  for (const auto& [p, degs] : chars) {
    const FieldCtx* Fq = gf::build_field(p, 1);
    std::vector<std::uint64_t> lambdas;
    for (std::uint64_t li = 0; li < p; ++li) {
      EPoly phi{Fq, {}};
      const FieldElem lam = Fq->element_from_index(li);
      if (p == 2)
        phi.c = {lam, Fq->one(), Fq->one()};
      else
        phi.c = {-lam, Fq->zero(), Fq->one()};
      if (epoly::is_irreducible(phi)) lambdas.push_back(li);
    }
    std::size_t made = 0;
    while (made < 100) {
      const std::uint32_t nK = degs[rng() % degs.size()];
      const FieldCtx* K = gf::build_field(p, nK);
      const std::uint64_t ai = 1 + rng() % (K->cardinality_u64() - 1);
      const std::uint64_t bi = rng() % K->cardinality_u64();
      const std::uint64_t li = lambdas[rng() % lambdas.size()];
      instances.push_back({p, nK, ai, bi, li});
      ++made;
    }
  }
  std::atomic<std::uint64_t> fails{0};
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    const auto& in = instances[i];
    const FieldCtx* K = gf::build_field(in.p, in.nK);
    const FieldCtx* Fq = gf::build_field(in.p, 1);
    const FieldElem a = K->element_from_index(in.ai);
    const FieldElem b = K->element_from_index(in.bi);
    const recover::CorollaryEquation eq =
        recover::corollary_equation(a, b, Fq->element_from_index(in.li));
    const DrinfeldParams par = dmod::rank1_params(K, in.p, a, b, eq.phi);
    const dmod::DivisionPointData data = dmod::division_points(par);
    if (data.points.size() != in.p * in.p) {
      ++fails;
      return;
    }
    // Every nonzero division point solves the corollary equation; by the
    // degree count the root set plus 0 is exactly V.
    for (const auto& x : data.points) {
      if (x.is_zero()) continue;
      FieldElem acc = data.L->zero();
      for (std::size_t t = 0; t < eq.coeffs.size(); ++t) {
        acc = acc + gf::embed(eq.coeffs[t], data.L) *
                        x.pow(static_cast<std::int64_t>(eq.exponents[t]));
      }
      if (!acc.is_zero()) {
        ++fails;
        return;
      }
    }
    if (static_cast<std::uint64_t>(eq.exponents.back()) != data.points.size() - 1) ++fails;
  });
  return {fails == 0, "300 random corollary equations match their division points (fails=" +
                          std::to_string(fails) + ")"};
}

std::pair<bool, std::string> check_cartan() {
  for (std::uint64_t q : {3, 5, 7}) {
    const FieldCtx* Fq = gf::build_field(static_cast<std::uint32_t>(q), 1);
    const EPoly phi = recover::deterministic_degree2_phi(Fq);
    const FieldElem lambda = -phi.c[0];
    const FieldCtx* F2q = gf::build_field(static_cast<std::uint32_t>(q), 2);
    FieldElem u = F2q->zero();
    for (std::uint64_t i = 0; i < F2q->cardinality_u64(); ++i) {
      u = F2q->element_from_index(i);
      if (F2q->frobenius_p_power(u, 1) != u) break;
    }
    const recover::CartanOrbit orb = recover::cartan_orbit(q, lambda, u);
    std::set<FieldElem> distinct(orb.orbit.begin(), orb.orbit.end());
    if (!(orb.splits_completely && orb.product_matches && orb.all_satisfy_dagger &&
          distinct.size() == q + 1 && orb.orbit.size() == q + 1)) {
      return {false, "Cartan orbit check failed at q=" + std::to_string(q)};
    }
  }
  return {true, "orbit of size q+1 reproduces the polynomial for q in {3,5,7}"};
}

SuiteResult section3(unsigned jobs) {
  Runner r;
  r.result.section = "section3";
  r.run("recovery-roundtrip", check_recovery_roundtrip);
  r.run("fq-special-case", check_fq_special_case);
  r.run("corollary-roots", [&] { return check_corollary_roots(jobs); });
  r.run("cartan-orbit", check_cartan);
  return r.result;
}

// ---------------------------------------------------------------------------
// Section 4: the genus formula and the surjectivity audit.

std::pair<bool, std::string> check_genus() {
  if (dmod::genus_N(2, 3, 1) != Rational(3))
    return {false, "g_N(2,3,1) != 3"};
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::uint32_t d = 1; d <= 5; ++d) {
      std::uint64_t M = 0;
      {
        std::uint64_t qd = 1;
        for (std::uint32_t i = 0; i < d; ++i) qd *= q;
        M = (qd - 1) / (q - 1);
      }
      for (std::uint64_t k = 1; k <= M; ++k) {
        if (M % k != 0) continue;
        const Rational g = dmod::genus_N(q, d, k);
        const bool zero_expected = (d <= 2) || (k == M);
        if ((g == Rational(0)) != zero_expected)
          return {false, "genus zero-set mismatch at q=" + std::to_string(q) +
                             " d=" + std::to_string(d) + " k=" + std::to_string(k)};
        if (g.num < 0) return {false, "negative genus"};
      }
    }
  }
  return {true, "g_N zero exactly on d<=2 or k=(q^d-1)/(q-1) over the grid"};
}

std::pair<bool, std::string> check_surjectivity_audit() {
  // Exhaustive audit over K = F_4, d = 2 plus the spot instance over F_2, d = 3.
  const FieldCtx* K = gf::build_field(2, 2);
  const FieldCtx* F2 = gf::build_field(2, 1);
  const EPoly phi2 = epoly::smallest_irreducible(F2, 2);
  std::vector<std::pair<FieldElem, FieldElem>> samples;
  for (std::uint64_t ai = 1; ai < 4; ++ai) {
    for (std::uint64_t bi = 0; bi < 4; ++bi) {
      if (epoly::eval_embedded(phi2, K->element_from_index(bi)).is_zero()) continue;
      samples.emplace_back(K->element_from_index(ai), K->element_from_index(bi));
    }
  }
  const dmod::SurjReport rep = dmod::surjectivity_audit(K, 2, phi2, samples);
  const std::uint64_t M = 3;  // (q^d-1)/(q-1) for q=2, d=2
  for (const auto& row : rep.rows) {
    if (M % row.k != 0) return {false, "k does not divide (q^d-1)/(q-1)"};
    if (row.surjective != (row.k == M)) return {false, "surjectivity flag inconsistent"};
  }
  const EPoly phi3 = epoly::smallest_irreducible(F2, 3);
  const dmod::SurjReport rep2 =
      dmod::surjectivity_audit(F2, 2, phi3, {{F2->one(), F2->one()}});
  if (rep2.rows.size() != 1 || rep2.rows[0].k != 7 || !rep2.rows[0].surjective)
    return {false, "F_2, d=3, (1,1) should give the full quotient k=7"};
  // d = 1: the quotient group is trivial.
  const EPoly phi1 = epoly::smallest_irreducible(F2, 1);
  const dmod::SurjReport rep3 =
      dmod::surjectivity_audit(K, 2, phi1, {{K->element_from_index(2), K->element_from_index(3)}});
  if (rep3.rows.size() != 1 || rep3.rows[0].k != 1)
    return {false, "d=1 should give trivial quotient"};
  std::ostringstream os;
  os << "exhaustive F_4 d=2 table (" << rep.rows.size() << " rows, " << rep.surjective_count
     << " surjective) + spot checks";
  return {true, os.str()};
}

SuiteResult section4(unsigned jobs) {
  (void)jobs;
  Runner r;
  r.result.section = "section4";
  r.run("genus-formula", check_genus);
  r.run("surjectivity-audit", check_surjectivity_audit);
  return r.result;
}

// ---------------------------------------------------------------------------
// Section 5: hypothesis (A) machinery.

std::pair<bool, std::string> check_quartic_counts() {
  if (!hypa::quartic_transcription_consistent())
    return {false, "Q(0,0,1) does not reproduce the displayed quartic"};
  const FieldCtx* F2 = gf::build_field(2, 1);
  const FieldCtx* F4 = gf::build_field(2, 2);
  const FieldCtx* F16 = gf::build_field(2, 4);
  const auto n2 = hypa::quartic_solutions(F2->zero(), F2->zero(), F2->one());
  const auto n4 = hypa::quartic_solutions(F4->zero(), F4->zero(), F4->one());
  const auto n16 = hypa::quartic_solutions(F16->zero(), F16->zero(), F16->one());
  if (n2.nontrivial_solutions != 0) return {false, "N(2) != 0"};
  if (n4.nontrivial_solutions != 0) return {false, "N(4) != 0"};
  if (n16.nontrivial_solutions == 0) return {false, "N(16) = 0 but F_16 satisfies (A)"};
  return {true, "N(2)=0, N(4)=0, N(16)=" + std::to_string(n16.nontrivial_solutions)};
}

std::pair<bool, std::string> check_classification() {
  const hypa::ClassifyReport rep = hypa::classify_finite_fields(5);
  if (!rep.hasse_weil_floor_ok) return {false, "Hasse-Weil floor violated"};
  for (const auto& row : rep.rows) {
    const bool expect_fail = (row.m == 1 || row.m == 2);
    if (row.satisfies_A == expect_fail)
      return {false, "classification mismatch at m=" + std::to_string(row.m)};
  }
  return {true, "fails exactly at m in {1,2}; satisfies at m in {4,5}"};
}

std::pair<bool, std::string> check_f_identities() {
  for (std::uint32_t m : {1, 2, 4, 5}) {
    const hypa::HypACtx ctx = hypa::make_ctx(gf::build_field(2, m));
    if (!hypa::verify_f_identities(ctx))
      return {false, "f identities fail at m=" + std::to_string(m)};
  }
  return {true, "identities (i), (ii), injectivity and f(zeta^i)=zeta^{3i} hold"};
}

std::pair<bool, std::string> check_witness() {
  {
    const hypa::HypACtx ctx = hypa::make_ctx(gf::build_field(2, 1));
    const hypa::WitnessReport rep = hypa::non_drinfeld_witness(ctx);
    if (rep.attainable.size() != 1 || !(rep.attainable[0] == ctx.Kp->one()))
      return {false, "attainable value set over F_2 is not {1}"};
    if (rep.c == ctx.Kp->one()) return {false, "witness c = 1 over F_2"};
    if (!rep.certificate_ok) return {false, "witness certificate failed over F_2"};
    if (rep.class_order != 7 || rep.galois_degree != 21)
      return {false, "witness extension over F_2 is not C_3 x C_7"};
    if (!rep.v_outside_K) return {false, "v lies in K over F_2"};
  }
  {
    const hypa::HypACtx ctx = hypa::make_ctx(gf::build_field(2, 2));
    const hypa::WitnessReport rep = hypa::non_drinfeld_witness(ctx);
    if (!rep.certificate_ok) return {false, "witness certificate failed over F_4"};
    if (rep.attempts != 3ull * 4 * 63) return {false, "F_4 certificate did not exhaust (a,b,k)"};
    if (rep.class_order != 7 || rep.galois_degree != 21)
      return {false, "witness extension over F_4 is not C_3 x C_7"};
    if (!rep.v_outside_K) return {false, "v lies in K over F_4"};
  }
  return {true, "witnesses certified exhaustively over F_2 and F_4"};
}

std::pair<bool, std::string> check_nonic() {
  const hypa::NonicReport rep = hypa::nonic_degeneracy_check();
  std::ostringstream os;
  os << "elimination=" << rep.elimination_matches << " cube=" << rep.cube_identity
     << " lines=" << rep.lines_factorization;
  return {rep.ok(), os.str()};
}

std::pair<bool, std::string> check_failure_implies_quartic() {
  // For K where (Q) has no nontrivial zero the audit must fail; observed on
  // F_2 and F_4 above, asserted here as the implication.
  for (std::uint32_t m : {1, 2}) {
    const FieldCtx* K = gf::build_field(2, m);
    const auto count = hypa::quartic_solutions(K->zero(), K->zero(), K->one());
    const hypa::HypAReport audit = hypa::coset_audit(hypa::make_ctx(K));
    if (count.nontrivial_solutions == 0 && audit.satisfies_A)
      return {false, "quartic has no zeros but (A) holds at m=" + std::to_string(m)};
  }
  return {true, "no-zero quartic forces failure of (A) on F_2, F_4"};
}

SuiteResult section5(unsigned jobs) {
  (void)jobs;
  Runner r;
  r.result.section = "section5";
  r.run("quartic-counts", check_quartic_counts);
  r.run("classification", check_classification);
  r.run("f-identities", check_f_identities);
  r.run("non-drinfeld-witness", check_witness);
  r.run("nonic-degeneracy", check_nonic);
  r.run("failure-implies-quartic", check_failure_implies_quartic);
  return r.result;
}

// ---------------------------------------------------------------------------
// Section 6: subspace polynomials and the module obstruction.

std::vector<std::vector<FieldElem>> all_subspaces(const FieldCtx* L, std::uint32_t q) {
  // q = p here: F_q-coordinates of L are the digit vectors themselves.
  if (L->cardinality_u64() > 4096) throw LimitError("subspace enumeration bound");
  const std::uint32_t n = L->degree();
  const std::uint32_t p = L->p();
  (void)q;
  std::vector<std::vector<FieldElem>> out;
  // Reduced row echelon forms over F_p for every dimension and pivot set.
  for (std::uint32_t t = 0; t <= n; ++t) {
    std::vector<std::uint32_t> pivots(t);
    std::function<void(std::uint32_t, std::uint32_t)> choose = [&](std::uint32_t start,
                                                                   std::uint32_t idx) {
      if (idx == t) {
        // Free positions: row i, column c not a pivot, c > pivots[i].
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (auto pv : pivots) is_pivot[pv] = true;
        for (std::uint32_t i = 0; i < t; ++i) {
          for (std::uint32_t c = pivots[i] + 1; c < n; ++c) {
            if (!is_pivot[c]) free_pos.emplace_back(i, c);
          }
        }
        std::vector<std::uint32_t> assign(free_pos.size(), 0);
        for (;;) {
          std::vector<std::vector<std::uint32_t>> rows(t, std::vector<std::uint32_t>(n, 0));
          for (std::uint32_t i = 0; i < t; ++i) rows[i][pivots[i]] = 1;
          for (std::size_t k = 0; k < free_pos.size(); ++k)
            rows[free_pos[k].first][free_pos[k].second] = assign[k];
          // Span the rows.
          std::vector<FieldElem> span;
          std::vector<std::uint32_t> digit(t, 0);
          for (;;) {
            std::vector<std::uint32_t> v(n, 0);
            for (std::uint32_t i = 0; i < t; ++i) {
              for (std::uint32_t c = 0; c < n; ++c)
                v[c] = (v[c] + digit[i] * rows[i][c]) % p;
            }
            span.push_back(L->from_digits(std::move(v)));
            std::uint32_t i = 0;
            while (i < t && ++digit[i] == p) digit[i++] = 0;
            if (i == t) break;
          }
          out.push_back(std::move(span));
          std::size_t k = 0;
          while (k < assign.size() && ++assign[k] == p) assign[k++] = 0;
          if (k == assign.size()) break;
          if (assign.empty()) break;
        }
        return;
      }
      for (std::uint32_t c = start; c < n; ++c) {
        pivots[idx] = c;
        choose(c + 1, idx + 1);
      }
    };
    if (t == 0) {
      out.push_back({L->zero()});
    } else {
      choose(0, 0);
    }
  }
  return out;
}

std::pair<bool, std::string> check_subspace_polynomials(unsigned jobs) {
  std::uint64_t total = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const FieldCtx* L = gf::build_field(q, 4);
    const auto subspaces = all_subspaces(L, q);
    std::atomic<std::uint64_t> fails{0};
    parallel_for(subspaces.size(), jobs, [&](std::size_t si) {
      const auto& V = subspaces[si];
      const ore::FSkew g = dmod::subspace_polynomial(V, q);
      const ore::FieldTwist ring(L, q);
      // Additivity and F_q-linearity, exhaustively via a value table.
      std::vector<FieldElem> table;
      table.reserve(L->cardinality_u64());
      for (std::uint64_t i = 0; i < L->cardinality_u64(); ++i)
        table.push_back(additive_eval(ring, g, L->element_from_index(i)));
      for (std::uint64_t i = 0; i < L->cardinality_u64(); ++i) {
        for (std::uint64_t j = 0; j < L->cardinality_u64(); ++j) {
          const FieldElem x = L->element_from_index(i), y = L->element_from_index(j);
          if (table[L->index_of(x + y)] != table[i] + table[j]) {
            ++fails;
            return;
          }
        }
      }
      // Kernel equals V exactly.
      std::set<FieldElem> kernel;
      for (std::uint64_t i = 0; i < L->cardinality_u64(); ++i) {
        if (table[i].is_zero()) kernel.insert(L->element_from_index(i));
      }
      if (kernel != std::set<FieldElem>(V.begin(), V.end())) {
        ++fails;
        return;
      }
      // T-division realization: phi = T with g as the skew polynomial
      // reproduces V as division points.
      if (g.degree() >= 1) {
        const FieldCtx* Fq = gf::build_field(L->p(), 1);
        DrinfeldParams par{L, q, g.c, epoly::x_power(Fq, 1)};
        const dmod::DivisionPointData data = dmod::division_points(par);
        if (std::set<FieldElem>(data.points.begin(), data.points.end()) !=
            std::set<FieldElem>(V.begin(), V.end()))
          ++fails;
      }
    });
    if (fails) return {false, "subspace polynomial failures over F_" + std::to_string(q)};
    total += subspaces.size();
  }
  return {true, std::to_string(total) + " subspaces verified (additivity, kernel, T-division)"};
}

std::pair<bool, std::string> check_module_embeds() {
  const FieldCtx* F4 = gf::build_field(2, 2);
  const FieldElem z = F4->zero(), o = F4->one();
  // Regular representation of C_3 over F_4 (cyclic shift).
  const std::vector<std::vector<FieldElem>> reg{{z, z, o}, {o, z, z}, {z, o, z}};
  if (!dmod::module_embeds(3, reg, 1)) return {false, "regular rep should embed at rank 1"};
  // Two copies of the regular representation vs rank 1.
  std::vector<std::vector<FieldElem>> reg2(6, std::vector<FieldElem>(6, z));
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) reg2[3 * b + i][3 * b + j] = reg[i][j];
    }
  }
  if (dmod::module_embeds(3, reg2, 1)) return {false, "doubled regular rep embeds at rank 1"};
  if (!dmod::module_embeds(3, reg2, 2)) return {false, "doubled regular rep should embed at rank 2"};
  // Three copies of a nontrivial character of C_3 over F_4 vs rank 2.
  const FieldElem w = F4->gen();  // cube root of unity
  const std::vector<std::vector<FieldElem>> chi3{{w, z, z}, {z, w, z}, {z, z, w}};
  if (dmod::module_embeds(3, chi3, 2)) return {false, "triple character embeds at rank 2"};
  if (!dmod::module_embeds(3, chi3, 3)) return {false, "triple character should embed at rank 3"};
  return {true, "free-module multiplicity bounds behave as expected"};
}

SuiteResult section6(unsigned jobs) {
  Runner r;
  r.result.section = "section6";
  r.run("subspace-polynomials", [&] { return check_subspace_polynomials(jobs); });
  r.run("module-embeds", check_module_embeds);
  return r.result;
}

// ---------------------------------------------------------------------------
// Cross-module property checks.

std::pair<bool, std::string> check_gf_properties() {
  // Frobenius order, embedding homomorphism, order divisibility, determinism.
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
    const FieldCtx* F = gf::build_field(p, n);
    std::mt19937_64 rng(1000 * p + n);
    for (int it = 0; it < 50; ++it) {
      const FieldElem a = F->element_from_index(rng() % F->cardinality_u64());
      if (F->frobenius_p_power(a, n) != a) return {false, "Frobenius order violated"};
      if (!a.is_zero() && (F->cardinality_u64() - 1) % gf::mult_order(a) != 0)
        return {false, "multiplicative order does not divide q-1"};
    }
  }
  {
    // Embedding is a ring homomorphism, exhaustively on F_4 -> F_16.
    const FieldCtx* F4 = gf::build_field(2, 2);
    const FieldCtx* F16 = gf::build_field(2, 4);
    for (std::uint64_t i = 0; i < 4; ++i) {
      for (std::uint64_t j = 0; j < 4; ++j) {
        const FieldElem a = F4->element_from_index(i), b = F4->element_from_index(j);
        if (gf::embed(a + b, F16) != gf::embed(a, F16) + gf::embed(b, F16))
          return {false, "embedding not additive"};
        if (gf::embed(a * b, F16) != gf::embed(a, F16) * gf::embed(b, F16))
          return {false, "embedding not multiplicative"};
      }
    }
  }
  {
    // Path independence across the divisor diamond 2 | {4, 6} | 12 and 1 | * .
    const FieldCtx* F4 = gf::build_field(2, 2);
    const FieldCtx* F16 = gf::build_field(2, 4);
    const FieldCtx* F64 = gf::build_field(2, 6);
    const FieldCtx* F4096 = gf::build_field(2, 12);
    for (std::uint64_t i = 0; i < 4; ++i) {
      const FieldElem a = F4->element_from_index(i);
      const FieldElem direct = gf::embed(a, F4096);
      if (gf::embed(gf::embed(a, F16), F4096) != direct)
        return {false, "path through F_16 disagrees"};
      if (gf::embed(gf::embed(a, F64), F4096) != direct)
        return {false, "path through F_64 disagrees"};
    }
    const FieldCtx* F9 = gf::build_field(3, 2);
    const FieldCtx* F81 = gf::build_field(3, 4);
    const FieldCtx* F3_8 = gf::build_field(3, 8);
    for (std::uint64_t i = 0; i < 9; ++i) {
      const FieldElem a = F9->element_from_index(i);
      if (gf::embed(gf::embed(a, F81), F3_8) != gf::embed(a, F3_8))
        return {false, "3-adic tower path disagrees"};
    }
  }
  {
    // Deterministic modulus reconstruction.
    const gf::FieldCtx fresh(2, 3);
    if (fresh.modulus() != gf::build_field(2, 3)->modulus())
      return {false, "modulus not reproducible"};
    const gf::FieldCtx fresh9(3, 2);
    if (fresh9.modulus() != gf::build_field(3, 2)->modulus())
      return {false, "modulus not reproducible (p=3)"};
  }
  return {true, "field-layer invariants hold"};
}

std::pair<bool, std::string> check_ore_properties() {
  const FieldCtx* F8 = gf::build_field(2, 3);
  const FieldCtx* F64 = gf::build_field(2, 6);
  const ore::FieldTwist ring(F64, 2);
  std::mt19937_64 rng(0x02E);
  auto random_skew = [&](int maxdeg) {
    ore::FSkew f;
    const int d = 1 + static_cast<int>(rng() % maxdeg);
    for (int i = 0; i <= d; ++i)
      f.c.push_back(F64->element_from_index(rng() % F64->cardinality_u64()));
    normalize(ring, f);
    if (f.is_zero()) f = skew_constant(ring, F64->one());
    return f;
  };
  for (int it = 0; it < 40; ++it) {
    const ore::FSkew f = random_skew(4), g = random_skew(4), h = random_skew(4);
    // Associativity and distributivity.
    if (!skew_eq(ring, skew_mul(ring, skew_mul(ring, f, g), h),
                 skew_mul(ring, f, skew_mul(ring, g, h))))
      return {false, "skew multiplication not associative"};
    if (!skew_eq(ring, skew_mul(ring, f, skew_add(ring, g, h)),
                 skew_add(ring, skew_mul(ring, f, g), skew_mul(ring, f, h))))
      return {false, "left distributivity fails"};
    if (skew_mul(ring, f, g).degree() != f.degree() + g.degree())
      return {false, "degree additivity fails"};
    // Division round-trip.
    const auto [q, rem] = right_divmod(ring, f, g);
    if (!skew_eq(ring, f, skew_add(ring, skew_mul(ring, q, g), rem)))
      return {false, "right division round-trip fails"};
    if (rem.degree() >= g.degree()) return {false, "remainder degree too large"};
    // Composition matches multiplication under additive evaluation.
    const FieldElem x = F64->element_from_index(rng() % 64);
    if (additive_eval(ring, skew_mul(ring, f, g), x) !=
        additive_eval(ring, f, additive_eval(ring, g, x)))
      return {false, "additive evaluation is not multiplicative under composition"};
  }
  {
    // F_q-linearity of additive evaluation, exhaustive over F_8 coefficients on F_64.
    const ore::FieldTwist ring8(F8, 2);
    ore::FSkew f;
    f.c = {F8->one(), F8->one()};  // F + 1
    for (std::uint64_t i = 0; i < 64; ++i) {
      for (std::uint64_t j = 0; j < 64; ++j) {
        const FieldElem x = F64->element_from_index(i), y = F64->element_from_index(j);
        if (additive_eval(ring8, f, x + y) !=
            additive_eval(ring8, f, x) + additive_eval(ring8, f, y))
          return {false, "additive evaluation not additive"};
      }
    }
    // Kernel size q^deg for separable skew polynomials.
    const auto kernel = additive_kernel(ring8, f, F64);
    if (kernel.size() != 2) return {false, "kernel of F+1 on F_64 should have 2 points"};
  }
  {
    // rgcd right-divides both inputs.
    const ore::FieldTwist ring8(F8, 2);
    std::mt19937_64 rng2(0x60D);
    for (int it = 0; it < 20; ++it) {
      ore::FSkew f, g;
      for (int i = 0; i <= 3; ++i) f.c.push_back(F8->element_from_index(rng2() % 8));
      for (int i = 0; i <= 2; ++i) g.c.push_back(F8->element_from_index(rng2() % 8));
      normalize(ring8, f);
      normalize(ring8, g);
      if (f.is_zero() || g.is_zero()) continue;
      const ore::FSkew d = right_gcd(ring8, f, g);
      if (!right_divmod(ring8, f, d).second.is_zero() ||
          !right_divmod(ring8, g, d).second.is_zero())
        return {false, "rgcd does not right-divide the inputs"};
    }
  }
  return {true, "Ore-ring invariants hold"};
}

std::pair<bool, std::string> check_dmod_properties() {
  std::mt19937_64 rng(0xD40D);
  // Character order equals the splitting degree; the Kummer class order
  // equals [L':K'].
  for (int it = 0; it < 25; ++it) {
    const GridCell cell = rank1_cells()[rng() % rank1_cells().size()];
    const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % 3);
    const FieldCtx* K = gf::build_field(cell.p, cell.nK);
    const FieldCtx* Fq = gf::build_field(cell.p, gf::q_exponent_over_p(cell.p, cell.q));
    const EPoly phi = epoly::smallest_irreducible(Fq, d);
    const std::uint64_t ai = 1 + rng() % (K->cardinality_u64() - 1);
    const std::uint64_t bi = rng() % K->cardinality_u64();
    if (epoly::eval_embedded(phi, K->element_from_index(bi)).is_zero()) continue;
    const DrinfeldParams par = dmod::rank1_params(
        K, cell.q, K->element_from_index(ai), K->element_from_index(bi), phi);
    const dmod::DivisionPointData data = dmod::division_points(par);
    const dmod::CharacterValue chi = dmod::character(data);
    if (gf::mult_order(chi.scalar()) != data.ext_degree)
      return {false, "character order != [K(V):K]"};
    const auto [Kp, zeta] = dmod::adjoin_root(K, phi);
    const dmod::KummerDatum kd =
        dmod::kummer_datum(par.g[1], par.g[0], phi, zeta);
    // [L':K'] = [L':F_p]/[K':F_p] with L' = L(zeta).
    const std::uint32_t Lp_deg = std::lcm(data.L->degree(), Kp->degree());
    if (kd.class_order() != Lp_deg / Kp->degree())
      return {false, "Kummer class order != [L':K']"};
  }
  return {true, "character orders and Kummer class orders agree with field degrees"};
}

std::pair<bool, std::string> check_hypa_properties() {
  for (std::uint32_t m : {1u, 2u}) {
    const hypa::HypACtx ctx = hypa::make_ctx(gf::build_field(2, m));
    const FieldCtx* Kp = ctx.Kp;
    // S is a subgroup: closed under multiplication and inverses.
    std::set<std::uint64_t> S;
    for (std::uint64_t k = 1; k < Kp->cardinality_u64(); ++k) {
      const FieldElem x = Kp->element_from_index(k);
      if (x.is_zero()) continue;
      S.insert(Kp->index_of(ctx.sigma(x) * (x * x).inverse()));
    }
    for (std::uint64_t s1 : S) {
      if (!S.count(Kp->index_of(Kp->element_from_index(s1).inverse())))
        return {false, "S not closed under inverses"};
      for (std::uint64_t s2 : S) {
        if (!S.count(Kp->idx_mul(s1, s2))) return {false, "S not closed under products"};
      }
    }
    // f is multiplicative.
    std::mt19937_64 rng(77 + m);
    for (int it = 0; it < 30; ++it) {
      const FieldElem x = Kp->exp(rng() % (Kp->cardinality_u64() - 1));
      const FieldElem y = Kp->exp(rng() % (Kp->cardinality_u64() - 1));
      if (hypa::f_map(ctx, x * y) != hypa::f_map(ctx, x) * hypa::f_map(ctx, y))
        return {false, "f is not multiplicative"};
    }
  }
  return {true, "S is a subgroup; f is a homomorphism"};
}

SuiteResult properties(unsigned jobs) {
  (void)jobs;
  Runner r;
  r.result.section = "properties";
  r.run("gf-invariants", check_gf_properties);
  r.run("ore-invariants", check_ore_properties);
  r.run("drinfeld-invariants", check_dmod_properties);
  r.run("hypa-invariants", check_hypa_properties);
  return r.result;
}

}  // namespace

std::vector<std::string> section_names() {
  return {"section2", "section3", "section4", "section5", "section6", "properties"};
}

SuiteResult run_section(const std::string& name, unsigned jobs) {
  const double t0 = now_seconds();
  SuiteResult res;
  if (name == "section2") {
    res = section2(jobs);
  } else if (name == "section3") {
    res = section3(jobs);
  } else if (name == "section4") {
    res = section4(jobs);
  } else if (name == "section5") {
    res = section5(jobs);
  } else if (name == "section6") {
    res = section6(jobs);
  } else if (name == "properties") {
    res = properties(jobs);
  } else {
    throw UsageError("unknown suite section: " + name);
  }
  res.seconds = now_seconds() - t0;
  return res;
}

std::vector<SuiteResult> run_all(unsigned jobs) {
  std::vector<SuiteResult> out;
  for (const auto& name : section_names()) out.push_back(run_section(name, jobs));
  return out;
}

}  // namespace drinfeld::suite
