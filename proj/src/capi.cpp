#include "drinfeld.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "drinfeld/report.hpp"
#include "drinfeld/suite.hpp"

using namespace drinfeld;
using gf::FieldCtx;
using gf::FieldElem;
using report::Json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

drf_status fail(drf_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <class Fn>
drf_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    return fail(DRF_USAGE_ERROR, e.what());
  } catch (const recover::ObstructionError& e) {
    return fail(DRF_VERIFY_FAILED, e.what());
  } catch (const LimitError& e) {
    return fail(DRF_LIMIT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(DRF_INTERNAL_ERROR, e.what());
  }
}

std::vector<std::uint32_t> parse_digits(const char* s) {
  if (!s) throw UsageError("missing element");
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  if (out.empty()) throw UsageError("empty element encoding");
  return out;
}

FieldElem parse_elem(const FieldCtx* ctx, const char* s) {
  return ctx->from_digits(parse_digits(s));
}

std::vector<FieldElem> parse_elems(const FieldCtx* ctx, const char* s) {
  if (!s) throw UsageError("missing element list");
  std::vector<FieldElem> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    out.push_back(parse_elem(ctx, tok.c_str()));
  }
  if (out.empty()) throw UsageError("empty element list");
  return out;
}

const FieldCtx* fq_ctx(std::uint32_t p, std::uint64_t q) {
  return gf::build_field(p, gf::q_exponent_over_p(p, q));
}

epoly::EPoly parse_phi(std::uint32_t p, std::uint64_t q, std::uint32_t d, const char* phi_coeffs) {
  const FieldCtx* Fq = fq_ctx(p, q);
  if (!phi_coeffs || !*phi_coeffs) return epoly::smallest_irreducible(Fq, d);
  epoly::EPoly phi{Fq, parse_elems(Fq, phi_coeffs)};
  epoly::normalize(phi);
  if (phi.degree() != static_cast<int>(d)) throw UsageError("phi degree does not match --d");
  return phi;
}

dmod::DrinfeldParams parse_params(std::uint32_t p, std::uint32_t n, std::uint64_t q,
                                  const char* g_coeffs, std::uint32_t d, const char* phi_coeffs) {
  const FieldCtx* K = gf::build_field(p, n);
  dmod::DrinfeldParams par{K, q, parse_elems(K, g_coeffs), parse_phi(p, q, d, phi_coeffs)};
  par.validate();
  return par;
}

drf_status emit(char** out, const Json& j) {
  *out = dup_string(j.dump(2));
  return DRF_OK;
}

}  // namespace

extern "C" {

struct drf_field {
  const FieldCtx* ctx;
};

const char* drf_version(void) { return "1.0.0"; }

const char* drf_status_name(int status) {
  switch (status) {
    case DRF_OK:
      return "ok";
    case DRF_VERIFY_FAILED:
      return "verify-failed";
    case DRF_USAGE_ERROR:
      return "usage-error";
    case DRF_LIMIT_ERROR:
      return "limit-error";
    default:
      return "internal-error";
  }
}

const char* drf_last_error(void) { return g_last_error.c_str(); }

void drf_string_free(char* s) { std::free(s); }

drf_status drf_set_max_table_size(uint64_t max_elems) {
  return wrap([&] {
    if (max_elems < 4) throw UsageError("table bound too small");
    limits().max_table_elems = max_elems;
    return DRF_OK;
  });
}

drf_status drf_field_create(uint32_t p, uint32_t n, drf_field** out) {
  return wrap([&] {
    *out = new drf_field{gf::build_field(p, n)};
    return DRF_OK;
  });
}

void drf_field_release(drf_field* f) { delete f; }

drf_status drf_field_info(const drf_field* f, char** json_out) {
  return wrap([&] { return emit(json_out, report::field_json(f->ctx)); });
}

drf_status drf_element_order(const drf_field* f, const char* elem, uint64_t* order_out) {
  return wrap([&] {
    *order_out = gf::mult_order(parse_elem(f->ctx, elem));
    return DRF_OK;
  });
}

drf_status drf_embed_element(const drf_field* src, const drf_field* dst, const char* elem,
                             char** elem_out) {
  return wrap([&] {
    const FieldElem e = gf::embed(parse_elem(src->ctx, elem), dst->ctx);
    *elem_out = dup_string(report::elem_str(e));
    return DRF_OK;
  });
}

drf_status drf_frobenius(const drf_field* f, const char* elem, uint64_t base_q, int64_t i,
                         char** elem_out) {
  return wrap([&] {
    const FieldElem e = gf::frobenius_power(parse_elem(f->ctx, elem), base_q, i);
    *elem_out = dup_string(report::elem_str(e));
    return DRF_OK;
  });
}

drf_status drf_power_class(const drf_field* f, const char* elem, uint64_t m, int* is_mth_power,
                           char** root_out) {
  return wrap([&] {
    const auto [ok, root] = gf::power_class_test(parse_elem(f->ctx, elem), m);
    *is_mth_power = ok ? 1 : 0;
    if (root_out) *root_out = root ? dup_string(report::elem_str(*root)) : nullptr;
    return DRF_OK;
  });
}

drf_status drf_poly_roots(const drf_field* f, const char* coeffs, char** json_out) {
  return wrap([&] {
    epoly::EPoly poly{f->ctx, parse_elems(f->ctx, coeffs)};
    epoly::normalize(poly);
    Json roots = Json::array();
    for (const auto& [r, mult] : epoly::roots_with_multiplicity(poly)) {
      roots.push_back(Json{{"root", report::elem_json(r)}, {"multiplicity", mult}});
    }
    return emit(json_out, Json{{"roots", roots}});
  });
}

drf_status drf_verify_lcm_identity(uint64_t q, uint32_t d, int* holds) {
  return wrap([&] {
    const bool ok = ore::verify_lcm_identity(q, d);
    *holds = ok ? 1 : 0;
    return ok ? DRF_OK : fail(DRF_VERIFY_FAILED, "lcm identity does not hold");
  });
}

drf_status drf_division_points(uint32_t p, uint32_t n, uint64_t q, const char* g_coeffs,
                               uint32_t d, const char* phi_coeffs, char** json_out) {
  return wrap([&] {
    const auto par = parse_params(p, n, q, g_coeffs, d, phi_coeffs);
    return emit(json_out, report::division_json(dmod::division_points(par)));
  });
}

drf_status drf_character(uint32_t p, uint32_t n, uint64_t q, const char* g_coeffs, uint32_t d,
                         const char* phi_coeffs, char** json_out) {
  return wrap([&] {
    const auto par = parse_params(p, n, q, g_coeffs, d, phi_coeffs);
    const auto data = dmod::division_points(par);
    Json j = report::division_json(data, false);
    j["character"] = report::character_json(dmod::character(data));
    return emit(json_out, j);
  });
}

drf_status drf_kummer(uint32_t p, uint32_t n, uint64_t q, uint32_t d, const char* a, const char* b,
                      char** json_out) {
  return wrap([&] {
    const FieldCtx* K = gf::build_field(p, n);
    const epoly::EPoly phi = parse_phi(p, q, d, nullptr);
    const auto [Kp, zeta] = dmod::adjoin_root(K, phi);
    const auto kd = dmod::kummer_datum(parse_elem(K, a), parse_elem(K, b), phi, zeta);
    Json j = report::kummer_json(kd);
    j["zeta"] = report::elem_json(zeta);
    j["phi"] = report::epoly_json(phi);
    return emit(json_out, j);
  });
}

drf_status drf_genus(uint64_t q, uint32_t d, uint64_t k, char** json_out) {
  return wrap([&] {
    const Rational g = dmod::genus_N(q, d, k);
    return emit(json_out,
                Json{{"q", q}, {"d", d}, {"k", k}, {"genus", g.str()}, {"zero", g == Rational(0)}});
  });
}

drf_status drf_audit_surjectivity(uint32_t p, uint32_t n, uint64_t q, uint32_t d,
                                  const char* format, char** out) {
  return wrap([&] {
    const FieldCtx* K = gf::build_field(p, n);
    const epoly::EPoly phi = parse_phi(p, q, d, nullptr);
    std::vector<std::pair<FieldElem, FieldElem>> samples;
    for (std::uint64_t ai = 1; ai < K->cardinality_u64(); ++ai) {
      for (std::uint64_t bi = 0; bi < K->cardinality_u64(); ++bi) {
        const FieldElem b = K->element_from_index(bi);
        if (epoly::eval_embedded(phi, b).is_zero()) continue;
        samples.emplace_back(K->element_from_index(ai), b);
      }
    }
    const auto rep = dmod::surjectivity_audit(K, q, phi, samples);
    if (format && std::string(format) == "csv") {
      *out = dup_string(report::surj_csv(rep));
      return DRF_OK;
    }
    return emit(out, report::surj_json(rep));
  });
}

drf_status drf_subspace(uint32_t p, uint32_t n, uint64_t q, const char* points, char** json_out) {
  return wrap([&] {
    const FieldCtx* L = gf::build_field(p, n);
    const auto V = parse_elems(L, points);
    const ore::FSkew g = dmod::subspace_polynomial(V, q);
    Json j;
    j["field"] = report::field_json(L);
    j["polynomial"] = report::skew_json(g, q);
    return emit(json_out, j);
  });
}

drf_status drf_recover(uint32_t p, uint32_t n, uint64_t q, uint32_t degree, const char* kummer_c,
                       char** json_out) {
  return wrap([&] {
    const FieldCtx* K = gf::build_field(p, n);
    recover::RecoveryResult res;
    if (kummer_c && *kummer_c) {
      const FieldElem c = parse_elem(K, kummer_c);
      const std::uint32_t s = gf::q_exponent_over_p(p, q);
      if (K->degree() % (2 * s) == 0) {
        res = recover::recover_d2_zeta_in_K(K, q, c);
      } else {
        res = recover::recover_d1(c, q);
      }
    } else {
      res = recover::recover(K, q, degree);
    }
    const drf_status code = res.class_ok && res.degree_ok ? DRF_OK : DRF_VERIFY_FAILED;
    if (code != DRF_OK) g_last_error = "recovery certificate failed";
    emit(json_out, report::recovery_json(res));
    return code;
  });
}

drf_status drf_corollary(uint32_t p, uint32_t n, uint64_t q, const char* a, const char* b,
                         const char* lambda, char** json_out) {
  return wrap([&] {
    const FieldCtx* K = gf::build_field(p, n);
    const FieldCtx* Fq = fq_ctx(p, q);
    const auto eq =
        recover::corollary_equation(parse_elem(K, a), parse_elem(K, b), parse_elem(Fq, lambda));
    return emit(json_out, report::corollary_json(eq));
  });
}

drf_status drf_cartan(uint64_t q, const char* lambda, const char* u, char** json_out) {
  return wrap([&] {
    std::uint32_t p = 0;
    for (std::uint64_t cand = 2; cand * cand <= q; ++cand) {
      if (q % cand == 0) {
        p = static_cast<std::uint32_t>(cand);
        break;
      }
    }
    if (!p) p = static_cast<std::uint32_t>(q);
    const FieldCtx* Fq = fq_ctx(p, q);
    const FieldCtx* F2q = gf::build_field(p, 2 * Fq->degree());
    const auto orb = recover::cartan_orbit(q, parse_elem(Fq, lambda), parse_elem(F2q, u));
    const bool ok = orb.splits_completely && orb.product_matches && orb.all_satisfy_dagger;
    emit(json_out, report::cartan_json(orb));
    if (!ok) return fail(DRF_VERIFY_FAILED, "Cartan orbit check failed");
    return DRF_OK;
  });
}

drf_status drf_hypa_audit(uint32_t m, char** json_out) {
  return wrap([&] {
    const auto rep = hypa::coset_audit(hypa::make_ctx(gf::build_field(2, m)));
    return emit(json_out, report::hypa_audit_json(rep));
  });
}

drf_status drf_hypa_classify(uint32_t max_m, char** json_out) {
  return wrap([&] {
    const auto rep = hypa::classify_finite_fields(max_m);
    return emit(json_out, report::hypa_classify_json(rep));
  });
}

drf_status drf_hypa_witness(uint32_t m, char** json_out) {
  return wrap([&] {
    const auto rep = hypa::non_drinfeld_witness(hypa::make_ctx(gf::build_field(2, m)));
    emit(json_out, report::hypa_witness_json(rep));
    return rep.certificate_ok ? DRF_OK : fail(DRF_VERIFY_FAILED, "witness certificate failed");
  });
}

drf_status drf_hypa_quartic(uint32_t m, const char* a, const char* b, const char* c,
                            const char* format, char** out) {
  return wrap([&] {
    const FieldCtx* K = gf::build_field(2, m);
    const auto count =
        hypa::quartic_solutions(parse_elem(K, a), parse_elem(K, b), parse_elem(K, c), 4096);
    if (format && std::string(format) == "csv") {
      *out = dup_string(report::quartic_csv(count));
      return DRF_OK;
    }
    Json j;
    j["nontrivial_solutions"] = count.nontrivial_solutions;
    Json sols = Json::array();
    for (const auto& s : count.solutions) {
      sols.push_back(Json{{"u", report::elem_json(s[0])},
                          {"v", report::elem_json(s[1])},
                          {"w", report::elem_json(s[2])}});
    }
    j["solutions"] = sols;
    return emit(out, j);
  });
}

drf_status drf_hypa_nonic(int* holds, char** json_out) {
  return wrap([&] {
    const auto rep = hypa::nonic_degeneracy_check();
    if (holds) *holds = rep.ok() ? 1 : 0;
    if (json_out) emit(json_out, report::hypa_nonic_json(rep));
    return rep.ok() ? DRF_OK : fail(DRF_VERIFY_FAILED, "nonic degeneracy check failed");
  });
}

drf_status drf_suite(const char* name, unsigned jobs, char** json_out) {
  return wrap([&] {
    const std::string which = name ? name : "all";
    std::vector<suite::SuiteResult> results;
    if (which == "all") {
      results = suite::run_all(jobs);
    } else {
      results.push_back(suite::run_section(which, jobs));
    }
    bool all_pass = true;
    Json sections = Json::array();
    for (const auto& res : results) {
      Json checks = Json::array();
      for (const auto& c : res.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"pass", c.pass},
                              {"detail", c.detail},
                              {"seconds", c.seconds}});
      }
      sections.push_back(Json{{"section", res.section},
                              {"pass", res.all_pass()},
                              {"seconds", res.seconds},
                              {"checks", checks}});
      all_pass = all_pass && res.all_pass();
    }
    emit(json_out, Json{{"suite", which}, {"pass", all_pass}, {"sections", sections}});
    return all_pass ? DRF_OK : fail(DRF_VERIFY_FAILED, "suite reported failures");
  });
}

}  // extern "C"
