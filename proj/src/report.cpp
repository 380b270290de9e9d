#include "drinfeld/report.hpp"

#include <sstream>

namespace drinfeld::report {

Json field_json(const gf::FieldCtx* ctx) {
  Json j;
  j["p"] = ctx->p();
  j["n"] = ctx->degree();
  j["modulus"] = ctx->modulus();
  if (ctx->cardinality_fits_u64())
    j["cardinality"] = ctx->cardinality_u64();
  else
    j["cardinality"] = std::to_string(ctx->p()) + "^" + std::to_string(ctx->degree());
  return j;
}

Json elem_json(const gf::FieldElem& e) { return Json(e.digits()); }

std::string elem_str(const gf::FieldElem& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.digits().size(); ++i) {
    if (i) os << ',';
    os << e.digits()[i];
  }
  return os.str();
}

Json skew_json(const ore::FSkew& f, std::uint64_t q) {
  Json j;
  j["twist_q"] = q;
  Json coeffs = Json::array();
  for (const auto& c : f.c) coeffs.push_back(elem_json(c));
  j["coefficients"] = coeffs;
  return j;
}

Json epoly_json(const epoly::EPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.c) coeffs.push_back(elem_json(c));
  return coeffs;
}

Json division_json(const dmod::DivisionPointData& data, bool include_points) {
  Json j;
  j["base_field"] = field_json(data.params.K);
  j["q"] = data.params.q;
  j["g"] = skew_json(data.params.g_skew(), data.params.q);
  j["phi"] = epoly_json(data.params.phi);
  j["splitting_field"] = field_json(data.L);
  j["extension_degree"] = data.ext_degree;
  j["point_count"] = data.points.size();
  if (include_points && data.points.size() <= 4096) {
    Json pts = Json::array();
    for (const auto& x : data.points) pts.push_back(elem_json(x));
    j["points"] = pts;
  }
  Json basis = Json::array();
  for (const auto& x : data.basis) basis.push_back(elem_json(x));
  j["basis"] = basis;
  return j;
}

Json character_json(const dmod::CharacterValue& chi) {
  Json j;
  j["value_field"] = field_json(chi.Fqd);
  Json mat = Json::array();
  for (const auto& row : chi.mat) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(elem_json(v));
    mat.push_back(r);
  }
  j["matrix"] = mat;
  if (chi.mat.size() == 1) j["order"] = gf::mult_order(chi.scalar());
  return j;
}

Json kummer_json(const dmod::KummerDatum& kd) {
  Json j;
  j["field"] = field_json(kd.Kprime);
  j["c"] = elem_json(kd.c);
  j["modulus"] = kd.modulus;
  j["class_order"] = kd.class_order();
  return j;
}

Json recovery_json(const recover::RecoveryResult& r) {
  Json j;
  j["a"] = elem_json(r.a);
  j["b"] = elem_json(r.b);
  j["phi"] = epoly_json(r.phi);
  j["branch"] = r.branch;
  j["certificate"] = Json{{"datum", kummer_json(r.cert)},
                          {"target_c", elem_json(r.target_c)},
                          {"class_ok", r.class_ok},
                          {"expected_degree", r.expected_degree},
                          {"actual_degree", r.actual_degree},
                          {"degree_ok", r.degree_ok}};
  if (r.root_witness) j["certificate"]["root_witness"] = elem_json(*r.root_witness);
  return j;
}

Json surj_json(const dmod::SurjReport& rep) {
  Json j;
  j["base_field"] = field_json(rep.K);
  j["q"] = rep.q;
  j["d"] = rep.d;
  j["surjective_count"] = rep.surjective_count;
  j["sample_count"] = rep.rows.size();
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"a", elem_json(r.a)},
                        {"b", elem_json(r.b)},
                        {"extension_degree", r.ext_degree},
                        {"k", r.k},
                        {"surjective", r.surjective}});
  }
  j["rows"] = rows;
  return j;
}

std::string surj_csv(const dmod::SurjReport& rep) {
  std::ostringstream os;
  os << "a,b,k,surjective\n";
  for (const auto& r : rep.rows) {
    os << '"' << elem_str(r.a) << "\",\"" << elem_str(r.b) << "\"," << r.k << ','
       << (r.surjective ? 1 : 0) << '\n';
  }
  return os.str();
}

Json cartan_json(const recover::CartanOrbit& orb) {
  Json j;
  j["b"] = elem_json(orb.b);
  j["root"] = elem_json(orb.root);
  Json orbit = Json::array();
  for (const auto& x : orb.orbit) orbit.push_back(elem_json(x));
  j["orbit"] = orbit;
  j["orbit_size"] = orb.orbit.size();
  j["splits_completely"] = orb.splits_completely;
  j["product_matches"] = orb.product_matches;
  j["all_satisfy_dagger"] = orb.all_satisfy_dagger;
  return j;
}

Json corollary_json(const recover::CorollaryEquation& eq) {
  Json j;
  j["phi"] = epoly_json(eq.phi);
  Json coeffs = Json::array();
  for (const auto& c : eq.coeffs) coeffs.push_back(elem_json(c));
  j["coefficients"] = coeffs;
  j["exponents"] = eq.exponents;
  return j;
}

Json hypa_audit_json(const hypa::HypAReport& rep) {
  Json j;
  j["m"] = rep.m;
  j["subgroup_order"] = rep.subgroup_order;
  j["coset_count"] = rep.coset_count;
  j["covered_count"] = rep.covered_count;
  j["satisfies_A"] = rep.satisfies_A;
  if (rep.witness) j["uncovered_witness"] = elem_json(*rep.witness);
  return j;
}

Json hypa_witness_json(const hypa::WitnessReport& rep) {
  Json j;
  j["y"] = elem_json(rep.y);
  j["c"] = elem_json(rep.c);
  j["certificate_ok"] = rep.certificate_ok;
  j["attempts"] = rep.attempts;
  Json att = Json::array();
  for (const auto& v : rep.attainable) att.push_back(elem_json(v));
  j["attainable_values"] = att;
  j["class_order"] = rep.class_order;
  j["galois_degree"] = rep.galois_degree;
  j["v_outside_K"] = rep.v_outside_K;
  return j;
}

Json hypa_classify_json(const hypa::ClassifyReport& rep) {
  Json j;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"m", r.m},
                        {"satisfies_A", r.satisfies_A},
                        {"covered", r.covered},
                        {"cosets", r.cosets}});
  }
  j["rows"] = rows;
  j["hasse_weil_floor_ok"] = rep.hasse_weil_floor_ok;
  return j;
}

Json hypa_nonic_json(const hypa::NonicReport& rep) {
  Json j;
  j["elimination_matches"] = rep.elimination_matches;
  j["cube_identity"] = rep.cube_identity;
  j["lines_factorization"] = rep.lines_factorization;
  j["ok"] = rep.ok();
  return j;
}

std::string quartic_csv(const hypa::QuarticCount& count) {
  std::ostringstream os;
  os << "u,v,w\n";
  for (const auto& s : count.solutions) {
    os << '"' << elem_str(s[0]) << "\",\"" << elem_str(s[1]) << "\",\"" << elem_str(s[2])
       << "\"\n";
  }
  return os.str();
}

}  // namespace drinfeld::report
