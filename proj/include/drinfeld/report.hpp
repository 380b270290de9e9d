#pragma once

#include <json.hpp>

#include "drinfeld/dmod.hpp"
#include "drinfeld/hypa.hpp"
#include "drinfeld/recover.hpp"

namespace drinfeld::report {

using Json = nlohmann::ordered_json;

Json field_json(const gf::FieldCtx* ctx);
Json elem_json(const gf::FieldElem& e);
std::string elem_str(const gf::FieldElem& e);  // comma-separated digits, low-degree-first

Json skew_json(const ore::FSkew& f, std::uint64_t q);
Json epoly_json(const epoly::EPoly& f);

Json division_json(const dmod::DivisionPointData& data, bool include_points = true);
Json character_json(const dmod::CharacterValue& chi);
Json kummer_json(const dmod::KummerDatum& kd);
Json recovery_json(const recover::RecoveryResult& r);
Json surj_json(const dmod::SurjReport& rep);
std::string surj_csv(const dmod::SurjReport& rep);
Json cartan_json(const recover::CartanOrbit& orb);
Json corollary_json(const recover::CorollaryEquation& eq);
Json hypa_audit_json(const hypa::HypAReport& rep);
Json hypa_witness_json(const hypa::WitnessReport& rep);
Json hypa_classify_json(const hypa::ClassifyReport& rep);
Json hypa_nonic_json(const hypa::NonicReport& rep);
std::string quartic_csv(const hypa::QuarticCount& count);

}  // namespace drinfeld::report
