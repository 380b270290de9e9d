// Batch front end for the Drinfeld character toolkit. Every subcommand goes
// through the C API of libdrinfeld; exit codes are 0 (success), 1 (a
// verification or certificate check failed), 2 (usage or resource error).

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include "drinfeld.h"

namespace {

struct Output {
  std::string path;
  bool timestamp = true;

  void write(const std::string& payload) const {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      os = &file;
    }
    if (timestamp) {
      const std::time_t t = std::time(nullptr);
      char buf[64];
      std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
      *os << "# generated " << buf << "\n";
    }
    *os << payload << "\n";
  }
};

int finish(drf_status st, char* payload, const Output& out) {
  if (payload) {
    out.write(payload);
    drf_string_free(payload);
  }
  if (st == DRF_OK) return 0;
  std::cerr << drf_status_name(st) << ": " << drf_last_error() << "\n";
  return st == DRF_VERIFY_FAILED ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drinfeld: exact arithmetic for rank-1 Drinfeld characters over finite fields"};
  app.require_subcommand(1);

  Output out;
  bool no_timestamp = false;
  unsigned jobs = 1;
  std::uint64_t max_size = 0;
  app.add_option("--out", out.path, "write the report to a file instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "omit the generation timestamp header");
  app.add_option("--jobs", jobs, "worker threads for grid audits");
  app.add_option("--max-size", max_size, "override the per-field enumeration bound");

  std::uint32_t p = 2, n = 1, d = 1, m = 1, max_m = 5, degree = 1;
  std::uint64_t q = 2, k = 1;
  std::string a, b, c, lambda, u, g_coeffs, phi, points, kummer_c, format = "json";

  // verify identities
  auto* verify = app.add_subcommand("verify", "symbolic skew-polynomial identity checks");
  auto* identities = verify->add_subcommand(
      "identities", "verify the twisted LCM factorization identity for (q, d) exactly");
  identities->add_option("--q", q, "twist prime power")->required();
  identities->add_option("--d", d, "degree of the irreducible phi")->required();

  auto* division = app.add_subcommand(
      "division-points", "kernel of phi(g(F)) with its module structure and splitting field");
  division->add_option("--p", p)->required();
  division->add_option("--n", n)->required();
  division->add_option("--q", q)->required();
  division->add_option("--d", d)->required();
  division->add_option("--a", a, "leading coefficient of g = aF + b");
  division->add_option("--b", b, "constant coefficient of g");
  division->add_option("--g", g_coeffs, "full coefficient list of g(F), low degree first");
  division->add_option("--phi", phi, "coefficients of phi over F_q (default: deterministic)");

  auto* character = app.add_subcommand(
      "character", "the Frobenius value of the representation on the division points");
  character->add_option("--p", p)->required();
  character->add_option("--n", n)->required();
  character->add_option("--q", q)->required();
  character->add_option("--d", d)->required();
  character->add_option("--a", a);
  character->add_option("--b", b);
  character->add_option("--g", g_coeffs);
  character->add_option("--phi", phi);

  auto* kummer = app.add_subcommand(
      "kummer", "the Kummer datum c = prod(zeta - b^{q^i}) / a^{[q]_d} and its power class");
  kummer->add_option("--p", p)->required();
  kummer->add_option("--n", n)->required();
  kummer->add_option("--q", q)->required();
  kummer->add_option("--d", d)->required();
  kummer->add_option("--a", a)->required();
  kummer->add_option("--b", b)->required();

  auto* rec = app.add_subcommand(
      "recover", "inverse construction: parameters (a, b, phi) realizing a cyclic extension");
  rec->add_option("--p", p)->required();
  rec->add_option("--n", n)->required();
  rec->add_option("--q", q)->required();
  rec->add_option("--degree", degree, "target extension degree");
  rec->add_option("--kummer", kummer_c, "Kummer class representative in K");

  auto* coro = app.add_subcommand(
      "corollary", "the explicit splitting equation attached to degree-2 parameters");
  coro->add_option("--p", p)->required();
  coro->add_option("--n", n)->required();
  coro->add_option("--q", q)->required();
  coro->add_option("--a", a)->required();
  coro->add_option("--b", b)->required();
  coro->add_option("--lambda", lambda)->required();

  auto* cartan = app.add_subcommand(
      "cartan", "nonsplit-Cartan orbit of the roots of (u^{q+1}-lambda) - b(u^q-u)");
  cartan->add_option("--q", q)->required();
  cartan->add_option("--lambda", lambda)->required();
  cartan->add_option("--u", u)->required();

  auto* genus = app.add_subcommand("genus", "genus of the intermediate function field");
  genus->add_option("--q", q)->required();
  genus->add_option("--d", d)->required();
  genus->add_option("--k", k)->required();

  auto* audit = app.add_subcommand(
      "audit-surjectivity", "orders of character images in F_{q^d}^*/F_q^* over all (a, b)");
  audit->add_option("--p", p)->required();
  audit->add_option("--n", n)->required();
  audit->add_option("--q", q)->required();
  audit->add_option("--d", d)->required();
  audit->add_option("--format", format, "json or csv");

  auto* hypa = app.add_subcommand("hypa", "hypothesis (A) machinery over F_{2^m}");
  auto* h_audit = hypa->add_subcommand("audit", "coset coverage of S = {sigma(x) x^{-2}}");
  h_audit->add_option("--m", m)->required();
  auto* h_classify =
      hypa->add_subcommand("classify", "which F_{2^m} satisfy the coset-coverage hypothesis");
  h_classify->add_option("--max-m", max_m);
  auto* h_witness = hypa->add_subcommand(
      "witness", "certified surjective character whose field is not a division-point field");
  h_witness->add_option("--m", m)->required();
  auto* h_quartic = hypa->add_subcommand("quartic", "nontrivial zeros of the quartic Q(a,b,c)");
  h_quartic->add_option("--m", m)->required();
  h_quartic->add_option("--a", a)->required();
  h_quartic->add_option("--b", b)->required();
  h_quartic->add_option("--c", c)->required();
  h_quartic->add_option("--format", format);
  auto* h_nonic = hypa->add_subcommand(
      "nonic", "partial-derivative elimination, cube identity and line factorization");

  auto* subspace = app.add_subcommand(
      "subspace", "monic additive polynomial with a prescribed F_q-subspace of roots");
  subspace->add_option("--p", p)->required();
  subspace->add_option("--n", n)->required();
  subspace->add_option("--q", q)->required();
  subspace->add_option("--points", points, "semicolon-separated subspace elements")->required();

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name = "all";
  suite->add_option("name", suite_name, "all | section2..section6 | properties");

  CLI11_PARSE(app, argc, argv);
  out.timestamp = !no_timestamp;
  if (max_size) {
    if (drf_set_max_table_size(max_size) != DRF_OK) {
      std::cerr << "usage-error: " << drf_last_error() << "\n";
      return 2;
    }
  }

  char* payload = nullptr;
  drf_status st = DRF_USAGE_ERROR;

  const auto g_arg = [&]() -> std::string {
    if (!g_coeffs.empty()) return g_coeffs;
    if (a.empty() || b.empty()) return {};
    return b + ";" + a;
  };

  if (identities->parsed()) {
    int holds = 0;
    st = drf_verify_lcm_identity(q, d, &holds);
    std::string j = std::string("{\n  \"q\": ") + std::to_string(q) +
                    ",\n  \"d\": " + std::to_string(d) +
                    ",\n  \"identity\": " + (holds ? "true" : "false") + "\n}";
    out.write(j);
    if (st == DRF_OK) return 0;
    std::cerr << drf_status_name(st) << ": " << drf_last_error() << "\n";
    return st == DRF_VERIFY_FAILED ? 1 : 2;
  } else if (division->parsed()) {
    const std::string g = g_arg();
    if (g.empty()) {
      std::cerr << "usage-error: provide --a/--b or --g\n";
      return 2;
    }
    st = drf_division_points(p, n, q, g.c_str(), d, phi.c_str(), &payload);
  } else if (character->parsed()) {
    const std::string g = g_arg();
    if (g.empty()) {
      std::cerr << "usage-error: provide --a/--b or --g\n";
      return 2;
    }
    st = drf_character(p, n, q, g.c_str(), d, phi.c_str(), &payload);
  } else if (kummer->parsed()) {
    st = drf_kummer(p, n, q, d, a.c_str(), b.c_str(), &payload);
  } else if (rec->parsed()) {
    st = drf_recover(p, n, q, degree, kummer_c.c_str(), &payload);
  } else if (coro->parsed()) {
    st = drf_corollary(p, n, q, a.c_str(), b.c_str(), lambda.c_str(), &payload);
  } else if (cartan->parsed()) {
    st = drf_cartan(q, lambda.c_str(), u.c_str(), &payload);
  } else if (genus->parsed()) {
    st = drf_genus(q, d, k, &payload);
  } else if (audit->parsed()) {
    st = drf_audit_surjectivity(p, n, q, d, format.c_str(), &payload);
  } else if (h_audit->parsed()) {
    st = drf_hypa_audit(m, &payload);
  } else if (h_classify->parsed()) {
    st = drf_hypa_classify(max_m, &payload);
  } else if (h_witness->parsed()) {
    st = drf_hypa_witness(m, &payload);
  } else if (h_quartic->parsed()) {
    st = drf_hypa_quartic(m, a.c_str(), b.c_str(), c.c_str(), format.c_str(), &payload);
  } else if (h_nonic->parsed()) {
    int holds = 0;
    st = drf_hypa_nonic(&holds, &payload);
  } else if (subspace->parsed()) {
    st = drf_subspace(p, n, q, points.c_str(), &payload);
  } else if (suite->parsed()) {
    st = drf_suite(suite_name.c_str(), jobs, &payload);
  } else {
    std::cerr << "usage-error: unknown subcommand\n";
    return 2;
  }
  return finish(st, payload, out);
}
