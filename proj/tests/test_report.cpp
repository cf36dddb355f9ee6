#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/report.hpp"

using namespace ualg;

namespace {

AlgebraPtr alg(const char* family, std::size_t n) { return share(builtin(family, n)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::malformed;
}

bool all_pass(const Json& report) {
  for (const auto& c : report.at("certificates"))
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

const Json* cert(const Json& report, const std::string& name) {
  for (const auto& c : report.at("certificates"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

// reported tables must be what the reported terms compute
void check_tables(const Json& witness, const FiniteAlgebra& a) {
  const auto& terms = witness.at("terms");
  const auto& tables = witness.at("tables");
  REQUIRE(terms.size() == tables.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto t = parse_term(terms[i].get<std::string>(), a.signature());
    const std::size_t k = tables[i].size() == 1 ? 0 : [&] {
      std::size_t arity = 0;
      while (oracle::ipow(a.size(), arity) < tables[i].size()) ++arity;
      return arity;
    }();
    CHECK(tables[i].get<std::vector<Elem>>() == oracle::table_of(t, a, k));
  }
}

}  // namespace

TEST_CASE("classify reports") {
  auto z6 = alg("cyclic", 6);
  auto r = classify_report(z6);
  CHECK(r.at("algebra") == z6->name());
  for (const char* cls : {"maltsev", "biternary", "right_loop", "unital", "subtraction", "rho_sigma", "protomodular_1"}) {
    REQUIRE(r.at("witnesses").contains(cls));
    CHECK(r.at("witnesses").at(cls).at("status") == "found");
    check_tables(r.at("witnesses").at(cls), *z6);
  }
  CHECK(all_pass(r));
  CHECK_FALSE(r.at("certificates").empty());

  auto ps = alg("pointed_set", 3);
  auto p = classify_report(ps);
  for (const char* cls : {"maltsev", "biternary", "right_loop", "unital", "subtraction", "rho_sigma", "protomodular_1"})
    CHECK(p.at("witnesses").at(cls).at("status") == "absent");
  for (const auto& c : p.at("witnesses").at("unital").at("clones")) CHECK(c.at("status") == "complete");
  CHECK(p.at("certificates").empty());

  auto ch = classify_report(alg("chain_semilattice", 2));
  CHECK(ch.at("witnesses").at("maltsev").at("status") == "absent");
  CHECK(ch.at("witnesses").at("unital").at("status") == "absent");

  auto proto = classify_report(alg("cyclic_plus_only", 2), ClassifyOptions{kDefaultCloneCap, 2, false});
  CHECK(proto.at("witnesses").at("protomodular_2").at("status") == "found");
  CHECK(all_pass(proto));
  // bijective type 2 would need x -> p(x1,x2,y) injective from A^2 into A
  auto bij = classify_report(alg("cyclic_plus_only", 2), ClassifyOptions{kDefaultCloneCap, 2, true});
  CHECK(bij.at("witnesses").at("protomodular_2").at("status") == "absent");

  // x0, x1, zero fill the binary clone exactly; the ternary one overflows
  auto capped = classify_report(ps, ClassifyOptions{3, 1, false});
  CHECK(capped.at("witnesses").at("unital").at("status") == "absent");
  CHECK(capped.at("witnesses").at("maltsev").at("status") == "unknown");
  CHECK(code_of([&] { classify_report(ps, ClassifyOptions{2, 1, false}); }) == ErrorCode::parameter_out_of_bounds);
}

TEST_CASE("decompose Z6 over Z3") {
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  auto r = decompose_report(z6, z3);
  const auto& epis = r.at("split_epis");
  REQUIRE(epis.size() == 2);
  CHECK(all_pass(r));
  for (std::size_t i = 0; i < epis.size(); ++i) {
    const auto& e = epis[i];
    auto alpha = e.at("alpha").get<std::vector<Elem>>();
    auto beta = e.at("beta").get<std::vector<Elem>>();
    auto kernel = e.at("kernel").get<std::vector<Elem>>();
    CHECK(kernel == std::vector<Elem>{0, 3});
    auto phi = e.at("phi").get<std::vector<Elem>>();
    for (std::size_t k = 0; k < kernel.size(); ++k)
      for (Elem b = 0; b < 3; ++b) CHECK(phi[k * 3 + b] == (kernel[k] + beta[b]) % 6);
    auto psi = e.at("psi").get<std::vector<Elem>>();
    for (Elem a = 0; a < 6; ++a) CHECK(phi[psi[a]] == a);
    CHECK(e.at("general").at("pullback").size() == 6);
    const std::string prefix = "split_epi[" + std::to_string(i) + "] ";
    for (const char* name : {"cardinality |A|=|K||B|", "bijective", "psi_phi=1", "phi_psi=1", "general psi_phi=1"})
      CHECK(cert(r, prefix + name));
  }
  CHECK(r.at("witnesses").at("right_loop").at("status") == "found");

  DecomposeOptions supplied;
  supplied.plus = "plus(x0,x1)";
  supplied.minus = "minus(x0,x1)";
  supplied.p = "plus(minus(x0,x1),x2)";
  supplied.q = "plus(minus(x0,x1),x2)";
  auto s = decompose_report(z6, z3, supplied);
  CHECK(s.at("witnesses").at("right_loop").at("status") == "supplied");
  CHECK(all_pass(s));

  // a wrong minus is caught at the least element whose lambda leaves the kernel
  supplied.minus = "plus(x0,x1)";
  auto bad = decompose_report(z6, z3, supplied);
  const Json* lands = cert(bad, "split_epi[0] lambda_lands_in_kernel");
  REQUIRE(lands);
  CHECK_FALSE(lands->at("pass").get<bool>());
  CHECK(lands->at("counterexample") == Json::array({1}));

  DecomposeOptions half;
  half.plus = "plus(x0,x1)";
  CHECK(code_of([&] { decompose_report(z6, z3, half); }) == ErrorCode::malformed);
}

TEST_CASE("decompose over pointed sets fails on cardinality") {
  auto r = decompose_report(alg("pointed_set", 3), alg("pointed_set", 2));
  REQUIRE_FALSE(r.at("split_epis").empty());
  CHECK(r.at("witnesses").at("right_loop").at("status") == "absent");
  for (std::size_t i = 0; i < r.at("split_epis").size(); ++i) {
    const Json* c = cert(r, "split_epi[" + std::to_string(i) + "] cardinality |A|=|K||B|");
    REQUIRE(c);
    CHECK_FALSE(c->at("pass").get<bool>());
    const auto k = r.at("split_epis")[i].at("kernel").size();
    CHECK(c->at("counterexample") == Json::array({3, k, 2}));
  }

  auto same = decompose_report(alg("cyclic", 2), alg("cyclic", 2));
  CHECK(same.at("split_epis").size() == 1);
  CHECK(all_pass(same));
}

TEST_CASE("translate reports") {
  Json spec = {{"algebra", "builtin:cyclic:3"},
               {"translation", "tilde_from_pq"},
               {"terms", {{"p", "plus(minus(x0,x1),x2)"}, {"q", "plus(minus(x0,x1),x2)"}}}};
  auto r = translate_report(spec);
  CHECK(all_pass(r));
  const auto& out = r.at("witnesses").at("tilde_from_pq");
  CHECK(out.at("roles") == Json::array({"p~", "q~"}));
  auto z3 = builtin("cyclic", 3);
  check_tables(out, z3);

  Json trip = spec;
  trip["translation"] = "round_trip";
  trip["algebra"] = "z6.json";
  auto rt = translate_report(trip, UALG_CORPUS_DIR);
  CHECK(rt.at("algebra") == "cyclic(6)");
  CHECK(all_pass(rt));

  Json gt = {{"algebra", "builtin:cyclic_plus_only:2"},
             {"translation", "gamma_tau_check"},
             {"terms", {{"rho", "plus(x0,x1)"}, {"theta", Json::array({"zero"})}, {"sigma", Json::array({"plus(x0,x1)"})}}}};
  CHECK(all_pass(translate_report(gt)));

  Json unknown = spec;
  unknown["translation"] = "nope";
  CHECK(code_of([&] { translate_report(unknown); }) == ErrorCode::malformed);
  Json missing = spec;
  missing["terms"].erase("q");
  CHECK(code_of([&] { translate_report(missing); }) == ErrorCode::malformed);
  CHECK(code_of([&] { translate_report(Json::object()); }) == ErrorCode::malformed);
  Json wrong_arity = spec;
  wrong_arity["terms"]["p"] = "plus(x0,x1";
  CHECK_THROWS_AS(translate_report(wrong_arity), Error);
}

TEST_CASE("naturality sweep over the corpus") {
  auto r = naturality_report(load_corpus(UALG_CORPUS_DIR));
  CHECK(r.at("morphisms").get<std::size_t>() > 0);
  CHECK(r.at("passed") == r.at("morphisms"));
  CHECK(all_pass(r));
  bool mutation_checked = false;
  for (const auto& c : r.at("certificates"))
    mutation_checked = mutation_checked || c.at("name").get<std::string>().ends_with("mutated phi' rejected");
  CHECK(mutation_checked);
  for (const auto& g : r.at("groups"))
    if (g.contains("excluded")) CHECK(g.at("excluded").empty());
}

TEST_CASE("reports are deterministic and render as text") {
  auto s3 = resolve_algebra("s3.json", UALG_CORPUS_DIR);
  CHECK(classify_report(s3).dump() == classify_report(s3).dump());
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  CHECK(decompose_report(z6, z3).dump() == decompose_report(z6, z3).dump());

  auto text = to_text(classify_report(alg("cyclic_plus_only", 2)));
  CHECK(text.starts_with("algebra "));
  CHECK(text.find("witness maltsev found") != std::string::npos);
  CHECK(text.find("certificate PASS ") != std::string::npos);
  CHECK(text.find("certificate FAIL ") == std::string::npos);

  auto failing = to_text(decompose_report(alg("pointed_set", 3), alg("pointed_set", 2)));
  CHECK(failing.find("certificate FAIL split_epi[0] cardinality |A|=|K||B| at [3,") != std::string::npos);
}

TEST_CASE("algebra sources") {
  CHECK(resolve_algebra("builtin:cyclic:4")->size() == 4);
  CHECK(resolve_algebra("z3.json", UALG_CORPUS_DIR)->size() == 3);
  CHECK_THROWS_AS(resolve_algebra("builtin:cyclic"), Error);
  CHECK(code_of([] { resolve_algebra("builtin:nope:2"); }) == ErrorCode::unknown_family);
  CHECK_THROWS_AS(resolve_algebra("/nonexistent/file.json"), Error);
  CHECK(load_corpus(UALG_CORPUS_DIR).size() == 15);
}
