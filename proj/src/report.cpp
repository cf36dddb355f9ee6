#include "ualg/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/eval.hpp"
#include "ualg/split.hpp"
#include "ualg/translations.hpp"

namespace ualg {

namespace fs = std::filesystem;

AlgebraPtr resolve_algebra(std::string_view source, const fs::path& base) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) {
    auto rest = source.substr(prefix.size());
    auto colon = rest.rfind(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::malformed, "expected builtin:<family>:<n>, got '" + std::string(source) + "'");
    std::size_t n = 0;
    const auto digits = rest.substr(colon + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 6)
      throw Error(ErrorCode::malformed, "bad builtin size '" + std::string(digits) + "'");
    n = std::stoul(std::string(digits));
    return share(builtin(rest.substr(0, colon), n));
  }
  fs::path path(source);
  if (path.is_relative() && !base.empty()) path = base / path;
  return share(load_algebra(path));
}

std::vector<AlgebraPtr> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::malformed, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<AlgebraPtr> out;
  for (const auto& f : files) out.push_back(share(load_algebra(f)));
  return out;
}

namespace {

Json counterexample_json(const std::optional<std::vector<Elem>>& ce) {
  if (!ce) return nullptr;
  return Json(*ce);
}

void add_certificate(Json& certs, const std::string& name, bool pass, const std::optional<std::vector<Elem>>& ce) {
  certs.push_back({{"name", name}, {"pass", pass}, {"counterexample", counterexample_json(ce)}});
}

void add_certificate(Json& certs, const std::string& prefix, const Certificate& cert) {
  for (const auto& c : cert.checks) add_certificate(certs, prefix + c.name, c.pass, c.counterexample);
}

void add_identities(Json& certs, const std::string& prefix, const FiniteAlgebra& a, const std::vector<Identity>& ids) {
  for (const auto& o : check_identities(a, ids))
    add_certificate(certs, prefix + o.identity.to_string(), o.result.holds(), o.result.counterexample);
}

Json clone_summaries(const std::vector<CloneSummary>& clones) {
  Json out = Json::array();
  for (const auto& c : clones)
    out.push_back({{"arity", c.arity}, {"size", c.size}, {"status", std::string(to_string(c.status))}});
  return out;
}

Json term_entry(const FiniteAlgebra& a, const std::vector<std::pair<std::string, TermFn>>& roles) {
  Json entry;
  entry["terms"] = Json::array();
  entry["tables"] = Json::array();
  entry["roles"] = Json::array();
  for (const auto& [role, f] : roles) {
    entry["terms"].push_back(f.to_string());
    entry["tables"].push_back(term_table(f, a));
    entry["roles"].push_back(role);
  }
  return entry;
}

Json witness_entry(const FiniteAlgebra& a, const SearchResult& r) {
  Json entry;
  entry["status"] = std::string(to_string(r.status));
  Json terms = r.witness ? term_entry(a, witness_terms(*r.witness)) : term_entry(a, {});
  entry["terms"] = terms["terms"];
  entry["tables"] = terms["tables"];
  entry["roles"] = terms["roles"];
  entry["clones"] = clone_summaries(r.clones);
  return entry;
}

TermFn parse_fn(const std::string& text, const Signature& sig, std::size_t arity) {
  return TermFn(parse_term(text, sig), arity);
}

}  // namespace

// ---------------------------------------------------------------------------
// classify

Json classify_report(const AlgebraPtr& algebra, const ClassifyOptions& options) {
  CloneCache cache(algebra, options.max_clone);
  std::vector<std::pair<std::string, SearchResult>> results;
  results.emplace_back("maltsev", find_maltsev(cache));
  results.emplace_back("biternary", find_biternary(cache));
  results.emplace_back("right_loop", find_right_loop(cache));
  results.emplace_back("unital", find_unital(cache));
  results.emplace_back("subtraction", find_subtraction(cache));
  results.emplace_back("rho_sigma", find_rho_sigma(cache));
  results.emplace_back("protomodular_" + std::to_string(options.proto_n),
                       find_protomodular(cache, options.proto_n, options.require_bijective));

  Json report;
  report["algebra"] = algebra->name();
  report["size"] = algebra->size();
  report["signature"] = algebra->signature().to_string();
  report["witnesses"] = Json::object();
  Json certs = Json::array();
  for (const auto& [name, r] : results) {
    report["witnesses"][name] = witness_entry(*algebra, r);
    if (r.witness) add_identities(certs, name + ": ", *algebra, defining_identities(*r.witness));
  }
  report["certificates"] = std::move(certs);
  return report;
}

// ---------------------------------------------------------------------------
// decompose

Json decompose_report(const AlgebraPtr& a, const AlgebraPtr& b, const DecomposeOptions& options) {
  if (a->signature() != b->signature())
    throw Error(ErrorCode::signature_mismatch, "'" + a->name() + "' and '" + b->name() + "' have different signatures");
  const auto& sig = a->signature();
  const bool pointed = sig.pointed_constant().has_value();
  if (options.plus.has_value() != options.minus.has_value())
    throw Error(ErrorCode::malformed, "--plus and --minus must be given together");
  if (options.p.has_value() != options.q.has_value())
    throw Error(ErrorCode::malformed, "--p and --q must be given together");

  Json report;
  report["algebra"] = a->name() + " -> " + b->name();
  report["a"] = a->name();
  report["b"] = b->name();
  report["witnesses"] = Json::object();
  Json certs = Json::array();

  // witnesses: from flags when given, otherwise searched on A
  CloneCache cache(a, options.max_clone);
  std::optional<std::pair<TermFn, TermFn>> loop, pq;
  if (options.plus) {
    loop.emplace(parse_fn(*options.plus, sig, 2), parse_fn(*options.minus, sig, 2));
    Json entry = term_entry(*a, {{"plus", loop->first}, {"minus", loop->second}});
    entry["status"] = "supplied";
    report["witnesses"]["right_loop"] = entry;
  } else if (pointed) {
    auto r = find_right_loop(cache);
    report["witnesses"]["right_loop"] = witness_entry(*a, r);
    if (r.witness) {
      const auto& w = std::get<RightLoopWitness>(*r.witness);
      loop.emplace(w.plus, w.minus);
    }
  }
  if (options.p) {
    pq.emplace(parse_fn(*options.p, sig, 3), parse_fn(*options.q, sig, 3));
    Json entry = term_entry(*a, {{"p", pq->first}, {"q", pq->second}});
    entry["status"] = "supplied";
    report["witnesses"]["biternary"] = entry;
  } else {
    auto r = find_biternary(cache);
    report["witnesses"]["biternary"] = witness_entry(*a, r);
    if (r.witness) {
      const auto& w = std::get<BiternaryWitness>(*r.witness);
      pq.emplace(w.p, w.q);
    }
  }

  auto epis = enumerate_split_epis(a, b, options.limit_homs);
  Json list = Json::array();
  for (std::size_t i = 0; i < epis.size(); ++i) {
    const auto& s = epis[i];
    const std::string prefix = "split_epi[" + std::to_string(i) + "] ";
    Json entry;
    entry["alpha"] = std::vector<Elem>(s.alpha().map().begin(), s.alpha().map().end());
    entry["beta"] = std::vector<Elem>(s.beta().map().begin(), s.beta().map().end());
    if (pointed) {
      SplitExtension ext(s);
      entry["kernel"] = std::vector<Elem>(ext.kernel().elements().begin(), ext.kernel().elements().end());
      const bool card = a->size() == ext.k_size() * b->size();
      std::optional<std::vector<Elem>> sizes;
      if (!card) sizes = std::vector<Elem>{static_cast<Elem>(a->size()), static_cast<Elem>(ext.k_size()),
                                           static_cast<Elem>(b->size())};
      add_certificate(certs, prefix + "cardinality |A|=|K||B|", card, sizes);
      if (loop) {
        auto phi = phi_pointed(ext, loop->first);
        auto inv = psi_pointed(ext, loop->second);
        entry["phi"] = phi.map();
        entry["psi"] = inv.psi ? Json(inv.psi->map()) : Json(nullptr);
        entry["lambda"] = inv.lambda ? Json(inv.lambda->map()) : Json(nullptr);
        add_certificate(certs, prefix, verify_splext_morphism(phi, ext));
        add_certificate(certs, prefix + "lambda_lands_in_kernel", inv.psi.has_value(),
                        inv.offending ? std::optional(std::vector<Elem>{*inv.offending}) : std::nullopt);
        if (inv.psi) add_certificate(certs, prefix, verify_mutually_inverse(phi, *inv.psi, "phi", "psi"));
      }
    }
    if (pq) {
      auto g = phi_general(s, identity_hom(b), pq->first, pq->second);
      Json general;
      general["pullback"] = std::vector<Elem>(g.pullback.fiber.elements().begin(), g.pullback.fiber.elements().end());
      general["phi"] = g.phi.map();
      general["psi"] = g.psi ? Json(g.psi->map()) : Json(nullptr);
      entry["general"] = std::move(general);
      add_certificate(certs, prefix + "general ", g.certificate);
    }
    list.push_back(std::move(entry));
  }
  report["split_epis"] = std::move(list);
  report["certificates"] = std::move(certs);
  return report;
}

// ---------------------------------------------------------------------------
// translate

namespace {

class TermReader {
 public:
  TermReader(const Json& terms, const Signature& sig) : terms_(terms), sig_(sig) {}

  TermFn fn(const std::string& role, std::size_t arity) const {
    if (!terms_.contains(role) || !terms_.at(role).is_string())
      throw Error(ErrorCode::malformed, "missing term '" + role + "'");
    return parse_fn(terms_.at(role).get<std::string>(), sig_, arity);
  }

  std::vector<TermFn> list(const std::string& role, std::size_t count, std::size_t arity) const {
    if (!terms_.contains(role) || !terms_.at(role).is_array() || terms_.at(role).size() != count)
      throw Error(ErrorCode::malformed, "'" + role + "' must be a list of " + std::to_string(count) + " terms");
    std::vector<TermFn> out;
    for (const auto& t : terms_.at(role)) out.push_back(parse_fn(t.get<std::string>(), sig_, arity));
    return out;
  }

  RhoSigmaFamily family() const {
    auto count = [&](const char* key, std::size_t fallback) -> std::size_t {
      if (!terms_.contains(key)) return fallback;
      long v = terms_.at(key).get<long>();
      if (v < 0) throw Error(ErrorCode::out_of_range, std::string(key) + " must be non-negative");
      return static_cast<std::size_t>(v);
    };
    const std::size_t m = count("m", 0), n = count("n", 1);
    return RhoSigmaFamily{m, n, list("theta", n, m), fn("rho", n + m + 1), list("sigma", n, m + 2)};
  }

 private:
  const Json& terms_;
  const Signature& sig_;
};

Term zero_of(const Signature& sig) {
  auto c = sig.pointed_constant();
  if (!c) throw Error(ErrorCode::not_constant, "signature has no designated constant");
  return Term::app(sig, *c, {});
}

}  // namespace

Json translate_report(const Json& spec, const fs::path& base) {
  if (!spec.is_object() || !spec.contains("algebra") || !spec.contains("translation"))
    throw Error(ErrorCode::malformed, "translation spec needs 'algebra' and 'translation'");
  AlgebraPtr algebra = resolve_algebra(spec.at("algebra").get<std::string>(), base);
  const auto& A = *algebra;
  const auto& sig = A.signature();
  const std::string name = spec.at("translation").get<std::string>();
  const Json terms = spec.value("terms", Json::object());
  TermReader in(terms, sig);

  std::vector<std::pair<std::string, TermFn>> outputs;
  Json certs = Json::array();
  auto source = [&](const std::vector<Identity>& ids) { add_identities(certs, "source: ", A, ids); };
  auto target = [&](const std::vector<Identity>& ids) { add_identities(certs, "target: ", A, ids); };

  if (name == "tilde_from_pq") {
    auto p = in.fn("p", 3), q = in.fn("q", 3);
    auto [pt, qt] = tilde_from_pq(p, q);
    source(biternary_identities(p, q));
    target(tilde_pair_identities(pt, qt));
    outputs = {{"p~", pt}, {"q~", qt}};
  } else if (name == "u_from_tilde") {
    auto pt = in.fn("p~", 3), qt = in.fn("q~", 3);
    auto u = u_from_tilde(pt, qt);
    source(tilde_pair_identities(pt, qt));
    target(strong_quaternary_identities(u));
    outputs = {{"u~", u}};
  } else if (name == "pq_from_u") {
    auto u = in.fn("u", 4);
    auto [p, q] = pq_from_u(u);
    source(quaternary_identities(u));
    target(biternary_identities(p, q));
    outputs = {{"p", p}, {"q", q}};
  } else if (name == "loop_from_tilde") {
    auto pt = in.fn("p~", 3), qt = in.fn("q~", 3);
    const std::string e = spec.value("constant", std::string("zero"));
    auto [plus, minus] = loop_from_tilde(pt, qt, sig, e);
    source(tilde_pair_identities(pt, qt));
    target(right_loop_identities(plus, minus, Term::app(sig, e, {})));
    outputs = {{"plus", plus}, {"minus", minus}};
  } else if (name == "pq_from_loop") {
    auto plus = in.fn("plus", 2), minus = in.fn("minus", 2);
    auto [p, q] = pq_from_loop(plus, minus);
    source(right_loop_identities(plus, minus, zero_of(sig)));
    target(biternary_identities(p, q));
    outputs = {{"p", p}, {"q", q}};
  } else if (name == "loop_from_rho_sigma") {
    auto rho = in.fn("rho", 2), sigma = in.fn("sigma", 2);
    auto [plus, minus] = loop_from_rho_sigma(rho, sigma, sig);
    source(rho_sigma_identities(rho, sigma, zero_of(sig)));
    target(right_loop_identities(plus, minus, zero_of(sig)));
    outputs = {{"plus", plus}, {"minus", minus}};
  } else if (name == "protomodular_from_rho_sigma") {
    auto fam = in.family();
    const std::string e = spec.value("constant", std::string("zero"));
    auto out = protomodular_from_rho_sigma(fam, sig, e);
    source(family_protomodular_identities(fam));
    target(protomodular_identities(out.e, out.s, out.p, false));
    for (std::size_t i = 0; i < out.e.size(); ++i) outputs.emplace_back("e" + std::to_string(i + 1), TermFn(out.e[i], 0));
    for (std::size_t i = 0; i < out.s.size(); ++i) outputs.emplace_back("s" + std::to_string(i + 1), out.s[i]);
    outputs.emplace_back("p", out.p);
  } else if (name == "pq_from_rho_sigma") {
    auto fam = in.family();
    auto [p, q] = pq_from_rho_sigma(fam);
    auto ids = family_subtraction_identities(fam);
    for (auto& id : family_recovery_identities(fam)) ids.push_back(id);
    for (auto& id : family_inverse_identities(fam)) ids.push_back(id);
    source(ids);
    target(biternary_identities(p, q));
    outputs = {{"p", p}, {"q", q}};
  } else if (name == "gamma_tau_check") {
    auto fam = in.family();
    for (const auto& o : check_gamma_tau_identity_set(fam, A))
      add_certificate(certs, o.identity.to_string(), o.result.holds(), o.result.counterexample);
  } else if (name == "round_trip") {
    auto p = in.fn("p", 3), q = in.fn("q", 3);
    auto [pt, qt] = tilde_from_pq(p, q);
    auto u = u_from_tilde(pt, qt);
    auto [p2, q2] = pq_from_u(u);
    add_identities(certs, "biternary: ", A, biternary_identities(p, q));
    add_identities(certs, "tilde pair: ", A, tilde_pair_identities(pt, qt));
    add_identities(certs, "quaternary: ", A, quaternary_identities(u));
    add_identities(certs, "strong quaternary: ", A, strong_quaternary_identities(u));
    add_identities(certs, "biternary after round trip: ", A, biternary_identities(p2, q2));
    add_certificate(certs, "p' table = p table", term_table(p2, A) == term_table(p, A), std::nullopt);
    add_certificate(certs, "q' table = q table", term_table(q2, A) == term_table(q, A), std::nullopt);
    outputs = {{"p~", pt}, {"q~", qt}, {"u~", u}, {"p'", p2}, {"q'", q2}};
  } else {
    throw Error(ErrorCode::malformed, "unknown translation '" + name + "'");
  }

  Json report;
  report["algebra"] = A.name();
  report["translation"] = name;
  report["inputs"] = terms;
  Json out = term_entry(A, outputs);
  out["status"] = "derived";
  report["witnesses"] = Json::object();
  report["witnesses"][name] = std::move(out);
  report["certificates"] = std::move(certs);
  return report;
}

// ---------------------------------------------------------------------------
// verify-naturality

// Largest product of group members searched for a shared witness.
constexpr std::size_t kProductWitnessBound = 64;

Json naturality_report(const std::vector<AlgebraPtr>& corpus, const NaturalityOptions& options) {
  // group by signature, keeping corpus order
  std::vector<std::vector<AlgebraPtr>> groups;
  for (const auto& a : corpus) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.front()->signature() == a->signature(); });
    if (it == groups.end()) groups.push_back({a});
    else it->push_back(a);
  }

  Json report;
  report["algebra"] = "corpus";
  report["witnesses"] = Json::object();
  Json certs = Json::array();
  Json summary = Json::array();
  std::size_t total = 0, passed = 0;

  for (const auto& group : groups) {
    const auto& sig = group.front()->signature();
    Json g;
    g["signature"] = sig.to_string();
    if (!sig.pointed_constant()) {
      g["skipped"] = "no designated constant";
      summary.push_back(std::move(g));
      continue;
    }
    std::vector<AlgebraPtr> candidates;
    for (const auto& a : group)
      if (a->size() <= options.max_size) candidates.push_back(a);
    auto covered = [&](const RightLoopWitness& w) {
      std::size_t c = 0;
      for (const auto& a : candidates)
        c += all_hold(check_identities(*a, right_loop_identities(w.plus, w.minus, w.zero)));
      return c;
    };

    // Identities of the product hold in every factor, so a witness found
    // there is global. Otherwise take the member witness covering the most.
    std::optional<RightLoopWitness> witness;
    std::size_t product_size = 1;
    for (const auto& a : candidates) product_size = a->size() > 0 ? product_size * a->size() : 0;
    if (!candidates.empty() && product_size <= kProductWitnessBound) {
      AlgebraPtr prod = candidates.front();
      for (std::size_t i = 1; i < candidates.size(); ++i) prod = product(prod, candidates[i]).algebra;
      auto r = find_right_loop(prod, options.max_clone);
      if (r.witness) {
        witness = std::get<RightLoopWitness>(*r.witness);
        report["witnesses"][sig.to_string()] = witness_entry(*prod, r);
        g["witness_from"] = "product of " + std::to_string(candidates.size()) + " members";
      }
    }
    if (!witness) {
      std::size_t best = 0;
      for (const auto& a : candidates) {
        auto r = find_right_loop(a, options.max_clone);
        if (!r.witness) continue;
        const auto& w = std::get<RightLoopWitness>(*r.witness);
        if (std::size_t c = covered(w); c > best) {
          best = c;
          witness = w;
          report["witnesses"][sig.to_string()] = witness_entry(*a, r);
          g["witness_from"] = a->name();
        }
      }
    }
    if (!witness) {
      g["skipped"] = "no right-loop witness";
      summary.push_back(std::move(g));
      continue;
    }
    std::vector<AlgebraPtr> members;
    Json excluded = Json::array();
    for (const auto& a : candidates) {
      if (all_hold(check_identities(*a, right_loop_identities(witness->plus, witness->minus, witness->zero))))
        members.push_back(a);
      else
        excluded.push_back(a->name());
    }
    g["excluded"] = std::move(excluded);

    std::vector<SplitExtension> exts;
    for (const auto& a : members)
      for (const auto& b : members)
        for (auto& s : enumerate_split_epis(a, b, options.limit_homs)) exts.emplace_back(std::move(s));
    g["extensions"] = exts.size();

    ComponentBuilder build = [&](const SplitExtension& e) { return phi_pointed(e, witness->plus); };
    std::vector<SetMap> phis;
    for (const auto& e : exts) phis.push_back(build(e));

    std::size_t morphisms = 0, ok = 0;
    Json failures = Json::array();
    std::optional<std::tuple<std::size_t, std::size_t, SplExtMorphism>> mutation_site;
    for (std::size_t i = 0; i < exts.size(); ++i)
      for (std::size_t j = 0; j < exts.size(); ++j) {
        if (exts[i].a().signature() != exts[j].a().signature()) continue;
        for (const auto& mor : enumerate_splext_morphisms(exts[i], exts[j], options.limit_homs)) {
          ++morphisms;
          auto cert = check_naturality(exts[i], exts[j], mor, phis[i], phis[j]);
          if (cert.pass()) ++ok;
          else if (failures.size() < 20)
            failures.push_back({{"from", i}, {"to", j}, {"v", mor.v.map()}, {"w", mor.w.map()}});
          if (!mutation_site && exts[j].a().size() > 1) mutation_site.emplace(i, j, mor);
        }
      }
    g["morphisms"] = morphisms;
    g["passed"] = ok;
    g["failures"] = std::move(failures);
    total += morphisms;
    passed += ok;
    add_certificate(certs, sig.to_string() + ": naturality on all morphisms", ok == morphisms, std::nullopt);

    // a perturbed phi' must be caught
    if (mutation_site) {
      const auto& [i, j, mor] = *mutation_site;
      const std::size_t idx = exts[j].kb_index(mor.u(0), mor.w(0));
      const Elem bumped = static_cast<Elem>((phis[j](idx) + 1) % exts[j].a().size());
      auto cert = check_naturality(exts[i], exts[j], mor, phis[i], phis[j].with_entry(idx, bumped));
      const Check* nat = cert.find("phi'(u x w)=v phi");
      add_certificate(certs, sig.to_string() + ": mutated phi' rejected", nat && !nat->pass,
                      nat ? nat->counterexample : std::nullopt);
    }
    summary.push_back(std::move(g));
  }
  report["groups"] = std::move(summary);
  report["morphisms"] = total;
  report["passed"] = passed;
  report["certificates"] = std::move(certs);
  return report;
}

// ---------------------------------------------------------------------------
// text output

std::string to_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "algebra") {
      out << "algebra " << value.get<std::string>() << '\n';
    } else if (key == "witnesses") {
      for (const auto& [cls, w] : value.items()) {
        out << "witness " << cls << ' ' << w.value("status", std::string("?"));
        const auto& terms = w.at("terms");
        for (std::size_t i = 0; i < terms.size(); ++i) {
          out << ' ';
          if (w.contains("roles")) out << w.at("roles")[i].get<std::string>() << '=';
          out << terms[i].get<std::string>();
        }
        out << '\n';
      }
    } else if (key == "certificates") {
      for (const auto& c : value) {
        out << "certificate " << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
        if (!c.at("counterexample").is_null()) out << " at " << c.at("counterexample").dump();
        out << '\n';
      }
    } else {
      out << key << ' ' << value.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace ualg
