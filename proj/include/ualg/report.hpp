#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ualg/clone.hpp"
#include "ualg/finite_algebra.hpp"

namespace ualg {

using Json = nlohmann::ordered_json;

// Report layout shared by every command:
//   {"algebra": name,
//    "witnesses": {class: {"status", "terms", "tables", ...}},
//    "certificates": [{"name", "pass", "counterexample"}],
//    ...command specific keys}

/// "builtin:<family>:<n>" or a path to an algebra file (relative paths are
/// taken relative to `base` when it is non-empty).
AlgebraPtr resolve_algebra(std::string_view source, const std::filesystem::path& base = {});

/// Every *.json algebra in `dir`, in file name order.
std::vector<AlgebraPtr> load_corpus(const std::filesystem::path& dir);

struct ClassifyOptions {
  std::size_t max_clone = kDefaultCloneCap;
  std::size_t proto_n = 1;
  bool require_bijective = false;
};

Json classify_report(const AlgebraPtr& algebra, const ClassifyOptions& options = {});

struct DecomposeOptions {
  std::size_t max_clone = kDefaultCloneCap;
  std::size_t limit_homs = 1000;
  // term strings over the signature; each pair is either both set or both empty
  std::optional<std::string> plus, minus, p, q;
};

Json decompose_report(const AlgebraPtr& a, const AlgebraPtr& b, const DecomposeOptions& options = {});

/// `spec` names an algebra, a translation and its input terms, e.g.
///   {"algebra": "builtin:cyclic:3", "translation": "tilde_from_pq",
///    "terms": {"p": "...", "q": "..."}}
/// Translations: tilde_from_pq, u_from_tilde, pq_from_u, loop_from_tilde,
/// pq_from_loop, loop_from_rho_sigma, protomodular_from_rho_sigma,
/// pq_from_rho_sigma, gamma_tau_check, round_trip. Family based ones read
/// "m", "n", "theta" (list), "rho" and "sigma" (list) from "terms".
Json translate_report(const Json& spec, const std::filesystem::path& base = {});

struct NaturalityOptions {
  std::size_t max_clone = kDefaultCloneCap;
  std::size_t limit_homs = 100000;
  std::size_t max_size = 8;  // larger algebras are skipped
};

/// check_naturality over every morphism between split extensions built from
/// corpus algebras of one pointed signature, with components from a single
/// right-loop witness per signature.
Json naturality_report(const std::vector<AlgebraPtr>& corpus, const NaturalityOptions& options = {});

/// One line per entry of a report.
std::string to_text(const Json& report);

}  // namespace ualg
