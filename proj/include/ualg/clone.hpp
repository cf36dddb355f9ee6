#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ualg/finite_algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

inline constexpr std::size_t kDefaultCloneCap = 200000;

/// A term operation of arity k: its table on the algebra and a term producing it.
struct CloneElement {
  std::size_t arity = 0;
  std::vector<Elem> table;
  Term witness;
};

/// partial: generation stopped early (a search found what it needed) and
/// more rounds remain.
enum class CloneStatus { complete, truncated, partial };

std::string_view to_string(CloneStatus status);

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& t) const noexcept;
};

/// The k-ary term operations of an algebra, deduplicated by table. Elements
/// are stored in discovery order: projections first, then breadth-first
/// rounds, so each witness is of minimal depth. Generation runs one round at
/// a time; elements are only ever appended, so a prefix of a partially
/// generated set is a prefix of the finished one.
class CloneSet {
 public:
  /// Empty set; call advance() until finished(). Throws
  /// ErrorCode::parameter_out_of_bounds if cap < k or cap == 0, and
  /// ErrorCode::out_of_range if size^k exceeds kMaxTableEntries.
  CloneSet(AlgebraPtr algebra, std::size_t arity, std::size_t cap);

  /// One breadth-first round (the first call inserts the projections).
  void advance();
  bool finished() const { return finished_; }

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t arity() const { return arity_; }
  std::size_t cap() const { return cap_; }
  CloneStatus status() const { return finished_ ? status_ : CloneStatus::partial; }
  bool complete() const { return status() == CloneStatus::complete; }

  std::size_t size() const { return elements_.size(); }
  const CloneElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<CloneElement>& elements() const { return elements_; }

  std::optional<std::size_t> find(const std::vector<Elem>& table) const;
  TermFn term(std::size_t i) const { return TermFn(elements_[i].witness, arity_); }

 private:
  bool insert(std::vector<Elem> table, Term witness);

  AlgebraPtr algebra_;
  std::size_t arity_;
  std::size_t cap_;
  std::size_t entries_;
  CloneStatus status_ = CloneStatus::complete;
  bool finished_ = false;
  bool seeded_ = false;
  bool first_round_ = true;
  std::size_t prev_start_ = 0;
  std::vector<CloneElement> elements_;
  std::unordered_map<std::vector<Elem>, std::size_t, TableHash> index_;
};

/// Closure of the k projections under pointwise application of every basic
/// operation. Each round applies the symbols in signature order to all
/// argument tuples (lexicographic in element index) that use at least one
/// element from the previous round. k = 0 yields the values of constant-only
/// terms. Stops with status truncated once `cap` elements exist and another
/// new table turns up.
CloneSet generate_clone(const AlgebraPtr& algebra, std::size_t k, std::size_t cap = kDefaultCloneCap);

/// Lazily generated clones of one algebra, shared between searches.
class CloneCache {
 public:
  explicit CloneCache(AlgebraPtr algebra, std::size_t cap = kDefaultCloneCap)
      : algebra_(std::move(algebra)), cap_(cap) {}

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t cap() const { return cap_; }
  /// The finished clone.
  const CloneSet& get(std::size_t k);
  /// The clone in whatever state earlier searches left it.
  CloneSet& lazy(std::size_t k);

 private:
  AlgebraPtr algebra_;
  std::size_t cap_;
  std::map<std::size_t, CloneSet> clones_;
};

// ---------------------------------------------------------------------------
// Witnesses

struct MaltsevWitness {
  TermFn p;
};
struct BiternaryWitness {
  TermFn p, q;
};
struct RightLoopWitness {
  TermFn plus, minus;
  Term zero;
};
struct UnitalWitness {
  TermFn plus;
  Term zero;
};
struct SubtractionWitness {
  TermFn s;
  Term zero;
};
struct RhoSigmaWitness {
  TermFn rho, sigma;
  Term zero;
};
struct ProtomodularWitness {
  std::vector<Term> e;  // ground terms
  std::vector<TermFn> s;
  TermFn p;
  bool bijective = false;
};

using Witness = std::variant<MaltsevWitness, BiternaryWitness, RightLoopWitness, UnitalWitness, SubtractionWitness,
                             ProtomodularWitness, RhoSigmaWitness>;

/// "maltsev", "biternary", "right_loop", "unital", "subtraction", "rho_sigma",
/// or "protomodular_<n>".
std::string witness_class(const Witness& w);

/// Role names paired with terms, e.g. {"plus", x0+x1}, {"zero", zero}.
std::vector<std::pair<std::string, TermFn>> witness_terms(const Witness& w);

/// The identity set the witness is certified against (for biternary this
/// includes the implied q(x,x,y)=y).
std::vector<Identity> defining_identities(const Witness& w);

enum class SearchStatus { found, absent, unknown };

std::string_view to_string(SearchStatus status);

/// State of a clone when a search returned; partial clones appear only in
/// found results.
struct CloneSummary {
  std::size_t arity;
  std::size_t size;
  CloneStatus status;
};

struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Witness> witness;
  std::vector<CloneSummary> clones;  // the clones the search consulted

  bool found() const { return status == SearchStatus::found; }
};

SearchResult find_maltsev(CloneCache& cache);
SearchResult find_biternary(CloneCache& cache);
SearchResult find_right_loop(CloneCache& cache);
SearchResult find_unital(CloneCache& cache);
SearchResult find_subtraction(CloneCache& cache);
SearchResult find_rho_sigma(CloneCache& cache);

/// Largest type accepted by find_protomodular.
inline constexpr std::size_t kMaxProtomodularType = 3;

/// Throws ErrorCode::parameter_out_of_bounds unless 1 <= n <= kMaxProtomodularType.
SearchResult find_protomodular(CloneCache& cache, std::size_t n, bool require_bijective);

// One-shot forms with a private cache.
SearchResult find_maltsev(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_biternary(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_right_loop(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_unital(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_subtraction(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_rho_sigma(const AlgebraPtr& a, std::size_t cap = kDefaultCloneCap);
SearchResult find_protomodular(const AlgebraPtr& a, std::size_t n, bool require_bijective,
                               std::size_t cap = kDefaultCloneCap);

}  // namespace ualg
