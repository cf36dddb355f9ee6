#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/finite_algebra.hpp"

namespace ualg {

/// Largest parameter accepted by the builtin families.
inline constexpr std::size_t kMaxBuiltinSize = 12;

// ---------------------------------------------------------------------------
// Algebra files
//
// {"name": string, "size": int,
//  "signature": [{"name": s, "arity": k, "const": bool}, ...],
//  "tables": {s: [flat row-major int array of length size^k], ...}}

FiniteAlgebra parse_algebra_json(std::string_view text);
FiniteAlgebra load_algebra(const std::filesystem::path& path);
std::string algebra_to_json(const FiniteAlgebra& algebra);

/// Builtin families (1 <= n <= kMaxBuiltinSize unless noted):
///   cyclic             Z_n with plus/2, minus/2 (binary subtraction), zero/0 const
///   cyclic_plus_only   Z_n with plus/2, zero/0 const
///   pointed_set        {0..n-1} with zero/0 const
///   chain_semilattice  {0..n-1} with meet/2 = min (no constant)
///   bool_subtraction   n = 2 only: {0,1} with sub(x,y) = x and not y, zero/0 const
FiniteAlgebra builtin(std::string_view family, std::size_t n);

/// Expansion of `algebra` by a new designated constant `name` with value `value`.
FiniteAlgebra with_constant(const FiniteAlgebra& algebra, const std::string& name, Elem value);

// ---------------------------------------------------------------------------
// Homomorphisms

/// Independent full-table check that `map` preserves every operation.
bool preserves_operations(const FiniteAlgebra& dom, const FiniteAlgebra& cod, std::span<const Elem> map);

class Homomorphism {
 public:
  /// Throws if the signatures differ or `map` does not preserve the operations.
  Homomorphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map);

  const AlgebraPtr& dom() const { return dom_; }
  const AlgebraPtr& cod() const { return cod_; }
  std::span<const Elem> map() const { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map_ == b.map_;
  }

 private:
  AlgebraPtr dom_;
  AlgebraPtr cod_;
  std::vector<Elem> map_;
};

Homomorphism identity_hom(const AlgebraPtr& a);

/// g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

/// All homomorphisms A -> B in lexicographic order of the map array, at most `limit`.
std::vector<Homomorphism> find_homomorphisms(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t limit);

// ---------------------------------------------------------------------------
// Products, subalgebras, pullbacks, kernels

struct Product {
  AlgebraPtr algebra;  // carrier index a*|B| + b
  Homomorphism pi1;
  Homomorphism pi2;
};

Product product(const AlgebraPtr& a, const AlgebraPtr& b);

/// A subset of `parent` closed under every operation, kept inside the parent
/// carrier. `compact()` is the same subalgebra re-indexed to 0..m-1 in
/// increasing element order, with `inclusion()` mapping it back.
class SubsetAlgebra {
 public:
  /// Throws ErrorCode::not_closed if `elements` is not closed under the operations.
  SubsetAlgebra(AlgebraPtr parent, std::vector<Elem> elements, std::string name = {});

  const AlgebraPtr& parent() const { return parent_; }
  std::span<const Elem> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem e) const { return position_[e] != kAbsent; }

  /// Index of `e` in elements(); precondition contains(e).
  Elem position(Elem e) const { return position_[e]; }

  const AlgebraPtr& compact() const { return compact_; }
  const Homomorphism& inclusion() const { return inclusion_; }

 private:
  static constexpr Elem kAbsent = ~Elem{0};

  AlgebraPtr parent_;
  std::vector<Elem> elements_;
  std::vector<Elem> position_;
  AlgebraPtr compact_;
  Homomorphism inclusion_;
};

/// Smallest subalgebra of `parent` containing `generators` (and every constant).
SubsetAlgebra generated_subalgebra(const AlgebraPtr& parent, std::span<const Elem> generators);

struct PullbackFiber {
  Product product;        // A x E
  SubsetAlgebra fiber;    // {(a, e) : alpha(a) = f(e)} inside product
  Homomorphism pi1;       // compact fiber -> A
  Homomorphism pi2;       // compact fiber -> E
};

PullbackFiber pullback_fiber(const Homomorphism& alpha, const Homomorphism& f);

/// alpha^{-1}(zero_b) as a subalgebra of alpha's domain.
SubsetAlgebra kernel(const Homomorphism& alpha, Elem zero_b);

}  // namespace ualg
