#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/term.hpp"

namespace ualg {

/// Largest table (size^arity entries) an algebra or clone is allowed to hold.
inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

/// size^exponent, or nullopt if it exceeds kMaxTableEntries.
std::optional<std::size_t> checked_power(std::size_t size, std::size_t exponent);

/// Finite algebra on the carrier {0, ..., size-1} with one total table per
/// symbol. Tables are flat and row-major: the entry for (a1, ..., ak) sits at
/// index a1*size^(k-1) + ... + ak. The empty carrier is allowed (it arises
/// as an empty pullback in signatures without constants); file loaders and
/// builtins only produce positive sizes.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::size_t size, Signature sig, std::vector<std::vector<Elem>> tables);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  const Signature& signature() const { return sig_; }

  std::span<const Elem> table(std::size_t symbol) const { return tables_[symbol]; }
  const std::vector<std::vector<Elem>>& tables() const { return tables_; }

  Elem apply(std::size_t symbol, std::span<const Elem> args) const;

  /// Value of the designated constant of a pointed signature.
  std::optional<Elem> zero() const;

  FiniteAlgebra renamed(std::string name) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  std::size_t size_;
  Signature sig_;
  std::vector<std::vector<Elem>> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

inline AlgebraPtr share(FiniteAlgebra a) { return std::make_shared<const FiniteAlgebra>(std::move(a)); }

}  // namespace ualg
