#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ualg/finite_algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// Bottom-up table lookup. Precondition: `t` is well formed over the
/// algebra's signature and `assignment` covers every variable of `t`.
Elem eval_term(const Term& t, const FiniteAlgebra& algebra, std::span<const Elem> assignment);

/// Full operation table of `f` on `algebra`, row-major over size^arity
/// assignments (x0 is the most significant coordinate).
std::vector<Elem> term_table(const TermFn& f, const FiniteAlgebra& algebra);

/// Decodes a row-major index into an assignment of `arity` values.
std::vector<Elem> decode_assignment(std::size_t index, std::size_t size, std::size_t arity);

struct IdentityCheck {
  /// Lexicographically least failing assignment, absent when the identity holds.
  std::optional<std::vector<Elem>> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Exhaustive check over all size^var_count assignments.
IdentityCheck check_identity(const FiniteAlgebra& algebra, const Identity& id);

struct IdentityOutcome {
  Identity identity;
  IdentityCheck result;
};

std::vector<IdentityOutcome> check_identities(const FiniteAlgebra& algebra, std::span<const Identity> ids);

bool all_hold(std::span<const IdentityOutcome> outcomes);

}  // namespace ualg
