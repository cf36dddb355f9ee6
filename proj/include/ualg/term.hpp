#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ualg {

/// Carrier element of a finite algebra; carriers are always {0, ..., size-1}.
using Elem = std::uint32_t;

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  bool is_constant = false;  // designated constant, only allowed for arity 0

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Operation alphabet of a variety. Symbol order is declaration order and is
/// the index used by terms and algebra tables.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;

  /// The first designated constant: the "0" of a pointed signature.
  std::optional<std::size_t> pointed_constant() const;

  /// Renders in the same format parse_signature accepts.
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Grammar (entries separated by commas or newlines, `#` starts a comment):
///
///   signature := entry { ("," | newline) entry }
///   entry     := name "/" arity [ "const" ]
///   name      := letter { letter | digit | "_" }     (not of the form x<digits>)
///   arity     := digit { digit }
Signature parse_signature(std::string_view text);

/// Immutable term tree. Variables are indexed (printed x0, x1, ...);
/// applications carry the symbol index of the signature they were built over.
/// Subtrees are shared, so copies are cheap.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(const Signature& sig, std::string_view name, std::vector<Term> args);
  static Term app(const Signature& sig, std::size_t symbol, std::vector<Term> args);

  /// Same head symbol applied to new arguments (argument count must not change).
  Term with_args(std::vector<Term> args) const;

  bool is_var() const;
  std::size_t var_index() const;
  std::size_t symbol() const;
  const std::string& name() const;
  std::span<const Term> args() const;

  /// One more than the largest variable index occurring, 0 for ground terms.
  std::size_t var_bound() const;
  std::size_t depth() const;
  std::size_t node_count() const;

  /// Symbol indices, names and arities agree with `sig`.
  bool well_formed_over(const Signature& sig) const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Term with a declared arity. Variables beyond those used are allowed
/// (a projection-style term such as x0 may be declared ternary), but every
/// variable index must be below the arity.
class TermFn {
 public:
  TermFn(Term body, std::size_t arity);

  const Term& body() const { return body_; }
  std::size_t arity() const { return arity_; }
  std::string to_string() const { return body_.to_string(); }

 private:
  Term body_;
  std::size_t arity_;
};

/// Term syntax: prefix application `f(t1,...,tk)`, variables `x0`, `x1`, ...;
/// constants may be written `c` or `c()`. Whitespace is ignored.
Term parse_term(std::string_view text, const Signature& sig);

/// Simultaneous substitution of args[i] for x_i. `args.size()` must equal
/// `t.var_bound()`.
Term substitute(const Term& t, std::span<const Term> args);

/// Substitution into a term with declared arity; `args.size()` must equal the arity.
Term substitute(const TermFn& f, std::span<const Term> args);

inline Term substitute(const TermFn& f, std::initializer_list<Term> args) {
  return substitute(f, std::span<const Term>(args.begin(), args.size()));
}

inline Term x(std::size_t i) { return Term::var(i); }

class Identity {
 public:
  Identity(Term lhs, Term rhs, std::size_t var_count, std::string label = {});

  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  std::size_t var_count() const { return var_count_; }

  /// The label if one was given, otherwise "lhs=rhs".
  std::string to_string() const;

 private:
  Term lhs_;
  Term rhs_;
  std::size_t var_count_;
  std::string label_;
};

}  // namespace ualg
