#include "ualg/eval.hpp"

#include "ualg/error.hpp"

namespace ualg {

// ---------------------------------------------------------------------------
// FiniteAlgebra

std::optional<std::size_t> checked_power(std::size_t size, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (size != 0 && result > kMaxTableEntries / size) return std::nullopt;
    result *= size;
  }
  if (result > kMaxTableEntries) return std::nullopt;
  return result;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size, Signature sig,
                             std::vector<std::vector<Elem>> tables)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
  if (tables_.size() != sig_.size())
    throw Error(ErrorCode::signature_mismatch, "algebra '" + name_ + "' has " + std::to_string(tables_.size()) +
                                                   " tables for " + std::to_string(sig_.size()) + " symbols");
  for (std::size_t s = 0; s < sig_.size(); ++s) {
    auto expected = checked_power(size_, sig_[s].arity);
    if (!expected) throw Error(ErrorCode::out_of_range, "table for '" + sig_[s].name + "' is too large");
    if (tables_[s].size() != *expected)
      throw Error(ErrorCode::wrong_table_length, "table for '" + sig_[s].name + "' has " +
                                                     std::to_string(tables_[s].size()) + " entries, expected " +
                                                     std::to_string(*expected));
    for (Elem v : tables_[s])
      if (v >= size_)
        throw Error(ErrorCode::out_of_range, "table for '" + sig_[s].name + "' contains " + std::to_string(v) +
                                                 " outside carrier of size " + std::to_string(size_));
  }
}

Elem FiniteAlgebra::apply(std::size_t symbol, std::span<const Elem> args) const {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * size_ + a;
  return tables_[symbol][idx];
}

std::optional<Elem> FiniteAlgebra::zero() const {
  auto c = sig_.pointed_constant();
  if (!c) return std::nullopt;
  return tables_[*c][0];
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------
// Evaluation

Elem eval_term(const Term& t, const FiniteAlgebra& algebra, std::span<const Elem> assignment) {
  if (t.is_var()) return assignment[t.var_index()];
  std::size_t idx = 0;
  for (const auto& a : t.args()) idx = idx * algebra.size() + eval_term(a, algebra, assignment);
  return algebra.table(t.symbol())[idx];
}

std::vector<Elem> decode_assignment(std::size_t index, std::size_t size, std::size_t arity) {
  std::vector<Elem> out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = static_cast<Elem>(index % size);
    index /= size;
  }
  return out;
}

namespace {

std::vector<Elem> table_of(const Term& t, const FiniteAlgebra& algebra, std::size_t arity, std::size_t entries) {
  const std::size_t n = algebra.size();
  std::vector<Elem> out(entries);
  if (t.is_var()) {
    // stride of coordinate i in row-major order
    std::size_t stride = 1;
    for (std::size_t i = t.var_index() + 1; i < arity; ++i) stride *= n;
    for (std::size_t idx = 0; idx < entries; ++idx) out[idx] = static_cast<Elem>((idx / stride) % n);
    return out;
  }
  auto table = algebra.table(t.symbol());
  if (t.args().empty()) {
    std::fill(out.begin(), out.end(), table[0]);
    return out;
  }
  std::vector<std::size_t> offsets(entries, 0);
  for (const auto& a : t.args()) {
    auto child = table_of(a, algebra, arity, entries);
    for (std::size_t idx = 0; idx < entries; ++idx) offsets[idx] = offsets[idx] * n + child[idx];
  }
  for (std::size_t idx = 0; idx < entries; ++idx) out[idx] = table[offsets[idx]];
  return out;
}

}  // namespace

std::vector<Elem> term_table(const TermFn& f, const FiniteAlgebra& algebra) {
  if (!f.body().well_formed_over(algebra.signature()))
    throw Error(ErrorCode::signature_mismatch,
                "term " + f.to_string() + " is not well formed over the signature of '" + algebra.name() + "'");
  auto entries = checked_power(algebra.size(), f.arity());
  if (!entries) throw Error(ErrorCode::out_of_range, "term table for arity " + std::to_string(f.arity()) + " too large");
  return table_of(f.body(), algebra, f.arity(), *entries);
}

IdentityCheck check_identity(const FiniteAlgebra& algebra, const Identity& id) {
  auto lhs = term_table(TermFn(id.lhs(), id.var_count()), algebra);
  auto rhs = term_table(TermFn(id.rhs(), id.var_count()), algebra);
  for (std::size_t idx = 0; idx < lhs.size(); ++idx)
    if (lhs[idx] != rhs[idx]) return {decode_assignment(idx, algebra.size(), id.var_count())};
  return {};
}

std::vector<IdentityOutcome> check_identities(const FiniteAlgebra& algebra, std::span<const Identity> ids) {
  std::vector<IdentityOutcome> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back({id, check_identity(algebra, id)});
  return out;
}

bool all_hold(std::span<const IdentityOutcome> outcomes) {
  for (const auto& o : outcomes)
    if (!o.result.holds()) return false;
  return true;
}

}  // namespace ualg
