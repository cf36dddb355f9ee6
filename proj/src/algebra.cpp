#include "ualg/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "ualg/error.hpp"

namespace ualg {

// ---------------------------------------------------------------------------
// Files

FiniteAlgebra parse_algebra_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::malformed, std::string("invalid JSON: ") + e.what());
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::malformed, std::string("missing field '") + key + "'");
    return doc.at(key);
  };
  try {
    std::string name = require("name").get<std::string>();
    long size = require("size").get<long>();
    if (size <= 0) throw Error(ErrorCode::out_of_range, "size must be positive");

    std::vector<Symbol> symbols;
    for (const auto& entry : require("signature")) {
      long arity = entry.at("arity").get<long>();
      if (arity < 0)
        throw Error(ErrorCode::negative_arity, "symbol '" + entry.at("name").get<std::string>() + "' has negative arity");
      symbols.push_back({entry.at("name").get<std::string>(), static_cast<std::size_t>(arity),
                         entry.value("const", false)});
    }
    Signature sig(std::move(symbols));

    const auto& tables_json = require("tables");
    if (!tables_json.is_object()) throw Error(ErrorCode::malformed, "'tables' must be an object");
    for (const auto& [key, _] : tables_json.items())
      if (!sig.find(key)) throw Error(ErrorCode::signature_mismatch, "table for undeclared symbol '" + key + "'");

    std::vector<std::vector<Elem>> tables;
    for (const auto& s : sig.symbols()) {
      if (!tables_json.contains(s.name)) throw Error(ErrorCode::signature_mismatch, "no table for symbol '" + s.name + "'");
      std::vector<Elem> table;
      for (const auto& v : tables_json.at(s.name)) {
        long value = v.get<long>();
        if (value < 0 || value >= size)
          throw Error(ErrorCode::out_of_range, "table for '" + s.name + "' contains " + std::to_string(value) +
                                                   " outside carrier of size " + std::to_string(size));
        table.push_back(static_cast<Elem>(value));
      }
      tables.push_back(std::move(table));
    }
    return FiniteAlgebra(std::move(name), static_cast<std::size_t>(size), std::move(sig), std::move(tables));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed, std::string("bad algebra document: ") + e.what());
  }
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::malformed, "cannot open algebra file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_json(buffer.str());
}

std::string algebra_to_json(const FiniteAlgebra& algebra) {
  nlohmann::ordered_json doc;
  doc["name"] = algebra.name();
  doc["size"] = algebra.size();
  doc["signature"] = nlohmann::ordered_json::array();
  for (const auto& s : algebra.signature().symbols())
    doc["signature"].push_back({{"name", s.name}, {"arity", s.arity}, {"const", s.is_constant}});
  doc["tables"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < algebra.signature().size(); ++i)
    doc["tables"][algebra.signature()[i].name] = algebra.tables()[i];
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

std::vector<Elem> binary_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(op(a, b));
  return t;
}

}  // namespace

FiniteAlgebra builtin(std::string_view family, std::size_t n) {
  const std::string name = std::string(family) + "(" + std::to_string(n) + ")";
  auto check_bounds = [&] {
    if (n < 1 || n > kMaxBuiltinSize)
      throw Error(ErrorCode::parameter_out_of_bounds,
                  std::string(family) + " requires 1 <= n <= " + std::to_string(kMaxBuiltinSize));
  };
  if (family == "cyclic") {
    check_bounds();
    return FiniteAlgebra(name, n, parse_signature("plus/2, minus/2, zero/0 const"),
                         {binary_table(n, [n](auto a, auto b) { return (a + b) % n; }),
                          binary_table(n, [n](auto a, auto b) { return (a + n - b) % n; }), {0}});
  }
  if (family == "cyclic_plus_only") {
    check_bounds();
    return FiniteAlgebra(name, n, parse_signature("plus/2, zero/0 const"),
                         {binary_table(n, [n](auto a, auto b) { return (a + b) % n; }), {0}});
  }
  if (family == "pointed_set") {
    check_bounds();
    return FiniteAlgebra(name, n, parse_signature("zero/0 const"), {{0}});
  }
  if (family == "chain_semilattice") {
    check_bounds();
    return FiniteAlgebra(name, n, parse_signature("meet/2"),
                         {binary_table(n, [](auto a, auto b) { return std::min(a, b); })});
  }
  if (family == "bool_subtraction") {
    if (n != 2) throw Error(ErrorCode::parameter_out_of_bounds, "bool_subtraction requires n = 2");
    return FiniteAlgebra(name, 2, parse_signature("sub/2, zero/0 const"),
                         {binary_table(2, [](auto a, auto b) { return a & (1 - b); }), {0}});
  }
  throw Error(ErrorCode::unknown_family, "unknown builtin family '" + std::string(family) + "'");
}

FiniteAlgebra with_constant(const FiniteAlgebra& algebra, const std::string& name, Elem value) {
  if (algebra.signature().pointed_constant())
    throw Error(ErrorCode::precondition, "algebra '" + algebra.name() + "' already has a designated constant");
  if (value >= algebra.size()) throw Error(ErrorCode::out_of_range, "constant value outside carrier");
  std::vector<Symbol> symbols(algebra.signature().symbols().begin(), algebra.signature().symbols().end());
  symbols.push_back({name, 0, true});
  auto tables = algebra.tables();
  tables.push_back({value});
  return FiniteAlgebra(algebra.name() + "[" + name + "=" + std::to_string(value) + "]", algebra.size(),
                       Signature(std::move(symbols)), std::move(tables));
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool preserves_operations(const FiniteAlgebra& dom, const FiniteAlgebra& cod, std::span<const Elem> map) {
  if (dom.signature() != cod.signature() || map.size() != dom.size()) return false;
  for (Elem v : map)
    if (v >= cod.size()) return false;
  const std::size_t n = dom.size();
  for (std::size_t s = 0; s < dom.signature().size(); ++s) {
    const std::size_t arity = dom.signature()[s].arity;
    auto table = dom.table(s);
    std::vector<Elem> args(arity), images(arity);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = arity; i-- > 0;) {
        args[i] = static_cast<Elem>(rest % n);
        rest /= n;
        images[i] = map[args[i]];
      }
      if (map[table[idx]] != cod.apply(s, images)) return false;
    }
  }
  return true;
}

Homomorphism::Homomorphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (dom_->signature() != cod_->signature())
    throw Error(ErrorCode::signature_mismatch, "'" + dom_->name() + "' and '" + cod_->name() + "' have different signatures");
  if (map_.size() != dom_->size()) throw Error(ErrorCode::length_mismatch, "map length differs from domain size");
  if (!preserves_operations(*dom_, *cod_, map_))
    throw Error(ErrorCode::precondition, "map " + dom_->name() + " -> " + cod_->name() + " is not a homomorphism");
}

bool Homomorphism::injective() const {
  std::vector<bool> seen(cod_->size(), false);
  for (Elem v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Homomorphism::surjective() const {
  std::vector<bool> seen(cod_->size(), false);
  for (Elem v : map_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Homomorphism identity_hom(const AlgebraPtr& a) {
  std::vector<Elem> map(a->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
  return Homomorphism(a, a, std::move(map));
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.cod() != g.dom() && *f.cod() != *g.dom())
    throw Error(ErrorCode::precondition, "cannot compose: codomain and domain differ");
  std::vector<Elem> map(f.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(static_cast<Elem>(i)));
  return Homomorphism(f.dom(), g.cod(), std::move(map));
}

namespace {

class HomSearch {
 public:
  HomSearch(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t limit) : a_(a), b_(b), limit_(limit) {
    const auto& sig = a_->signature();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t arity = sig[s].arity;
      const std::size_t rows = a_->table(s).size();
      std::vector<Elem> args(rows * arity);
      for (std::size_t idx = 0; idx < rows; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = arity; i-- > 0;) {
          args[idx * arity + i] = static_cast<Elem>(rest % a_->size());
          rest /= a_->size();
        }
      }
      tuple_args_.push_back(std::move(args));
    }
  }

  std::vector<Homomorphism> run() {
    std::vector<long> map(a_->size(), -1);
    search(std::move(map));
    return std::move(out_);
  }

 private:
  // Fills in every image forced by already-assigned arguments; false on conflict.
  bool propagate(std::vector<long>& map) const {
    const auto& sig = a_->signature();
    bool changed = true;
    std::vector<Elem> images;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < sig.size(); ++s) {
        const std::size_t arity = sig[s].arity;
        auto table = a_->table(s);
        images.resize(arity);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
          bool ready = true;
          for (std::size_t i = 0; i < arity && ready; ++i) {
            long m = map[tuple_args_[s][idx * arity + i]];
            if (m < 0) ready = false;
            else images[i] = static_cast<Elem>(m);
          }
          if (!ready) continue;
          long image = b_->apply(s, images);
          long& slot = map[table[idx]];
          if (slot < 0) {
            slot = image;
            changed = true;
          } else if (slot != image) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(std::vector<long> map) {
    if (out_.size() >= limit_) return;
    if (!propagate(map)) return;
    auto next = std::find(map.begin(), map.end(), -1);
    if (next == map.end()) {
      std::vector<Elem> result(map.begin(), map.end());
      out_.emplace_back(a_, b_, std::move(result));
      return;
    }
    const auto pos = static_cast<std::size_t>(next - map.begin());
    for (std::size_t v = 0; v < b_->size() && out_.size() < limit_; ++v) {
      auto child = map;
      child[pos] = static_cast<long>(v);
      search(std::move(child));
    }
  }

  AlgebraPtr a_;
  AlgebraPtr b_;
  std::size_t limit_;
  std::vector<std::vector<Elem>> tuple_args_;
  std::vector<Homomorphism> out_;
};

}  // namespace

std::vector<Homomorphism> find_homomorphisms(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t limit) {
  if (a->signature() != b->signature())
    throw Error(ErrorCode::signature_mismatch, "'" + a->name() + "' and '" + b->name() + "' have different signatures");
  if (limit == 0) return {};
  if (b->size() == 0 && a->size() > 0) return {};
  return HomSearch(a, b, limit).run();
}

// ---------------------------------------------------------------------------
// Products and subalgebras

Product product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->signature() != b->signature())
    throw Error(ErrorCode::signature_mismatch, "'" + a->name() + "' and '" + b->name() + "' have different signatures");
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  const auto& sig = a->signature();
  std::vector<std::vector<Elem>> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const std::size_t arity = sig[s].arity;
    auto rows = checked_power(n, arity);
    if (!rows) throw Error(ErrorCode::out_of_range, "product table too large");
    std::vector<Elem> table(*rows), left(arity), right(arity);
    for (std::size_t idx = 0; idx < *rows; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = arity; i-- > 0;) {
        const std::size_t p = rest % n;
        rest /= n;
        left[i] = static_cast<Elem>(p / nb);
        right[i] = static_cast<Elem>(p % nb);
      }
      table[idx] = static_cast<Elem>(a->apply(s, left) * nb + b->apply(s, right));
    }
    tables.push_back(std::move(table));
  }
  auto prod = share(FiniteAlgebra("(" + a->name() + " x " + b->name() + ")", n, sig, std::move(tables)));
  std::vector<Elem> p1(n), p2(n);
  for (std::size_t p = 0; p < n; ++p) {
    p1[p] = static_cast<Elem>(p / nb);
    p2[p] = static_cast<Elem>(p % nb);
  }
  return {prod, Homomorphism(prod, a, std::move(p1)), Homomorphism(prod, b, std::move(p2))};
}

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Every operation applied to tuples drawn from `elements` lands back in `member`.
bool closed_under_operations(const FiniteAlgebra& parent, std::span<const Elem> elements,
                             const std::vector<bool>& member) {
  const auto& sig = parent.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const std::size_t arity = sig[s].arity;
    std::vector<std::size_t> pick(arity, 0);
    std::vector<Elem> args(arity);
    if (arity > 0 && elements.empty()) continue;
    while (true) {
      for (std::size_t i = 0; i < arity; ++i) args[i] = elements[pick[i]];
      if (!member[parent.apply(s, args)]) return false;
      std::size_t i = arity;
      while (i > 0 && ++pick[i - 1] == elements.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return true;
}

}  // namespace

SubsetAlgebra::SubsetAlgebra(AlgebraPtr parent, std::vector<Elem> elements, std::string name)
    : parent_(std::move(parent)),
      elements_(sorted_unique(std::move(elements))),
      position_(parent_->size(), kAbsent),
      compact_(nullptr),
      inclusion_(identity_hom(parent_)) {
  std::vector<bool> member(parent_->size(), false);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= parent_->size()) throw Error(ErrorCode::out_of_range, "subset element outside carrier");
    member[elements_[i]] = true;
    position_[elements_[i]] = static_cast<Elem>(i);
  }
  if (!closed_under_operations(*parent_, elements_, member))
    throw Error(ErrorCode::not_closed, "subset of '" + parent_->name() + "' is not closed under the operations");

  const auto& sig = parent_->signature();
  const std::size_t m = elements_.size();
  std::vector<std::vector<Elem>> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const std::size_t arity = sig[s].arity;
    auto rows = checked_power(m, arity);
    if (!rows) throw Error(ErrorCode::out_of_range, "subalgebra table too large");
    std::vector<Elem> table(*rows), args(arity);
    for (std::size_t idx = 0; idx < *rows; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = arity; i-- > 0;) {
        args[i] = elements_[rest % m];
        rest /= m;
      }
      table[idx] = position_[parent_->apply(s, args)];
    }
    tables.push_back(std::move(table));
  }
  if (name.empty()) name = "sub(" + parent_->name() + ")";
  compact_ = share(FiniteAlgebra(std::move(name), m, sig, std::move(tables)));
  inclusion_ = Homomorphism(compact_, parent_, elements_);
}

SubsetAlgebra generated_subalgebra(const AlgebraPtr& parent, std::span<const Elem> generators) {
  std::vector<bool> member(parent->size(), false);
  std::vector<Elem> elements;
  auto add = [&](Elem e) {
    if (!member[e]) {
      member[e] = true;
      elements.push_back(e);
    }
  };
  for (Elem g : generators) add(g);
  const auto& sig = parent->signature();
  for (std::size_t s = 0; s < sig.size(); ++s)
    if (sig[s].arity == 0) add(parent->table(s)[0]);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = elements;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t arity = sig[s].arity;
      if (arity == 0 || snapshot.empty()) continue;
      std::vector<std::size_t> pick(arity, 0);
      std::vector<Elem> args(arity);
      while (true) {
        for (std::size_t i = 0; i < arity; ++i) args[i] = snapshot[pick[i]];
        Elem r = parent->apply(s, args);
        if (!member[r]) {
          add(r);
          changed = true;
        }
        std::size_t i = arity;
        while (i > 0 && ++pick[i - 1] == snapshot.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return SubsetAlgebra(parent, std::move(elements));
}

PullbackFiber pullback_fiber(const Homomorphism& alpha, const Homomorphism& f) {
  if (alpha.cod() != f.cod() && *alpha.cod() != *f.cod())
    throw Error(ErrorCode::precondition, "pullback requires a common codomain");
  Product prod = product(alpha.dom(), f.dom());
  const std::size_t ne = f.dom()->size();
  std::vector<Elem> elements;
  for (std::size_t a = 0; a < alpha.dom()->size(); ++a)
    for (std::size_t e = 0; e < ne; ++e)
      if (alpha(static_cast<Elem>(a)) == f(static_cast<Elem>(e))) elements.push_back(static_cast<Elem>(a * ne + e));
  SubsetAlgebra fiber(prod.algebra, std::move(elements),
                      "(" + alpha.dom()->name() + " x_B " + f.dom()->name() + ")");
  Homomorphism pi1 = compose(prod.pi1, fiber.inclusion());
  Homomorphism pi2 = compose(prod.pi2, fiber.inclusion());
  return {std::move(prod), std::move(fiber), std::move(pi1), std::move(pi2)};
}

SubsetAlgebra kernel(const Homomorphism& alpha, Elem zero_b) {
  const auto& sig = alpha.dom()->signature();
  auto c = sig.pointed_constant();
  if (!c) throw Error(ErrorCode::precondition, "kernel requires a pointed signature");
  if (alpha.cod()->table(*c)[0] != zero_b)
    throw Error(ErrorCode::precondition, "zero_b is not the value of the constant in the codomain");
  std::vector<Elem> elements;
  for (std::size_t a = 0; a < alpha.dom()->size(); ++a)
    if (alpha(static_cast<Elem>(a)) == zero_b) elements.push_back(static_cast<Elem>(a));
  return SubsetAlgebra(alpha.dom(), std::move(elements), "ker(" + alpha.dom()->name() + ")");
}

}  // namespace ualg
