#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <unordered_set>

#include "ualg/error.hpp"

namespace ualg {

namespace {

bool is_variable_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'x') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw Error(ErrorCode::malformed, "empty symbol name");
    if (!seen.insert(s.name).second) throw Error(ErrorCode::duplicate_name, "symbol '" + s.name + "' declared twice");
    if (s.is_constant && s.arity != 0)
      throw Error(ErrorCode::malformed, "constant '" + s.name + "' must have arity 0");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::pointed_constant() const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].is_constant) return i;
  return std::nullopt;
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ", ";
    out += symbols_[i].name + "/" + std::to_string(symbols_[i].arity);
    if (symbols_[i].is_constant) out += " const";
  }
  return out;
}

Signature parse_signature(std::string_view text) {
  static const std::regex entry_re(R"(^([A-Za-z][A-Za-z0-9_]*)\s*/\s*(-?[0-9]+)\s*(const)?$)");
  std::vector<Symbol> symbols;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) {
      if (text.empty()) break;
      continue;
    }
    while (true) {
      auto comma = line.find(',');
      std::string entry(trim(line.substr(0, comma)));
      std::smatch m;
      if (!std::regex_match(entry, m, entry_re))
        throw Error(ErrorCode::malformed, "expected name/arity [const], got '" + entry + "'", line_no);
      std::string name = m[1];
      if (is_variable_name(name))
        throw Error(ErrorCode::malformed, "'" + name + "' is reserved for variables", line_no);
      long arity = std::stol(m[2]);
      if (arity < 0) throw Error(ErrorCode::negative_arity, "symbol '" + name + "' has negative arity", line_no);
      bool is_const = m[3].matched;
      if (is_const && arity != 0)
        throw Error(ErrorCode::malformed, "constant '" + name + "' must have arity 0", line_no);
      if (!seen.insert(name).second)
        throw Error(ErrorCode::duplicate_name, "symbol '" + name + "' declared twice", line_no);
      symbols.push_back({name, static_cast<std::size_t>(arity), is_const});
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (text.empty()) break;
  }
  return Signature(std::move(symbols));
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  bool is_var = false;
  std::size_t index = 0;  // variable index or symbol index
  std::string name;
  std::vector<Term> args;
  std::size_t var_bound = 0;
  std::size_t depth = 0;
  std::size_t node_count = 1;
};

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->index = index;
  n->var_bound = index + 1;
  return Term(std::move(n));
}

Term Term::app(const Signature& sig, std::string_view name, std::vector<Term> args) {
  auto idx = sig.find(name);
  if (!idx) throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + std::string(name) + "'");
  return app(sig, *idx, std::move(args));
}

Term Term::app(const Signature& sig, std::size_t symbol, std::vector<Term> args) {
  if (symbol >= sig.size()) throw Error(ErrorCode::unknown_symbol, "symbol index out of range");
  const Symbol& s = sig[symbol];
  if (args.size() != s.arity)
    throw Error(ErrorCode::arity_mismatch, "'" + s.name + "' expects " + std::to_string(s.arity) +
                                               " arguments, got " + std::to_string(args.size()));
  auto n = std::make_shared<Node>();
  n->index = symbol;
  n->name = s.name;
  n->depth = 1;
  for (const auto& a : args) {
    n->var_bound = std::max(n->var_bound, a.var_bound());
    n->depth = std::max(n->depth, a.depth() + 1);
    n->node_count += a.node_count();
  }
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::with_args(std::vector<Term> args) const {
  if (is_var() || args.size() != node_->args.size())
    throw Error(ErrorCode::arity_mismatch, "with_args on " + to_string());
  auto n = std::make_shared<Node>();
  n->index = node_->index;
  n->name = node_->name;
  n->depth = 1;
  for (const auto& a : args) {
    n->var_bound = std::max(n->var_bound, a.var_bound());
    n->depth = std::max(n->depth, a.depth() + 1);
    n->node_count += a.node_count();
  }
  n->args = std::move(args);
  return Term(std::move(n));
}

bool Term::is_var() const { return node_->is_var; }
std::size_t Term::var_index() const { return node_->index; }
std::size_t Term::symbol() const { return node_->index; }
const std::string& Term::name() const { return node_->name; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::var_bound() const { return node_->var_bound; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::node_count() const { return node_->node_count; }

bool Term::well_formed_over(const Signature& sig) const {
  if (is_var()) return true;
  if (symbol() >= sig.size()) return false;
  const Symbol& s = sig[symbol()];
  if (s.name != name() || s.arity != args().size()) return false;
  return std::all_of(args().begin(), args().end(), [&](const Term& a) { return a.well_formed_over(sig); });
}

namespace {

void print(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += 'x';
    out += std::to_string(t.var_index());
    return;
  }
  out += t.name();
  if (t.args().empty()) return;
  out += '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out += ',';
    first = false;
    print(a, out);
  }
  out += ')';
}

}  // namespace

std::string Term::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var_index() == b.var_index();
  if (a.symbol() != b.symbol() || a.name() != b.name()) return false;
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

TermFn::TermFn(Term body, std::size_t arity) : body_(std::move(body)), arity_(arity) {
  if (body_.var_bound() > arity_)
    throw Error(ErrorCode::arity_mismatch, "term " + body_.to_string() + " uses variables beyond declared arity " +
                                               std::to_string(arity_));
}

// ---------------------------------------------------------------------------
// Term parser

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(ErrorCode::unbound_token, "unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      std::string got = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
      throw Error(ErrorCode::unbound_token, std::string("expected '") + c + "', got '" + got + "'");
    }
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      std::string got = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
      throw Error(ErrorCode::unbound_token, "expected a variable or symbol, got '" + got + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term() {
    std::string id = identifier();
    if (is_variable_name(id)) {
      if (peek('(')) throw Error(ErrorCode::unbound_token, "variable '" + id + "' cannot be applied");
      return Term::var(std::stoul(id.substr(1)));
    }
    auto sym = sig_.find(id);
    if (!sym) throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + id + "'");
    std::vector<Term> args;
    if (peek('(')) {
      ++pos_;
      if (!peek(')')) {
        args.push_back(parse_term());
        while (peek(',')) {
          ++pos_;
          args.push_back(parse_term());
        }
      }
      expect(')');
    }
    return Term::app(sig_, *sym, std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

Term substitute_unchecked(const Term& t, std::span<const Term> args) {
  if (t.is_var()) return args[t.var_index()];
  if (t.var_bound() == 0) return t;
  std::vector<Term> new_args;
  new_args.reserve(t.args().size());
  for (const auto& a : t.args()) new_args.push_back(substitute_unchecked(a, args));
  return t.with_args(std::move(new_args));
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return TermParser(text, sig).parse(); }

Term substitute(const Term& t, std::span<const Term> args) {
  if (args.size() != t.var_bound())
    throw Error(ErrorCode::length_mismatch, "substitution of " + std::to_string(args.size()) + " terms into " +
                                                t.to_string() + " with " + std::to_string(t.var_bound()) +
                                                " variables");
  return substitute_unchecked(t, args);
}

Term substitute(const TermFn& f, std::span<const Term> args) {
  if (args.size() != f.arity())
    throw Error(ErrorCode::length_mismatch, "substitution of " + std::to_string(args.size()) +
                                                " terms into a term of arity " + std::to_string(f.arity()));
  return substitute_unchecked(f.body(), args);
}

// ---------------------------------------------------------------------------
// Identity

Identity::Identity(Term lhs, Term rhs, std::size_t var_count, std::string label)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), var_count_(var_count), label_(std::move(label)) {
  if (lhs_.var_bound() > var_count_ || rhs_.var_bound() > var_count_)
    throw Error(ErrorCode::arity_mismatch, "identity " + lhs_.to_string() + "=" + rhs_.to_string() +
                                               " uses variables beyond x" + std::to_string(var_count_));
}

std::string Identity::to_string() const {
  if (!label_.empty()) return label_;
  return lhs_.to_string() + "=" + rhs_.to_string();
}

}  // namespace ualg
