#include "ualg/clone.hpp"

#include <deque>
#include <functional>

#include "ualg/error.hpp"
#include "ualg/identities.hpp"

namespace ualg {

std::string_view to_string(CloneStatus status) {
  switch (status) {
    case CloneStatus::complete: return "complete";
    case CloneStatus::truncated: return "truncated";
    case CloneStatus::partial: return "partial";
  }
  return "partial";
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::size_t TableHash::operator()(const std::vector<Elem>& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elem v : t) h = (h ^ v) * 1099511628211ull;
  return h;
}

CloneSet::CloneSet(AlgebraPtr algebra, std::size_t arity, std::size_t cap)
    : algebra_(std::move(algebra)), arity_(arity), cap_(cap) {
  if (cap < arity || cap == 0)
    throw Error(ErrorCode::parameter_out_of_bounds, "clone cap " + std::to_string(cap) + " below arity");
  const auto entries = checked_power(algebra_->size(), arity);
  if (!entries) throw Error(ErrorCode::out_of_range, "clone tables of arity " + std::to_string(arity) + " too large");
  entries_ = *entries;
}

std::optional<std::size_t> CloneSet::find(const std::vector<Elem>& table) const {
  auto it = index_.find(table);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// false only when the table is new and the cap is already reached
bool CloneSet::insert(std::vector<Elem> table, Term witness) {
  if (index_.contains(table)) return true;
  if (elements_.size() >= cap_) {
    status_ = CloneStatus::truncated;
    return false;
  }
  index_.emplace(table, elements_.size());
  elements_.push_back({arity_, std::move(table), std::move(witness)});
  return true;
}

void CloneSet::advance() {
  if (finished_) return;
  const auto& A = *algebra_;
  const std::size_t n = A.size();
  const std::size_t k = arity_;
  if (!seeded_) {
    seeded_ = true;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Elem> table(entries_);
      std::size_t stride = 1;
      for (std::size_t j = i + 1; j < k; ++j) stride *= n;
      for (std::size_t idx = 0; idx < entries_; ++idx) table[idx] = static_cast<Elem>((idx / stride) % n);
      if (!insert(std::move(table), x(i))) {
        finished_ = true;
        return;
      }
    }
    return;
  }

  const auto& sig = A.signature();
  const std::size_t cur_end = size();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const std::size_t a = sig[s].arity;
    const auto op = A.table(s);
    if (a == 0) {
      if (first_round_ && !insert(std::vector<Elem>(entries_, op[0]), Term::app(sig, s, {}))) {
        finished_ = true;
        return;
      }
      continue;
    }
    if (cur_end == 0) continue;
    std::vector<std::size_t> tuple(a, 0);
    while (true) {
      bool uses_new = false;
      for (auto t : tuple) uses_new = uses_new || t >= prev_start_;
      if (uses_new) {
        std::vector<Elem> table(entries_);
        if (a == 2) {
          // the hot case: binary symbols dominate clone generation
          const Elem* l = elements_[tuple[0]].table.data();
          const Elem* r = elements_[tuple[1]].table.data();
          for (std::size_t idx = 0; idx < entries_; ++idx) table[idx] = op[l[idx] * n + r[idx]];
        } else {
          for (std::size_t idx = 0; idx < entries_; ++idx) {
            std::size_t off = 0;
            for (auto t : tuple) off = off * n + elements_[t].table[idx];
            table[idx] = op[off];
          }
        }
        if (!index_.contains(table)) {
          std::vector<Term> args;
          for (auto t : tuple) args.push_back(elements_[t].witness);
          if (!insert(std::move(table), Term::app(sig, s, std::move(args)))) {
            finished_ = true;
            return;
          }
        }
      }
      // next tuple in lexicographic order
      std::size_t pos = a;
      while (pos > 0 && ++tuple[pos - 1] == cur_end) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }
  if (size() == cur_end) finished_ = true;
  prev_start_ = cur_end;
  first_round_ = false;
}

CloneSet generate_clone(const AlgebraPtr& algebra, std::size_t k, std::size_t cap) {
  CloneSet set(algebra, k, cap);
  while (!set.finished()) set.advance();
  return set;
}

CloneSet& CloneCache::lazy(std::size_t k) {
  auto it = clones_.find(k);
  if (it == clones_.end()) it = clones_.emplace(k, CloneSet(algebra_, k, cap_)).first;
  return it->second;
}

const CloneSet& CloneCache::get(std::size_t k) {
  CloneSet& c = lazy(k);
  while (!c.finished()) c.advance();
  return c;
}

// ---------------------------------------------------------------------------
// Witness descriptions

std::string witness_class(const Witness& w) {
  struct Visitor {
    std::string operator()(const MaltsevWitness&) const { return "maltsev"; }
    std::string operator()(const BiternaryWitness&) const { return "biternary"; }
    std::string operator()(const RightLoopWitness&) const { return "right_loop"; }
    std::string operator()(const UnitalWitness&) const { return "unital"; }
    std::string operator()(const SubtractionWitness&) const { return "subtraction"; }
    std::string operator()(const RhoSigmaWitness&) const { return "rho_sigma"; }
    std::string operator()(const ProtomodularWitness& p) const {
      return "protomodular_" + std::to_string(p.s.size());
    }
  };
  return std::visit(Visitor{}, w);
}

std::vector<std::pair<std::string, TermFn>> witness_terms(const Witness& w) {
  using Out = std::vector<std::pair<std::string, TermFn>>;
  struct Visitor {
    Out operator()(const MaltsevWitness& m) const { return {{"p", m.p}}; }
    Out operator()(const BiternaryWitness& b) const { return {{"p", b.p}, {"q", b.q}}; }
    Out operator()(const RightLoopWitness& r) const {
      return {{"plus", r.plus}, {"minus", r.minus}, {"zero", TermFn(r.zero, 0)}};
    }
    Out operator()(const UnitalWitness& u) const { return {{"plus", u.plus}, {"zero", TermFn(u.zero, 0)}}; }
    Out operator()(const SubtractionWitness& s) const { return {{"s", s.s}, {"zero", TermFn(s.zero, 0)}}; }
    Out operator()(const RhoSigmaWitness& r) const {
      return {{"rho", r.rho}, {"sigma", r.sigma}, {"zero", TermFn(r.zero, 0)}};
    }
    Out operator()(const ProtomodularWitness& p) const {
      Out out;
      for (std::size_t i = 0; i < p.e.size(); ++i) out.emplace_back("e" + std::to_string(i + 1), TermFn(p.e[i], 0));
      for (std::size_t i = 0; i < p.s.size(); ++i) out.emplace_back("s" + std::to_string(i + 1), p.s[i]);
      out.emplace_back("p", p.p);
      return out;
    }
  };
  return std::visit(Visitor{}, w);
}

std::vector<Identity> defining_identities(const Witness& w) {
  using Out = std::vector<Identity>;
  struct Visitor {
    Out operator()(const MaltsevWitness& m) const { return maltsev_identities(m.p); }
    Out operator()(const BiternaryWitness& b) const {
      auto out = biternary_identities(b.p, b.q);
      out.push_back(biternary_implied_identity(b.q));
      return out;
    }
    Out operator()(const RightLoopWitness& r) const { return right_loop_identities(r.plus, r.minus, r.zero); }
    Out operator()(const UnitalWitness& u) const { return unital_identities(u.plus, u.zero); }
    Out operator()(const SubtractionWitness& s) const { return subtraction_identities(s.s, s.zero); }
    Out operator()(const RhoSigmaWitness& r) const { return rho_sigma_identities(r.rho, r.sigma, r.zero); }
    Out operator()(const ProtomodularWitness& p) const {
      return protomodular_identities(p.e, p.s, p.p, p.bijective);
    }
  };
  return std::visit(Visitor{}, w);
}

// ---------------------------------------------------------------------------
// Searches

namespace {

class Search {
 public:
  explicit Search(CloneCache& cache) : cache_(cache), n_(cache.algebra()->size()) {}

  const CloneSet& clone(std::size_t k) {
    const CloneSet& c = cache_.get(k);
    consulted_.push_back(&c);
    return c;
  }

  CloneSet& lazy(std::size_t k) {
    CloneSet& c = cache_.lazy(k);
    consulted_.push_back(&c);
    return c;
  }

  std::size_t n() const { return n_; }

  SearchResult found(Witness w) {
    SearchResult r = summary();
    r.status = SearchStatus::found;
    r.witness = std::move(w);
    return r;
  }

  // every consulted clone is finished here
  SearchResult not_found() {
    SearchResult r = summary();
    bool truncated = false;
    for (auto* c : consulted_) truncated = truncated || !c->complete();
    r.status = truncated ? SearchStatus::unknown : SearchStatus::absent;
    return r;
  }

 private:
  SearchResult summary() const {
    SearchResult r;
    for (auto* c : consulted_) r.clones.push_back({c->arity(), c->size(), c->status()});
    return r;
  }

  CloneCache& cache_;
  std::size_t n_;
  std::vector<const CloneSet*> consulted_;
};

// First index satisfying pred, generating rounds only as needed.
template <class Pred>
std::optional<std::size_t> scan(CloneSet& c, Pred pred) {
  for (std::size_t i = 0;; ++i) {
    while (i >= c.size()) {
      if (c.finished()) return std::nullopt;
      c.advance();
    }
    if (pred(i)) return i;
  }
}

// First candidate i (in clone order) whose partner table, as computed by
// partner(i), is also in the clone. A candidate whose partner has not shown
// up yet blocks all later ones until the clone is finished.
template <class Partner>
std::optional<std::pair<std::size_t, std::size_t>> scan_pairs(CloneSet& c, Partner partner) {
  std::deque<std::pair<std::size_t, std::vector<Elem>>> pending;
  std::size_t i = 0;
  while (true) {
    for (; i < c.size(); ++i)
      if (auto t = partner(i)) pending.emplace_back(i, std::move(*t));
    while (!pending.empty()) {
      if (auto j = c.find(pending.front().second)) return std::pair{pending.front().first, *j};
      if (!c.finished()) break;
      pending.pop_front();
    }
    if (c.finished()) {
      if (i == c.size() && pending.empty()) return std::nullopt;
    } else {
      c.advance();
    }
  }
}

std::optional<Term> zero_term(const FiniteAlgebra& a) {
  auto c = a.signature().pointed_constant();
  if (!c) return std::nullopt;
  return Term::app(a.signature(), *c, {});
}

// For a binary table t with every right translation x -> t(x,y) bijective,
// the table of r with t(r(x,y),y) = x. Empty if some translation is not bijective.
std::vector<Elem> right_inverse(const std::vector<Elem>& t, std::size_t n) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> inv(n * n, unset);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      Elem v = t[x * n + y];
      if (inv[v * n + y] != unset) return {};
      inv[v * n + y] = static_cast<Elem>(x);
    }
  return inv;
}

}  // namespace

SearchResult find_maltsev(CloneCache& cache) {
  Search search(cache);
  auto& c3 = search.lazy(3);
  const std::size_t n = search.n();
  auto hit = scan(c3, [&](std::size_t i) {
    const auto& t = c3[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = t[(a * n + a) * n + b] == b && t[(a * n + b) * n + b] == a;
    return ok;
  });
  if (hit) return search.found(MaltsevWitness{c3.term(*hit)});
  return search.not_found();
}

SearchResult find_biternary(CloneCache& cache) {
  Search search(cache);
  auto& c3 = search.lazy(3);
  const std::size_t n = search.n();
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  // q is forced by p: p(q(x,y,z),z,y)=x makes w -> p(w,z,y) a bijection with q(-,y,z) its inverse
  auto hit = scan_pairs(c3, [&](std::size_t i) -> std::optional<std::vector<Elem>> {
    const auto& p = c3[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = p[at(a, a, b)] == b;
    if (!ok) return std::nullopt;
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> q(p.size(), unset);
    for (std::size_t z = 0; z < n && ok; ++z)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t w = 0; w < n && ok; ++w) {
          Elem v = p[at(w, z, y)];
          ok = q[at(v, y, z)] == unset;
          q[at(v, y, z)] = static_cast<Elem>(w);
        }
    if (!ok) return std::nullopt;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c) ok = q[at(p[at(a, b, c)], c, b)] == a;
    if (!ok) return std::nullopt;
    return q;
  });
  if (hit) return search.found(BiternaryWitness{c3.term(hit->first), c3.term(hit->second)});
  return search.not_found();
}

SearchResult find_right_loop(CloneCache& cache) {
  Search search(cache);
  auto zero = zero_term(*cache.algebra());
  if (!zero) return search.not_found();
  const Elem z0 = *cache.algebra()->zero();
  auto& c2 = search.lazy(2);
  const std::size_t n = search.n();
  auto hit = scan_pairs(c2, [&](std::size_t i) -> std::optional<std::vector<Elem>> {
    const auto& plus = c2[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = plus[a * n + z0] == a;
    if (!ok) return std::nullopt;
    auto minus = right_inverse(plus, n);
    if (minus.empty()) return std::nullopt;
    for (std::size_t a = 0; a < n && ok; ++a) ok = minus[a * n + a] == z0;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = minus[plus[a * n + b] * n + b] == a;
    if (!ok) return std::nullopt;
    return minus;
  });
  if (hit) return search.found(RightLoopWitness{c2.term(hit->first), c2.term(hit->second), *zero});
  return search.not_found();
}

SearchResult find_unital(CloneCache& cache) {
  Search search(cache);
  auto zero = zero_term(*cache.algebra());
  if (!zero) return search.not_found();
  const Elem z0 = *cache.algebra()->zero();
  auto& c2 = search.lazy(2);
  const std::size_t n = search.n();
  auto hit = scan(c2, [&](std::size_t i) {
    const auto& t = c2[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[a * n + z0] == a && t[z0 * n + a] == a;
    return ok;
  });
  if (hit) return search.found(UnitalWitness{c2.term(*hit), *zero});
  return search.not_found();
}

SearchResult find_subtraction(CloneCache& cache) {
  Search search(cache);
  auto zero = zero_term(*cache.algebra());
  if (!zero) return search.not_found();
  const Elem z0 = *cache.algebra()->zero();
  auto& c2 = search.lazy(2);
  const std::size_t n = search.n();
  auto hit = scan(c2, [&](std::size_t i) {
    const auto& t = c2[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t[a * n + a] == z0 && t[a * n + z0] == a;
    return ok;
  });
  if (hit) return search.found(SubtractionWitness{c2.term(*hit), *zero});
  return search.not_found();
}

SearchResult find_rho_sigma(CloneCache& cache) {
  Search search(cache);
  auto zero = zero_term(*cache.algebra());
  if (!zero) return search.not_found();
  const Elem z0 = *cache.algebra()->zero();
  auto& c2 = search.lazy(2);
  const std::size_t n = search.n();
  // sigma(rho(x,y),y)=x and rho(sigma(x,y),y)=x make sigma(-,y) the inverse of rho(-,y)
  auto hit = scan_pairs(c2, [&](std::size_t i) -> std::optional<std::vector<Elem>> {
    const auto& rho = c2[i].table;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = rho[z0 * n + a] == a && rho[a * n + z0] == a;
    if (!ok) return std::nullopt;
    auto sigma = right_inverse(rho, n);
    if (sigma.empty()) return std::nullopt;
    for (std::size_t a = 0; a < n && ok; ++a) ok = sigma[a * n + a] == z0 && sigma[a * n + z0] == a;
    if (!ok) return std::nullopt;
    return sigma;
  });
  if (hit) return search.found(RhoSigmaWitness{c2.term(hit->first), c2.term(hit->second), *zero});
  return search.not_found();
}

SearchResult find_protomodular(CloneCache& cache, std::size_t n_type, bool require_bijective) {
  if (n_type < 1 || n_type > kMaxProtomodularType)
    throw Error(ErrorCode::parameter_out_of_bounds,
                "protomodular type must be in 1.." + std::to_string(kMaxProtomodularType));
  Search search(cache);
  const std::size_t n = search.n();
  const auto& c0 = search.clone(0);
  if (c0.size() == 0) return search.not_found();
  const auto& c2 = search.clone(2);

  // binary candidates whose diagonal is a term constant
  std::vector<std::size_t> cand;
  std::vector<std::size_t> cand_const;
  for (std::size_t i = 0; i < c2.size(); ++i) {
    const auto& t = c2[i].table;
    if (n == 0) break;
    bool constant = true;
    for (std::size_t a = 1; a < n && constant; ++a) constant = t[a * n + a] == t[0];
    if (!constant) continue;
    if (auto e = c0.find({t[0]})) {
      cand.push_back(i);
      cand_const.push_back(*e);
    }
  }
  if (cand.empty()) return search.not_found();

  CloneSet* cp = nullptr;
  std::vector<std::size_t> choice(n_type, 0);
  constexpr Elem unset = ~Elem{0};
  while (true) {
    // required values of p at (s_1(x,z), ..., s_n(x,z), z); a clash means x -> s(x,z) is not injective
    const std::size_t points = *checked_power(n, n_type + 1);
    std::vector<Elem> need(points, unset);
    bool ok = true;
    for (std::size_t z = 0; z < n && ok; ++z)
      for (std::size_t a = 0; a < n && ok; ++a) {
        std::size_t idx = 0;
        for (auto c : choice) idx = idx * n + c2[cand[c]].table[a * n + z];
        idx = idx * n + z;
        ok = need[idx] == unset;
        need[idx] = static_cast<Elem>(a);
      }
    if (ok) {
      if (!cp) cp = &search.lazy(n_type + 1);
      auto hit = scan(*cp, [&](std::size_t j) {
        const auto& p = (*cp)[j].table;
        bool match = true;
        for (std::size_t idx = 0; idx < points && match; ++idx) match = need[idx] == unset || p[idx] == need[idx];
        if (match && require_bijective) {
          // s_i(p(x_1..x_n,y),y) = x_i at every point
          for (std::size_t idx = 0; idx < points && match; ++idx) {
            const std::size_t y = idx % n;
            std::size_t rest = idx / n;
            for (std::size_t i = n_type; i-- > 0 && match;) {
              match = c2[cand[choice[i]]].table[p[idx] * n + y] == rest % n;
              rest /= n;
            }
          }
        }
        return match;
      });
      if (hit) {
        ProtomodularWitness w{{}, {}, cp->term(*hit), require_bijective};
        for (auto c : choice) {
          w.e.push_back(c0[cand_const[c]].witness);
          w.s.push_back(c2.term(cand[c]));
        }
        return search.found(std::move(w));
      }
    }
    std::size_t pos = n_type;
    while (pos > 0 && ++choice[pos - 1] == cand.size()) choice[--pos] = 0;
    if (pos == 0) break;
  }
  return search.not_found();
}

SearchResult find_maltsev(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_maltsev(cache);
}
SearchResult find_biternary(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_biternary(cache);
}
SearchResult find_right_loop(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_right_loop(cache);
}
SearchResult find_unital(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_unital(cache);
}
SearchResult find_subtraction(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_subtraction(cache);
}
SearchResult find_rho_sigma(const AlgebraPtr& a, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_rho_sigma(cache);
}
SearchResult find_protomodular(const AlgebraPtr& a, std::size_t n, bool require_bijective, std::size_t cap) {
  CloneCache cache(a, cap);
  return find_protomodular(cache, n, require_bijective);
}

}  // namespace ualg
