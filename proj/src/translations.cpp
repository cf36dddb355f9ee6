#include "ualg/translations.hpp"

#include "ualg/error.hpp"

namespace ualg {

namespace {

void require_arity(const TermFn& f, std::size_t arity, const char* role) {
  if (f.arity() != arity)
    throw Error(ErrorCode::arity_mismatch, std::string(role) + " must have arity " + std::to_string(arity) +
                                               ", got " + std::to_string(f.arity()));
}

Term nullary(const Signature& sig, std::string_view name) {
  auto idx = sig.find(name);
  if (!idx) throw Error(ErrorCode::unknown_symbol, "no symbol '" + std::string(name) + "' in signature");
  if (sig[*idx].arity != 0)
    throw Error(ErrorCode::not_constant, "'" + std::string(name) + "' has arity " + std::to_string(sig[*idx].arity));
  return Term::app(sig, *idx, {});
}

std::vector<Term> repeat(const Term& t, std::size_t count) { return std::vector<Term>(count, t); }

}  // namespace

TermPair tilde_from_pq(const TermFn& p, const TermFn& q) {
  require_arity(p, 3, "p");
  require_arity(q, 3, "q");
  Term pt = substitute(p, {substitute(q, {x(0), x(1), x(1)}), x(1), x(2)});
  Term qt = substitute(p, {substitute(q, {x(0), x(1), x(2)}), x(2), x(2)});
  return {TermFn(pt, 3), TermFn(qt, 3)};
}

TermFn u_from_tilde(const TermFn& pt, const TermFn& qt) {
  require_arity(pt, 3, "p~");
  require_arity(qt, 3, "q~");
  return TermFn(substitute(pt, {substitute(qt, {x(0), x(1), x(2)}), x(3), x(1)}), 4);
}

TermPair pq_from_u(const TermFn& u) {
  require_arity(u, 4, "u");
  return {TermFn(substitute(u, {x(0), x(2), x(2), x(1)}), 3), TermFn(substitute(u, {x(0), x(1), x(2), x(1)}), 3)};
}

TermPair loop_from_tilde(const TermFn& pt, const TermFn& qt, const Signature& sig, std::string_view e) {
  require_arity(pt, 3, "p~");
  require_arity(qt, 3, "q~");
  const Term c = nullary(sig, e);
  return {TermFn(substitute(pt, {x(0), c, x(1)}), 2), TermFn(substitute(qt, {x(0), x(1), c}), 2)};
}

TermPair pq_from_loop(const TermFn& plus, const TermFn& minus) {
  require_arity(plus, 2, "plus");
  require_arity(minus, 2, "minus");
  TermFn p(substitute(plus, {substitute(minus, {x(0), x(1)}), x(2)}), 3);
  return {p, p};
}

TermPair loop_from_rho_sigma(const TermFn& rho, const TermFn& sigma, const Signature& sig) {
  require_arity(rho, 2, "rho");
  require_arity(sigma, 2, "sigma");
  auto c = sig.pointed_constant();
  if (!c) throw Error(ErrorCode::not_constant, "signature has no designated constant");
  const Term zero = Term::app(sig, *c, {});
  return {TermFn(substitute(rho, {substitute(sigma, {x(0), zero}), x(1)}), 2),
          TermFn(substitute(rho, {substitute(sigma, {x(0), x(1)}), zero}), 2)};
}

ProtomodularTerms protomodular_from_rho_sigma(const RhoSigmaFamily& f, const Signature& sig, std::string_view e) {
  f.validate();
  const Term c = nullary(sig, e);
  const auto es = repeat(c, f.m);
  ProtomodularTerms out{{}, {}, TermFn(x(0), 1)};
  for (std::size_t i = 0; i < f.n; ++i) {
    out.e.push_back(substitute(f.theta[i], es));
    auto args = es;
    args.push_back(x(0));
    args.push_back(x(1));
    out.s.emplace_back(substitute(f.sigma[i], args), 2);
  }
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.n; ++i) args.push_back(x(i));
  args.insert(args.end(), es.begin(), es.end());
  args.push_back(x(f.n));
  out.p = TermFn(substitute(f.rho, args), f.n + 1);
  return out;
}

TermPair pq_from_rho_sigma(const RhoSigmaFamily& f) {
  f.validate();
  // sigma_i(w..w, x, v) for all i, then rho(..., w..w, last)
  auto build = [&f](const Term& w, const Term& v, const Term& last) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < f.n; ++i) {
      auto sargs = repeat(w, f.m);
      sargs.push_back(x(0));
      sargs.push_back(v);
      args.push_back(substitute(f.sigma[i], sargs));
    }
    for (std::size_t j = 0; j < f.m; ++j) args.push_back(w);
    args.push_back(last);
    return TermFn(substitute(f.rho, args), 3);
  };
  return {build(x(1), x(1), x(2)), build(x(2), x(1), x(2))};
}

RhoSigmaFamily family_from_pq(const TermFn& p, const TermFn& q) {
  require_arity(p, 3, "p");
  require_arity(q, 3, "q");
  RhoSigmaFamily f{1, 1, {TermFn(x(0), 1)}, p, {TermFn(substitute(q, {x(1), x(2), x(0)}), 3)}};
  f.validate();
  return f;
}

RhoSigmaFamily family_from_rho_sigma(const TermFn& rho, const TermFn& sigma, const Term& zero) {
  if (zero.var_bound() != 0) throw Error(ErrorCode::arity_mismatch, "zero must be a ground term");
  RhoSigmaFamily f{0, 1, {TermFn(zero, 0)}, rho, {sigma}};
  f.validate();
  return f;
}

std::vector<IdentityOutcome> check_gamma_tau_identity_set(const RhoSigmaFamily& f, const FiniteAlgebra& algebra) {
  auto ids = family_gamma_tau_identities(f);
  return check_identities(algebra, ids);
}

}  // namespace ualg
