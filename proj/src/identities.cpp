#include "ualg/identities.hpp"

#include "ualg/error.hpp"

namespace ualg {

namespace {

void require_arity(const TermFn& f, std::size_t arity, const char* role) {
  if (f.arity() != arity)
    throw Error(ErrorCode::arity_mismatch, std::string(role) + " must have arity " + std::to_string(arity) +
                                               ", got " + std::to_string(f.arity()));
}

void require_ground(const Term& t, const char* role) {
  if (t.var_bound() != 0) throw Error(ErrorCode::arity_mismatch, std::string(role) + " must be a ground term");
}

// x0..x(count-1) starting at `first`
std::vector<Term> vars(std::size_t first, std::size_t count) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(x(first + i));
  return out;
}

std::vector<Term> concat(std::vector<Term> a, const std::vector<Term>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string index_list(const char* name, std::size_t count) {
  std::string out;
  for (std::size_t i = 1; i <= count; ++i) out += std::string(i > 1 ? "," : "") + name + std::to_string(i);
  return out;
}

}  // namespace

std::vector<Identity> maltsev_identities(const TermFn& p) {
  require_arity(p, 3, "p");
  return {
      Identity(substitute(p, {x(0), x(0), x(1)}), x(1), 2, "p(x,x,y)=y"),
      Identity(substitute(p, {x(0), x(1), x(1)}), x(0), 2, "p(x,y,y)=x"),
  };
}

std::vector<Identity> biternary_identities(const TermFn& p, const TermFn& q) {
  require_arity(p, 3, "p");
  require_arity(q, 3, "q");
  const Term qxyz = substitute(q, {x(0), x(1), x(2)});
  const Term pxyz = substitute(p, {x(0), x(1), x(2)});
  return {
      Identity(substitute(p, {x(0), x(0), x(1)}), x(1), 2, "p(x,x,y)=y"),
      Identity(substitute(p, {qxyz, x(2), x(1)}), x(0), 3, "p(q(x,y,z),z,y)=x"),
      Identity(substitute(q, {pxyz, x(2), x(1)}), x(0), 3, "q(p(x,y,z),z,y)=x"),
  };
}

Identity biternary_implied_identity(const TermFn& q) {
  require_arity(q, 3, "q");
  return Identity(substitute(q, {x(0), x(0), x(1)}), x(1), 2, "q(x,x,y)=y");
}

std::vector<Identity> tilde_pair_identities(const TermFn& pt, const TermFn& qt) {
  require_arity(pt, 3, "p~");
  require_arity(qt, 3, "q~");
  const Term qxyz = substitute(qt, {x(0), x(1), x(2)});
  const Term pxyz = substitute(pt, {x(0), x(1), x(2)});
  return {
      Identity(substitute(pt, {x(0), x(0), x(1)}), x(1), 2, "p~(x,x,y)=y"),
      Identity(substitute(qt, {x(0), x(0), x(1)}), x(1), 2, "q~(x,x,y)=y"),
      Identity(substitute(pt, {x(0), x(1), x(1)}), x(0), 2, "p~(x,y,y)=x"),
      Identity(substitute(qt, {x(0), x(1), x(1)}), x(0), 2, "q~(x,y,y)=x"),
      Identity(substitute(pt, {qxyz, x(2), x(1)}), x(0), 3, "p~(q~(x,y,z),z,y)=x"),
      Identity(substitute(qt, {pxyz, x(2), x(1)}), x(0), 3, "q~(p~(x,y,z),z,y)=x"),
  };
}

std::vector<Identity> quaternary_identities(const TermFn& u) {
  require_arity(u, 4, "u");
  const Term uabcd = substitute(u, {x(0), x(1), x(2), x(3)});
  return {
      Identity(substitute(u, {x(0), x(1), x(1), x(0)}), x(1), 2, "u(a,b,b,a)=b"),
      Identity(substitute(u, {uabcd, x(1), x(3), x(2)}), x(0), 4, "u(u(a,b,c,d),b,d,c)=a"),
  };
}

std::vector<Identity> strong_quaternary_identities(const TermFn& u) {
  require_arity(u, 4, "u~");
  const Term uabcd = substitute(u, {x(0), x(1), x(2), x(3)});
  return {
      Identity(substitute(u, {x(0), x(1), x(1), x(0)}), x(1), 2, "u~(a,b,b,a)=b"),
      Identity(substitute(u, {x(0), x(0), x(1), x(0)}), x(1), 2, "u~(a,a,b,a)=b"),
      Identity(substitute(u, {x(0), x(1), x(2), x(2)}), x(0), 3, "u~(a,b,c,c)=a"),
      Identity(substitute(u, {uabcd, x(1), x(3), x(2)}), x(0), 4, "u~(u~(a,b,c,d),b,d,c)=a"),
  };
}

std::vector<Identity> right_loop_identities(const TermFn& plus, const TermFn& minus, const Term& zero) {
  require_arity(plus, 2, "plus");
  require_arity(minus, 2, "minus");
  require_ground(zero, "zero");
  return {
      Identity(substitute(plus, {x(0), zero}), x(0), 1, "x+0=x"),
      Identity(substitute(minus, {x(0), x(0)}), zero, 1, "x-x=0"),
      Identity(substitute(minus, {substitute(plus, {x(0), x(1)}), x(1)}), x(0), 2, "(x+y)-y=x"),
      Identity(substitute(plus, {substitute(minus, {x(0), x(1)}), x(1)}), x(0), 2, "(x-y)+y=x"),
  };
}

std::vector<Identity> unital_identities(const TermFn& plus, const Term& zero) {
  require_arity(plus, 2, "plus");
  require_ground(zero, "zero");
  return {
      Identity(substitute(plus, {x(0), zero}), x(0), 1, "x+0=x"),
      Identity(substitute(plus, {zero, x(0)}), x(0), 1, "0+x=x"),
  };
}

std::vector<Identity> subtraction_identities(const TermFn& s, const Term& zero) {
  require_arity(s, 2, "s");
  require_ground(zero, "zero");
  return {
      Identity(substitute(s, {x(0), x(0)}), zero, 1, "s(x,x)=0"),
      Identity(substitute(s, {x(0), zero}), x(0), 1, "s(x,0)=x"),
  };
}

std::vector<Identity> rho_sigma_identities(const TermFn& rho, const TermFn& sigma, const Term& zero) {
  require_arity(rho, 2, "rho");
  require_arity(sigma, 2, "sigma");
  require_ground(zero, "zero");
  return {
      Identity(substitute(sigma, {x(0), x(0)}), zero, 1, "sigma(x,x)=0"),
      Identity(substitute(rho, {substitute(sigma, {x(0), x(1)}), x(1)}), x(0), 2, "rho(sigma(x,y),y)=x"),
      Identity(substitute(sigma, {substitute(rho, {x(0), x(1)}), x(1)}), x(0), 2, "sigma(rho(x,y),y)=x"),
      Identity(substitute(rho, {zero, x(0)}), x(0), 1, "rho(0,x)=x"),
      Identity(substitute(rho, {x(0), zero}), x(0), 1, "rho(x,0)=x"),
      Identity(substitute(sigma, {x(0), zero}), x(0), 1, "sigma(x,0)=x"),
  };
}

std::vector<Identity> protomodular_identities(const std::vector<Term>& e, const std::vector<TermFn>& s,
                                              const TermFn& p, bool bijective) {
  const std::size_t n = s.size();
  if (e.size() != n) throw Error(ErrorCode::length_mismatch, "need one constant per binary term");
  require_arity(p, n + 1, "p");
  std::vector<Identity> out;
  std::vector<Term> s_of_xz;
  for (std::size_t i = 0; i < n; ++i) {
    require_arity(s[i], 2, "s_i");
    require_ground(e[i], "e_i");
    const std::string idx = std::to_string(i + 1);
    out.emplace_back(substitute(s[i], {x(0), x(0)}), e[i], 1, "s" + idx + "(x,x)=e" + idx);
    s_of_xz.push_back(substitute(s[i], {x(0), x(1)}));
  }
  s_of_xz.push_back(x(1));
  std::string label = "p(";
  for (std::size_t i = 1; i <= n; ++i) label += "s" + std::to_string(i) + "(x,z),";
  out.emplace_back(substitute(p, s_of_xz), x(0), 2, label + "z)=x");
  if (bijective) {
    auto args = vars(0, n + 1);
    const Term pxy = substitute(p, args);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string idx = std::to_string(i + 1);
      out.emplace_back(substitute(s[i], {pxy, x(n)}), x(i), n + 1,
                       "s" + idx + "(p(" + index_list("x", n) + ",y),y)=x" + idx);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// General families. Variables: y_1..y_m = x0..x(m-1), x = xm, z = x(m+1);
// where n further variables x_1..x_n are needed they come first.

void RhoSigmaFamily::validate() const {
  if (theta.size() != n || sigma.size() != n)
    throw Error(ErrorCode::arity_mismatch, "expected " + std::to_string(n) + " theta and sigma terms");
  require_arity(rho, n + m + 1, "rho");
  for (const auto& t : theta) require_arity(t, m, "theta_i");
  for (const auto& s : sigma) require_arity(s, m + 2, "sigma_i");
}

namespace {

std::vector<Term> theta_values(const RhoSigmaFamily& f, const std::vector<Term>& ys) {
  std::vector<Term> out;
  for (const auto& t : f.theta) out.push_back(substitute(t, ys));
  return out;
}

}  // namespace

std::vector<Identity> family_addition_identities(const RhoSigmaFamily& f) {
  f.validate();
  const auto ys = vars(0, f.m);
  auto args = concat(theta_values(f, ys), ys);
  args.push_back(x(f.m));
  return {Identity(substitute(f.rho, args), x(f.m), f.m + 1,
                   "rho(theta(" + index_list("y", f.m) + ")," + index_list("y", f.m) + (f.m ? "," : "") + "x)=x")};
}

std::vector<Identity> family_subtraction_identities(const RhoSigmaFamily& f) {
  f.validate();
  const auto ys = vars(0, f.m);
  std::vector<Identity> out;
  for (std::size_t i = 0; i < f.n; ++i) {
    auto args = ys;
    args.push_back(x(f.m));
    args.push_back(x(f.m));
    const std::string idx = std::to_string(i + 1);
    const std::string ylist = index_list("y", f.m);
    out.emplace_back(substitute(f.sigma[i], args), substitute(f.theta[i], ys), f.m + 1,
                     "sigma" + idx + "(" + ylist + (f.m ? "," : "") + "x,x)=theta" + idx + "(" + ylist + ")");
  }
  return out;
}

std::vector<Identity> family_recovery_identities(const RhoSigmaFamily& f) {
  f.validate();
  const auto ys = vars(0, f.m);
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.n; ++i) {
    auto sargs = ys;
    sargs.push_back(x(f.m));
    sargs.push_back(x(f.m + 1));
    args.push_back(substitute(f.sigma[i], sargs));
  }
  args = concat(std::move(args), ys);
  args.push_back(x(f.m + 1));
  return {Identity(substitute(f.rho, args), x(f.m), f.m + 2, "rho(sigma(y,x,z),y,z)=x")};
}

std::vector<Identity> family_inverse_identities(const RhoSigmaFamily& f) {
  f.validate();
  // x_1..x_n = x0..x(n-1), y = xn..x(n+m-1), z = x(n+m)
  const auto xs = vars(0, f.n);
  const auto ys = vars(f.n, f.m);
  const Term z = x(f.n + f.m);
  auto rargs = concat(xs, ys);
  rargs.push_back(z);
  const Term r = substitute(f.rho, rargs);
  std::vector<Identity> out;
  for (std::size_t i = 0; i < f.n; ++i) {
    auto sargs = ys;
    sargs.push_back(r);
    sargs.push_back(z);
    const std::string idx = std::to_string(i + 1);
    out.emplace_back(substitute(f.sigma[i], sargs), x(i), f.n + f.m + 1,
                     "sigma" + idx + "(y,rho(x,y,z),z)=x" + idx);
  }
  return out;
}

std::vector<Identity> family_protomodular_identities(const RhoSigmaFamily& f) {
  auto out = family_subtraction_identities(f);
  for (auto& id : family_recovery_identities(f)) out.push_back(std::move(id));
  return out;
}

std::vector<Identity> family_gamma_tau_identities(const RhoSigmaFamily& f) {
  auto out = family_subtraction_identities(f);
  for (auto& id : family_addition_identities(f)) out.push_back(std::move(id));
  for (auto& id : family_inverse_identities(f)) out.push_back(std::move(id));
  return out;
}

}  // namespace ualg
