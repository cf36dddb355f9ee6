#pragma once

#include <cstddef>
#include <vector>

#include "ualg/term.hpp"

namespace ualg {

// Identity sets characterizing the term systems this library searches for and
// translates between. Each builder substitutes its argument terms into a fixed
// template; labels use x, y, z (and a, b, c, d for quaternary terms) in place
// of x0, x1, ...

/// p(x,x,y)=y, p(x,y,y)=x.
std::vector<Identity> maltsev_identities(const TermFn& p);

/// p(x,x,y)=y, p(q(x,y,z),z,y)=x, q(p(x,y,z),z,y)=x.
std::vector<Identity> biternary_identities(const TermFn& p, const TermFn& q);

/// q(x,x,y)=y, a consequence of biternary_identities.
Identity biternary_implied_identity(const TermFn& q);

/// Both terms Mal'tsev, and each inverts the other in the biternary sense.
std::vector<Identity> tilde_pair_identities(const TermFn& pt, const TermFn& qt);

/// u(a,b,b,a)=b, u(u(a,b,c,d),b,d,c)=a.
std::vector<Identity> quaternary_identities(const TermFn& u);

/// u(a,b,b,a)=b, u(a,a,b,a)=b, u(a,b,c,c)=a, u(u(a,b,c,d),b,d,c)=a.
std::vector<Identity> strong_quaternary_identities(const TermFn& u);

/// x+0=x, x-x=0, (x+y)-y=x, (x-y)+y=x for the ground term `zero`.
std::vector<Identity> right_loop_identities(const TermFn& plus, const TermFn& minus, const Term& zero);

/// x+0=x, 0+x=x.
std::vector<Identity> unital_identities(const TermFn& plus, const Term& zero);

/// s(x,x)=0, s(x,0)=x.
std::vector<Identity> subtraction_identities(const TermFn& s, const Term& zero);

/// sigma(x,x)=0, rho(sigma(x,y),y)=x, sigma(rho(x,y),y)=x, plus the unit laws
/// rho(0,x)=x, rho(x,0)=x and sigma(x,0)=x.
std::vector<Identity> rho_sigma_identities(const TermFn& rho, const TermFn& sigma, const Term& zero);

/// s_i(x,x)=e_i and p(s_1(x,z),...,s_n(x,z),z)=x; with `bijective` also
/// s_i(p(x_1,...,x_n,y),y)=x_i.
std::vector<Identity> protomodular_identities(const std::vector<Term>& e, const std::vector<TermFn>& s,
                                              const TermFn& p, bool bijective);

/// Term data for the general component maps: n terms theta_i of arity m,
/// rho(x_1..x_n, y_1..y_m, z) of arity n+m+1 and n terms
/// sigma_i(y_1..y_m, x, z) of arity m+2.
struct RhoSigmaFamily {
  std::size_t m = 0;
  std::size_t n = 1;
  std::vector<TermFn> theta;
  TermFn rho;
  std::vector<TermFn> sigma;

  /// Throws ErrorCode::arity_mismatch unless all arities agree with m and n.
  void validate() const;
};

/// rho(theta(y), y, x) = x.
std::vector<Identity> family_addition_identities(const RhoSigmaFamily& f);

/// sigma_i(y, x, x) = theta_i(y).
std::vector<Identity> family_subtraction_identities(const RhoSigmaFamily& f);

/// rho(sigma_1(y,x,z), ..., sigma_n(y,x,z), y, z) = x.
std::vector<Identity> family_recovery_identities(const RhoSigmaFamily& f);

/// sigma_i(y, rho(x_1..x_n, y, z), z) = x_i.
std::vector<Identity> family_inverse_identities(const RhoSigmaFamily& f);

/// Identities making one-sided inverse components with tau after gamma the
/// identity: subtraction + recovery.
std::vector<Identity> family_protomodular_identities(const RhoSigmaFamily& f);

/// The three families for gamma after tau the identity: subtraction, addition,
/// inverse.
std::vector<Identity> family_gamma_tau_identities(const RhoSigmaFamily& f);

}  // namespace ualg
