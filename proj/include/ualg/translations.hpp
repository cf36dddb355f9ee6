#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "ualg/eval.hpp"
#include "ualg/identities.hpp"
#include "ualg/term.hpp"

namespace ualg {

// Term-to-term translations between the equivalent term systems. All of them
// are literal substitutions; whether the target identities hold is a property
// of an algebra and is checked separately with the identity builders.
// Every function throws ErrorCode::arity_mismatch on inputs of the wrong arity.

using TermPair = std::pair<TermFn, TermFn>;

/// p~(x,y,z) = p(q(x,y,y),y,z), q~(x,y,z) = p(q(x,y,z),z,z).
TermPair tilde_from_pq(const TermFn& p, const TermFn& q);

/// u~(a,b,c,d) = p~(q~(a,b,c),d,b).
TermFn u_from_tilde(const TermFn& pt, const TermFn& qt);

/// p(x,y,z) = u(x,z,z,y), q(x,y,z) = u(x,y,z,y).
TermPair pq_from_u(const TermFn& u);

/// x+y = p~(x,e,y), x-y = q~(x,y,e) for the arity-0 symbol `e` of `sig`.
/// Throws ErrorCode::unknown_symbol if `e` is missing and
/// ErrorCode::not_constant if it is not nullary.
TermPair loop_from_tilde(const TermFn& pt, const TermFn& qt, const Signature& sig, std::string_view e);

/// p(x,y,z) = q(x,y,z) = (x-y)+z.
TermPair pq_from_loop(const TermFn& plus, const TermFn& minus);

/// x+y = rho(sigma(x,0),y), x-y = rho(sigma(x,y),0) with 0 the designated
/// constant of `sig`; throws ErrorCode::not_constant for an unpointed signature.
TermPair loop_from_rho_sigma(const TermFn& rho, const TermFn& sigma, const Signature& sig);

struct ProtomodularTerms {
  std::vector<Term> e;  // ground
  std::vector<TermFn> s;
  TermFn p;
};

/// e_i = theta_i(e,...,e), s_i(x,z) = sigma_i(e,...,e,x,z),
/// p(x_1,...,x_n,z) = rho(x_1,...,x_n,e,...,e,z).
ProtomodularTerms protomodular_from_rho_sigma(const RhoSigmaFamily& f, const Signature& sig, std::string_view e);

/// p(x,y,z) = rho(sigma_1(y..y,x,y), ..., sigma_n(y..y,x,y), y..y, z),
/// q(x,y,z) = rho(sigma_1(z..z,x,y), ..., sigma_n(z..z,x,y), z..z, z).
/// With m = n = 1 and theta the identity this gives p~ and q~ of the family
/// built by family_from_pq.
TermPair pq_from_rho_sigma(const RhoSigmaFamily& f);

/// m = n = 1, theta = x0, rho = p, sigma(y,x,z) = q(x,z,y).
RhoSigmaFamily family_from_pq(const TermFn& p, const TermFn& q);

/// m = 0, n = 1, theta = the ground term `zero`, rho(x,z) and sigma(x,z) as given.
RhoSigmaFamily family_from_rho_sigma(const TermFn& rho, const TermFn& sigma, const Term& zero);

/// Exhaustive check of the subtraction, addition and inverse families on `algebra`.
std::vector<IdentityOutcome> check_gamma_tau_identity_set(const RhoSigmaFamily& f, const FiniteAlgebra& algebra);

}  // namespace ualg
