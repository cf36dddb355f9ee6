#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/identities.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// A plain function between finite sets {0..dom_size-1} -> {0..cod_size-1};
/// it need not preserve any operation.
class SetMap {
 public:
  SetMap(std::size_t dom_size, std::size_t cod_size, std::vector<Elem> map);

  std::size_t dom_size() const { return dom_size_; }
  std::size_t cod_size() const { return cod_size_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(std::size_t i) const { return map_[i]; }

  bool injective() const;
  bool bijective() const { return dom_size_ == cod_size_ && injective(); }

  /// Copy with map()[i] replaced; used to build deliberately broken maps.
  SetMap with_entry(std::size_t i, Elem value) const;

  friend bool operator==(const SetMap&, const SetMap&) = default;

 private:
  std::size_t dom_size_;
  std::size_t cod_size_;
  std::vector<Elem> map_;
};

struct Check {
  Check(std::string name, bool pass = true, std::optional<std::vector<Elem>> counterexample = std::nullopt)
      : name(std::move(name)), pass(pass), counterexample(std::move(counterexample)) {}

  std::string name;
  bool pass = true;
  std::optional<std::vector<Elem>> counterexample;  // least failing input
};

struct Certificate {
  std::vector<Check> checks;

  bool pass() const;
  /// The check with this name, or nullptr.
  const Check* find(const std::string& name) const;
  void append(const Certificate& other);
};

// ---------------------------------------------------------------------------
// Split epimorphisms and extensions

/// alpha: A -> B with a section beta: B -> A.
class SplitEpi {
 public:
  /// Throws ErrorCode::precondition unless alpha after beta is the identity of B.
  SplitEpi(Homomorphism alpha, Homomorphism beta);

  const AlgebraPtr& a() const { return alpha_.dom(); }
  const AlgebraPtr& b() const { return alpha_.cod(); }
  const Homomorphism& alpha() const { return alpha_; }
  const Homomorphism& beta() const { return beta_; }

 private:
  Homomorphism alpha_;
  Homomorphism beta_;
};

/// All split epis A -> B, ordered by alpha (lexicographic) and then beta.
std::vector<SplitEpi> enumerate_split_epis(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t limit);

/// A split epi in a pointed signature together with the kernel of alpha.
/// Elements of K x B are indexed kpos*|B| + b, where kpos is the position of
/// the kernel element in increasing order.
class SplitExtension {
 public:
  /// Throws ErrorCode::precondition if the signature has no designated constant.
  explicit SplitExtension(SplitEpi epi);

  const SplitEpi& epi() const { return epi_; }
  const FiniteAlgebra& a() const { return *epi_.a(); }
  const FiniteAlgebra& b() const { return *epi_.b(); }
  const SubsetAlgebra& kernel() const { return kernel_; }
  /// Inclusion of the compact kernel into A.
  const Homomorphism& kappa() const { return kernel_.inclusion(); }
  std::size_t k_size() const { return kernel_.size(); }
  std::size_t kb_index(std::size_t kpos, Elem b) const { return kpos * epi_.b()->size() + b; }

 private:
  SplitEpi epi_;
  SubsetAlgebra kernel_;
};

// ---------------------------------------------------------------------------
// Pointed decomposition

/// phi(k,b) = kappa(k) + beta(b) as a map K x B -> A.
SetMap phi_pointed(const SplitExtension& ext, const TermFn& plus);

struct PointedInverse {
  std::optional<SetMap> psi;     // A -> K x B
  std::optional<SetMap> lambda;  // A -> K (kernel positions)
  std::optional<Elem> offending; // least a with a - beta(alpha(a)) outside K
};

/// lambda(a) = a - beta(alpha(a)), psi(a) = (lambda(a), alpha(a)).
PointedInverse psi_pointed(const SplitExtension& ext, const TermFn& minus);

/// alpha phi = pi2, phi(0,b) = beta(b), phi(k,0) = kappa(k), and bijectivity.
Certificate verify_splext_morphism(const SetMap& phi, const SplitExtension& ext);

/// Checks named `psi_phi=1` and `phi_psi=1` for maps f: X -> Y and g: Y -> X.
Certificate verify_mutually_inverse(const SetMap& f, const SetMap& g, const std::string& f_name,
                                    const std::string& g_name);

// ---------------------------------------------------------------------------
// General decomposition over a pullback

/// phi((a,e),b) = (e, p(a, beta f(e), beta(b))) on (A x_B E) x B, with
/// fiber elements indexed by their position in the pullback (increasing
/// product index a*|E| + e). The codomain E x A is indexed e*|A| + a.
struct GeneralDecomposition {
  PullbackFiber pullback;
  SetMap phi;
  std::optional<SetMap> psi;  // absent when some q-image leaves the pullback
  Certificate certificate;
};

/// psi(e,a) = ((q(a, beta alpha(a), beta f(e)), e), alpha(a)).
GeneralDecomposition phi_general(const SplitEpi& s, const Homomorphism& f, const TermFn& p, const TermFn& q);

struct FiberBijection {
  std::vector<Elem> source;  // f^{-1}(b), increasing
  std::vector<Elem> target;  // f^{-1}(b'), increasing
  std::vector<Elem> image;   // image[i] = p(source[i], e, e')
  Certificate certificate;   // image_in_fiber, bijective
};

/// x -> p(x, e, e') from f^{-1}(b) to f^{-1}(b'). Throws ErrorCode::precondition
/// if f is not surjective or f(e) != b or f(e') != b'.
FiberBijection fiber_bijection(const Homomorphism& f, const TermFn& p, Elem b, Elem b2, Elem e, Elem e2);

struct ComponentOptions {
  bool check_tau_gamma = true;
  bool check_gamma_tau = true;
};

/// The component maps at a split epi (A, B, alpha, beta) for the data
/// (theta, rho, sigma):
///   V = (A^n x_{B^n} B^m) x B   (pairs with alpha(a_i) = theta_i(y)),
///   W = B^m x A,
///   tau((a,y),b) = (y, rho(a, beta y, beta b)),
///   gamma(y,a)   = ((sigma_i(beta y, a, beta alpha a))_i, y), alpha a).
/// V is indexed ppos*|B| + b with ppos the position of (a,y) in row-major
/// order of A^n x B^m; W is indexed yidx*|A| + a with yidx row-major in B^m.
struct GeneralComponent {
  std::size_t m = 0;
  std::size_t n = 1;
  std::vector<std::vector<Elem>> pullback;  // each point as (a_1..a_n, y_1..y_m)
  bool empty_pullback = false;
  SetMap tau;
  std::optional<SetMap> gamma;  // absent when some sigma value leaves the pullback
  Certificate certificate;
};

GeneralComponent general_component(const RhoSigmaFamily& f, const SplitEpi& s, ComponentOptions options = {});

// ---------------------------------------------------------------------------
// Naturality

/// A morphism of split extensions: u: K -> K', v: A -> A', w: B -> B'
/// with v kappa = kappa' u, alpha' v = w alpha and v beta = beta' w.
struct SplExtMorphism {
  Homomorphism u;
  Homomorphism v;
  Homomorphism w;
};

/// Every (v, w) pair of homomorphisms satisfying the equations, u being the
/// restriction of v to the kernels. Ordered by v, then w.
std::vector<SplExtMorphism> enumerate_splext_morphisms(const SplitExtension& from, const SplitExtension& to,
                                                       std::size_t limit);

/// The three morphism equations, checked pointwise.
Certificate check_splext_morphism(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor);

/// Morphism equations, then phi' (u x w) = v phi on K x B.
Certificate check_naturality(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor,
                             const SetMap& phi, const SetMap& phi2);

using ComponentBuilder = std::function<SetMap(const SplitExtension&)>;

Certificate check_naturality(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor,
                             const ComponentBuilder& build);

}  // namespace ualg
