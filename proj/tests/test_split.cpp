#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/report.hpp"
#include "ualg/split.hpp"
#include "ualg/translations.hpp"

using namespace ualg;

namespace {

AlgebraPtr alg(const char* family, std::size_t n) { return share(builtin(family, n)); }

TermFn fn(const char* text, const AlgebraPtr& a, std::size_t arity) {
  return TermFn(parse_term(text, a->signature()), arity);
}

std::vector<Elem> vec(std::span<const Elem> s) { return {s.begin(), s.end()}; }

// split epis derived by pairing brute-force homomorphisms, alpha-major
std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> oracle_split_epis(const FiniteAlgebra& a,
                                                                               const FiniteAlgebra& b) {
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> out;
  auto down = oracle::homs(a, b);
  auto up = oracle::homs(b, a);
  for (const auto& al : down)
    for (const auto& be : up) {
      bool ok = true;
      for (Elem x = 0; x < b.size(); ++x) ok = ok && al[be[x]] == x;
      if (ok) out.emplace_back(al, be);
    }
  return out;
}

SplitExtension z6_over_z3() {
  auto epis = enumerate_split_epis(alg("cyclic", 6), alg("cyclic", 3), 100);
  REQUIRE_FALSE(epis.empty());
  return SplitExtension(epis.front());
}

}  // namespace

TEST_CASE("split epi enumeration") {
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  auto epis = enumerate_split_epis(z6, z3, 100);
  auto want = oracle_split_epis(*z6, *z3);
  // reduction mod 3 with beta(1)=4, and its composite with negation on Z3 with beta(1)=2
  REQUIRE(want.size() == 2);
  REQUIRE(epis.size() == want.size());
  for (std::size_t i = 0; i < epis.size(); ++i) {
    CHECK(vec(epis[i].alpha().map()) == want[i].first);
    CHECK(vec(epis[i].beta().map()) == want[i].second);
  }
  CHECK(vec(epis[0].alpha().map()) == std::vector<Elem>{0, 1, 2, 0, 1, 2});
  CHECK(epis[0].beta()(1) == 4);

  auto self = enumerate_split_epis(z3, z3, 100);
  CHECK(std::any_of(self.begin(), self.end(), [&](const SplitEpi& s) {
    return s.alpha() == identity_hom(z3) && s.beta() == identity_hom(z3);
  }));
  CHECK(enumerate_split_epis(z3, z6, 100).empty());

  auto corpus = load_corpus(UALG_CORPUS_DIR);
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (a->signature() != b->signature() || a->size() > 6 || b->size() > 4) continue;
      auto got = enumerate_split_epis(a, b, 100000);
      CHECK(got.size() == oracle_split_epis(*a, *b).size());
    }

  CHECK_THROWS_AS(SplitEpi(identity_hom(z3), Homomorphism(z3, z3, {0, 2, 1})), Error);
}

TEST_CASE("pointed decomposition on Z6 over Z3") {
  auto ext = z6_over_z3();
  CHECK(vec(ext.kernel().elements()) == std::vector<Elem>{0, 3});
  auto z6 = ext.epi().a();
  auto phi = phi_pointed(ext, fn("plus(x0,x1)", z6, 2));
  // kernel element 3 sits at position 1
  CHECK(phi(ext.kb_index(1, 1)) == (3 + 4) % 6);
  CHECK(phi(ext.kb_index(1, 1)) == 1);
  CHECK(phi(ext.kb_index(0, 0)) == 0);
  for (Elem b = 0; b < 3; ++b) CHECK(phi(ext.kb_index(0, b)) == ext.epi().beta()(b));

  auto inv = psi_pointed(ext, fn("minus(x0,x1)", z6, 2));
  REQUIRE(inv.psi);
  REQUIRE(inv.lambda);
  CHECK(ext.kernel().elements()[(*inv.lambda)(5)] == (5 + 6 - 2) % 6);
  CHECK((*inv.psi)(5) == ext.kb_index(1, 2));
  for (Elem b = 0; b < 3; ++b) CHECK((*inv.lambda)(ext.epi().beta()(b)) == 0);
  for (Elem k = 0; k < 2; ++k) CHECK((*inv.lambda)(ext.kernel().elements()[k]) == k);

  auto cert = verify_splext_morphism(phi, ext);
  CHECK(cert.pass());
  CHECK(cert.find("bijective"));
  auto mutual = verify_mutually_inverse(phi, *inv.psi, "phi", "psi");
  CHECK(mutual.pass());
  CHECK(mutual.find("psi_phi=1"));
  CHECK(mutual.find("phi_psi=1"));

  // a wrong subtraction leaves the kernel
  auto bad = psi_pointed(ext, fn("plus(x0,x1)", z6, 2));
  CHECK_FALSE(bad.psi);
  REQUIRE(bad.offending);
  Elem least = 0;
  while (ext.kernel().contains((least + ext.epi().beta()(ext.epi().alpha()(least))) % 6)) ++least;
  CHECK(*bad.offending == least);
}

TEST_CASE("pointed decomposition degenerate cases") {
  auto z3 = alg("cyclic", 3);
  SplitExtension id(SplitEpi(identity_hom(z3), identity_hom(z3)));
  CHECK(id.k_size() == 1);
  auto phi = phi_pointed(id, fn("plus(x0,x1)", z3, 2));
  for (Elem b = 0; b < 3; ++b) CHECK(phi(id.kb_index(0, b)) == b);
  CHECK(verify_splext_morphism(phi, id).pass());

  auto p3 = alg("pointed_set", 3);
  auto p2 = alg("pointed_set", 2);
  auto epis = enumerate_split_epis(p3, p2, 100);
  REQUIRE_FALSE(epis.empty());
  for (const auto& s : epis) {
    SplitExtension ext(s);
    CHECK(ext.k_size() * 2 != 3);
    // the only binary terms are projections; none yields a bijection K x B -> A
    for (const char* t : {"x0", "x1"}) {
      auto cert = verify_splext_morphism(phi_pointed(ext, fn(t, p3, 2)), ext);
      REQUIRE(cert.find("bijective"));
      CHECK_FALSE(cert.find("bijective")->pass);
    }
  }

  auto ch = alg("chain_semilattice", 2);
  CHECK_THROWS_AS(SplitExtension(SplitEpi(identity_hom(ch), identity_hom(ch))), Error);
}

TEST_CASE("general decomposition over a pullback") {
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  auto s = enumerate_split_epis(z6, z3, 10).front();
  auto p = fn("plus(minus(x0,x1),x2)", z6, 3);
  auto g = phi_general(s, identity_hom(z3), p, p);
  CHECK(g.certificate.pass());
  REQUIRE(g.psi);

  // ((4,1),2): 4 - beta(1) + beta(2) = 4 - 4 + 2
  const Elem fiber_index = 4 * 3 + 1;
  REQUIRE(g.pullback.fiber.contains(fiber_index));
  const std::size_t ppos = g.pullback.fiber.position(fiber_index);
  CHECK(g.phi(ppos * 3 + 2) == 1 * 6 + (4 + 6 - 4 + 2) % 6);

  // when beta(b) = beta f(e) the A component is a
  for (std::size_t pos = 0; pos < g.pullback.fiber.size(); ++pos) {
    Elem pair = g.pullback.fiber.elements()[pos];
    Elem a = pair / 3, e = pair % 3;
    CHECK(g.phi(pos * 3 + e) == e * 6 + a);
  }

  for (const char* name : {"psi_phi=1", "phi_psi=1", "psi_lands_in_pullback", "(1 x alpha)phi=pi2 x 1"})
    CHECK(g.certificate.find(name));

  // over a one-element E the general map is the pointed one
  auto one = alg("cyclic", 1);
  auto to_base = find_homomorphisms(one, z3, 1).front();
  auto deg = phi_general(s, to_base, p, p);
  CHECK(deg.certificate.pass());
  SplitExtension ext(s);
  auto pointed = phi_pointed(ext, fn("plus(x0,x1)", z6, 2));
  CHECK(deg.phi.map() == pointed.map());

  // a q that does not invert p is caught
  auto bad = phi_general(s, identity_hom(z3), p, fn("x0", z6, 3));
  CHECK_FALSE(bad.certificate.pass());
}

TEST_CASE("fiber bijections") {
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  Homomorphism f(z6, z3, {0, 1, 2, 0, 1, 2});
  auto p = fn("plus(minus(x0,x1),x2)", z6, 3);
  auto fb = fiber_bijection(f, p, 0, 1, 0, 1);
  CHECK(fb.source == std::vector<Elem>{0, 3});
  CHECK(fb.target == std::vector<Elem>{1, 4});
  CHECK(fb.image == std::vector<Elem>{1, 4});
  CHECK(fb.certificate.pass());

  auto same = fiber_bijection(f, p, 2, 2, 5, 5);
  CHECK(same.image == same.source);

  Homomorphism zero(z6, z3, std::vector<Elem>(6, 0));
  CHECK_THROWS_AS(fiber_bijection(zero, p, 0, 0, 0, 0), Error);
  CHECK_THROWS_AS(fiber_bijection(f, p, 0, 1, 1, 1), Error);
}

TEST_CASE("general components") {
  auto z6 = alg("cyclic", 6);
  auto z3 = alg("cyclic", 3);
  auto s = enumerate_split_epis(z6, z3, 10).front();
  SplitExtension ext(s);
  auto zero = parse_term("zero", z6->signature());
  auto plus = fn("plus(x0,x1)", z6, 2);
  auto minus = fn("minus(x0,x1)", z6, 2);

  // m = 0, n = 1 with theta = 0 is the pointed decomposition
  auto pointed = general_component(family_from_rho_sigma(plus, minus, zero), s);
  CHECK(pointed.certificate.pass());
  CHECK(pointed.tau.map() == phi_pointed(ext, plus).map());
  REQUIRE(pointed.gamma);
  CHECK(pointed.gamma->map() == psi_pointed(ext, minus).psi->map());

  auto p = fn("plus(minus(x0,x1),x2)", z6, 3);
  for (const auto& epi : {s, SplitEpi(identity_hom(z3), identity_hom(z3))}) {
    auto c = general_component(family_from_pq(p, p), epi);
    CHECK(c.certificate.pass());
    CHECK(c.certificate.find("tau_gamma=1_W"));
    CHECK(c.certificate.find("gamma_tau=1_V"));
  }

  // sigma(x,z) = x fails its unit law: gamma leaves the kernel at the least a outside it
  auto broken = general_component(family_from_rho_sigma(plus, fn("x0", z6, 2), zero), s);
  CHECK_FALSE(broken.certificate.pass());
  const auto* lands = broken.certificate.find("gamma_lands_in_pullback");
  REQUIRE(lands);
  REQUIRE(lands->counterexample);
  Elem least = 0;
  while (s.alpha()(least) == 0) ++least;
  CHECK(*lands->counterexample == std::vector<Elem>{least});
}

TEST_CASE("naturality") {
  auto z6 = alg("cyclic", 6);
  auto ext = z6_over_z3();
  auto plus = fn("plus(x0,x1)", z6, 2);
  auto build = [&](const SplitExtension& e) { return phi_pointed(e, plus); };

  SplExtMorphism id{identity_hom(ext.kernel().compact()), identity_hom(z6), identity_hom(ext.epi().b())};
  CHECK(check_naturality(ext, ext, id, build).pass());

  // K = Z2 over the trivial group into Z2 x Z2 -> Z2 with v(k) = (k,0) and w = 0
  auto z2 = alg("cyclic", 2);
  auto one = alg("cyclic", 1);
  auto klein = product(z2, z2);
  SplitExtension small(enumerate_split_epis(z2, one, 10).front());
  std::optional<SplitExtension> big;
  for (auto& e : enumerate_split_epis(klein.algebra, z2, 100))
    if (e.alpha() == klein.pi2 && e.beta()(1) == 1) big.emplace(e);
  REQUIRE(big);
  auto mors = enumerate_splext_morphisms(small, *big, 100);
  auto it = std::find_if(mors.begin(), mors.end(),
                         [](const SplExtMorphism& m) { return vec(m.v.map()) == std::vector<Elem>{0, 2}; });
  REQUIRE(it != mors.end());
  auto plus2 = fn("plus(x0,x1)", z2, 2);
  auto phi = phi_pointed(small, plus2);
  auto phi2 = phi_pointed(*big, plus2);
  CHECK(check_naturality(small, *big, *it, phi, phi2).pass());

  // one entry of phi' moved
  auto corrupted = phi2.with_entry(0, phi2(0) ^ 1);
  auto cert = check_naturality(small, *big, *it, phi, corrupted);
  CHECK_FALSE(cert.pass());
  const auto* nat = cert.find("phi'(u x w)=v phi");
  REQUIRE(nat);
  CHECK(nat->counterexample == std::optional<std::vector<Elem>>(std::vector<Elem>{0, 0}));

  // a map that is not a morphism of extensions is reported as such
  SplExtMorphism wrong{it->u, Homomorphism(z2, klein.algebra, {0, 3}), it->w};
  auto bad = check_splext_morphism(small, *big, wrong);
  REQUIRE(bad.find("alpha' v=w alpha"));
  CHECK(bad.find("alpha' v=w alpha")->counterexample == std::optional<std::vector<Elem>>(std::vector<Elem>{1}));
}
