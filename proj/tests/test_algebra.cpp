#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "oracles.hpp"
#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/report.hpp"

using namespace ualg;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::malformed;
}

const char* kZ3 = R"({"name": "Z3", "size": 3,
  "signature": [{"name": "plus", "arity": 2, "const": false}, {"name": "zero", "arity": 0, "const": true}],
  "tables": {"plus": [0,1,2, 1,2,0, 2,0,1], "zero": [0]}})";

std::vector<Elem> elems(const SubsetAlgebra& s) { return {s.elements().begin(), s.elements().end()}; }

Homomorphism hom(const AlgebraPtr& a, const AlgebraPtr& b, std::vector<Elem> m) {
  return Homomorphism(a, b, std::move(m));
}

}  // namespace

TEST_CASE("algebra files") {
  auto z3 = parse_algebra_json(kZ3);
  CHECK(z3.size() == 3);
  CHECK(z3.zero() == std::optional<Elem>(0));
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(z3.apply(0, std::vector<Elem>{a, b}) == (a + b) % 3);

  std::string bad = kZ3;
  bad.replace(bad.find("2,0,1]"), 6, "2,0,7]");
  CHECK(code_of([&] { parse_algebra_json(bad); }) == ErrorCode::out_of_range);

  std::string shortened = kZ3;
  shortened.replace(shortened.find("2,0,1]"), 6, "2,0]");
  CHECK(code_of([&] { parse_algebra_json(shortened); }) == ErrorCode::wrong_table_length);

  std::string missing = kZ3;
  missing.replace(missing.find(", \"zero\": [0]"), 13, "");
  CHECK(code_of([&] { parse_algebra_json(missing); }) == ErrorCode::signature_mismatch);

  auto z2 = load_algebra(std::filesystem::path(UALG_CORPUS_DIR) / "z2_plus.json");
  CHECK(z2.size() == 2);
  CHECK(std::vector<Elem>(z2.table(0).begin(), z2.table(0).end()) == std::vector<Elem>{0, 1, 1, 0});

  // writing and reading back gives the same algebra
  CHECK(parse_algebra_json(algebra_to_json(z3)) == z3);
}

TEST_CASE("builtin families") {
  auto z3 = builtin("cyclic", 3);
  REQUIRE(z3.signature().size() == 3);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      CHECK(z3.apply(0, std::vector<Elem>{a, b}) == (a + b) % 3);
      CHECK(z3.apply(1, std::vector<Elem>{a, b}) == (a + 3 - b) % 3);
    }

  auto ps = builtin("pointed_set", 3);
  CHECK(ps.size() == 3);
  CHECK(ps.signature().to_string() == "zero/0 const");

  auto ch = builtin("chain_semilattice", 2);
  CHECK(ch.signature().to_string() == "meet/2");
  CHECK(std::vector<Elem>(ch.table(0).begin(), ch.table(0).end()) == std::vector<Elem>{0, 0, 0, 1});

  auto bs = builtin("bool_subtraction", 2);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) CHECK(bs.apply(0, std::vector<Elem>{a, b}) == (a & (1 - b)));

  CHECK(code_of([] { builtin("quandle", 3); }) == ErrorCode::unknown_family);
  CHECK(code_of([] { builtin("cyclic", 0); }) == ErrorCode::parameter_out_of_bounds);
  CHECK(code_of([] { builtin("cyclic", kMaxBuiltinSize + 1); }) == ErrorCode::parameter_out_of_bounds);
  CHECK(code_of([] { builtin("bool_subtraction", 3); }) == ErrorCode::parameter_out_of_bounds);
}

TEST_CASE("products") {
  auto z2 = share(builtin("cyclic", 2));
  auto z3 = share(builtin("cyclic", 3));
  auto p = product(z2, z3);
  CHECK(p.algebra->size() == 6);
  CHECK(p.pi1(5) == 5 / 3);
  CHECK(p.pi2(5) == 5 % 3);
  CHECK(p.pi1(5) == 1);
  CHECK(p.pi2(5) == 2);
  CHECK(oracle::preserves(*p.algebra, *z2, {p.pi1.map().begin(), p.pi1.map().end()}));

  auto one = share(builtin("cyclic", 1));
  auto q = product(z3, one);
  CHECK(q.algebra->size() == 3);
  CHECK(q.pi1.injective());
  CHECK(q.pi1.surjective());

  // (A x B) x C and A x (B x C) agree under ((a,b),c) <-> (a,(b,c)); row-major makes both a*6+b*3+c
  auto left = product(product(z2, z2).algebra, z3).algebra;
  auto right = product(z2, product(z2, z3).algebra).algebra;
  CHECK(left->tables() == right->tables());

  auto ps = share(builtin("pointed_set", 2));
  CHECK(code_of([&] { product(z2, ps); }) == ErrorCode::signature_mismatch);
}

TEST_CASE("pullback fibers") {
  auto z6 = share(builtin("cyclic", 6));
  auto z3 = share(builtin("cyclic", 3));
  auto alpha = hom(z6, z3, {0, 1, 2, 0, 1, 2});
  auto pb = pullback_fiber(alpha, identity_hom(z3));
  std::vector<Elem> expected;
  for (Elem a = 0; a < 6; ++a) expected.push_back(a * 3 + a % 3);
  CHECK(elems(pb.fiber) == expected);

  auto diag = pullback_fiber(identity_hom(z3), identity_hom(z3));
  CHECK(elems(diag.fiber) == std::vector<Elem>{0, 4, 8});
  CHECK(diag.pi1.injective());
  CHECK(diag.pi1.surjective());

  // images of alpha and f meet only at the basepoint
  auto p2 = share(builtin("pointed_set", 2));
  auto p3 = share(builtin("pointed_set", 3));
  auto a = hom(p2, p3, {0, 1});
  auto f = hom(p2, p3, {0, 2});
  auto pf = pullback_fiber(a, f);
  std::vector<Elem> brute;
  for (Elem x = 0; x < 2; ++x)
    for (Elem e = 0; e < 2; ++e)
      if (a(x) == f(e)) brute.push_back(x * 2 + e);
  CHECK(elems(pf.fiber) == brute);
  CHECK(brute == std::vector<Elem>{0});

  // alpha against the identity of B is bijective to A through pi1
  for (const auto& alg : load_corpus(UALG_CORPUS_DIR)) {
    if (alg->size() > 6) continue;
    for (const auto& h : find_homomorphisms(alg, alg, 50)) {
      auto p = pullback_fiber(h, identity_hom(alg));
      CHECK(p.fiber.size() == alg->size());
      CHECK(p.pi1.injective());
    }
  }
}

TEST_CASE("kernels") {
  auto z6 = share(builtin("cyclic", 6));
  auto z3 = share(builtin("cyclic", 3));
  auto one = share(builtin("cyclic", 1));
  auto alpha = hom(z6, z3, {0, 1, 2, 0, 1, 2});
  CHECK(elems(kernel(alpha, 0)) == std::vector<Elem>{0, 3});
  CHECK(elems(kernel(identity_hom(z6), 0)) == std::vector<Elem>{0});
  CHECK(elems(kernel(hom(z6, one, std::vector<Elem>(6, 0)), 0)) == std::vector<Elem>{0, 1, 2, 3, 4, 5});

  // the kernel is the pi1 image of the pullback along the basepoint map 1 -> B
  for (const auto& alg : load_corpus(UALG_CORPUS_DIR)) {
    auto z = alg->zero();
    if (!z || alg->size() > 6) continue;
    // one-element algebra of the same signature
    std::vector<std::vector<Elem>> tables(alg->signature().size(), std::vector<Elem>{0});
    auto point = share(FiniteAlgebra("point", 1, alg->signature(), tables));
    for (const auto& b : load_corpus(UALG_CORPUS_DIR)) {
      if (b->signature() != alg->signature() || b->size() > 6) continue;
      auto to_base = find_homomorphisms(point, b, 1);
      REQUIRE(to_base.size() == 1);
      for (const auto& h : find_homomorphisms(alg, b, 40)) {
        auto k = kernel(h, *b->zero());
        auto pb = pullback_fiber(h, to_base.front());
        std::vector<Elem> image;
        for (Elem i = 0; i < pb.fiber.size(); ++i) image.push_back(pb.pi1(i));
        std::sort(image.begin(), image.end());
        CHECK(image == elems(k));
      }
    }
  }
}

TEST_CASE("homomorphism enumeration") {
  auto z2 = share(builtin("cyclic_plus_only", 2));
  auto z3 = share(builtin("cyclic_plus_only", 3));
  auto to3 = find_homomorphisms(z2, z3, 100);
  REQUIRE(to3.size() == 1);
  CHECK(std::vector<Elem>(to3[0].map().begin(), to3[0].map().end()) == std::vector<Elem>{0, 0});
  auto self = find_homomorphisms(z2, z2, 100);
  REQUIRE(self.size() == 2);
  CHECK(std::vector<Elem>(self[1].map().begin(), self[1].map().end()) == std::vector<Elem>{0, 1});

  // brute force over every map, same order, for every pair of small corpus algebras
  auto corpus = load_corpus(UALG_CORPUS_DIR);
  std::size_t compared = 0;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (a->signature() != b->signature() || oracle::ipow(b->size(), a->size()) > 50000) continue;
      auto got = find_homomorphisms(a, b, 1000000);
      auto want = oracle::homs(*a, *b);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::vector<Elem>(got[i].map().begin(), got[i].map().end()) == want[i]);
        CHECK(preserves_operations(*a, *b, got[i].map()));
      }
      bool has_identity = a != b;
      for (const auto& h : got) has_identity = has_identity || h == identity_hom(a);
      CHECK(has_identity);
      ++compared;
    }
  CHECK(compared > 20);

  auto limited = find_homomorphisms(share(builtin("cyclic", 6)), share(builtin("cyclic", 6)), 3);
  CHECK(limited.size() == 3);
}

TEST_CASE("subsets that are not closed are rejected") {
  auto z6 = share(builtin("cyclic", 6));
  CHECK(code_of([&] { SubsetAlgebra(z6, {0, 1}); }) == ErrorCode::not_closed);
  auto g = generated_subalgebra(z6, std::vector<Elem>{2});
  CHECK(elems(g) == std::vector<Elem>{0, 2, 4});
  CHECK(g.compact()->size() == 3);
  CHECK(g.inclusion()(2) == 4);
}
