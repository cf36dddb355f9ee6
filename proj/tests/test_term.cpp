#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ualg/algebra.hpp"
#include "ualg/error.hpp"
#include "ualg/eval.hpp"
#include "ualg/term.hpp"

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

// random term of bounded depth over sig with variables below k
Term random_term(std::mt19937& rng, const Signature& sig, std::size_t k, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> pick(0, sig.size() + k - 1);
  std::size_t c = pick(rng);
  if (depth == 0 || c >= sig.size()) return x(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig[c].arity; ++i) args.push_back(random_term(rng, sig, k, depth - 1));
  return Term::app(sig, c, std::move(args));
}

}  // namespace

TEST_CASE("signature parsing") {
  auto s = parse_signature("plus/2, zero/0 const");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Symbol{"plus", 2, false});
  CHECK(s[1] == Symbol{"zero", 0, true});
  CHECK(s.pointed_constant() == std::optional<std::size_t>(1));

  auto p = parse_signature("p/3");
  REQUIRE(p.size() == 1);
  CHECK(p[0].arity == 3);
  CHECK_FALSE(p.pointed_constant());

  CHECK(code_of([] { parse_signature("plus/2, plus/1"); }) == ErrorCode::duplicate_name);
  CHECK(code_of([] { parse_signature("f/-1"); }) == ErrorCode::negative_arity);
  CHECK(code_of([] { parse_signature("f/2 const"); }) == ErrorCode::malformed);
  CHECK(code_of([] { parse_signature("f 2"); }) == ErrorCode::malformed);

  try {
    parse_signature("plus/2\nminus/2\nplus/0");
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.line() == 3);
  }
  CHECK(parse_signature(s.to_string()) == s);
}

TEST_CASE("term parsing and printing") {
  auto p3 = parse_signature("p/3");
  auto t = parse_term("p(x0,x0,x1)", p3);
  REQUIRE_FALSE(t.is_var());
  CHECK(t.name() == "p");
  REQUIRE(t.args().size() == 3);
  CHECK(t.args()[0] == x(0));
  CHECK(t.args()[1] == x(0));
  CHECK(t.args()[2] == x(1));

  auto pz = parse_signature("plus/2, zero/0 const");
  auto u = parse_term("plus(x0,zero)", pz);
  CHECK(u == Term::app(pz, "plus", {x(0), Term::app(pz, "zero", {})}));
  CHECK(parse_term("plus(x0, zero())", pz) == u);

  CHECK(code_of([&] { parse_term("p(x0,x1)", p3); }) == ErrorCode::arity_mismatch);
  CHECK(code_of([&] { parse_term("q(x0,x1,x2)", p3); }) == ErrorCode::unknown_symbol);
  CHECK(code_of([&] { parse_term("p(x0,x1,x2", p3); }) == ErrorCode::unbound_token);
  CHECK(code_of([&] { parse_term("p(x0,x1,x2) x3", p3); }) == ErrorCode::unbound_token);
  CHECK(code_of([&] { parse_term("p(x0,?,x2)", p3); }) == ErrorCode::unbound_token);

  for (const char* text : {"x3", "plus(x0,zero)", "plus(plus(x0,x1),minus(zero,x2))", "zero"}) {
    auto sig = parse_signature("plus/2, minus/2, zero/0 const");
    CHECK(parse_term(parse_term(text, sig).to_string(), sig).to_string() == parse_term(text, sig).to_string());
  }
}

TEST_CASE("evaluation") {
  auto z3 = builtin("cyclic", 3);
  auto z2 = builtin("cyclic", 2);
  const auto& sig = z3.signature();
  std::vector<Elem> env{5, 2};
  CHECK(eval_term(x(1), z3, env) == 2);

  auto plus = parse_term("plus(x0,x1)", sig);
  std::vector<Elem> a12{1, 2};
  CHECK(eval_term(plus, z3, a12) == (1 + 2) % 3);

  auto t = parse_term("plus(plus(x0,x1),x1)", z2.signature());
  std::vector<Elem> a11{1, 1};
  CHECK(eval_term(t, z2, a11) == ((1 ^ 1) ^ 1));
  CHECK(eval_term(t, z2, a11) == oracle::eval(t, z2, {1, 1}));
}

TEST_CASE("identity checking") {
  auto z3 = builtin("cyclic", 3);
  const auto& sig = z3.signature();
  Identity assoc(parse_term("plus(plus(x0,x1),x2)", sig), parse_term("plus(x0,plus(x1,x2))", sig), 3);
  CHECK(check_identity(z3, assoc).holds());
  CHECK_FALSE(oracle::first_disagreement(z3, assoc.lhs(), assoc.rhs(), 3));

  Identity bad(parse_term("plus(x0,x1)", sig), x(0), 2);
  auto r = check_identity(z3, bad);
  auto expected = oracle::first_disagreement(z3, bad.lhs(), bad.rhs(), 2);
  REQUIRE(expected);
  CHECK(*expected == std::vector<Elem>{0, 1});
  CHECK(r.counterexample == expected);

  for (auto family : {"cyclic", "pointed_set", "chain_semilattice"}) {
    auto A = builtin(family, 2);
    CHECK(check_identity(A, Identity(x(0), x(0), 1)).holds());
  }
}

TEST_CASE("substitution") {
  auto sig = parse_signature("p/3, q/3");
  auto p = parse_term("p(x0,x1,x2)", sig);
  std::vector<Term> args{parse_term("q(x0,x1,x1)", sig), x(1), x(2)};
  CHECK(substitute(p, args).to_string() == "p(q(x0,x1,x1),x1,x2)");

  auto t = parse_term("p(x1,x0,x1)", sig);
  std::vector<Term> one{t};
  CHECK(substitute(x(0), one) == t);

  auto z = parse_signature("plus/2");
  std::vector<Term> swap{x(1), x(0)};
  CHECK(substitute(parse_term("plus(x0,x1)", z), swap) == parse_term("plus(x1,x0)", z));

  std::vector<Term> shortlist{x(0)};
  CHECK(code_of([&] { substitute(p, shortlist); }) == ErrorCode::length_mismatch);
}

TEST_CASE("evaluation commutes with substitution on random terms") {
  std::mt19937 rng(20240611);
  for (auto [family, n] : {std::pair{"cyclic", 4}, {"bool_subtraction", 2}, {"chain_semilattice", 3}, {"cyclic", 6}}) {
    auto A = builtin(family, n);
    const auto& sig = A.signature();
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t k = 3;
      auto t = random_term(rng, sig, k, 5);
      std::vector<Term> args;
      for (std::size_t i = 0; i < k; ++i) args.push_back(random_term(rng, sig, 2, 3));
      TermFn tf(t, k);
      auto composed = substitute(tf, args);
      for (std::size_t idx = 0; idx < A.size() * A.size(); ++idx) {
        auto env = oracle::nth_assignment(idx, A.size(), 2);
        std::vector<Elem> inner;
        for (const auto& s : args) inner.push_back(oracle::eval(s, A, env));
        CHECK(eval_term(composed, A, env) == oracle::eval(t, A, inner));
      }
      // printer and parser agree on every generated term
      CHECK(parse_term(t.to_string(), sig) == t);
    }
  }
}

TEST_CASE("check_identity agrees with the naive assignment loop") {
  std::mt19937 rng(7);
  for (auto [family, n] : {std::pair{"cyclic", 3}, {"bool_subtraction", 2}, {"chain_semilattice", 2}}) {
    auto A = builtin(family, n);
    for (int trial = 0; trial < 80; ++trial) {
      auto l = random_term(rng, A.signature(), 3, 3);
      auto r = random_term(rng, A.signature(), 3, 3);
      auto got = check_identity(A, Identity(l, r, 3));
      CHECK(got.counterexample == oracle::first_disagreement(A, l, r, 3));
    }
  }
}
