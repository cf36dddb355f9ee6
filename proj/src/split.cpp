#include "ualg/split.hpp"

#include <limits>

#include "ualg/error.hpp"
#include "ualg/eval.hpp"

namespace ualg {

namespace {

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

std::vector<Elem> elems(std::initializer_list<std::size_t> values) {
  std::vector<Elem> out;
  for (auto v : values) out.push_back(static_cast<Elem>(v));
  return out;
}

// records the first failure only, so the counterexample is the least one in loop order
void fail(Check& c, std::vector<Elem> counterexample) {
  if (!c.pass) return;
  c.pass = false;
  c.counterexample = std::move(counterexample);
}

void require_arity(const TermFn& f, std::size_t arity, const char* role) {
  if (f.arity() != arity)
    throw Error(ErrorCode::arity_mismatch, std::string(role) + " must have arity " + std::to_string(arity));
}

bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y) { return x == y || *x == *y; }

// row-major offset of a tuple in a table over a carrier of size n
std::size_t offset(std::span<const Elem> args, std::size_t n) {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * n + a;
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// SetMap and certificates

SetMap::SetMap(std::size_t dom_size, std::size_t cod_size, std::vector<Elem> map)
    : dom_size_(dom_size), cod_size_(cod_size), map_(std::move(map)) {
  if (map_.size() != dom_size_)
    throw Error(ErrorCode::length_mismatch, "map has " + std::to_string(map_.size()) + " entries for a domain of " +
                                                std::to_string(dom_size_));
  for (Elem v : map_)
    if (v >= cod_size_) throw Error(ErrorCode::out_of_range, "map value " + std::to_string(v) + " outside codomain");
}

bool SetMap::injective() const {
  std::vector<bool> seen(cod_size_, false);
  for (Elem v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

SetMap SetMap::with_entry(std::size_t i, Elem value) const {
  auto copy = map_;
  copy.at(i) = value;
  return SetMap(dom_size_, cod_size_, std::move(copy));
}

bool Certificate::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Certificate::append(const Certificate& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

// ---------------------------------------------------------------------------
// Split epis and extensions

SplitEpi::SplitEpi(Homomorphism alpha, Homomorphism beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!same_algebra(alpha_.cod(), beta_.dom()) || !same_algebra(beta_.cod(), alpha_.dom()))
    throw Error(ErrorCode::precondition, "alpha and beta do not compose");
  for (std::size_t b = 0; b < alpha_.cod()->size(); ++b)
    if (alpha_(beta_(static_cast<Elem>(b))) != b)
      throw Error(ErrorCode::precondition, "alpha beta differs from the identity at " + std::to_string(b));
}

std::vector<SplitEpi> enumerate_split_epis(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t limit) {
  std::vector<SplitEpi> out;
  if (limit == 0) return out;
  auto alphas = find_homomorphisms(a, b, kNoLimit);
  auto betas = find_homomorphisms(b, a, kNoLimit);
  for (const auto& alpha : alphas)
    for (const auto& beta : betas) {
      bool section = true;
      for (std::size_t y = 0; y < b->size() && section; ++y) section = alpha(beta(static_cast<Elem>(y))) == y;
      if (!section) continue;
      out.emplace_back(alpha, beta);
      if (out.size() == limit) return out;
    }
  return out;
}

namespace {

SubsetAlgebra kernel_of(const SplitEpi& epi) {
  auto zero = epi.b()->zero();
  if (!zero) throw Error(ErrorCode::precondition, "split extensions need a designated constant");
  return kernel(epi.alpha(), *zero);
}

}  // namespace

SplitExtension::SplitExtension(SplitEpi epi) : epi_(std::move(epi)), kernel_(kernel_of(epi_)) {}

// ---------------------------------------------------------------------------
// Pointed decomposition

SetMap phi_pointed(const SplitExtension& ext, const TermFn& plus) {
  require_arity(plus, 2, "plus");
  const auto& A = ext.a();
  const std::size_t na = A.size(), nb = ext.b().size();
  const auto table = term_table(plus, A);
  std::vector<Elem> map(ext.k_size() * nb);
  for (std::size_t k = 0; k < ext.k_size(); ++k)
    for (std::size_t b = 0; b < nb; ++b)
      map[ext.kb_index(k, static_cast<Elem>(b))] =
          table[ext.kappa()(static_cast<Elem>(k)) * na + ext.epi().beta()(static_cast<Elem>(b))];
  return SetMap(ext.k_size() * nb, na, std::move(map));
}

PointedInverse psi_pointed(const SplitExtension& ext, const TermFn& minus) {
  require_arity(minus, 2, "minus");
  const auto& A = ext.a();
  const std::size_t na = A.size(), nb = ext.b().size();
  const auto& alpha = ext.epi().alpha();
  const auto& beta = ext.epi().beta();
  const auto table = term_table(minus, A);
  std::vector<Elem> lambda(na), psi(na);
  for (std::size_t a = 0; a < na; ++a) {
    const Elem l = table[a * na + beta(alpha(static_cast<Elem>(a)))];
    if (!ext.kernel().contains(l)) return {std::nullopt, std::nullopt, static_cast<Elem>(a)};
    lambda[a] = ext.kernel().position(l);
    psi[a] = static_cast<Elem>(ext.kb_index(lambda[a], alpha(static_cast<Elem>(a))));
  }
  return {SetMap(na, ext.k_size() * nb, std::move(psi)), SetMap(na, ext.k_size(), std::move(lambda)), std::nullopt};
}

namespace {

Check bijectivity(const SetMap& f, const std::string& name) {
  Check c{name};
  std::vector<std::optional<std::size_t>> preimage(f.cod_size());
  for (std::size_t i = 0; i < f.dom_size(); ++i) {
    if (preimage[f(i)]) {
      fail(c, elems({*preimage[f(i)], i}));
      return c;
    }
    preimage[f(i)] = i;
  }
  for (std::size_t y = 0; y < f.cod_size(); ++y)
    if (!preimage[y]) fail(c, elems({y}));
  return c;
}

}  // namespace

Certificate verify_splext_morphism(const SetMap& phi, const SplitExtension& ext) {
  const std::size_t na = ext.a().size(), nb = ext.b().size();
  if (phi.dom_size() != ext.k_size() * nb || phi.cod_size() != na)
    throw Error(ErrorCode::precondition, "phi must map K x B to A");
  const auto& alpha = ext.epi().alpha();
  const auto& beta = ext.epi().beta();
  const Elem zero_a = *ext.a().zero();
  const Elem zero_b = *ext.b().zero();
  const Elem zero_k = ext.kernel().position(zero_a);

  Check over_base{"alpha_phi=pi2"}, unit_b{"phi(0,b)=beta(b)"}, unit_k{"phi(k,0)=kappa(k)"};
  for (std::size_t k = 0; k < ext.k_size(); ++k)
    for (std::size_t b = 0; b < nb; ++b)
      if (alpha(phi(ext.kb_index(k, static_cast<Elem>(b)))) != b)
        fail(over_base, elems({ext.kappa()(static_cast<Elem>(k)), b}));
  for (std::size_t b = 0; b < nb; ++b)
    if (phi(ext.kb_index(zero_k, static_cast<Elem>(b))) != beta(static_cast<Elem>(b))) fail(unit_b, elems({b}));
  for (std::size_t k = 0; k < ext.k_size(); ++k)
    if (phi(ext.kb_index(k, zero_b)) != ext.kappa()(static_cast<Elem>(k)))
      fail(unit_k, elems({ext.kappa()(static_cast<Elem>(k))}));
  return {{over_base, unit_b, unit_k, bijectivity(phi, "bijective")}};
}

Certificate verify_mutually_inverse(const SetMap& f, const SetMap& g, const std::string& f_name,
                                    const std::string& g_name) {
  Check gf{g_name + "_" + f_name + "=1"}, fg{f_name + "_" + g_name + "=1"};
  if (f.dom_size() != g.cod_size() || f.cod_size() != g.dom_size()) {
    gf.pass = fg.pass = false;
    return {{gf, fg}};
  }
  for (std::size_t i = 0; i < f.dom_size(); ++i)
    if (g(f(i)) != i) fail(gf, elems({i}));
  for (std::size_t i = 0; i < g.dom_size(); ++i)
    if (f(g(i)) != i) fail(fg, elems({i}));
  return {{gf, fg}};
}

// ---------------------------------------------------------------------------
// General decomposition

GeneralDecomposition phi_general(const SplitEpi& s, const Homomorphism& f, const TermFn& p, const TermFn& q) {
  require_arity(p, 3, "p");
  require_arity(q, 3, "q");
  if (!same_algebra(f.cod(), s.b())) throw Error(ErrorCode::precondition, "f must land in the base of the split epi");
  const auto& A = *s.a();
  const std::size_t na = A.size(), nb = s.b()->size(), ne = f.dom()->size();
  const auto& alpha = s.alpha();
  const auto& beta = s.beta();
  auto pb = pullback_fiber(alpha, f);
  const auto& fiber = pb.fiber;
  const std::size_t nf = fiber.size();
  const auto ptab = term_table(p, A);
  const auto qtab = term_table(q, A);
  auto at = [na](std::size_t a, std::size_t b, std::size_t c) { return (a * na + b) * na + c; };

  std::vector<Elem> phi(nf * nb);
  for (std::size_t pos = 0; pos < nf; ++pos) {
    const std::size_t a = fiber.elements()[pos] / ne, e = fiber.elements()[pos] % ne;
    for (std::size_t b = 0; b < nb; ++b)
      phi[pos * nb + b] =
          static_cast<Elem>(e * na + ptab[at(a, beta(f(static_cast<Elem>(e))), beta(static_cast<Elem>(b)))]);
  }
  SetMap phi_map(nf * nb, ne * na, std::move(phi));

  Certificate cert;
  Check lands{"psi_lands_in_pullback"};
  std::vector<Elem> psi(ne * na);
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t a = 0; a < na; ++a) {
      const Elem a2 = qtab[at(a, beta(alpha(static_cast<Elem>(a))), beta(f(static_cast<Elem>(e))))];
      const Elem point = static_cast<Elem>(a2 * ne + e);
      if (!fiber.contains(point)) {
        fail(lands, elems({e, a}));
        continue;
      }
      psi[e * na + a] = static_cast<Elem>(fiber.position(point) * nb + alpha(static_cast<Elem>(a)));
    }
  cert.checks.push_back(lands);

  std::optional<SetMap> psi_map;
  if (lands.pass) {
    psi_map.emplace(ne * na, nf * nb, std::move(psi));
    cert.append(verify_mutually_inverse(phi_map, *psi_map, "phi", "psi"));
  } else {
    cert.checks.push_back({"psi_phi=1", false, std::nullopt});
    cert.checks.push_back({"phi_psi=1", false, std::nullopt});
  }

  Check over_base{"(1 x alpha)phi=pi2 x 1"};
  for (std::size_t pos = 0; pos < nf; ++pos) {
    const std::size_t a = fiber.elements()[pos] / ne, e = fiber.elements()[pos] % ne;
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem v = phi_map(pos * nb + b);
      if (v / na != e || alpha(static_cast<Elem>(v % na)) != b) fail(over_base, elems({a, e, b}));
    }
  }
  cert.checks.push_back(over_base);

  Check section{"phi(<beta f,1> x 1)=1 x beta"};
  for (std::size_t e = 0; e < ne; ++e) {
    const Elem point = static_cast<Elem>(beta(f(static_cast<Elem>(e))) * ne + e);
    const std::size_t pos = fiber.position(point);
    for (std::size_t b = 0; b < nb; ++b)
      if (phi_map(pos * nb + b) != e * na + beta(static_cast<Elem>(b))) fail(section, elems({e, b}));
  }
  cert.checks.push_back(section);
  cert.checks.push_back(bijectivity(phi_map, "phi_bijective"));
  return {std::move(pb), std::move(phi_map), std::move(psi_map), std::move(cert)};
}

FiberBijection fiber_bijection(const Homomorphism& f, const TermFn& p, Elem b, Elem b2, Elem e, Elem e2) {
  require_arity(p, 3, "p");
  const auto& E = *f.dom();
  const std::size_t ne = E.size();
  if (!f.surjective()) throw Error(ErrorCode::precondition, "fiber_bijection needs a surjective homomorphism");
  if (b >= f.cod()->size() || b2 >= f.cod()->size()) throw Error(ErrorCode::precondition, "b outside the codomain");
  if (e >= ne || e2 >= ne || f(e) != b || f(e2) != b2)
    throw Error(ErrorCode::precondition, "e and e' must lie over b and b'");

  FiberBijection out;
  for (std::size_t v = 0; v < ne; ++v) {
    if (f(static_cast<Elem>(v)) == b) out.source.push_back(static_cast<Elem>(v));
    if (f(static_cast<Elem>(v)) == b2) out.target.push_back(static_cast<Elem>(v));
  }
  const auto table = term_table(p, E);
  Check inside{"image_in_fiber"}, bij{"bijective"};
  std::vector<bool> hit(ne, false);
  for (Elem v : out.source) {
    const Elem img = table[(v * ne + e) * ne + e2];
    out.image.push_back(img);
    if (f(img) != b2) fail(inside, elems({v}));
    if (hit[img]) fail(bij, elems({v}));
    hit[img] = true;
  }
  for (Elem t : out.target)
    if (!hit[t]) fail(bij, elems({t}));
  out.certificate.checks = {inside, bij};
  return out;
}

// ---------------------------------------------------------------------------
// General components

GeneralComponent general_component(const RhoSigmaFamily& fam, const SplitEpi& s, ComponentOptions options) {
  fam.validate();
  const auto& A = *s.a();
  const auto& B = *s.b();
  const std::size_t na = A.size(), nb = B.size(), m = fam.m, n = fam.n;
  const auto& alpha = s.alpha();
  const auto& beta = s.beta();
  const auto na_n = checked_power(na, n);
  const auto nb_m = checked_power(nb, m);
  if (!na_n || !nb_m || *na_n * *nb_m > kMaxTableEntries)
    throw Error(ErrorCode::out_of_range, "component carriers too large");

  std::vector<std::vector<Elem>> theta_b, sigma_a;
  for (const auto& t : fam.theta) theta_b.push_back(term_table(t, B));
  for (const auto& t : fam.sigma) sigma_a.push_back(term_table(t, A));
  const auto rho_a = term_table(fam.rho, A);

  // pullback points in row-major order of A^n x B^m
  constexpr Elem absent = ~Elem{0};
  std::vector<Elem> position(*na_n * *nb_m, absent);
  std::vector<std::vector<Elem>> points;
  std::vector<std::pair<std::size_t, std::size_t>> point_index;  // (aidx, yidx)
  for (std::size_t aidx = 0; aidx < *na_n; ++aidx) {
    const auto as = decode_assignment(aidx, na, n);
    for (std::size_t yidx = 0; yidx < *nb_m; ++yidx) {
      bool in = true;
      for (std::size_t i = 0; i < n && in; ++i) in = alpha(as[i]) == theta_b[i][yidx];
      if (!in) continue;
      position[aidx * *nb_m + yidx] = static_cast<Elem>(points.size());
      auto pt = as;
      auto ys = decode_assignment(yidx, nb, m);
      pt.insert(pt.end(), ys.begin(), ys.end());
      points.push_back(std::move(pt));
      point_index.emplace_back(aidx, yidx);
    }
  }
  const std::size_t v_size = points.size() * nb, w_size = *nb_m * na;

  auto beta_ys = [&](std::size_t yidx) {
    auto ys = decode_assignment(yidx, nb, m);
    for (auto& y : ys) y = beta(y);
    return ys;
  };
  auto rho = [&](std::span<const Elem> as, std::size_t yidx, Elem z) {
    std::vector<Elem> args(as.begin(), as.end());
    auto bys = beta_ys(yidx);
    args.insert(args.end(), bys.begin(), bys.end());
    args.push_back(z);
    return rho_a[offset(args, na)];
  };
  auto sigma = [&](std::size_t i, std::size_t yidx, Elem x, Elem z) {
    auto args = beta_ys(yidx);
    args.push_back(x);
    args.push_back(z);
    return sigma_a[i][offset(args, na)];
  };
  auto with_tail = [](std::vector<Elem> v, std::initializer_list<std::size_t> tail) {
    for (auto t : tail) v.push_back(static_cast<Elem>(t));
    return v;
  };

  Certificate cert;
  Check over_base{"tau_over_base"};
  std::vector<Elem> tau(v_size);
  for (std::size_t pos = 0; pos < points.size(); ++pos) {
    const auto [aidx, yidx] = point_index[pos];
    const auto as = decode_assignment(aidx, na, n);
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem v = rho(as, yidx, beta(static_cast<Elem>(b)));
      tau[pos * nb + b] = static_cast<Elem>(yidx * na + v);
      if (alpha(v) != b) fail(over_base, with_tail(points[pos], {b}));
    }
  }
  SetMap tau_map(v_size, w_size, std::move(tau));
  cert.checks.push_back(over_base);

  // tau and gamma on the image of the section (y,b) -> ((beta theta(y), y), b)
  Check tau_section{"tau_section"}, gamma_section{"gamma_section"};
  for (std::size_t yidx = 0; yidx < *nb_m; ++yidx) {
    std::vector<Elem> bt(n);
    for (std::size_t i = 0; i < n; ++i) bt[i] = beta(theta_b[i][yidx]);
    const auto ys = decode_assignment(yidx, nb, m);
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem bb = beta(static_cast<Elem>(b));
      if (rho(bt, yidx, bb) != bb) fail(tau_section, with_tail(ys, {b}));
      for (std::size_t i = 0; i < n; ++i)
        if (sigma(i, yidx, bb, bb) != bt[i]) fail(gamma_section, with_tail(ys, {b}));
    }
  }
  cert.checks.push_back(tau_section);

  Check lands{"gamma_lands_in_pullback"};
  std::vector<Elem> gamma(w_size);
  for (std::size_t yidx = 0; yidx < *nb_m; ++yidx)
    for (std::size_t a = 0; a < na; ++a) {
      const Elem ba = beta(alpha(static_cast<Elem>(a)));
      std::vector<Elem> xs(n);
      bool in = true;
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = sigma(i, yidx, static_cast<Elem>(a), ba);
        in = in && alpha(xs[i]) == theta_b[i][yidx];
      }
      if (!in) {
        fail(lands, with_tail(decode_assignment(yidx, nb, m), {a}));
        continue;
      }
      const Elem pos = position[offset(xs, na) * *nb_m + yidx];
      gamma[yidx * na + a] = static_cast<Elem>(pos * nb + alpha(static_cast<Elem>(a)));
    }
  cert.checks.push_back(lands);
  cert.checks.push_back(gamma_section);

  std::optional<SetMap> gamma_map;
  if (lands.pass) gamma_map.emplace(w_size, v_size, std::move(gamma));

  if (options.check_tau_gamma) {
    Check c{"tau_gamma=1_W"};
    if (!gamma_map) c.pass = false;
    else
      for (std::size_t w = 0; w < w_size; ++w)
        if (tau_map((*gamma_map)(w)) != w)
          fail(c, with_tail(decode_assignment(w / na, nb, m), {w % na}));
    cert.checks.push_back(c);
  }
  if (options.check_gamma_tau) {
    Check c{"gamma_tau=1_V"};
    if (!gamma_map) c.pass = false;
    else
      for (std::size_t v = 0; v < v_size; ++v)
        if ((*gamma_map)(tau_map(v)) != v) fail(c, with_tail(points[v / nb], {v % nb}));
    cert.checks.push_back(c);
  }

  GeneralComponent out{m, n, std::move(points), false, std::move(tau_map), std::move(gamma_map), std::move(cert)};
  out.empty_pullback = out.pullback.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Naturality

std::vector<SplExtMorphism> enumerate_splext_morphisms(const SplitExtension& from, const SplitExtension& to,
                                                       std::size_t limit) {
  std::vector<SplExtMorphism> out;
  if (limit == 0) return out;
  const auto& e1 = from.epi();
  const auto& e2 = to.epi();
  auto vs = find_homomorphisms(e1.a(), e2.a(), kNoLimit);
  auto ws = find_homomorphisms(e1.b(), e2.b(), kNoLimit);
  for (const auto& v : vs)
    for (const auto& w : ws) {
      bool ok = true;
      for (std::size_t a = 0; a < e1.a()->size() && ok; ++a)
        ok = e2.alpha()(v(static_cast<Elem>(a))) == w(e1.alpha()(static_cast<Elem>(a)));
      for (std::size_t b = 0; b < e1.b()->size() && ok; ++b)
        ok = v(e1.beta()(static_cast<Elem>(b))) == e2.beta()(w(static_cast<Elem>(b)));
      if (!ok) continue;
      std::vector<Elem> u(from.k_size());
      for (std::size_t k = 0; k < from.k_size() && ok; ++k) {
        const Elem img = v(from.kappa()(static_cast<Elem>(k)));
        ok = to.kernel().contains(img);
        if (ok) u[k] = to.kernel().position(img);
      }
      if (!ok) continue;
      out.push_back({Homomorphism(from.kernel().compact(), to.kernel().compact(), std::move(u)), v, w});
      if (out.size() == limit) return out;
    }
  return out;
}

Certificate check_splext_morphism(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor) {
  const auto& e1 = from.epi();
  const auto& e2 = to.epi();
  if (!same_algebra(mor.v.dom(), e1.a()) || !same_algebra(mor.v.cod(), e2.a()) ||
      !same_algebra(mor.w.dom(), e1.b()) || !same_algebra(mor.w.cod(), e2.b()) ||
      mor.u.dom()->size() != from.k_size() || mor.u.cod()->size() != to.k_size())
    throw Error(ErrorCode::precondition, "morphism components do not match the extensions");
  Check kernels{"v kappa=kappa' u"}, bases{"alpha' v=w alpha"}, sections{"v beta=beta' w"};
  for (std::size_t k = 0; k < from.k_size(); ++k) {
    const Elem kk = static_cast<Elem>(k);
    if (mor.v(from.kappa()(kk)) != to.kappa()(mor.u(kk))) fail(kernels, elems({from.kappa()(kk)}));
  }
  for (std::size_t a = 0; a < e1.a()->size(); ++a)
    if (e2.alpha()(mor.v(static_cast<Elem>(a))) != mor.w(e1.alpha()(static_cast<Elem>(a)))) fail(bases, elems({a}));
  for (std::size_t b = 0; b < e1.b()->size(); ++b)
    if (mor.v(e1.beta()(static_cast<Elem>(b))) != e2.beta()(mor.w(static_cast<Elem>(b)))) fail(sections, elems({b}));
  return {{kernels, bases, sections}};
}

Certificate check_naturality(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor,
                             const SetMap& phi, const SetMap& phi2) {
  Certificate cert = check_splext_morphism(from, to, mor);
  if (!cert.pass()) return cert;
  const std::size_t nb = from.b().size();
  if (phi.dom_size() != from.k_size() * nb || phi2.dom_size() != to.k_size() * to.b().size())
    throw Error(ErrorCode::precondition, "components do not match the extensions");
  Check nat{"phi'(u x w)=v phi"};
  for (std::size_t k = 0; k < from.k_size(); ++k)
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem kk = static_cast<Elem>(k), bb = static_cast<Elem>(b);
      if (phi2(to.kb_index(mor.u(kk), mor.w(bb))) != mor.v(phi(from.kb_index(k, bb))))
        fail(nat, elems({from.kappa()(kk), b}));
    }
  cert.checks.push_back(nat);
  return cert;
}

Certificate check_naturality(const SplitExtension& from, const SplitExtension& to, const SplExtMorphism& mor,
                             const ComponentBuilder& build) {
  return check_naturality(from, to, mor, build(from), build(to));
}

}  // namespace ualg
