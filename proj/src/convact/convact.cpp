#include "homhopf/convact.hpp"

#include "homhopf/tensor_expr.hpp"

namespace homhopf {

namespace {

LinearMap shaped(const LinearMap& f, const Space& dom, const Space& cod, const std::string& role) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
    throw MalformedStructure(role + " must be " + std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()));
  }
  return f.relabel(dom, cod);
}

}  // namespace

ModuleAction::ModuleAction(HomBialgebra acting, HomAlgebra target, const LinearMap& act)
    : acting_(std::move(acting)),
      target_(std::move(target)),
      act_(shaped(act, Space::tensor(acting_.space(), target_.space()), target_.space(), "action")) {}

ModuleAction ModuleAction::trivial(const HomBialgebra& h, const HomAlgebra& a) {
  return ModuleAction(h, a, tensor(h.counit(), a.alpha()));
}

Coaction::Coaction(HomBialgebra coacting, HomCoalgebra target, const LinearMap& coact)
    : coacting_(std::move(coacting)),
      target_(std::move(target)),
      coact_(shaped(coact, target_.space(), Space::tensor(coacting_.space(), target_.space()), "coaction")) {}

Coaction Coaction::trivial(const HomBialgebra& h, const HomCoalgebra& c) {
  return Coaction(h, c, tensor(h.unit(), c.gamma().inverse()));
}

Coaction Coaction::regular(const HomBialgebra& h) { return Coaction(h, h.coalgebra(), h.comult()); }

Cocycle::Cocycle(HomBialgebra source, HomAlgebra target, const LinearMap& sigma, std::optional<LinearMap> inverse)
    : source_(std::move(source)),
      target_(std::move(target)),
      sigma_(shaped(sigma, Space::tensor(source_.space(), source_.space()), target_.space(), "cocycle")) {
  if (inverse) inverse_ = shaped(*inverse, sigma_.domain(), sigma_.codomain(), "cocycle inverse");
}

Cocycle Cocycle::trivial(const HomBialgebra& h, const HomAlgebra& a) {
  return Cocycle(h, a, compose(a.unit(), tensor(h.counit(), h.counit())));
}

CheckReport check_weak_module_algebra(const ModuleAction& act) {
  const HomBialgebra& h = act.acting();
  const HomAlgebra& a = act.target();
  const LinearMap& t = act.act();
  const Space& x = a.space();
  std::vector<CheckReport> parts;

  Space hxx = Space::tensor({h.space(), x, x});
  TensorExpr lhs(hxx, {"h", "a", "b"});
  lhs.apply(a.mult(), {"a", "b"}, {"ab"}).apply(t, {"h", "ab"}, {"r"});
  TensorExpr rhs(hxx, {"h", "a", "b"});
  rhs.apply(h.comult(), {"h"}, {"h1", "h2"}).apply(t, {"h1", "a"}, {"u"}).apply(t, {"h2", "b"}, {"v"});
  rhs.apply(a.mult(), {"u", "v"}, {"r"});
  parts.push_back(maps_equal(lhs.collect({"r"}, x), rhs.collect({"r"}, x), "action-multiplicative"));

  TensorExpr one(h.space(), {"h"});
  one.apply(a.unit(), {}, {"u"}).apply(t, {"h", "u"}, {"r"});
  parts.push_back(maps_equal(one.collect({"r"}, x), compose(a.unit(), h.counit()), "action-unital"));

  return CheckReport::aggregate("weak-module-algebra", std::move(parts));
}

CheckReport check_hom_module(const ModuleAction& act) {
  const HomBialgebra& h = act.acting();
  const HomAlgebra& a = act.target();
  const LinearMap& t = act.act();
  const Space& x = a.space();
  std::vector<CheckReport> parts;

  TensorExpr unit(x, {"a"});
  unit.apply(h.unit(), {}, {"u"}).apply(t, {"u", "a"}, {"r"});
  parts.push_back(maps_equal(unit.collect({"r"}, x), a.alpha(), "module-unit"));

  parts.push_back(maps_equal(compose(a.alpha(), t), compose(t, tensor(h.alpha(), a.alpha())), "module-structure-map"));

  Space hhx = Space::tensor({h.space(), h.space(), x});
  TensorExpr lhs(hhx, {"h", "l", "a"});
  lhs.apply(t, {"l", "a"}, {"la"}).map("h", h.alpha()).apply(t, {"h", "la"}, {"r"});
  TensorExpr rhs(hhx, {"h", "l", "a"});
  rhs.apply(h.mult(), {"h", "l"}, {"hl"}).map("a", a.alpha()).apply(t, {"hl", "a"}, {"r"});
  parts.push_back(maps_equal(lhs.collect({"r"}, x), rhs.collect({"r"}, x), "module-associative"));

  return CheckReport::aggregate("hom-module", std::move(parts));
}

CheckReport check_comodule(const Coaction& co) {
  const HomBialgebra& h = co.coacting();
  const HomCoalgebra& c = co.target();
  const LinearMap& rho = co.coact();
  const Space& x = c.space();
  const LinearMap& mu_inv = c.gamma().inverse();
  std::vector<CheckReport> parts;

  TensorExpr counit(x, {"c"});
  counit.apply(rho, {"c"}, {"cm", "c0"}).apply(h.counit(), {"cm"}, {});
  parts.push_back(maps_equal(counit.collect({"c0"}, x), mu_inv, "comodule-counit"));

  parts.push_back(maps_equal(compose(rho, c.gamma()), compose(tensor(h.alpha(), c.gamma()), rho), "comodule-structure-map"));

  Space hhx = Space::tensor({h.space(), h.space(), x});
  TensorExpr lhs(x, {"c"});
  lhs.apply(rho, {"c"}, {"cm", "c0"}).apply(h.comult(), {"cm"}, {"cm1", "cm2"}).map("c0", mu_inv);
  TensorExpr rhs(x, {"c"});
  rhs.apply(rho, {"c"}, {"cm", "c0"}).map("cm", h.alpha().inverse()).apply(rho, {"c0"}, {"c0m", "c00"});
  parts.push_back(maps_equal(lhs.collect({"cm1", "cm2", "c0"}, hhx), rhs.collect({"cm", "c0m", "c00"}, hhx),
                             "comodule-coassociative"));

  return CheckReport::aggregate("hom-comodule", std::move(parts));
}

CheckReport check_comodule_coalgebra(const Coaction& co) {
  const HomBialgebra& h = co.coacting();
  const HomCoalgebra& c = co.target();
  const LinearMap& rho = co.coact();
  const Space& x = c.space();
  std::vector<CheckReport> parts;

  TensorExpr eps(x, {"c"});
  eps.apply(rho, {"c"}, {"cm", "c0"}).apply(c.counit(), {"c0"}, {});
  parts.push_back(maps_equal(eps.collect({"cm"}, h.space()), compose(h.unit(), c.counit()), "comodule-coalgebra-counit"));

  Space hxx = Space::tensor({h.space(), x, x});
  TensorExpr lhs(x, {"c"});
  lhs.apply(rho, {"c"}, {"cm", "c0"}).apply(c.comult(), {"c0"}, {"c01", "c02"});
  TensorExpr rhs(x, {"c"});
  rhs.apply(c.comult(), {"c"}, {"c1", "c2"}).apply(rho, {"c1"}, {"c1m", "c10"}).apply(rho, {"c2"}, {"c2m", "c20"});
  rhs.apply(h.mult(), {"c1m", "c2m"}, {"p"});
  parts.push_back(maps_equal(lhs.collect({"cm", "c01", "c02"}, hxx), rhs.collect({"p", "c10", "c20"}, hxx),
                             "comodule-coalgebra-comult"));

  return CheckReport::aggregate("comodule-coalgebra", {check_comodule(co), CheckReport::aggregate("comodule-coalgebra-laws", std::move(parts))});
}

LinearMap convolve(const LinearMap& f, const LinearMap& g, const HomCoalgebra& c, const HomAlgebra& a) {
  if (f.cols() != c.space().dim() || g.cols() != c.space().dim() || f.rows() != a.space().dim() ||
      g.rows() != a.space().dim()) {
    throw DimensionMismatch("convolution factors must map the coalgebra to the algebra");
  }
  LinearMap ff = f.relabel(c.space(), a.space());
  LinearMap gg = g.relabel(c.space(), a.space());
  TensorExpr e(c.space(), {"c"});
  e.apply(c.comult(), {"c"}, {"c1", "c2"}).map("c1", ff).map("c2", gg).apply(a.mult(), {"c1", "c2"}, {"r"});
  return e.collect({"r"}, a.space());
}

ConvolutionInverse solve_convolution_inverse(const LinearMap& f, const HomCoalgebra& c, const HomAlgebra& a) {
  const std::size_t dc = c.space().dim();
  const std::size_t da = a.space().dim();
  const std::size_t unknowns = da * dc;
  const std::size_t eqs = 2 * da * dc;
  const LinearMap target = unit_counit(c, a);
  // Both products are linear in g; column u of the system is the pair (f∗E_u, E_u∗f).
  Matrix sys(eqs, std::vector<Scalar>(unknowns));
  for (std::size_t u = 0; u < unknowns; ++u) {
    LinearMap e = LinearMap(c.space(), a.space()).with_entry(u / dc, u % dc, Scalar(1));
    LinearMap l = convolve(f, e, c, a);
    LinearMap r = convolve(e, f, c, a);
    for (std::size_t q = 0; q < da * dc; ++q) {
      sys[q][u] = l.entries()[q];
      sys[da * dc + q][u] = r.entries()[q];
    }
  }
  std::vector<Scalar> rhs(eqs);
  for (std::size_t q = 0; q < da * dc; ++q) rhs[q] = rhs[da * dc + q] = target.entries()[q];
  SolveResult res = solve_linear(sys, rhs);
  if (auto* bad = std::get_if<NoSolution>(&res)) {
    throw NotInvertible("map is not convolution invertible (equation " + std::to_string(bad->row) + " inconsistent)",
                        bad->row);
  }
  auto& sol = std::get<LinearSolution>(res);
  return {LinearMap(c.space(), a.space(), std::move(sol.x)), sol.nullity};
}

LinearMap convolution_inverse(const LinearMap& f, const HomCoalgebra& c, const HomAlgebra& a) {
  return solve_convolution_inverse(f, c, a).map;
}

Cocycle cocycle_inverse(const Cocycle& sigma) {
  const HomCoalgebra& h = sigma.source().coalgebra();
  HomCoalgebra hh = tensor_coalgebra(h, h);
  LinearMap inv = convolution_inverse(sigma.sigma().relabel(hh.space(), sigma.target().space()), hh, sigma.target());
  return Cocycle(sigma.source(), sigma.target(), sigma.sigma(), inv);
}

}  // namespace homhopf
