#include "homhopf/homcore.hpp"

#include "homhopf/tensor_expr.hpp"

namespace homhopf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw MalformedStructure(what);
}

LinearMap shaped(const LinearMap& f, const Space& dom, const Space& cod, const std::string& role) {
  require(f.cols() == dom.dim() && f.rows() == cod.dim(),
          role + " must be " + std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()) + ", got " +
              std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  return f.relabel(dom, cod);
}

LinearMap checked_structure_map(const LinearMap& f, const Space& x, const std::string& role) {
  LinearMap g = shaped(f, x, x, role);
  require(g.is_invertible(), role + " is not invertible");
  return g;
}

}  // namespace

HomAlgebra::HomAlgebra(Space space, const LinearMap& mult, const LinearMap& unit, const LinearMap& alpha)
    : space_(space),
      mult_(shaped(mult, Space::tensor(space, space), space, "multiplication")),
      unit_(shaped(unit, Space::ground(), space, "unit")),
      alpha_(checked_structure_map(alpha, space, "structure map")) {}

const Scalar& HomAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t d = space_.dim();
  if (i >= d || j >= d || k >= d) throw OutOfRange("structure constant index out of range");
  return mult_.at(k, i * d + j);
}

HomCoalgebra::HomCoalgebra(Space space, const LinearMap& comult, const LinearMap& counit, const LinearMap& gamma)
    : space_(space),
      comult_(shaped(comult, space, Space::tensor(space, space), "comultiplication")),
      counit_(shaped(counit, space, Space::ground(), "counit")),
      gamma_(checked_structure_map(gamma, space, "structure map")) {}

const Scalar& HomCoalgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t d = space_.dim();
  if (i >= d || j >= d || k >= d) throw OutOfRange("structure constant index out of range");
  return comult_.at(j * d + k, i);
}

HomBialgebra::HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
  require(algebra_.space() == coalgebra_.space(), "algebra and coalgebra live on different spaces");
  require(algebra_.alpha() == coalgebra_.gamma(), "algebra and coalgebra structure maps differ");
}

HomHopf::HomHopf(HomBialgebra bialgebra, const LinearMap& antipode)
    : bialgebra_(std::move(bialgebra)),
      antipode_(shaped(antipode, bialgebra_.space(), bialgebra_.space(), "antipode")) {}

LinearMap flip(const Space& x, const Space& y) {
  TensorExpr e(Space::tensor(x, y), {"x", "y"});
  return e.collect({"y", "x"}, Space::tensor(y, x));
}

LinearMap unit_counit(const HomCoalgebra& c, const HomAlgebra& a) { return compose(a.unit(), c.counit()); }

HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  Space x = Space::fuse({a.space(), b.space()});
  TensorExpr m(Space::tensor(x, x), {"a", "b", "c", "d"});
  m.apply(a.mult(), {"a", "c"}, {"ac"}).apply(b.mult(), {"b", "d"}, {"bd"});
  TensorExpr u(Space::ground(), {});
  u.apply(a.unit(), {}, {"u"}).apply(b.unit(), {}, {"v"});
  return HomAlgebra(x, m.collect({"ac", "bd"}, x), u.collect({"u", "v"}, x),
                    tensor(a.alpha(), b.alpha()).relabel(x, x));
}

HomCoalgebra tensor_coalgebra(const HomCoalgebra& a, const HomCoalgebra& b) {
  Space x = Space::fuse({a.space(), b.space()});
  TensorExpr d(x, {"a", "b"});
  d.apply(a.comult(), {"a"}, {"a1", "a2"}).apply(b.comult(), {"b"}, {"b1", "b2"});
  TensorExpr e(x, {"a", "b"});
  e.apply(a.counit(), {"a"}, {}).apply(b.counit(), {"b"}, {});
  return HomCoalgebra(x, d.collect({"a1", "b1", "a2", "b2"}, Space::tensor(x, x)), e.collect({}, Space::ground()),
                      tensor(a.gamma(), b.gamma()).relabel(x, x));
}

CheckReport check_hom_algebra(const HomAlgebra& a) {
  const Space& x = a.space();
  const LinearMap& m = a.mult();
  const LinearMap& al = a.alpha();
  std::vector<CheckReport> parts;

  parts.push_back(maps_equal(compose(al, a.unit()), a.unit(), "hom-unit-invariant"));

  TensorExpr right(x, {"a"});
  right.apply(a.unit(), {}, {"u"}).apply(m, {"a", "u"}, {"r"});
  parts.push_back(maps_equal(right.collect({"r"}, x), al, "hom-unit-right"));

  TensorExpr left(x, {"a"});
  left.apply(a.unit(), {}, {"u"}).apply(m, {"u", "a"}, {"r"});
  parts.push_back(maps_equal(left.collect({"r"}, x), al, "hom-unit-left"));

  parts.push_back(maps_equal(compose(al, m), compose(m, tensor(al, al)), "hom-multiplicative"));

  Space xxx = Space::tensor({x, x, x});
  TensorExpr lhs(xxx, {"a", "b", "c"});
  lhs.apply(m, {"b", "c"}, {"bc"}).map("a", al).apply(m, {"a", "bc"}, {"r"});
  TensorExpr rhs(xxx, {"a", "b", "c"});
  rhs.apply(m, {"a", "b"}, {"ab"}).map("c", al).apply(m, {"ab", "c"}, {"r"});
  parts.push_back(maps_equal(lhs.collect({"r"}, x), rhs.collect({"r"}, x), "hom-associative"));

  return CheckReport::aggregate("hom-algebra", std::move(parts));
}

CheckReport check_hom_coalgebra(const HomCoalgebra& c) {
  const Space& x = c.space();
  const LinearMap& d = c.comult();
  const LinearMap& g = c.gamma();
  const LinearMap& gi = g.inverse();
  std::vector<CheckReport> parts;

  parts.push_back(maps_equal(compose(c.counit(), g), c.counit(), "hom-counit-invariant"));

  TensorExpr right(x, {"c"});
  right.apply(d, {"c"}, {"c1", "c2"}).apply(c.counit(), {"c2"}, {});
  parts.push_back(maps_equal(right.collect({"c1"}, x), gi, "hom-counit-right"));

  TensorExpr left(x, {"c"});
  left.apply(d, {"c"}, {"c1", "c2"}).apply(c.counit(), {"c1"}, {});
  parts.push_back(maps_equal(left.collect({"c2"}, x), gi, "hom-counit-left"));

  parts.push_back(maps_equal(compose(d, g), compose(tensor(g, g), d), "hom-comultiplicative"));

  Space xxx = Space::tensor({x, x, x});
  TensorExpr lhs(x, {"c"});
  lhs.apply(d, {"c"}, {"c1", "c2"}).apply(d, {"c1"}, {"c11", "c12"}).map("c2", gi);
  TensorExpr rhs(x, {"c"});
  rhs.apply(d, {"c"}, {"c1", "c2"}).apply(d, {"c2"}, {"c21", "c22"}).map("c1", gi);
  parts.push_back(maps_equal(lhs.collect({"c11", "c12", "c2"}, xxx), rhs.collect({"c1", "c21", "c22"}, xxx),
                             "hom-coassociative"));

  return CheckReport::aggregate("hom-coalgebra", std::move(parts));
}

CheckReport check_hom_bialgebra(const HomBialgebra& b) {
  const Space& x = b.space();
  const Space xx = Space::tensor(x, x);
  const LinearMap& m = b.mult();
  const LinearMap& d = b.comult();
  std::vector<CheckReport> compat;

  TensorExpr prod(xx, {"a", "b"});
  prod.apply(d, {"a"}, {"a1", "a2"}).apply(d, {"b"}, {"b1", "b2"});
  prod.apply(m, {"a1", "b1"}, {"l"}).apply(m, {"a2", "b2"}, {"r"});
  compat.push_back(maps_equal(compose(d, m), prod.collect({"l", "r"}, xx), "comult-multiplicative"));

  TensorExpr units(Space::ground(), {});
  units.apply(b.unit(), {}, {"u"}).apply(b.unit(), {}, {"v"});
  compat.push_back(maps_equal(compose(d, b.unit()), units.collect({"u", "v"}, xx), "comult-unital"));

  TensorExpr eps(xx, {"a", "b"});
  eps.apply(b.counit(), {"a"}, {}).apply(b.counit(), {"b"}, {});
  compat.push_back(maps_equal(compose(b.counit(), m), eps.collect({}, Space::ground()), "counit-multiplicative"));

  compat.push_back(
      maps_equal(compose(b.counit(), b.unit()), LinearMap::identity(Space::ground()), "counit-unital"));

  std::vector<CheckReport> parts;
  parts.push_back(check_hom_algebra(b.algebra()));
  parts.push_back(check_hom_coalgebra(b.coalgebra()));
  parts.push_back(CheckReport::aggregate("bialgebra-compatibility", std::move(compat)));
  return CheckReport::aggregate("hom-bialgebra", std::move(parts));
}

CheckReport check_antipode(const HomHopf& h) {
  const HomBialgebra& b = h.bialgebra();
  const Space& x = b.space();
  const LinearMap& s = h.antipode();
  const LinearMap eta_eps = unit_counit(b.coalgebra(), b.algebra());
  std::vector<CheckReport> parts;

  parts.push_back(maps_equal(compose(s, b.alpha()), compose(b.alpha(), s), "antipode-commutes"));

  TensorExpr left(x, {"h"});
  left.apply(b.comult(), {"h"}, {"h1", "h2"}).map("h1", s).apply(b.mult(), {"h1", "h2"}, {"r"});
  parts.push_back(maps_equal(left.collect({"r"}, x), eta_eps, "antipode-left"));

  TensorExpr right(x, {"h"});
  right.apply(b.comult(), {"h"}, {"h1", "h2"}).map("h2", s).apply(b.mult(), {"h1", "h2"}, {"r"});
  parts.push_back(maps_equal(right.collect({"r"}, x), eta_eps, "antipode-right"));

  return CheckReport::aggregate("antipode", std::move(parts));
}

CheckReport check_hom_hopf(const HomHopf& h) {
  return CheckReport::aggregate("hom-hopf", {check_hom_bialgebra(h.bialgebra()), check_antipode(h)});
}

bool classical_algebra_laws(const HomAlgebra& a) {
  const std::size_t d = a.space().dim();
  std::vector<Scalar> one = a.unit().column(0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        // (e_i e_j) e_k and e_i (e_j e_k), coordinate by coordinate.
        for (std::size_t r = 0; r < d; ++r) {
          Scalar l;
          Scalar rr;
          for (std::size_t t = 0; t < d; ++t) {
            l += a.structure_constant(i, j, t) * a.structure_constant(t, k, r);
            rr += a.structure_constant(j, k, t) * a.structure_constant(i, t, r);
          }
          if (!(l == rr)) return false;
        }
      }
    }
    for (std::size_t r = 0; r < d; ++r) {
      Scalar l;
      Scalar rr;
      for (std::size_t t = 0; t < d; ++t) {
        l += one[t] * a.structure_constant(t, i, r);
        rr += one[t] * a.structure_constant(i, t, r);
      }
      Scalar expect(r == i ? 1 : 0);
      if (!(l == expect) || !(rr == expect)) return false;
    }
  }
  return true;
}

CheckReport check_bialgebra_automorphism(const HomBialgebra& h, const LinearMap& phi) {
  const Space& x = h.space();
  LinearMap p = phi.relabel(x, x);
  std::vector<CheckReport> parts;
  parts.push_back(maps_equal(compose(p, h.unit()), h.unit(), "preserves-unit"));
  parts.push_back(maps_equal(compose(h.counit(), p), h.counit(), "preserves-counit"));
  parts.push_back(maps_equal(compose(p, h.mult()), compose(h.mult(), tensor(p, p)), "preserves-product"));
  parts.push_back(maps_equal(compose(h.comult(), p), compose(tensor(p, p), h.comult()), "preserves-coproduct"));
  CheckReport r = CheckReport::aggregate("bialgebra-automorphism", std::move(parts));
  if (!p.is_invertible()) {
    r.pass = false;
    r.notes.push_back("map is not invertible");
  }
  return r;
}

HomHopf yau_twist(const HomHopf& classical, const LinearMap& phi) {
  const HomBialgebra& b = classical.bialgebra();
  const Space& x = b.space();
  if (!(b.alpha() == LinearMap::identity(x))) throw NotAutomorphism("twisting expects a classical structure (alpha = id)");
  CheckReport aut = check_bialgebra_automorphism(b, phi);
  if (!aut.pass) throw NotAutomorphism("twisting map is not a bialgebra automorphism\n" + render(aut));
  LinearMap p = phi.relabel(x, x);
  const LinearMap& pi = p.inverse();
  HomAlgebra alg(x, compose(p, b.mult()), b.unit(), p);
  HomCoalgebra coalg(x, compose(tensor(pi, pi), b.comult()), b.counit(), p);
  HomHopf out(HomBialgebra(alg, coalg), classical.antipode());
  CheckReport r = check_hom_hopf(out);
  if (!r.pass) throw TwistFailsAxioms("twisted structure violates the Hom-Hopf axioms", r);
  return out;
}

}  // namespace homhopf
