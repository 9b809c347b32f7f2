#include "homhopf/admissible.hpp"

#include "homhopf/tensor_expr.hpp"

namespace homhopf {

namespace {

LinearMap shaped(const LinearMap& f, const Space& dom, const Space& cod, const std::string& role) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
    throw MalformedStructure(role + " must be " + std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()));
  }
  return f.relabel(dom, cod);
}

CheckReport multiplicative(const LinearMap& f, const HomAlgebra& from, const HomAlgebra& to, const std::string& id) {
  return maps_equal(compose(f, from.mult()), compose(to.mult(), tensor(f, f)), id);
}

CheckReport unital(const LinearMap& f, const HomAlgebra& from, const HomAlgebra& to, const std::string& id) {
  return maps_equal(compose(f, from.unit()), to.unit(), id);
}

CheckReport intertwines(const LinearMap& f, const LinearMap& from, const LinearMap& to, const std::string& id) {
  return maps_equal(compose(f, from), compose(to, f), id);
}

CheckReport comultiplicative(const LinearMap& f, const HomCoalgebra& from, const HomCoalgebra& to, const std::string& id) {
  return maps_equal(compose(to.comult(), f), compose(tensor(f, f), from.comult()), id);
}

CheckReport counital(const LinearMap& f, const HomCoalgebra& from, const HomCoalgebra& to, const std::string& id) {
  return maps_equal(compose(to.counit(), f), from.counit(), id);
}

CheckReport algebra_map(const LinearMap& f, const HomAlgebra& from, const HomAlgebra& to, const std::string& id) {
  return CheckReport::aggregate(id, {multiplicative(f, from, to, id + "-multiplicative"), unital(f, from, to, id + "-unital"),
                                     intertwines(f, from.alpha(), to.alpha(), id + "-structure-map")});
}

CheckReport coalgebra_map(const LinearMap& f, const HomCoalgebra& from, const HomCoalgebra& to, const std::string& id) {
  return CheckReport::aggregate(id, {comultiplicative(f, from, to, id + "-comultiplicative"),
                                     counital(f, from, to, id + "-counital"),
                                     intertwines(f, from.gamma(), to.gamma(), id + "-structure-map")});
}

}  // namespace

void MappingSystem::validate() const {
  datum.validate();
  const Space& c = datum.crossed.A.space();
  const Space& a = A.space();
  const Space& h = H.space();
  if (!(h == datum.crossed.H.space())) throw MalformedStructure("system and datum use different H");
  (void)shaped(sect_C, c, a, "section of C");
  (void)shaped(retr_C, a, c, "retraction onto C");
  (void)shaped(incl_H, h, a, "inclusion of H");
  (void)shaped(proj_H, a, h, "projection onto H");
  (void)shaped(sigma_bar, Space::tensor(h, h), a, "twisted cocycle");
}

CheckReport check_cocycle_convolution_identities(const CrossedProductSpec& spec) {
  spec.validate();
  const Cocycle sig = spec.sigma.inverse() ? spec.sigma : cocycle_inverse(spec.sigma);
  const LinearMap& s = sig.sigma();
  const LinearMap si = sig.inverse()->relabel(s.domain(), s.codomain());
  const HomBialgebra& H = spec.H;
  const HomAlgebra& C = spec.A;
  const LinearMap& dh = H.comult();
  const LinearMap& act = spec.action.act();
  auto al = [&](long n) { return power(H.alpha(), n); };
  const long k = spec.k;
  const long m = spec.m;
  const Space& hs = H.space();
  const Space& cs = C.space();

  // α(h)→σ(α^{k+1}(l), α^{k+1}(g))
  //   = [σ(α^{k+2}(h11), α^{k+2}(l11)) σ(α^{k+1}(h12 l12), α^{k+1}(g1))] σ⁻¹(α^{k+2}(h2), α^{k+1}(l2 g2))
  Space hhh = Space::tensor({hs, hs, hs});
  TensorExpr l1(hhh, {"h", "l", "g"});
  l1.map("l", al(k + 1)).map("g", al(k + 1)).apply(s, {"l", "g"}, {"s"}).map("h", al(1)).apply(act, {"h", "s"}, {"r"});
  TensorExpr r1(hhh, {"h", "l", "g"});
  r1.apply(dh, {"h"}, {"h1", "h2"}).apply(dh, {"h1"}, {"h11", "h12"});
  r1.apply(dh, {"l"}, {"l1", "l2"}).apply(dh, {"l1"}, {"l11", "l12"}).apply(dh, {"g"}, {"g1", "g2"});
  r1.map("h11", al(k + 2)).map("l11", al(k + 2)).apply(s, {"h11", "l11"}, {"s1"});
  r1.apply(H.mult(), {"h12", "l12"}, {"p"}).map("p", al(k + 1)).map("g1", al(k + 1)).apply(s, {"p", "g1"}, {"s2"});
  r1.apply(C.mult(), {"s1", "s2"}, {"t"});
  r1.apply(H.mult(), {"l2", "g2"}, {"q"}).map("q", al(k + 1)).map("h2", al(k + 2)).apply(si, {"h2", "q"}, {"s3"});
  r1.apply(C.mult(), {"t", "s3"}, {"r"});
  CheckReport first = maps_equal(l1.collect({"r"}, cs), r1.collect({"r"}, cs), "cocycle-acting-identity");

  // α^m(hl)→β²(a) = [σ(α^{k+2}(h11), α^{k+2}(l11)) (α^m(h12 l12)→a)] σ⁻¹(α^{k+2}(h2), α^{k+2}(l2))
  Space hha = Space::tensor({hs, hs, cs});
  TensorExpr l2(hha, {"h", "l", "a"});
  l2.apply(H.mult(), {"h", "l"}, {"p"}).map("p", al(m)).map("a", power(C.alpha(), 2)).apply(act, {"p", "a"}, {"r"});
  TensorExpr r2(hha, {"h", "l", "a"});
  r2.apply(dh, {"h"}, {"h1", "h2"}).apply(dh, {"h1"}, {"h11", "h12"});
  r2.apply(dh, {"l"}, {"l1", "l2"}).apply(dh, {"l1"}, {"l11", "l12"});
  r2.map("h11", al(k + 2)).map("l11", al(k + 2)).apply(s, {"h11", "l11"}, {"s1"});
  r2.apply(H.mult(), {"h12", "l12"}, {"p"}).map("p", al(m)).apply(act, {"p", "a"}, {"u"});
  r2.apply(C.mult(), {"s1", "u"}, {"t"});
  r2.map("h2", al(k + 2)).map("l2", al(k + 2)).apply(si, {"h2", "l2"}, {"s3"}).apply(C.mult(), {"t", "s3"}, {"r"});
  CheckReport second = maps_equal(l2.collect({"r"}, cs), r2.collect({"r"}, cs), "cocycle-conjugation-identity");

  return CheckReport::aggregate("cocycle-convolution-identities", {first, second});
}

CheckReport check_sigma_bar_module(const HomBialgebra& h, const HomAlgebra& x, const LinearMap& action_in,
                                   const LinearMap& sigma_bar_in, Side side) {
  const Space& hs = h.space();
  const Space& xs = x.space();
  const LinearMap sb = shaped(sigma_bar_in, Space::tensor(hs, hs), xs, "twisted cocycle");
  const LinearMap& dh = h.comult();
  const LinearMap& beta = x.alpha();
  std::vector<CheckReport> parts;
  const std::string tag = side == Side::left ? "left" : "right";

  if (side == Side::left) {
    const LinearMap act = shaped(action_in, Space::tensor(hs, xs), xs, "left action");
    TensorExpr u(xs, {"x"});
    u.apply(h.unit(), {}, {"u"}).apply(act, {"u", "x"}, {"r"});
    parts.push_back(maps_equal(u.collect({"r"}, xs), beta, "twisted-module-left-unit"));
    Space hhx = Space::tensor({hs, hs, xs});
    TensorExpr l(hhx, {"h", "l", "x"});
    l.apply(act, {"l", "x"}, {"lx"}).map("h", h.alpha()).apply(act, {"h", "lx"}, {"r"});
    TensorExpr r(hhx, {"h", "l", "x"});
    r.apply(dh, {"h"}, {"h1", "h2"}).apply(dh, {"l"}, {"l1", "l2"}).apply(sb, {"h1", "l1"}, {"s"});
    r.apply(h.mult(), {"h2", "l2"}, {"p"}).apply(act, {"p", "x"}, {"v"}).map("s", beta);
    r.apply(x.mult(), {"s", "v"}, {"r"});
    parts.push_back(maps_equal(l.collect({"r"}, xs), r.collect({"r"}, xs), "twisted-module-left-associative"));
  } else {
    const LinearMap act = shaped(action_in, Space::tensor(xs, hs), xs, "right action");
    TensorExpr u(xs, {"x"});
    u.apply(h.unit(), {}, {"u"}).apply(act, {"x", "u"}, {"r"});
    parts.push_back(maps_equal(u.collect({"r"}, xs), beta, "twisted-module-right-unit"));
    Space xhh = Space::tensor({xs, hs, hs});
    TensorExpr l(xhh, {"x", "l", "g"});
    l.apply(act, {"x", "l"}, {"xl"}).map("g", h.alpha()).apply(act, {"xl", "g"}, {"r"});
    TensorExpr r(xhh, {"x", "l", "g"});
    r.apply(dh, {"l"}, {"l1", "l2"}).apply(dh, {"g"}, {"g1", "g2"}).apply(sb, {"l1", "g1"}, {"s"});
    r.apply(h.mult(), {"l2", "g2"}, {"p"}).apply(act, {"s", "p"}, {"v"}).map("x", beta);
    r.apply(x.mult(), {"x", "v"}, {"r"});
    parts.push_back(maps_equal(l.collect({"r"}, xs), r.collect({"r"}, xs), "twisted-module-right-associative"));
  }
  return CheckReport::aggregate("twisted-module-" + tag, std::move(parts));
}

CheckReport check_weak_bimodule(const HomBialgebra& h, const HomAlgebra& x, const BimoduleData& data) {
  const Space& hs = h.space();
  const Space& xs = x.space();
  const LinearMap pl = shaped(data.phi_l, Space::tensor(hs, xs), xs, "left action");
  const LinearMap pr = shaped(data.phi_r, Space::tensor(xs, hs), xs, "right action");
  std::vector<CheckReport> parts;
  TensorExpr ul(xs, {"x"});
  ul.apply(h.unit(), {}, {"u"}).apply(pl, {"u", "x"}, {"r"});
  parts.push_back(maps_equal(ul.collect({"r"}, xs), x.alpha(), "weak-bimodule-left-unit"));
  TensorExpr ur(xs, {"x"});
  ur.apply(h.unit(), {}, {"u"}).apply(pr, {"x", "u"}, {"r"});
  parts.push_back(maps_equal(ur.collect({"r"}, xs), x.alpha(), "weak-bimodule-right-unit"));
  Space hxh = Space::tensor({hs, xs, hs});
  TensorExpr l(hxh, {"l", "x", "g"});
  l.apply(pr, {"x", "g"}, {"xg"}).map("l", h.alpha()).apply(pl, {"l", "xg"}, {"r"});
  TensorExpr r(hxh, {"l", "x", "g"});
  r.apply(pl, {"l", "x"}, {"lx"}).map("g", h.alpha()).apply(pr, {"lx", "g"}, {"r"});
  parts.push_back(maps_equal(l.collect({"r"}, xs), r.collect({"r"}, xs), "weak-bimodule-compatible"));
  return CheckReport::aggregate("weak-bimodule", std::move(parts));
}

MappingSystem canonical_system(const BiproductSpec& spec, const LinearMap& antipode_h) {
  Biproduct b = build_biproduct(spec);
  const CrossedProductSpec& cp = spec.crossed;
  const HomAlgebra& C = cp.A;
  const HomCoalgebra& CC = spec.A_coalgebra;
  const HomBialgebra& H = cp.H;
  const Space& cs = C.space();
  const Space& hs = H.space();
  const Space& x = b.bialgebra.space();
  const long m = cp.m;
  const long k = cp.k;
  auto al = [&](long n) { return power(H.alpha(), n); };
  const LinearMap& sig = cp.sigma.sigma();
  const LinearMap& act = cp.action.act();
  const LinearMap& dh = H.comult();

  TensorExpr sect(cs, {"c"});
  sect.apply(H.unit(), {}, {"h"});
  TensorExpr retr(x, {"c", "h"});
  retr.apply(H.counit(), {"h"}, {});
  TensorExpr incl(hs, {"h"});
  incl.apply(C.unit(), {}, {"c"});
  TensorExpr proj(x, {"c", "h"});
  proj.apply(CC.counit(), {"c"}, {});

  TensorExpr sb(Space::tensor(hs, hs), {"h", "l"});
  sb.map("h", al(k + 1 - m)).map("l", al(k + 1 - m)).apply(sig, {"h", "l"}, {"s"}).apply(H.unit(), {}, {"u"});

  // l⊗(a⊗h) ↦ (α(l11)→β⁻¹(a)) σ(α^{k+2-m}(l12), α^{k+1}(h1)) ⊗ α^{1-m}(l2)α(h2)
  TensorExpr pl(Space::tensor(hs, x), {"l", "a", "h"});
  pl.apply(dh, {"l"}, {"l1", "l2"}).apply(dh, {"l1"}, {"l11", "l12"}).apply(dh, {"h"}, {"h1", "h2"});
  pl.map("l11", al(1)).map("a", C.alpha().inverse()).apply(act, {"l11", "a"}, {"u"});
  pl.map("l12", al(k + 2 - m)).map("h1", al(k + 1)).apply(sig, {"l12", "h1"}, {"s"});
  pl.apply(C.mult(), {"u", "s"}, {"c"});
  pl.map("l2", al(1 - m)).map("h2", al(1)).apply(H.mult(), {"l2", "h2"}, {"p"});

  // (a⊗h)⊗l ↦ a σ(α^{k+1}(h1), α^{k+1-m}(l1)) ⊗ α(h2)α^{1-m}(l2)
  TensorExpr pr(Space::tensor(x, hs), {"a", "h", "l"});
  pr.apply(dh, {"h"}, {"h1", "h2"}).apply(dh, {"l"}, {"l1", "l2"});
  pr.map("h1", al(k + 1)).map("l1", al(k + 1 - m)).apply(sig, {"h1", "l1"}, {"s"}).apply(C.mult(), {"a", "s"}, {"c"});
  pr.map("h2", al(1)).map("l2", al(1 - m)).apply(H.mult(), {"h2", "l2"}, {"p"});

  // a⊗h ↦ α⁻¹(a(-1))α^{-1-m}(h1) ⊗ a(0) ⊗ h2
  TensorExpr rl(x, {"a", "h"});
  rl.apply(spec.coaction.coact(), {"a"}, {"am", "a0"}).apply(dh, {"h"}, {"h1", "h2"});
  rl.map("am", al(-1)).map("h1", al(-1 - m)).apply(H.mult(), {"am", "h1"}, {"p"});

  // a⊗h ↦ β⁻¹(a) ⊗ h1 ⊗ α^{-m}(h2)
  TensorExpr rr(x, {"a", "h"});
  rr.map("a", C.alpha().inverse()).apply(dh, {"h"}, {"h1", "h2"}).map("h2", al(-m));

  HomHopf hopf(H, antipode_h);
  MappingSystem sys{spec,
                    b.bialgebra,
                    hopf,
                    sect.collect({"c", "h"}, x),
                    retr.collect({"c"}, cs),
                    incl.collect({"c", "h"}, x),
                    proj.collect({"h"}, hs),
                    sb.collect({"s", "u"}, x),
                    m,
                    BimoduleData{pl.collect({"c", "p"}, x), pr.collect({"c", "p"}, x)},
                    rl.collect({"p", "a0", "h2"}, Space::tensor(hs, x)),
                    rr.collect({"a", "h1", "h2"}, Space::tensor(x, hs))};
  sys.validate();
  return sys;
}

CheckReport check_displayed_structures(const MappingSystem& sys) {
  if (!sys.displayed) throw Error("system carries no displayed actions");
  const HomBialgebra& H = sys.H.bialgebra();
  const HomAlgebra& A = sys.A.algebra();
  std::vector<CheckReport> parts;
  parts.push_back(check_sigma_bar_module(H, A, sys.displayed->phi_l, sys.sigma_bar, Side::left));
  parts.push_back(check_sigma_bar_module(H, A, sys.displayed->phi_r, sys.sigma_bar, Side::right));
  parts.push_back(check_weak_bimodule(H, A, *sys.displayed));
  return CheckReport::aggregate("displayed-structures", std::move(parts));
}

CheckReport check_admissible(const MappingSystem& sys) {
  sys.validate();
  const HomAlgebra& CA = sys.datum.crossed.A;
  const HomCoalgebra& CC = sys.datum.A_coalgebra;
  const HomBialgebra& A = sys.A;
  const HomBialgebra& H = sys.H.bialgebra();
  const Space& as = A.space();
  const Space& hs = H.space();
  const Space& cs = CA.space();
  const LinearMap sect = sys.sect_C.relabel(cs, as);
  const LinearMap retr = sys.retr_C.relabel(as, cs);
  const LinearMap incl = sys.incl_H.relabel(hs, as);
  const LinearMap proj = sys.proj_H.relabel(as, hs);
  const LinearMap neg_m = power(H.alpha(), -sys.m);
  std::vector<CheckReport> out;
  std::vector<std::string> notes;

  out.push_back(CheckReport::aggregate(
      "admissible-sections", {maps_equal(compose(retr, sect), LinearMap::identity(cs), "retraction-after-section"),
                              maps_equal(compose(proj, incl), LinearMap::identity(hs), "projection-after-inclusion")}));

  {
    std::vector<CheckReport> p;
    p.push_back(CheckReport::aggregate("projection-bialgebra-map",
                                       {algebra_map(proj, A.algebra(), H.algebra(), "projection-algebra"),
                                        coalgebra_map(proj, A.coalgebra(), H.coalgebra(), "projection-coalgebra")}));
    p.push_back(CheckReport::aggregate(
        "inclusion-weak-algebra-coalgebra-map",
        {unital(incl, H.algebra(), A.algebra(), "inclusion-unital"),
         intertwines(incl, H.alpha(), A.alpha(), "inclusion-structure-map"),
         coalgebra_map(incl, H.coalgebra(), A.coalgebra(), "inclusion-coalgebra")}));
    p.push_back(coalgebra_map(retr, A.coalgebra(), CC, "retraction-coalgebra"));
    p.push_back(algebra_map(sect, CA, A.algebra(), "section-algebra"));
    out.push_back(CheckReport::aggregate("admissible-morphisms", std::move(p)));
    CheckReport full = multiplicative(incl, H.algebra(), A.algebra(), "inclusion-multiplicative");
    notes.push_back(std::string("inclusion of H is ") + (full.pass ? "" : "not ") + "fully multiplicative");
  }

  {
    // h→a = incl(α^{-m}h)a, a←h = a incl(α^{-m}h), c←h = ε(h)β(c)
    TensorExpr le(Space::tensor(hs, as), {"h", "a"});
    le.map("h", compose(incl, neg_m)).apply(A.mult(), {"h", "a"}, {"r"});
    TensorExpr ri(Space::tensor(as, hs), {"a", "h"});
    ri.map("h", compose(incl, neg_m)).apply(A.mult(), {"a", "h"}, {"r"});
    BimoduleData acts{le.collect({"r"}, as), ri.collect({"r"}, as)};
    std::vector<CheckReport> p;
    TensorExpr cr(Space::tensor(as, hs), {"a", "h"});
    cr.apply(H.counit(), {"h"}, {}).map("a", compose(CA.alpha(), retr));
    p.push_back(maps_equal(compose(retr, acts.phi_r), cr.collect({"a"}, cs), "retraction-right-equivariant"));
    TensorExpr cl(Space::tensor(hs, as), {"h", "a"});
    cl.map("a", retr).apply(sys.datum.crossed.action.act(), {"h", "a"}, {"r"});
    p.push_back(maps_equal(compose(retr, acts.phi_l), cl.collect({"r"}, cs), "retraction-left-equivariant"));
    p.push_back(check_weak_bimodule(H, A.algebra(), acts));
    p.push_back(check_sigma_bar_module(H, A.algebra(), acts.phi_l, sys.sigma_bar, Side::left));
    p.push_back(check_sigma_bar_module(H, A.algebra(), acts.phi_r, sys.sigma_bar, Side::right));
    out.push_back(CheckReport::aggregate("admissible-actions", std::move(p)));
  }

  {
    // ρˡ(a) = α^{-m}π(a1)⊗a2, ρʳ(a) = a1⊗α^{-m}π(a2), ρʳ_C(c) = β⁻¹(c)⊗1
    const LinearMap pm = compose(neg_m, proj);
    const LinearMap jp = compose(sect, retr);
    TensorExpr l(as, {"a"});
    l.apply(A.comult(), {"a"}, {"a1", "a2"}).map("a1", pm);
    LinearMap rho_l = l.collect({"a1", "a2"}, Space::tensor(hs, as));
    TensorExpr r(as, {"a"});
    r.apply(A.comult(), {"a"}, {"a1", "a2"}).map("a2", pm);
    LinearMap rho_r = r.collect({"a1", "a2"}, Space::tensor(as, hs));
    std::vector<CheckReport> p;
    p.push_back(maps_equal(compose(tensor(LinearMap::identity(hs), jp), compose(rho_l, sect)), compose(rho_l, sect),
                           "section-image-left-subcomodule"));
    p.push_back(maps_equal(compose(tensor(jp, LinearMap::identity(hs)), compose(rho_r, sect)), compose(rho_r, sect),
                           "section-image-right-subcomodule"));
    p.push_back(maps_equal(compose(tensor(LinearMap::identity(hs), retr), compose(rho_l, sect)),
                           sys.datum.coaction.coact(), "retraction-left-colinear"));
    TensorExpr cr(cs, {"c"});
    cr.map("c", CA.alpha().inverse()).apply(H.unit(), {}, {"u"});
    p.push_back(maps_equal(compose(tensor(retr, LinearMap::identity(hs)), compose(rho_r, sect)),
                           cr.collect({"c", "u"}, Space::tensor(cs, hs)), "retraction-right-colinear"));
    out.push_back(CheckReport::aggregate("admissible-coactions", std::move(p)));
  }

  out.push_back(maps_equal(convolve(compose(sect, retr), compose(incl, proj), A.coalgebra(), A.algebra()),
                           LinearMap::identity(as), "admissible-convolution"));

  CheckReport r = CheckReport::aggregate("admissible-system", std::move(out));
  r.notes = std::move(notes);
  return r;
}

SplitIsomorphism split_isomorphism(const MappingSystem& sys) {
  CheckReport adm = check_admissible(sys);
  if (!adm.pass) throw NotAdmissible("mapping system is not admissible\n" + render(adm), adm);
  const BiproductSpec& d = sys.datum;
  const HomAlgebra& CA = d.crossed.A;
  const HomBialgebra& A = sys.A;
  const HomBialgebra& H = sys.H.bialgebra();
  const Space& as = A.space();
  const Space& hs = H.space();
  const Space& cs = CA.space();
  const LinearMap sect = sys.sect_C.relabel(cs, as);
  const LinearMap retr = sys.retr_C.relabel(as, cs);
  const LinearMap incl = sys.incl_H.relabel(hs, as);
  const LinearMap proj = sys.proj_H.relabel(as, hs);
  Biproduct b = build_biproduct(d, true);
  const HomBialgebra& B = b.bialgebra;
  const Space& bs = B.space();

  TensorExpr fe(bs, {"c", "h"});
  fe.map("c", sect).map("h", incl).apply(A.mult(), {"c", "h"}, {"r"}).map("r", A.alpha().inverse());
  LinearMap f = fe.collect({"r"}, as);
  TensorExpr ge(as, {"a"});
  ge.apply(A.comult(), {"a"}, {"a1", "a2"}).map("a1", compose(CA.alpha(), retr)).map("a2", compose(H.alpha(), proj));
  LinearMap g = ge.collect({"a1", "a2"}, bs);

  std::vector<CheckReport> p;
  p.push_back(maps_equal(compose(f, g), LinearMap::identity(as), "iso-f-after-g"));
  p.push_back(maps_equal(compose(g, f), LinearMap::identity(bs), "iso-g-after-f"));
  p.push_back(algebra_map(f, B.algebra(), A.algebra(), "iso-f-algebra"));
  p.push_back(coalgebra_map(g, A.coalgebra(), B.coalgebra(), "iso-g-coalgebra"));

  // α^{m+1}(p(a1)(-1))π(a2) ⊗ β(p(a1)(0)) = α(π(a1)) ⊗ p(a2)
  Space hc = Space::tensor(hs, cs);
  TensorExpr el(as, {"a"});
  el.apply(A.comult(), {"a"}, {"a1", "a2"}).map("a1", retr).apply(d.coaction.coact(), {"a1"}, {"cm", "c0"});
  el.map("cm", power(H.alpha(), sys.m + 1)).map("a2", proj).apply(H.mult(), {"cm", "a2"}, {"p"}).map("c0", CA.alpha());
  TensorExpr er(as, {"a"});
  er.apply(A.comult(), {"a"}, {"a1", "a2"}).map("a1", compose(H.alpha(), proj)).map("a2", retr);
  p.push_back(maps_equal(el.collect({"p", "c0"}, hc), er.collect({"a1", "a2"}, hc), "iso-coaction-transport"));

  p.push_back(coalgebra_map(f, B.coalgebra(), A.coalgebra(), "iso-f-coalgebra"));
  p.push_back(algebra_map(g, A.algebra(), B.algebra(), "iso-g-algebra"));

  CheckReport report = CheckReport::aggregate("split-isomorphism", std::move(p));
  if (!report.pass) throw IsoCheckFail("split isomorphism check failed\n" + render(report), report);
  return {f, g, report};
}

}  // namespace homhopf
