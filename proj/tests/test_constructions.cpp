#include <set>

#include "doctest.h"
#include "homhopf/constructions.hpp"
#include "homhopf/corpus.hpp"

using namespace homhopf;

namespace {

using Vec = std::vector<Scalar>;

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

Vec image(const LinearMap& f, const Vec& x) {
  Vec out(f.rows(), Scalar(0));
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < f.rows(); ++r) out[r] += f.at(r, c) * x[c];
  }
  return out;
}

// f applied to x⊗y where f's domain is X⊗Y with X major.
Vec image2(const LinearMap& f, const Vec& x, const Vec& y) {
  Vec out(f.rows(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) out[r] += f.at(r, i * y.size() + j) * x[i] * y[j];
    }
  }
  return out;
}

// Coproduct coefficients of basis h as (i, j, coefficient).
std::vector<std::tuple<std::size_t, std::size_t, Scalar>> split(const HomCoalgebra& c, std::size_t h) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  std::size_t n = c.space().dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!c.structure_constant(h, i, j).is_zero()) out.emplace_back(i, j, c.structure_constant(h, i, j));
  return out;
}

// Crossed-product multiplication evaluated basis pair by basis pair.
LinearMap crossed_oracle(const CrossedProductSpec& s) {
  const HomAlgebra& a = s.A;
  const HomBialgebra& h = s.H;
  const std::size_t na = a.space().dim(), nh = h.space().dim(), n = na * nh;
  LinearMap am = power(h.alpha(), s.m), ak1 = power(h.alpha(), s.k + 1), ak = power(h.alpha(), s.k);
  LinearMap bm2 = power(a.alpha(), -2);
  Vec out(n * n * n, Scalar(0));
  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi)
      for (std::size_t bi = 0; bi < na; ++bi)
        for (std::size_t gi = 0; gi < nh; ++gi) {
          std::size_t col = (ai * nh + hi) * n + bi * nh + gi;
          Vec b = image(bm2, basis_vec(na, bi));
          for (auto [h1, h2, c1] : split(h.coalgebra(), hi))
            for (auto [h11, h12, c2] : split(h.coalgebra(), h1))
              for (auto [g1, g2, c3] : split(h.coalgebra(), gi)) {
                Vec acted = image2(s.action.act(), image(am, basis_vec(nh, h11)), b);
                Vec sig = image2(s.sigma.sigma(), image(ak1, basis_vec(nh, h12)), image(ak, basis_vec(nh, g1)));
                Vec left = image2(a.mult(), basis_vec(na, ai), image2(a.mult(), acted, sig));
                Vec right = image(h.alpha(), image2(h.mult(), basis_vec(nh, h2), basis_vec(nh, g2)));
                Scalar w = c1 * c2 * c3;
                for (std::size_t p = 0; p < na; ++p)
                  for (std::size_t q = 0; q < nh; ++q) out[(p * nh + q) * n * n + col] += w * left[p] * right[q];
              }
        }
  Space c = carrier(a.space(), h.space());
  return LinearMap(Space::tensor(c, c), c, out);
}

// a(α^m(h1)·β⁻¹(b)) ⊗ α(h2)g evaluated the same way.
LinearMap smash_oracle(const ModuleAction& act, long m) {
  const HomAlgebra& a = act.target();
  const HomBialgebra& h = act.acting();
  const std::size_t na = a.space().dim(), nh = h.space().dim(), n = na * nh;
  LinearMap am = power(h.alpha(), m), bm1 = power(a.alpha(), -1);
  Vec out(n * n * n, Scalar(0));
  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi)
      for (std::size_t bi = 0; bi < na; ++bi)
        for (std::size_t gi = 0; gi < nh; ++gi) {
          std::size_t col = (ai * nh + hi) * n + bi * nh + gi;
          for (auto [h1, h2, c1] : split(h.coalgebra(), hi)) {
            Vec acted = image2(act.act(), image(am, basis_vec(nh, h1)), image(bm1, basis_vec(na, bi)));
            Vec left = image2(a.mult(), basis_vec(na, ai), acted);
            Vec right = image2(h.mult(), image(h.alpha(), basis_vec(nh, h2)), basis_vec(nh, gi));
            for (std::size_t p = 0; p < na; ++p)
              for (std::size_t q = 0; q < nh; ++q) out[(p * nh + q) * n * n + col] += c1 * left[p] * right[q];
          }
        }
  Space c = carrier(a.space(), h.space());
  return LinearMap(Space::tensor(c, c), c, out);
}

std::set<std::string> failing_parts(const CheckReport& r) {
  std::set<std::string> out;
  for (const auto& p : r.parts)
    if (!p.pass) out.insert(p.axiom);
  return out;
}

}  // namespace

TEST_CASE("cocycle example passes the crossed-product conditions over the whole grid") {
  for (long n : {0, 1, 2})
    for (long m = -2; m <= 2; ++m)
      for (long k = -2; k <= 2; ++k) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CrossedProductSpec spec = h4_cocycle_example(Scalar(n), m, k);
        CHECK(check_crossed_cocycle_conditions(spec).pass);
        HomAlgebra cp = crossed_product(spec);
        CHECK(check_hom_algebra(cp).pass);
        CHECK(cp.mult() == crossed_oracle(spec));
      }
}

TEST_CASE("with trivial cocycle the crossed product is the smash product") {
  for (long m = -2; m <= 2; ++m)
    for (long k = -2; k <= 2; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CrossedProductSpec spec = h4_cocycle_example(Scalar(0), m, k);
      spec.sigma = Cocycle::trivial(spec.H, spec.A);
      LinearMap smash = smash_product(spec.action, m).mult();
      CHECK(crossed_product(spec).mult() == smash);
      CHECK(smash == smash_oracle(spec.action, m));
    }
  BiproductSpec c = classical_radford_datum();
  CHECK(crossed_product(c.crossed).mult() == smash_product(c.crossed.action, c.crossed.m).mult());
}

TEST_CASE("the row-first reading of the cocycle table is not a cocycle") {
  CrossedProductSpec spec =
      h4_cocycle_example(Scalar(1), 0, -1, SigmaReading::unit_multiple, TableOrientation::row_first);
  CHECK_FALSE(check_crossed_cocycle_conditions(spec).pass);
  CHECK_FALSE(check_hom_algebra(crossed_product(spec)).pass);
}

TEST_CASE("single-site cocycle mutations: conditions agree with associativity") {
  std::size_t total = 0, failing = 0, accepted = 0;
  for (auto [n, delta] : {std::pair{1L, Scalar(1)}, std::pair{2L, Scalar(-1, 2)}, std::pair{0L, Scalar(3)}}) {
    for (auto [m, k] : {std::pair{0L, -1L}, std::pair{1L, 1L}}) {
      CrossedProductSpec spec = h4_cocycle_example(Scalar(n), m, k);
      const LinearMap& sigma = spec.sigma.sigma();
      for (std::size_t r = 0; r < sigma.rows(); ++r)
        for (std::size_t c = 0; c < sigma.cols(); ++c) {
          CrossedProductSpec mut = spec;
          mut.sigma = Cocycle(spec.H, spec.A, mutate(sigma, r, c, delta));
          bool cond = check_crossed_cocycle_conditions(mut).pass;
          bool alg = check_hom_algebra(crossed_product(mut)).pass;
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(c);
          CHECK(cond == alg);
          ++total;
          failing += cond ? 0 : 1;
          accepted += cond && alg ? 1 : 0;
        }
    }
  }
  CHECK(total == 192);
  CHECK(failing == 188);
  CHECK(accepted == 4);
}

TEST_CASE("classical datum satisfies all nine conditions and yields Sweedler's algebra") {
  BiproductSpec spec = classical_radford_datum();
  CheckReport cond = check_radford_conditions(spec);
  CHECK(cond.pass);
  CHECK(cond.parts.size() == 9);
  Biproduct bp = build_biproduct(spec);
  CHECK(bp.report.pass);
  CHECK(check_hom_bialgebra(bp.bialgebra).pass);
  // Basis 1⊗1, 1⊗g, y⊗1, y⊗g matches 1, g, x, x·g.
  HomHopf sw = classical_sweedler();
  LinearMap relabel(sw.space(), bp.bialgebra.space(), {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  LinearMap back = relabel.inverse();
  CHECK(compose(back, compose(bp.bialgebra.mult(), tensor(relabel, relabel))).entries() ==
        sw.bialgebra().mult().entries());
}

TEST_CASE("Δ_A(1) ≠ 1⊗1 breaks the bialgebra when the conditions are bypassed") {
  BiproductSpec spec = classical_radford_datum();
  const HomCoalgebra& c = spec.A_coalgebra;
  // Δ(1) = 1⊗1 + y⊗y is still coassociative and counital.
  HomCoalgebra bad(c.space(), mutate(c.comult(), 3, 0, Scalar(1)), c.counit(), c.gamma());
  REQUIRE(check_hom_coalgebra(bad).pass);
  BiproductSpec injected = spec;
  injected.A_coalgebra = bad;
  injected.coaction = Coaction(spec.coaction.coacting(), bad, spec.coaction.coact());
  CheckReport cond = check_radford_conditions(injected);
  CHECK_FALSE(cond.pass);
  CHECK(failing_parts(cond) == std::set<std::string>{"radford-A3", "radford-A4", "radford-A7"});
  CHECK_THROWS_AS(build_biproduct(injected), ConditionsFail);
  Biproduct bp = build_biproduct(injected, true);
  CHECK_FALSE(bp.report.pass);
  CHECK_FALSE(check_hom_bialgebra(bp.bialgebra).pass);
}

TEST_CASE("biproduct antipode on the classical datum") {
  BiproductSpec spec = classical_radford_datum();
  HomHopf c2 = cyclic_group_algebra(2);
  LinearMap s_a = LinearMap::diagonal(spec.crossed.A.space(), {Scalar(1), Scalar(-1)});
  LinearMap s = biproduct_antipode(spec, c2.antipode(), s_a);
  HomBialgebra b = build_biproduct(spec).bialgebra;
  LinearMap ee = unit_counit(b.coalgebra(), b.algebra());
  LinearMap id = LinearMap::identity(b.space());
  CHECK(convolve(s, id, b.coalgebra(), b.algebra()) == ee);
  CHECK(convolve(id, s, b.coalgebra(), b.algebra()) == ee);
  CHECK(compose(s, b.alpha()) == compose(b.alpha(), s));
  CHECK(convolution_inverse(id, b.coalgebra(), b.algebra()) == s);
  // S(y⊗1) = y⊗g
  CHECK(s.column(2) == Vec{0, 0, 0, 1});
  CHECK(check_antipode(HomHopf(b, s)).pass);
  CHECK(check_sigma_antipode(spec.crossed.H, spec.crossed.sigma, c2.antipode()).pass);
}

TEST_CASE("cocycle example with trivial coaction fails the nine conditions") {
  for (long n : {0, 1, 2}) {
    for (auto [m, k] : {std::pair{0L, -1L}, std::pair{1L, 0L}}) {
      CAPTURE(n);
      BiproductSpec spec = h4_radford_datum(Scalar(n), m, k);
      CheckReport cond = check_radford_conditions(spec);
      std::set<std::string> expect{"radford-A7"};
      if (n != 0) expect.insert("radford-A3");
      CHECK(failing_parts(cond) == expect);
      CHECK_THROWS_AS(build_biproduct(spec), ConditionsFail);
      CHECK_FALSE(build_biproduct(spec, true).report.pass);
      CHECK(check_twisted_comodule_cocycle(spec).pass);
    }
  }
}

TEST_CASE("sign datum over H4 builds a Hom-bialgebra across the grid") {
  for (long m = -2; m <= 2; ++m)
    for (long k = -2; k <= 2; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      BiproductSpec spec = h4_sign_datum(m, k);
      CHECK(check_radford_conditions(spec).pass);
      CHECK(build_biproduct(spec).report.pass);
    }
}

TEST_CASE("mismatched data are rejected") {
  CrossedProductSpec spec = h4_cocycle_example(Scalar(1), 0, -1);
  spec.sigma = Cocycle::trivial(cyclic_group_algebra(2).bialgebra(), spec.A);
  CHECK_THROWS_AS(spec.validate(), MalformedStructure);
  CHECK_NOTHROW(h4_cocycle_example(Scalar(1), 0, -1).with_grid(2, -2).validate());
}
