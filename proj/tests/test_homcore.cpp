#include <random>

#include "doctest.h"
#include "homhopf/corpus.hpp"
#include "homhopf/homcore.hpp"

using namespace homhopf;

namespace {

// Basis order of H4: 1, g, x, gx.
enum { one = 0, g = 1, x = 2, gx = 3 };

std::vector<Scalar> coords(const LinearMap& f, std::size_t col) { return f.column(col); }

std::vector<Scalar> vec(std::initializer_list<long> v) { return std::vector<Scalar>(v.begin(), v.end()); }

// Hom-algebra laws by direct index sums over structure constants.
bool brute_hom_algebra(const HomAlgebra& a) {
  const std::size_t n = a.space().dim();
  const LinearMap& al = a.alpha();
  auto mc = [&](std::size_t i, std::size_t j, std::size_t k) { return a.structure_constant(i, j, k); };
  std::vector<Scalar> u = a.unit().column(0);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < n; ++j) s += al.at(i, j) * u[j];
    if (!(s == u[i])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Scalar l = 0, r = 0;
      for (std::size_t j = 0; j < n; ++j) {
        l += u[j] * mc(j, i, k);
        r += u[j] * mc(i, j, k);
      }
      if (!(l == al.at(k, i)) || !(r == al.at(k, i))) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar l = 0, r = 0;
        for (std::size_t p = 0; p < n; ++p) {
          l += al.at(k, p) * mc(i, j, p);
          for (std::size_t q = 0; q < n; ++q) r += al.at(p, i) * al.at(q, j) * mc(p, q, k);
        }
        if (!(l == r)) return false;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
          Scalar l = 0, r = 0;
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              l += al.at(p, i) * mc(j, k, q) * mc(p, q, t);
              r += mc(i, j, p) * al.at(q, k) * mc(p, q, t);
            }
          if (!(l == r)) return false;
        }
  return true;
}

// Hom-coalgebra laws by direct index sums.
bool brute_hom_coalgebra(const HomCoalgebra& c) {
  const std::size_t n = c.space().dim();
  const LinearMap& ga = c.gamma();
  const LinearMap gi = ga.inverse();
  auto dc = [&](std::size_t i, std::size_t j, std::size_t k) { return c.structure_constant(i, j, k); };
  auto eps = [&](std::size_t i) { return c.counit().at(0, i); };
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < n; ++j) s += eps(j) * ga.at(j, i);
    if (!(s == eps(i))) return false;
    for (std::size_t t = 0; t < n; ++t) {
      Scalar l = 0, r = 0;
      for (std::size_t j = 0; j < n; ++j) {
        l += dc(i, t, j) * eps(j);
        r += dc(i, j, t) * eps(j);
      }
      if (!(l == gi.at(t, i)) || !(r == gi.at(t, i))) return false;
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar l = 0, r = 0;
        for (std::size_t p = 0; p < n; ++p) {
          l += ga.at(p, i) * dc(p, j, k);
          for (std::size_t q = 0; q < n; ++q) r += dc(i, p, q) * ga.at(j, p) * ga.at(k, q);
        }
        if (!(l == r)) return false;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar l = 0, r = 0;
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              l += dc(i, p, q) * dc(p, a, b) * gi.at(d, q);
              r += dc(i, p, q) * gi.at(a, p) * dc(q, b, d);
            }
          if (!(l == r)) return false;
        }
  }
  return true;
}

}  // namespace

TEST_CASE("H4 reproduces the printed tables") {
  HomHopf h = sweedler_h4_hom();
  const HomBialgebra& b = h.bialgebra();
  // Δ(x) = -x⊗g + 1⊗(-x)
  std::vector<Scalar> dx(16, Scalar(0));
  dx[x * 4 + g] = -1;
  dx[one * 4 + x] = -1;
  CHECK(coords(b.comult(), x) == dx);
  std::vector<Scalar> dg(16, Scalar(0));
  dg[g * 4 + g] = 1;
  CHECK(coords(b.comult(), g) == dg);
  CHECK(b.counit().entries() == vec({1, 1, 0, 0}));
  CHECK(coords(h.antipode(), x) == vec({0, 0, 0, -1}));
  CHECK(coords(h.antipode(), g) == vec({0, 1, 0, 0}));
  CHECK(h.alpha() == LinearMap::diagonal(h.space(), vec({1, 1, -1, -1})));
  // 1·g = g and 1·x = -x
  CHECK(coords(b.mult(), one * 4 + g) == vec({0, 1, 0, 0}));
  CHECK(coords(b.mult(), one * 4 + x) == vec({0, 0, -1, 0}));
  // g² = 1, x² = 0
  CHECK(coords(b.mult(), g * 4 + g) == vec({1, 0, 0, 0}));
  CHECK(coords(b.mult(), x * 4 + x) == vec({0, 0, 0, 0}));
}

TEST_CASE("H4 is a Hom-Hopf algebra and equals the Yau twist of Sweedler") {
  HomHopf h = sweedler_h4_hom();
  CheckReport r = check_hom_hopf(h);
  CHECK(r.pass);
  CHECK(r.find("hom-coassociative") != nullptr);
  CHECK(compose(h.alpha(), h.alpha()) == LinearMap::identity(h.space()));
  HomHopf t = yau_twist(classical_sweedler(), sweedler_twist_map());
  CHECK(t.bialgebra().mult() == h.bialgebra().mult());
  CHECK(t.bialgebra().comult() == h.bialgebra().comult());
  CHECK(t.bialgebra().unit() == h.bialgebra().unit());
  CHECK(t.bialgebra().counit() == h.bialgebra().counit());
  CHECK(t.antipode() == h.antipode());
  CHECK(t.alpha() == h.alpha());
}

TEST_CASE("classical Sweedler satisfies the classical laws and H4 does not") {
  CHECK(classical_algebra_laws(classical_sweedler().bialgebra().algebra()));
  CHECK_FALSE(classical_algebra_laws(sweedler_h4_hom().bialgebra().algebra()));
  CHECK(check_hom_hopf(classical_sweedler()).pass);
}

TEST_CASE("checkers agree with direct index sums on H4 and its mutations") {
  HomHopf h = sweedler_h4_hom();
  CHECK(brute_hom_algebra(h.bialgebra().algebra()));
  CHECK(brute_hom_coalgebra(h.bialgebra().coalgebra()));
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> row(0, 3), col(0, 15), crow(0, 15), ccol(0, 3);
  const Scalar deltas[] = {Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(-3)};
  std::size_t algebra_fail = 0, coalgebra_fail = 0;
  for (int t = 0; t < 60; ++t) {
    const Scalar& d = deltas[t % 4];
    HomAlgebra a = h.bialgebra().algebra().with_mult(mutate(h.bialgebra().mult(), row(rng), col(rng), d));
    bool verdict = check_hom_algebra(a).pass;
    CHECK(verdict == brute_hom_algebra(a));
    algebra_fail += !verdict;
    HomCoalgebra c = h.bialgebra().coalgebra().with_comult(mutate(h.bialgebra().comult(), crow(rng), ccol(rng), d));
    bool cverdict = check_hom_coalgebra(c).pass;
    CHECK(cverdict == brute_hom_coalgebra(c));
    coalgebra_fail += !cverdict;
  }
  CHECK(algebra_fail == 60);
  CHECK(coalgebra_fail == 60);
}

TEST_CASE("Hom-associativity holds on random vectors of H4") {
  HomHopf h = sweedler_h4_hom();
  const LinearMap& m = h.bialgebra().mult();
  const LinearMap& al = h.alpha();
  auto mul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> ab(16);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) ab[i * 4 + j] = a[i] * b[j];
    return m.apply(ab);
  };
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Scalar> a(4), b(4), c(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = Scalar(d(rng), 1 + (t % 3));
      b[i] = d(rng);
      c[i] = Scalar(d(rng), 2);
    }
    CHECK(mul(al.apply(a), mul(b, c)) == mul(mul(a, b), al.apply(c)));
    CHECK(al.apply(mul(a, b)) == mul(al.apply(a), al.apply(b)));
  }
}

TEST_CASE("perturbing x·g in its gx coordinate breaks the Hom-algebra axioms") {
  HomHopf h = sweedler_h4_hom();
  HomAlgebra a = h.bialgebra().algebra().with_mult(mutate(h.bialgebra().mult(), gx, x * 4 + g, Scalar(1)));
  CheckReport r = check_hom_algebra(a);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.first_failure()->witness);
  CHECK(r.first_failure()->witness->lhs != r.first_failure()->witness->rhs);
  CHECK_THROWS(mutate(h.bialgebra().mult(), 0, 0, Scalar(0)));
  CHECK_THROWS_AS(mutate(h.bialgebra().mult(), 4, 0, Scalar(1)), OutOfRange);
}

TEST_CASE("H4 with identity structure map fails the unit law first") {
  HomHopf h = sweedler_h4_hom();
  LinearMap id = LinearMap::identity(h.space());
  HomBialgebra b(h.bialgebra().algebra().with_alpha(id), h.bialgebra().coalgebra().with_gamma(id));
  CheckReport r = check_hom_bialgebra(b);
  REQUIRE_FALSE(r.pass);
  CHECK(r.first_failure()->axiom == "hom-unit-right");
}

TEST_CASE("construction validates shapes and invertibility") {
  HomHopf h = sweedler_h4_hom();
  const HomAlgebra& a = h.bialgebra().algebra();
  LinearMap singular = LinearMap::diagonal(h.space(), vec({1, 1, 0, 1}));
  CHECK_THROWS_AS(HomAlgebra(a.space(), a.mult(), a.unit(), singular), MalformedStructure);
  CHECK_THROWS_AS(HomAlgebra(a.space(), a.unit(), a.unit(), a.alpha()), MalformedStructure);
  CHECK_THROWS_AS(HomBialgebra(a, h.bialgebra().coalgebra().with_gamma(LinearMap::identity(h.space()))),
                  MalformedStructure);
}

TEST_CASE("Yau twist rejects non-automorphisms and keeps identity twists classical") {
  HomHopf s = classical_sweedler();
  LinearMap not_auto = LinearMap::diagonal(s.space(), vec({1, -1, 1, -1}));
  CHECK_FALSE(check_bialgebra_automorphism(s.bialgebra(), not_auto).pass);
  CHECK_THROWS_AS(yau_twist(s, not_auto), NotAutomorphism);
  HomHopf same = yau_twist(s, LinearMap::identity(s.space()));
  CHECK(same.bialgebra().mult() == s.bialgebra().mult());
  CHECK(same.bialgebra().comult() == s.bialgebra().comult());
}

TEST_CASE("tensor products of H4 with itself stay Hom-(co)algebras") {
  HomHopf h = sweedler_h4_hom();
  HomAlgebra aa = tensor_algebra(h.bialgebra().algebra(), h.bialgebra().algebra());
  HomCoalgebra cc = tensor_coalgebra(h.bialgebra().coalgebra(), h.bialgebra().coalgebra());
  CHECK(aa.space().dim() == 16);
  CHECK(check_hom_algebra(aa).pass);
  CHECK(check_hom_coalgebra(cc).pass);
  CHECK(compose(flip(h.space(), h.space()), flip(h.space(), h.space())) ==
        LinearMap::identity(Space::tensor(h.space(), h.space())));
}

TEST_CASE("H4 over GF(3) passes the same suite") {
  HomHopf h = sweedler_h4_hom(Field::prime(3));
  CHECK(check_hom_hopf(h).pass);
  CHECK(brute_hom_algebra(h.bialgebra().algebra()));
}
