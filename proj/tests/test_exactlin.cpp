#include <random>

#include "doctest.h"
#include "homhopf/errors.hpp"
#include "homhopf/linear_map.hpp"
#include "homhopf/tensor_expr.hpp"

using namespace homhopf;

namespace {

Space atom(const std::string& name, std::size_t n) {
  std::vector<std::string> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(name + std::to_string(i));
  return Space(name, b);
}

LinearMap random_map(const Space& dom, const Space& cod, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < dom.dim() * cod.dim(); ++i) e.push_back(Scalar(num(rng), den(rng)));
  return LinearMap(dom, cod, e);
}

// Plain triple loop, independent of compose().
std::vector<Scalar> naive_product(const LinearMap& f, const LinearMap& g) {
  std::vector<Scalar> out(f.rows() * g.cols());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      Scalar s = 0;
      for (std::size_t k = 0; k < f.cols(); ++k) s += f.at(r, k) * g.at(k, c);
      out[r * g.cols() + c] = s;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rationals normalise and parse") {
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(3, -6).to_string() == "-1/2");
  CHECK(Scalar::parse("-10/4").to_string() == "-5/2");
  CHECK(Scalar::parse("+7").to_string() == "7");
  CHECK_THROWS_AS(Scalar::parse("1/0"), BadRational);
  CHECK_THROWS_AS(Scalar::parse("1/-2"), BadRational);
  CHECK_THROWS_AS(Scalar::parse("1.5"), BadRational);
  CHECK_THROWS_AS(Scalar::parse(""), BadRational);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("field laws hold on sampled rationals and residues") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20), q(1, 6);
  for (Field f : {Field::rationals(), Field::prime(7), Field::prime(101)}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = Scalar(d(rng), q(rng)).in(f), b = Scalar(d(rng), q(rng)).in(f), c = Scalar(d(rng), q(rng)).in(f);
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == Scalar(0).in(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1).in(f));
    }
  }
}

TEST_CASE("residue arithmetic matches integer arithmetic mod p") {
  Field f = Field::prime(7);
  for (long a = 0; a < 7; ++a) {
    for (long b = 0; b < 7; ++b) {
      CHECK((Scalar(a).in(f) * Scalar(b).in(f)).to_string() == std::to_string((a * b) % 7));
      CHECK((Scalar(a).in(f) + Scalar(b).in(f)).to_string() == std::to_string((a + b) % 7));
    }
  }
  CHECK(Scalar(1, 2).in(f).to_string() == "4");
  CHECK_THROWS(Scalar(1, 7).in(f));
  CHECK_THROWS(Field::prime(8));
  CHECK(Field::parse("GF(5)") == Field::prime(5));
  CHECK(Field::parse("Q") == Field::rationals());
}

TEST_CASE("compose agrees with the naive product and is associative") {
  std::mt19937 rng(11);
  Space a = atom("a", 3), b = atom("b", 4), c = atom("c", 2), d = atom("d", 3);
  for (int t = 0; t < 10; ++t) {
    LinearMap f = random_map(b, a, rng), g = random_map(c, b, rng), h = random_map(d, c, rng);
    CHECK(compose(f, g).entries() == naive_product(f, g));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
  LinearMap f = random_map(b, a, rng);
  CHECK_THROWS_AS(compose(f, f), DimensionMismatch);
}

TEST_CASE("tensor is the left-major Kronecker product") {
  std::mt19937 rng(5);
  Space a = atom("a", 2), b = atom("b", 3), c = atom("c", 2), d = atom("d", 2);
  LinearMap f = random_map(a, b, rng), g = random_map(c, d, rng);
  LinearMap fg = tensor(f, g);
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = 0; r2 < 2; ++r2)
      for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 2; ++c2) CHECK(fg.at(r1 * 2 + r2, c1 * 2 + c2) == f.at(r1, c1) * g.at(r2, c2));
  // Interchange law.
  LinearMap f2 = random_map(b, a, rng), g2 = random_map(d, c, rng);
  CHECK(compose(tensor(f2, g2), tensor(f, g)) == tensor(compose(f2, f), compose(g2, g)));
  CHECK(fg.domain().legs().size() == 2);
}

TEST_CASE("power and inverse") {
  Space a = atom("a", 3);
  LinearMap f(a, a, {1, 2, 0, 0, 1, 3, 0, 0, 1});
  CHECK(power(f, 0) == LinearMap::identity(a));
  CHECK(power(f, 3) == compose(f, compose(f, f)));
  CHECK(compose(power(f, -2), power(f, 2)) == LinearMap::identity(a));
  LinearMap singular(a, a, {1, 2, 3, 2, 4, 6, 0, 0, 1});
  CHECK_FALSE(singular.is_invertible());
  CHECK_THROWS_AS(singular.inverse(), NonInvertible);
}

TEST_CASE("solve_linear returns a solution with nullity or an inconsistency certificate") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    std::size_t rows = 2 + t % 4, cols = 2 + (t * 7) % 5;
    Matrix a(rows, std::vector<Scalar>(cols));
    for (auto& row : a)
      for (auto& x : row) x = Scalar(d(rng), 1 + (d(rng) + 4) % 3);
    std::vector<Scalar> x0(cols);
    for (auto& x : x0) x = d(rng);
    std::vector<Scalar> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      b[r] = 0;
      for (std::size_t c = 0; c < cols; ++c) b[r] += a[r][c] * x0[c];
    }
    auto res = solve_linear(a, b);
    REQUIRE(std::holds_alternative<LinearSolution>(res));
    const auto& sol = std::get<LinearSolution>(res);
    for (std::size_t r = 0; r < rows; ++r) {
      Scalar s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * sol.x[c];
      CHECK(s == b[r]);
    }
    CHECK(sol.nullity == cols - rank(a));
  }
  // x + y = 1, 2x + 2y = 3 is inconsistent; the certificate names the second equation.
  Matrix a{{1, 1}, {2, 2}};
  auto res = solve_linear(a, {1, 3});
  REQUIRE(std::holds_alternative<NoSolution>(res));
  CHECK(std::get<NoSolution>(res).row == 1);
}

TEST_CASE("solve_linear over GF(p)") {
  Field f = Field::prime(5);
  Matrix a{{Scalar(2).in(f), Scalar(1).in(f)}, {Scalar(1).in(f), Scalar(1).in(f)}};
  auto res = solve_linear(a, {Scalar(1).in(f), Scalar(0).in(f)});
  REQUIRE(std::holds_alternative<LinearSolution>(res));
  const auto& x = std::get<LinearSolution>(res).x;
  CHECK(Scalar(2).in(f) * x[0] + x[1] == Scalar(1).in(f));
  CHECK(x[0] + x[1] == Scalar(0).in(f));
  // det [[2,1],[1,3]] = 5 vanishes mod 5, and (1, 0) is not in the image.
  Matrix singular{{Scalar(2).in(f), Scalar(1).in(f)}, {Scalar(1).in(f), Scalar(3).in(f)}};
  CHECK(std::holds_alternative<NoSolution>(solve_linear(singular, {Scalar(1).in(f), Scalar(0).in(f)})));
  CHECK(rank(singular) == 1);
}

TEST_CASE("maps_equal reports the first differing entry with its basis tuple") {
  Space a = atom("a", 2);
  Space aa = Space::tensor(a, a);
  LinearMap f(aa, a), g = LinearMap(aa, a).with_entry(1, 2, Scalar(5));
  CHECK(maps_equal(f, f, "same").pass);
  CheckReport r = maps_equal(f, g, "differ");
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->column == 2);
  CHECK(r.witness->basis_tuple == std::vector<std::string>{"a1", "a0"});
  CHECK(r.witness->row_name == "a1");
  CHECK(r.witness->rhs[1] == Scalar(5));
  CHECK(r.witness->lhs[1] == Scalar(0));
  CHECK(render(r).find("rhs = ") != std::string::npos);
}

TEST_CASE("spaces fuse and split without changing coordinates") {
  Space a = atom("a", 2), b = atom("b", 3);
  Space ab = Space::fuse({a, b});
  CHECK(ab.dim() == 6);
  CHECK(ab.basis_name(4) == "a1⊗b1");
  CHECK(ab.legs().size() == 1);
  CHECK(ab.atoms().size() == 2);
  CHECK(same_shape(ab, Space::tensor(a, b)));
  CHECK(ab.decompose(5) == std::vector<std::string>{"a1⊗b2"});
  CHECK(Space::tensor(a, b).decompose(5) == std::vector<std::string>{"a1", "b2"});
  CHECK_THROWS_AS(ab.index_of("zz"), OutOfRange);
  CHECK(Space::ground().dim() == 1);
}

TEST_CASE("TensorExpr reproduces composites built with compose and tensor") {
  std::mt19937 rng(17);
  Space x = atom("x", 2);
  Space xx = Space::tensor(x, x), xxx = Space::tensor({x, x, x});
  LinearMap m = random_map(xx, x, rng), al = random_map(x, x, rng);
  TensorExpr e(xxx, {"a", "b", "c"});
  e.apply(m, {"b", "c"}, {"bc"}).map("a", al).apply(m, {"a", "bc"}, {"r"});
  LinearMap direct = compose(m, tensor(al, m));
  CHECK(e.collect({"r"}, x) == direct);

  // Reordering legs is a permutation: flip twice is the identity.
  TensorExpr swap(xx, {"a", "b"});
  LinearMap flip = swap.collect({"b", "a"}, xx);
  CHECK(compose(flip, flip) == LinearMap::identity(xx));
  CHECK(flip.at(1 * 2 + 0, 0 * 2 + 1) == Scalar(1));

  // A unit consumes nothing and a counit produces nothing.
  LinearMap unit(Space::ground(), x, {1, 0});
  LinearMap counit(x, Space::ground(), {1, 1});
  TensorExpr u(x, {"a"});
  u.apply(unit, {}, {"u"}).apply(counit, {"a"}, {});
  CHECK(u.collect({"u"}, x) == LinearMap(x, x, {1, 1, 0, 0}));

  // Per-atom labels on a fused space.
  Space fx = Space::fuse({x, x});
  TensorExpr f(fx, {"p", "q"});
  CHECK(f.collect({"q", "p"}, fx) == flip.relabel(fx, fx));
  CHECK(e.scale(Scalar(2)).collect({"r"}, x) == direct.scaled(Scalar(2)));
}
