#include "homhopf/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace homhopf {

namespace {

Scalar sc(long num, const Field& f, long den = 1) { return Scalar(mpq_class(num, den), f); }

struct Term {
  long coeff;
  std::size_t index;
};

/// Map whose column c is the linear combination images[c].
LinearMap from_images(const Space& dom, const Space& cod, const std::vector<std::vector<Term>>& images,
                      const Field& f) {
  std::vector<Scalar> e(dom.dim() * cod.dim(), sc(0, f));
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (const auto& t : images[c]) e[t.index * dom.dim() + c] += sc(t.coeff, f);
  }
  return LinearMap(dom, cod, std::move(e));
}

LinearMap identity_in(const Space& s, const Field& f) {
  return LinearMap::diagonal(s, std::vector<Scalar>(s.dim(), sc(1, f)));
}

/// ε on a basis whose first vector is 1 and the rest are given.
LinearMap counit_from(const Space& s, const std::vector<long>& values, const Field& f) {
  std::vector<Scalar> e;
  for (long v : values) e.push_back(sc(v, f));
  return LinearMap(s, Space::ground(), std::move(e));
}

LinearMap unit_at(const Space& s, std::size_t index, const Field& f) {
  std::vector<Scalar> e(s.dim(), sc(0, f));
  e[index] = sc(1, f);
  return LinearMap(Space::ground(), s, std::move(e));
}

/// Group algebra from a multiplication table over elements 0..n-1 (0 = identity).
HomHopf group_algebra(const Space& s, const std::vector<std::vector<std::size_t>>& table, const Field& f) {
  const std::size_t n = s.dim();
  std::vector<std::vector<Term>> mult(n * n);
  std::vector<std::vector<Term>> comult(n);
  std::vector<std::vector<Term>> anti(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mult[i * n + j] = {{1, table[i][j]}};
      if (table[i][j] == 0) anti[i] = {{1, j}};
    }
    comult[i] = {{1, i * n + i}};
  }
  Space ss = Space::tensor(s, s);
  HomAlgebra alg(s, from_images(ss, s, mult, f), unit_at(s, 0, f), identity_in(s, f));
  HomCoalgebra coalg(s, from_images(s, ss, comult, f), counit_from(s, std::vector<long>(n, 1), f), identity_in(s, f));
  return HomHopf(HomBialgebra(alg, coalg), from_images(s, s, anti, f));
}

/// Non-identity involutive automorphisms of a group, as permutation matrices.
std::vector<LinearMap> group_involutions(const Space& s, const std::vector<std::vector<std::size_t>>& table,
                                         const Field& f) {
  const std::size_t n = table.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LinearMap> out;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    bool inv = true;
    bool id = true;
    for (std::size_t i = 0; i < n && hom; ++i) {
      inv = inv && perm[perm[i]] == i;
      id = id && perm[i] == i;
      for (std::size_t j = 0; j < n && hom; ++j) hom = perm[table[i][j]] == table[perm[i]][perm[j]];
    }
    if (!hom || !inv || id) continue;
    std::vector<std::vector<Term>> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = {{1, perm[i]}};
    out.push_back(from_images(s, s, images, f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<std::size_t>> cyclic_table(unsigned n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

std::vector<std::vector<std::size_t>> klein_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  }
  return t;
}

Space cyclic_space(unsigned n) {
  std::vector<std::string> names{"1"};
  for (unsigned i = 1; i < n; ++i) names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  return Space("k[C" + std::to_string(n) + "]", names);
}

Space klein_space() { return Space("k[C2xC2]", {"1", "a", "b", "ab"}); }

Space dual_numbers_space() { return Space("A", {"1", "y"}); }

}  // namespace

HomHopf classical_sweedler(const Field& f) {
  Space s("H4", {"1", "g", "x", "gx"});
  Space ss = Space::tensor(s, s);
  enum : std::size_t { one, g, x, w };
  // w = x·g, so g·x = -w, g·w = -x, w·g = x.
  std::vector<std::vector<Term>> mult(16);
  for (std::size_t i = 0; i < 4; ++i) {
    mult[one * 4 + i] = {{1, i}};
    mult[i * 4 + one] = {{1, i}};
  }
  mult[g * 4 + g] = {{1, one}};
  mult[g * 4 + x] = {{-1, w}};
  mult[g * 4 + w] = {{-1, x}};
  mult[x * 4 + g] = {{1, w}};
  mult[w * 4 + g] = {{1, x}};
  std::vector<std::vector<Term>> comult{
      {{1, one * 4 + one}},
      {{1, g * 4 + g}},
      {{1, x * 4 + g}, {1, one * 4 + x}},
      {{1, w * 4 + one}, {1, g * 4 + w}},
  };
  std::vector<std::vector<Term>> anti{{{1, one}}, {{1, g}}, {{-1, w}}, {{1, x}}};
  HomAlgebra alg(s, from_images(ss, s, mult, f), unit_at(s, 0, f), identity_in(s, f));
  HomCoalgebra coalg(s, from_images(s, ss, comult, f), counit_from(s, {1, 1, 0, 0}, f), identity_in(s, f));
  return HomHopf(HomBialgebra(alg, coalg), from_images(s, s, anti, f));
}

LinearMap sweedler_twist_map(const Field& f) {
  Space s = classical_sweedler(f).space();
  return LinearMap::diagonal(s, {sc(1, f), sc(1, f), sc(-1, f), sc(-1, f)});
}

HomHopf sweedler_h4_hom(const Field& f) {
  // Stated tables: Δ(x) = -x⊗g - 1⊗x, α = diag(1,1,-1,-1), S(x) = -gx; the product
  // is the twisted one, so g·x = gx and 1·x = α(x) = -x.
  HomHopf cl = classical_sweedler(f);
  const Space& s = cl.space();
  Space ss = Space::tensor(s, s);
  LinearMap phi = sweedler_twist_map(f);
  HomAlgebra alg(s, compose(phi, cl.bialgebra().mult()), cl.bialgebra().unit(), phi);
  std::vector<std::vector<Term>> comult{
      {{1, 0}},
      {{1, 1 * 4 + 1}},
      {{-1, 2 * 4 + 1}, {-1, 0 * 4 + 2}},
      {{-1, 3 * 4 + 0}, {-1, 1 * 4 + 3}},
  };
  HomCoalgebra coalg(s, from_images(s, ss, comult, f), cl.bialgebra().counit(), phi);
  return HomHopf(HomBialgebra(alg, coalg), cl.antipode());
}

HomHopf cyclic_group_algebra(unsigned n, const Field& f) {
  if (n == 0) throw OutOfRange("cyclic group of order 0");
  return group_algebra(cyclic_space(n), cyclic_table(n), f);
}

HomHopf klein_group_algebra(const Field& f) { return group_algebra(klein_space(), klein_table(), f); }

std::vector<TwistFamily> twist_families(const Field& f) {
  std::vector<TwistFamily> out;
  out.push_back({"sweedler", classical_sweedler(f), {sweedler_twist_map(f)}});
  for (unsigned n : {2u, 4u}) {
    out.push_back({"k[C" + std::to_string(n) + "]", cyclic_group_algebra(n, f),
                   group_involutions(cyclic_space(n), cyclic_table(n), f)});
  }
  out.push_back({"k[C2xC2]", klein_group_algebra(f), group_involutions(klein_space(), klein_table(), f)});
  return out;
}

HomAlgebra dual_numbers_algebra(const Field& f) {
  Space a = dual_numbers_space();
  std::vector<std::vector<Term>> mult{{{1, 0}}, {{1, 1}}, {{1, 1}}, {}};
  return HomAlgebra(a, from_images(Space::tensor(a, a), a, mult, f), unit_at(a, 0, f), identity_in(a, f));
}

HomHopf trivial_hopf(const Field& f) {
  Space s("k", {"1"});
  Space ss = Space::tensor(s, s);
  LinearMap one = identity_in(s, f);
  HomAlgebra alg(s, LinearMap(ss, s, {sc(1, f)}), LinearMap(Space::ground(), s, {sc(1, f)}), one);
  HomCoalgebra coalg(s, LinearMap(s, ss, {sc(1, f)}), LinearMap(s, Space::ground(), {sc(1, f)}), one);
  return HomHopf(HomBialgebra(alg, coalg), one);
}

CrossedProductSpec h4_cocycle_example(const Scalar& n_in, long m, long k, SigmaReading reading,
                                      TableOrientation orientation) {
  const Field f = n_in.field();
  if (f.characteristic() == 2) throw CharTwo("the cocycle example divides by 2");
  const Scalar n = n_in;
  HomHopf h4 = sweedler_h4_hom(f);
  const HomBialgebra& H = h4.bialgebra();
  HomAlgebra A = dual_numbers_algebra(f);
  const Space& hs = H.space();
  const Space& as = A.space();

  // h·1 = ε(h)1, 1·y = g·y = y, x·y = gx·y = 0.
  std::vector<Scalar> act(2 * 8, sc(0, f));
  auto set_act = [&](std::size_t h, std::size_t a, std::size_t r, const Scalar& v) { act[r * 8 + h * 2 + a] = v; };
  set_act(0, 0, 0, sc(1, f));
  set_act(1, 0, 0, sc(1, f));
  set_act(0, 1, 1, sc(1, f));
  set_act(1, 1, 1, sc(1, f));
  ModuleAction action(H, A, LinearMap(Space::tensor(hs, as), as, act));

  std::vector<Scalar> sig(2 * 16, sc(0, f));
  const std::size_t x_row = reading == SigmaReading::unit_multiple ? 0 : 1;
  // Table cell (row, col); the orientation decides which one is σ's first argument.
  auto set_sig = [&](std::size_t row, std::size_t col, std::size_t r, const Scalar& v) {
    const std::size_t first = orientation == TableOrientation::row_first ? row : col;
    const std::size_t second = orientation == TableOrientation::row_first ? col : row;
    sig[r * 16 + first * 4 + second] = v;
  };
  for (std::size_t h : {0, 1}) {
    for (std::size_t l : {0, 1}) set_sig(h, l, 0, sc(1, f));
  }
  const Scalar half = n * sc(1, f, 2);
  for (std::size_t h : {2, 3}) {
    set_sig(h, 2, x_row, half);
    set_sig(h, 3, x_row, -half);
  }
  Cocycle sigma(H, A, LinearMap(Space::tensor(hs, hs), as, sig));
  return CrossedProductSpec{A, H, action, sigma, m, k};
}

BiproductSpec classical_radford_datum(const Field& f) {
  HomHopf c2 = cyclic_group_algebra(2, f);
  const HomBialgebra& H = c2.bialgebra();
  HomAlgebra A = dual_numbers_algebra(f);
  const Space& as = A.space();
  const Space& hs = H.space();
  // g·y = -y
  std::vector<std::vector<Term>> act{{{1, 0}}, {{1, 1}}, {{1, 0}}, {{-1, 1}}};
  ModuleAction action(H, A, from_images(Space::tensor(hs, as), as, act, f));
  // Δ(y) = y⊗1 + 1⊗y, ε(y) = 0
  std::vector<std::vector<Term>> da{{{1, 0}}, {{1, 2}, {1, 1}}};
  HomCoalgebra AC(as, from_images(as, Space::tensor(as, as), da, f), counit_from(as, {1, 0}, f), identity_in(as, f));
  // ρ(1) = 1⊗1, ρ(y) = g⊗y
  std::vector<std::vector<Term>> rho{{{1, 0}}, {{1, 3}}};
  Coaction co(H, AC, from_images(as, Space::tensor(hs, as), rho, f));
  return BiproductSpec{CrossedProductSpec{A, H, action, Cocycle::trivial(H, A), 0, -1}, AC, co};
}

BiproductSpec h4_radford_datum(const Scalar& n, long m, long k) {
  CrossedProductSpec cp = h4_cocycle_example(n, m, k);
  const Field f = n.field();
  const Space& as = cp.A.space();
  std::vector<std::vector<Term>> da{{{1, 0}}, {{1, 2}, {1, 1}}};
  HomCoalgebra AC(as, from_images(as, Space::tensor(as, as), da, f), counit_from(as, {1, 0}, f), identity_in(as, f));
  return BiproductSpec{cp, AC, Coaction::trivial(cp.H, AC)};
}

BiproductSpec h4_sign_datum(long m, long k, const Field& f) {
  HomHopf h4 = sweedler_h4_hom(f);
  const HomBialgebra& H = h4.bialgebra();
  BiproductSpec classical = classical_radford_datum(f);
  const HomAlgebra& A = classical.crossed.A;
  const Space& as = A.space();
  const Space& hs = H.space();
  std::vector<std::vector<Term>> act(8);
  act[0 * 2 + 0] = {{1, 0}};
  act[0 * 2 + 1] = {{1, 1}};
  act[1 * 2 + 0] = {{1, 0}};
  act[1 * 2 + 1] = {{-1, 1}};
  ModuleAction action(H, A, from_images(Space::tensor(hs, as), as, act, f));
  std::vector<std::vector<Term>> rho{{{1, 0}}, {{1, 1 * 2 + 1}}};
  Coaction co(H, classical.A_coalgebra, from_images(as, Space::tensor(hs, as), rho, f));
  return BiproductSpec{CrossedProductSpec{A, H, action, Cocycle::trivial(H, A), m, k}, classical.A_coalgebra, co};
}

BiproductSpec trivial_radford_datum(const HomHopf& h, long m, long k) {
  const HomBialgebra& H = h.bialgebra();
  Field f = H.counit().at(0, 0).field();
  HomHopf kk = trivial_hopf(f);
  const HomAlgebra& A = kk.bialgebra().algebra();
  const HomCoalgebra& AC = kk.bialgebra().coalgebra();
  return BiproductSpec{CrossedProductSpec{A, H, ModuleAction::trivial(H, A), Cocycle::trivial(H, A), m, k}, AC,
                       Coaction::trivial(H, AC)};
}

LinearMap mutate(const LinearMap& f, std::size_t row, std::size_t col, const Scalar& delta) {
  if (delta.is_zero()) throw Error("mutation delta must be nonzero");
  if (row >= f.rows() || col >= f.cols()) throw OutOfRange("mutation site out of range");
  return f.with_entry(row, col, f.at(row, col) + delta);
}

std::vector<CorpusEntry> hopf_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"h4", sweedler_h4_hom(), true});
  out.push_back({"sweedler", classical_sweedler(), true});
  out.push_back({"k[C2]", cyclic_group_algebra(2), true});
  out.push_back({"k[C4]", cyclic_group_algebra(4), true});
  out.push_back({"k[C2xC2]", klein_group_algebra(), true});
  out.push_back({"k", trivial_hopf(), true});
  out.push_back({"h4-untwisted-structure-map",
                 HomHopf(HomBialgebra(sweedler_h4_hom().bialgebra().algebra().with_alpha(LinearMap::identity(sweedler_h4_hom().space())),
                                      sweedler_h4_hom().bialgebra().coalgebra().with_gamma(LinearMap::identity(sweedler_h4_hom().space()))),
                         sweedler_h4_hom().antipode()),
                 false});
  return out;
}

std::vector<BiproductEntry> biproduct_corpus() {
  HomHopf c2 = cyclic_group_algebra(2);
  HomHopf h4 = sweedler_h4_hom();
  const Space a = dual_numbers_algebra().space();
  LinearMap s_a = LinearMap::diagonal(a, {Scalar(1), Scalar(-1)});
  std::vector<BiproductEntry> out;
  out.push_back({"radford", classical_radford_datum(), c2.antipode(), s_a, true});
  out.push_back({"h4-sign", h4_sign_datum(0, -1), h4.antipode(), s_a, true});
  out.push_back({"h4-sign-m1-k0", h4_sign_datum(1, 0), h4.antipode(), s_a, true});
  out.push_back({"h4-sign-m-2-k2", h4_sign_datum(-2, 2), h4.antipode(), s_a, true});
  out.push_back({"h4-over-k", trivial_radford_datum(h4, 0, -1), h4.antipode(),
                 LinearMap::identity(trivial_hopf().space()), true});
  out.push_back({"h4-cocycle-n1", h4_radford_datum(Scalar(1), 0, -1), h4.antipode(), s_a, false});
  return out;
}

}  // namespace homhopf
