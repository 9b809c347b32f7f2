#include "homhopf/cli.hpp"

namespace homhopf::cli {

namespace {

using Vec = std::vector<Scalar>;

struct Pointwise {
  std::size_t n;
  Field f;

  Scalar zero() const { return Scalar(0).in(f); }
  Vec vec(std::size_t size) const { return Vec(size, zero()); }
  Vec basis(std::size_t i) const {
    Vec v = vec(n);
    v[i] = Scalar(1).in(f);
    return v;
  }
  Vec apply(const LinearMap& m, const Vec& x) const {
    Vec r = vec(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (x[c].is_zero()) continue;
      for (std::size_t k = 0; k < m.rows(); ++k) r[k] += m.at(k, c) * x[c];
    }
    return r;
  }
  Vec mul(const LinearMap& m, const Vec& x, const Vec& y) const {
    Vec r = vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) r[k] += c * m.at(k, i * n + j);
      }
    }
    return r;
  }
  Vec outer(const Vec& x, const Vec& y) const {
    Vec r = vec(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) r[i * y.size() + j] = x[i] * y[j];
    }
    return r;
  }
  Scalar eps(const LinearMap& counit, const Vec& x) const {
    Scalar s = zero();
    for (std::size_t i = 0; i < n; ++i) s += counit.at(0, i) * x[i];
    return s;
  }
};

std::optional<Sides> algebra_sides(const Pointwise& p, const LinearMap& m, const LinearMap& u, const LinearMap& al,
                                   const std::string& axiom, std::size_t col) {
  const std::size_t n = p.n;
  Vec unit = u.column(0);
  if (axiom == "hom-unit-invariant") return Sides{p.apply(al, unit), unit};
  if (axiom == "hom-unit-right") return Sides{p.mul(m, p.basis(col), unit), p.apply(al, p.basis(col))};
  if (axiom == "hom-unit-left") return Sides{p.mul(m, unit, p.basis(col)), p.apply(al, p.basis(col))};
  if (axiom == "hom-multiplicative") {
    Vec a = p.basis(col / n), b = p.basis(col % n);
    return Sides{p.apply(al, p.mul(m, a, b)), p.mul(m, p.apply(al, a), p.apply(al, b))};
  }
  if (axiom == "hom-associative") {
    Vec a = p.basis(col / (n * n)), b = p.basis((col / n) % n), c = p.basis(col % n);
    return Sides{p.mul(m, p.apply(al, a), p.mul(m, b, c)), p.mul(m, p.mul(m, a, b), p.apply(al, c))};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Sides> reevaluate(const HomAlgebra& a, const std::string& axiom, const Witness& w) {
  Pointwise p{a.space().dim(), a.mult().at(0, 0).field()};
  return algebra_sides(p, a.mult(), a.unit(), a.alpha(), axiom, w.column);
}

std::optional<Sides> reevaluate(const HomBialgebra& b, const std::optional<LinearMap>& antipode,
                                const std::string& axiom, const Witness& w) {
  const std::size_t n = b.space().dim();
  Pointwise p{n, b.mult().at(0, 0).field()};
  if (auto s = algebra_sides(p, b.mult(), b.unit(), b.alpha(), axiom, w.column)) return s;

  const LinearMap& d = b.comult();
  const LinearMap& m = b.mult();
  const LinearMap& g = b.alpha();
  const LinearMap& gi = g.inverse();
  const LinearMap& e = b.counit();
  const std::size_t col = w.column;
  auto delta = [&](const Vec& x) { return p.apply(d, x); };
  Vec unit = b.unit().column(0);

  if (axiom == "hom-counit-invariant") {
    return Sides{Vec{p.eps(e, p.apply(g, p.basis(col)))}, Vec{p.eps(e, p.basis(col))}};
  }
  if (axiom == "hom-counit-right" || axiom == "hom-counit-left") {
    Vec dc = delta(p.basis(col));
    Vec lhs = p.vec(n);
    bool right = axiom == "hom-counit-right";
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = dc[j * n + k];
        if (c.is_zero()) continue;
        if (right) lhs[j] += c * e.at(0, k);
        else lhs[k] += c * e.at(0, j);
      }
    }
    return Sides{lhs, p.apply(gi, p.basis(col))};
  }
  if (axiom == "hom-comultiplicative") {
    Vec dc = delta(p.basis(col));
    Vec rhs = p.vec(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dc[j * n + k].is_zero()) continue;
        Vec t = p.outer(p.apply(g, p.basis(j)), p.apply(g, p.basis(k)));
        for (std::size_t i = 0; i < t.size(); ++i) rhs[i] += dc[j * n + k] * t[i];
      }
    }
    return Sides{delta(p.apply(g, p.basis(col))), rhs};
  }
  if (axiom == "hom-coassociative") {
    Vec dc = delta(p.basis(col));
    Vec lhs = p.vec(n * n * n), rhs = p.vec(n * n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = dc[j * n + k];
        if (c.is_zero()) continue;
        Vec l = p.outer(delta(p.basis(j)), p.apply(gi, p.basis(k)));
        Vec r = p.outer(p.apply(gi, p.basis(j)), delta(p.basis(k)));
        for (std::size_t i = 0; i < l.size(); ++i) {
          lhs[i] += c * l[i];
          rhs[i] += c * r[i];
        }
      }
    }
    return Sides{lhs, rhs};
  }
  if (axiom == "comult-multiplicative") {
    Vec a = p.basis(col / n), bb = p.basis(col % n);
    Vec da = delta(a), db = delta(bb);
    Vec rhs = p.vec(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (da[i].is_zero()) continue;
      for (std::size_t j = 0; j < n * n; ++j) {
        if (db[j].is_zero()) continue;
        Vec t = p.outer(p.mul(m, p.basis(i / n), p.basis(j / n)), p.mul(m, p.basis(i % n), p.basis(j % n)));
        for (std::size_t q = 0; q < t.size(); ++q) rhs[q] += da[i] * db[j] * t[q];
      }
    }
    return Sides{delta(p.mul(m, a, bb)), rhs};
  }
  if (axiom == "comult-unital") return Sides{delta(unit), p.outer(unit, unit)};
  if (axiom == "counit-multiplicative") {
    Vec a = p.basis(col / n), bb = p.basis(col % n);
    return Sides{Vec{p.eps(e, p.mul(m, a, bb))}, Vec{p.eps(e, a) * p.eps(e, bb)}};
  }
  if (axiom == "counit-unital") return Sides{Vec{p.eps(e, unit)}, Vec{Scalar(1).in(p.f)}};

  if (!antipode) return std::nullopt;
  const LinearMap& s = *antipode;
  if (axiom == "antipode-commutes") {
    return Sides{p.apply(s, p.apply(g, p.basis(col))), p.apply(g, p.apply(s, p.basis(col)))};
  }
  if (axiom == "antipode-left" || axiom == "antipode-right") {
    Vec dc = delta(p.basis(col));
    Vec lhs = p.vec(n);
    bool left = axiom == "antipode-left";
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = dc[j * n + k];
        if (c.is_zero()) continue;
        Vec t = left ? p.mul(m, p.apply(s, p.basis(j)), p.basis(k)) : p.mul(m, p.basis(j), p.apply(s, p.basis(k)));
        for (std::size_t i = 0; i < n; ++i) lhs[i] += c * t[i];
      }
    }
    Vec rhs = unit;
    Scalar ec = p.eps(e, p.basis(col));
    for (auto& x : rhs) x *= ec;
    return Sides{lhs, rhs};
  }
  return std::nullopt;
}

}  // namespace homhopf::cli
