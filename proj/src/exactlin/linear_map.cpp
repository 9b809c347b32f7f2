#include "homhopf/linear_map.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "homhopf/errors.hpp"

namespace homhopf {

struct LinearMap::Cache {
  std::once_flag sparse_once;
  std::vector<SparseColumn> sparse;
  std::once_flag inverse_once;
  std::shared_ptr<const LinearMap> inverse;
  bool singular = false;
};

LinearMap::LinearMap(Space domain, Space codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(domain_.dim() * codomain_.dim()),
      cache_(std::make_shared<Cache>()) {}

LinearMap::LinearMap(Space domain, Space codomain, std::vector<Scalar> row_major)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(std::move(row_major)),
      cache_(std::make_shared<Cache>()) {
  if (entries_.size() != domain_.dim() * codomain_.dim()) {
    throw DimensionMismatch("matrix for " + domain_.name() + " -> " + codomain_.name() + " needs " +
                            std::to_string(domain_.dim() * codomain_.dim()) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

LinearMap LinearMap::identity(const Space& space) {
  LinearMap m(space, space);
  for (std::size_t i = 0; i < space.dim(); ++i) m.entries_[i * space.dim() + i] = Scalar(1);
  return m;
}

LinearMap LinearMap::diagonal(const Space& space, const std::vector<Scalar>& diag) {
  if (diag.size() != space.dim()) throw DimensionMismatch("diagonal length differs from dim of " + space.name());
  LinearMap m(space, space);
  for (std::size_t i = 0; i < space.dim(); ++i) m.entries_[i * space.dim() + i] = diag[i];
  return m;
}

LinearMap LinearMap::relabel(Space domain, Space codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows()) throw DimensionMismatch("relabel changes dimensions");
  return LinearMap(std::move(domain), std::move(codomain), entries_);
}

std::vector<Scalar> LinearMap::column(std::size_t col) const {
  std::vector<Scalar> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, col);
  return out;
}

const SparseColumn& LinearMap::sparse_column(std::size_t col) const {
  std::call_once(cache_->sparse_once, [this] {
    cache_->sparse.assign(cols(), {});
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) {
        if (!at(r, c).is_zero()) cache_->sparse[c].emplace_back(r, at(r, c));
      }
    }
  });
  return cache_->sparse.at(col);
}

std::vector<Scalar> LinearMap::apply(std::span<const Scalar> v) const {
  if (v.size() != cols()) throw DimensionMismatch("vector length differs from dim of " + domain_.name());
  std::vector<Scalar> out(rows());
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : sparse_column(c)) out[r] += x * v[c];
  }
  return out;
}

LinearMap LinearMap::with_entry(std::size_t row, std::size_t col, Scalar value) const {
  if (row >= rows() || col >= cols()) throw OutOfRange("entry out of range");
  auto e = entries_;
  e[row * cols() + col] = std::move(value);
  return LinearMap(domain_, codomain_, std::move(e));
}

LinearMap LinearMap::scaled(const Scalar& s) const {
  auto e = entries_;
  for (auto& x : e) x *= s;
  return LinearMap(domain_, codomain_, std::move(e));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sum of maps with different shapes");
  auto e = a.entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
  return LinearMap(a.domain_, a.codomain_, std::move(e));
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + b.scaled(Scalar(-1)); }

const LinearMap& LinearMap::inverse() const {
  std::call_once(cache_->inverse_once, [this] {
    if (!is_square()) {
      cache_->singular = true;
      return;
    }
    const std::size_t n = rows();
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = at(r, c);
      a[r][n + r] = Scalar(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv][c].is_zero()) ++piv;
      if (piv == n) {
        cache_->singular = true;
        return;
      }
      std::swap(a[piv], a[c]);
      Scalar inv = a[c][c].inverse();
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        Scalar f = a[r][c];
        for (std::size_t k = c; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    std::vector<Scalar> e(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) e[r * n + c] = a[r][n + c];
    }
    cache_->inverse = std::make_shared<const LinearMap>(codomain_, domain_, std::move(e));
  });
  if (cache_->singular) throw NonInvertible("map " + domain_.name() + " -> " + codomain_.name() + " is not invertible");
  return *cache_->inverse;
}

bool LinearMap::is_invertible() const {
  try {
    inverse();
    return true;
  } catch (const NonInvertible&) {
    return false;
  }
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.entries_ == b.entries_;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!same_shape(g.codomain(), f.domain())) {
    throw DimensionMismatch("cannot compose " + f.domain().name() + " -> " + f.codomain().name() + " after " +
                            g.domain().name() + " -> " + g.codomain().name());
  }
  const std::size_t n = g.cols();
  const std::size_t m = f.rows();
  std::vector<Scalar> e(m * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [k, gv] : g.sparse_column(c)) {
      for (const auto& [r, fv] : f.sparse_column(k)) e[r * n + c] += fv * gv;
    }
  }
  return LinearMap(g.domain(), f.codomain(), std::move(e));
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) { return tensor(std::vector<LinearMap>{f, g}); }

LinearMap tensor(const std::vector<LinearMap>& factors) {
  if (factors.empty()) return LinearMap::identity(Space::ground());
  if (factors.size() == 1) return factors.front();
  std::vector<Space> doms;
  std::vector<Space> cods;
  for (const auto& f : factors) {
    for (const auto& l : f.domain().legs()) doms.push_back(l);
    for (const auto& l : f.codomain().legs()) cods.push_back(l);
  }
  Space dom = Space::tensor(doms);
  Space cod = Space::tensor(cods);
  std::vector<Scalar> e(dom.dim() * cod.dim());
  // Row-major, left factor major: index = ((i0 * d1) + i1) * d2 + ...
  for (std::size_t c = 0; c < dom.dim(); ++c) {
    SparseColumn acc{{0, Scalar(1)}};
    std::size_t rest = c;
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = rest % factors[i].cols();
      rest /= factors[i].cols();
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      SparseColumn next;
      for (const auto& [idx, v] : acc) {
        for (const auto& [r, fv] : factors[i].sparse_column(digits[i])) next.emplace_back(idx * factors[i].rows() + r, v * fv);
      }
      acc = std::move(next);
    }
    for (const auto& [r, v] : acc) e[r * dom.dim() + c] += v;
  }
  return LinearMap(dom, cod, std::move(e));
}

LinearMap power(const LinearMap& f, long n) {
  if (!f.is_square()) throw DimensionMismatch("power of a non-square map");
  if (n == 0) return LinearMap::identity(f.domain());
  const LinearMap& base = n > 0 ? f : f.inverse();
  unsigned long e = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  LinearMap result = LinearMap::identity(f.domain());
  LinearMap sq = base;
  bool first = true;
  while (e > 0) {
    if (e & 1UL) {
      result = first ? sq : compose(result, sq);
      first = false;
    }
    e >>= 1UL;
    if (e > 0) sq = compose(sq, sq);
  }
  return result.relabel(f.domain(), f.codomain());
}

namespace {

bool any_modular(const Matrix& a, const std::vector<Scalar>& b, Field& field) {
  auto visit = [&](const Scalar& s) {
    if (!s.field().is_rational()) field = s.field();
  };
  for (const auto& row : a) std::for_each(row.begin(), row.end(), visit);
  std::for_each(b.begin(), b.end(), visit);
  return !field.is_rational();
}

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> origin;  // original row index of each reduced row
};

SolveResult back_substitute(const std::vector<std::vector<Scalar>>& r, const Echelon& ech, std::size_t ncols) {
  const std::size_t rk = ech.pivot_cols.size();
  for (std::size_t i = rk; i < r.size(); ++i) {
    if (!r[i][ncols].is_zero()) return NoSolution{ech.origin[i]};
  }
  std::vector<Scalar> x(ncols);
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t pc = ech.pivot_cols[i];
    Scalar acc = r[i][ncols];
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (!r[i][j].is_zero()) acc -= r[i][j] * x[j];
    }
    x[pc] = acc / r[i][pc];
  }
  return LinearSolution{std::move(x), ncols - rk};
}

SolveResult solve_modular(const Matrix& a, const std::vector<Scalar>& b, std::size_t ncols, Field field) {
  std::vector<std::vector<Scalar>> r(a.size());
  Echelon ech;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(ncols + 1);
    for (const auto& s : a[i]) r[i].push_back(s.in(field));
    r[i].push_back(b[i].in(field));
    ech.origin.push_back(i);
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < r.size(); ++c) {
    std::size_t piv = row;
    while (piv < r.size() && r[piv][c].is_zero()) ++piv;
    if (piv == r.size()) continue;
    std::swap(r[piv], r[row]);
    std::swap(ech.origin[piv], ech.origin[row]);
    for (std::size_t i = row + 1; i < r.size(); ++i) {
      if (r[i][c].is_zero()) continue;
      Scalar f = r[i][c] / r[row][c];
      for (std::size_t k = c; k <= ncols; ++k) r[i][k] -= f * r[row][k];
    }
    ech.pivot_cols.push_back(c);
    ++row;
  }
  return back_substitute(r, ech, ncols);
}

SolveResult solve_rational(const Matrix& a, const std::vector<Scalar>& b, std::size_t ncols) {
  // Clear denominators row by row, then Bareiss elimination over Z.
  std::vector<std::vector<mpz_class>> z(a.size(), std::vector<mpz_class>(ncols + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j <= ncols; ++j) {
      const mpq_class& q = j < ncols ? a[i][j].value() : b[i].value();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j <= ncols; ++j) {
      const mpq_class& q = j < ncols ? a[i][j].value() : b[i].value();
      z[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  Echelon ech;
  ech.origin.resize(a.size());
  std::iota(ech.origin.begin(), ech.origin.end(), 0);
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < z.size(); ++c) {
    std::size_t piv = row;
    while (piv < z.size() && z[piv][c] == 0) ++piv;
    if (piv == z.size()) continue;
    std::swap(z[piv], z[row]);
    std::swap(ech.origin[piv], ech.origin[row]);
    for (std::size_t i = row + 1; i < z.size(); ++i) {
      for (std::size_t k = c + 1; k <= ncols; ++k) {
        z[i][k] = (z[row][c] * z[i][k] - z[i][c] * z[row][k]);
        mpz_divexact(z[i][k].get_mpz_t(), z[i][k].get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[row][c];
    ech.pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<Scalar>> r(z.size(), std::vector<Scalar>(ncols + 1));
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j <= ncols; ++j) r[i][j] = Scalar(mpq_class(z[i][j]));
  }
  return back_substitute(r, ech, ncols);
}

std::size_t column_count(const Matrix& a) {
  std::size_t ncols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != ncols) throw DimensionMismatch("ragged matrix");
  }
  return ncols;
}

}  // namespace

SolveResult solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t ncols = column_count(a);
  Field field;
  if (any_modular(a, b, field)) return solve_modular(a, b, ncols, field);
  return solve_rational(a, b, ncols);
}

std::size_t rank(const Matrix& a) {
  const std::size_t ncols = column_count(a);
  auto res = solve_linear(a, std::vector<Scalar>(a.size()));
  return ncols - std::get<LinearSolution>(res).nullity;
}

Witness make_witness(const LinearMap& lhs, const LinearMap& rhs, std::size_t row, std::size_t col) {
  Witness w;
  w.column = col;
  w.basis_tuple = lhs.domain().decompose(col);
  w.row = row;
  w.row_name = lhs.codomain().basis_name(row);
  w.lhs = lhs.column(col);
  w.rhs = rhs.column(col);
  w.codomain_basis = lhs.codomain().basis_names();
  return w;
}

CheckReport maps_equal(const LinearMap& lhs, const LinearMap& rhs, std::string axiom) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionMismatch("cannot compare " + lhs.domain().name() + " -> " + lhs.codomain().name() + " with " +
                            rhs.domain().name() + " -> " + rhs.codomain().name());
  }
  CheckReport report = CheckReport::ok(std::move(axiom));
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (!(lhs.at(r, c) == rhs.at(r, c))) {
        report.pass = false;
        report.witness = make_witness(lhs, rhs, r, c);
        return report;
      }
    }
  }
  return report;
}

}  // namespace homhopf
