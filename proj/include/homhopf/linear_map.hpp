/**
 * @file linear_map.hpp
 * @brief Dense exact matrices between based spaces, plus the multilinear kernel.
 *
 * Entry (r, c) is the coefficient of codomain basis vector r in the image of
 * domain basis vector c. Values are immutable; derived data (sparse columns,
 * the inverse) is computed once per value and shared between copies.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homhopf/check_report.hpp"
#include "homhopf/scalar.hpp"
#include "homhopf/space.hpp"

namespace homhopf {

using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

class LinearMap {
 public:
  /// Zero map.
  LinearMap(Space domain, Space codomain);
  /// Entries in row-major order (codomain.dim() rows, domain.dim() columns).
  LinearMap(Space domain, Space codomain, std::vector<Scalar> row_major);

  static LinearMap identity(const Space& space);
  /// Diagonal endomorphism.
  static LinearMap diagonal(const Space& space, const std::vector<Scalar>& diag);
  /// Same matrix, re-labelled spaces; dimensions must agree.
  LinearMap relabel(Space domain, Space codomain) const;

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }
  bool is_square() const { return rows() == cols(); }

  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::vector<Scalar> column(std::size_t col) const;
  const SparseColumn& sparse_column(std::size_t col) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  LinearMap with_entry(std::size_t row, std::size_t col, Scalar value) const;
  LinearMap scaled(const Scalar& s) const;
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);

  /// Cached inverse; throws NonInvertible.
  const LinearMap& inverse() const;
  bool is_invertible() const;

  /// Entrywise exact equality with equal shapes.
  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  struct Cache;
  Space domain_;
  Space codomain_;
  std::vector<Scalar> entries_;
  std::shared_ptr<Cache> cache_;
};

/// f ∘ g; requires g.codomain() and f.domain() to have the same shape.
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// Kronecker product with left-factor-major ordering; domain/codomain get one leg per factor.
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap tensor(const std::vector<LinearMap>& factors);
/// Exact n-th power; negative n uses the cached inverse.
LinearMap power(const LinearMap& f, long n);

using Matrix = std::vector<std::vector<Scalar>>;

struct LinearSolution {
  std::vector<Scalar> x;     ///< particular solution (free variables set to 0)
  std::size_t nullity = 0;   ///< dimension of the solution space of A x = 0
};

/// Certificate of inconsistency: the original equation that reduced to 0 = nonzero.
struct NoSolution {
  std::size_t row = 0;
};

using SolveResult = std::variant<LinearSolution, NoSolution>;

/// Exact solve of A x = b; fraction-free elimination over Q, plain elimination over GF(p).
SolveResult solve_linear(const Matrix& a, const std::vector<Scalar>& b);

std::size_t rank(const Matrix& a);

/// Entrywise comparison; a failure reports the first differing entry in row-major order
/// together with the full column (basis tuple) it belongs to.
CheckReport maps_equal(const LinearMap& lhs, const LinearMap& rhs, std::string axiom = "maps-equal");

/// Witness for column `col` of two maps known to differ there.
Witness make_witness(const LinearMap& lhs, const LinearMap& rhs, std::size_t row, std::size_t col);

}  // namespace homhopf
