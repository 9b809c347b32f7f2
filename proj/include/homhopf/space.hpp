/**
 * @file space.hpp
 * @brief Based finite-dimensional vector spaces.
 *
 * Three shapes exist:
 *  - an atom: a named basis (e.g. H4 with basis 1, g, x, gx);
 *  - a fused object: a tensor product treated as a single object (the carrier
 *    A⊗H of a crossed product is one object of the category);
 *  - a product: a list of legs, used for domains and codomains of multilinear
 *    maps (m : X⊗X -> X has a two-leg domain and a one-leg codomain).
 *
 * The ground field k is the product with zero legs. Basis order of every
 * tensor product is row-major with the left factor major, so fusing or
 * splitting legs never changes coordinates.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace homhopf {

class Space {
 public:
  /// Ground field k (dimension 1, no legs).
  Space();
  /// Atomic space; names must be non-empty and unique.
  Space(std::string name, std::vector<std::string> basis_names);

  static Space ground() { return Space{}; }
  /// Product of legs; a single leg is returned unchanged.
  static Space tensor(std::vector<Space> legs);
  static Space tensor(const Space& a, const Space& b) { return tensor(std::vector<Space>{a, b}); }
  /// One object whose underlying space is the product of `parts`.
  static Space fuse(std::vector<Space> parts);

  std::size_t dim() const;
  const std::string& name() const;
  const std::string& basis_name(std::size_t i) const;
  const std::vector<std::string>& basis_names() const;
  /// Index of a basis vector by name; throws OutOfRange.
  std::size_t index_of(const std::string& basis_name) const;

  bool is_product() const;
  bool is_atom() const;
  bool is_ground() const { return is_product() && legs().empty(); }

  /// Legs for tensor-expression purposes: the factors of a product, or {*this}.
  std::vector<Space> legs() const;
  /// Parts of a fused object (empty otherwise).
  const std::vector<Space>& parts() const;
  /// Flattened atomic factors.
  std::vector<Space> atoms() const;

  /// Names of the per-leg basis vectors at a flat index.
  std::vector<std::string> decompose(std::size_t index) const;

  /// Structural identity of atoms (names and basis names).
  friend bool operator==(const Space& a, const Space& b);

 private:
  enum class Kind { atom, fused, product };
  struct Node;
  explicit Space(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// True when both spaces flatten to the same atom sequence.
bool same_shape(const Space& a, const Space& b);

}  // namespace homhopf
