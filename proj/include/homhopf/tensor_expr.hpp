/**
 * @file tensor_expr.hpp
 * @brief Compiles Sweedler-notation formulas into linear maps.
 *
 * A TensorExpr is the linear function "domain -> tensor product of labelled
 * legs", evaluated on every domain basis vector at once. Legs are consumed by
 * applying kernel maps (products, coproducts, actions, structure-map powers),
 * reordered by label, and finally collected into a LinearMap. For example the
 * left side of Hom-associativity, α(a)(bc), is
 *
 *     TensorExpr e(tensor({X, X, X}), {"a", "b", "c"});
 *     e.apply(m, {"b", "c"}, {"bc"}).map("a", alpha).apply(m, {"a", "bc"}, {"r"});
 *     LinearMap lhs = e.collect({"r"}, X);
 *
 * Intermediate tensor powers (up to dim^7 here) are never materialised as
 * matrices; each domain column is carried as a sparse coordinate vector.
 */
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "homhopf/linear_map.hpp"
#include "homhopf/space.hpp"

namespace homhopf {

class TensorExpr {
 public:
  /// `labels` names either every leg of `domain` or every atom of it.
  TensorExpr(Space domain, std::vector<std::string> labels);

  /// Applies f to the legs `in` (gathered in that order); its codomain legs get the labels `out`.
  /// A map from the ground field (a unit) takes no inputs; a map to it (a counit) yields no outputs.
  TensorExpr& apply(const LinearMap& f, const std::vector<std::string>& in, const std::vector<std::string>& out);
  /// Unary shorthand: the leg keeps its label.
  TensorExpr& map(const std::string& leg, const LinearMap& f);
  /// Splits a fused leg into its parts.
  TensorExpr& split(const std::string& leg, const std::vector<std::string>& out);
  /// Multiplies the whole expression by a scalar.
  TensorExpr& scale(const Scalar& s);

  std::vector<std::string> labels() const;

  /// Reorders legs to `order` (every current label exactly once) and materialises domain -> codomain.
  LinearMap collect(const std::vector<std::string>& order, const Space& codomain) const;

 private:
  struct Leg {
    std::string label;
    Space space;
  };
  using Column = std::map<std::size_t, Scalar>;

  std::size_t position(const std::string& label) const;
  void reorder(const std::vector<std::size_t>& order);
  void apply_at(const LinearMap& f, std::size_t pos, std::size_t count, std::vector<Leg> out_legs);

  Space domain_;
  std::vector<Leg> legs_;
  std::vector<Column> columns_;
};

}  // namespace homhopf
