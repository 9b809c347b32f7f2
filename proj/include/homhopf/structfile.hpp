/**
 * @file structfile.hpp
 * @brief The `.struct` file format: JSON text holding spaces, maps, tensors and
 * named bundles that assemble them into structures.
 *
 * Rationals are strings ("3", "-1/2"). Canonical serialization sorts keys,
 * stores map entries sparsely as [row, col, "value"] sorted by (row, col) and
 * uses a fixed layout, so parse followed by serialize reproduces a canonical
 * file byte for byte. The grammar is documented in docs/struct-format.md.
 */
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "homhopf/constructions.hpp"

namespace homhopf::cli {

/// Input error with a 1-based source position (0 when no position applies).
class LocatedError : public Error {
 public:
  LocatedError(const std::string& kind, const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public LocatedError {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : LocatedError("syntax error", what, line, column) {}
};

class UnknownReference : public LocatedError {
 public:
  UnknownReference(const std::string& what, std::size_t line, std::size_t column)
      : LocatedError("unknown reference", what, line, column) {}
};

class ShapeError : public LocatedError {
 public:
  ShapeError(const std::string& what, std::size_t line, std::size_t column)
      : LocatedError("shape error", what, line, column) {}
};

class BadRationalAt : public LocatedError {
 public:
  BadRationalAt(const std::string& what, std::size_t line, std::size_t column)
      : LocatedError("bad rational", what, line, column) {}
};

/// An atom (basis names) or a fused object (names of its parts).
struct SpaceDecl {
  std::vector<std::string> basis;
  std::vector<std::string> fuse;
};

struct MapEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar value;
};

/// Legs are space names; an empty list is the ground field.
struct MapDecl {
  std::vector<std::string> domain;
  std::vector<std::string> codomain;
  std::vector<MapEntry> entries;
};

/// Dense tensor over `legs`; the first `inputs` legs form the domain.
/// values[i0][i1]...[in] nests in leg order.
struct TensorDecl {
  std::vector<std::string> legs;
  std::size_t inputs = 0;
  std::vector<Scalar> values;  ///< flat, row-major over legs
};

/// A named structure: string values are references or options, integers are parameters.
struct BundleDecl {
  std::string kind;
  std::map<std::string, std::string> refs;
  std::map<std::string, long> params;
};

struct StructureFile {
  long format_version = 1;
  Field field;
  std::string main;  ///< default bundle; empty when absent
  std::map<std::string, SpaceDecl> spaces;
  std::map<std::string, MapDecl> maps;
  std::map<std::string, TensorDecl> tensors;
  std::map<std::string, BundleDecl> bundles;
};

/// Parses and fully validates (every bundle is resolved once).
StructureFile parse(std::string_view text);
std::string serialize(const StructureFile& file);

/// A biproduct datum plus the antipodes needed by the antipode and admissibility commands.
struct BiproductBundle {
  BiproductSpec spec;
  std::optional<LinearMap> antipode_h;
  std::optional<LinearMap> antipode_a;
};

using Object = std::variant<HomAlgebra, HomCoalgebra, HomBialgebra, HomHopf, ModuleAction, Coaction, Cocycle,
                            CrossedProductSpec, BiproductBundle>;

/// Kind names in the order of the Object alternatives.
std::string kind_name(const Object& object);

/// Resolved object graph of a parsed file.
class Model {
 public:
  explicit Model(StructureFile file);

  const StructureFile& file() const;
  /// Throws UnknownReference.
  const Object& bundle(const std::string& name) const;
  /// `name`, or the file's main bundle when `name` is empty.
  const Object& select(const std::string& name) const;
  LinearMap map(const std::string& name) const;
  Space space(const std::string& name) const;

 private:
  struct Impl;
  friend StructureFile parse(std::string_view text);
  std::shared_ptr<Impl> impl_;
};

/// Collects structures into a file; names of maps are prefixed by their bundle.
class Exporter {
 public:
  explicit Exporter(Field field = Field::rationals());

  std::string add_space(const Space& space);
  std::string add_map(const std::string& name, const LinearMap& map);
  std::string add_algebra(const std::string& name, const HomAlgebra& a);
  std::string add_coalgebra(const std::string& name, const HomCoalgebra& c);
  std::string add_bialgebra(const std::string& name, const HomBialgebra& b);
  std::string add_hopf(const std::string& name, const HomHopf& h);
  /// `acting`, `target` etc. name bundles that were already added.
  std::string add_action(const std::string& name, const ModuleAction& a, const std::string& acting,
                         const std::string& target);
  std::string add_coaction(const std::string& name, const Coaction& c, const std::string& coacting,
                           const std::string& target);
  std::string add_cocycle(const std::string& name, const Cocycle& s, const std::string& source,
                          const std::string& target);
  /// Adds name.H, name.A, name.action, name.sigma and the crossed bundle `name`.
  /// H is exported as a Hom-Hopf algebra when `antipode_h` is given.
  std::string add_crossed(const std::string& name, const CrossedProductSpec& spec,
                          const std::optional<LinearMap>& antipode_h = std::nullopt);
  /// As add_crossed under name.crossed, plus name.A.co, name.coaction and the biproduct bundle.
  std::string add_biproduct(const std::string& name, const BiproductSpec& spec,
                            const std::optional<LinearMap>& antipode_h = std::nullopt,
                            const std::optional<LinearMap>& antipode_a = std::nullopt);

  void set_main(const std::string& name) { file_.main = name; }
  const StructureFile& file() const { return file_; }

 private:
  void add_bundle(const std::string& name, BundleDecl decl);
  StructureFile file_;
};

}  // namespace homhopf::cli
