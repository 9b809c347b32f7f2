#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homhopf/scalar.hpp"

namespace homhopf {

/// A basis tuple at which two sides of an identity evaluate unequally.
struct Witness {
  std::size_t column = 0;                 ///< flat index into the domain
  std::vector<std::string> basis_tuple;   ///< one basis name per domain leg
  std::size_t row = 0;                    ///< first differing coordinate
  std::string row_name;
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;
  std::vector<std::string> codomain_basis;
};

/// Verdict of one named identity, or an aggregate of named sub-checks.
struct CheckReport {
  std::string axiom;
  bool pass = true;
  std::optional<Witness> witness;
  std::vector<CheckReport> parts;
  /// Free-form observations that are not verdicts (e.g. informational sub-results).
  std::vector<std::string> notes;

  static CheckReport ok(std::string axiom) { return CheckReport{std::move(axiom), true, std::nullopt, {}, {}}; }
  static CheckReport aggregate(std::string axiom, std::vector<CheckReport> parts);

  /// First failing leaf in evaluation order, or nullptr.
  const CheckReport* first_failure() const;
  /// Leaf report with the given axiom id (depth-first), or nullptr.
  const CheckReport* find(const std::string& axiom) const;
  explicit operator bool() const { return pass; }
};

/// Multi-line human-readable rendering; witnesses show exact coordinates.
std::string render(const CheckReport& report, int indent = 0);

}  // namespace homhopf
