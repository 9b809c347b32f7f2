/**
 * @file cli.hpp
 * @brief Command surface of the `homhopf` tool, report rendering and the selftest.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homhopf/structfile.hpp"

namespace homhopf::cli {

/// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input = 2;

/// Runs one command line (args exclude the program name).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report as JSON text with sorted keys; rationals are strings.
std::string report_json(const CheckReport& report);

using Sides = std::pair<std::vector<Scalar>, std::vector<Scalar>>;

/// Both sides of a Hom-algebra, Hom-coalgebra, bialgebra or antipode identity at the
/// witness's basis tuple, recomputed by direct sums over structure constants.
/// nullopt for axiom ids outside those families (or antipode ids without an antipode).
std::optional<Sides> reevaluate(const HomBialgebra& b, const std::optional<LinearMap>& antipode,
                                const std::string& axiom, const Witness& w);
std::optional<Sides> reevaluate(const HomAlgebra& a, const std::string& axiom, const Witness& w);

/// Named corpus structures exported to the file format (the shipped data files).
std::vector<std::pair<std::string, StructureFile>> corpus_exports();

struct SelftestCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Corpus goldens, export round trips and mutation witnesses.
std::vector<SelftestCase> selftest();

}  // namespace homhopf::cli
