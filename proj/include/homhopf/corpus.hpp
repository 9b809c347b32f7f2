/**
 * @file corpus.hpp
 * @brief Built-in example structures with known properties.
 */
#pragma once

#include <string>
#include <vector>

#include "homhopf/constructions.hpp"
#include "homhopf/homcore.hpp"

namespace homhopf {

/// Classical Sweedler algebra with basis 1, g, x, gx where gx := x·g.
/// g² = 1, x² = 0, xg = -gx; Δ(g) = g⊗g, Δ(x) = x⊗g + 1⊗x; S(x) = -gx.
HomHopf classical_sweedler(const Field& f = Field::rationals());

/// φ = diag(1, 1, -1, -1) on the Sweedler basis.
LinearMap sweedler_twist_map(const Field& f = Field::rationals());

/// The four-dimensional Hom-Hopf algebra H4: Sweedler twisted by diag(1,1,-1,-1).
/// Δ(x) = -x⊗g - 1⊗x, α(x) = -x, α(gx) = -gx, S(x) = -gx.
HomHopf sweedler_h4_hom(const Field& f = Field::rationals());

/// Group algebra k[C_n] (basis 1, g, ..., g^{n-1}), classical (α = id).
HomHopf cyclic_group_algebra(unsigned n, const Field& f = Field::rationals());

/// Group algebra of C2×C2 (basis 1, a, b, ab), classical.
HomHopf klein_group_algebra(const Field& f = Field::rationals());

/// A classical Hopf algebra together with its bialgebra involutions (φ² = id, φ ≠ id).
struct TwistFamily {
  std::string name;
  HomHopf classical;
  std::vector<LinearMap> involutions;
};

/// Sweedler (x ↦ -x), k[C2] (none), k[C4] (g ↦ g³) and k[C2×C2] (three swaps).
/// Group-algebra involutions are enumerated from the group table.
std::vector<TwistFamily> twist_families(const Field& f = Field::rationals());

/// k[y]/(y²) with basis 1, y, classical.
HomAlgebra dual_numbers_algebra(const Field& f = Field::rationals());

/// The ground field as a one-dimensional Hom-Hopf algebra.
HomHopf trivial_hopf(const Field& f = Field::rationals());

/// How the table values of the two-dimensional cocycle example are placed in A = k[y]/(y²).
enum class SigmaReading {
  unit_multiple,  ///< σ(u, v) = value · 1_A
  y_multiple,     ///< σ(u, v) = value · y
};

/// Which argument of σ the rows of the printed table index.
enum class TableOrientation {
  column_first,  ///< σ(column label, row label)
  row_first,     ///< σ(row label, column label)
};

/// Crossed-product datum over H4: A = k[y]/(y²) with β = id, h·1 = ε(h)1, g·y = y,
/// x·y = gx·y = 0, and the cocycle σ whose x-block is ±n/2
/// (printed rows x and gx both read n/2, -n/2 across columns x, gx). Throws CharTwo in characteristic 2.
CrossedProductSpec h4_cocycle_example(const Scalar& n, long m, long k,
                                      SigmaReading reading = SigmaReading::unit_multiple,
                                      TableOrientation orientation = TableOrientation::column_first);

/// Classical Radford datum: H = k[C2], A = k[y]/(y²), g·y = -y, ρ(y) = g⊗y,
/// Δ(y) = y⊗1 + 1⊗y; trivial cocycle, m = 0, k = -1. Its biproduct is Sweedler's algebra.
BiproductSpec classical_radford_datum(const Field& f = Field::rationals());

/// The cocycle example completed to a biproduct datum: Δ(y) = y⊗1 + 1⊗y, ε(y) = 0 and
/// the trivial coaction ρ(a) = 1⊗a.
BiproductSpec h4_radford_datum(const Scalar& n, long m, long k);

/// H4 acting on k[y]/(y²) through the sign of g (g·y = -y, x·y = gx·y = 0) with
/// ρ(y) = g⊗y, Δ(y) = y⊗1 + 1⊗y and trivial cocycle; β = id.
BiproductSpec h4_sign_datum(long m, long k, const Field& f = Field::rationals());

/// A = k over an arbitrary Hom-Hopf H: trivial action, coaction and cocycle.
BiproductSpec trivial_radford_datum(const HomHopf& h, long m, long k);

/// Adds delta to entry (row, col) of a map; delta = 0 is rejected.
LinearMap mutate(const LinearMap& f, std::size_t row, std::size_t col, const Scalar& delta);

struct CorpusEntry {
  std::string name;
  HomHopf hopf;
  bool expect_hom_hopf;  ///< golden verdict of check_hom_hopf
};

/// Every built-in Hom-Hopf algebra with its golden verdict.
std::vector<CorpusEntry> hopf_corpus();

struct BiproductEntry {
  std::string name;
  BiproductSpec spec;
  std::optional<LinearMap> antipode_h;
  std::optional<LinearMap> antipode_a;
  bool expect_conditions;  ///< golden verdict of check_radford_conditions
};

/// Biproduct data with their golden verdicts: the classical pair, the sign datum over H4 at
/// several (m,k), A = k over H4, and the cocycle example with trivial coaction (conditions fail).
std::vector<BiproductEntry> biproduct_corpus();

}  // namespace homhopf
