/**
 * @file constructions.hpp
 * @brief Hom-crossed products, smash coproducts and Radford-type biproducts on A⊗H.
 *
 * The carrier of every construction is the fused object A⊗H with basis
 * a_i⊗h_j at index i·dim(H) + j. Formulas are compiled with TensorExpr,
 * never hand-expanded.
 */
#pragma once

#include "homhopf/convact.hpp"

namespace homhopf {

/// (m,k)-parametrised crossed-product datum.
struct CrossedProductSpec {
  HomAlgebra A;
  HomBialgebra H;
  ModuleAction action;
  Cocycle sigma;
  long m = 0;
  long k = -1;

  /// Throws MalformedStructure when action or sigma refer to different A or H.
  void validate() const;
  CrossedProductSpec with_grid(long m_, long k_) const;
};

/// A carries both an algebra and a coalgebra structure with one shared β.
struct BiproductSpec {
  CrossedProductSpec crossed;
  HomCoalgebra A_coalgebra;
  Coaction coaction;

  void validate() const;
};

/// Carrier A⊗H of a construction.
Space carrier(const Space& a, const Space& h);

/// a[(α^m(h11)·β⁻²(b))σ(α^{k+1}(h12), α^k(g1))] ⊗ α(h2g2), unit 1⊗1, structure map β⊗α.
HomAlgebra crossed_product(const CrossedProductSpec& spec);
/// a(α^m(h1)·β⁻¹(b)) ⊗ α(h2)g, unit 1⊗1, structure map β⊗α.
HomAlgebra smash_product(const ModuleAction& action, long m);

/// Normality, twisted commutation and cocycle identity, each an aggregate part.
CheckReport check_crossed_cocycle_conditions(const CrossedProductSpec& spec);

/// Δ(a⊗h) = a1⊗α^m(a2(-1))α⁻¹(h1) ⊗ β(a2(0))⊗h2, ε = ε⊗ε, structure map β⊗α.
HomCoalgebra smash_coproduct(const HomCoalgebra& c, const HomBialgebra& h, const Coaction& co, long m);

/// Compatibility of the coaction with σ (both sides in A⊗H⊗A), swept over A⊗H.
CheckReport check_twisted_comodule_cocycle(const BiproductSpec& spec);

/// The nine conditions under which crossed product and smash coproduct form a bialgebra.
/// Part ids: "radford-A1" … "radford-A9".
CheckReport check_radford_conditions(const BiproductSpec& spec);

class ConditionsFail : public Error {
 public:
  ConditionsFail(const std::string& what, CheckReport report) : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

using PreconditionFail = ConditionsFail;

struct Biproduct {
  HomBialgebra bialgebra;
  CheckReport conditions;  ///< the A1–A9 report
  CheckReport report;      ///< check_hom_bialgebra on the result
};

/// Assembles crossed product and smash coproduct; throws ConditionsFail unless the
/// conditions hold or `bypass` is set.
Biproduct build_biproduct(const BiproductSpec& spec, bool bypass = false);

/// S∘α = α∘S and (σ⊗m)∘Δ_{H⊗H}∘(id⊗S)∘Δ = ε⊗1_A⊗1_H, plus the mirrored (S⊗id) identity.
CheckReport check_sigma_antipode(const HomBialgebra& h, const Cocycle& sigma, const LinearMap& s);

/// a⊗h ↦ (1⊗S_H(α^{m-1}(a(-1))α⁻²(h)))(S_A(a(0))⊗1) in the crossed product.
/// Throws PreconditionFail when the σ-antipode or S_A conditions fail.
LinearMap biproduct_antipode(const BiproductSpec& spec, const LinearMap& s_h, const LinearMap& s_a);

}  // namespace homhopf
