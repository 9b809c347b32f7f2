/**
 * @file admissible.hpp
 * @brief Admissible mapping systems and the isomorphism between a biproduct and
 * a bialgebra that splits through C and H.
 *
 * Maps are named by direction rather than by letter:
 *  - sect_C : C -> A and retr_C : A -> C with retr_C∘sect_C = id_C,
 *  - incl_H : H -> A and proj_H : A -> H with proj_H∘incl_H = id_H.
 * For a biproduct B = C⊗H the canonical choice is c ↦ c⊗1, c⊗h ↦ ε(h)c,
 * h ↦ 1⊗h and c⊗h ↦ ε(c)h.
 */
#pragma once

#include "homhopf/constructions.hpp"

namespace homhopf {

/// Left action φˡ: H⊗X -> X and right action φʳ: X⊗H -> X on one carrier.
struct BimoduleData {
  LinearMap phi_l;
  LinearMap phi_r;
};

struct MappingSystem {
  BiproductSpec datum;  ///< C with its H-action, cocycle and coaction
  HomBialgebra A;
  HomHopf H;
  LinearMap sect_C;     ///< C -> A
  LinearMap retr_C;     ///< A -> C
  LinearMap incl_H;     ///< H -> A
  LinearMap proj_H;     ///< A -> H
  LinearMap sigma_bar;  ///< H⊗H -> A
  long m = 0;
  /// Displayed actions and coactions on A (only for systems built from a biproduct).
  std::optional<BimoduleData> displayed;
  std::optional<LinearMap> rho_l;  ///< A -> H⊗A
  std::optional<LinearMap> rho_r;  ///< A -> A⊗H

  /// Shape validation; throws MalformedStructure.
  void validate() const;
};

/// Both convolution-cocycle identities for an invertible σ (swept over H³ and H²×A).
/// Throws NotInvertible when σ has no convolution inverse and none is stored.
CheckReport check_cocycle_convolution_identities(const CrossedProductSpec& spec);

enum class Side { left, right };

/// Twisted-module laws: φˡ(α⊗φˡ) = m_X(β⊗φˡ)(id⊗m_H⊗id)(ρ̄⊗id) and φˡ(1⊗x) = β(x),
/// with ρ̄(h⊗l) = σ̄(h1,l1)⊗h2⊗l2; the right version mirrors both.
CheckReport check_sigma_bar_module(const HomBialgebra& h, const HomAlgebra& x, const LinearMap& action,
                                   const LinearMap& sigma_bar, Side side);

/// φˡ(1⊗x) = β(x) = φʳ(x⊗1) and φˡ(α⊗φʳ) = φʳ(φˡ⊗α).
CheckReport check_weak_bimodule(const HomBialgebra& h, const HomAlgebra& x, const BimoduleData& data);

/// Canonical system of the biproduct built from `spec` (conditions enforced),
/// with σ̄(h⊗l) = σ(α^{k+1-m}(h), α^{k+1-m}(l))⊗1 and the displayed actions and coactions.
MappingSystem canonical_system(const BiproductSpec& spec, const LinearMap& antipode_h);

/// The displayed twisted-module and bimodule structures of a canonical system
/// (left module, right module, weak bimodule).
CheckReport check_displayed_structures(const MappingSystem& sys);

/// The five admissibility conditions; parts "admissible-sections", "admissible-morphisms",
/// "admissible-actions", "admissible-coactions", "admissible-convolution". A note records
/// whether incl_H is fully multiplicative.
CheckReport check_admissible(const MappingSystem& sys);

class NotAdmissible : public Error {
 public:
  NotAdmissible(const std::string& what, CheckReport report) : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

class IsoCheckFail : public Error {
 public:
  IsoCheckFail(const std::string& what, CheckReport report) : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

struct SplitIsomorphism {
  LinearMap f;  ///< C⊗H -> A, c⊗h ↦ γ⁻¹(sect(c)incl(h))
  LinearMap g;  ///< A -> C⊗H, a ↦ (β⊗α)(retr(a1)⊗proj(a2))
  CheckReport report;
};

/// Builds f and g and checks that they are mutually inverse bialgebra maps.
/// Throws NotAdmissible when check_admissible fails and IsoCheckFail when an iso check fails.
SplitIsomorphism split_isomorphism(const MappingSystem& sys);

}  // namespace homhopf
