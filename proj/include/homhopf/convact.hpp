/**
 * @file convact.hpp
 * @brief Actions, coactions, cocycles and the convolution product.
 */
#pragma once

#include <optional>

#include "homhopf/homcore.hpp"

namespace homhopf {

/// Left action H⊗A -> A.
class ModuleAction {
 public:
  ModuleAction(HomBialgebra acting, HomAlgebra target, const LinearMap& act);

  const HomBialgebra& acting() const { return acting_; }
  const HomAlgebra& target() const { return target_; }
  const LinearMap& act() const { return act_; }

  /// h·a = ε(h)β(a).
  static ModuleAction trivial(const HomBialgebra& h, const HomAlgebra& a);

 private:
  HomBialgebra acting_;
  HomAlgebra target_;
  LinearMap act_;
};

/// Left coaction C -> H⊗C, written ρ(c) = c(-1)⊗c(0).
class Coaction {
 public:
  Coaction(HomBialgebra coacting, HomCoalgebra target, const LinearMap& coact);

  const HomBialgebra& coacting() const { return coacting_; }
  const HomCoalgebra& target() const { return target_; }
  const LinearMap& coact() const { return coact_; }

  /// ρ(c) = 1_H⊗β⁻¹(c).
  static Coaction trivial(const HomBialgebra& h, const HomCoalgebra& c);
  /// H coacting on itself by its comultiplication.
  static Coaction regular(const HomBialgebra& h);

 private:
  HomBialgebra coacting_;
  HomCoalgebra target_;
  LinearMap coact_;
};

/// Bilinear σ: H⊗H -> A, optionally with its convolution inverse.
class Cocycle {
 public:
  Cocycle(HomBialgebra source, HomAlgebra target, const LinearMap& sigma,
          std::optional<LinearMap> inverse = std::nullopt);

  const HomBialgebra& source() const { return source_; }
  const HomAlgebra& target() const { return target_; }
  const LinearMap& sigma() const { return sigma_; }
  const std::optional<LinearMap>& inverse() const { return inverse_; }

  /// σ(h, l) = ε(h)ε(l)1_A.
  static Cocycle trivial(const HomBialgebra& h, const HomAlgebra& a);

 private:
  HomBialgebra source_;
  HomAlgebra target_;
  LinearMap sigma_;
  std::optional<LinearMap> inverse_;
};

/// h·(ab) = (h1·a)(h2·b) and h·1 = ε(h)1.
CheckReport check_weak_module_algebra(const ModuleAction& act);
/// α(h)·(l·a) = (hl)·β(a), β(h·a) = α(h)·β(a), 1·a = β(a).
CheckReport check_hom_module(const ModuleAction& act);
/// Left Hom-comodule laws only.
CheckReport check_comodule(const Coaction& co);
/// Left comodule laws plus the comodule-coalgebra identities
/// c(-1)⊗c(0)1⊗c(0)2 = c1(-1)c2(-1)⊗c1(0)⊗c2(0) and ε(c(0))c(-1) = ε(c)1.
CheckReport check_comodule_coalgebra(const Coaction& co);

/// f∗g = m_A∘(f⊗g)∘Δ_C.
LinearMap convolve(const LinearMap& f, const LinearMap& g, const HomCoalgebra& c, const HomAlgebra& a);

class NotInvertible : public Error {
 public:
  NotInvertible(const std::string& what, std::size_t row) : Error(what), row_(row) {}
  /// Index of the inconsistent equation in the stacked system.
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

struct ConvolutionInverse {
  LinearMap map;
  std::size_t nullity;  ///< dimension of the solution space of the homogeneous system
};

/// Solves f∗g = η∘ε = g∗f for g; throws NotInvertible.
ConvolutionInverse solve_convolution_inverse(const LinearMap& f, const HomCoalgebra& c, const HomAlgebra& a);
LinearMap convolution_inverse(const LinearMap& f, const HomCoalgebra& c, const HomAlgebra& a);

/// σ with its inverse populated, over the componentwise coalgebra on H⊗H.
Cocycle cocycle_inverse(const Cocycle& sigma);

}  // namespace homhopf
