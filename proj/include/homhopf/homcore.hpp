/**
 * @file homcore.hpp
 * @brief Monoidal Hom-(co)algebras, Hom-bialgebras and Hom-Hopf algebras.
 *
 * Structures are bundles of structure-constant maps over one based space.
 * Construction only validates shapes and that the structure map is
 * invertible; the axioms themselves are checked on demand so that invalid
 * structures stay representable and can be reported on.
 *
 * Every checker sweeps all basis tuples (the identities are multilinear) and
 * returns an aggregate CheckReport whose parts are evaluated in a fixed order:
 * unit/counit laws first, then structure-map compatibility, then
 * (co)associativity.
 */
#pragma once

#include <optional>

#include "homhopf/check_report.hpp"
#include "homhopf/errors.hpp"
#include "homhopf/linear_map.hpp"

namespace homhopf {

/// Monoidal Hom-associative algebra (X, m, 1, α).
class HomAlgebra {
 public:
  /// mult: X⊗X -> X, unit: k -> X, alpha: X -> X (must be invertible).
  HomAlgebra(Space space, const LinearMap& mult, const LinearMap& unit, const LinearMap& alpha);

  const Space& space() const { return space_; }
  const LinearMap& mult() const { return mult_; }
  const LinearMap& unit() const { return unit_; }
  const LinearMap& alpha() const { return alpha_; }
  /// Coefficient of e_k in e_i e_j.
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  HomAlgebra with_mult(const LinearMap& mult) const { return {space_, mult, unit_, alpha_}; }
  HomAlgebra with_alpha(const LinearMap& alpha) const { return {space_, mult_, unit_, alpha}; }

 private:
  Space space_;
  LinearMap mult_;
  LinearMap unit_;
  LinearMap alpha_;
};

/// Monoidal Hom-coassociative coalgebra (X, Δ, ε, γ).
class HomCoalgebra {
 public:
  HomCoalgebra(Space space, const LinearMap& comult, const LinearMap& counit, const LinearMap& gamma);

  const Space& space() const { return space_; }
  const LinearMap& comult() const { return comult_; }
  const LinearMap& counit() const { return counit_; }
  const LinearMap& gamma() const { return gamma_; }
  /// Coefficient of e_j⊗e_k in Δ(e_i).
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  HomCoalgebra with_comult(const LinearMap& comult) const { return {space_, comult, counit_, gamma_}; }
  HomCoalgebra with_gamma(const LinearMap& gamma) const { return {space_, comult_, counit_, gamma}; }

 private:
  Space space_;
  LinearMap comult_;
  LinearMap counit_;
  LinearMap gamma_;
};

class HomBialgebra {
 public:
  /// Requires equal spaces and algebra.alpha() == coalgebra.gamma().
  HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);

  const HomAlgebra& algebra() const { return algebra_; }
  const HomCoalgebra& coalgebra() const { return coalgebra_; }
  const Space& space() const { return algebra_.space(); }
  const LinearMap& alpha() const { return algebra_.alpha(); }
  const LinearMap& mult() const { return algebra_.mult(); }
  const LinearMap& unit() const { return algebra_.unit(); }
  const LinearMap& comult() const { return coalgebra_.comult(); }
  const LinearMap& counit() const { return coalgebra_.counit(); }

 private:
  HomAlgebra algebra_;
  HomCoalgebra coalgebra_;
};

class HomHopf {
 public:
  HomHopf(HomBialgebra bialgebra, const LinearMap& antipode);

  const HomBialgebra& bialgebra() const { return bialgebra_; }
  const LinearMap& antipode() const { return antipode_; }
  const Space& space() const { return bialgebra_.space(); }
  const LinearMap& alpha() const { return bialgebra_.alpha(); }

 private:
  HomBialgebra bialgebra_;
  LinearMap antipode_;
};

/// Product of two Hom-algebras: (a⊗b)(c⊗d) = ac⊗bd on the fused space.
HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b);
/// Product of two Hom-coalgebras: Δ = (id⊗flip⊗id)(Δ⊗Δ), ε = ε⊗ε, γ = γ⊗γ.
HomCoalgebra tensor_coalgebra(const HomCoalgebra& a, const HomCoalgebra& b);
/// The symmetry X⊗Y -> Y⊗X.
LinearMap flip(const Space& x, const Space& y);
/// η∘ε : C -> A.
LinearMap unit_counit(const HomCoalgebra& c, const HomAlgebra& a);

CheckReport check_hom_algebra(const HomAlgebra& a);
CheckReport check_hom_coalgebra(const HomCoalgebra& c);
CheckReport check_hom_bialgebra(const HomBialgebra& b);
/// Both convolution identities S(h1)h2 = ε(h)1 = h1S(h2), plus S∘α = α∘S.
CheckReport check_antipode(const HomHopf& h);
/// All of the above for a Hom-Hopf algebra.
CheckReport check_hom_hopf(const HomHopf& h);

/// Classical associativity and unit laws (α ignored); a deliberately small independent oracle.
bool classical_algebra_laws(const HomAlgebra& a);

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class TwistFailsAxioms : public Error {
 public:
  TwistFailsAxioms(const std::string& what, CheckReport report) : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Checks that φ is a bialgebra automorphism of a classical bialgebra (α = id).
CheckReport check_bialgebra_automorphism(const HomBialgebra& h, const LinearMap& phi);

/// Twists a classical Hopf algebra by a bialgebra automorphism φ:
/// m' = φ∘m, Δ' = (φ⁻¹⊗φ⁻¹)∘Δ, α = φ, same unit, counit and antipode.
/// The result is re-checked; throws NotAutomorphism or TwistFailsAxioms.
HomHopf yau_twist(const HomHopf& classical, const LinearMap& phi);

}  // namespace homhopf
