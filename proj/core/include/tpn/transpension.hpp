#pragma once

#include <nlohmann/json_fwd.hpp>

#include "tpn/multiplier.hpp"

namespace tpn {

/**
 * The four adjoint functors ∃ ⊣ fresh ⊣ ⊸ ⊣ √ between presheaves over
 * elements(Ψ) and elements(Ψ⋉𝐲U), realized as left/central/right liftings of
 * the fresh weakening functor, and of the provident Σ when it exists.
 */
struct FourFunctors {
  ElemSetting es;
  std::optional<ElemSum> sum;
  CheckReport setup;
  const Caps* caps = nullptr;

  Presheaf sum_psh(const Presheaf& g) const;    // ∃ : Psh(elements(Ψ⋉𝐲U)) → Psh(elements(Ψ))
  LeftLift fresh_psh(const Presheaf& g) const;  //     Psh(elements(Ψ)) → Psh(elements(Ψ⋉𝐲U))
  Presheaf lolli(const Presheaf& g) const;      // ⊸ : Psh(elements(Ψ⋉𝐲U)) → Psh(elements(Ψ))
  RightLift transp(const Presheaf& g) const;    // √ : Psh(elements(Ψ)) → Psh(elements(Ψ⋉𝐲U))

  // the subpresheaf marker (∈ ∂U) over elements(Ψ⋉𝐲U): a singleton cell at
  // every element whose leg is not dimensionally split
  Presheaf in_boundary() const;
};

FourFunctors four_functors(const MultWindow& mw, const Presheaf& psi_src, const Caps& caps);

// Criterion-style check suites. All are deterministic given (seed, window).
CheckReport check_adjunction_chain(const FourFunctors& ff, std::uint64_t seed, int sample_count);
CheckReport check_poles(const FourFunctors& ff, std::uint64_t seed, int sample_count);
CheckReport check_boundary_theorem(const MultWindow& mw, const Caps& caps, bool mutate = false);
CheckReport check_kernel(const FourFunctors& ff);
CheckReport check_fresh_exchange(const FourFunctors& ff, std::uint64_t seed, int sample_count);
CheckReport check_elimination_support(const FourFunctors& ff);

// The presheaf quantification properties, dispatched on the classification:
// cancellative∧affine → drop/const/unmerid are componentwise bijections;
// semicartesian → hide/spoil/cospoil exist and are natural;
// cartesian → ∃/fresh/⊸/√ agree with Σ/Ω/Π/$ for σ = π₁.
// For endo multipliers psi_big lives over the target window; Ψ is its
// restriction to the source window.
CheckReport check_psh_quantification(const MultWindow& mw, const Classification& cls,
                                     const Presheaf& psi_big, std::uint64_t seed, int sample_count,
                                     const Caps& caps);

// Declarative commutation fixtures. Kinds:
//   omega-omega-strict : Ω/Ω strict commutation over a weakening pullback square
//   lolli-subst-iso    : Σ_σ ∘ ⊸_{Ψ₁} ≅ ⊸_{Ψ₂} ∘ Σ_τ (cancellative ∧ affine)
//   cartesian-upgrades : ∃ ≅ Σ_p, fresh ≅ Ω_p, ⊸ ≅ Π_p, √ ≅ $_p for σ = π₁
//   transp-subst-dir   : the mate Ω_τ ∘ √_{Ψ₂} → √_{Ψ₁} ∘ Ω_σ exists and is natural
CheckReport check_commutation_instance(const nlohmann::json& spec, std::uint64_t seed,
                                       const Caps& caps);
nlohmann::json default_commutation_fixtures();

}  // namespace tpn
