#pragma once

#include "tpn/presheaf.hpp"

namespace tpn {

/**
 * Slice lifting of an arbitrary base functor G: 𝒲 → 𝒲': the functor
 * elements(Ψ) → elements(G_!Ψ), (W, ψ) ↦ (GW, G_!ψ), together with the lifted
 * presheaf; the three presheaf liftings of the result come from the presheaf
 * module.
 */
struct SliceLift {
  Presheaf psi;       // over src(G)
  LeftLift g_psi;     // G_!Ψ over tgt(G)
  ElementsCat e_src;  // elements(Ψ)
  ElementsCat e_tgt;  // elements(G_!Ψ)
  Functor lifted;
  CheckReport checks;
};
SliceLift slice_lift(const Functor& g, const Presheaf& psi, const Caps& caps);

// A base adjunction G ⊣ S between two windows, with unit/counit.
struct BaseAdjunction {
  const Functor* g = nullptr;       // 𝒲 → 𝒲'
  const Functor* s = nullptr;       // 𝒲' → 𝒲
  std::vector<MorId> unit;          // W → S(G(W))
  std::vector<MorId> counit;        // G(S(W')) → W'
};

// Verifies the first row of the piped-adjunction table on Ψ' over tgt(G):
// pair_{ε_!} ∘ G-slice ⊣ S-slice by an explicit hom-set bijection, then the
// lifted rows via the generic lift-adjunction checker, and the adjoint
// uniqueness iso R_! ≅ L* on a sample.
CheckReport check_piped_adjunction(const BaseAdjunction& adj, const Presheaf& psi_prime,
                                   std::uint64_t seed, int sample_count, const Caps& caps);

}  // namespace tpn
