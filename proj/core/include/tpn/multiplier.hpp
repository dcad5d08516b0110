#pragma once

#include "tpn/family.hpp"
#include "tpn/presheaf.hpp"
#include "tpn/zoo.hpp"

namespace tpn {

// Search verdict for "π₂: W⋉U → U factors over φ". Pass carries the least
// witness (W, χ) in canonical order; Fail is definitive relative to the
// family's declared section bound; Frontier means the window was too small
// to decide (resolved by the family oracle when one exists).
struct DimSplit {
  Verdict verdict = Verdict::Fail;
  ObjId w = -1;
  MorId section = kNoMor;
  bool oracle_decided = false;
};
DimSplit is_dimensionally_split(const MultWindow& mw, MorId phi);

struct BoundaryData {
  Presheaf y_u;                                // 𝐲U over the target window
  Presheaf boundary;                           // ∂U
  PshMorData inclusion;                        // ∂U ↪ 𝐲U
  std::vector<std::vector<char>> split_cell;   // per (V, hom cell): dimensionally split?
  std::vector<std::vector<char>> frontier;     // undecided by search (oracle may have decided)
  CheckReport validity;                        // restriction closure of the boundary
};
BoundaryData boundary_presheaf(const MultWindow& mw);

// Σ_U at one slice: the initial object of ((V,φ) ↓ fresh_U), by exhaustive
// universal-property search in canonical order.
struct SumBase {
  ObjId w;      // in src
  MorId eta;    // V → W⋉U in tgt, with π₂∘η = φ
};
std::optional<SumBase> sum_base(const MultWindow& mw, ObjId v, MorId phi);

// Classifies the multiplier on windows built internally: the main window at
// src_bound, plus a reduced tower for the diagonal equations when 3/4
// structure is declared. Property outcomes land in `observed`; Fail entries
// in `detail` are reserved for genuine inconsistencies (structure violations,
// oracle disagreements), so the report stays ok() for legitimately negative
// classifications.
struct PropertyResult {
  Classification observed;
  CheckReport detail;
};
PropertyResult property_report(const MultFamily& fam, int src_bound, const Caps& caps);

/**
 * The element-level setting for a multiplier and a presheaf Ψ over its source
 * window: Ψ⋉𝐲U, both element categories, the fresh weakening functor between
 * them, and the dimensional-splitness of every element's leg.
 */
struct ElemSetting {
  const MultWindow* mw = nullptr;
  Presheaf psi;          // over src window
  LeftLift psi_u;        // Ψ⋉𝐲U over tgt window
  ElementsCat e_src;     // elements(Ψ)
  ElementsCat e_tgt;     // elements(Ψ⋉𝐲U)
  Functor fresh;         // e_src.cat → e_tgt.cat
  std::vector<MorId> pi2_leg;     // per e_tgt object: π₂∘φ in tgt
  std::vector<DimSplit> leg_split;
};
ElemSetting elem_setting(const MultWindow& mw, const Presheaf& psi_src, const Caps& caps);

// Provident Σ: the left adjoint of fresh at element level, built from
// base-level universal arrows via the factorization formula, with
// well-definedness across representatives verified. Window truncation can
// leave Σ undefined at the largest carriers, so the structure lives on the
// full subcategory of elements where the universal arrow exists; fresh always
// lands inside it.
struct ElemSum {
  std::vector<char> defined;  // per e_tgt object
  bool total = false;
  FullSubcat sub;             // full subcategory of e_tgt.cat on the defined objects
  std::vector<ObjId> sub_of_obj;  // host → sub object (-1 outside)
  std::vector<MorId> sub_of_mor;  // host → sub morphism (kNoMor outside)
  Functor fresh_sub;          // e_src.cat → sub.cat
  Functor sum;                // sub.cat → e_src.cat
  std::vector<MorId> copy_comp;  // unit, per sub object: x → fresh(sum x), in sub.cat
  std::vector<MorId> drop_comp;  // counit, per e_src object: sum(fresh s) → s
};
std::optional<ElemSum> elem_sum(const ElemSetting& es, CheckReport& rep);

// sum_slice at one element, without constructing the whole functor.
std::optional<std::pair<ObjId, MorId>> sum_slice_at(const ElemSetting& es, ObjId e_tgt_obj,
                                                    CheckReport* rep);

// Composite-multiplier cross-checks (fresh decomposition on legs, Σ
// decomposition per slice) on compatible window towers.
CheckReport check_composite_multiplier(const MultFamily& m1, const MultFamily& m2, int src_bound,
                                       const Caps& caps);

// A multiplier morphism ⋉υ between two multipliers sharing windows:
// components W⋉U → W⋉U' with π₂' ∘ (W⋉υ) = υ ∘ π₂.
struct MultMorphism {
  const MultWindow* m1 = nullptr;
  const MultWindow* m2 = nullptr;  // same src/tgt windows
  MorId upsilon = kNoMor;          // υ: U → U' in tgt
  std::vector<MorId> comp;         // per src object W
};
CheckReport check_mult_morphism(const MultMorphism& mm);

// The induced transformation pair_υ ∘ fresh_U → fresh_U' on elements over Ψ,
// and (when both quantifiable) its mate Σ' ∘ pair_υ → Σ by cotransposition.
CheckReport multiplier_morphism_maps(const MultMorphism& mm, const Presheaf& psi_src,
                                     const Caps& caps);

}  // namespace tpn
