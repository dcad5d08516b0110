#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpn/fincat.hpp"

namespace tpn {

/**
 * Contravariant Set-valued functor on an explicit category: a finite cell set
 * per object and, per morphism f: A → B, a restriction Γ(B) → Γ(A).
 */
struct Presheaf {
  const FinCat* base = nullptr;
  std::string name;
  std::vector<std::vector<std::string>> cell_names;  // per object
  std::vector<std::vector<int>> restr;               // [mor][cell of cod] → cell of dom

  int cells(ObjId o) const { return static_cast<int>(cell_names[o].size()); }
  int act(MorId f, int cell) const { return restr[f][cell]; }  // γ · f
  std::int64_t total_cells() const;
  std::string cell_label(ObjId o, int cell) const;
};

Presheaf terminal_presheaf(const FinCat& c);
Presheaf initial_presheaf(const FinCat& c);
Presheaf yoneda(const FinCat& c, ObjId w);
Presheaf coproduct(const Presheaf& a, const Presheaf& b);
CheckReport check_presheaf_laws(const Presheaf& g);
bool subpresheaf_closed(const Presheaf& host, const std::vector<std::vector<char>>& member);

// Natural transformation data: per object, a function on cell indices.
using PshMorData = std::vector<std::vector<int>>;

struct PshMor {
  const Presheaf* src = nullptr;
  const Presheaf* tgt = nullptr;
  PshMorData comp;
};

bool is_natural(const PshMor& m);
PshMorData identity_psh_mor(const Presheaf& g);
PshMorData compose_psh(const Presheaf& a, const PshMorData& g, const PshMorData& f);
bool psh_mor_mono(const PshMor& m);  // iff all components injective
bool psh_mor_epi(const PshMor& m);   // iff all components surjective

// Congruence quotient: identify the given cell pairs, close under restriction.
struct Quotient {
  Presheaf psh;
  std::vector<std::vector<int>> cls;  // [obj][old cell] → new cell
};
Quotient quotient_presheaf(const Presheaf& g,
                           const std::vector<std::pair<std::pair<ObjId, int>, std::pair<ObjId, int>>>& rel);

// Subpresheaf spanned by the given cells (downward closure under restriction).
struct Subpresheaf {
  Presheaf psh;
  std::vector<std::vector<int>> old_cell;  // [obj][new cell] → old cell
  PshMorData inclusion;                    // new → host
};
Subpresheaf span_subpresheaf(const Presheaf& host, std::vector<std::vector<char>> member);

/**
 * Category of elements of Γ: objects (W, γ ∈ Γ(W)), morphisms χ: (W,γ) → (W',γ')
 * the base morphisms with γ'·χ = γ. Owns its explicit category.
 */
struct ElementsCat {
  std::shared_ptr<FinCat> cat;
  const FinCat* base = nullptr;
  Presheaf psh;                                // copy of Γ
  std::vector<std::pair<ObjId, int>> elem;     // per elements-object: (base object, cell)
  std::vector<MorId> base_mor;                 // per elements-morphism
  Functor proj;                                // forgetful functor to base

  ObjId obj_of(ObjId base_obj, int cell) const;
  // the elements-morphism over χ with codomain (cod χ, cod_cell)
  MorId mor_over(MorId chi, int cod_cell) const;

 private:
  friend ElementsCat elements_category(const FinCat&, const Presheaf&, const Caps&, const std::string&);
  std::map<std::pair<ObjId, int>, ObjId> obj_index_;
  std::map<std::pair<MorId, int>, MorId> mor_index_;
};

ElementsCat elements_category(const FinCat& c, const Presheaf& g, const Caps& caps,
                              const std::string& label = "");

// Category of slices over U, built directly from hom-sets, with the forgetful
// pair functor. Isomorphic to elements_category(C, 𝐲U); kept separate so the
// two constructions can be cross-checked.
struct SliceCat {
  std::shared_ptr<FinCat> cat;
  const FinCat* base = nullptr;
  ObjId u = -1;
  std::vector<std::pair<ObjId, MorId>> slice;  // per object: (carrier W, leg ψ: W → U)
  std::vector<MorId> base_mor;
  Functor pair_functor;
  ObjId obj_of(ObjId carrier, MorId leg) const;
  MorId mor_over(MorId chi, ObjId cod_slice) const;

 private:
  friend SliceCat slice_category(const FinCat&, ObjId, const Caps&);
  std::map<std::pair<ObjId, MorId>, ObjId> obj_index_;
  std::map<std::pair<MorId, ObjId>, MorId> mor_index_;
};

SliceCat slice_category(const FinCat& c, ObjId u, const Caps& caps);

/**
 * Left lifting of F: C → D applied to Γ over C. Cells at d are zigzag classes
 * of triples (c, φ: d → Fc, γ ∈ Γ(c)); class representatives are the least
 * triples in enumeration order.
 */
struct LeftLift {
  struct Triple {
    ObjId c;
    MorId phi;
    int cell;
    auto operator<=>(const Triple&) const = default;
  };
  Presheaf psh;  // over tgt(F)
  std::vector<std::vector<Triple>> rep;               // [d][class] — least member
  std::vector<std::vector<std::vector<Triple>>> members;  // [d][class] — full class
  int class_of(ObjId d, const Triple& t) const;

 private:
  friend LeftLift left_lift(const Functor&, const Presheaf&, const Caps&, const std::string&);
  std::vector<std::map<Triple, int>> index_;  // per d
};

LeftLift left_lift(const Functor& f, const Presheaf& g, const Caps& caps,
                   const std::string& label = "");

Presheaf central_lift(const Functor& f, const Presheaf& d, const std::string& label = "");

/**
 * Right lifting: cells at d are the natural families assigning to each
 * (c, ψ: Fc → d) an element of Γ(c). A family is stored as a presheaf morphism
 * central_lift(F, 𝐲d) → Γ.
 */
struct RightLift {
  Presheaf psh;                                 // over tgt(F)
  std::vector<Presheaf> test;                   // per d: central_lift(F, 𝐲d) over src(F)
  std::vector<std::vector<PshMorData>> family;  // [d][cell]
  // evaluate family cell at (c, ψ: Fc → d)
  int eval(ObjId d, int cell, ObjId c, int hom_pos) const;
};

RightLift right_lift(const Functor& f, const Presheaf& g, const Caps& caps,
                     const std::string& label = "");

// Induced morphism on left lifts from a natural transformation α: F → G
// (components in tgt): class (c, φ, γ) ↦ class (c, α_c ∘ φ, γ).
PshMorData left_lift_of_nat(const Functor& f, const Functor& g, const std::vector<MorId>& alpha,
                            const LeftLift& lf, const LeftLift& lg);

// Functorial action of the liftings on presheaf morphisms.
PshMorData left_lift_mor(const Functor& f, const LeftLift& la, const LeftLift& lb,
                         const Presheaf& a, const PshMorData& sigma);
PshMorData central_lift_mor(const Functor& f, const PshMorData& sigma);
PshMorData right_lift_mor(const Functor& f, const RightLift& ra, const RightLift& rb,
                          const Presheaf& a, const Presheaf& b, const PshMorData& sigma);

// Adjunction transposes for F! ⊣ F* ⊣ F*.
PshMorData transpose_left_to_central(const Functor& f, const LeftLift& lg, const Presheaf& g,
                                     const Presheaf& d, const PshMorData& sigma);
PshMorData transpose_central_to_left(const Functor& f, const LeftLift& lg, const Presheaf& g,
                                     const Presheaf& d, const PshMorData& tau);
PshMorData transpose_central_to_right(const Functor& f, const Presheaf& d, const Presheaf& g,
                                      const RightLift& rg, const PshMorData& sigma);
PshMorData transpose_right_to_central(const Functor& f, const Presheaf& d, const Presheaf& g,
                                      const RightLift& rg, const PshMorData& tau);

CheckReport check_lift_adjunctions(const Functor& f, const std::vector<Presheaf>& src_samples,
                                   const std::vector<Presheaf>& tgt_samples, const Caps& caps);

// Preimage of σ: Δ → Γ as a presheaf over elements(Γ).
Presheaf preimage(const ElementsCat& e_gamma, const Presheaf& delta, const PshMorData& sigma);

// Context extension Ψ.A for A over elements(Ψ): a presheaf over the base
// together with the projection to Ψ and the cell decomposition.
struct TotalPsh {
  Presheaf psh;                                       // over base
  PshMorData proj;                                    // Ψ.A → Ψ
  std::vector<std::vector<std::pair<int, int>>> split;  // [W][cell] → (ψ cell, A cell)
  std::vector<std::map<std::pair<int, int>, int>> index;
};
TotalPsh total_presheaf(const ElementsCat& e, const Presheaf& a, const std::string& label = "");

// Substitution functor stack for σ: Ψ' → Ψ between presheaves over the base.
Functor pair_functor_of(const ElementsCat& e_src, const ElementsCat& e_tgt, const PshMorData& sigma);
std::optional<Functor> wkn_functor_of(const ElementsCat& e_tgt, const ElementsCat& e_src,
                                      const PshMorData& sigma);

// All natural transformations A → B in canonical order (backtracking over
// cells with naturality forward-checking; objects visited by ascending cell
// count). Throws LimitExceeded past the node budget.
std::vector<PshMorData> enumerate_psh_mors(const Presheaf& a, const Presheaf& b, const Caps& caps,
                                           std::int64_t limit = -1);

// Natural isomorphism search: exhaustive backtracking with cardinality and
// restriction-fingerprint pruning. Empty result is a definitive absence
// (within caps).
std::optional<PshMorData> iso_search(const Presheaf& a, const Presheaf& b, const Caps& caps);

// Seeded sample generation: random sub-quotients of sums of representables,
// collapsed until every cell set has at most max_cell elements. Exactly
// functorial by construction; reproducible from the seed.
Presheaf seeded_presheaf(const FinCat& c, class Prng& rng, int max_cell = 3,
                         const std::string& label = "");
std::vector<Presheaf> seeded_presheaves(const FinCat& c, std::uint64_t seed, int count,
                                        int max_cell = 3);

struct SeededMor {
  Presheaf src, tgt;
  PshMorData mor;
};
SeededMor seeded_psh_mor(const FinCat& c, std::uint64_t seed, int max_cell = 3);

enum class SubstKind { Sigma, Omega, Pi, Dollar };

struct SubstError : std::runtime_error {
  explicit SubstError(const std::string& w) : std::runtime_error(w) {}
};

// Σ/Ω/Π along pair_σ; $ as the right lift along wkn_σ (MissingPullbacks if the
// window lacks them).
Presheaf subst_functor(SubstKind kind, const ElementsCat& e_psi_prime, const ElementsCat& e_psi,
                       const PshMorData& sigma, const Presheaf& x, const Caps& caps);

}  // namespace tpn
