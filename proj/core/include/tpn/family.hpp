#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpn/fincat.hpp"
#include "tpn/presheaf.hpp"

namespace tpn {

/**
 * A lazily enumerable category presented by canonical normal forms: object
 * descriptors with a size function and, per ordered object pair, the finite
 * hom-set of morphism descriptors. materialize_window() cuts the full
 * subcategory on all objects of size ≤ bound into an ExplicitFinCategory.
 *
 * Descriptors are canonical: hom() returns each morphism exactly once and
 * compose() returns the canonical form of the composite.
 */
class CatFamily {
 public:
  virtual ~CatFamily() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> objects(int bound) const = 0;
  virtual int size(const std::string& obj) const = 0;
  virtual std::vector<std::string> hom(const std::string& dom, const std::string& cod) const = 0;
  virtual std::string identity(const std::string& obj) const = 0;
  virtual std::string compose(const std::string& a, const std::string& b, const std::string& c,
                              const std::string& g, const std::string& f) const = 0;
  // normal-form round trip hook; default: descriptors are their own parse
  virtual std::string parse_object(const std::string& s) const { return s; }

  // canonical form modulo the family's chosen isomorphism representatives
  // (e.g. clock contexts modulo variable exchange); used only when comparing
  // searched universal objects against hand-coded oracles
  virtual std::string canonical_object(const std::string& s) const { return s; }
};

struct Window {
  std::shared_ptr<FinCat> cat;
  const CatFamily* family = nullptr;
  int bound = 0;
  std::vector<std::string> obj_desc;
  std::vector<std::string> mor_desc;

  ObjId obj(const std::string& desc) const;  // throws WindowEscape when absent
  MorId mor(const std::string& dom_desc, const std::string& cod_desc,
            const std::string& desc) const;
  bool has_obj(const std::string& desc) const { return obj_index_.count(desc) > 0; }

  std::map<std::string, ObjId> obj_index_;
  std::map<std::string, MorId> mor_index_;  // key: dom + "|" + cod + "|" + desc
};

// Full subcategory on objects of size ≤ bound; category laws verified.
Window materialize_window(const CatFamily& fam, int bound, const Caps& caps,
                          bool check_laws = true);

/**
 * A multiplier presented at family level: a functor between two category
 * families together with the chosen unit isomorphism ⊤⋉U ≅ U and optional
 * copoint / diagonal / cartesian structure. Window-level data is derived by
 * make_mult_window().
 */
class MultFamily {
 public:
  virtual ~MultFamily() = default;
  virtual std::string name() const = 0;
  virtual const CatFamily& src() const = 0;
  virtual const CatFamily& tgt() const = 0;
  virtual bool endo() const = 0;
  virtual int growth() const = 0;  // size(W⋉U) = size(W) + growth, exactly
  virtual std::string top() const = 0;       // terminal object of src
  virtual std::string u_object() const = 0;  // U, in tgt
  virtual std::string apply_obj(const std::string& w) const = 0;
  virtual std::string apply_mor(const std::string& dom, const std::string& cod,
                                const std::string& f) const = 0;
  virtual std::string unit_iso() const = 0;      // ⊤⋉U → U
  virtual std::string unit_iso_inv() const = 0;  // U → ⊤⋉U

  virtual bool semicartesian() const { return false; }
  virtual std::string proj1(const std::string& w) const {
    throw std::logic_error(name() + ": no first projection");
  }
  virtual bool three_quarter() const { return false; }
  virtual std::string diag(const std::string& w) const {  // W⋉U → (W⋉U)⋉U
    throw std::logic_error(name() + ": no diagonal");
  }
  virtual bool cartesian() const { return false; }

  // Hand-coded Σ oracle where the source material gives a formula: maps a
  // slice (V, φ: V → U) to (W, η: V → W⋉U). Used as a cross-check against
  // universal-arrow search, never as the checker itself.
  virtual std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string& phi) const {
    (void)v;
    (void)phi;
    return std::nullopt;
  }

  // Dimensional-splitness oracle (exact characterizations), cross-check only.
  virtual std::optional<bool> dim_split_oracle(const std::string& v,
                                               const std::string& phi) const {
    (void)v;
    (void)phi;
    return std::nullopt;
  }

  // A size bound on W sufficient for the dimensional-section search from V to
  // be exact; verdicts at larger V are tagged FRONTIER.
  virtual int section_bound(int v_size) const { return v_size; }

  // Upper bound on size(W) over all W with W⋉U ≅ V. The connection-freedom
  // check can only report a hard failure when this fits inside the source
  // window; otherwise the slice is window-skipped.
  virtual int fresh_preimage_bound(int v_size) const {
    return v_size > growth() ? v_size - growth() : 0;
  }
};

struct MultWindow {
  const MultFamily* fam = nullptr;
  Window src;  // bound b
  Window tgt;  // bound ≥ b + growth
  Functor ltimes;                 // src.cat → tgt.cat
  std::optional<Functor> embed;   // src.cat → tgt.cat, endo families only
  ObjId top_src = -1;
  ObjId u = -1;                   // U in tgt
  MorId unit_iso = kNoMor;        // ⊤⋉U → U
  MorId unit_iso_inv = kNoMor;
  std::vector<MorId> pi2;         // per src object W: W⋉U → U in tgt
  std::optional<std::vector<MorId>> pi1;       // W⋉U → embed(W)
  std::optional<std::vector<MorId>> diagonal;  // W⋉U → (W⋉U)⋉U (needs headroom)
};

// tgt bound defaults to src_bound + growth; pass extra > growth for checks
// that apply the multiplier twice.
MultWindow make_mult_window(const MultFamily& fam, int src_bound, const Caps& caps,
                            int extra = -1);

// Composite multiplier ⋉(U⋉U') as a family; requires M1.tgt == M2.src family.
std::shared_ptr<MultFamily> compose_mult_families(std::shared_ptr<const MultFamily> m1,
                                                  std::shared_ptr<const MultFamily> m2);

// The identity multiplier W ⋉ ⊤ := W over an arbitrary base.
std::shared_ptr<MultFamily> identity_mult_family(std::shared_ptr<const CatFamily> base,
                                                 const std::string& top_desc);

}  // namespace tpn
