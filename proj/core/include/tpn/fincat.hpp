#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tpn/caps.hpp"
#include "tpn/report.hpp"

namespace tpn {

using ObjId = std::int32_t;
using MorId = std::int32_t;
inline constexpr MorId kNoMor = -1;

struct MorData {
  std::string name;
  ObjId dom = -1;
  ObjId cod = -1;
};

/**
 * Fully tabulated finite category: indexed objects and morphisms, an identity
 * per object and an explicit composition table over composable pairs.
 * Immutable after finalize(); all operations are pure.
 */
class FinCat {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorData> mors;
  std::vector<MorId> identity;  // per object

  ObjId add_object(std::string obj_name);
  MorId add_morphism(std::string mor_name, ObjId dom, ObjId cod);
  void set_identity(ObjId o, MorId m);
  void set_compose(MorId g, MorId f, MorId gf);  // g∘f where dom(g) = cod(f)
  void finalize();  // builds hom buckets; call once after construction

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(mors.size()); }
  ObjId dom(MorId m) const { return mors[m].dom; }
  ObjId cod(MorId m) const { return mors[m].cod; }
  MorId id(ObjId o) const { return identity[o]; }
  bool composable(MorId g, MorId f) const { return mors[g].dom == mors[f].cod; }

  MorId compose(MorId g, MorId f) const;                 // throws on missing entry
  std::optional<MorId> try_compose(MorId g, MorId f) const;
  const std::vector<MorId>& hom(ObjId a, ObjId b) const;  // morphisms a → b
  int hom_index(MorId m) const { return hom_pos_[m]; }    // position within its hom bucket

  // Window-relative searches (definitive only for the tabulated data).
  std::optional<ObjId> find_terminal() const;
  std::optional<ObjId> find_initial() const;
  std::optional<MorId> inverse(MorId m) const;
  bool is_iso(MorId m) const { return inverse(m).has_value(); }

  std::string mor_label(MorId m) const;  // "name: dom -> cod"

 private:
  std::unordered_map<std::uint64_t, MorId> comp_;
  std::vector<std::vector<std::vector<MorId>>> hom_;  // [a][b]
  std::vector<int> hom_pos_;
  bool finalized_ = false;
};

// Identity/associativity/dom-cod coherence; failures carry witnesses.
CheckReport check_category_laws(const FinCat& c, const Caps& caps);

struct MorphismClass {
  bool mono = false;
  bool split_epi = false;
  std::optional<MorId> section;
};
MorphismClass classify_morphism(const FinCat& c, MorId f);

struct Functor {
  const FinCat* src = nullptr;
  const FinCat* tgt = nullptr;
  std::string name;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId on(ObjId o) const { return obj_map[o]; }
  MorId on_mor(MorId m) const { return mor_map[m]; }
};

Functor identity_functor(const FinCat& c);
Functor compose(const Functor& g, const Functor& f);  // g∘f
bool functor_equal(const Functor& f, const Functor& g);
CheckReport check_functor_laws(const Functor& f);

struct NatTrans {
  const Functor* source = nullptr;  // F
  const Functor* target = nullptr;  // G, same src/tgt categories
  std::vector<MorId> comp;          // per src object X: F(X) → G(X) in tgt
};
CheckReport check_naturality(const NatTrans& n, const std::string& label);

// Category-level adjunction L ⊣ R, L: C → D, R: D → C.
struct Adjunction {
  const Functor* left = nullptr;
  const Functor* right = nullptr;
  std::vector<MorId> unit;    // per object X of C: X → R(L(X))
  std::vector<MorId> counit;  // per object Y of D: L(R(Y)) → Y
};
CheckReport check_adjunction(const Adjunction& adj, const std::string& label);

// Initial object of the comma category (b ↓ F): a universal arrow b → F(a).
struct UniversalArrow {
  ObjId obj;   // a, in src(F)
  MorId arrow; // b → F(a) for left universal, F(a) → b for right universal
};
std::optional<UniversalArrow> left_universal_arrow(const Functor& f, ObjId b);
std::optional<UniversalArrow> right_universal_arrow(const Functor& f, ObjId b);

// Limiting cone over f: A → Z ← B: g, found by exhaustive universal-property
// check; absence is definitive only relative to the window.
struct PullbackResult {
  ObjId obj;
  MorId to_a;
  MorId to_b;
};
std::optional<PullbackResult> pullback(const FinCat& c, MorId f, MorId g);

struct ProductResult {
  ObjId obj;
  MorId p1;
  MorId p2;
};
std::optional<ProductResult> product(const FinCat& c, ObjId x, ObjId y);

// Bijective-on-objects-and-morphisms functor search (explicit category iso).
std::optional<Functor> find_category_iso(const FinCat& a, const FinCat& b, const Caps& caps);

// Full subcategory on the marked objects, with the inclusion functor.
struct FullSubcat {
  std::shared_ptr<FinCat> cat;
  std::vector<ObjId> obj_of;  // per subcat object: host object
  std::vector<MorId> mor_of;
  Functor incl;
};
FullSubcat full_subcategory(const FinCat& c, const std::vector<char>& keep,
                            const std::string& name);

}  // namespace tpn
