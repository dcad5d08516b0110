#include "tpn/family.hpp"

#include <algorithm>

namespace tpn {

ObjId Window::obj(const std::string& desc) const {
  auto it = obj_index_.find(desc);
  if (it == obj_index_.end())
    throw WindowEscape("object " + desc + " outside window of " + family->name() + " (bound " +
                       std::to_string(bound) + ")");
  return it->second;
}

MorId Window::mor(const std::string& dom_desc, const std::string& cod_desc,
                  const std::string& desc) const {
  auto it = mor_index_.find(dom_desc + "|" + cod_desc + "|" + desc);
  if (it == mor_index_.end())
    throw WindowEscape("morphism " + desc + ": " + dom_desc + " -> " + cod_desc +
                       " outside window of " + family->name());
  return it->second;
}

Window materialize_window(const CatFamily& fam, int bound, const Caps& caps, bool check_laws) {
  Window w;
  w.cat = std::make_shared<FinCat>();
  w.family = &fam;
  w.bound = bound;
  w.cat->name = fam.name() + "≤" + std::to_string(bound);
  for (const auto& o : fam.objects(bound)) {
    if (fam.size(o) > bound) continue;
    w.obj_index_[o] = w.cat->add_object(o);
    w.obj_desc.push_back(o);
    if (w.cat->num_objects() > caps.max_objects)
      throw LimitExceeded(w.cat->name + ": object count exceeds cap");
  }
  // note: obj_desc order is the family's enumeration order, which FinCat keeps
  for (ObjId a = 0; a < w.cat->num_objects(); ++a)
    for (ObjId b = 0; b < w.cat->num_objects(); ++b)
      for (const auto& m : fam.hom(w.obj_desc[a], w.obj_desc[b])) {
        MorId id = w.cat->add_morphism(m + ":" + w.obj_desc[a] + ">" + w.obj_desc[b], a, b);
        w.mor_desc.push_back(m);
        w.mor_index_[w.obj_desc[a] + "|" + w.obj_desc[b] + "|" + m] = id;
        if (w.cat->num_morphisms() > caps.max_morphisms)
          throw LimitExceeded(w.cat->name + ": morphism count exceeds cap");
      }
  for (ObjId a = 0; a < w.cat->num_objects(); ++a)
    w.cat->set_identity(a, w.mor(w.obj_desc[a], w.obj_desc[a], fam.identity(w.obj_desc[a])));
  std::int64_t entries = 0;
  for (MorId f = 0; f < w.cat->num_morphisms(); ++f)
    for (MorId g = 0; g < w.cat->num_morphisms(); ++g) {
      if (w.cat->dom(g) != w.cat->cod(f)) continue;
      if (++entries > caps.max_compositions)
        throw LimitExceeded(w.cat->name + ": composition entries exceed cap");
      const std::string& a = w.obj_desc[w.cat->dom(f)];
      const std::string& b = w.obj_desc[w.cat->cod(f)];
      const std::string& c = w.obj_desc[w.cat->cod(g)];
      std::string gf = fam.compose(a, b, c, w.mor_desc[g], w.mor_desc[f]);
      w.cat->set_compose(g, f, w.mor(a, c, gf));
    }
  w.cat->finalize();
  if (check_laws) {
    CheckReport rep = check_category_laws(*w.cat, caps);
    if (!rep.ok())
      throw std::logic_error(w.cat->name + ": category laws fail on window: " + rep.to_text());
  }
  return w;
}

MultWindow make_mult_window(const MultFamily& fam, int src_bound, const Caps& caps, int extra) {
  if (extra < 0) extra = fam.growth();
  MultWindow mw;
  mw.fam = &fam;
  mw.src = materialize_window(fam.src(), src_bound, caps);
  mw.tgt = materialize_window(fam.tgt(), src_bound + extra, caps);

  mw.ltimes.src = mw.src.cat.get();
  mw.ltimes.tgt = mw.tgt.cat.get();
  mw.ltimes.name = fam.name();
  for (const auto& o : mw.src.obj_desc) mw.ltimes.obj_map.push_back(mw.tgt.obj(fam.apply_obj(o)));
  for (MorId m = 0; m < mw.src.cat->num_morphisms(); ++m) {
    const std::string& a = mw.src.obj_desc[mw.src.cat->dom(m)];
    const std::string& b = mw.src.obj_desc[mw.src.cat->cod(m)];
    mw.ltimes.mor_map.push_back(
        mw.tgt.mor(fam.apply_obj(a), fam.apply_obj(b), fam.apply_mor(a, b, mw.src.mor_desc[m])));
  }
  {
    CheckReport rep = check_functor_laws(mw.ltimes);
    if (!rep.ok()) throw std::logic_error(fam.name() + ": functor laws fail: " + rep.to_text());
  }

  if (fam.endo()) {
    Functor e;
    e.src = mw.src.cat.get();
    e.tgt = mw.tgt.cat.get();
    e.name = "emb";
    for (const auto& o : mw.src.obj_desc) e.obj_map.push_back(mw.tgt.obj(o));
    for (MorId m = 0; m < mw.src.cat->num_morphisms(); ++m)
      e.mor_map.push_back(mw.tgt.mor(mw.src.obj_desc[mw.src.cat->dom(m)],
                                     mw.src.obj_desc[mw.src.cat->cod(m)], mw.src.mor_desc[m]));
    mw.embed = std::move(e);
  }

  mw.top_src = mw.src.obj(fam.top());
  mw.u = mw.tgt.obj(fam.u_object());
  std::string top_u = fam.apply_obj(fam.top());
  mw.unit_iso = mw.tgt.mor(top_u, fam.u_object(), fam.unit_iso());
  mw.unit_iso_inv = mw.tgt.mor(fam.u_object(), top_u, fam.unit_iso_inv());
  if (mw.tgt.cat->compose(mw.unit_iso, mw.unit_iso_inv) != mw.tgt.cat->id(mw.u) ||
      mw.tgt.cat->compose(mw.unit_iso_inv, mw.unit_iso) != mw.tgt.cat->id(mw.tgt.obj(top_u)))
    throw std::logic_error(fam.name() + ": unit iso is not an isomorphism");

  // derived second projection π₂(W) = unit_iso ∘ ((W→⊤)⋉U)
  mw.pi2.resize(mw.src.cat->num_objects());
  for (ObjId w = 0; w < mw.src.cat->num_objects(); ++w) {
    const auto& bang = mw.src.cat->hom(w, mw.top_src);
    if (bang.size() != 1)
      throw std::logic_error(fam.name() + ": declared top is not terminal in window");
    mw.pi2[w] = mw.tgt.cat->compose(mw.unit_iso, mw.ltimes.mor_map[bang[0]]);
  }

  if (fam.semicartesian()) {
    std::vector<MorId> p1(mw.src.cat->num_objects());
    for (ObjId w = 0; w < mw.src.cat->num_objects(); ++w) {
      const std::string& wd = mw.src.obj_desc[w];
      p1[w] = mw.tgt.mor(fam.apply_obj(wd), wd, fam.proj1(wd));
    }
    mw.pi1 = std::move(p1);
  }
  if (fam.three_quarter() && extra >= 2 * fam.growth()) {
    std::vector<MorId> d(mw.src.cat->num_objects());
    for (ObjId w = 0; w < mw.src.cat->num_objects(); ++w) {
      const std::string& wd = mw.src.obj_desc[w];
      d[w] = mw.tgt.mor(fam.apply_obj(wd), fam.apply_obj(fam.apply_obj(wd)), fam.diag(wd));
    }
    mw.diagonal = std::move(d);
  }
  return mw;
}

namespace {

class ComposedMult : public MultFamily {
 public:
  ComposedMult(std::shared_ptr<const MultFamily> m1, std::shared_ptr<const MultFamily> m2)
      : m1_(std::move(m1)), m2_(std::move(m2)) {}

  std::string name() const override { return m1_->name() + "∘" + m2_->name(); }
  const CatFamily& src() const override { return m1_->src(); }
  const CatFamily& tgt() const override { return m2_->tgt(); }
  bool endo() const override { return m1_->endo() && m2_->endo(); }
  int growth() const override { return m1_->growth() + m2_->growth(); }
  std::string top() const override { return m1_->top(); }
  std::string u_object() const override { return m2_->apply_obj(m1_->u_object()); }
  std::string apply_obj(const std::string& w) const override {
    return m2_->apply_obj(m1_->apply_obj(w));
  }
  std::string apply_mor(const std::string& dom, const std::string& cod,
                        const std::string& f) const override {
    return m2_->apply_mor(m1_->apply_obj(dom), m1_->apply_obj(cod), m1_->apply_mor(dom, cod, f));
  }
  // (⊤⋉U)⋉U' → U⋉U' is the image of the first unit iso under ⋉U'
  std::string unit_iso() const override {
    return m2_->apply_mor(m1_->apply_obj(m1_->top()), m1_->u_object(), m1_->unit_iso());
  }
  std::string unit_iso_inv() const override {
    return m2_->apply_mor(m1_->u_object(), m1_->apply_obj(m1_->top()), m1_->unit_iso_inv());
  }
  bool semicartesian() const override { return m1_->semicartesian() && m2_->semicartesian(); }
  std::string proj1(const std::string& w) const override {
    // π₁(W) = π₁^U(W) ∘ π₁^{U'}(W⋉U), composed at descriptor level
    const CatFamily& c = m2_->tgt();  // = m1_->tgt() for endo composites
    std::string wu = m1_->apply_obj(w);
    std::string wuu = m2_->apply_obj(wu);
    return c.compose(wuu, wu, w, m1_->proj1(w), m2_->proj1(wu));
  }
  bool cartesian() const override { return m1_->cartesian() && m2_->cartesian(); }

 private:
  std::shared_ptr<const MultFamily> m1_, m2_;
};

class IdentityMult : public MultFamily {
 public:
  IdentityMult(std::shared_ptr<const CatFamily> base, std::string top_desc)
      : base_(std::move(base)), top_(std::move(top_desc)) {}
  std::string name() const override { return "id-mult(" + base_->name() + ")"; }
  const CatFamily& src() const override { return *base_; }
  const CatFamily& tgt() const override { return *base_; }
  bool endo() const override { return true; }
  int growth() const override { return 0; }
  std::string top() const override { return top_; }
  std::string u_object() const override { return top_; }
  std::string apply_obj(const std::string& w) const override { return w; }
  std::string apply_mor(const std::string&, const std::string&,
                        const std::string& f) const override {
    return f;
  }
  std::string unit_iso() const override { return base_->identity(top_); }
  std::string unit_iso_inv() const override { return base_->identity(top_); }
  bool semicartesian() const override { return true; }
  std::string proj1(const std::string& w) const override { return base_->identity(w); }
  bool three_quarter() const override { return true; }
  std::string diag(const std::string& w) const override { return base_->identity(w); }
  bool cartesian() const override { return true; }
  std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string& phi) const override {
    (void)phi;
    return std::make_pair(v, base_->identity(v));
  }
  std::optional<bool> dim_split_oracle(const std::string&, const std::string&) const override {
    return true;  // π₂ = () factors over every morphism to the terminal object
  }

 private:
  std::shared_ptr<const CatFamily> base_;
  std::string top_;
};

}  // namespace

std::shared_ptr<MultFamily> compose_mult_families(std::shared_ptr<const MultFamily> m1,
                                                  std::shared_ptr<const MultFamily> m2) {
  return std::make_shared<ComposedMult>(std::move(m1), std::move(m2));
}

std::shared_ptr<MultFamily> identity_mult_family(std::shared_ptr<const CatFamily> base,
                                                 const std::string& top_desc) {
  return std::make_shared<IdentityMult>(std::move(base), top_desc);
}

}  // namespace tpn
