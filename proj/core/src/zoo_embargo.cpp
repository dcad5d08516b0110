#include <sstream>

#include "tpn/zoo.hpp"

namespace tpn {

namespace {

// B × ↑ where ↑ = {⊥ → ⊤}: objects carry an embargo bit, written "W@b" and
// "W@t". The ↑-component of a morphism is forced by its endpoints, so inner
// descriptors are reused as-is.
class ArrowProductFamily : public CatFamily {
 public:
  explicit ArrowProductFamily(std::shared_ptr<const CatFamily> base) : base_(std::move(base)) {}

  std::string name() const override { return base_->name() + "×↑"; }

  static std::pair<std::string, char> split(const std::string& obj) {
    auto at = obj.rfind('@');
    return {obj.substr(0, at), obj[at + 1]};
  }

  std::vector<std::string> objects(int bound) const override {
    std::vector<std::string> out;
    for (const auto& w : base_->objects(bound)) {
      out.push_back(w + "@b");
      out.push_back(w + "@t");
    }
    return out;
  }
  int size(const std::string& obj) const override { return base_->size(split(obj).first); }
  std::vector<std::string> hom(const std::string& dom, const std::string& cod) const override {
    auto [wd, od] = split(dom);
    auto [wc, oc] = split(cod);
    if (od == 't' && oc == 'b') return {};
    return base_->hom(wd, wc);
  }
  std::string identity(const std::string& obj) const override {
    return base_->identity(split(obj).first);
  }
  std::string compose(const std::string& a, const std::string& b, const std::string& c,
                      const std::string& g, const std::string& f) const override {
    return base_->compose(split(a).first, split(b).first, split(c).first, g, f);
  }

  const CatFamily& base() const { return *base_; }

 private:
  std::shared_ptr<const CatFamily> base_;
};

// ⋉! := (Id, ⊤): B → B×↑, a multiplier for ! = (⊤, ⊤). Not endo.
class EmbargoMultiplier : public MultFamily {
 public:
  EmbargoMultiplier(std::shared_ptr<const CatFamily> base,
                    std::shared_ptr<const CatFamily> product)
      : base_(std::move(base)), product_(std::move(product)) {
    top_ = base_->objects(0).at(0);  // the size-0 terminal object
  }

  std::string name() const override { return base_->name() + "⋉!"; }
  const CatFamily& src() const override { return *base_; }
  const CatFamily& tgt() const override { return *product_; }
  bool endo() const override { return false; }
  int growth() const override { return 0; }
  std::string top() const override { return top_; }
  std::string u_object() const override { return top_ + "@t"; }
  std::string apply_obj(const std::string& w) const override { return w + "@t"; }
  std::string apply_mor(const std::string&, const std::string&,
                        const std::string& f) const override {
    return f;
  }
  std::string unit_iso() const override { return base_->identity(top_); }
  std::string unit_iso_inv() const override { return base_->identity(top_); }

  std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string&) const override {
    // the left adjoint is the projection π₁: Σ(W, o) = W
    auto [w, o] = ArrowProductFamily::split(v);
    return std::make_pair(w, base_->identity(w));
  }
  std::optional<bool> dim_split_oracle(const std::string& v, const std::string&) const override {
    return ArrowProductFamily::split(v).second == 't';
  }
  int fresh_preimage_bound(int v_size) const override { return v_size; }

 private:
  std::shared_ptr<const CatFamily> base_;
  std::shared_ptr<const CatFamily> product_;
  std::string top_;
};

// The comma category B_⊥/B: objects are arrows V → W with V ∈ B ∪ {⊥}, W ∈ B;
// morphisms are commuting squares. Object descriptors: "[!|W]" and "[V|W|ψ]".
// Object size is size(V) + size(W) to keep windows under the caps.
class CommaFamily : public CatFamily {
 public:
  CommaFamily(std::shared_ptr<const CatFamily> base, std::string base_top)
      : base_(std::move(base)), top_(std::move(base_top)) {}

  std::string name() const override { return base_->name() + "⊥/"; }

  struct Obj {
    bool bot;
    std::string v, w, psi;
  };
  static Obj parse(const std::string& s) {
    Obj o;
    std::string body = s.substr(1, s.size() - 2);
    auto p1 = body.find('|');
    if (body.substr(0, p1) == "!") {
      o.bot = true;
      o.w = body.substr(p1 + 1);
      return o;
    }
    o.bot = false;
    auto p2 = body.find('|', p1 + 1);
    o.v = body.substr(0, p1);
    o.w = body.substr(p1 + 1, p2 - p1 - 1);
    o.psi = body.substr(p2 + 1);
    return o;
  }
  static std::string print(const Obj& o) {
    if (o.bot) return "[!|" + o.w + "]";
    return "[" + o.v + "|" + o.w + "|" + o.psi + "]";
  }
  static std::pair<std::string, std::string> split_mor(const std::string& m) {
    std::string body = m.substr(1, m.size() - 2);
    auto p = body.find(';');
    return {body.substr(0, p), body.substr(p + 1)};
  }

  std::vector<std::string> objects(int bound) const override {
    std::vector<std::string> out;
    for (const auto& w : base_->objects(bound))
      if (base_->size(w) <= bound) out.push_back(print({true, "", w, ""}));
    for (const auto& v : base_->objects(bound))
      for (const auto& w : base_->objects(bound)) {
        if (base_->size(v) + base_->size(w) > bound) continue;
        for (const auto& psi : base_->hom(v, w)) out.push_back(print({false, v, w, psi}));
      }
    return out;
  }
  int size(const std::string& obj) const override {
    Obj o = parse(obj);
    return (o.bot ? 0 : base_->size(o.v)) + base_->size(o.w);
  }
  std::vector<std::string> hom(const std::string& dom, const std::string& cod) const override {
    Obj d = parse(dom), c = parse(cod);
    std::vector<std::string> out;
    if (d.bot) {
      for (const auto& beta : base_->hom(d.w, c.w)) out.push_back("(!;" + beta + ")");
      return out;
    }
    if (c.bot) return {};
    for (const auto& alpha : base_->hom(d.v, c.v))
      for (const auto& beta : base_->hom(d.w, c.w)) {
        // ψ_c ∘ α = β ∘ ψ_d
        if (base_->compose(d.v, c.v, c.w, c.psi, alpha) ==
            base_->compose(d.v, d.w, c.w, beta, d.psi))
          out.push_back("(" + alpha + ";" + beta + ")");
      }
    return out;
  }
  std::string identity(const std::string& obj) const override {
    Obj o = parse(obj);
    if (o.bot) return "(!;" + base_->identity(o.w) + ")";
    return "(" + base_->identity(o.v) + ";" + base_->identity(o.w) + ")";
  }
  std::string compose(const std::string& a, const std::string& b, const std::string& c,
                      const std::string& g, const std::string& f) const override {
    Obj oa = parse(a), ob = parse(b), oc = parse(c);
    auto [a1, b1] = split_mor(f);
    auto [a2, b2] = split_mor(g);
    std::string beta = base_->compose(oa.w, ob.w, oc.w, b2, b1);
    if (oa.bot) return "(!;" + beta + ")";
    return "(" + base_->compose(oa.v, ob.v, oc.v, a2, a1) + ";" + beta + ")";
  }

  const CatFamily& base() const { return *base_; }
  const std::string& base_top() const { return top_; }

 private:
  std::shared_ptr<const CatFamily> base_;
  std::string top_;
};

// ⋉(!√U): (V → W) ↦ (V⋉U → W) for a semicartesian inner multiplier ⋉U,
// with ⊥⋉U = ⊥. Always spooky; generally not connection-free.
class EnhancedEmbargoMultiplier : public MultFamily {
 public:
  EnhancedEmbargoMultiplier(std::shared_ptr<const CatFamily> comma,
                            std::shared_ptr<const MultFamily> inner)
      : comma_fam_(std::move(comma)), inner_(std::move(inner)),
        comma_(dynamic_cast<const CommaFamily*>(comma_fam_.get())) {
    if (!comma_) throw ConfigError("enhanced embargo over a non-comma family");
    if (!inner_->semicartesian())
      throw ConfigError("enhanced embargo needs a semicartesian inner multiplier");
  }

  std::string name() const override { return comma_fam_->name() + "⋉(!√U)"; }
  const CatFamily& src() const override { return *comma_fam_; }
  const CatFamily& tgt() const override { return *comma_fam_; }
  bool endo() const override { return true; }
  int growth() const override { return inner_->growth(); }
  std::string top() const override {
    const std::string& t = comma_->base_top();
    return CommaFamily::print({false, t, t, comma_->base().identity(t)});
  }
  std::string u_object() const override { return apply_obj(top()); }

  std::string apply_obj(const std::string& w) const override {
    CommaFamily::Obj o = CommaFamily::parse(w);
    if (o.bot) return w;
    const CatFamily& b = comma_->base();
    std::string vu = inner_->apply_obj(o.v);
    // leg = ψ ∘ π₁ : V⋉U → W
    std::string leg = b.compose(vu, o.v, o.w, o.psi, inner_->proj1(o.v));
    return CommaFamily::print({false, vu, o.w, leg});
  }
  std::string apply_mor(const std::string& dom, const std::string& cod,
                        const std::string& f) const override {
    CommaFamily::Obj d = CommaFamily::parse(dom), c = CommaFamily::parse(cod);
    auto [alpha, beta] = CommaFamily::split_mor(f);
    if (d.bot) return f;
    return "(" + inner_->apply_mor(d.v, c.v, alpha) + ";" + beta + ")";
  }
  std::string unit_iso() const override { return comma_fam_->identity(u_object()); }
  std::string unit_iso_inv() const override { return comma_fam_->identity(u_object()); }

  bool semicartesian() const override { return true; }
  std::string proj1(const std::string& w) const override {
    CommaFamily::Obj o = CommaFamily::parse(w);
    if (o.bot) return comma_fam_->identity(w);
    return "(" + inner_->proj1(o.v) + ";" + comma_->base().identity(o.w) + ")";
  }

  std::optional<bool> dim_split_oracle(const std::string&, const std::string&) const override {
    return true;  // ([], id): (⊥ → W) ⋉ (!√U) → (V → W) sections every slice
  }
  int fresh_preimage_bound(int v_size) const override { return v_size; }

 private:
  std::shared_ptr<const CatFamily> comma_fam_;
  std::shared_ptr<const MultFamily> inner_;
  const CommaFamily* comma_;
};

}  // namespace

std::shared_ptr<CatFamily> make_arrow_product_family(std::shared_ptr<const CatFamily> base) {
  return std::make_shared<ArrowProductFamily>(std::move(base));
}

std::shared_ptr<MultFamily> make_embargo_multiplier(std::shared_ptr<const CatFamily> base,
                                                    std::shared_ptr<const CatFamily> product) {
  return std::make_shared<EmbargoMultiplier>(std::move(base), std::move(product));
}

std::shared_ptr<CatFamily> make_comma_family(std::shared_ptr<const CatFamily> base,
                                             const std::string& base_top) {
  return std::make_shared<CommaFamily>(std::move(base), base_top);
}

std::shared_ptr<MultFamily> make_enhanced_embargo_multiplier(
    std::shared_ptr<const CatFamily> comma, std::shared_ptr<const MultFamily> inner) {
  return std::make_shared<EnhancedEmbargoMultiplier>(std::move(comma), std::move(inner));
}

}  // namespace tpn
