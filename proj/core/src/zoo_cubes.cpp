#include <algorithm>
#include <sstream>

#include "tpn/zoo.hpp"

namespace tpn {

namespace {

// One implementation covers the variable-substitution categories: objects are
// lists of sorts (cube dimensions, clock bounds, depths) and a morphism
// assigns to each codomain variable either a domain variable (possibly
// negated) or a constant. The flavors differ in constants, injectivity and
// the sort compatibility direction.
struct Tok {
  enum Kind { Var, NegVar, Const } kind;
  int idx;  // 0-based variable position, or constant value
  bool operator==(const Tok&) const = default;
};

using ObjV = std::vector<int>;  // sorts per variable
using MorV = std::vector<Tok>;  // one token per codomain variable

class CubeFamily : public CatFamily {
 public:
  CubeFamily(CubeKind kind, int consts, int max_sort, bool involution)
      : kind_(kind), consts_(consts), max_sort_(max_sort), involution_(involution) {
    if (involution_ && consts_ != 2)
      throw ConfigError("involutions are only defined for binary constants");
  }

  std::string name() const override {
    std::ostringstream os;
    switch (kind_) {
      case CubeKind::Affine: os << "box^" << consts_; break;
      case CubeKind::Cartesian: os << "cube^" << consts_; break;
      case CubeKind::Clock: os << "clock[" << max_sort_ << "]"; break;
      case CubeKind::Depth: os << "depth[" << max_sort_ << "]"; break;
    }
    if (involution_) os << "~";
    return os.str();
  }

  bool plain_cubes() const { return kind_ == CubeKind::Affine || kind_ == CubeKind::Cartesian; }
  CubeKind kind() const { return kind_; }

  std::string obj_print(const ObjV& o) const {
    if (plain_cubes()) return "I" + std::to_string(o.size());
    std::string s = "(";
    for (size_t i = 0; i < o.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(o[i]);
    }
    return s + ")";
  }

  ObjV obj_parse(const std::string& s) const {
    ObjV o;
    if (plain_cubes()) {
      o.assign(std::stoi(s.substr(1)), 0);
      return o;
    }
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) o.push_back(std::stoi(part));
    return o;
  }

  static std::string tok_print(const Tok& t) {
    switch (t.kind) {
      case Tok::Var: return "i" + std::to_string(t.idx + 1);
      case Tok::NegVar: return "~i" + std::to_string(t.idx + 1);
      case Tok::Const: return std::to_string(t.idx);
    }
    return "?";
  }

  static std::string mor_print(const MorV& m) {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) s += ",";
      s += tok_print(m[i]);
    }
    return s + ")";
  }

  static MorV mor_parse(const std::string& s) {
    MorV m;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part[0] == '~')
        m.push_back({Tok::NegVar, std::stoi(part.substr(2)) - 1});
      else if (part[0] == 'i')
        m.push_back({Tok::Var, std::stoi(part.substr(1)) - 1});
      else
        m.push_back({Tok::Const, std::stoi(part)});
    }
    return m;
  }

  // May a variable of sort a be substituted for a target variable of sort t?
  bool sort_ok(int assigned, int target) const {
    switch (kind_) {
      case CubeKind::Affine:
      case CubeKind::Cartesian: return true;
      case CubeKind::Clock: return assigned <= target;
      case CubeKind::Depth: return target <= assigned;
    }
    return false;
  }

  std::vector<std::string> objects(int bound) const override {
    std::vector<std::string> out;
    std::vector<ObjV> level{{}};
    out.push_back(obj_print({}));
    for (int n = 1; n <= bound; ++n) {
      std::vector<ObjV> next;
      for (const auto& o : level)
        for (int s = 0; s <= max_sort_; ++s) {
          ObjV e = o;
          e.push_back(s);
          next.push_back(e);
          out.push_back(obj_print(e));
        }
      level = std::move(next);
    }
    return out;
  }

  int size(const std::string& obj) const override {
    return static_cast<int>(obj_parse(obj).size());
  }

  std::vector<std::string> hom(const std::string& dom, const std::string& cod) const override {
    ObjV d = obj_parse(dom), c = obj_parse(cod);
    std::vector<std::string> out;
    MorV cur(c.size(), Tok{Tok::Const, 0});
    std::vector<char> used(d.size(), 0);
    enumerate(d, c, 0, cur, used, out);
    return out;
  }

  std::string identity(const std::string& obj) const override {
    ObjV o = obj_parse(obj);
    MorV m;
    for (size_t i = 0; i < o.size(); ++i) m.push_back({Tok::Var, static_cast<int>(i)});
    return mor_print(m);
  }

  Tok negate(const Tok& t) const {
    switch (t.kind) {
      case Tok::Var: return {Tok::NegVar, t.idx};
      case Tok::NegVar: return {Tok::Var, t.idx};
      case Tok::Const: return {Tok::Const, consts_ - 1 - t.idx};
    }
    return t;
  }

  std::string compose(const std::string&, const std::string&, const std::string&,
                      const std::string& g, const std::string& f) const override {
    MorV gv = mor_parse(g), fv = mor_parse(f), out;
    for (const Tok& t : gv) {
      switch (t.kind) {
        case Tok::Var: out.push_back(fv[t.idx]); break;
        case Tok::NegVar: out.push_back(negate(fv[t.idx])); break;
        case Tok::Const: out.push_back(t); break;
      }
    }
    return mor_print(out);
  }

 private:
  void enumerate(const ObjV& d, const ObjV& c, size_t pos, MorV& cur, std::vector<char>& used,
                 std::vector<std::string>& out) const {
    if (pos == c.size()) {
      out.push_back(mor_print(cur));
      return;
    }
    bool affine = kind_ == CubeKind::Affine;
    for (size_t j = 0; j < d.size(); ++j) {
      if (!sort_ok(d[j], c[pos])) continue;
      if (affine && used[j]) continue;
      if (affine) used[j] = 1;
      cur[pos] = {Tok::Var, static_cast<int>(j)};
      enumerate(d, c, pos + 1, cur, used, out);
      if (involution_) {
        cur[pos] = {Tok::NegVar, static_cast<int>(j)};
        enumerate(d, c, pos + 1, cur, used, out);
      }
      if (affine) used[j] = 0;
    }
    for (int v = 0; v < consts_; ++v) {
      cur[pos] = {Tok::Const, v};
      enumerate(d, c, pos + 1, cur, used, out);
    }
  }

  CubeKind kind_;
  int consts_;
  int max_sort_;
  bool involution_;
};

class CubeMultiplier : public MultFamily {
 public:
  CubeMultiplier(std::shared_ptr<const CatFamily> fam, int mult_sort)
      : fam_(std::move(fam)), cubes_(dynamic_cast<const CubeFamily*>(fam_.get())),
        sort_(mult_sort) {
    if (!cubes_) throw ConfigError("cube multiplier over a non-cube family");
  }

  std::string name() const override {
    return fam_->name() + "⋉" + cubes_->obj_print(ObjV{sort_});
  }
  const CatFamily& src() const override { return *fam_; }
  const CatFamily& tgt() const override { return *fam_; }
  bool endo() const override { return true; }
  int growth() const override { return 1; }
  std::string top() const override { return cubes_->obj_print({}); }
  std::string u_object() const override { return cubes_->obj_print(ObjV{sort_}); }

  std::string apply_obj(const std::string& w) const override {
    ObjV o = cubes_->obj_parse(w);
    o.push_back(sort_);
    return cubes_->obj_print(o);
  }
  std::string apply_mor(const std::string& dom, const std::string&,
                        const std::string& f) const override {
    MorV m = CubeFamily::mor_parse(f);
    m.push_back({Tok::Var, cubes_->size(dom)});
    return CubeFamily::mor_print(m);
  }
  std::string unit_iso() const override { return "(i1)"; }
  std::string unit_iso_inv() const override { return "(i1)"; }

  bool semicartesian() const override { return true; }
  std::string proj1(const std::string& w) const override { return fam_->identity(w); }

  bool affine_kind() const { return cubes_->kind() == CubeKind::Affine; }

  bool three_quarter() const override { return !affine_kind(); }
  std::string diag(const std::string& w) const override {
    int n = cubes_->size(w) + 1;
    MorV m;
    for (int i = 0; i < n; ++i) m.push_back({Tok::Var, i});
    m.push_back({Tok::Var, n - 1});
    return CubeFamily::mor_print(m);
  }
  bool cartesian() const override { return !affine_kind(); }

  std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string& phi) const override {
    ObjV vv = cubes_->obj_parse(v);
    MorV pv = CubeFamily::mor_parse(phi);
    Tok t = pv[0];
    if (affine_kind() && t.kind != Tok::Const) {
      // drop the assigned variable; the fresh variable takes its place
      ObjV w;
      for (size_t j = 0; j < vv.size(); ++j)
        if (static_cast<int>(j) != t.idx) w.push_back(vv[j]);
      MorV eta;
      for (size_t j = 0; j < vv.size(); ++j) {
        if (static_cast<int>(j) == t.idx) continue;
        eta.push_back({Tok::Var, static_cast<int>(j)});
      }
      eta.push_back(t);  // the new last variable maps to (possibly negated) i_t
      return std::make_pair(cubes_->obj_print(w), CubeFamily::mor_print(eta));
    }
    // cartesian flavors (and constant legs in the affine case): Σ(V,φ) = V
    MorV eta;
    for (size_t j = 0; j < vv.size(); ++j) eta.push_back({Tok::Var, static_cast<int>(j)});
    eta.push_back(t);
    return std::make_pair(v, CubeFamily::mor_print(eta));
  }

  std::optional<bool> dim_split_oracle(const std::string& v,
                                       const std::string& phi) const override {
    ObjV vv = cubes_->obj_parse(v);
    MorV pv = CubeFamily::mor_parse(phi);
    Tok t = pv[0];
    if (t.kind == Tok::Const) return false;
    return vv[t.idx] == sort_;
  }

 private:
  std::shared_ptr<const CatFamily> fam_;
  const CubeFamily* cubes_;
  int sort_;
};

}  // namespace

std::shared_ptr<CatFamily> make_cube_family(CubeKind kind, int consts, int max_sort,
                                            bool involution) {
  return std::make_shared<CubeFamily>(kind, consts, max_sort, involution);
}

std::shared_ptr<MultFamily> make_cube_multiplier(std::shared_ptr<const CatFamily> cubes,
                                                 int mult_sort) {
  return std::make_shared<CubeMultiplier>(std::move(cubes), mult_sort);
}

}  // namespace tpn
