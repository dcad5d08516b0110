#include <map>
#include <set>
#include <sstream>

#include "tpn/zoo.hpp"

namespace tpn {

namespace {

using Table = std::vector<int>;  // element-wise image; elements indexed 0..2^n-1

std::string table_print(const Table& t) {
  std::string s = "t";
  for (int v : t) s += static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
  return s;
}

Table table_parse(const std::string& s) {
  Table t;
  for (size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    t.push_back(c <= '9' ? c - '0' : c - 'a' + 10);
  }
  return t;
}

/**
 * The twisted-cube category: objects are the twisted prisms 𝕀ⁿ (chains of
 * length 2ⁿ built by (W^op × {0}) ∪ (W × {1}) with the 0-part below the
 * 1-part), morphisms the monotone maps generated by the two endpoint
 * inclusions, the prism functor and the terminal map. Morphisms are stored as
 * concrete element tables, so composition is function composition and normal
 * forms are free.
 */
class TwistedFamily : public CatFamily {
 public:
  static constexpr int kMaxDim = 4;

  std::string name() const override { return "twisted"; }

  std::vector<std::string> objects(int bound) const override {
    std::vector<std::string> out;
    for (int n = 0; n <= bound && n <= kMaxDim; ++n) out.push_back("I" + std::to_string(n));
    return out;
  }
  int size(const std::string& obj) const override { return std::stoi(obj.substr(1)); }

  std::vector<std::string> hom(const std::string& dom, const std::string& cod) const override {
    std::vector<std::string> out;
    for (const auto& t : mono(size(dom), size(cod))) out.push_back(table_print(t));
    return out;
  }

  std::string identity(const std::string& obj) const override {
    int n = size(obj);
    Table t(1 << n);
    for (int i = 0; i < (1 << n); ++i) t[i] = i;
    return table_print(t);
  }

  std::string compose(const std::string&, const std::string&, const std::string&,
                      const std::string& g, const std::string& f) const override {
    Table gv = table_parse(g), fv = table_parse(f), out(fv.size());
    for (size_t i = 0; i < fv.size(); ++i) out[i] = gv[fv[i]];
    return table_print(out);
  }

  // morphisms V → W (monotone) and V → W^op (antitone), by the grammar
  const std::set<Table>& mono(int v, int w) const { return families(v, w).first; }
  const std::set<Table>& anti(int v, int w) const { return families(v, w).second; }

  static Table reverse_table(int n) {  // the antitone self-bijection: MSB flip
    Table t(1 << n);
    for (int i = 0; i < (1 << n); ++i) t[i] = n == 0 ? 0 : (i ^ (1 << (n - 1)));
    return t;
  }

 private:
  const std::pair<std::set<Table>, std::set<Table>>& families(int v, int w) const {
    auto key = std::make_pair(v, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::pair<std::set<Table>, std::set<Table>> fam;
    if (w == 0) {
      fam.first.insert(Table(1 << v, 0));
      fam.second.insert(Table(1 << v, 0));
    } else {
      int half = 1 << (w - 1);
      for (const Table& t : anti(v, w - 1)) {
        Table a = t;                       // x ↦ (t(x), 0)
        fam.first.insert(a);
        Table b = t;                       // x ↦ (t(x), 1)
        for (int& x : b) x += half;
        fam.second.insert(b);
      }
      for (const Table& t : mono(v, w - 1)) {
        Table a = t;                       // x ↦ (t(x), 1)
        for (int& x : a) x += half;
        fam.first.insert(a);
        fam.second.insert(t);              // x ↦ (t(x), 0)
      }
      if (v >= 1) {
        int vhalf = 1 << (v - 1);
        for (const Table& t : mono(v - 1, w - 1)) {
          Table a(1 << v), b(1 << v);
          for (int x = 0; x < vhalf; ++x) {
            a[x] = t[x];                   // (x,0) ↦ (t(x),0)
            a[x + vhalf] = t[x] + half;    // (x,1) ↦ (t(x),1)
            b[x] = t[x] + half;            // op-twist: (x,e) ↦ (t(x),1-e)
            b[x + vhalf] = t[x];
          }
          fam.first.insert(a);
          fam.second.insert(b);
        }
      }
    }
    return memo_.emplace(key, std::move(fam)).first->second;
  }

  mutable std::map<std::pair<int, int>, std::pair<std::set<Table>, std::set<Table>>> memo_;
};

class TwistedMultiplier : public MultFamily {
 public:
  explicit TwistedMultiplier(std::shared_ptr<const CatFamily> fam)
      : fam_(std::move(fam)), tw_(dynamic_cast<const TwistedFamily*>(fam_.get())) {
    if (!tw_) throw ConfigError("twisted multiplier over a non-twisted family");
  }

  std::string name() const override { return "twisted⋉I"; }
  const CatFamily& src() const override { return *fam_; }
  const CatFamily& tgt() const override { return *fam_; }
  bool endo() const override { return true; }
  int growth() const override { return 1; }
  std::string top() const override { return "I0"; }
  std::string u_object() const override { return "I1"; }
  std::string apply_obj(const std::string& w) const override {
    return "I" + std::to_string(tw_->size(w) + 1);
  }
  std::string apply_mor(const std::string& dom, const std::string& cod,
                        const std::string& f) const override {
    Table t = table_parse(f);
    int vhalf = 1 << tw_->size(dom);
    int whalf = 1 << tw_->size(cod);
    Table out(2 * vhalf);
    for (int x = 0; x < vhalf; ++x) {
      out[x] = t[x];
      out[x + vhalf] = t[x] + whalf;
    }
    return table_print(out);
  }
  std::string unit_iso() const override { return "t01"; }
  std::string unit_iso_inv() const override { return "t01"; }

  std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string& phi) const override {
    int n = tw_->size(v);
    Table p = table_parse(phi);
    bool pole0 = true, pole1 = true;
    for (int x = 0; x < (1 << n); ++x) {
      pole0 &= p[x] == 0;
      pole1 &= p[x] == 1;
    }
    if (pole1) {  // Σ(V, ((),1)) = V with unit x ↦ (x,1)
      Table eta(1 << n);
      for (int x = 0; x < (1 << n); ++x) eta[x] = x + (1 << n);
      return std::make_pair(v, table_print(eta));
    }
    if (pole0) {  // Σ(V, ((),0)) = V^op (the same object) with unit x ↦ (rev x, 0)
      Table eta = TwistedFamily::reverse_table(n);
      return std::make_pair(v, table_print(eta));
    }
    // φ = () ⋉ 𝕀, only possible for V = V'⋉𝕀; Σ = V' with unit the identity
    return std::make_pair("I" + std::to_string(n - 1), tw_->identity(v));
  }

  std::optional<bool> dim_split_oracle(const std::string& v,
                                       const std::string& phi) const override {
    int n = tw_->size(v);
    Table p = table_parse(phi);
    if (n == 0) return false;  // only the two poles exist from ⊤
    for (int x = 0; x < (1 << n); ++x)
      if (p[x] != (x >> (n - 1))) return false;
    return true;  // exactly the prism map () ⋉ 𝕀
  }

 private:
  std::shared_ptr<const CatFamily> fam_;
  const TwistedFamily* tw_;
};

}  // namespace

std::shared_ptr<CatFamily> make_twisted_family() { return std::make_shared<TwistedFamily>(); }

std::shared_ptr<MultFamily> make_twisted_multiplier(std::shared_ptr<const CatFamily> tw) {
  return std::make_shared<TwistedMultiplier>(std::move(tw));
}

}  // namespace tpn
