#include <sstream>

#include "tpn/zoo.hpp"

namespace tpn {

namespace {

// The erasure chain ⊤ ← 0 ← 1 ← ... ← d, a posetal category with binary
// products max(m, n). Objects are ranked ⊤ < 0 < 1 < ... < d; there is one
// morphism x → y exactly when y ≤ x.
class ErasureFamily : public CatFamily {
 public:
  explicit ErasureFamily(int d) : d_(d) {
    if (d < 0) throw ConfigError("erasure: d must be ≥ 0");
  }

  std::string name() const override { return "erasure[" + std::to_string(d_) + "]"; }

  static int rank(const std::string& obj) { return obj == "T" ? 0 : std::stoi(obj) + 1; }
  static std::string print(int rank) { return rank == 0 ? "T" : std::to_string(rank - 1); }

  std::vector<std::string> objects(int bound) const override {
    std::vector<std::string> out;
    for (int r = 0; r <= d_ + 1 && r <= bound; ++r) out.push_back(print(r));
    return out;
  }
  int size(const std::string& obj) const override { return rank(obj); }
  std::vector<std::string> hom(const std::string& dom, const std::string& cod) const override {
    if (rank(cod) <= rank(dom)) return {"!"};
    return {};
  }
  std::string identity(const std::string&) const override { return "!"; }
  std::string compose(const std::string&, const std::string&, const std::string&,
                      const std::string&, const std::string&) const override {
    return "!";
  }

  int d() const { return d_; }

 private:
  int d_;
};

class ErasureMultiplier : public MultFamily {
 public:
  ErasureMultiplier(std::shared_ptr<const CatFamily> fam, int u)
      : fam_(std::move(fam)), chain_(dynamic_cast<const ErasureFamily*>(fam_.get())), u_(u) {
    if (!chain_) throw ConfigError("erasure multiplier over a non-erasure family");
    if (u < 0 || u > chain_->d()) throw ConfigError("erasure multiplier: u out of range");
  }

  std::string name() const override { return fam_->name() + "×" + std::to_string(u_); }
  const CatFamily& src() const override { return *fam_; }
  const CatFamily& tgt() const override { return *fam_; }
  bool endo() const override { return true; }
  // max(W,u) does not grow the rank beyond the window that already holds u
  int growth() const override { return 0; }
  std::string top() const override { return "T"; }
  std::string u_object() const override { return std::to_string(u_); }
  std::string apply_obj(const std::string& w) const override {
    return ErasureFamily::print(std::max(ErasureFamily::rank(w), u_ + 1));
  }
  std::string apply_mor(const std::string&, const std::string&, const std::string&) const override {
    return "!";
  }
  std::string unit_iso() const override { return "!"; }
  std::string unit_iso_inv() const override { return "!"; }
  bool semicartesian() const override { return true; }
  std::string proj1(const std::string&) const override { return "!"; }
  bool three_quarter() const override { return true; }
  std::string diag(const std::string&) const override { return "!"; }
  bool cartesian() const override { return true; }
  std::optional<std::pair<std::string, std::string>> sum_oracle(
      const std::string& v, const std::string&) const override {
    return std::make_pair(v, std::string("!"));
  }
  std::optional<bool> dim_split_oracle(const std::string&, const std::string&) const override {
    return true;  // max(d, u) dominates every domain of a morphism to u
  }
  int fresh_preimage_bound(int v_size) const override { return v_size; }

 private:
  std::shared_ptr<const CatFamily> fam_;
  const ErasureFamily* chain_;
  int u_;
};

}  // namespace

std::shared_ptr<CatFamily> make_erasure_family(int d) { return std::make_shared<ErasureFamily>(d); }

std::shared_ptr<MultFamily> make_erasure_multiplier(std::shared_ptr<const CatFamily> chain, int u) {
  return std::make_shared<ErasureMultiplier>(std::move(chain), u);
}

}  // namespace tpn
