#include "tpn/modalities.hpp"

namespace tpn {

SliceLift slice_lift(const Functor& g, const Presheaf& psi, const Caps& caps) {
  SliceLift sl;
  sl.psi = psi;
  sl.g_psi = left_lift(g, psi, caps, g.name + "!(" + psi.name + ")");
  sl.e_src = elements_category(*g.src, sl.psi, caps);
  sl.e_tgt = elements_category(*g.tgt, sl.g_psi.psh, caps);
  sl.lifted.src = sl.e_src.cat.get();
  sl.lifted.tgt = sl.e_tgt.cat.get();
  sl.lifted.name = g.name + "-slice";
  const FinCat& tgt = *g.tgt;
  for (ObjId s = 0; s < sl.e_src.cat->num_objects(); ++s) {
    auto [w, cell] = sl.e_src.elem[s];
    ObjId gw = g.obj_map[w];
    sl.lifted.obj_map.push_back(sl.e_tgt.obj_of(gw, sl.g_psi.class_of(gw, {w, tgt.id(gw), cell})));
  }
  for (MorId m = 0; m < sl.e_src.cat->num_morphisms(); ++m) {
    MorId chi = sl.e_src.base_mor[m];
    auto [w2, cell2] = sl.e_src.elem[sl.e_src.cat->cod(m)];
    ObjId gw2 = g.obj_map[w2];
    int cls = sl.g_psi.class_of(gw2, {w2, tgt.id(gw2), cell2});
    sl.lifted.mor_map.push_back(sl.e_tgt.mor_over(g.mor_map[chi], cls));
  }
  sl.checks = check_functor_laws(sl.lifted);
  sl.checks.subject = sl.lifted.name;
  return sl;
}

CheckReport check_piped_adjunction(const BaseAdjunction& adj, const Presheaf& psi_prime,
                                   std::uint64_t seed, int sample_count, const Caps& caps) {
  CheckReport rep;
  rep.subject = "piped-adjunction(" + adj.g->name + "⊣" + adj.s->name + ")";
  const Functor& g = *adj.g;
  const Functor& s = *adj.s;
  const FinCat& w_cat = *g.src;
  const FinCat& wp_cat = *g.tgt;

  // validate the base adjunction itself
  Adjunction base{&g, &s, adj.unit, adj.counit};
  rep.merge(check_adjunction(base, "base"), "base.");
  if (!rep.ok()) return rep;

  SliceLift sl_s = slice_lift(s, psi_prime, caps);          // R: el(Ψ') → el(S!Ψ')
  SliceLift sl_g = slice_lift(g, sl_s.g_psi.psh, caps);     // el(S!Ψ') → el(G!S!Ψ')
  rep.merge(sl_s.checks, "S-slice.");
  rep.merge(sl_g.checks, "G-slice.");

  // ε_! : G!S!Ψ' → Ψ', stable across both coend levels
  PshMorData eps(wp_cat.num_objects());
  for (ObjId v = 0; v < wp_cat.num_objects(); ++v) {
    eps[v].resize(sl_g.g_psi.psh.cells(v));
    for (size_t k = 0; k < sl_g.g_psi.rep[v].size(); ++k) {
      int value = -1;
      for (const auto& t : sl_g.g_psi.members[v][k]) {
        // t = (W, φ: V' → GW, cell of S!Ψ'(W))
        for (const auto& t2 : sl_s.g_psi.members[t.c][t.cell]) {
          // t2 = (W'', φ₂: W → SW'', ψ''-cell)
          MorId under = wp_cat.compose(adj.counit[t2.c],
                                       wp_cat.compose(g.mor_map[t2.phi], t.phi));
          int cand = psi_prime.act(under, t2.cell);
          if (value < 0) value = cand;
          else if (value != cand) {
            rep.fail("eps-stable", wp_cat.objects[v], "ε_! unstable across representatives");
            return rep;
          }
        }
      }
      eps[v][k] = value;
    }
  }
  if (!is_natural(PshMor{&sl_g.g_psi.psh, &psi_prime, eps})) {
    rep.fail("eps-natural", "", "");
    return rep;
  }
  Functor pair_eps = pair_functor_of(sl_g.e_tgt, sl_s.e_src, eps);
  Functor ladj = compose(pair_eps, sl_g.lifted);  // L: el(S!Ψ') → el(Ψ')
  const Functor& radj = sl_s.lifted;        // R: el(Ψ') → el(S!Ψ')
  const FinCat& esp_cat = *sl_g.e_src.cat;  // elements(S!Ψ')
  const FinCat& ep_cat = *sl_s.e_src.cat;   // elements(Ψ')

  // first row: Hom(Lx, y) ≅ Hom(x, Ry) by the explicit transposition
  {
    bool ok = true;
    std::int64_t pairs = 0;
    for (ObjId x = 0; x < esp_cat.num_objects() && ok; ++x) {
      ObjId w = sl_g.e_src.elem[x].first;
      for (ObjId y = 0; y < ep_cat.num_objects() && ok; ++y) {
        const auto& homs_l = ep_cat.hom(ladj.obj_map[x], y);
        const auto& homs_r = esp_cat.hom(x, radj.obj_map[y]);
        if (homs_l.size() != homs_r.size()) {
          rep.fail("row1-count", esp_cat.objects[x] + " ; " + ep_cat.objects[y],
                   std::to_string(homs_l.size()) + " vs " + std::to_string(homs_r.size()));
          ok = false;
          break;
        }
        std::vector<char> hit(homs_r.size(), 0);
        for (MorId m : homs_l) {
          MorId chi = sl_s.e_src.base_mor[m];  // GW → W'
          MorId under = w_cat.compose(s.mor_map[chi], adj.unit[w]);
          MorId tr = sl_g.e_src.mor_over(under, sl_g.e_src.elem[radj.obj_map[y]].second);
          if (esp_cat.dom(tr) != x || esp_cat.cod(tr) != radj.obj_map[y]) {
            rep.fail("row1-transpose-typing", esp_cat.mor_label(tr), "");
            ok = false;
            break;
          }
          int pos = esp_cat.hom_index(tr);
          if (hit[pos]) {
            rep.fail("row1-transpose-injective", ep_cat.mor_label(m), "");
            ok = false;
            break;
          }
          hit[pos] = 1;
          ++pairs;
        }
      }
    }
    if (ok) rep.pass("row1-hom-bijection", std::to_string(pairs) + " transposed morphisms");
  }

  // lifted rows via the generic checker
  auto sp_samples = seeded_presheaves(esp_cat, seed, sample_count);
  auto p_samples = seeded_presheaves(ep_cat, seed ^ 0x123u, sample_count);
  rep.merge(check_lift_adjunctions(ladj, sp_samples, p_samples, caps), "L-lift.");
  rep.merge(check_lift_adjunctions(radj, p_samples, sp_samples, caps), "R-lift.");

  // adjoint uniqueness: R_!Δ ≅ L*Δ with the canonical comparison
  for (const auto& delta : p_samples) {
    LeftLift rd = left_lift(radj, delta, caps);
    Presheaf lstar = central_lift(ladj, delta);
    PshMorData cmp(esp_cat.num_objects());
    bool ok = true;
    for (ObjId x = 0; x < esp_cat.num_objects() && ok; ++x) {
      cmp[x].resize(rd.rep[x].size());
      for (size_t k = 0; k < rd.rep[x].size(); ++k) {
        int value = -1;
        for (const auto& t : rd.members[x][k]) {
          // t = (y, ρ: x → Ry, δ); inverse transpose ε ∘ G(ρ)
          MorId rho = sl_g.e_src.base_mor[t.phi];
          ObjId wy = sl_s.e_src.elem[t.c].first;
          MorId under = wp_cat.compose(adj.counit[wy], g.mor_map[rho]);
          MorId lm = sl_s.e_src.mor_over(under, sl_s.e_src.elem[t.c].second);
          int cand = delta.act(lm, t.cell);
          if (value < 0) value = cand;
          else if (value != cand) {
            ok = false;
            break;
          }
        }
        cmp[x][k] = value;
      }
    }
    bool good = ok && is_natural(PshMor{&rd.psh, &lstar, cmp});
    if (good) {
      for (ObjId x = 0; x < esp_cat.num_objects() && good; ++x) {
        if (rd.psh.cells(x) != lstar.cells(x)) good = false;
        std::vector<char> seen(lstar.cells(x), 0);
        for (int v : cmp[x]) {
          if (seen[v]) good = false;
          seen[v] = 1;
        }
      }
    }
    rep.add("Rshriek-vs-Lstar(" + delta.name + ")", good ? Verdict::Pass : Verdict::Fail, "",
            "R_!Δ ≅ L*Δ");
  }
  return rep;
}

}  // namespace tpn
