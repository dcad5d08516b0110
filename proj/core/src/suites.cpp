#include "tpn/suites.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tpn/json_io.hpp"
#include "tpn/modalities.hpp"
#include "tpn/multiplier.hpp"
#include "tpn/prng.hpp"
#include "tpn/transpension.hpp"

namespace tpn {

using nlohmann::json;

Caps Caps::parse(const std::string& spec) {
  Caps caps;
  if (spec.empty()) return caps;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("bad caps entry '" + part + "'");
    std::string key = part.substr(0, eq);
    long long value = std::stoll(part.substr(eq + 1));
    if (key == "objects") caps.max_objects = static_cast<int>(value);
    else if (key == "morphisms") caps.max_morphisms = static_cast<int>(value);
    else if (key == "compositions") caps.max_compositions = value;
    else if (key == "search") caps.max_search_nodes = value;
    else if (key == "homs") caps.max_hom_results = value;
    else throw ConfigError("unknown caps key '" + key + "'");
  }
  return caps;
}

const std::vector<std::string>& RunConfig::known_suites() {
  static const std::vector<std::string> names = {
      "classification", "boundary",    "poles",      "kernel", "quantification",
      "exchange",       "elimination", "adjunction", "commutation", "modalities", "spooky"};
  return names;
}

namespace {

std::vector<ZooSelection> defaults_or(const std::vector<ZooSelection>& sel,
                                      std::vector<ZooSelection> defaults) {
  return sel.empty() ? std::move(defaults) : sel;
}

struct Built {
  ZooEntry entry;
  MultWindow mw;
};

Built build_sel(const ZooSelection& s, const Caps& caps, int extra = -1) {
  Built b{zoo_build(s.name, s.params), {}};
  int window = s.window > 0 ? s.window : b.entry.recommended_window;
  b.mw = make_mult_window(*b.entry.mult, window, caps, extra);
  return b;
}

std::string sel_label(const ZooSelection& s) {
  std::string out = s.name;
  if (!s.params.kv.empty()) out += "(" + s.params.to_string() + ")";
  if (s.window > 0) out += "@" + std::to_string(s.window);
  return out;
}

std::uint64_t sel_seed(std::uint64_t seed, const ZooSelection& s) {
  std::uint64_t h = seed;
  for (char c : s.name) h = h * 1099511628211ull + static_cast<unsigned char>(c);
  return h;
}

}  // namespace

CheckReport suite_classification(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                                 const Caps& caps) {
  (void)seed;
  CheckReport rep;
  rep.subject = "classification";
  std::vector<ZooSelection> sel = defaults_or(sel_in, [] {
    std::vector<ZooSelection> out;
    for (const auto& n : zoo_names()) out.push_back({n, {}, -1});
    return out;
  }());
  for (const auto& s : sel) {
    try {
      ZooEntry entry = zoo_build(s.name, s.params);
      int window = s.window > 0 ? s.window : entry.recommended_window;
      PropertyResult pr = property_report(*entry.mult, window, caps);
      if (!pr.detail.ok()) {
        for (const auto& e : pr.detail.entries)
          if (e.verdict == Verdict::Fail)
            rep.fail(sel_label(s) + "." + e.name, e.witness, e.details);
        continue;
      }
      if (pr.observed == entry.expected) {
        rep.pass(sel_label(s), "classification matches");
      } else {
        rep.fail(sel_label(s), pr.observed.diff(entry.expected),
                 "observed vs expected classification");
      }
    } catch (const WindowEscape& e) {
      rep.fail(sel_label(s), e.what(), "window escape");
    }
  }
  return rep;
}

CheckReport suite_boundary(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                           const Caps& caps) {
  CheckReport rep;
  rep.subject = "boundary";
  std::vector<ZooSelection> sel = defaults_or(
      sel_in, {{"affine-cubes", ZooParams::parse("k=2"), 2}, {"twisted-cubes", {}, 2}});
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    BoundaryData bd = boundary_presheaf(b.mw);
    rep.merge(bd.validity, sel_label(s) + ".");
    // interval boundary: two cells per cube level for the binary cube fixtures
    if (s.name == "affine-cubes" || s.name == "cartesian-cubes" || s.name == "twisted-cubes") {
      const FinCat& tgt = *b.mw.tgt.cat;
      bool counts_ok = true;
      for (ObjId v = 0; v < tgt.num_objects(); ++v)
        if (bd.boundary.cells(v) != 2) {
          rep.fail(sel_label(s) + ".boundary-count", tgt.objects[v],
                   std::to_string(bd.boundary.cells(v)) + " cells, expected 2");
          counts_ok = false;
        }
      if (counts_ok)
        rep.pass(sel_label(s) + ".boundary-count",
                 "|∂I(V)| = 2 for all " + std::to_string(tgt.num_objects()) + " objects");
      // ∂I ≅ the constant presheaf of booleans
      Presheaf two = coproduct(terminal_presheaf(tgt), terminal_presheaf(tgt));
      two.name = "2";
      rep.add(sel_label(s) + ".boundary-constant-bool",
              iso_search(bd.boundary, two, caps) ? Verdict::Pass : Verdict::Fail, "",
              "∂I vs constant boolean presheaf");
    }
    if (s.name == "identity" || s.name == "erasure") {
      bool empty = bd.boundary.total_cells() == 0;
      rep.add(sel_label(s) + ".boundary-initial", empty ? Verdict::Pass : Verdict::Fail, "",
              "every morphism to U is dimensionally split");
    }
    // boundary theorem (∈∂U) ≅ √⊥ plus the mutation sentinel
    rep.merge(check_boundary_theorem(b.mw, caps, false), sel_label(s) + ".");
    rep.merge(check_boundary_theorem(b.mw, caps, true), sel_label(s) + ".");
  }
  (void)seed;
  return rep;
}

namespace {
// Ψ fixtures over the source window: ⊤ and 𝐲(first size-1 object) when present
std::vector<Presheaf> psi_fixtures(const MultWindow& mw) {
  std::vector<Presheaf> out;
  out.push_back(terminal_presheaf(*mw.src.cat));
  for (ObjId o = 0; o < mw.src.cat->num_objects(); ++o)
    if (mw.fam->src().size(mw.src.obj_desc[o]) == 1) {
      Presheaf y = yoneda(*mw.src.cat, o);
      out.push_back(y);
      break;
    }
  return out;
}
}  // namespace

CheckReport suite_poles(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                        const Caps& caps) {
  CheckReport rep;
  rep.subject = "poles";
  std::vector<ZooSelection> sel =
      defaults_or(sel_in, {{"affine-cubes", ZooParams::parse("k=2"), 2},
                           {"twisted-cubes", {}, 2},
                           {"cartesian-cubes", ZooParams::parse("k=2"), 2}});
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    for (const auto& psi : psi_fixtures(b.mw)) {
      FourFunctors ff = four_functors(b.mw, psi, caps);
      rep.merge(check_poles(ff, sel_seed(seed, s), 5), sel_label(s) + "." + psi.name + ".");
    }
  }
  return rep;
}

CheckReport suite_kernel(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                         const Caps& caps) {
  (void)seed;
  CheckReport rep;
  rep.subject = "kernel";
  std::vector<ZooSelection> sel = defaults_or(
      sel_in, {{"affine-cubes", ZooParams::parse("k=2"), 2}, {"twisted-cubes", {}, 2}});
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    for (const auto& psi : psi_fixtures(b.mw)) {
      FourFunctors ff = four_functors(b.mw, psi, caps);
      rep.merge(check_kernel(ff), sel_label(s) + "." + psi.name + ".");
    }
  }
  // expected counterexample: the cartesian diagonal slice is not in the fresh image
  {
    Built b = build_sel({"cartesian-cubes", ZooParams::parse("k=2"), 2}, caps);
    Presheaf psi = psi_fixtures(b.mw).back();  // 𝐲I1
    FourFunctors ff = four_functors(b.mw, psi, caps);
    CheckReport kr = check_kernel(ff);
    bool found_diag = false;
    for (const auto& e : kr.entries)
      if (e.name == "kernel-essentially-surjective" && e.verdict == Verdict::Fail)
        found_diag = true;
    rep.add("cartesian-cubes.diagonal-counterexample", found_diag ? Verdict::Pass : Verdict::Fail,
            found_diag ? "" : "expected the diagonal slice to break strong connection-freedom",
            "cartesian cubes fail the kernel theorem over 𝐲I1 as predicted");
  }
  return rep;
}

CheckReport suite_quantification(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                                 const Caps& caps) {
  CheckReport rep;
  rep.subject = "quantification";
  std::vector<ZooSelection> sel =
      defaults_or(sel_in, {{"identity", {}, 1},
                           {"affine-cubes", ZooParams::parse("k=2"), 2},
                           {"cartesian-cubes", ZooParams::parse("k=2"), 1}});
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    Classification cls = b.entry.expected;
    // categorical drop components on all window slices (Ψ = ⊤)
    if (cls.cancellative && cls.affine) {
      Presheaf top = terminal_presheaf(*b.mw.src.cat);
      FourFunctors ff = four_functors(b.mw, top, caps);
      if (!ff.sum) {
        rep.add(sel_label(s) + ".drop-slices", Verdict::WindowNegative, "", "Σ not available");
      } else {
        bool all_iso = true;
        for (ObjId x = 0; x < ff.es.e_src.cat->num_objects(); ++x)
          if (!ff.es.e_src.cat->inverse(ff.sum->drop_comp[x])) {
            rep.fail(sel_label(s) + ".drop-slices", ff.es.e_src.cat->objects[x],
                     "drop component not invertible");
            all_iso = false;
          }
        if (all_iso)
          rep.pass(sel_label(s) + ".drop-slices",
                   "Σ∘fresh → Id invertible on all " +
                       std::to_string(ff.es.e_src.cat->num_objects()) + " slices");
      }
    }
    std::uint64_t zseed = sel_seed(seed, s);
    Prng rng(zseed);
    std::vector<Presheaf> psis;
    psis.push_back(terminal_presheaf(*b.mw.tgt.cat));
    if (s.name == "cartesian-cubes") {
      Presheaf y = yoneda(*b.mw.tgt.cat, b.mw.u);
      psis.push_back(y);
    }
    for (const auto& psi_big : psis)
      rep.merge(check_psh_quantification(b.mw, cls, psi_big, zseed, 2, caps),
                sel_label(s) + "." + psi_big.name + ".");
  }
  return rep;
}

CheckReport suite_exchange(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                           const Caps& caps) {
  CheckReport rep;
  rep.subject = "exchange";
  std::vector<ZooSelection> sel = defaults_or(sel_in, {{"identity", {}, 1},
                                                       {"affine-cubes", ZooParams::parse("k=2"), 2},
                                                       {"twisted-cubes", {}, 2}});
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    for (const auto& psi : psi_fixtures(b.mw)) {
      FourFunctors ff = four_functors(b.mw, psi, caps);
      rep.merge(check_fresh_exchange(ff, sel_seed(seed, s), 3),
                sel_label(s) + "." + psi.name + ".");
    }
  }
  return rep;
}

CheckReport suite_elimination(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                              const Caps& caps) {
  (void)seed;
  CheckReport rep;
  rep.subject = "elimination";
  std::vector<ZooSelection> sel = defaults_or(
      sel_in, {{"affine-cubes", ZooParams::parse("k=2"), 2}, {"twisted-cubes", {}, 2},
               {"cartesian-cubes", ZooParams::parse("k=2"), 2}, {"clocks", {}, 2}});
  for (const auto& s : sel) {
    ZooEntry entry = zoo_build(s.name, s.params);
    if (!entry.elimination_in_scope && s.name == "clocks") {
      rep.add(sel_label(s), Verdict::Skipped, "", entry.scope_note);
      continue;
    }
    Built b = build_sel(s, caps);
    for (const auto& psi : psi_fixtures(b.mw)) {
      FourFunctors ff = four_functors(b.mw, psi, caps);
      CheckReport er = check_elimination_support(ff);
      if (s.name == "cartesian-cubes") {
        // the diagonal slice must break the dichotomy here
        bool dichotomy_failed = false;
        for (const auto& e : er.entries)
          if (e.name == "dichotomy" && e.verdict == Verdict::Fail) dichotomy_failed = true;
        if (psi.name != "⊤") {
          rep.add(sel_label(s) + "." + psi.name + ".dichotomy-counterexample",
                  dichotomy_failed ? Verdict::Pass : Verdict::Fail, "",
                  "cartesian cubes must exhibit a non-fresh total element");
        }
        continue;
      }
      rep.merge(er, sel_label(s) + "." + psi.name + ".");
    }
  }
  return rep;
}

CheckReport suite_adjunction(const std::vector<ZooSelection>& sel_in, std::uint64_t seed,
                             const Caps& caps) {
  CheckReport rep;
  rep.subject = "adjunction";
  std::vector<ZooSelection> sel = defaults_or(sel_in, [] {
    std::vector<ZooSelection> out;
    for (const auto& n : zoo_names()) {
      ZooSelection s{n, {}, -1};
      if (n == "erasure") s.params = ZooParams::parse("d=1");
      if (n == "enhanced-embargoes") s.window = 1;
      if (n == "depth-cubes" || n == "clocks") s.window = 1;
      if (n == "cartesian-cubes" || n == "embargoes") s.window = 1;
      out.push_back(s);
    }
    return out;
  }());
  for (const auto& s : sel) {
    Built b = build_sel(s, caps);
    Presheaf top = terminal_presheaf(*b.mw.src.cat);
    FourFunctors ff = four_functors(b.mw, top, caps);
    rep.merge(check_adjunction_chain(ff, sel_seed(seed, s), 3), sel_label(s) + ".");
  }
  return rep;
}

CheckReport suite_commutation(std::uint64_t seed, const Caps& caps,
                              const std::string& fixture_path) {
  CheckReport rep;
  rep.subject = "commutation";
  json fixtures = fixture_path.empty() ? default_commutation_fixtures()
                                       : load_json_file(fixture_path);
  for (const auto& spec : fixtures) {
    try {
      rep.merge(check_commutation_instance(spec, seed, caps),
                spec.value("name", "fixture") + ".");
    } catch (const SubstError& e) {
      rep.add(spec.value("name", "fixture"), Verdict::WindowNegative, e.what(), "");
    }
  }
  return rep;
}

CheckReport suite_modalities(std::uint64_t seed, const Caps& caps) {
  CheckReport rep;
  rep.subject = "modalities";

  // identity functor lifts to the identity up to the canonical iso
  {
    ZooEntry e = zoo_build("affine-cubes", ZooParams::parse("k=2"));
    MultWindow mw = make_mult_window(*e.mult, 1, caps);
    Functor id = identity_functor(*mw.src.cat);
    id.name = "Id";
    Presheaf psi = yoneda(*mw.src.cat, mw.src.cat->num_objects() - 1);
    SliceLift sl = slice_lift(id, psi, caps);
    rep.merge(sl.checks, "id-slice.");
    auto iso = iso_search(sl.g_psi.psh, psi, caps);
    rep.add("id-slice-iso", iso ? Verdict::Pass : Verdict::Fail, "", "Id_!Ψ ≅ Ψ");
  }

  // embargo adjoint triple π₁ ⊣ (Id,⊤) over a cartesian-cube window
  {
    ZooEntry e = zoo_build("embargoes", ZooParams::parse("k=2"));
    MultWindow mw = make_mult_window(*e.mult, 2, caps);
    const FinCat& b = *mw.src.cat;   // 𝒲
    const FinCat& p = *mw.tgt.cat;   // 𝒲×↑
    // G = π₁: 𝒲×↑ → 𝒲, S = (Id,⊤) = the multiplier functor
    Functor g;
    g.src = &p;
    g.tgt = &b;
    g.name = "π₁";
    for (ObjId o = 0; o < p.num_objects(); ++o) {
      std::string inner = mw.tgt.obj_desc[o].substr(0, mw.tgt.obj_desc[o].rfind('@'));
      g.obj_map.push_back(mw.src.obj(inner));
    }
    for (MorId m = 0; m < p.num_morphisms(); ++m) {
      std::string d = mw.tgt.obj_desc[p.dom(m)];
      std::string c = mw.tgt.obj_desc[p.cod(m)];
      g.obj_map.size();
      g.mor_map.push_back(mw.src.mor(d.substr(0, d.rfind('@')), c.substr(0, c.rfind('@')),
                                     mw.tgt.mor_desc[m]));
    }
    rep.merge(check_functor_laws(g), "pi1.");
    const Functor& s = mw.ltimes;  // (Id,⊤)
    BaseAdjunction adj;
    adj.g = &g;
    adj.s = &s;
    adj.unit.resize(p.num_objects());
    for (ObjId o = 0; o < p.num_objects(); ++o) {
      // (W,o) → (W,⊤): the identity of W with the embargo bit raised
      std::string d = mw.tgt.obj_desc[o];
      std::string inner = d.substr(0, d.rfind('@'));
      adj.unit[o] = mw.tgt.mor(d, inner + "@t", mw.fam->src().identity(inner));
    }
    adj.counit.resize(b.num_objects());
    for (ObjId o = 0; o < b.num_objects(); ++o) adj.counit[o] = b.id(o);
    Presheaf psi_prime = terminal_presheaf(b);
    rep.merge(check_piped_adjunction(adj, psi_prime, seed, 2, caps), "embargo.");
  }

  // erasure: ×m ⊣ S with S(k) = (k ≤ m ? ⊤ : k), verified by hom enumeration
  {
    ZooEntry e = zoo_build("erasure", ZooParams::parse("d=2,u=1"));
    MultWindow mw = make_mult_window(*e.mult, 3, caps);
    const FinCat& c = *mw.src.cat;
    Functor g = mw.ltimes;  // max(-, 1)
    g.src = mw.src.cat.get();
    g.tgt = mw.src.cat.get();
    // identical window for source and target (growth 0)
    Functor s;
    s.src = mw.src.cat.get();
    s.tgt = mw.src.cat.get();
    s.name = "S";
    int u_rank = 2;  // rank of the multiplied object u=1
    for (ObjId o = 0; o < c.num_objects(); ++o) {
      int rank = mw.fam->src().size(mw.src.obj_desc[o]);
      s.obj_map.push_back(rank <= u_rank ? mw.src.obj("T") : o);
    }
    for (MorId m = 0; m < c.num_morphisms(); ++m)
      s.mor_map.push_back(c.hom(s.obj_map[c.dom(m)], s.obj_map[c.cod(m)]).at(0));
    rep.merge(check_functor_laws(s), "erasure-S.");
    // posetal adjunction: hom correspondence max(j,u) ⊒ k  ⟺  j ⊒ S(k)
    bool ok = true;
    Functor gg = g;
    gg.tgt = mw.src.cat.get();
    // g maps into the target window; rebuild over the shared window
    for (ObjId o = 0; o < c.num_objects(); ++o)
      gg.obj_map[o] = mw.src.obj(mw.fam->apply_obj(mw.src.obj_desc[o]));
    for (MorId m = 0; m < c.num_morphisms(); ++m) {
      const std::string& d = mw.src.obj_desc[c.dom(m)];
      const std::string& cd = mw.src.obj_desc[c.cod(m)];
      gg.mor_map[m] =
          mw.src.mor(mw.fam->apply_obj(d), mw.fam->apply_obj(cd), mw.fam->apply_mor(d, cd, "!"));
    }
    for (ObjId j = 0; j < c.num_objects() && ok; ++j)
      for (ObjId k = 0; k < c.num_objects(); ++k)
        if (c.hom(gg.obj_map[j], k).size() != c.hom(j, s.obj_map[k]).size()) {
          rep.fail("erasure-hom-bijection", c.objects[j] + ";" + c.objects[k], "");
          ok = false;
          break;
        }
    if (ok) rep.pass("erasure-hom-bijection", "max(-,u) ⊣ S on the chain");
  }
  return rep;
}

CheckReport suite_spooky(std::uint64_t seed, const Caps& caps) {
  (void)seed;
  CheckReport rep;
  rep.subject = "spooky";
  ZooEntry e = zoo_build("cartesian-cubes", ZooParams::parse("k=0"));
  MultWindow mw = make_mult_window(*e.mult, 2, caps);
  const FinCat& src = *mw.src.cat;
  // Δ: two cells at ⊤, one elsewhere
  Presheaf delta;
  delta.base = &src;
  delta.name = "Δ";
  delta.cell_names.resize(src.num_objects());
  for (ObjId o = 0; o < src.num_objects(); ++o) {
    if (o == mw.top_src) delta.cell_names[o] = {"ff", "tt"};
    else delta.cell_names[o] = {"*"};
  }
  delta.restr.resize(src.num_morphisms());
  for (MorId m = 0; m < src.num_morphisms(); ++m)
    delta.restr[m].assign(delta.cells(src.cod(m)), 0);
  {
    CheckReport laws = check_presheaf_laws(delta);
    rep.merge(laws, "Δ.");
  }
  Presheaf top = terminal_presheaf(src);
  auto homs = enumerate_psh_mors(top, delta, caps);
  rep.add("two-morphisms", homs.size() == 2 ? Verdict::Pass : Verdict::Fail,
          std::to_string(homs.size()), "Hom(⊤, Δ) has exactly two elements");
  if (homs.size() == 2) {
    LeftLift ltop = left_lift(mw.ltimes, top, caps, "⊤⋉yI");
    LeftLift ldelta = left_lift(mw.ltimes, delta, caps, "Δ⋉yI");
    PshMorData im0 = left_lift_mor(mw.ltimes, ltop, ldelta, top, homs[0]);
    PshMorData im1 = left_lift_mor(mw.ltimes, ltop, ldelta, top, homs[1]);
    rep.add("identified-by-multiplier", im0 == im1 ? Verdict::Pass : Verdict::Fail, "",
            "⋉𝐲I maps both morphisms to the same image");
    auto iso = iso_search(ldelta.psh, ltop.psh, caps);
    rep.add("image-of-terminal", iso ? Verdict::Pass : Verdict::Fail, "",
            "Δ⋉𝐲I ≅ ⊤⋉𝐲I (the image of the terminal presheaf)");
  }
  return rep;
}

RunReport run(const RunConfig& config) {
  RunReport out;
  out.seed = config.seed;
  out.requested_suites = config.suites;
  for (const auto& name : config.suites) {
    if (std::find(RunConfig::known_suites().begin(), RunConfig::known_suites().end(), name) ==
        RunConfig::known_suites().end())
      throw ConfigError("unknown suite '" + name + "'");
  }
  for (const auto& name : config.suites) {
    CheckReport r;
    try {
      if (name == "classification") r = suite_classification(config.zoo, config.seed, config.caps);
      else if (name == "boundary") r = suite_boundary(config.zoo, config.seed, config.caps);
      else if (name == "poles") r = suite_poles(config.zoo, config.seed, config.caps);
      else if (name == "kernel") r = suite_kernel(config.zoo, config.seed, config.caps);
      else if (name == "quantification")
        r = suite_quantification(config.zoo, config.seed, config.caps);
      else if (name == "exchange") r = suite_exchange(config.zoo, config.seed, config.caps);
      else if (name == "elimination") r = suite_elimination(config.zoo, config.seed, config.caps);
      else if (name == "adjunction") r = suite_adjunction(config.zoo, config.seed, config.caps);
      else if (name == "commutation")
        r = suite_commutation(config.seed, config.caps, config.commutation_fixtures);
      else if (name == "modalities") r = suite_modalities(config.seed, config.caps);
      else if (name == "spooky") r = suite_spooky(config.seed, config.caps);
    } catch (const WindowEscape& e) {
      r.subject = name;
      r.fail("window-escape", e.what(), "");
    }
    out.suite_names.push_back(name);
    out.suite_reports.push_back(std::move(r));
  }
  return out;
}

bool RunReport::pass() const { return failures() == 0; }

int RunReport::failures() const {
  int n = 0;
  for (const auto& r : suite_reports) n += r.failures();
  return n;
}

int RunReport::warnings() const {
  int n = 0;
  for (const auto& r : suite_reports) n += r.warnings();
  return n;
}

nlohmann::json RunReport::to_json() const {
  json suites = json::array();
  for (const auto& r : suite_reports) suites.push_back(r.to_json());
  json cfg{{"seed", seed}, {"suites", requested_suites}};
  return json{{"config", std::move(cfg)},
              {"suites", std::move(suites)},
              {"pass", pass()},
              {"failures", failures()},
              {"warnings", warnings()}};
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : suite_reports) os << r.to_text();
  os << (pass() ? "ALL PASS" : "FAILURES: " + std::to_string(failures()));
  if (warnings()) os << " (warnings: " << warnings() << ")";
  os << "\n";
  return os.str();
}

}  // namespace tpn
