#include "tpn/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tpn {

std::int64_t Presheaf::total_cells() const {
  std::int64_t n = 0;
  for (const auto& v : cell_names) n += static_cast<std::int64_t>(v.size());
  return n;
}

std::string Presheaf::cell_label(ObjId o, int cell) const {
  return base->objects[o] + "." + cell_names[o][cell];
}

Presheaf terminal_presheaf(const FinCat& c) {
  Presheaf g;
  g.base = &c;
  g.name = "⊤";
  g.cell_names.assign(c.num_objects(), {"*"});
  g.restr.assign(c.num_morphisms(), {0});
  return g;
}

Presheaf initial_presheaf(const FinCat& c) {
  Presheaf g;
  g.base = &c;
  g.name = "⊥";
  g.cell_names.assign(c.num_objects(), {});
  g.restr.assign(c.num_morphisms(), {});
  return g;
}

Presheaf yoneda(const FinCat& c, ObjId w) {
  Presheaf g;
  g.base = &c;
  g.name = "y(" + c.objects[w] + ")";
  g.cell_names.resize(c.num_objects());
  for (ObjId v = 0; v < c.num_objects(); ++v)
    for (MorId m : c.hom(v, w)) g.cell_names[v].push_back(c.mors[m].name);
  g.restr.resize(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const auto& cod_hom = c.hom(c.cod(f), w);
    g.restr[f].resize(cod_hom.size());
    for (size_t i = 0; i < cod_hom.size(); ++i)
      g.restr[f][i] = c.hom_index(c.compose(cod_hom[i], f));
  }
  return g;
}

Presheaf coproduct(const Presheaf& a, const Presheaf& b) {
  Presheaf g;
  g.base = a.base;
  g.name = a.name + "+" + b.name;
  const FinCat& c = *a.base;
  g.cell_names.resize(c.num_objects());
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    for (const auto& n : a.cell_names[o]) g.cell_names[o].push_back("l." + n);
    for (const auto& n : b.cell_names[o]) g.cell_names[o].push_back("r." + n);
  }
  g.restr.resize(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    int na = a.cells(c.cod(f));
    int nb = b.cells(c.cod(f));
    g.restr[f].resize(na + nb);
    for (int i = 0; i < na; ++i) g.restr[f][i] = a.act(f, i);
    for (int i = 0; i < nb; ++i) g.restr[f][na + i] = a.cells(c.dom(f)) + b.act(f, i);
  }
  return g;
}

CheckReport check_presheaf_laws(const Presheaf& g) {
  CheckReport rep;
  rep.subject = g.name;
  const FinCat& c = *g.base;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (static_cast<int>(g.restr[f].size()) != g.cells(c.cod(f))) {
      rep.fail("restriction-typing", c.mor_label(f), "wrong domain size");
      return rep;
    }
    for (int v : g.restr[f])
      if (v < 0 || v >= g.cells(c.dom(f))) {
        rep.fail("restriction-typing", c.mor_label(f), "value out of range");
        return rep;
      }
  }
  rep.pass("restriction-typing");
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    for (int i = 0; i < g.cells(o); ++i)
      if (g.act(c.id(o), i) != i) {
        rep.fail("restrict-identity", g.cell_label(o, i), "");
        return rep;
      }
  }
  rep.pass("restrict-identity");
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId h = 0; h < c.num_morphisms(); ++h) {
      if (!c.composable(h, f)) continue;
      MorId hf = c.compose(h, f);
      for (int i = 0; i < g.cells(c.cod(h)); ++i)
        if (g.act(hf, i) != g.act(f, g.act(h, i))) {
          rep.fail("restrict-composition",
                   c.mor_label(h) + " ∘ " + c.mor_label(f) + " at " + g.cell_label(c.cod(h), i), "");
          return rep;
        }
    }
  rep.pass("restrict-composition");
  return rep;
}

bool subpresheaf_closed(const Presheaf& host, const std::vector<std::vector<char>>& member) {
  const FinCat& c = *host.base;
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (int i = 0; i < host.cells(c.cod(f)); ++i)
      if (member[c.cod(f)][i] && !member[c.dom(f)][host.act(f, i)]) return false;
  return true;
}

bool is_natural(const PshMor& m) {
  const FinCat& c = *m.src->base;
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    if (static_cast<int>(m.comp[o].size()) != m.src->cells(o)) return false;
    for (int v : m.comp[o])
      if (v < 0 || v >= m.tgt->cells(o)) return false;
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (int i = 0; i < m.src->cells(c.cod(f)); ++i)
      if (m.comp[c.dom(f)][m.src->act(f, i)] != m.tgt->act(f, m.comp[c.cod(f)][i])) return false;
  return true;
}

PshMorData identity_psh_mor(const Presheaf& g) {
  PshMorData out(g.cell_names.size());
  for (size_t o = 0; o < g.cell_names.size(); ++o) {
    out[o].resize(g.cell_names[o].size());
    std::iota(out[o].begin(), out[o].end(), 0);
  }
  return out;
}

PshMorData compose_psh(const Presheaf& a, const PshMorData& g, const PshMorData& f) {
  PshMorData out(a.cell_names.size());
  for (size_t o = 0; o < a.cell_names.size(); ++o) {
    out[o].resize(a.cell_names[o].size());
    for (size_t i = 0; i < a.cell_names[o].size(); ++i) out[o][i] = g[o][f[o][i]];
  }
  return out;
}

bool psh_mor_mono(const PshMor& m) {
  for (size_t o = 0; o < m.comp.size(); ++o) {
    std::vector<int> seen(m.tgt->cells(static_cast<ObjId>(o)), 0);
    for (int v : m.comp[o])
      if (seen[v]++) return false;
  }
  return true;
}

bool psh_mor_epi(const PshMor& m) {
  for (size_t o = 0; o < m.comp.size(); ++o) {
    std::vector<int> seen(m.tgt->cells(static_cast<ObjId>(o)), 0);
    for (int v : m.comp[o]) seen[v] = 1;
    for (int s : seen)
      if (!s) return false;
  }
  return true;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep least index as root
    parent[b] = a;
  }
};
}  // namespace

Quotient quotient_presheaf(
    const Presheaf& g,
    const std::vector<std::pair<std::pair<ObjId, int>, std::pair<ObjId, int>>>& rel) {
  const FinCat& c = *g.base;
  std::vector<int> offset(c.num_objects() + 1, 0);
  for (ObjId o = 0; o < c.num_objects(); ++o) offset[o + 1] = offset[o] + g.cells(o);
  UnionFind uf(offset.back());
  for (const auto& [x, y] : rel) {
    if (x.first != y.first) continue;  // only same-object identifications make sense
    uf.unite(offset[x.first] + x.second, offset[y.first] + y.second);
  }
  // congruence closure: a ~ b at X forces a·f ~ b·f
  bool changed = true;
  while (changed) {
    changed = false;
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      ObjId x = c.cod(f), y = c.dom(f);
      for (int i = 0; i < g.cells(x); ++i)
        for (int j = i + 1; j < g.cells(x); ++j) {
          if (uf.find(offset[x] + i) != uf.find(offset[x] + j)) continue;
          int a = offset[y] + g.act(f, i), b = offset[y] + g.act(f, j);
          if (uf.find(a) != uf.find(b)) {
            uf.unite(a, b);
            changed = true;
          }
        }
    }
  }
  Quotient q;
  q.cls.resize(c.num_objects());
  Presheaf& out = q.psh;
  out.base = &c;
  out.name = g.name + "/~";
  out.cell_names.resize(c.num_objects());
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    q.cls[o].assign(g.cells(o), -1);
    for (int i = 0; i < g.cells(o); ++i) {
      int r = uf.find(offset[o] + i);
      if (r == offset[o] + i) {
        q.cls[o][i] = static_cast<int>(out.cell_names[o].size());
        out.cell_names[o].push_back(g.cell_names[o][i]);
      }
    }
    for (int i = 0; i < g.cells(o); ++i)
      if (q.cls[o][i] < 0) q.cls[o][i] = q.cls[o][uf.find(offset[o] + i) - offset[o]];
  }
  out.restr.resize(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId x = c.cod(f), y = c.dom(f);
    out.restr[f].assign(out.cell_names[x].size(), -1);
    for (int i = 0; i < g.cells(x); ++i) {
      int& slot = out.restr[f][q.cls[x][i]];
      int v = q.cls[y][g.act(f, i)];
      slot = v;  // well-defined by congruence closure
    }
  }
  return q;
}

Subpresheaf span_subpresheaf(const Presheaf& host, std::vector<std::vector<char>> member) {
  const FinCat& c = *host.base;
  // close downward under restriction
  bool changed = true;
  while (changed) {
    changed = false;
    for (MorId f = 0; f < c.num_morphisms(); ++f)
      for (int i = 0; i < host.cells(c.cod(f)); ++i)
        if (member[c.cod(f)][i] && !member[c.dom(f)][host.act(f, i)]) {
          member[c.dom(f)][host.act(f, i)] = 1;
          changed = true;
        }
  }
  Subpresheaf s;
  s.psh.base = &c;
  s.psh.name = host.name + "|sub";
  s.psh.cell_names.resize(c.num_objects());
  s.old_cell.resize(c.num_objects());
  std::vector<std::vector<int>> new_of(c.num_objects());
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    new_of[o].assign(host.cells(o), -1);
    for (int i = 0; i < host.cells(o); ++i)
      if (member[o][i]) {
        new_of[o][i] = static_cast<int>(s.psh.cell_names[o].size());
        s.psh.cell_names[o].push_back(host.cell_names[o][i]);
        s.old_cell[o].push_back(i);
      }
  }
  s.psh.restr.resize(c.num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    s.psh.restr[f].resize(s.psh.cell_names[c.cod(f)].size());
    for (size_t i = 0; i < s.old_cell[c.cod(f)].size(); ++i)
      s.psh.restr[f][i] = new_of[c.dom(f)][host.act(f, s.old_cell[c.cod(f)][static_cast<int>(i)])];
  }
  s.inclusion.resize(c.num_objects());
  for (ObjId o = 0; o < c.num_objects(); ++o)
    s.inclusion[o] = std::vector<int>(s.old_cell[o].begin(), s.old_cell[o].end());
  return s;
}

ObjId ElementsCat::obj_of(ObjId base_obj, int cell) const {
  auto it = obj_index_.find({base_obj, cell});
  if (it == obj_index_.end()) throw std::logic_error("elements object lookup failed");
  return it->second;
}

MorId ElementsCat::mor_over(MorId chi, int cod_cell) const {
  auto it = mor_index_.find({chi, cod_cell});
  if (it == mor_index_.end()) throw std::logic_error("elements morphism lookup failed");
  return it->second;
}

ElementsCat elements_category(const FinCat& c, const Presheaf& g, const Caps& caps,
                              const std::string& label) {
  ElementsCat e;
  e.cat = std::make_shared<FinCat>();
  e.base = &c;
  e.psh = g;
  e.cat->name = label.empty() ? ("∫" + g.name) : label;
  for (ObjId w = 0; w < c.num_objects(); ++w)
    for (int i = 0; i < g.cells(w); ++i) {
      ObjId o = e.cat->add_object("(" + c.objects[w] + "|" + g.cell_names[w][i] + ")");
      e.elem.push_back({w, i});
      e.obj_index_[{w, i}] = o;
    }
  if (e.cat->num_objects() > caps.max_objects)
    throw LimitExceeded(e.cat->name + ": too many element objects");
  for (MorId chi = 0; chi < c.num_morphisms(); ++chi)
    for (int i = 0; i < g.cells(c.cod(chi)); ++i) {
      ObjId dom = e.obj_of(c.dom(chi), g.act(chi, i));
      ObjId cod = e.obj_of(c.cod(chi), i);
      MorId m = e.cat->add_morphism("(" + c.mors[chi].name + "|" + g.cell_names[c.cod(chi)][i] + ")",
                                    dom, cod);
      e.base_mor.push_back(chi);
      e.mor_index_[{chi, i}] = m;
    }
  if (e.cat->num_morphisms() > caps.max_morphisms)
    throw LimitExceeded(e.cat->name + ": too many element morphisms");
  for (ObjId o = 0; o < e.cat->num_objects(); ++o)
    e.cat->set_identity(o, e.mor_over(c.id(e.elem[o].first), e.elem[o].second));
  for (MorId m1 = 0; m1 < e.cat->num_morphisms(); ++m1)
    for (MorId m2 = 0; m2 < e.cat->num_morphisms(); ++m2) {
      if (e.cat->cod(m1) != e.cat->dom(m2)) continue;
      MorId chi = c.compose(e.base_mor[m2], e.base_mor[m1]);
      int cod_cell = e.elem[e.cat->cod(m2)].second;
      e.cat->set_compose(m2, m1, e.mor_over(chi, cod_cell));
    }
  e.cat->finalize();
  e.proj.src = e.cat.get();
  e.proj.tgt = &c;
  e.proj.name = "pair_" + g.name;
  for (const auto& [w, i] : e.elem) e.proj.obj_map.push_back(w);
  e.proj.mor_map = e.base_mor;
  return e;
}

ObjId SliceCat::obj_of(ObjId carrier, MorId leg) const {
  auto it = obj_index_.find({carrier, leg});
  if (it == obj_index_.end()) throw std::logic_error("slice object lookup failed");
  return it->second;
}

MorId SliceCat::mor_over(MorId chi, ObjId cod_slice) const {
  auto it = mor_index_.find({chi, cod_slice});
  if (it == mor_index_.end()) throw std::logic_error("slice morphism lookup failed");
  return it->second;
}

SliceCat slice_category(const FinCat& c, ObjId u, const Caps& caps) {
  SliceCat s;
  s.cat = std::make_shared<FinCat>();
  s.base = &c;
  s.u = u;
  s.cat->name = c.name + "/" + c.objects[u];
  for (ObjId w = 0; w < c.num_objects(); ++w)
    for (MorId leg : c.hom(w, u)) {
      ObjId o = s.cat->add_object("(" + c.objects[w] + "," + c.mors[leg].name + ")");
      s.slice.push_back({w, leg});
      s.obj_index_[{w, leg}] = o;
    }
  if (s.cat->num_objects() > caps.max_objects)
    throw LimitExceeded(s.cat->name + ": too many slice objects");
  for (ObjId so = 0; so < s.cat->num_objects(); ++so) {
    auto [w2, leg2] = s.slice[so];
    for (ObjId w1 = 0; w1 < c.num_objects(); ++w1)
      for (MorId chi : c.hom(w1, w2)) {
        MorId leg1 = c.compose(leg2, chi);
        ObjId dom = s.obj_of(w1, leg1);
        MorId m = s.cat->add_morphism("(" + c.mors[chi].name + "→" + s.cat->objects[so] + ")", dom, so);
        s.base_mor.push_back(chi);
        s.mor_index_[{chi, so}] = m;
      }
  }
  if (s.cat->num_morphisms() > caps.max_morphisms)
    throw LimitExceeded(s.cat->name + ": too many slice morphisms");
  for (ObjId so = 0; so < s.cat->num_objects(); ++so)
    s.cat->set_identity(so, s.mor_over(c.id(s.slice[so].first), so));
  for (MorId m1 = 0; m1 < s.cat->num_morphisms(); ++m1)
    for (MorId m2 = 0; m2 < s.cat->num_morphisms(); ++m2) {
      if (s.cat->cod(m1) != s.cat->dom(m2)) continue;
      s.cat->set_compose(m2, m1, s.mor_over(c.compose(s.base_mor[m2], s.base_mor[m1]), s.cat->cod(m2)));
    }
  s.cat->finalize();
  s.pair_functor.src = s.cat.get();
  s.pair_functor.tgt = &c;
  s.pair_functor.name = "pair_" + c.objects[u];
  for (const auto& [w, leg] : s.slice) s.pair_functor.obj_map.push_back(w);
  s.pair_functor.mor_map = s.base_mor;
  return s;
}

int LeftLift::class_of(ObjId d, const Triple& t) const {
  auto it = index_[d].find(t);
  if (it == index_[d].end()) throw std::logic_error("left-lift class lookup failed");
  return it->second;
}

LeftLift left_lift(const Functor& f, const Presheaf& g, const Caps& caps, const std::string& label) {
  const FinCat& c = *f.src;
  const FinCat& d_cat = *f.tgt;
  LeftLift out;
  out.psh.base = &d_cat;
  out.psh.name = label.empty() ? (f.name + "!(" + g.name + ")") : label;
  out.psh.cell_names.resize(d_cat.num_objects());
  out.rep.resize(d_cat.num_objects());
  out.members.resize(d_cat.num_objects());
  out.index_.resize(d_cat.num_objects());

  for (ObjId d = 0; d < d_cat.num_objects(); ++d) {
    std::vector<LeftLift::Triple> triples;
    for (ObjId cc = 0; cc < c.num_objects(); ++cc)
      for (MorId phi : d_cat.hom(d, f.obj_map[cc]))
        for (int cell = 0; cell < g.cells(cc); ++cell) triples.push_back({cc, phi, cell});
    if (static_cast<std::int64_t>(triples.size()) > caps.max_hom_results)
      throw LimitExceeded(out.psh.name + ": coend triple count exceeds cap");
    std::map<LeftLift::Triple, int> pos;
    for (size_t i = 0; i < triples.size(); ++i) pos[triples[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(triples.size()));
    // generators: (cod χ, Fχ∘φ, γ') ~ (dom χ, φ, γ'·χ)
    for (MorId chi = 0; chi < c.num_morphisms(); ++chi) {
      ObjId c0 = c.dom(chi), c1 = c.cod(chi);
      for (MorId phi : d_cat.hom(d, f.obj_map[c0])) {
        MorId fphi = d_cat.compose(f.mor_map[chi], phi);
        for (int cell1 = 0; cell1 < g.cells(c1); ++cell1) {
          uf.unite(pos.at({c1, fphi, cell1}), pos.at({c0, phi, g.act(chi, cell1)}));
        }
      }
    }
    std::vector<int> cls(triples.size(), -1);
    for (size_t i = 0; i < triples.size(); ++i) {
      int r = uf.find(static_cast<int>(i));
      if (cls[r] < 0) {
        cls[r] = static_cast<int>(out.rep[d].size());
        out.rep[d].push_back(triples[r]);
        out.members[d].emplace_back();
      }
      cls[i] = cls[r];
      out.members[d][cls[r]].push_back(triples[i]);
      out.index_[d][triples[i]] = cls[i];
    }
    for (size_t k = 0; k < out.rep[d].size(); ++k)
      out.psh.cell_names[d].push_back("k" + std::to_string(k));
  }

  out.psh.restr.resize(d_cat.num_morphisms());
  for (MorId psi = 0; psi < d_cat.num_morphisms(); ++psi) {
    ObjId dd = d_cat.dom(psi), dc = d_cat.cod(psi);
    out.psh.restr[psi].resize(out.rep[dc].size());
    for (size_t k = 0; k < out.rep[dc].size(); ++k) {
      // restriction (precompose φ) must be class-independent; verify across members
      int value = -1;
      for (const auto& t : out.members[dc][k]) {
        int v = out.class_of(dd, {t.c, d_cat.compose(t.phi, psi), t.cell});
        if (value < 0) value = v;
        else if (value != v)
          throw std::logic_error(out.psh.name + ": coend restriction not class-stable");
      }
      out.psh.restr[psi][k] = value;
    }
  }
  return out;
}

Presheaf central_lift(const Functor& f, const Presheaf& d, const std::string& label) {
  Presheaf out;
  out.base = f.src;
  out.name = label.empty() ? (f.name + "*(" + d.name + ")") : label;
  out.cell_names.resize(f.src->num_objects());
  for (ObjId o = 0; o < f.src->num_objects(); ++o) out.cell_names[o] = d.cell_names[f.obj_map[o]];
  out.restr.resize(f.src->num_morphisms());
  for (MorId m = 0; m < f.src->num_morphisms(); ++m) out.restr[m] = d.restr[f.mor_map[m]];
  return out;
}

// declared in search.cpp
std::vector<PshMorData> enumerate_psh_mors(const Presheaf& a, const Presheaf& b, const Caps& caps,
                                           std::int64_t limit);

int RightLift::eval(ObjId d, int cell, ObjId c, int hom_pos) const {
  return family[d][cell][c][hom_pos];
}

RightLift right_lift(const Functor& f, const Presheaf& g, const Caps& caps,
                     const std::string& label) {
  const FinCat& d_cat = *f.tgt;
  RightLift out;
  out.psh.base = &d_cat;
  out.psh.name = label.empty() ? (f.name + "*(" + g.name + ")") : label;
  out.psh.cell_names.resize(d_cat.num_objects());
  out.test.resize(d_cat.num_objects());
  out.family.resize(d_cat.num_objects());
  std::vector<std::map<PshMorData, int>> index(d_cat.num_objects());
  for (ObjId d = 0; d < d_cat.num_objects(); ++d) {
    out.test[d] = central_lift(f, yoneda(d_cat, d));
    out.family[d] = enumerate_psh_mors(out.test[d], g, caps, caps.max_hom_results);
    for (size_t i = 0; i < out.family[d].size(); ++i) {
      index[d][out.family[d][i]] = static_cast<int>(i);
      out.psh.cell_names[d].push_back("e" + std::to_string(i));
    }
  }
  out.psh.restr.resize(d_cat.num_morphisms());
  const FinCat& c_cat = *f.src;
  for (MorId psi = 0; psi < d_cat.num_morphisms(); ++psi) {
    ObjId dd = d_cat.dom(psi), dc = d_cat.cod(psi);
    out.psh.restr[psi].resize(out.family[dc].size());
    for (size_t k = 0; k < out.family[dc].size(); ++k) {
      // restricted family: t'(c, ψ') = t(c, ψ∘ψ')
      PshMorData t(c_cat.num_objects());
      for (ObjId cc = 0; cc < c_cat.num_objects(); ++cc) {
        const auto& homs = d_cat.hom(f.obj_map[cc], dd);
        t[cc].resize(homs.size());
        for (size_t hi = 0; hi < homs.size(); ++hi) {
          MorId comp = d_cat.compose(psi, homs[hi]);
          t[cc][hi] = out.family[dc][k][cc][d_cat.hom_index(comp)];
        }
      }
      auto it = index[dd].find(t);
      if (it == index[dd].end())
        throw std::logic_error(out.psh.name + ": restricted family not found (end not closed)");
      out.psh.restr[psi][k] = it->second;
    }
  }
  return out;
}

PshMorData left_lift_of_nat(const Functor& f, const Functor& g, const std::vector<MorId>& alpha,
                            const LeftLift& lf, const LeftLift& lg) {
  const FinCat& d_cat = *f.tgt;
  PshMorData out(d_cat.num_objects());
  for (ObjId d = 0; d < d_cat.num_objects(); ++d) {
    out[d].resize(lf.rep[d].size());
    for (size_t k = 0; k < lf.rep[d].size(); ++k) {
      const auto& t = lf.rep[d][k];
      out[d][k] = lg.class_of(d, {t.c, d_cat.compose(alpha[t.c], t.phi), t.cell});
    }
  }
  return out;
}

PshMorData left_lift_mor(const Functor& f, const LeftLift& la, const LeftLift& lb,
                         const Presheaf& a, const PshMorData& sigma) {
  (void)a;
  const FinCat& d_cat = *f.tgt;
  PshMorData out(d_cat.num_objects());
  for (ObjId d = 0; d < d_cat.num_objects(); ++d) {
    out[d].resize(la.rep[d].size());
    for (size_t k = 0; k < la.rep[d].size(); ++k) {
      const auto& t = la.rep[d][k];
      out[d][k] = lb.class_of(d, {t.c, t.phi, sigma[t.c][t.cell]});
    }
  }
  return out;
}

PshMorData central_lift_mor(const Functor& f, const PshMorData& sigma) {
  PshMorData out(f.src->num_objects());
  for (ObjId o = 0; o < f.src->num_objects(); ++o) out[o] = sigma[f.obj_map[o]];
  return out;
}

PshMorData right_lift_mor(const Functor& f, const RightLift& ra, const RightLift& rb,
                          const Presheaf& a, const Presheaf& b, const PshMorData& sigma) {
  (void)a;
  (void)b;
  const FinCat& d_cat = *f.tgt;
  const FinCat& c_cat = *f.src;
  PshMorData out(d_cat.num_objects());
  for (ObjId d = 0; d < d_cat.num_objects(); ++d) {
    out[d].resize(ra.family[d].size());
    for (size_t k = 0; k < ra.family[d].size(); ++k) {
      PshMorData t(c_cat.num_objects());
      for (ObjId cc = 0; cc < c_cat.num_objects(); ++cc) {
        t[cc].resize(ra.family[d][k][cc].size());
        for (size_t hi = 0; hi < t[cc].size(); ++hi)
          t[cc][hi] = sigma[cc][ra.family[d][k][cc][hi]];
      }
      int found = -1;
      for (size_t i = 0; i < rb.family[d].size() && found < 0; ++i)
        if (rb.family[d][i] == t) found = static_cast<int>(i);
      if (found < 0) throw std::logic_error("right_lift_mor: image family missing");
      out[d][k] = found;
    }
  }
  return out;
}

PshMorData transpose_left_to_central(const Functor& f, const LeftLift& lg, const Presheaf& g,
                                     const Presheaf& d, const PshMorData& sigma) {
  (void)d;
  const FinCat& c_cat = *f.src;
  const FinCat& d_cat = *f.tgt;
  PshMorData out(c_cat.num_objects());
  for (ObjId cc = 0; cc < c_cat.num_objects(); ++cc) {
    out[cc].resize(g.cells(cc));
    for (int cell = 0; cell < g.cells(cc); ++cell) {
      ObjId fc = f.obj_map[cc];
      int cls = lg.class_of(fc, {cc, d_cat.id(fc), cell});
      out[cc][cell] = sigma[fc][cls];
    }
  }
  return out;
}

PshMorData transpose_central_to_left(const Functor& f, const LeftLift& lg, const Presheaf& g,
                                     const Presheaf& d, const PshMorData& tau) {
  (void)g;
  const FinCat& d_cat = *f.tgt;
  PshMorData out(d_cat.num_objects());
  for (ObjId dd = 0; dd < d_cat.num_objects(); ++dd) {
    out[dd].resize(lg.rep[dd].size());
    for (size_t k = 0; k < lg.rep[dd].size(); ++k) {
      int value = -1;
      for (const auto& t : lg.members[dd][k]) {
        int v = d.act(t.phi, tau[t.c][t.cell]);
        if (value < 0) value = v;
        else if (value != v)
          throw std::logic_error("transpose_central_to_left: not class-stable");
      }
      out[dd][k] = value;
    }
  }
  return out;
}

PshMorData transpose_central_to_right(const Functor& f, const Presheaf& d, const Presheaf& g,
                                      const RightLift& rg, const PshMorData& sigma) {
  (void)g;
  const FinCat& d_cat = *f.tgt;
  const FinCat& c_cat = *f.src;
  PshMorData out(d_cat.num_objects());
  for (ObjId dd = 0; dd < d_cat.num_objects(); ++dd) {
    out[dd].resize(d.cells(dd));
    for (int cell = 0; cell < d.cells(dd); ++cell) {
      PshMorData t(c_cat.num_objects());
      for (ObjId cc = 0; cc < c_cat.num_objects(); ++cc) {
        const auto& homs = d_cat.hom(f.obj_map[cc], dd);
        t[cc].resize(homs.size());
        for (size_t hi = 0; hi < homs.size(); ++hi)
          t[cc][hi] = sigma[cc][d.act(homs[hi], cell)];
      }
      int found = -1;
      for (size_t i = 0; i < rg.family[dd].size() && found < 0; ++i)
        if (rg.family[dd][i] == t) found = static_cast<int>(i);
      if (found < 0) throw std::logic_error("transpose_central_to_right: family missing");
      out[dd][cell] = found;
    }
  }
  return out;
}

PshMorData transpose_right_to_central(const Functor& f, const Presheaf& d, const Presheaf& g,
                                      const RightLift& rg, const PshMorData& tau) {
  (void)g;
  const FinCat& d_cat = *f.tgt;
  const FinCat& c_cat = *f.src;
  PshMorData out(c_cat.num_objects());
  for (ObjId cc = 0; cc < c_cat.num_objects(); ++cc) {
    ObjId fc = f.obj_map[cc];
    out[cc].resize(d.cells(fc));
    for (int cell = 0; cell < d.cells(fc); ++cell) {
      int fam = tau[fc][cell];
      out[cc][cell] = rg.eval(fc, fam, cc, d_cat.hom_index(d_cat.id(fc)));
    }
  }
  return out;
}

CheckReport check_lift_adjunctions(const Functor& f, const std::vector<Presheaf>& src_samples,
                                   const std::vector<Presheaf>& tgt_samples, const Caps& caps) {
  CheckReport rep;
  rep.subject = "lift-adjunctions(" + f.name + ")";
  for (const auto& g : src_samples) {
    LeftLift lg = left_lift(f, g, caps);
    RightLift rg = right_lift(f, g, caps);
    for (const auto& d : tgt_samples) {
      Presheaf cd = central_lift(f, d);
      auto homs_left = enumerate_psh_mors(lg.psh, d, caps, caps.max_hom_results);
      auto homs_central = enumerate_psh_mors(g, cd, caps, caps.max_hom_results);
      std::string tag = "(" + g.name + ";" + d.name + ")";
      if (homs_left.size() != homs_central.size()) {
        rep.fail("left-adjunction-count" + tag,
                 std::to_string(homs_left.size()) + " vs " + std::to_string(homs_central.size()), "");
        continue;
      }
      bool ok = true;
      for (const auto& sigma : homs_left) {
        PshMorData tau = transpose_left_to_central(f, lg, g, d, sigma);
        if (!is_natural(PshMor{&g, &cd, tau}) ||
            transpose_central_to_left(f, lg, g, d, tau) != sigma) {
          rep.fail("left-adjunction-roundtrip" + tag, "transpose mismatch", "");
          ok = false;
          break;
        }
      }
      for (const auto& tau : homs_central) {
        PshMorData sigma = transpose_central_to_left(f, lg, g, d, tau);
        if (!is_natural(PshMor{&lg.psh, &d, sigma}) ||
            transpose_left_to_central(f, lg, g, d, sigma) != tau) {
          rep.fail("left-adjunction-roundtrip2" + tag, "transpose mismatch", "");
          ok = false;
          break;
        }
      }
      if (ok) rep.pass("left-adjunction" + tag, std::to_string(homs_left.size()) + " homs");

      // second adjunction: Hom(F*Δ, Γ) ≅ Hom(Δ, F*Γ)   (central ⊣ right)
      auto homs_c2 = enumerate_psh_mors(cd, g, caps, caps.max_hom_results);
      auto homs_right = enumerate_psh_mors(d, rg.psh, caps, caps.max_hom_results);
      if (homs_c2.size() != homs_right.size()) {
        rep.fail("right-adjunction-count" + tag,
                 std::to_string(homs_c2.size()) + " vs " + std::to_string(homs_right.size()), "");
        continue;
      }
      ok = true;
      for (const auto& sigma : homs_c2) {
        PshMorData tau = transpose_central_to_right(f, d, g, rg, sigma);
        if (!is_natural(PshMor{&d, &rg.psh, tau}) ||
            transpose_right_to_central(f, d, g, rg, tau) != sigma) {
          rep.fail("right-adjunction-roundtrip" + tag, "transpose mismatch", "");
          ok = false;
          break;
        }
      }
      for (const auto& tau : homs_right) {
        PshMorData sigma = transpose_right_to_central(f, d, g, rg, tau);
        if (!is_natural(PshMor{&cd, &g, sigma}) ||
            transpose_central_to_right(f, d, g, rg, sigma) != tau) {
          rep.fail("right-adjunction-roundtrip2" + tag, "transpose mismatch", "");
          ok = false;
          break;
        }
      }
      if (ok) rep.pass("right-adjunction" + tag, std::to_string(homs_c2.size()) + " homs");
    }
  }
  return rep;
}

Presheaf preimage(const ElementsCat& e_gamma, const Presheaf& delta, const PshMorData& sigma) {
  const FinCat& ecat = *e_gamma.cat;
  Presheaf out;
  out.base = &ecat;
  out.name = "preimage(" + delta.name + ")";
  out.cell_names.resize(ecat.num_objects());
  std::vector<std::vector<int>> old_of(ecat.num_objects());
  std::vector<std::vector<int>> new_of(ecat.num_objects());
  for (ObjId i = 0; i < ecat.num_objects(); ++i) {
    auto [w, gamma] = e_gamma.elem[i];
    new_of[i].assign(delta.cells(w), -1);
    for (int dcell = 0; dcell < delta.cells(w); ++dcell)
      if (sigma[w][dcell] == gamma) {
        new_of[i][dcell] = static_cast<int>(old_of[i].size());
        old_of[i].push_back(dcell);
        out.cell_names[i].push_back(delta.cell_names[w][dcell]);
      }
  }
  out.restr.resize(ecat.num_morphisms());
  for (MorId m = 0; m < ecat.num_morphisms(); ++m) {
    MorId chi = e_gamma.base_mor[m];
    ObjId cod = ecat.cod(m), dom = ecat.dom(m);
    out.restr[m].resize(old_of[cod].size());
    for (size_t k = 0; k < old_of[cod].size(); ++k)
      out.restr[m][k] = new_of[dom][delta.act(chi, old_of[cod][static_cast<int>(k)])];
  }
  return out;
}

TotalPsh total_presheaf(const ElementsCat& e, const Presheaf& a, const std::string& label) {
  const FinCat& base = *e.base;
  TotalPsh t;
  t.psh.base = &base;
  t.psh.name = label.empty() ? (e.psh.name + "." + a.name) : label;
  t.psh.cell_names.resize(base.num_objects());
  t.split.resize(base.num_objects());
  t.index.resize(base.num_objects());
  t.proj.resize(base.num_objects());
  for (ObjId w = 0; w < base.num_objects(); ++w) {
    for (int psi = 0; psi < e.psh.cells(w); ++psi) {
      ObjId eo = e.obj_of(w, psi);
      for (int acell = 0; acell < a.cells(eo); ++acell) {
        t.index[w][{psi, acell}] = static_cast<int>(t.split[w].size());
        t.split[w].push_back({psi, acell});
        t.psh.cell_names[w].push_back("(" + e.psh.cell_names[w][psi] + "," +
                                      a.cell_names[eo][acell] + ")");
        t.proj[w].push_back(psi);
      }
    }
  }
  t.psh.restr.resize(base.num_morphisms());
  for (MorId chi = 0; chi < base.num_morphisms(); ++chi) {
    ObjId cod = base.cod(chi), dom = base.dom(chi);
    t.psh.restr[chi].resize(t.split[cod].size());
    for (size_t k = 0; k < t.split[cod].size(); ++k) {
      auto [psi, acell] = t.split[cod][k];
      MorId em = e.mor_over(chi, psi);
      t.psh.restr[chi][k] = t.index[dom].at({e.psh.act(chi, psi), a.act(em, acell)});
    }
  }
  return t;
}

Functor pair_functor_of(const ElementsCat& e_src, const ElementsCat& e_tgt, const PshMorData& sigma) {
  Functor f;
  f.src = e_src.cat.get();
  f.tgt = e_tgt.cat.get();
  f.name = "pair_σ";
  for (const auto& [w, cell] : e_src.elem) f.obj_map.push_back(e_tgt.obj_of(w, sigma[w][cell]));
  for (MorId m = 0; m < e_src.cat->num_morphisms(); ++m) {
    MorId chi = e_src.base_mor[m];
    auto [w, cell] = e_src.elem[e_src.cat->cod(m)];
    f.mor_map.push_back(e_tgt.mor_over(chi, sigma[w][cell]));
  }
  return f;
}

std::optional<Functor> wkn_functor_of(const ElementsCat& e_tgt, const ElementsCat& e_src,
                                      const PshMorData& sigma) {
  // right adjoint-style pullback: for each x in elements(Ψ), the terminal
  // object of (pair_σ ↓ x)
  Functor pair = pair_functor_of(e_src, e_tgt, sigma);
  Functor w;
  w.src = e_tgt.cat.get();
  w.tgt = e_src.cat.get();
  w.name = "wkn_σ";
  w.obj_map.resize(e_tgt.cat->num_objects());
  std::vector<MorId> counit(e_tgt.cat->num_objects());
  for (ObjId x = 0; x < e_tgt.cat->num_objects(); ++x) {
    auto ua = right_universal_arrow(pair, x);
    if (!ua) return std::nullopt;
    w.obj_map[x] = ua->obj;
    counit[x] = ua->arrow;
  }
  w.mor_map.resize(e_tgt.cat->num_morphisms());
  for (MorId m = 0; m < e_tgt.cat->num_morphisms(); ++m) {
    ObjId x = e_tgt.cat->dom(m), y = e_tgt.cat->cod(m);
    int found = 0;
    MorId u_found = kNoMor;
    for (MorId u : e_src.cat->hom(w.obj_map[x], w.obj_map[y]))
      if (e_tgt.cat->compose(counit[y], pair.mor_map[u]) == e_tgt.cat->compose(m, counit[x])) {
        ++found;
        u_found = u;
      }
    if (found != 1) return std::nullopt;
    w.mor_map[m] = u_found;
  }
  return w;
}

Presheaf subst_functor(SubstKind kind, const ElementsCat& e_psi_prime, const ElementsCat& e_psi,
                       const PshMorData& sigma, const Presheaf& x, const Caps& caps) {
  Functor pair = pair_functor_of(e_psi_prime, e_psi, sigma);
  switch (kind) {
    case SubstKind::Sigma:
      return left_lift(pair, x, caps, "Σ_σ(" + x.name + ")").psh;
    case SubstKind::Omega:
      return central_lift(pair, x, "Ω_σ(" + x.name + ")");
    case SubstKind::Pi:
      return right_lift(pair, x, caps, "Π_σ(" + x.name + ")").psh;
    case SubstKind::Dollar: {
      auto w = wkn_functor_of(e_psi, e_psi_prime, sigma);
      if (!w) throw SubstError("MissingPullbacks: wkn-slice absent in window");
      return right_lift(*w, x, caps, "$_σ(" + x.name + ")").psh;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace tpn
