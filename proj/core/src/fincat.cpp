#include "tpn/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace tpn {

namespace {
std::uint64_t pack(MorId g, MorId f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}
}  // namespace

ObjId FinCat::add_object(std::string obj_name) {
  objects.push_back(std::move(obj_name));
  identity.push_back(kNoMor);
  return static_cast<ObjId>(objects.size() - 1);
}

MorId FinCat::add_morphism(std::string mor_name, ObjId d, ObjId c) {
  mors.push_back(MorData{std::move(mor_name), d, c});
  return static_cast<MorId>(mors.size() - 1);
}

void FinCat::set_identity(ObjId o, MorId m) { identity[o] = m; }

void FinCat::set_compose(MorId g, MorId f, MorId gf) { comp_[pack(g, f)] = gf; }

void FinCat::finalize() {
  hom_.assign(objects.size(), std::vector<std::vector<MorId>>(objects.size()));
  for (MorId m = 0; m < num_morphisms(); ++m) {
    hom_[mors[m].dom][mors[m].cod].push_back(m);
  }
  hom_pos_.assign(mors.size(), 0);
  for (const auto& row : hom_)
    for (const auto& bucket : row)
      for (int i = 0; i < static_cast<int>(bucket.size()); ++i) hom_pos_[bucket[i]] = i;
  finalized_ = true;
}

MorId FinCat::compose(MorId g, MorId f) const {
  auto it = comp_.find(pack(g, f));
  if (it == comp_.end())
    throw std::logic_error("missing composition entry " + mor_label(g) + " after " + mor_label(f) +
                           " in category " + name);
  return it->second;
}

std::optional<MorId> FinCat::try_compose(MorId g, MorId f) const {
  auto it = comp_.find(pack(g, f));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

const std::vector<MorId>& FinCat::hom(ObjId a, ObjId b) const { return hom_[a][b]; }

std::optional<ObjId> FinCat::find_terminal() const {
  for (ObjId o = 0; o < num_objects(); ++o) {
    bool ok = true;
    for (ObjId a = 0; a < num_objects() && ok; ++a) ok = hom_[a][o].size() == 1;
    if (ok) return o;
  }
  return std::nullopt;
}

std::optional<ObjId> FinCat::find_initial() const {
  for (ObjId o = 0; o < num_objects(); ++o) {
    bool ok = true;
    for (ObjId a = 0; a < num_objects() && ok; ++a) ok = hom_[o][a].size() == 1;
    if (ok) return o;
  }
  return std::nullopt;
}

std::optional<MorId> FinCat::inverse(MorId m) const {
  for (MorId r : hom_[mors[m].cod][mors[m].dom]) {
    if (compose(r, m) == identity[mors[m].dom] && compose(m, r) == identity[mors[m].cod])
      return r;
  }
  return std::nullopt;
}

std::string FinCat::mor_label(MorId m) const {
  if (m < 0 || m >= num_morphisms()) return "<invalid mor " + std::to_string(m) + ">";
  std::ostringstream os;
  os << mors[m].name << ": " << objects[mors[m].dom] << " -> " << objects[mors[m].cod];
  return os.str();
}

CheckReport check_category_laws(const FinCat& c, const Caps& caps) {
  CheckReport rep;
  rep.subject = c.name;
  if (c.num_objects() > caps.max_objects)
    throw LimitExceeded(c.name + ": " + std::to_string(c.num_objects()) + " objects exceeds cap");
  if (c.num_morphisms() > caps.max_morphisms)
    throw LimitExceeded(c.name + ": " + std::to_string(c.num_morphisms()) + " morphisms exceeds cap");

  for (ObjId o = 0; o < c.num_objects(); ++o) {
    MorId i = c.identity[o];
    if (i == kNoMor || c.dom(i) != o || c.cod(i) != o) {
      rep.fail("identity-present", c.objects[o], "object lacks a well-typed identity");
      return rep;
    }
  }
  rep.pass("identity-present");

  // totality + dom/cod coherence + identity laws
  std::int64_t entries = 0;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f)) continue;
      if (++entries > caps.max_compositions)
        throw LimitExceeded(c.name + ": composition entries exceed cap");
      auto gf = c.try_compose(g, f);
      if (!gf) {
        rep.fail("composition-total", c.mor_label(g) + " ∘ " + c.mor_label(f), "missing entry");
        return rep;
      }
      if (c.dom(*gf) != c.dom(f) || c.cod(*gf) != c.cod(g)) {
        rep.fail("dom-cod-coherence", c.mor_label(g) + " ∘ " + c.mor_label(f) + " = " + c.mor_label(*gf),
                 "endpoint mismatch");
        return rep;
      }
    }
  }
  rep.pass("composition-total", std::to_string(entries) + " composable pairs");
  rep.pass("dom-cod-coherence");

  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.compose(c.id(c.cod(f)), f) != f) {
      rep.fail("identity-law-left", c.mor_label(f), "id ∘ f != f");
      return rep;
    }
    if (c.compose(f, c.id(c.dom(f))) != f) {
      rep.fail("identity-law-right", c.mor_label(f), "f ∘ id != f");
      return rep;
    }
  }
  rep.pass("identity-laws");

  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f)) continue;
      MorId gf = c.compose(g, f);
      for (MorId h = 0; h < c.num_morphisms(); ++h) {
        if (!c.composable(h, g)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, gf)) {
          rep.fail("associativity",
                   "(" + c.mor_label(h) + ", " + c.mor_label(g) + ", " + c.mor_label(f) + ")",
                   "h∘(g∘f) != (h∘g)∘f");
          return rep;
        }
      }
    }
  }
  rep.pass("associativity");
  return rep;
}

MorphismClass classify_morphism(const FinCat& c, MorId f) {
  MorphismClass out;
  // mono: f∘g = f∘h implies g = h over all window morphisms
  out.mono = true;
  for (ObjId a = 0; a < c.num_objects() && out.mono; ++a) {
    const auto& bucket = c.hom(a, c.dom(f));
    for (size_t i = 0; i < bucket.size() && out.mono; ++i)
      for (size_t j = i + 1; j < bucket.size() && out.mono; ++j)
        if (c.compose(f, bucket[i]) == c.compose(f, bucket[j])) out.mono = false;
  }
  for (MorId s : c.hom(c.cod(f), c.dom(f))) {
    if (c.compose(f, s) == c.id(c.cod(f))) {
      out.split_epi = true;
      out.section = s;
      break;
    }
  }
  return out;
}

Functor identity_functor(const FinCat& c) {
  Functor f;
  f.src = &c;
  f.tgt = &c;
  f.name = "Id";
  f.obj_map.resize(c.num_objects());
  f.mor_map.resize(c.num_morphisms());
  for (ObjId o = 0; o < c.num_objects(); ++o) f.obj_map[o] = o;
  for (MorId m = 0; m < c.num_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor out;
  out.src = f.src;
  out.tgt = g.tgt;
  out.name = g.name + "∘" + f.name;
  out.obj_map.resize(f.obj_map.size());
  out.mor_map.resize(f.mor_map.size());
  for (size_t o = 0; o < f.obj_map.size(); ++o) out.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (size_t m = 0; m < f.mor_map.size(); ++m) out.mor_map[m] = g.mor_map[f.mor_map[m]];
  return out;
}

bool functor_equal(const Functor& f, const Functor& g) {
  return f.src == g.src && f.tgt == g.tgt && f.obj_map == g.obj_map && f.mor_map == g.mor_map;
}

CheckReport check_functor_laws(const Functor& f) {
  CheckReport rep;
  rep.subject = f.name;
  const FinCat& s = *f.src;
  const FinCat& t = *f.tgt;
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    MorId fm = f.mor_map[m];
    if (t.dom(fm) != f.obj_map[s.dom(m)] || t.cod(fm) != f.obj_map[s.cod(m)]) {
      rep.fail("preserves-endpoints", s.mor_label(m), "image has wrong dom/cod");
      return rep;
    }
  }
  rep.pass("preserves-endpoints");
  for (ObjId o = 0; o < s.num_objects(); ++o) {
    if (f.mor_map[s.id(o)] != t.id(f.obj_map[o])) {
      rep.fail("preserves-identities", s.objects[o], "");
      return rep;
    }
  }
  rep.pass("preserves-identities");
  for (MorId a = 0; a < s.num_morphisms(); ++a)
    for (MorId b = 0; b < s.num_morphisms(); ++b) {
      if (!s.composable(b, a)) continue;
      if (f.mor_map[s.compose(b, a)] != t.compose(f.mor_map[b], f.mor_map[a])) {
        rep.fail("preserves-composition", s.mor_label(b) + " ∘ " + s.mor_label(a), "");
        return rep;
      }
    }
  rep.pass("preserves-composition");
  return rep;
}

CheckReport check_naturality(const NatTrans& n, const std::string& label) {
  CheckReport rep;
  rep.subject = label;
  const Functor& f = *n.source;
  const Functor& g = *n.target;
  const FinCat& s = *f.src;
  const FinCat& t = *f.tgt;
  for (ObjId o = 0; o < s.num_objects(); ++o) {
    MorId c = n.comp[o];
    if (t.dom(c) != f.obj_map[o] || t.cod(c) != g.obj_map[o]) {
      rep.fail("component-typing", s.objects[o], "component has wrong endpoints");
      return rep;
    }
  }
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    MorId lhs = t.compose(n.comp[s.cod(m)], f.mor_map[m]);
    MorId rhs = t.compose(g.mor_map[m], n.comp[s.dom(m)]);
    if (lhs != rhs) {
      rep.fail("naturality", s.mor_label(m),
               t.mor_label(lhs) + " != " + t.mor_label(rhs));
      return rep;
    }
  }
  rep.pass("naturality");
  return rep;
}

CheckReport check_adjunction(const Adjunction& adj, const std::string& label) {
  CheckReport rep;
  rep.subject = label;
  const Functor& l = *adj.left;
  const Functor& r = *adj.right;
  const FinCat& c = *l.src;
  const FinCat& d = *l.tgt;

  Functor rl = compose(r, l);
  Functor lr = compose(l, r);
  Functor idc = identity_functor(c);
  Functor idd = identity_functor(d);
  NatTrans unit{&idc, &rl, adj.unit};
  NatTrans counit{&lr, &idd, adj.counit};
  rep.merge(check_naturality(unit, "unit"), "unit.");
  rep.merge(check_naturality(counit, "counit"), "counit.");
  if (!rep.ok()) return rep;

  // (εL)(Lη) = id_L and (Rε)(ηR) = id_R
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    MorId lhs = d.compose(adj.counit[l.obj_map[x]], l.mor_map[adj.unit[x]]);
    if (lhs != d.id(l.obj_map[x])) {
      rep.fail("triangle-L", c.objects[x], d.mor_label(lhs));
      return rep;
    }
  }
  rep.pass("triangle-L");
  for (ObjId y = 0; y < d.num_objects(); ++y) {
    MorId lhs = c.compose(r.mor_map[adj.counit[y]], adj.unit[r.obj_map[y]]);
    if (lhs != c.id(r.obj_map[y])) {
      rep.fail("triangle-R", d.objects[y], c.mor_label(lhs));
      return rep;
    }
  }
  rep.pass("triangle-R");
  return rep;
}

std::optional<UniversalArrow> left_universal_arrow(const Functor& f, ObjId b) {
  const FinCat& a_cat = *f.src;
  const FinCat& b_cat = *f.tgt;
  for (ObjId a = 0; a < a_cat.num_objects(); ++a) {
    for (MorId eta : b_cat.hom(b, f.obj_map[a])) {
      bool universal = true;
      for (ObjId a2 = 0; a2 < a_cat.num_objects() && universal; ++a2) {
        for (MorId eta2 : b_cat.hom(b, f.obj_map[a2])) {
          int count = 0;
          for (MorId u : a_cat.hom(a, a2))
            if (b_cat.compose(f.mor_map[u], eta) == eta2) ++count;
          if (count != 1) {
            universal = false;
            break;
          }
        }
      }
      if (universal) return UniversalArrow{a, eta};
    }
  }
  return std::nullopt;
}

std::optional<UniversalArrow> right_universal_arrow(const Functor& f, ObjId b) {
  const FinCat& a_cat = *f.src;
  const FinCat& b_cat = *f.tgt;
  for (ObjId a = 0; a < a_cat.num_objects(); ++a) {
    for (MorId eps : b_cat.hom(f.obj_map[a], b)) {
      bool universal = true;
      for (ObjId a2 = 0; a2 < a_cat.num_objects() && universal; ++a2) {
        for (MorId eps2 : b_cat.hom(f.obj_map[a2], b)) {
          int count = 0;
          for (MorId u : a_cat.hom(a2, a))
            if (b_cat.compose(eps, f.mor_map[u]) == eps2) ++count;
          if (count != 1) {
            universal = false;
            break;
          }
        }
      }
      if (universal) return UniversalArrow{a, eps};
    }
  }
  return std::nullopt;
}

std::optional<PullbackResult> pullback(const FinCat& c, MorId f, MorId g) {
  if (c.cod(f) != c.cod(g)) return std::nullopt;
  ObjId a = c.dom(f), b = c.dom(g);
  for (ObjId p = 0; p < c.num_objects(); ++p) {
    for (MorId pa : c.hom(p, a)) {
      for (MorId pb : c.hom(p, b)) {
        if (c.compose(f, pa) != c.compose(g, pb)) continue;
        // universal: every cone factors uniquely
        bool universal = true;
        for (ObjId q = 0; q < c.num_objects() && universal; ++q) {
          for (MorId qa : c.hom(q, a)) {
            for (MorId qb : c.hom(q, b)) {
              if (c.compose(f, qa) != c.compose(g, qb)) continue;
              int count = 0;
              for (MorId u : c.hom(q, p))
                if (c.compose(pa, u) == qa && c.compose(pb, u) == qb) ++count;
              if (count != 1) {
                universal = false;
                break;
              }
            }
            if (!universal) break;
          }
        }
        if (universal) return PullbackResult{p, pa, pb};
      }
    }
  }
  return std::nullopt;
}

std::optional<ProductResult> product(const FinCat& c, ObjId x, ObjId y) {
  for (ObjId p = 0; p < c.num_objects(); ++p) {
    for (MorId p1 : c.hom(p, x)) {
      for (MorId p2 : c.hom(p, y)) {
        bool universal = true;
        for (ObjId q = 0; q < c.num_objects() && universal; ++q) {
          for (MorId f : c.hom(q, x)) {
            for (MorId g : c.hom(q, y)) {
              int count = 0;
              for (MorId u : c.hom(q, p))
                if (c.compose(p1, u) == f && c.compose(p2, u) == g) ++count;
              if (count != 1) {
                universal = false;
                break;
              }
            }
            if (!universal) break;
          }
        }
        if (universal) return ProductResult{p, p1, p2};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Backtracking object matching for explicit-category isomorphism. Objects are
// matched by hom-profile, then morphisms greedily per hom-bucket.
struct CatIsoSearch {
  const FinCat& a;
  const FinCat& b;
  const Caps& caps;
  std::vector<ObjId> obj_map;
  std::vector<char> used;
  std::int64_t nodes = 0;

  bool mor_extend(Functor& f) {
    // map each hom bucket bijectively, respecting ids and composition
    std::vector<MorId> mmap(a.num_morphisms(), kNoMor);
    for (ObjId x = 0; x < a.num_objects(); ++x) mmap[a.id(x)] = b.id(obj_map[x]);
    return mor_backtrack(mmap, 0, f);
  }

  bool mor_backtrack(std::vector<MorId>& mmap, MorId m, Functor& f) {
    if (++nodes > caps.max_search_nodes) throw LimitExceeded("category iso search budget");
    while (m < a.num_morphisms() && mmap[m] != kNoMor) ++m;
    if (m == a.num_morphisms()) {
      // validate composition fully
      for (MorId x = 0; x < a.num_morphisms(); ++x)
        for (MorId y = 0; y < a.num_morphisms(); ++y) {
          if (!a.composable(y, x)) continue;
          if (b.compose(mmap[y], mmap[x]) != mmap[a.compose(y, x)]) return false;
        }
      f.obj_map = obj_map;
      f.mor_map = mmap;
      return true;
    }
    const auto& candidates = b.hom(obj_map[a.dom(m)], obj_map[a.cod(m)]);
    std::vector<char> taken(candidates.size(), 0);
    for (size_t i = 0; i < candidates.size(); ++i) {
      // injectivity within the bucket
      bool clash = false;
      for (MorId other : a.hom(a.dom(m), a.cod(m)))
        if (mmap[other] == candidates[i]) clash = true;
      if (clash) continue;
      mmap[m] = candidates[i];
      // local composition consistency with already-mapped morphisms
      bool ok = true;
      for (MorId x = 0; x < a.num_morphisms() && ok; ++x) {
        if (mmap[x] == kNoMor) continue;
        if (a.composable(m, x)) {
          MorId mx = a.compose(m, x);
          if (mmap[mx] != kNoMor && b.compose(mmap[m], mmap[x]) != mmap[mx]) ok = false;
        }
        if (a.composable(x, m)) {
          MorId xm = a.compose(x, m);
          if (mmap[xm] != kNoMor && b.compose(mmap[x], mmap[m]) != mmap[xm]) ok = false;
        }
      }
      if (ok && mor_backtrack(mmap, m + 1, f)) return true;
      mmap[m] = kNoMor;
    }
    return false;
  }

  bool obj_backtrack(ObjId x, Functor& f) {
    if (x == a.num_objects()) return mor_extend(f);
    for (ObjId y = 0; y < b.num_objects(); ++y) {
      if (used[y]) continue;
      bool profile_ok = true;
      for (ObjId x2 = 0; x2 < x && profile_ok; ++x2) {
        if (a.hom(x, x2).size() != b.hom(y, obj_map[x2]).size() ||
            a.hom(x2, x).size() != b.hom(obj_map[x2], y).size())
          profile_ok = false;
      }
      if (a.hom(x, x).size() != b.hom(y, y).size()) profile_ok = false;
      if (!profile_ok) continue;
      obj_map[x] = y;
      used[y] = 1;
      if (obj_backtrack(x + 1, f)) return true;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

FullSubcat full_subcategory(const FinCat& c, const std::vector<char>& keep,
                            const std::string& name) {
  FullSubcat s;
  s.cat = std::make_shared<FinCat>();
  s.cat->name = name;
  std::vector<ObjId> new_obj(c.num_objects(), -1);
  for (ObjId o = 0; o < c.num_objects(); ++o)
    if (keep[o]) {
      new_obj[o] = s.cat->add_object(c.objects[o]);
      s.obj_of.push_back(o);
    }
  std::vector<MorId> new_mor(c.num_morphisms(), kNoMor);
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (keep[c.dom(m)] && keep[c.cod(m)]) {
      new_mor[m] = s.cat->add_morphism(c.mors[m].name, new_obj[c.dom(m)], new_obj[c.cod(m)]);
      s.mor_of.push_back(m);
    }
  for (ObjId o = 0; o < s.cat->num_objects(); ++o)
    s.cat->set_identity(o, new_mor[c.id(s.obj_of[o])]);
  for (size_t f = 0; f < s.mor_of.size(); ++f)
    for (size_t g = 0; g < s.mor_of.size(); ++g) {
      if (c.dom(s.mor_of[g]) != c.cod(s.mor_of[f])) continue;
      s.cat->set_compose(static_cast<MorId>(g), static_cast<MorId>(f),
                         new_mor[c.compose(s.mor_of[g], s.mor_of[f])]);
    }
  s.cat->finalize();
  s.incl.src = s.cat.get();
  s.incl.tgt = &c;
  s.incl.name = "incl";
  s.incl.obj_map = s.obj_of;
  s.incl.mor_map = s.mor_of;
  return s;
}

std::optional<Functor> find_category_iso(const FinCat& a, const FinCat& b, const Caps& caps) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms())
    return std::nullopt;
  CatIsoSearch search{a, b, caps, std::vector<ObjId>(a.num_objects(), -1),
                      std::vector<char>(b.num_objects(), 0)};
  Functor f;
  f.src = &a;
  f.tgt = &b;
  f.name = "iso";
  if (search.obj_backtrack(0, f)) return f;
  return std::nullopt;
}

}  // namespace tpn
