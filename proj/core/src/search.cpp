#include <algorithm>
#include <deque>
#include <functional>

#include "tpn/presheaf.hpp"
#include "tpn/prng.hpp"

namespace tpn {

namespace {

struct NatSearch {
  const Presheaf& a;
  const Presheaf& b;
  const FinCat& cat;
  const Caps& caps;
  bool bijective;  // iso mode

  std::vector<int> offset;                 // per object
  std::vector<std::pair<ObjId, int>> var;  // flattened (object, cell)
  std::vector<int> order;                  // variable visit order
  std::vector<int> assign;
  std::vector<std::vector<int>> used;      // iso mode: per object, usage count of b-cells
  std::vector<int> color_a, color_b;       // fingerprint colors (iso mode)
  std::int64_t nodes = 0;
  std::int64_t limit = -1;
  std::vector<PshMorData> results;
  bool stop_after_first = false;
  bool found_any = false;

  explicit NatSearch(const Presheaf& a_, const Presheaf& b_, const Caps& caps_, bool bij)
      : a(a_), b(b_), cat(*a_.base), caps(caps_), bijective(bij) {
    offset.assign(cat.num_objects() + 1, 0);
    for (ObjId o = 0; o < cat.num_objects(); ++o) {
      offset[o + 1] = offset[o] + a.cells(o);
      for (int i = 0; i < a.cells(o); ++i) var.push_back({o, i});
    }
    assign.assign(var.size(), -1);
    if (bijective) used.resize(cat.num_objects());
    // visit objects by ascending cell count so that propagation prunes early
    std::vector<ObjId> objs(cat.num_objects());
    for (ObjId o = 0; o < cat.num_objects(); ++o) objs[o] = o;
    std::stable_sort(objs.begin(), objs.end(),
                     [&](ObjId x, ObjId y) { return a.cells(x) < a.cells(y); });
    for (ObjId o : objs)
      for (int i = 0; i < a.cells(o); ++i) order.push_back(offset[o] + i);
  }

  void compute_colors() {
    // Weisfeiler-style refinement of the restriction fingerprint; colors are
    // computed identically on both sides so only like-colored cells match.
    color_a.assign(offset.back(), 0);
    std::vector<int> offb(cat.num_objects() + 1, 0);
    for (ObjId o = 0; o < cat.num_objects(); ++o) offb[o + 1] = offb[o] + b.cells(o);
    color_b.assign(offb.back(), 0);
    auto init = [&](const Presheaf& p, std::vector<int>& col, const std::vector<int>& off) {
      for (ObjId o = 0; o < cat.num_objects(); ++o)
        for (int i = 0; i < p.cells(o); ++i) col[off[o] + i] = o;
    };
    init(a, color_a, offset);
    init(b, color_b, offb);
    for (int round = 0; round < 4; ++round) {
      std::map<std::vector<long long>, int> codes;
      auto refine = [&](const Presheaf& p, std::vector<int>& col, const std::vector<int>& off) {
        std::vector<std::vector<long long>> sig(off.back());
        for (ObjId o = 0; o < cat.num_objects(); ++o)
          for (int i = 0; i < p.cells(o); ++i) {
            auto& s = sig[off[o] + i];
            s.push_back(col[off[o] + i]);
            for (MorId f = 0; f < cat.num_morphisms(); ++f) {
              if (cat.cod(f) != o) continue;
              s.push_back((static_cast<long long>(f) << 24) ^
                          col[off[cat.dom(f)] + p.act(f, i)]);
            }
          }
        std::vector<int> next(off.back());
        for (int v = 0; v < off.back(); ++v) {
          auto [it, inserted] = codes.try_emplace(sig[v], static_cast<int>(codes.size()));
          next[v] = it->second;
        }
        col = next;
      };
      // shared code table so colors are comparable across the two presheaves
      refine(a, color_a, offset);
      refine(b, color_b, offb);
    }
    color_b_off_ = offb;
  }

  std::vector<int> color_b_off_;

  // assign var := value and propagate forced values; records undo trail
  bool propagate(int v0, int val0, std::vector<int>& trail) {
    std::deque<std::pair<int, int>> queue{{v0, val0}};
    while (!queue.empty()) {
      auto [v, val] = queue.front();
      queue.pop_front();
      if (assign[v] != -1) {
        if (assign[v] != val) return false;
        continue;
      }
      auto [o, cell] = var[v];
      if (bijective) {
        if (used[o][val]) return false;
        used[o][val] = 1;
      }
      assign[v] = val;
      trail.push_back(v);
      for (MorId f = 0; f < cat.num_morphisms(); ++f) {
        if (cat.cod(f) != o) continue;
        int v2 = offset[cat.dom(f)] + a.act(f, cell);
        int val2 = b.act(f, val);
        if (assign[v2] == -1)
          queue.push_back({v2, val2});
        else if (assign[v2] != val2)
          return false;
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) {
      if (bijective) used[var[v].first][assign[v]] = 0;
      assign[v] = -1;
    }
  }

  bool precheck() {
    if (b.base != a.base) return false;
    if (bijective) {
      for (ObjId o = 0; o < cat.num_objects(); ++o) {
        if (a.cells(o) != b.cells(o)) return false;
        used[o].assign(b.cells(o), 0);
      }
      compute_colors();
      // color multiset must agree per object
      for (ObjId o = 0; o < cat.num_objects(); ++o) {
        std::vector<int> ca, cb;
        for (int i = 0; i < a.cells(o); ++i) ca.push_back(color_a[offset[o] + i]);
        for (int i = 0; i < b.cells(o); ++i) cb.push_back(color_b[color_b_off_[o] + i]);
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
      }
    }
    return true;
  }

  void run(int pos) {
    if (++nodes > caps.max_search_nodes)
      throw LimitExceeded("natural transformation search budget exceeded");
    while (pos < static_cast<int>(order.size()) && assign[order[pos]] != -1) ++pos;
    if (pos == static_cast<int>(order.size())) {
      PshMorData m(cat.num_objects());
      for (ObjId o = 0; o < cat.num_objects(); ++o) {
        m[o].resize(a.cells(o));
        for (int i = 0; i < a.cells(o); ++i) m[o][i] = assign[offset[o] + i];
      }
      results.push_back(std::move(m));
      found_any = true;
      if (limit >= 0 && static_cast<std::int64_t>(results.size()) > limit)
        throw LimitExceeded("natural transformation result cap exceeded");
      return;
    }
    int v = order[pos];
    auto [o, cell] = var[v];
    for (int val = 0; val < b.cells(o); ++val) {
      if (bijective &&
          (used[o][val] || color_a[offset[o] + cell] != color_b[color_b_off_[o] + val]))
        continue;
      std::vector<int> trail;
      if (propagate(v, val, trail)) {
        run(pos + 1);
        if (stop_after_first && found_any) {
          undo(trail);
          return;
        }
      }
      undo(trail);
    }
  }
};

}  // namespace

std::vector<PshMorData> enumerate_psh_mors(const Presheaf& a, const Presheaf& b, const Caps& caps,
                                           std::int64_t limit) {
  NatSearch s(a, b, caps, false);
  s.limit = limit;
  if (!s.precheck()) return {};
  s.run(0);
  return std::move(s.results);
}

std::optional<PshMorData> iso_search(const Presheaf& a, const Presheaf& b, const Caps& caps) {
  NatSearch s(a, b, caps, true);
  s.stop_after_first = true;
  if (!s.precheck()) return std::nullopt;
  s.run(0);
  if (s.results.empty()) return std::nullopt;
  // bijective natural transformation; inverse is automatically natural
  return s.results.front();
}

Presheaf seeded_presheaf(const FinCat& c, Prng& rng, int max_cell, const std::string& label) {
  int die = rng.below(8);
  Presheaf g;
  if (die == 0) {
    g = terminal_presheaf(c);
  } else {
    int reps = 1 + rng.below(2);
    g = yoneda(c, rng.below(c.num_objects()));
    for (int i = 1; i < reps; ++i) g = coproduct(g, yoneda(c, rng.below(c.num_objects())));
    if (rng.below(2)) {
      // random spanned subpresheaf: keep each cell as a seed with probability 1/2
      std::vector<std::vector<char>> member(c.num_objects());
      for (ObjId o = 0; o < c.num_objects(); ++o) {
        member[o].assign(g.cells(o), 0);
        for (int i = 0; i < g.cells(o); ++i) member[o][i] = rng.below(2) ? 1 : 0;
      }
      g = span_subpresheaf(g, std::move(member)).psh;
    }
    // collapse until cell sizes fit, plus a few extra random identifications
    int extra = rng.below(3);
    for (int guard = 0; guard < 64; ++guard) {
      ObjId big = -1;
      for (ObjId o = 0; o < c.num_objects(); ++o)
        if (g.cells(o) > max_cell) big = o;
      if (big < 0 && extra == 0) break;
      ObjId at = big;
      if (at < 0) {
        --extra;
        std::vector<ObjId> candidates;
        for (ObjId o = 0; o < c.num_objects(); ++o)
          if (g.cells(o) >= 2) candidates.push_back(o);
        if (candidates.empty()) break;
        at = candidates[rng.below(static_cast<int>(candidates.size()))];
      }
      int i = rng.below(g.cells(at));
      int j = rng.below(g.cells(at));
      if (i == j) j = (j + 1) % g.cells(at);
      g = quotient_presheaf(g, {{{at, i}, {at, j}}}).psh;
    }
  }
  g.name = label.empty() ? "sample" : label;
  return g;
}

std::vector<Presheaf> seeded_presheaves(const FinCat& c, std::uint64_t seed, int count,
                                        int max_cell) {
  Prng rng(seed);
  std::vector<Presheaf> out;
  for (int i = 0; i < count; ++i)
    out.push_back(seeded_presheaf(c, rng, max_cell, "sample" + std::to_string(i)));
  return out;
}

SeededMor seeded_psh_mor(const FinCat& c, std::uint64_t seed, int max_cell) {
  Prng rng(seed);
  SeededMor out;
  out.src = seeded_presheaf(c, rng, max_cell, "σ-dom");
  // target: a quotient of the source, so the quotient map is the sample morphism
  std::vector<std::pair<std::pair<ObjId, int>, std::pair<ObjId, int>>> rel;
  int unions = 1 + rng.below(2);
  for (int k = 0; k < unions; ++k) {
    std::vector<ObjId> candidates;
    for (ObjId o = 0; o < c.num_objects(); ++o)
      if (out.src.cells(o) >= 2) candidates.push_back(o);
    if (candidates.empty()) break;
    ObjId at = candidates[rng.below(static_cast<int>(candidates.size()))];
    int i = rng.below(out.src.cells(at));
    int j = rng.below(out.src.cells(at));
    if (i == j) j = (j + 1) % out.src.cells(at);
    rel.push_back({{at, i}, {at, j}});
  }
  Quotient q = quotient_presheaf(out.src, rel);
  out.tgt = q.psh;
  out.tgt.name = "σ-cod";
  out.mor = q.cls;
  return out;
}

}  // namespace tpn
