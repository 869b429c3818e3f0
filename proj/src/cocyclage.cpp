#include "affhecke/cocyclage.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <unordered_map>

namespace aff {

std::set<Cell> Cocyclage::colors() const {
  std::set<Cell> s;
  for (const auto& [c, p] : moves) s.insert(c);
  return s;
}

std::set<Cell> CCEdge::colors() const {
  std::set<Cell> s;
  for (const auto& [c, p] : moves) s.insert(c);
  return s;
}

std::vector<Cocyclage> cocyclages(const Tableau& t, CCClass cls) {
  Tie tie = cls == CCClass::ssyt_dual ? Tie::left_bigger : Tie::right_bigger;
  std::map<Tableau, std::map<Cell, BumpPaths>> grouped;
  for (auto [r, c] : t.outer_corners()) {
    std::vector<Cell> unins;
    auto [q, a] = uninsert(t, r, c, tie, &unins);
    if (cls != CCClass::at && a == 1) continue;  // may not corotate a 1
    long long ins_val = cls == CCClass::at ? a + t.n() : a;
    std::vector<Cell> ins;
    Tableau to = insert_into(q, ins_val, InsertMode::column, tie, &ins);
    if (cls == CCClass::at && to == t) continue;  // no self loops
    grouped[to][{r, c}] = {unins, ins};
  }
  std::vector<Cocyclage> out;
  for (auto& [to, moves] : grouped) {
    Cocyclage cc;
    cc.to = to;
    cc.moves = std::move(moves);
    out.push_back(std::move(cc));
  }
  return out;
}

int CCPoset::find(const Tableau& t) const {
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == t) return int(i);
  return -1;
}

std::vector<std::vector<int>> CCPoset::adj() const {
  std::vector<std::vector<int>> a(verts.size());
  for (const auto& e : edges) a[e.from].push_back(e.to);
  return a;
}

bool CCPoset::operator==(const CCPoset& o) const {
  if (verts.size() != o.verts.size() || edges.size() != o.edges.size())
    return false;
  std::vector<int> map_to(verts.size(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int j = o.find(verts[i]);
    if (j < 0) return false;
    map_to[i] = j;
  }
  std::set<std::tuple<int, int, std::set<Cell>>> ea, eb;
  for (const auto& e : edges)
    ea.insert({map_to[e.from], map_to[e.to], e.colors()});
  for (const auto& e : o.edges) eb.insert({e.from, e.to, e.colors()});
  return ea == eb;
}

CCPoset build_ccp(const std::vector<Tableau>& verts, CCClass cls) {
  CCPoset p;
  p.cls = cls;
  p.verts = verts;
  if (!verts.empty()) p.n = verts[0].n();
  std::map<Tableau, int> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
  for (size_t i = 0; i < verts.size(); ++i) {
    for (auto& cc : cocyclages(verts[i], cls)) {
      auto it = index.find(cc.to);
      if (it == index.end()) continue;
      CCEdge e;
      e.from = int(i);
      e.to = it->second;
      e.moves = std::move(cc.moves);
      p.edges.push_back(std::move(e));
    }
  }
  for (const auto& t : verts) {
    if (cls == CCClass::at)
      p.degrees.push_back(t.deg());
    else if (cls == CCClass::syt)
      p.degrees.push_back(cocharge(t));
    else
      p.degrees.push_back(0);
  }
  return p;
}

std::vector<Tableau> all_syt(int n) {
  std::vector<Tableau> out;
  Word v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::set<Tableau> seen;
  std::sort(v.begin(), v.end());
  do {
    Tableau t = insert_word(v);
    if (seen.insert(t).second) out.push_back(t);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Tableau> all_ssyt(const Composition& eta) {
  // all distinct insertion tableaux of arrangements of the content word
  Word v;
  for (size_t j = 0; j < eta.size(); ++j)
    for (int k = 0; k < eta[j]; ++k) v.push_back((long long)j + 1);
  std::sort(v.begin(), v.end());
  std::vector<Tableau> out;
  std::set<Tableau> seen;
  do {
    Tableau t = insert_word(v, InsertMode::row, Tie::right_bigger, 0);
    if (seen.insert(t).second) out.push_back(t);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Tableau> all_ssyt_dual(const Composition& eta) {
  Word v;
  for (size_t j = 0; j < eta.size(); ++j)
    for (int k = 0; k < eta[j]; ++k) v.push_back((long long)j + 1);
  std::sort(v.begin(), v.end());
  std::vector<Tableau> out;
  std::set<Tableau> seen;
  do {
    Tableau t = insert_word(v, InsertMode::row, Tie::left_bigger, 0);
    if (seen.insert(t).second) out.push_back(t);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

CCPoset ccp_syt(int n) { return build_ccp(all_syt(n), CCClass::syt); }

CCPoset ccp_ssyt(const Composition& eta) {
  return build_ccp(all_ssyt(eta), CCClass::ssyt);
}

CCPoset ccp_ssyt_dual(const Composition& eta) {
  return build_ccp(all_ssyt_dual(eta), CCClass::ssyt_dual);
}

Tableau embed_syt(int n, const Tableau& t) { return embed_standard(n, t); }

namespace {

// backtracking search for a color/shape-preserving bijection; if strong,
// bump paths must agree too
std::optional<std::vector<int>> iso_search(const CCPoset& a, const CCPoset& b,
                                           bool strong) {
  size_t nv = a.verts.size();
  if (nv != b.verts.size() || a.edges.size() != b.edges.size()) return {};
  // group edges by endpoints for fast lookup
  std::map<std::pair<int, int>, const CCEdge*> ea, eb;
  for (const auto& e : a.edges) ea[{e.from, e.to}] = &e;
  for (const auto& e : b.edges) eb[{e.from, e.to}] = &e;
  // candidate sets: equal shape, and in/out degree profile
  auto profile = [](const CCPoset& p, int v) {
    int in = 0, out = 0;
    for (const auto& e : p.edges) {
      if (e.from == v) ++out;
      if (e.to == v) ++in;
    }
    return std::make_pair(in, out);
  };
  std::vector<Partition> sa(nv), sb(nv);
  std::vector<std::pair<int, int>> pa(nv), pb(nv);
  for (size_t i = 0; i < nv; ++i) {
    sa[i] = a.verts[i].shape();
    sb[i] = b.verts[i].shape();
    pa[i] = profile(a, int(i));
    pb[i] = profile(b, int(i));
  }
  // order a-vertices by candidate count (most constrained first)
  std::vector<std::vector<int>> cands(nv);
  for (size_t i = 0; i < nv; ++i) {
    for (size_t j = 0; j < nv; ++j)
      if (sa[i] == sb[j] && pa[i] == pb[j]) cands[i].push_back(int(j));
    if (cands[i].empty()) return {};
  }
  std::vector<int> order(nv);
  for (size_t i = 0; i < nv; ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return cands[x].size() < cands[y].size(); });
  std::vector<int> map_a(nv, -1), used_b(nv, 0);
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == nv) return true;
    int v = order[pos];
    for (int w : cands[v]) {
      if (used_b[w]) continue;
      // consistency with already-assigned neighbours
      bool ok = true;
      for (size_t q = 0; q < pos && ok; ++q) {
        int v2 = order[q], w2 = map_a[v2];
        auto check_pair = [&](int x1, int x2, int y1, int y2) {
          auto ia = ea.find({x1, x2});
          auto ib = eb.find({y1, y2});
          if ((ia == ea.end()) != (ib == eb.end())) return false;
          if (ia == ea.end()) return true;
          if (ia->second->colors() != ib->second->colors()) return false;
          if (strong && ia->second->moves != ib->second->moves) return false;
          return true;
        };
        ok = check_pair(v, v2, w, w2) && check_pair(v2, v, w2, w);
      }
      if (!ok) continue;
      map_a[v] = w;
      used_b[w] = 1;
      if (rec(pos + 1)) return true;
      map_a[v] = -1;
      used_b[w] = 0;
    }
    return false;
  };
  if (!rec(0)) return {};
  return map_a;
}

}  // namespace

std::optional<std::vector<int>> ccp_isomorphism(const CCPoset& a,
                                                const CCPoset& b) {
  return iso_search(a, b, false);
}

std::optional<std::vector<int>> strong_isomorphism(const CCPoset& a,
                                                   const CCPoset& b) {
  return iso_search(a, b, true);
}

}  // namespace aff
