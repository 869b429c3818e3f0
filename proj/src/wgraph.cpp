#include "affhecke/wgraph.hpp"

#include <algorithm>
#include <set>
#include <cassert>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace aff {

WGraphData wgraph_exact_spherical(const std::vector<AffinePerm>& verts,
                                  SphericalModule& sph) {
  WGraphData g;
  if (verts.empty()) return g;
  g.n = verts[0].n;
  g.verts = verts;
  std::vector<AffinePerm> mins;
  for (const auto& w : verts) {
    g.descents.push_back(left_descents(w));
    mins.push_back(min_rep(w));
  }
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Int m = sph.mu_min(mins[i], mins[j]);
      if (m != 0) g.mu[{int(i), int(j)}] = m;
    }
  return g;
}

WGraphData wgraph_exact_full(const std::vector<AffinePerm>& verts,
                             KLContext& kl) {
  WGraphData g;
  if (verts.empty()) return g;
  g.n = verts[0].n;
  g.verts = verts;
  for (const auto& w : verts) g.descents.push_back(left_descents(w));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Int m = kl.mu(verts[i], verts[j]);
      if (m != 0) g.mu[{int(i), int(j)}] = m;
    }
  return g;
}

std::vector<std::pair<int, int>> preorder_arcs(const WGraphData& g,
                                               CellMode mode) {
  std::vector<std::pair<int, int>> arcs;
  uint32_t smask = mode == CellMode::positive_affine
                       ? (uint32_t(1) << g.n) - 2  // S only
                       : (uint32_t(1) << g.n) - 1;
  auto add_mu_arcs = [&](int a, int b) {
    uint32_t la = g.descents[a] & smask, lb = g.descents[b] & smask;
    // arc gamma -> delta when L(delta) not contained in L(gamma)
    if (lb & ~la) arcs.emplace_back(a, b);
    if (la & ~lb) arcs.emplace_back(b, a);
  };
  for (const auto& [key, m] : g.mu) add_mu_arcs(key.first, key.second);
  if (mode == CellMode::positive_affine) {
    std::unordered_map<AffinePerm, int, APHash> index;
    for (size_t i = 0; i < g.verts.size(); ++i) index[g.verts[i]] = int(i);
    long long max_deg = 0, min_deg = 0;
    for (const auto& w : g.verts) {
      max_deg = std::max(max_deg, degree(w));
      min_deg = std::min(min_deg, degree(w));
    }
    for (size_t i = 0; i < g.verts.size(); ++i) {
      for (long long k = 1; degree(g.verts[i]) + k <= max_deg; ++k) {
        auto it = index.find(left_mul_pi(g.verts[i], k));
        if (it != index.end()) arcs.emplace_back(int(i), it->second);
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

namespace {
// strongly connected components (iterative Tarjan), component ids in
// reverse topological order of the condensation
std::pair<std::vector<int>, int> scc(int nv,
                                     const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(nv);
  for (auto& [a, b] : arcs) adj[a].push_back(b);
  std::vector<int> idx(nv, -1), low(nv, 0), comp(nv, -1), stk;
  std::vector<bool> on(nv, false);
  int counter = 0, ncomp = 0;
  struct Frame {
    int v;
    size_t ei;
  };
  for (int s = 0; s < nv; ++s) {
    if (idx[s] >= 0) continue;
    std::vector<Frame> st{{s, 0}};
    idx[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = true;
    while (!st.empty()) {
      auto& [v, ei] = st.back();
      if (ei < adj[v].size()) {
        int to = adj[v][ei++];
        if (idx[to] < 0) {
          idx[to] = low[to] = counter++;
          stk.push_back(to);
          on[to] = true;
          st.push_back({to, 0});
        } else if (on[to]) {
          low[v] = std::min(low[v], idx[to]);
        }
      } else {
        if (low[v] == idx[v]) {
          while (true) {
            int u = stk.back();
            stk.pop_back();
            on[u] = false;
            comp[u] = ncomp;
            if (u == v) break;
          }
          ++ncomp;
        }
        int vv = v;
        st.pop_back();
        if (!st.empty()) low[st.back().v] = std::min(low[st.back().v], low[vv]);
      }
    }
  }
  return {comp, ncomp};
}
}  // namespace

static CellDecomposition finish_cells(int n, std::vector<AffinePerm> verts,
                                      std::vector<std::pair<int, int>> arcs,
                                      const std::string& backend) {
  CellDecomposition cd;
  cd.n = n;
  cd.backend = backend;
  cd.verts = std::move(verts);
  cd.arcs = std::move(arcs);
  auto [comp, ncomp] = scc(int(cd.verts.size()), cd.arcs);
  cd.cell_of = comp;
  cd.cells.assign(ncomp, {});
  for (size_t v = 0; v < cd.verts.size(); ++v) cd.cells[comp[v]].push_back(int(v));
  for (auto& c : cd.cells) std::sort(c.begin(), c.end());
  // labels and degrees; assert P(w) constant on cells
  cd.labels.resize(ncomp);
  cd.degrees.resize(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    cd.labels[c] = ptab(cd.verts[cd.cells[c][0]]);
    cd.degrees[c] = degree(cd.verts[cd.cells[c][0]]);
    for (int v : cd.cells[c]) {
      assert(ptab(cd.verts[v]) == cd.labels[c]);
      (void)v;
    }
  }
  // condensation reachability
  cd.reach.assign(ncomp, std::vector<bool>(ncomp, false));
  std::vector<std::vector<int>> cadj(ncomp);
  for (auto& [a, b] : cd.arcs) {
    if (comp[a] != comp[b]) cadj[comp[a]].push_back(comp[b]);
  }
  for (int c = 0; c < ncomp; ++c) {
    // BFS
    std::vector<int> queue{c};
    cd.reach[c][c] = true;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y : cadj[x])
        if (!cd.reach[c][y]) {
          cd.reach[c][y] = true;
          queue.push_back(y);
        }
    }
  }
  // covers: arcs of the condensation minus transitive ones
  std::set<std::pair<int, int>> raw;
  for (auto& [a, b] : cd.arcs)
    if (comp[a] != comp[b]) raw.insert({comp[a], comp[b]});
  for (auto& [a, b] : raw) {
    bool indirect = false;
    for (int c = 0; c < ncomp && !indirect; ++c) {
      if (c == a || c == b) continue;
      if (cd.reach[a][c] && cd.reach[c][b]) indirect = true;
    }
    if (!indirect) cd.covers.emplace_back(a, b);
  }
  std::sort(cd.covers.begin(), cd.covers.end());
  return cd;
}

CellDecomposition cells_from_wgraph(const WGraphData& g, CellMode mode,
                                    const std::string& backend_tag) {
  return finish_cells(g.n, g.verts, preorder_arcs(g, mode), backend_tag);
}

CellDecomposition cells_combinatorial(int n,
                                      const std::vector<AffinePerm>& verts) {
  // Knuth classes are the cells; arcs are corotation edges (plus Knuth
  // moves to glue each class into one component)
  std::unordered_map<AffinePerm, int, APHash> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
  std::vector<std::pair<int, int>> arcs;
  long long max_deg = 0;
  for (const auto& w : verts) max_deg = std::max(max_deg, degree(w));
  for (size_t i = 0; i < verts.size(); ++i) {
    for (auto& [si, img] : knuth_moves(verts[i])) {
      auto it = index.find(img);
      if (it != index.end()) {
        arcs.emplace_back(int(i), it->second);
        arcs.emplace_back(it->second, int(i));
      }
    }
    for (long long k = 1; degree(verts[i]) + k <= max_deg; ++k) {
      auto it = index.find(left_mul_pi(verts[i], k));
      if (it != index.end()) arcs.emplace_back(int(i), it->second);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return finish_cells(n, verts, std::move(arcs), "combinatorial");
}

int CellDecomposition::find_label(const Tableau& t) const {
  for (int c = 0; c < cell_count(); ++c)
    if (labels[c] == t) return c;
  return -1;
}

std::vector<int> csq_interval(const CellDecomposition& cd, const Tableau& q,
                              const Tableau& p) {
  int cq = cd.find_label(q), cp = cd.find_label(p);
  if (cq < 0 || cp < 0) throw std::invalid_argument("csq: label not found");
  std::vector<int> out;
  for (int c = 0; c < cd.cell_count(); ++c)
    if (cd.reach[cq][c] && cd.reach[c][cp]) out.push_back(c);
  return out;
}

std::string FrobeniusSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, mult] : terms) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    if (key.first != 0) {
      os << "t";
      if (key.first != 1) os << "^" << key.first;
      os << "*";
    }
    os << "s" << part_str(key.second);
  }
  if (first) os << "0";
  return os.str();
}

FrobeniusSeries frobenius(const CellDecomposition& cd,
                          const std::vector<int>& cell_ids) {
  FrobeniusSeries f;
  for (int c : cell_ids)
    ++f.terms[{cd.degrees[c], cd.labels[c].shape()}];
  return f;
}

FrobeniusSeries frobenius_of(const std::vector<Tableau>& labels) {
  FrobeniusSeries f;
  for (const auto& t : labels) ++f.terms[{t.deg(), t.shape()}];
  return f;
}

std::vector<AffinePerm> star_transport_right(
    const std::vector<AffinePerm>& verts, int star_index) {
  std::vector<AffinePerm> out;
  out.reserve(verts.size());
  for (const auto& w : verts) {
    if (!in_DR(w, star_index))
      throw std::invalid_argument("star transport: vertex not in D_R");
    out.push_back(right_star(w, star_index));
  }
  return out;
}

std::vector<AffinePerm> star_transport_pi(const std::vector<AffinePerm>& verts,
                                          long long k) {
  std::vector<AffinePerm> out;
  out.reserve(verts.size());
  for (const auto& w : verts) out.push_back(right_mul_pi(w, k));
  return out;
}

}  // namespace aff
