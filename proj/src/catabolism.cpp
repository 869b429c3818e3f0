#include "affhecke/catabolism.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "affhecke/sign_insertion.hpp"

namespace aff {

Tableau plactic(const Tableau& a, const Tableau& b, int n) {
  Word w = a.row_word();
  Word wb = b.row_word();
  w.insert(w.end(), wb.begin(), wb.end());
  return insert_word(w, InsertMode::row, Tie::right_bigger, n);
}

namespace {
bool contains_shape(const Partition& outer, const Partition& inner) {
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 0) continue;
    if (i >= outer.size() || outer[i] < inner[i]) return false;
  }
  return true;
}
}  // namespace

Tableau rcat(const Tableau& t, const Partition& r1) {
  if (!contains_shape(t.shape(), r1))
    throw std::invalid_argument("rcat: R1 not contained in sh(T)");
  Tableau rest = t.remove(r1);
  int rows = int(r1.size());
  Tableau north = rest.slice_north(rows).shifted_entries(t.n());
  Tableau south = rest.slice_south(rows);
  return plactic(north, south, t.n());
}

Tableau ccat(const Tableau& t, const Partition& c1) {
  if (!contains_shape(t.shape(), c1))
    throw std::invalid_argument("ccat: C1 not contained in sh(T)");
  Tableau rest = t.remove(c1);
  int cols = c1.empty() ? 0 : c1[0];
  Tableau east = rest.slice_east(cols);
  Tableau west = rest.slice_west(cols).shifted_entries(-t.n());
  return plactic(east, west, t.n());
}

bool is_row_catabolizable(const Tableau& t, const Tableau& q,
                          const Composition& eta) {
  if (eta.empty()) return t.empty();
  Partition lam = q.shape();
  int e1 = eta[0];
  if (e1 > int(lam.size())) return false;
  Partition r1(lam.begin(), lam.begin() + e1);
  if (!contains_shape(t.shape(), r1)) return false;
  if (t.restrict(r1) != q.restrict(r1)) return false;
  Composition rest(eta.begin() + 1, eta.end());
  return is_row_catabolizable(rcat(t, r1), q.slice_south(e1), rest);
}

bool is_col_catabolizable(const Tableau& t, const Tableau& q,
                          const Composition& eta) {
  if (eta.empty()) return t.empty();
  Partition lamc = conjugate(q.shape());
  int e1 = eta[0];
  if (e1 > int(lamc.size())) return false;
  Partition c1 = conjugate(Partition(lamc.begin(), lamc.begin() + e1));
  if (!contains_shape(t.shape(), c1)) return false;
  if (t.restrict(c1) != q.restrict(c1)) return false;
  Composition rest(eta.begin() + 1, eta.end());
  return is_col_catabolizable(ccat(t, c1), q.slice_east(e1), rest);
}

Partition ctype(const Tableau& t_in) {
  Tableau t = t_in;
  if (t.is_standard()) t = embed_standard(t.size(), t);
  int n = t.size();
  Tableau row = garnir(n, {n});
  std::vector<Partition> hits;
  for (const auto& lam : partitions_of(n))
    if (is_col_catabolizable(t, row, lam)) hits.push_back(lam);
  if (hits.empty()) throw std::logic_error("ctype: no catabolizability type");
  Partition best = hits[0];
  for (const auto& lam : hits)
    if (dominates(lam, best)) best = lam;
  for (const auto& lam : hits)
    if (!dominates(best, lam))
      throw std::logic_error("ctype: dominance-maximal type not unique");
  return best;
}

std::vector<std::pair<int, int>> tanisaki_pairs(int n,
                                                const Partition& lambda) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k) {
    long long cap = 0;
    for (int part : lambda) cap += std::max(0, part - (n - k));
    for (int d = 1; d <= k; ++d)
      if (d > k - cap) out.emplace_back(d, k);
  }
  return out;
}

std::vector<Tableau> coinvariant_labels(int n) {
  std::vector<Tableau> out;
  for (const Tableau& t : all_syt(n)) out.push_back(embed_standard(n, t));
  return out;
}

Tableau dual_garnir(int n, const Partition& lambda) {
  std::optional<Tableau> best;
  for (const Tableau& t : coinvariant_labels(n)) {
    if (t.shape() != lambda) continue;
    if (!best || t.deg() > best->deg()) best = t;
  }
  if (!best) throw std::invalid_argument("dual_garnir: no such shape");
  // uniqueness of the top-degree occurrence
  int count = 0;
  for (const Tableau& t : coinvariant_labels(n))
    if (t.shape() == lambda && t.deg() == best->deg()) ++count;
  if (count != 1)
    throw std::logic_error("dual_garnir: top degree occurrence not unique");
  // closed-form candidate must agree
  Tableau cand = dual_tableau(garnir(n, conjugate(lambda)));
  if (cand != *best)
    throw std::logic_error("dual_garnir: closed form mismatch");
  return *best;
}

CCPoset gp_ccp(int n, const Partition& lambda) {
  Tableau row = garnir(n, {n});
  std::vector<Tableau> verts;
  for (const Tableau& t : coinvariant_labels(n))
    if (is_col_catabolizable(t, row, lambda)) verts.push_back(t);
  return build_ccp(verts, CCClass::at);
}

CCPoset dgp_ccp(int n, const Partition& lambda) {
  Tableau g1 = garnir(n, Partition(n, 1));
  Partition lc = conjugate(lambda);
  std::vector<Tableau> verts;
  for (const Tableau& t : coinvariant_labels(n))
    if (is_row_catabolizable(t, g1, lc)) verts.push_back(t);
  return build_ccp(verts, CCClass::at);
}

std::vector<Tableau> sw_set(const Tableau& anchor, const Composition& eta,
                            bool row_mode, const std::vector<Tableau>& universe) {
  std::vector<Tableau> out;
  for (const Tableau& t : universe) {
    bool in = row_mode ? is_row_catabolizable(t, anchor, eta)
                       : is_col_catabolizable(t, anchor, eta);
    if (in) out.push_back(t);
  }
  return out;
}

CCPoset sw_ccp(const Tableau& anchor, const Composition& eta, bool row_mode,
               const std::vector<Tableau>& universe) {
  return build_ccp(sw_set(anchor, eta, row_mode, universe), CCClass::at);
}

CCPoset dgp_copy(const Tableau& u) {
  if (!is_stackable(u)) throw std::invalid_argument("dgp_copy: not stackable");
  int n = u.n();
  Tableau p = stack(u);
  Partition lc = conjugate(u.shape());
  std::vector<Tableau> universe = sgnpa_labels(p, u.deg());
  std::vector<Tableau> verts;
  for (const Tableau& t : universe)
    if (word_catabolizable(n, t.col_word(), lc)) verts.push_back(t);
  return build_ccp(verts, CCClass::at);
}

std::vector<Tableau> sgnrec(int n, const Partition& lambda) {
  CCPoset d = dgp_ccp(n, lambda);
  std::set<Tableau> qs;
  for (const AffinePerm& w : ccp_words(d.verts)) qs.insert(sign_insert(w).q);
  return std::vector<Tableau>(qs.begin(), qs.end());
}

std::optional<SkewLink> skew_link(const Partition& lambda,
                                  const Partition& mu) {
  if (weight(lambda) != weight(mu)) return {};
  int rows = int(lambda.size());
  Partition muc = conjugate(mu);
  if (lambda.empty()) return {};
  if (mu.empty()) return {};
  long long nu1 = long(mu[0]) - lambda[0];
  if (nu1 < 0) return {};
  std::vector<SkewLink> found;
  Partition nu(rows, 0);
  std::function<void(int)> rec = [&](int r) {  // choose nu[r], bottom-up
    if (r < 0) {
      if (nu[0] != nu1) return;
      // verify column counts
      Partition outer(rows);
      for (int i = 0; i < rows; ++i) outer[i] = nu[i] + lambda[i];
      if (!is_partition(outer)) return;
      Partition oc = conjugate(outer), nc = conjugate(nu);
      nc.resize(oc.size(), 0);
      Partition col(oc.size());
      for (size_t c = 0; c < oc.size(); ++c) col[c] = oc[c] - nc[c];
      Partition want = muc;
      want.resize(oc.size(), 0);
      if (Composition(col) != Composition(want)) return;
      SkewLink link;
      link.lambda = lambda;
      link.mu = mu;
      link.outer = outer;
      link.inner = strip_zeros(nu);
      found.push_back(link);
      return;
    }
    int lo = r == rows - 1 ? 0 : nu[r + 1];
    for (int v = lo; v <= nu1; ++v) {
      nu[r] = v;
      if (r + 1 < rows && v + lambda[r] < nu[r + 1] + lambda[r + 1]) continue;
      rec(r - 1);
    }
    nu[r] = 0;
  };
  rec(rows - 1);
  if (found.empty()) return {};
  if (found.size() > 1)
    throw std::logic_error("skew_link: linking shape not unique");
  return found[0];
}

std::vector<std::pair<int, int>> link_intervals(const SkewLink& link) {
  Partition muc = conjugate(link.mu);
  int rows = int(link.lambda.size());
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= rows; ++r) {
    int c = r <= int(link.inner.size()) ? link.inner[r - 1] : 0;
    if (c != 0) {
      int b = c + 1 <= int(muc.size()) ? muc[c] : 0;
      int d = muc[c - 1];
      out.emplace_back(b, d);
    } else {
      out.emplace_back(rows + 1 - r, rows + 1 - r);
    }
  }
  return out;
}

SkewLink theta_k(const Partition& lambda, int k) {
  for (int part : lambda)
    if (part > k) throw std::invalid_argument("theta_k: not k-bounded");
  int rows = int(lambda.size());
  Partition outer(rows, 0), inner(rows, 0);
  for (int r = rows - 1; r >= 0; --r) {
    if (r == rows - 1) {
      outer[r] = lambda[r];
      inner[r] = 0;
      continue;
    }
    // smallest nu_r >= nu_{r+1} keeping all hook lengths of rows r.. <= k
    for (int v = inner[r + 1];; ++v) {
      inner[r] = v;
      outer[r] = v + lambda[r];
      if (outer[r] < outer[r + 1]) continue;
      // hook lengths within the skew shape rows r..rows-1
      bool ok = true;
      for (int c = inner[r] + 1; c <= outer[r] && ok; ++c) {
        int arm = outer[r] - c;
        int leg = 0;
        for (int rr = r + 1; rr < rows; ++rr) {
          if (c > inner[rr] && c <= outer[rr])
            ++leg;
          else if (c <= inner[rr])
            continue;
          else
            break;
        }
        if (arm + leg + 1 > k) ok = false;
      }
      if (ok) break;
    }
  }
  SkewLink link;
  link.lambda = lambda;
  link.outer = outer;
  link.inner = strip_zeros(inner);
  // mu from the column counts
  Partition oc = conjugate(outer), nc = conjugate(link.inner);
  nc.resize(oc.size(), 0);
  Partition col(oc.size());
  for (size_t c = 0; c < oc.size(); ++c) col[c] = oc[c] - nc[c];
  link.mu = conjugate(col);
  return link;
}

CCPoset chen_ccp(int n, const SkewLink& link) {
  const Partition& lambda = link.lambda;
  int l = int(lambda.size());
  auto intervals = link_intervals(link);
  Tableau g = garnir(n, lambda);
  std::vector<Tableau> universe = coinvariant_labels(n);
  std::set<Tableau> inter;
  bool first = true;
  for (const Composition& eta : compositions_of(l)) {
    std::vector<int> lsum = partial_sums(eta);
    bool admissible = true;
    for (size_t i = 0; i < eta.size() && admissible; ++i) {
      int d = intervals[lsum[i]].second;  // d_{l_i + 1}, 1-based row index
      if (eta[i] > d) admissible = false;
    }
    if (!admissible) continue;
    std::vector<Tableau> members = sw_set(g, eta, true, universe);
    std::set<Tableau> mem(members.begin(), members.end());
    if (first) {
      inter = std::move(mem);
      first = false;
    } else {
      std::set<Tableau> keep;
      for (const Tableau& t : inter)
        if (mem.count(t)) keep.insert(t);
      inter = std::move(keep);
    }
  }
  std::vector<Tableau> verts(inter.begin(), inter.end());
  return build_ccp(verts, CCClass::at);
}

CCPoset llm_ccp(int n, const Partition& lambda, int k) {
  return chen_ccp(n, theta_k(lambda, k));
}

}  // namespace aff
