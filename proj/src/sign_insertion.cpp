#include "affhecke/sign_insertion.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <unordered_set>

namespace aff {

SignState sign_start(int n, Word w) {
  SignState st;
  st.n = n;
  st.c = 0;
  st.x = std::move(w);
  return st;
}

bool sign_step(SignState& st) {
  assert(!st.x.empty());
  ++st.c;
  long long a = st.x.back();
  st.x.pop_back();
  // column-insert a into the sorted column p (entries distinct)
  auto it = std::upper_bound(st.p.begin(), st.p.end(), a);
  if (it == st.p.end()) {
    st.p.push_back(a);
    st.q.push_back(st.c);
    return true;
  }
  long long bumped = *it;
  *it = a;
  st.x.insert(st.x.begin(), bumped + st.n);
  return false;
}

static Tableau column_tab(int n, const std::vector<long long>& col) {
  std::vector<std::vector<long long>> rows;
  for (long long v : col) rows.push_back({v});
  return Tableau(n, std::move(rows));
}

SignPair sign_insert_word(int n, const Word& w) {
  SignState st = sign_start(n, w);
  while (!st.done()) sign_step(st);
  return {column_tab(n, st.p), column_tab(n, st.q)};
}

SignPair sign_insert(const AffinePerm& w) {
  return sign_insert_word(w.n, Word(w.window.begin(), w.window.end()));
}

std::optional<AffinePerm> sign_uninsert(const Tableau& p, const Tableau& q) {
  int n = p.n();
  if (p.size() != n || q.size() != n) return {};
  std::vector<long long> pc, qc;
  for (int r = 1; r <= n; ++r) {
    pc.push_back(p.at(r, 1));
    qc.push_back(q.at(r, 1));
  }
  for (int r = 1; r < n; ++r)
    if (qc[r] <= qc[r - 1]) return {};
  if (qc[0] < 1) return {};
  Word x;
  long long c = qc.back();
  while (c >= 1) {
    if (!qc.empty() && c == qc.back()) {
      // reverse insertion step: pop the bottom of p to the right of the word
      if (pc.empty()) return {};
      x.push_back(pc.back());
      pc.pop_back();
      qc.pop_back();
    } else {
      // reverse corotation: first number of the word came from a bump
      if (x.empty()) return {};
      long long ap = x.front();
      long long v = ap - n;
      // the forward step inserted the largest entry below v
      auto it = std::lower_bound(pc.begin(), pc.end(), v);
      if (it == pc.begin()) return {};  // inadmissible pair
      --it;
      long long a = *it;
      *it = v;
      if (!std::is_sorted(pc.begin(), pc.end())) return {};
      x.erase(x.begin());
      x.push_back(a);
    }
    --c;
  }
  if (!pc.empty() || int(x.size()) != n) return {};
  AffinePerm w;
  w.n = n;
  w.window.assign(x.begin(), x.end());
  if (!valid_window(w)) return {};
  return w;
}

Tableau sgnp_tableau(const Tableau& t) {
  return sign_insert_word(t.n(), t.row_word()).p;
}

CatTrace cat_insert(const AffinePerm& w) {
  SignPair target = sign_insert(w);
  std::vector<long long> tcol;
  for (int r = 1; r <= w.n; ++r) tcol.push_back(target.p.at(r, 1));
  CatTrace tr;
  SignState st = sign_start(w.n, Word(w.window.begin(), w.window.end()));
  std::vector<long long> catq;
  tr.q_after_step.push_back(catq);
  long long next_pass_end = (long long)st.x.size();
  while (!st.done()) {
    sign_step(st);
    // k = agreement length of the bottom of the target with current p
    size_t k = 0;
    while (k < st.p.size() && st.p[k] == tcol[k]) ++k;
    while (catq.size() < k) catq.push_back(st.c);
    assert(catq.size() >= tr.q_after_step.back().size());
    tr.q_after_step.push_back(catq);
    if (st.c == next_pass_end) {
      tr.pass_ends.push_back(st.c);
      tr.q_len_after_pass.push_back(catq.size());
      next_pass_end = st.c + (long long)st.x.size();
    }
  }
  if (tr.pass_ends.empty() || tr.pass_ends.back() != st.c) {
    tr.pass_ends.push_back(st.c);
    tr.q_len_after_pass.push_back(catq.size());
  }
  return tr;
}

bool word_catabolizable(const AffinePerm& w, const Composition& eta) {
  CatTrace tr = cat_insert(w);
  std::vector<int> l = partial_sums(eta);
  for (size_t j = 1; j < l.size(); ++j) {
    size_t got =
        j <= tr.q_len_after_pass.size() ? tr.q_len_after_pass[j - 1] : size_t(w.n);
    if (got < size_t(l[j])) return false;
  }
  return true;
}

bool word_catabolizable(int n, const Word& w, const Composition& eta) {
  AffinePerm p;
  p.n = n;
  p.window.assign(w.begin(), w.end());
  return word_catabolizable(p, eta);
}

std::vector<AffinePerm> ccp_words(const std::vector<Tableau>& labels) {
  std::vector<AffinePerm> out;
  std::unordered_set<AffinePerm, APHash> seen;
  for (const auto& t : labels) {
    AffinePerm rep;
    rep.n = t.n();
    Word rw = t.row_word();
    rep.window.assign(rw.begin(), rw.end());
    std::vector<AffinePerm> queue{rep};
    if (!seen.insert(rep).second) continue;
    while (!queue.empty()) {
      AffinePerm w = queue.back();
      queue.pop_back();
      out.push_back(w);
      for (auto& [i, img] : knuth_moves(w))
        if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return out;
}

CCPoset sgnpa(const Tableau& p, long long min_degree) {
  return build_ccp(sgnpa_labels(p, min_degree), CCClass::at);
}

std::vector<Tableau> sgnpa_labels(const Tableau& p, long long min_degree) {
  // reverse corotation search downward in degree from the column p
  std::set<Tableau> found{p};
  std::vector<Tableau> frontier{p};
  while (!frontier.empty()) {
    std::vector<Tableau> next;
    for (const Tableau& t : frontier) {
      if (t.deg() <= min_degree) continue;
      for (const AffinePerm& w : ccp_words({t})) {
        AffinePerm back = left_mul_pi(w, -1);
        Tableau cand = ptab(back);
        if (cand.deg() < min_degree) continue;
        if (found.count(cand)) continue;
        if (sign_insert(back).p != p) continue;
        found.insert(cand);
        next.push_back(cand);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Tableau>(found.begin(), found.end());
}

}  // namespace aff
