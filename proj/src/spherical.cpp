#include "affhecke/spherical.hpp"

#include <algorithm>
#include <mutex>
#include <cassert>
#include <functional>

namespace aff {

AffinePerm min_rep(const AffinePerm& w) {
  return factor_left_coset(w).first;
}

AffinePerm max_of_min(const AffinePerm& m) {
  AffinePerm w0 = identity(m.n);
  std::reverse(w0.window.begin(), w0.window.end());
  return mul(m, w0);
}

void SphericalModule::add(Vec& a, const AffinePerm& m, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = a.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

SphericalModule::Vec SphericalModule::scale(const Vec& v, const Laurent& c) {
  Vec r;
  if (c.is_zero()) return r;
  for (const auto& [m, p] : v) r.emplace(m, p * c);
  return r;
}

SphericalModule::Vec SphericalModule::sub(Vec a, const Vec& b) {
  for (const auto& [m, p] : b) add(a, m, -p);
  return a;
}

bool SphericalModule::equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [m, p] : a) {
    auto it = b.find(m);
    if (it == b.end() || it->second != p) return false;
  }
  return true;
}

SphericalModule::SType SphericalModule::stype(const AffinePerm& m,
                                              int i) const {
  if (is_left_descent(m, i)) return SType::descent;
  AffinePerm sm = left_mul_s(i, m);
  return is_min_left_coset(sm) ? SType::ascent : SType::fixed;
}

uint32_t SphericalModule::graph_descents(const AffinePerm& m) const {
  uint32_t mask = 0;
  for (int i = 0; i < n_; ++i)
    if (stype(m, i) != SType::ascent) mask |= 1u << i;
  return mask;
}

SphericalModule::Vec SphericalModule::act_Ts(const Vec& v, int i,
                                             bool inverse) const {
  Vec r;
  Laurent quad = Laurent::u(1) - Laurent::u(-1);
  for (const auto& [m, c] : v) {
    switch (stype(m, i)) {
      case SType::ascent:
        add(r, left_mul_s(i, m), c);
        if (inverse) add(r, m, -(c * quad));
        break;
      case SType::descent:
        add(r, left_mul_s(i, m), c);
        if (!inverse) add(r, m, c * quad);
        break;
      case SType::fixed:
        add(r, m, c * (inverse ? Laurent::u(-1) : Laurent::u(1)));
        break;
    }
  }
  return r;
}

SphericalModule::Vec SphericalModule::act_Tpi(const Vec& v,
                                              long long k) const {
  Vec r;
  for (const auto& [m, c] : v) add(r, left_mul_pi(m, k), c);
  return r;
}

SphericalModule::Vec SphericalModule::act_cprime_s(const Vec& v,
                                                   int i) const {
  Vec r = act_Ts(v, i);
  for (const auto& [m, c] : v) add(r, m, c * Laurent::u(-1));
  return r;
}

SphericalModule::Vec SphericalModule::act_t_word(const Vec& v,
                                                 const AffinePerm& x) const {
  GroupWord gw = group_word(x);
  Vec acc = act_Tpi(v, gw.pi_power);
  for (auto it = gw.gens.rbegin(); it != gw.gens.rend(); ++it)
    acc = act_Ts(acc, *it);
  return acc;
}

SphericalModule::Vec SphericalModule::act_bernstein(
    const Vec& v, std::vector<long long> lambda) const {
  long long k = 0;
  for (int i = 0; i + 1 < n_; ++i) k = std::max(k, lambda[i + 1] - lambda[i]);
  std::vector<long long> nu(n_), mu(n_);
  for (int i = 0; i < n_; ++i) {
    nu[i] = k * (n_ - 1 - i);
    mu[i] = lambda[i] + nu[i];
  }
  // Y^lambda = T_{y^mu} (T_{y^nu})^{-1}: apply inverse factor first
  AffinePerm ynu = translate(nu, identity(n_));
  GroupWord gw = group_word(ynu);
  // (T_{y^nu})^{-1} = T_{pi^{-d}} T_{i_l}^{-1} ... T_{i_1}^{-1}: rightmost
  // factor acts first
  Vec acc = v;
  for (int g : gw.gens) acc = act_Ts(acc, g, /*inverse=*/true);
  acc = act_Tpi(acc, -gw.pi_power);
  AffinePerm ymu = translate(mu, identity(n_));
  return act_t_word(acc, ymu);
}

SphericalModule::Vec SphericalModule::act_elementary(const Vec& v, int d,
                                                     int k) const {
  if (d == 0) return v;
  Vec r;
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d) {
      std::vector<long long> lam(n_, 0);
      for (int q : idx) lam[q] = 1;
      Vec t = act_bernstein(v, lam);
      for (const auto& [m, c] : t) add(r, m, c);
      return;
    }
    for (int q = start; q < k; ++q) {
      idx[pos] = q;
      rec(pos + 1, q + 1);
    }
  };
  rec(0, 0);
  return r;
}

SphericalModule::Vec SphericalModule::act_schur(const Vec& v,
                                                const Partition& lambda) const {
  Partition lc = conjugate(lambda);
  int m = lambda.empty() ? 0 : lambda[0];
  if (m == 0) return v;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  Vec total;
  do {
    int sign = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    bool zero = false;
    Vec prod = v;
    for (int i = 0; i < m && !zero; ++i) {
      int li = i < int(lc.size()) ? lc[i] : 0;
      int e = li - (i + 1) + (perm[i] + 1);
      if (e < 0 || e > n_) {
        zero = true;
        break;
      }
      if (e > 0) prod = act_elementary(prod, e, n_);
    }
    if (!zero) {
      for (const auto& [mm, c] : prod)
        add(total, mm, sign > 0 ? c : -c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

const SphericalModule::Vec& SphericalModule::canonical(const AffinePerm& m) {
  return canonical_inner(m, 0);
}

const SphericalModule::Vec& SphericalModule::canonical_inner(
    const AffinePerm& m, int depth) {
  {
    std::shared_lock lk(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  if (length(m) > budget_.max_length)
    throw BudgetExceeded("spherical canonical: length over budget");
  Vec result;
  if (length(m) == 0) {
    // m = pi^k: N = U_m
    result.emplace(m, Laurent::one());
  } else {
    int s = -1;
    for (int i = 0; i < n_; ++i)
      if (is_left_descent(m, i)) {
        s = i;
        break;
      }
    assert(s >= 0);
    AffinePerm v = left_mul_s(s, m);
    assert(is_min_left_coset(v));
    Vec nv = canonical_inner(v, depth + 1);
    Vec prod = act_cprime_s(nv, s);
    // subtract mu(z, v) N_z over z with s in the graph-descent set
    std::vector<std::pair<AffinePerm, Int>> corr;
    for (const auto& [z, pz] : nv) {
      if (z == v) continue;
      Int mu = pz.coeff(-1);
      if (mu == 0) continue;
      if (stype(z, s) == SType::ascent) continue;
      corr.emplace_back(z, mu);
    }
    for (auto& [z, muv] : corr) {
      Vec nz = canonical_inner(z, depth + 1);
      prod = sub(std::move(prod), scale(nz, Laurent::mono(0, muv)));
    }
    result = std::move(prod);
    // triangularity sanity
    assert(result.at(m).is_one());
  }
  {
    std::unique_lock lk(mutex_);
    if (cache_.size() >= budget_.max_elements)
      throw BudgetExceeded("spherical canonical: cache over budget");
    auto [it, fresh] = cache_.emplace(m, std::move(result));
    return it->second;
  }
}

Int SphericalModule::mu_min(const AffinePerm& mx, const AffinePerm& mw) {
  if (degree(mx) != degree(mw)) return Int(0);
  long long lx = length(mx), lw = length(mw);
  if (lx == lw) return Int(0);
  const AffinePerm& lo = lx < lw ? mx : mw;
  const AffinePerm& hi = lx < lw ? mw : mx;
  const Vec& n = canonical(hi);
  auto it = n.find(lo);
  if (it == n.end()) return Int(0);
  return it->second.coeff(-1);
}

Laurent SphericalModule::kl_min(const AffinePerm& mx, const AffinePerm& mw) {
  const Vec& n = canonical(mw);
  auto it = n.find(mx);
  return it == n.end() ? Laurent() : it->second;
}

std::vector<std::pair<AffinePerm, Laurent>> SphericalModule::to_canonical(
    Vec v) {
  std::vector<std::pair<AffinePerm, Laurent>> out;
  while (!v.empty()) {
    // take a term of maximal length (triangularity: N_m = U_m + lower)
    const AffinePerm* best = nullptr;
    long long best_len = -1;
    for (const auto& [m, c] : v) {
      long long l = length(m);
      if (l > best_len ||
          (l == best_len && (!best || best->window < m.window))) {
        best = &m;
        best_len = l;
      }
    }
    AffinePerm m = *best;
    Laurent c = v.at(m);
    out.emplace_back(m, c);
    v = sub(std::move(v), scale(canonical(m), c));
  }
  return out;
}

size_t SphericalModule::cache_size() const {
  std::shared_lock lk(mutex_);
  return cache_.size();
}

}  // namespace aff
