#include "affhecke/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <cassert>
#include <functional>
#include <sstream>

namespace aff {

Laurent HeckeElt::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElt::add_term(const AffinePerm& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  r += o;
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  r -= o;
  return r;
}

HeckeElt HeckeElt::operator*(const Laurent& c) const {
  HeckeElt r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, p] : terms_) r.terms_[w] = p * c;
  return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    auto it = o.terms_.find(w);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

HeckeElt HeckeElt::act_Ts(int i, bool inverse) const {
  // T_s T_w = T_{sw} if sw > w, else T_{sw} + (u - u^{-1}) T_w.
  // T_s^{-1} = T_s - (u - u^{-1}).
  HeckeElt r(n_);
  Laurent quad = Laurent::u(1) - Laurent::u(-1);
  for (const auto& [w, c] : terms_) {
    AffinePerm sw = left_mul_s(i, w);
    bool descent = is_left_descent(w, i);
    r.add_term(sw, c);
    if (!inverse) {
      if (descent) r.add_term(w, c * quad);
    } else {
      if (!descent) r.add_term(w, -(c * quad));
    }
  }
  return r;
}

HeckeElt HeckeElt::act_Tpi(long long k) const {
  HeckeElt r(n_);
  for (const auto& [w, c] : terms_) r.add_term(left_mul_pi(w, k), c);
  return r;
}

HeckeElt HeckeElt::ract_Ts(int i, bool inverse) const {
  HeckeElt r(n_);
  Laurent quad = Laurent::u(1) - Laurent::u(-1);
  for (const auto& [w, c] : terms_) {
    AffinePerm ws = right_mul_s(w, i);
    bool descent = is_right_descent(w, i);
    r.add_term(ws, c);
    if (!inverse) {
      if (descent) r.add_term(w, c * quad);
    } else {
      if (!descent) r.add_term(w, -(c * quad));
    }
  }
  return r;
}

HeckeElt HeckeElt::ract_Tpi(long long k) const {
  HeckeElt r(n_);
  for (const auto& [w, c] : terms_) r.add_term(right_mul_pi(w, k), c);
  return r;
}

std::string HeckeElt::str(bool plain) const {
  std::vector<const AffinePerm*> keys;
  for (const auto& [w, c] : terms_) keys.push_back(&w);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) {
    long long la = length(*a), lb = length(*b);
    if (la != lb) return la > lb;
    return a->window < b->window;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* w : keys) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(*w).str() << ")*T[" << window_str(*w, plain) << "]";
  }
  if (first) os << "0";
  return os.str();
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
  HeckeElt r(a.n());
  for (const auto& [x, cx] : a.terms()) {
    GroupWord gw = group_word(x);
    HeckeElt acc = b.act_Tpi(gw.pi_power);
    for (auto it = gw.gens.rbegin(); it != gw.gens.rend(); ++it)
      acc = acc.act_Ts(*it);
    r += acc * cx;
  }
  return r;
}

HeckeElt bar(const HeckeElt& h) {
  // ring automorphism with bar(T_s) = T_s^{-1}, bar(T_pi) = T_pi,
  // semilinear over bar on coefficients
  HeckeElt r(h.n());
  for (const auto& [w, c] : h.terms()) {
    GroupWord gw = group_word(w);
    HeckeElt acc = HeckeElt::unit(h.n()).act_Tpi(gw.pi_power);
    for (auto it = gw.gens.rbegin(); it != gw.gens.rend(); ++it)
      acc = acc.act_Ts(*it, /*inverse=*/true);
    r += acc * c.bar();
  }
  return r;
}

HeckeElt jinv(const HeckeElt& h) {
  HeckeElt r(h.n());
  for (const auto& [w, c] : h.terms()) r.add_term(w, c.jmap());
  return r;
}

HeckeElt t_inverse(const AffinePerm& w) {
  // w = s_{i_1} ... s_{i_l} pi^d, so T_w^{-1} = T_{pi^{-d}} T_{i_l}^{-1} ...
  GroupWord gw = group_word(w);
  HeckeElt acc = HeckeElt::unit(w.n);
  for (int g : gw.gens) acc = acc.act_Ts(g, /*inverse=*/true);
  return acc.act_Tpi(-gw.pi_power);
}

HeckeElt psi_map(const HeckeElt& h) {
  HeckeElt r(h.n());
  for (const auto& [w, c] : h.terms()) r.add_term(psi(w), c);
  return r;
}

HeckeElt bernstein_monomial(int n, std::vector<long long> lambda) {
  // lambda = mu - nu with mu, nu dominant; Y^lambda = T_{y^mu} (T_{y^nu})^{-1}
  long long k = 0;
  for (int i = 0; i + 1 < n; ++i) k = std::max(k, lambda[i + 1] - lambda[i]);
  std::vector<long long> nu(n), mu(n);
  for (int i = 0; i < n; ++i) {
    nu[i] = k * (n - 1 - i);
    mu[i] = lambda[i] + nu[i];
  }
  AffinePerm ymu = translate(mu, identity(n));
  AffinePerm ynu = translate(nu, identity(n));
  return mul(HeckeElt::t_basis(ymu), t_inverse(ynu));
}

HeckeElt bernstein_y(int n, int i) {
  std::vector<long long> lam(n, 0);
  lam[i - 1] = 1;
  return bernstein_monomial(n, lam);
}

HeckeElt elementary_sym_y(int n, int d, int k) {
  if (d < 0 || d > k || k > n) throw std::invalid_argument("e_d(Y_1..Y_k)");
  if (d == 0) return HeckeElt::unit(n);
  HeckeElt r(n);
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d) {
      std::vector<long long> lam(n, 0);
      for (int q : idx) lam[q] = 1;
      r += bernstein_monomial(n, lam);
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

HeckeElt schur_y(int n, const Partition& lambda) {
  // dual Jacobi-Trudi: s_lambda = det(e_{lambda'_i - i + j}), size lambda_1;
  // the full-alphabet e_d(Y_1..Y_n) commute pairwise
  Partition lc = conjugate(lambda);
  int m = lambda.empty() ? 0 : lambda[0];
  if (m == 0) return HeckeElt::unit(n);
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  HeckeElt total(n);
  do {
    int sign = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    HeckeElt prod = HeckeElt::unit(n);
    bool zero = false;
    for (int i = 0; i < m && !zero; ++i) {
      int li = i < int(lc.size()) ? lc[i] : 0;
      int e = li - (i + 1) + (perm[i] + 1);
      if (e < 0 || e > n) {
        zero = true;
        break;
      }
      if (e > 0) prod = mul(prod, elementary_sym_y(n, e, n));
    }
    if (!zero) {
      if (sign > 0)
        total += prod;
      else
        total -= prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

HeckeElt iota(const HeckeElt& h) {
  int n = h.n() + 1;
  HeckeElt r(n);
  for (const auto& [w, c] : h.terms()) {
    GroupWord gw = group_word(w);
    HeckeElt acc = HeckeElt::unit(n);
    long long d = gw.pi_power;
    // iota(T_pi) = T_pi T_{n-1}; build T_{pi}T_{n-1} ... acting on the right
    // by multiplying unit on the left repeatedly
    HeckeElt pifac = HeckeElt::unit(n).act_Ts(n - 1).act_Tpi(1);
    if (d >= 0) {
      for (long long t = 0; t < d; ++t) acc = mul(pifac, acc);
    } else {
      HeckeElt pifac_inv =
          HeckeElt::unit(n).act_Tpi(-1).act_Ts(n - 1, /*inverse=*/true);
      for (long long t = 0; t < -d; ++t) acc = mul(pifac_inv, acc);
    }
    for (auto it = gw.gens.rbegin(); it != gw.gens.rend(); ++it) {
      if (*it == 0) {
        // iota(T_0) = T_{n-1}^{-1} T_0 T_{n-1}
        acc = acc.act_Ts(n - 1).act_Ts(0).act_Ts(n - 1, /*inverse=*/true);
      } else {
        acc = acc.act_Ts(*it);
      }
    }
    r += acc * c;
  }
  return r;
}

std::vector<std::pair<BernsteinForm, Laurent>> bernstein_coords(
    const HeckeElt& h, int max_iter) {
  HeckeElt rem = h;
  std::vector<std::pair<BernsteinForm, Laurent>> out;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > max_iter)
      throw std::runtime_error("bernstein_coords: no convergence");
    const AffinePerm* best = nullptr;
    long long best_len = -1;
    for (const auto& [w, c] : rem.terms()) {
      long long l = length(w);
      if (l > best_len ||
          (l == best_len && (!best || best->window < w.window))) {
        best = &w;
        best_len = l;
      }
    }
    BernsteinForm bf = bernstein_form(*best);
    Laurent c = rem.coeff(*best);
    HeckeElt basis_elt = mul(bernstein_monomial(h.n(), bf.lambda),
                             HeckeElt::t_basis(bf.fin));
    rem -= basis_elt * c;
    out.emplace_back(bf, c);
  }
  return out;
}

HeckeElt KLContext::cprime(const AffinePerm& w) { return cprime_locked(w, 0); }

HeckeElt KLContext::cprime_locked(const AffinePerm& w, int depth) {
  {
    std::shared_lock lk(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  if (length(w) > budget_.max_length)
    throw BudgetExceeded("cprime: length over budget");
  HeckeElt result(n_);
  if (length(w) == 0) {
    result = HeckeElt::t_basis(w);
  } else {
    int s = -1;
    for (int i = 0; i < n_; ++i)
      if (is_left_descent(w, i)) {
        s = i;
        break;
      }
    assert(s >= 0);
    AffinePerm v = left_mul_s(s, w);
    HeckeElt cv = cprime_locked(v, depth + 1);
    // C'_s C'_v = C'_w + sum_{z: sz < z} mu(z, v) C'_z
    HeckeElt prod = cv.act_Ts(s) + cv * Laurent::u(-1);
    std::vector<std::pair<AffinePerm, Int>> corr;
    for (const auto& [z, pz] : cv.terms()) {
      if (z == v) continue;
      Int m = pz.coeff(-1);
      if (m == 0) continue;
      if (!is_left_descent(z, s)) continue;
      corr.emplace_back(z, m);
    }
    for (auto& [z, m] : corr) {
      HeckeElt cz = cprime_locked(z, depth + 1);
      prod -= cz * Laurent::mono(0, m);
    }
    result = std::move(prod);
    assert(check_triangular(result, w));
  }
  {
    std::unique_lock lk(mutex_);
    if (cache_.size() >= budget_.max_elements)
      throw BudgetExceeded("cprime: cache over budget");
    cache_.emplace(w, result);
  }
  return result;
}

Laurent KLContext::kl_poly(const AffinePerm& x, const AffinePerm& w) {
  if (degree(x) != degree(w)) return Laurent();
  if (length(x) > length(w)) return Laurent();
  return cprime(w).coeff(x);
}

Int KLContext::mu(const AffinePerm& x, const AffinePerm& w) {
  if (degree(x) != degree(w)) return Int(0);
  long long lx = length(x), lw = length(w);
  if (lx == lw) return Int(0);
  const AffinePerm& lo = lx < lw ? x : w;
  const AffinePerm& hi = lx < lw ? w : x;
  return cprime(hi).coeff(lo).coeff(-1);
}

size_t KLContext::cache_size() const {
  std::shared_lock lk(mutex_);
  return cache_.size();
}

void KLContext::clear() {
  std::unique_lock lk(mutex_);
  cache_.clear();
}

bool check_triangular(const HeckeElt& c, const AffinePerm& w,
                      bool full_bruhat) {
  for (const auto& [x, p] : c.terms()) {
    if (x == w) {
      if (!p.is_one()) return false;
      continue;
    }
    if (!p.negative_only()) return false;
    if (degree(x) != degree(w)) return false;
    if (length(x) >= length(w)) return false;
    if (full_bruhat && !bruhat_leq(x, w)) return false;
  }
  return !c.coeff(w).is_zero();
}

}  // namespace aff
