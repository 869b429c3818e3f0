#include "affhecke/affine_perm.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace aff {

long long rsd(long long v, int n) {
  long long r = v % n;
  if (r <= 0) r += n;
  return r;
}

AffinePerm identity(int n) {
  AffinePerm w;
  w.n = n;
  w.window.resize(n);
  for (int i = 0; i < n; ++i) w.window[i] = n - i;
  return w;
}

bool valid_window(const AffinePerm& w, std::string* why) {
  if (w.n < 1 || int(w.window.size()) != w.n) {
    if (why) *why = "window length mismatch";
    return false;
  }
  std::set<long long> res;
  long long sum = 0;
  for (int i = 0; i < w.n; ++i) {
    res.insert(rsd(w.window[i], w.n));
    sum += w.window[i] - (i + 1);
  }
  if (int(res.size()) != w.n) {
    if (why) *why = "residues not distinct";
    return false;
  }
  if (sum % w.n != 0) {
    if (why) *why = "degree not integral";
    return false;
  }
  return true;
}

long long window_at(const AffinePerm& w, long long i) {
  long long p = rsd(i, w.n);
  return w.window[p - 1] - (i - p);
}

AffinePerm left_mul_s(int i, const AffinePerm& w) {
  AffinePerm r = w;
  if (i == 0) {
    r.window[0] = w.window[w.n - 1] + w.n;
    r.window[w.n - 1] = w.window[0] - w.n;
  } else {
    std::swap(r.window[i - 1], r.window[i]);
  }
  return r;
}

AffinePerm right_mul_s(const AffinePerm& w, int i) {
  // w * s_i corresponds to +1 at the entry with residue n-i and -1 at the
  // entry with residue n-i+1 (word multiplication rule for w s_{n-i}).
  int n = w.n;
  long long a = rsd(n - i, n), b = rsd(n - i + 1, n);
  AffinePerm r = w;
  for (int p = 0; p < n; ++p) {
    long long rp = rsd(w.window[p], n);
    if (rp == a) r.window[p] += 1;
    if (rp == b) r.window[p] -= 1;
  }
  return r;
}

AffinePerm left_mul_pi(const AffinePerm& w, long long k) {
  AffinePerm r = w;
  int n = w.n;
  if (k == 0) return r;
  long long q = k / n, s = k % n;
  if (s < 0) {
    s += n;
    q -= 1;
  }
  // pi^s: rotate right by s with +n on wrapped entries, then shift by q*n
  r.window.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    // position p (0-based) of pi^s w is entry p - s of w (wrap adds n)
    long long src = p - s;
    long long add = 0;
    while (src < 0) {
      src += n;
      add += n;
    }
    r.window[p] = w.window[src] + add;
  }
  for (int p = 0; p < n; ++p) r.window[p] += q * n;
  return r;
}

AffinePerm right_mul_pi(const AffinePerm& w, long long k) {
  AffinePerm r = w;
  for (auto& v : r.window) v += k;
  return r;
}

AffinePerm translate(const std::vector<long long>& lambda,
                     const AffinePerm& w) {
  AffinePerm r = w;
  for (int i = 0; i < w.n; ++i) r.window[i] += lambda[i] * w.n;
  return r;
}

// window encodes w via w_i = n+1-w^{-1}(i); as a function on Z,
// w^{-1}(i) = n+1-w_i extended by w^{-1}(i+n) = w^{-1}(i)+n.
static long long inv_fun(const AffinePerm& w, long long i) {
  return w.n + 1 - window_at(w, i);
}

// w(i): the unique j with inv_fun(w, j) = i
static long long fun(const AffinePerm& w, long long i) {
  // find window position p with n+1-w_p congruent to i
  int n = w.n;
  for (int p = 1; p <= n; ++p) {
    long long base = n + 1 - w.window[p - 1];
    long long diff = i - base;
    if (diff % n == 0) return p + diff;  // inv_fun(w, p + diff) = base + diff
  }
  throw std::logic_error("fun: residue not found");
}

AffinePerm mul(const AffinePerm& a, const AffinePerm& b) {
  // (ab)^{-1}(i) = b^{-1}(a^{-1}(i)); window_i = n+1-(ab)^{-1}(i)
  if (a.n != b.n) throw std::invalid_argument("rank mismatch");
  AffinePerm r;
  r.n = a.n;
  r.window.resize(a.n);
  for (int i = 1; i <= a.n; ++i)
    r.window[i - 1] = a.n + 1 - inv_fun(b, inv_fun(a, i));
  return r;
}

AffinePerm inverse(const AffinePerm& w) {
  AffinePerm r;
  r.n = w.n;
  r.window.resize(w.n);
  for (int i = 1; i <= w.n; ++i) r.window[i - 1] = w.n + 1 - fun(w, i);
  return r;
}

AffinePerm psi(const AffinePerm& w) {
  // word of psi(w): x_i determined by w_{x_i} = i
  AffinePerm r;
  r.n = w.n;
  r.window.resize(w.n);
  int n = w.n;
  for (int i = 1; i <= n; ++i) {
    for (int p = 1; p <= n; ++p) {
      long long diff = w.window[p - 1] - i;
      if (diff % n == 0) {
        // w_{p + diff} = w_p - diff = i
        r.window[i - 1] = p + diff;
        break;
      }
    }
  }
  return r;
}

AffinePerm delta(const AffinePerm& w) { return psi(inverse(w)); }

long long length(const AffinePerm& w) {
  long long l = 0;
  int n = w.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long d = w.window[i] - w.window[j];
      // d is never a multiple of n
      long long q = d >= 0 ? d / n : -((-d + n - 1) / n);
      l += q >= 0 ? q : -q;
    }
  return l;
}

long long degree(const AffinePerm& w) {
  long long s = 0;
  for (int i = 0; i < w.n; ++i) s += w.window[i] - (i + 1);
  return s / w.n;
}

bool is_positive(const AffinePerm& w) {
  for (auto v : w.window)
    if (v <= 0) return false;
  return true;
}

bool is_left_descent(const AffinePerm& w, int i) {
  if (i == 0) return w.window[w.n - 1] < w.window[0] - w.n;
  return w.window[i - 1] < w.window[i];
}

uint32_t left_descents(const AffinePerm& w) {
  uint32_t m = 0;
  for (int i = 0; i < w.n; ++i)
    if (is_left_descent(w, i)) m |= 1u << i;
  return m;
}

bool is_right_descent(const AffinePerm& w, int i) {
  // w s_i < w iff for values a = n-i, a+1 (mod n): position of a+1 precedes
  // position of a in the infinite word; compare via lengths of the defining
  // inequality j > k with w_j = a, w_k = a+1 read off residues.
  int n = w.n;
  long long a = rsd(n - i, n);
  long long b = a + 1;  // literal value a+1 (residue class of a+1)
  // find infinite-word positions: w_j = a, w_k = b
  long long j = 0, k = 0;
  for (int p = 1; p <= n; ++p) {
    long long diff_a = w.window[p - 1] - a;
    if (diff_a % n == 0) j = p + diff_a;  // w_{p+diff} = w_p - diff = a
    long long diff_b = w.window[p - 1] - b;
    if (diff_b % n == 0) k = p + diff_b;
  }
  // w s_{n-i} > w iff j > k; descent iff j < k
  return j < k;
}

uint32_t right_descents(const AffinePerm& w) {
  uint32_t m = 0;
  for (int i = 0; i < w.n; ++i)
    if (is_right_descent(w, i)) m |= 1u << i;
  return m;
}

namespace {
struct PairHash {
  size_t operator()(const std::pair<AffinePerm, AffinePerm>& p) const {
    APHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};
std::unordered_map<std::pair<AffinePerm, AffinePerm>, bool, PairHash>
    g_bruhat_cache;
std::shared_mutex g_bruhat_mutex;
constexpr size_t kBruhatCacheMax = 1u << 22;

bool bruhat_leq_Wa(const AffinePerm& x, const AffinePerm& w) {
  if (x == w) return true;
  long long lx = length(x), lw = length(w);
  if (lx >= lw) return false;
  {
    std::shared_lock lk(g_bruhat_mutex);
    auto it = g_bruhat_cache.find({x, w});
    if (it != g_bruhat_cache.end()) return it->second;
  }
  // descent recursion on any s in L(w)
  int s = -1;
  for (int i = 0; i < w.n; ++i)
    if (is_left_descent(w, i)) {
      s = i;
      break;
    }
  assert(s >= 0);
  AffinePerm sw = left_mul_s(s, w);
  bool r;
  if (is_left_descent(x, s))
    r = bruhat_leq_Wa(left_mul_s(s, x), sw);
  else
    r = bruhat_leq_Wa(x, sw);
  {
    std::unique_lock lk(g_bruhat_mutex);
    if (g_bruhat_cache.size() < kBruhatCacheMax)
      g_bruhat_cache.emplace(std::make_pair(x, w), r);
  }
  return r;
}
}  // namespace

bool bruhat_leq(const AffinePerm& x, const AffinePerm& w) {
  if (x.n != w.n) throw std::invalid_argument("rank mismatch");
  if (degree(x) != degree(w)) return false;  // Pi-cosets are incomparable
  return bruhat_leq_Wa(x, w);
}

void clear_bruhat_cache() {
  std::unique_lock lk(g_bruhat_mutex);
  g_bruhat_cache.clear();
}

AffinePerm standardize(const AffinePerm& w) {
  int n = w.n;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return w.window[a] < w.window[b]; });
  AffinePerm r;
  r.n = n;
  r.window.resize(n);
  for (int rank = 0; rank < n; ++rank) r.window[idx[rank]] = rank + 1;
  return r;
}

std::pair<AffinePerm, AffinePerm> factor_right_coset(const AffinePerm& w) {
  AffinePerm fin = standardize(w);
  AffinePerm min = mul(inverse(fin), w);
  return {fin, min};
}

std::pair<AffinePerm, AffinePerm> factor_left_coset(const AffinePerm& w) {
  // W_S-part: entries of the infinite word lying in [n], read by position
  int n = w.n;
  std::vector<std::pair<long long, long long>> pos_val;  // (position, value)
  for (int p = 1; p <= n; ++p) {
    long long v = w.window[p - 1];
    long long r = rsd(v, n);
    long long t = (v - r) / n;  // value r sits at position p + t*n
    pos_val.emplace_back(p + t * n, r);
  }
  std::sort(pos_val.begin(), pos_val.end());
  AffinePerm fin;
  fin.n = n;
  fin.window.resize(n);
  for (int i = 0; i < n; ++i) fin.window[i] = pos_val[i].second;
  AffinePerm min = mul(w, inverse(fin));
  return {min, fin};
}

std::pair<AffinePerm, AffinePerm> factor_left_coset_J(const AffinePerm& w,
                                                      uint32_t jmask) {
  // peel right descents lying in J
  AffinePerm cur = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < w.n; ++i) {
      if (!(jmask & (1u << i))) continue;
      if (is_right_descent(cur, i)) {
        cur = right_mul_s(cur, i);
        word.push_back(i);
        changed = true;
        break;
      }
    }
  }
  AffinePerm fin = identity(w.n);
  for (int s : word) fin = left_mul_s(s, fin);  // fin = s_{a_k} ... s_{a_1}
  return {cur, fin};
}

bool is_min_right_coset(const AffinePerm& w) {
  for (int i = 1; i < w.n; ++i)
    if (is_left_descent(w, i)) return false;
  return true;
}

bool is_max_right_coset(const AffinePerm& w) {
  for (int i = 1; i < w.n; ++i)
    if (!is_left_descent(w, i)) return false;
  return true;
}

bool is_min_left_coset(const AffinePerm& w) {
  for (int i = 1; i < w.n; ++i)
    if (is_right_descent(w, i)) return false;
  return true;
}

bool is_max_left_coset(const AffinePerm& w) {
  for (int i = 1; i < w.n; ++i)
    if (!is_right_descent(w, i)) return false;
  return true;
}

GroupWord group_word(const AffinePerm& w) {
  GroupWord gw;
  AffinePerm cur = w;
  while (true) {
    int s = -1;
    for (int i = 1; i < cur.n; ++i)
      if (is_left_descent(cur, i)) {
        s = i;
        break;
      }
    if (s < 0 && is_left_descent(cur, 0)) s = 0;
    if (s < 0) break;
    gw.gens.push_back(s);
    cur = left_mul_s(s, cur);
  }
  // remainder is pi^d
  gw.pi_power = degree(cur);
  assert(left_mul_pi(identity(cur.n), gw.pi_power) == cur);
  return gw;
}

AffinePerm eval_group_word(int n, const GroupWord& gw) {
  AffinePerm w = left_mul_pi(identity(n), gw.pi_power);
  for (auto it = gw.gens.rbegin(); it != gw.gens.rend(); ++it)
    w = left_mul_s(*it, w);
  return w;
}

std::string group_word_str(const GroupWord& gw) {
  std::ostringstream os;
  for (size_t i = 0; i < gw.gens.size(); ++i) {
    if (i) os << " ";
    os << "s" << gw.gens[i];
  }
  if (gw.pi_power != 0) {
    if (!gw.gens.empty()) os << " ";
    os << "pi";
    if (gw.pi_power != 1) os << "^" << gw.pi_power;
  }
  if (gw.gens.empty() && gw.pi_power == 0) os << "e";
  return os.str();
}

BernsteinForm bernstein_form(const AffinePerm& w) {
  BernsteinForm bf;
  bf.lambda.resize(w.n);
  bf.fin.n = w.n;
  bf.fin.window.resize(w.n);
  for (int i = 0; i < w.n; ++i) {
    long long r = rsd(w.window[i], w.n);
    bf.lambda[i] = (w.window[i] - r) / w.n;
    bf.fin.window[i] = r;
  }
  return bf;
}

std::string bernstein_form_str(const BernsteinForm& bf) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < bf.lambda.size(); ++i) {
    if (bf.lambda[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << "y" << (i + 1);
    if (bf.lambda[i] != 1) os << "^" << bf.lambda[i];
  }
  GroupWord gw = group_word(bf.fin);
  if (!gw.gens.empty()) {
    if (any) os << " ";
    os << group_word_str(gw);
    any = true;
  }
  if (!any) os << "e";
  return os.str();
}

bool in_DL(const AffinePerm& w, int i) {
  bool a = is_left_descent(w, i), b = is_left_descent(w, i + 1);
  return a != b;
}

bool in_DR(const AffinePerm& w, int i) {
  bool a = is_right_descent(w, i), b = is_right_descent(w, i + 1);
  return a != b;
}

AffinePerm left_star(const AffinePerm& w, int i) {
  if (!in_DL(w, i)) throw std::invalid_argument("not in D_L");
  AffinePerm a = left_mul_s(i, w), b = left_mul_s(i + 1, w);
  if (in_DL(a, i)) return a;
  assert(in_DL(b, i));
  return b;
}

AffinePerm right_star(const AffinePerm& w, int i) {
  if (!in_DR(w, i)) throw std::invalid_argument("not in D_R");
  AffinePerm a = right_mul_s(w, i), b = right_mul_s(w, i + 1);
  if (in_DR(a, i)) return a;
  assert(in_DR(b, i));
  return b;
}

std::vector<std::pair<int, AffinePerm>> knuth_moves(const AffinePerm& w) {
  std::vector<std::pair<int, AffinePerm>> out;
  for (int i = 1; i + 1 < w.n; ++i)
    if (in_DL(w, i)) out.emplace_back(i, left_star(w, i));
  return out;
}

std::vector<std::pair<int, AffinePerm>> dual_knuth_moves(const AffinePerm& w) {
  std::vector<std::pair<int, AffinePerm>> out;
  for (int i = 1; i + 1 < w.n; ++i)
    if (in_DR(w, i)) out.emplace_back(i, right_star(w, i));
  return out;
}

Partition greene_partition(const AffinePerm& w) {
  int n = w.n;
  // partial order on [n]: i < j positions (1-based)
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool prec = false;
      if (i < j)
        prec = w.window[i - 1] < w.window[j - 1];
      else
        prec = w.window[i - 1] < w.window[j - 1] - n;
      if (prec) rel[i - 1][j - 1] = true;
    }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;

  // max union of k chains via min-cost flow; nodes split in/out.
  // ids: 0 = S, 1 = T, in(i) = 2+2i, out(i) = 3+2i
  int N = 2 + 2 * n;
  struct Edge {
    int to, cap, cost, flow = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(N);
  auto add_edge = [&](int a, int b, int cap, int cost) {
    adj[a].push_back(int(edges.size()));
    edges.push_back({b, cap, cost});
    adj[b].push_back(int(edges.size()));
    edges.push_back({a, 0, -cost});
  };
  for (int i = 0; i < n; ++i) {
    add_edge(0, 2 + 2 * i, 1, 0);
    add_edge(2 + 2 * i, 3 + 2 * i, 1, -1);
    add_edge(3 + 2 * i, 1, 1, 0);
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) add_edge(3 + 2 * i, 2 + 2 * j, 1, 0);
  }
  add_edge(0, 1, n, 0);  // bypass for unused chains

  Partition nu;
  long long covered_prev = 0;
  // push 1 unit at a time with Bellman-Ford shortest path (costs small)
  long long total_cost = 0;
  for (int k = 1; k <= n; ++k) {
    const long long INF = 1ll << 60;
    std::vector<long long> dist(N, INF);
    std::vector<int> pre(N, -1);
    dist[0] = 0;
    for (int it = 0; it < N; ++it) {
      bool ch = false;
      for (int v = 0; v < N; ++v) {
        if (dist[v] == INF) continue;
        for (int eid : adj[v]) {
          const Edge& e = edges[eid];
          if (e.cap - e.flow > 0 && dist[v] + e.cost < dist[e.to]) {
            dist[e.to] = dist[v] + e.cost;
            pre[e.to] = eid;
            ch = true;
          }
        }
      }
      if (!ch) break;
    }
    assert(dist[1] < INF);
    total_cost += dist[1];
    for (int v = 1; v != 0; ) {
      int eid = pre[v];
      edges[eid].flow += 1;
      edges[eid ^ 1].flow -= 1;
      v = edges[eid ^ 1].to;
    }
    long long covered = -total_cost;
    long long part = covered - covered_prev;
    covered_prev = covered;
    if (part > 0) nu.push_back(int(part));
  }
  assert(weight(nu) == n);
  assert(is_partition(nu));
  return nu;
}

AffinePerm perm_iota(const AffinePerm& w) {
  int m = w.n;  // old rank
  int n = m + 1;
  AffinePerm r;
  r.n = n;
  r.window.resize(n);
  for (int i = 0; i < m; ++i) {
    long long v = w.window[i];
    long long b = rsd(v, m);
    long long a = (v - b) / m;
    r.window[i] = a * n + (b + 1);
  }
  r.window[n - 1] = 1;
  return r;
}

std::optional<std::vector<int>> positive_pi_expression(const AffinePerm& w) {
  if (!is_positive(w)) return std::nullopt;
  std::vector<int> toks;
  AffinePerm cur = w;
  size_t guard = 0;
  while (cur != identity(cur.n)) {
    if (++guard > 1000000) return std::nullopt;
    int s = -1;
    for (int i = 1; i < cur.n; ++i)
      if (is_left_descent(cur, i)) {
        s = i;
        break;
      }
    if (s >= 0) {
      toks.push_back(s);
      cur = left_mul_s(s, cur);
    } else {
      toks.push_back(-1);  // pi
      cur = left_mul_pi(cur, -1);
      if (!is_positive(cur)) return std::nullopt;
    }
  }
  return toks;
}

std::string token(long long v, int n, bool plain) {
  if (plain) return std::to_string(v);
  if (v >= 1 && v <= n) return std::to_string(v);
  long long b = rsd(v, n);
  long long a = (v - b) / n;
  return std::to_string(a) + "." + std::to_string(b);
}

std::string window_str(const AffinePerm& w, bool plain) {
  std::ostringstream os;
  for (int i = 0; i < w.n; ++i) {
    if (i) os << " ";
    os << token(w.window[i], w.n, plain);
  }
  return os.str();
}

long long parse_token(const std::string& tok, int n) {
  auto dot = tok.find('.');
  if (dot != std::string::npos) {
    long long a = std::stoll(tok.substr(0, dot));
    long long b = std::stoll(tok.substr(dot + 1));
    return a * n + b;
  }
  // dotless: one character is a plain value; longer tokens use the paper's
  // omitted-dot form with a single trailing base-n digit (A = 10, B = 11, ...)
  if (tok.size() <= 1 || n == 0) return std::stoll(tok);
  char last = tok.back();
  long long b;
  if (last >= '1' && last <= '9')
    b = last - '0';
  else if (last >= 'A' && last <= 'Z')
    b = 10 + last - 'A';
  else
    return std::stoll(tok);
  if (b > n) return std::stoll(tok);
  std::string head = tok.substr(0, tok.size() - 1);
  if (head == "-") head = "-1";
  long long a = std::stoll(head);
  return a * n + b;
}

AffinePerm parse_window(int n, const std::string& text) {
  AffinePerm w;
  w.n = n;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) w.window.push_back(parse_token(tok, n));
  if (n == 0) {
    w.n = int(w.window.size());
  }
  std::string why;
  if (!valid_window(w, &why))
    throw std::invalid_argument("invalid window: " + why);
  return w;
}

}  // namespace aff
