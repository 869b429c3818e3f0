#include "affhecke/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace aff {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

int weight(const Composition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty() || p[0] == 0) return q;
  q.resize(p[0], 0);
  for (int part : p)
    for (int c = 0; c < part; ++c) ++q[c];
  return q;
}

Partition sorted_decreasing(const Composition& c) {
  Partition p = c;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return strip_zeros(std::move(p));
}

Partition strip_zeros(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long n_stat(const Partition& p) {
  long s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += long(i) * p[i];
  return s;
}

bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

boost::multiprecision::cpp_int multinomial(int n, const Partition& parts) {
  boost::multiprecision::cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  for (int p : parts)
    for (int i = 2; i <= p; ++i) r /= i;
  return r;
}

std::vector<int> partial_sums(const Composition& eta) {
  std::vector<int> l(eta.size() + 1, 0);
  for (size_t j = 0; j < eta.size(); ++j) l[j + 1] = l[j] + eta[j];
  return l;
}

std::string part_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

}  // namespace aff
