#include "affhecke/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace aff {

Laurent Laurent::mono(int exp, Int c) {
  Laurent p;
  if (c != 0) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

Laurent Laurent::u_integer(int k) {
  Laurent p;
  if (k < 0) return -u_integer(-k);
  for (int e = 1 - k; e <= k - 1; e += 2) p.terms_.emplace_back(e, Int(1));
  return p;
}

Int Laurent::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<int, Int>& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Int(0);
}

void Laurent::add_mono(int exp, const Int& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<int, Int>& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, exp, c);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_mono(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_mono(e, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_mono(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) e += k;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

Laurent Laurent::jmap() const {
  Laurent r;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (it->first & 1) c = -c;
    r.terms_.emplace_back(-it->first, c);
  }
  return r;
}

bool Laurent::nonneg_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Int Laurent::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "u";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace aff
