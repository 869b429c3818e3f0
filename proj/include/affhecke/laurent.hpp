#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace aff {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in the indeterminate u.
// Terms are kept sorted by exponent; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long c) {
    if (c != 0) terms_.emplace_back(0, Int(c));
  }
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  static Laurent mono(int exp, Int c = Int(1));
  static Laurent u(int k = 1) { return mono(k); }
  // [k] = (u^k - u^-k)/(u - u^-1) = u^{k-1} + u^{k-3} + ... + u^{1-k}
  static Laurent u_integer(int k);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }
  Int coeff(int exp) const;
  int min_exp() const { return terms_.front().first; }  // pre: nonzero
  int max_exp() const { return terms_.back().first; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
  }
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }
  void add_mono(int exp, const Int& c);
  Laurent shifted(int k) const;  // multiply by u^k

  Laurent bar() const;   // u -> u^{-1}
  Laurent jmap() const;  // u -> -u^{-1}

  // true iff supported on strictly negative exponents (u^{-1} Z[u^{-1}])
  bool negative_only() const {
    return terms_.empty() || terms_.back().first < 0;
  }
  bool nonneg_coeffs() const;
  Int eval_one() const;  // value at u = 1

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<std::pair<int, Int>> terms_;
};

}  // namespace aff
