#pragma once

#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "affhecke/affine_perm.hpp"
#include "affhecke/laurent.hpp"
#include "affhecke/partition.hpp"

namespace aff {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Budget {
  long long max_length = 20;
  size_t max_elements = 4'000'000;
};

// Element of the extended affine Hecke algebra in the T-basis.
class HeckeElt {
 public:
  explicit HeckeElt(int n = 0) : n_(n) {}
  static HeckeElt unit(int n) {
    HeckeElt h(n);
    h.terms_[identity(n)] = Laurent::one();
    return h;
  }
  static HeckeElt t_basis(const AffinePerm& w) {
    HeckeElt h(w.n);
    h.terms_[w] = Laurent::one();
    return h;
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }
  const std::unordered_map<AffinePerm, Laurent, APHash>& terms() const {
    return terms_;
  }
  Laurent coeff(const AffinePerm& w) const;
  void add_term(const AffinePerm& w, const Laurent& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator*(const Laurent& c) const;
  bool operator==(const HeckeElt& o) const;
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  // left actions by generators (applied to every term)
  HeckeElt act_Ts(int i, bool inverse = false) const;
  HeckeElt act_Tpi(long long k) const;
  // right actions
  HeckeElt ract_Ts(int i, bool inverse = false) const;
  HeckeElt ract_Tpi(long long k) const;

  std::string str(bool plain = false) const;

 private:
  int n_;
  std::unordered_map<AffinePerm, Laurent, APHash> terms_;
};

HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
HeckeElt bar(const HeckeElt& h);
HeckeElt jinv(const HeckeElt& h);        // u -> -u^{-1} on coefficients
HeckeElt t_inverse(const AffinePerm& w);  // (T_w)^{-1}
HeckeElt psi_map(const HeckeElt& h);      // T_w -> T_{Psi(w)}

// Bernstein generators and symmetric functions in them
HeckeElt bernstein_y(int n, int i);                        // Y_i
HeckeElt bernstein_monomial(int n, std::vector<long long> lambda);  // Y^lambda
HeckeElt elementary_sym_y(int n, int d, int k);            // e_d(Y_1..Y_k)
HeckeElt schur_y(int n, const Partition& lambda);          // s_lambda(Y)

// algebra embedding of rank n-1 into rank n
HeckeElt iota(const HeckeElt& h);

// coordinates in the Bernstein basis {Y^lambda T_v}
std::vector<std::pair<BernsteinForm, Laurent>> bernstein_coords(
    const HeckeElt& h, int max_iter = 100000);

// Kazhdan-Lusztig engine for one rank; memoizes canonical basis elements.
class KLContext {
 public:
  explicit KLContext(int n, Budget budget = {}) : n_(n), budget_(budget) {}

  int n() const { return n_; }
  const Budget& budget() const { return budget_; }

  // canonical basis element C'_w; throws BudgetExceeded when over budget
  HeckeElt cprime(const AffinePerm& w);
  Laurent kl_poly(const AffinePerm& x, const AffinePerm& w);
  // coefficient of u^{-1} in P'_{x,w} (symmetric in x, w)
  Int mu(const AffinePerm& x, const AffinePerm& w);

  size_t cache_size() const;
  void clear();

 private:
  HeckeElt cprime_locked(const AffinePerm& w, int depth);
  int n_;
  Budget budget_;
  std::unordered_map<AffinePerm, HeckeElt, APHash> cache_;
  mutable std::shared_mutex mutex_;
};

// check triangularity: C'_w = T_w + sum over x < w with negative-only coeffs
bool check_triangular(const HeckeElt& c, const AffinePerm& w,
                      bool full_bruhat = false);

}  // namespace aff
