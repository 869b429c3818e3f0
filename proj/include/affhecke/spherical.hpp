#pragma once

#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "affhecke/hecke.hpp"

namespace aff {

// The module H(W_e) e+ with e+ = C'_{w_0}, spanned by U_m = T_m e+ over
// minimal left-coset representatives m (no right descent in S).  The
// canonical basis N_m corresponds to C'_{m w_0}; its U-coefficients are the
// polynomials P'_{m' w_0, m w_0}, so all mu-data between elements maximal in
// their cosets w W_f lives here at a fraction of the T-basis cost.
class SphericalModule {
 public:
  using Vec = std::unordered_map<AffinePerm, Laurent, APHash>;

  explicit SphericalModule(int n, Budget budget = {}) : n_(n), budget_(budget) {}

  int n() const { return n_; }

  // generator actions on U-coordinates (left multiplication)
  Vec act_Ts(const Vec& v, int i, bool inverse = false) const;
  Vec act_Tpi(const Vec& v, long long k) const;
  Vec act_cprime_s(const Vec& v, int i) const;  // C'_{s_i} = T_{s_i} + u^{-1}
  // Y^lambda acting via T_{y^mu} (T_{y^nu})^{-1}
  Vec act_bernstein(const Vec& v, std::vector<long long> lambda) const;
  Vec act_elementary(const Vec& v, int d, int k) const;  // e_d(Y_1..Y_k)
  Vec act_schur(const Vec& v, const Partition& lambda) const;
  Vec act_t_word(const Vec& v, const AffinePerm& x) const;  // T_x .

  static void add(Vec& a, const AffinePerm& m, const Laurent& c);
  static Vec scale(const Vec& v, const Laurent& c);
  static Vec sub(Vec a, const Vec& b);
  static bool equal(const Vec& a, const Vec& b);

  // canonical basis N_m in U-coordinates (m minimal in its coset m W_f)
  const Vec& canonical(const AffinePerm& m);
  // mu between maximal-coset elements x = m_x w_0, w = m_w w_0,
  // given by their minimal representatives
  Int mu_min(const AffinePerm& mx, const AffinePerm& mw);
  Laurent kl_min(const AffinePerm& mx, const AffinePerm& mw);

  // U -> N basis conversion (triangular)
  std::vector<std::pair<AffinePerm, Laurent>> to_canonical(Vec v);

  // trichotomy for left multiplication by s on a minimal rep
  enum class SType { ascent, descent, fixed };
  SType stype(const AffinePerm& m, int i) const;
  // descent set of N_m as a W-graph vertex: {s in K : s m < m or fixed}
  uint32_t graph_descents(const AffinePerm& m) const;

  size_t cache_size() const;

 private:
  const Vec& canonical_inner(const AffinePerm& m, int depth);
  int n_;
  Budget budget_;
  std::unordered_map<AffinePerm, Vec, APHash> cache_;
  mutable std::shared_mutex mutex_;
};

// minimal representative of w W_f (sorted-decreasing window values)
AffinePerm min_rep(const AffinePerm& w);
// maximal representative m w_0 of the coset of a minimal rep
AffinePerm max_of_min(const AffinePerm& m);

}  // namespace aff
