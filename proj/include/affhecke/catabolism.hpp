#pragma once

#include <optional>
#include <vector>

#include "affhecke/cocyclage.hpp"
#include "affhecke/tableau.hpp"

namespace aff {

// plactic product: insertion tableau of rowword(a) followed by rowword(b)
Tableau plactic(const Tableau& a, const Tableau& b, int n);

// R1-row catabolism: remove T_{R1}, then (n + north)*south
Tableau rcat(const Tableau& t, const Partition& r1);
// C1-column catabolism: remove T_{C1}, then east*(-n + west)
Tableau ccat(const Tableau& t, const Partition& c1);

bool is_row_catabolizable(const Tableau& t, const Tableau& q,
                          const Composition& eta);
bool is_col_catabolizable(const Tableau& t, const Tableau& q,
                          const Composition& eta);

// dominance-maximal lambda with T (G_(n), lambda)-column catabolizable;
// T a coinvariant cell label (or an SYT, embedded first)
Partition ctype(const Tableau& t);

// all (d, k) with d <= k <= n and d > k - sum_i (lambda_i - (n-k))_{>=0}
std::vector<std::pair<int, int>> tanisaki_pairs(int n, const Partition& lambda);

// dual Garnir tableau: the highest-degree shape-lambda coinvariant label
Tableau dual_garnir(int n, const Partition& lambda);

// atom cocyclage posets (vertex sets are coinvariant labels unless noted)
CCPoset gp_ccp(int n, const Partition& lambda);
CCPoset dgp_ccp(int n, const Partition& lambda);
// (anchor, eta)-catabolizable tableaux drawn from the given universe
std::vector<Tableau> sw_set(const Tableau& anchor, const Composition& eta,
                            bool row_mode,
                            const std::vector<Tableau>& universe);
CCPoset sw_ccp(const Tableau& anchor, const Composition& eta, bool row_mode,
               const std::vector<Tableau>& universe);
// dual GP ccp copy for a stackable anchor: conditions (ii)-(iv) via the
// sign insertion machinery
CCPoset dgp_copy(const Tableau& u);

// skew linking
struct SkewLink {
  Partition lambda, mu;
  Partition outer, inner;  // theta = outer/inner
};
std::optional<SkewLink> skew_link(const Partition& lambda, const Partition& mu);
std::vector<std::pair<int, int>> link_intervals(const SkewLink& link);
SkewLink theta_k(const Partition& lambda, int k);

// Chen ccp: intersection of SW row-catabolizable sets over the admissible
// compositions; anchors inside the coinvariants
CCPoset chen_ccp(int n, const SkewLink& link);
CCPoset llm_ccp(int n, const Partition& lambda, int k);

// coinvariant cell labels (embedded SYT(n)) -- shared vertex universe
std::vector<Tableau> coinvariant_labels(int n);

}  // namespace aff
