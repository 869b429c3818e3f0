#include "affhecke/coinvariants.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "affhecke/sign_insertion.hpp"

namespace aff {

namespace {
struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::vector<Word> all_permutation_words(int n) {
  Word v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Word> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}
}  // namespace

std::string Verdict::status_str() const {
  switch (status) {
    case verified:
      return "verified";
    case counterexample:
      return "counterexample";
    default:
      return "budget-exceeded";
  }
}

int CoinvariantBasis::find(const AffinePerm& w) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].w == w) return int(i);
  return -1;
}

CoinvariantBasis dsw0(int n) {
  CoinvariantBasis b;
  b.n = n;
  for (const Word& v : all_permutation_words(n)) {
    CoinvariantElement e;
    e.v = v;
    e.labeling = cocharge_labeling(v);
    Word w = embed_standard_word(n, v);
    e.w.n = n;
    e.w.window.assign(w.begin(), w.end());
    e.deg = cocharge(v);
    e.p = ptab(e.w);
    b.elements.push_back(std::move(e));
  }
  return b;
}

std::vector<AffinePerm> descent_min_reps(int n) {
  std::set<std::vector<long long>> betas;
  for (const Word& v : all_permutation_words(n)) {
    Word lab = cocharge_labeling(v);
    betas.insert(std::vector<long long>(lab.begin(), lab.end()));
  }
  std::vector<AffinePerm> out;
  for (const auto& beta : betas)
    out.push_back(factor_left_coset(translate(beta, identity(n))).first);
  return out;
}

CellDecomposition coinvariant_cells(int n, SphericalModule& sph) {
  CoinvariantBasis b = dsw0(n);
  std::vector<AffinePerm> verts;
  for (const auto& e : b.elements) verts.push_back(e.w);
  WGraphData g = wgraph_exact_spherical(verts, sph);
  return cells_from_wgraph(g, CellMode::positive_affine, "exact");
}

CellDecomposition coinvariant_cells_combinatorial(int n) {
  CoinvariantBasis b = dsw0(n);
  std::vector<AffinePerm> verts;
  for (const auto& e : b.elements) verts.push_back(e.w);
  return cells_combinatorial(n, verts);
}

namespace {

// expand a spherical-module vector in the canonical basis and return the
// coinvariant cell ids of its support; asserts the support stays inside the
// coinvariant basis when `strict`
std::vector<int> support_cells(SphericalModule& sph, SphericalModule::Vec v,
                               const CellDecomposition& cd, bool strict) {
  std::set<int> cells;
  for (auto& [m, c] : sph.to_canonical(std::move(v))) {
    AffinePerm w = max_of_min(m);
    int vi = -1;
    for (size_t q = 0; q < cd.verts.size(); ++q)
      if (cd.verts[q] == w) {
        vi = int(q);
        break;
      }
    if (vi < 0) {
      if (strict)
        throw std::logic_error("support outside the coinvariant basis");
      continue;
    }
    cells.insert(cd.cell_of[vi]);
  }
  return std::vector<int>(cells.begin(), cells.end());
}

}  // namespace

std::vector<Tableau> gp_quotient(int n, const Partition& lambda,
                                 GPBackend backend,
                                 const CellDecomposition* coinv,
                                 SphericalModule* sph) {
  std::vector<Tableau> out;
  if (backend == GPBackend::catabolism) {
    Tableau g = garnir(n, lambda);
    Composition ones(lambda.size(), 1);
    for (const Tableau& t : coinvariant_labels(n))
      if (is_row_catabolizable(t, g, ones)) out.push_back(t);
    return out;
  }
  if (!coinv || !sph)
    throw std::invalid_argument("gp_quotient: backend needs cell data");
  const CellDecomposition& cd = *coinv;
  if (backend == GPBackend::cell) {
    int cg = cd.find_label(garnir(n, lambda));
    if (cg < 0) throw std::logic_error("gp_quotient: Garnir cell not found");
    for (int c = 0; c < cd.cell_count(); ++c)
      if (cd.cell_leq(cg, c)) out.push_back(cd.labels[c]);
    return out;
  }
  if (backend == GPBackend::tanisaki) {
    // ideal generated by the elementary symmetric elements; its cells are
    // the downward closure of the generator supports
    std::set<int> dead;
    for (auto [d, k] : tanisaki_pairs(n, lambda)) {
      SphericalModule::Vec gen;
      SphericalModule::add(gen, identity(n), Laurent::u(d * (k - n)));
      gen = sph->act_elementary(gen, d, k);
      for (int c : support_cells(*sph, std::move(gen), cd, true)) {
        for (int c2 = 0; c2 < cd.cell_count(); ++c2)
          if (cd.cell_leq(c2, c)) dead.insert(c2);
      }
    }
    for (int c = 0; c < cd.cell_count(); ++c)
      if (!dead.count(c)) out.push_back(cd.labels[c]);
    return out;
  }
  // pairing backend: gamma survives iff the Garnir cell appears in the
  // module generated by gamma through actual products
  int cg = cd.find_label(garnir(n, lambda));
  if (cg < 0) throw std::logic_error("gp_quotient: Garnir cell not found");
  // cell-level arcs through products by C'_s and T_pi
  int nc = cd.cell_count();
  std::vector<std::set<int>> prod_arcs(nc);
  for (int c = 0; c < nc; ++c) {
    std::set<AffinePerm> mins;
    for (int vi : cd.cells[c]) mins.insert(min_rep(cd.verts[vi]));
    for (const AffinePerm& m : mins) {
      std::vector<SphericalModule::Vec> images;
      for (int s = 1; s < n; ++s)
        images.push_back(sph->act_cprime_s(sph->canonical(m), s));
      images.push_back(sph->act_Tpi(sph->canonical(m), 1));
      for (auto& img : images)
        for (int c2 : support_cells(*sph, std::move(img), cd, false))
          if (c2 != c) prod_arcs[c].insert(c2);
    }
  }
  for (int c = 0; c < nc; ++c) {
    // BFS from c through product arcs
    std::vector<int> queue{c};
    std::set<int> seen{c};
    bool hit = c == cg;
    while (!queue.empty() && !hit) {
      int x = queue.back();
      queue.pop_back();
      for (int y : prod_arcs[x])
        if (seen.insert(y).second) {
          if (y == cg) hit = true;
          queue.push_back(y);
        }
    }
    if (hit) out.push_back(cd.labels[c]);
  }
  return out;
}

CoinvariantCopy coinvariant_copy(const AffinePerm& w) {
  int n = w.n;
  if (!is_max_right_coset(w))
    throw std::invalid_argument("coinvariant_copy: not maximal in W_f w");
  std::vector<AffinePerm> ds = descent_min_reps(n);
  std::unordered_set<AffinePerm, APHash> ds_set(ds.begin(), ds.end());
  AffinePerm w0 = identity(n);
  std::reverse(w0.window.begin(), w0.window.end());
  long long degw = degree(w);
  std::vector<CoinvariantCopy> found;
  // enumerate dominant positive beta with |beta| <= deg(w)
  std::vector<long long> beta(n, 0);
  std::function<void(int, long long, long long)> rec = [&](int pos,
                                                           long long rem,
                                                           long long cap) {
    if (pos == n) {
      AffinePerm w0ybeta = mul(w0, translate(beta, identity(n)));
      AffinePerm u2 = mul(inverse(w0ybeta), w);
      if (!is_positive(u2)) return;
      if (!ds_set.count(psi(u2))) return;
      CoinvariantCopy copy;
      copy.w = w;
      copy.beta = beta;
      copy.u2 = u2;
      found.push_back(std::move(copy));
      return;
    }
    for (long long v = std::min(rem, cap); v >= 0; --v) {
      beta[pos] = v;
      rec(pos + 1, rem - v, v);
      beta[pos] = 0;
    }
  };
  rec(0, degw, degw);
  if (found.empty())
    throw std::logic_error("coinvariant_copy: no factorization found");
  if (found.size() > 1)
    throw std::logic_error("coinvariant_copy: factorization not unique");
  CoinvariantCopy copy = std::move(found[0]);
  for (const AffinePerm& u : ds) copy.elements.push_back(mul(u, w));
  std::set<Tableau> labels;
  for (const AffinePerm& x : copy.elements) labels.insert(ptab(x));
  copy.labels.assign(labels.begin(), labels.end());
  return copy;
}

Verdict check_flip_a(int n) {
  Timer timer;
  Verdict v;
  v.claim = "flip (a): pi-corotation commutes with the duality, n = " +
            std::to_string(n);
  CoinvariantBasis b = dsw0(n);
  std::unordered_map<AffinePerm, int, APHash> index;
  for (size_t i = 0; i < b.elements.size(); ++i) index[b.elements[i].w] = int(i);
  auto dual_of = [&](int i) {
    Word vd = reverse_word(b.elements[i].v);
    Word wd = embed_standard_word(n, vd);
    AffinePerm d;
    d.n = n;
    d.window.assign(wd.begin(), wd.end());
    return d;
  };
  for (size_t i = 0; i < b.elements.size(); ++i) {
    AffinePerm piw = left_mul_pi(b.elements[i].w, 1);
    auto it = index.find(piw);
    bool ends_in_one = b.elements[i].v.back() == 1;
    if ((it == index.end()) != ends_in_one) {
      v.status = Verdict::counterexample;
      v.witness = "membership rule fails at " + window_str(b.elements[i].w);
      v.seconds = timer.secs();
      return v;
    }
    if (it == index.end()) continue;
    AffinePerm lhs = dual_of(it->second);
    AffinePerm rhs = left_mul_pi(dual_of(int(i)), -1);
    if (lhs != rhs) {
      v.status = Verdict::counterexample;
      v.witness = "dagger of pi*w differs at w = " + window_str(b.elements[i].w);
      v.seconds = timer.secs();
      return v;
    }
  }
  v.seconds = timer.secs();
  return v;
}

Verdict check_flip_b(int n, SphericalModule& sph) {
  Timer timer;
  Verdict v;
  v.claim = "flip (b): mu(x,w) = mu(w+,x+) on S-descent-relevant pairs, n = " +
            std::to_string(n);
  CoinvariantBasis b = dsw0(n);
  std::vector<AffinePerm> duals, mins, dmins;
  for (const auto& e : b.elements) {
    Word vd = reverse_word(e.v);
    Word wd = embed_standard_word(n, vd);
    AffinePerm d;
    d.n = n;
    d.window.assign(wd.begin(), wd.end());
    duals.push_back(d);
    mins.push_back(min_rep(e.w));
    dmins.push_back(min_rep(d));
  }
  try {
    for (size_t i = 0; i < b.elements.size(); ++i)
      for (size_t j = 0; j < b.elements.size(); ++j) {
        if (i == j) continue;
        uint32_t lx = mask_S(left_descents(b.elements[i].w));
        uint32_t lw = mask_S(left_descents(b.elements[j].w));
        if (!(lx & ~lw)) continue;  // only L(x) not contained in L(w)
        Int lhs = sph.mu_min(mins[i], mins[j]);
        Int rhs = sph.mu_min(dmins[j], dmins[i]);
        if (lhs != rhs) {
          v.status = Verdict::counterexample;
          std::ostringstream os;
          os << "x = " << window_str(b.elements[i].w)
             << ", w = " << window_str(b.elements[j].w) << ", mu = "
             << lhs.str() << " vs " << rhs.str();
          v.witness = os.str();
          v.seconds = timer.secs();
          return v;
        }
      }
  } catch (const BudgetExceeded&) {
    v.status = Verdict::budget_exceeded;
  }
  v.seconds = timer.secs();
  return v;
}

Verdict check_pairing(int n, KLContext& kl) {
  Timer timer;
  Verdict v;
  v.claim = "pairing: <C_x, C'_w> detects the duality, n = " + std::to_string(n);
  AffinePerm w0 = identity(n);
  std::reverse(w0.window.begin(), w0.window.end());
  std::vector<long long> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  AffinePerm w0yrho = mul(w0, translate(rho, identity(n)));
  long long total = degree(w0yrho);
  // dual data on the coinvariant basis
  CoinvariantBasis b = dsw0(n);
  std::unordered_map<AffinePerm, AffinePerm, APHash> dagger;
  std::unordered_set<AffinePerm, APHash> in_dsw0;
  for (const auto& e : b.elements) {
    Word vd = reverse_word(e.v);
    Word wd = embed_standard_word(n, vd);
    AffinePerm d;
    d.n = n;
    d.window.assign(wd.begin(), wd.end());
    dagger.emplace(e.w, d);
    in_dsw0.insert(e.w);
  }
  // enumerate maximal positive coset representatives by degree
  auto max_reps_of_degree = [&](long long d) {
    std::vector<AffinePerm> out;
    std::vector<long long> lam(n, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
      if (pos == n) {
        if (rem != 0) return;
        out.push_back(max_of_min(min_rep(translate(lam, identity(n)))));
        return;
      }
      for (long long q = 0; q <= rem; ++q) {
        lam[pos] = q;
        rec(pos + 1, rem - q);
      }
      lam[pos] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto expand_coeff = [&](HeckeElt h, const AffinePerm& z) {
    // coefficient of C'_z in h
    while (!h.is_zero()) {
      const AffinePerm* best = nullptr;
      long long best_len = -1;
      for (const auto& [x, c] : h.terms()) {
        long long l = length(x);
        if (l > best_len) {
          best = &x;
          best_len = l;
        }
      }
      if (*best == z) return h.coeff(z);
      if (best_len < length(z)) return Laurent();
      Laurent c = h.coeff(*best);
      h -= kl.cprime(*best) * c;
    }
    return Laurent();
  };
  try {
    for (long long dx = 0; dx <= total; ++dx) {
      for (const AffinePerm& x : max_reps_of_degree(dx)) {
        for (const AffinePerm& wpre : max_reps_of_degree(total - dx)) {
          AffinePerm w = psi(wpre);
          HeckeElt prod = mul(jinv(kl.cprime(x)), kl.cprime(w));
          Laurent got = expand_coeff(prod, w0yrho);
          bool special = in_dsw0.count(w) && in_dsw0.count(psi(x)) &&
                         dagger.count(w) && psi(x) == dagger.at(w);
          Laurent want = special ? Laurent::one() : Laurent();
          if (got != want) {
            v.status = Verdict::counterexample;
            std::ostringstream os;
            os << "x = " << window_str(x) << ", w = " << window_str(w)
               << ": <C_x, C'_w> = " << got.str();
            v.witness = os.str();
            v.seconds = timer.secs();
            return v;
          }
        }
      }
    }
  } catch (const BudgetExceeded&) {
    v.status = Verdict::budget_exceeded;
  }
  v.seconds = timer.secs();
  return v;
}

}  // namespace aff
