#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "affhecke/hecke.hpp"
#include "affhecke/spherical.hpp"
#include "affhecke/tableau.hpp"

using namespace aff;

namespace {
AffinePerm ap(int n, std::vector<long long> w) {
  AffinePerm p;
  p.n = n;
  p.window = std::move(w);
  return p;
}

AffinePerm random_perm(std::mt19937_64& rng, int n, int max_steps) {
  AffinePerm w = identity(n);
  int steps = std::uniform_int_distribution<int>(0, max_steps)(rng);
  for (int k = 0; k < steps; ++k) {
    int g = int(rng() % (n + 1));
    if (g == n)
      w = left_mul_pi(w, 1);
    else if (n > 1)
      w = left_mul_s(g, w);
  }
  return w;
}

std::vector<AffinePerm> finite_weyl(int n) {
  std::vector<AffinePerm> elts{identity(n)};
  std::set<std::vector<long long>> seen{identity(n).window};
  for (size_t q = 0; q < elts.size(); ++q)
    for (int i = 1; i < n; ++i) {
      AffinePerm v = left_mul_s(i, elts[q]);
      if (seen.insert(v.window).second) elts.push_back(v);
    }
  return elts;
}
}  // namespace

TEST_CASE("u integers and bar") {
  CHECK(Laurent::u_integer(2) == Laurent::u(1) + Laurent::u(-1));
  CHECK(Laurent::u_integer(1) == Laurent::one());
  CHECK(Laurent::u_integer(0).is_zero());
  for (int k = 0; k < 6; ++k)
    CHECK(Laurent::u_integer(k).bar() == Laurent::u_integer(k));
}

TEST_CASE("quadratic relation and pi") {
  int n = 3;
  HeckeElt ts = HeckeElt::t_basis(left_mul_s(1, identity(n)));
  HeckeElt sq = mul(ts, ts);
  HeckeElt expect = HeckeElt::unit(n) + ts * (Laurent::u(1) - Laurent::u(-1));
  CHECK(sq == expect);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    AffinePerm w = random_perm(rng, 3, 8);
    AffinePerm pi = left_mul_pi(identity(3), 1);
    CHECK(mul(HeckeElt::t_basis(pi), HeckeElt::t_basis(w)) ==
          HeckeElt::t_basis(left_mul_pi(w, 1)));
  }
}

TEST_CASE("reduced factorization multiplication") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    AffinePerm a = random_perm(rng, 3, 7), b = random_perm(rng, 3, 7);
    if (length(mul(a, b)) == length(a) + length(b)) {
      CHECK(mul(HeckeElt::t_basis(a), HeckeElt::t_basis(b)) ==
            HeckeElt::t_basis(mul(a, b)));
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    AffinePerm a = random_perm(rng, 3, 6), b = random_perm(rng, 3, 6),
               c = random_perm(rng, 3, 6);
    HeckeElt A = HeckeElt::t_basis(a), B = HeckeElt::t_basis(b),
             C = HeckeElt::t_basis(c);
    CHECK(mul(mul(A, B), C) == mul(A, mul(B, C)));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    AffinePerm w = random_perm(rng, 3, 10);
    CHECK(mul(HeckeElt::t_basis(w), t_inverse(w)) == HeckeElt::unit(3));
    CHECK(mul(t_inverse(w), HeckeElt::t_basis(w)) == HeckeElt::unit(3));
  }
}

TEST_CASE("bar involution") {
  int n = 3;
  AffinePerm s1 = left_mul_s(1, identity(n));
  HeckeElt ts = HeckeElt::t_basis(s1);
  // bar(T_s) = T_s + u^{-1} - u
  CHECK(bar(ts) == ts + HeckeElt::unit(n) * (Laurent::u(-1) - Laurent::u(1)));
  // C'_s = T_s + u^{-1} is bar-invariant
  HeckeElt cs = ts + HeckeElt::unit(n) * Laurent::u(-1);
  CHECK(bar(cs) == cs);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    AffinePerm w = random_perm(rng, 3, 8);
    HeckeElt h = HeckeElt::t_basis(w) * Laurent::u(2) +
                 HeckeElt::t_basis(random_perm(rng, 3, 8)) * Laurent::u(-1);
    CHECK(bar(bar(h)) == h);
    // automorphism property on random pairs
    HeckeElt g = HeckeElt::t_basis(random_perm(rng, 3, 6));
    CHECK(bar(mul(h, g)) == mul(bar(h), bar(g)));
  }
}

TEST_CASE("canonical basis of S_3") {
  KLContext kl(3);
  // C'_id = T_id
  CHECK(kl.cprime(identity(3)) == HeckeElt::unit(3));
  // C'_{w_0} explicit
  AffinePerm w0 = ap(3, {1, 2, 3});
  HeckeElt c = kl.cprime(w0);
  auto s = [&](std::initializer_list<int> gens) {
    AffinePerm w = identity(3);
    for (auto it = std::rbegin(gens); it != std::rend(gens); ++it)
      w = left_mul_s(*it, w);
    return w;
  };
  HeckeElt expect =
      HeckeElt::t_basis(w0) +
      (HeckeElt::t_basis(s({1, 2})) + HeckeElt::t_basis(s({2, 1}))) *
          Laurent::u(-1) +
      (HeckeElt::t_basis(s({1})) + HeckeElt::t_basis(s({2}))) *
          Laurent::u(-2) +
      HeckeElt::unit(3) * Laurent::u(-3);
  CHECK(c == expect);
  // brute-force uniqueness: bar-invariant and triangular
  CHECK(bar(c) == c);
  CHECK(check_triangular(c, w0, true));
}

TEST_CASE("canonical basis bar invariance and triangularity") {
  KLContext kl(3);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    AffinePerm w = random_perm(rng, 3, 9);
    HeckeElt c = kl.cprime(w);
    CHECK(check_triangular(c, w, true));
    CHECK(bar(c) == c);
    // C'_{pi w} = T_pi C'_w
    CHECK(kl.cprime(left_mul_pi(w, 1)) == c.act_Tpi(1));
  }
}

TEST_CASE("mu symmetric under right star operations") {
  KLContext kl(3);
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 150) {
    AffinePerm x = random_perm(rng, 3, 8), w = random_perm(rng, 3, 8);
    if (degree(x) != degree(w)) continue;
    int i = 1;  // only star {s_1, s_2} exists for n = 3
    if (!in_DR(x, i) || !in_DR(w, i)) continue;
    Int m = kl.mu(x, w);
    Int ms = kl.mu(right_star(x, i), right_star(w, i));
    CHECK(m == ms);
    ++done;
  }
}

TEST_CASE("bernstein generators") {
  // Y_1 = T_pi T_1 for n = 2
  HeckeElt y1 = bernstein_y(2, 1);
  HeckeElt expect = HeckeElt::unit(2).act_Ts(1).act_Tpi(1);
  CHECK(y1 == expect);
  // Y^0 = 1
  CHECK(bernstein_monomial(3, {0, 0, 0}) == HeckeElt::unit(3));
  // Y^lambda Y^mu = Y^{lambda + mu} (commutation)
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    std::vector<long long> lam(3), mu(3);
    for (int i = 0; i < 3; ++i) {
      lam[i] = (long long)(rng() % 5) - 2;
      mu[i] = (long long)(rng() % 5) - 2;
    }
    std::vector<long long> sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = lam[i] + mu[i];
    CHECK(mul(bernstein_monomial(3, lam), bernstein_monomial(3, mu)) ==
          bernstein_monomial(3, sum));
  }
}

TEST_CASE("TY commutation relation") {
  // T_i Y^lam - Y^{s_i lam} T_i = (u - u^{-1}) Y^lam sum_{j=0}^{k-1} Y^{-j a}
  // for k = <lam, alpha_i^vee> >= 0, alpha_i = e_i - e_{i+1}
  int n = 3;
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    std::vector<long long> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = (long long)(rng() % 5) - 2;
    for (int i = 1; i < n; ++i) {
      long long k = lam[i - 1] - lam[i];
      std::vector<long long> slam = lam;
      std::swap(slam[i - 1], slam[i]);
      HeckeElt ti = HeckeElt::unit(n).act_Ts(i);
      HeckeElt lhs = mul(ti, bernstein_monomial(n, lam)) -
                     mul(bernstein_monomial(n, slam), ti);
      HeckeElt rhs(n);
      Laurent quad = Laurent::u(1) - Laurent::u(-1);
      if (k >= 0) {
        for (long long j = 0; j < k; ++j) {
          std::vector<long long> e = lam;
          e[i - 1] -= j;
          e[i] += j;
          rhs += bernstein_monomial(n, e) * quad;
        }
      } else {
        for (long long j = 0; j < -k; ++j) {
          std::vector<long long> e = slam;
          e[i - 1] -= j;
          e[i] += j;
          rhs -= bernstein_monomial(n, e) * quad;
        }
      }
      CHECK(lhs == rhs);
      if (k == 0) CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("elementary symmetric and Lusztig factorization") {
  int n = 3;
  KLContext kl(3);
  CHECK(elementary_sym_y(n, 1, 1) == bernstein_y(n, 1));
  AffinePerm w0 = ap(3, {1, 2, 3});
  HeckeElt cw0 = kl.cprime(w0);
  // theorem: u^{d(k-n)} e_d(Y_1..Y_k) C'_{w_0} = C'_{lJ(y^lam)^S w_0}
  for (int k = 1; k <= n; ++k)
    for (int d = 1; d <= k; ++d) {
      std::vector<long long> lam(n, 0);
      for (int q = k - d; q < k; ++q) lam[q] = 1;
      AffinePerm ylam = translate(lam, identity(n));
      AffinePerm m = factor_left_coset(ylam).first;
      AffinePerm w = mul(m, w0);
      HeckeElt lhs =
          mul(elementary_sym_y(n, d, k), cw0) * Laurent::u(d * (k - n));
      CHECK(lhs == kl.cprime(w));
    }
  // s_lambda(Y) C'_{w0} = C'_{w0 y^lambda} for lambda = (1,0,0)
  Partition lambda{1};
  AffinePerm w0ylam = mul(w0, translate({1, 0, 0}, identity(n)));
  HeckeElt lhs = mul(schur_y(n, lambda), cw0);
  HeckeElt rhs = kl.cprime(w0ylam);
  CHECK(lhs == rhs);
  CHECK(mul(cw0, schur_y(n, lambda)) == rhs);
}

TEST_CASE("iota embedding") {
  // iota(T_{s_1}) = T_{s_1}; iota(T_pi) = T_pi T_{n-1}
  HeckeElt ts1 = HeckeElt::t_basis(left_mul_s(1, identity(3)));
  CHECK(iota(ts1) == HeckeElt::t_basis(left_mul_s(1, identity(4))));
  HeckeElt tpi = HeckeElt::t_basis(left_mul_pi(identity(3), 1));
  CHECK(iota(tpi) == HeckeElt::unit(4).act_Ts(3).act_Tpi(1));
  // morphism property
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    AffinePerm a = random_perm(rng, 3, 6), b = random_perm(rng, 3, 6);
    HeckeElt A = HeckeElt::t_basis(a), B = HeckeElt::t_basis(b);
    CHECK(iota(mul(A, B)) == mul(iota(A), iota(B)));
  }
  // Y_i -> Y_i
  for (int i = 1; i <= 2; ++i)
    CHECK(iota(bernstein_y(3, i)) == bernstein_y(4, i));
  // group-level word rule matches algebra embedding on T_w, reduced case
  for (int t = 0; t < 40; ++t) {
    AffinePerm w = random_perm(rng, 3, 8);
    if (!is_positive(w)) continue;
    HeckeElt img = iota(HeckeElt::t_basis(w));
    AffinePerm wi = perm_iota(w);
    // the image need not be a single T, but its top term is T_{iota(w)}
    CHECK(!img.coeff(wi).is_zero());
  }
}

TEST_CASE("bernstein coordinates round trip") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    HeckeElt h(3);
    for (int j = 0; j < 3; ++j)
      h += HeckeElt::t_basis(random_perm(rng, 3, 6)) *
           Laurent::mono(int(rng() % 5) - 2, Int(1 + int(rng() % 3)));
    auto coords = bernstein_coords(h);
    HeckeElt back(3);
    for (auto& [bf, c] : coords)
      back += mul(bernstein_monomial(3, bf.lambda),
                  HeckeElt::t_basis(bf.fin)) *
              c;
    CHECK(back == h);
  }
}

TEST_CASE("positivity spot check") {
  KLContext kl(3);
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 25) {
    AffinePerm x = random_perm(rng, 3, 5), y = random_perm(rng, 3, 5);
    if (length(x) > 4 || length(y) > 4) continue;
    HeckeElt prod = mul(kl.cprime(x), kl.cprime(y));
    // expand in canonical basis by triangular elimination
    HeckeElt rem = prod;
    while (!rem.is_zero()) {
      const AffinePerm* best = nullptr;
      long long best_len = -1;
      for (const auto& [w, c] : rem.terms()) {
        long long l = length(w);
        if (l > best_len) {
          best = &w;
          best_len = l;
        }
      }
      Laurent c = rem.coeff(*best);
      CHECK(c.nonneg_coeffs());
      rem -= kl.cprime(*best) * c;
    }
    ++done;
  }
}

TEST_CASE("spherical module matches full engine") {
  // N_m coefficients equal P'_{m' w_0, m w_0} for n = 3
  int n = 3;
  KLContext kl(n);
  SphericalModule sph(n);
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 30) {
    AffinePerm w = random_perm(rng, n, 8);
    AffinePerm m = min_rep(w);
    if (length(m) > 7) continue;
    AffinePerm mw0 = max_of_min(m);
    HeckeElt c = kl.cprime(mw0);
    const auto& nm = sph.canonical(m);
    // compare: for every minimal m', coefficient of T_{m' w_0} in C'
    for (const auto& [mp, poly] : nm) {
      CHECK(c.coeff(max_of_min(mp)) == poly);
    }
    // and conversely every maximal-coset term of C' appears in N
    for (const auto& [x, poly] : c.terms()) {
      if (!is_max_left_coset(x)) continue;
      AffinePerm mx = min_rep(x);
      auto it = nm.find(mx);
      CHECK((it != nm.end() && it->second == poly));
    }
    ++done;
  }
}

TEST_CASE("restriction isomorphism for blocks") {
  // mu between C'_{v x} for fixed minimal-in-W_f-x rep x equals S_n mu data
  int n = 3;
  KLContext kl(n);
  auto wf = finite_weyl(n);
  // x: strictly decreasing window, small positive example
  AffinePerm x = ap(3, {7, 5, 3});  // decreasing: minimal in W_f x
  REQUIRE(is_min_right_coset(x));
  for (const auto& v1 : wf)
    for (const auto& v2 : wf) {
      AffinePerm a = mul(v1, x), b = mul(v2, x);
      uint32_t la = mask_S(left_descents(a)), lb = mask_S(left_descents(b));
      if ((la & ~lb) == 0 && (lb & ~la) == 0) continue;
      CHECK(kl.mu(a, b) == kl.mu(v1, v2));
    }
}

TEST_CASE("spherical budget error is distinguishable") {
  Budget tiny;
  tiny.max_length = 2;
  KLContext kl(3, tiny);
  AffinePerm w0 = ap(3, {1, 2, 3});
  CHECK_THROWS_AS((void)kl.cprime(w0), BudgetExceeded);
}
