#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/partition.hpp"

namespace aff {

// Element of the extended affine symmetric group, stored as its inverted
// window word (w_1,...,w_n).  The infinite word satisfies w_{i+n} = w_i - n;
// window entries have pairwise distinct residues mod n.
struct AffinePerm {
  int n = 0;
  std::vector<long long> window;

  bool operator==(const AffinePerm& o) const {
    return n == o.n && window == o.window;
  }
  bool operator!=(const AffinePerm& o) const { return !(*this == o); }
  bool operator<(const AffinePerm& o) const {  // arbitrary total order
    if (n != o.n) return n < o.n;
    return window < o.window;
  }
};

struct APHash {
  size_t operator()(const AffinePerm& w) const {
    size_t h = 1469598103934665603ull ^ size_t(w.n);
    for (long long v : w.window) {
      h ^= size_t(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// residue map: the element of [1,n] congruent to v mod n
long long rsd(long long v, int n);

AffinePerm identity(int n);
bool valid_window(const AffinePerm& w, std::string* why = nullptr);

// value of the infinite word at an arbitrary position
long long window_at(const AffinePerm& w, long long i);

AffinePerm left_mul_s(int i, const AffinePerm& w);   // s_i * w, i in [0,n-1]
AffinePerm right_mul_s(const AffinePerm& w, int i);  // w * s_i
AffinePerm left_mul_pi(const AffinePerm& w, long long k = 1);   // pi^k * w
AffinePerm right_mul_pi(const AffinePerm& w, long long k = 1);  // w * pi^k
// y^lambda * w  (lambda given positionwise)
AffinePerm translate(const std::vector<long long>& lambda, const AffinePerm& w);

AffinePerm mul(const AffinePerm& a, const AffinePerm& b);
AffinePerm inverse(const AffinePerm& w);
AffinePerm psi(const AffinePerm& w);    // anti-automorphism
AffinePerm delta(const AffinePerm& w);  // automorphism s_i -> s_{n-i}

long long length(const AffinePerm& w);
long long degree(const AffinePerm& w);  // (sum w_i - i)/n
bool is_positive(const AffinePerm& w);

// descent masks: bit i set means s_i (i = 0 is the affine generator)
uint32_t left_descents(const AffinePerm& w);
uint32_t right_descents(const AffinePerm& w);
bool is_left_descent(const AffinePerm& w, int i);
bool is_right_descent(const AffinePerm& w, int i);
// restriction of a descent mask to S = {s_1,...,s_{n-1}}
inline uint32_t mask_S(uint32_t m) { return m & ~1u; }

bool bruhat_leq(const AffinePerm& x, const AffinePerm& w);
void clear_bruhat_cache();

// factor w = min * fin with min minimal in wW_S and fin in W_S  (J = S)
// "min" is the minimal left-coset representative breve/lJ(w)^S.
std::pair<AffinePerm, AffinePerm> factor_left_coset(const AffinePerm& w);
// factor w = fin * min with fin in W_S and min minimal in W_S w;
// fin is the standardization of the window (relative order).
std::pair<AffinePerm, AffinePerm> factor_right_coset(const AffinePerm& w);
// generic J given as a generator mask over K; descent-driven.
std::pair<AffinePerm, AffinePerm> factor_left_coset_J(const AffinePerm& w,
                                                      uint32_t jmask);

// the finite permutation with the same relative window order (Prop on words)
AffinePerm standardize(const AffinePerm& w);
bool is_min_right_coset(const AffinePerm& w);  // minimal in W_S w
bool is_max_right_coset(const AffinePerm& w);  // maximal in W_S w
bool is_min_left_coset(const AffinePerm& w);   // minimal in w W_S
bool is_max_left_coset(const AffinePerm& w);   // maximal in w W_S

// w as a reduced word in the s_i (greedy smallest index, s_0 last) plus a
// power of pi:  w = s_{i_1} ... s_{i_l} pi^d
struct GroupWord {
  std::vector<int> gens;
  long long pi_power = 0;
};
GroupWord group_word(const AffinePerm& w);
AffinePerm eval_group_word(int n, const GroupWord& gw);
std::string group_word_str(const GroupWord& gw);

// Bernstein form w = y^lambda * v with v in W_f (window residues)
struct BernsteinForm {
  std::vector<long long> lambda;
  AffinePerm fin;
};
BernsteinForm bernstein_form(const AffinePerm& w);
std::string bernstein_form_str(const BernsteinForm& bf);

// star operations; star pair {s_i, s_{i+1}} keyed by i (indices in [1,n-2])
bool in_DL(const AffinePerm& w, int i);
bool in_DR(const AffinePerm& w, int i);
AffinePerm left_star(const AffinePerm& w, int i);
AffinePerm right_star(const AffinePerm& w, int i);
// all Knuth / dual Knuth moves: (star index, image)
std::vector<std::pair<int, AffinePerm>> knuth_moves(const AffinePerm& w);
std::vector<std::pair<int, AffinePerm>> dual_knuth_moves(const AffinePerm& w);

// Greene partition of the poset P(w) on [n]
Partition greene_partition(const AffinePerm& w);

// group-level embedding of rank n-1 into rank n (word rule)
AffinePerm perm_iota(const AffinePerm& w);

// constructive reduced expression w = v_1 pi v_2 pi ... v_d pi v_{d+1},
// v_i in W_f, for w positive; returns generator tokens with -1 meaning pi
std::optional<std::vector<int>> positive_pi_expression(const AffinePerm& w);

// parsing and printing; tokens are INT or A.B (value A*n + B)
std::string token(long long v, int n, bool plain = false);
std::string window_str(const AffinePerm& w, bool plain = false);
AffinePerm parse_window(int n, const std::string& text);
long long parse_token(const std::string& tok, int n);

}  // namespace aff
