#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affhecke/cocyclage.hpp"
#include "affhecke/tableau.hpp"

namespace aff {

// state of the sign insertion machine; P and Q are single columns stored
// top to bottom (P_i in the paper indexes from the bottom)
struct SignState {
  int n = 0;
  long long c = 0;
  Word x;
  std::vector<long long> p;  // insertion column
  std::vector<long long> q;  // recording column
  bool done() const { return x.empty(); }
};

SignState sign_start(int n, Word w);
// one step of the algorithm; returns true for an insertion step
bool sign_step(SignState& st);

struct SignPair {
  Tableau p;  // column AT
  Tableau q;  // column with strictly increasing positive entries
};
SignPair sign_insert(const AffinePerm& w);
SignPair sign_insert_word(int n, const Word& w);
// inverse; empty when the pair is inadmissible
std::optional<AffinePerm> sign_uninsert(const Tableau& p, const Tableau& q);

// P_sgn of any word inserting to the AT (well-defined)
Tableau sgnp_tableau(const Tableau& t);

// cat insertion: recording columns after each step, given the target
// P_sgn(w); passes are delimited by the word length after each pass
struct CatTrace {
  std::vector<std::vector<long long>> q_after_step;  // index 0 = start
  std::vector<long long> pass_ends;                  // d_1 < d_2 < ...
  std::vector<size_t> q_len_after_pass;
};
CatTrace cat_insert(const AffinePerm& w);
bool word_catabolizable(const AffinePerm& w, const Composition& eta);
bool word_catabolizable(int n, const Word& w, const Composition& eta);

// all words of the cells of a ccp (the Knuth classes of its vertices)
std::vector<AffinePerm> ccp_words(const std::vector<Tableau>& labels);

// sgnrec(lambda) = {Q_sgn(w) : w in the dual GP ccp of lambda}
std::vector<Tableau> sgnrec(int n, const Partition& lambda);

// all AT with sgnp = p, enumerated down to min_degree (reverse corotation
// search from p); returns cell labels
std::vector<Tableau> sgnpa_labels(const Tableau& p, long long min_degree);
CCPoset sgnpa(const Tableau& p, long long min_degree);

}  // namespace aff
