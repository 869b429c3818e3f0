#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/affine_perm.hpp"
#include "affhecke/partition.hpp"

namespace aff {

using Word = std::vector<long long>;
using Cell = std::pair<int, int>;  // (row, col), 1-based

enum class Tie { right_bigger, left_bigger };
enum class InsertMode { row, column };

// A (possibly skew) tableau.  Rows weakly increase and columns strictly
// increase for the usual convention; the dual convention (rows strict,
// columns weak) arises from left-bigger insertion of dual words.
class Tableau {
 public:
  Tableau() = default;
  Tableau(int n, std::vector<std::vector<long long>> rows,
          std::vector<int> inner = {});

  int n() const { return n_; }
  void set_n(int n) { n_ = n; }
  bool empty() const { return rows_.empty(); }
  int num_rows() const { return int(rows_.size()); }
  int row_begin(int r) const { return r <= int(inner_.size()) ? inner_[r - 1] : 0; }
  int row_end(int r) const { return row_begin(r) + int(rows_[r - 1].size()); }
  long long at(int r, int c) const;  // 1-based, c in (row_begin, row_end]
  bool has_cell(int r, int c) const;
  int size() const;

  Partition outer_shape() const;
  Partition inner_shape() const;
  bool is_skew() const;
  Partition shape() const;  // pre: straight

  bool valid(bool dual = false, std::string* why = nullptr) const;

  std::vector<Cell> outer_corners() const;  // removable cells
  Word row_word() const;  // bottom row first, each left to right
  Word col_word() const;  // columns left to right, each bottom to top

  Tableau transposed() const;
  Tableau shifted_entries(long long a) const;  // a + T
  // horizontal slices (straight result for south; skew kept for north)
  Tableau slice_north(int r) const;
  Tableau slice_south(int r) const;  // rows r+1.. reindexed from 1
  // vertical slices
  Tableau slice_west(int c) const;
  Tableau slice_east(int c) const;  // cols c+1.. reindexed from 1
  // restriction to a straight sub-shape (pre: straight tableau)
  Tableau restrict(const Partition& mu) const;
  // remove the sub-tableau on mu, leaving a skew tableau
  Tableau remove(const Partition& mu) const;
  Tableau entrywise_plus(const Tableau& o) const;

  long long deg() const;  // (sum entries - n(n+1)/2)/n, for size-n fillings

  bool is_standard() const;                      // entries exactly 1..size
  bool is_semistandard(const Composition* content = nullptr) const;
  bool is_affine() const;  // distinct residues mod n
  bool is_positive_affine() const;
  Composition content() const;  // multiplicities of 1..max (pre: positive)

  bool operator==(const Tableau& o) const {
    return rows_ == o.rows_ && inner_ == o.inner_;
  }
  bool operator!=(const Tableau& o) const { return !(*this == o); }
  bool operator<(const Tableau& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    return inner_ < o.inner_;
  }

  std::string str(bool plain = false) const;

 private:
  int n_ = 0;
  std::vector<int> inner_;  // per-row offsets (empty entries on the left)
  std::vector<std::vector<long long>> rows_;
  friend struct TabHash;
  friend Tableau insert_into(const Tableau&, long long, InsertMode, Tie,
                             std::vector<Cell>*);
  friend std::pair<Tableau, long long> uninsert(const Tableau&, int, int, Tie,
                                                std::vector<Cell>*);
};

struct TabHash {
  size_t operator()(const Tableau& t) const {
    size_t h = 14695981039346656037ull;
    for (const auto& row : t.rows_) {
      h = h * 1099511628211ull ^ row.size();
      for (long long v : row) h = h * 1099511628211ull ^ size_t(v);
    }
    return h;
  }
};

// Insertion with optional bump-path recording.
Tableau insert_into(const Tableau& t, long long x, InsertMode mode, Tie tie,
                    std::vector<Cell>* path = nullptr);
Tableau insert_word(const Word& w, InsertMode mode = InsertMode::row,
                    Tie tie = Tie::right_bigger, int n = 0);
// insertion tableau of an affine permutation's window
Tableau ptab(const AffinePerm& w);

// reverse row-insertion starting at corner (r,c); returns (rest, value)
std::pair<Tableau, long long> uninsert(const Tableau& t, int r, int c,
                                       Tie tie = Tie::right_bigger,
                                       std::vector<Cell>* path = nullptr);

// cocharge labeling of a standard word (values 1..n each once)
Word cocharge_labeling(const Word& v);
long cocharge(const Word& v);
long cocharge(const Tableau& t);
// cocharge labeling tableau cl(T) = P(cl(rowword T)), same shape as T
Tableau cocharge_tableau(const Tableau& t);

// superstandard tableau of shape lambda (rows filled consecutively)
Tableau superstandard(const Partition& lambda);
// Garnir tableau G_lambda = n*cl(Z*) + Z*
Tableau garnir(int n, const Partition& lambda);

// standardization of a tableau (relative order of entries)
Tableau standardize_tableau(const Tableau& t);

// the coinvariant-label embedding T -> n*cl(T) + T on standard tableaux,
// and the same map on standard words
Tableau embed_standard(int n, const Tableau& t);
Word embed_standard_word(int n, const Word& v);

// dual element of a coinvariant cell label: T -> P(n*cl(x^dagger)+x^dagger)
Tableau dual_tableau(const Tableau& t);
Word reverse_word(const Word& w);

bool is_stackable(const Tableau& u);
Tableau stack(const Tableau& u);  // pre: stackable

std::string word_str(const Word& w, int n, bool plain = false);
Word parse_word(int n, const std::string& text);
Tableau parse_tableau(int n, const std::string& text);

}  // namespace aff
