#include "affhecke/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aff {

Tableau::Tableau(int n, std::vector<std::vector<long long>> rows,
                 std::vector<int> inner)
    : n_(n), inner_(std::move(inner)), rows_(std::move(rows)) {
  inner_.resize(rows_.size(), 0);
  while (!rows_.empty() && rows_.back().empty()) {
    rows_.pop_back();
    inner_.pop_back();
  }
}

long long Tableau::at(int r, int c) const { return rows_[r - 1][c - 1 - row_begin(r)]; }

bool Tableau::has_cell(int r, int c) const {
  if (r < 1 || r > num_rows()) return false;
  return c > row_begin(r) && c <= row_end(r);
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += int(row.size());
  return s;
}

Partition Tableau::outer_shape() const {
  Partition p;
  for (int r = 1; r <= num_rows(); ++r) p.push_back(row_end(r));
  return p;
}

Partition Tableau::inner_shape() const {
  Partition p(inner_.begin(), inner_.end());
  return strip_zeros(std::move(p));
}

bool Tableau::is_skew() const {
  for (int x : inner_)
    if (x > 0) return true;
  return false;
}

Partition Tableau::shape() const {
  if (is_skew()) throw std::logic_error("shape of skew tableau");
  Partition p;
  for (const auto& row : rows_) p.push_back(int(row.size()));
  return p;
}

bool Tableau::valid(bool dual, std::string* why) const {
  Partition out = outer_shape(), in(inner_.begin(), inner_.end());
  in.resize(out.size(), 0);
  for (size_t r = 0; r + 1 < out.size(); ++r) {
    if (out[r] < out[r + 1] || in[r] < in[r + 1]) {
      if (why) *why = "shape not a skew diagram";
      return false;
    }
  }
  for (int r = 1; r <= num_rows(); ++r)
    for (int c = row_begin(r) + 2; c <= row_end(r); ++c) {
      bool ok = dual ? at(r, c - 1) < at(r, c) : at(r, c - 1) <= at(r, c);
      if (!ok) {
        if (why) *why = "row condition fails";
        return false;
      }
    }
  for (int r = 2; r <= num_rows(); ++r)
    for (int c = row_begin(r) + 1; c <= row_end(r); ++c) {
      if (!has_cell(r - 1, c)) continue;
      bool ok = dual ? at(r - 1, c) <= at(r, c) : at(r - 1, c) < at(r, c);
      if (!ok) {
        if (why) *why = "column condition fails";
        return false;
      }
    }
  return true;
}

std::vector<Cell> Tableau::outer_corners() const {
  std::vector<Cell> out;
  for (int r = 1; r <= num_rows(); ++r) {
    if (r < num_rows() && row_end(r + 1) >= row_end(r)) continue;
    if (rows_[r - 1].empty()) continue;
    out.emplace_back(r, row_end(r));
  }
  return out;
}

Word Tableau::row_word() const {
  Word w;
  for (int r = num_rows(); r >= 1; --r)
    for (long long v : rows_[r - 1]) w.push_back(v);
  return w;
}

Word Tableau::col_word() const {
  Word w;
  int width = 0;
  for (int r = 1; r <= num_rows(); ++r) width = std::max(width, row_end(r));
  for (int c = 1; c <= width; ++c)
    for (int r = num_rows(); r >= 1; --r)
      if (has_cell(r, c)) w.push_back(at(r, c));
  return w;
}

Tableau Tableau::transposed() const {
  if (is_skew()) throw std::logic_error("transpose of skew tableau");
  std::vector<std::vector<long long>> rows;
  int width = rows_.empty() ? 0 : int(rows_[0].size());
  rows.resize(width);
  for (int c = 0; c < width; ++c)
    for (const auto& row : rows_)
      if (c < int(row.size())) rows[c].push_back(row[c]);
  return Tableau(n_, std::move(rows));
}

Tableau Tableau::shifted_entries(long long a) const {
  Tableau t = *this;
  for (auto& row : t.rows_)
    for (auto& v : row) v += a;
  return t;
}

Tableau Tableau::slice_north(int r) const {
  std::vector<std::vector<long long>> rows(rows_.begin(),
                                           rows_.begin() + std::min(r, num_rows()));
  std::vector<int> inner(inner_.begin(),
                         inner_.begin() + std::min(r, num_rows()));
  return Tableau(n_, std::move(rows), std::move(inner));
}

Tableau Tableau::slice_south(int r) const {
  if (r >= num_rows()) return Tableau(n_, {});
  std::vector<std::vector<long long>> rows(rows_.begin() + r, rows_.end());
  std::vector<int> inner(inner_.begin() + r, inner_.end());
  return Tableau(n_, std::move(rows), std::move(inner));
}

Tableau Tableau::slice_west(int c) const {
  std::vector<std::vector<long long>> rows;
  std::vector<int> inner;
  for (int r = 1; r <= num_rows(); ++r) {
    std::vector<long long> row;
    for (int cc = row_begin(r) + 1; cc <= std::min(c, row_end(r)); ++cc)
      row.push_back(at(r, cc));
    rows.push_back(std::move(row));
    inner.push_back(std::min(row_begin(r), c));
  }
  return Tableau(n_, std::move(rows), std::move(inner));
}

Tableau Tableau::slice_east(int c) const {
  std::vector<std::vector<long long>> rows;
  std::vector<int> inner;
  for (int r = 1; r <= num_rows(); ++r) {
    std::vector<long long> row;
    for (int cc = std::max(c, row_begin(r)) + 1; cc <= row_end(r); ++cc)
      row.push_back(at(r, cc));
    if (row.empty() && row_end(r) <= c) continue;
    rows.push_back(std::move(row));
    inner.push_back(std::max(row_begin(r) - c, 0));
  }
  return Tableau(n_, std::move(rows), std::move(inner));
}

Tableau Tableau::restrict(const Partition& mu) const {
  std::vector<std::vector<long long>> rows;
  for (size_t r = 0; r < mu.size() && r < rows_.size(); ++r) {
    if (mu[r] == 0) break;
    if (int(rows_[r].size()) < mu[r] || inner_[r] != 0)
      throw std::invalid_argument("restrict: mu not contained");
    rows.emplace_back(rows_[r].begin(), rows_[r].begin() + mu[r]);
  }
  return Tableau(n_, std::move(rows));
}

Tableau Tableau::remove(const Partition& mu) const {
  std::vector<std::vector<long long>> rows;
  std::vector<int> inner;
  for (int r = 1; r <= num_rows(); ++r) {
    int cut = r <= int(mu.size()) ? mu[r - 1] : 0;
    if (cut < row_begin(r)) cut = row_begin(r);
    std::vector<long long> row;
    for (int c = cut + 1; c <= row_end(r); ++c) row.push_back(at(r, c));
    rows.push_back(std::move(row));
    inner.push_back(cut);
  }
  return Tableau(n_, std::move(rows), std::move(inner));
}

Tableau Tableau::entrywise_plus(const Tableau& o) const {
  if (outer_shape() != o.outer_shape() || is_skew() || o.is_skew())
    throw std::invalid_argument("entrywise_plus: shape mismatch");
  Tableau t = *this;
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t c = 0; c < rows_[r].size(); ++c)
      t.rows_[r][c] += o.rows_[r][c];
  return t;
}

long long Tableau::deg() const {
  int k = size();
  if (k == 0) return 0;
  long long s = 0;
  for (const auto& row : rows_)
    for (long long v : row) s += v;
  s -= (long long)(k) * (k + 1) / 2;
  return s / (n_ ? n_ : k);
}

bool Tableau::is_standard() const {
  if (is_skew()) return false;
  std::set<long long> vals;
  for (const auto& row : rows_) vals.insert(row.begin(), row.end());
  if (int(vals.size()) != size()) return false;
  if (vals.empty()) return true;
  if (*vals.begin() != 1 || *vals.rbegin() != size()) return false;
  // strict rows already needed: standard means all entries distinct
  return valid(false);
}

bool Tableau::is_semistandard(const Composition* content) const {
  if (!valid(false)) return false;
  for (const auto& row : rows_)
    for (long long v : row)
      if (v < 1) return false;
  if (content) {
    Composition c = this->content();
    Composition want = *content;
    while (!want.empty() && want.back() == 0) want.pop_back();
    if (c != want) return false;
  }
  return true;
}

bool Tableau::is_affine() const {
  if (n_ == 0 || is_skew()) return false;
  std::set<long long> res;
  for (const auto& row : rows_)
    for (long long v : row) res.insert(rsd(v, n_));
  return int(res.size()) == size() && valid(false);
}

bool Tableau::is_positive_affine() const {
  if (!is_affine()) return false;
  for (const auto& row : rows_)
    for (long long v : row)
      if (v <= 0) return false;
  return true;
}

Composition Tableau::content() const {
  long long mx = 0;
  for (const auto& row : rows_)
    for (long long v : row) mx = std::max(mx, v);
  Composition c(size_t(mx), 0);
  for (const auto& row : rows_)
    for (long long v : row) ++c[size_t(v) - 1];
  return c;
}

std::string Tableau::str(bool plain) const {
  std::ostringstream os;
  for (int r = 1; r <= num_rows(); ++r) {
    if (r > 1) os << "\n";
    for (int c = 1; c <= row_end(r); ++c) {
      if (c > 1) os << " ";
      if (c <= row_begin(r))
        os << ".";
      else
        os << (n_ ? token(at(r, c), n_, plain) : std::to_string(at(r, c)));
    }
  }
  return os.str();
}

namespace {
// bump position in a weakly increasing row: first index with entry "greater"
// than x under the tie rule (right_bigger: > x; left_bigger: >= x)
size_t bump_pos_row(const std::vector<long long>& row, long long x, Tie tie) {
  if (tie == Tie::right_bigger)
    return std::upper_bound(row.begin(), row.end(), x) - row.begin();
  return std::lower_bound(row.begin(), row.end(), x) - row.begin();
}
}  // namespace

Tableau insert_into(const Tableau& t, long long x, InsertMode mode, Tie tie,
                    std::vector<Cell>* path) {
  if (t.is_skew()) throw std::invalid_argument("insert into skew tableau");
  Tableau r = t;
  if (mode == InsertMode::row) {
    long long cur = x;
    for (int row = 1;; ++row) {
      if (row > r.num_rows()) {
        r.rows_.push_back({cur});
        r.inner_.push_back(0);
        if (path) path->emplace_back(row, 1);
        return r;
      }
      auto& vec = r.rows_[row - 1];
      size_t p = bump_pos_row(vec, cur, tie);
      if (p == vec.size()) {
        vec.push_back(cur);
        if (path) path->emplace_back(row, int(p + 1));
        return r;
      }
      std::swap(cur, vec[p]);
      if (path) path->emplace_back(row, int(p + 1));
    }
  }
  // column insertion: bump the topmost entry in the column that is
  // (right_bigger: >= x, left_bigger: > x); else append at column bottom
  long long cur = x;
  for (int col = 1;; ++col) {
    int rows_in_col = 0;
    for (int row = 1; row <= r.num_rows(); ++row)
      if (r.has_cell(row, col)) rows_in_col = row;
    int bump_row = -1;
    for (int row = 1; row <= rows_in_col; ++row) {
      long long e = r.at(row, col);
      bool bigger = tie == Tie::right_bigger ? e >= cur : e > cur;
      if (bigger) {
        bump_row = row;
        break;
      }
    }
    if (bump_row < 0) {
      int row = rows_in_col + 1;
      if (row > r.num_rows()) {
        r.rows_.emplace_back();
        r.inner_.push_back(0);
      }
      assert(int(r.rows_[row - 1].size()) == col - 1);
      r.rows_[row - 1].push_back(cur);
      if (path) path->emplace_back(row, col);
      return r;
    }
    std::swap(cur, r.rows_[bump_row - 1][col - 1]);
    if (path) path->emplace_back(bump_row, col);
  }
}

Tableau insert_word(const Word& w, InsertMode mode, Tie tie, int n) {
  Tableau t(n, {});
  for (long long x : w) t = insert_into(t, x, mode, tie);
  return t;
}

Tableau ptab(const AffinePerm& w) {
  Tableau t = insert_word(Word(w.window.begin(), w.window.end()),
                          InsertMode::row, Tie::right_bigger, w.n);
  return t;
}

std::pair<Tableau, long long> uninsert(const Tableau& t, int r, int c,
                                       Tie tie, std::vector<Cell>* path) {
  if (!t.has_cell(r, c) || t.has_cell(r + 1, c) || t.has_cell(r, c + 1))
    throw std::invalid_argument("uninsert: not an outer corner");
  Tableau q = t;
  long long cur = q.rows_[r - 1].back();
  q.rows_[r - 1].pop_back();
  if (q.rows_[r - 1].empty()) {
    q.rows_.pop_back();
    q.inner_.pop_back();
  }
  if (path) path->emplace_back(r, c);
  for (int row = r - 1; row >= 1; --row) {
    auto& vec = q.rows_[row - 1];
    // reverse bump: rightmost entry "smaller" than cur
    size_t p;
    if (tie == Tie::right_bigger) {
      p = std::lower_bound(vec.begin(), vec.end(), cur) - vec.begin();
      if (p == 0) throw std::logic_error("uninsert: no reverse bump");
      --p;
    } else {
      p = std::upper_bound(vec.begin(), vec.end(), cur) - vec.begin();
      if (p == 0) throw std::logic_error("uninsert: no reverse bump");
      --p;
    }
    std::swap(cur, vec[p]);
    if (path) path->emplace_back(row, int(p + 1));
  }
  return {q, cur};
}

Word cocharge_labeling(const Word& v) {
  int n = int(v.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[v[i]] = i;
  Word lab(n, 0);
  long cur = 0;
  for (int x = 2; x <= n; ++x) {
    if (pos[x] < pos[x - 1]) ++cur;  // x appears to the left of x-1
    lab[pos[x]] = cur;
  }
  return lab;
}

long cocharge(const Word& v) {
  Word lab = cocharge_labeling(v);
  long s = 0;
  for (long long x : lab) s += long(x);
  return s;
}

long cocharge(const Tableau& t) { return cocharge(t.row_word()); }

Tableau cocharge_tableau(const Tableau& t) {
  // cell-wise labels of a standard tableau; agrees with P(cl(rowword T))
  if (!t.is_standard())
    throw std::invalid_argument("cocharge_tableau: not standard");
  Word rw = t.row_word();
  Word lab = cocharge_labeling(rw);
  std::map<long long, long long> label_of;
  for (size_t i = 0; i < rw.size(); ++i) label_of[rw[i]] = lab[i];
  std::vector<std::vector<long long>> rows;
  for (int r = 1; r <= t.num_rows(); ++r) {
    std::vector<long long> row;
    for (int c = 1; c <= t.row_end(r); ++c) row.push_back(label_of[t.at(r, c)]);
    rows.push_back(std::move(row));
  }
  Tableau out(t.n(), std::move(rows));
  return out;
}

Tableau superstandard(const Partition& lambda) {
  std::vector<std::vector<long long>> rows;
  long long next = 1;
  for (int part : lambda) {
    std::vector<long long> row;
    for (int c = 0; c < part; ++c) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return Tableau(weight(lambda), std::move(rows));
}

Tableau garnir(int n, const Partition& lambda) {
  Tableau z = superstandard(lambda);
  z.set_n(n);
  return embed_standard(n, z);
}

Tableau standardize_tableau(const Tableau& t) {
  std::vector<std::pair<long long, Cell>> vals;
  for (int r = 1; r <= t.num_rows(); ++r)
    for (int c = t.row_begin(r) + 1; c <= t.row_end(r); ++c)
      vals.push_back({t.at(r, c), {r, c}});
  std::sort(vals.begin(), vals.end());
  std::map<Cell, long long> ranks;
  for (size_t i = 0; i < vals.size(); ++i) ranks[vals[i].second] = i + 1;
  std::vector<std::vector<long long>> rows(t.num_rows());
  std::vector<int> inner;
  for (int r = 1; r <= t.num_rows(); ++r) {
    inner.push_back(t.row_begin(r));
    for (int c = t.row_begin(r) + 1; c <= t.row_end(r); ++c)
      rows[r - 1].push_back(ranks[{r, c}]);
  }
  return Tableau(t.n(), std::move(rows), std::move(inner));
}

Tableau embed_standard(int n, const Tableau& t) {
  Tableau cl = cocharge_tableau(t);
  std::vector<std::vector<long long>> rows;
  for (int rr = 1; rr <= t.num_rows(); ++rr) {
    std::vector<long long> row;
    for (int cc = 1; cc <= t.row_end(rr); ++cc)
      row.push_back(t.at(rr, cc) + (long long)(n)*cl.at(rr, cc));
    rows.push_back(std::move(row));
  }
  return Tableau(n, std::move(rows));
}

Word embed_standard_word(int n, const Word& v) {
  Word lab = cocharge_labeling(v);
  Word w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + (long long)(n)*lab[i];
  return w;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Tableau dual_tableau(const Tableau& t) {
  // T = P(n cl(x) + x); return P(n cl(x^dagger) + x^dagger)
  int n = t.n();
  Tableau std_t = standardize_tableau(t);
  Word x = std_t.row_word();
  // check t really is the embedding of its standardization
  if (embed_standard(n, std_t) != t)
    throw std::invalid_argument("dual_tableau: not a coinvariant cell label");
  Word xd = reverse_word(x);
  return insert_word(embed_standard_word(n, xd), InsertMode::row,
                     Tie::right_bigger, n);
}

bool is_stackable(const Tableau& u) {
  if (u.is_skew() || !u.is_affine()) return false;
  Tableau s = stack(u);
  for (int r = 2; r <= s.num_rows(); ++r)
    if (s.at(r, 1) <= s.at(r - 1, 1)) return false;
  return true;
}

Tableau stack(const Tableau& u) {
  int n = u.n();
  std::vector<std::vector<long long>> rows;
  int width = u.num_rows() ? u.row_end(1) : 0;
  for (int c = 1; c <= width; ++c)
    for (int r = 1; r <= u.num_rows(); ++r)
      if (u.has_cell(r, c)) rows.push_back({u.at(r, c) + (long long)(n) * (c - 1)});
  return Tableau(n, std::move(rows));
}

std::string word_str(const Word& w, int n, bool plain) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << (n ? token(w[i], n, plain) : std::to_string(w[i]));
  }
  return os.str();
}

Word parse_word(int n, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) w.push_back(parse_token(tok, n));
  return w;
}

Tableau parse_tableau(int n, const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::vector<int> inner;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<long long> row;
    int off = 0;
    bool leading = true;
    while (ls >> tok) {
      if (tok == "." && leading) {
        ++off;
        continue;
      }
      leading = false;
      row.push_back(parse_token(tok, n));
    }
    rows.push_back(std::move(row));
    inner.push_back(off);
  }
  return Tableau(n, std::move(rows), std::move(inner));
}

}  // namespace aff
