#include "affhecke/fixtures.hpp"

#include <array>
#include <set>
#include <sstream>

#include "affhecke/catabolism.hpp"
#include "affhecke/coinvariants.hpp"
#include "affhecke/sign_insertion.hpp"

namespace aff::fix {

namespace {
Tableau tab(int n, std::string text) {
  for (auto& c : text)
    if (c == '/') c = '\n';
  return parse_tableau(n, text);
}
}  // namespace

const std::vector<GraphN3Node>& graph_n3_nodes() {
  static const std::vector<GraphN3Node> nodes = {
      {"s1 s2 s1", "s1 s2 s1", "1 2 3"},
      {"s1 s2 s0 s2 pi", "y2 s1 s2", "1 13 2"},
      {"s2 s0 s2 pi", "y1 s2", "13 1 2"},
      {"s2 s0 s1 s0 pi^2", "y1 y3 s2 s1", "12 1 13"},
      {"s0 s1 s0 pi^2", "y1 y2 s1", "12 13 1"},
      {"s0 s1 s2 s1 pi^3", "y1^2 y2", "23 12 1"},
  };
  return nodes;
}

const std::vector<std::pair<int, int>>& graph_n3_arrows() {
  // a -> c, b <-> c, c -> e, b -> d, d <-> e, d -> f (0-based a..f)
  static const std::vector<std::pair<int, int>> arrows = {
      {0, 2}, {1, 2}, {2, 1}, {2, 4}, {1, 3}, {3, 4}, {4, 3}, {3, 5}};
  return arrows;
}

const std::vector<std::pair<std::string, int>>& affine5_cells() {
  static const std::vector<std::pair<std::string, int>> cells = {
      {"1 2 3 4 5", 0},        // 0  h26
      {"1 2 3 4/15", 1},       // 1  h25
      {"1 2 3 15/14", 2},      // 2  h23
      {"1 2 3/14 15", 2},      // 3  h24
      {"1 2 14 15/13", 3},     // 4  h19
      {"1 2 15/13 14", 3},     // 5  h21
      {"1 2 3/14/25", 3},      // 6  h22
      {"1 13 14 15/12", 4},    // 7  h13
      {"1 2 14/13 25", 4},     // 8  h17
      {"1 2 14/13/25", 4},     // 9  h18
      {"1 2/13 14/25", 4},     // 10 h20
      {"1 13 14/12 25", 5},    // 11 h11
      {"1 13 14/12/25", 5},    // 12 h12
      {"1 2 25/13/24", 5},     // 13 h15
      {"1 2/13 25/24", 5},     // 14 h16
      {"1 13 25/12 24", 6},    // 15 h7
      {"1 13 25/12/24", 6},    // 16 h9
      {"1 13/12 25/24", 6},    // 17 h10
      {"1 2/13/24/35", 6},     // 18 h14
      {"1 24 25/12/23", 7},    // 19 h5
      {"1 13/12 24/35", 7},    // 20 h6
      {"1 13/12/24/35", 7},    // 21 h8
      {"1 24/12 35/23", 8},    // 22 h3
      {"1 24/12/23/35", 8},    // 23 h4
      {"1 35/12/23/34", 9},    // 24 h2
      {"1/12/23/34/45", 10},   // 25 h1
  };
  return cells;
}

const std::vector<std::pair<int, int>>& affine5_covers() {
  static const std::vector<std::pair<int, int>> covers = {
      // same-degree covers
      {23, 22}, {20, 19}, {21, 20}, {16, 15}, {17, 16}, {12, 11},
      {18, 17}, {13, 11}, {14, 12}, {14, 13}, {8, 7},   {9, 8},
      {10, 9},  {5, 4},   {6, 5},   {3, 2},
      // degree-increasing covers
      {24, 25}, {22, 24}, {19, 23}, {15, 20}, {16, 21}, {11, 17},
      {7, 12},  {13, 18}, {8, 14},  {4, 9},   {5, 10},  {2, 6},
      {1, 3},   {0, 1}};
  return covers;
}

const std::string& sign_trace_word() {
  static const std::string w = "36 13 32 4 21 25";
  return w;
}

const std::vector<SignTraceRow>& sign_trace_rows() {
  static const std::vector<SignTraceRow> rows = {
      {"36 13 32 4 21 25", "", ""},
      {"36 13 32 4 21", "25", "1"},
      {"35 36 13 32 4", "21", "1"},
      {"31 35 36 13 32", "4", "1"},
      {"31 35 36 13", "4/32", "1/4"},
      {"42 31 35 36", "4/13", "1/4"},
      {"42 31 35", "4/13/36", "1/4/6"},
      {"46 42 31", "4/13/35", "1/4/6"},
      {"45 46 42", "4/13/31", "1/4/6"},
      {"45 46", "4/13/31/42", "1/4/6/9"},
      {"45", "4/13/31/42/46", "1/4/6/9/10"},
      {"56", "4/13/31/42/45", "1/4/6/9/10"},
      {"", "4/13/31/42/45/56", "1/4/6/9/10/12"},
  };
  return rows;
}

const std::vector<std::string>& cat_trace_columns() {
  static const std::vector<std::string> cols = {
      "",        "",         "",          "3",          "3",
      "3/5",     "3/5",      "3/5",       "3/5/8",      "3/5/8/9",
      "3/5/8/9", "3/5/8/9/11", "3/5/8/9/11/12"};
  return cols;
}

const std::vector<std::string>& sgnrec22() {
  static const std::vector<std::string> qs = {"1/3/5/6", "1/2/5/6", "1/3/4/5",
                                              "1/2/3/5", "1/2/4/5", "1/2/3/4"};
  return qs;
}

const std::vector<std::string>& qsgnq_tableaux() {
  static const std::vector<std::string> ts = {
      "1 3 4 5/2",      // 0
      "1 3 4/2 15",     // 1
      "1 3 4/2/15",     // 2
      "1 3 15/2 14",    // 3
      "1 3 15/2/14",    // 4
      "1 3/2 15/14",    // 5
      "1 14 15/2/13",   // 6
      "1 3/2 14/25",    // 7
      "1 3/2/14/25",    // 8
      "1 14/2 25/13",   // 9
      "1 14/2/13/25",   // 10
      "1 25/2/13/24",   // 11
      "1/2/13/24/35",   // 12
  };
  return ts;
}

const std::vector<std::pair<int, int>>& qsgnq_edges() {
  static const std::vector<std::pair<int, int>> es = {
      {0, 2}, {1, 4}, {1, 5}, {2, 5},  {3, 6},   {3, 7},  {4, 8},
      {5, 6}, {6, 10}, {7, 9}, {8, 10}, {9, 11}, {10, 11}, {11, 12}};
  return es;
}

const std::string& colcat_anchor() {
  static const std::string q = "1 4 6 8/2 5 7/3";
  return q;
}

const std::vector<std::string>& colcat_set121() {
  static const std::vector<std::string> ts = {
      "1 4 6 8/2 5 7/3",      "1 4 6/2 5 7/3 18",  "1 4 6/2 5 7/3/18",
      "1 4 7 8/2 5/3/16",     "1 4 7/2 5 18/3/16", "1 4 7/2 5/3 18/16",
      "1 4 7/2 5/3/16/18",    "1 4 18/2 5/3/16/17", "1 4/2 5/3 18/16/17",
      "1 4/2 5/3/16/17/28"};
  return ts;
}

const std::vector<std::string>& colcat_set31() {
  static const std::vector<std::string> ts = {
      "1 4 6 8/2 5 7/3", "1 4 6/2 5 7/3 18", "1 4 6/2 5 7/3/18"};
  return ts;
}

const std::vector<std::string>& colcat_set13() {
  static const std::vector<std::string> ts = {
      "1 4 6 8/2 5 7/3", "1 4 6/2 5 7/3/18", "1 4 7 8/2 5/3/16",
      "1 4 7/2 5/3/16/18"};
  return ts;
}

const std::string& rcat_anchor() {
  static const std::string q = "1 2 3/14 15 16/27 28 29/3A 3B 3C/4D 4E";
  return q;
}

const std::string& rcat_subject() {
  static const std::string t = "1 2 3 17 2B/14 15 16 2A/28 29 3E/3C 3D";
  return t;
}

const std::vector<Composition>& rcat_eta_generators() {
  static const std::vector<Composition> gens = {{2, 2, 1}, {2, 1, 2}, {1, 2, 2}};
  return gens;
}

const std::vector<SmallPoset>& atomcopies_top() {
  static const std::vector<SmallPoset> ps = {
      {{"1 2 3 4 16/15", "1 2 3 16/14 15", "1 2 3 4/15/26",
        "1 2 3/14 15/26"},
       {{1, 3}, {2, 3}, {0, 2}}},
      {{"1 2 3 15 16/14", "1 2 3 15/14 26", "1 2 3 15/14/26",
        "1 2 3/14 26/25"},
       {{2, 3}, {1, 3}, {0, 2}}},
      {{"1 2 14 15 16/13", "1 2 14 15/13 26", "1 2 14 15/13/26",
        "1 2 14/13 26/25"},
       {{1, 3}, {2, 3}, {0, 2}}},
      {{"1 13 14 15 16/12", "1 13 14 15/12 26", "1 13 14 15/12/26",
        "1 13 14/12 26/25"},
       {{1, 3}, {2, 3}, {0, 2}}},
  };
  return ps;
}

const std::vector<SmallPoset>& atomcopies_bottom() {
  static const std::vector<SmallPoset> ps = {
      {{"1 2 3 4 5/6", "1 2 3 4/6 15", "1 2 3 4/6/15", "1 2 3/6 15/14"},
       {{2, 3}, {1, 3}, {0, 2}}},
      {{"1 2 4 5 6/13", "1 2 4 5/13 16", "1 2 4 5/13/16", "1 2 4/13 16/15"},
       {{1, 3}, {2, 3}, {0, 2}}},
  };
  return ps;
}

const std::vector<std::array<std::string, 3>>& gpd3_grid() {
  static const std::vector<std::array<std::string, 3>> grid = {
      {{"1 4 6 8/2 5 7/3", "1 14 26 38/2 15 27/3", "1 2 3 4/1 2 3/1"}},
      {{"1 4 7/2 5/3 18/16", "1 14 27/2 15/3 48/36", "1 2 3/1 2/1 4/3"}},
      {{"1 5 7/2 16 18/3/14", "1 15 27/2 36 48/3/24", "1 2 3/1 3 4/1/2"}},
      {{"1 5 7/2/3/14/18/26", "1 15 36/2/3/24/37/48", "1 2 3/1/1/2/3/4"}},
      {{"1 5/2 18/3/14/17/26", "1 15/2 48/3/24/37/46", "1 2/1 4/1/2/3/3"}},
  };
  return grid;
}

// ---------------------------------------------------------------- fixtures

namespace {

FixtureResult ok() { return {true, ""}; }
FixtureResult fail(std::string why) { return {false, std::move(why)}; }

FixtureResult fx_word_table() {
  AffinePerm w = parse_window(4, "8 3 5 2");
  if (left_mul_pi(w, 1).window != std::vector<long long>{6, 8, 3, 5})
    return fail("pi * (8 3 5 2)");
  if (right_mul_pi(w, 1).window != std::vector<long long>{9, 4, 6, 3})
    return fail("(8 3 5 2) * pi");
  if (length(w) != 3) return fail("length(8 3 5 2)");
  AffinePerm psi_w = psi(w);
  if (psi_w.window != std::vector<long long>{7, 4, 2, 5})
    return fail("Psi(8 3 5 2)");
  return ok();
}

FixtureResult fx_cocharge_examples() {
  if (cocharge_labeling({6, 1, 4, 3, 5, 2}) != Word{3, 0, 2, 1, 2, 0})
    return fail("cl(614352)");
  if (cocharge_labeling({1, 6, 8, 4, 2, 9, 5, 7, 3}) !=
      Word{0, 2, 3, 1, 0, 3, 1, 2, 0})
    return fail("cl(168429573)");
  if (embed_standard_word(9, {1, 6, 8, 4, 2, 9, 5, 7, 3}) !=
      parse_word(9, "1 26 38 14 2 39 15 27 3"))
    return fail("embedding of 168429573");
  return ok();
}

FixtureResult fx_knuth_example() {
  AffinePerm w = parse_window(5, "13 1 42 14 5");
  bool kt = false, dkt = false;
  for (auto& [i, img] : knuth_moves(w))
    if (window_str(img) == "1.3 4.2 1 1.4 5") kt = true;
  for (auto& [i, img] : dual_knuth_moves(w))
    if (window_str(img) == "1.3 1 4.2 1.5 4") dkt = true;
  if (!kt) return fail("KT image 13 42 1 14 5 missing");
  if (!dkt) return fail("DKT image 13 1 42 15 4 missing");
  return ok();
}

FixtureResult fx_garnir() {
  if (garnir(3, {2, 1}) != tab(3, "1 2/1.3")) return fail("G_(2,1)");
  if (garnir(4, {1, 1, 1, 1}) != tab(4, "1/1.2/2.3/3.4")) return fail("G_1^4");
  for (int n : {3, 4, 5, 6}) {
    if (dual_garnir(n, {n}) != garnir(n, {n})) return fail("dual G_(n)");
    Partition col(n, 1);
    if (dual_garnir(n, col) != garnir(n, col)) return fail("dual G_(1^n)");
  }
  return ok();
}

FixtureResult fx_stackable() {
  Tableau u = tab(6, "1 4 6 15/2 13");
  if (!is_stackable(u)) return fail("paper stackable example");
  if (stack(u) != tab(6, "1/2/14/23/26/45")) return fail("stack entries");
  for (int n = 2; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      Tableau dg = dual_garnir(n, lam);
      if (!is_stackable(dg)) return fail("dual garnir not stackable");
      if (stack(dg) != garnir(n, Partition(n, 1)))
        return fail("stack of dual garnir is not G_{1^n}");
    }
  return ok();
}

FixtureResult fx_graph_n3() {
  const auto& nodes = graph_n3_nodes();
  SphericalModule sph(3);
  CellDecomposition cd = coinvariant_cells(3, sph);
  std::vector<AffinePerm> want;
  for (const auto& node : nodes) {
    AffinePerm w = parse_window(3, node.window);
    want.push_back(w);
    // the listed group expression evaluates to the window and is reduced
    GroupWord gw;
    std::istringstream is(node.expr);
    std::string tok;
    long long scount = 0;
    while (is >> tok) {
      if (tok.rfind("pi", 0) == 0) {
        gw.pi_power = tok == "pi" ? 1 : std::stoll(tok.substr(3));
      } else {
        gw.gens.push_back(std::stoi(tok.substr(1)));
        ++scount;
      }
    }
    if (eval_group_word(3, gw) != w) return fail("expr mismatch " + node.expr);
    if (scount != length(w)) return fail("expr not reduced " + node.expr);
    // Bernstein label
    if (bernstein_form_str(bernstein_form(w)) != node.bernstein)
      return fail("bernstein label " + node.bernstein);
  }
  // element sets agree
  std::set<std::vector<long long>> have;
  for (const auto& v : cd.verts) have.insert(v.window);
  for (const auto& w : want)
    if (!have.count(w.window)) return fail("missing window");
  if (have.size() != want.size()) return fail("element count");
  // displayed arrows = mu arcs + single corotations exactly
  std::set<std::pair<int, int>> got;
  std::map<std::vector<long long>, int> idx;
  for (size_t i = 0; i < want.size(); ++i) idx[want[i].window] = int(i);
  for (auto& [a, b] : cd.arcs) {
    // keep only single-pi corotation arcs and mu arcs
    const AffinePerm &wa = cd.verts[a], &wb = cd.verts[b];
    if (degree(wb) == degree(wa) + 1 && left_mul_pi(wa, 1) != wb) continue;
    if (degree(wb) > degree(wa) + 1) continue;
    got.insert({idx.at(wa.window), idx.at(wb.window)});
  }
  std::set<std::pair<int, int>> want_arrows(graph_n3_arrows().begin(),
                                            graph_n3_arrows().end());
  if (got != want_arrows) {
    std::ostringstream os;
    os << "arrows differ; got:";
    for (auto& [a, b] : got) os << " " << a << "->" << b;
    return fail(os.str());
  }
  // cells: shapes (3),(21),(21),(111) at degrees 0..3 with chain covers
  if (cd.cell_count() != 4) return fail("cell count");
  std::vector<std::pair<long long, Partition>> cells_got;
  for (int c = 0; c < 4; ++c)
    cells_got.push_back({cd.degrees[c], cd.labels[c].shape()});
  std::sort(cells_got.begin(), cells_got.end());
  std::vector<std::pair<long long, Partition>> cells_want = {
      {0, {3}}, {1, {2, 1}}, {2, {2, 1}}, {3, {1, 1, 1}}};
  if (cells_got != cells_want) return fail("cell shapes/degrees");
  if (cd.covers.size() != 3) return fail("cover count");
  for (auto& [a, b] : cd.covers)
    if (cd.degrees[b] != cd.degrees[a] + 1) return fail("cover degrees");
  return ok();
}

FixtureResult fx_sign_trace() {
  int n = 6;
  Word w = parse_word(n, sign_trace_word());
  SignState st = sign_start(n, w);
  const auto& rows = sign_trace_rows();
  for (size_t step = 0; step < rows.size(); ++step) {
    Word xw = parse_word(n, rows[step].word);
    Word pw, qw;
    if (!rows[step].p.empty()) {
      std::string s = rows[step].p;
      for (auto& ch : s)
        if (ch == '/') ch = ' ';
      pw = parse_word(n, s);
    }
    if (!rows[step].q.empty()) {
      std::string s = rows[step].q;
      for (auto& ch : s)
        if (ch == '/') ch = ' ';
      for (long long v : parse_word(0, s)) qw.push_back(v);
    }
    if (st.x != xw) return fail("word at step " + std::to_string(step));
    if (Word(st.p.begin(), st.p.end()) != pw)
      return fail("P at step " + std::to_string(step));
    if (Word(st.q.begin(), st.q.end()) != qw)
      return fail("Q at step " + std::to_string(step));
    if (!st.done()) sign_step(st);
  }
  if (!st.done()) return fail("trace should end after 12 steps");
  return ok();
}

FixtureResult fx_cat_trace() {
  int n = 6;
  AffinePerm w = parse_window(n, sign_trace_word());
  CatTrace tr = cat_insert(w);
  const auto& want = cat_trace_columns();
  if (tr.q_after_step.size() != want.size()) return fail("trace length");
  for (size_t i = 0; i < want.size(); ++i) {
    Word qw;
    if (!want[i].empty()) {
      std::string s = want[i];
      for (auto& ch : s)
        if (ch == '/') ch = ' ';
      qw = parse_word(0, s);
    }
    if (Word(tr.q_after_step[i].begin(), tr.q_after_step[i].end()) != qw)
      return fail("recording column after step " + std::to_string(i));
  }
  if (!word_catabolizable(w, {2, 2, 1, 1})) return fail("(2,2,1,1) should hold");
  if (word_catabolizable(w, {2, 2, 2})) return fail("(2,2,2) should fail");
  return ok();
}

FixtureResult fx_sign_example_dsw0() {
  // sgnp(v) = G_{1^n} for all v in D^S w_0, and the stated uniqueness
  int n = 6;
  Tableau g1 = garnir(n, Partition(n, 1));
  AffinePerm w = parse_window(n, sign_trace_word());
  SignPair pw = sign_insert(w);
  CoinvariantBasis b = dsw0(n);
  AffinePerm vexp = parse_window(n, "36 12 24 1 13 25");
  int matches = 0;
  for (const auto& e : b.elements) {
    SignPair sp = sign_insert(e.w);
    if (sp.p != g1) return fail("sgnp not G_{1^n} on D^S w_0");
    if (sp.q == pw.q) {
      ++matches;
      if (e.w != vexp) return fail("unique match is not the stated v");
    }
  }
  if (matches != 1) return fail("uniqueness of Q_sgn match");
  return ok();
}

FixtureResult fx_sgnrec22() {
  auto got = sgnrec(4, {2, 2});
  std::set<Tableau> want;
  for (const auto& s : sgnrec22()) want.insert(tab(4, s));
  if (std::set<Tableau>(got.begin(), got.end()) != want)
    return fail("sgnrec((2,2)) set");
  return ok();
}

FixtureResult fx_qsgnq() {
  Tableau u = tab(5, "1 3 4 5/2");
  CCPoset got = dgp_copy(u);
  std::vector<Tableau> verts;
  for (const auto& s : qsgnq_tableaux()) verts.push_back(tab(5, s));
  CCPoset want = build_ccp(verts, CCClass::at);
  // check the drawn edges are exactly the cocyclage edges
  std::set<std::pair<int, int>> we(qsgnq_edges().begin(), qsgnq_edges().end());
  std::set<std::pair<int, int>> ge;
  for (const auto& e : want.edges) ge.insert({e.from, e.to});
  if (we != ge) return fail("figure edges are not the cocyclage edges");
  if (!(got == want)) return fail("dgp copy differs from the figure");
  auto iso = ccp_isomorphism(got, dgp_ccp(5, {4, 1}));
  if (!iso) return fail("no iso to the dual GP ccp of (4,1)");
  return ok();
}

FixtureResult fx_colcat() {
  int n = 8;
  Tableau q = tab(n, colcat_anchor());
  std::set<Tableau> want121, want31, want13;
  for (const auto& s : colcat_set121()) want121.insert(tab(n, s));
  for (const auto& s : colcat_set31()) want31.insert(tab(n, s));
  for (const auto& s : colcat_set13()) want13.insert(tab(n, s));
  // enumerate candidates from the sgnp universe of the anchor
  if (!is_stackable(q)) return fail("anchor not stackable");
  Tableau p = stack(q);
  std::set<Tableau> uni;
  for (const Tableau& t : sgnpa_labels(p, q.deg())) uni.insert(t);
  for (const Tableau& t : want121)
    if (!uni.count(t)) return fail("figure member outside sgnp universe");
  auto compute = [&](const Composition& eta) {
    std::set<Tableau> out;
    for (const Tableau& t : uni)
      if (is_col_catabolizable(t, q, eta)) out.insert(t);
    return out;
  };
  if (compute({1, 2, 1}) != want121) return fail("(1,2,1) set");
  if (compute({3, 1}) != want31) return fail("(3,1) set");
  if (compute({1, 3}) != want13) return fail("(1,3) set");
  return ok();
}

FixtureResult fx_rcat() {
  int n = 14;
  Tableau q = tab(n, rcat_anchor());
  Tableau t = tab(n, rcat_subject());
  // catabolizable exactly for the three generators and their refinements
  std::set<Composition> want;
  std::function<void(const Composition&, size_t, Composition&)> refine =
      [&](const Composition& base, size_t i, Composition& cur) {
        if (i == base.size()) {
          want.insert(cur);
          return;
        }
        for (const Composition& part : compositions_of(base[i])) {
          for (int p : part) cur.push_back(p);
          refine(base, i + 1, cur);
          cur.resize(cur.size() - part.size());
        }
      };
  for (const Composition& gen : rcat_eta_generators()) {
    Composition cur;
    refine(gen, 0, cur);
  }
  for (const Composition& eta : compositions_of(5)) {
    bool got = is_row_catabolizable(t, q, eta);
    if (got != bool(want.count(eta)))
      return fail("eta " + part_str(eta) + (got ? " unexpected" : " missing"));
  }
  return ok();
}

FixtureResult fx_skew_link() {
  auto link = skew_link({5, 4, 3, 3, 2, 1}, {8, 6, 4});
  if (!link) return fail("no skew link");
  if (link->inner != Partition{3, 2, 1}) return fail("nu");
  if (link->outer != Partition{8, 6, 4, 3, 2, 1}) return fail("Theta");
  // interval example
  SkewLink ex;
  ex.lambda = {4, 4, 4, 4, 3, 3, 3, 2, 1, 1};
  ex.inner = {3, 3, 2, 1};
  ex.outer = {7, 7, 6, 5, 3, 3, 3, 2, 1, 1};
  Partition oc = conjugate(ex.outer), nc = conjugate(ex.inner);
  nc.resize(oc.size(), 0);
  Partition col(oc.size());
  for (size_t c = 0; c < oc.size(); ++c) col[c] = oc[c] - nc[c];
  ex.mu = conjugate(col);
  auto ivs = link_intervals(ex);
  std::vector<std::pair<int, int>> want = {{4, 5}, {4, 5}, {5, 5}, {5, 6},
                                           {6, 6}, {5, 5}, {4, 4}, {3, 3},
                                           {2, 2}, {1, 1}};
  if (ivs != want) return fail("interval list");
  // theta^4 example
  SkewLink tk = theta_k({4, 3, 2, 2, 2, 1}, 4);
  if (tk.inner != Partition{5, 2, 1}) return fail("theta^4 nu");
  if (tk.outer != Partition{9, 5, 3, 2, 2, 1}) return fail("theta^4 Theta");
  return ok();
}

FixtureResult fx_atomcopies() {
  int n = 6;
  // leftmost top poset is the Chen ccp for U = (1 2 3 4 16 / 15)
  auto link = skew_link({3, 2, 1}, {5, 1});
  if (!link) return fail("no link for (3,2,1),(5,1)");
  CCPoset chen = chen_ccp(n, *link);
  const auto& top = atomcopies_top();
  auto make = [&](const SmallPoset& sp) {
    std::vector<Tableau> vs;
    for (const auto& s : sp.verts) vs.push_back(tab(n, s));
    return build_ccp(vs, CCClass::at);
  };
  CCPoset p1 = make(top[0]);
  if (!(chen == p1)) return fail("chen ccp differs from top-left poset");
  // the drawn edges of each small poset are its cocyclage edges
  auto edges_match = [&](const SmallPoset& sp) {
    CCPoset p = make(sp);
    std::set<std::pair<int, int>> got;
    for (const auto& e : p.edges) got.insert({e.from, e.to});
    return got == std::set<std::pair<int, int>>(sp.edges.begin(),
                                                sp.edges.end());
  };
  for (const auto& sp : top)
    if (!edges_match(sp)) return fail("top row edges");
  for (const auto& sp : atomcopies_bottom())
    if (!edges_match(sp)) return fail("bottom row edges");
  // star transport identity: right poset = (Gamma pi)^{*1 *2}
  const auto& bot = atomcopies_bottom();
  std::vector<Tableau> lverts, rverts;
  for (const auto& s : bot[0].verts) lverts.push_back(tab(n, s));
  for (const auto& s : bot[1].verts) rverts.push_back(tab(n, s));
  std::vector<AffinePerm> words = ccp_words(lverts);
  std::vector<AffinePerm> moved = star_transport_pi(words, 1);
  moved = star_transport_right(moved, 4);  // {s5, s4}
  moved = star_transport_right(moved, 3);  // {s4, s3}
  std::set<Tableau> got;
  for (const auto& w : moved) got.insert(ptab(w));
  if (got != std::set<Tableau>(rverts.begin(), rverts.end()))
    return fail("star transport image");
  return ok();
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fs = {
      {"word-table", fx_word_table},
      {"cocharge-examples", fx_cocharge_examples},
      {"knuth-example", fx_knuth_example},
      {"garnir", fx_garnir},
      {"stackable", fx_stackable},
      {"wgraph-n3", fx_graph_n3},
      {"sign-trace", fx_sign_trace},
      {"cat-trace", fx_cat_trace},
      {"sign-dsw0", fx_sign_example_dsw0},
      {"sgnrec-22", fx_sgnrec22},
      {"qsgnq", fx_qsgnq},
      {"column-catabolizable", fx_colcat},
      {"row-catabolism", fx_rcat},
      {"skew-link", fx_skew_link},
      {"atom-copies", fx_atomcopies},
  };
  return fs;
}

}  // namespace aff::fix
