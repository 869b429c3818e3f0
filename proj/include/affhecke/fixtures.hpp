#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "affhecke/cocyclage.hpp"
#include "affhecke/tableau.hpp"
#include "affhecke/wgraph.hpp"

namespace aff::fix {

// ---- frozen data from the source figures ----

struct GraphN3Node {
  std::string expr;       // group expression tokens, e.g. "s1 s2 s0 s2 pi"
  std::string bernstein;  // e.g. "y2 s1 s2"
  std::string window;     // a.b tokens
};
// six canonical basis labels of the n = 3 coinvariants, top to bottom
const std::vector<GraphN3Node>& graph_n3_nodes();
// element-level preorder arrows, indices into graph_n3_nodes()
const std::vector<std::pair<int, int>>& graph_n3_arrows();

// the 26 cells of the n = 5 coinvariants: (tableau text, degree)
const std::vector<std::pair<std::string, int>>& affine5_cells();
// cover relations as index pairs into affine5_cells()
const std::vector<std::pair<int, int>>& affine5_covers();

struct SignTraceRow {
  std::string word, p, q;
};
const std::vector<SignTraceRow>& sign_trace_rows();  // n = 6 example
const std::string& sign_trace_word();
// recording columns of the cat-insertion run on the same word
const std::vector<std::string>& cat_trace_columns();

const std::vector<std::string>& sgnrec22();  // n = 4, lambda = (2,2)

// dual GP copy figure, n = 5, anchor (1 3 4 5 / 2)
const std::vector<std::string>& qsgnq_tableaux();
const std::vector<std::pair<int, int>>& qsgnq_edges();

// column catabolizability figure, n = 8
const std::string& colcat_anchor();
const std::vector<std::string>& colcat_set121();
const std::vector<std::string>& colcat_set31();
const std::vector<std::string>& colcat_set13();

// row catabolism worked example, n = 14
const std::string& rcat_anchor();   // Q
const std::string& rcat_subject();  // T
const std::vector<Composition>& rcat_eta_generators();  // before refinements

// atom copies figure, n = 6: six small posets (vertex texts and edges)
struct SmallPoset {
  std::vector<std::string> verts;
  std::vector<std::pair<int, int>> edges;
};
const std::vector<SmallPoset>& atomcopies_top();     // four csq inside coinv
const std::vector<SmallPoset>& atomcopies_bottom();  // two csq outside

// ssyt-in-pat figure, n = 8, eta = (3,2,2,1): grid[r][c], c = 0,1 are AT,
// c = 2 is a dual tableau
const std::vector<std::array<std::string, 3>>& gpd3_grid();

// ---- fixture registry ----

struct FixtureResult {
  bool pass = false;
  std::string detail;
};
struct Fixture {
  std::string name;
  std::function<FixtureResult()> run;
};
const std::vector<Fixture>& all_fixtures();

}  // namespace aff::fix
