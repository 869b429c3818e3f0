#pragma once

#include <map>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/spherical.hpp"
#include "affhecke/tableau.hpp"

namespace aff {

// Symmetric mu-edge data with descent sets over the vertex list.
struct WGraphData {
  int n = 0;
  std::vector<AffinePerm> verts;
  std::vector<uint32_t> descents;              // masks over K, bit i = s_i
  std::map<std::pair<int, int>, Int> mu;       // keyed by (min, max) index
  Int mu_at(int a, int b) const {
    auto it = mu.find({std::min(a, b), std::max(a, b)});
    return it == mu.end() ? Int(0) : it->second;
  }
};

// exact mu-data: all vertices maximal in their cosets w W_f (coset engine)
WGraphData wgraph_exact_spherical(const std::vector<AffinePerm>& verts,
                                  SphericalModule& sph);
// exact mu-data through the full T-basis engine (any vertices)
WGraphData wgraph_exact_full(const std::vector<AffinePerm>& verts,
                             KLContext& kl);

enum class CellMode { finite, positive_affine };

struct CellDecomposition {
  int n = 0;
  std::string backend;
  std::vector<AffinePerm> verts;
  std::vector<std::pair<int, int>> arcs;  // element-level gamma -> delta
  std::vector<std::vector<int>> cells;    // vertex indices, sorted
  std::vector<int> cell_of;               // vertex -> cell
  std::vector<Tableau> labels;            // P(w), constant on each cell
  std::vector<long long> degrees;
  std::vector<std::vector<bool>> reach;   // cell reachability (closure)
  std::vector<std::pair<int, int>> covers;  // transitive reduction

  int cell_count() const { return int(cells.size()); }
  int find_label(const Tableau& t) const;
  // delta-cell <= gamma-cell in the preorder (arc direction gamma -> delta)
  bool cell_leq(int delta, int gamma) const { return reach[gamma][delta]; }
};

// element-level arcs from mu-data: gamma -> delta when mu != 0 and
// L(delta) not contained in L(gamma); in positive_affine mode descents are
// restricted to S and pi^k corotation arcs within the vertex set are added.
std::vector<std::pair<int, int>> preorder_arcs(const WGraphData& g,
                                               CellMode mode);
CellDecomposition cells_from_wgraph(const WGraphData& g, CellMode mode,
                                    const std::string& backend_tag);
// Knuth classes + corotation arcs only (no mu data)
CellDecomposition cells_combinatorial(int n,
                                      const std::vector<AffinePerm>& verts);

// order interval {C : P-cell <= C <= Q-cell}
std::vector<int> csq_interval(const CellDecomposition& cd, const Tableau& q,
                              const Tableau& p);

// formal sum of t^deg s_shape
struct FrobeniusSeries {
  std::map<std::pair<long long, Partition>, long> terms;
  bool operator==(const FrobeniusSeries& o) const { return terms == o.terms; }
  std::string str() const;
};
FrobeniusSeries frobenius(const CellDecomposition& cd,
                          const std::vector<int>& cell_ids);
FrobeniusSeries frobenius_of(const std::vector<Tableau>& labels);

// star transport of a vertex set
std::vector<AffinePerm> star_transport_right(
    const std::vector<AffinePerm>& verts, int star_index);
std::vector<AffinePerm> star_transport_pi(const std::vector<AffinePerm>& verts,
                                          long long k);

}  // namespace aff
