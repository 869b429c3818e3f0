#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affhecke/catabolism.hpp"
#include "affhecke/spherical.hpp"
#include "affhecke/tableau.hpp"
#include "affhecke/wgraph.hpp"

namespace aff {

struct CoinvariantElement {
  AffinePerm w;        // window n*cl(v) + v
  Word v;              // standard word
  Word labeling;       // cocharge labeling of v
  long long deg = 0;   // cocharge(v)
  Tableau p;           // P(w)
};

// canonical basis data of the coinvariant quotient: n! elements
struct CoinvariantBasis {
  int n = 0;
  std::vector<CoinvariantElement> elements;
  int find(const AffinePerm& w) const;
};

CoinvariantBasis dsw0(int n);
// minimal coset representatives D^S (the lJ(y^beta)^S over descent monomials)
std::vector<AffinePerm> descent_min_reps(int n);

enum class GPBackend { tanisaki, cell, catabolism, pairing };
// cells of the Garsia-Procesi quotient: returns the surviving cell labels
std::vector<Tableau> gp_quotient(int n, const Partition& lambda,
                                 GPBackend backend,
                                 const CellDecomposition* coinv_cells = nullptr,
                                 SphericalModule* sph = nullptr);

// exact coinvariant cell structure (spherical engine)
CellDecomposition coinvariant_cells(int n, SphericalModule& sph);
CellDecomposition coinvariant_cells_combinatorial(int n);

struct CoinvariantCopy {
  AffinePerm w;                      // anchor, maximal in W_f w
  std::vector<long long> beta;       // dominant weight
  AffinePerm u2;                     // with Psi(u2) in D^S
  std::vector<AffinePerm> elements;  // {u w : u in D^S}
  std::vector<Tableau> labels;       // cell labels P(u w)
};
// factorization w = w_0 y^beta u2 of the two-sided-primitive form, found by
// bounded search with a uniqueness assertion
CoinvariantCopy coinvariant_copy(const AffinePerm& w);

struct Verdict {
  std::string claim;
  enum Status { verified, counterexample, budget_exceeded } status = verified;
  std::string witness;
  double seconds = 0;
  bool ok() const { return status == verified; }
  std::string status_str() const;
};

Verdict check_flip_a(int n);  // combinatorial part of the duality conjecture
Verdict check_flip_b(int n, SphericalModule& sph);  // mu(x,w) = mu(w+,x+)
Verdict check_pairing(int n, KLContext& kl);        // canonical pairing table

}  // namespace aff
