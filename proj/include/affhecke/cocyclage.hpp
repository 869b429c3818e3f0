#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affhecke/tableau.hpp"

namespace aff {

enum class CCClass { syt, ssyt, ssyt_dual, at };

using BumpPaths = std::pair<std::vector<Cell>, std::vector<Cell>>;

// one cocyclage move out of a tableau; colors are the corners of the source
// producing this target, each with its uninsertion and insertion paths
struct Cocyclage {
  Tableau to;
  std::map<Cell, BumpPaths> moves;
  std::set<Cell> colors() const;
};

// all cocyclages out of t for the given class
std::vector<Cocyclage> cocyclages(const Tableau& t, CCClass cls);

struct CCEdge {
  int from = 0, to = 0;
  std::map<Cell, BumpPaths> moves;
  std::set<Cell> colors() const;
};

struct CCPoset {
  CCClass cls = CCClass::at;
  int n = 0;
  std::vector<Tableau> verts;
  std::vector<long long> degrees;  // deg for AT; cocharge grading for words
  std::vector<CCEdge> edges;
  int find(const Tableau& t) const;
  std::vector<std::vector<int>> adj() const;
  bool operator==(const CCPoset& o) const;
};

CCPoset build_ccp(const std::vector<Tableau>& verts, CCClass cls);

// all SYT / SSYT(eta) vertex sets
std::vector<Tableau> all_syt(int n);
std::vector<Tableau> all_ssyt(const Composition& eta);
std::vector<Tableau> all_ssyt_dual(const Composition& eta);
CCPoset ccp_syt(int n);
CCPoset ccp_ssyt(const Composition& eta);       // pre: eta a partition
CCPoset ccp_ssyt_dual(const Composition& eta);  // dual convention

// the embedding SYT -> PAT, T -> n cl(T) + T (on tableaux)
Tableau embed_syt(int n, const Tableau& t);

// color- and shape-preserving isomorphism search; returns the vertex map
std::optional<std::vector<int>> ccp_isomorphism(const CCPoset& a,
                                                const CCPoset& b);
// strong isomorphism: additionally matches both bump paths on every edge
std::optional<std::vector<int>> strong_isomorphism(const CCPoset& a,
                                                   const CCPoset& b);

}  // namespace aff
