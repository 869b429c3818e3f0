#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "affhecke/cocyclage.hpp"
#include "affhecke/coinvariants.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/tableau.hpp"
#include "affhecke/wgraph.hpp"

namespace aff {

using nlohmann::json;

json to_json(const AffinePerm& w);
AffinePerm perm_from_json(const json& j);
json to_json(const Laurent& p);
json to_json(const HeckeElt& h);
json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);
json to_json(const CellDecomposition& cd);
json to_json(const CCPoset& p);
json to_json(const Verdict& v, bool with_time = true);

std::string dot_of(const CellDecomposition& cd);
std::string dot_of(const CCPoset& p);

// simple persistent cache of KL polynomials keyed by windows
class KLDiskCache {
 public:
  explicit KLDiskCache(std::string path) : path_(std::move(path)) {}
  // merge the context cache to disk / preload from disk
  void save(const KLContext& kl_unused, int n,
            const std::vector<std::pair<AffinePerm, HeckeElt>>& rows) const;
  std::vector<std::pair<AffinePerm, HeckeElt>> load(int n) const;
  static constexpr int schema_version = 1;

 private:
  std::string path_;
};

}  // namespace aff
