#pragma once

#include "lspath/path.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lsp {

struct HeckeSearchOptions {
  HeckeMode mode;
  bool stay_dominant = false;      // prune as soon as the path leaves C^v
  bool vertex_folds_only = false;  // fold points restricted to alcove vertices
  int max_folds = -1;              // per factor; < 0: number of positive roots not orthogonal to the type
  std::size_t node_budget = 2'000'000;
  std::size_t max_results = 1;     // 0 = all
};

// complete == true means the search space under the fold cap was exhausted,
// so an empty result is a proof of nonexistence.
struct HeckeSearchResult {
  std::vector<GeneralizedPath> paths;
  bool complete = true;
  std::size_t nodes = 0;
};

// Generalized Hecke paths p_1 * ... * p_l of the given factor types starting
// at `from` and ending in `targets`. Fold points lie on walls whose
// reflections realize the chain condition of `options.mode`.
HeckeSearchResult search_generalized_hecke(const RootSystem& rs, const Covector& from,
                                           const std::vector<Covector>& types, const std::vector<Covector>& targets,
                                           const HeckeSearchOptions& options);

HeckeSearchResult search_hecke_paths(const RootSystem& rs, const Covector& from, const Covector& type,
                                     const std::vector<Covector>& targets, const HeckeSearchOptions& options);

}  // namespace lsp
