#pragma once

#include "lspath/repthy.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lsp {

struct ScanOptions {
  std::int64_t bound = 2;  // coordinates of lambda, mu, nu range over 0..bound
  int nmax = 2;
  int jobs = 1;
  std::size_t cone_budget = 5'000'000;
};

struct TripleRecord {
  std::array<Covector, 3> triple;
  std::vector<bool> nonzero;  // index N-1, N = 1..nmax
  std::vector<bool> cone;     // membership of (N lambda, N mu, N nu)
  bool nonzero_k = false;     // at k_phi
  bool nonzero_k2 = false;    // at k_phi^2
  bool theorem_ok = true;     // some N nonzero implies nonzero at k^2
  bool cone_saturated = true;  // some N in the cone implies N = 1 in the cone
  bool cone_dilation_ok = true;  // cone membership stable under dilation
  bool remark_ok = true;      // nonzero at N implies cone membership at N
  bool k_conjecture_ok = true;  // some N nonzero implies nonzero at k
  bool complete = true;       // every cone search exhausted its space
  bool any_nonzero() const;
  int first_nonzero() const;  // smallest N, or 0
};

struct ScanReport {
  std::string type;
  ScanOptions options;
  std::int64_t k = 1;
  std::vector<TripleRecord> records;  // sorted by triple, independent of jobs
  std::size_t theorem_violations = 0;
  std::size_t cone_violations = 0;     // saturation, dilation or remark failures
  std::size_t k_conjecture_failures = 0;
  std::size_t incomplete = 0;
  std::size_t nonzero_triples = 0;
};

// Every dominant triple with coordinates <= bound and lambda + mu + nu in Q^vee.
std::vector<std::array<Covector, 3>> scan_triples(const RootSystem& rs, std::int64_t bound);

TripleRecord scan_triple(const RootSystem& rs, const std::array<Covector, 3>& t, const ScanOptions& opt);
ScanReport saturation_scan(const RootSystem& rs, const ScanOptions& opt);

struct PipelineStage {
  std::string name;
  bool ok = true;
  std::string note;
  std::vector<PLPath> paths;  // for generalized paths: the concatenation
};

struct PipelineOptions {
  std::size_t node_budget = 2'000'000;
  std::size_t unfold_budget = 200'000;  // search outside C^v before folding
  bool oracle_check = true;  // recompute the invariant at k^2 from LS witnesses
};

struct PipelineTrace {
  std::array<Covector, 3> triple;
  int n = 1;
  std::int64_t k = 1;
  std::vector<PipelineStage> stages;
  bool ok = true;              // every stage invariant held
  bool folding_exercised = false;  // some path left C^v and was folded back
  std::size_t specialized_folds = 0;  // non-special fold points made special by the dilation
  bool confirmed = false;      // a generalized LS path proves the invariant at k^2 nonzero
  std::optional<bool> oracle;  // the invariant at k^2 from LS witnesses, when checked
};

// Apartment-level saturation pipeline from an invariant at N to one at k^2.
// Throws invalid_argument unless the invariant at N is nonzero.
PipelineTrace pipeline_steps45(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu,
                               int n, const PipelineOptions& opt = {});

}  // namespace lsp
