#include "lspath/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lsp {

bool TripleRecord::any_nonzero() const { return first_nonzero() != 0; }

int TripleRecord::first_nonzero() const {
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    if (nonzero[i]) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<std::array<Covector, 3>> scan_triples(const RootSystem& rs, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("scan bound must be nonnegative");
  std::vector<Covector> box;
  std::vector<std::int64_t> c(rs.rank(), 0);
  for (;;) {
    box.push_back(Covector::from_ints(c));
    int i = 0;
    while (i < rs.rank() && ++c[i] > bound) c[i++] = 0;
    if (i == rs.rank()) break;
  }
  std::sort(box.begin(), box.end());
  std::vector<std::array<Covector, 3>> out;
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& d : box)
        if (rs.in_Q(a + b + d)) out.push_back({a, b, d});
  return out;
}

namespace {

bool nonzero_at(const RootSystem& rs, const std::array<Covector, 3>& t, std::int64_t n) {
  return invariant_nonzero(rs, t[0] * n, t[1] * n, t[2] * n);
}

}  // namespace

TripleRecord scan_triple(const RootSystem& rs, const std::array<Covector, 3>& t, const ScanOptions& opt) {
  TripleRecord r;
  r.triple = t;
  const std::int64_t k = rs.k_phi();
  ConeOptions co;
  co.node_budget = opt.cone_budget;
  std::vector<bool> cone_complete;
  for (int n = 1; n <= opt.nmax; ++n) {
    r.nonzero.push_back(nonzero_at(rs, t, n));
    auto c = cone_membership(rs, t[0] * n, t[1] * n, t[2] * n, co);
    r.cone.push_back(c.member);
    cone_complete.push_back(c.member || c.complete);
    if (!c.member && !c.complete) r.complete = false;
  }
  auto at = [&](std::int64_t n) { return n <= opt.nmax ? static_cast<bool>(r.nonzero[n - 1]) : nonzero_at(rs, t, n); };
  const bool any = r.any_nonzero();
  r.nonzero_k = any ? at(k) : false;
  r.nonzero_k2 = any ? at(k * k) : false;
  r.theorem_ok = !any || r.nonzero_k2;
  r.k_conjecture_ok = !any || r.nonzero_k;
  for (int i = 0; i < opt.nmax; ++i) {
    // an unfinished search that found nothing is inconclusive, not a violation
    if (r.nonzero[i] && !r.cone[i]) r.remark_ok = false;
    if (r.cone[i] && !r.cone[0] && cone_complete[0]) r.cone_saturated = false;
    if (r.cone[0] && !r.cone[i] && cone_complete[i]) r.cone_dilation_ok = false;
  }
  return r;
}

ScanReport saturation_scan(const RootSystem& rs, const ScanOptions& opt) {
  if (opt.nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  ScanReport rep;
  rep.type = rs.type().name();
  rep.options = opt;
  rep.k = rs.k_phi();
  const auto triples = scan_triples(rs, opt.bound);
  rep.records.resize(triples.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      try {
        rep.records[i] = scan_triple(rs, triples[i], opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = triples.size();
        return;
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& r : rep.records) {
    if (!r.theorem_ok) ++rep.theorem_violations;
    if (!r.cone_saturated || !r.cone_dilation_ok || !r.remark_ok) ++rep.cone_violations;
    if (!r.k_conjecture_ok) ++rep.k_conjecture_failures;
    if (!r.complete) ++rep.incomplete;
    if (r.any_nonzero()) ++rep.nonzero_triples;
  }
  return rep;
}

namespace {

std::vector<Covector> fold_points(const PLPath& p) {
  std::vector<Covector> out;
  for (const auto& b : bends(p)) out.push_back(b.point);
  return out;
}

std::vector<Covector> generalized_fold_points(const GeneralizedPath& g) {
  std::vector<Covector> out;
  for (const auto& f : g.factors)
    for (const auto& x : fold_points(f)) out.push_back(x);
  for (std::size_t i = 1; i < g.factors.size(); ++i) out.push_back(g.factors[i].base());
  return out;
}

bool all_special(const RootSystem& rs, const std::vector<Covector>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const Covector& x) { return rs.is_special(x); });
}

GeneralizedPath dilate_generalized(const GeneralizedPath& g, std::int64_t n) {
  GeneralizedPath out;
  out.types.reserve(g.types.size());
  for (const auto& t : g.types) out.types.push_back(t * n);
  for (const auto& f : g.factors) out.factors.push_back(dilate(f, n));
  return out;
}

GeneralizedPath fold_generalized(const RootSystem& rs, const GeneralizedPath& g) {
  return GeneralizedPath::split(fold_dominant(rs, g.concatenated()), g.types);
}

}  // namespace

PipelineTrace pipeline_steps45(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu,
                               int n, const PipelineOptions& opt) {
  if (n < 1) throw std::invalid_argument("pipeline: N must be at least 1");
  PipelineTrace tr;
  tr.triple = {lambda, mu, nu};
  tr.n = n;
  tr.k = rs.k_phi();
  const std::int64_t k = tr.k;
  const HeckeMode a_minus = HeckeMode::negative_alcove(rs);
  const Covector target = rs.star(nu);
  auto stage = [&](std::string name, bool ok, std::string note, std::vector<PLPath> paths) {
    tr.stages.push_back({std::move(name), ok, std::move(note), std::move(paths)});
    tr.ok = tr.ok && ok;
    return ok;
  };

  // 1. the LS witness at N, a Hecke path for a_- inside C^v
  auto w = tensor_invariant_nonzero(rs, lambda * n, mu * n, nu * n);
  if (!w.nonzero) throw std::invalid_argument("pipeline: the invariant vanishes at N = " + std::to_string(n));
  PLPath witness = w.witness->translated(lambda * n);
  if (!stage("witness", is_hecke(rs, witness, a_minus).ok && inside_dominant_chamber(rs, witness),
             "LS path of type N mu from N lambda to N nu^*", {witness}))
    return tr;

  // 2. a Hecke polygon at scale 1; first look outside C^v so that folding is exercised
  std::optional<PLPath> polygon;
  std::string how;
  {
    std::vector<Covector> elsewhere;
    for (const auto& v : rs.orbit(target))
      if (v != target) elsewhere.push_back(v);
    if (!elsewhere.empty()) {
      HeckeSearchOptions so;
      so.mode = a_minus;
      so.node_budget = opt.unfold_budget;
      auto res = search_hecke_paths(rs, lambda, mu, elsewhere, so);
      if (!res.paths.empty()) {
        PLPath raw = res.paths.front().factors.front();
        PLPath folded = fold_dominant(rs, raw);
        bool kept = is_hecke(rs, folded, a_minus).ok;
        tr.folding_exercised = true;
        if (!stage("fold-polygon", kept && folded.endpoint() == target,
                   "Hecke path ending in W nu^* folded onto C^v", {raw, folded}))
          return tr;
        polygon = folded;
        how = "folded";
      }
    }
    if (!polygon) {
      ConeOptions co;
      co.node_budget = opt.node_budget;
      auto c = cone_membership(rs, lambda, mu, nu, co);
      if (c.member) {
        polygon = *c.path;
        how = c.method + " with apex " + c.apex.str();
      }
    }
  }
  if (!stage("hecke-polygon", polygon.has_value(), polygon ? "found by " + how : "no Hecke polygon at scale 1",
             polygon ? std::vector<PLPath>{*polygon} : std::vector<PLPath>{}))
    return tr;

  // 3. dilation by k makes the corners special; fold points only sometimes
  PLPath dilated = dilate(*polygon, k);
  {
    std::size_t off = 0;
    for (const auto& x : fold_points(*polygon))
      if (!rs.is_special(x)) {
        ++off;
        if (rs.is_special(x * k)) ++tr.specialized_folds;
      }
    bool ok = is_hecke(rs, dilated, HeckeMode::toward_alcove(rs.negative_alcove_barycenter() * k)).ok &&
              rs.is_special(dilated.base()) && rs.is_special(dilated.endpoint());
    if (!stage("dilate-k", ok,
               std::to_string(tr.specialized_folds) + " of " + std::to_string(off) +
                   " non-special fold points became special",
               {dilated}))
      return tr;
  }

  // 4. a generalized Hecke path of type k mu split along fundamental coweights
  const Covector kmu = mu * k;
  std::optional<GeneralizedPath> gen;
  if (kmu.is_zero()) {
    gen = GeneralizedPath{{PLPath::straight(rs.zero()).translated(lambda * k)}, {rs.zero()}};
  } else {
    auto types = decomposition_types(rs, default_decomposition(kmu));
    HeckeSearchOptions so;
    so.mode = a_minus;
    so.vertex_folds_only = true;
    so.stay_dominant = true;
    so.node_budget = opt.node_budget;
    auto res = search_generalized_hecke(rs, lambda * k, types, {target * k}, so);
    if (!res.paths.empty()) gen = res.paths.front();
  }
  if (!stage("generalized", gen && is_generalized_hecke(rs, *gen, a_minus),
             gen ? std::to_string(gen->factors.size()) + " factors" : "no generalized Hecke path",
             gen ? std::vector<PLPath>{gen->concatenated()} : std::vector<PLPath>{}))
    return tr;

  // 5. folding onto C^v keeps the Hecke property for a_-
  GeneralizedPath folded = fold_generalized(rs, *gen);
  if (!stage("fold", is_generalized_hecke(rs, folded, a_minus) && inside_dominant_chamber(rs, folded.concatenated()),
             folded == *gen ? "already dominant" : "folded", {folded.concatenated()}))
    return tr;

  // 6. second dilation by k
  GeneralizedPath twice = dilate_generalized(folded, k);
  if (!stage("dilate-k2", is_generalized_hecke(rs, twice, a_minus) && all_special(rs, generalized_fold_points(twice)),
             "fold points and junctions special", {twice.concatenated()}))
    return tr;

  // 7. Hecke paths folded only at special vertices are LS
  bool upgraded = true;
  std::string note;
  for (const auto& f : twice.factors) {
    if (f.is_degenerate()) continue;
    try {
      if (!coarse_ls_upgrade(rs, f)) upgraded = false;
    } catch (const std::exception& e) {
      upgraded = false;
      note = e.what();
    }
  }
  upgraded = upgraded && is_generalized_LS(rs, twice);
  if (!stage("ls-upgrade", upgraded, note.empty() ? "generalized LS path" : note, {twice.concatenated()})) return tr;

  // 8. the generalized LS path inside C^v from k^2 lambda to k^2 nu^* gives the invariant
  const std::int64_t k2 = k * k;
  bool geometric = twice.base() == lambda * k2 && twice.endpoint() == target * k2 &&
                   inside_dominant_chamber(rs, twice.concatenated());
  tr.confirmed = geometric;
  std::string summary = "generalized LS path from k^2 lambda to k^2 nu^* inside C^v";
  if (opt.oracle_check) {
    tr.oracle = invariant_nonzero(rs, lambda * k2, mu * k2, nu * k2);
    summary += std::string("; oracle ") + (*tr.oracle ? "nonzero" : "zero");
  }
  stage("confirm", geometric && tr.oracle.value_or(true), summary, {});
  return tr;
}

}  // namespace lsp
