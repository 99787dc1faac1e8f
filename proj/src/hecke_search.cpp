#include "lspath/hecke_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace lsp {

namespace {

class Engine {
 public:
  Engine(const RootSystem& rs, const std::vector<Covector>& types, const std::vector<Covector>& targets,
         const HeckeSearchOptions& opt)
      : rs_(rs), types_(types), targets_(targets.begin(), targets.end()), opt_(opt) {
    for (const auto& t : types_) orbits_.push_back(rs.orbit(t));
    max_folds_ = opt.max_folds;
    if (max_folds_ < 0) {
      max_folds_ = 0;
      for (const auto& t : types_) {
        int n = 0;
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
          if (rs.pair(static_cast<int>(k), t) != 0) ++n;
        max_folds_ = std::max(max_folds_, n);
      }
    }
    // hull bound after factor f: sum of the later types
    tail_.assign(types_.size() + 1, rs.zero());
    for (std::size_t f = types_.size(); f-- > 0;) tail_[f] = tail_[f + 1] + types_[f];
  }

  HeckeSearchResult run(const Covector& from) {
    for (const auto& d : orbits_[0]) {
      if (done()) break;
      start_factor(0, from, d);
    }
    result_.complete = !budget_hit_;
    return result_;
  }

 private:
  struct Piece {
    Covector dir;
    Rational dur;
  };

  bool done() const {
    return budget_hit_ || (opt_.max_results != 0 && result_.paths.size() >= opt_.max_results);
  }

  bool feasible(std::size_t f, const Rational& t, const Covector& x) const {
    if (targets_.empty()) return true;
    Covector bound = types_[f] * (1 - t) + tail_[f + 1];
    for (const auto& y : targets_)
      if (rs_.dominates(bound, rs_.dominant_projection(y - x))) return true;
    return false;
  }

  bool allowed_point(const Covector& x) const { return !opt_.stay_dominant || rs_.is_dominant(x); }

  void start_factor(std::size_t f, const Covector& x, const Covector& d) {
    factor_start_.push_back(x);
    pieces_.emplace_back();
    walk(f, 0, x, d, 0);
    pieces_.pop_back();
    factor_start_.pop_back();
  }

  // Moving from x at local time t of factor f with velocity d.
  void walk(std::size_t f, const Rational& t, const Covector& x, const Covector& d, int folds) {
    if (done()) return;
    if (++result_.nodes > opt_.node_budget) {
      budget_hit_ = true;
      return;
    }
    if (!feasible(f, t, x)) return;
    auto key = std::make_tuple(f, t, x, d);
    if (auto it = failed_.find(key); it != failed_.end() && it->second <= folds) return;
    const std::size_t before = result_.paths.size();

    // run to the end of the factor
    Covector end = x + d * (1 - t);
    if (allowed_point(end)) {
      pieces_.back().push_back({d, 1 - t});
      finish_factor(f, end, d);
      pieces_.back().pop_back();
    }

    if (folds < max_folds_) {
      for (const auto& s : crossing_times(t, x, d)) {
        if (done()) break;
        Covector z = x + d * (s - t);
        if (!allowed_point(z)) break;  // C^v is convex: no later point comes back
        if (opt_.vertex_folds_only && !rs_.is_alcove_vertex(z)) continue;
        auto next = chain_reachable(rs_, d, opt_.mode.chamber_at(rs_, z), z);
        pieces_.back().push_back({d, s - t});
        for (const auto& d2 : next) {
          if (d2 == d) continue;
          walk(f, s, z, d2, folds + 1);
          if (done()) break;
        }
        pieces_.back().pop_back();
      }
    }
    if (!budget_hit_ && result_.paths.size() == before) {
      auto [it, fresh] = failed_.emplace(key, folds);
      if (!fresh) it->second = std::min(it->second, folds);
    }
  }

  void finish_factor(std::size_t f, const Covector& x, const Covector& d_in) {
    if (f + 1 == types_.size()) {
      if (targets_.empty() || targets_.count(x)) record();
      return;
    }
    // junction: some xi reachable from d_in by a local chain shares a chamber with the next velocity
    auto xis = chain_reachable(rs_, d_in, opt_.mode.chamber_at(rs_, x), x);
    for (const auto& d_out : orbits_[f + 1]) {
      if (done()) return;
      bool ok = false;
      for (const auto& xi : xis) {
        bool same = true;
        for (std::size_t k = 0; k < rs_.num_positive_roots() && same; ++k)
          same = rs_.pair(static_cast<int>(k), xi) * rs_.pair(static_cast<int>(k), d_out) >= 0;
        if (same) {
          ok = true;
          break;
        }
      }
      if (!ok) continue;
      factor_start_.push_back(x);
      pieces_.emplace_back();
      walk(f + 1, 0, x, d_out, 0);
      pieces_.pop_back();
      factor_start_.pop_back();
    }
  }

  std::vector<Rational> crossing_times(const Rational& t, const Covector& x, const Covector& d) const {
    std::vector<Rational> out;
    for (std::size_t k = 0; k < rs_.num_positive_roots(); ++k) {
      int b = static_cast<int>(k);
      Rational v = rs_.pair(b, d);
      if (v == 0) continue;
      Rational c = rs_.pair(b, x);
      Rational e = c + v * (1 - t);
      Rational lo = std::min(c, e), hi = std::max(c, e);
      for (std::int64_t m = floor_of(lo) + 1; m < hi; ++m) {
        Rational s = t + (Rational(m) - c) / v;
        if (s > t && s < 1) out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void record() {
    GeneralizedPath g;
    g.types = types_;
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      std::vector<Segment> segs;
      for (const auto& p : pieces_[f]) segs.push_back({p.dir, p.dur});
      g.factors.emplace_back(factor_start_[f], std::move(segs));
    }
    result_.paths.push_back(std::move(g));
  }

  const RootSystem& rs_;
  std::vector<Covector> types_;
  std::set<Covector> targets_;
  HeckeSearchOptions opt_;
  std::vector<std::vector<Covector>> orbits_;
  std::vector<Covector> tail_;
  int max_folds_ = 0;
  bool budget_hit_ = false;
  HeckeSearchResult result_;
  std::vector<Covector> factor_start_;
  std::vector<std::vector<Piece>> pieces_;
  std::map<std::tuple<std::size_t, Rational, Covector, Covector>, int> failed_;
};

}  // namespace

HeckeSearchResult search_generalized_hecke(const RootSystem& rs, const Covector& from,
                                           const std::vector<Covector>& types, const std::vector<Covector>& targets,
                                           const HeckeSearchOptions& options) {
  if (types.empty()) throw std::invalid_argument("search_generalized_hecke: no factor types");
  for (const auto& t : types)
    if (!rs.is_dominant(t) || t.is_zero()) throw std::invalid_argument("factor type must be dominant and nonzero");
  return Engine(rs, types, targets, options).run(from);
}

HeckeSearchResult search_hecke_paths(const RootSystem& rs, const Covector& from, const Covector& type,
                                     const std::vector<Covector>& targets, const HeckeSearchOptions& options) {
  if (type.is_zero()) {
    HeckeSearchResult r;
    if (targets.empty() || std::find(targets.begin(), targets.end(), from) != targets.end()) {
      GeneralizedPath g;
      g.types = {type};
      g.factors = {PLPath::straight(type).translated(from)};
      r.paths.push_back(g);
    }
    return r;
  }
  return search_generalized_hecke(rs, from, {type}, targets, options);
}

}  // namespace lsp
