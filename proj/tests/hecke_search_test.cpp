#include "lspath/hecke_search.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace lsp;

namespace {

Covector cv(std::initializer_list<std::int64_t> xs) { return Covector::from_ints(xs); }

std::set<PLPath> all_hecke_from_zero(const RootSystem& rs, const Covector& lam) {
  HeckeSearchOptions opt;
  opt.max_results = 0;
  auto r = search_hecke_paths(rs, rs.zero(), lam, {}, opt);
  REQUIRE(r.complete);
  std::set<PLPath> out;
  for (const auto& g : r.paths) out.insert(g.factors[0]);
  return out;
}

}  // namespace

TEST_CASE("exhaustive Hecke search contains every LS path and only Hecke paths") {
  for (std::string t : {"A1", "A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : {cv({1, 0}), cv({0, 1}), cv({1, 1}), cv({2, 0})}) {
      Covector l = lam;
      if (rs.rank() == 1) l = cv({lam[0].numerator() + lam[1].numerator()});
      auto found = all_hecke_from_zero(rs, l);
      CAPTURE(t);
      CAPTURE(l.str());
      for (const auto& p : found) {
        CHECK(is_hecke(rs, p));
        CHECK(ls12_satisfiable(rs, p, l));
      }
      for (const auto& p : generate_LS(rs, l)) CHECK(found.count(p));
    }
  }
}

TEST_CASE("search finds randomly generated Hecke paths") {
  std::mt19937_64 gen(7);
  auto rs = RootSystem::build("B2");
  Covector lam = cv({1, 1});
  auto found = all_hecke_from_zero(rs, lam);
  auto orbit = rs.orbit(lam);
  int hits = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Rational a(1 + static_cast<std::int64_t>(gen() % 5), 6);
    PLPath p = PLPath::from_directions(rs.zero(), {orbit[gen() % orbit.size()], orbit[gen() % orbit.size()]},
                                       {a, 1 - a});
    if (is_hecke(rs, p)) {
      ++hits;
      CHECK(found.count(p));
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("targets, dominance and vertex restrictions") {
  auto rs = RootSystem::build("A2");
  HeckeSearchOptions opt;
  opt.max_results = 0;
  opt.stay_dominant = true;
  // paths of type (1,1) from (1,1) to (1,1) inside C^v: the LS witnesses of V(1,1) x V(1,1) -> V(1,1)
  auto r = search_hecke_paths(rs, cv({1, 1}), cv({1, 1}), {cv({1, 1})}, opt);
  CHECK(r.complete);
  int ls = 0;
  for (const auto& g : r.paths) {
    ls += static_cast<bool>(is_LS(rs, g.factors[0].translated(-cv({1, 1})), cv({1, 1})));
    CHECK(inside_dominant_chamber(rs, g.factors[0]));
    CHECK(g.endpoint() == cv({1, 1}));
  }
  CHECK(ls == 2);
  CHECK(r.paths.size() >= 2);
  opt.vertex_folds_only = true;
  for (const auto& g : search_hecke_paths(rs, cv({1, 1}), cv({1, 1}), {cv({1, 1})}, opt).paths)
    for (const auto& b : bends(g.factors[0])) CHECK(rs.is_alcove_vertex(b.point));
  // lattice obstruction: nothing from 0 of type (1,0) reaches (1,0) + (0,1) - not in the same coset
  opt.vertex_folds_only = false;
  auto none = search_hecke_paths(rs, rs.zero(), cv({1, 0}), {cv({0, 1})}, opt);
  CHECK(none.complete);
  CHECK(none.paths.empty());
}

TEST_CASE("generalized search") {
  auto rs = RootSystem::build("A2");
  HeckeSearchOptions opt;
  opt.max_results = 0;
  auto r = search_generalized_hecke(rs, rs.zero(), {cv({1, 0}), cv({0, 1})}, {}, opt);
  CHECK(r.complete);
  std::set<GeneralizedPath> found(r.paths.begin(), r.paths.end());
  for (const auto& g : generate_generalized_LS(rs, cv({1, 1}), {{0, 1}, {1, 1}})) CHECK(found.count(g));
  for (const auto& g : r.paths) CHECK(is_generalized_hecke(rs, g, HeckeMode::negative_chamber()));
}

TEST_CASE("node budget is reported") {
  auto rs = RootSystem::build("G2");
  HeckeSearchOptions opt;
  opt.max_results = 0;
  opt.node_budget = 10;
  auto r = search_hecke_paths(rs, rs.zero(), cv({2, 2}), {}, opt);
  CHECK_FALSE(r.complete);
}
