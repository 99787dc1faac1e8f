#include "lspath/repthy.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lsp;

namespace {

Covector cv(std::initializer_list<std::int64_t> xs) { return Covector::from_ints(xs); }

std::vector<Covector> dominant_box(const RootSystem& rs, std::int64_t max_coord) {
  std::vector<Covector> out;
  std::vector<std::int64_t> c(rs.rank(), 0);
  for (;;) {
    out.push_back(Covector::from_ints(c));
    int k = 0;
    while (k < rs.rank() && ++c[k] > max_coord) c[k++] = 0;
    if (k == rs.rank()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension") {
  for (std::string t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : dominant_box(rs, rs.rank() > 3 ? 1 : 2))
      CHECK(weyl_dimension(rs, lam) == oracle::weyl_dimension(rs.cartan(), lam.to_ints()));
  }
  CHECK(weyl_dimension(RootSystem::build("A2"), cv({1, 1})) == 8);
  auto g2 = RootSystem::build("G2");
  CHECK(std::min(weyl_dimension(g2, cv({1, 0})), weyl_dimension(g2, cv({0, 1}))) == 7);
  CHECK(std::max(weyl_dimension(g2, cv({1, 0})), weyl_dimension(g2, cv({0, 1}))) == 14);
  CHECK_THROWS(weyl_dimension(RootSystem::build("A2"), cv({-1, 1})));
}

TEST_CASE("Freudenthal agrees with the Kostant formula") {
  for (std::string t : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    auto rs = RootSystem::build(t);
    oracle::Kostant k(rs);
    for (const auto& lam : dominant_box(rs, t == "A1" ? 6 : (rs.rank() == 3 ? 1 : 2))) {
      auto table = freudenthal_dominant(rs, lam);
      std::int64_t total = 0;
      for (const auto& mu : dominant_weights_below(rs, lam)) {
        CAPTURE(t);
        CAPTURE(lam.str());
        CAPTURE(mu.str());
        std::int64_t m = table.count(mu) ? table.at(mu) : 0;
        CHECK(m == k.mult(lam, mu));
        total += m * static_cast<std::int64_t>(rs.orbit(mu).size());
      }
      CHECK(total == weyl_dimension(rs, lam));
      CHECK(table.at(lam) == 1);
    }
  }
  auto a2 = RootSystem::build("A2");
  CHECK(mult_freudenthal(a2, cv({1, 1}), cv({0, 0})) == 2);
  CHECK(mult_freudenthal(a2, cv({1, 1}), cv({2, -1})) == 1);
  CHECK(mult_freudenthal(a2, cv({1, 1}), cv({3, 0})) == 0);
}

TEST_CASE("LS multiplicities") {
  auto a1 = RootSystem::build("A1");
  CHECK(mult_ls(a1, cv({2}), cv({0})) == 1);
  CHECK(mult_ls(a1, cv({2}), cv({2})) == 1);
  CHECK(mult_ls(a1, cv({2}), cv({1})) == 0);
  auto a2 = RootSystem::build("A2");
  CHECK(mult_ls(a2, cv({1, 1}), cv({0, 0})) == 2);
  for (std::string t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : dominant_box(rs, 2)) {
      auto ls = character_ls(rs, lam);
      CHECK(ls == freudenthal_dominant(rs, lam));
      for (const auto& [mu, m] : ls) CHECK(mult_ls(rs, lam, mu) == m);
      // the pruned closure against the full one
      std::map<Covector, std::int64_t> full;
      for (const auto& p : generate_LS(rs, lam)) ++full[p.endpoint()];
      for (const auto& [mu, m] : full) CHECK(mult_ls(rs, lam, mu) == m);
    }
  }
}

TEST_CASE("character products") {
  auto a1 = RootSystem::build("A1");
  CHECK(character_product_oracle(a1, cv({2}), cv({2})) == MultiplicityTable{{cv({0}), 1}, {cv({2}), 1}, {cv({4}), 1}});
  auto b2 = RootSystem::build("B2");
  for (const auto& lam : dominant_box(b2, 2)) {
    CHECK(character_product_oracle(b2, lam, b2.zero()) == MultiplicityTable{{lam, 1}});
    for (const auto& mu : dominant_box(b2, 1)) {
      std::int64_t dim = 0;
      for (const auto& [nu, c] : character_product_oracle(b2, lam, mu)) dim += c * weyl_dimension(b2, nu);
      CHECK(dim == weyl_dimension(b2, lam) * weyl_dimension(b2, mu));
    }
  }
}

TEST_CASE("tensor invariants and LR multiplicities") {
  auto a2 = RootSystem::build("A2");
  auto w = tensor_invariant_nonzero(a2, cv({1, 0}), cv({1, 0}), cv({1, 0}));
  CHECK(w.nonzero);
  REQUIRE(w.witness);
  CHECK(is_LS(a2, *w.witness, cv({1, 0})));
  auto bad = tensor_invariant_nonzero(a2, cv({1, 0}), cv({1, 0}), cv({0, 1}));
  CHECK_FALSE(bad.nonzero);
  CHECK(bad.lattice_obstruction);
  CHECK(lr_multiplicity(a2, cv({1, 0}), cv({1, 0}), cv({0, 1})) == 0);
  CHECK(lr_multiplicity(a2, cv({1, 1}), cv({1, 1}), cv({1, 1})) == 2);
  for (const auto& lam : dominant_box(a2, 2)) {
    auto z = tensor_invariant_nonzero(a2, lam, a2.zero(), a2.star(lam));
    CHECK(z.nonzero);
    CHECK(z.witness->is_degenerate());
    CHECK(lr_multiplicity(a2, lam, a2.zero(), a2.star(lam)) == 1);
  }
  for (std::string t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : dominant_box(rs, 1))
      for (const auto& mu : dominant_box(rs, 1)) {
        auto prod = character_product_oracle(rs, lam, mu);
        for (const auto& nu : dominant_box(rs, 2)) {
          std::int64_t expect = prod.count(rs.star(nu)) ? prod.at(rs.star(nu)) : 0;
          CHECK(lr_multiplicity(rs, lam, mu, nu) == expect);
          CHECK(invariant_nonzero(rs, lam, mu, nu) == (expect > 0));
          for (const auto& p : lr_witnesses(rs, lam, mu, nu)) CHECK(is_LS(rs, p, mu));
        }
      }
  }
}

TEST_CASE("cone membership") {
  auto a2 = RootSystem::build("A2");
  CHECK(cone_membership(a2, cv({2, 1}), a2.zero(), a2.star(cv({2, 1}))).member);
  auto r = cone_membership(a2, cv({1, 0}), cv({1, 0}), cv({1, 0}));
  CHECK(r.member);
  CHECK(r.method == "ls-witness");
  REQUIRE(r.path);
  CHECK(is_hecke(a2, *r.path, HeckeMode::negative_alcove(a2)));
  auto no = cone_membership(a2, cv({2, 0}), cv({1, 0}), cv({0, 0}));
  CHECK_FALSE(no.member);
  CHECK(no.complete);
  auto b2 = RootSystem::build("B2");
  for (const auto& lam : dominant_box(b2, 1))
    for (const auto& mu : dominant_box(b2, 1))
      for (const auto& nu : dominant_box(b2, 1)) {
        if (!b2.in_Q(lam + mu + nu)) continue;
        auto c1 = cone_membership(b2, lam, mu, nu);
        auto c2 = cone_membership(b2, lam * 2, mu * 2, nu * 2);
        REQUIRE(c1.complete);
        REQUIRE(c2.complete);
        CHECK(c1.member == c2.member);
        if (invariant_nonzero(b2, lam, mu, nu)) CHECK(c1.member);
        if (c1.member) CHECK(is_hecke(b2, *c1.path, HeckeMode::negative_alcove(b2)));
      }
}
