#include "lspath/rootsys.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>

using namespace lsp;

namespace {

std::vector<std::string> all_types() {
  std::vector<std::string> t;
  for (int n = 1; n <= 8; ++n) t.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) {
    t.push_back("B" + std::to_string(n));
    t.push_back("C" + std::to_string(n));
  }
  for (int n = 3; n <= 8; ++n) t.push_back("D" + std::to_string(n));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) t.push_back(s);
  return t;
}

Covector cv(std::initializer_list<std::int64_t> xs) { return Covector::from_ints(xs); }

}  // namespace

TEST_CASE("cartan type parsing") {
  CHECK(CartanType::parse("G2").name() == "G2");
  CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("X3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("A2x"), std::invalid_argument);
}

TEST_CASE("small root systems") {
  auto a1 = RootSystem::build("A1");
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.highest_root_coeffs() == std::vector<std::int64_t>{1});
  CHECK(a1.rho()[0] == Rational(1, 2));  // rho = alpha/2 = varpi_1
  CHECK(a1.k_phi() == 1);

  auto a2 = RootSystem::build("A2");
  CHECK(a2.num_positive_roots() == 3);
  CHECK(a2.highest_root_coeffs() == std::vector<std::int64_t>{1, 1});
  CHECK(a2.k_phi() == 1);

  auto g2 = RootSystem::build("G2");
  CHECK(g2.num_positive_roots() == 6);
  CHECK(g2.highest_root_coeffs() == std::vector<std::int64_t>{3, 2});
  CHECK(g2.k_phi() == 6);

  CHECK(RootSystem::build("B2").k_phi() == 2);
  CHECK(RootSystem::build("F4").highest_root_coeffs() == std::vector<std::int64_t>{2, 3, 4, 2});
  CHECK(RootSystem::build("F4").k_phi() == 12);
}

TEST_CASE("root data against the root-string oracle, all types up to rank 8") {
  const std::map<std::string, std::int64_t> expected_k{{"E6", 6}, {"E7", 12}, {"E8", 60}, {"F4", 12}, {"G2", 6}};
  for (const auto& t : all_types()) {
    CAPTURE(t);
    auto rs = RootSystem::build(t);
    auto ref = oracle::positive_roots_by_strings(rs.cartan());
    std::set<oracle::Vec> mine;
    for (const auto& r : rs.positive_roots()) mine.insert(r.coeffs);
    CHECK(mine == ref);
    CHECK(static_cast<std::int64_t>(rs.num_positive_roots()) * 2 ==
          rs.rank() * oracle::coxeter_number(rs.type().series, rs.rank()));

    // theta from the oracle set: the unique root of maximal height
    oracle::Vec theta;
    std::int64_t best = 0;
    for (const auto& r : ref) {
      auto h = std::accumulate(r.begin(), r.end(), std::int64_t{0});
      if (h > best) best = h, theta = r;
    }
    CHECK(rs.highest_root_coeffs() == theta);
    std::int64_t k = 1;
    for (auto m : theta) k = std::lcm(k, m);
    CHECK(rs.k_phi() == k);
    char s = rs.type().series;
    if (s == 'A') CHECK(k == 1);
    if (s == 'B' || s == 'C' || (s == 'D' && rs.rank() >= 4)) CHECK(k == 2);
    if (t == "D3") CHECK(k == 1);  // D3 = A3
    if (expected_k.count(t)) CHECK(k == expected_k.at(t));

    // theta - alpha >= 0 for every positive root
    for (const auto& r : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) CHECK(theta[i] - r.coeffs[i] >= 0);

    // <alpha_i, varpi_j^vee> = delta_ij
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.pair(rs.simple_root_index(i), rs.fundamental_coweight(j)) == Rational(i == j ? 1 : 0));

    // <beta, beta^vee> = 2 and <rho, alpha_i^vee> = 1
    for (std::size_t b = 0; b < rs.num_positive_roots(); ++b)
      CHECK(rs.pair(static_cast<int>(b), rs.positive_roots()[b].coroot) == 2);
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.rho_pairing(rs.simple_coroot(i)) == 1);

    // k_phi is the least k making every alcove vertex special
    for (int i = 0; i <= rs.rank(); ++i) CHECK(rs.in_P(rs.alcove_vertex(i) * Rational(rs.k_phi())));
    for (std::int64_t j = 1; j < rs.k_phi(); ++j) {
      bool all = true;
      for (int i = 0; i <= rs.rank(); ++i) all = all && rs.in_P(rs.alcove_vertex(i) * Rational(j));
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("simple reflections permute the positive roots other than alpha_i") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(t);
    std::set<oracle::Vec> pos;
    for (const auto& r : rs.positive_roots()) pos.insert(r.coeffs);
    for (int i = 0; i < rs.rank(); ++i) {
      std::set<oracle::Vec> image;
      for (const auto& r : rs.positive_roots()) {
        std::int64_t p = 0;
        for (int k = 0; k < rs.rank(); ++k) p += r.coeffs[k] * rs.cartan()[i][k];
        auto c = r.coeffs;
        c[i] -= p;
        if (r.height == 1 && r.coeffs[i] == 1) {
          auto neg = r.coeffs;
          for (auto& x : neg) x = -x;
          CHECK(c == neg);
          continue;
        }
        CHECK(pos.count(c));
        image.insert(c);
      }
      CHECK(image.size() == pos.size() - 1);
    }
  }
}

TEST_CASE("dominant projection and star") {
  auto a1 = RootSystem::build("A1");
  CHECK(a1.dominant_projection(cv({-1})) == cv({1}));
  auto a2 = RootSystem::build("A2");
  CHECK(a2.dominant_projection(cv({-1, 0})) == cv({0, 1}));
  CHECK(a2.star(cv({1, 0})) == cv({0, 1}));
  CHECK(a2.star(cv({2, 1})) == cv({1, 2}));
  CHECK_THROWS_AS(a2.star(cv({-1, 0})), std::invalid_argument);
  auto b2 = RootSystem::build("B2");
  for (std::int64_t a = 0; a < 4; ++a)
    for (std::int64_t b = 0; b < 4; ++b) CHECK(b2.star(cv({a, b})) == cv({a, b}));
  CHECK(a1.star(cv({3})) == cv({3}));

  // uniqueness of the dominant point of an orbit, rank <= 3
  for (const char* t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = RootSystem::build(t);
    for (int trial = 0; trial < 20; ++trial) {
      Covector v(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) v[i] = Rational(((trial * 7 + i * 5) % 9) - 4, 1 + (trial + i) % 3);
      auto orb = rs.orbit(v);
      int dominant = 0;
      for (const auto& x : orb) dominant += rs.is_dominant(x);
      CHECK(dominant == 1);
      auto p = rs.dominant_projection(v);
      CHECK(std::find(orb.begin(), orb.end(), p) != orb.end());
      CHECK(rs.is_dominant(p));
      CHECK(rs.dominant_projection(p) == p);
    }
  }
}

TEST_CASE("weyl group order formula against orbit size of rho") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    auto rs = RootSystem::build(t);
    CHECK(static_cast<std::int64_t>(rs.orbit(rs.rho_vee()).size()) == rs.weyl_group_order());
  }
  CHECK(RootSystem::build("E8").weyl_group_order() == 696729600);
  CHECK(RootSystem::build("F4").weyl_group_order() == 1152);
}

TEST_CASE("lattices") {
  auto a2 = RootSystem::build("A2");
  CHECK(a2.in_Q(cv({1, 1})));
  CHECK(a2.in_Q(cv({2, -1})));
  CHECK_FALSE(a2.in_Q(cv({1, 0})));
  CHECK(a2.in_P(cv({1, 0})));
  CHECK_FALSE(a2.in_P(Covector{Rational(1, 2), Rational(0)}));
  auto b2 = RootSystem::build("B2");
  CHECK(b2.in_Q(cv({0, 1})));
  CHECK_FALSE(b2.in_Q(cv({1, 0})));
  auto g2 = RootSystem::build("G2");
  CHECK(g2.in_Q(cv({1, 0})));
  CHECK(g2.in_Q(cv({0, 1})));
}

TEST_CASE("P^vee/Q^vee action on the fundamental alcove") {
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "D4", "D5", "E6", "E7", "G2", "F4"}) {
    CAPTURE(t);
    auto rs = RootSystem::build(t);
    std::vector<int> id(rs.rank() + 1);
    std::iota(id.begin(), id.end(), 0);
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.alcove_vertex_action(rs.simple_coroot(i)) == id);
    CHECK(rs.alcove_vertex_action(rs.zero()) == id);

    // representatives of P/Q: 0 and the minuscule coweights
    auto specials = rs.special_vertex_labels();
    std::set<int> images;
    for (int s : specials) {
      Covector lam = s == 0 ? rs.zero() : rs.fundamental_coweight(s - 1);
      auto perm = rs.alcove_vertex_action(lam);
      images.insert(perm[0]);
      for (int v : specials) CHECK(std::find(specials.begin(), specials.end(), perm[v]) != specials.end());
      CHECK(perm[0] == s);  // simple transitivity on special vertices
    }
    CHECK(images.size() == specials.size());

    // phi_lambda phi_mu = phi_{lambda+mu}
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        auto a = rs.alcove_vertex_action(rs.fundamental_coweight(i));
        auto b = rs.alcove_vertex_action(rs.fundamental_coweight(j));
        auto ab = rs.alcove_vertex_action(rs.fundamental_coweight(i) + rs.fundamental_coweight(j));
        std::vector<int> comp(rs.rank() + 1);
        for (int v = 0; v <= rs.rank(); ++v) comp[v] = a[b[v]];
        CHECK(comp == ab);
      }
  }
  auto a2 = RootSystem::build("A2");
  auto perm = a2.alcove_vertex_action(Covector::from_ints({1, 0}));
  CHECK(perm == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(a2.alcove_vertex_action(Covector{Rational(1, 2), Rational(0)}), std::invalid_argument);
}

TEST_CASE("alcove vertices") {
  auto g2 = RootSystem::build("G2");
  CHECK(g2.alcove_vertex(1) == Covector{Rational(1, 3), Rational(0)});
  CHECK(g2.alcove_vertex(2) == Covector{Rational(0), Rational(1, 2)});
  CHECK(g2.is_alcove_vertex(Covector{Rational(1, 3), Rational(0)}));
  CHECK(g2.is_alcove_vertex(Covector{Rational(1, 3), Rational(0)} + Covector::from_ints({1, 1})));
  CHECK_FALSE(g2.is_alcove_vertex(Covector{Rational(1, 6), Rational(0)}));
  CHECK(g2.in_fundamental_alcove(g2.alcove_barycenter()));
}

TEST_CASE("golden JSON serialization") {
  for (const char* t : {"A2", "G2"}) {
    auto rs = RootSystem::build(t);
    std::ifstream in(std::string(LSPATH_GOLDEN_DIR) + "/rootsys_" + t + ".json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string expected = ss.str();
    while (!expected.empty() && expected.back() == '\n') expected.pop_back();
    CHECK(rs.to_json() == expected);
  }
}
