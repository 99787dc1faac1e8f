#include "lspath/gallery.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace lsp;

namespace {

Covector cv(std::initializer_list<std::int64_t> xs) { return Covector::from_ints(xs); }

std::vector<Covector> regular_box(const RootSystem& rs, std::int64_t max_sum) {
  std::vector<Covector> out;
  std::vector<std::int64_t> c(rs.rank(), 1);
  for (;;) {
    std::int64_t s = 0;
    for (auto v : c) s += v;
    if (s <= max_sum) out.push_back(Covector::from_ints(c));
    int k = 0;
    while (k < rs.rank() && ++c[k] > max_sum) c[k++] = 1;
    if (k == rs.rank()) break;
  }
  return out;
}

std::int64_t separating_walls(const RootSystem& rs, const Covector& lambda) {
  std::int64_t n = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) n += rs.pair(static_cast<int>(k), lambda).numerator() - 1;
  return n;
}

}  // namespace

TEST_CASE("affine elements") {
  auto rs = RootSystem::build("B2");
  for (int i = 0; i <= rs.rank(); ++i) {
    auto s = AffineElement::simple(rs, i);
    CHECK(s * s == AffineElement::identity(rs));
    CHECK(rs.in_Q(s.translation()));
    // s_i fixes the panel of type i of the fundamental alcove
    for (int k = 0; k <= rs.rank(); ++k)
      if (k != i) CHECK(s.apply(rs.alcove_vertex(k)) == rs.alcove_vertex(k));
    CHECK(s.apply(rs.alcove_vertex(i)) != rs.alcove_vertex(i));
  }
  auto u = AffineElement::simple(rs, 0) * AffineElement::simple(rs, 1);
  CHECK(u * u.inverse() == AffineElement::identity(rs));
  Covector x{Rational(1, 3), Rational(2, 7)};
  CHECK(u.inverse().apply(u.apply(x)) == x);
}

TEST_CASE("minimal galleries") {
  auto a1 = RootSystem::build("A1");
  auto m = minimal_gallery(a1, cv({2}));
  CHECK(m.length() == 1);
  CHECK(m.type_word == std::vector<int>{0});
  CHECK(m.alcoves.back().apply(a1.alcove_vertex(0)) == cv({2}));
  auto a2 = RootSystem::build("A2");
  CHECK(minimal_gallery(a2, cv({1, 1})).length() == 1);
  CHECK_THROWS(minimal_gallery(a2, cv({1, 0})));
  CHECK_THROWS(minimal_gallery(a2, cv({-1, 2})));
  for (std::string t : {"A1", "A2", "B2", "G2", "A3"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : regular_box(rs, rs.rank() + 2)) {
      auto mg = minimal_gallery(rs, lam);
      CAPTURE(lam.str());
      CHECK(static_cast<std::int64_t>(mg.length()) == separating_walls(rs, lam));
      // every crossed wall is distinct, so the gallery is minimal
      std::set<AffineWall> ws(mg.walls.begin(), mg.walls.end());
      CHECK(ws.size() == mg.length());
      CHECK(std::is_sorted(mg.times.begin(), mg.times.end()));
      // [0, lambda] runs through the alcoves in order
      for (std::size_t j = 0; j <= mg.length(); ++j) {
        Rational a = j == 0 ? Rational(0) : mg.times[j - 1];
        Rational b = j == mg.length() ? Rational(1) : mg.times[j];
        Covector mid = lam * ((a + b) / 2);
        Covector y = mg.alcoves[j].inverse().apply(mid);
        CHECK(rs.in_fundamental_alcove(y));
      }
      auto unfolded = gallery_from_choices(rs, mg, WeylElement::identity(rs), std::vector<bool>(mg.length(), false));
      CHECK(target(rs, unfolded) == lam);
      CHECK(gallery_to_path(rs, mg, unfolded) == PLPath::straight(lam));
    }
  }
}

TEST_CASE("A1 folded galleries") {
  auto rs = RootSystem::build("A1");
  auto m = minimal_gallery(rs, cv({2}));
  auto all = enumerate_folded(rs, m, false);
  CHECK(all.size() == 4);
  auto pos = enumerate_folded(rs, m, true);
  CHECK(pos.size() == 3);
  std::multiset<Covector> targets;
  for (const auto& g : pos) targets.insert(target(rs, g));
  CHECK(targets == std::multiset<Covector>{cv({2}), cv({0}), cv({-2})});
  auto folded = gallery_from_choices(rs, m, WeylElement::longest(rs), {true});
  CHECK(is_positively_folded(rs, folded));
  CHECK(target(rs, folded) == cv({0}));
  CHECK(dim_gallery(rs, folded) == 1);
  CHECK(parameter_tally(rs, folded) == std::vector<std::string>{"C*"});
  CHECK_FALSE(is_positively_folded(rs, gallery_from_choices(rs, m, WeylElement::identity(rs), {true})));
  CHECK_THROWS(dim_gallery(rs, gallery_from_choices(rs, m, WeylElement::identity(rs), {true})));
}

TEST_CASE("dimension of the unfolded and opposite galleries") {
  for (std::string t : {"A1", "A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : regular_box(rs, rs.rank() + 2)) {
      auto m = minimal_gallery(rs, lam);
      auto top = gallery_from_choices(rs, m, WeylElement::identity(rs), std::vector<bool>(m.length(), false));
      CHECK(Rational(dim_gallery(rs, top)) == rs.rho_pairing(lam + lam));
      auto w0 = WeylElement::longest(rs);
      auto bottom = gallery_from_choices(rs, m, w0, std::vector<bool>(m.length(), false));
      CHECK(is_positively_folded(rs, bottom));
      CHECK(target(rs, bottom) == w0.apply(lam));
      CHECK(Rational(dim_gallery(rs, bottom)) == rs.rho_pairing(lam + w0.apply(lam)));
      for (const auto& lb : load_bearing_walls(rs, top))
        if (lb.step <= 0) CHECK(lb.wall.level == 0);
    }
  }
}

TEST_CASE("LS galleries count weight multiplicities") {
  for (std::string t : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : regular_box(rs, 3)) {
      auto m = minimal_gallery(rs, lam);
      auto pos = enumerate_folded(rs, m, true);
      std::map<Covector, int> from_paths, from_galleries;
      for (const auto& p : generate_LS(rs, lam)) ++from_paths[p.endpoint()];
      std::int64_t total = 0;
      for (const auto& g : pos) {
        Covector mu = target(rs, g);
        std::int64_t d = dim_gallery(rs, g);
        CHECK(Rational(d) <= rs.rho_pairing(lam + mu));
        if (Rational(d) == rs.rho_pairing(lam + mu)) {
          ++from_galleries[mu];
          ++total;
        }
        // the path inside a positively folded gallery is Hecke and ends at the target
        PLPath p = gallery_to_path(rs, m, g);
        CHECK(p.endpoint() == mu);
        CHECK(is_lambda_path(rs, p, lam));
        CHECK(is_hecke(rs, p));
        CHECK(is_billiard(rs, p));
        bool ls = Rational(d) == rs.rho_pairing(lam + mu);
        CHECK(static_cast<bool>(is_LS(rs, p, lam)) == ls);
        CHECK((load_bearing_count(rs, p) == rs.rho_pairing(lam + mu)) == ls);
      }
      CAPTURE(t);
      CAPTURE(lam.str());
      CHECK(from_galleries == from_paths);
      CHECK(total == oracle::weyl_dimension(rs.cartan(), lam.to_ints()));
    }
  }
  auto a2 = RootSystem::build("A2");
  auto m = minimal_gallery(a2, cv({1, 1}));
  CHECK(ls_galleries(a2, m, cv({0, 0})).size() == 2);
  CHECK(ls_galleries(a2, m, cv({1, 1})).size() == 1);
}

TEST_CASE("fold closure") {
  auto rs = RootSystem::build("A2");
  auto m = minimal_gallery(rs, cv({2, 1}));
  auto all = enumerate_folded(rs, m, false);
  CHECK(all.size() == 6u << m.length());
  std::set<Gallery> s(all.begin(), all.end());
  for (const auto& g : all) {
    CHECK(g.type_word == m.type_word);
    CHECK(g.alcoves.front().translation().is_zero());
    for (std::size_t j = 0; j < g.folded.size(); ++j) {
      if (g.folded[j]) continue;
      std::vector<bool> f = g.folded;
      f[j] = true;
      CHECK(s.count(gallery_from_choices(rs, m, g.alcoves.front().finite_part(), f)));
    }
  }
}

TEST_CASE("G2 LS galleries") {
  auto rs = RootSystem::build("G2");
  for (const auto& lam : {cv({1, 1}), cv({2, 1}), cv({1, 2})}) {
    auto m = minimal_gallery(rs, lam);
    std::map<Covector, int> from_paths, from_galleries;
    for (const auto& p : generate_LS(rs, lam)) ++from_paths[p.endpoint()];
    for (const auto& g : enumerate_folded(rs, m, true)) {
      Covector mu = target(rs, g);
      Rational d(dim_gallery(rs, g));
      CHECK(d <= rs.rho_pairing(lam + mu));
      if (d == rs.rho_pairing(lam + mu)) ++from_galleries[mu];
    }
    CHECK(from_galleries == from_paths);
  }
}
