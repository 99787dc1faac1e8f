#include "lspath/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsp {

AffineElement AffineElement::simple(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine simple reflection index out of range");
  if (i > 0) return linear(WeylElement::from_word(rs, {i - 1}));
  const Root& th = rs.highest_root();
  return {WeylElement::from_rho_image(rs, rs.reflect(rs.highest_root_index(), rs.rho_vee())), th.coroot};
}

AffineElement AffineElement::inverse() const {
  WeylElement wi = w_.inverse();
  return {wi, -wi.apply(t_)};
}

AffineWall panel_wall(const RootSystem& rs, const AffineElement& u, int i) {
  std::vector<Covector> pts;
  for (int k = 0; k <= rs.rank(); ++k)
    if (k != i) pts.push_back(u.apply(rs.alcove_vertex(k)));
  for (std::size_t r = 0; r < rs.num_positive_roots(); ++r) {
    int b = static_cast<int>(r);
    Rational v = rs.pair(b, pts[0]);
    bool flat = true;
    for (std::size_t k = 1; k < pts.size() && flat; ++k) flat = rs.pair(b, pts[k]) == v;
    if (flat) return {b, v.numerator()};
  }
  throw std::logic_error("panel_wall: no root is constant on the panel");
}

Rational side_of(const RootSystem& rs, const AffineElement& u, const AffineWall& m) {
  return rs.pair(m.root, u.apply(rs.alcove_barycenter())) - m.level;
}

MinimalGallery minimal_gallery(const RootSystem& rs, const Covector& lambda) {
  if (!rs.in_P(lambda) || !rs.is_dominant(lambda) || !rs.is_regular(lambda))
    throw std::invalid_argument("minimal_gallery: lambda must be dominant, regular and in P^vee: " + lambda.str());
  MinimalGallery m;
  m.lambda = lambda;
  AffineElement c = AffineElement::identity(rs);
  m.alcoves.push_back(c);
  for (;;) {
    int best = -1;
    AffineWall best_wall;
    Rational best_time;
    for (int i = 0; i <= rs.rank(); ++i) {
      AffineWall w = panel_wall(rs, c, i);
      Rational here = side_of(rs, c, w);
      // the final alcove has beta in (beta(lambda) - 1, beta(lambda))
      bool there_above = rs.pair(w.root, lambda) > w.level;
      if ((here > 0) == there_above) continue;
      Rational t = Rational(w.level) / rs.pair(w.root, lambda);
      if (best < 0 || t < best_time || (t == best_time && w < best_wall)) {
        best = i;
        best_wall = w;
        best_time = t;
      }
    }
    if (best < 0) break;
    if (!m.times.empty() && best_time < m.times.back())
      throw std::logic_error("minimal_gallery: crossing times not monotone");
    c = c * AffineElement::simple(rs, best);
    m.type_word.push_back(best);
    m.walls.push_back(best_wall);
    m.times.push_back(best_time);
    m.alcoves.push_back(c);
  }
  return m;
}

std::vector<int> Gallery::fold_steps() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < folded.size(); ++j)
    if (folded[j]) out.push_back(static_cast<int>(j) + 1);
  return out;
}

bool operator<(const Gallery& a, const Gallery& b) {
  if (a.alcoves != b.alcoves) return a.alcoves < b.alcoves;
  return a.folded < b.folded;
}

namespace {

int vertex_label(const RootSystem& rs, const MinimalGallery& m) {
  for (int k = 0; k <= rs.rank(); ++k)
    if (m.alcoves.back().apply(rs.alcove_vertex(k)) == m.lambda) return k;
  throw std::logic_error("lambda is not a vertex of the last alcove");
}

}  // namespace

Gallery gallery_from_choices(const RootSystem& rs, const MinimalGallery& m, const WeylElement& w,
                             const std::vector<bool>& folded) {
  if (folded.size() != m.length()) throw std::invalid_argument("gallery_from_choices: wrong number of steps");
  Gallery g;
  g.type_word = m.type_word;
  g.folded = folded;
  g.target_vertex = vertex_label(rs, m);
  AffineElement u = AffineElement::linear(w);
  g.alcoves.push_back(u);
  for (std::size_t j = 0; j < folded.size(); ++j) {
    if (!folded[j]) u = u * AffineElement::simple(rs, m.type_word[j]);
    g.alcoves.push_back(u);
  }
  return g;
}

std::vector<Gallery> enumerate_folded(const RootSystem& rs, const MinimalGallery& m, bool positive_only) {
  std::vector<Gallery> out;
  const int label = vertex_label(rs, m);
  Gallery g;
  g.type_word = m.type_word;
  g.target_vertex = label;
  auto rec = [&](auto& self, std::size_t j) -> void {
    if (j == m.length()) {
      out.push_back(g);
      return;
    }
    const AffineElement u = g.alcoves.back();
    const int i = m.type_word[j];
    g.alcoves.push_back(u * AffineElement::simple(rs, i));
    g.folded.push_back(false);
    self(self, j + 1);
    g.alcoves.back() = u;
    g.folded.back() = true;
    if (!positive_only || side_of(rs, u, panel_wall(rs, u, i)) > 0) self(self, j + 1);
    g.alcoves.pop_back();
    g.folded.pop_back();
  };
  for (const auto& w : enumerate_group(rs)) {
    g.alcoves = {AffineElement::linear(w)};
    g.folded.clear();
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_positively_folded(const RootSystem& rs, const Gallery& g) {
  for (std::size_t j = 0; j < g.folded.size(); ++j) {
    if (!g.folded[j]) continue;
    const AffineElement& u = g.alcoves[j];
    if (side_of(rs, u, panel_wall(rs, u, g.type_word[j])) <= 0) return false;
  }
  return true;
}

Covector target(const RootSystem& rs, const Gallery& g) {
  return g.alcoves.back().apply(rs.alcove_vertex(g.target_vertex));
}

namespace {

std::vector<int> auxiliary_word(const RootSystem& rs, const Gallery& g) {
  // a_- = w0(a); the stretch to w(a) follows the least reduced word of w0 w
  const WeylElement& w = g.alcoves.front().finite_part();
  if (!g.alcoves.front().translation().is_zero()) throw std::invalid_argument("gallery origin does not contain 0");
  return (WeylElement::longest(rs) * w).word();
}

}  // namespace

std::vector<LoadBearingWall> load_bearing_walls(const RootSystem& rs, const Gallery& g) {
  if (!is_positively_folded(rs, g)) throw std::invalid_argument("load_bearing_walls: gallery not positively folded");
  std::vector<LoadBearingWall> out;
  auto aux = auxiliary_word(rs, g);
  AffineElement u = AffineElement::linear(WeylElement::longest(rs));
  const int q = static_cast<int>(aux.size());
  for (int j = 0; j < q; ++j) {
    // letters of the finite Weyl group are affine labels shifted by one
    out.push_back({panel_wall(rs, u, aux[j] + 1), j - q + 1, 1});
    u = u * AffineElement::simple(rs, aux[j] + 1);
  }
  for (std::size_t j = 0; j < g.folded.size(); ++j) {
    const AffineElement& prev = g.alcoves[j];
    AffineWall m = panel_wall(rs, prev, g.type_word[j]);
    Rational s = side_of(rs, prev, m);
    int step = static_cast<int>(j) + 1;
    if (g.folded[j] && s > 0) out.push_back({m, step, 2});
    if (!g.folded[j] && s < 0) out.push_back({m, step, 3});
  }
  return out;
}

std::int64_t dim_gallery(const RootSystem& rs, const Gallery& g) {
  return static_cast<std::int64_t>(load_bearing_walls(rs, g).size());
}

std::vector<std::string> parameter_tally(const RootSystem& rs, const Gallery& g) {
  std::vector<std::string> out(auxiliary_word(rs, g).size(), "C");
  for (std::size_t j = 0; j < g.folded.size(); ++j) {
    const AffineElement& prev = g.alcoves[j];
    Rational s = side_of(rs, prev, panel_wall(rs, prev, g.type_word[j]));
    if (g.folded[j])
      out.push_back("C*");
    else
      out.push_back(s < 0 ? "C" : "pt");
  }
  return out;
}

std::vector<Gallery> ls_galleries(const RootSystem& rs, const MinimalGallery& m, const Covector& mu) {
  std::vector<Gallery> out;
  Rational bound = rs.rho_pairing(m.lambda + mu);
  for (auto& g : enumerate_folded(rs, m, true))
    if (target(rs, g) == mu && Rational(dim_gallery(rs, g)) == bound) out.push_back(std::move(g));
  return out;
}

PLPath gallery_to_path(const RootSystem& rs, const MinimalGallery& m, const Gallery& g) {
  if (g.type_word != m.type_word) throw std::invalid_argument("gallery_to_path: type mismatch");
  std::vector<Segment> segs;
  const std::size_t p = m.length();
  for (std::size_t j = 0; j <= p; ++j) {
    Rational a = j == 0 ? Rational(0) : m.times[j - 1];
    Rational b = j == p ? Rational(1) : m.times[j];
    if (b <= a) continue;
    WeylElement phi = g.alcoves[j].finite_part() * m.alcoves[j].finite_part().inverse();
    segs.push_back({phi.apply(m.lambda), b - a});
  }
  return PLPath(g.alcoves.front().apply(rs.zero()), std::move(segs));
}

}  // namespace lsp
