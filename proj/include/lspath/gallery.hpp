#pragma once

#include "lspath/path.hpp"

#include <string>
#include <vector>

namespace lsp {

// x -> w(x) + t, with t in Q^vee
class AffineElement {
 public:
  AffineElement(WeylElement w, Covector t) : w_(std::move(w)), t_(std::move(t)) {}
  static AffineElement identity(const RootSystem& rs) { return {WeylElement::identity(rs), rs.zero()}; }
  static AffineElement linear(const WeylElement& w) { return {w, w.root_system().zero()}; }
  // s_i for i >= 1 is (r_i, 0); s_0 is the reflection in theta = 1
  static AffineElement simple(const RootSystem& rs, int i);

  const WeylElement& finite_part() const { return w_; }
  const Covector& translation() const { return t_; }
  Covector apply(const Covector& x) const { return w_.apply(x) + t_; }
  AffineElement operator*(const AffineElement& o) const { return {w_ * o.w_, w_.apply(o.t_) + t_}; }
  AffineElement inverse() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) { return a.w_ == b.w_ && a.t_ == b.t_; }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    return a.w_.rho_image() != b.w_.rho_image() ? a.w_.rho_image() < b.w_.rho_image() : a.t_ < b.t_;
  }

 private:
  WeylElement w_;
  Covector t_;
};

// Affine hyperplane beta(x) = level, beta a positive root.
struct AffineWall {
  int root = 0;
  std::int64_t level = 0;
  Wall as_wall() const { return {root, -level}; }
  friend bool operator==(const AffineWall& a, const AffineWall& b) { return a.root == b.root && a.level == b.level; }
  friend bool operator<(const AffineWall& a, const AffineWall& b) {
    return a.root != b.root ? a.root < b.root : a.level < b.level;
  }
};

// The wall carrying the panel of type i of the alcove u(a).
AffineWall panel_wall(const RootSystem& rs, const AffineElement& u, int i);
// beta(interior point of u(a)) - level: positive when the alcove is away from the germ of -C^v
Rational side_of(const RootSystem& rs, const AffineElement& u, const AffineWall& m);

// The chosen minimal gallery from the fundamental alcove to the alcove at
// lambda containing the end of [0, lambda].
struct MinimalGallery {
  Covector lambda;
  std::vector<int> type_word;
  std::vector<AffineElement> alcoves;  // c_0 .. c_p
  std::vector<AffineWall> walls;       // wall crossed at step j (1-based steps stored 0-based)
  std::vector<Rational> times;         // time at which [0, lambda] meets walls[j]
  std::size_t length() const { return type_word.size(); }
};

MinimalGallery minimal_gallery(const RootSystem& rs, const Covector& lambda);

struct Gallery {
  std::vector<int> type_word;
  std::vector<AffineElement> alcoves;  // a'_0 .. a'_p
  std::vector<bool> folded;            // folded[j] for step j+1
  int target_vertex = 0;               // label k with c_p(vertex k) = lambda in the model
  std::vector<int> fold_steps() const;
  friend bool operator<(const Gallery& a, const Gallery& b);
  friend bool operator==(const Gallery& a, const Gallery& b) { return a.alcoves == b.alcoves && a.folded == b.folded; }
};

Gallery gallery_from_choices(const RootSystem& rs, const MinimalGallery& m, const WeylElement& w,
                             const std::vector<bool>& folded);
// Gamma(gamma_lambda) when positive_only is false, Gamma^+ otherwise.
std::vector<Gallery> enumerate_folded(const RootSystem& rs, const MinimalGallery& m, bool positive_only);
bool is_positively_folded(const RootSystem& rs, const Gallery& g);

Covector target(const RootSystem& rs, const Gallery& g);

struct LoadBearingWall {
  AffineWall wall;
  int step;  // -q+1 .. p
  int kind;  // which of the three cases
};

// Steps -q+1..0 run along the lexicographically least minimal gallery from a_- to a'_0.
std::vector<LoadBearingWall> load_bearing_walls(const RootSystem& rs, const Gallery& g);
std::int64_t dim_gallery(const RootSystem& rs, const Gallery& g);
// Per-step parameter space of the preimage: "C", "C*" or "pt", auxiliary stretch first.
std::vector<std::string> parameter_tally(const RootSystem& rs, const Gallery& g);

std::vector<Gallery> ls_galleries(const RootSystem& rs, const MinimalGallery& m, const Covector& mu);
PLPath gallery_to_path(const RootSystem& rs, const MinimalGallery& m, const Gallery& g);

}  // namespace lsp
