#pragma once

#include "lspath/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lsp {

struct CartanType {
  char series = 'A';
  int rank = 1;

  static CartanType parse(const std::string& s);  // "A2", "G2", "E8"
  std::string name() const;
  void validate() const;  // throws std::invalid_argument
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct Root {
  std::vector<std::int64_t> coeffs;      // simple-root basis; also the functional on coweight coords
  std::vector<std::int64_t> co_coeffs;   // the coroot in the simple-coroot basis
  Covector coroot;                       // the coroot in the fundamental-coweight basis
  std::int64_t height = 0;
};

// Affine wall M(alpha,k) = { x : alpha(x) + k = 0 } for a positive root alpha.
struct Wall {
  int root = 0;  // index into positive_roots()
  std::int64_t level = 0;
  friend bool operator==(const Wall& a, const Wall& b) { return a.root == b.root && a.level == b.level; }
  friend bool operator<(const Wall& a, const Wall& b) {
    return a.root != b.root ? a.root < b.root : a.level < b.level;
  }
};

class RootSystem {
 public:
  explicit RootSystem(CartanType ct);
  static RootSystem build(const std::string& type) { return RootSystem(CartanType::parse(type)); }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  // cartan()[i][j] = <alpha_i^vee, alpha_j>
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return pos_; }
  std::size_t num_positive_roots() const { return pos_.size(); }
  int simple_root_index(int i) const { return simple_idx_[i]; }
  int highest_root_index() const { return theta_idx_; }
  const Root& highest_root() const { return pos_[theta_idx_]; }
  const std::vector<std::int64_t>& highest_root_coeffs() const { return pos_[theta_idx_].coeffs; }
  std::int64_t k_phi() const { return k_phi_; }
  // rho as half-sum of positive roots, simple-root coordinates
  const std::vector<Rational>& rho() const { return rho_; }

  Covector zero() const { return Covector(rank()); }
  Covector fundamental_coweight(int i) const;
  Covector simple_coroot(int i) const { return pos_[simple_idx_[i]].coroot; }
  Covector rho_vee() const;  // sum of fundamental coweights

  Rational pair(int root, const Covector& x) const;  // <beta, x>
  Rational pair_coeffs(const std::vector<std::int64_t>& c, const Covector& x) const;
  Rational rho_pairing(const Covector& x) const;     // <rho, x>
  Rational form(const Covector& x, const Covector& y) const;  // W-invariant, sum over positive roots

  Covector reflect(int root, const Covector& x) const;
  Covector simple_reflect(int i, const Covector& x) const;
  Covector affine_reflect(const Wall& m, const Covector& x) const;

  bool is_dominant(const Covector& x) const;
  bool is_regular(const Covector& x) const;
  Covector dominant_projection(const Covector& x) const;
  Covector star(const Covector& lambda) const;  // -w0 lambda; lambda must be dominant

  bool in_P(const Covector& x) const { return x.is_integral(); }
  bool in_Q(const Covector& x) const;
  Covector coroot_coordinates(const Covector& x) const;
  // lambda - mu in the nonnegative span of simple coroots
  bool dominates(const Covector& lambda, const Covector& mu) const;

  // Fundamental alcove: alpha_i >= 0, theta <= 1. Vertex 0 is the origin,
  // vertex i the point fundamental_coweight(i)/m_i.
  Covector alcove_vertex(int i) const;
  Covector alcove_barycenter() const;
  Covector negative_alcove_barycenter() const { return -alcove_barycenter(); }
  bool in_fundamental_alcove(const Covector& x) const;
  // W^a-orbit representative in the fundamental alcove; letters are
  // affine simple reflections (0 = reflection in theta = 1).
  Covector fold_into_alcove(const Covector& x, std::vector<int>* letters = nullptr) const;
  Covector affine_simple_reflect(int i, const Covector& x) const;
  bool is_alcove_vertex(const Covector& x) const;
  bool is_special(const Covector& x) const { return in_P(x); }
  // phi_lambda = w_lambda o tau_lambda on the vertex labels 0..rank
  std::vector<int> alcove_vertex_action(const Covector& lambda) const;
  std::vector<int> special_vertex_labels() const;  // labels with m_i = 1, plus 0

  std::vector<Covector> orbit(const Covector& x) const;  // sorted
  std::int64_t weyl_group_order() const;

  std::string to_json() const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<Root> pos_;
  std::vector<int> simple_idx_;
  int theta_idx_ = 0;
  std::int64_t k_phi_ = 1;
  std::vector<Rational> rho_;
  std::vector<std::vector<Rational>> cartan_inv_;
};

IntMatrix cartan_matrix(const CartanType& ct);

}  // namespace lsp
