#pragma once

#include "lspath/rootsys.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lsp {

// Element of W^v, identified by its image of rho^vee. Carries the
// lexicographically least reduced word and the action matrix on coweights.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  static WeylElement from_rho_image(const RootSystem& rs, const Covector& v);
  static WeylElement longest(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  const Covector& rho_image() const { return rho_img_; }
  bool is_identity() const { return word_.empty(); }
  const IntMatrix& matrix() const { return mat_; }

  Covector apply(const Covector& x) const;
  Covector apply_inverse(const Covector& x) const;
  // coefficients of w(beta) for a root given by simple-root coefficients
  std::vector<std::int64_t> apply_to_root(const std::vector<std::int64_t>& c) const;
  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;

  bool left_descent(int i) const { return rho_img_[i] < 0; }
  bool right_descent(int i) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.rho_img_ == b.rho_img_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.word_.size() != b.word_.size() ? a.word_.size() < b.word_.size() : a.word_ < b.word_;
  }

  std::string str() const;  // "s1s2s1" (1-based letters), "e" for identity

 private:
  WeylElement(const RootSystem& rs, std::vector<int> word);
  const RootSystem* rs_ = nullptr;
  std::vector<int> word_;
  Covector rho_img_;
  IntMatrix mat_, inv_;
};

std::vector<int> canonical_word(const RootSystem& rs, const Covector& rho_image);
// letters i_1..i_k with x = s_{i_1}...s_{i_k} dominant_projection(x), greedy on the least negative index
std::vector<int> word_to_dominant(const RootSystem& rs, const Covector& x);

int inversion_count(const RootSystem& rs, const WeylElement& w);
bool bruhat_leq(const WeylElement& a, const WeylElement& b);
// Order on W/W_lambda transported to the orbit W.lambda: the minimal
// coset representatives of the two vectors are compared.
bool orbit_leq(const RootSystem& rs, const Covector& eta_small, const Covector& eta_big);
int ell_lambda(const RootSystem& rs, const Covector& eta);  // length of the minimal rep sending dom to eta

struct CosetRep {
  WeylElement rep;
  Covector lambda;
  Covector image() const { return rep.apply(lambda); }
};

CosetRep coset_min_rep(const WeylElement& w, const Covector& lambda);
CosetRep coset_rep_of(const RootSystem& rs, const Covector& eta);  // minimal rep mapping dom(eta) to eta
bool coset_leq(const CosetRep& a, const CosetRep& b);

std::vector<WeylElement> enumerate_group(const RootSystem& rs);

// Reference chamber of a chain search, given by a generic vector inside it.
// A chain step through Ker(beta) leaves the side of this chamber.
struct ChamberDatum {
  Covector direction;
  static ChamberDatum negative_dominant(const RootSystem& rs) { return {-rs.rho_vee()}; }
  // local chamber at p of the directions pointing toward an alcove with interior point b
  static ChamberDatum toward(const Covector& p, const Covector& b) { return {b - p}; }
};

struct Chain {
  std::vector<Covector> etas;  // eta_0 .. eta_m
  std::vector<int> roots;      // beta_1 .. beta_m, indices into positive_roots()
  std::size_t size() const { return roots.size(); }
};

class OrbitMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shortest chain eta_from -> eta_to with r_beta(eta_{i-1}) = eta_i, beta on the
// same strict side as the chamber at eta_{i-1}, and beta(p) integral when a
// constraint point is given. Throws OrbitMismatch when the orbits differ.
std::optional<Chain> find_chain(const RootSystem& rs, const Covector& eta_from, const Covector& eta_to,
                                const ChamberDatum& chamber, const std::optional<Covector>& constraint = std::nullopt);

// Every eta reachable from eta_from by such chains (eta_from included), sorted.
std::vector<Covector> chain_reachable(const RootSystem& rs, const Covector& eta_from, const ChamberDatum& chamber,
                                      const std::optional<Covector>& constraint = std::nullopt);

bool verify_chain(const RootSystem& rs, const Chain& c, const ChamberDatum& chamber,
                  const std::optional<Covector>& constraint = std::nullopt);

}  // namespace lsp
