#pragma once

#include "lspath/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsp {

struct Segment {
  Covector dir;  // velocity
  Rational dur;
  friend bool operator==(const Segment& a, const Segment& b) { return a.dur == b.dur && a.dir == b.dir; }
};

// Piecewise-linear path on [0,1]: a base point and segments whose durations
// are positive and sum to 1. Kept canonical: equal adjacent velocities are merged.
class PLPath {
 public:
  PLPath() = default;
  PLPath(Covector base, std::vector<Segment> segs);

  static PLPath straight(const Covector& lambda);  // [0, lambda]
  static PLPath from_directions(const Covector& base, const std::vector<Covector>& dirs,
                                const std::vector<Rational>& durations);

  const Covector& base() const { return base_; }
  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t rank() const { return base_.size(); }
  bool is_degenerate() const { return segs_.size() == 1 && segs_[0].dir.is_zero(); }
  bool is_normalized() const { return base_.is_zero(); }

  Covector endpoint() const;
  Covector at(const Rational& t) const;
  std::vector<Rational> knot_times() const;    // 0, end of each segment
  std::vector<Covector> knot_points() const;   // positions at knot_times
  PLPath translated(const Covector& v) const;

  friend bool operator==(const PLPath& a, const PLPath& b) { return a.base_ == b.base_ && a.segs_ == b.segs_; }
  friend bool operator!=(const PLPath& a, const PLPath& b) { return !(a == b); }
  friend bool operator<(const PLPath& a, const PLPath& b);

  std::string str() const;

 private:
  Covector base_;
  std::vector<Segment> segs_;
};

// A change of direction at an interior time.
struct Bend {
  Rational t;
  Covector point;
  Covector before;
  Covector after;
};
std::vector<Bend> bends(const PLPath& p);

// Common dominant projection of all velocities, if any.
std::optional<Covector> path_type(const RootSystem& rs, const PLPath& p);
bool is_lambda_path(const RootSystem& rs, const PLPath& p, const Covector& lambda);

// Root operators. Paths must start at 0.
std::int64_t op_Q(const RootSystem& rs, const PLPath& p, int i);
std::int64_t op_P(const RootSystem& rs, const PLPath& p, int i);
std::optional<PLPath> e_op(const RootSystem& rs, const PLPath& p, int i);
std::optional<PLPath> f_op(const RootSystem& rs, const PLPath& p, int i);

std::vector<PLPath> generate_LS(const RootSystem& rs, const Covector& lambda);

struct LSBendChain {
  Rational a;                  // breakpoint time a_j
  std::vector<Covector> etas;  // sigma_{j,i}(lambda), i = 0..s_j
  std::vector<int> roots;      // beta_{j,i}
  std::vector<std::string> coset_words;
};

struct LSCertificate {
  Covector lambda;
  std::vector<LSBendChain> chains;
};

std::optional<LSCertificate> is_LS(const RootSystem& rs, const PLPath& p, const Covector& lambda);
// (LS0) + (LS1) + (LS2) without the grading condition (LS3)
bool ls12_satisfiable(const RootSystem& rs, const PLPath& p, const Covector& lambda);

struct HeckeMode {
  bool alcove = false;
  Covector interior;  // interior point of the alcove when alcove == true
  static HeckeMode negative_chamber() { return {}; }
  static HeckeMode toward_alcove(const Covector& interior) { return {true, interior}; }
  static HeckeMode negative_alcove(const RootSystem& rs) { return toward_alcove(rs.negative_alcove_barycenter()); }
  ChamberDatum chamber_at(const RootSystem& rs, const Covector& point) const;
};

struct HeckeReport {
  bool ok = true;
  std::vector<Bend> bends;
  std::vector<std::optional<Chain>> chains;
  explicit operator bool() const { return ok; }
};

HeckeReport is_hecke(const RootSystem& rs, const PLPath& p, const HeckeMode& mode = HeckeMode::negative_chamber());
bool is_positively_folded(const RootSystem& rs, const PLPath& p);
bool is_billiard(const RootSystem& rs, const PLPath& p);

PLPath fold_dominant(const RootSystem& rs, const PLPath& p);
PLPath dilate(const PLPath& p, std::int64_t n);
std::optional<LSCertificate> coarse_ls_upgrade(const RootSystem& rs, const PLPath& p);

// Walls M(beta,k) that the path leaves toward the positive side at some t in [0,1).
std::int64_t load_bearing_count(const RootSystem& rs, const PLPath& p);

bool inside_dominant_chamber(const RootSystem& rs, const PLPath& p);

// Generalized paths p_1 * ... * p_l with p_i of type eta_i in N varpi_{j_i}^vee.
using Decomposition = std::vector<std::pair<int, std::int64_t>>;  // (fundamental index, multiple)
Decomposition default_decomposition(const Covector& eta);
void validate_decomposition(const RootSystem& rs, const Covector& eta, const Decomposition& d);

struct GeneralizedPath {
  std::vector<PLPath> factors;
  std::vector<Covector> types;

  PLPath concatenated() const;  // factor i runs on [i/l, (i+1)/l]
  static GeneralizedPath split(const PLPath& single, const std::vector<Covector>& types);
  Covector base() const { return factors.front().base(); }
  Covector endpoint() const { return factors.back().endpoint(); }
  friend bool operator==(const GeneralizedPath& a, const GeneralizedPath& b) { return a.factors == b.factors; }
  friend bool operator<(const GeneralizedPath& a, const GeneralizedPath& b) { return a.factors < b.factors; }
};

std::vector<Covector> decomposition_types(const RootSystem& rs, const Decomposition& d);
GeneralizedPath generalized_path(const RootSystem& rs, const Covector& eta, const Decomposition& d);
bool is_generalized_LS(const RootSystem& rs, const GeneralizedPath& p);
bool is_generalized_hecke(const RootSystem& rs, const GeneralizedPath& p, const HeckeMode& mode);
std::vector<GeneralizedPath> generate_generalized_LS(const RootSystem& rs, const Covector& eta, const Decomposition& d);

}  // namespace lsp
