#include "lspath/path.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lsp {

PLPath::PLPath(Covector base, std::vector<Segment> segs) : base_(std::move(base)) {
  if (segs.empty()) throw std::invalid_argument("PLPath: no segments");
  Rational total = 0;
  for (auto& s : segs) {
    if (s.dur <= 0) throw std::invalid_argument("PLPath: nonpositive duration");
    if (s.dir.size() != base_.size()) throw std::invalid_argument("PLPath: rank mismatch");
    total += s.dur;
    if (!segs_.empty() && segs_.back().dir == s.dir)
      segs_.back().dur += s.dur;
    else
      segs_.push_back(std::move(s));
  }
  if (total != 1) throw std::invalid_argument("PLPath: durations sum to " + to_string(total));
}

PLPath PLPath::straight(const Covector& lambda) { return PLPath(Covector(lambda.size()), {{lambda, 1}}); }

PLPath PLPath::from_directions(const Covector& base, const std::vector<Covector>& dirs,
                               const std::vector<Rational>& durations) {
  if (dirs.size() != durations.size()) throw std::invalid_argument("PLPath: size mismatch");
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < dirs.size(); ++i) segs.push_back({dirs[i], durations[i]});
  return PLPath(base, std::move(segs));
}

Covector PLPath::endpoint() const {
  Covector x = base_;
  for (const auto& s : segs_) x += s.dir * s.dur;
  return x;
}

Covector PLPath::at(const Rational& t) const {
  Covector x = base_;
  Rational start = 0;
  for (const auto& s : segs_) {
    Rational end = start + s.dur;
    if (t <= end) return x + s.dir * (t - start);
    x += s.dir * s.dur;
    start = end;
  }
  return x;
}

std::vector<Rational> PLPath::knot_times() const {
  std::vector<Rational> ts{0};
  for (const auto& s : segs_) ts.push_back(ts.back() + s.dur);
  return ts;
}

std::vector<Covector> PLPath::knot_points() const {
  std::vector<Covector> xs{base_};
  for (const auto& s : segs_) xs.push_back(xs.back() + s.dir * s.dur);
  return xs;
}

PLPath PLPath::translated(const Covector& v) const {
  PLPath p = *this;
  p.base_ += v;
  return p;
}

bool operator<(const PLPath& a, const PLPath& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  std::size_t n = std::min(a.segs_.size(), b.segs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.segs_[i].dir != b.segs_[i].dir) return a.segs_[i].dir < b.segs_[i].dir;
    if (a.segs_[i].dur != b.segs_[i].dur) return a.segs_[i].dur < b.segs_[i].dur;
  }
  return a.segs_.size() < b.segs_.size();
}

std::string PLPath::str() const {
  std::string s = base_.str();
  for (const auto& seg : segs_) s += " -[" + seg.dir.str() + " x " + to_string(seg.dur) + "]";
  return s;
}

std::vector<Bend> bends(const PLPath& p) {
  std::vector<Bend> out;
  const auto& segs = p.segments();
  Covector x = p.base();
  Rational t = 0;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    x += segs[i].dir * segs[i].dur;
    t += segs[i].dur;
    out.push_back({t, x, segs[i].dir, segs[i + 1].dir});
  }
  return out;
}

std::optional<Covector> path_type(const RootSystem& rs, const PLPath& p) {
  Covector lambda = rs.dominant_projection(p.segments().front().dir);
  for (const auto& s : p.segments())
    if (rs.dominant_projection(s.dir) != lambda) return std::nullopt;
  return lambda;
}

bool is_lambda_path(const RootSystem& rs, const PLPath& p, const Covector& lambda) {
  auto t = path_type(rs, p);
  return t && *t == lambda;
}

namespace {

void require_normalized(const PLPath& p) {
  if (!p.is_normalized()) throw std::invalid_argument("root operator on a path not starting at 0: " + p.str());
}

void require_index(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple index out of range");
}

// Knot times and values of alpha_i along the path.
struct Profile {
  std::vector<Rational> t, h;

  Profile(const RootSystem& rs, const PLPath& p, int i) : t(p.knot_times()) {
    int r = rs.simple_root_index(i);
    for (const auto& x : p.knot_points()) h.push_back(rs.pair(r, x));
  }

  Rational min() const { return *std::min_element(h.begin(), h.end()); }

  // least s >= from with h(s) = level
  std::optional<Rational> first_at(const Rational& level, const Rational& from) const {
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
      if (t[k + 1] < from) continue;
      if (h[k] == h[k + 1]) {
        if (h[k] == level) return std::max(t[k], from);
        continue;
      }
      Rational s = t[k] + (level - h[k]) * (t[k + 1] - t[k]) / (h[k + 1] - h[k]);
      if (s >= t[k] && s <= t[k + 1] && s >= from) return s;
    }
    return std::nullopt;
  }

  // greatest s <= until with h(s) = level
  std::optional<Rational> last_at(const Rational& level, const Rational& until) const {
    for (std::size_t k = t.size() - 1; k-- > 0;) {
      if (t[k] > until) continue;
      if (h[k] == h[k + 1]) {
        if (h[k] == level) return std::min(t[k + 1], until);
        continue;
      }
      Rational s = t[k] + (level - h[k]) * (t[k + 1] - t[k]) / (h[k + 1] - h[k]);
      if (s >= t[k] && s <= t[k + 1] && s <= until) return s;
    }
    return std::nullopt;
  }
};

// Reflect the velocity by s_i on [a,b]; outside it the path is translated accordingly.
PLPath reflect_on(const RootSystem& rs, const PLPath& p, int i, const Rational& a, const Rational& b) {
  std::vector<Segment> out;
  Rational start = 0;
  for (const auto& s : p.segments()) {
    Rational end = start + s.dur;
    std::vector<Rational> cuts{start};
    if (a > start && a < end) cuts.push_back(a);
    if (b > start && b < end) cuts.push_back(b);
    cuts.push_back(end);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      bool inside = cuts[k] >= a && cuts[k + 1] <= b;
      out.push_back({inside ? rs.simple_reflect(i, s.dir) : s.dir, cuts[k + 1] - cuts[k]});
    }
    start = end;
  }
  return PLPath(p.base(), std::move(out));
}

}  // namespace

std::int64_t op_Q(const RootSystem& rs, const PLPath& p, int i) {
  require_index(rs, i);
  return ceil_of(Profile(rs, p, i).min());
}

std::int64_t op_P(const RootSystem& rs, const PLPath& p, int i) {
  require_index(rs, i);
  Profile pr(rs, p, i);
  return floor_of(pr.h.back() - ceil_of(pr.min()));
}

std::optional<PLPath> e_op(const RootSystem& rs, const PLPath& p, int i) {
  require_normalized(p);
  require_index(rs, i);
  if (p.is_degenerate()) return std::nullopt;
  Profile pr(rs, p, i);
  std::int64_t Q = ceil_of(pr.min());
  if (Q == 0) return std::nullopt;
  Rational q = *pr.first_at(Q, 0);
  Rational y = *pr.last_at(Q + 1, q);
  return reflect_on(rs, p, i, y, q);
}

std::optional<PLPath> f_op(const RootSystem& rs, const PLPath& p, int i) {
  require_normalized(p);
  require_index(rs, i);
  if (p.is_degenerate()) return std::nullopt;
  Profile pr(rs, p, i);
  std::int64_t Q = ceil_of(pr.min());
  std::int64_t P = floor_of(pr.h.back() - Q);
  if (P <= 0) return std::nullopt;
  Rational pt = *pr.last_at(Q, 1);
  Rational x = *pr.first_at(Q + 1, pt);
  return reflect_on(rs, p, i, pt, x);
}

std::vector<PLPath> generate_LS(const RootSystem& rs, const Covector& lambda) {
  if (!rs.is_dominant(lambda) || !rs.in_P(lambda))
    throw std::invalid_argument("generate_LS: lambda must be dominant in P^vee: " + lambda.str());
  PLPath start = PLPath::straight(lambda);
  std::set<PLPath> seen{start};
  std::deque<PLPath> queue{start};
  while (!queue.empty()) {
    PLPath p = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i)
      if (auto q = f_op(rs, p, i); q && seen.insert(*q).second) queue.push_back(*q);
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Search a chain from `from` down to `to` where every step is a reflection
// r_beta with eta' < eta in the orbit order and a * beta(eta') integral.
// With graded = true, ell_lambda must drop by exactly one per step.
std::optional<LSBendChain> ls_chain(const RootSystem& rs, const Rational& a, const Covector& from, const Covector& to,
                                    bool graded) {
  if (from == to) return std::nullopt;  // not a bend
  const int target_ell = ell_lambda(rs, to);
  std::map<Covector, std::pair<Covector, int>> parent;
  std::deque<Covector> queue{from};
  std::set<Covector> seen{from};
  bool found = false;
  while (!queue.empty() && !found) {
    Covector eta = queue.front();
    queue.pop_front();
    const int ell = ell_lambda(rs, eta);
    if (graded && ell <= target_ell) continue;
    for (std::size_t k = 0; k < rs.num_positive_roots() && !found; ++k) {
      int b = static_cast<int>(k);
      Rational v = rs.pair(b, eta);
      if (v == 0) continue;
      if (!is_integer(a * v)) continue;  // beta(eta') = -beta(eta)
      Covector next = eta - rs.positive_roots()[b].coroot * v;
      if (seen.count(next)) continue;
      if (graded ? ell_lambda(rs, next) != ell - 1 : !orbit_leq(rs, next, eta)) continue;
      if (graded && !orbit_leq(rs, next, eta)) continue;
      seen.insert(next);
      parent.emplace(next, std::make_pair(eta, b));
      if (next == to) found = true;
      queue.push_back(next);
    }
  }
  if (!found) return std::nullopt;
  LSBendChain c;
  c.a = a;
  Covector cur = to;
  while (cur != from) {
    auto& [prev, root] = parent.at(cur);
    c.etas.push_back(cur);
    c.roots.push_back(root);
    cur = prev;
  }
  c.etas.push_back(from);
  std::reverse(c.etas.begin(), c.etas.end());
  std::reverse(c.roots.begin(), c.roots.end());
  for (const auto& e : c.etas) c.coset_words.push_back(coset_rep_of(rs, e).rep.str());
  return c;
}

bool ls0(const RootSystem& rs, const PLPath& p, const Covector& lambda) {
  return rs.in_P(p.base()) && rs.in_P(lambda) && rs.is_dominant(lambda);
}

void require_lambda_path(const RootSystem& rs, const PLPath& p, const Covector& lambda, const char* who) {
  if (!is_lambda_path(rs, p, lambda))
    throw std::invalid_argument(std::string(who) + ": not a path of type " + lambda.str() + ": " + p.str());
}

}  // namespace

std::optional<LSCertificate> is_LS(const RootSystem& rs, const PLPath& p, const Covector& lambda) {
  require_lambda_path(rs, p, lambda, "is_LS");
  if (!ls0(rs, p, lambda)) return std::nullopt;
  LSCertificate cert{lambda, {}};
  for (const auto& b : bends(p)) {
    auto c = ls_chain(rs, b.t, b.before, b.after, true);
    if (!c) return std::nullopt;
    cert.chains.push_back(std::move(*c));
  }
  return cert;
}

bool ls12_satisfiable(const RootSystem& rs, const PLPath& p, const Covector& lambda) {
  require_lambda_path(rs, p, lambda, "ls12_satisfiable");
  if (!ls0(rs, p, lambda)) return false;
  for (const auto& b : bends(p))
    if (!ls_chain(rs, b.t, b.before, b.after, false)) return false;
  return true;
}

ChamberDatum HeckeMode::chamber_at(const RootSystem& rs, const Covector& point) const {
  return alcove ? ChamberDatum::toward(point, interior) : ChamberDatum::negative_dominant(rs);
}

HeckeReport is_hecke(const RootSystem& rs, const PLPath& p, const HeckeMode& mode) {
  if (!path_type(rs, p)) throw std::invalid_argument("is_hecke: not a lambda-path: " + p.str());
  HeckeReport rep;
  rep.bends = bends(p);
  for (const auto& b : rep.bends) {
    auto c = find_chain(rs, b.before, b.after, mode.chamber_at(rs, b.point), b.point);
    if (!c) rep.ok = false;
    rep.chains.push_back(std::move(c));
  }
  return rep;
}

bool is_positively_folded(const RootSystem& rs, const PLPath& p) {
  if (!path_type(rs, p)) return false;
  for (const auto& b : bends(p))
    if (!find_chain(rs, b.before, b.after, ChamberDatum::negative_dominant(rs))) return false;
  return true;
}

bool is_billiard(const RootSystem& rs, const PLPath& p) {
  if (!path_type(rs, p)) return false;
  for (const auto& b : bends(p)) {
    std::vector<int> fix;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
      if (is_integer(rs.pair(static_cast<int>(k), b.point))) fix.push_back(static_cast<int>(k));
    std::set<Covector> seen{b.before};
    std::deque<Covector> queue{b.before};
    while (!queue.empty() && !seen.count(b.after)) {
      Covector eta = queue.front();
      queue.pop_front();
      for (int r : fix)
        if (Covector n = rs.reflect(r, eta); seen.insert(n).second) queue.push_back(n);
    }
    if (!seen.count(b.after)) return false;
  }
  return true;
}

PLPath fold_dominant(const RootSystem& rs, const PLPath& p) {
  std::vector<Segment> out;
  Covector x = p.base();
  for (const auto& s : p.segments()) {
    // times in (0,dur) where the segment meets a vectorial wall transversally
    std::vector<Rational> cuts{0, s.dur};
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      Rational slope = rs.pair(static_cast<int>(k), s.dir);
      if (slope == 0) continue;
      Rational u = -rs.pair(static_cast<int>(k), x) / slope;
      if (u > 0 && u < s.dur) cuts.push_back(u);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      Covector mid = x + s.dir * ((cuts[k] + cuts[k + 1]) / 2);
      Covector d = s.dir;
      for (int l : word_to_dominant(rs, mid)) {
        mid = rs.simple_reflect(l, mid);
        d = rs.simple_reflect(l, d);
      }
      out.push_back({d, cuts[k + 1] - cuts[k]});
    }
    x += s.dir * s.dur;
  }
  return PLPath(rs.dominant_projection(p.base()), std::move(out));
}

PLPath dilate(const PLPath& p, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("dilate: factor must be positive");
  std::vector<Segment> segs = p.segments();
  for (auto& s : segs) s.dir *= n;
  return PLPath(p.base() * n, std::move(segs));
}

std::optional<LSCertificate> coarse_ls_upgrade(const RootSystem& rs, const PLPath& p) {
  if (!is_hecke(rs, p)) throw std::invalid_argument("coarse_ls_upgrade: path is not Hecke: " + p.str());
  if (!rs.in_P(p.base())) return std::nullopt;
  for (const auto& b : bends(p))
    if (!rs.is_special(b.point)) return std::nullopt;
  Covector lambda = *path_type(rs, p);
  auto cert = is_LS(rs, p, lambda);
  if (!cert) throw std::logic_error("Hecke path folded at special vertices is not LS: " + p.str());
  return cert;
}

std::int64_t load_bearing_count(const RootSystem& rs, const PLPath& p) {
  std::int64_t n = 0;
  Covector x = p.base();
  for (const auto& s : p.segments()) {
    Covector y = x + s.dir * s.dur;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      int b = static_cast<int>(k);
      if (rs.pair(b, s.dir) <= 0) continue;
      // integers m with beta(x) <= m < beta(y)
      n += ceil_of(rs.pair(b, y)) - ceil_of(rs.pair(b, x));
    }
    x = y;
  }
  return n;
}

bool inside_dominant_chamber(const RootSystem& rs, const PLPath& p) {
  for (const auto& x : p.knot_points())
    if (!rs.is_dominant(x)) return false;
  return true;
}

Decomposition default_decomposition(const Covector& eta) {
  Decomposition d;
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i] != 0) d.emplace_back(static_cast<int>(i), eta[i].numerator());
  return d;
}

void validate_decomposition(const RootSystem& rs, const Covector& eta, const Decomposition& d) {
  if (!rs.in_P(eta) || !rs.is_dominant(eta)) throw std::invalid_argument("decomposition: eta not in P^vee_+");
  if (d.empty()) throw std::invalid_argument("decomposition: empty");
  Covector sum = rs.zero();
  for (auto [i, n] : d) {
    if (i < 0 || i >= rs.rank() || n <= 0) throw std::invalid_argument("decomposition: bad piece");
    sum[i] += n;
  }
  if (sum != eta) throw std::invalid_argument("decomposition does not sum to " + eta.str());
}

std::vector<Covector> decomposition_types(const RootSystem& rs, const Decomposition& d) {
  std::vector<Covector> out;
  for (auto [i, n] : d) out.push_back(rs.fundamental_coweight(i) * n);
  return out;
}

PLPath GeneralizedPath::concatenated() const {
  const std::int64_t l = static_cast<std::int64_t>(factors.size());
  std::vector<Segment> segs;
  for (const auto& f : factors)
    for (const auto& s : f.segments()) segs.push_back({s.dir * l, s.dur / l});
  return PLPath(factors.front().base(), std::move(segs));
}

GeneralizedPath GeneralizedPath::split(const PLPath& single, const std::vector<Covector>& types) {
  const std::int64_t l = static_cast<std::int64_t>(types.size());
  GeneralizedPath g;
  g.types = types;
  std::vector<std::vector<Segment>> slots(types.size());
  Rational start = 0;
  for (const auto& s : single.segments()) {
    Rational end = start + s.dur;
    Rational a = start;
    while (a < end) {
      std::int64_t slot = floor_of(a * l);
      Rational b = std::min(end, Rational(slot + 1, l));
      slots[slot].push_back({s.dir * Rational(1, l), (b - a) * l});
      a = b;
    }
    start = end;
  }
  for (std::int64_t k = 0; k < l; ++k)
    g.factors.emplace_back(single.at(Rational(k, l)), std::move(slots[k]));
  return g;
}

GeneralizedPath generalized_path(const RootSystem& rs, const Covector& eta, const Decomposition& d) {
  validate_decomposition(rs, eta, d);
  GeneralizedPath g;
  g.types = decomposition_types(rs, d);
  Covector x = rs.zero();
  for (const auto& t : g.types) {
    g.factors.push_back(PLPath::straight(t).translated(x));
    x += t;
  }
  return g;
}

namespace {

bool junctions_ok(const RootSystem& rs, const GeneralizedPath& g, const HeckeMode& mode) {
  for (std::size_t i = 1; i < g.factors.size(); ++i) {
    const Covector& x = g.factors[i].base();
    if (g.factors[i - 1].endpoint() != x) return false;
    const Covector& d_in = g.factors[i - 1].segments().back().dir;
    const Covector& d_out = g.factors[i].segments().front().dir;
    bool ok = false;
    for (const auto& xi : chain_reachable(rs, d_in, mode.chamber_at(rs, x), x)) {
      bool same_chamber = true;
      for (std::size_t k = 0; k < rs.num_positive_roots() && same_chamber; ++k)
        same_chamber = rs.pair(static_cast<int>(k), xi) * rs.pair(static_cast<int>(k), d_out) >= 0;
      if (same_chamber) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_generalized_LS(const RootSystem& rs, const GeneralizedPath& g) {
  if (g.factors.size() != g.types.size() || g.factors.empty()) return false;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    if (!is_lambda_path(rs, g.factors[i], g.types[i]) || !is_LS(rs, g.factors[i], g.types[i])) return false;
  return junctions_ok(rs, g, HeckeMode::negative_chamber());
}

bool is_generalized_hecke(const RootSystem& rs, const GeneralizedPath& g, const HeckeMode& mode) {
  if (g.factors.size() != g.types.size() || g.factors.empty()) return false;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    if (!is_lambda_path(rs, g.factors[i], g.types[i]) || !is_hecke(rs, g.factors[i], mode)) return false;
  return junctions_ok(rs, g, mode);
}

std::vector<GeneralizedPath> generate_generalized_LS(const RootSystem& rs, const Covector& eta,
                                                     const Decomposition& d) {
  GeneralizedPath start = generalized_path(rs, eta, d);
  PLPath s = start.concatenated();
  std::set<PLPath> seen{s};
  std::deque<PLPath> queue{s};
  while (!queue.empty()) {
    PLPath p = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i)
      if (auto q = f_op(rs, p, i); q && seen.insert(*q).second) queue.push_back(*q);
  }
  std::vector<GeneralizedPath> out;
  for (const auto& p : seen) out.push_back(GeneralizedPath::split(p, start.types));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lsp
