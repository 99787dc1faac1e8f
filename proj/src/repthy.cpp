#include "lspath/repthy.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

namespace lsp {

void validate_dominant_integral(const RootSystem& rs, const Covector& x, const char* what) {
  if (static_cast<int>(x.size()) != rs.rank())
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rs.rank()) + " coordinates");
  if (!rs.in_P(x) || !rs.is_dominant(x))
    throw std::invalid_argument(std::string(what) + " must be a dominant integral coweight: " + x.str());
}

std::int64_t weyl_dimension(const RootSystem& rs, const Covector& lambda) {
  validate_dominant_integral(rs, lambda, "lambda");
  Rational d = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    const auto& r = rs.positive_roots()[k];
    d *= (rs.pair(static_cast<int>(k), lambda) + r.height) / Rational(r.height);
  }
  if (!is_integer(d)) throw std::logic_error("Weyl dimension is not an integer");
  return d.numerator();
}

std::vector<Covector> dominant_weights_below(const RootSystem& rs, const Covector& lambda) {
  validate_dominant_integral(rs, lambda, "lambda");
  Covector c = rs.coroot_coordinates(lambda);
  const int n = rs.rank();
  std::vector<std::int64_t> hi(n), k(n, 0);
  for (int i = 0; i < n; ++i) hi[i] = floor_of(c[i]);
  std::vector<std::pair<std::int64_t, Covector>> found;
  for (;;) {
    Covector mu = lambda;
    std::int64_t h = 0;
    for (int i = 0; i < n; ++i) {
      mu -= rs.simple_coroot(i) * k[i];
      h += k[i];
    }
    if (rs.is_dominant(mu)) found.emplace_back(h, mu);
    int i = 0;
    while (i < n && ++k[i] > hi[i]) k[i++] = 0;
    if (i == n) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Covector> out;
  for (auto& [h, mu] : found) out.push_back(std::move(mu));
  return out;
}

MultiplicityTable freudenthal_dominant(const RootSystem& rs, const Covector& lambda) {
  MultiplicityTable m;
  const Covector rho = rs.rho_vee();
  const Rational top = rs.form(lambda + rho, lambda + rho);
  auto lookup = [&](const Covector& x) -> std::int64_t {
    auto it = m.find(rs.dominant_projection(x));
    return it == m.end() ? 0 : it->second;
  };
  for (const auto& mu : dominant_weights_below(rs, lambda)) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    Rational rhs = 0;
    for (const auto& r : rs.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        Covector x = mu + r.coroot * k;
        std::int64_t mx = lookup(x);
        if (mx == 0) break;  // weight strings are unbroken
        rhs += rs.form(x, r.coroot) * mx;
      }
    }
    Rational lhs = top - rs.form(mu + rho, mu + rho);
    Rational v = 2 * rhs / lhs;
    if (!is_integer(v) || v < 0) throw std::logic_error("Freudenthal recursion produced " + to_string(v));
    if (v != 0) m[mu] = v.numerator();
  }
  return m;
}

MultiplicityTable full_character(const RootSystem& rs, const Covector& lambda) {
  MultiplicityTable out;
  for (const auto& [mu, k] : freudenthal_dominant(rs, lambda))
    for (const auto& x : rs.orbit(mu)) out[x] += k;
  return out;
}

std::int64_t mult_freudenthal(const RootSystem& rs, const Covector& lambda, const Covector& mu) {
  auto m = freudenthal_dominant(rs, lambda);
  auto it = m.find(rs.dominant_projection(mu));
  return it == m.end() ? 0 : it->second;
}

std::vector<PLPath> ls_paths_above(const RootSystem& rs, const Covector& lambda, const Covector& floor) {
  validate_dominant_integral(rs, lambda, "lambda");
  PLPath start = PLPath::straight(lambda);
  if (!rs.dominates(lambda, floor)) return {};
  std::set<PLPath> seen{start};
  std::deque<PLPath> queue{start};
  while (!queue.empty()) {
    PLPath p = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      auto q = f_op(rs, p, i);
      if (!q || !rs.dominates(q->endpoint(), floor)) continue;
      if (seen.insert(*q).second) queue.push_back(std::move(*q));
    }
  }
  return {seen.begin(), seen.end()};
}

std::int64_t mult_ls(const RootSystem& rs, const Covector& lambda, const Covector& mu) {
  std::int64_t n = 0;
  for (const auto& p : ls_paths_above(rs, lambda, mu))
    if (p.endpoint() == mu) ++n;
  return n;
}

MultiplicityTable character_ls(const RootSystem& rs, const Covector& lambda) {
  MultiplicityTable m;
  for (const auto& p : ls_paths_above(rs, lambda, rs.zero()))
    if (rs.is_dominant(p.endpoint())) ++m[p.endpoint()];
  return m;
}

MultiplicityTable character_product_oracle(const RootSystem& rs, const Covector& lambda, const Covector& mu) {
  auto a = full_character(rs, lambda), b = full_character(rs, mu);
  MultiplicityTable c;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) c[x + y] += m * n;
  MultiplicityTable out;
  while (!c.empty()) {
    auto top = c.begin();
    for (auto it = c.begin(); it != c.end(); ++it)
      if (rs.rho_pairing(it->first) > rs.rho_pairing(top->first)) top = it;
    Covector nu = top->first;
    std::int64_t k = top->second;
    if (!rs.is_dominant(nu) || k <= 0) throw std::logic_error("character product: bad highest weight " + nu.str());
    out[nu] = k;
    for (const auto& [x, m] : full_character(rs, nu)) {
      auto it = c.find(x);
      if (it == c.end() || it->second < k * m)
        throw std::logic_error("character product: negative multiplicity at " + x.str());
      it->second -= k * m;
      if (it->second == 0) c.erase(it);
    }
  }
  return out;
}

namespace {

bool stays_dominant(const RootSystem& rs, const Covector& lambda, const PLPath& p) {
  for (const auto& x : p.knot_points())
    if (!rs.is_dominant(lambda + x)) return false;
  return true;
}

}  // namespace

std::vector<PLPath> lr_witnesses(const RootSystem& rs, const Covector& lambda, const Covector& mu,
                                 const Covector& nu) {
  validate_dominant_integral(rs, lambda, "lambda");
  validate_dominant_integral(rs, mu, "mu");
  validate_dominant_integral(rs, nu, "nu");
  if (!rs.in_Q(lambda + mu + nu)) return {};
  Covector end = rs.star(nu) - lambda;
  std::vector<PLPath> out;
  for (auto& p : ls_paths_above(rs, mu, end))
    if (p.endpoint() == end && stays_dominant(rs, lambda, p)) out.push_back(std::move(p));
  return out;
}

TensorWitness tensor_invariant_nonzero(const RootSystem& rs, const Covector& lambda, const Covector& mu,
                                       const Covector& nu) {
  TensorWitness w;
  validate_dominant_integral(rs, lambda, "lambda");
  validate_dominant_integral(rs, mu, "mu");
  validate_dominant_integral(rs, nu, "nu");
  if (!rs.in_Q(lambda + mu + nu)) {
    w.lattice_obstruction = true;
    return w;
  }
  auto all = lr_witnesses(rs, lambda, mu, nu);
  if (!all.empty()) {
    w.nonzero = true;
    w.witness = all.front();
  }
  return w;
}

std::int64_t lr_multiplicity(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu) {
  return static_cast<std::int64_t>(lr_witnesses(rs, lambda, mu, nu).size());
}

bool invariant_nonzero(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu) {
  // the invariant space of V(a) x V(b) x V(c) is symmetric in a, b, c
  std::array<Covector, 3> t{lambda, mu, nu};
  std::size_t small = 0;
  std::int64_t best = -1;
  for (std::size_t i = 0; i < 3; ++i) {
    std::int64_t d = weyl_dimension(rs, t[i]);
    if (best < 0 || d < best) {
      best = d;
      small = i;
    }
  }
  return tensor_invariant_nonzero(rs, t[(small + 1) % 3], t[small], t[(small + 2) % 3]).nonzero;
}

ConeResult cone_membership(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu,
                           const ConeOptions& opt) {
  validate_dominant_integral(rs, lambda, "lambda");
  validate_dominant_integral(rs, mu, "mu");
  validate_dominant_integral(rs, nu, "nu");
  ConeResult r;
  r.apex = rs.zero();
  const Covector target = rs.star(nu);
  const HeckeMode a_minus = HeckeMode::negative_alcove(rs);
  if (auto w = tensor_invariant_nonzero(rs, lambda, mu, nu); w.nonzero) {
    r.member = true;
    r.method = "ls-witness";
    r.path = w.witness->translated(lambda);
    if (!is_hecke(rs, *r.path, a_minus))
      throw std::logic_error("LS witness inside C^v is not Hecke for a_-: " + r.path->str());
    return r;
  }
  if (!rs.in_Q(lambda + mu + nu)) {
    // the apex is then no vertex; only the lattice-compatible case is decided
    r.method = "exhausted";
    return r;
  }
  // Apex 0: folding onto C^v keeps the Hecke property for a_-, and inside C^v the
  // directions decrease at every fold, so this search is complete.
  HeckeSearchOptions so;
  so.mode = a_minus;
  so.stay_dominant = true;
  so.node_budget = opt.node_budget;
  auto res = search_hecke_paths(rs, lambda, mu, {target}, so);
  r.nodes = res.nodes;
  r.complete = res.complete;
  if (!res.paths.empty()) {
    r.member = true;
    r.method = "hecke-search";
    r.path = res.paths.front().factors.front();
    return r;
  }
  // Special vertices of a_- are images of 0 under automorphisms of a_-; the others need their own search.
  int cap = opt.max_folds;
  if (cap < 0) {
    std::int64_t walls = 0;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) walls += floor_of(rs.pair(static_cast<int>(k), mu));
    cap = static_cast<int>(std::max<std::int64_t>(1, walls) * static_cast<std::int64_t>(rs.num_positive_roots()));
  }
  for (int i = 1; i <= rs.rank(); ++i) {
    const Covector z = -rs.alcove_vertex(i);
    if (rs.is_special(z)) continue;
    std::vector<Covector> ends;
    for (const auto& v : rs.orbit(nu)) ends.push_back(z - v);
    for (const auto& v : rs.orbit(lambda)) {
      HeckeSearchOptions vo;
      vo.mode = a_minus;
      vo.max_folds = cap;
      vo.node_budget = opt.node_budget;
      auto vr = search_hecke_paths(rs, z + v, mu, ends, vo);
      r.nodes += vr.nodes;
      r.complete = r.complete && vr.complete;
      if (!vr.paths.empty()) {
        r.member = true;
        r.complete = true;
        r.method = "hecke-search-vertex";
        r.apex = z;
        r.path = vr.paths.front().factors.front();
        return r;
      }
    }
  }
  r.method = "exhausted";
  return r;
}

}  // namespace lsp
