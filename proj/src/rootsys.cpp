#include "lspath/rootsys.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lsp {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad cartan type: '" + s + "'");
  CartanType ct;
  ct.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::size_t used = 0;
  try {
    ct.rank = std::stoi(s.substr(1), &used);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad cartan type: '" + s + "'");
  }
  if (used != s.size() - 1) throw std::invalid_argument("bad cartan type: '" + s + "'");
  ct.validate();
  return ct;
}

std::string CartanType::name() const { return std::string(1, series) + std::to_string(rank); }

void CartanType::validate() const {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("invalid cartan type " + name());
}

IntMatrix cartan_matrix(const CartanType& ct) {
  ct.validate();
  const int n = ct.rank;
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (ct.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-6-7-8 with 2 on 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':  // alpha_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular cartan matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(CartanType ct) : type_(ct), cartan_(cartan_matrix(ct)) {
  const int n = ct.rank;
  using Vec = std::vector<std::int64_t>;
  // all roots (with coroots) by reflection closure from the simple ones
  std::map<Vec, Vec> roots;
  std::vector<Vec> frontier;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    roots[e] = e;
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& r : frontier) {
      const Vec co = roots[r];
      for (int j = 0; j < n; ++j) {
        std::int64_t p = 0, q = 0;
        for (int k = 0; k < n; ++k) {
          p += r[k] * cartan_[j][k];   // <alpha, alpha_j^vee>
          q += co[k] * cartan_[k][j];  // <alpha_j, alpha^vee>
        }
        Vec r2 = r, co2 = co;
        r2[j] -= p;
        co2[j] -= q;
        if (roots.emplace(r2, co2).second) next.push_back(r2);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [r, co] : roots) {
    if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x < 0; })) continue;
    Root root;
    root.coeffs = r;
    root.co_coeffs = co;
    root.height = std::accumulate(r.begin(), r.end(), std::int64_t{0});
    root.coroot = Covector(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) root.coroot[j] += Rational(co[k] * cartan_[k][j]);
    pos_.push_back(std::move(root));
  }
  std::sort(pos_.begin(), pos_.end(), [](const Root& a, const Root& b) {
    return a.height != b.height ? a.height < b.height : a.coeffs < b.coeffs;
  });
  simple_idx_.assign(n, -1);
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    if (pos_[k].height == 1)
      for (int i = 0; i < n; ++i)
        if (pos_[k].coeffs[i] == 1) simple_idx_[i] = static_cast<int>(k);
  }
  theta_idx_ = static_cast<int>(pos_.size()) - 1;
  if (pos_.size() > 1 && pos_[pos_.size() - 2].height == pos_.back().height)
    throw std::logic_error("highest root not unique");
  k_phi_ = 1;
  for (auto m : pos_[theta_idx_].coeffs) k_phi_ = std::lcm(k_phi_, m);
  rho_.assign(n, Rational(0));
  for (const auto& r : pos_)
    for (int i = 0; i < n; ++i) rho_[i] += Rational(r.coeffs[i], 2);
  cartan_inv_ = invert(cartan_);
}

Covector RootSystem::fundamental_coweight(int i) const {
  Covector v(rank());
  v[i] = 1;
  return v;
}

Covector RootSystem::rho_vee() const {
  Covector v(rank());
  for (int i = 0; i < rank(); ++i) v[i] = 1;
  return v;
}

Rational RootSystem::pair_coeffs(const std::vector<std::int64_t>& c, const Covector& x) const {
  Rational s(0);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) s += x[j] * c[j];
  return s;
}

Rational RootSystem::pair(int root, const Covector& x) const { return pair_coeffs(pos_[root].coeffs, x); }

Rational RootSystem::rho_pairing(const Covector& x) const {
  Rational s(0);
  for (int j = 0; j < rank(); ++j) s += rho_[j] * x[j];
  return s;
}

Rational RootSystem::form(const Covector& x, const Covector& y) const {
  Rational s(0);
  for (std::size_t k = 0; k < pos_.size(); ++k) s += pair(static_cast<int>(k), x) * pair(static_cast<int>(k), y);
  return s;
}

Covector RootSystem::reflect(int root, const Covector& x) const {
  Rational p = pair(root, x);
  if (p == 0) return x;
  return x - pos_[root].coroot * p;
}

Covector RootSystem::simple_reflect(int i, const Covector& x) const {
  if (x[i] == 0) return x;
  Covector y = x;
  Rational p = x[i];
  for (int j = 0; j < rank(); ++j)
    if (cartan_[i][j] != 0) y[j] -= p * cartan_[i][j];
  return y;
}

Covector RootSystem::affine_reflect(const Wall& m, const Covector& x) const {
  // x - (alpha(x) + k) alpha^vee
  Rational v = pair(m.root, x) + m.level;
  if (v == 0) return x;
  return x - pos_[m.root].coroot * v;
}

bool RootSystem::is_dominant(const Covector& x) const {
  for (int i = 0; i < rank(); ++i)
    if (x[i] < 0) return false;
  return true;
}

bool RootSystem::is_regular(const Covector& x) const {
  for (std::size_t k = 0; k < pos_.size(); ++k)
    if (pair(static_cast<int>(k), x) == 0) return false;
  return true;
}

Covector RootSystem::dominant_projection(const Covector& x) const {
  Covector y = x;
  for (;;) {
    int i = 0;
    while (i < rank() && y[i] >= 0) ++i;
    if (i == rank()) return y;
    y = simple_reflect(i, y);
  }
}

Covector RootSystem::star(const Covector& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("star: non-dominant input " + lambda.str());
  return dominant_projection(-lambda);
}

Covector RootSystem::coroot_coordinates(const Covector& x) const {
  // x = sum_k b_k row_k(A)  =>  b = x A^{-1}
  Covector b(rank());
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) b[k] += x[j] * cartan_inv_[j][k];
  return b;
}

bool RootSystem::in_Q(const Covector& x) const { return coroot_coordinates(x).is_integral(); }

bool RootSystem::dominates(const Covector& lambda, const Covector& mu) const {
  Covector b = coroot_coordinates(lambda - mu);
  for (int k = 0; k < rank(); ++k)
    if (b[k] < 0) return false;
  return true;
}

Covector RootSystem::alcove_vertex(int i) const {
  if (i == 0) return zero();
  return fundamental_coweight(i - 1) * Rational(1, highest_root_coeffs()[i - 1]);
}

Covector RootSystem::alcove_barycenter() const {
  Covector b = zero();
  for (int i = 0; i <= rank(); ++i) b += alcove_vertex(i);
  return b * Rational(1, rank() + 1);
}

bool RootSystem::in_fundamental_alcove(const Covector& x) const {
  return is_dominant(x) && pair(theta_idx_, x) <= 1;
}

Covector RootSystem::affine_simple_reflect(int i, const Covector& x) const {
  if (i > 0) return simple_reflect(i - 1, x);
  return affine_reflect(Wall{theta_idx_, -1}, x);
}

Covector RootSystem::fold_into_alcove(const Covector& x, std::vector<int>* letters) const {
  Covector y = x;
  for (;;) {
    int i = 0;
    while (i < rank() && y[i] >= 0) ++i;
    int letter = -1;
    if (i < rank())
      letter = i + 1;
    else if (pair(theta_idx_, y) > 1)
      letter = 0;
    else
      return y;
    y = affine_simple_reflect(letter, y);
    if (letters) letters->push_back(letter);
  }
}

bool RootSystem::is_alcove_vertex(const Covector& x) const {
  Covector y = fold_into_alcove(x);
  for (int i = 0; i <= rank(); ++i)
    if (y == alcove_vertex(i)) return true;
  return false;
}

std::vector<int> RootSystem::alcove_vertex_action(const Covector& lambda) const {
  if (!in_P(lambda)) throw std::invalid_argument("alcove_vertex_action: not in P^vee: " + lambda.str());
  std::vector<int> letters;
  fold_into_alcove(alcove_barycenter() + lambda, &letters);
  std::vector<int> perm(rank() + 1, -1);
  for (int i = 0; i <= rank(); ++i) {
    Covector y = alcove_vertex(i) + lambda;
    for (int l : letters) y = affine_simple_reflect(l, y);
    for (int j = 0; j <= rank(); ++j)
      if (y == alcove_vertex(j)) perm[i] = j;
    if (perm[i] < 0) throw std::logic_error("alcove_vertex_action: vertex not mapped to a vertex");
  }
  return perm;
}

std::vector<int> RootSystem::special_vertex_labels() const {
  std::vector<int> out{0};
  for (int i = 0; i < rank(); ++i)
    if (highest_root_coeffs()[i] == 1) out.push_back(i + 1);
  return out;
}

std::vector<Covector> RootSystem::orbit(const Covector& x) const {
  std::set<Covector> seen{x};
  std::vector<Covector> todo{x};
  while (!todo.empty()) {
    Covector y = todo.back();
    todo.pop_back();
    for (int i = 0; i < rank(); ++i) {
      Covector z = simple_reflect(i, y);
      if (seen.insert(z).second) todo.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

std::int64_t RootSystem::weyl_group_order() const {
  // |W| = l! * |P^vee/Q^vee| * prod m_i
  std::int64_t f = 1;
  for (int i = 2; i <= rank(); ++i) f *= i;
  Rational det(1);
  // det(A) = |P/Q|, computed from the inverse's determinant via elimination
  {
    std::vector<std::vector<Rational>> a(rank(), std::vector<Rational>(rank()));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) a[i][j] = Rational(cartan_[i][j]);
    for (int c = 0; c < rank(); ++c) {
      int p = c;
      while (a[p][c] == 0) ++p;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (int r = c + 1; r < rank(); ++r) {
        Rational q = a[r][c] / a[c][c];
        for (int j = c; j < rank(); ++j) a[r][j] -= q * a[c][j];
      }
    }
  }
  f *= det.numerator();
  for (auto m : highest_root_coeffs()) f *= m;
  return f;
}

std::string RootSystem::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["cartan_type"] = type_.name();
  j["rank"] = rank();
  j["cartan_matrix"] = cartan_;
  ordered_json roots = ordered_json::array();
  for (const auto& r : pos_) {
    ordered_json e;
    e["root"] = r.coeffs;
    e["coroot"] = r.co_coeffs;
    std::vector<std::string> cw;
    for (const auto& x : r.coroot.coords()) cw.push_back(to_string(x));
    e["coroot_coweight_coords"] = cw;
    e["height"] = r.height;
    roots.push_back(e);
  }
  j["positive_roots"] = roots;
  j["highest_root"] = highest_root_coeffs();
  j["k_phi"] = k_phi_;
  return j.dump(2);
}

}  // namespace lsp
