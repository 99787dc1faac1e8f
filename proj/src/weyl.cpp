#include "lspath/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lsp {

std::vector<int> canonical_word(const RootSystem& rs, const Covector& rho_image) {
  // the least left descent first gives the lexicographically least reduced word
  return word_to_dominant(rs, rho_image);
}

std::vector<int> word_to_dominant(const RootSystem& rs, const Covector& x) {
  std::vector<int> word;
  Covector y = x;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && y[i] >= 0) ++i;
    if (i == rs.rank()) return word;
    word.push_back(i);
    y = rs.simple_reflect(i, y);
  }
}

WeylElement::WeylElement(const RootSystem& rs, std::vector<int> word) : rs_(&rs), word_(std::move(word)) {
  const int n = rs.rank();
  mat_.assign(n, std::vector<std::int64_t>(n, 0));
  inv_.assign(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    Covector e = rs.fundamental_coweight(j), f = e;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) e = rs.simple_reflect(*it, e);
    for (int l : word_) f = rs.simple_reflect(l, f);
    for (int i = 0; i < n; ++i) {
      mat_[i][j] = e[i].numerator();
      inv_[i][j] = f[i].numerator();
    }
  }
  rho_img_ = apply(rs.rho_vee());
}

WeylElement WeylElement::identity(const RootSystem& rs) { return WeylElement(rs, {}); }

WeylElement WeylElement::from_rho_image(const RootSystem& rs, const Covector& v) {
  if (rs.dominant_projection(v) != rs.rho_vee()) throw std::invalid_argument("not in the orbit of rho^vee: " + v.str());
  return WeylElement(rs, canonical_word(rs, v));
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  Covector v = rs.rho_vee();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rs.rank()) throw std::invalid_argument("letter out of range");
    v = rs.simple_reflect(*it, v);
  }
  return WeylElement(rs, canonical_word(rs, v));
}

WeylElement WeylElement::longest(const RootSystem& rs) { return from_rho_image(rs, -rs.rho_vee()); }

Covector WeylElement::apply(const Covector& x) const {
  const int n = rs_->rank();
  Covector y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mat_[i][j] != 0) y[i] += x[j] * mat_[i][j];
  return y;
}

Covector WeylElement::apply_inverse(const Covector& x) const {
  const int n = rs_->rank();
  Covector y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (inv_[i][j] != 0) y[i] += x[j] * inv_[i][j];
  return y;
}

std::vector<std::int64_t> WeylElement::apply_to_root(const std::vector<std::int64_t>& c) const {
  // (w beta)(x) = beta(w^{-1} x): as a row vector, c * inv
  const int n = rs_->rank();
  std::vector<std::int64_t> out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j] += c[i] * inv_[i][j];
  return out;
}

WeylElement WeylElement::inverse() const {
  return from_rho_image(*rs_, apply_inverse(rs_->rho_vee()));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(*rs_, canonical_word(*rs_, apply(o.rho_img_)));
}

bool WeylElement::right_descent(int i) const {
  // l(w s_i) < l(w)  iff  w(alpha_i) < 0
  std::vector<std::int64_t> e(rs_->rank(), 0);
  e[i] = 1;
  auto c = apply_to_root(e);
  for (auto x : c)
    if (x < 0) return true;
  return false;
}

std::string WeylElement::str() const {
  if (word_.empty()) return "e";
  std::string s;
  for (int l : word_) s += "s" + std::to_string(l + 1);
  return s;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int n = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.pair(static_cast<int>(k), w.rho_image()) < 0) ++n;
  return n;
}

bool orbit_leq(const RootSystem& rs, const Covector& eta_small, const Covector& eta_big) {
  Covector a = eta_small, b = eta_big;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && b[i] >= 0) ++i;
    if (i == rs.rank()) return a == b;
    if (a[i] < 0) a = rs.simple_reflect(i, a);
    b = rs.simple_reflect(i, b);
  }
}

bool bruhat_leq(const WeylElement& a, const WeylElement& b) {
  return orbit_leq(a.root_system(), a.rho_image(), b.rho_image());
}

int ell_lambda(const RootSystem& rs, const Covector& eta) {
  int n = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.pair(static_cast<int>(k), eta) < 0) ++n;
  return n;
}

CosetRep coset_rep_of(const RootSystem& rs, const Covector& eta) {
  Covector dom = rs.dominant_projection(eta);
  return CosetRep{WeylElement::from_word(rs, word_to_dominant(rs, eta)), dom};
}

CosetRep coset_min_rep(const WeylElement& w, const Covector& lambda) {
  const RootSystem& rs = w.root_system();
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("coset_min_rep: lambda not dominant");
  return CosetRep{coset_rep_of(rs, w.apply(lambda)).rep, lambda};
}

bool coset_leq(const CosetRep& a, const CosetRep& b) {
  if (a.lambda != b.lambda) throw std::invalid_argument("coset_leq: different stabilizers");
  return bruhat_leq(a.rep, b.rep);
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
  std::vector<WeylElement> out;
  for (const auto& v : rs.orbit(rs.rho_vee())) out.push_back(WeylElement::from_rho_image(rs, v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Move {
  int root;
  int side;
};

std::vector<Move> allowed_moves(const RootSystem& rs, const ChamberDatum& chamber,
                                const std::optional<Covector>& constraint) {
  std::vector<Move> moves;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    int b = static_cast<int>(k);
    if (constraint && !is_integer(rs.pair(b, *constraint))) continue;
    int s = sign_of(rs.pair(b, chamber.direction));
    if (s == 0) continue;
    moves.push_back({b, s});
  }
  return moves;
}

template <class Visit>
void chain_bfs(const RootSystem& rs, const Covector& from, const ChamberDatum& chamber,
               const std::optional<Covector>& constraint, Visit visit) {
  auto moves = allowed_moves(rs, chamber, constraint);
  std::deque<Covector> queue{from};
  std::set<Covector> seen{from};
  while (!queue.empty()) {
    Covector eta = queue.front();
    queue.pop_front();
    for (const auto& m : moves) {
      Rational v = rs.pair(m.root, eta);
      if (sign_of(v) != m.side) continue;
      Covector next = eta - rs.positive_roots()[m.root].coroot * v;
      if (!seen.insert(next).second) continue;
      if (visit(eta, m.root, next)) return;
      queue.push_back(next);
    }
  }
}

}  // namespace

std::optional<Chain> find_chain(const RootSystem& rs, const Covector& eta_from, const Covector& eta_to,
                                const ChamberDatum& chamber, const std::optional<Covector>& constraint) {
  if (rs.dominant_projection(eta_from) != rs.dominant_projection(eta_to))
    throw OrbitMismatch("find_chain: " + eta_from.str() + " and " + eta_to.str() + " lie in different orbits");
  if (eta_from == eta_to) return Chain{{eta_from}, {}};
  std::map<Covector, std::pair<Covector, int>> parent;
  bool found = false;
  chain_bfs(rs, eta_from, chamber, constraint, [&](const Covector& prev, int root, const Covector& next) {
    parent.emplace(next, std::make_pair(prev, root));
    found = next == eta_to;
    return found;
  });
  if (!found) return std::nullopt;
  Chain c;
  Covector cur = eta_to;
  while (cur != eta_from) {
    auto& [prev, root] = parent.at(cur);
    c.etas.push_back(cur);
    c.roots.push_back(root);
    cur = prev;
  }
  c.etas.push_back(eta_from);
  std::reverse(c.etas.begin(), c.etas.end());
  std::reverse(c.roots.begin(), c.roots.end());
  return c;
}

std::vector<Covector> chain_reachable(const RootSystem& rs, const Covector& eta_from, const ChamberDatum& chamber,
                                      const std::optional<Covector>& constraint) {
  std::vector<Covector> out{eta_from};
  chain_bfs(rs, eta_from, chamber, constraint, [&](const Covector&, int, const Covector& next) {
    out.push_back(next);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_chain(const RootSystem& rs, const Chain& c, const ChamberDatum& chamber,
                  const std::optional<Covector>& constraint) {
  if (c.etas.size() != c.roots.size() + 1) return false;
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    int b = c.roots[i];
    if (rs.reflect(b, c.etas[i]) != c.etas[i + 1]) return false;                  // H1
    Rational v = rs.pair(b, c.etas[i]);
    int s = sign_of(rs.pair(b, chamber.direction));
    if (v == 0 || s == 0 || sign_of(v) != s) return false;                       // H2
    if (constraint && !is_integer(rs.pair(b, *constraint))) return false;        // H3
  }
  return true;
}

}  // namespace lsp
