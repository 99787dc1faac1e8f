#pragma once
// Independent reference computations used only by the tests.

#include "lspath/rootsys.hpp"

#include <utility>

#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

// Positive roots by the root-string algorithm: beta + alpha_i is a root
// iff q > 0 where q = p - <beta, alpha_i^vee> and p is the length of the
// alpha_i-string below beta. Shares only the Cartan matrix with the library.
inline std::set<Vec> positive_roots_by_strings(const lsp::IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<Vec> roots;
  std::vector<Vec> layer;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<Vec> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 0;
        Vec d = b;
        for (;;) {
          d[i] -= 1;
          if (!roots.count(d)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int k = 0; k < n; ++k) pairing += b[k] * a[i][k];
        if (p - pairing > 0) {
          Vec up = b;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) roots.insert(r);
  }
  return roots;
}

inline std::int64_t coxeter_number(char series, int n) {
  switch (series) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case 'F': return 12;
    default: return 6;
  }
}

// Weyl dimension of the representation of the dual group with highest weight
// lambda (fundamental-coweight coordinates): prod over roots of (beta(lambda)+ht)/ht.
inline std::int64_t weyl_dimension(const lsp::IntMatrix& a, const Vec& lambda) {
  __int128 num = 1, den = 1;
  for (const auto& r : positive_roots_by_strings(a)) {
    std::int64_t ht = 0, val = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      ht += r[k];
      val += r[k] * lambda[k];
    }
    num *= val + ht;
    den *= ht;
  }
  return static_cast<std::int64_t>(num / den);
}

// Kostant multiplicity formula: m(mu) = sum_w sign(w) P(w(lambda+rho) - (mu+rho)),
// P the partition function over positive coroots. Shares only rootsys.
class Kostant {
 public:
  explicit Kostant(const lsp::RootSystem& rs) : rs_(rs) {
    const auto& a = rs.cartan();
    lsp::IntMatrix at(a.size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) at[i][j] = a[j][i];
    for (const auto& c : positive_roots_by_strings(at)) coroots_.push_back(c);
    // signed images of rho^vee
    std::map<lsp::Covector, int> seen{{rs.rho_vee(), 1}};
    std::vector<lsp::Covector> layer{rs.rho_vee()};
    while (!layer.empty()) {
      std::vector<lsp::Covector> next;
      for (const auto& v : layer)
        for (int i = 0; i < rs.rank(); ++i) {
          auto u = rs.simple_reflect(i, v);
          if (seen.count(u)) continue;
          seen[u] = -seen[v];
          next.push_back(u);
        }
      layer = next;
    }
    for (const auto& [v, s] : seen) {
      // recover w from w(rho^vee) as a word, to apply it to other vectors
      std::vector<int> word;
      lsp::Covector y = v;
      for (;;) {
        int i = 0;
        while (i < rs.rank() && y[i] >= 0) ++i;
        if (i == rs.rank()) break;
        word.push_back(i);
        y = rs.simple_reflect(i, y);
      }
      elements_.push_back({word, s});
    }
  }

  std::int64_t mult(const lsp::Covector& lambda, const lsp::Covector& mu) {
    std::int64_t total = 0;
    lsp::Covector lr = lambda + rs_.rho_vee(), mr = mu + rs_.rho_vee();
    for (const auto& [word, sign] : elements_) {
      lsp::Covector x = lr;
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = rs_.simple_reflect(*it, x);
      lsp::Covector d = rs_.coroot_coordinates(x - mr);
      if (!d.is_integral()) continue;
      total += sign * partitions(d.to_ints(), 0);
    }
    return total;
  }

 private:
  std::int64_t partitions(const Vec& v, std::size_t from) {
    for (auto x : v)
      if (x < 0) return 0;
    if (from == coroots_.size()) {
      for (auto x : v)
        if (x != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(v, from);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t n = 0;
    Vec w = v;
    for (;;) {
      n += partitions(w, from + 1);
      bool ok = true;
      for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] -= coroots_[from][k];
        ok = ok && w[k] >= 0;
      }
      if (!ok) break;
    }
    memo_[key] = n;
    return n;
  }

  const lsp::RootSystem& rs_;
  std::vector<Vec> coroots_;
  std::vector<std::pair<std::vector<int>, int>> elements_;
  std::map<std::pair<Vec, std::size_t>, std::int64_t> memo_;
};

}  // namespace oracle
