#pragma once

#include "lspath/hecke_search.hpp"

#include <map>
#include <optional>
#include <string>

namespace lsp {

// weight -> multiplicity; keys dominant unless stated otherwise
using MultiplicityTable = std::map<Covector, std::int64_t>;

std::int64_t weyl_dimension(const RootSystem& rs, const Covector& lambda);
// dominant mu with lambda - mu a nonnegative integer combination of simple coroots
std::vector<Covector> dominant_weights_below(const RootSystem& rs, const Covector& lambda);

// Freudenthal recursion for the dual group (roots and coroots exchanged).
MultiplicityTable freudenthal_dominant(const RootSystem& rs, const Covector& lambda);
MultiplicityTable full_character(const RootSystem& rs, const Covector& lambda);  // every weight
std::int64_t mult_freudenthal(const RootSystem& rs, const Covector& lambda, const Covector& mu);

// LS paths of type lambda whose endpoint dominates `floor`. Every f-string from
// the straight path to such a path stays above `floor`, so the closure can be cut there.
std::vector<PLPath> ls_paths_above(const RootSystem& rs, const Covector& lambda, const Covector& floor);
std::int64_t mult_ls(const RootSystem& rs, const Covector& lambda, const Covector& mu);
MultiplicityTable character_ls(const RootSystem& rs, const Covector& lambda);  // dominant entries

// Irreducible constituents of V(lambda) x V(mu) by multiplying full weight
// tables and peeling highest weights. Throws logic_error on a negative entry.
MultiplicityTable character_product_oracle(const RootSystem& rs, const Covector& lambda, const Covector& mu);

struct TensorWitness {
  bool nonzero = false;
  bool lattice_obstruction = false;  // lambda + mu + nu not in Q^vee
  std::optional<PLPath> witness;     // normalized LS path of type mu
};

// Paths pi of type mu with lambda + pi(1) = nu^* and lambda + pi(t) dominant.
TensorWitness tensor_invariant_nonzero(const RootSystem& rs, const Covector& lambda, const Covector& mu,
                                       const Covector& nu);
std::vector<PLPath> lr_witnesses(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu);
std::int64_t lr_multiplicity(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu);
// Same answer as tensor_invariant_nonzero, using the smallest of the three as path type.
bool invariant_nonzero(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu);

struct ConeOptions {
  std::size_t node_budget = 5'000'000;
  // fold cap for apexes off 0, where no folding argument bounds the search;
  // < 0: l(w0) times the number of walls the straight mu-path crosses
  int max_folds = -1;
};

struct ConeResult {
  bool member = false;
  bool complete = true;  // false when a search budget ran out
  std::string method;    // "ls-witness", "hecke-search", "hecke-search-vertex" or "exhausted"
  Covector apex;         // vertex z of a_- with d(z, x) = lambda and d(y, z) = nu
  std::optional<PLPath> path;  // of type mu from x to y
  std::size_t nodes = 0;
};

// Membership of the triangle cone: a polygon z, x, pi, y with z a vertex of a_-,
// x - z in W lambda, z - y in W nu and pi of type mu Hecke with respect to a_-.
// Vertices of a_- suffice when lambda + mu + nu lies in Q^vee.
ConeResult cone_membership(const RootSystem& rs, const Covector& lambda, const Covector& mu, const Covector& nu,
                           const ConeOptions& opt = {});

void validate_dominant_integral(const RootSystem& rs, const Covector& x, const char* what);

}  // namespace lsp
