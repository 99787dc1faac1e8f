#include "lspath/serialize.hpp"

#include <sstream>

namespace lsp {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Covector& v) {
  Json a = Json::array();
  for (const auto& x : v.coords()) a.push_back(to_string(x));
  return a;
}

Json to_json(const PLPath& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments()) segs.push_back({{"direction", to_json(s.dir)}, {"duration", to_json(s.dur)}});
  return {{"base", to_json(p.base())}, {"segments", segs}};
}

Json to_json(const LSCertificate& c) {
  Json chains = Json::array();
  for (const auto& ch : c.chains) {
    Json etas = Json::array();
    for (const auto& e : ch.etas) etas.push_back(to_json(e));
    chains.push_back({{"time", to_json(ch.a)}, {"etas", etas}, {"roots", ch.roots}, {"coset_words", ch.coset_words}});
  }
  return {{"lambda", to_json(c.lambda)}, {"chains", chains}};
}

Json to_json(const GeneralizedPath& g) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    factors.push_back({{"type", to_json(g.types[i])}, {"path", to_json(g.factors[i])}});
  return {{"factors", factors}};
}

Json to_json(const RootSystem& rs, const Gallery& g) {
  Json finite = Json::array(), trans = Json::array();
  for (const auto& a : g.alcoves) {
    finite.push_back(a.finite_part().word());
    trans.push_back(to_json(a.translation()));
  }
  return {{"type_word", g.type_word},
          {"fold_steps", g.fold_steps()},
          {"finite_parts", finite},
          {"translations", trans},
          {"target", to_json(target(rs, g))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

Covector covector_from_json(const Json& j) {
  std::vector<Rational> xs;
  for (const auto& e : j) xs.push_back(rational_from_json(e));
  return Covector(std::move(xs));
}

PLPath path_from_json(const Json& j) {
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments")) segs.push_back({covector_from_json(s.at("direction")), rational_from_json(s.at("duration"))});
  return PLPath(covector_from_json(j.at("base")), std::move(segs));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dimension_ledger_csv(const RootSystem& rs, const Gallery& g) {
  std::ostringstream os;
  os << "root,level,step,case\r\n";
  for (const auto& lb : load_bearing_walls(rs, g)) {
    std::string root;
    for (auto c : rs.positive_roots()[lb.wall.root].coeffs) root += (root.empty() ? "" : ",") + std::to_string(c);
    os << csv_field(root) << ',' << lb.wall.level << ',' << lb.step << ',' << lb.kind << "\r\n";
  }
  return os.str();
}

namespace {

Json bools(const std::vector<bool>& v) {
  Json a = Json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

}  // namespace

Json to_json(const ScanReport& r) {
  Json j;
  j["type"] = r.type;
  j["k"] = r.k;
  j["bound"] = r.options.bound;
  j["nmax"] = r.options.nmax;
  j["summary"] = {{"triples", r.records.size()},
                  {"nonzero", r.nonzero_triples},
                  {"theorem_violations", r.theorem_violations},
                  {"cone_violations", r.cone_violations},
                  {"k_conjecture_failures", r.k_conjecture_failures},
                  {"incomplete", r.incomplete}};
  Json rows = Json::array();
  for (const auto& t : r.records) {
    Json row;
    row["lambda"] = to_json(t.triple[0]);
    row["mu"] = to_json(t.triple[1]);
    row["nu"] = to_json(t.triple[2]);
    row["nonzero"] = bools(t.nonzero);
    row["cone"] = bools(t.cone);
    row["nonzero_k"] = t.nonzero_k;
    row["nonzero_k2"] = t.nonzero_k2;
    row["theorem_ok"] = t.theorem_ok;
    row["cone_saturated"] = t.cone_saturated;
    row["cone_dilation_ok"] = t.cone_dilation_ok;
    row["remark_ok"] = t.remark_ok;
    row["k_conjecture_ok"] = t.k_conjecture_ok;
    row["complete"] = t.complete;
    rows.push_back(std::move(row));
  }
  j["triples"] = std::move(rows);
  return j;
}

Json to_json(const PipelineTrace& t) {
  Json j;
  j["lambda"] = to_json(t.triple[0]);
  j["mu"] = to_json(t.triple[1]);
  j["nu"] = to_json(t.triple[2]);
  j["N"] = t.n;
  j["k"] = t.k;
  j["ok"] = t.ok;
  j["confirmed"] = t.confirmed;
  j["oracle"] = t.oracle ? Json(*t.oracle) : Json(nullptr);
  j["folding_exercised"] = t.folding_exercised;
  j["specialized_folds"] = t.specialized_folds;
  Json stages = Json::array();
  for (const auto& s : t.stages) {
    Json paths = Json::array();
    for (const auto& p : s.paths) paths.push_back(to_json(p));
    stages.push_back({{"stage", s.name}, {"ok", s.ok}, {"note", s.note}, {"paths", std::move(paths)}});
  }
  j["stages"] = std::move(stages);
  return j;
}

std::string scan_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "lambda,mu,nu";
  for (int n = 1; n <= r.options.nmax; ++n) os << ",nonzero_" << n;
  for (int n = 1; n <= r.options.nmax; ++n) os << ",cone_" << n;
  os << ",nonzero_k,nonzero_k2,theorem_ok,cone_ok,k_conjecture_ok,complete\r\n";
  for (const auto& t : r.records) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::string w;
      for (std::size_t j = 0; j < t.triple[i].size(); ++j) w += (j ? "," : "") + to_string(t.triple[i][j]);
      os << (i ? "," : "") << csv_field(w);
    }
    for (bool b : t.nonzero) os << ',' << b;
    for (bool b : t.cone) os << ',' << b;
    os << ',' << t.nonzero_k << ',' << t.nonzero_k2 << ',' << t.theorem_ok << ','
       << (t.cone_saturated && t.cone_dilation_ok && t.remark_ok) << ',' << t.k_conjecture_ok << ',' << t.complete
       << "\r\n";
  }
  return os.str();
}

}  // namespace lsp
