#include "lspath/repthy.hpp"
#include "lspath/saturation.hpp"
#include "lspath/serialize.hpp"
#include "lspath/version.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unistd.h>

using namespace lsp;

namespace {

enum Exit { kOk = 0, kValidation = 1, kInvariant = 2 };

// an internal invariant failed; reported with exit code 2
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string type_pos, type_flag;
  std::vector<std::string> weights;  // positional lambda, mu, nu
  std::string lambda, mu, nu;
  std::string path_file;
  std::string mode = "chamber";
  std::int64_t bound = 2;
  int nmax = 2;
  int n = 0;
  bool oracle = true;
  std::string format = "json";
  std::string out;
  int jobs = 1;

  std::string type() const {
    if (!type_pos.empty() && !type_flag.empty() && type_pos != type_flag)
      throw std::invalid_argument("conflicting types " + type_pos + " and " + type_flag);
    if (type_pos.empty() && type_flag.empty()) throw std::invalid_argument("a Cartan type is required, e.g. A2");
    return type_pos.empty() ? type_flag : type_pos;
  }

  std::string weight(std::size_t i, const std::string& flag, const char* name) const {
    if (!flag.empty() && i < weights.size() && flag != weights[i])
      throw std::invalid_argument(std::string("conflicting values for ") + name);
    if (!flag.empty()) return flag;
    if (i < weights.size()) return weights[i];
    throw std::invalid_argument(std::string("missing ") + name);
  }
};

Covector parse_weight(const RootSystem& rs, const std::string& text, const char* name) {
  std::vector<std::int64_t> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw std::invalid_argument(std::string(name) + ": '" + item + "' is not an integer");
    if (v < 0) throw std::invalid_argument(std::string(name) + ": coordinates must be nonnegative");
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != rs.rank())
    throw std::invalid_argument(std::string(name) + " needs " + std::to_string(rs.rank()) +
                                " comma-separated coordinates in the fundamental coweight basis");
  return Covector::from_ints(c);
}

std::string weight_text(const Covector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

Json config_json(const RunConfig& c, const RootSystem& rs, const std::map<std::string, Covector>& weights) {
  Json j;
  j["command"] = c.command;
  j["type"] = rs.type().name();
  for (const auto& [k, v] : weights) j[k] = to_json(v);
  if (c.command == "satscan") {
    j["bound"] = c.bound;
    j["nmax"] = c.nmax;
  }
  if (c.command == "pipeline") {
    j["N"] = c.n;
    j["oracle"] = c.oracle;
  }
  if (c.command == "hecke-check") {
    j["path"] = c.path_file;
    j["mode"] = c.mode;
  }
  j["format"] = c.format;
  return j;
}

std::string csv_preamble(const RunConfig& c, const RootSystem& rs, const std::map<std::string, Covector>& weights) {
  std::string s = std::string("# lspath ") + kVersion + " " + c.command + " type=" + rs.type().name();
  for (const auto& [k, v] : weights) s += " " + k + "=" + weight_text(v);
  if (c.command == "satscan") s += " bound=" + std::to_string(c.bound) + " nmax=" + std::to_string(c.nmax);
  return s + "\r\n";
}

void emit(const RunConfig& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(c.out);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot write " + tmp.string());
    f << body;
    f.flush();
    if (!f) throw std::invalid_argument("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string envelope(const RunConfig& c, const RootSystem& rs, const std::map<std::string, Covector>& w,
                     Json result) {
  Json j;
  j["tool"] = "lspath";
  j["version"] = kVersion;
  j["config"] = config_json(c, rs, w);
  j["result"] = std::move(result);
  return j.dump(2) + "\n";
}

int cmd_character(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  validate_dominant_integral(rs, lambda, "lambda");
  auto ls = character_ls(rs, lambda);
  auto fr = freudenthal_dominant(rs, lambda);
  bool all = ls == fr;
  std::map<std::string, Covector> w{{"lambda", lambda}};
  if (c.format == "csv") {
    std::string s = csv_preamble(c, rs, w) + "weight,mult_ls,mult_freudenthal,agreement\r\n";
    for (auto it = fr.rbegin(); it != fr.rend(); ++it) {
      std::int64_t m = ls.count(it->first) ? ls.at(it->first) : 0;
      s += csv_field(weight_text(it->first)) + "," + std::to_string(m) + "," + std::to_string(it->second) + "," +
           (m == it->second ? "true" : "false") + "\r\n";
    }
    emit(c, s);
  } else {
    Json rows = Json::array();
    for (auto it = fr.rbegin(); it != fr.rend(); ++it) {
      std::int64_t m = ls.count(it->first) ? ls.at(it->first) : 0;
      rows.push_back({{"weight", to_json(it->first)},
                      {"mult_ls", m},
                      {"mult_freudenthal", it->second},
                      {"agreement", m == it->second}});
    }
    emit(c, envelope(c, rs, w,
                     {{"dimension", weyl_dimension(rs, lambda)}, {"agreement", all}, {"dominant", std::move(rows)}}));
  }
  if (!all) throw InvariantFailure("LS multiplicities disagree with the Freudenthal oracle");
  return kOk;
}

int cmd_lspaths(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  validate_dominant_integral(rs, lambda, "lambda");
  auto paths = generate_LS(rs, lambda);
  std::map<std::string, Covector> w{{"lambda", lambda}};
  if (c.format == "csv") {
    std::string s = csv_preamble(c, rs, w) + "index,endpoint,path\r\n";
    for (std::size_t i = 0; i < paths.size(); ++i)
      s += std::to_string(i) + "," + csv_field(weight_text(paths[i].endpoint())) + "," + csv_field(paths[i].str()) +
           "\r\n";
    emit(c, s);
  } else {
    Json rows = Json::array();
    for (const auto& p : paths) rows.push_back({{"endpoint", to_json(p.endpoint())}, {"path", to_json(p)}});
    emit(c, envelope(c, rs, w,
                     {{"count", paths.size()}, {"dimension", weyl_dimension(rs, lambda)}, {"paths", std::move(rows)}}));
  }
  if (static_cast<std::int64_t>(paths.size()) != weyl_dimension(rs, lambda))
    throw InvariantFailure("number of LS paths differs from the Weyl dimension");
  return kOk;
}

int cmd_tensor(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  Covector mu = parse_weight(rs, c.weight(1, c.mu, "mu"), "mu");
  validate_dominant_integral(rs, lambda, "lambda");
  validate_dominant_integral(rs, mu, "mu");
  // Littelmann's rule: LS paths pi of type mu with lambda + pi inside C^v, counted by endpoint
  MultiplicityTable rule;
  for (const auto& p : generate_LS(rs, mu))
    if (inside_dominant_chamber(rs, p.translated(lambda))) ++rule[lambda + p.endpoint()];
  auto oracle = character_product_oracle(rs, lambda, mu);
  bool all = rule == oracle;
  std::map<std::string, Covector> w{{"lambda", lambda}, {"mu", mu}};
  if (c.format == "csv") {
    std::string s = csv_preamble(c, rs, w) + "weight,multiplicity,oracle,agreement\r\n";
    for (auto it = oracle.rbegin(); it != oracle.rend(); ++it) {
      std::int64_t m = rule.count(it->first) ? rule.at(it->first) : 0;
      s += csv_field(weight_text(it->first)) + "," + std::to_string(m) + "," + std::to_string(it->second) + "," +
           (m == it->second ? "true" : "false") + "\r\n";
    }
    emit(c, s);
  } else {
    Json rows = Json::array();
    for (auto it = oracle.rbegin(); it != oracle.rend(); ++it) {
      std::int64_t m = rule.count(it->first) ? rule.at(it->first) : 0;
      rows.push_back({{"weight", to_json(it->first)}, {"multiplicity", m}, {"oracle", it->second},
                      {"agreement", m == it->second}});
    }
    emit(c, envelope(c, rs, w, {{"summands", rows.size()}, {"agreement", all}, {"decomposition", std::move(rows)}}));
  }
  if (!all) throw InvariantFailure("path rule disagrees with the character-product oracle");
  return kOk;
}

int cmd_lr(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  Covector mu = parse_weight(rs, c.weight(1, c.mu, "mu"), "mu");
  Covector nu = parse_weight(rs, c.weight(2, c.nu, "nu"), "nu");
  auto tw = tensor_invariant_nonzero(rs, lambda, mu, nu);
  auto witnesses = lr_witnesses(rs, lambda, mu, nu);
  auto prod = character_product_oracle(rs, lambda, mu);
  Covector star = rs.star(nu);
  std::int64_t oracle = prod.count(star) ? prod.at(star) : 0;
  std::int64_t count = static_cast<std::int64_t>(witnesses.size());
  std::map<std::string, Covector> w{{"lambda", lambda}, {"mu", mu}, {"nu", nu}};
  if (c.format == "csv") {
    emit(c, csv_preamble(c, rs, w) + "multiplicity,oracle,lattice_obstruction,witness\r\n" + std::to_string(count) +
                "," + std::to_string(oracle) + "," + (tw.lattice_obstruction ? "true" : "false") + "," +
                csv_field(tw.witness ? tw.witness->str() : "") + "\r\n");
  } else {
    Json ws = Json::array();
    for (const auto& p : witnesses) ws.push_back(to_json(p));
    emit(c, envelope(c, rs, w,
                     {{"multiplicity", count},
                      {"oracle", oracle},
                      {"agreement", count == oracle},
                      {"lattice_obstruction", tw.lattice_obstruction},
                      {"witness", tw.witness ? to_json(*tw.witness) : Json(nullptr)},
                      {"witnesses", std::move(ws)}}));
  }
  if (count != oracle) throw InvariantFailure("LR count disagrees with the character-product oracle");
  return kOk;
}

int cmd_galleries(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  std::string mu_text = c.weight(1, c.mu, "mu");
  // mu may be any coweight here; allow a sign
  std::vector<std::int64_t> mc;
  {
    std::stringstream ss(mu_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw std::invalid_argument("mu: '" + item + "' is not an integer");
      mc.push_back(v);
    }
    if (static_cast<int>(mc.size()) != rs.rank()) throw std::invalid_argument("mu has the wrong number of coordinates");
  }
  Covector mu = Covector::from_ints(mc);
  auto m = minimal_gallery(rs, lambda);
  auto gals = ls_galleries(rs, m, mu);
  std::int64_t paths = 0;
  for (const auto& p : generate_LS(rs, lambda))
    if (p.endpoint() == mu) ++paths;
  std::map<std::string, Covector> w{{"lambda", lambda}, {"mu", mu}};
  if (c.format == "csv") {
    std::string s = csv_preamble(c, rs, w) + "gallery,root,level,step,case\r\n";
    for (std::size_t i = 0; i < gals.size(); ++i) {
      std::string ledger = dimension_ledger_csv(rs, gals[i]);
      std::stringstream ls(ledger);
      std::string line;
      std::getline(ls, line);  // header
      while (std::getline(ls, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        s += std::to_string(i) + "," + line + "\r\n";
      }
    }
    emit(c, s);
  } else {
    Json rows = Json::array();
    for (const auto& g : gals) {
      Json gj = to_json(rs, g);
      gj["dim"] = dim_gallery(rs, g);
      gj["tally"] = parameter_tally(rs, g);
      Json ledger = Json::array();
      for (const auto& lb : load_bearing_walls(rs, g))
        ledger.push_back({{"root", rs.positive_roots()[lb.wall.root].coeffs},
                          {"level", lb.wall.level},
                          {"step", lb.step},
                          {"case", lb.kind}});
      gj["load_bearing_walls"] = std::move(ledger);
      rows.push_back(std::move(gj));
    }
    emit(c, envelope(c, rs, w,
                     {{"minimal_length", m.length()},
                      {"type_word", m.type_word},
                      {"ls_galleries", gals.size()},
                      {"ls_paths", paths},
                      {"agreement", static_cast<std::int64_t>(gals.size()) == paths},
                      {"galleries", std::move(rows)}}));
  }
  if (static_cast<std::int64_t>(gals.size()) != paths)
    throw InvariantFailure("LS gallery count differs from the LS path count");
  return kOk;
}

int cmd_hecke_check(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  if (c.path_file.empty()) throw std::invalid_argument("--path FILE is required");
  std::ifstream in(c.path_file);
  if (!in) throw std::invalid_argument("cannot read " + c.path_file);
  Json pj;
  try {
    pj = Json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  PLPath p = path_from_json(pj.contains("path") ? pj["path"] : pj);
  if (static_cast<int>(p.rank()) != rs.rank()) throw std::invalid_argument("path rank differs from the type rank");
  HeckeMode mode;
  if (c.mode == "alcove")
    mode = HeckeMode::negative_alcove(rs);
  else if (c.mode != "chamber")
    throw std::invalid_argument("--mode must be chamber or alcove");
  auto type = path_type(rs, p);
  Json r;
  r["lambda_path"] = type.has_value();
  r["type"] = type ? to_json(*type) : Json(nullptr);
  auto rep = is_hecke(rs, p, mode);
  r["hecke"] = rep.ok;
  r["billiard"] = is_billiard(rs, p);
  r["positively_folded"] = is_positively_folded(rs, p);
  r["ls"] = type && rs.in_P(p.base()) ? Json(is_LS(rs, p, *type).has_value()) : Json(nullptr);
  r["ls12"] = type ? Json(ls12_satisfiable(rs, p, *type)) : Json(nullptr);
  Json bs = Json::array();
  for (std::size_t i = 0; i < rep.bends.size(); ++i) {
    Json b{{"t", to_json(rep.bends[i].t)}, {"point", to_json(rep.bends[i].point)}};
    if (i < rep.chains.size() && rep.chains[i]) {
      std::vector<std::vector<std::int64_t>> roots;
      for (int k : rep.chains[i]->roots) roots.push_back(rs.positive_roots()[k].coeffs);
      b["chain"] = roots;
    } else {
      b["chain"] = nullptr;
    }
    bs.push_back(std::move(b));
  }
  r["bends"] = std::move(bs);
  if (c.format == "csv") {
    auto yes = [](bool v) { return v ? "true" : "false"; };
    emit(c, csv_preamble(c, rs, {}) + "hecke,billiard,positively_folded\r\n" + yes(rep.ok) + "," +
                yes(r["billiard"].get<bool>()) + "," + yes(r["positively_folded"].get<bool>()) + "\r\n");
  } else {
    emit(c, envelope(c, rs, {}, std::move(r)));
  }
  return kOk;
}

int cmd_satscan(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  if (c.bound < 1 || c.nmax < 1 || c.jobs < 1) throw std::invalid_argument("--bound, --nmax and --jobs must be >= 1");
  ScanOptions o;
  o.bound = c.bound;
  o.nmax = c.nmax;
  o.jobs = c.jobs;
  auto rep = saturation_scan(rs, o);
  if (c.format == "csv")
    emit(c, csv_preamble(c, rs, {}) + scan_csv(rep));
  else
    emit(c, envelope(c, rs, {}, to_json(rep)));
  std::cerr << "triples " << rep.records.size() << ", nonzero " << rep.nonzero_triples << ", theorem violations "
            << rep.theorem_violations << ", cone violations " << rep.cone_violations << ", k-conjecture failures "
            << rep.k_conjecture_failures << ", incomplete " << rep.incomplete << "\n";
  if (rep.theorem_violations) throw InvariantFailure("saturation scan found theorem violations");
  return kOk;
}

int cmd_pipeline(const RunConfig& c) {
  auto rs = RootSystem::build(c.type());
  Covector lambda = parse_weight(rs, c.weight(0, c.lambda, "lambda"), "lambda");
  Covector mu = parse_weight(rs, c.weight(1, c.mu, "mu"), "mu");
  Covector nu = parse_weight(rs, c.weight(2, c.nu, "nu"), "nu");
  RunConfig cfg = c;
  if (cfg.n <= 0) {
    for (int n = 1; n <= cfg.nmax && cfg.n <= 0; ++n)
      if (invariant_nonzero(rs, lambda * n, mu * n, nu * n)) cfg.n = n;
    if (cfg.n <= 0)
      throw std::invalid_argument("the invariant vanishes for every N <= " + std::to_string(cfg.nmax) +
                                  "; raise --nmax or pass --n");
  }
  PipelineOptions po;
  po.oracle_check = cfg.oracle;
  auto tr = pipeline_steps45(rs, lambda, mu, nu, cfg.n, po);
  std::map<std::string, Covector> w{{"lambda", lambda}, {"mu", mu}, {"nu", nu}};
  if (cfg.format == "csv") {
    std::string s = csv_preamble(cfg, rs, w) + "stage,ok,note,paths\r\n";
    for (const auto& st : tr.stages) {
      std::string ps;
      for (const auto& p : st.paths) ps += (ps.empty() ? "" : " ; ") + p.str();
      s += csv_field(st.name) + "," + (st.ok ? "true" : "false") + "," + csv_field(st.note) + "," + csv_field(ps) +
           "\r\n";
    }
    emit(cfg, s);
  } else {
    emit(cfg, envelope(cfg, rs, w, to_json(tr)));
  }
  if (!tr.ok) throw InvariantFailure("pipeline stage failed: " + tr.stages.back().name);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littelmann paths, folded galleries and saturation checks.\n"
               "Weights are comma-separated integers in the fundamental coweight basis, e.g. 1,0."};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("TYPE", c.type_pos, "Cartan type, e.g. A2, B2, G2");
    s->add_option("--type", c.type_flag, "Cartan type (same as the positional form)");
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", c.out, "Output file, written atomically (default: stdout)");
  };
  auto weights = [&](CLI::App* s, int count) {
    s->add_option("WEIGHTS", c.weights, "Weights in order lambda mu nu")->expected(0, count);
    s->add_option("--lambda", c.lambda, "lambda, e.g. 1,1");
    if (count > 1) s->add_option("--mu", c.mu, "mu");
    if (count > 2) s->add_option("--nu", c.nu, "nu");
  };

  std::map<CLI::App*, int (*)(const RunConfig&)> run;
  auto* character = app.add_subcommand("character", "Dominant weight multiplicities from LS paths, with the Freudenthal oracle");
  common(character);
  weights(character, 1);
  run[character] = cmd_character;

  auto* lspaths = app.add_subcommand("lspaths", "All LS paths of type lambda");
  common(lspaths);
  weights(lspaths, 1);
  run[lspaths] = cmd_lspaths;

  auto* tensor = app.add_subcommand("tensor", "Decomposition of V(lambda) x V(mu)");
  common(tensor);
  weights(tensor, 2);
  run[tensor] = cmd_tensor;

  auto* lr = app.add_subcommand("lr", "Multiplicity of the invariant in V(lambda) x V(mu) x V(nu)");
  common(lr);
  weights(lr, 3);
  run[lr] = cmd_lr;

  auto* galleries = app.add_subcommand("galleries", "LS galleries of type gamma_lambda with target mu and their dimension ledgers");
  common(galleries);
  weights(galleries, 2);
  run[galleries] = cmd_galleries;

  auto* hecke = app.add_subcommand("hecke-check", "Classify a path given as JSON");
  common(hecke);
  hecke->add_option("--path", c.path_file, "JSON file with {base, segments}")->required();
  hecke->add_option("--mode", c.mode, "chamber (-C^v) or alcove (a_-)")->check(CLI::IsMember({"chamber", "alcove"}));
  run[hecke] = cmd_hecke_check;

  auto* satscan = app.add_subcommand("satscan", "Saturation scan over all triples with coordinates <= bound");
  common(satscan);
  satscan->add_option("--bound", c.bound, "Coordinate bound");
  satscan->add_option("--nmax", c.nmax, "Largest dilation N");
  satscan->add_option("--jobs", c.jobs, "Worker threads");
  run[satscan] = cmd_satscan;

  auto* pipeline = app.add_subcommand("pipeline", "Trace the apartment-level saturation pipeline for one triple");
  common(pipeline);
  weights(pipeline, 3);
  pipeline->add_option("--n", c.n, "Dilation N with a nonzero invariant (default: smallest up to --nmax)");
  pipeline->add_option("--nmax", c.nmax, "Search bound for N");
  pipeline->add_flag("!--no-oracle", c.oracle, "Skip the oracle recomputation at k^2");
  run[pipeline] = cmd_pipeline;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  for (auto& [sub, fn] : run) {
    if (!sub->parsed()) continue;
    c.command = sub->get_name();
    try {
      return fn(c);
    } catch (const InvariantFailure& e) {
      std::cerr << "invariant violation: " << e.what() << "\n";
      return kInvariant;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kValidation;
    } catch (const std::out_of_range& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kValidation;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return kInvariant;
    }
  }
  return kValidation;
}
