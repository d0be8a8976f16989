#include "alp/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace alp::cli {

ConfigDocument ConfigDocument::parse(const std::string& text) {
  ConfigDocument doc;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("config: unterminated section at line " +
                                                std::to_string(lineno));
      section = line.substr(1, line.size() - 2);
      doc.sections.try_emplace(section);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
    if (section.empty())
      throw ConfigError("config: key outside any section at line " + std::to_string(lineno));
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config: empty key at line " + std::to_string(lineno));
    doc.sections[section].emplace_back(key, val);
  }
  return doc;
}

std::string ConfigDocument::serialize() const {
  std::ostringstream os;
  for (const auto& [sec, kvs] : sections) {
    os << '[' << sec << "]\n";
    for (const auto& [k, v] : kvs) os << k << " = " << v << "\n";
    os << "\n";
  }
  return os.str();
}

namespace {

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    if (!std::isfinite(d)) throw ConfigError("config: non-finite value for '" + key + "'");
    return d;
  } catch (ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError("config: bad number for '" + key + "': " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (...) {
    throw ConfigError("config: bad integer for '" + key + "': " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("config: bad boolean for '" + key + "': " + v);
}

std::vector<double> parse_doubles(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_double(key, tok));
  return out;
}

}  // namespace

sim::SimConfig resolve_config(const ConfigDocument& doc) {
  sim::SimConfig cfg;
  const std::set<std::string> known_sections{"grid", "model", "closure", "integrate",
                                             "init", "loops", "output"};
  for (const auto& [sec, _] : doc.sections)
    if (!known_sections.count(sec)) throw ConfigError("config: unknown section [" + sec + "]");

  auto section = [&](const std::string& name)
      -> const std::vector<std::pair<std::string, std::string>>* {
    auto it = doc.sections.find(name);
    return it == doc.sections.end() ? nullptr : &it->second;
  };

  if (auto* s = section("grid")) {
    for (const auto& [k, v] : *s) {
      if (k == "dim") cfg.dim = parse_int(k, v);
      else if (k == "shape") {
        auto xs = parse_doubles(k, v);
        if (xs.size() != size_t(cfg.dim) && xs.size() != 1)
          throw ConfigError("config: 'shape' needs dim entries");
        for (size_t i = 0; i < 3; ++i)
          cfg.shape[i] = i < xs.size() ? int(xs[i]) : (i < size_t(cfg.dim) ? int(xs[0]) : 1);
      } else if (k == "lengths") {
        auto xs = parse_doubles(k, v);
        for (size_t i = 0; i < 3; ++i)
          cfg.lengths[i] = i < xs.size() ? xs[i] : (i < size_t(cfg.dim) ? xs[0] : 1.0);
      } else
        throw ConfigError("config: unknown key '" + k + "' in [grid]");
    }
  }
  if (auto* s = section("model")) {
    for (const auto& [k, v] : *s) {
      if (k == "id") {
        auto mk = sim::model_kind_from(v);
        if (!mk) throw ConfigError("config: unknown model id '" + v + "'");
        cfg.kind = *mk;
      } else if (k == "algebra") cfg.algebra = v;
      else if (k == "a_ion") cfg.params.a_ion = parse_double(k, v);
      else if (k == "r_hall") cfg.params.R_hall = parse_double(k, v);
      else
        throw ConfigError("config: unknown key '" + k + "' in [model]");
    }
  }
  if (auto* s = section("closure")) {
    for (const auto& [k, v] : *s) {
      if (k == "kind") {
        if (v == "polytropic") cfg.closure.kind = models::Closure::Kind::polytropic;
        else if (v == "quadratic-test") cfg.closure.kind = models::Closure::Kind::quadratic_test;
        else throw ConfigError("config: unknown closure kind '" + v + "'");
      } else if (k == "K") cfg.closure.K = parse_double(k, v);
      else if (k == "gamma_ad") cfg.closure.gamma_ad = parse_double(k, v);
      else if (k == "sigma") cfg.closure.sigma = parse_double(k, v);
      else if (k == "c_rho") cfg.closure.c_rho = parse_double(k, v);
      else if (k == "c_s") cfg.closure.c_S = parse_double(k, v);
      else if (k == "c_cross") cfg.closure.c_cross = parse_double(k, v);
      else throw ConfigError("config: unknown key '" + k + "' in [closure]");
    }
  }
  if (auto* s = section("integrate")) {
    for (const auto& [k, v] : *s) {
      if (k == "dt") cfg.dt = parse_double(k, v);
      else if (k == "t_end") cfg.t_end = parse_double(k, v);
      else if (k == "cadence") cfg.cadence = parse_int(k, v);
      else if (k == "dealias") cfg.dealias = parse_bool(k, v);
      else throw ConfigError("config: unknown key '" + k + "' in [integrate]");
    }
  }
  if (auto* s = section("init")) {
    for (const auto& [k, v] : *s) {
      if (k == "seed") cfg.init.seed = unsigned(parse_int(k, v));
      else if (k == "cutoff") cfg.init.cutoff = parse_int(k, v);
      else if (k == "rho0") cfg.init.rho0 = parse_double(k, v);
      else if (k == "s0") cfg.init.S0 = parse_double(k, v);
      else if (k == "amp_v") cfg.init.amp_v = parse_double(k, v);
      else if (k == "amp_rho") cfg.init.amp_rho = parse_double(k, v);
      else if (k == "amp_s") cfg.init.amp_S = parse_double(k, v);
      else if (k == "amp_gamma") cfg.init.amp_gamma = parse_double(k, v);
      else if (k == "amp_vs") cfg.init.amp_vs = parse_double(k, v);
      else if (k == "amp_kappa") cfg.init.amp_kappa = parse_double(k, v);
      else if (k == "vs_irrotational") cfg.init.vs_irrotational = parse_bool(k, v);
      else throw ConfigError("config: unknown key '" + k + "' in [init]");
    }
  }
  if (auto* s = section("loops")) {
    for (const auto& [k, v] : *s) {
      if (k != "loop") throw ConfigError("config: unknown key '" + k + "' in [loops]");
      std::istringstream is(v);
      sim::LoopSpec ls;
      std::string sel;
      if (!(is >> ls.center[0] >> ls.center[1] >> ls.center[2] >> ls.radius >> ls.n_pts >> sel))
        throw ConfigError("config: loop needs 'cx cy cz radius n_pts velocity'");
      auto vs = sim::velocity_sel_from(sel);
      if (!vs) throw ConfigError("config: unknown loop velocity '" + sel + "'");
      ls.sel = *vs;
      cfg.loops.push_back(ls);
    }
  }
  if (auto* s = section("output")) {
    for (const auto& [k, v] : *s) {
      if (k == "dir") cfg.output_dir = v;
      else if (k == "snapshots") cfg.write_snapshots = parse_bool(k, v);
      else if (k == "snapshot_every") cfg.snapshot_every = parse_int(k, v);
      else throw ConfigError("config: unknown key '" + k + "' in [output]");
    }
  }

  // validation before any allocation
  if (cfg.dim != 2 && cfg.dim != 3) throw ConfigError("config: 'dim' must be 2 or 3");
  for (int i = 0; i < cfg.dim; ++i) {
    if (cfg.shape[i] < 8 || cfg.shape[i] % 2 != 0)
      throw ConfigError("config: 'shape' entries must be even and >= 8");
    if (!(cfg.lengths[i] > 0)) throw ConfigError("config: 'lengths' must be positive");
  }
  if (!(cfg.dt > 0)) throw ConfigError("config: 'dt' must be positive");
  if (cfg.t_end < 0) throw ConfigError("config: 't_end' must be >= 0");
  if (cfg.t_end > 0 && cfg.t_end < cfg.dt)
    throw ConfigError("config: 't_end' must be 0 or >= dt");
  if (cfg.cadence < 1) throw ConfigError("config: 'cadence' must be >= 1");
  if (!(cfg.init.rho0 > 0)) throw ConfigError("config: 'rho0' must be positive");
  if (!(cfg.init.S0 > 0)) throw ConfigError("config: 's0' must be positive");
  if (cfg.closure.sigma < 0 || cfg.closure.sigma >= 1)
    throw ConfigError("config: 'sigma' must lie in [0,1)");
  if ((cfg.kind == sim::ModelKind::hall || cfg.kind == sim::ModelKind::sf_hall) &&
      cfg.params.R_hall == 0)
    throw ConfigError("config: 'r_hall' must be nonzero for Hall models");
  for (const auto& ls : cfg.loops) {
    if (ls.n_pts < 16) throw ConfigError("config: loop resolution must be >= 16");
    for (int i = 0; i < cfg.dim; ++i)
      if (ls.center[i] < 0 || ls.center[i] >= cfg.lengths[i])
        throw ConfigError("config: loop center outside the box");
    double minL = cfg.lengths[0];
    for (int i = 1; i < cfg.dim; ++i) minL = std::min(minL, cfg.lengths[i]);
    if (!(ls.radius > 0) || ls.radius >= 0.5 * minL)
      throw ConfigError("config: loop radius must fit inside the box");
  }
  return cfg;
}

ConfigDocument to_document(const sim::SimConfig& cfg) {
  ConfigDocument d;
  auto fmt = [](double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  };
  auto& grid = d.sections["grid"];
  grid.emplace_back("dim", std::to_string(cfg.dim));
  {
    std::ostringstream os;
    for (int i = 0; i < cfg.dim; ++i) os << (i ? " " : "") << cfg.shape[i];
    grid.emplace_back("shape", os.str());
    std::ostringstream ol;
    for (int i = 0; i < cfg.dim; ++i) ol << (i ? " " : "") << fmt(cfg.lengths[i]);
    grid.emplace_back("lengths", ol.str());
  }
  auto& model = d.sections["model"];
  model.emplace_back("id", sim::to_string(cfg.kind));
  model.emplace_back("algebra", cfg.algebra);
  model.emplace_back("a_ion", fmt(cfg.params.a_ion));
  model.emplace_back("r_hall", fmt(cfg.params.R_hall));
  auto& clos = d.sections["closure"];
  clos.emplace_back("kind", cfg.closure.kind == models::Closure::Kind::polytropic
                                ? "polytropic"
                                : "quadratic-test");
  clos.emplace_back("K", fmt(cfg.closure.K));
  clos.emplace_back("gamma_ad", fmt(cfg.closure.gamma_ad));
  clos.emplace_back("sigma", fmt(cfg.closure.sigma));
  clos.emplace_back("c_rho", fmt(cfg.closure.c_rho));
  clos.emplace_back("c_s", fmt(cfg.closure.c_S));
  clos.emplace_back("c_cross", fmt(cfg.closure.c_cross));
  auto& integ = d.sections["integrate"];
  integ.emplace_back("dt", fmt(cfg.dt));
  integ.emplace_back("t_end", fmt(cfg.t_end));
  integ.emplace_back("cadence", std::to_string(cfg.cadence));
  integ.emplace_back("dealias", cfg.dealias ? "true" : "false");
  auto& init = d.sections["init"];
  init.emplace_back("seed", std::to_string(cfg.init.seed));
  init.emplace_back("cutoff", std::to_string(cfg.init.cutoff));
  init.emplace_back("rho0", fmt(cfg.init.rho0));
  init.emplace_back("s0", fmt(cfg.init.S0));
  init.emplace_back("amp_v", fmt(cfg.init.amp_v));
  init.emplace_back("amp_rho", fmt(cfg.init.amp_rho));
  init.emplace_back("amp_s", fmt(cfg.init.amp_S));
  init.emplace_back("amp_gamma", fmt(cfg.init.amp_gamma));
  init.emplace_back("amp_vs", fmt(cfg.init.amp_vs));
  init.emplace_back("amp_kappa", fmt(cfg.init.amp_kappa));
  init.emplace_back("vs_irrotational", cfg.init.vs_irrotational ? "true" : "false");
  auto& loops = d.sections["loops"];
  for (const auto& ls : cfg.loops) {
    std::ostringstream os;
    os << fmt(ls.center[0]) << ' ' << fmt(ls.center[1]) << ' ' << fmt(ls.center[2]) << ' '
       << fmt(ls.radius) << ' ' << ls.n_pts << ' ' << sim::to_string(ls.sel);
    loops.emplace_back("loop", os.str());
  }
  auto& outp = d.sections["output"];
  outp.emplace_back("dir", cfg.output_dir);
  outp.emplace_back("snapshots", cfg.write_snapshots ? "true" : "false");
  outp.emplace_back("snapshot_every", std::to_string(cfg.snapshot_every));
  return d;
}

}  // namespace alp::cli
