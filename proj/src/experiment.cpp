#include "zalpha/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <utility>

#include "zalpha/ideal.hpp"
#include "zalpha/pelczynski.hpp"

namespace zalpha {

// ---------------------------------------------------------------------------
// names
// ---------------------------------------------------------------------------

const char* command_name(Command c) {
  switch (c) {
    case Command::qtriangle: return "qtriangle";
    case Command::qlinear: return "qlinear";
    case Command::multiplier: return "multiplier";
    case Command::unorm: return "unorm";
    case Command::pelczynski: return "pelczynski";
    case Command::certify: return "certify";
  }
  throw std::logic_error("command_name: bad command");
}

Command command_from_name(const std::string& name) {
  for (Command c : {Command::qtriangle, Command::qlinear, Command::multiplier, Command::unorm,
                    Command::pelczynski, Command::certify})
    if (name == command_name(c)) return c;
  throw std::invalid_argument("unknown command: " + name);
}

const char* format_name(ReportFormat f) {
  return f == ReportFormat::csv ? "csv" : "json";
}

ReportFormat format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format: " + name);
}

// ---------------------------------------------------------------------------
// config validation
// ---------------------------------------------------------------------------

void validate_config(const ExperimentConfig& cfg) {
  if (!std::isfinite(cfg.alpha)) throw ConfigError("alpha must be finite");
  if (cfg.out.empty()) throw ConfigError("output path is required");
  const bool numeric = cfg.command == Command::qtriangle || cfg.command == Command::qlinear ||
                       cfg.command == Command::multiplier || cfg.command == Command::unorm;
  if (numeric) {
    if (cfg.dims.empty()) throw ConfigError("dims must be a nonempty list");
    for (std::size_t d : cfg.dims) {
      if (d == 0) throw ConfigError("dims must be positive");
      if (cfg.command == Command::unorm && d % 2 != 0)
        throw ConfigError("unorm needs even dims, got " + std::to_string(d));
    }
    if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
    if (cfg.families.empty()) throw ConfigError("families must be nonempty");
    for (std::size_t i = 0; i < cfg.families.size(); ++i)
      for (std::size_t k = i + 1; k < cfg.families.size(); ++k)
        if (cfg.families[i] == cfg.families[k])
          throw ConfigError(std::string("duplicate family: ") + family_name(cfg.families[i]));
  }
  if (cfg.command == Command::pelczynski && cfg.budget == 0)
    throw ConfigError("budget must be >= 1");
  if (cfg.command == Command::certify && cfg.in.empty())
    throw ConfigError("certify needs an input certificate (--in)");
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

namespace {

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_report(const std::vector<ReportRow>& rows) {
  std::string out =
      "command,alpha,dim,trials,seed,family_set,constant_name,estimate,witness_ref,timestamp\n";
  for (const ReportRow& r : rows) {
    out += r.command;
    out += ',';
    out += fmt_g17(r.alpha);
    out += ',';
    out += std::to_string(r.dim);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += r.family_set;
    out += ',';
    out += r.constant_name;
    out += ',';
    out += fmt_g17(r.estimate);
    out += ',';
    out += r.witness_ref;
    out += ',';
    out += r.timestamp;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json json_report(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["alpha"] = r.alpha;
    j["dim"] = r.dim;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["family_set"] = r.family_set;
    j["constant_name"] = r.constant_name;
    j["estimate"] = r.estimate;
    j["witness_ref"] = r.witness_ref;
    j["timestamp"] = r.timestamp;
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// witness sidecars
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json vector_to_flat(const ComplexVector& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Complex& z : v) {
    a.push_back(z.real());
    a.push_back(z.imag());
  }
  return a;
}

ComplexVector vector_from_flat(const nlohmann::json& a, const std::string& what) {
  if (!a.is_array() || a.size() % 2 != 0)
    throw std::runtime_error("sidecar: " + what + " must be a flat [re, im, ...] array");
  ComplexVector v(a.size() / 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!a[2 * i].is_number() || !a[2 * i + 1].is_number())
      throw std::runtime_error("sidecar: " + what + " has a non-numeric entry");
    v[i] = Complex(a[2 * i].get<double>(), a[2 * i + 1].get<double>());
  }
  return v;
}

std::vector<Family> families_from_string(const std::string& s) {
  std::vector<Family> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    if (!tok.empty()) out.push_back(family_from_name(tok));
    pos = next + 1;
  }
  return out;
}

}  // namespace

nlohmann::ordered_json witness_sidecar_json(const ConstantReport& rep) {
  nlohmann::ordered_json j;
  j["constant_name"] = rep.constant_name;
  j["alpha"] = rep.alpha.value;
  j["dim"] = rep.dim;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["family_set"] = family_set_string(rep.families);
  j["estimate"] = rep.estimate;
  nlohmann::ordered_json parts;
  for (const WitnessPart& p : rep.witness.parts) parts[p.name] = vector_to_flat(p.value);
  j["witness"] = {{"trial", rep.witness.trial}, {"parts", std::move(parts)}};
  return j;
}

ConstantReport sidecar_to_report(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("sidecar: expected an object");
  for (const char* field : {"constant_name", "alpha", "dim", "trials", "seed", "family_set",
                            "estimate", "witness"})
    if (!j.contains(field))
      throw std::runtime_error(std::string("sidecar: missing field: ") + field);
  ConstantReport rep;
  rep.constant_name = j["constant_name"].get<std::string>();
  rep.alpha = Alpha{j["alpha"].get<double>()};
  rep.dim = j["dim"].get<std::size_t>();
  rep.trials = j["trials"].get<std::size_t>();
  rep.seed = j["seed"].get<std::uint64_t>();
  rep.families = families_from_string(j["family_set"].get<std::string>());
  rep.estimate = j["estimate"].get<double>();
  const auto& w = j["witness"];
  if (!w.is_object() || !w.contains("trial") || !w.contains("parts") || !w["parts"].is_object())
    throw std::runtime_error("sidecar: witness wants {trial, parts}");
  rep.witness.trial = w["trial"].get<std::uint64_t>();
  for (auto it = w["parts"].begin(); it != w["parts"].end(); ++it)
    rep.witness.parts.push_back(WitnessPart{it.key(), vector_from_flat(it.value(), it.key())});
  return rep;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

// "dir/report.csv" -> {"dir/", "report"}
struct PathParts {
  std::string dir;   // with trailing separator, possibly empty
  std::string stem;  // filename without its last extension
};

PathParts split_path(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  PathParts p;
  std::string base;
  if (slash == std::string::npos) {
    base = path;
  } else {
    p.dir = path.substr(0, slash + 1);
    base = path.substr(slash + 1);
  }
  const std::size_t dot = base.find_last_of('.');
  p.stem = (dot == std::string::npos || dot == 0) ? base : base.substr(0, dot);
  return p;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed: " + path);
  }
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

struct Pending {
  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, std::string>> sidecars;  // path -> content

  // registers a sidecar and returns its report-relative name
  std::string add_sidecar(const PathParts& out, const std::string& tag,
                          const nlohmann::ordered_json& content) {
    const std::string name = out.stem + ".w." + tag + ".json";
    sidecars.emplace_back(out.dir + name, dump(content));
    return name;
  }
};

ReportRow row_from_report(const ExperimentConfig& cfg, const ConstantReport& rep,
                          const std::string& witness_ref) {
  ReportRow r;
  r.command = command_name(cfg.command);
  r.alpha = rep.alpha.value;
  r.dim = rep.dim;
  r.trials = rep.trials;
  r.seed = rep.seed;
  r.family_set = family_set_string(rep.families);
  r.constant_name = rep.constant_name;
  r.estimate = rep.estimate;
  r.witness_ref = witness_ref;
  return r;
}

void emit(const ExperimentConfig& cfg, Pending& pending, std::ostream& log) {
  std::sort(pending.rows.begin(), pending.rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.constant_name < b.constant_name;
            });
  const std::string ts = utc_timestamp();
  for (ReportRow& r : pending.rows) r.timestamp = ts;
  for (const auto& [path, content] : pending.sidecars) write_file_atomic(path, content);
  write_file_atomic(cfg.out, cfg.format == ReportFormat::csv
                                 ? csv_report(pending.rows)
                                 : dump(json_report(pending.rows)));
  log << "wrote " << cfg.out << " (" << pending.rows.size() << " row"
      << (pending.rows.size() == 1 ? "" : "s") << ", " << pending.sidecars.size()
      << " witness file" << (pending.sidecars.size() == 1 ? "" : "s") << ")\n";
}

int run_numeric(const ExperimentConfig& cfg, std::ostream& log) {
  const PathParts out = split_path(cfg.out);
  Pending pending;
  for (std::size_t dim : cfg.dims) {
    EstimatorConfig ecfg{dim, Alpha{cfg.alpha}, cfg.trials, cfg.seed, cfg.families};
    std::vector<ConstantReport> reports;
    switch (cfg.command) {
      case Command::qtriangle:
        reports.push_back(quasi_triangle_estimate(ecfg, cfg.exec));
        break;
      case Command::qlinear:
        reports.push_back(quasilinearity_estimate(ecfg, cfg.exec));
        break;
      case Command::multiplier:
        reports.push_back(multiplier_constant_estimate(ecfg, cfg.exec));
        break;
      case Command::unorm: {
        UNormReport u = u_norm_estimate(ecfg, cfg.exec);
        reports.push_back(std::move(u.forward));
        reports.push_back(std::move(u.inverse));
        break;
      }
      default:
        throw std::logic_error("run_numeric: not a numeric command");
    }
    for (const ConstantReport& rep : reports) {
      const std::string tag = rep.constant_name + ".n" + std::to_string(rep.dim);
      pending.rows.push_back(
          row_from_report(cfg, rep, pending.add_sidecar(out, tag, witness_sidecar_json(rep))));
    }
  }
  emit(cfg, pending, log);
  return 0;
}

int run_pelczynski(const ExperimentConfig& cfg, std::ostream& log) {
  const DerivationProblem problem = cfg.in.empty() ? standard_problem() : load_problem(cfg.in);
  const DeriveResult res = derive(problem.axioms, problem.goal, cfg.budget);
  if (!res.witness) {
    log << "derivation failed: budget " << cfg.budget << " exhausted after " << res.expansions
        << " expansions (frontier " << res.frontier << ")\n";
    return 3;
  }
  const IsoPair proved = check_witness(*res.witness, problem.axioms);
  if (proved.source != problem.goal.source || proved.target != problem.goal.target)
    throw std::logic_error("derive returned a witness for the wrong goal");

  nlohmann::ordered_json sidecar;
  sidecar["problem"] = problem_to_json(problem);
  sidecar["witness"] = res.witness->to_json();
  sidecar["expansions"] = res.expansions;

  Pending pending;
  ReportRow r;
  r.command = command_name(cfg.command);
  r.constant_name = "derivation_steps";
  r.estimate = static_cast<double>(res.expansions);
  r.witness_ref = pending.add_sidecar(split_path(cfg.out), "derivation", sidecar);
  pending.rows.push_back(std::move(r));
  emit(cfg, pending, log);
  return 0;
}

int run_certify(const ExperimentConfig& cfg, std::ostream& log) {
  const FactorizationCertificate cert = load_certificate(cfg.in);
  const double defect = certificate_defect(cert);
  const bool ok = verify_certificate(cert);

  Pending pending;
  ReportRow r;
  r.command = command_name(cfg.command);
  r.alpha = cert.alpha.value;
  r.dim = cert.zdim;
  r.constant_name = "certificate_defect";
  r.estimate = defect;
  r.witness_ref = cfg.in;
  pending.rows.push_back(std::move(r));
  emit(cfg, pending, log);
  log << (ok ? "certificate verified" : "certificate REJECTED") << " (relative defect "
      << fmt_g17(defect) << ")\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  try {
    validate_config(cfg);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    switch (cfg.command) {
      case Command::pelczynski:
        return run_pelczynski(cfg, log);
      case Command::certify:
        return run_certify(cfg, log);
      default:
        return run_numeric(cfg, log);
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zalpha
