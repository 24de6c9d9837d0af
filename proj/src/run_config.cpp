#include "nclandau/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nclandau/errors.hpp"

namespace nclandau {

using nlohmann::json;

std::string_view to_string(NCMode mode) {
  switch (mode) {
    case NCMode::commutative: return "commutative";
    case NCMode::space: return "space";
    case NCMode::phase: return "phase";
  }
  return "?";
}

std::string_view to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::theta: return "theta";
    case SweepParameter::alpha: return "alpha";
    case SweepParameter::B: return "B";
  }
  return "?";
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  if (steps < 2) return out;
  out.reserve(steps);
  const double step = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out.push_back(i + 1 == steps ? stop : start + i * step);
  return out;
}

namespace {

NCMode parse_mode(const std::string& s) {
  if (s == "commutative") return NCMode::commutative;
  if (s == "space") return NCMode::space;
  if (s == "phase") return NCMode::phase;
  throw ConfigError("nc.mode", "expected one of commutative, space, phase (got '" + s + "')");
}

SweepParameter parse_sweep_parameter(const std::string& s) {
  if (s == "theta") return SweepParameter::theta;
  if (s == "alpha") return SweepParameter::alpha;
  if (s == "B") return SweepParameter::B;
  throw ConfigError("sweep.parameter", "expected one of theta, alpha, B (got '" + s + "')");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("output.format", "expected csv or json (got '" + s + "')");
}

// Typed access to one JSON section with unknown-key rejection.
class Section {
 public:
  Section(const json& root, std::string name) : name_(std::move(name)) {
    const auto it = root.find(name_);
    if (it == root.end()) return;
    if (!it->is_object()) throw ConfigError(name_, "expected an object");
    node_ = &*it;
  }

  bool present() const { return node_ != nullptr; }

  void allow_only(std::initializer_list<const char*> keys) const {
    if (!node_) return;
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : node_->items()) {
      if (!allowed.count(key)) throw ConfigError(name_ + "." + key, "unknown key");
    }
  }

  std::optional<double> number(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) throw ConfigError(field(key), "expected a number");
    return v->get<double>();
  }

  std::optional<int> integer(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) throw ConfigError(field(key), "expected an integer");
    return v->get<int>();
  }

  std::optional<bool> boolean(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) throw ConfigError(field(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::string> string(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError(field(key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<MRange> range(const char* key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number_integer() ||
        !(*v)[1].is_number_integer()) {
      throw ConfigError(field(key), "expected [lo, hi] integers");
    }
    return MRange{(*v)[0].get<int>(), (*v)[1].get<int>()};
  }

 private:
  const json* find(const char* key) const {
    if (!node_) return nullptr;
    const auto it = node_->find(key);
    return it == node_->end() ? nullptr : &*it;
  }

  std::string field(const char* key) const { return name_ + "." + key; }

  std::string name_;
  const json* node_ = nullptr;
};

template <typename T>
void take(T& target, const std::optional<T>& value) {
  if (value) target = *value;
}

}  // namespace

void RunConfig::validate() const {
  physics.validate();
  if (!std::isfinite(theta)) throw ConfigError("nc.theta", "must be finite");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("nc.alpha", "must lie in (0, 1]");
  if (mode != NCMode::phase && alpha != 1.0) {
    throw ConfigError("nc.alpha", "alpha != 1 requires mode \"phase\"");
  }
  if (mode == NCMode::commutative && theta != 0.0) {
    throw ConfigError("nc.theta", "theta != 0 requires mode \"space\" or \"phase\"");
  }
  if (sweep) {
    if (sweep->steps < 2) throw ConfigError("sweep.steps", "must be at least 2");
    if (!std::isfinite(sweep->start) || !std::isfinite(sweep->stop)) {
      throw ConfigError("sweep.start", "sweep bounds must be finite");
    }
    if (sweep->parameter == SweepParameter::alpha && mode != NCMode::phase) {
      throw ConfigError("sweep.parameter", "sweeping alpha requires mode \"phase\"");
    }
    if (sweep->parameter == SweepParameter::theta && mode == NCMode::commutative) {
      throw ConfigError("sweep.parameter", "sweeping theta requires mode \"space\" or \"phase\"");
    }
  }
  if (quantum.max_N < 0) throw ConfigError("quantum.max_N", "must be non-negative");
  if (quantum.m_range.lo > quantum.m_range.hi) {
    throw ConfigError("quantum.m_range", "lo must not exceed hi");
  }
  if (!std::isfinite(quantum.k)) throw ConfigError("quantum.k", "must be finite");
  if (oracle.n_points < 1) throw ConfigError("oracle.n_points", "must be positive");
  if (!(oracle.rho_max_factor > 0.0)) {
    throw ConfigError("oracle.rho_max_factor", "must be positive");
  }
  if (wavefunction.samples < 2) throw ConfigError("wavefunction.samples", "must be at least 2");
  if (wavefunction.n_rho < 0) throw ConfigError("wavefunction.n_rho", "must be non-negative");
  if (wavefunction.rho_max && !(*wavefunction.rho_max > 0.0)) {
    throw ConfigError("wavefunction.rho_max", "must be positive");
  }
  if (theta_bar_override && !std::isfinite(*theta_bar_override)) {
    throw ConfigError("nc.theta_bar_override", "must be finite");
  }
  // The base point of a theta sweep may legitimately be singular.
  if (!sweep || sweep->parameter != SweepParameter::theta) (void)nc_params();
}

NCParams RunConfig::nc_params() const {
  try {
    switch (mode) {
      case NCMode::commutative: return NCParams::commutative(physics.hbar);
      case NCMode::space: return NCParams::space(physics.hbar, theta);
      case NCMode::phase: return NCParams::phase(physics.hbar, theta, alpha);
    }
  } catch (const DomainError& e) {
    throw ConfigError("nc.theta", e.what());
  } catch (const ConfigError& e) {
    throw ConfigError("nc." + e.field(), e.what());
  }
  throw ConfigError("nc.mode", "unknown mode");
}

NCParams RunConfig::nc_params_for_verify() const {
  if (!theta_bar_override) return nc_params();
  return NCParams::unchecked(physics.hbar, theta, *theta_bar_override, alpha);
}

RunConfig build_run_config(const std::optional<std::string>& json_text, bool use_preset,
                           const ConfigOverrides& o) {
  json root = json::object();
  if (json_text) {
    try {
      root = json::parse(*json_text);
    } catch (const json::parse_error& e) {
      throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config", "top level must be a JSON object");
    static const std::set<std::string> sections = {"physics", "nc",     "sweep",  "quantum",
                                                   "oracle",  "output", "wavefunction"};
    for (const auto& [key, value] : root.items()) {
      if (!sections.count(key)) throw ConfigError(key, "unknown section");
    }
  }

  RunConfig cfg;
  const bool defaults = use_preset || !json_text;

  const Section physics(root, "physics");
  physics.allow_only({"q", "mu", "B", "c", "hbar"});
  auto physics_field = [&](const char* key, double& target, const std::optional<double>& flag) {
    if (flag) {
      target = *flag;
    } else if (auto v = physics.number(key)) {
      target = *v;
    } else if (!defaults) {
      throw ConfigError(std::string("physics.") + key,
                        std::string("missing required field ") + key +
                            " (pass --preset natural to use defaults)");
    }
  };
  const LandauConfig preset = LandauConfig::natural();
  cfg.physics = preset;
  physics_field("q", cfg.physics.q, o.q);
  physics_field("mu", cfg.physics.mu, o.mu);
  physics_field("B", cfg.physics.B, o.B);
  physics_field("c", cfg.physics.c, o.c);
  physics_field("hbar", cfg.physics.hbar, o.hbar);

  const Section nc(root, "nc");
  nc.allow_only({"mode", "theta", "alpha", "theta_bar_override"});
  take(cfg.theta, nc.number("theta"));
  take(cfg.theta, o.theta);
  take(cfg.alpha, nc.number("alpha"));
  take(cfg.alpha, o.alpha);
  cfg.theta_bar_override = nc.number("theta_bar_override");
  if (o.theta_bar_override) cfg.theta_bar_override = o.theta_bar_override;
  std::optional<std::string> mode = nc.string("mode");
  if (o.mode) mode = o.mode;
  if (mode) {
    cfg.mode = parse_mode(*mode);
  } else if (cfg.alpha != 1.0) {
    cfg.mode = NCMode::phase;
  } else if (cfg.theta != 0.0) {
    cfg.mode = NCMode::space;
  }

  const Section sweep(root, "sweep");
  sweep.allow_only({"parameter", "start", "stop", "steps"});
  if (sweep.present() || o.sweep_parameter || o.sweep_start || o.sweep_stop || o.sweep_steps) {
    SweepSpec s;
    std::optional<std::string> parameter = sweep.string("parameter");
    if (o.sweep_parameter) parameter = o.sweep_parameter;
    if (!parameter) throw ConfigError("sweep.parameter", "missing");
    s.parameter = parse_sweep_parameter(*parameter);
    auto start = o.sweep_start ? o.sweep_start : sweep.number("start");
    auto stop = o.sweep_stop ? o.sweep_stop : sweep.number("stop");
    auto steps = o.sweep_steps ? o.sweep_steps : sweep.integer("steps");
    if (!start) throw ConfigError("sweep.start", "missing");
    if (!stop) throw ConfigError("sweep.stop", "missing");
    if (!steps) throw ConfigError("sweep.steps", "missing");
    s.start = *start;
    s.stop = *stop;
    s.steps = *steps;
    cfg.sweep = s;
  }

  const Section quantum(root, "quantum");
  quantum.allow_only({"max_N", "m_range", "k"});
  take(cfg.quantum.max_N, quantum.integer("max_N"));
  take(cfg.quantum.max_N, o.max_N);
  cfg.quantum.m_range = {-cfg.quantum.max_N, cfg.quantum.max_N};
  take(cfg.quantum.m_range, quantum.range("m_range"));
  take(cfg.quantum.m_range.lo, o.m_lo);
  take(cfg.quantum.m_range.hi, o.m_hi);
  take(cfg.quantum.k, quantum.number("k"));
  take(cfg.quantum.k, o.k);

  const Section oracle(root, "oracle");
  oracle.allow_only({"enabled", "n_points", "rho_max_factor"});
  take(cfg.oracle.enabled, oracle.boolean("enabled"));
  take(cfg.oracle.enabled, o.oracle_enabled);
  take(cfg.oracle.n_points, oracle.integer("n_points"));
  take(cfg.oracle.n_points, o.n_points);
  take(cfg.oracle.rho_max_factor, oracle.number("rho_max_factor"));
  take(cfg.oracle.rho_max_factor, o.rho_max_factor);

  const Section output(root, "output");
  output.allow_only({"format", "path"});
  std::optional<std::string> format = output.string("format");
  if (o.format) format = o.format;
  if (format) cfg.output.format = parse_format(*format);
  take(cfg.output.path, output.string("path"));
  take(cfg.output.path, o.output_path);

  const Section wave(root, "wavefunction");
  wave.allow_only({"n_rho", "m", "samples", "rho_max"});
  take(cfg.wavefunction.n_rho, wave.integer("n_rho"));
  take(cfg.wavefunction.n_rho, o.n_rho);
  take(cfg.wavefunction.m, wave.integer("m"));
  take(cfg.wavefunction.m, o.m);
  take(cfg.wavefunction.samples, wave.integer("samples"));
  take(cfg.wavefunction.samples, o.samples);
  if (auto v = wave.number("rho_max")) cfg.wavefunction.rho_max = v;
  if (o.rho_max) cfg.wavefunction.rho_max = o.rho_max;

  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::optional<std::string>& path, bool use_preset,
                          const ConfigOverrides& overrides) {
  if (!path) return build_run_config(std::nullopt, use_preset, overrides);
  std::ifstream in(*path);
  if (!in) throw ConfigError("config", "cannot open '" + *path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return build_run_config(text.str(), use_preset, overrides);
}

}  // namespace nclandau
