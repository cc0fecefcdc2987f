#include "salt/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "salt/errors.hpp"
#include "salt/format.hpp"

namespace salt {

std::string to_string(Command c) {
  switch (c) {
    case Command::Simulate: return "simulate";
    case Command::Verify: return "verify";
    case Command::Converge: return "converge";
    case Command::Stability: return "stability";
  }
  return "unknown";
}

Command parse_command(const std::string& text) {
  if (text == "simulate") return Command::Simulate;
  if (text == "verify") return Command::Verify;
  if (text == "converge") return Command::Converge;
  if (text == "stability") return Command::Stability;
  throw ParameterError("unknown command '" + text +
                       "' (expected simulate, verify, converge or stability)");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class Int>
Int parse_int(std::string_view text) {
  Int v{};
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end) {
    throw ParameterError("expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ParameterError("expected true or false, got '" + std::string(text) + "'");
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view text, Parse parse) {
  std::vector<T> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty()) throw ParameterError("empty item in list");
    out.push_back(parse(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<double> parse_doubles(std::string_view text) {
  return parse_list<double>(text, [](std::string_view v) { return parse_double(v); });
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  return parse_list<std::size_t>(text, parse_int<std::size_t>);
}

template <class T, class Fmt>
std::string join(const std::vector<T>& v, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v[i]);
  }
  return out;
}

std::string fmt_size(std::size_t v) { return std::to_string(v); }

struct Key {
  std::string name;
  std::function<void(ExperimentSpec&, std::string_view)> set;
  std::function<std::string(const ExperimentSpec&)> get;
};

#define SALT_DOUBLE(key, field)                                                    \
  Key {                                                                            \
    key, [](ExperimentSpec& s, std::string_view v) { s.field = parse_double(v); }, \
        [](const ExperimentSpec& s) { return format_double(s.field); }             \
  }
#define SALT_INT(key, field)                                                       \
  Key {                                                                            \
    key,                                                                           \
        [](ExperimentSpec& s, std::string_view v) {                                \
          s.field = parse_int<decltype(s.field)>(v);                               \
        },                                                                         \
        [](const ExperimentSpec& s) { return std::to_string(s.field); }            \
  }

const std::vector<Key>& keys() {
  static const std::vector<Key> table{
      {"command",
       [](ExperimentSpec& s, std::string_view v) { s.command = parse_command(std::string(v)); },
       [](const ExperimentSpec& s) { return to_string(s.command); }},
      {"model",
       [](ExperimentSpec& s, std::string_view v) { s.sim.model = parse_model_kind(std::string(v)); },
       [](const ExperimentSpec& s) { return to_string(s.sim.model); }},
      SALT_INT("N", sim.N),
      SALT_DOUBLE("dt", sim.dt),
      SALT_DOUBLE("T", sim.T_end),
      SALT_DOUBLE("eps", sim.eps),
      SALT_DOUBLE("R", sim.R),
      SALT_INT("K", sim.K),
      SALT_INT("seed", sim.seed),
      SALT_DOUBLE("s", sim.s),
      SALT_DOUBLE("s_max", sim.s_max),
      SALT_DOUBLE("N_stop", sim.N_stop),
      {"scheme",
       [](ExperimentSpec& s, std::string_view v) { s.sim.scheme = parse_scheme(std::string(v)); },
       [](const ExperimentSpec& s) { return to_string(s.sim.scheme); }},
      {"decay",
       [](ExperimentSpec& s, std::string_view v) {
         s.sim.decay.kind = parse_decay_kind(std::string(v));
         s.lab.decay.kind = s.sim.decay.kind;
       },
       [](const ExperimentSpec& s) { return to_string(s.sim.decay.kind); }},
      {"decay_param",
       [](ExperimentSpec& s, std::string_view v) {
         s.sim.decay.param = s.lab.decay.param = parse_double(v);
       },
       [](const ExperimentSpec& s) { return format_double(s.sim.decay.param); }},
      {"decay_amplitude",
       [](ExperimentSpec& s, std::string_view v) {
         s.sim.decay.amplitude = s.lab.decay.amplitude = parse_double(v);
       },
       [](const ExperimentSpec& s) { return format_double(s.sim.decay.amplitude); }},
      {"init",
       [](ExperimentSpec& s, std::string_view v) { s.sim.init = parse_init_kind(std::string(v)); },
       [](const ExperimentSpec& s) { return to_string(s.sim.init); }},
      SALT_DOUBLE("init_amplitude", sim.init_amplitude),
      SALT_INT("init_band", sim.init_band),
      SALT_INT("init_seed", sim.init_seed),
      SALT_DOUBLE("linear_rate", sim.linear_rate),
      SALT_INT("sample_every", sim.sample_every),
      SALT_DOUBLE("blowup_factor", sim.blowup_factor),
      SALT_DOUBLE("cfl", sim.cfl),
      {"record_states",
       [](ExperimentSpec& s, std::string_view v) { s.sim.record_states = parse_bool(v); },
       [](const ExperimentSpec& s) { return std::string(s.sim.record_states ? "true" : "false"); }},
      SALT_INT("ensemble", ensemble),
      {"out", [](ExperimentSpec& s, std::string_view v) { s.out = std::string(v); },
       [](const ExperimentSpec& s) { return s.out; }},
      SALT_INT("workers", workers),
      {"estimate", [](ExperimentSpec& s, std::string_view v) { s.estimate = std::string(v); },
       [](const ExperimentSpec& s) { return s.estimate; }},
      {"eps_ladder",
       [](ExperimentSpec& s, std::string_view v) { s.eps_ladder = parse_doubles(v); },
       [](const ExperimentSpec& s) { return join(s.eps_ladder, format_double); }},
      {"dt_ladder",
       [](ExperimentSpec& s, std::string_view v) { s.dt_ladder = parse_doubles(v); },
       [](const ExperimentSpec& s) { return join(s.dt_ladder, format_double); }},
      SALT_INT("paths", paths),
      SALT_DOUBLE("delta", delta),
      SALT_INT("perturb_mode", perturb_mode),
      {"lab_resolutions",
       [](ExperimentSpec& s, std::string_view v) { s.lab.resolutions = parse_sizes(v); },
       [](const ExperimentSpec& s) { return join(s.lab.resolutions, fmt_size); }},
      {"lab_resolutions_2d",
       [](ExperimentSpec& s, std::string_view v) { s.lab.resolutions_2d = parse_sizes(v); },
       [](const ExperimentSpec& s) { return join(s.lab.resolutions_2d, fmt_size); }},
      SALT_INT("lab_corpus", lab.corpus_size),
      SALT_INT("lab_corpus_2d", lab.corpus_size_2d),
      SALT_INT("lab_seed", lab.seed),
      SALT_INT("lab_K", lab.K),
      {"lab_eps",
       [](ExperimentSpec& s, std::string_view v) { s.lab.eps_list = parse_doubles(v); },
       [](const ExperimentSpec& s) { return join(s.lab.eps_list, format_double); }},
      {"lab_eps_2d",
       [](ExperimentSpec& s, std::string_view v) { s.lab.eps_list_2d = parse_doubles(v); },
       [](const ExperimentSpec& s) { return join(s.lab.eps_list_2d, format_double); }},
      SALT_DOUBLE("lab_threshold", lab.threshold),
      SALT_DOUBLE("lab_s_sch2", lab.s_sch2),
      SALT_DOUBLE("lab_s_ccf", lab.s_ccf),
      SALT_DOUBLE("lab_s_sqg", lab.s_sqg),
      SALT_DOUBLE("lab_s_scalar", lab.s_scalar),
      SALT_INT("lab_mollifier_n", lab.mollifier_n),
  };
  return table;
}

#undef SALT_DOUBLE
#undef SALT_INT

std::string threshold_text(ModelKind m) {
  switch (m) {
    case ModelKind::Sch2: return "11/2";
    case ModelKind::Ccf: return "7/2";
    case ModelKind::Sqg: return "4";
    case ModelKind::Linear: return "0";
  }
  return "?";
}

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& k : keys()) out.push_back(k.name);
    return out;
  }();
  return names;
}

ExperimentSpec parse_config_text(std::string_view text, const std::string& source) {
  struct Entry {
    std::string value;
    std::size_t line;
  };
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto where = [&](std::size_t line) { return source + ":" + std::to_string(line) + ": "; };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError(where(line_no) + "expected 'key = value', got '" +
                           std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& names = config_keys();
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw ParameterError(where(line_no) + "unknown key '" + key + "'");
    }
    if (value.empty() && key != "eps_ladder" && key != "dt_ladder") {
      throw ParameterError(where(line_no) + "missing value for '" + key + "'");
    }
    if (auto it = entries.find(key); it != entries.end()) {
      throw ParameterError(where(line_no) + "duplicate key '" + key +
                           "' (first set on line " + std::to_string(it->second.line) + ")");
    }
    entries.emplace(key, Entry{value, line_no});
  }

  auto at = [&](const std::string& key) {
    auto it = entries.find(key);
    return it == entries.end() ? source + ": (default " + key + "): " : where(it->second.line);
  };
  auto has = [&](const std::string& key) { return entries.count(key) > 0; };

  ExperimentSpec spec;
  auto apply = [&](const Key& k) {
    auto it = entries.find(k.name);
    if (it == entries.end()) return;
    try {
      k.set(spec, it->second.value);
    } catch (const ParameterError& e) {
      throw ParameterError(where(it->second.line) + k.name + ": " + e.what());
    }
  };
  const auto& table = keys();
  apply(table[0]);
  if (has("model")) {
    apply(table[1]);
    spec.sim = SimConfig::defaults(spec.sim.model);
  } else if (spec.command != Command::Verify) {
    throw ParameterError(source + ": missing required key 'model'");
  }
  if (spec.command != Command::Verify) {
    for (const char* req : {"N", "dt", "T"}) {
      if (!has(req)) {
        throw ParameterError(source + ": missing required key '" + std::string(req) + "'");
      }
    }
  }
  for (std::size_t i = 2; i < table.size(); ++i) apply(table[i]);
  if (!has("s_max")) spec.sim.s_max = spec.sim.s + 2.0;

  const SimConfig& c = spec.sim;
  auto require = [&](bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ParameterError(at(key) + what);
  };
  const double thr = sobolev_threshold(c.model);
  if (c.model != ModelKind::Linear) {
    require(c.s > thr, "s",
            "s = " + format_double(c.s) + " violates s > " + threshold_text(c.model) +
                " required for " + to_string(c.model));
  }
  require(power_of_two(c.N), "N", "N must be a power of two >= 2");
  require(c.dt > 0.0 && std::isfinite(c.dt), "dt", "dt must be > 0");
  require(c.T_end >= 0.0 && std::isfinite(c.T_end), "T", "T must be >= 0");
  {
    const double steps = c.T_end / c.dt;
    require(std::abs(steps - std::round(steps)) <= 1e-9 * std::max(1.0, steps), "T",
            "T / dt must be an integer number of steps");
  }
  require(c.eps > 0.0 && c.eps < 1.0, "eps", "eps must lie in (0,1)");
  require(c.R > 1.0 && std::isfinite(c.R), "R", "R must be > 1");
  require(c.N_stop > 0.0, "N_stop", "N_stop must be > 0");
  require(c.model != ModelKind::Linear || c.K == 1, "K", "the linear model needs K = 1");
  if (c.decay.kind == DecayKind::Geometric) {
    require(c.decay.param > 0.0 && c.decay.param < 1.0, "decay_param",
            "geometric decay needs 0 < decay_param < 1");
  } else {
    require(c.decay.param > 1.0, "decay_param", "polynomial decay needs decay_param > 1");
  }
  require(c.decay.amplitude >= 0.0, "decay_amplitude", "decay_amplitude must be >= 0");
  require(c.init_band >= 1, "init_band", "init_band must be >= 1");
  require(c.sample_every >= 1, "sample_every", "sample_every must be >= 1");
  require(c.blowup_factor > 1.0, "blowup_factor", "blowup_factor must be > 1");
  require(c.cfl > 0.0, "cfl", "cfl must be > 0");
  require(spec.ensemble >= 1, "ensemble", "ensemble must be >= 1");
  require(spec.workers >= 1, "workers", "workers must be >= 1");
  require(spec.paths >= 1, "paths", "paths must be >= 1");
  require(spec.delta >= 0.0, "delta", "delta must be >= 0");
  if (spec.command == Command::Stability) {
    require(c.model != ModelKind::Linear, "model", "stability needs a field model");
    require(spec.perturb_mode >= 1 && spec.perturb_mode <= static_cast<int>(c.N / 3),
            "perturb_mode", "perturb_mode must lie in [1, N/3]");
  }
  for (double e : spec.eps_ladder) {
    require(e > 0.0 && e < 1.0, "eps_ladder", "eps_ladder entries must lie in (0,1)");
  }
  for (double d : spec.dt_ladder) {
    require(d > 0.0, "dt_ladder", "dt_ladder entries must be > 0");
  }
  if (spec.estimate != "all") {
    const auto& ids = estimate_ids();
    if (std::find(ids.begin(), ids.end(), spec.estimate) == ids.end()) {
      std::string valid = "all";
      for (const auto& id : ids) valid += ", " + id;
      throw ParameterError(at("estimate") + "unknown estimate id '" + spec.estimate +
                           "'; valid ids: " + valid);
    }
  }
  for (auto n : spec.lab.resolutions) {
    require(power_of_two(n), "lab_resolutions", "resolutions must be powers of two");
  }
  for (auto n : spec.lab.resolutions_2d) {
    require(power_of_two(n), "lab_resolutions_2d", "resolutions must be powers of two");
  }
  require(power_of_two(spec.lab.mollifier_n), "lab_mollifier_n",
          "lab_mollifier_n must be a power of two");
  require(spec.lab.corpus_size >= 1 && spec.lab.corpus_size_2d >= 1, "lab_corpus",
          "corpus sizes must be >= 1");
  c.validate();
  return spec;
}

ExperimentSpec parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string serialize(const ExperimentSpec& spec) {
  std::string out;
  for (const auto& k : keys()) out += k.name + " = " + k.get(spec) + "\n";
  return out;
}

}  // namespace salt
