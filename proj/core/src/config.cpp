#include "stochtop/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "stochtop/error.hpp"

namespace stochtop {

ExperimentKind parse_experiment_kind(const std::string& s) {
  if (s == "betti-lln") return ExperimentKind::BettiLln;
  if (s == "f-count") return ExperimentKind::FCount;
  if (s == "local-weak") return ExperimentKind::LocalWeak;
  if (s == "esd") return ExperimentKind::Esd;
  if (s == "spatial-independence") return ExperimentKind::SpatialIndependence;
  throw InvalidArgument("unknown experiment kind '" + s + "'");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::BettiLln: return "betti-lln";
    case ExperimentKind::FCount: return "f-count";
    case ExperimentKind::LocalWeak: return "local-weak";
    case ExperimentKind::Esd: return "esd";
    case ExperimentKind::SpatialIndependence: return "spatial-independence";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError(line, "malformed number '" + s + "'");
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& s, std::size_t line) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError(line, "empty list element");
    out.push_back(parse_number<T>(item, line));
  }
  if (out.empty()) throw ParseError(line, "empty list");
  if (trim(s).back() == ',') throw ParseError(line, "empty list element");
  return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  using Setter = std::function<void(const std::string&, std::size_t)>;
  const std::map<std::string, Setter> setters = {
      {"experiment",
       [&](const std::string& v, std::size_t l) {
         try {
           cfg.kind = parse_experiment_kind(v);
         } catch (const InvalidArgument& e) {
           throw ParseError(l, e.what());
         }
       }},
      {"model",
       [&](const std::string& v, std::size_t l) {
         try {
           cfg.model = parse_model_kind(v);
         } catch (const InvalidArgument& e) {
           throw ParseError(l, e.what());
         }
       }},
      {"d", [&](const std::string& v, std::size_t l) { cfg.d = parse_number<int>(v, l); }},
      {"k", [&](const std::string& v, std::size_t l) { cfg.k = parse_number<int>(v, l); }},
      {"n", [&](const std::string& v, std::size_t l) { cfg.n = parse_list<std::size_t>(v, l); }},
      {"c", [&](const std::string& v, std::size_t l) { cfg.c = parse_list<double>(v, l); }},
      {"p", [&](const std::string& v, std::size_t l) { cfg.p = parse_list<double>(v, l); }},
      {"dim_cap", [&](const std::string& v, std::size_t l) { cfg.dim_cap = parse_number<int>(v, l); }},
      {"trials", [&](const std::string& v, std::size_t l) { cfg.trials = parse_number<std::size_t>(v, l); }},
      {"seed", [&](const std::string& v, std::size_t l) { cfg.seed = parse_number<std::uint64_t>(v, l); }},
      {"target",
       [&](const std::string& v, std::size_t l) {
         if (v != "h" && v != "g") throw ParseError(l, "target must be h or g");
         cfg.target = v;
       }},
      {"radius", [&](const std::string& v, std::size_t l) { cfg.radius = parse_number<int>(v, l); }},
      {"pt_samples", [&](const std::string& v, std::size_t l) { cfg.pt_samples = parse_number<std::size_t>(v, l); }},
      {"grid_upper", [&](const std::string& v, std::size_t l) { cfg.grid_upper = parse_number<double>(v, l); }},
      {"grid_step", [&](const std::string& v, std::size_t l) { cfg.grid_step = parse_number<double>(v, l); }},
      {"zero_margin", [&](const std::string& v, std::size_t l) { cfg.zero_margin = parse_number<double>(v, l); }},
      {"pt_depth", [&](const std::string& v, std::size_t l) { cfg.pt_depth = parse_number<int>(v, l); }},
      {"pt_measure_samples",
       [&](const std::string& v, std::size_t l) { cfg.pt_measure_samples = parse_number<std::size_t>(v, l); }},
      {"batches", [&](const std::string& v, std::size_t l) { cfg.batches = parse_number<std::size_t>(v, l); }},
      {"output", [&](const std::string& v, std::size_t) { cfg.output = v; }},
      {"threads", [&](const std::string& v, std::size_t l) { cfg.threads = parse_number<std::size_t>(v, l); }},
  };
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw ParseError(line, "unknown key '" + key + "'");
    if (value.empty()) throw ParseError(line, "missing value for '" + key + "'");
    it->second(value, line);
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  return parse_config(in);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n.empty()) throw InvalidArgument("config needs at least one n");
  for (std::size_t n : cfg.n) {
    if (n == 0) throw InvalidArgument("n must be positive");
  }
  if (cfg.trials == 0) throw InvalidArgument("trials must be at least 1");
  if (cfg.k < 0) throw InvalidArgument("k must be non-negative");
  if (cfg.model == ModelKind::Multi) {
    if (cfg.p.empty()) throw InvalidArgument("model mp needs an explicit p list");
    for (double q : cfg.p) {
      if (!(q >= 0.0 && q <= 1.0)) throw InvalidArgument("every p_i must lie in [0, 1]");
    }
  } else {
    if (cfg.d < 1) throw InvalidArgument("d must be at least 1");
    if (cfg.kind != ExperimentKind::SpatialIndependence && cfg.c.empty()) {
      throw InvalidArgument("model " + to_string(cfg.model) + " needs a c list");
    }
    for (double c : cfg.c) {
      if (!(c >= 0.0)) throw InvalidArgument("c must be non-negative");
    }
    if (cfg.kind == ExperimentKind::SpatialIndependence && cfg.p.size() != 1) {
      throw InvalidArgument("spatial-independence with lm/clique needs a single p");
    }
  }
  if (cfg.model == ModelKind::Clique && cfg.clique_cap() < cfg.k + 1) {
    throw InvalidArgument("clique dimension cap must be at least k + 1");
  }
  if (cfg.kind == ExperimentKind::LocalWeak) {
    if (cfg.radius < 0 || cfg.radius > 2) throw InvalidArgument("local-weak radius must be 0, 1 or 2");
    if (cfg.pt_samples == 0) throw InvalidArgument("pt_samples must be positive");
  }
  if (cfg.kind == ExperimentKind::Esd) {
    if (!(cfg.grid_upper > 0.0) || !(cfg.grid_step > 0.0)) throw InvalidArgument("grid bounds must be positive");
    if (cfg.pt_depth < 0) throw InvalidArgument("pt_depth must be non-negative");
  }
  if (cfg.kind == ExperimentKind::SpatialIndependence) {
    if (cfg.batches < 2 || cfg.batches > cfg.trials) throw InvalidArgument("batches must lie in [2, trials]");
    for (std::size_t n : cfg.n) {
      if (n < 4) throw InvalidArgument("spatial-independence needs n >= 4");
    }
  }
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "experiment = " << to_string(cfg.kind) << "\n";
  os << "model = " << to_string(cfg.model) << "\n";
  os << "d = " << cfg.d << "\n";
  os << "k = " << cfg.k << "\n";
  if (!cfg.n.empty()) os << "n = " << join(cfg.n) << "\n";
  if (!cfg.c.empty()) os << "c = " << join(cfg.c) << "\n";
  if (!cfg.p.empty()) os << "p = " << join(cfg.p) << "\n";
  os << "dim_cap = " << cfg.dim_cap << "\n";
  os << "trials = " << cfg.trials << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "target = " << cfg.target << "\n";
  os << "radius = " << cfg.radius << "\n";
  os << "pt_samples = " << cfg.pt_samples << "\n";
  os << "grid_upper = " << cfg.grid_upper << "\n";
  os << "grid_step = " << cfg.grid_step << "\n";
  os << "zero_margin = " << cfg.zero_margin << "\n";
  os << "pt_depth = " << cfg.pt_depth << "\n";
  os << "pt_measure_samples = " << cfg.pt_measure_samples << "\n";
  os << "batches = " << cfg.batches << "\n";
  if (!cfg.output.empty()) os << "output = " << cfg.output << "\n";
  if (cfg.threads > 0) os << "threads = " << cfg.threads << "\n";
  return os.str();
}

}  // namespace stochtop
