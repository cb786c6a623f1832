#include "hokt/io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hokt/error.hpp"
#include "hokt/metrics.hpp"

namespace fs = std::filesystem;

namespace hokt {

const char* to_string(RunMode m) {
  switch (m) {
    case RunMode::hokt: return "hokt";
    case RunMode::first_order: return "first_order";
    case RunMode::static_only: return "static";
  }
  return "unknown";
}

RunMode run_mode_from_string(const std::string& s) {
  if (s == "hokt") return RunMode::hokt;
  if (s == "first_order") return RunMode::first_order;
  if (s == "static") return RunMode::static_only;
  throw config_error("unknown algorithm '" + s + "' (expected hokt, first_order or static)");
}

// --- small parsing helpers --------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto* b = s.data();
  const auto* e = s.data() + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e)
    throw config_error("expected a non-negative integer for " + what + ", got '" + s + "'");
  return v;
}

double parse_f64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected a number for " + what + ", got '" + s + "'");
  }
}

std::vector<double> parse_weight_list(const std::string& s, const std::string& what) {
  std::vector<double> w;
  for (const auto& tok : split(s, ','))
    w.push_back(parse_f64(trim(tok), what));
  return w;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

// --- dataset files ----------------------------------------------------------

namespace {

struct RawSnapshot {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::pair<std::int64_t, int>> labels;
  bool has_labels = false;
};

RawSnapshot read_raw_snapshot(const fs::path& edges_path, const fs::path& labels_path) {
  RawSnapshot raw;
  auto parse_pairs = [](const fs::path& path, auto&& on_line) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      std::istringstream ss(t);
      std::int64_t a = 0, b = 0;
      std::string extra;
      if (!(ss >> a >> b) || (ss >> extra))
        throw input_error(path.filename().string() + ":" + std::to_string(lineno) +
                          ": expected two integers, got '" + t + "'");
      if (a < 0 || b < 0)
        throw input_error(path.filename().string() + ":" + std::to_string(lineno) +
                          ": negative id");
      on_line(a, b);
    }
  };
  parse_pairs(edges_path, [&](std::int64_t u, std::int64_t v) { raw.edges.emplace_back(u, v); });
  if (fs::exists(labels_path)) {
    raw.has_labels = true;
    parse_pairs(labels_path, [&](std::int64_t u, std::int64_t l) {
      raw.labels.emplace_back(u, static_cast<int>(l));
    });
  }
  return raw;
}

}  // namespace

DynamicNetwork load_network(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw io_error("dataset directory not found: " + dir);

  std::size_t max_t = 0;
  for (const auto& entry : fs::directory_iterator(root)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 7 && name.starts_with("t") && name.ends_with(".edges")) {
      const std::string num = name.substr(1, name.size() - 7);
      if (!num.empty() && std::all_of(num.begin(), num.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
        max_t = std::max<std::size_t>(max_t, parse_u64(num, "timestep"));
    }
  }
  if (max_t == 0) throw input_error("no t<k>.edges files in " + dir);
  for (std::size_t t = 1; t <= max_t; ++t) {
    if (!fs::exists(root / ("t" + std::to_string(t) + ".edges")))
      throw input_error("missing t" + std::to_string(t) + ".edges in " + dir);
  }

  std::vector<RawSnapshot> raw;
  for (std::size_t t = 1; t <= max_t; ++t)
    raw.push_back(read_raw_snapshot(root / ("t" + std::to_string(t) + ".edges"),
                                    root / ("t" + std::to_string(t) + ".labels")));
  const bool any_labels =
      std::any_of(raw.begin(), raw.end(), [](const RawSnapshot& r) { return r.has_labels; });
  if (any_labels)
    for (std::size_t t = 0; t < raw.size(); ++t)
      if (!raw[t].has_labels)
        throw input_error("t" + std::to_string(t + 1) +
                          ".labels is missing while other timesteps have labels");

  // dense remap over every external id seen anywhere, ascending
  std::vector<std::int64_t> ids;
  for (const auto& r : raw) {
    for (auto [u, v] : r.edges) {
      ids.push_back(u);
      ids.push_back(v);
    }
    for (auto [u, l] : r.labels) ids.push_back(u);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::int64_t ext) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), ext) - ids.begin());
  };
  const auto universe = static_cast<std::uint32_t>(ids.size());

  DynamicNetwork net;
  net.external_ids = ids;
  for (std::size_t t = 0; t < raw.size(); ++t) {
    EdgeList edges;
    std::vector<NodeId> present;
    for (auto [u, v] : raw[t].edges) {
      edges.emplace_back(dense(u), dense(v));
      present.push_back(dense(u));
      present.push_back(dense(v));
    }
    Partition truth;
    if (any_labels) {
      truth.labels.assign(universe, Partition::kAbsent);
      for (auto [ext, l] : raw[t].labels) {
        if (l < 0)
          throw input_error("t" + std::to_string(t + 1) + ".labels: negative community label");
        const NodeId u = dense(ext);
        if (truth.labels[u] != Partition::kAbsent && truth.labels[u] != l)
          throw input_error("t" + std::to_string(t + 1) + ".labels: conflicting labels for node " +
                            std::to_string(ext));
        truth.labels[u] = l;
        present.push_back(u);
      }
      for (auto [u, v] : raw[t].edges)
        for (std::int64_t ext : {u, v})
          if (truth.labels[dense(ext)] == Partition::kAbsent)
            throw input_error("t" + std::to_string(t + 1) + ".labels: node " +
                              std::to_string(ext) + " appears in edges but has no label");
    }
    net.snapshots.push_back(build_snapshot_subset(universe, std::move(present), edges));
    if (any_labels) net.truth.push_back(std::move(truth));
  }
  validate_network(net);
  return net;
}

void save_network(const DynamicNetwork& net, const std::string& dir, const std::string& meta) {
  const fs::path root(dir);
  fs::create_directories(root);
  for (std::size_t t = 0; t < net.timestep_count(); ++t) {
    const auto& g = net.snapshots[t];
    std::string edges;
    for (auto [u, v] : g.edges)
      edges += std::to_string(u) + " " + std::to_string(v) + "\n";
    write_file((root / ("t" + std::to_string(t + 1) + ".edges")).string(), edges);
    if (net.has_truth()) {
      std::string labels;
      for (NodeId u : g.nodes)
        labels += std::to_string(u) + " " + std::to_string(net.truth[t].label(u)) + "\n";
      write_file((root / ("t" + std::to_string(t + 1) + ".labels")).string(), labels);
    }
  }
  if (!meta.empty()) write_file((root / "meta").string(), meta);
}

// --- generator specs ----------------------------------------------------------

bool is_generator_spec(const std::string& s) {
  return s.starts_with("synfix:") || s.starts_with("events:") || s == "synfix" || s == "events";
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body, const std::string& what) {
  std::map<std::string, std::string> kv;
  if (trim(body).empty()) return kv;
  for (const auto& item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw config_error(what + ": expected key=value, got '" + item + "'");
    kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return kv;
}

template <class T>
void take_u32(std::map<std::string, std::string>& kv, const std::string& key, T& out) {
  if (auto it = kv.find(key); it != kv.end()) {
    out = static_cast<T>(parse_u64(it->second, key));
    kv.erase(it);
  }
}

void take_f64(std::map<std::string, std::string>& kv, const std::string& key, double& out) {
  if (auto it = kv.find(key); it != kv.end()) {
    out = parse_f64(it->second, key);
    kv.erase(it);
  }
}

}  // namespace

DynamicNetwork generate_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  auto kv = parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1), kind);

  std::uint32_t stride = 1;
  take_u32(kv, "stride", stride);

  DynamicNetwork net;
  if (kind == "synfix") {
    SynfixSpec s;
    take_u32(kv, "communities", s.communities);
    take_u32(kv, "community_size", s.community_size);
    take_u32(kv, "node_degree", s.node_degree);
    take_u32(kv, "z_out", s.z_out);
    take_u32(kv, "timesteps", s.timesteps);
    take_u32(kv, "moves", s.moves_per_community);
    take_u32(kv, "seed", s.seed);
    if (!kv.empty()) throw config_error("synfix spec: unknown key '" + kv.begin()->first + "'");
    net = gen_synfix(s);
  } else if (kind == "events") {
    EventSpec s;
    if (auto it = kv.find("kind"); it != kv.end()) {
      const std::string& k = it->second;
      if (k == "birth_death") s.kind = EventKind::birth_death;
      else if (k == "expand_contract") s.kind = EventKind::expand_contract;
      else if (k == "intermittent") s.kind = EventKind::intermittent;
      else if (k == "merge_split") s.kind = EventKind::merge_split;
      else throw config_error("events spec: unknown kind '" + k + "'");
      kv.erase(it);
    }
    take_u32(kv, "nodes", s.nodes);
    take_u32(kv, "mean_degree", s.mean_degree);
    take_u32(kv, "timesteps", s.timesteps);
    take_f64(kv, "affected", s.affected_fraction);
    take_f64(kv, "resize", s.resize_fraction);
    take_u32(kv, "communities", s.communities);
    take_f64(kv, "intra_fraction", s.intra_fraction);
    take_u32(kv, "seed", s.seed);
    if (!kv.empty()) throw config_error("events spec: unknown key '" + kv.begin()->first + "'");
    net = gen_events(s);
  } else {
    throw config_error("unknown generator '" + kind + "' (expected synfix or events)");
  }
  if (stride > 1) net = great_change_subsample(net, stride);
  return net;
}

DynamicNetwork resolve_dataset(const std::string& dataset) {
  if (dataset.empty()) throw config_error("dataset is not set");
  if (is_generator_spec(dataset)) return generate_from_spec(dataset);
  return load_network(dataset);
}

// --- experiment config ---------------------------------------------------------

ExperimentConfig parse_experiment_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::string section;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (const auto hash = t.find('#'); hash != std::string::npos) t = trim(t.substr(0, hash));
    if (t.empty()) continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw config_error("config line " + std::to_string(lineno) + ": key outside any section");
    kv[section + "." + trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }

  ExperimentConfig cfg;
  auto take = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  if (auto v = take("experiment.dataset"); !v.empty()) cfg.dataset = v;
  if (auto v = take("experiment.algorithms"); !v.empty()) {
    cfg.algorithms.clear();
    for (const auto& a : split(v, ',')) cfg.algorithms.push_back(run_mode_from_string(trim(a)));
  }
  if (auto v = take("experiment.runs"); !v.empty())
    cfg.runs = static_cast<std::uint32_t>(parse_u64(v, "runs"));
  if (auto v = take("experiment.base_seed"); !v.empty()) cfg.base_seed = parse_u64(v, "base_seed");
  if (auto v = take("experiment.output_dir"); !v.empty()) cfg.output_dir = v;
  if (auto v = take("experiment.workers"); !v.empty())
    cfg.workers = static_cast<std::uint32_t>(parse_u64(v, "workers"));

  if (auto v = take("hokt.sigma"); !v.empty()) cfg.hokt.sigma = parse_f64(v, "sigma");
  if (auto v = take("hokt.max_order"); !v.empty())
    cfg.hokt.max_order = static_cast<std::uint32_t>(parse_u64(v, "max_order"));
  if (auto v = take("hokt.weight_policy"); !v.empty()) {
    if (v == "similarity") cfg.hokt.weight_policy = WeightPolicy::similarity_proportional;
    else if (v == "fixed") cfg.hokt.weight_policy = WeightPolicy::fixed_schedule;
    else throw config_error("weight_policy must be 'similarity' or 'fixed'");
  }

  if (auto v = take("evo.pop_size"); !v.empty())
    cfg.hokt.evo.pop_size = static_cast<std::size_t>(parse_u64(v, "pop_size"));
  if (auto v = take("evo.generations"); !v.empty())
    cfg.hokt.evo.generations = static_cast<std::size_t>(parse_u64(v, "generations"));
  if (auto v = take("evo.p_crossover"); !v.empty())
    cfg.hokt.evo.p_crossover = parse_f64(v, "p_crossover");
  if (auto v = take("evo.p_mutation"); !v.empty())
    cfg.hokt.evo.p_mutation = parse_f64(v, "p_mutation");

  // schedule_t<k> = w0,w1,... entries for the fixed weight policy
  for (auto it = kv.begin(); it != kv.end();) {
    if (it->first.starts_with("hokt.schedule_t")) {
      const std::string num = it->first.substr(std::string("hokt.schedule_t").size());
      const auto t = static_cast<std::uint32_t>(parse_u64(num, "schedule timestep"));
      cfg.hokt.fixed_schedule[t] = parse_weight_list(it->second, it->first);
      it = kv.erase(it);
    } else {
      ++it;
    }
  }
  if (!kv.empty()) throw config_error("unknown config key '" + kv.begin()->first + "'");
  return cfg;
}

ExperimentConfig parse_experiment_file(const std::string& path) {
  return parse_experiment_text(read_file(path));
}

// --- execution ------------------------------------------------------------------

namespace {

void validate_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw config_error("runs must be >= 1");
  if (cfg.algorithms.empty()) throw config_error("at least one algorithm is required");
  if (cfg.workers < 1) throw config_error("workers must be >= 1");
  validate_evo_config(cfg.hokt.evo);
  if (cfg.hokt.sigma < 0.0 || cfg.hokt.sigma > 1.0) throw config_error("sigma must be in [0,1]");
  if (cfg.hokt.max_order < 1) throw config_error("max_order must be >= 1");
}

}  // namespace

ResultsTable run_experiment(const ExperimentConfig& cfg) {
  return run_experiment_on(resolve_dataset(cfg.dataset), cfg);
}

ResultsTable run_experiment_on(const DynamicNetwork& net, const ExperimentConfig& cfg) {
  validate_experiment(cfg);

  struct Task {
    std::size_t algo_idx;
    std::uint32_t run;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
    for (std::uint32_t r = 0; r < cfg.runs; ++r) tasks.push_back({a, r});

  std::vector<std::vector<TimestepResult>> grid(tasks.size());
  std::vector<std::vector<double>> grid_ms(tasks.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      const Task& task = tasks[i];
      HoktConfig hc = cfg.hokt;
      hc.evo.seed = cfg.base_seed + task.run;
      try {
        grid[i] = baseline_mode(net, hc, cfg.algorithms[task.algo_idx], &grid_ms[i]);
      } catch (const Error& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failed.exchange(true))
          failure = std::string(e.what()) + " (algorithm=" +
                    to_string(cfg.algorithms[task.algo_idx]) +
                    ", run=" + std::to_string(task.run) + ")";
        return;
      }
    }
  };

  const std::size_t nworkers = std::min<std::size_t>(cfg.workers, tasks.size());
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < nworkers; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (failed.load()) throw io_error("run failed: " + failure);

  ResultsTable table;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (std::size_t t = 0; t < grid[i].size(); ++t) {
      ResultCell cell;
      cell.algorithm = cfg.algorithms[tasks[i].algo_idx];
      cell.run = tasks[i].run;
      cell.result = grid[i][t];
      cell.wall_ms = grid_ms[i][t];
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

// --- serialization -----------------------------------------------------------------

namespace {

std::string join_weights(const std::vector<double>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += fmt(w[i]);
  }
  return out;
}

}  // namespace

std::string results_csv(const ResultsTable& table) {
  std::string out =
      "algorithm,run,timestep,q,honmi,nmi_vs_truth,f1_vs_truth,plan_order,weights,overlap_prev\n";
  for (const auto& c : table.cells) {
    const auto& r = c.result;
    out += std::string(to_string(c.algorithm)) + "," + std::to_string(c.run) + "," +
           std::to_string(r.t) + "," + fmt(r.q) + "," + fmt(r.honmi) + "," +
           (r.nmi_vs_truth ? fmt(*r.nmi_vs_truth) : "") + "," +
           (r.f1_vs_truth ? fmt(*r.f1_vs_truth) : "") + "," + std::to_string(r.plan.order) + "," +
           join_weights(r.plan.weights) + "," + fmt(r.overlap_prev) + "\n";
  }
  return out;
}

std::string timings_csv(const ResultsTable& table) {
  std::string out = "algorithm,run,timestep,wall_ms\n";
  for (const auto& c : table.cells)
    out += std::string(to_string(c.algorithm)) + "," + std::to_string(c.run) + "," +
           std::to_string(c.result.t) + "," + fmt(c.wall_ms) + "\n";
  return out;
}

ResultsTable parse_results_csv(const std::string& text) {
  ResultsTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw input_error("results csv is empty");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10)
      throw input_error("results csv line " + std::to_string(lineno) + ": expected 10 fields");
    ResultCell c;
    c.algorithm = run_mode_from_string(f[0]);
    c.run = static_cast<std::uint32_t>(parse_u64(f[1], "run"));
    c.result.t = static_cast<std::uint32_t>(parse_u64(f[2], "timestep"));
    c.result.q = parse_f64(f[3], "q");
    c.result.honmi = parse_f64(f[4], "honmi");
    if (!f[5].empty()) c.result.nmi_vs_truth = parse_f64(f[5], "nmi_vs_truth");
    if (!f[6].empty()) c.result.f1_vs_truth = parse_f64(f[6], "f1_vs_truth");
    c.result.plan.order = static_cast<std::uint32_t>(parse_u64(f[7], "plan_order"));
    if (!f[8].empty())
      for (const auto& tok : split(f[8], '|'))
        c.result.plan.weights.push_back(parse_f64(tok, "weights"));
    c.result.overlap_prev = parse_f64(f[9], "overlap_prev");
    table.cells.push_back(std::move(c));
  }
  return table;
}

namespace {

struct Samples {
  std::vector<double> q, honmi, nmi, f1;
};

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

namespace {

std::string summary_json_impl(const ResultsTable& table, const ExperimentConfig* cfg) {
  using nlohmann::json;

  std::map<RunMode, std::map<std::uint32_t, Samples>> by_algo;  // algo -> t -> samples
  std::uint32_t max_t = 0;
  bool has_truth = false;
  for (const auto& c : table.cells) {
    auto& s = by_algo[c.algorithm][c.result.t];
    s.q.push_back(c.result.q);
    s.honmi.push_back(c.result.honmi);
    if (c.result.nmi_vs_truth) {
      s.nmi.push_back(*c.result.nmi_vs_truth);
      has_truth = true;
    }
    if (c.result.f1_vs_truth) s.f1.push_back(*c.result.f1_vs_truth);
    max_t = std::max(max_t, c.result.t);
  }

  json root;
  if (cfg) {
    root["dataset"] = cfg->dataset;
    root["runs"] = cfg->runs;
    root["base_seed"] = cfg->base_seed;
    root["sigma"] = cfg->hokt.sigma;
  }
  root["metric_vs_truth"] = has_truth;

  json per_algo = json::object();
  for (const auto& [algo, steps] : by_algo) {
    json rows = json::array();
    for (const auto& [t, s] : steps) {
      json row;
      row["t"] = t;
      row["q_mean"] = mean_of(s.q);
      row["q_std"] = std_of(s.q);
      row["honmi_mean"] = mean_of(s.honmi);
      if (!s.nmi.empty()) {
        row["nmi_mean"] = mean_of(s.nmi);
        row["nmi_std"] = std_of(s.nmi);
      }
      if (!s.f1.empty()) {
        row["f1_mean"] = mean_of(s.f1);
        row["f1_std"] = std_of(s.f1);
      }
      rows.push_back(row);
    }
    per_algo[to_string(algo)] = rows;
  }
  root["per_timestep"] = per_algo;

  // pairwise rank-sum comparisons on NMI vs truth (or Q without truth)
  json comparisons = json::array();
  std::map<std::string, std::array<int, 3>> wtl;  // "a_vs_b" -> win/tie/loss
  std::vector<RunMode> algos;
  for (const auto& [algo, _] : by_algo) algos.push_back(algo);
  for (std::size_t i = 0; i < algos.size(); ++i) {
    for (std::size_t j = i + 1; j < algos.size(); ++j) {
      const std::string key =
          std::string(to_string(algos[i])) + "_vs_" + to_string(algos[j]);
      wtl[key] = {0, 0, 0};
      for (std::uint32_t t = 1; t <= max_t; ++t) {
        const auto& sa = by_algo[algos[i]][t];
        const auto& sb = by_algo[algos[j]][t];
        const auto& va = has_truth ? sa.nmi : sa.q;
        const auto& vb = has_truth ? sb.nmi : sb.q;
        if (va.size() < 5 || vb.size() < 5) continue;
        const auto [stat, p] = rank_sum_test(va, vb);
        std::string outcome = "tie";
        if (p < 0.05) outcome = mean_of(va) > mean_of(vb) ? "win" : "loss";
        json cmp;
        cmp["a"] = to_string(algos[i]);
        cmp["b"] = to_string(algos[j]);
        cmp["t"] = t;
        cmp["metric"] = has_truth ? "nmi_vs_truth" : "q";
        cmp["statistic"] = stat;
        cmp["p_value"] = p;
        cmp["outcome"] = outcome;
        comparisons.push_back(cmp);
        ++wtl[key][outcome == "win" ? 0 : outcome == "tie" ? 1 : 2];
      }
    }
  }
  root["comparisons"] = comparisons;
  json wtl_json = json::object();
  for (const auto& [key, counts] : wtl) {
    wtl_json[key] = {{"win", counts[0]}, {"tie", counts[1]}, {"loss", counts[2]}};
  }
  root["win_tie_loss"] = wtl_json;

  return root.dump(2) + "\n";
}

}  // namespace

std::string summary_json(const ResultsTable& table, const ExperimentConfig& cfg) {
  return summary_json_impl(table, &cfg);
}

std::string summary_json(const ResultsTable& table) { return summary_json_impl(table, nullptr); }

std::string similarity_csv(const DynamicNetwork& net) {
  const SimilarityMatrix sim = similarity_matrix(net);
  std::string out;
  for (std::size_t j = 0; j < sim.size; ++j) out += ",t" + std::to_string(j + 1);
  out += "\n";
  char buf[32];
  for (std::size_t i = 0; i < sim.size; ++i) {
    out += "t" + std::to_string(i + 1);
    for (std::size_t j = 0; j < sim.size; ++j) {
      std::snprintf(buf, sizeof buf, ",%.4f", sim.at(i, j));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

void emit_similarity(const DynamicNetwork& net, const std::string& out_path) {
  write_file(out_path, similarity_csv(net));
}

void execute_run(const ExperimentConfig& cfg) {
  const DynamicNetwork net = resolve_dataset(cfg.dataset);
  const ResultsTable table = run_experiment_on(net, cfg);
  const fs::path out(cfg.output_dir);
  fs::create_directories(out);
  write_file((out / "results.csv").string(), results_csv(table));
  write_file((out / "summary.json").string(), summary_json(table, cfg));
  write_file((out / "timings.csv").string(), timings_csv(table));

  if (!net.external_ids.empty()) {
    std::string mapping = "dense_id\texternal_id\n";
    for (std::size_t i = 0; i < net.external_ids.size(); ++i)
      mapping += std::to_string(i) + "\t" + std::to_string(net.external_ids[i]) + "\n";
    write_file((out / "mapping.tsv").string(), mapping);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << content;
  if (!out) throw io_error("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hokt
