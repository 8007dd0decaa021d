#include "qwiht/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qwiht/error.hpp"
#include "qwiht/measured_walk.hpp"
#include "qwiht/rng.hpp"
#include "qwiht/symmetry.hpp"

namespace qwiht {
namespace {

using json = nlohmann::json;

double rounded(double x) { return std::stod(format_number(x)); }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string perm_text(const Permutation& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string coin_title(const std::string& coin) {
  if (coin == "grover") return "Grover coin";
  if (coin == "dft") return "DFT coin";
  if (coin.rfind("random", 0) == 0) return "Asymmetric coin, " + coin;
  return coin + " coin";
}

json rows_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"m_k", r.count}, {"k", r.dimension}, {"V_k", r.iht_dimension}});
  return out;
}

json basis_json(const Matrix& basis) {
  json cols = json::array();
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    json col = json::array();
    for (Eigen::Index r = 0; r < basis.rows(); ++r) col.push_back({rounded(basis(r, c).real()), rounded(basis(r, c).imag())});
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<std::size_t> checkpoints(std::size_t steps) {
  std::vector<std::size_t> out;
  for (std::size_t decade = 1; decade <= steps; decade *= 10) {
    for (std::size_t m : {1, 2, 5}) {
      if (m * decade <= steps) out.push_back(m * decade);
    }
  }
  if (out.empty() || out.back() != steps) out.push_back(steps);
  return out;
}

WalkState initial_state(const ExperimentConfig& cfg, const CayleyGraph& graph, const IhtReport* iht) {
  const auto n = graph.vertex_count() * graph.degree();
  const auto d = graph.degree();
  const auto& spec = cfg.simulate.initial;
  const auto head = spec.substr(0, spec.find(':'));
  const auto rest = spec.find(':') == std::string::npos ? std::string() : spec.substr(spec.find(':') + 1);
  WalkState psi = WalkState::Zero(static_cast<Eigen::Index>(n));
  if (head == "uniform") {
    psi.setConstant(Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  } else if (head == "random") {
    Xoshiro256 rng(cfg.simulate.seed.value_or(cfg.seed));
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      psi[i] = Complex(re, im);
    }
    psi.normalize();
  } else if (head == "vertex") {
    const auto v = resolve_vertex(graph, rest);
    for (std::size_t j = 0; j < d; ++j) psi[static_cast<Eigen::Index>(composite_index(v, j, d))] = 1.0 / std::sqrt(static_cast<double>(d));
  } else if (head == "basis") {
    const auto colon = rest.rfind(':');
    const auto v = resolve_vertex(graph, rest.substr(0, colon));
    const auto j = std::stoul(rest.substr(colon + 1));
    psi[static_cast<Eigen::Index>(composite_index(v, j, d))] = 1.0;
  } else if (head == "iht") {
    const auto i = std::stoul(rest);
    if (!iht || i >= iht->total) {
      throw ConfigError("simulate.initial: IHT subspace has " + std::to_string(iht ? iht->total : 0) +
                        " basis vectors, index " + rest + " is out of range");
    }
    psi = iht->basis.col(static_cast<Eigen::Index>(i));
  }
  return psi;
}

std::string final_labels(const CayleyGraph& graph, const std::vector<std::size_t>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? ", " : "") + graph.group().label(graph.group().element(set[i]));
  return s + "}";
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string TableArtifact::verdict() const {
  return infinite_hitting_time() ? "Yes, infinite hitting time exists" : "No, infinite hitting time does not exist";
}

void TableArtifact::check_accounting() const {
  std::size_t dim = 0, iht = 0;
  for (const auto& r : rows) {
    dim += r.count * r.dimension;
    iht += r.count * r.iht_dimension;
  }
  if (dim != space_dimension || iht != iht_total) {
    throw InvariantError("table " + graph + "/" + coin + " fails accounting: sum m_k k = " + std::to_string(dim) +
                         " (|H| = " + std::to_string(space_dimension) + "), sum m_k |V_k| = " + std::to_string(iht) +
                         " (|V| = " + std::to_string(iht_total) + ")");
  }
}

TableArtifact make_table(std::string graph, std::string coin, const IhtReport& report) {
  TableArtifact t{std::move(graph), std::move(coin), report.table_rows, report.space_dimension, report.total};
  t.check_accounting();
  return t;
}

std::string render_table_text(const std::string& title, const std::vector<TableArtifact>& sections) {
  std::ostringstream out;
  out << title << "\n" << std::string(44, '=') << "\n";
  for (const auto& t : sections) {
    out << coin_title(t.coin) << "\n";
    out << pad("m_k", 8) << pad("k", 8) << pad("|V_k|", 8) << "\n";
    for (const auto& r : t.rows) {
      out << pad(std::to_string(r.count), 8) << pad(std::to_string(r.dimension), 8) << pad(std::to_string(r.iht_dimension), 8)
          << "\n";
    }
    out << "  |H| = " << t.space_dimension << "   |V| = " << t.iht_total << "   " << t.verdict() << "\n";
    out << std::string(44, '-') << "\n";
  }
  return out.str();
}

std::string render_table_csv(const std::vector<TableArtifact>& sections) {
  std::string out = "graph,coin,k,m_k,V_k\n";
  for (const auto& t : sections) {
    for (const auto& r : t.rows) {
      out += t.graph + "," + t.coin + "," + std::to_string(r.dimension) + "," + std::to_string(r.count) + "," +
             std::to_string(r.iht_dimension) + "\n";
    }
  }
  return out;
}

void apply_overrides(ExperimentConfig& config, const RunOverrides& overrides) {
  if (overrides.seed) {
    config.seed = *overrides.seed;
    config.coin.seed.reset();
    config.sweep.seed.reset();
    config.simulate.seed.reset();
  }
  if (overrides.cluster_tol) {
    if (!(*overrides.cluster_tol > 0.0)) throw ConfigError("tolerances.cluster: must be positive");
    config.tolerances.cluster = *overrides.cluster_tol;
  }
  if (overrides.rank_tol) {
    if (!(*overrides.rank_tol > 0.0)) throw ConfigError("tolerances.rank: must be positive");
    config.tolerances.rank = *overrides.rank_tol;
  }
}

RunOutput run(const ExperimentConfig& cfg) {
  const auto graph = build_graph(cfg.graph);
  const auto coin = build_coin(cfg.coin, graph.degree(), cfg.seed);
  const auto walk = WalkUnitary::build(graph, coin);
  const auto projector = FinalProjector::build(graph, cfg.final_set);

  const std::string header = "# qwiht name=" + cfg.name + " graph=" + cfg.graph.name + " coin=" + coin.name() +
                             " seed=" + std::to_string(cfg.seed) + "\n";
  RunOutput out;
  std::ostringstream text;
  text << header;
  text << "graph: " << cfg.graph.name << " (" << graph.vertex_count() << " vertices, degree " << graph.degree() << ")\n";
  text << "coin: " << coin.name() << "\n";
  text << "final set: " << final_labels(graph, cfg.final_set) << "\n";
  for (const auto& a : cfg.audit) text << "note: " << a << "\n";

  json doc;
  doc["name"] = cfg.name;
  doc["seed"] = cfg.seed;
  doc["graph"] = {{"name", cfg.graph.name}, {"vertices", graph.vertex_count()}, {"degree", graph.degree()}};
  doc["coin"] = {{"name", coin.name()}, {"kind", to_string(coin.kind())}, {"dim", coin.dim()}};
  doc["final_set"] = cfg.final_set;
  doc["space_dimension"] = walk.size();
  doc["tolerances"] = {{"cluster", cfg.tolerances.cluster}, {"rank", cfg.tolerances.rank}, {"cps", cfg.tolerances.cps}};
  doc["audit"] = cfg.audit;

  std::optional<EigenspaceDecomposition> decomposition;
  std::optional<IhtReport> iht;
  const auto need_decomposition = [&]() -> const EigenspaceDecomposition& {
    if (!decomposition) decomposition = decompose(walk, cfg.tolerances.cluster);
    return *decomposition;
  };
  const auto need_iht = [&]() -> const IhtReport& {
    if (!iht) iht = iht_subspace(need_decomposition(), projector, cfg.tolerances.rank);
    return *iht;
  };
  const auto add_csv = [&](const std::string& analysis, std::string body) {
    if (out.csv.empty() || analysis == "iht") out.csv = header + body;
    out.files.push_back({cfg.name + "." + analysis + ".csv", header + std::move(body)});
  };

  for (const auto analysis : cfg.analyses) {
    text << "\n[" << to_string(analysis) << "]\n";
    switch (analysis) {
      case Analysis::Decompose: {
        const auto& dec = need_decomposition();
        std::vector<ClusterIht> shape;
        json clusters = json::array();
        std::string csv = "phase,k\n";
        for (const auto& c : dec.clusters) {
          shape.push_back({c.phase, c.multiplicity(), 0});
          clusters.push_back({{"phase", rounded(c.phase)}, {"k", c.multiplicity()}});
          csv += format_number(c.phase) + "," + std::to_string(c.multiplicity()) + "\n";
        }
        json multiplicities = json::array();
        text << dec.clusters.size() << " eigenspaces\n" << pad("m_k", 8) << pad("k", 8) << "\n";
        for (const auto& r : aggregate_rows(shape)) {
          text << pad(std::to_string(r.count), 8) << pad(std::to_string(r.dimension), 8) << "\n";
          multiplicities.push_back({{"m_k", r.count}, {"k", r.dimension}});
        }
        doc["decompose"] = {{"clusters", clusters}, {"multiplicities", multiplicities}};
        add_csv("decompose", csv);
        break;
      }
      case Analysis::Iht: {
        const auto& report = need_iht();
        const auto table = make_table(cfg.graph.name, coin.name(), report);
        text << render_table_text(cfg.graph.name, {table});
        json per_cluster = json::array();
        for (const auto& c : report.per_cluster) {
          per_cluster.push_back({{"phase", rounded(c.phase)}, {"k", c.dimension}, {"V_k", c.iht_dimension}});
        }
        doc["iht"] = {{"rows", rows_json(table.rows)},
                      {"total", report.total},
                      {"verdict", table.verdict()},
                      {"per_cluster", per_cluster}};
        if (cfg.include_bases) doc["iht"]["basis"] = basis_json(report.basis);
        add_csv("iht", render_table_csv({table}));
        break;
      }
      case Analysis::Cps: {
        const auto set = cps_enumerate(coin, cfg.tolerances.cps);
        text << set.size() << " coin permutations fix the coin\n";
        json perms = json::array();
        std::string csv = "perm\n";
        for (const auto& p : set.perms) {
          text << "  " << perm_text(p) << "\n";
          perms.push_back(p);
          csv += "\"" + perm_text(p) + "\"\n";
        }
        doc["cps"] = {{"count", set.size()}, {"perms", perms}};
        add_csv("cps", csv);
        break;
      }
      case Analysis::Symmetries: {
        const auto report = classify(graph, coin, cfg.tolerances.cps);
        text << "|A1| = |W1| = " << report.a1_count() << "\n|A2| = " << report.a2_count() << "\n|W2| = " << report.w2_count()
             << "\n(subgroup generated by right translations and generator-preserving automorphisms)\n";
        json perms = json::array();
        for (const auto& p : report.coin_perms_w2) perms.push_back(p);
        doc["symmetries"] = {{"a1", report.a1_count()}, {"a2", report.a2_count()}, {"w2", report.w2_count()}, {"w2_coin_perms", perms}};
        add_csv("symmetries", "class,count\nA1," + std::to_string(report.a1_count()) + "\nA2," +
                                  std::to_string(report.a2_count()) + "\nW2," + std::to_string(report.w2_count()) + "\n");
        break;
      }
      case Analysis::Sweep: {
        std::vector<std::size_t> sizes = cfg.sweep.sizes;
        if (sizes.empty()) {
          for (std::size_t s = 1; s <= graph.vertex_count(); ++s) sizes.push_back(s);
        }
        SweepOptions opt;
        opt.strategy = cfg.sweep.strategy;
        opt.seed = cfg.sweep.seed.value_or(cfg.seed);
        opt.trials = cfg.sweep.trials;
        opt.start_vertex = cfg.final_set.front();
        opt.rank_tol = cfg.tolerances.rank;
        const auto points = sweep_final_sets(need_decomposition(), graph.vertex_count(), graph.degree(), opt, sizes);
        const std::string strategy = opt.strategy == SweepStrategy::NestedDescending ? "nested" : "random";
        std::string csv = "graph,coin,strategy,final_count,V\n";
        json arr = json::array();
        text << pad("|F|", 6) << pad("|V|", 6) << "\n";
        for (const auto& p : points) {
          text << pad(std::to_string(p.final_count), 6) << pad(std::to_string(p.iht_dimension), 6) << "\n";
          csv += cfg.graph.name + "," + coin.name() + "," + strategy + "," + std::to_string(p.final_count) + "," +
                 std::to_string(p.iht_dimension) + "\n";
          arr.push_back({{"final_count", p.final_count}, {"V", p.iht_dimension}, {"witness", p.witness}});
        }
        doc["sweep"] = {{"strategy", strategy}, {"points", arr}};
        if (opt.strategy == SweepStrategy::Random) doc["sweep"]["trials"] = opt.trials;
        add_csv("sweep", csv);
        break;
      }
      case Analysis::Simulate: {
        const auto& report = need_iht();
        const auto psi0 = initial_state(cfg, graph, &report);
        const double ov = overlap(psi0, report);
        MeasuredWalkOptions opt{cfg.simulate.steps, cfg.simulate.measure_initial};
        const auto result = simulate(walk, projector, psi0, opt);
        double total = result.initial_arrival + result.survival;
        for (double q : result.arrival) total += q;
        if (std::abs(total - 1.0) > 1e-9) {
          throw InvariantError("probability not conserved: sum q_t + survival = " + format_number(total));
        }
        for (std::size_t t = 0; t < result.survival_trace.size(); ++t) {
          if (result.survival_trace[t] < ov - 1e-9) {
            throw InvariantError("survival " + format_number(result.survival_trace[t]) + " at t=" + std::to_string(t + 1) +
                                 " fell below the IHT overlap " + format_number(ov));
          }
        }
        const auto summary = summarize_hitting_time(result, ov);
        text << "initial state: " << cfg.simulate.initial << "\n";
        text << "IHT overlap: " << format_number(ov) << "\n";
        text << "survival(T=" << result.steps << "): " << format_number(result.survival) << "\n";
        text << "truncated hitting time: " << format_number(summary.truncated) << "\n";
        text << "verdict: " << to_string(summary.verdict) << "\n";
        std::string csv = "t,q_t,survival\n";
        json trace = json::array();
        for (auto t : checkpoints(result.steps)) {
          csv += std::to_string(t) + "," + format_number(result.arrival[t - 1]) + "," + format_number(result.survival_trace[t - 1]) + "\n";
          trace.push_back({{"t", t}, {"q_t", rounded(result.arrival[t - 1])}, {"survival", rounded(result.survival_trace[t - 1])}});
        }
        doc["simulate"] = {{"initial", cfg.simulate.initial},
                           {"steps", result.steps},
                           {"overlap", rounded(ov)},
                           {"survival", rounded(result.survival)},
                           {"hitting_time_truncated", rounded(summary.truncated)},
                           {"verdict", to_string(summary.verdict)},
                           {"checkpoints", trace}};
        add_csv("simulate", csv);
        break;
      }
    }
  }
  out.text = text.str();
  out.json = doc.dump(2) + "\n";
  out.files.insert(out.files.begin(), {cfg.name + ".json", out.json});
  out.files.insert(out.files.begin(), {cfg.name + ".txt", out.text});
  return out;
}

const std::string& table_preset(int table) {
  static const std::vector<std::string> keys{"cube3", "cube4", "cube5", "s3-3", "s4-h1", "s4-h2", "s4-4"};
  if (table < 1 || table > 7) throw ArgumentError("table number must be 1..7, got " + std::to_string(table));
  return keys[static_cast<std::size_t>(table - 1)];
}

RunOutput reproduce(const ReproduceOptions& options) {
  const auto& t = options.target;
  const bool all = t == "all";
  std::vector<int> tables;
  if (all) {
    tables = {1, 2, 3, 4, 5, 6, 7};
  } else if (t.size() == 1 && t[0] >= '1' && t[0] <= '7') {
    tables = {t[0] - '0'};
  } else if (t != "summary" && t != "sweeps") {
    throw ArgumentError("unknown reproduce target '" + t + "' (expected 1..7, summary, sweeps or all)");
  }

  std::map<std::string, TableArtifact> cache;
  const auto coin_spec = [&](const std::string& coin) {
    CoinSpec spec;
    spec.kind = coin == "grover" ? CoinKind::Grover : coin == "dft" ? CoinKind::DFT : CoinKind::Random;
    if (spec.kind == CoinKind::Random) spec.seed = options.seed;
    return spec;
  };
  const auto analyse = [&](const GraphPreset& preset, const std::string& coin) -> const TableArtifact& {
    const auto key = preset.key + "/" + coin;
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto graph = build_graph(preset.spec);
    const auto c = build_coin(coin_spec(coin), graph.degree(), options.seed);
    const auto walk = WalkUnitary::build(graph, c);
    const auto dec = decompose(walk, options.cluster_tol);
    const auto proj = FinalProjector::build(graph, {default_final_vertex(graph)});
    const auto report = iht_subspace(dec, proj, options.rank_tol);
    return cache.emplace(key, make_table(preset.key, c.name(), report)).first->second;
  };
  const std::vector<std::string> coins{"grover", "dft", "random"};

  RunOutput out;
  const std::string header = "# qwiht reproduce target=" + t + " seed=" + std::to_string(options.seed) + "\n";
  std::ostringstream text;
  text << header;
  json doc;
  doc["seed"] = options.seed;
  doc["tolerances"] = {{"cluster", options.cluster_tol}, {"rank", options.rank_tol}};

  std::vector<TableArtifact> every_section;
  for (int number : tables) {
    const auto& preset = find_preset(table_preset(number));
    std::vector<TableArtifact> sections;
    json jt = json::array();
    for (const auto& coin : coins) {
      sections.push_back(analyse(preset, coin));
      const auto& s = sections.back();
      jt.push_back({{"coin", s.coin}, {"rows", rows_json(s.rows)}, {"H", s.space_dimension}, {"V", s.iht_total}, {"verdict", s.verdict()}});
    }
    const auto title = "TABLE " + std::to_string(number) + ": " + preset.title;
    const auto body = render_table_text(title, sections);
    text << "\n" << body;
    doc["tables"][std::to_string(number)] = {{"graph", preset.key}, {"sections", jt}};
    out.files.push_back({"table_" + std::to_string(number) + ".txt", header + body});
    out.files.push_back({"table_" + std::to_string(number) + ".csv", header + render_table_csv(sections)});
    every_section.insert(every_section.end(), sections.begin(), sections.end());
  }

  if (all || t == "summary") {
    std::ostringstream grid;
    std::string csv = "graph,coin,V,H\n";
    grid << "SUMMARY: |V| for one final vertex\n" << pad("", 22);
    for (const auto& p : graph_presets()) grid << pad(p.key, 8);
    grid << "\n";
    json js = json::array();
    for (const auto& coin : coins) {
      grid << pad("|V| " + coin, 22);
      for (const auto& p : graph_presets()) {
        const auto& s = analyse(p, coin);
        grid << pad(std::to_string(s.iht_total), 8);
        csv += p.key + "," + s.coin + "," + std::to_string(s.iht_total) + "," + std::to_string(s.space_dimension) + "\n";
        js.push_back({{"graph", p.key}, {"coin", s.coin}, {"V", s.iht_total}, {"H", s.space_dimension}});
      }
      grid << "\n";
    }
    grid << pad("|H|", 22);
    for (const auto& p : graph_presets()) grid << pad(std::to_string(analyse(p, "grover").space_dimension), 8);
    grid << "\n";
    text << "\n" << grid.str();
    doc["summary"] = js;
    out.files.push_back({"summary.txt", header + grid.str()});
    out.files.push_back({"summary.csv", header + csv});
    if (out.csv.empty()) out.csv = header + csv;
  }

  if (all || t == "sweeps") {
    std::string csv = "graph,coin,strategy,final_count,V\n";
    json jf = json::array();
    std::ostringstream ftext;
    ftext << "FINAL-SET SWEEP (Grover coin, nested-descending)\n";
    for (const auto& p : graph_presets()) {
      const auto graph = build_graph(p.spec);
      const auto walk = WalkUnitary::build(graph, CoinOperator::grover(graph.degree()));
      const auto dec = decompose(walk, options.cluster_tol);
      std::vector<std::size_t> sizes;
      for (std::size_t s = 1; s <= graph.vertex_count(); ++s) sizes.push_back(s);
      SweepOptions opt;
      opt.start_vertex = default_final_vertex(graph);
      opt.rank_tol = options.rank_tol;
      const auto points = sweep_final_sets(dec, graph.vertex_count(), graph.degree(), opt, sizes);
      ftext << pad(p.key, 8) << ":";
      json series = json::array();
      for (const auto& pt : points) {
        ftext << " " << pt.iht_dimension;
        csv += p.key + ",grover,nested," + std::to_string(pt.final_count) + "," + std::to_string(pt.iht_dimension) + "\n";
        series.push_back({{"final_count", pt.final_count}, {"V", pt.iht_dimension}});
      }
      ftext << "\n";
      jf.push_back({{"graph", p.key}, {"strategy", "nested"}, {"points", series}});

      if (p.key == "cube5") {
        SweepOptions ropt = opt;
        ropt.strategy = SweepStrategy::Random;
        ropt.seed = options.seed;
        ropt.trials = options.sweep_random_trials;
        const std::vector<std::size_t> size25{25};
        const auto best = sweep_final_sets(dec, graph.vertex_count(), graph.degree(), ropt, size25).front();
        csv += p.key + ",grover,random," + std::to_string(best.final_count) + "," + std::to_string(best.iht_dimension) + "\n";
        ftext << "cube5 random search, |F| = 25, " << ropt.trials << " trials: best |V| = " << best.iht_dimension << "\n";
        jf.push_back({{"graph", p.key}, {"strategy", "random"}, {"trials", ropt.trials},
                      {"points", json::array({{{"final_count", 25}, {"V", best.iht_dimension}, {"witness", best.witness}}})}});
      }
    }
    text << "\n" << ftext.str();
    doc["sweeps"] = jf;
    out.files.push_back({"sweeps.csv", header + csv});
    if (out.csv.empty()) out.csv = header + csv;
  }

  if (out.csv.empty()) out.csv = header + render_table_csv(every_section);
  out.text = text.str();
  out.json = doc.dump(2) + "\n";
  out.files.push_back({"reproduce.json", out.json});
  out.files.push_back({"reproduce.txt", out.text});
  return out;
}

void write_outputs(const RunOutput& output, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ArgumentError("cannot create output directory '" + dir + "': " + ec.message());
  for (const auto& f : output.files) {
    const fs::path target = fs::path(dir) / f.name;
    const fs::path tmp = fs::path(dir) / ("." + f.name + ".tmp");
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (!os) throw ArgumentError("cannot write '" + tmp.string() + "'");
      os << f.content;
      if (!os) throw ArgumentError("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target, ec);
    if (ec) throw ArgumentError("cannot move '" + tmp.string() + "' into place: " + ec.message());
  }
}

}  // namespace qwiht
