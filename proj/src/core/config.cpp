#include "qwiht/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

#include "qwiht/error.hpp"
#include "qwiht/walk.hpp"

namespace qwiht {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty() || !out.empty()) out.push_back(trim(current));
  return out;
}

template <typename T>
T parse_integer(const std::string& path, std::string_view text) {
  T value{};
  const auto s = trim(text);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(path, "expected an integer, got '" + s + "'");
  }
  return value;
}

double parse_real(const std::string& path, std::string_view text) {
  const auto s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) fail(path, "expected a number, got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& path, std::string_view text) {
  const auto s = lower(trim(text));
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  fail(path, "expected a boolean, got '" + s + "'");
}

Complex parse_complex(const std::string& path, std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) fail(path, "empty matrix entry");
  const char* p = s.c_str();
  const char* end = p + s.size();
  const auto read_number = [&](const char*& q, double& out) {
    char* stop = nullptr;
    out = std::strtod(q, &stop);
    const bool ok = stop != q;
    q = stop;
    return ok;
  };
  double first = 0.0;
  const char* q = p;
  if (*q == 'i' || ((*q == '+' || *q == '-') && q + 1 < end && q[1] == 'i')) {
    const double sign = *q == '-' ? -1.0 : 1.0;
    if (*q != 'i') ++q;
    if (q + 1 == end) return {0.0, sign};
    fail(path, "malformed complex entry '" + s + "'");
  }
  if (!read_number(q, first)) fail(path, "malformed complex entry '" + s + "'");
  if (q == end) return {first, 0.0};
  if (*q == 'i' && q + 1 == end) return {0.0, first};
  if (*q == '+' || *q == '-') {
    const double sign = *q == '-' ? -1.0 : 1.0;
    const char* r = q + 1;
    double second = 1.0;
    if (*r != 'i' && !read_number(r, second)) fail(path, "malformed complex entry '" + s + "'");
    if (r + 1 == end && *r == 'i') return {first, sign * second};
  }
  fail(path, "malformed complex entry '" + s + "'");
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};
using Section = std::map<std::string, Entry>;

class Document {
 public:
  explicit Document(std::string_view text) {
    std::string current;
    sections_[current];
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      auto line = std::string(raw);
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail("line " + std::to_string(line_no), "unterminated section header");
        current = lower(trim(line.substr(1, line.size() - 2)));
        if (!known_.count(current)) fail(current, "unknown section (line " + std::to_string(line_no) + ")");
        sections_[current];
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail("line " + std::to_string(line_no), "expected 'key = value'");
      const auto key = lower(trim(line.substr(0, eq)));
      const auto path = current.empty() ? key : current + "." + key;
      if (key.empty()) fail(path, "empty key");
      auto& section = sections_[current];
      if (section.count(key)) fail(path, "duplicate key (line " + std::to_string(line_no) + ")");
      section[key] = Entry{trim(line.substr(eq + 1)), line_no, false};
    }
  }

  std::optional<std::string> get(const std::string& section, const std::string& key) {
    auto s = sections_.find(section);
    if (s == sections_.end()) return std::nullopt;
    auto e = s->second.find(key);
    if (e == s->second.end()) return std::nullopt;
    e->second.used = true;
    return e->second.value;
  }

  bool has_section(const std::string& section) const { return sections_.count(section) > 0; }

  void reject_unused() const {
    for (const auto& [name, section] : sections_) {
      for (const auto& [key, entry] : section) {
        if (!entry.used) {
          fail(name.empty() ? key : name + "." + key, "unknown or inapplicable key (line " + std::to_string(entry.line) + ")");
        }
      }
    }
  }

 private:
  std::map<std::string, Section> sections_;
  const std::set<std::string> known_{"graph", "coin", "final", "tolerances", "analysis", "sweep", "simulate", "output"};
};

std::vector<std::size_t> parse_sizes(const std::string& path, const std::string& text, std::size_t order) {
  std::vector<std::size_t> out;
  if (lower(trim(text)) == "all") {
    for (std::size_t s = 1; s <= order; ++s) out.push_back(s);
    return out;
  }
  for (const auto& item : split_top_level(text, ',')) {
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const auto lo = parse_integer<std::size_t>(path, item.substr(0, dash));
      const auto hi = parse_integer<std::size_t>(path, item.substr(dash + 1));
      if (lo > hi) fail(path, "empty range '" + item + "'");
      for (auto s = lo; s <= hi; ++s) out.push_back(s);
    } else {
      out.push_back(parse_integer<std::size_t>(path, item));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > order) fail(path, "size " + std::to_string(out[i]) + " outside [1, " + std::to_string(order) + "]");
    if (i > 0 && out[i] <= out[i - 1]) fail(path, "sizes must be strictly ascending");
  }
  return out;
}

std::string one_line_text(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

std::string to_string(Analysis analysis) {
  switch (analysis) {
    case Analysis::Decompose: return "decompose";
    case Analysis::Iht: return "iht";
    case Analysis::Cps: return "cps";
    case Analysis::Symmetries: return "symmetries";
    case Analysis::Sweep: return "sweep";
    case Analysis::Simulate: return "simulate";
  }
  return "?";
}

ParsedPermutation parse_permutation(std::string_view text, int n) {
  const auto s = trim(text);
  if (s.empty() || s.front() != '(' || s.back() != ')') {
    throw ArgumentError("permutation '" + s + "' must be written in parentheses");
  }
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ArgumentError("permutation '" + s + "': unexpected '" + s[pos] + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw ArgumentError("permutation '" + s + "': unbalanced parentheses");
    std::vector<int> group;
    const auto inner = trim(s.substr(pos + 1, close - pos - 1));
    if (!inner.empty()) {
      for (const auto& tok : split_top_level(inner, ',')) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw ArgumentError("permutation '" + s + "': '" + tok + "' is not an integer");
        }
        if (v < 1 || v > n) throw ArgumentError("permutation '" + s + "': entry " + tok + " outside 1.." + std::to_string(n));
        group.push_back(v);
      }
    }
    groups.push_back(std::move(group));
    pos = close + 1;
  }

  ParsedPermutation out;
  if (groups.size() == 1 && static_cast<int>(groups[0].size()) == n) {
    std::vector<bool> seen(n + 1, false);
    for (int v : groups[0]) {
      if (seen[v]) throw ArgumentError("permutation '" + s + "' repeats " + std::to_string(v));
      seen[v] = true;
    }
    out.one_line = groups[0];
    return out;
  }
  // Cycle notation; a product is applied right to left.
  out.from_cycles = true;
  out.one_line.resize(n);
  for (int i = 0; i < n; ++i) out.one_line[i] = i + 1;
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    std::set<int> distinct(g->begin(), g->end());
    if (distinct.size() != g->size()) throw ArgumentError("cycle in '" + s + "' repeats an element");
    std::vector<int> cycle_map(n + 1);
    for (int i = 1; i <= n; ++i) cycle_map[i] = i;
    for (std::size_t k = 0; k < g->size(); ++k) cycle_map[(*g)[k]] = (*g)[(k + 1) % g->size()];
    for (auto& v : out.one_line) v = cycle_map[v];
  }
  return out;
}

const std::vector<GraphPreset>& graph_presets() {
  static const std::vector<GraphPreset> presets = [] {
    const auto hyper = [](int d) {
      GraphSpec g;
      g.kind = GraphKind::Hypercube;
      g.d = d;
      g.name = "cube" + std::to_string(d);
      return g;
    };
    const auto sym = [](int n, std::string name, std::vector<std::vector<int>> gens) {
      GraphSpec g;
      g.kind = GraphKind::Symmetric;
      g.n = n;
      g.name = std::move(name);
      g.generators = std::move(gens);
      return g;
    };
    return std::vector<GraphPreset>{
        {"cube3", "3D cube", hyper(3)},
        {"cube4", "4D hypercube", hyper(4)},
        {"cube5", "5D hypercube", hyper(5)},
        {"s3-2", "S3, H = {(1,2), (1,3)}", sym(3, "s3-2", {{2, 1, 3}, {3, 2, 1}})},
        {"s3-3", "S3, H = {(1,2), (1,3), (2,3)}", sym(3, "s3-3", {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}})},
        {"s4-h1", "S4, H1 = {(1,2), (1,3), (2,4)}", sym(4, "s4-h1", {{2, 1, 3, 4}, {3, 2, 1, 4}, {1, 4, 3, 2}})},
        {"s4-h2", "S4, H2 = {(1,2), (1,3), (1,4)}", sym(4, "s4-h2", {{2, 1, 3, 4}, {3, 2, 1, 4}, {4, 2, 3, 1}})},
        {"s4-4", "S4, H = {(1,2), (1,3), (3,4), (2,3)}",
         sym(4, "s4-4", {{2, 1, 3, 4}, {3, 2, 1, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}})},
    };
  }();
  return presets;
}

const GraphPreset& find_preset(std::string_view key) {
  for (const auto& p : graph_presets())
    if (p.key == key) return p;
  std::string known;
  for (const auto& p : graph_presets()) known += (known.empty() ? "" : ", ") + p.key;
  throw ArgumentError("unknown graph preset '" + std::string(key) + "' (known: " + known + ")");
}

CayleyGraph build_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphKind::Hypercube:
      return CayleyGraph::hypercube(spec.d);
    case GraphKind::Symmetric: {
      auto group = FiniteGroup::symmetric(spec.n);
      std::vector<GroupElement> gens;
      for (const auto& g : spec.generators) gens.push_back(group.from_one_line(g));
      return CayleyGraph::build(std::move(group), std::move(gens));
    }
    case GraphKind::Table: {
      auto group = FiniteGroup::from_table(spec.table);
      std::vector<GroupElement> gens;
      for (auto g : spec.table_generators) gens.push_back(group.element(g));
      return CayleyGraph::build(std::move(group), std::move(gens));
    }
  }
  throw ArgumentError("unknown graph kind");
}

CoinOperator build_coin(const CoinSpec& spec, std::size_t degree, std::uint64_t default_seed) {
  switch (spec.kind) {
    case CoinKind::Grover: return CoinOperator::grover(degree);
    case CoinKind::DFT: return CoinOperator::dft(degree);
    case CoinKind::Hadamard:
      if (degree != 2) throw ArgumentError("hadamard coin requires degree 2, graph has degree " + std::to_string(degree));
      return CoinOperator::hadamard();
    case CoinKind::Identity: return CoinOperator::identity(degree);
    case CoinKind::Random: return CoinOperator::random_unitary(degree, spec.seed.value_or(default_seed));
    case CoinKind::Custom:
      if (static_cast<std::size_t>(spec.matrix.rows()) != degree) {
        throw ArgumentError("custom coin is " + std::to_string(spec.matrix.rows()) + "x" +
                            std::to_string(spec.matrix.cols()) + " but the graph has degree " + std::to_string(degree));
      }
      return CoinOperator::custom(spec.matrix);
  }
  throw ArgumentError("unknown coin kind");
}

std::size_t resolve_vertex(const CayleyGraph& graph, std::string_view label) {
  const auto s = trim(label);
  const auto& group = graph.group();
  if (s.rfind("0b", 0) == 0) {
    if (group.kind() != GroupKind::Z2Power) throw ArgumentError("bitstring label '" + s + "' needs a hypercube graph");
    const auto bits = s.substr(2);
    if (bits.empty() || bits.size() > static_cast<std::size_t>(group.parameter()) ||
        bits.find_first_not_of("01") != std::string::npos) {
      throw ArgumentError("bad bitstring label '" + s + "'");
    }
    return group.from_bits(std::stoull(bits, nullptr, 2)).index;
  }
  if (!s.empty() && s.front() == '(') {
    if (group.kind() != GroupKind::Symmetric) throw ArgumentError("permutation label '" + s + "' needs a symmetric-group graph");
    const auto parsed = parse_permutation(s, group.parameter());
    return group.from_one_line(parsed.one_line).index;
  }
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ArgumentError("unrecognised vertex label '" + s + "'");
  if (v >= graph.vertex_count()) {
    throw ArgumentError("vertex " + s + " does not exist (graph has " + std::to_string(graph.vertex_count()) + " vertices)");
  }
  return v;
}

ExperimentConfig parse_config(std::string_view text) {
  Document doc(text);
  ExperimentConfig cfg;

  if (auto v = doc.get("", "seed")) cfg.seed = parse_integer<std::uint64_t>("seed", *v);

  // graph
  if (!doc.has_section("graph")) fail("graph", "missing section");
  if (auto preset = doc.get("graph", "preset")) {
    try {
      cfg.graph = find_preset(lower(*preset)).spec;
    } catch (const ArgumentError& e) {
      fail("graph.preset", e.what());
    }
  } else {
    const auto kind = doc.get("graph", "kind");
    if (!kind) fail("graph.kind", "required (hypercube, symmetric or table) unless graph.preset is given");
    const auto k = lower(*kind);
    if (k == "hypercube") {
      cfg.graph.kind = GraphKind::Hypercube;
      const auto d = doc.get("graph", "d");
      if (!d) fail("graph.d", "required for a hypercube");
      cfg.graph.d = parse_integer<int>("graph.d", *d);
      if (cfg.graph.d < 1 || cfg.graph.d > 12) fail("graph.d", "must be within 1..12");
      cfg.graph.name = "cube" + std::to_string(cfg.graph.d);
    } else if (k == "symmetric") {
      cfg.graph.kind = GraphKind::Symmetric;
      const auto n = doc.get("graph", "n");
      if (!n) fail("graph.n", "required for a symmetric group");
      cfg.graph.n = parse_integer<int>("graph.n", *n);
      if (cfg.graph.n < 2 || cfg.graph.n > 7) fail("graph.n", "must be within 2..7");
      const auto gens = doc.get("graph", "generators");
      if (!gens) fail("graph.generators", "required for a symmetric group");
      const auto items = split_top_level(*gens, ',');
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto path = "graph.generators[" + std::to_string(i) + "]";
        try {
          auto parsed = parse_permutation(items[i], cfg.graph.n);
          if (parsed.from_cycles) {
            cfg.audit.push_back(path + ": cycle notation " + items[i] + " expands to one-line " + one_line_text(parsed.one_line));
          }
          cfg.graph.generators.push_back(std::move(parsed.one_line));
        } catch (const ArgumentError& e) {
          fail(path, e.what());
        }
      }
      cfg.graph.name = "symmetric" + std::to_string(cfg.graph.n);
    } else if (k == "table") {
      cfg.graph.kind = GraphKind::Table;
      const auto table = doc.get("graph", "table");
      if (!table) fail("graph.table", "required for a table group");
      for (const auto& row : split_top_level(*table, ';')) {
        std::vector<std::size_t> entries;
        std::size_t pos = 0;
        const auto r = trim(row);
        while (pos < r.size()) {
          const auto next = r.find_first_of(" ,\t", pos);
          const auto tok = r.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
          if (!tok.empty()) entries.push_back(parse_integer<std::size_t>("graph.table", tok));
          if (next == std::string::npos) break;
          pos = next + 1;
        }
        cfg.graph.table.push_back(std::move(entries));
      }
      const auto gens = doc.get("graph", "generators");
      if (!gens) fail("graph.generators", "required for a table group");
      for (const auto& item : split_top_level(*gens, ',')) {
        cfg.graph.table_generators.push_back(parse_integer<std::size_t>("graph.generators", item));
      }
      cfg.graph.name = "table" + std::to_string(cfg.graph.table.size());
    } else {
      fail("graph.kind", "unknown kind '" + *kind + "'");
    }
  }

  std::optional<CayleyGraph> graph;
  try {
    graph = build_graph(cfg.graph);
  } catch (const ArgumentError& e) {
    fail(cfg.graph.kind == GraphKind::Hypercube ? "graph.d" : "graph.generators", e.what());
  }
  for (const auto& w : graph->warnings()) cfg.audit.push_back("graph: " + w);
  const auto degree = graph->degree();

  // coin
  if (auto kind = doc.get("coin", "kind")) {
    const auto k = lower(*kind);
    if (k == "grover") cfg.coin.kind = CoinKind::Grover;
    else if (k == "dft") cfg.coin.kind = CoinKind::DFT;
    else if (k == "hadamard") cfg.coin.kind = CoinKind::Hadamard;
    else if (k == "identity") cfg.coin.kind = CoinKind::Identity;
    else if (k == "random") cfg.coin.kind = CoinKind::Random;
    else if (k == "custom") cfg.coin.kind = CoinKind::Custom;
    else fail("coin.kind", "unknown coin kind '" + *kind + "'");
  }
  if (auto dim = doc.get("coin", "dim")) {
    cfg.coin.dim = parse_integer<std::size_t>("coin.dim", *dim);
    if (*cfg.coin.dim != degree) {
      fail("coin.dim", "coin dimension " + std::to_string(*cfg.coin.dim) + " does not match graph degree " +
                           std::to_string(degree) + " (graph.generators has " + std::to_string(degree) + " entries)");
    }
  }
  if (auto seed = doc.get("coin", "seed")) cfg.coin.seed = parse_integer<std::uint64_t>("coin.seed", *seed);
  if (auto m = doc.get("coin", "matrix")) {
    if (cfg.coin.kind != CoinKind::Custom) fail("coin.matrix", "only valid with coin.kind = custom");
    const auto rows = split_top_level(*m, ';');
    cfg.coin.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<std::string> entries;
      std::size_t pos = 0;
      const auto& row = rows[r];
      while (pos < row.size()) {
        const auto next = row.find_first_of(" \t", pos);
        auto tok = row.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (!tok.empty()) entries.push_back(tok);
        if (next == std::string::npos) break;
        pos = next + 1;
      }
      if (entries.size() != rows.size()) fail("coin.matrix", "row " + std::to_string(r) + " has " + std::to_string(entries.size()) + " entries, matrix must be square");
      for (std::size_t c = 0; c < entries.size(); ++c) {
        cfg.coin.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex("coin.matrix", entries[c]);
      }
    }
  } else if (cfg.coin.kind == CoinKind::Custom) {
    fail("coin.matrix", "required for a custom coin");
  }
  try {
    (void)build_coin(cfg.coin, degree, cfg.seed);
  } catch (const Error& e) {
    fail("coin", e.what());
  }

  // final set
  if (auto v = doc.get("final", "vertices")) {
    const auto items = split_top_level(*v, ',');
    for (std::size_t i = 0; i < items.size(); ++i) {
      try {
        cfg.final_set.push_back(resolve_vertex(*graph, items[i]));
      } catch (const ArgumentError& e) {
        fail("final.vertices[" + std::to_string(i) + "]", e.what());
      }
    }
    std::sort(cfg.final_set.begin(), cfg.final_set.end());
    if (std::adjacent_find(cfg.final_set.begin(), cfg.final_set.end()) != cfg.final_set.end()) {
      fail("final.vertices", "repeated vertex");
    }
    if (cfg.final_set.empty()) fail("final.vertices", "empty final set");
  } else {
    cfg.final_set = {default_final_vertex(*graph)};
  }

  // tolerances
  const auto tol = [&](const char* key, double& target) {
    if (auto v = doc.get("tolerances", key)) {
      const auto path = std::string("tolerances.") + key;
      target = parse_real(path, *v);
      if (!(target > 0.0)) fail(path, "must be positive");
    }
  };
  tol("cluster", cfg.tolerances.cluster);
  tol("rank", cfg.tolerances.rank);
  tol("cps", cfg.tolerances.cps);

  // analyses
  if (auto run = doc.get("analysis", "run")) {
    for (const auto& item : split_top_level(*run, ',')) {
      const auto a = lower(item);
      Analysis parsed;
      if (a == "decompose") parsed = Analysis::Decompose;
      else if (a == "iht") parsed = Analysis::Iht;
      else if (a == "cps") parsed = Analysis::Cps;
      else if (a == "symmetries") parsed = Analysis::Symmetries;
      else if (a == "sweep") parsed = Analysis::Sweep;
      else if (a == "simulate") parsed = Analysis::Simulate;
      else fail("analysis.run", "unknown analysis '" + item + "'");
      if (std::find(cfg.analyses.begin(), cfg.analyses.end(), parsed) == cfg.analyses.end()) cfg.analyses.push_back(parsed);
    }
  } else {
    cfg.analyses = {Analysis::Decompose, Analysis::Iht};
  }
  // Dependency order: decompose before iht, iht before simulate.
  std::sort(cfg.analyses.begin(), cfg.analyses.end());

  if (auto s = doc.get("sweep", "strategy")) {
    const auto v = lower(*s);
    if (v == "nested" || v == "nested-descending") cfg.sweep.strategy = SweepStrategy::NestedDescending;
    else if (v == "random") cfg.sweep.strategy = SweepStrategy::Random;
    else fail("sweep.strategy", "expected nested or random, got '" + *s + "'");
  }
  if (auto s = doc.get("sweep", "sizes")) cfg.sweep.sizes = parse_sizes("sweep.sizes", *s, graph->vertex_count());
  if (auto s = doc.get("sweep", "trials")) {
    cfg.sweep.trials = parse_integer<std::size_t>("sweep.trials", *s);
    if (cfg.sweep.trials == 0) fail("sweep.trials", "must be at least 1");
  }
  if (auto s = doc.get("sweep", "seed")) cfg.sweep.seed = parse_integer<std::uint64_t>("sweep.seed", *s);

  if (auto s = doc.get("simulate", "steps")) {
    cfg.simulate.steps = parse_integer<std::size_t>("simulate.steps", *s);
    if (cfg.simulate.steps == 0) fail("simulate.steps", "must be at least 1");
  }
  if (auto s = doc.get("simulate", "seed")) cfg.simulate.seed = parse_integer<std::uint64_t>("simulate.seed", *s);
  if (auto s = doc.get("simulate", "measure_initial")) cfg.simulate.measure_initial = parse_bool("simulate.measure_initial", *s);
  if (auto s = doc.get("simulate", "initial")) {
    const auto v = trim(*s);
    const auto head = lower(v.substr(0, v.find(':')));
    if (head == "uniform" || head == "random") {
      if (v.find(':') != std::string::npos) fail("simulate.initial", "'" + head + "' takes no argument");
    } else if (head == "vertex" || head == "basis") {
      const auto rest = v.substr(v.find(':') + 1);
      std::string label = rest;
      if (head == "basis") {
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos) fail("simulate.initial", "basis state needs 'basis:<vertex>:<label>'");
        label = rest.substr(0, colon);
        const auto j = parse_integer<std::size_t>("simulate.initial", rest.substr(colon + 1));
        if (j >= degree) fail("simulate.initial", "coin label " + std::to_string(j) + " out of range");
      }
      try {
        (void)resolve_vertex(*graph, label);
      } catch (const ArgumentError& e) {
        fail("simulate.initial", e.what());
      }
    } else if (head == "iht") {
      (void)parse_integer<std::size_t>("simulate.initial", v.substr(v.find(':') + 1));
    } else {
      fail("simulate.initial", "expected uniform, random, vertex:<v>, basis:<v>:<j> or iht:<i>, got '" + v + "'");
    }
    cfg.simulate.initial = v.find(':') == std::string::npos ? head : head + v.substr(v.find(':'));
  }
  if (auto s = doc.get("output", "bases")) cfg.include_bases = parse_bool("output.bases", *s);

  if (auto name = doc.get("", "name")) {
    cfg.name = trim(*name);
    if (cfg.name.empty() || cfg.name.find_first_of("/\\ ") != std::string::npos) {
      fail("name", "must be a non-empty file-name-safe token");
    }
  } else {
    cfg.name = cfg.graph.name + "_" + to_string(cfg.coin.kind);
  }
  doc.reject_unused();
  return cfg;
}

}  // namespace qwiht
