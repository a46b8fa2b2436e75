#include "sfg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"

#include "sfg/decimation.hpp"
#include "sfg/errors.hpp"
#include "sfg/generators.hpp"
#include "sfg/graph_io.hpp"
#include "sfg/oracle.hpp"
#include "sfg/verify.hpp"

namespace sfg {
namespace {

using Json = nlohmann::ordered_json;

// Keys accepted from flags, the config file and the environment.
const std::vector<std::string>& value_keys() {
  static const std::vector<std::string> keys = {
      "model",  "problem",     "n",    "n-range",    "method",    "format",
      "out",    "budget-seconds", "witness-cap", "jobs", "gamma-one", "strategy",
      "stats-cap"};
  return keys;
}

const std::vector<std::string>& flag_keys() {
  static const std::vector<std::string> keys = {"classified", "trajectory"};
  return keys;
}

bool is_known_key(const std::string& key) {
  const auto& v = value_keys();
  const auto& f = flag_keys();
  return std::find(v.begin(), v.end(), key) != v.end() ||
         std::find(f.begin(), f.end(), key) != f.end();
}

std::string env_name(const std::string& key) {
  std::string name = "SFG_";
  for (char c : key) {
    name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return name;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    if (!is_known_key(key)) {
      throw UsageError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
    values[key] = trim(std::string_view(text).substr(eq + 1));
  }
  return values;
}

class Settings {
 public:
  explicit Settings(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_or(const std::string& key, std::string fallback) const {
    return get(key).value_or(std::move(fallback));
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw UsageError("missing --" + key);
    return *v;
  }

  bool flag(const std::string& key) const {
    auto v = get(key);
    if (!v) return false;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw UsageError("--" + key + " expects true or false, got '" + *v + "'");
  }

  long long integer(const std::string& key, long long fallback) const {
    auto v = get(key);
    return v ? parse_integer(key, *v) : fallback;
  }

  static long long parse_integer(const std::string& key, const std::string& text) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("--" + key + " expects an integer, got '" + text + "'");
    }
    return value;
  }

 private:
  std::map<std::string, std::string> values_;
};

Model model_of(const Settings& s) {
  const std::string text = s.require("model");
  auto m = parse_model(text);
  if (!m) throw UsageError("unknown model '" + text + "' (fractal | nonfractal)");
  return *m;
}

Problem problem_of(const Settings& s) {
  const std::string text = s.require("problem");
  auto p = parse_problem(text);
  if (!p) throw UsageError("unknown problem '" + text + "' (matching | mis | mds)");
  return *p;
}

std::vector<Model> models_of(const Settings& s) {
  if (s.get_or("model", "all") == "all") return {Model::Fractal, Model::NonFractal};
  return {model_of(s)};
}

std::vector<Problem> problems_of(const Settings& s) {
  if (s.get_or("problem", "all") == "all") {
    return {Problem::Matching, Problem::IndependentSet, Problem::DominatingSet};
  }
  return {problem_of(s)};
}

int level_of(const Settings& s) {
  const long long n = Settings::parse_integer("n", s.require("n"));
  if (n < 0 || n > 1000) throw UsageError("--n must be between 0 and 1000");
  return static_cast<int>(n);
}

// "a..b" or a single level; falls back to --n.
std::pair<int, int> range_of(const Settings& s, std::pair<int, int> fallback) {
  if (auto text = s.get("n-range")) {
    const auto dots = text->find("..");
    const std::string a = dots == std::string::npos ? *text : text->substr(0, dots);
    const std::string b = dots == std::string::npos ? *text : text->substr(dots + 2);
    const long long lo = Settings::parse_integer("n-range", a);
    const long long hi = Settings::parse_integer("n-range", b);
    if (lo < 0 || hi < lo || hi > 1000) throw UsageError("--n-range must be a..b with 0 <= a <= b");
    return {static_cast<int>(lo), static_cast<int>(hi)};
  }
  if (s.get("n")) {
    const int n = level_of(s);
    return {n, n};
  }
  return fallback;
}

std::string format_of(const Settings& s, std::initializer_list<std::string_view> allowed) {
  const std::string fmt = s.get_or("format", std::string(*allowed.begin()));
  if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : " | ") + std::string(a);
    throw UsageError("unsupported --format '" + fmt + "' (" + list + ")");
  }
  return fmt;
}

OracleBudget budget_of(const Settings& s) {
  OracleBudget b;
  const long long seconds = s.integer("budget-seconds", 600);
  const long long cap = s.integer("witness-cap", 100);
  if (seconds <= 0) throw UsageError("--budget-seconds must be positive");
  if (cap < 0) throw UsageError("--witness-cap must be nonnegative");
  b.max_time = std::chrono::seconds(seconds);
  b.max_witnesses = static_cast<std::size_t>(cap);
  return b;
}

RecursionOptions recursion_of(const Settings& s) {
  RecursionOptions r;
  const std::string form = s.get_or("gamma-one", "literal");
  if (form == "literal") {
    r.gamma_one = GammaOneForm::Literal;
  } else if (form == "corrected") {
    r.gamma_one = GammaOneForm::Corrected;
  } else {
    throw UsageError("--gamma-one expects literal or corrected");
  }
  return r;
}

std::string log2_text(const BigInt& v) {
  auto k = exact_log2(v);
  return k ? std::to_string(*k) : std::string();
}

Json witness_json(const Witness& w) {
  if (!w.edges.empty()) {
    Json edges = Json::array();
    for (const auto& [u, v] : w.edges) edges.push_back({u, v});
    return edges;
  }
  return Json(w.vertices);
}

Json result_json(const SolveResult& r) {
  Json j;
  j["feasible"] = r.feasible();
  j["optimum"] = r.feasible() ? Json(*r.optimum) : Json(nullptr);
  j["count"] = to_decimal(r.count);
  j["count_log2"] = exact_log2(r.count) ? Json(*exact_log2(r.count)) : Json(nullptr);
  j["truncated"] = r.truncated;
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_escape(cells[i]);
  }
  return line;
}

std::string opt_int(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

// ---- commands ----

void cmd_generate(const Settings& s, std::ostream& out) {
  const Model model = model_of(s);
  const int n = level_of(s);
  const std::string method_text = s.get_or("method", "replace");
  const auto method = parse_method(method_text);
  if (!method) throw UsageError("unknown method '" + method_text + "' (replace | merge)");
  const std::string fmt = format_of(s, {"json", "text"});

  const Graph g = build(model, n, *method);
  const ModelParams predicted = predicted_counts(n);
  std::map<std::string, int> roles;
  for (const VertexMeta& m : g.all_meta()) ++roles[std::string(to_string(m.role))];
  std::size_t iterative = 0;
  for (const Edge& e : g.edges()) iterative += e.kind == EdgeKind::Iterative;

  if (fmt == "text") {
    out << to_string(model) << " n=" << n << " method=" << to_string(*method) << '\n'
        << "vertices " << g.vertex_count() << " (predicted " << predicted.vertices << ")\n"
        << "edges " << g.edge_count() << " (predicted " << predicted.edges << ")\n"
        << "iterative " << iterative << " non-iterative " << g.edge_count() - iterative << '\n';
    for (const auto& [role, count] : roles) out << "role " << role << ' ' << count << '\n';
    return;
  }
  Json j;
  j["model"] = to_string(model);
  j["n"] = n;
  j["method"] = to_string(*method);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["predicted_vertices"] = predicted.vertices;
  j["predicted_edges"] = predicted.edges;
  j["iterative_edges"] = iterative;
  j["non_iterative_edges"] = g.edge_count() - iterative;
  Json r = Json::object();
  for (const auto& [role, count] : roles) r[role] = count;
  j["roles"] = std::move(r);
  out << j.dump(2) << '\n';
}

void cmd_solve(const Settings& s, std::ostream& out) {
  const Model model = model_of(s);
  const Problem problem = problem_of(s);
  const int n = level_of(s);
  const OracleBudget budget = budget_of(s);
  const std::string fmt = format_of(s, {"json", "text"});
  const Graph g = build(model, n, Method::EdgeReplacement);

  SolveResult whole;
  const std::string strategy = s.get_or("strategy", "auto");
  if (problem == Problem::DominatingSet) {
    DominationStrategy ds = DominationStrategy::Auto;
    if (strategy == "exhaustive") {
      ds = DominationStrategy::ExhaustiveBySize;
    } else if (strategy == "branch") {
      ds = DominationStrategy::BranchAndReduce;
    } else if (strategy != "auto") {
      throw UsageError("--strategy expects auto, exhaustive or branch");
    }
    whole = min_dominating_set(g, {}, budget, ds);
  } else {
    whole = solve(g, problem, {}, budget);
  }
  std::optional<ClassifiedTable> table;
  if (s.flag("classified")) {
    if (n == 0) throw UsageError("--classified needs n >= 1");
    table = classified_table(g, problem, budget);
  }

  if (fmt == "text") {
    out << to_string(model) << " n=" << n << ' ' << to_string(problem) << '\n'
        << "optimum " << (whole.feasible() ? std::to_string(*whole.optimum) : "infeasible") << '\n'
        << "count " << to_decimal(whole.count) << '\n';
    if (table) {
      for (int k = 0; k < 3; ++k) {
        const SolveResult& r = table->entries[k].aggregate;
        out << "k=" << k << " optimum "
            << (r.feasible() ? std::to_string(*r.optimum) : "infeasible") << " count "
            << to_decimal(r.count) << '\n';
      }
    }
    return;
  }
  Json j;
  j["model"] = to_string(model);
  j["n"] = n;
  j["problem"] = to_string(problem);
  j["result"] = result_json(whole);
  if (table) {
    Json rows = Json::array();
    for (int k = 0; k < 3; ++k) {
      Json row;
      row["k"] = k;
      row["result"] = result_json(table->entries[k].aggregate);
      if (!table->entries[k].per_vertex.empty()) {
        Json per = Json::array();
        for (const SolveResult& r : table->entries[k].per_vertex) per.push_back(result_json(r));
        row["per_vertex"] = std::move(per);
      }
      rows.push_back(std::move(row));
    }
    j["boundary"] = {table->first, table->second};
    j["classified"] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

struct PredictRow {
  int n = 0;
  std::optional<SizeTriple> sizes;
  std::optional<CountState> counts;
};

std::vector<PredictRow> predict_rows(Quantity q, int first, int last, const RecursionOptions& r) {
  std::map<int, PredictRow> rows;
  const int size_base = size_base_level(q);
  const int count_base = count_base_level(q);
  if (last >= size_base) {
    for (const LevelRecord& rec : size_trajectory(q, last, r)) {
      if (rec.sizes.level >= first) rows[rec.sizes.level].sizes = rec.sizes;
    }
  }
  if (last >= count_base) {
    for (const CountState& c : count_trajectory(q, last)) {
      if (c.level >= first) rows[c.level].counts = c;
    }
  }
  std::vector<PredictRow> out;
  for (auto& [n, row] : rows) {
    row.n = n;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> triple_cells(const std::optional<SizeTriple>& t) {
  if (!t) return {"", "", "", ""};
  std::vector<std::string> cells;
  for (const auto& v : t->s) cells.push_back(v ? std::to_string(*v) : "infeasible");
  cells.push_back(std::to_string(t->headline()));
  return cells;
}

void cmd_predict(const Settings& s, std::ostream& out) {
  const Quantity q{model_of(s), problem_of(s)};
  const int n = level_of(s);
  const RecursionOptions recursion = recursion_of(s);
  const std::string fmt = format_of(s, {"json", "csv"});
  const int base = std::min(size_base_level(q), count_base_level(q));
  if (n < base) {
    throw UsageError(to_string(q) + " recurrences start at n = " + std::to_string(base));
  }
  const int first = s.flag("trajectory") ? base : n;
  const auto rows = predict_rows(q, first, n, recursion);

  if (fmt == "csv") {
    out << "n,s0,s1,s2,headline,count_decimal,count_log2\n";
    for (const PredictRow& row : rows) {
      std::vector<std::string> cells{std::to_string(row.n)};
      for (auto& c : triple_cells(row.sizes)) cells.push_back(std::move(c));
      if (row.counts) {
        const BigInt& c = row.counts->headline(q.problem);
        cells.push_back(to_decimal(c));
        cells.push_back(log2_text(c));
      } else {
        cells.insert(cells.end(), {"", ""});
      }
      out << join_csv(cells) << '\n';
    }
    return;
  }
  Json j;
  j["quantity"] = to_string(q);
  j["gamma_one"] = recursion.gamma_one == GammaOneForm::Literal ? "literal" : "corrected";
  Json list = Json::array();
  for (const PredictRow& row : rows) {
    Json r;
    r["n"] = row.n;
    if (row.sizes) {
      Json sv = Json::array();
      for (const auto& v : row.sizes->s) sv.push_back(v ? Json(*v) : Json("infeasible"));
      r["s"] = std::move(sv);
      r["headline"] = row.sizes->headline();
      if (row.n >= headline_first_level(q)) {
        r["headline_closed_form"] = headline_closed_form(q, row.n);
      }
    }
    if (row.counts) {
      const BigInt& c = row.counts->headline(q.problem);
      r["count_decimal"] = to_decimal(c);
      r["count_log2"] = exact_log2(c) ? Json(*exact_log2(c)) : Json(nullptr);
      const auto closed = count_closed_form(q, row.n);
      r["count_closed_form"] = closed ? Json(to_decimal(*closed)) : Json("not-available");
    }
    list.push_back(std::move(r));
  }
  j["rows"] = std::move(list);
  out << j.dump(2) << '\n';
}

void cmd_table(const Settings& s, std::ostream& out) {
  const Quantity q{model_of(s), problem_of(s)};
  const int last = range_of(s, {0, -1}).second;
  if (last < 0) throw UsageError("missing --n or --n-range");
  const std::string fmt = format_of(s, {"csv", "json"});
  const auto rows = predict_rows(q, 0, last, recursion_of(s));
  std::map<int, const PredictRow*> by_level;
  for (const PredictRow& r : rows) by_level[r.n] = &r;

  // Count fields populated for this quantity, in a stable order.
  std::vector<std::string> fields;
  if (!rows.empty() && rows.back().counts) {
    const CountState& c = *rows.back().counts;
    if (c.theta) fields.push_back("theta");
    if (c.phi) fields.push_back("phi");
    if (c.varphi) fields.push_back("varphi");
    if (c.x) fields.push_back("x");
    if (c.y) fields.push_back("y");
  }
  auto field_value = [](const CountState& c, const std::string& f) -> const std::optional<BigInt>& {
    if (f == "theta") return c.theta;
    if (f == "phi") return c.phi;
    if (f == "varphi") return c.varphi;
    if (f == "x") return c.x;
    return c.y;
  };

  Json list = Json::array();
  if (fmt == "csv") {
    std::vector<std::string> header{"n",        "vertices",      "edges",     "s0", "s1", "s2",
                                    "headline", "count_decimal", "count_log2"};
    header.insert(header.end(), fields.begin(), fields.end());
    out << join_csv(header) << '\n';
  }
  for (int n = 0; n <= last; ++n) {
    const ModelParams p = predicted_counts(std::min(n, 30));
    const PredictRow* row = by_level.count(n) ? by_level[n] : nullptr;
    const std::optional<SizeTriple> sizes = row ? row->sizes : std::nullopt;
    const std::optional<CountState> counts = row ? row->counts : std::nullopt;
    if (fmt == "csv") {
      std::vector<std::string> cells{std::to_string(n), n <= 30 ? std::to_string(p.vertices) : "",
                                     n <= 30 ? std::to_string(p.edges) : ""};
      for (auto& c : triple_cells(sizes)) cells.push_back(std::move(c));
      if (counts) {
        const BigInt& c = counts->headline(q.problem);
        cells.push_back(to_decimal(c));
        cells.push_back(log2_text(c));
        for (const auto& f : fields) cells.push_back(to_decimal(*field_value(*counts, f)));
      } else {
        cells.insert(cells.end(), 2 + fields.size(), "");
      }
      out << join_csv(cells) << '\n';
      continue;
    }
    Json r;
    r["n"] = n;
    if (n <= 30) {
      r["vertices"] = p.vertices;
      r["edges"] = p.edges;
    }
    if (sizes) {
      Json sv = Json::array();
      for (const auto& v : sizes->s) sv.push_back(v ? Json(*v) : Json("infeasible"));
      r["s"] = std::move(sv);
      r["headline"] = sizes->headline();
    }
    if (counts) {
      const BigInt& c = counts->headline(q.problem);
      r["count_decimal"] = to_decimal(c);
      r["count_log2"] = exact_log2(c) ? Json(*exact_log2(c)) : Json(nullptr);
      for (const auto& f : fields) r[f] = to_decimal(*field_value(*counts, f));
    }
    list.push_back(std::move(r));
  }
  if (fmt == "json") {
    Json j;
    j["quantity"] = to_string(q);
    j["rows"] = std::move(list);
    out << j.dump(2) << '\n';
  }
}

void cmd_stats(const Settings& s, std::ostream& out) {
  const Model model = model_of(s);
  const int n = level_of(s);
  const long long cap = s.integer("stats-cap", 6);
  format_of(s, {"json"});
  if (n > cap) {
    throw CapabilityError("stats computes all-pairs distances; n = " + std::to_string(n) +
                          " exceeds --stats-cap " + std::to_string(cap));
  }
  const Graph g = build(model, n, Method::EdgeReplacement);
  std::map<std::size_t, std::size_t> histogram;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++histogram[g.degree(v)];

  std::uint64_t total = 0;
  std::uint32_t diameter = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t d : bfs_distances(g, v)) {
      total += d;
      diameter = std::max(diameter, d);
    }
  }
  const std::uint64_t nv = g.vertex_count();
  const std::uint64_t pairs = nv * (nv - 1);  // ordered pairs; total counts each pair twice

  Json j;
  j["model"] = to_string(model);
  j["n"] = n;
  j["vertices"] = nv;
  j["edges"] = g.edge_count();
  Json h = Json::object();
  for (const auto& [deg, count] : histogram) h[std::to_string(deg)] = count;
  j["degree_histogram"] = std::move(h);
  j["average_degree"] = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(nv);
  const std::uint64_t g_div = std::gcd(total, pairs);
  j["average_distance"] = static_cast<double>(total) / static_cast<double>(pairs);
  j["average_distance_exact"] = std::to_string(total / g_div) + "/" + std::to_string(pairs / g_div);
  j["diameter"] = diameter;
  out << j.dump(2) << '\n';
}

void cmd_export(const Settings& s, std::ostream& out) {
  const Model model = model_of(s);
  const int n = level_of(s);
  const std::string method_text = s.get_or("method", "replace");
  const auto method = parse_method(method_text);
  if (!method) throw UsageError("unknown method '" + method_text + "' (replace | merge)");
  const std::string fmt = format_of(s, {"edgelist", "dot", "json"});
  const Graph g = build(model, n, *method);
  if (fmt == "edgelist") {
    write_edge_list(out, g);
  } else if (fmt == "dot") {
    write_dot(out, g);
  } else {
    out << to_json(g).dump(2) << '\n';
  }
}

Json triple_json(const Triple& t) {
  auto v = [](const std::optional<std::string>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"oracle", v(t.oracle)}, {"recursion", v(t.recursion)}, {"closed_form", v(t.closed_form)}};
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const auto [first, last] = range_of(s, {1, 3});
  const std::string fmt = format_of(s, {"text", "json", "csv"});
  VerifyOptions options;
  options.budget = budget_of(s);
  options.classified = s.flag("classified");
  options.recursion = recursion_of(s);
  const long long jobs = s.integer("jobs", 1);
  if (jobs < 1) throw UsageError("--jobs must be positive");
  options.jobs = static_cast<int>(jobs);

  std::vector<VerificationReport> reports;
  for (Model m : models_of(s)) {
    for (Problem p : problems_of(s)) reports.push_back(run_verification({m, p}, first, last, options));
  }
  bool unexpected = false;
  for (const auto& r : reports) unexpected = unexpected || r.has_unexpected_mismatch();

  auto opt = [](const std::optional<std::string>& v) { return v.value_or(""); };
  if (fmt == "csv") {
    std::vector<std::string> header{"quantity", "n", "status", "known_issues"};
    for (const char* f : {"headline", "count", "s0", "s1", "s2"}) {
      for (const char* src : {"oracle", "recursion", "closed_form"}) {
        header.push_back(std::string(f) + "_" + src);
      }
    }
    header.insert(header.end(), {"elapsed_ms", "note"});
    out << join_csv(header) << '\n';
    for (const auto& r : reports) {
      for (const VerifyRow& row : r.rows) {
        std::string ids;
        for (const auto& id : row.known_issues) ids += (ids.empty() ? "" : ";") + id;
        std::vector<std::string> cells{to_string(r.quantity), std::to_string(row.n),
                                       std::string(to_string(row.status)), ids};
        std::vector<Triple> triples{row.headline, row.count};
        for (int k = 0; k < 3; ++k) {
          triples.push_back(row.classified ? (*row.classified)[k] : Triple{});
        }
        for (const Triple& t : triples) {
          cells.insert(cells.end(), {opt(t.oracle), opt(t.recursion), opt(t.closed_form)});
        }
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << row.elapsed_ms;
        cells.push_back(ms.str());
        cells.push_back(row.note);
        out << join_csv(cells) << '\n';
      }
    }
  } else if (fmt == "json") {
    Json j = Json::array();
    for (const auto& r : reports) {
      Json rep;
      rep["quantity"] = to_string(r.quantity);
      Json rows = Json::array();
      for (const VerifyRow& row : r.rows) {
        Json jr;
        jr["n"] = row.n;
        jr["status"] = to_string(row.status);
        jr["headline"] = triple_json(row.headline);
        jr["count"] = triple_json(row.count);
        if (row.classified) {
          Json cl = Json::array();
          for (const Triple& t : *row.classified) cl.push_back(triple_json(t));
          jr["classified"] = std::move(cl);
        }
        jr["mismatched_fields"] = row.mismatched_fields;
        jr["known_issues"] = row.known_issues;
        jr["note"] = row.note;
        jr["elapsed_ms"] = row.elapsed_ms;
        rows.push_back(std::move(jr));
      }
      rep["rows"] = std::move(rows);
      rep["summary"] = {{"checked", r.summary.checked},
                        {"matched", r.summary.matched},
                        {"mismatched", r.summary.mismatched},
                        {"known_mismatches", r.summary.known_mismatches},
                        {"skipped", r.summary.skipped},
                        {"out_of_range", r.summary.out_of_range}};
      j.push_back(std::move(rep));
    }
    Json known = Json::array();
    for (const KnownIssue& k : known_issues()) {
      known.push_back({{"id", k.id},
                       {"quantity", to_string(k.quantity)},
                       {"field", k.field},
                       {"description", k.description}});
    }
    out << Json{{"reports", std::move(j)}, {"known_issues", std::move(known)},
                {"unexpected_mismatch", unexpected}}
               .dump(2)
        << '\n';
  } else {
    auto cell = [](const Triple& t) {
      auto v = [](const std::optional<std::string>& x) { return x.value_or("-"); };
      return v(t.oracle) + "/" + v(t.recursion) + "/" + v(t.closed_form);
    };
    for (const auto& r : reports) {
      out << "== " << to_string(r.quantity) << " (oracle/recursion/closed form)\n";
      for (const VerifyRow& row : r.rows) {
        out << "n=" << row.n << "  " << to_string(row.status) << "  size " << cell(row.headline)
            << "  count " << cell(row.count);
        if (row.classified) {
          for (int k = 0; k < 3; ++k) out << "  s" << k << ' ' << cell((*row.classified)[k]);
        }
        if (row.status == RowStatus::Mismatch) {
          out << "  [" << (row.known ? "known:" : "UNEXPECTED");
          for (const auto& id : row.known_issues) out << ' ' << id;
          out << ']';
        }
        if (!row.note.empty()) out << "  (" << row.note << ')';
        out << '\n';
      }
      out << "summary checked=" << r.summary.checked << " matched=" << r.summary.matched
          << " mismatched=" << r.summary.mismatched << " known=" << r.summary.known_mismatches
          << " skipped=" << r.summary.skipped << " out_of_range=" << r.summary.out_of_range
          << '\n';
    }
  }
  return unexpected ? kExitMismatch : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar graph families: generation, exact solvers and recurrences", "sfg"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::map<std::string, std::string> from_flags;
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> options;
  for (const std::string& key : value_keys()) options[key] = app.add_option("--" + key, raw[key]);
  std::map<std::string, bool> flags;
  for (const std::string& key : flag_keys()) options[key] = app.add_flag("--" + key, flags[key]);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags override it");

  options["model"]->description("fractal | nonfractal (verify also accepts all)");
  options["problem"]->description("matching | mis | mds (verify also accepts all)");
  options["n"]->description("iteration index");
  options["n-range"]->description("a..b, for verify and table");
  options["method"]->description("replace | merge");
  options["format"]->description("output format; depends on the command");
  options["out"]->description("write the result to this file instead of stdout");
  options["budget-seconds"]->description("oracle time budget per solve (default 600)");
  options["witness-cap"]->description("optimal solutions listed per result (default 100)");
  options["jobs"]->description("levels verified concurrently (default 1)");
  options["gamma-one"]->description("literal | corrected form of the k=1 domination recurrence");
  options["strategy"]->description("dominating-set search: auto | exhaustive | branch");
  options["stats-cap"]->description("largest n accepted by stats (default 6)");
  options["classified"]->description("also solve the boundary-classified subproblems");
  options["trajectory"]->description("predict: list every level from the seed up to --n");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"generate", "build a graph and summarise it"},
      {"solve", "exact optimum and optimal-solution count"},
      {"predict", "recurrence values for one quantity"},
      {"verify", "compare oracle, recurrence and closed form level by level"},
      {"table", "recurrence trajectory with vertex and edge counts"},
      {"stats", "degree histogram, average degree and average distance"},
      {"export", "write a graph as edge list, DOT or JSON"},
  };
  for (const auto& [name, description] : commands) app.add_subcommand(name, description);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::map<std::string, std::string> merged;
    for (const std::string& key : value_keys()) {
      if (const char* v = std::getenv(env_name(key).c_str())) merged[key] = v;
    }
    for (const std::string& key : flag_keys()) {
      if (const char* v = std::getenv(env_name(key).c_str())) merged[key] = v;
    }
    if (config_path.empty()) {
      if (const char* v = std::getenv("SFG_CONFIG")) config_path = v;
    }
    if (!config_path.empty()) {
      for (auto& [k, v] : read_config(config_path)) merged[k] = v;
    }
    for (const std::string& key : value_keys()) {
      if (options[key]->count() > 0) merged[key] = raw[key];
    }
    for (const std::string& key : flag_keys()) {
      if (options[key]->count() > 0) merged[key] = flags[key] ? "true" : "false";
    }
    const Settings settings(std::move(merged));

    std::ostringstream buffer;
    int code = kExitOk;
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "generate") {
      cmd_generate(settings, buffer);
    } else if (command == "solve") {
      cmd_solve(settings, buffer);
    } else if (command == "predict") {
      cmd_predict(settings, buffer);
    } else if (command == "verify") {
      code = cmd_verify(settings, buffer);
    } else if (command == "table") {
      cmd_table(settings, buffer);
    } else if (command == "stats") {
      cmd_stats(settings, buffer);
    } else {
      cmd_export(settings, buffer);
    }

    if (auto path = settings.get("out"); path && !path->empty()) {
      std::ofstream file(*path, std::ios::binary);
      if (!file) throw FormatError("cannot open " + *path + " for writing");
      file << buffer.str();
      if (!file.flush()) throw FormatError("write to " + *path + " failed");
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace sfg
