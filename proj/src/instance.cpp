#include "ergo/instance.hpp"

#include "ergo/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace ergo {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  return obj.at(name);
}

int int_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_integer()) parse_fail(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail("rationals must be strings such as \"3/4\" or integers");
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) out.push_back(std::exchange(cur, {}));
    else if (c != '\r') cur += c;
  }
  if (quoted) parse_fail("unterminated quote in CSV");
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

}  // namespace

OneSidedPotential Instance::one_sided() const {
  if (const auto* one = std::get_if<OneSidedPotential>(&potential)) return *one;
  return reduce_two_sided(std::get<TwoSidedPotential>(potential), sft);
}

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  const int s = int_field(doc, "alphabet_size");
  const auto& rows = field(doc, "transition");
  if (!rows.is_array()) parse_fail("'transition' must be an array of rows");
  std::vector<std::vector<int>> matrix;
  for (const auto& row : rows) {
    if (!row.is_array()) parse_fail("'transition' rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) parse_fail("transition entries must be 0 or 1");
      r.push_back(x.get<int>());
    }
    matrix.push_back(std::move(r));
  }
  Rational lambda = doc.contains("lambda") ? rational_value(doc.at("lambda")) : Rational(1, 2);
  SftSystem sft(s, std::move(matrix), lambda);

  const auto& pot = field(doc, "potential");
  const auto& side = field(pot, "side");
  if (!side.is_string()) parse_fail("'side' must be \"one\" or \"two\"");
  const auto& entries = field(pot, "entries");
  if (!entries.is_object()) parse_fail("'entries' must be an object");

  if (side == "one") {
    std::map<Word, Rational> table;
    for (const auto& [key, value] : entries.items()) {
      if (!table.emplace(parse_word(key, s), rational_value(value)).second) parse_fail("duplicate entry '" + key + "'");
    }
    OneSidedPotential b(sft, int_field(pot, "range"), std::move(table));
    return Instance{sft, std::move(b)};
  }
  if (side == "two") {
    std::map<Window, Rational> table;
    for (const auto& [key, value] : entries.items()) {
      auto bar = key.find('|');
      if (bar == std::string::npos) parse_fail("two-sided keys look like \"past|future\", got '" + key + "'");
      Window w{parse_word(std::string_view(key).substr(0, bar), s), parse_word(std::string_view(key).substr(bar + 1), s)};
      if (!table.emplace(std::move(w), rational_value(value)).second) parse_fail("duplicate entry '" + key + "'");
    }
    TwoSidedPotential a(sft, int_field(pot, "past_depth"), int_field(pot, "future_depth"), std::move(table));
    return Instance{sft, std::move(a)};
  }
  parse_fail("'side' must be \"one\" or \"two\"");
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

std::string instance_to_json(const Instance& instance) {
  const auto& sft = instance.sft;
  const int s = sft.alphabet_size();
  json doc;
  doc["alphabet_size"] = s;
  doc["transition"] = sft.matrix();
  doc["lambda"] = to_string(sft.lambda());
  json pot;
  json entries = json::object();
  if (const auto* one = std::get_if<OneSidedPotential>(&instance.potential)) {
    pot["side"] = "one";
    pot["range"] = one->range();
    for (const auto& [w, v] : one->table()) entries[format_word(w, s)] = to_string(v);
  } else {
    const auto& two = std::get<TwoSidedPotential>(instance.potential);
    pot["side"] = "two";
    pot["past_depth"] = two.past_depth();
    pot["future_depth"] = two.future_depth();
    for (const auto& [w, v] : two.table()) entries[format_word(w.past, s) + "|" + format_word(w.future, s)] = to_string(v);
  }
  pot["entries"] = std::move(entries);
  doc["potential"] = std::move(pot);
  return doc.dump(2) + "\n";
}

std::string matrix_csv(const DeBruijnGraph& graph, const RationalMatrix& m) {
  std::string out = "node";
  for (std::size_t j = 0; j < graph.node_count(); ++j) out += "," + csv_field(graph.node_label(j));
  out += "\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out += csv_field(graph.node_label(i));
    for (const auto& x : m[i]) out += "," + to_string(x);
    out += "\n";
  }
  return out;
}

RationalMatrix parse_matrix_csv(std::string_view text, const DeBruijnGraph& graph) {
  auto rows = split_csv(text);
  const std::size_t n = graph.node_count();
  if (rows.size() != n + 1) parse_fail("matrix CSV needs a header and one row per node");
  const int s = graph.sft().alphabet_size();
  std::vector<std::size_t> cols;
  for (std::size_t j = 1; j < rows[0].size(); ++j) {
    auto v = graph.find_node(parse_word(rows[0][j], s));
    if (!v) parse_fail("unknown node '" + rows[0][j] + "' in header");
    cols.push_back(*v);
  }
  if (cols.size() != n) parse_fail("matrix CSV header must list every node");
  RationalMatrix m(n, RationalVector(n));
  std::vector<bool> seen(n);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != n + 1) parse_fail("matrix CSV row has the wrong number of fields");
    auto v = graph.find_node(parse_word(rows[r][0], s));
    if (!v || seen[*v]) parse_fail("unknown or repeated node '" + rows[r][0] + "'");
    seen[*v] = true;
    for (std::size_t j = 0; j < n; ++j) m[*v][cols[j]] = parse_rational(rows[r][j + 1]);
  }
  return m;
}

std::string subaction_csv(const DeBruijnGraph& graph, const RationalVector& values) {
  std::string out = "node,value\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i)
    out += csv_field(graph.node_label(i)) + "," + to_string(values[i]) + "\n";
  return out;
}

int subaction_csv_depth(std::string_view text, int alphabet_size) {
  auto rows = split_csv(text);
  std::size_t first = !rows.empty() && !rows[0].empty() && rows[0][0] == "node" ? 1 : 0;
  if (rows.size() <= first || rows[first].size() != 2) parse_fail("sub-action CSV needs rows \"node,value\"");
  return static_cast<int>(parse_word(rows[first][0], alphabet_size).size());
}

SubAction parse_subaction_csv(std::string_view text, const DeBruijnGraph& graph) {
  auto rows = split_csv(text);
  const int s = graph.sft().alphabet_size();
  SubAction u{graph.order(), RationalVector(graph.node_count()), Provenance::UserSupplied};
  std::vector<bool> seen(graph.node_count());
  std::size_t count = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 0 && !rows[r].empty() && rows[r][0] == "node") continue;
    if (rows[r].size() != 2) parse_fail("sub-action CSV rows must be \"node,value\"");
    auto v = graph.find_node(parse_word(rows[r][0], s));
    if (!v) throw Error(ErrorKind::IncompatibleOrder, "node '" + rows[r][0] + "' is not a node of the graph");
    if (seen[*v]) parse_fail("repeated node '" + rows[r][0] + "'");
    seen[*v] = true;
    u.values[*v] = parse_rational(rows[r][1]);
    ++count;
  }
  if (count != graph.node_count()) throw Error(ErrorKind::IncompatibleOrder, "sub-action CSV does not cover every node");
  return u;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace ergo
