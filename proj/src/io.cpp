#include "chordal/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chordal/error.hpp"

namespace chordal {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int parse_int(std::string_view token, int line, int column) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, column, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

/// Space separated integers, or "-" for the empty set.
VertexSet parse_set_line(std::string_view line, int line_no) {
  if (trim(line) == "-") return VertexSet();
  std::uint64_t bits = 0;
  int prev = 0;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t begin = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    const int column = static_cast<int>(begin) + 1;
    const int v = parse_int(line.substr(begin, pos - begin), line_no, column);
    if (v < 1 || v > kMaxVertex) throw ParseError(line_no, column, "vertex " + std::to_string(v) + " outside 1..64");
    if (v <= prev) throw ParseError(line_no, column, "members must be strictly ascending");
    prev = v;
    bits |= std::uint64_t{1} << (v - 1);
  }
  return VertexSet(bits);
}

Clutter build_clutter(int n, std::optional<VertexSet> ground, std::vector<VertexSet> circuits, std::optional<int> d,
                      int line) {
  std::vector<VertexSet> sorted = circuits;
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError(line, 0, "duplicate circuit");
  }
  return ground ? Clutter(n, *ground, std::move(circuits), d) : Clutter(n, std::move(circuits), d);
}

VertexSet set_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError(1, 0, "expected an array of vertices");
  std::uint64_t bits = 0;
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw ParseError(1, 0, "vertices must be integers");
    const int x = v.get<int>();
    if (x < 1 || x > kMaxVertex) throw ParseError(1, 0, "vertex " + std::to_string(x) + " outside 1..64");
    bits |= std::uint64_t{1} << (x - 1);
  }
  return VertexSet(bits);
}

json set_to_json(VertexSet s) { return json(s.members()); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, static_cast<int>(e.byte), e.what());
  }
}

}  // namespace

Clutter parse_clutter_text(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<int> n;
  std::optional<int> d;
  int header_line = 0;
  std::vector<VertexSet> circuits;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const std::string_view line = trim(lines[k]);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      // Header: "n=<int> d=<int|?>".
      const auto space = line.find_first_of(" \t");
      const std::string_view a = line.substr(0, space);
      const std::string_view b = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
      if (a.substr(0, 2) != "n=" || b.substr(0, 2) != "d=") {
        throw ParseError(line_no, 1, "expected header 'n=<int> d=<int|?>'");
      }
      n = parse_int(a.substr(2), line_no, 3);
      if (*n < 0 || *n > kMaxVertex) throw ParseError(line_no, 3, "n must lie in 0..64");
      const std::string_view dv = b.substr(2);
      if (dv != "?") {
        d = parse_int(dv, line_no, static_cast<int>(line.size() - dv.size()) + 1);
        if (*d < 1) throw ParseError(line_no, 0, "d must be positive");
      }
      header_line = line_no;
      continue;
    }
    circuits.push_back(parse_set_line(lines[k], line_no));
  }
  if (!n) throw ParseError(1, 0, "missing header 'n=<int> d=<int|?>'");
  return build_clutter(*n, std::nullopt, std::move(circuits), d, header_line);
}

Clutter parse_clutter_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("circuits")) {
    throw ParseError(1, 0, "expected an object with keys n and circuits");
  }
  if (!j["n"].is_number_integer()) throw ParseError(1, 0, "n must be an integer");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxVertex) throw ParseError(1, 0, "n must lie in 0..64");
  std::optional<int> d;
  if (j.contains("d") && !j["d"].is_null()) {
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1) throw ParseError(1, 0, "d must be a positive integer");
    d = j["d"].get<int>();
  }
  if (!j["circuits"].is_array()) throw ParseError(1, 0, "circuits must be an array");
  std::vector<VertexSet> circuits;
  for (const json& c : j["circuits"]) circuits.push_back(set_from_json(c));
  std::optional<VertexSet> ground;
  if (j.contains("ground")) ground = set_from_json(j["ground"]);
  return build_clutter(n, ground, std::move(circuits), d, 1);
}

Clutter parse_clutter(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_clutter_json(text);
  return parse_clutter_text(text);
}

std::string serialize_clutter(const Clutter& c) {
  std::string out = "n=" + std::to_string(c.n()) + " d=" + (c.d() ? std::to_string(*c.d()) : std::string("?")) + "\n";
  for (VertexSet f : c.circuits()) out += (f.empty() ? std::string("-") : to_text(f)) + "\n";
  return out;
}

std::string serialize_clutter_json(const Clutter& c) {
  json j;
  j["n"] = c.n();
  j["d"] = c.d() ? json(*c.d()) : json(nullptr);
  json circuits = json::array();
  for (VertexSet f : c.circuits()) circuits.push_back(set_to_json(f));
  j["circuits"] = circuits;
  if (c.ground() != VertexSet::first(c.n())) j["ground"] = set_to_json(c.ground());
  return j.dump() + "\n";
}

std::string render_certificate(const ChordalityVerdict& v) {
  std::string out;
  if (v.chordal) {
    for (VertexSet e : v.certificate.order) out += to_text(e) + "\n";
    out += "# verdict: chordal\n";
  } else {
    if (v.stuck) {
      for (VertexSet f : v.stuck->circuits()) out += "# stuck: " + to_text(f) + "\n";
    }
    out += "# verdict: not-chordal\n";
  }
  return out;
}

ParsedCertificate parse_certificate(std::string_view text) {
  ParsedCertificate cert;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string_view line = trim(lines[k]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# verdict:";
      if (line.substr(0, tag.size()) == tag) {
        const std::string_view verdict = trim(line.substr(tag.size()));
        if (verdict == "chordal") {
          cert.chordal = true;
        } else if (verdict == "not-chordal") {
          cert.chordal = false;
        } else {
          throw ParseError(static_cast<int>(k) + 1, static_cast<int>(tag.size()) + 2, "unknown verdict");
        }
      }
      continue;
    }
    cert.order.push_back(parse_set_line(lines[k], static_cast<int>(k) + 1));
  }
  return cert;
}

std::string render_betti_tsv(const BettiTable& t) {
  std::string out =
      "# field=" + std::to_string(t.field().characteristic()) + " indeg=" + std::to_string(t.indeg()) + "\n";
  for (const auto& [key, value] : t.entries()) {
    out += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" + std::to_string(value) + "\n";
  }
  return out;
}

BettiTable parse_betti_tsv(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<BettiTable> table;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    const std::string_view line = trim(lines[k]);
    if (line.empty()) continue;
    if (!table) {
      int field = 0;
      int indeg = 0;
      if (std::sscanf(std::string(line).c_str(), "# field=%d indeg=%d", &field, &indeg) != 2) {
        throw ParseError(line_no, 1, "expected '# field=<char> indeg=<d>'");
      }
      try {
        table.emplace(FieldSpec(field), indeg);
      } catch (const Error& e) {
        throw ParseError(line_no, 0, e.what());
      }
      continue;
    }
    std::istringstream row{std::string(line)};
    int i = 0;
    int j = 0;
    long long beta = 0;
    if (!(row >> i >> j >> beta) || beta < 0) throw ParseError(line_no, 1, "expected 'i<TAB>j<TAB>beta'");
    table->add(i, j, beta);
  }
  if (!table) throw ParseError(1, 0, "missing header");
  return *table;
}

std::vector<BuildStep> parse_build_script(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw ParseError(1, 0, "a build script is a JSON array of steps");
  std::vector<BuildStep> steps;
  for (const json& s : j) {
    if (!s.is_object() || s.size() != 1) throw ParseError(1, 0, "each step is an object with one key");
    try {
      if (s.contains("start")) {
        steps.push_back(StartStep{s["start"].at("n").get<int>(), s["start"].at("d").get<int>()});
      } else if (s.contains("glue")) {
        GlueStep g;
        g.i = s["glue"].at("i").get<int>();
        g.n_prime = s["glue"].at("n").get<int>();
        if (s["glue"].contains("shared")) g.shared = set_from_json(s["glue"]["shared"]);
        steps.push_back(g);
      } else if (s.contains("add")) {
        steps.push_back(AddCircuitStep{set_from_json(s["add"].at("F")), set_from_json(s["add"].at("e"))});
      } else {
        throw ParseError(1, 0, "unknown step " + s.begin().key());
      }
    } catch (const json::exception& e) {
      throw ParseError(1, 0, e.what());
    }
  }
  return steps;
}

std::string serialize_build_script(const std::vector<BuildStep>& script) {
  json j = json::array();
  for (const BuildStep& step : script) {
    if (const auto* s = std::get_if<StartStep>(&step)) {
      j.push_back({{"start", {{"n", s->n}, {"d", s->d}}}});
    } else if (const auto* g = std::get_if<GlueStep>(&step)) {
      json body = {{"i", g->i}, {"n", g->n_prime}};
      if (g->shared) body["shared"] = set_to_json(*g->shared);
      j.push_back({{"glue", body}});
    } else {
      const auto& a = std::get<AddCircuitStep>(step);
      j.push_back({{"add", {{"F", set_to_json(a.f)}, {"e", set_to_json(a.e)}}}});
    }
  }
  return j.dump() + "\n";
}

namespace {

json rows(const BettiTable& t) {
  json out = json::array();
  for (const auto& [key, value] : t.entries()) out.push_back({key.first, key.second, value});
  return out;
}

json sets(std::span<const VertexSet> family) {
  json out = json::array();
  for (VertexSet f : family) out.push_back(set_to_json(f));
  return out;
}

}  // namespace

std::string betti_rows_json(const BettiTable& t) { return rows(t).dump(); }

std::string stability_report_json(const StabilityReport& r) {
  json j;
  j["C"] = json::parse(serialize_clutter_json(r.c));
  j["e"] = set_to_json(r.e);
  j["A"] = sets(r.a);
  j["D"] = json::parse(serialize_clutter_json(r.d));
  j["full_star"] = r.full_star;
  j["fields"] = json::array();
  for (const FieldStability& f : r.fields) {
    json fj;
    fj["field"] = f.field.characteristic();
    fj["C_table"] = rows(f.c_table);
    fj["D_table"] = rows(f.d_table);
    fj["nonlinear_equal"] = f.nonlinear_equal;
    fj["reg_equal"] = f.reg_equal;
    fj["index_equal"] = f.index_equal;
    fj["projdim_le"] = f.projdim_le;
    fj["projdim_formula"] = f.projdim_formula ? json(*f.projdim_formula) : json(nullptr);
    fj["holds"] = f.holds();
    j["fields"].push_back(fj);
  }
  j["holds"] = r.holds();
  return j.dump();
}

std::string atlas_json(const AtlasResult& a) {
  json j;
  j["n"] = a.n;
  j["d"] = a.d;
  j["exhaustive"] = a.exhaustive;
  j["count"] = a.records.size();
  j["violations"] = a.violation_count();
  j["findings"] = a.findings;
  j["records"] = json::array();
  for (const AtlasRecord& r : a.records) {
    json rj;
    rj["id"] = r.id;
    rj["vtv"] = r.flags.vtv;
    rj["w_chordal"] = r.flags.w_chordal;
    rj["e_chordal"] = to_string(r.flags.e_chordal);
    rj["chordal"] = r.flags.chordal;
    rj["linres_gf2"] = r.flags.linres_gf2;
    rj["linres_gf3"] = r.flags.linres_gf3;
    rj["violations"] = r.violations;
    j["records"].push_back(rj);
  }
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace chordal
