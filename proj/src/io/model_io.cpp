#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "betlogic/error.hpp"
#include "betlogic/io.hpp"
#include "json.hpp"

namespace betlogic {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what,
                       ErrorCode code = ErrorCode::Io) {
  throw Error(code, source + ": " + where + ": " + what);
}

const json& field(const json& doc, const char* key, const std::string& source) {
  if (!doc.contains(key)) fail(source, "/", std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> names(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_array()) fail(source, where, "expected a list of world names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(source, where + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, "byte " + std::to_string(e.byte), e.what());
  }
}

// Reruns `build`, prefixing any library error with the file location.
template <class F>
auto located(const std::string& source, const std::string& where, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    fail(source, where, e.what(), e.code());
  }
}

Frame load_frame(const json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "/", "expected an object");
  const auto worlds = names(field(doc, "worlds", source), source, "/worlds");
  const json& part = field(doc, "partition", source);
  if (!part.is_array()) fail(source, "/partition", "expected a list of cells");
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < part.size(); ++i) {
    cells.push_back(names(part[i], source, "/partition/" + std::to_string(i)));
  }
  std::map<std::string, std::set<std::string>> valuation;
  if (doc.contains("valuation")) {
    const json& val = doc.at("valuation");
    if (!val.is_object()) fail(source, "/valuation", "expected an object");
    for (const auto& [w, atoms] : val.items()) {
      const auto list = names(atoms, source, "/valuation/" + w);
      valuation[w] = std::set<std::string>(list.begin(), list.end());
    }
  }
  return located(source, "/partition", [&] { return Frame(worlds, cells, valuation); });
}

json frame_json(const Frame& f, const char* kind) {
  json doc;
  doc["kind"] = kind;
  doc["worlds"] = f.worlds();
  json part = json::array();
  for (const auto& cell : f.cells()) part.push_back(f.names_of(cell));
  doc["partition"] = part;
  json val = json::object();
  for (int w = 0; w < f.size(); ++w) {
    const auto atoms = f.atoms_at(w);
    val[f.world_name(w)] = std::vector<std::string>(atoms.begin(), atoms.end());
  }
  doc["valuation"] = val;
  return doc;
}

ProbabilityModel probability_from(const json& doc, const std::string& source) {
  Frame frame = load_frame(doc, source);
  const json& w = field(doc, "weights", source);
  if (!w.is_object()) fail(source, "/weights", "expected an object");
  std::map<std::string, Rational> weights;
  for (const auto& [name, value] : w.items()) {
    const std::string where = "/weights/" + name;
    if (!value.is_string()) fail(source, where, "weights are \"p/q\" strings");
    weights[name] = located(source, where, [&] { return Rational::parse(value.get<std::string>()); });
  }
  return located(source, "/weights", [&] { return make_probability_model(frame, weights); });
}

NeighborhoodModel neighborhood_from(const json& doc, const std::string& source) {
  Frame frame = load_frame(doc, source);
  const json& g = field(doc, "generators", source);
  if (!g.is_array()) fail(source, "/generators", "expected a list of world lists");
  std::vector<std::vector<EventSet>> gens(frame.cell_count());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string where = "/generators/" + std::to_string(i);
    const EventSet x = located(source, where, [&] { return frame.set_of(names(g[i], source, where)); });
    if (x.is_empty()) fail(source, where, "empty generator", ErrorCode::InvalidModel);
    const int cell = frame.cell_index(x.members().front());
    if (!x.subset_of(frame.cells()[cell])) fail(source, where, "generator spans several cells", ErrorCode::InvalidModel);
    gens[cell].push_back(x);
  }
  return located(source, "/generators", [&] { return NeighborhoodModel(frame, gens); });
}

}  // namespace

AnyModel load_model(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, "/", "expected an object");
  const json& kind = field(doc, "kind", source);
  if (kind == "probability") return probability_from(doc, source);
  if (kind == "neighborhood") return neighborhood_from(doc, source);
  fail(source, "/kind", "expected \"probability\" or \"neighborhood\"");
}

ProbabilityModel load_probability_model(std::string_view text, const std::string& source) {
  AnyModel m = load_model(text, source);
  if (auto* p = std::get_if<ProbabilityModel>(&m)) return *p;
  fail(source, "/kind", "expected a probability model");
}

NeighborhoodModel load_neighborhood_model(std::string_view text, const std::string& source) {
  AnyModel m = load_model(text, source);
  if (auto* n = std::get_if<NeighborhoodModel>(&m)) return *n;
  fail(source, "/kind", "expected a neighborhood model");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyModel load_model_file(const std::string& path) { return load_model(read_file(path), path); }

std::string save_model(const ProbabilityModel& m) {
  json doc = frame_json(m.frame(), "probability");
  json w = json::object();
  for (int i = 0; i < m.frame().size(); ++i) w[m.frame().world_name(i)] = m.weight(i).fraction_str();
  doc["weights"] = w;
  return doc.dump(2) + "\n";
}

std::string save_model(const NeighborhoodModel& m) {
  json doc = frame_json(m.frame(), "neighborhood");
  json g = json::array();
  for (const auto& cell : m.generators()) {
    for (const auto& x : cell) g.push_back(m.frame().names_of(x));
  }
  doc["generators"] = g;
  return doc.dump(2) + "\n";
}

ComparativeRelation parse_comparative(std::string_view text, const std::vector<std::string>& worlds) {
  ComparativeRelation rel;
  rel.worlds = worlds;
  const int n = static_cast<int>(worlds.size());
  auto index_of = [&](const std::string& w, int lineno) {
    for (int i = 0; i < n; ++i) {
      if (worlds[i] == w) return i;
    }
    throw Error(ErrorCode::UnknownWorld, "line " + std::to_string(lineno) + ": unknown world " + w);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string spaced;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '<' && i + 1 < line.size() && line[i + 1] == '=') {
        spaced += " <= ";
        ++i;
      } else if (line[i] == '<' || line[i] == '=') {
        spaced += std::string(" ") + line[i] + " ";
      } else {
        spaced += line[i];
      }
    }
    std::istringstream toks(spaced);
    std::vector<std::string> words;
    std::string t;
    while (toks >> t) words.push_back(t);
    if (words.empty() || words[0][0] == '#') continue;
    ComparativeStatement st{EventSet::empty(n), Comparison::Less, EventSet::empty(n)};
    int side = 0;
    bool have_rel = false;
    for (const auto& word : words) {
      if (word == "<" || word == "<=" || word == "=") {
        if (have_rel) throw SyntaxError(0, {"world"}, "line " + std::to_string(lineno) + ": " + line);
        have_rel = true;
        st.rel = word == "<" ? Comparison::Less : (word == "<=" ? Comparison::LessEq : Comparison::Equiv);
        side = 1;
      } else if (word != "{}") {
        EventSet& target = side == 0 ? st.x : st.y;
        target = target.with(index_of(word, lineno));
      }
    }
    if (!have_rel) throw SyntaxError(0, {"'<'", "'<='", "'='"}, "line " + std::to_string(lineno) + ": " + line);
    rel.statements.push_back(st);
  }
  return rel;
}

}  // namespace betlogic
