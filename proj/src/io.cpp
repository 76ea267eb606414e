#include "bolloop/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bolloop/error.hpp"

namespace bolloop {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

std::size_t size_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Json permutation_to_json(const Permutation& p) {
  Json out = Json::array();
  for (Point x : p.images()) out.push_back(x);
  return out;
}

Permutation permutation_from_json(const Json& value, std::size_t degree) {
  try {
    if (value.is_string()) return Permutation::from_cycles(value.get<std::string>(), degree);
    if (!value.is_array()) malformed("permutation must be an image array or a cycle string");
    std::vector<Point> images;
    images.reserve(value.size());
    for (const auto& x : value) {
      if (!x.is_number_unsigned()) malformed("permutation images must be nonnegative integers");
      images.push_back(x.get<Point>());
    }
    if (images.size() != degree) {
      malformed("permutation has " + std::to_string(images.size()) + " images, expected " +
                std::to_string(degree));
    }
    return Permutation(std::move(images));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput) throw;
    malformed(e.what());
  }
}

Json group_to_json(const FiniteGroup& group) {
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(permutation_to_json(g));
  return Json{{"degree", group.degree()}, {"generators", std::move(gens)}};
}

FiniteGroup group_from_json(const Json& value) {
  const std::size_t degree = size_field(value, "degree");
  if (degree == 0) malformed("degree must be positive");
  const Json& list = field(value, "generators");
  if (!list.is_array()) malformed("'generators' must be an array");
  std::vector<Permutation> gens;
  for (const auto& g : list) gens.push_back(permutation_from_json(g, degree));
  return from_generators(gens, degree).materialize();
}

Json triple_to_json(const ExactFactorizationTriple& triple, const std::vector<PairElement>* section) {
  Json out{{"X", group_to_json(triple.group())},
           {"Y0", group_to_json(triple.factor0())},
           {"Y1", group_to_json(triple.factor1())},
           {"faithful", triple.faithful()}};
  if (section != nullptr) {
    Json s = Json::array();
    for (const auto& [a, b] : *section) {
      s.push_back(Json::array({permutation_to_json(a), permutation_to_json(b)}));
    }
    out["S"] = std::move(s);
  }
  return out;
}

TripleFile triple_from_json(const Json& value) {
  bool faithful = true;
  if (value.is_object() && value.contains("faithful")) {
    if (!value["faithful"].is_boolean()) malformed("'faithful' must be a boolean");
    faithful = value["faithful"].get<bool>();
  }
  FiniteGroup x = group_from_json(field(value, "X"));
  FiniteGroup y0 = group_from_json(field(value, "Y0"));
  FiniteGroup y1 = group_from_json(field(value, "Y1"));
  const std::size_t degree = x.degree();
  TripleFile out{validate(std::move(x), std::move(y0), std::move(y1), !faithful), std::nullopt};
  if (value.contains("S")) {
    const Json& list = value["S"];
    if (!list.is_array()) malformed("'S' must be an array of pairs");
    std::vector<PairElement> section;
    for (const auto& pair : list) {
      if (!pair.is_array() || pair.size() != 2) malformed("'S' entries must be pairs");
      section.push_back({permutation_from_json(pair[0], degree), permutation_from_json(pair[1], degree)});
    }
    out.section = std::move(section);
  }
  return out;
}

std::string loop_to_json_text(const CayleyLoop& loop, const Json& meta) {
  const std::size_t n = loop.order();
  std::string out = "{\n";
  out += "  \"order\": " + std::to_string(n) + ",\n";
  out += "  \"identity\": 0,\n";
  Json labels = Json::array();
  for (const auto& l : loop.labels()) labels.push_back(l);
  out += "  \"labels\": " + labels.dump() + ",\n";
  out += "  \"meta\": " + (meta.is_null() ? Json::object() : meta).dump() + ",\n";
  out += "  \"table\": [\n";
  char buf[16];
  for (std::size_t x = 0; x < n; ++x) {
    out += "    [";
    const auto row = loop.row(static_cast<Element>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (y > 0) out += ',';
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row[y]);
      out.append(buf, end);
    }
    out += x + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

LoopFile loop_from_json(const Json& value) {
  const std::size_t n = size_field(value, "order");
  if (n == 0) malformed("order must be positive");
  if (value.contains("identity") && value["identity"] != 0) malformed("identity must be 0");
  const Json& rows = field(value, "table");
  if (!rows.is_array() || rows.size() != n) malformed("table must have 'order' rows");
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("table rows must have 'order' entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n) malformed("table entry out of range");
      table.push_back(v.get<Element>());
    }
  }
  std::vector<std::string> labels;
  if (value.contains("labels")) {
    const Json& l = value["labels"];
    if (!l.is_array() || (!l.empty() && l.size() != n)) malformed("labels must have 'order' strings");
    for (const auto& s : l) {
      if (!s.is_string()) malformed("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  Json meta = value.contains("meta") ? value["meta"] : Json::object();
  return {CayleyLoop(n, std::move(table), std::move(labels)), std::move(meta)};
}

std::string loop_to_csv(const CayleyLoop& loop) {
  const std::size_t n = loop.order();
  std::string out;
  char buf[16];
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = loop.row(static_cast<Element>(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (y > 0) out += ',';
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row[y] + 1);
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

CayleyLoop loop_from_csv(std::string_view text) {
  std::vector<std::vector<Element>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<Element> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = std::min(line.find(',', start), line.size());
      Element v = 0;
      const char* first = line.data() + start;
      const char* last = line.data() + comma;
      auto [end, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || end != last || v == 0) malformed("CSV entries must be positive integers");
      row.push_back(v - 1);
      if (comma == line.size()) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) malformed("empty CSV table");
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) malformed("CSV table is not square");
    for (Element v : row) {
      if (v >= n) malformed("CSV entry out of range");
      table.push_back(v);
    }
  }
  return CayleyLoop(n, std::move(table));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
}

}  // namespace bolloop
