#include "hopfpi/structure_file.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace hopfpi {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void shape_fail(const std::string& ctx, const std::string& msg) {
  throw ShapeError(ctx + ": " + msg);
}

[[noreturn]] void ref_fail(const std::string& ctx, const std::string& msg) {
  throw ReferenceError(ctx + ": " + msg);
}

const Json& need(const Json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) shape_fail(ctx, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) shape_fail(ctx, std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed,
                    const std::string& ctx) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) shape_fail(ctx, "unknown key \"" + it.key() + "\"");
  }
}

std::int64_t json_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    shape_fail(ctx, "expected an integer");
  }
  return j.get<std::int64_t>();
}

Scalar json_scalar(const Json& j, FieldSpec f, const std::string& ctx) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return Scalar(f, j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const std::exception& e) {
      shape_fail(ctx, e.what());
    }
  }
  shape_fail(ctx, "scalars are integers or fraction strings");
}

}  // namespace

Matrix matrix_from_json(const Json& j, FieldSpec f, int rows, int cols, const std::string& ctx) {
  if (!j.is_array()) shape_fail(ctx, "expected a matrix (array of rows)");
  const int got_rows = static_cast<int>(j.size());
  if (rows >= 0 && got_rows != rows) {
    shape_fail(ctx, "expected " + std::to_string(rows) + " rows, found " +
                        std::to_string(got_rows));
  }
  int got_cols = cols;
  for (int i = 0; i < got_rows; ++i) {
    if (!j[i].is_array()) shape_fail(ctx, "row " + std::to_string(i) + " is not an array");
    const int len = static_cast<int>(j[i].size());
    if (got_cols < 0) {
      got_cols = len;
    } else if (len != got_cols) {
      shape_fail(ctx, "row " + std::to_string(i) + " has " + std::to_string(len) +
                          " entries, expected " + std::to_string(got_cols));
    }
  }
  if (got_cols < 0) got_cols = 0;  // no rows to infer from
  Matrix m(f, got_rows, got_cols);
  for (int i = 0; i < got_rows; ++i) {
    for (int k = 0; k < got_cols; ++k) {
      m.set(i, k, json_scalar(j[i][k], f,
                              ctx + " entry (" + std::to_string(i) + "," + std::to_string(k) + ")"));
    }
  }
  return m;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Scalar s = m.at(i, j);
      if (s.field().is_prime()) {
        row.push_back(s.residue());
      } else if (s.rat().get_den() == 1 && s.rat().get_num().fits_slong_p()) {
        row.push_back(static_cast<std::int64_t>(s.rat().get_num().get_si()));
      } else {
        row.push_back(s.str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string json_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) shape_fail(ctx, "expected a string");
  return j.get<std::string>();
}

FieldSpec parse_field(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "rationals" || s == "Q") return FieldSpec::rationals();
    shape_fail("field", "unknown field \"" + s + "\"");
  }
  if (j.is_object()) {
    reject_unknown(j, {"prime"}, "field");
    try {
      return FieldSpec::prime_field(json_int(need(j, "prime", "field"), "field prime"));
    } catch (const std::invalid_argument& e) {
      shape_fail("field", e.what());
    }
  }
  shape_fail("field", "expected \"rationals\" or {\"prime\": p}");
}

FieldSpec field_from_env() {
  const char* env = std::getenv("HOPFPI_FIELD");
  if (!env || !*env) return FieldSpec::rationals();
  const std::string s(env);
  if (s == "rationals" || s == "Q") return FieldSpec::rationals();
  try {
    return FieldSpec::prime_field(std::stoll(s));
  } catch (const std::exception&) {
    shape_fail("field", "HOPFPI_FIELD must be \"rationals\" or a prime, got \"" + s + "\"");
  }
}

GroupPtr parse_group(const Json& j) {
  reject_unknown(j, {"elements", "table"}, "group");
  const Json& je = need(j, "elements", "group");
  if (!je.is_array() || je.empty()) shape_fail("group", "elements must be a nonempty array");
  std::vector<std::string> elements;
  for (const Json& e : je) {
    if (!e.is_string()) shape_fail("group", "element names must be strings");
    const std::string name = e.get<std::string>();
    if (name.empty() || name.find(',') != std::string::npos) {
      shape_fail("group", "element names must be nonempty and comma-free");
    }
    elements.push_back(name);
  }

  const Json& jt = need(j, "table", "group");
  const int n = static_cast<int>(elements.size());
  if (!jt.is_array() || static_cast<int>(jt.size()) != n) {
    shape_fail("group", "table must have one row per element");
  }
  std::vector<std::vector<int>> table(n);
  for (int a = 0; a < n; ++a) {
    if (!jt[a].is_array() || static_cast<int>(jt[a].size()) != n) {
      shape_fail("group", "table row " + std::to_string(a) + " must have one entry per element");
    }
    for (int b = 0; b < n; ++b) {
      if (!jt[a][b].is_string()) shape_fail("group", "table entries are element names");
      const std::string name = jt[a][b].get<std::string>();
      int idx = -1;
      for (int k = 0; k < n; ++k) {
        if (elements[k] == name) idx = k;
      }
      if (idx < 0) shape_fail("group", "table names unknown element \"" + name + "\"");
      table[a].push_back(idx);
    }
  }
  try {
    return std::make_shared<const GroupTable>(std::move(elements), std::move(table));
  } catch (const std::invalid_argument& e) {
    shape_fail("group", e.what());
  }
}

/// Keys "a,b" over all ordered pairs, stored at index a*order+b.
std::vector<Matrix> parse_delta(const Json& j, const GroupTable& g, FieldSpec f,
                                const std::vector<int>& dims, const std::string& ctx) {
  if (!j.is_object()) shape_fail(ctx, "expected an object keyed by element pairs");
  const int n = g.order();
  std::vector<Matrix> delta;
  delta.reserve(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::string key = g.name(a) + "," + g.name(b);
      auto it = j.find(key);
      if (it == j.end()) shape_fail(ctx, "missing pair \"" + key + "\"");
      delta.push_back(matrix_from_json(*it, f, dims[a] * dims[b], dims[g.mul(a, b)],
                                  ctx + " at \"" + key + "\""));
    }
  }
  if (static_cast<int>(j.size()) != n * n) shape_fail(ctx, "extra pair keys present");
  return delta;
}

std::vector<int> parse_dims(const Json& j, const GroupTable& g, const std::string& ctx) {
  if (!j.is_object()) shape_fail(ctx, "expected an object keyed by group elements");
  std::vector<int> dims;
  for (int a = 0; a < g.order(); ++a) {
    auto it = j.find(g.name(a));
    if (it == j.end()) shape_fail(ctx, "missing dimension for element \"" + g.name(a) + "\"");
    const std::int64_t d = json_int(*it, ctx + " of \"" + g.name(a) + "\"");
    if (d < 0) shape_fail(ctx, "dimensions are nonnegative");
    dims.push_back(static_cast<int>(d));
  }
  if (static_cast<int>(j.size()) != g.order()) shape_fail(ctx, "extra element keys present");
  return dims;
}

/// Callers restrict the key set; a Hopf entry shares this object with its
/// algebra families.
PiCoalgebra parse_coalgebra(const Json& j, GroupPtr group, FieldSpec f, const std::string& ctx) {
  PiCoalgebra c;
  c.group = group;
  c.field = f;
  c.dims = parse_dims(need(j, "dims", ctx), *group, ctx + " dims");
  c.delta = parse_delta(need(j, "delta", ctx), *group, f, c.dims, ctx + " delta");
  c.counit = matrix_from_json(need(j, "counit", ctx), f, 1, c.dims[0], ctx + " counit");
  return c;
}

/// Family keyed by element names, each with a caller-supplied shape.
template <typename ShapeFn>
MatrixFamily parse_family(const Json& j, const GroupTable& g, FieldSpec f, ShapeFn&& shape,
                          const std::string& ctx) {
  if (!j.is_object()) shape_fail(ctx, "expected an object keyed by group elements");
  MatrixFamily out;
  for (int a = 0; a < g.order(); ++a) {
    auto it = j.find(g.name(a));
    if (it == j.end()) shape_fail(ctx, "missing element \"" + g.name(a) + "\"");
    const auto [rows, cols] = shape(a);
    out.push_back(matrix_from_json(*it, f, rows, cols, ctx + " at \"" + g.name(a) + "\""));
  }
  if (static_cast<int>(j.size()) != g.order()) shape_fail(ctx, "extra element keys present");
  return out;
}

HopfPiCoalgebra parse_hopf(const Json& j, GroupPtr group, FieldSpec f, const std::string& ctx) {
  reject_unknown(j, {"dims", "delta", "counit", "mul", "unit", "antipode"}, ctx);
  HopfPiCoalgebra h;
  h.coalg = parse_coalgebra(j, group, f, ctx);
  const GroupTable& g = *group;
  const auto& d = h.coalg.dims;
  h.mul = parse_family(need(j, "mul", ctx), g, f,
                       [&](int a) { return std::pair(d[a], d[a] * d[a]); }, ctx + " mul");
  h.unit = parse_family(need(j, "unit", ctx), g, f, [&](int a) { return std::pair(d[a], 1); },
                        ctx + " unit");
  h.antipode = parse_family(need(j, "antipode", ctx), g, f,
                            [&](int a) { return std::pair(d[g.inv(a)], d[a]); }, ctx + " antipode");
  return h;
}

Json family_json(const MatrixFamily& fam, const GroupTable& g) {
  Json obj = Json::object();
  for (int a = 0; a < g.order(); ++a) obj[g.name(a)] = matrix_json(fam[a]);
  return obj;
}

Json dims_json(const std::vector<int>& dims, const GroupTable& g) {
  Json obj = Json::object();
  for (int a = 0; a < g.order(); ++a) obj[g.name(a)] = dims[a];
  return obj;
}

Json delta_json(const std::vector<Matrix>& delta, const GroupTable& g) {
  Json obj = Json::object();
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      obj[g.name(a) + "," + g.name(b)] = matrix_json(delta[a * n + b]);
    }
  }
  return obj;
}

Json coalgebra_json(const PiCoalgebra& c) {
  Json obj = Json::object();
  obj["dims"] = dims_json(c.dims, *c.group);
  obj["delta"] = delta_json(c.delta, *c.group);
  obj["counit"] = matrix_json(c.counit);
  return obj;
}

Json hopf_json(const HopfPiCoalgebra& h) {
  Json obj = coalgebra_json(h.coalg);
  obj["mul"] = family_json(h.mul, *h.coalg.group);
  obj["unit"] = family_json(h.unit, *h.coalg.group);
  obj["antipode"] = family_json(h.antipode, *h.coalg.group);
  return obj;
}

}  // namespace

StructureFile load_structure_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  reject_unknown(doc,
                 {"field", "group", "hopf", "pairs", "comodules", "coideals", "sections",
                  "cosections"},
                 "document");

  StructureFile s;
  s.field = doc.contains("field") ? parse_field(doc["field"]) : field_from_env();
  s.group = parse_group(need(doc, "group", "document"));
  const GroupTable& g = *s.group;
  const FieldSpec f = s.field;

  if (doc.contains("hopf")) {
    if (!doc["hopf"].is_object()) shape_fail("hopf", "expected an object of named entries");
    for (auto it = doc["hopf"].begin(); it != doc["hopf"].end(); ++it) {
      s.hopfs.emplace(it.key(), parse_hopf(it.value(), s.group, f, "hopf " + it.key()));
    }
  }

  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_object()) shape_fail("pairs", "expected an object of named entries");
    for (auto it = doc["pairs"].begin(); it != doc["pairs"].end(); ++it) {
      const std::string ctx = "pair " + it.key();
      const Json& j = it.value();
      reject_unknown(j, {"hopf", "quotient", "sigma", "action"}, ctx);
      StructureFile::PairEntry entry;
      entry.hopf = json_string(need(j, "hopf", ctx), ctx + " hopf");
      auto hit = s.hopfs.find(entry.hopf);
      if (hit == s.hopfs.end()) ref_fail(ctx, "unknown hopf \"" + entry.hopf + "\"");
      const auto& hd = hit->second.coalg.dims;

      const Json& q = need(j, "quotient", ctx);
      if (q.is_string()) {
        entry.quotient = q.get<std::string>();
        auto qit = s.hopfs.find(entry.quotient);
        if (qit == s.hopfs.end()) ref_fail(ctx, "unknown hopf \"" + entry.quotient + "\"");
        entry.pair.c = qit->second.coalg;
      } else {
        reject_unknown(q, {"dims", "delta", "counit"}, ctx + " quotient");
        entry.pair.c = parse_coalgebra(q, s.group, f, ctx + " quotient");
      }
      const auto& cd = entry.pair.c.dims;
      entry.pair.sigma = parse_family(need(j, "sigma", ctx), g, f,
                                      [&](int a) { return std::pair(cd[a], hd[a]); },
                                      ctx + " sigma");
      if (j.contains("action")) {
        entry.pair.omega = parse_family(j["action"], g, f,
                                        [&](int a) { return std::pair(cd[a], hd[a] * cd[a]); },
                                        ctx + " action");
      }
      s.pairs.emplace(it.key(), std::move(entry));
    }
  }

  if (doc.contains("comodules")) {
    if (!doc["comodules"].is_object()) shape_fail("comodules", "expected an object of named entries");
    for (auto it = doc["comodules"].begin(); it != doc["comodules"].end(); ++it) {
      const std::string ctx = "comodule " + it.key();
      const Json& j = it.value();
      reject_unknown(j, {"pair", "matrix"}, ctx);
      StructureFile::ComoduleEntry entry;
      entry.pair = json_string(need(j, "pair", ctx), ctx + " pair");
      auto pit = s.pairs.find(entry.pair);
      if (pit == s.pairs.end()) ref_fail(ctx, "unknown pair \"" + entry.pair + "\"");
      entry.matrix = matrix_from_json(need(j, "matrix", ctx), f, -1, -1, ctx + " matrix");
      const int dc1 = pit->second.pair.c.dims[0];
      if (entry.matrix.rows() != entry.matrix.cols() * dc1) {
        shape_fail(ctx, "matrix must be (dV * " + std::to_string(dc1) + ") x dV");
      }
      s.comodules.emplace(it.key(), std::move(entry));
    }
  }

  if (doc.contains("coideals")) {
    if (!doc["coideals"].is_object()) shape_fail("coideals", "expected an object of named entries");
    for (auto it = doc["coideals"].begin(); it != doc["coideals"].end(); ++it) {
      const std::string ctx = "coideal " + it.key();
      const Json& j = it.value();
      reject_unknown(j, {"hopf", "spans"}, ctx);
      StructureFile::CoidealEntry entry;
      entry.hopf = json_string(need(j, "hopf", ctx), ctx + " hopf");
      auto hit = s.hopfs.find(entry.hopf);
      if (hit == s.hopfs.end()) ref_fail(ctx, "unknown hopf \"" + entry.hopf + "\"");
      const auto& hd = hit->second.coalg.dims;
      MatrixFamily spans = parse_family(need(j, "spans", ctx), g, f,
                                        [&](int a) { return std::pair(hd[a], -1); },
                                        ctx + " spans");
      for (Matrix& m : spans) entry.spans.push_back(Subspace::span_of_columns(m));
      s.coideals.emplace(it.key(), std::move(entry));
    }
  }

  if (doc.contains("sections")) {
    if (!doc["sections"].is_object()) shape_fail("sections", "expected an object of named entries");
    for (auto it = doc["sections"].begin(); it != doc["sections"].end(); ++it) {
      const std::string ctx = "section " + it.key();
      const Json& j = it.value();
      reject_unknown(j, {"pair", "g", "ginv"}, ctx);
      StructureFile::SectionEntry entry;
      entry.pair = json_string(need(j, "pair", ctx), ctx + " pair");
      auto pit = s.pairs.find(entry.pair);
      if (pit == s.pairs.end()) ref_fail(ctx, "unknown pair \"" + entry.pair + "\"");
      const auto& cd = pit->second.pair.c.dims;
      auto hit = s.hopfs.find(pit->second.hopf);
      const auto& hd = hit->second.coalg.dims;
      entry.family.g = parse_family(need(j, "g", ctx), g, f,
                                    [&](int a) { return std::pair(hd[a], cd[a]); }, ctx + " g");
      entry.family.ginv = parse_family(need(j, "ginv", ctx), g, f,
                                       [&](int a) { return std::pair(hd[a], cd[g.inv(a)]); },
                                       ctx + " ginv");
      s.sections.emplace(it.key(), std::move(entry));
    }
  }

  if (doc.contains("cosections")) {
    if (!doc["cosections"].is_object()) {
      shape_fail("cosections", "expected an object of named entries");
    }
    for (auto it = doc["cosections"].begin(); it != doc["cosections"].end(); ++it) {
      const std::string ctx = "cosection " + it.key();
      const Json& j = it.value();
      reject_unknown(j, {"hopf", "maps"}, ctx);
      StructureFile::CosectionEntry entry;
      entry.hopf = json_string(need(j, "hopf", ctx), ctx + " hopf");
      auto hit = s.hopfs.find(entry.hopf);
      if (hit == s.hopfs.end()) ref_fail(ctx, "unknown hopf \"" + entry.hopf + "\"");
      const auto& hd = hit->second.coalg.dims;
      entry.maps = parse_family(need(j, "maps", ctx), g, f,
                                [&](int a) { return std::pair(hd[a], hd[0]); }, ctx + " maps");
      s.cosections.emplace(it.key(), std::move(entry));
    }
  }

  return s;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_structure_text(buf.str());
}

std::string emit_structure(const StructureFile& s) {
  const GroupTable& g = *s.group;
  Json doc = Json::object();
  if (s.field.is_prime()) {
    doc["field"] = Json{{"prime", s.field.p}};
  } else {
    doc["field"] = "rationals";
  }

  Json group = Json::object();
  group["elements"] = g.elements();
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    table.push_back(std::move(row));
  }
  group["table"] = std::move(table);
  doc["group"] = std::move(group);

  if (!s.hopfs.empty()) {
    Json obj = Json::object();
    for (const auto& [name, h] : s.hopfs) obj[name] = hopf_json(h);
    doc["hopf"] = std::move(obj);
  }
  if (!s.pairs.empty()) {
    Json obj = Json::object();
    for (const auto& [name, e] : s.pairs) {
      Json entry = Json::object();
      entry["hopf"] = e.hopf;
      if (e.quotient.empty()) {
        entry["quotient"] = coalgebra_json(e.pair.c);
      } else {
        entry["quotient"] = e.quotient;
      }
      entry["sigma"] = family_json(e.pair.sigma, g);
      if (e.pair.omega) entry["action"] = family_json(*e.pair.omega, g);
      obj[name] = std::move(entry);
    }
    doc["pairs"] = std::move(obj);
  }
  if (!s.comodules.empty()) {
    Json obj = Json::object();
    for (const auto& [name, e] : s.comodules) {
      obj[name] = Json{{"pair", e.pair}, {"matrix", matrix_json(e.matrix)}};
    }
    doc["comodules"] = std::move(obj);
  }
  if (!s.coideals.empty()) {
    Json obj = Json::object();
    for (const auto& [name, e] : s.coideals) {
      Json spans = Json::object();
      for (int a = 0; a < g.order(); ++a) spans[g.name(a)] = matrix_json(e.spans[a].basis_columns());
      obj[name] = Json{{"hopf", e.hopf}, {"spans", std::move(spans)}};
    }
    doc["coideals"] = std::move(obj);
  }
  if (!s.sections.empty()) {
    Json obj = Json::object();
    for (const auto& [name, e] : s.sections) {
      obj[name] = Json{{"pair", e.pair},
                       {"g", family_json(e.family.g, g)},
                       {"ginv", family_json(e.family.ginv, g)}};
    }
    doc["sections"] = std::move(obj);
  }
  if (!s.cosections.empty()) {
    Json obj = Json::object();
    for (const auto& [name, e] : s.cosections) {
      obj[name] = Json{{"hopf", e.hopf}, {"maps", family_json(e.maps, g)}};
    }
    doc["cosections"] = std::move(obj);
  }

  return doc.dump(2) + "\n";
}

}  // namespace hopfpi
