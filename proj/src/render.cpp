#include "mds/render.hpp"

#include <sstream>

#include "mds/errors.hpp"

namespace mds {

namespace {

Json rat(const Rational& q) { return q.str(); }

Json rat_list(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

Json int_list(std::span<const std::int64_t> v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json witness_json(const Witness& w) {
  Json o = Json::object();
  for (const auto& [k, v] : w) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, bool>) {
            o[k] = x;
          } else if constexpr (std::is_same_v<T, Rational>) {
            o[k] = rat(x);
          } else if constexpr (std::is_same_v<T, RatVec>) {
            o[k] = rat_list(x);
          } else {
            o[k] = x;
          }
        },
        v);
  }
  return o;
}

Witness witness_from(const Json& o) {
  Witness w;
  for (const auto& [k, v] : o.items()) {
    if (v.is_boolean()) {
      w.emplace_back(k, v.get<bool>());
    } else if (v.is_array()) {
      RatVec vec;
      for (const auto& e : v) vec.push_back(Rational::parse(e.get<std::string>()));
      w.emplace_back(k, std::move(vec));
    } else {
      const auto s = v.get<std::string>();
      try {
        w.emplace_back(k, Rational::parse(s));
      } catch (const ParseError&) {
        w.emplace_back(k, s);
      }
    }
  }
  return w;
}

std::string witness_text(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, RatVec>) {
          std::string s = "(";
          for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
          return s + ")";
        } else {
          return x;
        }
      },
      v);
}

std::string witness_line(const Witness& w) {
  std::string s;
  for (const auto& [k, v] : w) {
    if (!s.empty()) s += "; ";
    s += k + "=" + witness_text(v);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

RatVec rat_array(const Json& j, std::size_t len, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array() || a.size() != len) {
    throw ParseError(std::string("field '") + key + "' must be an array of " + std::to_string(len) + " rationals");
  }
  RatVec v;
  for (const auto& e : a) {
    if (e.is_number_integer()) {
      v.emplace_back(e.get<long>());
    } else if (e.is_string()) {
      v.push_back(Rational::parse(e.get<std::string>()));
    } else {
      throw ParseError(std::string("field '") + key + "' holds a non-rational entry " + e.dump());
    }
  }
  return v;
}

std::string join_ints(std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string relation_text(const Relation& r) {
  std::vector<std::int64_t> v{r.e, r.f};
  v.insert(v.end(), r.g.begin(), r.g.end());
  return "(" + join_ints(v) + ")";
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  throw ParseError("unknown format '" + std::string(s) + "'");
}

Json to_json(const CheckReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["subject"] = r.subject;
  j["branch"] = r.branch;
  j["verdict"] = to_string(r.verdict);
  Json shears = Json::array();
  for (const auto& s : r.normalization.shears) shears.push_back(to_string(s));
  j["normalization"] = {{"shears", shears}, {"m", to_string(r.normalization.m)},
                        {"m_factor", to_string(r.normalization.m_factor)}};
  j["values"] = witness_json(r.values);
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back({{"id", c.id}, {"holds", c.holds}, {"witness", witness_json(c.witness)}});
  }
  j["conditions"] = conds;
  j["notes"] = r.notes;
  Json rels = Json::array();
  for (const auto& sub : r.relations) {
    Json s = to_json(sub);
    s.erase("schema");
    rels.push_back(std::move(s));
  }
  j["relations"] = rels;
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.subject = field(j, "subject").get<std::string>();
  r.branch = field(j, "branch").get<std::string>();
  const auto v = field(j, "verdict").get<std::string>();
  if (v == "NotMDS") {
    r.verdict = Verdict::NotMDS;
  } else if (v == "Inconclusive") {
    r.verdict = Verdict::Inconclusive;
  } else {
    throw ParseError("unknown verdict '" + v + "'");
  }
  const Json& norm = field(j, "normalization");
  for (const auto& s : field(norm, "shears")) r.normalization.shears.push_back(parse_integer(s.get<std::string>()));
  r.normalization.m = parse_integer(field(norm, "m").get<std::string>());
  r.normalization.m_factor = parse_integer(field(norm, "m_factor").get<std::string>());
  r.values = witness_from(field(j, "values"));
  for (const auto& c : field(j, "conditions")) {
    r.conditions.push_back(
        {field(c, "id").get<std::string>(), field(c, "holds").get<bool>(), witness_from(field(c, "witness"))});
  }
  r.notes = field(j, "notes").get<std::vector<std::string>>();
  for (const auto& sub : field(j, "relations")) r.relations.push_back(report_from_json(sub));
  return r;
}

Json to_json(const Polygon4& p) {
  return {{"schema", kSchema},
          {"type", "polygon4"},
          {"p_left", rat_list({p.left().x, p.left().y})},
          {"p_right", rat_list({p.right().x, p.right().y})}};
}

Json to_json(const Polytope3& p) {
  return {{"schema", kSchema},
          {"type", "polytope3"},
          {"p_left", rat_list({p.left().x, p.left().y, p.left().z})},
          {"p_right", rat_list({p.right().x, p.right().y, p.right().z})}};
}

Json to_json(const TetraTuple& t) {
  return {{"schema", kSchema}, {"type", "tetra"}, {"tuple", rat_list({t.x_left, t.x_right, t.y0, t.z0})}};
}

Json to_json(const FanData& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) {
    Json a = Json::array();
    for (const auto& x : r) a.push_back(to_string(x));
    rays.push_back(a);
  }
  return {{"schema", kSchema}, {"rays", rays}, {"weights", int_list(f.weights.all())}, {"index", to_string(f.index)}};
}

Json to_json(const TableRow& r) {
  std::vector<std::int64_t> rel{r.relation.e, r.relation.f};
  rel.insert(rel.end(), r.relation.g.begin(), r.relation.g.end());
  return {{"weights", int_list(r.weights.all())}, {"relation", int_list(rel)}, {"d", r.relation.d}, {"n", r.n}};
}

Json to_json(const CampaignResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"kind", f.kind}, {"description", f.description}});
  return {{"schema", kSchema},
          {"passed_2d", r.passed_2d},
          {"failed_2d", r.failed_2d},
          {"passed_3d", r.passed_3d},
          {"failed_3d", r.failed_3d},
          {"ok", r.ok()},
          {"failures", failures}};
}

Polygon4 polygon_from_json(const Json& j) {
  if (j.contains("type") && j.at("type") != "polygon4") throw ParseError("expected type polygon4");
  const RatVec l = rat_array(j, 2, "p_left");
  const RatVec r = rat_array(j, 2, "p_right");
  return Polygon4({l[0], l[1]}, {r[0], r[1]});
}

TetraTuple tetra_from_json(const Json& j) {
  if (j.contains("type") && j.at("type") != "tetra") throw ParseError("expected type tetra");
  const RatVec v = rat_array(j, 4, "tuple");
  TetraTuple t{v[0], v[1], v[2], v[3]};
  t.validate();
  return t;
}

Polytope3 polytope_from_json(const Json& j) {
  if (j.contains("type") && j.at("type") == "tetra") return to_polytope(tetra_from_json(j));
  if (j.contains("type") && j.at("type") != "polytope3") throw ParseError("expected type polytope3 or tetra");
  const RatVec l = rat_array(j, 3, "p_left");
  const RatVec r = rat_array(j, 3, "p_right");
  return Polytope3({l[0], l[1], l[2]}, {r[0], r[1], r[2]});
}

std::string render(const CheckReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (f == Format::Csv) {
    out << "relation,id,holds,witness\n";
    auto rows = [&](const CheckReport& rep, const std::string& tag) {
      for (const auto& c : rep.conditions) {
        out << csv_field(tag) << ',' << c.id << ',' << (c.holds ? "true" : "false") << ','
            << csv_field(witness_line(c.witness)) << '\n';
      }
    };
    rows(r, "");
    for (std::size_t i = 0; i < r.relations.size(); ++i) {
      std::string tag;
      for (const auto& [k, v] : r.relations[i].values) {
        if (k == "relation") tag = witness_text(v);
      }
      rows(r.relations[i], tag);
    }
    return out.str();
  }
  out << "**" << r.subject << "** branch " << r.branch << ": **" << to_string(r.verdict) << "**\n\n";
  if (!r.values.empty()) out << witness_line(r.values) << "\n\n";
  auto table = [&](const CheckReport& rep) {
    out << "| condition | holds | witness |\n|---|---|---|\n";
    for (const auto& c : rep.conditions) {
      out << "| " << c.id << " | " << (c.holds ? "yes" : "no") << " | " << witness_line(c.witness) << " |\n";
    }
  };
  if (!r.conditions.empty()) table(r);
  for (const auto& sub : r.relations) {
    out << "\n" << witness_line(sub.values) << ": " << to_string(sub.verdict) << "\n\n";
    table(sub);
  }
  for (const auto& note : r.notes) out << "\nnote: " << note << "\n";
  return out.str();
}

std::string render(const std::vector<TableRow>& rows, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& r : rows) a.push_back(to_json(r));
      Json j = {{"schema", kSchema}, {"rows", a}};
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      out << "weights,relation,n\n";
      for (const auto& r : rows) {
        out << '"' << join_ints(r.weights.all()) << "\",\"" << relation_text(r.relation) << "\"," << r.n << '\n';
      }
      return out.str();
    case Format::Md:
      out << "| weights | relation | n |\n|---|---|---|\n";
      for (const auto& r : rows) {
        out << "| " << join_ints(r.weights.all()) << " | " << relation_text(r.relation) << " | " << r.n << " |\n";
      }
      return out.str();
  }
  return {};
}

RatVec parse_rational_list(std::string_view s) {
  RatVec out;
  for (const auto& tok : split(s)) out.push_back(Rational::parse(tok));
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split(s)) {
    const Integer v = parse_integer(tok);
    try {
      out.push_back(to_int64(v));
    } catch (const std::overflow_error&) {
      throw ParseError("integer out of range: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace mds
