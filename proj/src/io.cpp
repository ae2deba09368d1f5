#include "pmskit/io.hpp"

#include <fstream>
#include <sstream>

namespace pmskit::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Point point_of(const ProbSpace& s, const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a point label");
  try {
    return s.index_of(j.get<std::string>());
  } catch (const DomainError&) {
    fail(path, "unknown point \"" + j.get<std::string>() + "\"");
  }
}

Point point_of(const ProbSpace& s, const std::string& label, const std::string& path) {
  return point_of(s, Json(label), path);
}

// "p|q" where both halves are labels; labels may themselves contain '|'.
std::pair<Point, Point> split_key(const ProbSpace& s, const std::string& key, const std::string& path) {
  for (std::size_t cut = key.find('|'); cut != std::string::npos; cut = key.find('|', cut + 1)) {
    try {
      return {s.index_of(key.substr(0, cut)), s.index_of(key.substr(cut + 1))};
    } catch (const DomainError&) {
    }
  }
  fail(path, "metric key \"" + key + "\" is not of the form \"p|q\" over known points");
}

}  // namespace

Json encode(const Rational& r) { return to_string(r); }

Json encode(const DistFn& f) {
  Json out = Json::array();
  for (const Jump& j : f.jumps()) out.push_back(Json::array({encode(j.time), encode(j.level)}));
  return out;
}

Json encode(const Report& r) {
  Json out;
  out["passed"] = r.passed();
  out["violations"] = Json::array();
  for (const Violation& v : r.violations) {
    Json e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    if (v.lhs) e["lhs"] = encode(*v.lhs);
    if (v.rhs) e["rhs"] = encode(*v.rhs);
    out["violations"].push_back(std::move(e));
  }
  return out;
}

Json encode_map(const ProbSpace& s, const LipMap& f) {
  Json values = Json::object();
  for (Point p = 0; p < s.size(); ++p) values[s.label(p)] = encode(f(p));
  return values;
}

Json encode(const ProbSpace& s, const ProbGroup* group) {
  Json out;
  out["points"] = s.points();
  out["tf"] = tag_of(s.tf());
  Json metric = Json::object();
  const DistFn h0 = heaviside(0);
  for (Point p = 0; p < s.size(); ++p) {
    if (s.d(p, p) != h0) metric[s.label(p) + "|" + s.label(p)] = encode(s.d(p, p));
    for (Point q = p + 1; q < s.size(); ++q) {
      metric[s.label(p) + "|" + s.label(q)] = encode(s.d(p, q));
      if (s.d(q, p) != s.d(p, q)) metric[s.label(q) + "|" + s.label(p)] = encode(s.d(q, p));
    }
  }
  out["metric"] = std::move(metric);
  if (group != nullptr) out["group"] = encode(*group)["group"];
  return out;
}

Json encode(const ProbGroup& g) {
  const ProbSpace& s = g.space();
  Json table = Json::array();
  for (Point p = 0; p < g.size(); ++p) {
    Json row = Json::array();
    for (Point q = 0; q < g.size(); ++q) row.push_back(s.label(g.op(p, q)));
    table.push_back(std::move(row));
  }
  Json out = encode(s);
  out["group"] = {{"table", std::move(table)}, {"identity", s.label(g.identity())}};
  return out;
}

Json encode(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso) {
  Json forward = Json::object();
  for (Point p = 0; p < iso.forward.size(); ++p) forward[a.space().label(p)] = b.space().label(iso.forward[p]);
  return Json{{"forward", std::move(forward)}};
}

Rational decode_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational as \"p/q\" string or integer");
}

DistFn decode_dist_fn(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [t, v] pairs");
  std::vector<Jump> jumps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = path + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) fail(at, "expected a [t, v] pair");
    jumps.push_back(Jump{decode_rational(j[k][0], at + "[0]"), decode_rational(j[k][1], at + "[1]")});
  }
  try {
    return DistFn(std::move(jumps));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

SpaceFile decode_space(const Json& j, const std::string& path) {
  const Json& pts = field(j, "points", path);
  if (!pts.is_array() || pts.empty()) fail(path + ".points", "expected a nonempty array of labels");
  std::vector<std::string> points;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!pts[k].is_string()) fail(path + ".points[" + std::to_string(k) + "]", "expected a string label");
    points.push_back(pts[k].get<std::string>());
  }
  const Json& tfj = field(j, "tf", path);
  if (!tfj.is_string()) fail(path + ".tf", "expected a triangle function tag");
  TriangleFn tf;
  try {
    tf = triangle_from_tag(tfj.get<std::string>());
  } catch (const DomainError& e) {
    fail(path + ".tf", e.what());
  }
  const std::size_t n = points.size();
  ProbSpace shape;
  try {
    shape = ProbSpace(points, std::vector<DistFn>(n * n), tf);
  } catch (const DomainError& e) {
    fail(path + ".points", e.what());
  }

  const Json& metric = field(j, "metric", path);
  if (!metric.is_object()) fail(path + ".metric", "expected an object keyed by \"p|q\"");
  std::vector<std::optional<DistFn>> given(n * n);
  for (const auto& [key, value] : metric.items()) {
    const std::string at = path + ".metric[\"" + key + "\"]";
    const auto [p, q] = split_key(shape, key, at);
    if (given[p * n + q]) fail(at, "duplicate entry");
    given[p * n + q] = decode_dist_fn(value, at);
  }
  std::vector<DistFn> d(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      if (given[p * n + q]) {
        d[p * n + q] = *given[p * n + q];
      } else if (given[q * n + p]) {
        d[p * n + q] = *given[q * n + p];
      } else if (p == q) {
        d[p * n + q] = heaviside(0);
      } else {
        fail(path + ".metric", "no entry for \"" + points[p] + "|" + points[q] + "\"");
      }
    }
  }
  SpaceFile out{ProbSpace(std::move(points), std::move(d), tf), std::nullopt};

  if (const auto it = j.find("group"); it != j.end()) {
    const std::string gpath = path + ".group";
    const Json& table = field(*it, "table", gpath);
    if (!table.is_array() || table.size() != n) fail(gpath + ".table", "expected " + std::to_string(n) + " rows");
    std::vector<Point> op(n * n);
    for (Point p = 0; p < n; ++p) {
      const std::string rpath = gpath + ".table[" + std::to_string(p) + "]";
      if (!table[p].is_array() || table[p].size() != n) fail(rpath, "expected " + std::to_string(n) + " entries");
      for (Point q = 0; q < n; ++q) op[p * n + q] = point_of(out.space, table[p][q], rpath + "[" + std::to_string(q) + "]");
    }
    const Point e = point_of(out.space, field(*it, "identity", gpath), gpath + ".identity");
    out.group = ProbGroup(out.space, std::move(op), e);
  }
  return out;
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(source + ": " + e.what());
  }
}

Json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), file.string());
}

namespace {

SpaceFile validated(SpaceFile f, const std::string& source) {
  Report r = validate_space(f.space);
  if (f.group) r.merge(validate_invariant_group(*f.group));
  if (!r.passed()) throw AxiomError(source + ": fails " + r.violations.front().axiom, r);
  return f;
}

}  // namespace

SpaceFile parse_space(std::string_view text) { return validated(decode_space(parse_json(text, "<input>")), "<input>"); }

SpaceFile load_space(const std::filesystem::path& file) {
  return validated(decode_space(load_json(file), file.string()), file.string());
}

PartialMap decode_values(const Json& values, const ProbSpace& s, const std::string& path) {
  if (!values.is_object()) fail(path, "expected an object keyed by point label");
  PartialMap out;
  for (const auto& [key, value] : values.items()) {
    const std::string at = path + "[\"" + key + "\"]";
    const Point p = point_of(s, key, at);
    if (out.contains(p)) fail(at, "duplicate entry");
    out.emplace(p, decode_dist_fn(value, at));
  }
  return out;
}

LipMap decode_total_map(const Json& values, const ProbSpace& s, const std::string& path) {
  PartialMap partial = decode_values(values, s, path);
  LipMap out;
  for (Point p = 0; p < s.size(); ++p) {
    auto it = partial.find(p);
    if (it == partial.end()) fail(path, "no value for point \"" + s.label(p) + "\"");
    out.values.push_back(std::move(it->second));
  }
  return out;
}

MapFile load_map_file(const std::filesystem::path& file) {
  const Json j = load_json(file);
  const std::string source = file.string();
  MapFile out;
  out.values = field(j, "values", source);
  if (const auto it = j.find("space"); it != j.end()) {
    if (it->is_string()) {
      std::filesystem::path ref = it->get<std::string>();
      if (ref.is_relative()) ref = file.parent_path() / ref;
      out.space = load_space(ref);
    } else {
      out.space = validated(decode_space(*it, source + ".space"), source + ".space");
    }
  }
  return out;
}

IsoWitness decode_iso(const Json& j, const ProbGroup& a, const ProbGroup& b) {
  const Json& fwd = field(j, "forward", "$");
  if (!fwd.is_object()) fail("$.forward", "expected an object");
  std::vector<Point> forward(a.size(), npos);
  for (const auto& [key, value] : fwd.items()) {
    const std::string at = "$.forward[\"" + key + "\"]";
    const Point p = point_of(a.space(), key, at);
    if (forward[p] != npos) fail(at, "duplicate entry");
    forward[p] = point_of(b.space(), value, at);
  }
  for (Point p = 0; p < forward.size(); ++p) {
    if (forward[p] == npos) fail("$.forward", "no image for \"" + a.space().label(p) + "\"");
  }
  IsoWitness iso;
  iso.forward = forward;
  iso.backward.assign(b.size(), npos);
  for (Point p = 0; p < forward.size(); ++p) {
    if (iso.backward[forward[p]] == npos) iso.backward[forward[p]] = p;
  }
  return iso;
}

MonoidIsoOracle decode_phi_table(const Json& j, const ProbGroup& a, const ProbGroup& b) {
  const Json& images = field(j, "delta_images", "$");
  if (!images.is_object()) fail("$.delta_images", "expected an object keyed by point label");
  std::vector<std::optional<LipMap>> table(a.size());
  for (const auto& [key, value] : images.items()) {
    const std::string at = "$.delta_images[\"" + key + "\"]";
    const Point p = point_of(a.space(), key, at);
    if (table[p]) fail(at, "duplicate entry");
    table[p] = decode_total_map(value, b.space(), at);
  }
  std::vector<std::pair<LipMap, LipMap>> known;
  for (Point p = 0; p < a.size(); ++p) {
    if (!table[p]) fail("$.delta_images", "no image for \"" + a.space().label(p) + "\"");
    known.emplace_back(delta_embed(a.space(), p), std::move(*table[p]));
  }
  return [known = std::move(known)](const LipMap& f) {
    for (const auto& [arg, image] : known) {
      if (arg == f) return image;
    }
    throw DomainError("phi table has no entry for this map");
  };
}

Json encode_phi_table(const ProbGroup& a, const ProbGroup& b, const MonoidIsoOracle& phi) {
  Json images = Json::object();
  for (Point p = 0; p < a.size(); ++p) images[a.space().label(p)] = encode_map(b.space(), phi(delta_embed(a.space(), p)));
  return Json{{"delta_images", std::move(images)}};
}

}  // namespace pmskit::io
