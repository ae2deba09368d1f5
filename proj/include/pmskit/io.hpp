#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pmskit/lipschitz.hpp"
#include "pmskit/monoid.hpp"

namespace pmskit::io {

using Json = nlohmann::ordered_json;

// Malformed input: bad JSON, missing fields, unparsable rationals. The
// message names the offending field path (and line/column for JSON syntax).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json encode(const Rational& r);
Json encode(const DistFn& f);
Json encode(const Report& r);
Json encode_map(const ProbSpace& s, const LipMap& f);
Json encode(const ProbSpace& s, const ProbGroup* group = nullptr);
Json encode(const ProbGroup& g);
Json encode(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso);

Rational decode_rational(const Json& j, const std::string& path);
DistFn decode_dist_fn(const Json& j, const std::string& path = "$");

// Parsed space file. Metric keys "p|q" are unordered; a missing mirror entry
// copies the given one and the diagonal defaults to H_0.
struct SpaceFile {
  ProbSpace space;
  std::optional<ProbGroup> group;
};

// Structural decode only.
SpaceFile decode_space(const Json& j, const std::string& path = "$");
// Decode plus validate_space (and validate_invariant_group when a group is
// present). Throws SchemaError or AxiomError.
SpaceFile parse_space(std::string_view text);
SpaceFile load_space(const std::filesystem::path& file);

Json parse_json(std::string_view text, const std::string& source);
Json load_json(const std::filesystem::path& file);

// "values": { label: DistFn } over s. The total form requires every point.
PartialMap decode_values(const Json& values, const ProbSpace& s, const std::string& path);
LipMap decode_total_map(const Json& values, const ProbSpace& s, const std::string& path);

// Map file { "space": <path or inline>, "values": {...} }. "space" is
// optional; a relative path resolves against the map file's directory.
struct MapFile {
  std::optional<SpaceFile> space;
  Json values;
};
MapFile load_map_file(const std::filesystem::path& file);

// { "forward": { a: x, ... } }
IsoWitness decode_iso(const Json& j, const ProbGroup& a, const ProbGroup& b);

// { "delta_images": { a: { x: DistFn, ... }, ... } } read as a monoid map
// known on delta maps of `a`; evaluating it elsewhere throws.
MonoidIsoOracle decode_phi_table(const Json& j, const ProbGroup& a, const ProbGroup& b);
Json encode_phi_table(const ProbGroup& a, const ProbGroup& b, const MonoidIsoOracle& phi);

}  // namespace pmskit::io
