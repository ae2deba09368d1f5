#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pmskit/groups.hpp"
#include "pmskit/io.hpp"
#include "support/helpers.hpp"

using namespace pmskit;
using io::Json;
using testutil::dist;
using testutil::H;

namespace {

const std::filesystem::path kData = PMSKIT_TEST_DATA;

std::string schema_message(const std::string& text) {
  try {
    io::parse_space(text);
  } catch (const io::SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rational and distribution encoding") {
  CHECK(io::encode(testutil::q("6/8")) == Json("3/4"));
  CHECK(io::decode_rational(Json("-2/4"), "$") == testutil::q("-1/2"));
  CHECK(io::decode_rational(Json(3), "$") == 3);
  CHECK_THROWS_AS(io::decode_rational(Json("1/0"), "$"), io::SchemaError);
  CHECK_THROWS_AS(io::decode_rational(Json(0.5), "$"), io::SchemaError);

  const DistFn f = dist({{"1/2", "1/3"}, {"2", "1"}});
  CHECK(io::encode(f).dump() == R"([["1/2","1/3"],["2","1"]])");
  CHECK(io::decode_dist_fn(io::encode(f)) == f);
  CHECK(io::decode_dist_fn(Json::array()) == heaviside_infinity());

  auto rng = testutil::rng(51);
  for (int k = 0; k < 50; ++k) {
    const DistFn g = random_dist_fn(rng);
    CHECK(io::decode_dist_fn(io::encode(g)) == g);
  }
}

TEST_CASE("malformed distributions name the failing path") {
  auto message = [](const char* text) {
    try {
      io::decode_dist_fn(Json::parse(text), "$.f");
    } catch (const io::SchemaError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"t": 1})").find("$.f") == 0);
  CHECK(message(R"([["1", "1"], ["2"]])").find("$.f[1]") == 0);
  CHECK(message(R"([["1", "x"]])").find("$.f[0]") == 0);
  // decreasing levels are not a distribution function
  CHECK_FALSE(message(R"([["1", "1/2"], ["2", "1/4"]])").empty());
  CHECK_FALSE(message(R"([["-1", "1"]])").empty());
}

TEST_CASE("minimal space file") {
  const io::SpaceFile file = io::load_space(kData / "two_point.json");
  const ProbSpace& s = file.space;
  CHECK(s.points() == std::vector<std::string>{"a", "b"});
  CHECK(s.tf() == TriangleFn::sup(TNorm::Minimum));
  CHECK(s.d(0, 1) == H(1));
  CHECK(s.d(1, 0) == H(1));
  CHECK(s.d(0, 0) == heaviside(0));
  CHECK_FALSE(file.group.has_value());
}

TEST_CASE("space and group round trip") {
  auto rng = testutil::rng(52);
  for (const TNorm t : {TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz}) {
    const ProbSpace s = random_valid_space(rng, 4, TriangleFn::sup(t));
    const io::SpaceFile back = io::parse_space(io::encode(s).dump());
    CHECK(back.space == s);

    for (const NamedGroup& ng : standard_test_groups(TriangleFn::sup(t))) {
      const io::SpaceFile g = io::parse_space(io::encode(ng.group).dump());
      REQUIRE(g.group.has_value());
      CHECK(*g.group == ng.group);
    }
  }
  const io::SpaceFile z3 = io::load_space(kData / "z3_menger.json");
  REQUIRE(z3.group.has_value());
  CHECK(z3.group->op(1, 2) == 0);
}

TEST_CASE("asymmetric tables keep both entries") {
  const ProbSpace s({"x", "y"}, {heaviside(0), H(1), H(2), heaviside(0)}, TriangleFn::sup(TNorm::Minimum));
  const Json j = io::encode(s);
  CHECK(j["metric"].contains("y|x"));
  const io::SpaceFile raw = io::decode_space(j);
  CHECK(raw.space == s);
  CHECK_THROWS_AS(io::parse_space(j.dump()), AxiomError);
}

TEST_CASE("schema errors carry path context") {
  CHECK(schema_message(R"({"tf": "sup:min", "metric": {}})").find("missing field \"points\"") != std::string::npos);
  CHECK(schema_message(R"({"points": [], "tf": "sup:min", "metric": {}})").find("$.points") == 0);
  CHECK(schema_message(R"({"points": ["a","b"], "tf": "sup:nope", "metric": {"a|b": []}})").find("$.tf") == 0);
  CHECK(schema_message(R"({"points": ["a","b"], "tf": "sup:min", "metric": {"a|c": []}})").find("a|c") !=
        std::string::npos);
  CHECK(schema_message(R"({"points": ["a","b","c"], "tf": "sup:min", "metric": {"a|b": [["1","1"]]}})")
            .find("no entry") != std::string::npos);
  CHECK(schema_message(R"({"points": ["a","b"], "tf": "sup:min", "metric": {"a|b": [["1","1"], ["0"]]}})")
            .find(R"($.metric["a|b"][1])") == 0);
  CHECK(schema_message(R"({"points": ["a","a"], "tf": "sup:min", "metric": {}})").find("$.points") == 0);
  CHECK(schema_message("{\"points\": [\n").find("line") != std::string::npos);
  CHECK(schema_message(R"({"points": ["0","1"], "tf": "sup:min", "metric": {"0|1": [["1","1"]]},
                           "group": {"table": [["0","1"]], "identity": "0"}})")
            .find("$.group.table") == 0);
}

TEST_CASE("labels containing the separator") {
  const std::string text = R"({"points": ["a|b", "c"], "tf": "sup:min", "metric": {"a|b|c": [["2","1"]]}})";
  const ProbSpace s = io::parse_space(text).space;
  CHECK(s.d(0, 1) == H(2));
}

TEST_CASE("axiom violations surface as AxiomError") {
  const std::string text = R"({"points": ["a","b","c"], "tf": "sup:min",
    "metric": {"a|b": [["1","1"]], "b|c": [["1","1"]], "a|c": [["5","1"]]}})";
  try {
    io::parse_space(text);
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    CHECK(e.report().violations.front().axiom == "triangle");
  }
  const std::string nongroup = R"({"points": ["0","1"], "tf": "sup:min", "metric": {"0|1": [["1","1"]]},
    "group": {"table": [["0","1"], ["1","1"]], "identity": "0"}})";
  CHECK_THROWS_AS(io::parse_space(nongroup), AxiomError);
}

TEST_CASE("map values") {
  const ProbSpace s = io::load_space(kData / "two_point.json").space;
  const Json partial = Json::parse(R"({"a": [["0","1"]]})");
  const PartialMap p = io::decode_values(partial, s, "$.values");
  REQUIRE(p.size() == 1);
  CHECK(p.at(0) == heaviside(0));
  CHECK_THROWS_AS(io::decode_total_map(partial, s, "$.values"), io::SchemaError);
  CHECK_THROWS_AS(io::decode_values(Json::parse(R"({"z": []})"), s, "$.values"), io::SchemaError);

  const LipMap f{{H(1), heaviside(0)}};
  CHECK(io::decode_total_map(io::encode_map(s, f), s, "$") == f);
}

TEST_CASE("map files resolve their space") {
  const auto dir = std::filesystem::temp_directory_path() / "pmskit_test_io";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(kData / "two_point.json", dir / "space.json",
                             std::filesystem::copy_options::overwrite_existing);
  {
    std::ofstream(dir / "map.json") << R"({"space": "space.json", "values": {"b": [["1","1"]]}})";
    std::ofstream(dir / "inline.json") << R"({"space": {"points": ["u"], "tf": "sup:min", "metric": {}},
                                              "values": {"u": []}})";
    std::ofstream(dir / "bare.json") << R"({"values": {}})";
  }
  const io::MapFile m = io::load_map_file(dir / "map.json");
  REQUIRE(m.space.has_value());
  CHECK(m.space->space.points() == std::vector<std::string>{"a", "b"});
  const io::MapFile in = io::load_map_file(dir / "inline.json");
  REQUIRE(in.space.has_value());
  CHECK(in.space->space.size() == 1);
  CHECK_FALSE(io::load_map_file(dir / "bare.json").space.has_value());
  CHECK_THROWS_AS(io::load_map_file(dir / "missing.json"), io::SchemaError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("iso witnesses and phi tables") {
  const ProbGroup a = *io::load_space(kData / "z3_menger.json").group;
  const ProbGroup b = *io::load_space(kData / "z3_relabeled.json").group;
  const IsoWitness iso = io::decode_iso(io::load_json(kData / "iso_z3.json"), a, b);
  CHECK(verify_isometric_iso(a, b, iso).passed());
  CHECK(io::decode_iso(io::encode(a, b, iso), a, b) == iso);
  // a non-bijective witness decodes; verification reports it
  const IsoWitness bad = io::decode_iso(Json::parse(R"({"forward": {"0": "e", "1": "e", "2": "g"}})"), a, b);
  CHECK(verify_isometric_iso(a, b, bad).violations.front().axiom == "bijection");
  CHECK_THROWS_AS(io::decode_iso(Json::parse(R"({"forward": {"0": "e", "1": "g"}})"), a, b), io::SchemaError);

  const MonoidIsoOracle phi = io::decode_phi_table(io::load_json(kData / "phi_z3.json"), a, b);
  CHECK(recover_iso(a, b, phi) == iso);
  CHECK(io::encode_phi_table(a, b, phi) == io::load_json(kData / "phi_z3.json"));
  CHECK(io::encode_phi_table(a, b, transport_iso(a, b, iso)) == io::load_json(kData / "phi_z3.json"));
  CHECK_THROWS_AS(phi(LipMap{{H(5), H(5), H(5)}}), DomainError);
}

TEST_CASE("dual triangle functions load but are rejected downstream") {
  const std::string text = R"({"points": ["a","b"], "tf": "infdual:min", "metric": {"a|b": [["1","1"]]}})";
  const ProbSpace s = io::parse_space(text).space;
  CHECK(s.tf() == TriangleFn::inf_dual(TNorm::Minimum));
  CHECK_THROWS_AS(dist_to_set(s, {0}), DomainError);
  CHECK_THROWS_AS(mcshane_extend(s, PartialMap{{0, heaviside(0)}}), DomainError);
}
