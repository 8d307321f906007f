#include "gog/enumerate.hpp"
#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"
#include "gog/json_io.hpp"

#include <doctest.h>

using namespace gog;

namespace {

const std::filesystem::path data_dir{GOG_DATA_DIR};

GraphInput load(const std::string& name) {
  const auto path = data_dir / "graphs" / name;
  return graph_from_json(read_json_file(path), path.parent_path());
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("shipped graphs match the builders") {
  CHECK(canonical_key(load("theta.json").graph) == canonical_key(theta_graph()));
  CHECK(canonical_key(load("s3amalgam.json").graph) == canonical_key(s3_amalgam()));
  CHECK(canonical_key(load("z4amalgam.json").graph) == canonical_key(z4_amalgam()));
  CHECK(canonical_key(load("z4xz.json").graph) == canonical_key(cyclic_times_z(4)));
  CHECK(canonical_key(load("z5twist.json").graph) == canonical_key(cyclic_twist(5, 2)));
  CHECK(canonical_key(load("z6loop.json").graph) == canonical_key(cyclic_twist(6, 5)));
  const GraphInput z4 = load("z4amalgam.json");
  const int a = z4.graph.group(0).generator_names().at("a");
  CHECK(z4.omega.vertex_signs[0][a] == -1);
  CHECK(z4.omega.vertex_signs[0][z4.graph.group(0).power(a, 2)] == 1);
  CHECK(load("z5twist.json").omega.stable_signs[0] == -1);
}

TEST_CASE("round trips are byte-identical") {
  for (const char* name : {"theta.json", "s3amalgam.json", "z4amalgam.json", "z5twist.json", "dumbbell.json"}) {
    const GraphInput in = load(name);
    const std::string once = graph_to_json(in.graph, in.omega).dump(2);
    const GraphInput back = graph_from_json(Json::parse(once));
    CHECK(graph_to_json(back.graph, back.omega).dump(2) == once);
    CHECK(Json::parse(once).dump(2) == once);
    CHECK(canonical_key(back.graph) == canonical_key(in.graph));
  }
  const FiniteGroup q8 = quaternion_group(8);
  const std::string g = group_to_json(q8).dump();
  CHECK(group_from_json(Json::parse(g)) == q8);
  const CheckReport r = run_checks(s3_amalgam(), s3_amalgam().trivial_omega(), 4);
  const std::string rj = to_json(r).dump(2);
  CHECK(Json::parse(rj).dump(2) == rj);
}

TEST_CASE("group files and references") {
  const FiniteGroup z5 = group_from_json(read_json_file(data_dir / "groups" / "z5.json"));
  CHECK(z5 == cyclic_group(5));
  CHECK(group_from_json(Json("v4.json"), data_dir / "groups") == klein_four_group());
  CHECK(group_from_json(Json("Q8")) == quaternion_group(8));
}

TEST_CASE("input errors") {
  CHECK(kind_of([] { group_from_json(Json("no such group")); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"table": [[0, 1], [1, 1]]})")); }) != ErrorKind::BadInput);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"order": 3, "table": [[0, 1], [1, 0]]})")); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] {
          graph_from_json(Json::parse(R"({"vertices": [{"id": "v", "group": "Z4"}],
            "edges": [{"id": "t", "o": "v", "t": "v", "group": "Z2", "into_o": [0, 1, 2], "into_t": [0, 2]}]})"));
        }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] {
          graph_from_json(Json::parse(R"({"vertices": [{"id": "v", "group": "Z4"}, {"id": "w", "group": "Z4"}],
            "edges": []})"));
        }) == ErrorKind::Disconnected);
  CHECK(kind_of([] {
          graph_from_json(Json::parse(R"({"vertices": [{"id": "u", "group": "S3"}, {"id": "v", "group": "S3"}],
            "edges": [{"id": "e", "o": "u", "t": "v", "group": "Z2", "into_o": {"a": "s"}, "into_t": {"a": "s"}}],
            "omega": {"vertex_chars": {"u": {"s": -1}}}})"));
        }) == ErrorKind::BadOrientation);
  CHECK(kind_of([] { read_json_file(data_dir / "missing.json"); }) == ErrorKind::BadInput);
}

TEST_CASE("words") {
  const GraphOfGroups g = z4_amalgam();
  const BassSerre bs(g);
  const NormalForm a = parse_word(bs, "u:a");
  CHECK(bs.element_order(a).order == 4);
  CHECK(parse_word(bs, "u:a^2") == parse_word(bs, "v:a^2"));  // amalgamated subgroup
  CHECK(parse_word(bs, "u:a u:a") == parse_word(bs, "u:2"));
  CHECK_FALSE(bs.element_order(parse_word(bs, "u:a*v:a")).finite);
  const GraphOfGroups twist = cyclic_twist(5, 2);
  const BassSerre loop(twist);
  const std::string v = loop.graph().vertex(0).id, e = loop.graph().edge(0).id;
  CHECK(parse_word(loop, "t:" + e + " " + v + ":a t:" + e + "^-1") == parse_word(loop, v + ":a^2"));
  CHECK_THROWS_AS(parse_word(bs, "x:a"), Error);
  CHECK_THROWS_AS(parse_word(bs, "u:zz"), Error);
  CHECK_THROWS_AS(parse_word(bs, "u"), Error);
}
