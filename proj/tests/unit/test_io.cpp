#include <doctest.h>

#include "../support/nets.hpp"
#include "vexf/errors.hpp"
#include "vexf/instances.hpp"
#include "vexf/io.hpp"
#include "vexf/polytopes.hpp"

using namespace vexf;

TEST_CASE("rationals travel as canonical strings") {
  CHECK(io::to_json(Rational(6, 4)).get<std::string>() == "3/2");
  CHECK(io::to_json(Rational(-3)).get<std::string>() == "-3");
  CHECK(io::rational_from_json(io::Json("10/4")) == Rational(5, 2));
  CHECK(io::rational_from_json(io::Json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(io::Json(1.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(io::Json("x")), ParseError);
}

TEST_CASE("networks round-trip") {
  const auto net = fixtures::max4_tree();
  const auto j = io::to_json(net);
  const auto back = io::network_from_json(j);
  CHECK(io::to_json(back).dump() == j.dump());
  CHECK(validate(back).empty());
  CHECK(j["output"] == "c");
}

TEST_CASE("network documents with unknown arc sources are rejected") {
  auto j = io::to_json(fixtures::max2());
  j["neurons"][2]["in"][0]["from"] = "nowhere";
  CHECK_THROWS_AS(io::network_from_json(j), ParseError);
}

TEST_CASE("polytopes and formulations round-trip") {
  const auto pi = permutahedron(3);
  CHECK(io::vpolytope_from_json(io::to_json(pi.v)).vertices == pi.v.vertices);
  const auto h = io::hpolyhedron_from_json(io::to_json(pi.h));
  CHECK(h.ineq_lhs == pi.h.ineq_lhs);
  CHECK(h.eq_rhs == pi.h.eq_rhs);
  const auto ef = sorting_network_ef(4);
  const auto ef2 = io::ef_from_json(io::to_json(ef));
  CHECK(ef2.projection == ef.projection);
  CHECK(ef2.lift.ineq_lhs == ef.lift.ineq_lhs);
  CHECK(io::to_json(ef2).dump() == io::to_json(ef).dump());
}

TEST_CASE("V-polytope documents are pruned and must be nonempty") {
  const auto j = io::parse(R"({"d": 1, "vertices": [["0"], ["1/2"], ["1"]]})");
  CHECK(io::vpolytope_from_json(j).num_vertices() == 2);
  CHECK_THROWS_AS(io::vpolytope_from_json(io::parse(R"({"d": 2, "vertices": []})")), ParseError);
  CHECK_THROWS_AS(io::vpolytope_from_json(io::parse(R"({"d": 2, "vertices": [["1"]]})")), Error);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(io::parse("{bad"), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
}
