#include <doctest.h>

#include <algorithm>

#include "../support/nets.hpp"
#include "../support/oracles.hpp"
#include "vexf/errors.hpp"
#include "vexf/instances.hpp"
#include "vexf/maxout_net.hpp"
#include "vexf/sampling.hpp"

using namespace vexf;

namespace {

bool has_code(const std::vector<Diagnostic>& diags, const std::string& code) {
  return std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace

TEST_CASE("a single ReLU unit on one input is valid") {
  auto net = inputs_only(1);
  append_output(net, relu_unit("r", {0}, from_ints({1})));
  CHECK(validate(net).empty());
}

TEST_CASE("a 2-cycle is diagnosed") {
  auto net = inputs_only(1);
  fixtures::add_unit(net, "a", 2, {{"x0", {1, 0}}});
  fixtures::add_unit(net, "b", 2, {{"a", {1, 0}}});
  net.neurons[1].in.push_back(InArc{2, from_ints({1, 1})});
  const auto diags = validate(net);
  CHECK(has_code(diags, "cycle"));
  CHECK_THROWS_AS(require_valid(net), PreconditionError);
}

TEST_CASE("an arc with too few weights for the rank is diagnosed") {
  auto net = inputs_only(1);
  fixtures::add_unit(net, "a", 2, {{"x0", {1}}});
  CHECK(has_code(validate(net), "arity"));
}

TEST_CASE("structural defects each get their own code") {
  SUBCASE("dangling arc") {
    auto net = inputs_only(1);
    fixtures::add_unit(net, "a", 2, {{"x0", {1, 0}}});
    net.neurons[1].in.push_back(InArc{7, from_ints({1, 1})});
    CHECK(has_code(validate(net), "dangling-arc"));
  }
  SUBCASE("duplicate id") {
    auto net = inputs_only(2);
    net.neurons[1].id = "x0";
    fixtures::add_unit(net, "a", 2, {{"x0", {1, 0}}});
    CHECK(has_code(validate(net), "duplicate-id"));
  }
  SUBCASE("output is an input") {
    auto net = inputs_only(1);
    fixtures::add_unit(net, "a", 2, {{"x0", {1, 0}}});
    net.output = 0;
    CHECK(has_code(validate(net), "output"));
  }
  SUBCASE("no units") { CHECK(has_code(validate(inputs_only(2)), "no-units")); }
}

TEST_CASE("evaluation follows the max-of-linear-forms definition") {
  auto relu = inputs_only(1);
  append_output(relu, relu_unit("r", {0}, from_ints({1})));
  CHECK(evaluate(relu, from_ints({-2})) == 0);

  CHECK(evaluate(fixtures::max2(), from_ints({3, 5})) == 5);

  auto tree = inputs_only(3);
  fixtures::add_unit(tree, "a", 2, {{"x0", {1, 0}}, {"x1", {0, 1}}});
  fixtures::add_unit(tree, "b", 2, {{"a", {1, 0}}, {"x2", {0, 1}}});
  CHECK(evaluate(tree, from_ints({1, 7, 4})) == 7);
}

TEST_CASE("ReLU units compute max{0, linear form}") {
  auto net = inputs_only(2);
  append_output(net, relu_unit("r", {0}, from_ints({1})));
  CHECK(evaluate(net, from_ints({5, 0})) == 5);
  auto neg = inputs_only(2);
  append_output(neg, relu_unit("r", {0}, from_ints({-1})));
  CHECK(evaluate(neg, from_ints({5, 0})) == 0);
  auto diff = inputs_only(2);
  append_output(diff, relu_unit("r", {0, 1}, from_ints({1, -1})));
  CHECK(evaluate(diff, from_ints({2, 7})) == 0);
}

TEST_CASE("monotonicity is the absence of negative weights") {
  CHECK(is_monotone(fixtures::max4_tree()));
  CHECK_FALSE(is_monotone(fixtures::relu_difference()));
}

TEST_CASE("rank-3 unit becomes two rank-2 units") {
  auto net = inputs_only(3);
  fixtures::add_unit(net, "u", 3, {{"x0", {1, 0, 0}}, {"x1", {0, 1, 0}}, {"x2", {0, 0, 1}}});
  const auto r2 = to_rank2(net);
  CHECK(validate(r2).empty());
  CHECK(r2.size() == 2);
  CHECK(r2.neurons[r2.output].id == "u");
  for (const auto& x : sample_points(3, 1, 30)) CHECK(evaluate(r2, x) == evaluate(net, x));
}

TEST_CASE("rank-2 networks are left unchanged by to_rank2") {
  const auto net = fixtures::max4_tree();
  const auto r2 = to_rank2(net);
  REQUIRE(r2.neurons.size() == net.neurons.size());
  for (std::size_t i = 0; i < net.neurons.size(); ++i) {
    CHECK(r2.neurons[i].id == net.neurons[i].id);
    CHECK(r2.neurons[i].rank == net.neurons[i].rank);
    REQUIRE(r2.neurons[i].in.size() == net.neurons[i].in.size());
    for (std::size_t a = 0; a < net.neurons[i].in.size(); ++a) {
      CHECK(r2.neurons[i].in[a].from == net.neurons[i].in[a].from);
      CHECK(r2.neurons[i].in[a].weights == net.neurons[i].in[a].weights);
    }
  }
}

TEST_CASE("random higher-rank networks keep their function under to_rank2") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto net = random_network(3, 3, seed, 3, false, 4);
    const auto r2 = to_rank2(net);
    CHECK(validate(r2).empty());
    CHECK(r2.size() == 9);
    for (const auto& x : sample_points(3, seed, 10)) CHECK(evaluate(r2, x) == oracle::evaluate(net, x));
  }
}

TEST_CASE("from_vertices computes the support function") {
  VPolytope seg{stack_rows({from_ints({1, 0}), from_ints({0, 1})}, 2)};
  CHECK(evaluate(from_vertices(seg), from_ints({2, 5})) == 5);

  const auto zero = from_vertices(VPolytope{stack_rows({from_ints({0, 0})}, 2)});
  CHECK(zero.size() == 1);
  CHECK(evaluate(zero, from_ints({3, -4})) == 0);

  const auto pi3 = from_vertices(permutahedron(3).v);
  CHECK(evaluate(pi3, from_ints({1, 0, 0})) == 3);
  CHECK(pi3.size() == 5);
}

TEST_CASE("library evaluation agrees with the recursive oracle on random nets") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto net = random_network(1 + static_cast<Index>(seed % 4), 1 + seed % 6, seed);
    REQUIRE(validate(net).empty());
    for (const auto& x : sample_points(net.d, seed, 10)) CHECK(evaluate(net, x) == oracle::evaluate(net, x));
  }
}

TEST_CASE("evaluation rejects points of the wrong length") {
  CHECK_THROWS_AS(evaluate(fixtures::max2(), from_ints({1})), DimensionError);
}
