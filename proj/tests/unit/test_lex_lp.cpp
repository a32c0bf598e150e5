#include <doctest.h>

#include "../support/oracles.hpp"
#include "vexf/errors.hpp"
#include "vexf/extended_formulation.hpp"
#include "vexf/instances.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/polytopes.hpp"
#include "vexf/sampling.hpp"

using namespace vexf;

namespace {

VPolytope poly(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> vs;
  Index d = 0;
  for (auto r : rows) {
    vs.push_back(from_ints(r));
    d = static_cast<Index>(r.size());
  }
  return VPolytope{stack_rows(vs, d)};
}

// Lexicographic maximum over an explicit vertex list: filter by each
// objective in turn.
Vec brute_lex(const Mat& vertices, const std::vector<Vec>& lex) {
  Mat cur = vertices;
  for (const auto& c : lex) cur = stack_rows(oracle::argmax(cur, c), cur.cols());
  return cur.row(0).transpose();
}

}  // namespace

TEST_CASE("plain LPs over H-descriptions") {
  CHECK(solve(cube(2).h, from_ints({1, 1})).value == 2);
  HPolyhedron empty = HPolyhedron::empty_system(1);
  empty.add_inequality(from_ints({1}), 0);
  empty.add_inequality(from_ints({-1}), -1);
  CHECK(solve(empty, from_ints({1})).status == LpStatus::Infeasible);
  HPolyhedron half = HPolyhedron::empty_system(1);
  half.add_inequality(from_ints({-1}), 0);
  CHECK(solve(half, from_ints({1})).status == LpStatus::Unbounded);
}

TEST_CASE("LP values match brute force over enumerated vertices") {
  for (int n = 2; n <= 4; ++n) {
    const auto pi = permutahedron(n);
    const auto verts = vertex_enumeration(pi.h);
    for (const auto& c : sample_points(n, static_cast<std::uint64_t>(n), 20)) {
      CHECK(solve(pi.h, c).value == oracle::support(verts.vertices, c));
    }
  }
}

TEST_CASE("basis completion appends unit vectors in index order") {
  auto lex = complete_basis(from_ints({1, 1}));
  REQUIRE(lex.dim() == 2);
  CHECK(lex[0] == from_ints({1, 1}));
  CHECK(lex[1] == from_ints({1, 0}));
  lex = complete_basis(from_ints({0, 1}));
  CHECK(lex[1] == from_ints({1, 0}));
  lex = complete_basis(from_ints({0, 0, 2}));
  CHECK(lex[1] == from_ints({1, 0, 0}));
  CHECK(lex[2] == from_ints({0, 1, 0}));
  CHECK_THROWS_AS(complete_basis(from_ints({0, 0})), PreconditionError);
}

TEST_CASE("lexicographic objectives must form a basis") {
  CHECK_THROWS_AS(LexObjective({from_ints({1, 0}), from_ints({2, 0})}), PreconditionError);
}

TEST_CASE("lexicographic optima on the square and the parallelogram") {
  const auto sq = cube(2).h;
  CHECK(solve_lex(sq, LexObjective({from_ints({1, 1}), from_ints({1, 0})})).projected == from_ints({1, 1}));
  CHECK(solve_lex(sq, LexObjective({from_ints({0, 1}), from_ints({1, 0})})).projected == from_ints({1, 1}));
  const auto r = poly({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  const auto ef = ef_from_vertices(r);
  CHECK(solve_lex(ef, LexObjective({from_ints({0, 1}), from_ints({1, 0})})).projected == from_ints({2, 1}));
}

TEST_CASE("lexicographic optimum is independent of constraint order") {
  const auto pi = permutahedron(4).h;
  HPolyhedron reversed = pi;
  for (Index i = 0; i < pi.num_inequalities(); ++i) {
    reversed.ineq_lhs.row(i) = pi.ineq_lhs.row(pi.num_inequalities() - 1 - i);
    reversed.ineq_rhs(i) = pi.ineq_rhs(pi.num_inequalities() - 1 - i);
  }
  const auto lex = complete_basis(from_ints({1, 1, 0, 0}));
  CHECK(solve_lex(pi, lex).projected == solve_lex(reversed, lex).projected);
  CHECK(solve_lex(pi, lex).projected ==
        brute_lex(oracle::permutations(4), {lex[0], lex[1], lex[2], lex[3]}));
}

TEST_CASE("virtual optimization on the two-segment example") {
  const auto p = poly({{0, 0}, {1, 1}});
  const auto q = poly({{0, 0}, {1, 0}});
  const auto r = minkowski_sum(p, q);
  const auto opt = virtual_optimize(ef_from_vertices(q), ef_from_vertices(r), from_ints({0, 1}));
  CHECK(opt.x == from_ints({1, 1}));
  CHECK(opt.value == 1);
  CHECK(opt.x_r == from_ints({2, 1}));
  CHECK(opt.x_q == from_ints({1, 0}));
}

TEST_CASE("virtual optimization with Q = {0} is the lex optimum over R") {
  const auto r = permutahedron(3).v;
  const auto zero = poly({{0, 0, 0}});
  const Vec c = from_ints({1, 1, 0});
  const auto opt = virtual_optimize(ef_from_vertices(zero), ef_from_vertices(r), c);
  CHECK(opt.x == solve_lex(ef_from_vertices(r), complete_basis(c)).projected);
  CHECK(opt.value == 5);
}

TEST_CASE("virtual optimization is optimal over P on random pairs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 3);
    const auto p = random_vpolytope(d, 1 + static_cast<int>(seed % 5), seed);
    const auto q = random_vpolytope(d, 1 + static_cast<int>((seed + 2) % 5), seed + 500);
    const auto r = minkowski_sum(p, q);
    Rng rng(seed);
    Vec c(d);
    for (Index j = 0; j < d; ++j) c(j) = uniform_int(rng, -3, 3);
    if (c.isZero()) c(0) = 1;
    const auto opt = virtual_optimize(ef_from_vertices(q), ef_from_vertices(r), c);
    CHECK(contains(p, opt.x));
    CHECK(opt.value == oracle::support(p.vertices, c));
  }
}
