// Acceptance run: one PASS/FAIL line per criterion, each checked exactly
// (rational equality, zero tolerance) and against its wall-clock limit.
// Reference values come from the test-side oracles in tests/support.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "vexf/extended_formulation.hpp"
#include "vexf/instances.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/maxout_net.hpp"
#include "vexf/monotone_split.hpp"
#include "vexf/polytopes.hpp"
#include "vexf/sampling.hpp"

using namespace vexf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks";
    if (failures_ > 0) {
      s << ", " << failures_ << " failed:";
      for (const auto& f : first_) s << " [" << f << "]";
    }
    o.detail = s.str();
    return o;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> first_;
};

std::string str(const Vec& v) { return to_string(v); }

/// Support of the permutahedron: pair the largest coefficient with n.
Rational permutahedron_support(const Vec& c) {
  std::vector<Rational> v(c.begin(), c.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * Rational(static_cast<long>(v.size() - i));
  return s;
}

Outcome monotone_split_criterion() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 4);
    const std::size_t s = 1 + (seed / 4) % 6;
    const auto net = random_network(d, s, seed, 3);
    const auto res = split(net);
    const std::string tag = "seed " + std::to_string(seed);
    t.expect(is_monotone(res.g) && is_monotone(res.h), tag + " monotone");
    t.expect(res.g.size() == s && res.h.size() == s, tag + " sizes");
    for (const auto& x : sample_points(d, seed)) {
      t.expect(evaluate(res.g, x) - evaluate(res.h, x) == oracle::evaluate(net, x), tag + " at " + str(x));
    }
  }
  return t.outcome("200 random rank-2 networks, d<=4, s<=6, weights in [-3,3]");
}

Outcome epigraph_criterion() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 4);
    const auto net = random_network(d, 1 + (seed / 4) % 6, seed + 10'000, 3, true);
    const auto ef = epigraph_ef(net);
    const std::string tag = "seed " + std::to_string(seed);
    t.expect(static_cast<std::size_t>(ef.size()) == net.total_rank(), tag + " size");
    const auto xs = sample_points(d, seed, 100);
    for (std::size_t i = 0; i < 100; ++i) {
      const Vec& x = xs[xs.size() - 100 + i];
      t.expect(epigraph_min(ef, x) == oracle::evaluate(net, x), tag + " at " + str(x));
    }
  }
  return t.outcome("100 monotone networks x 100 points");
}

Outcome certificate_criterion() {
  Tally t;
  std::vector<std::pair<std::string, VPolytope>> cases;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 3);
    cases.emplace_back("random seed " + std::to_string(seed), random_vpolytope(d, 1 + static_cast<int>(seed % 5), seed));
  }
  cases.emplace_back("cube(2)", cube(2).v);
  cases.emplace_back("cross(2)", cross_polytope(2).v);
  cases.emplace_back("permutahedron(3)", permutahedron(3).v);
  for (const auto& [name, p] : cases) {
    const auto cert = virtual_ef_certificate(p);
    t.expect(cert.total_size() <= 4 * static_cast<Index>(cert.s), name + " size bound");
    t.expect(equals(minkowski_sum(p, cert.q), cert.r), name + " P+Q=R");
    // Independent check of the same identity through supports.
    for (const auto& c : sample_points(p.dim(), 7, 20)) {
      t.expect(oracle::support(p.vertices, c) + oracle::support(cert.q.vertices, c) ==
                   oracle::support(cert.r.vertices, c),
               name + " support at " + str(c));
    }
  }
  return t.outcome("50 random polytopes + cube(2), cross(2), permutahedron(3)");
}

Outcome optimize_criterion() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 3);
    const auto p = random_vpolytope(d, 1 + static_cast<int>(seed % 5), seed + 20'000);
    const auto q = random_vpolytope(d, 1 + static_cast<int>((seed / 5) % 5), seed + 30'000);
    const auto r = minkowski_sum(p, q);
    const auto ef_q = ef_from_vertices(q);
    // Alternate between a vertex formulation of R and the sum of formulations.
    const auto ef_r = seed % 2 == 0 ? ef_from_vertices(r) : ef_minkowski_sum(ef_from_vertices(p), ef_q);

    Rng rng(seed);
    std::vector<Vec> objectives;
    Vec generic(d);
    for (Index j = 0; j < d; ++j) generic(j) = uniform_int(rng, -97, 97);
    if (generic.isZero()) generic(0) = 1;
    objectives.push_back(generic);
    if (auto tie = random_edge_normal(r, seed)) {
      objectives.push_back(*tie);
    } else {
      objectives.push_back(Vec(unit_vector(d, 0)));  // R is a point or a segment in R^1
    }
    objectives.push_back(unit_vector(d, static_cast<Index>(seed) % d));

    for (const auto& c : objectives) {
      const std::string tag = "seed " + std::to_string(seed) + " c=" + str(c);
      const auto opt = virtual_optimize(ef_q, ef_r, c);
      t.expect(contains(p, opt.x), tag + " x in P");
      t.expect(c.dot(opt.x) == oracle::support(p.vertices, c), tag + " optimal");
      t.expect(opt.value == c.dot(opt.x), tag + " value");
    }
  }
  return t.outcome("100 (P,Q) pairs x {generic, edge-tie, axis} objectives");
}

Outcome additivity_criterion() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 3);
    const auto p = random_vpolytope(d, 1 + static_cast<int>(seed % 5), seed + 40'000);
    const auto q = random_vpolytope(d, 1 + static_cast<int>((seed / 5) % 5), seed + 50'000);
    const auto r = minkowski_sum(p, q);
    Rng rng(seed);
    Vec c(d);
    // Small coefficients including zeros make ties common.
    for (Index j = 0; j < d; ++j) c(j) = uniform_int(rng, -1, 1);
    if (seed % 4 == 0) {
      if (auto tie = random_edge_normal(r, seed)) c = *tie;
    }
    const std::string tag = "seed " + std::to_string(seed) + " c=" + str(c);
    t.expect(check_face_additivity(p, q, c), tag + " face");
    // Brute-force faces: optimal pairwise sums equal the face of R.
    const Mat brute = prune_to_vertices(
                          oracle::pairwise_sums(stack_rows(oracle::argmax(p.vertices, c), d),
                                                stack_rows(oracle::argmax(q.vertices, c), d)))
                          .vertices;
    t.expect(brute == optimal_face(r, c).vertices, tag + " face oracle");

    if (c.isZero()) c(0) = 1;
    const auto lex = complete_basis(c);
    const Vec xp = solve_lex(ef_from_vertices(p), lex).projected;
    const Vec xq = solve_lex(ef_from_vertices(q), lex).projected;
    const Vec xr = solve_lex(ef_from_vertices(r), lex).projected;
    t.expect(xp + xq == xr, tag + " lex");
    // Every prefix of the lex objective is additive too.
    Mat fp = p.vertices, fq = q.vertices, fr = r.vertices;
    for (Index i = 0; i < d; ++i) {
      fp = stack_rows(oracle::argmax(fp, lex[i]), d);
      fq = stack_rows(oracle::argmax(fq, lex[i]), d);
      fr = stack_rows(oracle::argmax(fr, lex[i]), d);
      t.expect(prune_to_vertices(oracle::pairwise_sums(fp, fq)).vertices == prune_to_vertices(fr).vertices,
               tag + " prefix " + std::to_string(i));
    }
    t.expect(fr.rows() == 1 && Vec(fr.row(0).transpose()) == xr, tag + " lex oracle");
  }
  return t.outcome("100 random triples with tie-heavy directions");
}

Outcome sorting_network_criterion() {
  Tally t;
  for (int n : {4, 8}) {
    const auto ef = sorting_network_ef(n);
    const long facets = (1L << n) - 2;
    const Index expected = n == 4 ? 10 : 38;
    const std::string tag = "n=" + std::to_string(n);
    t.expect(ef.size() == expected, tag + " size " + std::to_string(ef.size()));
    t.expect(ef.size() < facets, tag + " below 2^n-2");

    // Every vertex of the permutahedron lifts: one feasibility LP each.
    const MembershipOracle lifts(ef);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
      Vec x(n);
      for (int i = 0; i < n; ++i) x(i) = perm[static_cast<std::size_t>(i)];
      t.expect(lifts.contains(x), tag + " lift " + str(x));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Support on every facet normal and both equality normals: the projection
    // satisfies every facet inequality, so it lies in the permutahedron.
    for (long mask = 1; mask < (1L << n) - 1; ++mask) {
      Vec c = Vec::Zero(n);
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) c(i) = -1;
      }
      t.expect(ef_support(ef, c).value == permutahedron_support(c), tag + " facet " + str(c));
    }
    for (int sign : {1, -1}) {
      const Vec c = Vec::Constant(n, Rational(sign));
      t.expect(ef_support(ef, c).value == permutahedron_support(c), tag + " equality normal");
    }
  }
  return t.outcome("sizes 10 and 38, all vertices lift, supports on all facet normals");
}

Outcome erosion_criterion() {
  Tally t;
  for (int n = 3; n <= 5; ++n) {
    const auto pi = permutahedron(n);
    for (int k = 1; k < n; ++k) {
      const auto delta = hypersimplex(k, n);
      const auto q = erode(pi.h, delta);
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      t.expect(equals(minkowski_sum(delta, q), pi.v), tag);
      for (const auto& c : sample_points(n, 5, 20)) {
        t.expect(oracle::support(delta.vertices, c) + oracle::support(q.vertices, c) == permutahedron_support(c),
                 tag + " support at " + str(c));
      }
    }
  }
  return t.outcome("n in {3,4,5}, k in 1..n-1");
}

Outcome completion_criterion() {
  Tally t;
  std::vector<std::pair<std::string, VPolytope>> cases{{"matching(4)", matching_polytope(4)},
                                                       {"hypersimplex(2,4)", hypersimplex(2, 4)},
                                                       {"permutahedron(3)", permutahedron(3).v}};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto raw = random_vpolytope(2 + static_cast<Index>(seed), 5, seed + 60'000);
    cases.emplace_back("shifted random " + std::to_string(seed),
                       prune_to_vertices(Mat(raw.vertices.array() + Rational(5))));
  }
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    const auto& [name, p] = cases[ci];
    const Index d = p.dim();
    const auto p_ef = ef_from_vertices(p);
    const auto ef = monotone_completion(p_ef);
    t.expect(ef.size() == p_ef.size() + 2 * d, name + " size");
    const MembershipOracle member(ef);
    for (Index i = 0; i < p.num_vertices(); ++i) t.expect(member.contains(p.vertex(i)), name + " contains P");

    const VPolytope closure = prune_to_vertices(oracle::downward_closure_points(p.vertices));
    Rng rng(70'000 + ci);
    int found = 0;
    for (int attempt = 0; attempt < 1000 && found < 100; ++attempt) {
      // Random convex combination of vertices, shrunk coordinatewise.
      Vec y = Vec::Zero(d);
      Rational total = 0;
      for (Index i = 0; i < p.num_vertices(); ++i) {
        const long w = uniform_int(rng, 0, 4);
        y += Rational(w) * p.vertex(i);
        total += w;
      }
      if (total == 0) continue;
      y /= total;
      Vec x = y;
      for (Index j = 0; j < d; ++j) x(j) *= Rational(uniform_int(rng, 0, 6), 6);
      if (attempt % 3 == 0) x(uniform_int(rng, 0, d - 1)) += Rational(1, 3);  // may leave the set
      const bool in = member.contains(x);
      t.expect(in == contains(closure, x), name + " membership " + str(x));
      if (!in) continue;
      ++found;
      Vec lower = x;
      for (Index j = 0; j < d; ++j) lower(j) *= Rational(uniform_int(rng, 0, 5), 5);
      t.expect(member.contains(lower), name + " downward from " + str(x));
    }
    t.expect(found == 100, name + " found 100 sampled points in the set");
  }
  return t.outcome("6 polytopes, 100 sampled points each");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "monotone split", 60, monotone_split_criterion},
      {2, "epigraph formulation", 120, epigraph_criterion},
      {3, "virtual extension certificate", 300, certificate_criterion},
      {4, "virtual optimization", 120, optimize_criterion},
      {5, "face and lexicographic additivity", 60, additivity_criterion},
      {6, "sorting-network permutahedron formulation", 300, sorting_network_criterion},
      {7, "summand erosion", 300, erosion_criterion},
      {8, "monotone completion", 60, completion_criterion},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f s of %.0f s", secs, c.limit_seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << " (" << timing
              << (in_time ? "" : ", over time limit") << ")" << std::endl;
  }
  std::cout << "[INFO] 9 out of scope: the exponential lower bounds (matching, TSP, matroids, inapproximability) and "
               "the existence of a summand with exponential extension complexity are not computed; criteria 6 and 7 "
               "are the structural demonstrations."
            << std::endl;
  return all ? 0 : 1;
}
