#include "vexf/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "vexf/errors.hpp"
#include "vexf/instances.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/polytopes.hpp"
#include "vexf/sampling.hpp"

namespace vexf {

namespace {

class Tally {
 public:
  explicit Tally(std::string id) : id_(std::move(id)) {}

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (ok) return;
    if (failed_++ == 0) first_ = describe();
  }

  Check result() const {
    Check c{id_, failed_ == 0, std::to_string(total_) + " cases"};
    if (failed_ > 0) c.detail = std::to_string(failed_) + "/" + std::to_string(total_) + " failed; first: " + first_;
    return c;
  }

 private:
  std::string id_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::string describe_point(const char* what, const Vec& x, const Rational& got, const Rational& want) {
  return std::string(what) + " at " + to_string(x) + ": got " + to_string(got) + ", expected " + to_string(want);
}

Check guarded(const std::string& id, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Check{id, false, std::string("exception: ") + e.what()};
  }
}

Rng case_rng(const SuiteOptions& o, std::size_t k) { return Rng(o.seed * 0x100000001B3ULL + k); }

VPolytope random_poly(Rng& rng, Index d) {
  return random_vpolytope(d, static_cast<int>(uniform_int(rng, 1, 5)), rng());
}

Vec random_direction(Rng& rng, Index d, long bound = 5) {
  Vec c(d);
  do {
    for (Index i = 0; i < d; ++i) c(i) = uniform_int(rng, -bound, bound);
  } while (c.isZero());
  return c;
}

/// Generic, tie-inducing (edge normal of `r`, when one exists) and axis directions.
std::vector<Vec> probe_objectives(Rng& rng, const VPolytope& r) {
  const Index d = r.dim();
  std::vector<Vec> out{random_direction(rng, d, 20)};
  if (auto tie = random_edge_normal(r, rng())) out.push_back(*tie);
  out.push_back(unit_vector(d, uniform_int(rng, 0, d - 1)) * Rational(uniform_int(rng, 0, 1) == 1 ? 1 : -1));
  return out;
}

std::vector<Check> suite_support_calculus(const SuiteOptions& o) {
  Tally sum("support.minkowski"), dil("support.dilate"), uni("support.union");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 3);
    const VPolytope p = random_poly(rng, d), q = random_poly(rng, d);
    const Rational lambda(uniform_int(rng, 0, 9), uniform_int(rng, 1, 4));
    const VPolytope ps = minkowski_sum(p, q), pd = dilate(p, lambda), pu = convex_union(p, q);
    for (const Vec& c : sample_points(d, rng(), o.samples)) {
      const Rational fp = support(p, c).value, fq = support(q, c).value;
      sum.record(support(ps, c).value == fp + fq, [&] { return describe_point("f_{P+Q}", c, support(ps, c).value, fp + fq); });
      dil.record(support(pd, c).value == lambda * fp, [&] { return describe_point("f_{lP}", c, support(pd, c).value, lambda * fp); });
      uni.record(support(pu, c).value == std::max(fp, fq), [&] { return describe_point("f_conv", c, support(pu, c).value, std::max(fp, fq)); });
    }
  }
  return {sum.result(), dil.result(), uni.result()};
}

std::vector<Check> suite_face_additivity(const SuiteOptions& o) {
  Tally faces("faces.additivity");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 2, 3);
    const VPolytope p = random_poly(rng, d), q = random_poly(rng, d);
    for (const Vec& c : probe_objectives(rng, minkowski_sum(p, q))) {
      faces.record(check_face_additivity(p, q, c), [&] { return "direction " + to_string(c); });
    }
  }
  return {faces.result()};
}

std::vector<Check> suite_lex_additivity(const SuiteOptions& o) {
  Tally points("lex.point_additivity"), prefixes("lex.prefix_faces");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 3);
    const VPolytope p = random_poly(rng, d), q = random_poly(rng, d);
    const VPolytope r = minkowski_sum(p, q);
    for (const Vec& c : probe_objectives(rng, r)) {
      const LexObjective lex = complete_basis(c);
      const Vec xp = solve_lex(ef_from_vertices(p), lex).projected;
      const Vec xq = solve_lex(ef_from_vertices(q), lex).projected;
      const Vec xr = solve_lex(ef_from_vertices(r), lex).projected;
      points.record(xp + xq == xr, [&] { return "x^P + x^Q != x^R for c = " + to_string(c); });
      VPolytope fp = p, fq = q, fr = r;
      bool ok = true;
      for (const Vec& ci : lex.vectors()) {
        fp = optimal_face(fp, ci);
        fq = optimal_face(fq, ci);
        fr = optimal_face(fr, ci);
        ok = ok && equals(minkowski_sum(fp, fq), fr);
      }
      ok = ok && fr.num_vertices() == 1;
      prefixes.record(ok, [&] { return "F^P_i + F^Q_i != F^R_i for c = " + to_string(c); });
    }
  }
  return {points.result(), prefixes.result()};
}

std::vector<Check> suite_cancellation(const SuiteOptions& o) {
  Tally cancel("minkowski.cancellation");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 3);
    const VPolytope a = random_poly(rng, d), c = random_poly(rng, d);
    // Half of the cases use B = A so that the premise holds.
    const VPolytope b = k % 2 == 0 ? VPolytope{a.vertices.colwise().reverse().colwise().reverse()} : random_poly(rng, d);
    const bool premise = equals(minkowski_sum(a, c), minkowski_sum(b, c));
    cancel.record(!premise || equals(a, b), [&] { return std::string("A + C = B + C but A != B"); });
  }
  return {cancel.result()};
}

std::vector<Check> suite_split(const SuiteOptions& o) {
  std::map<std::string, Tally> tallies;
  std::vector<std::string> order;
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 4);
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const MaxoutNetwork net = random_network(d, s, rng());
    for (const Check& c : audit_split(net, split(net), sample_points(d, rng(), o.samples))) {
      if (!tallies.count(c.id)) {
        tallies.emplace(c.id, Tally(c.id));
        order.push_back(c.id);
      }
      tallies.at(c.id).record(c.pass, [&] { return c.detail; });
    }
  }
  std::vector<Check> out;
  for (const auto& id : order) out.push_back(tallies.at(id).result());
  return out;
}

std::vector<Check> suite_epigraph(const SuiteOptions& o) {
  Tally size("epigraph.size"), value("epigraph.min_t");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 4);
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const int rank = static_cast<int>(uniform_int(rng, 2, 3));
    const MaxoutNetwork net = random_network(d, s, rng(), 3, true, rank);
    const ExtendedFormulation ef = epigraph_ef(net);
    size.record(ef.size() == static_cast<Index>(net.total_rank()), [&] { return "size " + std::to_string(ef.size()); });
    for (const Vec& x : sample_points(d, rng(), o.samples)) {
      const Rational got = epigraph_min(ef, x), want = evaluate(net, x);
      value.record(got == want, [&] { return describe_point("min t", x, got, want); });
    }
  }
  return {size.result(), value.result()};
}

std::vector<Check> suite_certificate(const SuiteOptions& o) {
  Tally identity("certificate.sum_identity"), bound("certificate.size_bound"), epi("certificate.epigraphs");
  std::vector<VPolytope> polys{cube(2).v, cross_polytope(2).v, permutahedron(3).v};
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    polys.push_back(random_poly(rng, uniform_int(rng, 1, 3)));
  }
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const VPolytope& p = polys[k];
    const VirtualCertificate cert = virtual_ef_certificate(p);
    for (const Check& c : audit_certificate(p, cert, sample_points(p.dim(), o.seed + k, o.samples))) {
      Tally& t = c.id == "certificate.sum_identity" ? identity : c.id == "certificate.size_bound" ? bound : epi;
      t.record(c.pass, [&] { return "polytope " + std::to_string(k) + ": " + c.detail; });
    }
  }
  return {identity.result(), bound.result(), epi.result()};
}

std::vector<Check> suite_optimize(const SuiteOptions& o) {
  Tally member("optimize.feasible"), optimal("optimize.optimal");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 3);
    const VPolytope p = random_poly(rng, d), q = random_poly(rng, d);
    const VPolytope r = minkowski_sum(p, q);
    const ExtendedFormulation ef_q = ef_from_vertices(q), ef_r = ef_from_vertices(r);
    for (const Vec& c : probe_objectives(rng, r)) {
      const VirtualOptimum opt = virtual_optimize(ef_q, ef_r, c);
      member.record(contains(p, opt.x), [&] { return "x_P = " + to_string(opt.x) + " not in P"; });
      const Rational want = support(p, c).value;
      optimal.record(opt.value == want, [&] { return describe_point("c·x_P", c, opt.value, want); });
    }
  }
  return {member.result(), optimal.result()};
}

std::vector<Check> suite_summand(const SuiteOptions&) {
  Tally summand("summand.erosion");
  for (int n = 3; n <= 5; ++n) {
    const PolytopePair pi = permutahedron(n);
    for (int k = 1; k < n; ++k) {
      const VPolytope delta = hypersimplex(k, n);
      const VPolytope q = erode(pi.h, delta);
      summand.record(equals(minkowski_sum(delta, q), pi.v),
                     [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  return {summand.result()};
}

std::vector<Check> suite_sorting_ef(const SuiteOptions&) {
  Tally size("sorting.size"), lifts("sorting.vertex_lifts"), facets("sorting.facet_supports");
  for (int n : {2, 4}) {
    const ExtendedFormulation ef = sorting_network_ef(n);
    const auto comps = batcher_comparators(n);
    size.record(ef.size() == 2 * static_cast<Index>(comps.size()) && ef.size() < (Index{1} << n) - 2 + (n == 2 ? 1 : 0),
                [&] { return "n=" + std::to_string(n) + " size " + std::to_string(ef.size()); });
    const PolytopePair pi = permutahedron(n);
    for (Index i = 0; i < pi.v.num_vertices(); ++i) {
      lifts.record(ef_contains(ef, pi.v.vertex(i)), [&] { return "vertex " + to_string(pi.v.vertex(i)); });
    }
    std::vector<Vec> normals;
    for (Index i = 0; i < pi.h.num_inequalities(); ++i) normals.emplace_back(pi.h.ineq_lhs.row(i).transpose());
    normals.emplace_back(Vec::Ones(n));
    normals.emplace_back(-Vec::Ones(n));
    for (const Vec& c : normals) {
      const LpOutcome got = ef_support(ef, c);
      const Rational want = support(pi.v, c).value;
      facets.record(got.optimal() && got.value == want, [&] { return "normal " + to_string(c); });
    }
  }
  return {size.result(), lifts.result(), facets.result()};
}

std::vector<Check> suite_completion(const SuiteOptions& o) {
  Tally size("completion.size"), contains_p("completion.contains_p"), down("completion.downward_closed");
  for (std::size_t k = 0; k < o.cases; ++k) {
    Rng rng = case_rng(o, k);
    const Index d = uniform_int(rng, 1, 3);
    VPolytope p = random_poly(rng, d);
    p.vertices.rowwise() -= p.vertices.colwise().minCoeff();  // into the nonnegative orthant
    const ExtendedFormulation ef_p = ef_from_vertices(p);
    const ExtendedFormulation qef = monotone_completion(ef_p);
    size.record(qef.size() == ef_p.size() + 2 * d, [&] { return "size " + std::to_string(qef.size()); });
    for (Index i = 0; i < p.num_vertices(); ++i) {
      contains_p.record(ef_contains(qef, p.vertex(i)), [&] { return "vertex " + to_string(p.vertex(i)); });
    }
    // A point of the set: a scaled-down convex combination of vertices; then
    // a further coordinatewise shrink of it must stay inside.
    Vec weights(p.num_vertices());
    for (Index i = 0; i < weights.size(); ++i) weights(i) = uniform_int(rng, 1, 5);
    weights /= weights.sum();
    Vec x = p.vertices.transpose() * weights;
    for (Index i = 0; i < d; ++i) x(i) *= Rational(uniform_int(rng, 0, 4), 4);
    Vec shrunk = x;
    for (Index i = 0; i < d; ++i) shrunk(i) *= Rational(uniform_int(rng, 0, 4), 4);
    down.record(ef_contains(qef, x) && ef_contains(qef, shrunk), [&] { return "point " + to_string(shrunk); });
  }
  return {size.result(), contains_p.result(), down.result()};
}

std::vector<Check> suite_generators(const SuiteOptions&) {
  Tally audit("generators.cross_validation");
  auto cross = [&](const std::string& name, const PolytopePair& pair) {
    bool ok = equals(vertex_enumeration(pair.h), pair.v);
    for (Index i = 0; i < pair.v.num_vertices(); ++i) ok = ok && pair.h.satisfied_by(pair.v.vertex(i));
    audit.record(ok, [&] { return name; });
  };
  for (Index d = 1; d <= 4; ++d) {
    cross("cube(" + std::to_string(d) + ")", cube(d));
    cross("cross_polytope(" + std::to_string(d) + ")", cross_polytope(d));
  }
  for (int n = 2; n <= 5; ++n) cross("permutahedron(" + std::to_string(n) + ")", permutahedron(n));
  return {audit.result()};
}

using SuiteFn = std::vector<Check> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"support-calculus", suite_support_calculus},
      {"face-additivity", suite_face_additivity},
      {"lex-additivity", suite_lex_additivity},
      {"cancellation", suite_cancellation},
      {"split", suite_split},
      {"epigraph", suite_epigraph},
      {"certificate", suite_certificate},
      {"optimize", suite_optimize},
      {"summand", suite_summand},
      {"sorting-ef", suite_sorting_ef},
      {"completion", suite_completion},
      {"generators", suite_generators},
  };
  return table;
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> audit_split(const MaxoutNetwork& net, const SplitResult& result, const std::vector<Vec>& samples) {
  std::vector<Check> out;
  out.push_back({"split.monotone", is_monotone(result.g) && is_monotone(result.h), "g and h have nonnegative weights"});
  const bool sizes = result.g.size() == net.size() && result.h.size() == net.size();
  out.push_back({"split.size", sizes,
                 "s=" + std::to_string(net.size()) + " size(g)=" + std::to_string(result.g.size()) +
                     " size(h)=" + std::to_string(result.h.size())});
  out.push_back(guarded("split.pointwise", [&] {
    Tally t("split.pointwise");
    for (const Vec& x : samples) {
      const Rational f = evaluate(net, x), g = evaluate(result.g, x), h = evaluate(result.h, x);
      t.record(f == g - h, [&] { return describe_point("g-h", x, g - h, f); });
    }
    return t.result();
  }));
  return out;
}

std::vector<Check> audit_epigraph(const MaxoutNetwork& net, const ExtendedFormulation& ef,
                                  const std::vector<Vec>& samples) {
  std::vector<Check> out;
  out.push_back({"epigraph.size", ef.size() == static_cast<Index>(net.total_rank()),
                 "size " + std::to_string(ef.size()) + ", total rank " + std::to_string(net.total_rank())});
  out.push_back(guarded("epigraph.min_t", [&] {
    Tally t("epigraph.min_t");
    for (const Vec& x : samples) {
      const Rational got = epigraph_min(ef, x), want = evaluate(net, x);
      t.record(got == want, [&] { return describe_point("min t", x, got, want); });
    }
    return t.result();
  }));
  return out;
}

std::vector<Check> audit_newton(const MaxoutNetwork& net, const VPolytope& newt, const std::vector<Vec>& samples) {
  return {guarded("newton.support", [&] {
    Tally t("newton.support");
    for (const Vec& c : samples) {
      const Rational got = support(newt, c).value, want = evaluate(net, c);
      t.record(got == want, [&] { return describe_point("support", c, got, want); });
    }
    return t.result();
  })};
}

std::vector<Check> audit_certificate(const VPolytope& p, const VirtualCertificate& cert,
                                     const std::vector<Vec>& samples) {
  std::vector<Check> out;
  out.push_back(guarded("certificate.sum_identity", [&] {
    return Check{"certificate.sum_identity", equals(minkowski_sum(p, cert.q), cert.r), "P + Newt(h) = Newt(g)"};
  }));
  out.push_back({"certificate.size_bound", cert.total_size() <= 4 * static_cast<Index>(cert.s),
                 "size(EF_Q)+size(EF_R)=" + std::to_string(cert.total_size()) + " <= 4s=" + std::to_string(4 * cert.s)});
  out.push_back(guarded("certificate.epigraphs", [&] {
    Tally t("certificate.epigraphs");
    for (const Vec& c : samples) {
      const Rational r = epigraph_min(cert.ef_r, c), q = epigraph_min(cert.ef_q, c);
      const Rational fr = support(cert.r, c).value, fq = support(cert.q, c).value;
      t.record(r == fr && q == fq, [&] { return describe_point("epi(f_R)", c, r, fr) + "; " + describe_point("epi(f_Q)", c, q, fq); });
    }
    return t.result();
  }));
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : suites()) {
    if (suite == name) {
      std::vector<Check> checks;
      try {
        checks = fn(options);
      } catch (const std::exception& e) {
        checks.push_back({name + ".run", false, std::string("exception: ") + e.what()});
      }
      return checks;
    }
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace vexf
