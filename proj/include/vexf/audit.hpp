#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vexf/extended_formulation.hpp"
#include "vexf/maxout_net.hpp"
#include "vexf/monotone_split.hpp"

namespace vexf {

/// One audited invariant. `id` names the invariant, e.g. "split.pointwise".
struct Check {
  std::string id;
  bool pass = true;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

/// g, h monotone, sizes equal to the input, and f = g - h on every sample.
std::vector<Check> audit_split(const MaxoutNetwork& net, const SplitResult& split, const std::vector<Vec>& samples);

/// Size equals total rank and min-t over the formulation equals f at every sample.
std::vector<Check> audit_epigraph(const MaxoutNetwork& net, const ExtendedFormulation& ef,
                                  const std::vector<Vec>& samples);

/// support(newt, c) = f(c) at every sample.
std::vector<Check> audit_newton(const MaxoutNetwork& net, const VPolytope& newt, const std::vector<Vec>& samples);

/// P + Q = R, size(EF_Q) + size(EF_R) <= 4s, and both epigraph formulations
/// reproduce the supports of Q and R at every sample.
std::vector<Check> audit_certificate(const VPolytope& p, const VirtualCertificate& cert,
                                     const std::vector<Vec>& samples);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t samples = 20;  ///< random sample points per case
};

/// Names accepted by run_suite().
std::vector<std::string> suite_names();

/// Runs a seeded invariant suite. Throws PreconditionError for unknown names.
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace vexf
