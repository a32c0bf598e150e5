#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vexf/polyhedron.hpp"
#include "vexf/rational.hpp"

namespace vexf {

enum class NeuronKind { Input, Maxout };

/// Incoming arc of a maxout unit: one weight per row of the unit.
struct InArc {
  std::size_t from = 0;
  Vec weights;
};

struct Neuron {
  std::string id;
  NeuronKind kind = NeuronKind::Maxout;
  std::size_t coord = 0;  ///< input coordinate (input neurons only)
  int rank = 0;           ///< number of linear forms (maxout units only)
  std::vector<InArc> in;

  bool is_input() const { return kind == NeuronKind::Input; }
  /// rank x in-degree matrix whose row i is the i-th weight vector.
  Mat weight_matrix() const;
};

/// Bias-free rank-k maxout network on a DAG with a single output unit.
/// Arc sources are indices into `neurons`. Plain data: call validate() before
/// relying on the invariants for externally supplied networks.
struct MaxoutNetwork {
  Index d = 0;
  std::vector<Neuron> neurons;
  std::size_t output = 0;

  /// Number of maxout units.
  std::size_t size() const;
  /// Sum of the ranks of all maxout units.
  std::size_t total_rank() const;
  /// Index of the neuron with the given id, or npos.
  std::size_t find(const std::string& id) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct Diagnostic {
  std::string code;  ///< stable identifier, e.g. "cycle" or "arity"
  std::string message;
};

/// Empty iff all structural invariants hold; one entry per violation.
std::vector<Diagnostic> validate(const MaxoutNetwork& net);

/// Throws PreconditionError listing the diagnostics when `net` is invalid.
void require_valid(const MaxoutNetwork& net);

/// Kahn's algorithm over all neurons with lexicographic tie-break on ids.
/// Throws PreconditionError on a cycle or a dangling arc.
std::vector<std::size_t> topological_order(const MaxoutNetwork& net);

/// Maxout units only, in topological_order().
std::vector<std::size_t> unit_order(const MaxoutNetwork& net);

/// Value of every neuron at x, indexed like `net.neurons`.
std::vector<Rational> evaluate_all(const MaxoutNetwork& net, const Vec& x);

Rational evaluate(const MaxoutNetwork& net, const Vec& x);

bool is_monotone(const MaxoutNetwork& net);

/// Replaces every rank-k unit by a left-deep chain of k-1 rank-2 units.
/// The last unit of a chain keeps the original id.
MaxoutNetwork to_rank2(const MaxoutNetwork& net);

/// d inputs named x0..x{d-1} followed by no units.
MaxoutNetwork inputs_only(Index d);

/// Rank-2 network computing the support function of the given points: a
/// single unit of rank v(P), with a lone vertex duplicated, reduced with
/// to_rank2. Size max(1, v(P)-1).
MaxoutNetwork from_vertices(const VPolytope& p);

/// Single rank-2 unit with all-zero rows: the constant zero function.
MaxoutNetwork zero_network(Index d);

/// Rank-2 unit computing max{0, sum coeff_j z_{inputs_j}}.
Neuron relu_unit(std::string id, const std::vector<std::size_t>& inputs, const Vec& coefficients);

/// Appends `unit` and makes it the output.
void append_output(MaxoutNetwork& net, Neuron unit);

}  // namespace vexf
