#pragma once

#include <optional>
#include <vector>

#include "vexf/maxout_net.hpp"

namespace vexf {

/// f = g - h with g and h monotone, of the same size and ranks as f.
struct SplitResult {
  MaxoutNetwork g;
  MaxoutNetwork h;
  /// Networks after closure and after each push step, when requested.
  std::optional<std::vector<MaxoutNetwork>> trace;
};

/// Adds a zero-weight arc u -> v for every pair with a directed path u ~> v.
/// Closure arcs are kept afterwards; they never change the function.
MaxoutNetwork transitive_closure(const MaxoutNetwork& net);

bool is_transitively_closed(const MaxoutNetwork& net);

/// Rewrites the incoming weights of the p-th unit (0-based, in unit_order())
/// into nonnegative form and compensates on its out-neighbors. Requires a
/// transitively closed network whose first p units are already nonnegative
/// and p < size() - 1. Throws PreconditionError otherwise.
MaxoutNetwork push_step(const MaxoutNetwork& net, std::size_t p);

SplitResult split(const MaxoutNetwork& net, bool keep_trace = false);

}  // namespace vexf
