#include "vexf/monotone_split.hpp"

#include <string>

#include "vexf/errors.hpp"

namespace vexf {

namespace {

// reach[u][v]: directed path u ~> v of length >= 1.
std::vector<std::vector<bool>> reachability(const MaxoutNetwork& net, const std::vector<std::size_t>& order) {
  const std::size_t n = net.neurons.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v : order) {
    for (const InArc& a : net.neurons[v].in) {
      reach[a.from][v] = true;
      for (std::size_t u = 0; u < n; ++u) {
        if (reach[u][a.from]) reach[u][v] = true;
      }
    }
  }
  return reach;
}

std::size_t arc_from(const Neuron& v, std::size_t u) {
  for (std::size_t j = 0; j < v.in.size(); ++j) {
    if (v.in[j].from == u) return j;
  }
  return MaxoutNetwork::npos;
}

bool has_negative(const Neuron& v) {
  for (const InArc& a : v.in) {
    for (Index i = 0; i < a.weights.size(); ++i) {
      if (a.weights(i) < 0) return true;
    }
  }
  return false;
}

/// Positive parts a^i and sum of negative parts sum_j b^j per arc, i.e. the
/// two pieces of max_i (a^i - b^i)z = max_i (a^i + sum_{j!=i} b^j)z - sum_j b^j z.
struct WeightSplit {
  std::vector<Vec> inside;   // new weight tuple per arc
  std::vector<Rational> outside;  // sum_j b^j per arc
};

WeightSplit split_weights(const Neuron& v) {
  WeightSplit out;
  for (const InArc& a : v.in) {
    Rational neg_total = 0;
    for (Index i = 0; i < a.weights.size(); ++i) {
      if (a.weights(i) < 0) neg_total -= a.weights(i);
    }
    Vec inside(a.weights.size());
    for (Index i = 0; i < a.weights.size(); ++i) {
      const Rational pos = a.weights(i) > 0 ? a.weights(i) : Rational(0);
      const Rational neg = a.weights(i) < 0 ? Rational(-a.weights(i)) : Rational(0);
      inside(i) = pos + (neg_total - neg);
    }
    out.inside.push_back(std::move(inside));
    out.outside.push_back(std::move(neg_total));
  }
  return out;
}

}  // namespace

MaxoutNetwork transitive_closure(const MaxoutNetwork& net) {
  const auto order = topological_order(net);
  const auto reach = reachability(net, order);
  MaxoutNetwork out = net;
  for (std::size_t v : order) {
    Neuron& nv = out.neurons[v];
    if (nv.is_input()) continue;
    for (std::size_t u : order) {
      if (reach[u][v] && arc_from(nv, u) == MaxoutNetwork::npos) {
        nv.in.push_back({u, Vec::Zero(nv.rank)});
      }
    }
  }
  return out;
}

bool is_transitively_closed(const MaxoutNetwork& net) {
  const auto reach = reachability(net, topological_order(net));
  for (std::size_t v = 0; v < net.neurons.size(); ++v) {
    for (std::size_t u = 0; u < net.neurons.size(); ++u) {
      if (reach[u][v] && arc_from(net.neurons[v], u) == MaxoutNetwork::npos) return false;
    }
  }
  return true;
}

MaxoutNetwork push_step(const MaxoutNetwork& net, std::size_t p) {
  const auto units = unit_order(net);
  if (p + 1 >= units.size()) {
    throw PreconditionError("push_step position " + std::to_string(p) + " must precede the output unit");
  }
  if (!is_transitively_closed(net)) throw PreconditionError("push_step requires a transitively closed network");
  for (std::size_t q = 0; q < p; ++q) {
    if (has_negative(net.neurons[units[q]])) {
      throw PreconditionError("push_step requires units before position " + std::to_string(p) + " to be nonnegative");
    }
  }

  MaxoutNetwork out = net;
  const std::size_t v = units[p];
  const WeightSplit ws = split_weights(net.neurons[v]);
  for (std::size_t j = 0; j < ws.inside.size(); ++j) out.neurons[v].in[j].weights = ws.inside[j];

  // Downstream: w_{u,t}^i -= w_{v,t}^i * sum_j b_{uv}^j for every out-neighbor t.
  for (std::size_t t = 0; t < out.neurons.size(); ++t) {
    Neuron& nt = out.neurons[t];
    const std::size_t via = arc_from(nt, v);
    if (via == MaxoutNetwork::npos) continue;
    const Vec w_vt = nt.in[via].weights;
    for (std::size_t j = 0; j < ws.outside.size(); ++j) {
      if (ws.outside[j] == 0) continue;
      const std::size_t u = net.neurons[v].in[j].from;
      const std::size_t arc = arc_from(nt, u);
      if (arc == MaxoutNetwork::npos) throw PreconditionError("closure arc missing during push_step");
      nt.in[arc].weights -= w_vt * ws.outside[j];
    }
  }
  return out;
}

SplitResult split(const MaxoutNetwork& net, bool keep_trace) {
  require_valid(net);
  SplitResult result;
  if (keep_trace) result.trace.emplace();

  MaxoutNetwork current = transitive_closure(net);
  if (keep_trace) result.trace->push_back(current);
  const auto units = unit_order(current);
  for (std::size_t p = 0; p + 1 < units.size(); ++p) {
    current = push_step(current, p);
    if (keep_trace) result.trace->push_back(current);
  }

  const std::size_t out = current.output;
  const WeightSplit ws = split_weights(current.neurons[out]);
  result.g = current;
  result.h = current;
  const int rank = current.neurons[out].rank;
  for (std::size_t j = 0; j < ws.inside.size(); ++j) {
    result.g.neurons[out].in[j].weights = ws.inside[j];
    result.h.neurons[out].in[j].weights = Vec::Constant(rank, ws.outside[j]);
  }
  return result;
}

}  // namespace vexf
