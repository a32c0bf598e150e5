#include "vexf/maxout_net.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "vexf/errors.hpp"

namespace vexf {

Mat Neuron::weight_matrix() const {
  Mat w(rank, static_cast<Index>(in.size()));
  for (std::size_t j = 0; j < in.size(); ++j) w.col(static_cast<Index>(j)) = in[j].weights;
  return w;
}

std::size_t MaxoutNetwork::size() const {
  return static_cast<std::size_t>(
      std::count_if(neurons.begin(), neurons.end(), [](const Neuron& n) { return !n.is_input(); }));
}

std::size_t MaxoutNetwork::total_rank() const {
  std::size_t total = 0;
  for (const Neuron& n : neurons) {
    if (!n.is_input()) total += static_cast<std::size_t>(n.rank);
  }
  return total;
}

std::size_t MaxoutNetwork::find(const std::string& id) const {
  for (std::size_t i = 0; i < neurons.size(); ++i) {
    if (neurons[i].id == id) return i;
  }
  return npos;
}

namespace {

// Kahn's algorithm; returns a partial order when the graph has a cycle.
std::vector<std::size_t> kahn(const MaxoutNetwork& net) {
  const std::size_t n = net.neurons.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const InArc& a : net.neurons[v].in) {
      if (a.from >= n) continue;
      ++indegree[v];
      out[a.from].push_back(v);
    }
  }
  auto by_id = [&](std::size_t a, std::size_t b) {
    return net.neurons[a].id != net.neurons[b].id ? net.neurons[a].id > net.neurons[b].id : a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_id)> ready(by_id);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

}  // namespace

std::vector<Diagnostic> validate(const MaxoutNetwork& net) {
  std::vector<Diagnostic> diags;
  auto report = [&](std::string code, std::string message) {
    diags.push_back({std::move(code), std::move(message)});
  };
  const std::size_t n = net.neurons.size();

  if (net.d < 1) report("dimension", "input dimension must be at least 1");
  std::set<std::string> ids;
  std::vector<int> coord_seen(static_cast<std::size_t>(std::max<Index>(net.d, 0)), 0);
  std::size_t inputs = 0;
  std::vector<std::size_t> out_degree(n, 0);
  bool dangling = false;
  for (std::size_t v = 0; v < n; ++v) {
    const Neuron& nv = net.neurons[v];
    if (!ids.insert(nv.id).second) report("duplicate-id", "neuron id '" + nv.id + "' is not unique");
    for (const InArc& a : nv.in) {
      if (a.from >= n) {
        report("dangling-arc", "arc into '" + nv.id + "' references a missing neuron");
        dangling = true;
      } else {
        ++out_degree[a.from];
      }
    }
    if (nv.is_input()) {
      ++inputs;
      if (!nv.in.empty()) report("input-arcs", "input neuron '" + nv.id + "' has incoming arcs");
      if (static_cast<Index>(nv.coord) >= net.d) {
        report("input-coord", "input neuron '" + nv.id + "' has coordinate out of range");
      } else if (++coord_seen[nv.coord] > 1) {
        report("input-coord", "input coordinate " + std::to_string(nv.coord) + " is used twice");
      }
      continue;
    }
    if (nv.rank < 2) report("rank", "maxout unit '" + nv.id + "' has rank below 2");
    if (nv.in.empty()) report("no-inputs", "maxout unit '" + nv.id + "' has no incoming arcs");
    for (const InArc& a : nv.in) {
      if (a.weights.size() != nv.rank) {
        report("arity", "arc into '" + nv.id + "' carries " + std::to_string(a.weights.size()) +
                            " weights but the unit has rank " + std::to_string(nv.rank));
      }
    }
  }
  if (static_cast<Index>(inputs) != net.d) {
    report("input-count", "expected " + std::to_string(net.d) + " input neurons, found " + std::to_string(inputs));
  }
  const std::size_t units = n - inputs;
  if (units == 0) report("no-units", "network has no maxout units");

  if (!dangling && kahn(net).size() != n) report("cycle", "the network graph contains a cycle");

  std::size_t sinks = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!net.neurons[v].is_input() && out_degree[v] == 0) ++sinks;
  }
  if (units > 0 && sinks != 1) {
    report("output", "expected exactly one maxout unit without out-arcs, found " + std::to_string(sinks));
  }
  if (net.output >= n || net.neurons[net.output].is_input()) {
    report("output", "output does not reference a maxout unit");
  } else if (out_degree[net.output] != 0) {
    report("output", "output unit '" + net.neurons[net.output].id + "' has out-arcs");
  }
  return diags;
}

void require_valid(const MaxoutNetwork& net) {
  const auto diags = validate(net);
  if (diags.empty()) return;
  std::string msg = "invalid maxout network:";
  for (const auto& d : diags) msg += " [" + d.code + "] " + d.message + ";";
  throw PreconditionError(msg);
}

std::vector<std::size_t> topological_order(const MaxoutNetwork& net) {
  for (const Neuron& nv : net.neurons) {
    for (const InArc& a : nv.in) {
      if (a.from >= net.neurons.size()) throw PreconditionError("dangling arc into '" + nv.id + "'");
    }
  }
  auto order = kahn(net);
  if (order.size() != net.neurons.size()) throw PreconditionError("the network graph contains a cycle");
  return order;
}

std::vector<std::size_t> unit_order(const MaxoutNetwork& net) {
  std::vector<std::size_t> units;
  for (std::size_t v : topological_order(net)) {
    if (!net.neurons[v].is_input()) units.push_back(v);
  }
  return units;
}

std::vector<Rational> evaluate_all(const MaxoutNetwork& net, const Vec& x) {
  if (x.size() != net.d) throw DimensionError("input has length " + std::to_string(x.size()) +
                                              ", network expects " + std::to_string(net.d));
  std::vector<Rational> z(net.neurons.size());
  for (std::size_t v : topological_order(net)) {
    const Neuron& nv = net.neurons[v];
    if (nv.is_input()) {
      z[v] = x(static_cast<Index>(nv.coord));
      continue;
    }
    Vec rows = Vec::Zero(nv.rank);
    for (const InArc& a : nv.in) {
      if (z[a.from] != 0) rows += a.weights * z[a.from];
    }
    z[v] = rows.maxCoeff();
  }
  return z;
}

Rational evaluate(const MaxoutNetwork& net, const Vec& x) { return evaluate_all(net, x)[net.output]; }

bool is_monotone(const MaxoutNetwork& net) {
  for (const Neuron& nv : net.neurons) {
    for (const InArc& a : nv.in) {
      for (Index i = 0; i < a.weights.size(); ++i) {
        if (a.weights(i) < 0) return false;
      }
    }
  }
  return true;
}

MaxoutNetwork to_rank2(const MaxoutNetwork& net) {
  // First pass: lay out slots. A rank-k unit becomes k-1 consecutive slots,
  // the last of which keeps the unit's id and receives its out-arcs.
  std::vector<std::size_t> first_slot(net.neurons.size()), remap(net.neurons.size());
  std::size_t slots = 0;
  for (std::size_t v = 0; v < net.neurons.size(); ++v) {
    const Neuron& nv = net.neurons[v];
    const std::size_t width = nv.is_input() || nv.rank <= 2 ? 1 : static_cast<std::size_t>(nv.rank - 1);
    first_slot[v] = slots;
    slots += width;
    remap[v] = slots - 1;
  }

  MaxoutNetwork out;
  out.d = net.d;
  out.neurons.reserve(slots);
  for (std::size_t v = 0; v < net.neurons.size(); ++v) {
    const Neuron& nv = net.neurons[v];
    if (nv.is_input() || nv.rank <= 2) {
      Neuron copy = nv;
      for (InArc& a : copy.in) a.from = remap[a.from];
      out.neurons.push_back(std::move(copy));
      continue;
    }
    for (int step = 1; step < nv.rank; ++step) {
      Neuron link;
      link.kind = NeuronKind::Maxout;
      link.rank = 2;
      link.id = step + 1 == nv.rank ? nv.id : nv.id + "#" + std::to_string(step);
      for (const InArc& a : nv.in) {
        Vec w(2);
        w(0) = step == 1 ? a.weights(0) : Rational(0);
        w(1) = a.weights(step);
        link.in.push_back({remap[a.from], std::move(w)});
      }
      if (step > 1) link.in.push_back({first_slot[v] + static_cast<std::size_t>(step) - 2, from_ints({1, 0})});
      out.neurons.push_back(std::move(link));
    }
  }
  out.output = remap[net.output];
  return out;
}

MaxoutNetwork inputs_only(Index d) {
  MaxoutNetwork net;
  net.d = d;
  for (Index i = 0; i < d; ++i) {
    Neuron in;
    in.id = "x" + std::to_string(i);
    in.kind = NeuronKind::Input;
    in.coord = static_cast<std::size_t>(i);
    net.neurons.push_back(std::move(in));
  }
  return net;
}

void append_output(MaxoutNetwork& net, Neuron unit) {
  net.output = net.neurons.size();
  net.neurons.push_back(std::move(unit));
}

MaxoutNetwork from_vertices(const VPolytope& p) {
  if (p.num_vertices() == 0) throw PreconditionError("polytope has no vertices");
  MaxoutNetwork net = inputs_only(p.dim());
  Neuron unit;
  unit.id = "u";
  unit.rank = static_cast<int>(std::max<Index>(2, p.num_vertices()));
  for (Index i = 0; i < p.dim(); ++i) {
    Vec w(unit.rank);
    for (Index r = 0; r < unit.rank; ++r) w(r) = p.vertices(std::min(r, p.num_vertices() - 1), i);
    unit.in.push_back({static_cast<std::size_t>(i), std::move(w)});
  }
  append_output(net, std::move(unit));
  return to_rank2(net);
}

MaxoutNetwork zero_network(Index d) { return from_vertices(VPolytope{Mat::Zero(1, d)}); }

Neuron relu_unit(std::string id, const std::vector<std::size_t>& inputs, const Vec& coefficients) {
  if (static_cast<Index>(inputs.size()) != coefficients.size()) {
    throw DimensionError("relu unit needs one coefficient per input");
  }
  Neuron unit;
  unit.id = std::move(id);
  unit.rank = 2;
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    Vec w(2);
    w(0) = coefficients(static_cast<Index>(j));
    w(1) = 0;
    unit.in.push_back({inputs[j], std::move(w)});
  }
  return unit;
}

}  // namespace vexf
