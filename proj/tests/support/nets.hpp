#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vexf/maxout_net.hpp"
#include "vexf/rational.hpp"

namespace fixtures {

struct ArcSpec {
  std::string from;
  std::vector<long> weights;
};

/// Appends a maxout unit whose arcs are given by neuron id.
inline std::size_t add_unit(vexf::MaxoutNetwork& net, const std::string& id, int rank,
                            const std::vector<ArcSpec>& arcs) {
  vexf::Neuron n;
  n.id = id;
  n.kind = vexf::NeuronKind::Maxout;
  n.rank = rank;
  for (const auto& a : arcs) {
    vexf::InArc arc;
    arc.from = net.find(a.from);
    arc.weights = vexf::Vec(static_cast<vexf::Index>(a.weights.size()));
    for (std::size_t i = 0; i < a.weights.size(); ++i) arc.weights(static_cast<vexf::Index>(i)) = a.weights[i];
    n.in.push_back(std::move(arc));
  }
  net.neurons.push_back(std::move(n));
  net.output = net.neurons.size() - 1;
  return net.output;
}

/// max{x0 - x1, 0}
inline vexf::MaxoutNetwork relu_difference() {
  auto net = vexf::inputs_only(2);
  add_unit(net, "u", 2, {{"x0", {1, 0}}, {"x1", {-1, 0}}});
  return net;
}

/// max{x0, x1}
inline vexf::MaxoutNetwork max2() {
  auto net = vexf::inputs_only(2);
  add_unit(net, "u", 2, {{"x0", {1, 0}}, {"x1", {0, 1}}});
  return net;
}

/// max of four coordinates as a balanced tree of three rank-2 units.
inline vexf::MaxoutNetwork max4_tree() {
  auto net = vexf::inputs_only(4);
  add_unit(net, "a", 2, {{"x0", {1, 0}}, {"x1", {0, 1}}});
  add_unit(net, "b", 2, {{"x2", {1, 0}}, {"x3", {0, 1}}});
  add_unit(net, "c", 2, {{"a", {1, 0}}, {"b", {0, 1}}});
  return net;
}

}  // namespace fixtures
