#include "vexf/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "vexf/errors.hpp"
#include "vexf/polytopes.hpp"

namespace vexf::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<Index>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

Mat matrix_from_json(const Json& rows, Index cols, const char* what) {
  if (!rows.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  Mat m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    const Vec r = vector_from_json(rows[static_cast<std::size_t>(i)]);
    if (r.size() != cols) throw ParseError(std::string(what) + " row has the wrong length");
    m.row(i) = r.transpose();
  }
  return m;
}

void constraints_from_json(const Json& list, Index d, Mat& lhs, Vec& rhs, const char* what) {
  if (!list.is_array()) throw ParseError(std::string(what) + " must be an array");
  lhs.resize(static_cast<Index>(list.size()), d);
  rhs.resize(static_cast<Index>(list.size()));
  for (Index i = 0; i < lhs.rows(); ++i) {
    const Json& c = list[static_cast<std::size_t>(i)];
    const Vec a = vector_from_json(field(c, "a"));
    if (a.size() != d) throw ParseError(std::string(what) + " normal has the wrong length");
    lhs.row(i) = a.transpose();
    rhs(i) = rational_from_json(field(c, "b"));
  }
}

Json constraints_to_json(const Mat& lhs, const Vec& rhs) {
  Json out = Json::array();
  for (Index i = 0; i < lhs.rows(); ++i) {
    out.push_back({{"a", to_json(Vec(lhs.row(i).transpose()))}, {"b", to_json(rhs(i))}});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vec(m.row(i).transpose())));
  return out;
}

Json to_json(const MaxoutNetwork& net) {
  Json neurons = Json::array();
  for (const Neuron& n : net.neurons) {
    Json j = {{"id", n.id}, {"kind", n.is_input() ? "input" : "maxout"}};
    if (n.is_input()) {
      j["coord"] = n.coord;
    } else {
      j["rank"] = n.rank;
      Json in = Json::array();
      for (const InArc& a : n.in) in.push_back({{"from", net.neurons.at(a.from).id}, {"weights", to_json(a.weights)}});
      j["in"] = std::move(in);
    }
    neurons.push_back(std::move(j));
  }
  return {{"d", net.d}, {"neurons", std::move(neurons)}, {"output", net.neurons.at(net.output).id}};
}

Json to_json(const VPolytope& p) { return {{"d", p.dim()}, {"vertices", to_json(p.vertices)}}; }

Json to_json(const HPolyhedron& h) {
  return {{"d", h.dim},
          {"ineqs", constraints_to_json(h.ineq_lhs, h.ineq_rhs)},
          {"eqs", constraints_to_json(h.eq_lhs, h.eq_rhs)}};
}

Json to_json(const ExtendedFormulation& ef) {
  return {{"lift", to_json(ef.lift)}, {"proj", {{"matrix", to_json(ef.projection)}, {"offset", to_json(ef.offset)}}}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Vec vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array, got " + j.dump());
  Vec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = rational_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

MaxoutNetwork network_from_json(const Json& j) {
  MaxoutNetwork net;
  net.d = int_field(j, "d");
  const Json& neurons = array_field(j, "neurons");
  std::map<std::string, std::size_t> index;
  for (const Json& n : neurons) {
    const Json& id = field(n, "id");
    if (!id.is_string()) throw ParseError("neuron id must be a string");
    index.emplace(id.get<std::string>(), index.size());
  }
  if (index.size() != neurons.size()) throw ParseError("neuron ids are not unique");
  for (const Json& n : neurons) {
    Neuron neuron;
    neuron.id = n.at("id").get<std::string>();
    const Json& kind = field(n, "kind");
    if (kind == "input") {
      neuron.kind = NeuronKind::Input;
      const Index coord = int_field(n, "coord");
      if (coord < 0) throw ParseError("input coordinate must be nonnegative");
      neuron.coord = static_cast<std::size_t>(coord);
    } else if (kind == "maxout") {
      neuron.kind = NeuronKind::Maxout;
      neuron.rank = static_cast<int>(int_field(n, "rank"));
      for (const Json& arc : array_field(n, "in")) {
        const Json& from = field(arc, "from");
        if (!from.is_string() || !index.count(from.get<std::string>())) {
          throw ParseError("arc into '" + neuron.id + "' references unknown neuron " + from.dump());
        }
        neuron.in.push_back({index.at(from.get<std::string>()), vector_from_json(field(arc, "weights"))});
      }
    } else {
      throw ParseError("neuron kind must be \"input\" or \"maxout\", got " + kind.dump());
    }
    net.neurons.push_back(std::move(neuron));
  }
  const Json& output = field(j, "output");
  if (!output.is_string() || !index.count(output.get<std::string>())) throw ParseError("output references unknown neuron");
  net.output = index.at(output.get<std::string>());
  return net;
}

VPolytope vpolytope_from_json(const Json& j) {
  const Index d = int_field(j, "d");
  if (d < 1) throw ParseError("polytope dimension must be at least 1");
  const Mat pts = matrix_from_json(array_field(j, "vertices"), d, "vertices");
  if (pts.rows() == 0) throw ParseError("vertex list is empty");
  return prune_to_vertices(pts);
}

HPolyhedron hpolyhedron_from_json(const Json& j) {
  HPolyhedron h;
  h.dim = int_field(j, "d");
  if (h.dim < 1) throw ParseError("polyhedron dimension must be at least 1");
  constraints_from_json(array_field(j, "ineqs"), h.dim, h.ineq_lhs, h.ineq_rhs, "ineqs");
  if (j.contains("eqs")) {
    constraints_from_json(j.at("eqs"), h.dim, h.eq_lhs, h.eq_rhs, "eqs");
  } else {
    h.eq_lhs = Mat(0, h.dim);
    h.eq_rhs = Vec(0);
  }
  return h;
}

ExtendedFormulation ef_from_json(const Json& j) {
  ExtendedFormulation ef;
  ef.lift = hpolyhedron_from_json(field(j, "lift"));
  const Json& proj = field(j, "proj");
  ef.offset = vector_from_json(field(proj, "offset"));
  ef.projection = matrix_from_json(field(proj, "matrix"), ef.lift.dim, "projection matrix");
  if (ef.projection.rows() != ef.offset.size()) throw ParseError("projection matrix and offset disagree");
  return ef;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace vexf::io
