#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vexf/maxout_net.hpp"
#include "vexf/polyhedron.hpp"

namespace vexf::io {

using Json = nlohmann::ordered_json;

// Rationals travel as canonical "p/q" strings ("p" for integers); readers also
// accept JSON integers.
Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const MaxoutNetwork& net);
Json to_json(const VPolytope& p);
Json to_json(const HPolyhedron& h);
Json to_json(const ExtendedFormulation& ef);

// Readers throw ParseError on malformed documents.
Rational rational_from_json(const Json& j);
Vec vector_from_json(const Json& j);
/// Structure only; run validate() for the network invariants.
MaxoutNetwork network_from_json(const Json& j);
/// Pruned to a minimal V-representation. Empty vertex lists are rejected.
VPolytope vpolytope_from_json(const Json& j);
HPolyhedron hpolyhedron_from_json(const Json& j);
ExtendedFormulation ef_from_json(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace vexf::io
