#pragma once

// JSON schemas, rational literals, SVG rendering, input digests.
//
// Point configuration schema:
//   { "dim": d, "points": [["p/q", ...], ...], "labels": ["A", ...]? }
// Coordinates are strings "p/q" / "p" or plain JSON integers; floats are
// rejected (exactness contract).  Antipodal inputs add "antipodal": true
// and list one representative per line.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "orchard/geometry.hpp"
#include "orchard/oriented.hpp"
#include "orchard/twopart.hpp"

namespace orchard {

using json = nlohmann::json;

struct ParsedPoints {
  int dim = 0;
  MatrixR points;   // dim x n
  GroundSet labels;
  bool antipodal = false;
};

ParsedPoints parse_points_json(const json& j);
ParsedPoints parse_points_text(const std::string& text);  // whole file

json configuration_json(const Configuration& c);
json antipodal_json(const AntipodalConfiguration& a);
json partition_json(const TwoPartition& p);
json oriented_partition_json(const OrientedTwoPartition& p);

// Scatter plot for d == 2: one glyph per point, circles for the class of
// the first point ("cherry"), squares for the other ("plum").
std::string svg_scatter(const Configuration& c, const TwoPartition& p);

// FNV-1a 64-bit digest of raw input bytes, as fixed-width hex.
std::string input_digest(std::string_view bytes);

}  // namespace orchard
