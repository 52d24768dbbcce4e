#include "orchard/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace orchard {

namespace {

Rational coordinate_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    return Rational(static_cast<long long>(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) {
    throw InputError(
        "coordinates must be exact: use \"p/q\" strings or integers, "
        "not floating point");
  }
  throw InputError("coordinate must be a \"p/q\" string or an integer");
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

ParsedPoints parse_points_json(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw InputError("input needs an integer \"dim\"");
  }
  ParsedPoints out;
  out.dim = j["dim"].get<int>();
  if (out.dim < 1) throw InputError("\"dim\" must be positive");
  if (!j.contains("points") || !j["points"].is_array() ||
      j["points"].empty()) {
    throw InputError("input needs a non-empty \"points\" array");
  }
  const auto& pts = j["points"];
  const int n = static_cast<int>(pts.size());
  out.points.resize(out.dim, n);
  for (int k = 0; k < n; ++k) {
    const auto& row = pts[static_cast<std::size_t>(k)];
    if (!row.is_array() || static_cast<int>(row.size()) != out.dim) {
      throw InputError("point " + std::to_string(k) + " must list " +
                       std::to_string(out.dim) + " coordinates");
    }
    for (int i = 0; i < out.dim; ++i) {
      out.points(i, k) = coordinate_from_json(row[static_cast<std::size_t>(i)]);
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() ||
        static_cast<int>(j["labels"].size()) != n) {
      throw InputError("\"labels\" must list one string per point");
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& v : j["labels"]) {
      if (!v.is_string()) throw InputError("labels must be strings");
      labels.push_back(v.get<std::string>());
    }
    out.labels = GroundSet(std::move(labels));
  }
  if (j.contains("antipodal")) {
    if (!j["antipodal"].is_boolean()) {
      throw InputError("\"antipodal\" must be a boolean");
    }
    out.antipodal = j["antipodal"].get<bool>();
  }
  return out;
}

ParsedPoints parse_points_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_points_json(j);
}

namespace {

json points_array(const MatrixR& m) {
  json pts = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    json row = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      row.push_back(m(i, j).str());
    }
    pts.push_back(std::move(row));
  }
  return pts;
}

}  // namespace

json configuration_json(const Configuration& c) {
  json j;
  j["dim"] = c.dim();
  j["points"] = points_array(c.points());
  j["labels"] = c.labels().labels();
  return j;
}

json antipodal_json(const AntipodalConfiguration& a) {
  json j;
  j["dim"] = a.dim();
  j["antipodal"] = true;
  j["points"] = points_array(a.representatives());
  j["labels"] = a.base().quotient().labels();
  return j;
}

json partition_json(const TwoPartition& p) {
  const auto [first, second] = p.classes();
  auto names = [&](const std::vector<int>& idx) {
    json out = json::array();
    for (int i : idx) out.push_back(p.ground().label(i));
    return out;
  };
  json j;
  j["classes"] = json::array({names(first), names(second)});
  j["trivial"] = p.is_trivial();
  return j;
}

json oriented_partition_json(const OrientedTwoPartition& p) {
  json j;
  j["parity"] = (p.parity() == +1) ? "even" : "odd";
  if (p.parity() == +1) {
    j["classes"] = partition_json(p.quotient_partition())["classes"];
    j["trivial"] = p.is_trivial();
  } else {
    const auto [side_a, side_b] = semi_orientation_sections(p);
    auto names = [&](const std::vector<OrientedElement>& xs) {
      json out = json::array();
      for (OrientedElement x : xs) out.push_back(p.base().id(x));
      return out;
    };
    j["sections"] = json::array({names(side_a), names(side_b)});
  }
  return j;
}

std::string svg_scatter(const Configuration& c, const TwoPartition& p) {
  if (c.dim() != 2) throw InputError("svg: planar configurations only");
  if (!(c.labels() == p.ground())) {
    throw InputError("svg: partition does not match the configuration");
  }
  const int n = c.size();

  Rational xmin = c.points()(0, 0), xmax = xmin;
  Rational ymin = c.points()(1, 0), ymax = ymin;
  for (int j = 1; j < n; ++j) {
    xmin = std::min(xmin, c.points()(0, j));
    xmax = std::max(xmax, c.points()(0, j));
    ymin = std::min(ymin, c.points()(1, j));
    ymax = std::max(ymax, c.points()(1, j));
  }
  double x0 = xmin.approx(), x1 = xmax.approx();
  double y0 = ymin.approx(), y1 = ymax.approx();
  double spanx = x1 - x0, spany = y1 - y0;
  if (spanx <= 0) spanx = 1;
  if (spany <= 0) spany = 1;
  const double size = 800.0, margin = 0.05 * size;
  const double usable = size - 2 * margin;
  auto sx = [&](double x) { return margin + (x - x0) / spanx * usable; };
  auto sy = [&](double y) { return size - margin - (y - y0) / spany * usable; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "  <style>.cherry{fill:#c0392b;} .plum{fill:#6c3483;}</style>\n"
      << "  <rect width=\"800\" height=\"800\" fill=\"#fdfdfb\"/>\n";
  for (int j = 0; j < n; ++j) {
    const double px = sx(c.points()(0, j).approx());
    const double py = sy(c.points()(1, j).approx());
    if (p.alpha(j) == +1) {
      svg << "  <circle class=\"cherry\" cx=\"" << fmt2(px) << "\" cy=\""
          << fmt2(py) << "\" r=\"8\"><title>" << c.labels().label(j)
          << "</title></circle>\n";
    } else {
      svg << "  <rect class=\"plum\" x=\"" << fmt2(px - 8) << "\" y=\""
          << fmt2(py - 8) << "\" width=\"16\" height=\"16\"><title>"
          << c.labels().label(j) << "</title></rect>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace orchard
