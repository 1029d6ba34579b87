#pragma once

#include <iosfwd>
#include <string>

#include "gconf/constructions.hpp"
#include "gconf/graph.hpp"

namespace gconf::io {

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double v);
double parse_double(const std::string& token);

/// Point file: `d n`, then n lines of d coordinates.
void write_points(std::ostream& os, const PointSet& e);
PointSet read_points(std::istream& is);

/// Graph file: `V E`, then E lines `u v w` with 0-based vertices.
void write_graph(std::ostream& os, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& is);

void save_points(const std::string& path, const PointSet& e);
PointSet load_points(const std::string& path);
void save_graph(const std::string& path, const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);

}  // namespace gconf::io
