#include "gconf/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace gconf::io {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw Error(ErrorCode::ParseError, "bad number '" + token + "'");
  return v;
}

namespace {

std::string next_token(std::istream& is, const char* what) {
  std::string tok;
  if (!(is >> tok)) throw Error(ErrorCode::ParseError, std::string("unexpected end of input reading ") + what);
  return tok;
}

std::size_t parse_count(const std::string& token) {
  std::size_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + token + "'");
  }
  return v;
}

void expect_end(std::istream& is) {
  std::string extra;
  if (is >> extra) throw Error(ErrorCode::ParseError, "trailing content '" + extra + "'");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::ParseError, "cannot write " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ParseError, "cannot read " + path);
  return is;
}

}  // namespace

void write_points(std::ostream& os, const PointSet& e) {
  os << e.dim() << ' ' << e.size() << '\n';
  for (const auto& p : e.points()) {
    for (int i = 0; i < e.dim(); ++i) os << (i ? " " : "") << format_double(p[i]);
    os << '\n';
  }
}

PointSet read_points(std::istream& is) {
  const std::size_t dim = parse_count(next_token(is, "dimension"));
  const std::size_t n = parse_count(next_token(is, "point count"));
  if (dim != 2 && dim != 3) throw Error(ErrorCode::ParseError, "dimension must be 2 or 3");
  PointSet e(static_cast<int>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, 3> c{};
    for (std::size_t j = 0; j < dim; ++j) c[j] = parse_double(next_token(is, "coordinate"));
    e.push_back(dim == 2 ? Point(c[0], c[1]) : Point(c[0], c[1], c[2]));
  }
  expect_end(is);
  return e;
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

WeightedGraph read_graph(std::istream& is) {
  const std::size_t n = parse_count(next_token(is, "vertex count"));
  const std::size_t m = parse_count(next_token(is, "edge count"));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = parse_count(next_token(is, "edge endpoint"));
    const std::size_t v = parse_count(next_token(is, "edge endpoint"));
    const double w = parse_double(next_token(is, "edge weight"));
    edges.push_back({u, v, w});
  }
  expect_end(is);
  return {n, std::move(edges)};
}

void save_points(const std::string& path, const PointSet& e) {
  auto os = open_out(path);
  write_points(os, e);
}

PointSet load_points(const std::string& path) {
  auto is = open_in(path);
  return read_points(is);
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  auto os = open_out(path);
  write_graph(os, g);
}

WeightedGraph load_graph(const std::string& path) {
  auto is = open_in(path);
  return read_graph(is);
}

}  // namespace gconf::io
