#include "hyperph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace hyperph {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
  std::size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_weight(const std::string& text, int line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParseError(line, "cannot parse weight '" + text + "'");
  if (!std::isfinite(v))
    throw ParseError(line, "weight must be finite, got '" + text + "'");
  return v;
}

int label_index(std::map<std::string, int>& seen,
                std::vector<std::string>& order, const std::string& label) {
  auto [it, inserted] = seen.emplace(label, static_cast<int>(order.size()));
  if (inserted) order.push_back(label);
  return it->second;
}

template <typename Fn>
auto with_file(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  try {
    return fn(in);
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  }
}

}  // namespace

FilteredHypergraph parse_hypergraph(std::istream& in) {
  std::map<std::string, int> seen;
  std::vector<std::string> order;
  std::vector<Hyperedge> edges;
  std::vector<double> weights;
  std::map<Hyperedge, int> first_line;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = trim(strip_comment(raw));
    if (body.empty()) continue;
    double weight = 0;
    std::string vertex_part = body;
    std::size_t colon = body.find(':');
    if (colon != std::string::npos) {
      std::string weight_part = trim(body.substr(0, colon));
      if (!weight_part.empty()) weight = parse_weight(weight_part, line);
      vertex_part = body.substr(colon + 1);
    }
    std::vector<std::string> labels = tokens(vertex_part);
    if (labels.empty())
      throw ParseError(line, "hyperedge needs at least one vertex");
    Hyperedge e;
    for (const auto& l : labels) e.push_back(label_index(seen, order, l));
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    auto [it, inserted] = first_line.emplace(e, line);
    if (!inserted)
      throw ParseError(line, "duplicate hyperedge (first listed on line " +
                                 std::to_string(it->second) + ")");
    edges.push_back(std::move(e));
    weights.push_back(weight);
  }

  Hypergraph base(order, edges);
  std::map<Hyperedge, double> by_edge;
  for (std::size_t i = 0; i < edges.size(); ++i) by_edge[edges[i]] = weights[i];
  std::vector<double> aligned;
  for (const auto& e : base.edges()) aligned.push_back(by_edge.at(e));
  return FilteredHypergraph(std::move(base), std::move(aligned));
}

FilteredHypergraph parse_hypergraph_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_hypergraph(in); });
}

std::string emit_hypergraph(const FilteredHypergraph& f) {
  const Hypergraph& base = f.base();
  std::string out;
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const Hyperedge& e = base.edges()[i];
    out += format_real(f.weights()[i]);
    out += " :";
    for (int v : e) {
      out += ' ';
      out += base.vertices()[static_cast<std::size_t>(v)];
    }
    out += '\n';
  }
  return out;
}

std::vector<int> parse_vertex_map(std::istream& in, const Hypergraph& domain,
                                  const Hypergraph& codomain) {
  std::vector<int> map(domain.vertex_count(), -1);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = trim(strip_comment(raw));
    if (body.empty()) continue;
    std::size_t arrow = body.find("->");
    if (arrow == std::string::npos)
      throw ParseError(line, "expected '<vertex> -> <vertex>'");
    std::vector<std::string> lhs = tokens(body.substr(0, arrow));
    std::vector<std::string> rhs = tokens(body.substr(arrow + 2));
    if (lhs.size() != 1 || rhs.size() != 1)
      throw ParseError(line, "expected exactly one vertex on each side");
    int from = domain.vertex_index(lhs[0]);
    if (from < 0)
      throw ParseError(line, "unknown domain vertex '" + lhs[0] + "'");
    int to = codomain.vertex_index(rhs[0]);
    if (to < 0)
      throw ParseError(line, "unknown codomain vertex '" + rhs[0] + "'");
    if (map[static_cast<std::size_t>(from)] != -1)
      throw ParseError(line, "vertex '" + lhs[0] + "' is mapped twice");
    map[static_cast<std::size_t>(from)] = to;
  }
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] == -1)
      throw ParseError(line, "no image given for vertex '" +
                                 domain.vertices()[i] + "'");
  return map;
}

std::vector<int> parse_vertex_map_file(const std::string& path,
                                       const Hypergraph& domain,
                                       const Hypergraph& codomain) {
  return with_file(path, [&](std::istream& in) {
    return parse_vertex_map(in, domain, codomain);
  });
}

std::vector<Snapshot> load_evolution_log(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw ParseError(dir, 0, "not a directory");
  std::vector<Snapshot> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".hg")
      continue;
    std::string stem = entry.path().stem().string();
    const char* begin = stem.c_str();
    char* end = nullptr;
    double t = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(t))
      throw ParseError(entry.path().string(), 0,
                       "file name is not a numeric timestamp");
    out.push_back({t, stem, parse_hypergraph_file(entry.path().string())});
  }
  std::sort(out.begin(), out.end(), [](const Snapshot& a, const Snapshot& b) {
    return a.time != b.time ? a.time < b.time : a.label < b.label;
  });
  return out;
}

std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace hyperph
