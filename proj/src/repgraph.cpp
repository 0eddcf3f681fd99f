#include "sggi/repgraph.hpp"

#include <cstdio>
#include <numeric>

#include "sggi/errors.hpp"
#include "sggi/text.hpp"

namespace sggi {

RepGraph::RepGraph(std::size_t n, std::size_t r)
    : n_(n), r_(r), mate_(r, std::vector<std::int32_t>(n, -1)) {}

void RepGraph::add_edge(Point a, Point b, std::size_t label) {
  if (a == b) throw InvalidArgument("loop edge at vertex " + std::to_string(a + 1));
  if (a >= n_ || b >= n_) throw InvalidArgument("vertex out of range");
  if (label >= r_) throw InvalidArgument("label " + std::to_string(label) + " out of range");
  Edge e{std::min(a, b), std::max(a, b), label};
  if (edges_.count(e)) {
    throw InvalidArgument("repeated edge " + std::to_string(e.u + 1) + " " +
                          std::to_string(e.v + 1) + " " + std::to_string(label));
  }
  auto& mate = mate_[label];
  if (mate[a] >= 0 || mate[b] >= 0) {
    Point bad = mate[a] >= 0 ? a : b;
    throw InvalidArgument("matching violation: vertex " + std::to_string(bad + 1) +
                          " lies on two edges with label " + std::to_string(label));
  }
  mate[a] = b;
  mate[b] = a;
  edges_.insert(e);
}

std::vector<Edge> RepGraph::edges_with_label(std::size_t label) const {
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (e.label == label) out.push_back(e);
  }
  return out;
}

bool RepGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const auto& e : edges_) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

RepGraph to_graph(const Sggi& s) {
  RepGraph g(s.degree(), s.length());
  for (std::size_t i = 0; i < s.length(); ++i) {
    for (const auto& c : s[i].cycles()) {
      if (c.size() != 2) throw InvalidArgument("generator " + std::to_string(i) + " is not an involution");
      g.add_edge(c[0], c[1], i);
    }
  }
  return g;
}

Sggi from_graph(const RepGraph& g) {
  std::vector<std::vector<std::vector<Point>>> cycles(g.r());
  for (const auto& e : g.edges()) cycles[e.label].push_back({e.u, e.v});
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g.r(); ++i) {
    if (cycles[i].empty()) {
      throw InvalidArgument("label " + std::to_string(i) + " has no edges");
    }
    gens.push_back(Permutation::from_cycles(g.n(), cycles[i]));
  }
  return Sggi(g.n(), std::move(gens));
}

std::string format_graph(const RepGraph& g) {
  std::string out = "graph " + std::to_string(g.n()) + " " + std::to_string(g.r()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
           std::to_string(e.label) + "\n";
  }
  return out;
}

RepGraph parse_graph(std::string_view input) {
  auto lines = text::split_lines(input);
  while (!lines.empty() && text::split_words(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty graph text");
  auto header = text::split_words(lines[0]);
  if (header.size() != 3 || header[0] != "graph") throw ParseError("graph header must be 'graph n r'");
  std::size_t n = text::parse_count(header[1], "vertex count");
  std::size_t r = text::parse_count(header[2], "label count");
  if (n > 65535) throw ParseError("vertex count too large");
  RepGraph g(n, r);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto w = text::split_words(lines[k]);
    if (w.size() != 3) throw ParseError("edge line " + std::to_string(k + 1) + " must be 'u v label'");
    std::size_t u = text::parse_count(w[0], "vertex"), v = text::parse_count(w[1], "vertex");
    std::size_t label = text::parse_count(w[2], "label");
    if (u == v) throw ParseError("loop edge on line " + std::to_string(k + 1));
    if (u == 0 || v == 0 || u > n || v > n) {
      throw ParseError("vertex out of range on line " + std::to_string(k + 1));
    }
    if (u > v) throw ParseError("edge endpoints must be increasing on line " + std::to_string(k + 1));
    if (label >= r) throw ParseError("label out of range on line " + std::to_string(k + 1));
    try {
      g.add_edge(static_cast<Point>(u - 1), static_cast<Point>(v - 1), label);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(k + 1) + ")");
    }
  }
  if (format_graph(g) != [&] {
        std::string canon;
        for (const auto& l : lines) {
          auto w = text::split_words(l);
          for (std::size_t i = 0; i < w.size(); ++i) canon += (i ? " " : "") + w[i];
          canon += "\n";
        }
        return canon;
      }()) {
    throw ParseError("edge lines are not in sorted order");
  }
  return g;
}

std::string export_dot(const RepGraph& g) {
  // Hues spread evenly over the labels, so each label gets its own colour.
  auto colour = [&](std::size_t label) {
    char buf[32];
    double hue = g.r() ? static_cast<double>(label) / static_cast<double>(g.r()) : 0.0;
    std::snprintf(buf, sizeof buf, "%.3f 0.850 0.750", hue);
    return std::string(buf);
  };
  std::string out = "graph G {\n  node [shape=circle];\n";
  for (std::size_t x = 0; x < g.n(); ++x) out += "  " + std::to_string(x + 1) + ";\n";
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u + 1) + " -- " + std::to_string(e.v + 1) + " [label=\"" +
           std::to_string(e.label) + "\", color=\"" + colour(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

RepGraph relabel(const RepGraph& g, const std::vector<std::size_t>& label_map, std::size_t new_r) {
  if (label_map.size() != g.r()) throw InvalidArgument("label map size differs from label count");
  RepGraph out(g.n(), new_r);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, label_map[e.label]);
  return out;
}

}  // namespace sggi
