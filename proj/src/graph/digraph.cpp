// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/graph/digraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sos::graph {

void SocialDigraph::add_edge(const UserId& from, const UserId& to) {
  if (from == to) {
    throw std::invalid_argument("self-loop rejected: " + from.str());
  }
  nodes_.insert(from);
  nodes_.insert(to);
  edges_.emplace(from, to);
}

void UndirectedGraph::add_edge(const UserId& x, const UserId& y) {
  if (x == y) {
    throw std::invalid_argument("self-loop rejected: " + x.str());
  }
  nodes_.insert(x);
  nodes_.insert(y);
  edges_.emplace(std::min(x, y), std::max(x, y));
}

bool UndirectedGraph::has_edge(const UserId& x, const UserId& y) const {
  return edges_.contains({std::min(x, y), std::max(x, y)});
}

UndirectedGraph to_undirected(const SocialDigraph& g) {
  UndirectedGraph u;
  for (const UserId& node : g.nodes()) {
    u.add_node(node);
  }
  for (const auto& [from, to] : g.edges()) {
    u.add_edge(from, to);
  }
  return u;
}

SocialDigraph parse_edge_list(std::istream& in) {
  SocialDigraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string first, second;
    if (!(fields >> first)) {
      continue;
    }
    if (first == "node") {
      if (!(fields >> second)) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": node declaration needs an id");
      }
      auto id = UserId::try_from_string(second);
      if (!id) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": invalid user id \"" + second + "\"");
      }
      g.add_node(*id);
      continue;
    }
    if (!(fields >> second)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected \"follower followee\"");
    }
    auto from = UserId::try_from_string(first);
    auto to = UserId::try_from_string(second);
    if (!from || !to) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": invalid user id");
    }
    g.add_edge(*from, *to);
  }
  return g;
}

void write_edge_list(std::ostream& out, const SocialDigraph& g) {
  std::set<UserId> endpoint_nodes;
  for (const auto& [from, to] : g.edges()) {
    endpoint_nodes.insert(from);
    endpoint_nodes.insert(to);
  }
  for (const UserId& node : g.nodes()) {
    if (!endpoint_nodes.contains(node)) {
      out << "node " << node.str() << '\n';
    }
  }
  for (const auto& [from, to] : g.edges()) {
    out << from.str() << ' ' << to.str() << '\n';
  }
}

std::string to_dot(const SocialDigraph& g) {
  std::ostringstream out;
  out << "digraph follows {\n";
  for (const UserId& node : g.nodes()) {
    out << "  \"" << node.str() << "\";\n";
  }
  for (const auto& [from, to] : g.edges()) {
    out << "  \"" << from.str() << "\" -> \"" << to.str() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sos::graph
