// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <vector>

#include "sos/core/ids.hpp"

namespace sos::graph {

using core::UserId;

/// Follow digraph: edge (i, j) means i follows j. No self-loops.
class SocialDigraph {
 public:
  void add_node(const UserId& u) { nodes_.insert(u); }
  /// Inserts both endpoints; throws std::invalid_argument on a self-loop.
  void add_edge(const UserId& from, const UserId& to);
  bool has_edge(const UserId& from, const UserId& to) const {
    return edges_.contains({from, to});
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<UserId>& nodes() const { return nodes_; }
  const std::set<std::pair<UserId, UserId>>& edges() const { return edges_; }

 private:
  std::set<UserId> nodes_;
  std::set<std::pair<UserId, UserId>> edges_;
};

/// Undirected companion: edge {i, j} exists iff (i, j) or (j, i) does.
class UndirectedGraph {
 public:
  void add_node(const UserId& u) { nodes_.insert(u); }
  void add_edge(const UserId& x, const UserId& y);
  bool has_edge(const UserId& x, const UserId& y) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<UserId>& nodes() const { return nodes_; }
  const std::set<std::pair<UserId, UserId>>& edges() const { return edges_; }

 private:
  std::set<UserId> nodes_;
  std::set<std::pair<UserId, UserId>> edges_;  // stored with smaller id first
};

UndirectedGraph to_undirected(const SocialDigraph& g);

/// Edge-list text: one "follower followee" pair per line; '#' comments and
/// blank lines ignored. Isolated nodes can be declared with "node <id>".
SocialDigraph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SocialDigraph& g);

/// GraphViz form for rendering the follow graph.
std::string to_dot(const SocialDigraph& g);

}  // namespace sos::graph
