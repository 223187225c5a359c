// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>

#include "sos/graph/digraph.hpp"

namespace sos::graph {

class UndefinedMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |E| / (n(n-1)). Throws UndefinedMetricError for n < 2.
double density(const SocialDigraph& g);

/// All-pairs shortest path statistics over directed edges. Unreachable
/// ordered pairs are counted, never averaged as infinity. A node that
/// reaches no other node has undefined eccentricity and is excluded from
/// radius/center.
struct PathStats {
  double avg_shortest_path = 0.0;            // over reachable ordered pairs
  double avg_shortest_path_unordered = 0.0;  // min(l(i,j), l(j,i)) per unordered pair
  std::optional<int> diameter;               // max finite distance
  std::map<UserId, int> eccentricity;        // only nodes reaching >= 1 other
  std::optional<int> radius;
  std::vector<UserId> center;                // sorted argmin eccentricity
  std::uint64_t reachable_pairs = 0;         // ordered, i != j
  std::uint64_t unreachable_pairs = 0;

  bool operator==(const PathStats&) const = default;
};

/// BFS from every node. Throws UndefinedMetricError for n < 2.
PathStats shortest_path_stats(const SocialDigraph& g);

/// 3 * triangles / connected triples (paths of length 2 counted at their
/// center vertex); 0 when the graph has no triads at all.
double transitivity(const UndirectedGraph& g);

/// The full bundle: density, path stats, and undirected transitivity.
struct GraphStats {
  double density = 0.0;
  PathStats paths;
  double transitivity = 0.0;
};

GraphStats analyze(const SocialDigraph& g);

}  // namespace sos::graph
