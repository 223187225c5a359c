// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/graph/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace sos::graph {

namespace {

constexpr int kUnreached = -1;

struct Indexed {
  std::vector<UserId> ids;                 // index -> id, sorted
  std::vector<std::vector<int>> out_adj;   // directed successors

  explicit Indexed(const SocialDigraph& g) {
    ids.assign(g.nodes().begin(), g.nodes().end());
    out_adj.resize(ids.size());
    for (const auto& [from, to] : g.edges()) {
      out_adj[index_of(from)].push_back(index_of(to));
    }
    for (auto& neighbors : out_adj) {
      std::sort(neighbors.begin(), neighbors.end());
    }
  }

  int index_of(const UserId& id) const {
    return static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  }
};

std::vector<int> bfs_distances(const Indexed& g, int source) {
  std::vector<int> dist(g.ids.size(), kUnreached);
  dist[source] = 0;
  std::deque<int> frontier{source};
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int v : g.out_adj[u]) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

double density(const SocialDigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) {
    throw UndefinedMetricError("density needs at least 2 nodes");
  }
  return static_cast<double>(g.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

PathStats shortest_path_stats(const SocialDigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) {
    throw UndefinedMetricError("path statistics need at least 2 nodes");
  }
  Indexed idx(g);

  PathStats stats;
  std::uint64_t distance_sum = 0;
  std::uint64_t unordered_sum = 0;
  std::uint64_t unordered_pairs = 0;
  int max_finite = kUnreached;

  std::vector<std::vector<int>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = bfs_distances(idx, static_cast<int>(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    int ecc = kUnreached;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      if (dist[i][j] == kUnreached) {
        ++stats.unreachable_pairs;
      } else {
        ++stats.reachable_pairs;
        distance_sum += static_cast<std::uint64_t>(dist[i][j]);
        ecc = std::max(ecc, dist[i][j]);
      }
      if (i < j) {
        int forward = dist[i][j];
        int backward = dist[j][i];
        int best = kUnreached;
        if (forward != kUnreached && backward != kUnreached) {
          best = std::min(forward, backward);
        } else if (forward != kUnreached) {
          best = forward;
        } else if (backward != kUnreached) {
          best = backward;
        }
        if (best != kUnreached) {
          unordered_sum += static_cast<std::uint64_t>(best);
          ++unordered_pairs;
        }
      }
    }
    if (ecc != kUnreached) {
      stats.eccentricity.emplace(idx.ids[i], ecc);
      max_finite = std::max(max_finite, ecc);
    }
  }

  if (stats.reachable_pairs > 0) {
    stats.avg_shortest_path =
        static_cast<double>(distance_sum) / static_cast<double>(stats.reachable_pairs);
  }
  if (unordered_pairs > 0) {
    stats.avg_shortest_path_unordered =
        static_cast<double>(unordered_sum) / static_cast<double>(unordered_pairs);
  }
  if (max_finite != kUnreached) {
    stats.diameter = max_finite;
  }
  if (!stats.eccentricity.empty()) {
    int radius = std::numeric_limits<int>::max();
    for (const auto& [node, ecc] : stats.eccentricity) {
      radius = std::min(radius, ecc);
    }
    stats.radius = radius;
    for (const auto& [node, ecc] : stats.eccentricity) {
      if (ecc == radius) {
        stats.center.push_back(node);
      }
    }
  }
  return stats;
}

double transitivity(const UndirectedGraph& g) {
  // Index the neighbourhoods once; triples are counted at their center.
  std::vector<UserId> ids(g.nodes().begin(), g.nodes().end());
  auto index_of = [&ids](const UserId& id) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::vector<std::size_t>> adj(ids.size());
  for (const auto& [x, y] : g.edges()) {
    adj[index_of(x)].push_back(index_of(y));
    adj[index_of(y)].push_back(index_of(x));
  }
  for (auto& neighbors : adj) {
    std::sort(neighbors.begin(), neighbors.end());
  }

  std::uint64_t triples = 0;
  std::uint64_t closed = 0;  // closed triples, counted at their center
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const auto& nv = adj[v];
    const std::uint64_t d = nv.size();
    triples += d * (d - 1) / 2;
    for (std::size_t x = 0; x < nv.size(); ++x) {
      for (std::size_t y = x + 1; y < nv.size(); ++y) {
        if (std::binary_search(adj[nv[x]].begin(), adj[nv[x]].end(), nv[y])) {
          ++closed;
        }
      }
    }
  }
  if (triples == 0) {
    return 0.0;
  }
  // Each triangle closes the triple at all three of its centers, so `closed`
  // already equals 3 * triangles.
  return static_cast<double>(closed) / static_cast<double>(triples);
}

GraphStats analyze(const SocialDigraph& g) {
  GraphStats stats;
  stats.density = density(g);
  stats.paths = shortest_path_stats(g);
  stats.transitivity = transitivity(to_undirected(g));
  return stats;
}

}  // namespace sos::graph
