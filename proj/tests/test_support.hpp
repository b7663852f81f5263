#pragma once

#include <queue>
#include <random>
#include <vector>

#include "xdg/graph.hpp"

namespace testsup {

// Queue-based adjacency-list BFS, kept deliberately apart from the
// library's bit-parallel sweep so the two can check each other.
inline std::vector<int> bfs_oracle(const xdg::Graph& g, int s) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[static_cast<size_t>(u)].push_back(v);
  std::vector<int> dist(static_cast<size_t>(n), xdg::DistanceMatrix::kUnreachable);
  std::queue<int> q;
  dist[static_cast<size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)])
      if (dist[static_cast<size_t>(v)] == xdg::DistanceMatrix::kUnreachable) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline xdg::Graph random_graph(std::mt19937_64& rng, int n, double density) {
  xdg::Graph g(n);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline xdg::Graph petersen() {
  xdg::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

}  // namespace testsup
