#include "ariadne/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

namespace ariadne::gen {

Graph complete(int n) {
  std::vector<Graph::Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Graph::Edge> e;
  for (int u = 1; u <= n; ++u) e.emplace_back(u, u % n + 1);
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Graph::Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Graph::Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph(leaves + 1, e);
}

Graph petersen() {
  std::vector<Graph::Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);
    e.emplace_back(i + 1, i + 6);
    e.emplace_back(i + 6, (i + 2) % 5 + 6);
  }
  return Graph(10, e);
}

Graph wheel(int rim) {
  if (rim < 3) throw ValidationError("wheel rim needs at least 3 vertices");
  std::vector<Graph::Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(1, i + 2);
    e.emplace_back(i + 2, (i + 1) % rim + 2);
  }
  return Graph(rim + 1, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Graph::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u + 1, v + 1);
  return Graph(n, e);
}

Graph diamond() { return Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Graph gnp_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Graph::Edge> e;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g(n, e);
    if (g.connected()) return g;
  }
}

namespace {

using Mask = std::uint32_t;

int pair_bit(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

bool mask_connected(Mask m, int n) {
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int u = 0; u < n; ++u) {
      if (!(frontier >> u & 1)) continue;
      for (int v = 0; v < n; ++v)
        if (v != u && (m >> pair_bit(u, v, n) & 1)) next |= 1u << v;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 6) throw ValidationError("connected_graphs supports 1 <= n <= 6");
  if (n == 1) return {Graph(1)};
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<Mask> seen;
  std::vector<Graph> out;
  for (Mask m = 0; m < (Mask(1) << pairs); ++m) {
    if (std::popcount(m) < n - 1 || !mask_connected(m, n)) continue;
    Mask canon = ~Mask(0);
    for (const auto& p : perms) {
      Mask image = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (m >> pair_bit(u, v, n) & 1) image |= Mask(1) << pair_bit(p[u], p[v], n);
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Graph::Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (canon >> pair_bit(u, v, n) & 1) e.emplace_back(u + 1, v + 1);
    out.emplace_back(n, e);
  }
  return out;
}

}  // namespace ariadne::gen
