#pragma once

#include "ariadne/graph.hpp"

#include <cstdint>
#include <vector>

namespace ariadne::gen {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();
/// Hub vertex 1 joined to a rim cycle on vertices 2..rim+1.
Graph wheel(int rim);
/// Complete multipartite graph; part sizes given in order, vertices numbered part by part.
Graph complete_multipartite(const std::vector<int>& parts);
/// K4 minus the edge {1,2}.
Graph diamond();

/// Connected G(n, p) sample; resamples until connected.
Graph gnp_connected(int n, double p, std::uint64_t seed);

/// One representative of every isomorphism class of connected graphs on n vertices (n <= 6).
std::vector<Graph> connected_graphs(int n);

}  // namespace ariadne::gen
