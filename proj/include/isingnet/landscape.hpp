#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "isingnet/network.hpp"
#include "isingnet/spin_config.hpp"

namespace isingnet {

// Subgraph of the N-dimensional hypercube keeping only single-flip edges that
// preserve the integer classical energy U. Edges are stored as (a, b) pairs
// with a < b, sorted; vertices are the edge endpoints unless isolated
// vertices were requested.
struct EquienergySubgraph {
    int n_spins = 0;
    bool includes_isolated = false;
    std::vector<Config> vertices;                   // sorted ascending
    std::vector<std::pair<Config, Config>> edges;   // sorted, a < b
    int components = 0;
    long long rank = 0;  // circuit rank r = e - v + c
};

EquienergySubgraph build_equienergy_subgraph(const CouplingMatrix& j,
                                             bool include_isolated = false);

// Recomputes r = e - v + c from the stored sets (connected components by
// union-find). Throws std::invalid_argument if an edge references a vertex
// outside the vertex set.
long long circuit_rank(const EquienergySubgraph& g);

// Network-side predictor of the subgraph structure: degrees d_i, flip
// freedoms l_i = (1 + d_i) mod 2, and the number of unconstrained spin pairs
// L = sum_{i<j} l_i l_j [A_ij = 0].
struct DegreeProfile {
    int n = 0;
    std::array<int, kMaxSpins> degrees{};
    std::array<int, kMaxSpins> flip_freedoms{};
    long long unconstrained_pairs = 0;
};

DegreeProfile degree_profile(const CouplingMatrix& j);

}  // namespace isingnet
