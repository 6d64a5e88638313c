#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "isingnet/spin_config.hpp"

namespace isingnet {

// Symmetric coupling matrix with entries in {-1, 0, +1} (units of J = 1) and
// zero diagonal. Also doubles as a plain adjacency matrix when every nonzero
// entry is +1.
struct CouplingMatrix {
    int n = 0;
    std::array<std::int8_t, kMaxSpins * kMaxSpins> m{};

    std::int8_t operator()(int i, int j) const { return m[i * kMaxSpins + j]; }

    void set(int i, int j, std::int8_t value)
    {
        m[i * kMaxSpins + j] = value;
        m[j * kMaxSpins + i] = value;
    }

    friend bool operator==(const CouplingMatrix&, const CouplingMatrix&) = default;
};

struct Edge {
    int i = 0;
    int j = 0;  // i < j
    int sign = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Permutation-invariant identity of a signed graph: the lexicographically
// minimal serialization of the permuted coupling matrix, upper triangle in
// row-major order, one byte per slot, encoded {0 -> 0, +1 -> 1, -1 -> 2}.
// Equal byte strings <=> isomorphic signed graphs.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint8_t, kMaxSpins*(kMaxSpins - 1) / 2> bytes{};

    int size() const { return n * (n - 1) / 2; }

    auto operator<=>(const CanonicalForm&) const = default;
};

// Connected simple graph given by its 0/1 adjacency matrix.
struct UnsignedGraph {
    int n = 0;
    CouplingMatrix adjacency;
};

// Connected signed interaction network. `couplings` always stores the
// canonical representative (decoding `canonical_id` reproduces it); `id` is
// the catalog name "N<n>-<ordinal>" once assigned by enumerate_networks.
struct Network {
    int n = 0;
    CouplingMatrix couplings;
    CanonicalForm canonical_id;
    std::string id;
};

bool is_connected(const CouplingMatrix& m);

// Edges with i < j, sorted by (i, j).
std::vector<Edge> edge_list(const CouplingMatrix& m);

CouplingMatrix matrix_from_edges(int n, const std::vector<Edge>& edges);

CouplingMatrix decode_canonical(const CanonicalForm& form);

}  // namespace isingnet
