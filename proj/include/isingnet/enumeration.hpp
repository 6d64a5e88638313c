#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isingnet/network.hpp"

namespace isingnet {

struct unsupported_size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lexicographically minimal serialization of the permuted coupling matrix
// over all vertex permutations, pruned by iterated degree/signed-degree
// partition refinement. Works for unsigned graphs (entries 0/1) as well.
CanonicalForm canonical_signed_form(const CouplingMatrix& m);

// Vertex permutations p with m[p(i)][p(j)] == m[i][j] for all i, j.
// Always contains the identity.
std::vector<std::array<std::uint8_t, kMaxSpins>> graph_automorphisms(const CouplingMatrix& m);

// One representative per isomorphism class of connected simple graphs on n
// vertices, in ascending canonical-form order. 1 <= n <= 7.
std::vector<UnsignedGraph> enumerate_connected_graphs(int n, int workers = 0);

// One representative per signed-isomorphism class over all 2^e sign
// assignments to the edges of g, in ascending canonical-form order.
std::vector<Network> assign_couplings(const UnsignedGraph& g);

// Canonical forms of every connected interaction network on n spins, sorted
// ascending. This is the backbone ordering: ordinal k (1-based) in this list
// is the network "N<n>-<k>".
std::vector<CanonicalForm> enumerate_canonical_forms(int n, int workers = 0);

// Fully materialized networks with ids assigned, same order as
// enumerate_canonical_forms.
std::vector<Network> enumerate_networks(int n, int workers = 0);

Network network_from_canonical(const CanonicalForm& form, std::uint64_t ordinal);

struct NetworkCounts {
    std::uint64_t connected_graphs = 0;
    std::uint64_t interaction_networks = 0;
};

// Cardinalities of enumerate_connected_graphs(n) and of the union of
// assign_couplings over them, without materializing the networks. 3 <= n <= 7.
NetworkCounts count_networks(int n, int workers = 0);

std::string format_network_id(int n, std::uint64_t ordinal);

// Parses "N<n>-<ordinal>"; returns false on malformed input.
bool parse_network_id(std::string_view id, int& n, std::uint64_t& ordinal);

}  // namespace isingnet
