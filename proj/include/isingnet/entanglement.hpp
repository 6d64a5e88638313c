#pragma once

#include <Eigen/Dense>

#include "isingnet/hamiltonian.hpp"

namespace isingnet {

// Pure state over the Fock basis; length must be a power of two. Complex so
// the same reduction code serves both eigenstates and time-evolved states.
using PureState = Eigen::VectorXcd;

// Single-spin reduced density matrix rho_i[a][b] = sum over the other spins
// of psi*(bit i = a) psi(bit i = b). Input must be normalized to 1e-10.
Eigen::Matrix2cd reduced_density(const PureState& psi, int spin);

// tr(rho^2), in [1/2, 1] for a valid single-qubit density matrix.
double purity(const Eigen::Matrix2cd& rho);

// Multipartite entanglement Q = (1/N) sum_i 2 [1 - tr(rho_i^2)], in [0, 1]:
// 0 for product states, 1 for GHZ.
double global_entanglement(const PureState& psi);

struct MinEntanglement {
    double q_min = 0.0;
    int index = 0;  // eigenstate index nu, ties broken by lowest index
};

MinEntanglement min_eigenstate_entanglement(const SpectralDecomposition& spectrum);

}  // namespace isingnet
