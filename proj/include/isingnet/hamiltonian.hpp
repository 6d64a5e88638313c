#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>

#include "isingnet/network.hpp"
#include "isingnet/spin_config.hpp"

namespace isingnet {

// Per-spin magnetic fields, in units of J. The survey sweeps a uniform
// transverse field and keeps hz = 0.
struct FieldParams {
    std::array<double, kMaxSpins> hx{};
    std::array<double, kMaxSpins> hz{};

    static FieldParams uniform_transverse(double hx)
    {
        FieldParams f;
        f.hx.fill(hx);
        return f;
    }

    bool longitudinal_zero() const
    {
        for (double v : hz)
            if (v != 0.0) return false;
        return true;
    }
};

// Zero-field classical energy U(s) = -(1/2) s^T J s, exact in integer
// arithmetic (couplings are in {-1, 0, +1}).
long long classical_energy(const CouplingMatrix& j, Config s);

// U(s) = -(1/2) s^T J s - s^T hz. The longitudinal terms are subtracted in
// ascending spin order on top of the exact integer part.
double classical_energy(const CouplingMatrix& j, Config s, std::span<const double> hz);

// m_i = sum_j J_ij s_j. Flipping spin i changes U by 2 s_i m_i, so the flip
// preserves U iff m_i = 0.
int local_field(const CouplingMatrix& j, Config s, int i);

// Dense 2^N x 2^N real symmetric Hamiltonian,
//   H = -(1/2) sum_ij J_ij Z_i Z_j - sum_i hz_i Z_i - sum_i hx_i X_i,
// accumulated operator by operator in the Fock basis.
Eigen::MatrixXd build_hamiltonian_pauli(const CouplingMatrix& j, const FieldParams& fields);

// Same Hamiltonian assembled as a hopping problem on the hypercube: the
// diagonal entry of configuration s is U(s) and entry (F_i s, s) is -hx_i.
// Agrees with build_hamiltonian_pauli entry by entry, bit for bit.
Eigen::MatrixXd build_hamiltonian_fock(const CouplingMatrix& j, const FieldParams& fields);

// Eigenvalues ascending, orthonormal eigenvectors in matching columns.
struct SpectralDecomposition {
    Eigen::VectorXd energies;
    Eigen::MatrixXd states;

    int dimension() const { return static_cast<int>(energies.size()); }
};

// Dense symmetric eigendecomposition (deterministic; no randomized pivoting).
// Throws std::invalid_argument on non-symmetric input and std::runtime_error
// if the solver fails to converge.
SpectralDecomposition diagonalize(const Eigen::MatrixXd& h);

// True when any adjacent eigenvalue gap is below 1e-9.
bool has_degenerate_levels(const SpectralDecomposition& spectrum);

}  // namespace isingnet
