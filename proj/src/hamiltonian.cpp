#include "isingnet/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isingnet {

long long classical_energy(const CouplingMatrix& j, Config s)
{
    long long acc = 0;
    for (int a = 0; a < j.n; ++a)
        for (int b = a + 1; b < j.n; ++b)
            acc += static_cast<long long>(j(a, b)) * spin_sign(s, a) * spin_sign(s, b);
    return -acc;
}

double classical_energy(const CouplingMatrix& j, Config s, std::span<const double> hz)
{
    if (static_cast<int>(hz.size()) < j.n)
        throw std::invalid_argument("longitudinal field vector shorter than spin count");
    double u = static_cast<double>(classical_energy(j, s));
    for (int i = 0; i < j.n; ++i) u -= spin_sign(s, i) * hz[i];
    return u;
}

int local_field(const CouplingMatrix& j, Config s, int i)
{
    if (i < 0 || i >= j.n) throw std::invalid_argument("spin index out of range");
    int m = 0;
    for (int b = 0; b < j.n; ++b)
        if (b != i) m += j(i, b) * spin_sign(s, b);
    return m;
}

namespace {

void check_size(const CouplingMatrix& j)
{
    if (j.n < 1 || j.n > kMaxSpins)
        throw std::invalid_argument("Hamiltonian supports 1 to 7 spins, got " +
                                    std::to_string(j.n));
}

}  // namespace

Eigen::MatrixXd build_hamiltonian_pauli(const CouplingMatrix& j, const FieldParams& fields)
{
    check_size(j);
    const Config dim = basis_dimension(j.n);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    // -(1/2) J_ab Z_a Z_b over ordered pairs; each term adds +-1/2 to the
    // diagonal, which stays exact in floating point at these magnitudes.
    for (int a = 0; a < j.n; ++a)
        for (int b = 0; b < j.n; ++b) {
            if (a == b || j(a, b) == 0) continue;
            const double coeff = -0.5 * j(a, b);
            for (Config s = 0; s < dim; ++s)
                h(s, s) += coeff * spin_sign(s, a) * spin_sign(s, b);
        }

    for (int i = 0; i < j.n; ++i) {
        if (fields.hz[i] == 0.0) continue;
        for (Config s = 0; s < dim; ++s) h(s, s) -= spin_sign(s, i) * fields.hz[i];
    }

    for (int i = 0; i < j.n; ++i) {
        for (Config s = 0; s < dim; ++s) h(flip_spin(s, i), s) += -fields.hx[i];
    }
    return h;
}

Eigen::MatrixXd build_hamiltonian_fock(const CouplingMatrix& j, const FieldParams& fields)
{
    check_size(j);
    const Config dim = basis_dimension(j.n);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    for (Config s = 0; s < dim; ++s) {
        double u = static_cast<double>(classical_energy(j, s));
        for (int i = 0; i < j.n; ++i)
            if (fields.hz[i] != 0.0) u -= spin_sign(s, i) * fields.hz[i];
        h(s, s) = u;
        for (int i = 0; i < j.n; ++i) h(flip_spin(s, i), s) = -fields.hx[i];
    }
    return h;
}

SpectralDecomposition diagonalize(const Eigen::MatrixXd& h)
{
    if (h.rows() != h.cols()) throw std::invalid_argument("Hamiltonian must be square");
    if (h.rows() < 1 || h.rows() > (1 << kMaxSpins))
        throw std::invalid_argument("Hamiltonian dimension out of range");
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = r + 1; c < h.cols(); ++c)
            if (h(r, c) != h(c, r))
                throw std::invalid_argument("Hamiltonian must be symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

bool has_degenerate_levels(const SpectralDecomposition& spectrum)
{
    for (Eigen::Index i = 0; i + 1 < spectrum.energies.size(); ++i)
        if (std::abs(spectrum.energies[i + 1] - spectrum.energies[i]) < 1e-9) return true;
    return false;
}

}  // namespace isingnet
