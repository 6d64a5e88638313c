#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "isingnet/entanglement.hpp"
#include "isingnet/enumeration.hpp"
#include "test_helpers.hpp"

using namespace isingnet;

namespace {

PureState fock_state(int n, Config s)
{
    PureState psi = PureState::Zero(basis_dimension(n));
    psi[s] = 1.0;
    return psi;
}

PureState ghz_state(int n)
{
    PureState psi = PureState::Zero(basis_dimension(n));
    psi[0] = 1.0 / std::sqrt(2.0);
    psi[basis_dimension(n) - 1] = 1.0 / std::sqrt(2.0);
    return psi;
}

// Independent route: full density matrix, explicit partial trace over the
// other spins, purity from the matrix square.
double entanglement_via_full_density(const PureState& psi, int n)
{
    const Config dim = basis_dimension(n);
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::Matrix2cd ri = Eigen::Matrix2cd::Zero();
        for (Config a = 0; a < dim; ++a)
            for (Config b = 0; b < dim; ++b) {
                if ((a & ~(Config{1} << i)) != (b & ~(Config{1} << i))) continue;
                ri(a >> i & 1u, b >> i & 1u) += rho(a, b);
            }
        q += 2.0 * (1.0 - (ri * ri).trace().real());
    }
    return q / n;
}

}  // namespace

TEST_CASE("product states carry zero entanglement")
{
    for (int n = 1; n <= 4; ++n)
        for (Config s = 0; s < basis_dimension(n); ++s)
            CHECK(global_entanglement(fock_state(n, s)) == 0.0);
}

TEST_CASE("GHZ states are maximally entangled in Q")
{
    for (int n = 2; n <= 7; ++n) {
        const auto psi = ghz_state(n);
        CHECK(std::abs(global_entanglement(psi) - 1.0) < 1e-12);
        for (int i = 0; i < n; ++i) {
            const auto rho = reduced_density(psi, i);
            CHECK(std::abs(rho(0, 0).real() - 0.5) < 1e-12);
            CHECK(std::abs(rho(1, 1).real() - 0.5) < 1e-12);
            CHECK(std::abs(rho(0, 1)) < 1e-12);
        }
    }
}

TEST_CASE("W state hits Q = 8/9")
{
    PureState psi = PureState::Zero(8);
    psi[1] = psi[2] = psi[4] = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(global_entanglement(psi) - 8.0 / 9.0) < 1e-12);
    const auto rho = reduced_density(psi, 0);
    CHECK(std::abs(rho(0, 0).real() - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(rho(1, 1).real() - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("two-spin reduced densities from the half-superposition")
{
    // (|up,up> + |up,down>)/sqrt(2): spin 0 stays pure, spin 1 is coherent
    PureState psi = PureState::Zero(4);
    psi[0] = psi[2] = 1.0 / std::sqrt(2.0);
    const auto rho0 = reduced_density(psi, 0);
    CHECK(std::abs(rho0(0, 0).real() - 1.0) < 1e-12);
    CHECK(std::abs(rho0(1, 1)) < 1e-12);
    CHECK(std::abs(rho0(0, 1)) < 1e-12);
    const auto rho1 = reduced_density(psi, 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(std::abs(rho1(a, b) - 0.5) < 1e-12);
}

TEST_CASE("purity of reference density matrices")
{
    Eigen::Matrix2cd pure = Eigen::Matrix2cd::Zero();
    pure(0, 0) = 1.0;
    CHECK(purity(pure) == 1.0);
    Eigen::Matrix2cd mixed = 0.5 * Eigen::Matrix2cd::Identity();
    CHECK(purity(mixed) == 0.5);
    Eigen::Matrix2cd projector;
    projector << 0.5, 0.5, 0.5, 0.5;
    CHECK(purity(projector) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("entanglement rejects unnormalized states")
{
    PureState psi = PureState::Zero(4);
    psi[0] = 2.0;
    CHECK_THROWS_AS(reduced_density(psi, 0), std::invalid_argument);
}

TEST_CASE("Q is invariant under global phase and spin relabeling")
{
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss;
    const int n = 4;
    const Config dim = basis_dimension(n);
    for (int rep = 0; rep < 20; ++rep) {
        PureState psi(dim);
        for (Config s = 0; s < dim; ++s) psi[s] = std::complex<double>(gauss(rng), gauss(rng));
        psi.normalize();
        const double q = global_entanglement(psi);

        const auto phase = std::polar(1.0, gauss(rng));
        CHECK(std::abs(global_entanglement(phase * psi) - q) < 1e-10);

        std::array<int, 4> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        PureState relabeled(dim);
        for (Config s = 0; s < dim; ++s) {
            Config target = 0;
            for (int i = 0; i < n; ++i)
                if (s >> i & 1u) target |= Config{1} << perm[i];
            relabeled[target] = psi[s];
        }
        CHECK(std::abs(global_entanglement(relabeled) - q) < 1e-10);
    }
}

TEST_CASE("minimum eigenstate entanglement at zero transverse field")
{
    const auto ferro = testing::triangle(1, 1, 1);
    const auto spec = diagonalize(build_hamiltonian_fock(ferro, FieldParams{}));
    const auto minq = min_eigenstate_entanglement(spec);
    CHECK(minq.q_min == 0.0);
    CHECK(minq.index == 0);
}

TEST_CASE("Q_min agrees with an independent dense reimplementation")
{
    const auto ferro = testing::triangle(1, 1, 1);
    const auto spec = diagonalize(build_hamiltonian_fock(ferro, FieldParams::uniform_transverse(0.2)));
    const auto minq = min_eigenstate_entanglement(spec);

    double oracle_min = 2.0;
    int oracle_index = -1;
    for (int mu = 0; mu < spec.dimension(); ++mu) {
        const PureState psi = spec.states.col(mu).cast<std::complex<double>>();
        const double q = entanglement_via_full_density(psi, 3);
        if (q < oracle_min) {
            oracle_min = q;
            oracle_index = mu;
        }
    }
    CHECK(std::abs(minq.q_min - oracle_min) < 1e-10);
    CHECK(minq.index == oracle_index);
}

TEST_CASE("Q stays within [0, 1] across the full small-size sweep")
{
    const auto fields = FieldParams::uniform_transverse(0.2);
    for (int n = 3; n <= 5; ++n) {
        for (const auto& net : enumerate_networks(n)) {
            const auto spec = diagonalize(build_hamiltonian_fock(net.couplings, fields));
            PureState psi(spec.dimension());
            for (int mu = 0; mu < spec.dimension(); ++mu) {
                psi = spec.states.col(mu).cast<std::complex<double>>();
                const double q = global_entanglement(psi);
                CHECK(q >= 0.0);
                CHECK(q <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("Q_min shrinks with the transverse field")
{
    std::mt19937_64 rng(2718);
    for (int rep = 0; rep < 10; ++rep) {
        const auto m = testing::random_connected_network(rng, 4);
        double previous = 2.0;
        for (const double hx : {0.2, 0.1, 0.05}) {
            const auto spec = diagonalize(build_hamiltonian_fock(m, FieldParams::uniform_transverse(hx)));
            const double q = min_eigenstate_entanglement(spec).q_min;
            CHECK(q <= previous + 1e-8);
            previous = q;
        }
    }
}
