#include <doctest.h>

#include <algorithm>
#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "isingnet/enumeration.hpp"
#include "isingnet/hamiltonian.hpp"
#include "test_helpers.hpp"

using namespace isingnet;

namespace {

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion,
// then roots by Durand-Kerner. Test-only oracle, independent of the
// eigensolver path.
std::vector<double> char_poly_roots(const Eigen::MatrixXd& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<double> coeff(n + 1, 0.0);  // p(x) = x^n + c[1] x^{n-1} + ... + c[n]
    coeff[0] = 1.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        m = a * m + coeff[k - 1] * Eigen::MatrixXd::Identity(n, n);
        coeff[k] = -(a * m).trace() / k;
    }
    std::vector<std::complex<double>> roots(n);
    for (int k = 0; k < n; ++k)
        roots[k] = std::pow(std::complex<double>(0.4, 0.9), k);  // standard spread start
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> p = coeff[0];
            for (int d = 1; d <= n; ++d) p = p * roots[k] + coeff[d];
            std::complex<double> denom = 1.0;
            for (int l = 0; l < n; ++l)
                if (l != k) denom *= roots[k] - roots[l];
            const auto delta = p / denom;
            roots[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-15) break;
    }
    std::vector<double> real(n);
    for (int k = 0; k < n; ++k) real[k] = roots[k].real();
    std::sort(real.begin(), real.end());
    return real;
}

}  // namespace

TEST_CASE("classical energy on signed triangles")
{
    using testing::triangle;
    const auto ferro = triangle(1, 1, 1);
    const auto anti = triangle(-1, -1, -1);
    CHECK(classical_energy(ferro, 0) == -3);  // all spins up
    CHECK(classical_energy(anti, 0) == 3);
    // U(-s) = U(s): complementing the index flips every spin
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        const auto m = testing::random_connected_network(rng, 5);
        for (Config s = 0; s < 32; ++s)
            CHECK(classical_energy(m, s) == classical_energy(m, s ^ 31u));
    }
}

TEST_CASE("local field controls energy-preserving flips")
{
    using testing::triangle;
    const auto ferro = triangle(1, 1, 1);
    const Config s_up_up_down = 0b100;  // spins (+,+,-)
    CHECK(local_field(ferro, s_up_up_down, 0) == 0);
    CHECK(classical_energy(ferro, s_up_up_down) ==
          classical_energy(ferro, flip_spin(s_up_up_down, 0)));

    const Config all_up = 0;
    for (int i = 0; i < 3; ++i) {
        CHECK(local_field(ferro, all_up, i) == 2);
        const long long delta =
            classical_energy(ferro, flip_spin(all_up, i)) - classical_energy(ferro, all_up);
        CHECK(delta == 2 * spin_sign(all_up, i) * local_field(ferro, all_up, i));
    }
    CHECK_THROWS_AS(local_field(ferro, 0, 3), std::invalid_argument);
}

TEST_CASE("parity: local field is congruent to the degree mod 2")
{
    // odd-degree spins can never flip for free
    for (int n = 3; n <= 4; ++n)
        for (const auto& net : enumerate_networks(n))
            for (Config s = 0; s < basis_dimension(n); ++s)
                for (int i = 0; i < n; ++i) {
                    int degree = 0;
                    for (int j = 0; j < n; ++j)
                        if (j != i && net.couplings(i, j) != 0) ++degree;
                    const int m = local_field(net.couplings, s, i);
                    CHECK(((m % 2) + 2) % 2 == degree % 2);
                }
}

TEST_CASE("pauli construction on tiny systems")
{
    CouplingMatrix edge;
    edge.n = 2;
    edge.set(0, 1, 1);
    const auto h0 = build_hamiltonian_pauli(edge, FieldParams{});
    CHECK(h0(0, 0) == -1.0);
    CHECK(h0(1, 1) == 1.0);
    CHECK(h0(2, 2) == 1.0);
    CHECK(h0(3, 3) == -1.0);
    CHECK(h0(0, 1) == 0.0);

    CouplingMatrix lone;
    lone.n = 1;
    const auto h1 = build_hamiltonian_pauli(lone, FieldParams::uniform_transverse(0.3));
    CHECK(h1(0, 0) == 0.0);
    CHECK(h1(1, 1) == 0.0);
    CHECK(h1(0, 1) == -0.3);
    CHECK(h1(1, 0) == -0.3);
}

TEST_CASE("fock construction: triangle diagonal and hopping pattern")
{
    const auto ferro = testing::triangle(1, 1, 1);
    const auto h = build_hamiltonian_fock(ferro, FieldParams::uniform_transverse(0.2));
    const double expected_diag[8] = {-3, 1, 1, 1, 1, 1, 1, -3};
    for (Config s = 0; s < 8; ++s) CHECK(h(s, s) == expected_diag[s]);
    for (Config a = 0; a < 8; ++a)
        for (Config b = 0; b < 8; ++b) {
            if (a == b) continue;
            const int distance = std::popcount(a ^ b);
            if (distance == 1) CHECK(h(a, b) == -0.2);
            else CHECK(h(a, b) == 0.0);
        }
    // zero transverse field leaves a diagonal matrix
    const auto hd = build_hamiltonian_fock(ferro, FieldParams{});
    CHECK(hd.diagonal().cwiseAbs().sum() > 0.0);
    CHECK((hd - Eigen::MatrixXd(hd.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("both constructions agree bit for bit")
{
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> field(0.0, 1.0);
    for (int n = 3; n <= 5; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto m = testing::random_connected_network(rng, n);
            auto fields = FieldParams::uniform_transverse(field(rng));
            if (rep % 2 == 0)
                for (int i = 0; i < n; ++i) fields.hz[i] = field(rng) - 0.5;
            const auto hp = build_hamiltonian_pauli(m, fields);
            const auto hf = build_hamiltonian_fock(m, fields);
            CHECK((hp - hf).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("trace vanishes at zero longitudinal field")
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto m = testing::random_connected_network(rng, 5);
        const auto h = build_hamiltonian_fock(m, FieldParams::uniform_transverse(0.37));
        CHECK(h.trace() == 0.0);
    }
}

TEST_CASE("diagonalization matches hand-checkable spectra")
{
    // zero transverse field: eigenvalues are the sorted classical energies
    const auto ferro = testing::triangle(1, 1, 1);
    const auto spec0 = diagonalize(build_hamiltonian_fock(ferro, FieldParams{}));
    std::vector<double> expected;
    for (Config s = 0; s < 8; ++s) expected.push_back(double(classical_energy(ferro, s)));
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 8; ++k) CHECK(spec0.energies[k] == doctest::Approx(expected[k]).epsilon(1e-14));

    // single spin in a transverse field: +-hx
    CouplingMatrix lone;
    lone.n = 1;
    const auto spec1 = diagonalize(build_hamiltonian_pauli(lone, FieldParams::uniform_transverse(0.2)));
    CHECK(spec1.energies[0] == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(spec1.energies[1] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("eigenvalues match the characteristic-polynomial oracle")
{
    CouplingMatrix edge;
    edge.n = 2;
    edge.set(0, 1, 1);
    const auto h = build_hamiltonian_fock(edge, FieldParams::uniform_transverse(0.2));
    const auto spec = diagonalize(h);
    const auto roots = char_poly_roots(h);
    REQUIRE(roots.size() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(spec.energies[k] - roots[k]) < 1e-12);
}

TEST_CASE("decomposition meets the residual and orthonormality bounds")
{
    std::mt19937_64 rng(314159);
    for (int n = 3; n <= 6; ++n) {
        const auto m = testing::random_connected_network(rng, n);
        const auto h = build_hamiltonian_fock(m, FieldParams::uniform_transverse(0.2));
        const auto spec = diagonalize(h);
        const double scale = h.cwiseAbs().maxCoeff();
        const int dim = spec.dimension();
        for (int mu = 0; mu < dim; ++mu) {
            const Eigen::VectorXd residual =
                h * spec.states.col(mu) - spec.energies[mu] * spec.states.col(mu);
            CHECK(residual.norm() <= 1e-10 * scale);
            CHECK(std::abs(spec.states.col(mu).norm() - 1.0) <= 1e-12);
        }
        const Eigen::MatrixXd gram =
            spec.states.transpose() * spec.states - Eigen::MatrixXd::Identity(dim, dim);
        CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(std::is_sorted(spec.energies.data(), spec.energies.data() + dim));
    }
}

TEST_CASE("spectrum is symmetric under hx -> -hx")
{
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        const auto m = testing::random_connected_network(rng, 4);
        const auto plus = diagonalize(build_hamiltonian_fock(m, FieldParams::uniform_transverse(0.2)));
        const auto minus = diagonalize(build_hamiltonian_fock(m, FieldParams::uniform_transverse(-0.2)));
        for (int k = 0; k < plus.dimension(); ++k)
            CHECK(std::abs(plus.energies[k] - minus.energies[k]) <= 1e-10);
    }
}

TEST_CASE("diagonalize rejects non-symmetric input")
{
    Eigen::MatrixXd bad(2, 2);
    bad << 0.0, 1.0, 2.0, 0.0;
    CHECK_THROWS_AS(diagonalize(bad), std::invalid_argument);
}
