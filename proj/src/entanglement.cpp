#include "isingnet/entanglement.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace isingnet {
namespace {

int spin_count_of(const PureState& psi)
{
    const auto dim = static_cast<std::uint32_t>(psi.size());
    if (dim < 2 || !std::has_single_bit(dim))
        throw std::invalid_argument("state length must be a power of two >= 2");
    return std::countr_zero(dim);
}

void check_normalized(const PureState& psi)
{
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("state is not normalized");
}

}  // namespace

Eigen::Matrix2cd reduced_density(const PureState& psi, int spin)
{
    const int n = spin_count_of(psi);
    if (spin < 0 || spin >= n) throw std::invalid_argument("spin index out of range");
    check_normalized(psi);

    const Config dim = static_cast<Config>(psi.size());
    const Config bit = Config{1} << spin;
    double p0 = 0.0, p1 = 0.0;
    std::complex<double> coherence = 0.0;
    for (Config s = 0; s < dim; ++s) {
        if (s & bit) {
            p1 += std::norm(psi[s]);
        } else {
            p0 += std::norm(psi[s]);
            coherence += std::conj(psi[s]) * psi[s | bit];
        }
    }
    Eigen::Matrix2cd rho;
    rho << p0, coherence, std::conj(coherence), p1;
    return rho;
}

double purity(const Eigen::Matrix2cd& rho)
{
    double sum = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) sum += std::norm(rho(a, b));
    return sum;
}

double global_entanglement(const PureState& psi)
{
    const int n = spin_count_of(psi);
    double q = 0.0;
    for (int i = 0; i < n; ++i) q += 2.0 * (1.0 - purity(reduced_density(psi, i)));
    return q / n;
}

MinEntanglement min_eigenstate_entanglement(const SpectralDecomposition& spectrum)
{
    const int dim = spectrum.dimension();
    if (dim < 2) throw std::invalid_argument("decomposition has no eigenstates");
    MinEntanglement best{2.0, 0};
    PureState state(dim);
    for (int mu = 0; mu < dim; ++mu) {
        state = spectrum.states.col(mu).cast<std::complex<double>>();
        const double q = global_entanglement(state);
        if (q < best.q_min) best = {q, mu};
    }
    return best;
}

}  // namespace isingnet
