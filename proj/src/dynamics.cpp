#include "isingnet/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace isingnet {

std::size_t DynamicsParams::sample_count() const
{
    return static_cast<std::size_t>(std::llround(tau / dt));
}

void DynamicsParams::validate() const
{
    if (!(tau > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("tau and dt must be positive");
    const double m = tau / dt;
    const auto rounded = std::llround(m);
    if (rounded < 2 || std::abs(m - static_cast<double>(rounded)) > 1e-9 * std::max(1.0, m))
        throw std::invalid_argument("tau/dt must be an integer sample count >= 2");
    if (1.0 / (2.0 * dt) < 1.0)
        throw std::invalid_argument("Nyquist frequency 1/(2 dt) must be at least 1");
}

InitialStates select_initial_states(const SpectralDecomposition& spectrum, int nu)
{
    const int dim = spectrum.dimension();
    if (nu < 0 || nu >= dim) throw std::invalid_argument("eigenstate index out of range");

    InitialStates out;
    double best_max = -1.0, best_min = 2.0;
    for (Config s = 0; s < static_cast<Config>(dim); ++s) {
        const double overlap = spectrum.states(s, nu) * spectrum.states(s, nu);
        if (overlap > best_max) {
            best_max = overlap;
            out.closest = s;
        }
        if (overlap < best_min) {
            best_min = overlap;
            out.furthest = s;
        }
    }
    return out;
}

PureState evolve(const SpectralDecomposition& spectrum, const PureState& psi0, double t)
{
    const int dim = spectrum.dimension();
    if (psi0.size() != dim) throw std::invalid_argument("state dimension mismatch");
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("initial state is not normalized");

    // Project onto the eigenbasis, attach phases, transform back. Done with
    // real matrix products since the eigenvectors are real.
    const Eigen::VectorXd cr = spectrum.states.transpose() * psi0.real();
    const Eigen::VectorXd ci = spectrum.states.transpose() * psi0.imag();
    Eigen::VectorXd ar(dim), ai(dim);
    for (int mu = 0; mu < dim; ++mu) {
        const double phase = -spectrum.energies[mu] * t;
        const double c = std::cos(phase), s = std::sin(phase);
        ar[mu] = cr[mu] * c - ci[mu] * s;
        ai[mu] = cr[mu] * s + ci[mu] * c;
    }
    PureState result(dim);
    result.real() = spectrum.states * ar;
    result.imag() = spectrum.states * ai;
    return result;
}

double magnetization(const PureState& psi, int spin)
{
    const auto dim = static_cast<Config>(psi.size());
    if (spin < 0 || (Config{1} << spin) >= dim)
        throw std::invalid_argument("spin index out of range");
    double m = 0.0;
    for (Config s = 0; s < dim; ++s) m += spin_sign(s, spin) * std::norm(psi[s]);
    return m;
}

ImbalanceTrace imbalance_trace(const SpectralDecomposition& spectrum, Config initial,
                               int n_spins, const DynamicsParams& params)
{
    params.validate();
    const int dim = spectrum.dimension();
    if (dim != static_cast<int>(basis_dimension(n_spins)))
        throw std::invalid_argument("decomposition dimension does not match spin count");
    if (initial >= static_cast<Config>(dim))
        throw std::invalid_argument("initial configuration out of range");

    ImbalanceTrace trace;
    trace.n_spins = n_spins;
    trace.initial = initial;
    trace.dt = params.dt;
    for (int i = 0; i < n_spins; ++i)
        trace.initial_magnetizations[i] = spin_sign(initial, i);

    // I(t) = sum_s w(s) |psi_s(t)|^2 with w(s) = (1/N) sum_i s_i(0) s_i.
    Eigen::VectorXd weight(dim);
    for (Config s = 0; s < static_cast<Config>(dim); ++s) {
        int acc = 0;
        for (int i = 0; i < n_spins; ++i) acc += spin_sign(initial, i) * spin_sign(s, i);
        weight[s] = static_cast<double>(acc) / n_spins;
    }

    const Eigen::VectorXd overlaps = spectrum.states.row(initial).transpose();
    const std::size_t samples = params.sample_count();
    trace.samples.resize(samples);

    constexpr std::size_t block = 128;
    Eigen::MatrixXd cosines(dim, block), sines(dim, block);
    Eigen::MatrixXd re(dim, block), im(dim, block);
    for (std::size_t k0 = 0; k0 < samples; k0 += block) {
        const std::size_t nb = std::min(block, samples - k0);
        for (std::size_t b = 0; b < nb; ++b) {
            const double t = static_cast<double>(k0 + b) * params.dt;
            for (int mu = 0; mu < dim; ++mu) {
                const double phase = spectrum.energies[mu] * t;
                cosines(mu, b) = overlaps[mu] * std::cos(phase);
                sines(mu, b) = overlaps[mu] * std::sin(phase);
            }
        }
        re.leftCols(nb).noalias() = spectrum.states * cosines.leftCols(nb);
        im.leftCols(nb).noalias() = spectrum.states * sines.leftCols(nb);
        for (std::size_t b = 0; b < nb; ++b)
            trace.samples[k0 + b] =
                weight.dot(re.col(b).cwiseAbs2() + im.col(b).cwiseAbs2());
    }
    return trace;
}

ImbalanceSpectrum fourier_spectrum(const ImbalanceTrace& trace, const DynamicsParams& params)
{
    params.validate();
    const std::size_t m = trace.samples.size();
    if (m < 2) throw std::invalid_argument("trace needs at least two samples");
    if (m != params.sample_count())
        throw std::invalid_argument("trace length does not match parameters");

    double mean = 0.0;
    for (double v : trace.samples) mean += v;
    mean /= static_cast<double>(m);

    std::vector<double> centered(m);
    for (std::size_t k = 0; k < m; ++k) centered[k] = trace.samples[k] - mean;

    // Exact root table avoids phase drift over long traces.
    std::vector<std::complex<double>> roots(m);
    for (std::size_t r = 0; r < m; ++r)
        roots[r] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) /
                                       static_cast<double>(m));

    const double duration = static_cast<double>(m) * params.dt;
    const std::size_t bins = m / 2;
    ImbalanceSpectrum spectrum;
    spectrum.frequencies.resize(bins + 1);
    spectrum.amplitudes.resize(bins + 1);
    for (std::size_t k = 0; k <= bins; ++k) {
        std::complex<double> acc = 0.0;
        std::size_t idx = 0;
        for (std::size_t s = 0; s < m; ++s) {
            acc += centered[s] * roots[idx];
            idx += k;
            if (idx >= m) idx -= m;
        }
        spectrum.frequencies[k] = static_cast<double>(k) / duration;
        spectrum.amplitudes[k] = 2.0 / static_cast<double>(m) * std::abs(acc);
    }

    // Peak over strictly positive frequencies; ties keep the lowest one.
    spectrum.peak_amplitude = spectrum.amplitudes[1];
    spectrum.peak_frequency = spectrum.frequencies[1];
    for (std::size_t k = 2; k <= bins; ++k)
        if (spectrum.amplitudes[k] > spectrum.peak_amplitude) {
            spectrum.peak_amplitude = spectrum.amplitudes[k];
            spectrum.peak_frequency = spectrum.frequencies[k];
        }
    return spectrum;
}

DynamicsRecord dynamics_record(const SpectralDecomposition& spectrum, int nu, int n_spins,
                               const DynamicsParams& params)
{
    const auto starts = select_initial_states(spectrum, nu);
    DynamicsRecord record;
    {
        const auto trace = imbalance_trace(spectrum, starts.closest, n_spins, params);
        const auto spec = fourier_spectrum(trace, params);
        record.closest = {spec.peak_amplitude, spec.peak_frequency};
    }
    {
        const auto trace = imbalance_trace(spectrum, starts.furthest, n_spins, params);
        const auto spec = fourier_spectrum(trace, params);
        record.furthest = {spec.peak_amplitude, spec.peak_frequency};
    }
    return record;
}

DynamicsRecord dynamics_record(const CouplingMatrix& j, const FieldParams& fields,
                               const DynamicsParams& params)
{
    const auto spectrum = diagonalize(build_hamiltonian_fock(j, fields));
    const auto minq = min_eigenstate_entanglement(spectrum);
    return dynamics_record(spectrum, minq.index, j.n, params);
}

}  // namespace isingnet
