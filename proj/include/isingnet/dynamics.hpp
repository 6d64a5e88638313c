#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "isingnet/entanglement.hpp"
#include "isingnet/hamiltonian.hpp"

namespace isingnet {

// Quench parameters. tau/dt must be an integer sample count and the Nyquist
// frequency 1/(2 dt) must reach 1 to cover every observed peak.
struct DynamicsParams {
    double tau = 1000.0;
    double dt = 0.25;

    std::size_t sample_count() const;
    void validate() const;
};

struct InitialStates {
    Config closest = 0;   // argmax_s |<s|E_nu>|^2, ties -> lowest index
    Config furthest = 0;  // argmin_s |<s|E_nu>|^2, ties -> lowest index
};

InitialStates select_initial_states(const SpectralDecomposition& spectrum, int nu);

// Spectral propagation psi(t) = sum_mu exp(-i E_mu t) <E_mu|psi0> |E_mu>.
PureState evolve(const SpectralDecomposition& spectrum, const PureState& psi0, double t);

// <psi|Z_i|psi> = sum_s s_i |psi(s)|^2.
double magnetization(const PureState& psi, int spin);

// Generalized imbalance I(t_k) = (1/N) sum_i <Z_i>(0) <Z_i>(t_k) sampled at
// t_k = k dt for k = 0..M-1, starting from the Fock state `initial`.
struct ImbalanceTrace {
    int n_spins = 0;
    Config initial = 0;
    double dt = 0.0;
    std::array<double, kMaxSpins> initial_magnetizations{};
    std::vector<double> samples;
};

ImbalanceTrace imbalance_trace(const SpectralDecomposition& spectrum, Config initial,
                               int n_spins, const DynamicsParams& params);

// Rectangular-window DFT of the mean-subtracted imbalance on the grid
// f_k = k/tau, amplitudes normalized by 2/tau so a unit on-grid sinusoid
// peaks at 1. The peak is taken over k >= 1, ties broken by lowest frequency.
struct ImbalanceSpectrum {
    std::vector<double> frequencies;
    std::vector<double> amplitudes;
    double peak_amplitude = 0.0;
    double peak_frequency = 0.0;
};

ImbalanceSpectrum fourier_spectrum(const ImbalanceTrace& trace, const DynamicsParams& params);

struct SpectralPeak {
    double amplitude = 0.0;
    double frequency = 0.0;
};

struct DynamicsRecord {
    SpectralPeak closest;
    SpectralPeak furthest;
};

// Full chain for one network: eigenstates -> lowest-entanglement index ->
// closest/furthest Fock starts -> imbalance traces -> spectral peaks.
DynamicsRecord dynamics_record(const CouplingMatrix& j, const FieldParams& fields,
                               const DynamicsParams& params);

// Same, reusing an existing decomposition and eigenstate index.
DynamicsRecord dynamics_record(const SpectralDecomposition& spectrum, int nu,
                               int n_spins, const DynamicsParams& params);

}  // namespace isingnet
